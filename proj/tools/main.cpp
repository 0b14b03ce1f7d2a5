// cpgenus: construct, verify and classify CP(2)-multiplicative Hirzebruch
// genera with exact arithmetic. Exit codes: 0 success/verified, 1 verification
// failed (a mathematically meaningful nonzero residual), 2 usage error,
// 3 internal/truncation error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cpgenus/jsonio.hpp"

using namespace cpgenus;

namespace {

struct Options {
    std::string format = "text";
    bool timing = false;
    int order = 0;
    int n = 0;
    std::string family;
    std::optional<std::string> alpha, beta, a, b;
    std::optional<std::string> f1, f2, f3;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Replaces bound generators by rational constants, keeping the rest symbolic.
LaurentSeries specialize(const LaurentSeries& s,
                         const std::vector<std::pair<std::string, Rational>>& binds) {
    if (binds.empty()) return s;
    std::vector<std::string> keep;
    for (const auto& name : s.vars().names()) {
        bool bound = false;
        for (const auto& [bname, value] : binds) bound = bound || bname == name;
        if (!bound) keep.push_back(name);
    }
    const VarSet target(keep);
    std::vector<std::pair<std::string, Poly>> pb;
    for (const auto& [name, value] : binds)
        pb.push_back({name, Poly::constant(target, value)});
    std::map<int, Poly> cs;
    for (const auto& [k, c] : s.coeffs()) cs.emplace(k, substitute(c, pb, target));
    return LaurentSeries::from_coeffs(target, std::move(cs), s.trunc());
}

int run_family(const std::string& name, const Options& o) {
    GenusSeries g = name == "todd" ? todd_series(o.order) : elliptic_series(o.order);
    std::vector<std::pair<std::string, Rational>> binds;
    if (name == "todd") {
        if (o.alpha) binds.push_back({"alpha", Rational::parse(*o.alpha)});
        if (o.beta) binds.push_back({"beta", Rational::parse(*o.beta)});
    } else {
        if (o.a) binds.push_back({"a", Rational::parse(*o.a)});
        if (o.b) binds.push_back({"b", Rational::parse(*o.b)});
    }
    const LaurentSeries f = specialize(g.f(), binds);
    const GenusSeries gs(f);
    if (json_mode(o)) {
        Json j{{"command", name}, {"order", o.order}, {"vars", f.vars().names()},
               {"series", series_to_json(f)}};
        Json cs = Json::object();
        for (int k = 1; k <= 3; ++k) cs["f" + std::to_string(k)] = gs.fk(k).str();
        j["coefficients"] = std::move(cs);
        emit(j);
    } else {
        std::cout << "f = " << f.str() << "\n";
        for (int k = 1; k <= 3; ++k)
            std::cout << "f" << k << " = " << gs.fk(k).str() << "\n";
    }
    return 0;
}

int run_generic(const Options& o) {
    const std::vector<Poly> solved = solve_generic_coefficients(o.order);
    if (json_mode(o)) {
        Json ps = Json::object();
        for (std::size_t i = 0; i < solved.size(); ++i)
            ps["f" + std::to_string(i + 4)] = solved[i].str();
        emit(Json{{"command", "generic"}, {"order", o.order}, {"polynomials", std::move(ps)}});
    } else {
        for (std::size_t i = 0; i < solved.size(); ++i)
            std::cout << "f" << i + 4 << " = " << solved[i].str() << "\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    const VerifyReport r = verify_family(o.family, o.order);
    if (json_mode(o))
        emit(report_to_json(r, o.timing));
    else
        std::cout << report_text(r, o.timing);
    return r.verified ? 0 : 1;
}

int run_classify(const Options& o) {
    const Classification c = classify(Rational::parse(o.f1.value()),
                                      Rational::parse(o.f2.value()),
                                      Rational::parse(o.f3.value()));
    const bool trivial = c.tag == FamilyTag::Degenerate && c.todd_params->first.is_zero() &&
                         c.todd_params->second.is_zero();
    if (json_mode(o)) {
        Json j = classification_to_json(c);
        if (trivial) j["f"] = "x";
        emit(j);
        return 0;
    }
    std::cout << "C = " << c.c_value.str() << "\n";
    std::cout << "K = " << c.k_value.str() << "\n";
    std::cout << "classification: " << family_tag_name(c.tag) << (trivial ? " (f = x)" : "")
              << "\n";
    if (c.todd_params)
        std::cout << "todd parameters: alpha+beta = " << c.todd_params->first.str()
                  << ", alpha*beta = " << c.todd_params->second.str() << "\n";
    if (c.elliptic_params)
        std::cout << "elliptic parameters: a = " << c.elliptic_params->first.str()
                  << ", b = " << c.elliptic_params->second.str() << "\n";
    return 0;
}

int run_genus(const Options& o) {
    GenusSeries g = [&] {
        const int order = std::max(o.n + 1, 3);
        if (o.family == "todd") return todd_series(order);
        if (o.family == "elliptic") return elliptic_series(order);
        if (o.family == "generic") return generic_series(std::max(o.n + 1, 2));
        throw usage_error("unknown family '" + o.family + "'");
    }();
    const Poly value = cp_genus(g, o.n);
    if (json_mode(o))
        emit(Json{{"command", "genus"}, {"family", o.family}, {"n", o.n},
                  {"value", value.str()}});
    else
        std::cout << "L[CP(" << o.n << ")] = " << value.str() << "\n";
    return 0;
}

int run_obstruction(const Options& o) {
    const Obstruction ob = obstruction_identity();
    if (json_mode(o)) {
        emit(Json{{"command", "obstruction"},
                  {"factor", ob.factor.str()},
                  {"C", ob.c_poly.str()},
                  {"K", ob.k_poly.str()},
                  {"difference", ob.difference.str()},
                  {"identity", "f8_diff = factor * C * K^2"}});
    } else {
        std::cout << "difference of the two f8 determinations = c * C * K^2\n";
        std::cout << "c = " << ob.factor.str() << "\n";
        std::cout << "C = " << ob.c_poly.str() << "\n";
        std::cout << "K = " << ob.k_poly.str() << "\n";
        std::cout << "difference = " << ob.difference.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and classification of CP(2)-multiplicative genera"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* todd = app.add_subcommand("todd", "construct the two-parameter todd family");
    todd->add_option("--order", o.order, "series truncation order")
        ->required()->check(CLI::Range(3, 64));
    todd->add_option("--alpha", o.alpha, "bind alpha to a rational p/q");
    todd->add_option("--beta", o.beta, "bind beta to a rational p/q");
    add_format(todd);

    auto* ell = app.add_subcommand("elliptic", "construct the elliptic family");
    ell->add_option("--order", o.order, "series truncation order")
        ->required()->check(CLI::Range(3, 64));
    ell->add_option("--a", o.a, "bind a to a rational p/q");
    ell->add_option("--b", o.b, "bind b to a rational p/q");
    add_format(ell);

    auto* gen = app.add_subcommand("generic", "solve the generic coefficients f4..fN");
    gen->add_option("--order", o.order, "largest coefficient index")
        ->required()->check(CLI::Range(4, 16));
    add_format(gen);

    auto* ver = app.add_subcommand("verify", "check a family against the functional equation");
    ver->add_option("family", o.family, "todd or elliptic")
        ->required()->check(CLI::IsMember({"todd", "elliptic"}));
    ver->add_option("--order", o.order, "total order of the residual check")
        ->required()->check(CLI::Range(4, 16));
    ver->add_flag("--timing", o.timing, "include elapsed time in the report");
    add_format(ver);

    auto* cls = app.add_subcommand("classify", "classify a genus from f1, f2, f3");
    cls->add_option("--f1", o.f1)->required();
    cls->add_option("--f2", o.f2)->required();
    cls->add_option("--f3", o.f3)->required();
    add_format(cls);

    auto* gns = app.add_subcommand("genus", "evaluate L[CP(n)] for a family");
    gns->add_option("--family", o.family, "todd, elliptic or generic")
        ->required()->check(CLI::IsMember({"todd", "elliptic", "generic"}));
    gns->add_option("--n", o.n, "projective space dimension")
        ->required()->check(CLI::Range(1, 16));
    add_format(gns);

    auto* obs = app.add_subcommand("obstruction", "derive the C*K^2 factorization");
    add_format(obs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (todd->parsed()) return run_family("todd", o);
        if (ell->parsed()) return run_family("elliptic", o);
        if (gen->parsed()) return run_generic(o);
        if (ver->parsed()) return run_verify(o);
        if (cls->parsed()) return run_classify(o);
        if (gns->parsed()) return run_genus(o);
        if (obs->parsed()) return run_obstruction(o);
        std::cerr << "no command\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const divisibility_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const truncation_error& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
