#include "cpgenus/poly.hpp"

#include <algorithm>
#include <cctype>

namespace cpgenus {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(const VarSet& vs, const Rational& c) {
    Poly p(vs);
    if (!c.is_zero()) p.terms_.emplace(Exponents(vs.size(), 0), c);
    return p;
}

Poly Poly::generator(const VarSet& vs, std::string_view name) {
    auto idx = vs.index_of(name);
    if (!idx) throw usage_error("generator '" + std::string(name) + "' not in " + vs.str());
    return generator(vs, *idx);
}

Poly Poly::generator(const VarSet& vs, std::size_t index) {
    if (index >= vs.size()) throw usage_error("generator index out of range");
    Poly p(vs);
    Exponents e(vs.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::from_terms(const VarSet& vs, std::vector<std::pair<Exponents, Rational>> terms) {
    Poly p(vs);
    for (auto& [e, c] : terms) {
        if (e.size() != vs.size()) throw usage_error("exponent vector arity mismatch");
        p.add_term(e, c);
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second == Rational(1);
}

Rational Poly::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw usage_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Rational& Poly::coeff(const Exponents& e) const {
    static const Rational zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_vars(const Poly& a, const Poly& b, const char* op) {
    if (a.vars_ != b.vars_)
        throw usage_error(std::string("VarSet mismatch in ") + op + ": " + a.vars_.str() +
                          " vs " + b.vars_.str());
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::require_same_vars(a, b, "add");
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::require_same_vars(a, b, "sub");
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_same_vars(a, b, "mul");
    Poly r(a.vars_);
    const std::size_t n = a.vars_.size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(vars_, Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- printing

namespace {

// Monomial body without coefficient: "f1^2*f2"; empty for the constant term.
std::string monomial_str(const VarSet& vs, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vs.name(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_str(vars_, e);
        if (mono.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const VarSet& vs;
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw usage_error("parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty()) fail("expected integer");
        return digits;
    }

    Rational read_rational() {
        Integer n(read_integer(), 10);
        if (eat('/')) {
            Integer d(read_integer(), 10);
            return Rational(n, d);
        }
        return Rational(n);
    }

    std::string read_name() {
        skip_ws();
        std::string name;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            name += s[pos++];
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
        }
        if (name.empty()) fail("expected generator name");
        return name;
    }

    Poly parse_primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(vs, read_rational());
        return Poly::generator(vs, read_name());
    }

    Poly parse_power() {
        Poly base = parse_primary();
        if (eat('^')) {
            unsigned long e = std::stoul(read_integer());
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly parse_term() {
        bool neg = false;
        for (;;) {
            if (eat('-')) { neg = !neg; continue; }
            if (eat('+')) continue;
            break;
        }
        Poly p = parse_power();
        while (eat('*')) p = p * parse_power();
        return neg ? -p : p;
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') { eat('+'); acc = acc + parse_term(); }
            else if (c == '-') { eat('-'); acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

} // namespace

Poly Poly::parse(const VarSet& vs, std::string_view text) {
    Parser parser{vs, text};
    return parser.run();
}

// ------------------------------------------------------- composition & eval

Poly substitute(const Poly& p, const std::vector<std::pair<std::string, Poly>>& bindings,
                const VarSet& target) {
    for (const auto& [name, value] : bindings)
        if (value.vars() != target)
            throw usage_error("binding for '" + name + "' is not over the target VarSet");

    const std::size_t n = p.vars().size();
    // Resolve each generator of p that occurs to a Poly over the target.
    std::vector<Poly> images(n);
    std::vector<bool> used(n, false);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) used[i] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) continue;
        const std::string& name = p.vars().name(i);
        const Poly* bound = nullptr;
        for (const auto& [bname, value] : bindings)
            if (bname == name) { bound = &value; break; }
        if (bound) {
            images[i] = *bound;
        } else if (target.index_of(name)) {
            images[i] = Poly::generator(target, name);
        } else {
            throw usage_error("generator '" + name + "' neither bound nor present in target " +
                              target.str());
        }
    }

    // Power cache per generator avoids recomputing images[i]^k across terms.
    std::vector<std::vector<Poly>> powers(n);
    auto power_of = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Poly out(target);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) term = term * power_of(i, e[i]);
        out += term;
    }
    return out;
}

Poly substitute(const Poly& p, const std::vector<std::pair<std::string, Poly>>& bindings) {
    if (bindings.empty()) throw usage_error("substitute without target VarSet needs a binding");
    return substitute(p, bindings, bindings.front().second.vars());
}

Rational eval(const Poly& p, const std::vector<std::pair<std::string, Rational>>& point) {
    const std::size_t n = p.vars().size();
    std::vector<const Rational*> values(n, nullptr);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [name, v] : point)
            if (name == p.vars().name(i)) values[i] = &v;

    Rational acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (!values[i])
                throw usage_error("unbound generator '" + p.vars().name(i) + "' in eval");
            Rational pw(1);
            Rational base = *values[i];
            for (unsigned k = e[i]; k;) {       // square-and-multiply
                if (k & 1u) pw *= base;
                base *= base;
                k >>= 1u;
            }
            term *= pw;
        }
        acc += term;
    }
    return acc;
}

Poly divide_exact(const Poly& p, const Poly& d) {
    if (p.vars() != d.vars())
        throw usage_error("VarSet mismatch in divide_exact");
    if (d.is_zero()) throw usage_error("divide_exact by zero polynomial");

    const std::size_t n = p.vars().size();
    const auto& lead = *d.terms().begin();   // grlex-leading term of the divisor

    Poly rem = p;
    Poly quot(p.vars());
    Exponents qe(n);
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().begin();
        for (std::size_t i = 0; i < n; ++i) {
            if (rl.first[i] < lead.first[i])
                throw divisibility_error("not divisible: leading term " +
                                         monomial_str(p.vars(), rl.first) +
                                         " not a multiple of " +
                                         monomial_str(p.vars(), lead.first));
            qe[i] = rl.first[i] - lead.first[i];
        }
        Poly t = Poly::from_terms(p.vars(), {{qe, rl.second / lead.second}});
        quot += t;
        rem -= t * d;
    }
    return quot;
}

Integer denominator_lcm(const Poly& p) {
    Integer l = 1;
    for (const auto& [e, c] : p.terms()) l = int_lcm(l, c.den());
    return l;
}

} // namespace cpgenus
