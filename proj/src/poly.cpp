#include "pha/poly.hpp"

#include <sstream>

namespace pha {

Poly Poly::constant(size_t nvars, Scalar c) {
    Poly p(nvars);
    p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
    return p;
}

Poly Poly::variable(size_t nvars, size_t i, FieldPtr field) {
    if (i >= nvars) throw pha_error("variable index out of range");
    Poly p(nvars);
    Monomial m{std::vector<int>(nvars, 0)};
    m.e[i] = 1;
    p.add_term(m, Scalar::one(std::move(field)));
    return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.e.size() != nvars_) throw pha_error("monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Scalar();
    return it->second;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_ && !is_zero() && !o.is_zero())
        throw pha_error("variable-set mismatch");
    Poly r = is_zero() ? Poly(o.nvars_) : Poly(nvars_);
    r.terms_ = terms_;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw pha_error("variable-set mismatch");
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (size_t i = 0; i < nvars_; ++i) m.e[i] += m2.e[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, FieldPtr field) const {
    if (images.size() != nvars_) throw pha_error("substitution arity mismatch");
    size_t target = images.empty() ? 0 : images[0].nvars();
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < m.e[i]; ++k) term = term * images[i];
        r = r + term;
    }
    return r;
}

Poly Poly::evaluate_params(const std::map<std::string, CycRat>& values) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.evaluate(values));
    return r;
}

Poly Poly::derivative(size_t var) const {
    if (var >= nvars_) throw pha_error("variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        int k = d.e[var]--;
        Scalar mult = c;
        if (!c.field()) continue;
        mult = c * Scalar(c.field(), Rational(k));
        r.add_term(d, mult);
    }
    return r;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

long Poly::weighted_degree(const WeightVector& w) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(w));
    return d;
}

bool Poly::is_homogeneous(const WeightVector& w, long d) const {
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(w) != d) return false;
    return true;
}

std::map<long, Poly> Poly::graded_parts(const WeightVector& w) const {
    std::map<long, Poly> parts;
    for (const auto& [m, c] : terms_) {
        long d = m.weighted_degree(w);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Poly(nvars_)).first;
        it->second.add_term(m, c);
    }
    return parts;
}

Poly Poly::homogenize(const WeightVector& w, long d) const {
    Poly r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        long wd = m.weighted_degree(w);
        if (wd > d) throw pha_error("degree overflow in homogenize");
        Monomial ext = m;
        ext.e.push_back((int)(d - wd));
        r.add_term(ext, c);
    }
    return r;
}

Poly Poly::set_last_var(const Scalar& value) const {
    if (nvars_ == 0) throw pha_error("no variable to specialize");
    Poly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial cut = m;
        int k = cut.e.back();
        cut.e.pop_back();
        Scalar coeff = c;
        for (int i = 0; i < k; ++i) coeff = coeff * value;
        r.add_term(cut, coeff);
    }
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        bool neg = !multi && cs.size() > 1 && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (multi) body = "(" + cs + ")";
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = m.degree() > 0;
        bool wrote = false;
        if (!has_vars || body != "1") {
            os << body;
            wrote = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (wrote) os << "*";
            wrote = true;
            os << vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;
    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
};

struct PolyParser {
    PolyLexer lx;
    const std::vector<std::string>& vars;
    const std::vector<std::string>& params;
    FieldPtr field;

    Poly atom() {
        lx.skip();
        if (lx.eat('(')) {
            Poly p = sum();
            if (!lx.eat(')')) throw pha_error("expected ')'");
            return p;
        }
        char c = lx.peek();
        if (isdigit((unsigned char)c)) {
            size_t start = lx.pos;
            while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
            mpz_class num(lx.s.substr(start, lx.pos - start));
            mpz_class den(1);
            if (lx.eat('/')) {
                lx.skip();
                size_t ds = lx.pos;
                while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
                if (lx.pos == ds) throw pha_error("malformed rational");
                den = mpz_class(lx.s.substr(ds, lx.pos - ds));
            }
            Rational r(num, den);
            r.canonicalize();
            return Poly::constant(vars.size(), Scalar(field, r));
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t start = lx.pos;
            while (lx.pos < lx.s.size() &&
                   (isalnum((unsigned char)lx.s[lx.pos]) || lx.s[lx.pos] == '_'))
                ++lx.pos;
            std::string name = lx.s.substr(start, lx.pos - start);
            if (name == "z") return Poly::constant(vars.size(), Scalar(CycRat::zeta(field)));
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return Poly::variable(vars.size(), i, field);
            for (const auto& p : params)
                if (p == name)
                    return Poly::constant(vars.size(), Scalar::parameter(field, name));
            throw pha_error("unknown symbol: " + name);
        }
        throw pha_error("malformed polynomial near position " + std::to_string(lx.pos));
    }

    Poly power() {
        Poly base = atom();
        if (lx.eat('^')) {
            lx.skip();
            size_t start = lx.pos;
            while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
            if (lx.pos == start) throw pha_error("malformed exponent");
            long e = std::stol(lx.s.substr(start, lx.pos - start));
            Poly acc = Poly::constant(vars.size(), Scalar::one(field));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly product() {
        Poly p = power();
        while (lx.peek() == '*') {
            ++lx.pos;
            p = p * power();
        }
        return p;
    }

    Poly sum() {
        bool neg = lx.eat('-');
        Poly p = product();
        if (neg) p = -p;
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.pos;
                p = p + product();
            } else if (c == '-') {
                ++lx.pos;
                p = p - product();
            } else {
                break;
            }
        }
        return p;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const std::vector<std::string>& params, FieldPtr field) {
    PolyParser p{PolyLexer{text}, vars, params, std::move(field)};
    Poly r = p.sum();
    p.lx.skip();
    if (p.lx.pos != text.size()) throw pha_error("trailing input in polynomial: " + text);
    return r;
}

std::vector<Monomial> monomials_of_degree(size_t nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur{std::vector<int>(nvars, 0)};
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i + 1 == nvars) {
            cur.e[i] = rem;
            out.push_back(cur);
            cur.e[i] = 0;
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            cur.e[i] = k;
            rec(i + 1, rem - k);
        }
        cur.e[i] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{});
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return DegLex{}(a, b);
    });
    return out;
}

} // namespace pha
