#include "pha/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace pha {

namespace {

// Exact division of integer polynomials, used to peel x^n - 1 down to Phi_n.
std::vector<mpz_class> exact_div(const std::vector<mpz_class>& num,
                                 const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (long d = (long)rem.size() - 1; d >= (long)den.size() - 1; --d) {
        if (rem[d] == 0) continue;
        mpz_class q = rem[d] / den.back();
        long shift = d - ((long)den.size() - 1);
        quot[shift] = q;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw pha_error("cyclotomic division not exact");
    return quot;
}

std::vector<mpz_class> cyclotomic(unsigned n, std::map<unsigned, std::vector<mpz_class>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_div(num, cyclotomic(d, memo));
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    memo[n] = num;
    return num;
}

} // namespace

FieldPtr make_field(unsigned n) {
    if (n == 0) throw pha_error("cyclotomic order must be positive");
    std::map<unsigned, std::vector<mpz_class>> memo;
    auto poly = cyclotomic(n, memo);
    auto f = std::make_shared<FieldDescriptor>();
    f->n = n;
    f->min_poly = poly;
    f->phi_n = (unsigned)poly.size() - 1;
    return f;
}

// ---------------------------------------------------------------- CycRat

CycRat::CycRat(FieldPtr field, Rational r) : field_(std::move(field)) {
    c_.assign(field_->phi_n, Rational(0));
    c_[0] = std::move(r);
    c_[0].canonicalize();
}

CycRat::CycRat(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    // reduce modulo Phi_n
    const auto& mp = field_->min_poly;
    unsigned deg = field_->phi_n;
    while (c_.size() > deg) {
        Rational lead = c_.back();
        size_t top = c_.size() - 1;
        c_.pop_back();
        if (lead == 0) continue;
        for (unsigned i = 0; i < deg; ++i) c_[top - deg + i] -= lead * mp[i];
    }
    c_.resize(deg, Rational(0));
    for (auto& x : c_) x.canonicalize();
}

CycRat CycRat::zeta(FieldPtr field) {
    std::vector<Rational> c(std::max(2u, field->phi_n + 1), Rational(0));
    c[1] = 1;
    return CycRat(std::move(field), std::move(c));
}

void CycRat::check_same(const CycRat& o) const {
    if (!field_ || !o.field_ || field_->n != o.field_->n)
        throw pha_error("mixed cyclotomic fields");
}

bool CycRat::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycRat::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycRat::rational_part() const {
    if (!is_rational()) throw pha_error("scalar is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

CycRat CycRat::operator+(const CycRat& o) const {
    check_same(o);
    std::vector<Rational> r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return CycRat(field_, std::move(r));
}

CycRat CycRat::operator-(const CycRat& o) const {
    check_same(o);
    std::vector<Rational> r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return CycRat(field_, std::move(r));
}

CycRat CycRat::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return CycRat(field_, std::move(r));
}

CycRat CycRat::operator*(const CycRat& o) const {
    check_same(o);
    std::vector<Rational> r(2 * field_->phi_n, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycRat(field_, std::move(r));
}

namespace {

using QPoly = std::vector<Rational>; // dense, may have zero leading coeffs

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_sub_scaled(const QPoly& a, const QPoly& b, const Rational& s, size_t shift) {
    QPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
    trim(r);
    return r;
}

} // namespace

CycRat CycRat::inverse() const {
    if (is_zero()) throw pha_error("inversion of zero");
    // extended Euclid in Q[x]: s*a + t*Phi = gcd (a nonzero, Phi irreducible).
    QPoly r0;
    for (const auto& z : field_->min_poly) r0.push_back(Rational(z));
    QPoly r1 = c_;
    trim(r1);
    QPoly s0{}, s1{Rational(1)}; // coefficients of a
    while (true) {
        // r0 = q*r1 + r2
        QPoly rem = r0, q_s = s0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational q = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            rem = qp_sub_scaled(rem, r1, q, shift);
            QPoly qshift(shift + 1, Rational(0));
            qshift[shift] = q;
            // q_s -= q * x^shift * s1
            QPoly prod(s1.size() + shift, Rational(0));
            for (size_t i = 0; i < s1.size(); ++i) prod[i + shift] = q * s1[i];
            if (q_s.size() < prod.size()) q_s.resize(prod.size(), Rational(0));
            for (size_t i = 0; i < prod.size(); ++i) q_s[i] -= prod[i];
            trim(q_s);
        }
        if (rem.empty()) break;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = q_s;
    }
    // r1 is a nonzero constant gcd; inverse = s1 / r1
    if (r1.size() != 1) throw pha_error("minimal polynomial not irreducible");
    Rational g = r1[0];
    std::vector<Rational> inv(field_->phi_n, Rational(0));
    for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / g;
    if (s1.size() > field_->phi_n) {
        std::vector<Rational> full(s1.size(), Rational(0));
        for (size_t i = 0; i < s1.size(); ++i) full[i] = s1[i] / g;
        return CycRat(field_, std::move(full));
    }
    return CycRat(field_, std::move(inv));
}

CycRat CycRat::pow(long e) const {
    CycRat base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    CycRat acc = CycRat::one(field_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CycRat::operator==(const CycRat& o) const {
    check_same(o);
    return c_ == o.c_;
}

bool CycRat::operator<(const CycRat& o) const {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string CycRat::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << rational_to_string(v);
        } else {
            if (v != 1) os << rational_to_string(v) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(CycRat c) : field_(c.field()) {
    if (!c.is_zero()) terms_.emplace(ParamMono{}, std::move(c));
}

Scalar::Scalar(FieldPtr field, Rational r) : Scalar(CycRat(std::move(field), std::move(r))) {}

Scalar Scalar::parameter(FieldPtr field, const std::string& name) {
    Scalar s;
    s.field_ = field;
    s.terms_.emplace(ParamMono{{name, 1}}, CycRat::one(field));
    return s;
}

bool Scalar::is_numeric() const {
    for (const auto& [m, c] : terms_)
        if (!m.empty()) return false;
    return true;
}

CycRat Scalar::numeric() const {
    if (!is_numeric()) throw pha_error("scalar has free parameters");
    if (terms_.empty()) return CycRat::zero(field_);
    return terms_.begin()->second;
}

void Scalar::add_term(const ParamMono& m, const CycRat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    if (!r.field_) r.field_ = o.field_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    r.field_ = field_ ? field_ : o.field_;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            ParamMono m = m1;
            for (const auto& [name, e] : m2) m[name] += e;
            r.add_term(m, c1 * c2);
        }
    return r;
}

Scalar Scalar::inverse() const { return Scalar(numeric().inverse()); }

Scalar Scalar::evaluate(const std::map<std::string, CycRat>& values) const {
    Scalar r;
    r.field_ = field_;
    for (const auto& [m, c] : terms_) {
        CycRat v = c;
        ParamMono rest;
        for (const auto& [name, e] : m) {
            auto it = values.find(name);
            if (it == values.end())
                rest[name] = e;
            else
                v = v * it->second.pow(e);
        }
        r.add_term(rest, v);
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const { return terms_ == o.terms_; }

bool Scalar::operator<(const Scalar& o) const {
    auto it1 = terms_.begin(), it2 = o.terms_.begin();
    for (; it1 != terms_.end() && it2 != o.terms_.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return it1->first < it2->first;
        if (!(it1->second == it2->second)) {
            const auto& a = it1->second.coeffs();
            const auto& b = it2->second.coeffs();
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
        }
    }
    return it1 == terms_.end() && it2 != o.terms_.end();
}

namespace {

std::string param_mono_to_string(const ParamMono& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : m) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

} // namespace

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = false;
        if (!first) {
            // pull a leading minus out of purely negative coefficients
            if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                cs.find(" - ") == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool composite = cs.find(' ') != std::string::npos;
        if (m.empty()) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1") {
                os << param_mono_to_string(m);
            } else {
                os << (composite ? "(" + cs + ")" : cs) << "*" << param_mono_to_string(m);
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct ScalarLexer {
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

CycRat parse_sum(ScalarLexer& lx, const FieldPtr& field);

CycRat parse_atom(ScalarLexer& lx, const FieldPtr& field) {
    lx.skip();
    if (lx.eat('(')) {
        CycRat v = parse_sum(lx, field);
        if (!lx.eat(')')) throw pha_error("expected ')' in scalar");
        return v;
    }
    if (lx.peek() == 'z') {
        ++lx.pos;
        long e = 1;
        if (lx.eat('^')) {
            lx.skip();
            size_t start = lx.pos;
            if (lx.peek() == '-') ++lx.pos;
            while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
            e = std::stol(lx.s.substr(start, lx.pos - start));
        }
        return CycRat::zeta(field).pow(e);
    }
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && (isdigit((unsigned char)lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start) throw pha_error("malformed scalar literal: " + lx.s);
    mpz_class num(lx.s.substr(start, lx.pos - start));
    mpz_class den(1);
    if (lx.eat('/')) {
        lx.skip();
        size_t ds = lx.pos;
        while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
        if (lx.pos == ds) throw pha_error("malformed rational: " + lx.s);
        den = mpz_class(lx.s.substr(ds, lx.pos - ds));
    }
    Rational r(num, den);
    r.canonicalize();
    return CycRat(field, r);
}

CycRat parse_product(ScalarLexer& lx, const FieldPtr& field) {
    CycRat v = parse_atom(lx, field);
    while (lx.peek() == '*') {
        ++lx.pos;
        v = v * parse_atom(lx, field);
    }
    return v;
}

CycRat parse_sum(ScalarLexer& lx, const FieldPtr& field) {
    bool neg = false;
    if (lx.eat('-')) neg = true;
    CycRat v = parse_product(lx, field);
    if (neg) v = -v;
    while (true) {
        char c = lx.peek();
        if (c == '+') {
            ++lx.pos;
            v = v + parse_product(lx, field);
        } else if (c == '-') {
            ++lx.pos;
            v = v - parse_product(lx, field);
        } else {
            break;
        }
    }
    return v;
}

} // namespace

CycRat parse_cycrat(FieldPtr field, const std::string& text) {
    ScalarLexer lx{text};
    CycRat v = parse_sum(lx, field);
    lx.skip();
    if (lx.pos != text.size()) throw pha_error("trailing input in scalar: " + text);
    return v;
}

} // namespace pha
