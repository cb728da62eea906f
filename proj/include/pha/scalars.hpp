#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pha {

using Rational = mpq_class;

/// Thrown for all domain errors (zero inversion, mixed fields, bad input).
struct pha_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The cyclotomic field Q(zeta_n), presented as Q[x]/(Phi_n).
struct FieldDescriptor {
    unsigned n;                      // cyclotomic order, n >= 1
    unsigned phi_n;                  // degree of Phi_n = Euler totient of n
    std::vector<mpz_class> min_poly; // Phi_n, coefficient list, monic, length phi_n+1
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Phi_n by recursive division of x^n - 1 by the lower-order cyclotomics.
FieldPtr make_field(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
class CycRat {
public:
    CycRat() = default;
    CycRat(FieldPtr field, Rational r);
    CycRat(FieldPtr field, std::vector<Rational> coeffs); // reduced on entry

    static CycRat zero(FieldPtr field) { return CycRat(std::move(field), Rational(0)); }
    static CycRat one(FieldPtr field) { return CycRat(std::move(field), Rational(1)); }
    static CycRat zeta(FieldPtr field); // the distinguished primitive root

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // all nonconstant coordinates zero
    Rational rational_part() const;

    CycRat operator+(const CycRat& o) const;
    CycRat operator-(const CycRat& o) const;
    CycRat operator-() const;
    CycRat operator*(const CycRat& o) const;
    CycRat inverse() const; // extended Euclid against Phi_n; throws on zero
    CycRat pow(long e) const;

    bool operator==(const CycRat& o) const;
    bool operator!=(const CycRat& o) const { return !(*this == o); }
    bool operator<(const CycRat& o) const; // coordinatewise, for map keys

    std::string to_string() const;

private:
    void check_same(const CycRat& o) const;
    FieldPtr field_;
    std::vector<Rational> c_; // length phi_n
};

/// Commutative monomial in declared parameter symbols, e.g. b^2*c.
/// Empty map is the constant monomial 1.
using ParamMono = std::map<std::string, int>;

/// Polynomial in formal parameters with CycRat coefficients; the scalar
/// ring for everything downstream.  No parameter division.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(CycRat c);
    Scalar(FieldPtr field, Rational r);

    static Scalar zero(FieldPtr field) { return Scalar(CycRat::zero(std::move(field))); }
    static Scalar one(FieldPtr field) { return Scalar(CycRat::one(std::move(field))); }
    static Scalar parameter(FieldPtr field, const std::string& name);

    const FieldPtr& field() const { return field_; }
    const std::map<ParamMono, CycRat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_numeric() const; // no parameter symbols
    CycRat numeric() const;  // throws unless is_numeric

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const; // numeric scalars only

    /// Evaluation homomorphism: substitute numeric values for parameters.
    Scalar evaluate(const std::map<std::string, CycRat>& values) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; // deterministic total order

    std::string to_string() const;

private:
    void add_term(const ParamMono& m, const CycRat& c);
    FieldPtr field_;
    std::map<ParamMono, CycRat> terms_; // no zero coefficients stored
};

/// Parse "1/2 + 3*z^2" style scalar literals (z = zeta, no parameters).
CycRat parse_cycrat(FieldPtr field, const std::string& text);

std::string rational_to_string(const Rational& r);

} // namespace pha
