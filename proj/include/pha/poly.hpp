#pragma once

#include "pha/scalars.hpp"

#include <functional>
#include <optional>

namespace pha {

/// Exponent vector; length equals the ambient variable count.
struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    long weighted_degree(const std::vector<int>& w) const {
        long d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += (long)e[i] * w[i];
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Degree-lexicographic order (lower degree first, then lex on exponents).
struct DegLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

/// One positive weight per variable.
using WeightVector = std::vector<int>;

/// Sparse multivariate commutative polynomial over Scalar.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(size_t nvars) : nvars_(nvars) {}

    static Poly constant(size_t nvars, Scalar c);
    static Poly variable(size_t nvars, size_t i, FieldPtr field);

    size_t nvars() const { return nvars_; }
    const std::map<Monomial, Scalar, DegLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Scalar& c);
    Scalar coeff(const Monomial& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// The unique algebra homomorphism sending u_i to images[i].
    Poly substitute(const std::vector<Poly>& images, FieldPtr field) const;

    /// Rename parameters to numeric values coefficientwise.
    Poly evaluate_params(const std::map<std::string, CycRat>& values) const;

    Poly derivative(size_t var) const;

    int degree() const; // -1 for zero
    long weighted_degree(const WeightVector& w) const; // -1 for zero
    bool is_homogeneous(const WeightVector& w, long d) const;

    /// Split into weighted-homogeneous parts; parts sum to the polynomial.
    std::map<long, Poly> graded_parts(const WeightVector& w) const;

    /// Append a homogenizing variable t (weight 1) so every term reaches
    /// weighted degree d.  Throws if some term exceeds d.
    Poly homogenize(const WeightVector& w, long d) const;

    /// Substitute a fixed value for the last variable and drop it.
    Poly set_last_var(const Scalar& value) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    size_t nvars_;
    std::map<Monomial, Scalar, DegLex> terms_;
};

/// Parse "c*u2*u3 + 1/2*u1^2" over declared variable and parameter names.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const std::vector<std::string>& params, FieldPtr field);

/// All monomials in nvars variables of total degree exactly d, deg-lex order.
std::vector<Monomial> monomials_of_degree(size_t nvars, int d);

} // namespace pha
