#pragma once

#include "pha/matrix.hpp"

namespace pha {

/// Polynomial Poisson algebra: variables, weights, and the upper-triangular
/// table of structure polynomials f_ij = {u_i, u_j} for i < j.
struct PoissonAlgebra {
    FieldPtr field;
    std::vector<std::string> vars;
    WeightVector weights;
    std::vector<std::vector<Poly>> table; // table[i][j] valid for i < j

    size_t nvars() const { return vars.size(); }

    /// {u_i, u_j} for any index pair, with the antisymmetry sign built in.
    Poly pair_bracket(size_t i, size_t j) const;
};

/// Derivation determined by its images on the generators via Leibniz.
struct Derivation {
    std::vector<Poly> images;

    Poly apply(const PoissonAlgebra& P, const Poly& f) const;
    bool is_zero() const;
};

struct JacobiReport {
    bool ok = true;
    struct Failure {
        size_t i, j, k;
        Poly residual;
    };
    std::vector<Failure> failures;
};

PoissonAlgebra make_poisson(FieldPtr field, std::vector<std::string> vars,
                            WeightVector weights, std::vector<std::vector<Poly>> table);

/// Named algebras from the literature.
PoissonAlgebra builtin_weyl(FieldPtr field, size_t n);
PoissonAlgebra builtin_skew(FieldPtr field, const std::vector<std::vector<Scalar>>& c);
PoissonAlgebra builtin_taft_linear(FieldPtr field);
PoissonAlgebra builtin_taft_quadratic(FieldPtr field, const Scalar& c);
/// Two-variable filtered quadratic normal forms; choice indexes the catalog
/// {1, u1, u1^2, u1^2+1, q*u1*u2, q*u1*u2+1}.
PoissonAlgebra builtin_filtered2(FieldPtr field, int choice, const Scalar& q);

/// {f, g} = sum_{i,j} (df/du_i)(dg/du_j) {u_i, u_j}.
Poly bracket(const PoissonAlgebra& P, const Poly& f, const Poly& g);

/// Jacobi identity on all generator triples.  Generator triples suffice
/// because the Jacobiator of a biderivation bracket is a derivation in
/// each argument.
JacobiReport check_jacobi(const PoissonAlgebra& P);

/// phi(u_i) = sum_j d/du_j {u_i, u_j}; unimodular iff phi = 0.
Derivation modular_derivation(const PoissonAlgebra& P);
bool is_unimodular(const PoissonAlgebra& P);

/// True iff every f_ij has weighted degree <= w_i + w_j.
bool is_filtered(const PoissonAlgebra& P);

/// Rees algebra: adjoin central t of weight 1 and homogenize each f_ij to
/// degree w_i + w_j.
PoissonAlgebra rees(const PoissonAlgebra& P);

/// Associated graded: keep only the top homogeneous component of each f_ij.
PoissonAlgebra assoc_graded(const PoissonAlgebra& P);

/// True iff each f_ij is z-homogeneous of z-degree z_i + z_j (a diagonal
/// Laurent coaction presented as an integer grading).
bool check_weight_grading(const PoissonAlgebra& P, const std::vector<int>& z_weights);

/// All weights 1 and every bracket entry homogeneous of degree 2.
bool is_graded_quadratic(const PoissonAlgebra& P);

} // namespace pha
