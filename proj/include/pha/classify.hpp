#pragma once

#include "pha/action.hpp"

namespace pha {

/// Homogeneity class of the unknown structure polynomials.
enum class DegClass { Constant, Linear, Quadratic };

/// Parameterized family of candidate brackets: each table entry is linear
/// in the parameters, and any numeric specialization is a bracket candidate
/// (antisymmetric biderivation, Jacobi checked separately).
struct BracketFamily {
    FieldPtr field;
    std::vector<std::string> vars;
    std::vector<std::string> parameters;
    std::vector<std::vector<Poly>> table; // valid for i < j

    size_t dimension() const { return parameters.size(); }
    PoissonAlgebra specialize(const std::map<std::string, CycRat>& values) const;
};

/// Solves h.f_ij = sum {h1.u_i, h2.u_j} for unknown homogeneous f_ij of the
/// given class, over every basis element of the acting Hopf algebra.  The
/// bracket of the action is ignored; only the linear action on variables
/// enters.  Returns the kernel as a family with one parameter per solution
/// dimension.
BracketFamily equivariant_families(const HopfAction& A, DegClass degclass);

/// Coefficient polynomials in the parameters that must vanish for the
/// Jacobi identity to hold across the whole family; empty means every
/// specialization is Poisson.
std::vector<Scalar> jacobi_obstructions(const BracketFamily& F);

} // namespace pha
