#pragma once

#include "pha/action.hpp"
#include "pha/ncalg.hpp"

namespace pha {

/// Kernel of the quantization map sigma_lambda(u_i (x) u_j) =
/// u_i u_j + lambda {u_i, u_j} on the degree-2 tensor square, presented as
/// quadratic relations in letters mirroring the variables.
struct QuantizationResult {
    CycRat lambda;
    std::vector<FreePoly> kernel_basis;
    Presentation presentation; // letters = variables, relations = kernel
    bool generic = false;      // kernel dimension equals m(m-1)/2
};

struct SkewFormReport {
    std::vector<std::vector<CycRat>> q; // q_ij = (1 + lambda c_ij)/(1 - lambda c_ij)
    bool matches = false;
    bool degenerate = false; // some lambda c_ij = +-1
};

/// Requires P graded quadratic with numeric structure constants; filtered
/// algebras go through rees first.
QuantizationResult quantization_relations(const PoissonAlgebra& P, const CycRat& lambda);

/// For quantizations of skew-symmetric brackets {u_i,u_j} = c_ij u_i u_j:
/// checks the kernel is exactly span{ u_i u_j - q_ij u_j u_i : i < j }.
SkewFormReport verify_skew_form(const QuantizationResult& Q,
                                const std::vector<std::vector<Scalar>>& C,
                                const CycRat& lambda);

/// Verifies the two-leg Sweedler action of every Hopf basis element maps
/// the kernel span into itself, so the action descends to the quantization.
/// Requires a linear action.
VerificationReport transport_action(const HopfAction& A, const QuantizationResult& Q);

/// Substitutes 1 for a central letter and drops it.  The letter must be
/// certified central: for every other letter a plain commutator relation
/// with it lies in the relation span.
Presentation specialize_central(const Presentation& Pr, const std::string& letter);

} // namespace pha
