#pragma once

#include "pha/hopf.hpp"
#include "pha/poisson.hpp"

namespace pha {

/// Action of a finite-dimensional Hopf algebra on a Poisson algebra, given
/// by images of the variables under the declared Hopf generators.  The
/// extension to all basis elements and all polynomials is computed on
/// demand and memoized.
struct HopfAction {
    FiniteHopf hopf;
    PoissonAlgebra algebra;
    std::vector<std::vector<Poly>> gen_actions; // [generator][variable]

    mutable std::map<std::pair<int, std::vector<int>>, Poly> cache;
};

struct VerificationReport {
    bool ok = true;
    struct Failure {
        std::string axiom;
        std::string witness;
        Poly residual;
    };
    std::vector<Failure> failures;
};

/// Comodule over a finite-dimensional Hopf algebra: rho(u_i) = sum_j
/// images[i][j] (x) e_j on the variables.
struct Coaction {
    FiniteHopf hopf;
    PoissonAlgebra algebra;
    std::vector<std::vector<Poly>> images; // [variable][hopf basis index]
};

struct FixedRingReport {
    std::vector<Poly> generators;         // in the ambient variables
    std::vector<std::string> names;       // v1, v2, ... in discovery order
    std::vector<std::vector<Poly>> raw_table;   // generator brackets, ambient vars
    std::vector<std::vector<Poly>> table;       // same, rewritten in the generators
    bool poisson_closed = true; // every generator bracket is again fixed
    bool expressed = true;      // every bracket rewritten in generator terms
};

HopfAction make_action(FiniteHopf H, PoissonAlgebra P,
                       std::vector<std::vector<Poly>> gen_actions);

/// The standard Taft action: g scales u1 by lambda^{-1} and fixes the other
/// variables; x sends u1 to u2 and the rest to 0.  Needs >= 2 variables.
HopfAction taft_standard_action(const PoissonAlgebra& P, unsigned n);

/// Action of the basis element e_idx on a polynomial (Sweedler recursion
/// on monomials, memoized).
Poly act_basis(const HopfAction& A, int idx, const Poly& f);

/// Action of an arbitrary element given by dense coordinates.
Poly act(const HopfAction& A, const std::vector<CycRat>& h, const Poly& f);

/// Certifies the action data: module law on basis pairs, unit/counit law,
/// the module-algebra law on sampled products, and Poisson compatibility
/// h.{a,b} = sum {h1.a, h2.b} on all generator pairs for every basis
/// element plus randomized polynomial pairs up to maxdeg.
VerificationReport verify_module_poisson(const HopfAction& A, int maxdeg);

/// Basis of { f homogeneous of degree d : h.f = eps(h) f for all h }, from
/// the kernel of the stacked system over all Hopf basis elements.
std::vector<Poly> fixed_subspace(const HopfAction& A, int d);

/// Greedy degree-by-degree generators of the fixed ring up to maxdeg, with
/// their pairwise brackets rewritten in generator terms when possible.
FixedRingReport fixed_ring_report(const HopfAction& A, int maxdeg);

/// Extends the action to rees(P): generator images are homogenized to the
/// variable weights and every generator acts on t by its counit value.
/// Throws if some image exceeds the filtration.
HopfAction extend_action_to_rees(const HopfAction& A);

/// Taft algebras only: true iff x acts nonzero on some variable and the
/// linear g-action has multiplicative order exactly n (equivalently, some
/// eigenvalue is a primitive n-th root of unity).
bool taft_inner_faithful(const HopfAction& A);

/// Module over H -> comodule over H^* via the dual basis.
Coaction dualize_action(const HopfAction& A);

/// Comodule over H -> module over H^* via evaluation.  Round-tripping an
/// action reproduces its basis-level table.
HopfAction dualize_coaction(const Coaction& C);

} // namespace pha
