#pragma once

#include "pha/matrix.hpp"

namespace pha {

/// Sparse coordinate vector over the Hopf basis.
using SparseVec = std::vector<std::pair<int, CycRat>>;

/// Element of H^{tensor k}: k-tuples of basis indices -> scalar.
struct TensorElement {
    int legs = 1;
    std::map<std::vector<int>, CycRat> terms;

    bool operator==(const TensorElement& o) const { return legs == o.legs && terms == o.terms; }
};

enum class HopfKind { Taft, Group, Other };

/// Finite-dimensional Hopf algebra as explicit structure tensors on a
/// named basis.
struct FiniteHopf {
    FieldPtr field;
    HopfKind kind = HopfKind::Other;
    unsigned taft_n = 0; // for Taft: g x = lambda^{-1}... order of g, lambda = primitive root

    std::vector<std::string> basis;
    std::vector<std::vector<SparseVec>> mult; // mult[i][j] = coords of e_i e_j
    SparseVec unit;
    std::vector<std::vector<std::tuple<int, int, CycRat>>> comult;
    std::vector<CycRat> counit;
    std::vector<SparseVec> antipode; // antipode[i] = coords of S(e_i)

    /// Generator presentation used to extend actions: names, basis index of
    /// each generator, and for every basis element a word in the generators
    /// whose product is that element.
    std::vector<std::string> gen_names;
    std::vector<int> gen_basis_index;
    std::vector<std::vector<int>> words; // indices into gen_names

    size_t dim() const { return basis.size(); }
    CycRat lambda() const; // the distinguished primitive root (Taft only)

    std::vector<CycRat> dense(const SparseVec& v) const;
    std::vector<CycRat> multiply(const std::vector<CycRat>& a,
                                 const std::vector<CycRat>& b) const;
    std::vector<CycRat> basis_elem(int i) const;
};

struct HopfReport {
    bool ok = true;
    std::string first_failure; // axiom tag + witness
};

/// Taft algebra T_n(lambda) on basis {g^a x^b}.  The field must contain a
/// primitive n-th root of unity (its order divisible by n).
FiniteHopf make_taft(unsigned n, FieldPtr field);

/// Group algebra of the finite abelian group Z/o_1 x ... x Z/o_k.
FiniteHopf make_group_algebra(const std::vector<unsigned>& orders, FieldPtr field);

/// Checks associativity, unit, coassociativity, counit, multiplicativity of
/// Delta and epsilon, and the antipode axiom on every basis element.
HopfReport verify_hopf_axioms(const FiniteHopf& H);

/// Iterated comultiplication Delta^{(k)} of an element given by coordinates.
TensorElement sweedler_expand(const FiniteHopf& H, const std::vector<CycRat>& h, int k);

/// Dual Hopf algebra (transposed structure tensors) and whether the input
/// is cocommutative.
std::pair<FiniteHopf, bool> dual_and_cocommutative(const FiniteHopf& H);

} // namespace pha
