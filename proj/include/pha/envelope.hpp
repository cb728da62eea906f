#pragma once

#include "pha/action.hpp"
#include "pha/ncalg.hpp"

namespace pha {

/// Finite presentation of the Poisson enveloping algebra U(P) on letters
/// mu1..mum, nu1..num.  Declaring the mu letters first makes the word order
/// rewrite toward PBW form (mu block left of the nu block).
struct EnvelopePresentation {
    PoissonAlgebra base;
    Presentation presentation;
};

/// Per-element residuals of the two enveloping-extension conditions
///   sum mu_{h1.b} nu_{h2.a} = sum mu_{h2.b} nu_{h1.a}
///   sum nu_{h2.b} nu_{h1.a} = sum nu_{h1.b} nu_{h2.a}
/// in PBW-normalized form; the action extends iff all residuals vanish.
struct ExtensionReport {
    bool ok = true;
    bool cocommutative_shortcut = false;
    struct Entry {
        std::string hopf_elem;
        size_t i, j; // the generator pair (a, b) = (u_i, u_j)
        FreePoly residual1, residual2;
    };
    std::vector<Entry> entries; // nonzero residuals only
};

/// Relations: mu_i mu_j - mu_j mu_i (i<j); nu_i mu_j - mu_j nu_i -
/// mu_of({u_i,u_j}) (all ordered pairs); nu_i nu_j - nu_j nu_i -
/// nu_of({u_i,u_j}) (i<j).
EnvelopePresentation enveloping_presentation(const PoissonAlgebra& P);

/// mu_of: the algebra morphism u_i -> mu_i.  nu_of: linear, with
/// nu_of(u^alpha) = sum_i alpha_i mu_of(u^alpha / u_i) nu_i and
/// nu_of(1) = 0.  Both land in PBW order.
std::pair<FreePoly, FreePoly> mu_nu_expand(const PoissonAlgebra& P, const Poly& f);

/// Checks the extension conditions for every Hopf basis element on every
/// generator pair.  Cocommutative Hopf algebras short-circuit to ok unless
/// force_full is set.  The caller is expected to have verified the action.
ExtensionReport check_extension_conditions(const HopfAction& A, bool force_full = false);

} // namespace pha
