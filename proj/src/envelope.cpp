#include "pha/envelope.hpp"

namespace pha {

namespace {

Word mu_word(const Monomial& m) {
    Word w;
    for (size_t i = 0; i < m.e.size(); ++i)
        for (int k = 0; k < m.e[i]; ++k) w.push_back((int)i);
    return w;
}

} // namespace

std::pair<FreePoly, FreePoly> mu_nu_expand(const PoissonAlgebra& P, const Poly& f) {
    size_t m = P.nvars();
    FreePoly mu(2 * m), nu(2 * m);
    for (const auto& [mon, c] : f.terms()) {
        mu.add_term(mu_word(mon), c);
        for (size_t i = 0; i < m; ++i) {
            if (mon.e[i] == 0) continue;
            Monomial red = mon;
            red.e[i] -= 1;
            Word w = mu_word(red);
            w.push_back((int)(m + i));
            nu.add_term(w, c * Scalar(P.field, Rational(mon.e[i])));
        }
    }
    return {mu, nu};
}

EnvelopePresentation enveloping_presentation(const PoissonAlgebra& P) {
    size_t m = P.nvars();
    const FieldPtr& f = P.field;
    std::vector<std::string> letters;
    for (size_t i = 1; i <= m; ++i) letters.push_back("mu" + std::to_string(i));
    for (size_t i = 1; i <= m; ++i) letters.push_back("nu" + std::to_string(i));

    auto mu = [&](size_t i) { return FreePoly::letter(2 * m, (int)i, f); };
    auto nu = [&](size_t i) { return FreePoly::letter(2 * m, (int)(m + i), f); };

    std::vector<FreePoly> rels;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) rels.push_back(mu(i) * mu(j) - mu(j) * mu(i));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            rels.push_back(nu(i) * mu(j) - mu(j) * nu(i) -
                           mu_nu_expand(P, P.pair_bracket(i, j)).first);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            rels.push_back(nu(i) * nu(j) - nu(j) * nu(i) -
                           mu_nu_expand(P, P.table[i][j]).second);

    return EnvelopePresentation{P, make_presentation(f, letters, rels)};
}

ExtensionReport check_extension_conditions(const HopfAction& A, bool force_full) {
    ExtensionReport rep;
    if (!force_full && dual_and_cocommutative(A.hopf).second) {
        rep.cocommutative_shortcut = true;
        return rep;
    }

    const PoissonAlgebra& P = A.algebra;
    size_t m = P.nvars();
    auto env = enveloping_presentation(P);

    auto normalize = [&](const FreePoly& p) {
        long d = p.weighted_degree(env.presentation.weights);
        return normal_form(env.presentation, p, (int)std::max(d, 0L) + 1);
    };

    for (size_t h = 0; h < A.hopf.dim(); ++h) {
        TensorElement delta = sweedler_expand(A.hopf, A.hopf.basis_elem((int)h), 2);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                // (a, b) = (u_i, u_j); legs act through the module structure
                FreePoly r1(2 * m), r2(2 * m);
                for (const auto& [legs, c] : delta.terms) {
                    Poly b1 = act_basis(A, legs[0], Poly::variable(m, j, P.field));
                    Poly b2 = act_basis(A, legs[1], Poly::variable(m, j, P.field));
                    Poly a1 = act_basis(A, legs[0], Poly::variable(m, i, P.field));
                    Poly a2 = act_basis(A, legs[1], Poly::variable(m, i, P.field));
                    auto [mu_b1, nu_b1] = mu_nu_expand(P, b1);
                    auto [mu_b2, nu_b2] = mu_nu_expand(P, b2);
                    auto [mu_a1, nu_a1] = mu_nu_expand(P, a1);
                    auto [mu_a2, nu_a2] = mu_nu_expand(P, a2);
                    Scalar s{c};
                    r1 = r1 + (mu_b1 * nu_a2 - mu_b2 * nu_a1) * s;
                    r2 = r2 + (nu_b2 * nu_a1 - nu_b1 * nu_a2) * s;
                }
                r1 = normalize(r1);
                r2 = normalize(r2);
                if (!r1.is_zero() || !r2.is_zero()) {
                    rep.ok = false;
                    rep.entries.push_back({A.hopf.basis[h], i, j, r1, r2});
                }
            }
    }
    return rep;
}

} // namespace pha
