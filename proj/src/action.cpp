#include "pha/action.hpp"

#include <random>

namespace pha {

namespace {

Poly act_mono(const HopfAction& A, int idx, const Monomial& m);

/// Action of e_idx on a single variable.  Deliberately avoids the Sweedler
/// recursion: the generator word for e_idx is applied right to left, so the
/// base case (a one-letter word) is a direct table lookup and longer words
/// reduce to actions of generators on polynomials of the same degree or
/// lower.
Poly act_var(const HopfAction& A, int idx, size_t i) {
    const auto& word = A.hopf.words[idx];
    size_t m = A.algebra.nvars();
    if (word.empty()) return Poly::variable(m, i, A.algebra.field);
    if (word.size() == 1) return A.gen_actions[word[0]][i];
    Poly p = Poly::variable(m, i, A.algebra.field);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p = act_basis(A, A.hopf.gen_basis_index[*it], p);
    return p;
}

Poly act_mono(const HopfAction& A, int idx, const Monomial& m) {
    auto key = std::make_pair(idx, m.e);
    auto hit = A.cache.find(key);
    if (hit != A.cache.end()) return hit->second;

    size_t nv = A.algebra.nvars();
    int d = m.degree();
    Poly result(nv);
    if (d == 0) {
        result = Poly::constant(nv, Scalar(A.hopf.counit[idx]));
    } else if (d == 1) {
        size_t i = 0;
        while (m.e[i] == 0) ++i;
        result = act_var(A, idx, i);
    } else {
        size_t i = 0;
        while (m.e[i] == 0) ++i;
        Monomial rest = m;
        rest.e[i] -= 1;
        TensorElement delta = sweedler_expand(A.hopf, A.hopf.basis_elem(idx), 2);
        for (const auto& [legs, c] : delta.terms)
            result = result +
                     (act_var(A, legs[0], i) * act_mono(A, legs[1], rest)) * Scalar(c);
    }
    A.cache.emplace(std::move(key), result);
    return result;
}

Poly scaled_var(size_t m, size_t i, const Scalar& s, const FieldPtr& f) {
    return Poly::variable(m, i, f) * s;
}

std::string pair_witness(const HopfAction& A, int h, size_t i, size_t j) {
    return "h=" + A.hopf.basis[h] + " on {" + A.algebra.vars[i] + "," +
           A.algebra.vars[j] + "}";
}

Poly random_poly(const FieldPtr& f, size_t nvars, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), deg(0, maxdeg);
    Poly p(nvars);
    for (int t = 0; t < nterms(rng); ++t) {
        Monomial m{std::vector<int>(nvars, 0)};
        int d = deg(rng);
        std::uniform_int_distribution<size_t> var(0, nvars - 1);
        for (int i = 0; i < d; ++i) m.e[var(rng)]++;
        p.add_term(m, Scalar(f, Rational(coef(rng))));
    }
    return p;
}

/// Coordinates of a homogeneous numeric polynomial in the degree-d monomial
/// basis.
std::vector<CycRat> coords_of(const Poly& p, const std::vector<Monomial>& basis,
                              const FieldPtr& f) {
    std::vector<CycRat> v(basis.size(), CycRat::zero(f));
    size_t used = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        Scalar c = p.coeff(basis[i]);
        if (!c.is_zero()) {
            v[i] = c.numeric();
            ++used;
        }
    }
    if (used != p.terms().size()) throw pha_error("polynomial outside coordinate basis");
    return v;
}

/// All products of the given generators with total degree exactly d,
/// together with the exponent tuple that produced each product.
void enumerate_products(const std::vector<Poly>& gens, const std::vector<int>& degs,
                        size_t k, int d, std::vector<int>& expo, const Poly& acc,
                        std::vector<std::pair<std::vector<int>, Poly>>& out) {
    if (k == gens.size()) {
        if (d == 0) out.emplace_back(expo, acc);
        return;
    }
    for (int a = 0; a * degs[k] <= d; ++a) {
        expo[k] = a;
        Poly next = acc;
        for (int i = 0; i < a; ++i) next = next * gens[k];
        enumerate_products(gens, degs, k + 1, d - a * degs[k], expo, next, out);
        if (degs[k] == 0) break; // constants only once
    }
    expo[k] = 0;
}

/// Solve sum_j x_j col_j = target over the field, if possible.
std::optional<std::vector<CycRat>> solve_columns(
    const std::vector<std::vector<CycRat>>& cols, const std::vector<CycRat>& target,
    const FieldPtr& f) {
    size_t rows = target.size(), k = cols.size();
    ExactMatrix M(rows, k + 1, f);
    for (size_t j = 0; j < k; ++j)
        for (size_t r = 0; r < rows; ++r) M.at(r, j) = Scalar(cols[j][r]);
    for (size_t r = 0; r < rows; ++r) M.at(r, k) = Scalar(target[r]);
    std::vector<std::vector<CycRat>> R;
    auto pivots = M.rref(R);
    std::vector<CycRat> x(k, CycRat::zero(f));
    for (size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == k) return std::nullopt; // inconsistent system
        x[pivots[p]] = R[p][k];
    }
    return x;
}

Scalar param_mono_scalar(const ParamMono& pm, const CycRat& c, const FieldPtr& f) {
    Scalar s{c};
    for (const auto& [name, e] : pm)
        for (int i = 0; i < e; ++i) s = s * Scalar::parameter(f, name);
    return s;
}

} // namespace

HopfAction make_action(FiniteHopf H, PoissonAlgebra P,
                       std::vector<std::vector<Poly>> gen_actions) {
    if (gen_actions.size() != H.gen_names.size())
        throw pha_error("one image row per Hopf generator required");
    for (const auto& row : gen_actions) {
        if (row.size() != P.nvars()) throw pha_error("one image per variable required");
        for (const auto& p : row)
            if (p.nvars() != P.nvars())
                throw pha_error("generator image uses undeclared variables");
    }
    return HopfAction{std::move(H), std::move(P), std::move(gen_actions), {}};
}

HopfAction taft_standard_action(const PoissonAlgebra& P, unsigned n) {
    if (P.nvars() < 2) throw pha_error("standard Taft action needs >= 2 variables");
    FiniteHopf H = make_taft(n, P.field);
    size_t m = P.nvars();
    Scalar lam_inv{H.lambda().inverse()};
    std::vector<Poly> g_row, x_row;
    g_row.push_back(scaled_var(m, 0, lam_inv, P.field));
    x_row.push_back(Poly::variable(m, 1, P.field));
    for (size_t i = 1; i < m; ++i) {
        g_row.push_back(Poly::variable(m, i, P.field));
        x_row.push_back(Poly(m));
    }
    return make_action(std::move(H), P, {std::move(g_row), std::move(x_row)});
}

Poly act_basis(const HopfAction& A, int idx, const Poly& f) {
    Poly r(A.algebra.nvars());
    for (const auto& [m, c] : f.terms()) r = r + act_mono(A, idx, m) * c;
    return r;
}

Poly act(const HopfAction& A, const std::vector<CycRat>& h, const Poly& f) {
    Poly r(A.algebra.nvars());
    for (size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) r = r + act_basis(A, (int)i, f) * Scalar(h[i]);
    return r;
}

VerificationReport verify_module_poisson(const HopfAction& A, int maxdeg) {
    if (maxdeg < 2) throw pha_error("verification degree must be >= 2");
    VerificationReport rep;
    auto fail = [&](std::string axiom, std::string witness, Poly residual) {
        rep.ok = false;
        rep.failures.push_back({std::move(axiom), std::move(witness), std::move(residual)});
    };
    const FiniteHopf& H = A.hopf;
    const PoissonAlgebra& P = A.algebra;
    size_t m = P.nvars(), d = H.dim();
    auto one = Poly::constant(m, Scalar::one(P.field));

    std::mt19937 rng(917);
    std::vector<Poly> samples;
    for (size_t i = 0; i < m; ++i) samples.push_back(Poly::variable(m, i, P.field));
    for (int t = 0; t < 4; ++t) samples.push_back(random_poly(P.field, m, maxdeg, rng));

    // unit acts as identity, everything acts on 1 by its counit value
    auto unit = H.dense(H.unit);
    for (size_t i = 0; i < m; ++i) {
        Poly r = act(A, unit, samples[i]) - samples[i];
        if (!r.is_zero()) fail("unit", P.vars[i], r);
    }
    for (size_t h = 0; h < d; ++h) {
        Poly r = act_basis(A, (int)h, one) - one * Scalar(H.counit[h]);
        if (!r.is_zero()) fail("counit", H.basis[h], r);
    }

    // module law: e_i (e_j f) = (e_i e_j) f
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            auto prod = H.dense(H.mult[i][j]);
            for (const Poly& f : samples) {
                Poly r = act_basis(A, (int)i, act_basis(A, (int)j, f)) - act(A, prod, f);
                if (!r.is_zero())
                    fail("module", H.basis[i] + "*" + H.basis[j], r);
            }
        }

    // module-algebra and Poisson compatibility, Sweedler-expanded
    for (size_t h = 0; h < d; ++h) {
        TensorElement delta = sweedler_expand(H, H.basis_elem((int)h), 2);

        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                Poly lhs = act_basis(A, (int)h, P.table[i][j]);
                Poly rhs(m);
                for (const auto& [legs, c] : delta.terms)
                    rhs = rhs + bracket(P, act_var(A, legs[0], i), act_var(A, legs[1], j)) *
                                    Scalar(c);
                if (lhs != rhs)
                    fail("poisson", pair_witness(A, (int)h, i, j), lhs - rhs);
            }

        for (int t = 0; t + 1 < (int)samples.size(); t += 2) {
            const Poly& f = samples[t];
            const Poly& g = samples[t + 1];
            Poly prod_rhs(m), brak_rhs(m);
            for (const auto& [legs, c] : delta.terms) {
                Poly hf = act_basis(A, legs[0], f), hg = act_basis(A, legs[1], g);
                prod_rhs = prod_rhs + (hf * hg) * Scalar(c);
                brak_rhs = brak_rhs + bracket(P, hf, hg) * Scalar(c);
            }
            Poly r1 = act_basis(A, (int)h, f * g) - prod_rhs;
            if (!r1.is_zero()) fail("module-algebra", H.basis[h], r1);
            Poly r2 = act_basis(A, (int)h, bracket(P, f, g)) - brak_rhs;
            if (!r2.is_zero()) fail("poisson", H.basis[h] + " on sampled pair", r2);
        }
    }
    return rep;
}

std::vector<Poly> fixed_subspace(const HopfAction& A, int d) {
    if (d < 0) throw pha_error("degree must be >= 0");
    size_t m = A.algebra.nvars();
    const FieldPtr& f = A.algebra.field;
    auto cols = monomials_of_degree(m, d);

    // one block of constraints (h - eps(h)) f = 0 per Hopf basis element
    std::vector<std::vector<Poly>> diffs(A.hopf.dim());
    std::vector<std::map<Monomial, size_t, DegLex>> row_index(A.hopf.dim());
    size_t rows = 0;
    for (size_t h = 0; h < A.hopf.dim(); ++h) {
        for (size_t c = 0; c < cols.size(); ++c) {
            Poly mono(m);
            mono.add_term(cols[c], Scalar::one(f));
            Poly diff = act_mono(A, (int)h, cols[c]) - mono * Scalar(A.hopf.counit[h]);
            diffs[h].push_back(diff);
            for (const auto& [mon, coef] : diff.terms())
                if (!row_index[h].count(mon)) row_index[h][mon] = rows++;
        }
    }
    ExactMatrix M(rows, cols.size(), f);
    for (size_t h = 0; h < A.hopf.dim(); ++h)
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& [mon, coef] : diffs[h][c].terms())
                M.at(row_index[h][mon], c) = coef;

    std::vector<Poly> basis;
    for (const auto& v : M.nullspace()) {
        Poly p(m);
        for (size_t c = 0; c < cols.size(); ++c)
            if (!v[c].is_zero()) p.add_term(cols[c], Scalar(v[c]));
        basis.push_back(p);
    }
    return basis;
}

FixedRingReport fixed_ring_report(const HopfAction& A, int maxdeg) {
    FixedRingReport rep;
    const FieldPtr& f = A.algebra.field;
    size_t m = A.algebra.nvars();
    std::vector<int> gen_degs;

    for (int d = 1; d <= maxdeg; ++d) {
        auto fixed = fixed_subspace(A, d);
        if (fixed.empty()) continue;
        auto monos = monomials_of_degree(m, d);

        std::vector<std::pair<std::vector<int>, Poly>> products;
        std::vector<int> expo(rep.generators.size(), 0);
        enumerate_products(rep.generators, gen_degs, 0, d, expo,
                           Poly::constant(m, Scalar::one(f)), products);
        std::vector<std::vector<CycRat>> span;
        for (const auto& [e, p] : products) span.push_back(coords_of(p, monos, f));

        for (const Poly& g : fixed) {
            auto v = coords_of(g, monos, f);
            if (in_span(span, v, f)) continue;
            rep.generators.push_back(g);
            rep.names.push_back("v" + std::to_string(rep.generators.size()));
            gen_degs.push_back(d);
            span.push_back(v);
        }
    }

    size_t k = rep.generators.size();
    rep.raw_table.assign(k, std::vector<Poly>(k, Poly(m)));
    rep.table.assign(k, std::vector<Poly>(k, Poly(k)));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
            Poly r = bracket(A.algebra, rep.generators[a], rep.generators[b]);
            rep.raw_table[a][b] = r;
            for (size_t h = 0; h < A.hopf.dim(); ++h)
                if (act_basis(A, (int)h, r) != r * Scalar(A.hopf.counit[h]))
                    rep.poisson_closed = false;

            // split by parameter monomial, then by degree, and express each
            // numeric homogeneous piece in products of the generators
            std::map<ParamMono, Poly> comps;
            for (const auto& [mon, s] : r.terms())
                for (const auto& [pm, c] : s.terms()) {
                    auto [it, fresh] = comps.emplace(pm, Poly(m));
                    it->second.add_term(mon, Scalar(c));
                }
            Poly expr(k);
            bool solved = true;
            for (const auto& [pm, comp] : comps)
                for (const auto& [deg, part] : comp.graded_parts(WeightVector(m, 1))) {
                    auto monos = monomials_of_degree(m, (int)deg);
                    std::vector<std::pair<std::vector<int>, Poly>> products;
                    std::vector<int> expo(k, 0);
                    enumerate_products(rep.generators, gen_degs, 0, (int)deg, expo,
                                       Poly::constant(m, Scalar::one(f)), products);
                    std::vector<std::vector<CycRat>> cols;
                    for (const auto& [e, p] : products)
                        cols.push_back(coords_of(p, monos, f));
                    auto x = solve_columns(cols, coords_of(part, monos, f), f);
                    if (!x) {
                        solved = false;
                        continue;
                    }
                    for (size_t j = 0; j < products.size(); ++j)
                        if (!(*x)[j].is_zero())
                            expr.add_term(Monomial{products[j].first},
                                          param_mono_scalar(pm, (*x)[j], f));
                }
            if (solved)
                rep.table[a][b] = expr;
            else
                rep.expressed = false;
        }
    return rep;
}

HopfAction extend_action_to_rees(const HopfAction& A) {
    PoissonAlgebra R = rees(A.algebra);
    const PoissonAlgebra& P = A.algebra;
    size_t m = P.nvars();
    std::vector<std::vector<Poly>> images;
    for (size_t kdx = 0; kdx < A.gen_actions.size(); ++kdx) {
        std::vector<Poly> row;
        for (size_t i = 0; i < m; ++i) {
            const Poly& img = A.gen_actions[kdx][i];
            if (!img.is_zero() && img.weighted_degree(P.weights) > P.weights[i])
                throw pha_error("action does not preserve the filtration");
            row.push_back(img.homogenize(P.weights, P.weights[i]));
        }
        Scalar eps{A.hopf.counit[A.hopf.gen_basis_index[kdx]]};
        row.push_back(Poly::variable(m + 1, m, P.field) * eps);
        images.push_back(std::move(row));
    }
    return make_action(A.hopf, std::move(R), std::move(images));
}

bool taft_inner_faithful(const HopfAction& A) {
    if (A.hopf.kind != HopfKind::Taft) throw pha_error("Taft algebras only");
    unsigned n = A.hopf.taft_n;
    size_t m = A.algebra.nvars();
    const FieldPtr& f = A.algebra.field;

    size_t gi = 0, xi = 1; // make_taft generator order
    bool x_nonzero = false;
    for (const Poly& p : A.gen_actions[xi])
        if (!p.is_zero()) x_nonzero = true;
    if (!x_nonzero) return false;

    // matrix of the g-action; g acts linearly on the variables
    std::vector<std::vector<CycRat>> M(m, std::vector<CycRat>(m, CycRat::zero(f)));
    for (size_t i = 0; i < m; ++i)
        for (const auto& [mon, c] : A.gen_actions[gi][i].terms()) {
            if (mon.degree() != 1) throw pha_error("g must act linearly");
            size_t j = 0;
            while (mon.e[j] == 0) ++j;
            M[j][i] = c.numeric();
        }

    // g^n = 1, so some eigenvalue has exact order n iff the matrix does
    auto identity = [&](const std::vector<std::vector<CycRat>>& X) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (X[i][j] != (i == j ? CycRat::one(f) : CycRat::zero(f))) return false;
        return true;
    };
    auto P = M;
    for (unsigned k = 1; k <= n; ++k) {
        if (identity(P)) return k == n;
        std::vector<std::vector<CycRat>> next(m, std::vector<CycRat>(m, CycRat::zero(f)));
        for (size_t i = 0; i < m; ++i)
            for (size_t l = 0; l < m; ++l)
                for (size_t j = 0; j < m; ++j) next[i][j] = next[i][j] + P[i][l] * M[l][j];
        P = next;
    }
    return false;
}

Coaction dualize_action(const HopfAction& A) {
    auto dual = dual_and_cocommutative(A.hopf).first;
    size_t m = A.algebra.nvars(), d = A.hopf.dim();
    std::vector<std::vector<Poly>> images(m, std::vector<Poly>(d, Poly(m)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < d; ++j)
            images[i][j] = act_basis(A, (int)j, Poly::variable(m, i, A.algebra.field));
    return Coaction{std::move(dual), A.algebra, std::move(images)};
}

HopfAction dualize_coaction(const Coaction& C) {
    FiniteHopf D = dual_and_cocommutative(C.hopf).first;
    size_t m = C.algebra.nvars(), d = C.hopf.dim();
    // present the dual on its full basis so every word is one letter
    D.gen_names = D.basis;
    D.gen_basis_index.clear();
    D.words.assign(d, {});
    for (size_t j = 0; j < d; ++j) {
        D.gen_basis_index.push_back((int)j);
        D.words[j] = {(int)j};
    }
    std::vector<std::vector<Poly>> gen_actions(d, std::vector<Poly>(m, Poly(m)));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < m; ++i) gen_actions[j][i] = C.images[i][j];
    return make_action(std::move(D), C.algebra, std::move(gen_actions));
}

} // namespace pha
