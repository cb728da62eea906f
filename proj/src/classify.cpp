#include "pha/classify.hpp"

#include <set>

namespace pha {

namespace {

int class_degree(DegClass dc) {
    switch (dc) {
    case DegClass::Constant: return 0;
    case DegClass::Linear: return 1;
    case DegClass::Quadratic: return 2;
    }
    throw pha_error("unknown degree class");
}

std::string param_name(size_t k) {
    // b, c, d, ... then b1, c1, ... for large families
    std::string s(1, (char)('b' + k % 25));
    if (k >= 25) s += std::to_string(k / 25);
    return s;
}

} // namespace

PoissonAlgebra BracketFamily::specialize(const std::map<std::string, CycRat>& values) const {
    std::vector<std::vector<Poly>> t = table;
    for (auto& row : t)
        for (auto& p : row) p = p.evaluate_params(values);
    return make_poisson(field, vars, WeightVector(vars.size(), 1), t);
}

BracketFamily equivariant_families(const HopfAction& A, DegClass degclass) {
    const PoissonAlgebra& P = A.algebra;
    const FieldPtr& f = P.field;
    size_t m = P.nvars();
    for (const auto& row : A.gen_actions)
        for (const auto& img : row)
            if (!img.is_zero() && !img.is_homogeneous(WeightVector(m, 1), 1))
                throw pha_error("equivariant solver needs a linear action");

    int d = class_degree(degclass);
    auto monos = monomials_of_degree(m, d);
    size_t T = monos.size();

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    size_t N = pairs.size() * T; // unknown coefficients a_{ij,t}
    auto col_of = [&](size_t p, size_t t) { return p * T + t; };

    // linear image of each variable under each basis element
    size_t hd = A.hopf.dim();
    std::vector<std::vector<Poly>> var_img(hd, std::vector<Poly>(m));
    for (size_t h = 0; h < hd; ++h)
        for (size_t i = 0; i < m; ++i)
            var_img[h][i] = act_basis(A, (int)h, Poly::variable(m, i, f));

    // each constraint h.f_ij - sum {h1.u_i, h2.u_j} = 0 contributes one row
    // per result monomial; entries collected as sparse column loads
    std::vector<std::map<Monomial, std::map<size_t, CycRat>, DegLex>> rows_per;
    for (size_t h = 0; h < hd; ++h) {
        TensorElement delta = sweedler_expand(A.hopf, A.hopf.basis_elem((int)h), 2);
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            std::map<Monomial, std::map<size_t, CycRat>, DegLex> load;

            for (size_t t = 0; t < T; ++t) {
                Poly img = act_basis(A, (int)h, [&] {
                    Poly mono(m);
                    mono.add_term(monos[t], Scalar::one(f));
                    return mono;
                }());
                for (const auto& [mon, c] : img.terms()) {
                    auto& cell = load[mon]
                                     .emplace(col_of(p, t), CycRat::zero(f))
                                     .first->second;
                    cell = cell + c.numeric();
                }
            }

            // sum over Sweedler legs: {h1.u_i, h2.u_j} = sum (a_k b_l - a_l b_k) f_kl
            for (const auto& [legs, c] : delta.terms) {
                const Poly& hi = var_img[legs[0]][i];
                const Poly& hj = var_img[legs[1]][j];
                for (const auto& [mk, ak] : hi.terms()) {
                    size_t k = 0;
                    while (mk.e[k] == 0) ++k;
                    for (const auto& [ml, bl] : hj.terms()) {
                        size_t l = 0;
                        while (ml.e[l] == 0) ++l;
                        if (k == l) continue;
                        size_t lo = std::min(k, l), hi2 = std::max(k, l);
                        size_t q = 0;
                        while (pairs[q] != std::make_pair(lo, hi2)) ++q;
                        CycRat coef = c * ak.numeric() * bl.numeric();
                        if (k > l) coef = -coef;
                        for (size_t t = 0; t < T; ++t) {
                            auto& cell = load[monos[t]]
                                             .emplace(col_of(q, t), CycRat::zero(f))
                                             .first->second;
                            cell = cell - coef;
                        }
                    }
                }
            }
            rows_per.push_back(std::move(load));
        }
    }

    size_t nrows = 0;
    for (const auto& load : rows_per) nrows += load.size();
    ExactMatrix M(nrows, N, f);
    size_t r = 0;
    for (const auto& load : rows_per)
        for (const auto& [mon, cells] : load) {
            for (const auto& [col, v] : cells)
                if (!v.is_zero()) M.at(r, col) = Scalar(v);
            ++r;
        }

    auto kernel = M.nullspace();
    BracketFamily F;
    F.field = f;
    F.vars = P.vars;
    F.table.assign(m, std::vector<Poly>(m, Poly(m)));
    for (size_t s = 0; s < kernel.size(); ++s) {
        F.parameters.push_back(param_name(s));
        Scalar par = Scalar::parameter(f, F.parameters.back());
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            for (size_t t = 0; t < T; ++t) {
                const CycRat& v = kernel[s][col_of(p, t)];
                if (!v.is_zero()) F.table[i][j].add_term(monos[t], par * Scalar(v));
            }
        }
    }
    return F;
}

std::vector<Scalar> jacobi_obstructions(const BracketFamily& F) {
    auto P = make_poisson(F.field, F.vars, WeightVector(F.vars.size(), 1), F.table);
    auto rep = check_jacobi(P);
    std::set<Scalar> seen;
    std::vector<Scalar> out;
    for (const auto& fail : rep.failures)
        for (const auto& [mon, c] : fail.residual.terms())
            if (seen.insert(c).second) out.push_back(c);
    return out;
}

} // namespace pha
