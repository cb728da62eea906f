#include "pha/quantize.hpp"

namespace pha {

namespace {

std::vector<CycRat> pair_coords(const FreePoly& p, size_t m, const FieldPtr& f) {
    std::vector<CycRat> v(m * m, CycRat::zero(f));
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != 2) throw pha_error("kernel elements must be quadratic");
        v[(size_t)w[0] * m + w[1]] = c.numeric();
    }
    return v;
}

} // namespace

QuantizationResult quantization_relations(const PoissonAlgebra& P, const CycRat& lambda) {
    if (!is_graded_quadratic(P))
        throw pha_error("quantization needs a graded quadratic algebra; apply rees first");
    size_t m = P.nvars();
    const FieldPtr& f = P.field;
    auto monos = monomials_of_degree(m, 2);
    std::map<Monomial, size_t, DegLex> row_of;
    for (size_t r = 0; r < monos.size(); ++r) row_of[monos[r]] = r;

    ExactMatrix M(monos.size(), m * m, f);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Poly sigma = Poly::variable(m, i, f) * Poly::variable(m, j, f) +
                         P.pair_bracket(i, j) * Scalar(lambda);
            for (const auto& [mon, c] : sigma.terms()) {
                Scalar cur = M.at(row_of.at(mon), i * m + j);
                M.at(row_of.at(mon), i * m + j) = cur.is_zero() ? c : cur + c;
            }
        }

    QuantizationResult Q;
    Q.lambda = lambda;
    for (const auto& v : M.nullspace()) {
        FreePoly rel(m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (!v[i * m + j].is_zero())
                    rel.add_term({(int)i, (int)j}, Scalar(v[i * m + j]));
        Q.kernel_basis.push_back(std::move(rel));
    }
    Q.presentation = make_presentation(f, P.vars, Q.kernel_basis);
    Q.generic = Q.kernel_basis.size() == m * (m - 1) / 2;
    return Q;
}

SkewFormReport verify_skew_form(const QuantizationResult& Q,
                                const std::vector<std::vector<Scalar>>& C,
                                const CycRat& lambda) {
    size_t m = C.size();
    const FieldPtr& f = Q.presentation.field;
    SkewFormReport rep;
    rep.q.assign(m, std::vector<CycRat>(m, CycRat::one(f)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            CycRat lc = lambda * C[i][j].numeric();
            CycRat num = CycRat::one(f) + lc, den = CycRat::one(f) - lc;
            if (num.is_zero() || den.is_zero()) {
                rep.degenerate = true;
                continue;
            }
            rep.q[i][j] = num * den.inverse();
            rep.q[j][i] = rep.q[i][j].inverse();
        }
    if (rep.degenerate) return rep;

    std::vector<std::vector<CycRat>> kernel;
    for (const auto& k : Q.kernel_basis) kernel.push_back(pair_coords(k, m, f));
    bool ok = kernel.size() == m * (m - 1) / 2;
    for (size_t i = 0; i < m && ok; ++i)
        for (size_t j = i + 1; j < m && ok; ++j) {
            FreePoly cand(m);
            cand.add_term({(int)i, (int)j}, Scalar::one(f));
            cand.add_term({(int)j, (int)i}, -Scalar(rep.q[i][j]));
            ok = in_span(kernel, pair_coords(cand, m, f), f);
        }
    rep.matches = ok;
    return rep;
}

VerificationReport transport_action(const HopfAction& A, const QuantizationResult& Q) {
    const PoissonAlgebra& P = A.algebra;
    size_t m = P.nvars();
    const FieldPtr& f = P.field;
    for (const auto& row : A.gen_actions)
        for (const auto& img : row)
            if (!img.is_zero() && !img.is_homogeneous(WeightVector(m, 1), 1))
                throw pha_error("action transport needs a degree-preserving action");

    std::vector<std::vector<CycRat>> kernel;
    for (const auto& k : Q.kernel_basis) kernel.push_back(pair_coords(k, m, f));

    // linear coefficients of each basis element on each variable
    size_t hd = A.hopf.dim();
    std::vector<std::vector<std::vector<CycRat>>> lin(
        hd, std::vector<std::vector<CycRat>>(m, std::vector<CycRat>(m, CycRat::zero(f))));
    for (size_t h = 0; h < hd; ++h)
        for (size_t i = 0; i < m; ++i) {
            Poly img = act_basis(A, (int)h, Poly::variable(m, i, f));
            for (const auto& [mon, c] : img.terms()) {
                size_t k = 0;
                while (mon.e[k] == 0) ++k;
                lin[h][i][k] = c.numeric();
            }
        }

    VerificationReport rep;
    for (size_t h = 0; h < hd; ++h) {
        TensorElement delta = sweedler_expand(A.hopf, A.hopf.basis_elem((int)h), 2);
        for (size_t r = 0; r < Q.kernel_basis.size(); ++r) {
            std::vector<CycRat> img(m * m, CycRat::zero(f));
            for (const auto& [w, c] : Q.kernel_basis[r].terms())
                for (const auto& [legs, s] : delta.terms) {
                    const auto& a = lin[legs[0]][w[0]];
                    const auto& b = lin[legs[1]][w[1]];
                    CycRat base = c.numeric() * s;
                    for (size_t k = 0; k < m; ++k) {
                        if (a[k].is_zero()) continue;
                        for (size_t l = 0; l < m; ++l)
                            if (!b[l].is_zero())
                                img[k * m + l] = img[k * m + l] + base * a[k] * b[l];
                    }
                }
            if (!in_span(kernel, img, f)) {
                rep.ok = false;
                rep.failures.push_back({"transport",
                                        A.hopf.basis[h] + " on relation " +
                                            std::to_string(r + 1),
                                        Poly(m)});
            }
        }
    }
    return rep;
}

Presentation specialize_central(const Presentation& Pr, const std::string& letter) {
    size_t t = 0;
    while (t < Pr.nletters() && Pr.letters[t] != letter) ++t;
    if (t == Pr.nletters()) throw pha_error("no such letter");
    const FieldPtr& f = Pr.field;

    // coordinates of the relations over every word they touch
    std::map<Word, size_t, WordOrder> cols;
    for (const auto& r : Pr.relations)
        for (const auto& [w, c] : r.terms()) cols.emplace(w, cols.size());
    auto coords = [&](const FreePoly& p) -> std::optional<std::vector<CycRat>> {
        std::vector<CycRat> v(cols.size(), CycRat::zero(f));
        for (const auto& [w, c] : p.terms()) {
            auto it = cols.find(w);
            if (it == cols.end()) return std::nullopt;
            v[it->second] = c.numeric();
        }
        return v;
    };
    std::vector<std::vector<CycRat>> span;
    for (const auto& r : Pr.relations) span.push_back(*coords(r));

    for (size_t l = 0; l < Pr.nletters(); ++l) {
        if (l == t) continue;
        FreePoly comm(Pr.nletters());
        comm.add_term({(int)l, (int)t}, Scalar::one(f));
        comm.add_term({(int)t, (int)l}, -Scalar::one(f));
        auto v = coords(comm);
        if (!v || !in_span(span, *v, f))
            throw pha_error("letter " + letter + " is not certified central");
    }

    std::vector<std::string> letters;
    WeightVector weights;
    for (size_t l = 0; l < Pr.nletters(); ++l)
        if (l != t) {
            letters.push_back(Pr.letters[l]);
            weights.push_back(Pr.weights[l]);
        }
    std::vector<FreePoly> relations;
    for (const auto& r : Pr.relations) {
        FreePoly s(letters.size());
        for (const auto& [w, c] : r.terms()) {
            Word cut;
            for (int x : w)
                if ((size_t)x != t) cut.push_back(x > (int)t ? x - 1 : x);
            s.add_term(cut, c);
        }
        if (!s.is_zero()) relations.push_back(std::move(s));
    }
    return make_presentation(f, std::move(letters), std::move(relations),
                             std::move(weights));
}

} // namespace pha
