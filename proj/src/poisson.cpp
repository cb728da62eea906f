#include "pha/poisson.hpp"

namespace pha {

Poly PoissonAlgebra::pair_bracket(size_t i, size_t j) const {
    if (i == j) return Poly(nvars());
    if (i < j) return table[i][j];
    return -table[j][i];
}

Poly Derivation::apply(const PoissonAlgebra& P, const Poly& f) const {
    Poly r(P.nvars());
    for (size_t i = 0; i < P.nvars(); ++i) r = r + f.derivative(i) * images[i];
    return r;
}

bool Derivation::is_zero() const {
    for (const auto& p : images)
        if (!p.is_zero()) return false;
    return true;
}

PoissonAlgebra make_poisson(FieldPtr field, std::vector<std::string> vars,
                            WeightVector weights, std::vector<std::vector<Poly>> table) {
    size_t m = vars.size();
    if (weights.empty()) weights.assign(m, 1);
    if (weights.size() != m) throw pha_error("weight vector arity mismatch");
    for (int w : weights)
        if (w < 1) throw pha_error("weights must be positive");
    if (table.size() != m) throw pha_error("bracket table must be square");
    for (size_t i = 0; i < m; ++i) {
        if (table[i].size() != m) throw pha_error("bracket table must be square");
        for (size_t j = i + 1; j < m; ++j)
            if (!table[i][j].is_zero() && table[i][j].nvars() != m)
                throw pha_error("bracket entry uses undeclared variables");
    }
    return PoissonAlgebra{std::move(field), std::move(vars), std::move(weights),
                          std::move(table)};
}

namespace {

std::vector<std::vector<Poly>> empty_table(size_t m) {
    return std::vector<std::vector<Poly>>(m, std::vector<Poly>(m, Poly(m)));
}

} // namespace

PoissonAlgebra builtin_weyl(FieldPtr field, size_t n) {
    size_t m = 2 * n;
    std::vector<std::string> vars;
    for (size_t i = 1; i <= n; ++i) {
        vars.push_back("u" + std::to_string(i));
        vars.push_back("v" + std::to_string(i));
    }
    auto table = empty_table(m);
    for (size_t i = 0; i < n; ++i)
        table[2 * i][2 * i + 1] = Poly::constant(m, Scalar::one(field));
    return make_poisson(field, vars, WeightVector(m, 1), table);
}

PoissonAlgebra builtin_skew(FieldPtr field, const std::vector<std::vector<Scalar>>& c) {
    size_t m = c.size();
    for (const auto& row : c)
        if (row.size() != m) throw pha_error("skew matrix must be square");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!(c[i][j] + c[j][i]).is_zero())
                throw pha_error("matrix is not skew-symmetric");
    std::vector<std::string> vars;
    for (size_t i = 1; i <= m; ++i) vars.push_back("u" + std::to_string(i));
    auto table = empty_table(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            Poly p = Poly::variable(m, i, field) * Poly::variable(m, j, field) * c[i][j];
            table[i][j] = p;
        }
    return make_poisson(field, vars, WeightVector(m, 1), table);
}

PoissonAlgebra builtin_taft_linear(FieldPtr field) {
    std::vector<std::string> vars{"u1", "u2", "u3"};
    auto table = empty_table(3);
    table[1][2] = Poly::variable(3, 1, field); // {u2,u3} = u2
    table[0][2] = Poly::variable(3, 0, field); // {u1,u3} = u1
    return make_poisson(field, vars, WeightVector(3, 1), table);
}

PoissonAlgebra builtin_taft_quadratic(FieldPtr field, const Scalar& c) {
    std::vector<std::string> vars{"u1", "u2", "u3"};
    auto table = empty_table(3);
    Poly u1 = Poly::variable(3, 0, field), u2 = Poly::variable(3, 1, field),
         u3 = Poly::variable(3, 2, field);
    table[1][2] = u2 * u3 * c; // {u2,u3} = c u2 u3
    table[0][2] = u1 * u3 * c; // {u1,u3} = c u1 u3
    return make_poisson(field, vars, WeightVector(3, 1), table);
}

PoissonAlgebra builtin_filtered2(FieldPtr field, int choice, const Scalar& q) {
    std::vector<std::string> vars{"u1", "u2"};
    Poly u1 = Poly::variable(2, 0, field), u2 = Poly::variable(2, 1, field);
    Poly one = Poly::constant(2, Scalar::one(field));
    Poly f;
    switch (choice) {
    case 0: f = one; break;
    case 1: f = u1; break;
    case 2: f = u1 * u1; break;
    case 3: f = u1 * u1 + one; break;
    case 4: f = (u1 * u2) * q; break;
    case 5: f = (u1 * u2) * q + one; break;
    default: throw pha_error("filtered2 choice must be 0..5");
    }
    auto table = empty_table(2);
    table[0][1] = f;
    return make_poisson(field, vars, WeightVector(2, 1), table);
}

Poly bracket(const PoissonAlgebra& P, const Poly& f, const Poly& g) {
    size_t m = P.nvars();
    Poly r(m);
    std::vector<Poly> df(m), dg(m);
    for (size_t i = 0; i < m; ++i) {
        df[i] = f.derivative(i);
        dg[i] = g.derivative(i);
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            const Poly& fij = P.table[i][j];
            if (fij.is_zero()) continue;
            r = r + (df[i] * dg[j] - df[j] * dg[i]) * fij;
        }
    }
    return r;
}

JacobiReport check_jacobi(const PoissonAlgebra& P) {
    JacobiReport rep;
    size_t m = P.nvars();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Poly ui = Poly::variable(m, i, P.field);
                Poly uj = Poly::variable(m, j, P.field);
                Poly uk = Poly::variable(m, k, P.field);
                Poly res = bracket(P, ui, bracket(P, uj, uk)) +
                           bracket(P, uj, bracket(P, uk, ui)) +
                           bracket(P, uk, bracket(P, ui, uj));
                if (!res.is_zero()) {
                    rep.ok = false;
                    rep.failures.push_back({i, j, k, res});
                }
            }
    return rep;
}

Derivation modular_derivation(const PoissonAlgebra& P) {
    size_t m = P.nvars();
    Derivation d;
    for (size_t i = 0; i < m; ++i) {
        Poly img(m);
        for (size_t j = 0; j < m; ++j) img = img + P.pair_bracket(i, j).derivative(j);
        d.images.push_back(img);
    }
    return d;
}

bool is_unimodular(const PoissonAlgebra& P) { return modular_derivation(P).is_zero(); }

bool is_filtered(const PoissonAlgebra& P) {
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j) {
            const Poly& f = P.table[i][j];
            if (!f.is_zero() &&
                f.weighted_degree(P.weights) > P.weights[i] + P.weights[j])
                return false;
        }
    return true;
}

PoissonAlgebra rees(const PoissonAlgebra& P) {
    if (!is_filtered(P)) throw pha_error("filtration violated: bracket degree too high");
    size_t m = P.nvars();
    std::vector<std::string> vars = P.vars;
    vars.push_back("t");
    WeightVector w = P.weights;
    w.push_back(1);
    auto table = empty_table(m + 1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            if (P.table[i][j].is_zero()) continue;
            table[i][j] = P.table[i][j].homogenize(P.weights, P.weights[i] + P.weights[j]);
        }
    return make_poisson(P.field, vars, w, table);
}

PoissonAlgebra assoc_graded(const PoissonAlgebra& P) {
    if (!is_filtered(P)) throw pha_error("filtration violated: bracket degree too high");
    size_t m = P.nvars();
    auto table = empty_table(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto parts = P.table[i][j].graded_parts(P.weights);
            long top = P.weights[i] + P.weights[j];
            auto it = parts.find(top);
            if (it != parts.end()) table[i][j] = it->second;
        }
    return make_poisson(P.field, P.vars, P.weights, table);
}

bool check_weight_grading(const PoissonAlgebra& P, const std::vector<int>& z_weights) {
    if (z_weights.size() != P.nvars()) throw pha_error("z-weight arity mismatch");
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j) {
            const Poly& f = P.table[i][j];
            if (f.is_zero()) continue;
            long target = z_weights[i] + z_weights[j];
            for (const auto& [mono, c] : f.terms()) {
                long d = 0;
                for (size_t k = 0; k < mono.e.size(); ++k)
                    d += (long)mono.e[k] * z_weights[k];
                if (d != target) return false;
            }
        }
    return true;
}

bool is_graded_quadratic(const PoissonAlgebra& P) {
    for (int w : P.weights)
        if (w != 1) return false;
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j) {
            const Poly& f = P.table[i][j];
            if (!f.is_zero() && !f.is_homogeneous(P.weights, 2)) return false;
        }
    return true;
}

} // namespace pha
