#include <doctest.h>

#include "pha/quantize.hpp"

using namespace pha;

namespace {

std::vector<std::vector<Scalar>> skew_matrix(const FieldPtr& f, size_t m,
                                             std::vector<std::tuple<int, int, Rational>> c) {
    std::vector<std::vector<Scalar>> C(m, std::vector<Scalar>(m, Scalar::zero(f)));
    for (auto& [i, j, v] : c) {
        C[i][j] = Scalar(f, v);
        C[j][i] = -C[i][j];
    }
    return C;
}

// sigma_lambda applied to a quadratic free element; must vanish on kernels
Poly apply_sigma(const PoissonAlgebra& P, const CycRat& lambda, const FreePoly& k) {
    size_t m = P.nvars();
    Poly r(m);
    for (const auto& [w, c] : k.terms()) {
        Poly ui = Poly::variable(m, w[0], P.field), uj = Poly::variable(m, w[1], P.field);
        r = r + (ui * uj + P.pair_bracket(w[0], w[1]) * Scalar(lambda)) * c;
    }
    return r;
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("two-variable skew quantization") {
    auto f = make_field(2);
    auto C = skew_matrix(f, 2, {{0, 1, Rational(1)}});
    auto P = builtin_skew(f, C);
    CycRat half(f, Rational(1, 2));

    auto Q = quantization_relations(P, half);
    REQUIRE(Q.kernel_basis.size() == 1);
    CHECK(Q.generic);
    // q = (1 + 1/2)/(1 - 1/2) = 3: kernel spanned by u1u2 - 3 u2u1
    FreePoly expect(2);
    expect.add_term({0, 1}, Scalar::one(f));
    expect.add_term({1, 0}, Scalar(f, Rational(-3)));
    const FreePoly& k = Q.kernel_basis[0];
    Scalar s = k.coeff({0, 1});
    REQUIRE(!s.is_zero());
    CHECK(k * s.inverse() == expect * Scalar::one(f));

    CHECK(apply_sigma(P, half, k).is_zero());

    auto rep = verify_skew_form(Q, C, half);
    CHECK(rep.matches);
    CHECK(rep.q[0][1] == CycRat(f, Rational(3)));

    // lambda c = 1 degenerates
    auto Qd = quantization_relations(P, CycRat::one(f));
    auto repd = verify_skew_form(Qd, C, CycRat::one(f));
    CHECK(repd.degenerate);
    CHECK(!repd.matches);
}

TEST_CASE("lambda zero recovers the commutative algebra") {
    auto f = make_field(2);
    auto Pc = builtin_taft_quadratic(f, Scalar(f, Rational(1)));
    auto Q = quantization_relations(Pc, CycRat::zero(f));
    REQUIRE(Q.kernel_basis.size() == 3);
    CHECK(Q.generic);

    std::vector<std::vector<CycRat>> kernel;
    for (const auto& k : Q.kernel_basis) {
        std::vector<CycRat> v(9, CycRat::zero(f));
        for (const auto& [w, c] : k.terms()) v[w[0] * 3 + w[1]] = c.numeric();
        kernel.push_back(v);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<CycRat> comm(9, CycRat::zero(f));
            comm[i * 3 + j] = CycRat::one(f);
            comm[j * 3 + i] = -CycRat::one(f);
            CHECK(in_span(kernel, comm, f));
        }

    auto rep = verify_skew_form(Q, skew_matrix(f, 3, {}), CycRat::zero(f));
    CHECK(rep.matches);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rep.q[i][j] == CycRat::one(f));
}

TEST_CASE("rees-weyl quantization and central specialization") {
    auto f = make_field(2);
    auto R = rees(builtin_weyl(f, 1)); // vars u1, v1, t
    CycRat half(f, Rational(1, 2));
    auto Q = quantization_relations(R, half);
    REQUIRE(Q.kernel_basis.size() == 3);
    CHECK(Q.generic);

    // expected relations: u v - v u - t t, u t - t u, v t - t v
    auto mk = [&](std::vector<std::tuple<Word, Rational>> terms) {
        FreePoly p(3);
        for (auto& [w, c] : terms) p.add_term(w, Scalar(f, c));
        return p;
    };
    std::vector<FreePoly> expect{
        mk({{{0, 1}, 1}, {{1, 0}, -1}, {{2, 2}, -1}}),
        mk({{{0, 2}, 1}, {{2, 0}, -1}}),
        mk({{{1, 2}, 1}, {{2, 1}, -1}})};
    std::vector<std::vector<CycRat>> kernel;
    for (const auto& k : Q.kernel_basis) {
        std::vector<CycRat> v(9, CycRat::zero(f));
        for (const auto& [w, c] : k.terms()) v[w[0] * 3 + w[1]] = c.numeric();
        kernel.push_back(v);
        CHECK(apply_sigma(R, half, k).is_zero());
    }
    for (const auto& e : expect) {
        std::vector<CycRat> v(9, CycRat::zero(f));
        for (const auto& [w, c] : e.terms()) v[w[0] * 3 + w[1]] = c.numeric();
        CHECK(in_span(kernel, v, f));
    }

    for (int d = 0; d <= 4; ++d)
        CHECK(graded_dimension(Q.presentation, d) == (size_t)binom(d + 2, d));

    // t -> 1 yields the Weyl algebra presentation
    auto W = specialize_central(Q.presentation, "t");
    CHECK(W.letters == std::vector<std::string>{"u1", "v1"});
    REQUIRE(W.relations.size() == 1);
    FreePoly wr(2);
    wr.add_term({0, 1}, Scalar::one(f));
    wr.add_term({1, 0}, -Scalar::one(f));
    wr.add_term({}, -Scalar::one(f));
    Scalar lead = W.relations[0].coeff({1, 0});
    REQUIRE(!lead.is_zero());
    CHECK(W.relations[0] * (-lead.inverse()) == wr);
    for (int d = 0; d <= 4; ++d)
        CHECK(filtered_dimension(W, d) == (size_t)binom(d + 2, 2));

    CHECK_THROWS_AS(specialize_central(Q.presentation, "u1"), pha_error);
    CHECK_THROWS_AS(quantization_relations(builtin_weyl(f, 1), half), pha_error);
}

TEST_CASE("action transport to the quantization") {
    auto f = make_field(2);
    auto Pc = builtin_taft_quadratic(f, Scalar(f, Rational(1)));
    CycRat half(f, Rational(1, 2));
    auto Q = quantization_relations(Pc, half);
    CHECK(Q.generic);

    auto rep = verify_skew_form(
        Q, skew_matrix(f, 3, {{0, 2, Rational(1)}, {1, 2, Rational(1)}}), half);
    CHECK(rep.matches);
    CHECK(rep.q[0][2] == CycRat(f, Rational(3))); // (2+c)/(2-c) at c=1
    CHECK(rep.q[1][2] == CycRat(f, Rational(3)));
    CHECK(rep.q[0][1] == CycRat::one(f));

    auto A = taft_standard_action(Pc, 2);
    CHECK(transport_action(A, Q).ok);
    for (int d = 0; d <= 4; ++d)
        CHECK(graded_dimension(Q.presentation, d) == (size_t)binom(d + 2, d));

    // counit action always descends
    auto triv = make_action(make_group_algebra({1}, f), Pc,
                            {{Poly::variable(3, 0, f), Poly::variable(3, 1, f),
                              Poly::variable(3, 2, f)}});
    CHECK(transport_action(triv, Q).ok);

    // diagonal weight action compatible with the grading descends too
    auto z3 = make_field(3);
    auto Pz = builtin_taft_quadratic(z3, Scalar(z3, Rational(1)));
    auto Qz = quantization_relations(Pz, CycRat(z3, Rational(1, 2)));
    auto wact = make_action(
        make_group_algebra({3}, z3), Pz,
        {{Poly::variable(3, 0, z3) * Scalar(CycRat::zeta(z3)),
          Poly::variable(3, 1, z3) * Scalar(CycRat::zeta(z3)),
          Poly::variable(3, 2, z3)}});
    CHECK(verify_module_poisson(wact, 3).ok);
    CHECK(transport_action(wact, Qz).ok);

    // an action that breaks the bracket fails to descend
    auto W = builtin_weyl(f, 1);
    auto Qw = quantization_relations(rees(W), half);
    auto bad = make_action(
        make_group_algebra({2}, f), rees(W),
        {{Poly::variable(3, 0, f) * Scalar(f, Rational(-1)), Poly::variable(3, 1, f),
          Poly::variable(3, 2, f)}});
    auto brep = transport_action(bad, Qw);
    CHECK(!brep.ok);
    CHECK(brep.failures[0].axiom == "transport");
}
