#include <doctest.h>

#include "pha/poisson.hpp"

#include <random>

using namespace pha;

namespace {

Poly rand_poly(const FieldPtr& f, size_t nvars, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(-4, 4), deg(0, maxdeg);
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

} // namespace

TEST_CASE("builtin constructors") {
    auto f = make_field(2);
    auto W = builtin_weyl(f, 1);
    CHECK(W.vars == std::vector<std::string>{"u1", "v1"});
    CHECK(W.table[0][1] == Poly::constant(2, Scalar::one(f)));

    auto Pc = builtin_taft_quadratic(f, Scalar::parameter(f, "c"));
    CHECK(Pc.table[0][1].is_zero());
    CHECK(Pc.table[0][2] == parse_poly("c*u1*u3", Pc.vars, {"c"}, f));
    CHECK(Pc.table[1][2] == parse_poly("c*u2*u3", Pc.vars, {"c"}, f));

    std::vector<std::vector<Scalar>> zero(3, std::vector<Scalar>(3, Scalar::zero(f)));
    auto S0 = builtin_skew(f, zero);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) CHECK(S0.table[i][j].is_zero());
}

TEST_CASE("bracket evaluation") {
    auto f = make_field(2);
    auto W = builtin_weyl(f, 1);
    Poly u = Poly::variable(2, 0, f), v = Poly::variable(2, 1, f);
    CHECK(bracket(W, u, v) == Poly::constant(2, Scalar::one(f)));

    auto Pc = builtin_taft_quadratic(f, Scalar::parameter(f, "c"));
    for (int n : {1, 2, 5}) {
        Poly u1n = parse_poly("u1^" + std::to_string(n), Pc.vars, {}, f);
        Poly u3 = Poly::variable(3, 2, f);
        Poly expect = parse_poly(std::to_string(n) + "*c*u1^" + std::to_string(n) + "*u3",
                                 Pc.vars, {"c"}, f);
        CHECK(bracket(Pc, u1n, u3) == expect);
    }

    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        Poly a = rand_poly(f, 3, 3, rng), b = rand_poly(f, 3, 3, rng),
             c = rand_poly(f, 3, 3, rng);
        CHECK(bracket(Pc, a, a).is_zero());
        CHECK(bracket(Pc, a, b) == -bracket(Pc, b, a));
        // Leibniz in the second slot
        CHECK(bracket(Pc, a, b * c) == bracket(Pc, a, b) * c + b * bracket(Pc, a, c));
    }
}

TEST_CASE("jacobi") {
    auto f = make_field(2);
    CHECK(check_jacobi(builtin_taft_quadratic(f, Scalar::parameter(f, "c"))).ok);
    CHECK(check_jacobi(builtin_taft_linear(f)).ok);
    CHECK(check_jacobi(builtin_weyl(f, 2)).ok);
    std::vector<std::vector<Scalar>> zero(2, std::vector<Scalar>(2, Scalar::zero(f)));
    CHECK(check_jacobi(builtin_skew(f, zero)).ok);

    // {u1,u2}=u3, {u1,u3}=u1, {u2,u3}=u1 violates Jacobi; by hand
    // J(u1,u2,u3) = {u1,u1} + {u2,-u1} + {u3,u3} = {u1,u2} = u3
    std::vector<std::vector<Poly>> table(3, std::vector<Poly>(3, Poly(3)));
    table[0][1] = parse_poly("u3", {"u1", "u2", "u3"}, {}, f);
    table[0][2] = parse_poly("u1", {"u1", "u2", "u3"}, {}, f);
    table[1][2] = parse_poly("u1", {"u1", "u2", "u3"}, {}, f);
    auto bad = make_poisson(f, {"u1", "u2", "u3"}, {1, 1, 1}, table);
    auto rep = check_jacobi(bad);
    CHECK(!rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].i == 0);
    CHECK(rep.failures[0].j == 1);
    CHECK(rep.failures[0].k == 2);
    CHECK(rep.failures[0].residual == Poly::variable(3, 2, f));
}

TEST_CASE("modular derivation") {
    auto f = make_field(2);
    for (size_t n : {1, 2, 3}) {
        CHECK(is_unimodular(builtin_weyl(f, n)));
        CHECK(is_unimodular(rees(builtin_weyl(f, n))));
    }

    auto L = builtin_taft_linear(f);
    auto phi = modular_derivation(L);
    CHECK(phi.images[0].is_zero());
    CHECK(phi.images[1].is_zero());
    CHECK(phi.images[2] == Poly::constant(3, Scalar(f, Rational(-2))));
    CHECK(!is_unimodular(L));

    auto Pc = builtin_taft_quadratic(f, Scalar::parameter(f, "c"));
    auto phic = modular_derivation(Pc);
    CHECK(phic.images[0] == parse_poly("c*u1", Pc.vars, {"c"}, f));
    CHECK(phic.images[1] == parse_poly("c*u2", Pc.vars, {"c"}, f));
    CHECK(phic.images[2] == parse_poly("-2*c*u3", Pc.vars, {"c"}, f));
    CHECK(is_unimodular(builtin_taft_quadratic(f, Scalar::zero(f))));

    // phi is an algebra derivation and a Lie derivation
    std::mt19937 rng(41);
    auto apply = [&](const Derivation& d, const Poly& p) { return d.apply(L, p); };
    for (int i = 0; i < 8; ++i) {
        Poly a = rand_poly(f, 3, 3, rng), b = rand_poly(f, 3, 3, rng);
        CHECK(apply(phi, a * b) == apply(phi, a) * b + a * apply(phi, b));
        CHECK(apply(phi, bracket(L, a, b)) ==
              bracket(L, apply(phi, a), b) + bracket(L, a, apply(phi, b)));
    }
}

TEST_CASE("rees and associated graded") {
    auto f = make_field(2);
    for (size_t n : {1, 2}) {
        auto R = rees(builtin_weyl(f, n));
        size_t m = 2 * n;
        CHECK(R.vars.back() == "t");
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                Poly expect(m + 1);
                if (j == i + 1 && i % 2 == 0)
                    expect = parse_poly("t^2", R.vars, {}, f);
                CHECK(R.table[i][j] == expect);
            }
        for (size_t i = 0; i <= m; ++i) CHECK(R.pair_bracket(i, m).is_zero());

        auto G = assoc_graded(builtin_weyl(f, n));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) CHECK(G.table[i][j].is_zero());
    }

    auto RL = rees(builtin_taft_linear(f));
    CHECK(RL.table[1][2] == parse_poly("u2*t", RL.vars, {}, f));
    CHECK(RL.table[0][2] == parse_poly("u1*t", RL.vars, {}, f));

    // rees then t=1 restores the table; assoc_graded = rees at t=0
    for (int choice = 0; choice < 6; ++choice) {
        auto P = builtin_filtered2(f, choice, Scalar(f, Rational(3)));
        auto R = rees(P);
        auto G = assoc_graded(P);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = i + 1; j < 2; ++j) {
                CHECK(R.table[i][j].set_last_var(Scalar::one(f)) == P.table[i][j]);
                CHECK(R.table[i][j].set_last_var(Scalar::zero(f)) == G.table[i][j]);
            }
    }

    auto G2 = assoc_graded(builtin_filtered2(f, 3, Scalar::one(f)));
    CHECK(G2.table[0][1] == parse_poly("u1^2", {"u1", "u2"}, {}, f));
    // graded-quadratic algebras are their own associated graded
    auto Pc = builtin_taft_quadratic(f, Scalar(f, Rational(2)));
    CHECK(assoc_graded(Pc).table[1][2] == Pc.table[1][2]);

    // filtration violation
    std::vector<std::vector<Poly>> table(2, std::vector<Poly>(2, Poly(2)));
    table[0][1] = parse_poly("u1^3", {"u1", "u2"}, {}, f);
    auto bad = make_poisson(f, {"u1", "u2"}, {1, 1}, table);
    CHECK_THROWS_AS(rees(bad), pha_error);
    CHECK_THROWS_AS(assoc_graded(bad), pha_error);
}

TEST_CASE("weight grading checks") {
    auto f = make_field(2);
    std::vector<std::vector<Scalar>> c(2, std::vector<Scalar>(2, Scalar::zero(f)));
    c[0][1] = Scalar(f, Rational(5));
    c[1][0] = -c[0][1];
    auto S = builtin_skew(f, c);
    CHECK(check_weight_grading(S, {1, -1}));

    auto W = builtin_weyl(f, 1);
    CHECK(check_weight_grading(W, {1, -1}));  // {u,v}=1 has z-degree 0 = 1 + (-1)
    CHECK(!check_weight_grading(W, {1, 1}));

    std::vector<std::vector<Scalar>> z(2, std::vector<Scalar>(2, Scalar::zero(f)));
    CHECK(check_weight_grading(builtin_skew(f, z), {7, -3}));
}
