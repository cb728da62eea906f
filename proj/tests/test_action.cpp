#include <doctest.h>

#include "pha/action.hpp"

using namespace pha;

namespace {

const std::vector<std::string> U3{"u1", "u2", "u3"};

PoissonAlgebra trivial_plane(const FieldPtr& f) {
    std::vector<std::vector<Scalar>> zero(2, std::vector<Scalar>(2, Scalar::zero(f)));
    return builtin_skew(f, zero);
}

// multiplicative-group example of section 5: {u1,u2}=u1u2, {u1,u3}=u1u3,
// {u2,u3}=-u2u3, with g:(u1,u2,-u3) and x:(0,0,u1u2) for the Sweedler algebra
HopfAction sweedler_example(const FieldPtr& f2) {
    std::vector<std::vector<Poly>> table(3, std::vector<Poly>(3, Poly(3)));
    table[0][1] = parse_poly("u1*u2", U3, {}, f2);
    table[0][2] = parse_poly("u1*u3", U3, {}, f2);
    table[1][2] = parse_poly("-u2*u3", U3, {}, f2);
    auto P = make_poisson(f2, U3, {1, 1, 1}, table);
    auto H = make_taft(2, f2);
    std::vector<Poly> g_row{parse_poly("u1", U3, {}, f2), parse_poly("u2", U3, {}, f2),
                            parse_poly("-u3", U3, {}, f2)};
    std::vector<Poly> x_row{Poly(3), Poly(3), parse_poly("u1*u2", U3, {}, f2)};
    return make_action(H, P, {g_row, x_row});
}

} // namespace

TEST_CASE("standard taft action table and extension to monomials") {
    auto f = make_field(3);
    auto A = taft_standard_action(trivial_plane(f), 3);
    auto lam_inv = Scalar(A.hopf.lambda().inverse());
    std::vector<std::string> uv{"u1", "u2"};

    CHECK(A.gen_actions[0][0] == Poly::variable(2, 0, f) * lam_inv);
    CHECK(A.gen_actions[0][1] == Poly::variable(2, 1, f));
    CHECK(A.gen_actions[1][0] == Poly::variable(2, 1, f));
    CHECK(A.gen_actions[1][1].is_zero());

    // x.(u1^2) = g(u1)x(u1) + x(u1)u1 = (lambda^{-1} + 1) u1 u2
    int xi = 1; // basis index of x
    Poly u1sq = parse_poly("u1^2", uv, {}, f);
    CHECK(act_basis(A, xi, u1sq) ==
          parse_poly("u1*u2", uv, {}, f) * (lam_inv + Scalar::one(f)));

    // grouplike g acts on monomials by a scalar
    int gi = 3; // basis index of g
    for (const char* s : {"u1^2", "u1*u2", "u2^3"}) {
        Poly mono = parse_poly(s, uv, {}, f);
        Poly img = act_basis(A, gi, mono);
        REQUIRE(img.terms().size() == 1);
        CHECK(img.terms().begin()->first == mono.terms().begin()->first);
    }

    CHECK_THROWS_AS(taft_standard_action(builtin_weyl(f, 0), 3), pha_error);
}

TEST_CASE("verification: compatible and incompatible brackets") {
    auto f = make_field(2);
    auto Pc = builtin_taft_quadratic(f, Scalar::parameter(f, "c"));
    auto A = taft_standard_action(Pc, 2);
    CHECK(verify_module_poisson(A, 3).ok);

    // {u1,u2}=1 is not compatible: g.{u1,u2} = 1 but {g u1, g u2} = lambda^{-1}
    auto W = taft_standard_action(builtin_weyl(f, 1), 2);
    auto rep = verify_module_poisson(W, 2);
    CHECK(!rep.ok);
    bool poisson_failure = false;
    for (const auto& fail : rep.failures)
        if (fail.axiom == "poisson") poisson_failure = true;
    CHECK(poisson_failure);

    auto S = sweedler_example(f);
    Poly u3sq = parse_poly("u3^2", U3, {}, f);
    CHECK(act_basis(S, 1, u3sq).is_zero()); // x.u3^2 = -u3 u1u2 + u1u2 u3 = 0
    CHECK(verify_module_poisson(S, 3).ok);
}

TEST_CASE("fixed subspaces") {
    for (unsigned n : {2u, 3u}) {
        auto f = make_field(n);
        auto A = taft_standard_action(trivial_plane(f), n);
        for (int d = 0; d <= 3 * (int)n; ++d) {
            auto basis = fixed_subspace(A, d);
            size_t expect = (size_t)(d / (int)n) + 1; // u1-exponent divisible by n
            CHECK(basis.size() == expect);
            for (const auto& p : basis)
                for (const auto& [m, c] : p.terms()) CHECK(m.e[0] % (int)n == 0);
        }
    }

    // trivial Hopf algebra fixes everything
    auto f = make_field(2);
    auto triv = make_group_algebra({1}, f);
    auto P = trivial_plane(f);
    auto T = make_action(triv, P,
                         {{Poly::variable(2, 0, f), Poly::variable(2, 1, f)}});
    CHECK(fixed_subspace(T, 3).size() == monomials_of_degree(2, 3).size());

    // sign action of kZ_2 on k[u]: odd degrees have no invariants
    std::vector<std::vector<Scalar>> z1(1, std::vector<Scalar>(1, Scalar::zero(f)));
    auto line = builtin_skew(f, z1);
    auto sgn = make_action(make_group_algebra({2}, f), line,
                           {{-Poly::variable(1, 0, f)}});
    CHECK(fixed_subspace(sgn, 3).empty());
    CHECK(fixed_subspace(sgn, 4).size() == 1);
}

TEST_CASE("fixed ring report") {
    auto f = make_field(2);
    auto A = taft_standard_action(builtin_taft_linear(f), 2);
    auto rep = fixed_ring_report(A, 4);
    REQUIRE(rep.generators.size() == 3);
    CHECK(rep.poisson_closed);
    CHECK(rep.expressed);

    // generator set is {u2, u3, u1^2}, discovered in degree order
    Poly u2 = parse_poly("u2", U3, {}, f), u3 = parse_poly("u3", U3, {}, f),
         u1n = parse_poly("u1^2", U3, {}, f);
    size_t i2 = 99, i3 = 99, i1 = 99;
    for (size_t k = 0; k < 3; ++k) {
        if (rep.generators[k] == u2) i2 = k;
        if (rep.generators[k] == u3) i3 = k;
        if (rep.generators[k] == u1n) i1 = k;
    }
    REQUIRE(i2 < 3);
    REQUIRE(i3 < 3);
    REQUIRE(i1 < 3);
    CHECK(i1 == 2); // u1^2 appears after the degree-1 generators

    // {u2,u3} = u2 and {u1^2,u3} = 2 u1^2; rewritten brackets reproduce the
    // raw ones under substitution by the generators
    CHECK(bracket(A.algebra, u2, u3) == u2);
    CHECK(bracket(A.algebra, u1n, u3) == u1n + u1n);
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b)
            CHECK(rep.table[a][b].substitute(rep.generators, f) == rep.raw_table[a][b]);

    // quadratic family: {u1^n, u3} = n c u1^n u3 survives with the parameter
    auto Ac = taft_standard_action(builtin_taft_quadratic(f, Scalar::parameter(f, "c")), 2);
    auto repc = fixed_ring_report(Ac, 4);
    REQUIRE(repc.generators.size() == 3);
    CHECK(repc.poisson_closed);
    CHECK(repc.expressed);
    CHECK(bracket(Ac.algebra, u1n, u3) ==
          parse_poly("2*c*u1^2*u3", U3, {"c"}, f));
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b)
            CHECK(repc.table[a][b].substitute(repc.generators, f) == repc.raw_table[a][b]);

    // fixed elements bracket-close: h.{a,b} = eps(h){a,b} on sampled pairs
    auto deg2 = fixed_subspace(A, 2);
    for (const auto& a : deg2)
        for (const auto& b : fixed_subspace(A, 4)) {
            Poly br = bracket(A.algebra, a, b);
            for (size_t h = 0; h < A.hopf.dim(); ++h)
                CHECK(act_basis(A, (int)h, br) == br * Scalar(A.hopf.counit[h]));
        }
}

TEST_CASE("extension to the rees algebra") {
    auto f = make_field(2);
    auto A = taft_standard_action(builtin_taft_linear(f), 2);
    auto R = extend_action_to_rees(A);
    CHECK(R.algebra.vars.back() == "t");
    // g(t) = t, x(t) = 0
    CHECK(R.gen_actions[0][3] == Poly::variable(4, 3, f));
    CHECK(R.gen_actions[1][3].is_zero());
    CHECK(verify_module_poisson(R, 3).ok);

    // restriction to t = 1 recovers the original generator images
    for (size_t k = 0; k < 2; ++k)
        for (size_t i = 0; i < 3; ++i)
            CHECK(R.gen_actions[k][i].set_last_var(Scalar::one(f)) == A.gen_actions[k][i]);

    // symplectic-diagonal group action on the weyl bracket extends too
    auto f3 = make_field(3);
    auto W = builtin_weyl(f3, 1);
    auto z = CycRat::zeta(f3);
    auto G = make_action(make_group_algebra({3}, f3), W,
                         {{Poly::variable(2, 0, f3) * Scalar(z),
                           Poly::variable(2, 1, f3) * Scalar(z.pow(2))}});
    CHECK(verify_module_poisson(G, 3).ok);
    CHECK(verify_module_poisson(extend_action_to_rees(G), 3).ok);

    // filtration violation: x(u1) of degree 2 cannot extend
    auto bad = make_action(A.hopf, A.algebra,
                           {A.gen_actions[0],
                            {parse_poly("u2^2", U3, {}, f), Poly(3), Poly(3)}});
    CHECK_THROWS_AS(extend_action_to_rees(bad), pha_error);
}

TEST_CASE("inner faithfulness for taft actions") {
    auto f = make_field(2);
    auto P = trivial_plane(f);
    auto A = taft_standard_action(P, 2);
    CHECK(taft_inner_faithful(A));

    // x acting by zero factors through the group algebra
    auto nox = make_action(A.hopf, P, {A.gen_actions[0], {Poly(2), Poly(2)}});
    CHECK(!taft_inner_faithful(nox));

    // g acting as the identity has no eigenvalue of order n
    auto nog = make_action(A.hopf, P,
                           {{Poly::variable(2, 0, f), Poly::variable(2, 1, f)},
                            A.gen_actions[1]});
    CHECK(!taft_inner_faithful(nog));

    auto grp = make_action(make_group_algebra({2}, f), P,
                           {{Poly::variable(2, 0, f), Poly::variable(2, 1, f)}});
    CHECK_THROWS_AS(taft_inner_faithful(grp), pha_error);
}

TEST_CASE("module-comodule duality") {
    auto f = make_field(3);
    auto P = trivial_plane(f);
    auto H = make_group_algebra({3}, f);

    // diagonal coaction rho(u_i) = u_i (x) g^{z_i}: the character
    // sum_a zeta^a e_a^* acts on u_i by zeta^{z_i}
    std::vector<int> zw{1, 2};
    std::vector<std::vector<Poly>> images(2, std::vector<Poly>(3, Poly(2)));
    for (size_t i = 0; i < 2; ++i) images[i][zw[i]] = Poly::variable(2, i, f);
    auto D = dualize_coaction(Coaction{H, P, images});
    std::vector<CycRat> chi;
    for (int a = 0; a < 3; ++a) chi.push_back(CycRat::zeta(f).pow(a));
    for (size_t i = 0; i < 2; ++i)
        CHECK(act(D, chi, Poly::variable(2, i, f)) ==
              Poly::variable(2, i, f) * Scalar(CycRat::zeta(f).pow(zw[i])));

    // trivial coaction rho(a) = a (x) 1 dualizes to the counit action
    std::vector<std::vector<Poly>> triv(2, std::vector<Poly>(3, Poly(2)));
    for (size_t i = 0; i < 2; ++i) triv[i][0] = Poly::variable(2, i, f);
    auto E = dualize_coaction(Coaction{H, P, triv});
    for (size_t a = 0; a < E.hopf.dim(); ++a)
        for (size_t i = 0; i < 2; ++i)
            CHECK(act_basis(E, (int)a, Poly::variable(2, i, f)) ==
                  Poly::variable(2, i, f) * Scalar(E.hopf.counit[a]));

    // round-trip preserves the basis-level action table
    auto A = taft_standard_action(P, 3);
    auto back = dualize_coaction(dualize_action(A));
    for (size_t h = 0; h < A.hopf.dim(); ++h)
        for (size_t i = 0; i < 2; ++i)
            CHECK(act_basis(back, (int)h, Poly::variable(2, i, f)) ==
                  act_basis(A, (int)h, Poly::variable(2, i, f)));
}
