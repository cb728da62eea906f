#include <doctest.h>

#include "pha/matrix.hpp"
#include "pha/poly.hpp"

#include <random>

using namespace pha;

namespace {

const std::vector<std::string> U3{"u1", "u2", "u3"};

Poly random_poly(const FieldPtr& f, size_t nvars, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), coef(-5, 5), deg(0, maxdeg);
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

TEST_CASE("parsing") {
    auto f = make_field(2);
    CHECK(parse_poly("u1*u2 - u2*u1", U3, {}, f).is_zero());

    Poly p = parse_poly("c*u2*u3", U3, {"c"}, f);
    CHECK(p.terms().size() == 1);

    Poly q = parse_poly("u1^2+1", U3, {}, f);
    CHECK(q.terms().size() == 2);

    CHECK_THROWS_AS(parse_poly("u9", U3, {}, f), pha_error);
    CHECK_THROWS_AS(parse_poly("u1 +* u2", U3, {}, f), pha_error);

    // round-trip through printing
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        Poly r = random_poly(f, 3, 4, rng);
        CHECK(parse_poly(r.to_string(U3), U3, {}, f) == r);
    }
}

TEST_CASE("ring operations") {
    auto f = make_field(2);
    Poly fp = parse_poly("u1^2*u3 + 2*u2", U3, {}, f);
    CHECK(fp * Poly::constant(3, Scalar::one(f)) == fp);

    // substitution u3 -> -(b*u2 + c*u3) in c*u2*u3
    Poly target = parse_poly("c*u2*u3", U3, {"b", "c"}, f);
    std::vector<Poly> images{Poly::variable(3, 0, f), Poly::variable(3, 1, f),
                             -parse_poly("b*u2 + c*u3", U3, {"b", "c"}, f)};
    Poly subbed = target.substitute(images, f);
    CHECK(subbed == -(parse_poly("c*u2", U3, {"b", "c"}, f) *
                      parse_poly("b*u2 + c*u3", U3, {"b", "c"}, f)));

    CHECK(parse_poly("(u1+u2)^2", U3, {}, f) == parse_poly("u1^2+2*u1*u2+u2^2", U3, {}, f));
}

TEST_CASE("derivatives") {
    auto f = make_field(2);
    for (int n : {1, 2, 5}) {
        Poly p = parse_poly("u1^" + std::to_string(n), U3, {}, f);
        Poly expect =
            parse_poly(std::to_string(n) + "*u1^" + std::to_string(n - 1), U3, {}, f);
        CHECK(p.derivative(0) == expect);
    }
    std::vector<std::string> vt{"v1", "t"};
    CHECK(parse_poly("t^2", vt, {}, f).derivative(0).is_zero());
    CHECK(parse_poly("u1*u2", U3, {}, f).derivative(1) == parse_poly("u1", U3, {}, f));

    // Leibniz on random pairs
    std::mt19937 rng(21);
    for (int i = 0; i < 12; ++i) {
        Poly a = random_poly(f, 3, 3, rng), b = random_poly(f, 3, 3, rng);
        for (size_t v = 0; v < 3; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("grading and homogenization") {
    auto f = make_field(2);
    WeightVector w{1};
    std::vector<std::string> u{"u1"};

    // homogenize(1, d=2) = t^2; homogenize(u1, d=2) = u1*t (t-degree oracle:
    // every term must reach total degree 2)
    Poly one = Poly::constant(1, Scalar::one(f));
    Poly h = one.homogenize(w, 2);
    CHECK(h == parse_poly("t^2", {"u1", "t"}, {}, f));
    Poly hu = Poly::variable(1, 0, f).homogenize(w, 2);
    CHECK(hu == parse_poly("u1*t", {"u1", "t"}, {}, f));
    for (const auto& [m, c] : hu.terms()) CHECK(m.degree() == 2);

    auto parts = parse_poly("u1^2+1", u, {}, f).graded_parts(w);
    CHECK(parts.size() == 2);
    CHECK(parts.at(0) == one);
    CHECK(parts.at(2) == parse_poly("u1^2", u, {}, f));

    CHECK_THROWS_AS(parse_poly("u1^3", u, {}, f).homogenize(w, 2), pha_error);

    // parts sum to the polynomial; homogenize at t=1 restores input
    std::mt19937 rng(5);
    WeightVector w3{1, 2, 1};
    for (int i = 0; i < 10; ++i) {
        Poly p = random_poly(f, 3, 4, rng);
        Poly sum(3);
        for (const auto& [d, part] : p.graded_parts(w3)) sum = sum + part;
        CHECK(sum == p);
        long top = std::max(0L, p.weighted_degree(w3));
        CHECK(p.homogenize(w3, top).set_last_var(Scalar::one(f)) == p);
    }
}

TEST_CASE("nullspace and rank") {
    auto f = make_field(2);
    ExactMatrix id(3, 3, f);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Scalar::one(f);
    CHECK(id.rank() == 3);
    CHECK(id.nullspace().empty());

    ExactMatrix row(1, 2, f);
    row.at(0, 0) = Scalar::one(f);
    row.at(0, 1) = Scalar::one(f);
    auto ns = row.nullspace();
    REQUIRE(ns.size() == 1);
    // RREF kernel vector for [1 1] is (-1, 1)
    CHECK(ns[0][0] == -CycRat::one(f));
    CHECK(ns[0][1] == CycRat::one(f));

    // random matrices: Mv = 0 and rank-nullity
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        size_t r = dim(rng), c = dim(rng);
        ExactMatrix M(r, c, f);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) M.at(i, j) = Scalar(f, Rational(entry(rng)));
        auto basis = M.nullspace();
        CHECK(M.rank() + basis.size() == c);
        for (const auto& v : basis)
            for (size_t i = 0; i < r; ++i) {
                CycRat dot = CycRat::zero(f);
                for (size_t j = 0; j < c; ++j)
                    if (!M.at(i, j).is_zero()) dot = dot + M.at(i, j).numeric() * v[j];
                CHECK(dot.is_zero());
            }
    }

    ExactMatrix bad(1, 1, f);
    bad.at(0, 0) = Scalar::parameter(f, "b");
    CHECK_THROWS_AS(bad.rank(), pha_error);
}
