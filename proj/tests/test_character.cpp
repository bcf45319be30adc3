#include "weylkit/character.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace weylkit;

namespace {

// The 7 weights of the first fundamental Weyl module for G2: the six short
// roots plus zero, all with multiplicity one.
FormalCharacter seven_dim(const RootSystemPtr& g2) {
    FormalCharacter c(g2);
    for (const auto& w : {Weight{-2, 1}, Weight{-1, 0}, Weight{-1, 1}, Weight{0, 0}, Weight{1, -1},
                          Weight{1, 0}, Weight{2, -1}})
        c.add(w, 1);
    return c;
}

}  // namespace

TEST_CASE("character accumulation and sparsity") {
    auto g2 = RootSystem::named("G2");
    FormalCharacter c(g2);
    CHECK(c.empty());
    c.add(Weight{1, 0}, 2);
    c.add(Weight{1, 0}, -2);
    CHECK(c.empty());
    c.add(Weight{0, 1}, 3);
    c.add(Weight{1, 1}, 0);
    CHECK(c.terms().size() == 1);
    CHECK(c.multiplicity(Weight{0, 1}) == 3);
    CHECK(c.multiplicity(Weight{5, 5}) == 0);
    CHECK(c.dimension() == 3);
    CHECK(c.is_effective());
    c.add(Weight{2, 2}, -1);
    CHECK_FALSE(c.is_effective());
}

TEST_CASE("tensor products of monomials") {
    auto g2 = RootSystem::named("G2");
    auto x = FormalCharacter::monomial(g2, Weight{1, 0});
    auto y = FormalCharacter::monomial(g2, Weight{0, 1}, 2);
    auto p = x * y;
    CHECK(p.terms().size() == 1);
    CHECK(p.multiplicity(Weight{1, 1}) == 2);

    auto s = x + y;
    auto sq = s * s;
    CHECK(sq.multiplicity(Weight{2, 0}) == 1);
    CHECK(sq.multiplicity(Weight{1, 1}) == 4);
    CHECK(sq.multiplicity(Weight{0, 2}) == 4);
    CHECK(sq.dimension() == 9);

    CHECK((s - s).empty());
    CHECK(s.scaled(0).empty());
    CHECK(s.scaled(-2).dimension() == -6);
}

TEST_CASE("Weyl invariance detection") {
    auto g2 = RootSystem::named("G2");
    auto c = seven_dim(g2);
    CHECK(c.is_weyl_invariant());
    CHECK(c.dimension() == 7);
    c.add(Weight{1, 0}, 1);
    CHECK_FALSE(c.is_weyl_invariant());
    CHECK_FALSE(FormalCharacter::monomial(g2, Weight{1, 0}).is_weyl_invariant());
    CHECK(FormalCharacter::monomial(g2, Weight{0, 0}, 5).is_weyl_invariant());
}

TEST_CASE("torus fixed part under Frobenius kernels") {
    auto g2 = RootSystem::named("G2");
    auto c = seven_dim(g2);
    CHECK(c.torus_fixed_dimension(2, 1) == 1);  // only the zero weight is even
    auto fixed = c.torus_fixed_part(2, 1);
    CHECK(fixed.terms().size() == 1);
    CHECK(fixed.multiplicity(Weight{0, 0}) == 1);

    FormalCharacter d(g2);
    d.add(Weight{2, -4}, 3);
    d.add(Weight{2, -1}, 1);
    d.add(Weight{4, 8}, 1);
    CHECK(d.torus_fixed_dimension(2, 1) == 4);
    CHECK(d.torus_fixed_dimension(2, 2) == 1);
    CHECK(d.torus_fixed_part(2, 2).multiplicity(Weight{1, 2}) == 1);
    CHECK(d.torus_fixed_dimension(3, 1) == 0);
    CHECK_ERROR_KIND(d.torus_fixed_part(2, 0), ErrorKind::BadTwist);
}

TEST_CASE("Frobenius twist scales weights by prime powers only") {
    auto g2 = RootSystem::named("G2");
    auto c = seven_dim(g2);
    auto t = frobenius_twist(c, 2);
    CHECK(t.dimension() == 7);
    CHECK(t.multiplicity(Weight{-4, 2}) == 1);
    CHECK(t.multiplicity(Weight{-2, 1}) == 0);
    CHECK(frobenius_twist(t, 4).multiplicity(Weight{-16, 8}) == 1);

    CHECK_ERROR_KIND(frobenius_twist(c, 1), ErrorKind::BadTwist);
    CHECK_ERROR_KIND(frobenius_twist(c, 6), ErrorKind::BadTwist);
    CHECK_ERROR_KIND(frobenius_twist(c, 0), ErrorKind::BadTwist);
    CHECK_NOTHROW(frobenius_twist(c, 9));
    CHECK_NOTHROW(frobenius_twist(c, 8));
}

TEST_CASE("duals and symmetric characters") {
    auto g2 = RootSystem::named("G2");
    auto c = seven_dim(g2);
    CHECK(dual_character(c) == c);  // w0 = -1 makes this self-dual
    auto m = FormalCharacter::monomial(g2, Weight{2, 1}, 3);
    CHECK(dual_character(m).multiplicity(Weight{-2, -1}) == 3);
}

TEST_CASE("characters over distinct root systems do not mix") {
    auto c1 = FormalCharacter::monomial(RootSystem::named("A2"), Weight{1, 0});
    auto c2 = FormalCharacter::monomial(RootSystem::named("B2"), Weight{1, 0});
    CHECK_ERROR_KIND(c1 + c2, ErrorKind::MixedRootSystem);
    CHECK_ERROR_KIND(c1 * c2, ErrorKind::MixedRootSystem);

    // Two instances of the same named system are interchangeable.
    auto g2a = FormalCharacter::monomial(RootSystem::named("G2"), Weight{1, 0});
    auto g2b = FormalCharacter::monomial(RootSystem::named("G2"), Weight{1, 0});
    CHECK(g2a == g2b);
    CHECK((g2a + g2b).multiplicity(Weight{1, 0}) == 2);
}

TEST_CASE("serialization is deterministic and lexicographically sorted") {
    auto g2 = RootSystem::named("G2");
    FormalCharacter a(g2), b(g2);
    a.add(Weight{1, 0}, 2);
    a.add(Weight{-1, 3}, 1);
    a.add(Weight{1, -2}, 4);
    b.add(Weight{1, -2}, 4);
    b.add(Weight{1, 0}, 2);
    b.add(Weight{-1, 3}, 1);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_json().dump() == "[[-1,3,1],[1,-2,4],[1,0,2]]");
}
