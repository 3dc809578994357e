#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "torusmaps/covers.hpp"

#include <set>

using namespace torusmaps;

namespace {
// sum of divisors of 1..24, computed once by hand and once by a different
// formula in the oracle tests
const Int kSigma[25] = {0,  1,  3,  4,  7,  6,  12, 8,  15, 13, 18, 12, 28,
                        14, 24, 24, 31, 18, 39, 20, 42, 32, 36, 24, 60};
}  // namespace

TEST_CASE("cover counts follow the divisor sum") {
    ToroidalMap X(TilingId::Hexagonal, Mat2::from_rows(2, 0, 1, 3));
    for (Int n = 1; n <= 24; ++n) {
        auto cs = enumerate_covers(X, n);
        CHECK(static_cast<Int>(cs.size()) == kSigma[n]);
        for (const auto& c : cs) {
            CHECK(c.sheets == n);
            CHECK(c.S.det() == n);
            CHECK(is_sublattice(c.base.K * c.S, c.base.K));
        }
    }
    CHECK_THROWS(enumerate_covers(X, 0));
}

TEST_CASE("the three double covers") {
    auto cs = enumerate_covers(ToroidalMap(TilingId::Square, Mat2::identity()), 2);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].S == Mat2::from_rows(2, 0, 0, 1));
    CHECK(cs[1].S == Mat2::from_rows(1, 0, 0, 2));
    CHECK(cs[2].S == Mat2::from_rows(1, 0, 1, 2));
}

TEST_CASE("covers at one sheet count are pairwise distinct maps") {
    ToroidalMap X(TilingId::Trihexagonal, Mat2::from_rows(3, 0, 2, 4));
    for (Int n : {4, 6, 12}) {
        std::set<std::array<Int, 4>> seen;
        for (const auto& c : enumerate_covers(X, n)) {
            ToroidalMap m = c.cover();
            CHECK(seen.insert(m.K.m).second);
        }
        CHECK(static_cast<Int>(seen.size()) == kSigma[n]);
    }
}

TEST_CASE("cyclic covers compose multiplicatively") {
    std::vector<Mat2> bases = {Mat2::identity(), Mat2::from_rows(2, 0, 1, 3),
                               Mat2::from_rows(5, 0, 4, 7)};
    for (const Mat2& K : bases)
        for (Int a : {2, 3, 5})
            for (Int b : {2, 3, 4}) {
                ToroidalMap X(TilingId::SnubTrihexagonal, K);
                ToroidalMap once = cyclic_cover(cyclic_cover(X, a).cover(), b).cover();
                ToroidalMap direct = cyclic_cover(X, a * b).cover();
                CHECK(once == direct);
            }
    CHECK(cyclic_cover(ToroidalMap(TilingId::Square, Mat2::identity()), 1).cover() ==
          ToroidalMap(TilingId::Square, Mat2::identity()));
    CHECK(cyclic_cover(ToroidalMap(TilingId::Square, Mat2::identity()), 7).sheets == 7);
    CHECK_THROWS(cyclic_cover(ToroidalMap(TilingId::Square, Mat2::identity()), 0));
}

TEST_CASE("scaled cover has square sheet count but keeps the base's symmetry") {
    // scaling a lattice never changes which point maps preserve it, so the
    // m*I cover reproduces the base's orbit count, not the plane minimum
    ToroidalMap X(TilingId::Triangular, Mat2::diag(5, 3));
    CoverDescriptor c = semiregular_cover_mm(X);
    CHECK(c.sheets == 225);
    CHECK(c.S == Mat2::diag(15, 15));
    CHECK(flag_orbits(X).orbit_count == 6);
    CHECK(flag_orbits(c.cover()).orbit_count == 6);

    // for a scalar base lattice the claim does hold
    ToroidalMap Y(TilingId::Triangular, Mat2::diag(2, 2));
    CHECK(flag_orbits(semiregular_cover_mm(Y).cover()).orbit_count ==
          tiling(TilingId::Triangular).plane_flag_orbit_count());

    ToroidalMap Z(TilingId::Square, Mat2::identity());
    CHECK(semiregular_cover_mm(Z).sheets == 1);
    CHECK(semiregular_cover_mm(Z).cover() == Z);
}

TEST_CASE("a cover can have more orbits than its base") {
    // the even-sum lattice keeps all eight square symmetries; its index-2
    // sublattice below only keeps four of them
    ToroidalMap base(TilingId::Square, Mat2::from_rows(1, 0, 1, 2));
    CHECK(flag_orbits(base).orbit_count == 1);
    CoverDescriptor up{base, Mat2::diag(1, 2), 2};
    CHECK(flag_orbits(up.cover()).orbit_count == 2);
}

TEST_CASE("minimal covers reaching a target orbit count") {
    // an index-15 base regains the full triangle symmetry at 15 sheets,
    // where the cover lattice is 15 * Z^2
    ToroidalMap X(TilingId::Triangular, Mat2::diag(5, 3));
    auto c = minimal_cover_with_orbits(X, 1);
    REQUIRE(c.has_value());
    CHECK(c->sheets == 15);
    CHECK(c->S == Mat2::diag(3, 5));
    CHECK(c->cover().K == Mat2::diag(15, 15));

    // already minimal: one sheet
    auto self = minimal_cover_with_orbits(ToroidalMap(TilingId::Triangular, Mat2::identity()), 1);
    REQUIRE(self.has_value());
    CHECK(self->sheets == 1);

    // the truncated-hexagonal witness reaches its plane count at six sheets
    ToroidalMap Y(TilingId::TruncatedHexagonal, Mat2::from_rows(2, 0, 1, 3));
    auto cy = minimal_cover_with_orbits(Y, 3);
    REQUIRE(cy.has_value());
    CHECK(cy->sheets == 6);
    CHECK(cy->cover().K == Mat2::diag(6, 6));

    // orbit count 4 is unreachable for the triangular type: every quotient
    // keeps the half turn, so counts divide 12 by an even order
    CHECK_FALSE(minimal_cover_with_orbits(X, 4).has_value());
    CHECK_FALSE(minimal_cover_with_orbits(X, 5, Int(40)).has_value());
}

TEST_CASE("isomorphism classes of covers") {
    auto tri2 = enumerate_covers(ToroidalMap(TilingId::Triangular, Mat2::identity()), 2);
    auto cls = classify_covers_up_to_iso(tri2);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].size() == 3);

    auto sq2 = enumerate_covers(ToroidalMap(TilingId::Square, Mat2::identity()), 2);
    auto cls2 = classify_covers_up_to_iso(sq2);
    REQUIRE(cls2.size() == 2);
    // the two rectangles merge under the quarter turn; the checkerboard
    // lattice stands alone
    CHECK(cls2[0] == std::vector<int>{0, 1});
    CHECK(cls2[1] == std::vector<int>{2});

    // class count never beats the raw count, and membership is genuine
    for (Int n = 1; n <= 6; ++n)
        for (TilingId id : {TilingId::Triangular, TilingId::Square, TilingId::SnubSquare}) {
            auto cs = enumerate_covers(ToroidalMap(id, Mat2::identity()), n);
            auto k = classify_covers_up_to_iso(cs);
            CHECK(static_cast<Int>(k.size()) <= kSigma[n]);
            size_t total = 0;
            for (const auto& cl : k) {
                total += cl.size();
                for (int i : cl) CHECK(is_isomorphic(cs[cl.front()].cover(), cs[i].cover()));
            }
            CHECK(total == cs.size());
            for (size_t a = 0; a + 1 < k.size(); ++a)
                CHECK_FALSE(is_isomorphic(cs[k[a].front()].cover(), cs[k[a + 1].front()].cover()));
        }

    std::vector<CoverDescriptor> mixed = {tri2[0],
                                          {ToroidalMap(TilingId::Triangular, Mat2::diag(2, 2)),
                                           Mat2::identity(), 1}};
    CHECK_THROWS(classify_covers_up_to_iso(mixed));
}
