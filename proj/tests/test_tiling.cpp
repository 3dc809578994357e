#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusmaps/tiling.hpp"

#include <algorithm>
#include <set>

using namespace torusmaps;

namespace {

struct Expected {
    TilingId id;
    const char* name;
    int V, E, F, symmetries, orbits;
};

// per translation cell: vertex/edge/face class counts, symmetry classes mod
// translation, flag orbits of the plane tiling
const Expected kTable[] = {
    {TilingId::Triangular, "3.3.3.3.3.3", 1, 3, 2, 12, 1},
    {TilingId::Square, "4.4.4.4", 1, 2, 1, 8, 1},
    {TilingId::Hexagonal, "6.6.6", 2, 3, 1, 12, 1},
    {TilingId::ElongatedTriangular, "3.3.3.4.4", 2, 5, 3, 4, 5},
    {TilingId::SnubSquare, "3.3.4.3.4", 4, 10, 6, 8, 5},
    {TilingId::TruncatedSquare, "4.8.8", 4, 6, 2, 8, 3},
    {TilingId::Trihexagonal, "3.6.3.6", 3, 6, 3, 12, 2},
    {TilingId::TruncatedHexagonal, "3.12.12", 6, 9, 3, 12, 3},
    {TilingId::Rhombitrihexagonal, "3.4.6.4", 6, 12, 6, 12, 4},
    {TilingId::SnubTrihexagonal, "3.3.3.3.6", 6, 15, 9, 6, 10},
    {TilingId::TruncatedTrihexagonal, "4.6.12", 12, 18, 6, 12, 6},
};

}  // namespace

TEST_CASE("all eleven models validate") {
    for (const auto& e : kTable) {
        CAPTURE(e.name);
        CHECK_NOTHROW(validate_tiling(tiling(e.id)));
    }
}

TEST_CASE("class counts per cell") {
    for (const auto& e : kTable) {
        const PeriodicTiling& t = tiling(e.id);
        CAPTURE(e.name);
        CHECK(t.name == e.name);
        CHECK(static_cast<int>(t.vertices.size()) == e.V);
        CHECK(static_cast<int>(t.edges.size()) == e.E);
        CHECK(static_cast<int>(t.faces.size()) == e.F);
        CHECK(t.num_flags() == 4 * e.E);
        CHECK(static_cast<int>(t.vertex_type.size()) ==
              static_cast<int>(2 * e.E) / e.V);  // vertex-transitive: common degree 2E/V
    }
}

TEST_CASE("symmetry class groups") {
    for (const auto& e : kTable) {
        const PeriodicTiling& t = tiling(e.id);
        CAPTURE(e.name);
        CHECK(static_cast<int>(t.symmetries.size()) == e.symmetries);
        // primitive cell: each linear part appears exactly once
        CHECK(static_cast<int>(t.point_group().size()) == e.symmetries);
        // closure => finite group
        for (const auto& g : t.symmetries)
            for (const auto& h : t.symmetries) {
                IsometryClass gh = compose(g, h);
                CHECK(std::count(t.symmetries.begin(), t.symmetries.end(), gh) == 1);
            }
        // identity first
        CHECK(t.symmetries[0].point == Mat2::identity());
        CHECK(t.symmetries[0].offset == Vec2{});
    }
}

TEST_CASE("handedness of the point groups") {
    // the snub trihexagonal tiling is chiral; everything else has reflections
    for (const auto& e : kTable) {
        const PeriodicTiling& t = tiling(e.id);
        CAPTURE(e.name);
        bool has_reflection = false;
        for (const Mat2& p : t.point_group())
            if (p.det() == -1) has_reflection = true;
        CHECK(has_reflection == (e.id != TilingId::SnubTrihexagonal));
    }
}

TEST_CASE("expected rotations present") {
    Mat2 r6 = Mat2::from_rows(0, -1, 1, 1);   // sixth turn, triangular basis
    Mat2 r4 = Mat2::from_rows(0, 1, -1, 0);   // quarter turn, square basis
    for (TilingId id : {TilingId::Triangular, TilingId::Hexagonal, TilingId::Trihexagonal,
                        TilingId::TruncatedHexagonal, TilingId::Rhombitrihexagonal,
                        TilingId::SnubTrihexagonal, TilingId::TruncatedTrihexagonal}) {
        auto pg = tiling(id).point_group();
        CHECK(std::count(pg.begin(), pg.end(), r6) == 1);
    }
    for (TilingId id : {TilingId::Square, TilingId::SnubSquare, TilingId::TruncatedSquare}) {
        auto pg = tiling(id).point_group();
        CHECK(std::count(pg.begin(), pg.end(), r4) == 1);
    }
    // central inversion is a symmetry of every model
    for (const auto& e : kTable) {
        auto pg = tiling(e.id).point_group();
        CHECK(std::count(pg.begin(), pg.end(), -Mat2::identity()) == 1);
    }
}

TEST_CASE("plane flag orbit counts") {
    for (const auto& e : kTable) {
        const PeriodicTiling& t = tiling(e.id);
        CAPTURE(e.name);
        CHECK(t.plane_flag_orbit_count() == e.orbits);
        // the class group acts freely on flag classes: every orbit has the
        // same size |G|
        auto labels = t.flag_orbit_labels(t.symmetries);
        std::vector<int> sizes(e.orbits, 0);
        for (int l : labels) sizes.at(l)++;
        for (int s : sizes) CHECK(s == t.num_flags() / e.orbits);
        CHECK(t.num_flags() == static_cast<int>(t.symmetries.size()) * e.orbits);
        // identity alone keeps every class separate
        CHECK(t.flag_orbit_count({t.symmetries[0]}) == t.num_flags());
    }
}

TEST_CASE("names round-trip") {
    for (const auto& e : kTable) {
        auto id = tiling_from_name(e.name);
        REQUIRE(id.has_value());
        CHECK(*id == e.id);
        CHECK(tiling_name(e.id) == std::string(e.name));
    }
    CHECK_FALSE(tiling_from_name("5.5.5").has_value());
    CHECK_FALSE(tiling_from_name("").has_value());
}

TEST_CASE("equivelar companions") {
    CHECK(hat_type(TilingId::SnubSquare) == TilingId::Square);
    CHECK(hat_type(TilingId::TruncatedSquare) == TilingId::Square);
    for (TilingId id : {TilingId::Trihexagonal, TilingId::TruncatedHexagonal,
                        TilingId::Rhombitrihexagonal, TilingId::SnubTrihexagonal,
                        TilingId::TruncatedTrihexagonal})
        CHECK(hat_type(id) == TilingId::Triangular);
    for (TilingId id : {TilingId::Triangular, TilingId::Square, TilingId::Hexagonal,
                        TilingId::ElongatedTriangular})
        CHECK_FALSE(hat_type(id).has_value());
}

TEST_CASE("validator rejects a broken model") {
    PeriodicTiling t = tiling(TilingId::Square);  // copy
    t.faces[0].verts[2] = vec(Rat(2), Rat(2));    // stretch one corner
    CHECK_THROWS_AS(validate_tiling(t), std::logic_error);

    PeriodicTiling t2 = tiling(TilingId::Triangular);
    t2.symmetries.push_back({Mat2::identity(), vec(Rat(1, 2), Rat(0))});
    CHECK_THROWS_AS(validate_tiling(t2), std::logic_error);
}
