#pragma once

#include "lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torusmaps {

// The eleven vertex-transitive edge-to-edge plane tilings by regular polygons,
// each modelled with exact rational coordinates in the basis of its own
// translation lattice (a point (x,y) sits at x*A + y*B for basis vectors A,B).
// Angles and lengths are not preserved by that choice of coordinates; the
// incidence structure and the symmetry group acting on it are.
enum class TilingId {
    Triangular,             // 3.3.3.3.3.3
    Square,                 // 4.4.4.4
    Hexagonal,              // 6.6.6
    ElongatedTriangular,    // 3.3.3.4.4
    SnubSquare,             // 3.3.4.3.4
    TruncatedSquare,        // 4.8.8
    Trihexagonal,           // 3.6.3.6
    TruncatedHexagonal,     // 3.12.12
    Rhombitrihexagonal,     // 3.4.6.4
    SnubTrihexagonal,       // 3.3.3.3.6
    TruncatedTrihexagonal,  // 4.6.12
};

inline constexpr int kNumTilings = 11;

const std::vector<TilingId>& all_tilings();
const char* tiling_name(TilingId id);  // "3.4.6.4" style
std::optional<TilingId> tiling_from_name(const std::string& name);

// which equivelar tiling carries the distinguished sublattice structure of a
// non-equivelar one (square family for the two square-ish types, triangular
// family for the five hexagonal-ish ones); empty for the equivelar three and
// for 3.3.3.4.4 which has no such companion
std::optional<TilingId> hat_type(TilingId id);

inline Vec2 reduce01(const Vec2& v) { return v - to_vec(vfloor(v)); }

// symmetry of the tiling modulo its translation lattice: x -> P x + t with
// P integer, |det P| = 1, and t stored reduced to [0,1)^2
struct IsometryClass {
    Mat2 point;
    Vec2 offset;
    friend bool operator==(const IsometryClass&, const IsometryClass&) = default;
};

IsometryClass compose(const IsometryClass& g, const IsometryClass& h);  // g after h

struct Face {
    std::vector<Vec2> verts;  // counterclockwise, consecutive pairs are edges
};

struct PeriodicTiling {
    TilingId id;
    std::string name;
    std::vector<int> vertex_type;

    std::vector<Face> faces;         // one representative per translation class
    std::vector<Vec2> barycenters;   // per face
    std::vector<Vec2> vertices;      // class representatives in [0,1)^2

    // one face-side incidence of an edge class; the face's own coordinates
    // shifted by `shift` land on the canonical edge frame, and orient tells
    // whether the face traverses the edge from u to w (0) or w to u (1)
    struct EdgeRef {
        int face = -1;
        int pos = -1;
        IVec2 shift;
        int orient = 0;
    };
    struct Edge {
        Vec2 u, w;  // canonical frame: u lex-smaller, u in [0,1)^2
        std::array<EdgeRef, 2> sides;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> edge_of;  // [face][pos] -> edge id

    // flag = (face, pos, end): the corner of `face` at the source (end == 0)
    // or target (end == 1) of its directed edge `pos`, together with that
    // edge and the face itself.  Stored via canonical anchor points.
    struct FlagRec {
        int face, pos, end;
        Vec2 vert, mid, bary;  // shifted so vert lies in [0,1)^2
    };
    std::vector<FlagRec> flags;

    std::vector<IsometryClass> symmetries;  // the full class group, (I,0) first

    int flag_id(int face, int pos, int end) const { return flag_base[face] + 2 * pos + end; }
    int num_flags() const { return static_cast<int>(flags.size()); }

    // index of the flag class with the given canonical anchors, or -1
    int flag_class_of(const Vec2& vert, const Vec2& mid, const Vec2& bary) const;

    // image of a flag class under a symmetry class; throws if g is not a
    // symmetry of the tiling
    int apply_to_flag(const IsometryClass& g, int flag) const;

    // orbit labels (0..count-1, by smallest member) of the flag classes under
    // the subgroup generated by the given symmetry classes
    std::vector<int> flag_orbit_labels(const std::vector<IsometryClass>& group) const;
    int flag_orbit_count(const std::vector<IsometryClass>& group) const;

    // orbits under the full symmetry group == flag orbits of the plane tiling
    int plane_flag_orbit_count() const;

    // distinct linear parts of the symmetry classes
    std::vector<Mat2> point_group() const;

    std::vector<int> flag_base;  // per face, id of its first flag
    std::map<std::array<Rat, 6>, int> flag_index;
};

// the shared, validated instance for a given type
const PeriodicTiling& tiling(TilingId id);

// structural checks: faces positively oriented and tiling the plane (areas,
// edge pairing, vertex rotation systems, no crossings, primitive cell, ...);
// throws std::logic_error naming the failed check
void validate_tiling(const PeriodicTiling& t);

// exhaustive search for symmetry classes (all P with entries in [-2,2] and
// |det P| = 1, offsets solved from flag anchors)
std::vector<IsometryClass> discover_symmetries(const PeriodicTiling& t);

}  // namespace torusmaps
