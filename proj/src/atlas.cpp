// Coordinate models for the eleven tilings.  Each face list holds one
// representative per translation class, counterclockwise, in the coordinates
// of the tiling's own translation basis.  build_tiling() (tiling.cpp) derives
// vertices, edges, flags and symmetries from these and validates the result.

#include "torusmaps/tiling.hpp"

#include <stdexcept>

namespace torusmaps {

namespace {

Vec2 v2(Int xn, Int xd, Int yn, Int yd) { return {Rat(xn, xd), Rat(yn, yd)}; }
Vec2 v2i(Int x, Int y) { return {Rat(x), Rat(y)}; }

// counterclockwise rotations by one sixth resp. one quarter turn, written in
// the respective lattice bases
const Mat2 kRotHex = Mat2::from_rows(0, -1, 1, 1);
const Mat2 kRotSquare = Mat2::from_rows(0, -1, 1, 0);

Face map_face(const Mat2& P, const Face& f) {
    Face r;
    for (const Vec2& v : f.verts) r.verts.push_back(P * v);
    return r;
}

Face shift_face(const Face& f, const Vec2& t) {
    Face r;
    for (const Vec2& v : f.verts) r.verts.push_back(v + t);
    return r;
}

// orbit of a point under repeated application of P (for building regular
// faces around the origin)
Face orbit_face(const Mat2& P, const Vec2& start, int n) {
    Face f;
    Vec2 v = start;
    for (int i = 0; i < n; ++i) {
        f.verts.push_back(v);
        v = P * v;
    }
    return f;
}

std::vector<Face> faces_triangular() {
    return {
        {{v2i(0, 0), v2i(1, 0), v2i(0, 1)}},
        {{v2i(1, 0), v2i(1, 1), v2i(0, 1)}},
    };
}

std::vector<Face> faces_square() {
    return {
        {{v2i(0, 0), v2i(1, 0), v2i(1, 1), v2i(0, 1)}},
    };
}

std::vector<Face> faces_hexagonal() {
    return {orbit_face(kRotHex, v2(1, 3, 1, 3), 6)};
}

std::vector<Face> faces_elongated_triangular() {
    // rows of squares (around y = 0) alternating with rows of triangles,
    // origin at a square's center
    Face square{{v2(3, 8, 1, 4), v2(-5, 8, 1, 4), v2(-3, 8, -1, 4), v2(5, 8, -1, 4)}};
    Face tri_up{{v2(-5, 8, 1, 4), v2(3, 8, 1, 4), v2(-3, 8, 3, 4)}};
    Face tri_down{{v2(3, 8, 1, 4), v2(5, 8, 3, 4), v2(-3, 8, 3, 4)}};
    return {square, tri_up, tri_down};
}

std::vector<Face> faces_snub_square() {
    // origin at the center of one square; the other square and the four
    // triangle classes follow it around under the quarter turn
    Face s0 = orbit_face(kRotSquare, v2(1, 6, 1, 3), 4);
    Face s1{{v2(1, 6, 1, 3), v2(2, 3, 1, 6), v2(5, 6, 2, 3), v2(1, 3, 5, 6)}};
    Face t1{{v2(1, 6, 1, 3), v2(-1, 6, 2, 3), v2(-1, 3, 1, 6)}};
    Face t2 = map_face(kRotSquare, t1);
    Face t3 = map_face(kRotSquare, t2);
    Face t4 = map_face(kRotSquare, t3);
    return {s0, s1, t1, t2, t3, t4};
}

std::vector<Face> faces_truncated_square() {
    Face oct{{v2(1, 2, -1, 6), v2(1, 2, 1, 6), v2(1, 6, 1, 2), v2(-1, 6, 1, 2), v2(-1, 2, 1, 6),
              v2(-1, 2, -1, 6), v2(-1, 6, -1, 2), v2(1, 6, -1, 2)}};
    Face sq{{v2(1, 2, 1, 6), v2(5, 6, 1, 2), v2(1, 2, 5, 6), v2(1, 6, 1, 2)}};
    return {oct, sq};
}

std::vector<Face> faces_trihexagonal() {
    Face hex{{v2(1, 2, 0, 1), v2(0, 1, 1, 2), v2(-1, 2, 1, 2), v2(-1, 2, 0, 1), v2(0, 1, -1, 2),
              v2(1, 2, -1, 2)}};
    Face t1{{v2(1, 2, 0, 1), v2(1, 2, 1, 2), v2(0, 1, 1, 2)}};
    Face t2{{v2(1, 2, 1, 2), v2(1, 1, 1, 2), v2(1, 2, 1, 1)}};
    return {hex, t1, t2};
}

std::vector<Face> faces_truncated_hexagonal() {
    // hexagonal tiling with each corner cut a third of the way along its edges
    Face dodec{{v2(1, 9, 4, 9), v2(-1, 9, 5, 9), v2(-4, 9, 5, 9), v2(-5, 9, 4, 9), v2(-5, 9, 1, 9),
                v2(-4, 9, -1, 9), v2(-1, 9, -4, 9), v2(1, 9, -5, 9), v2(4, 9, -5, 9),
                v2(5, 9, -4, 9), v2(5, 9, -1, 9), v2(4, 9, 1, 9)}};
    Face tu{{v2(4, 9, 4, 9), v2(1, 9, 4, 9), v2(4, 9, 1, 9)}};
    Face tv{{v2(5, 9, 5, 9), v2(8, 9, 5, 9), v2(5, 9, 8, 9)}};
    return {dodec, tu, tv};
}

std::vector<Face> faces_rhombitrihexagonal() {
    Face hex = orbit_face(kRotHex, v2(1, 4, 1, 4), 6);
    Face sq1{{v2(1, 2, -1, 4), v2(3, 4, -1, 4), v2(1, 2, 1, 4), v2(1, 4, 1, 4)}};
    Face sq2 = map_face(kRotHex, sq1);
    Face sq3 = shift_face(map_face(kRotHex, sq2), v2i(1, 0));
    Face t1{{v2(1, 4, 1, 4), v2(1, 2, 1, 4), v2(1, 4, 1, 2)}};
    Face t2{{v2(3, 4, 1, 2), v2(3, 4, 3, 4), v2(1, 2, 3, 4)}};
    return {hex, sq1, sq2, sq3, t1, t2};
}

std::vector<Face> faces_snub_trihexagonal() {
    // chiral: hexagons in the orientation of the sixth turn only, the twisted
    // triangles generated from one seed quad (split along a real edge)
    Face hex = orbit_face(kRotHex, v2(2, 7, 1, 7), 6);
    Face tc1{{v2(2, 7, 1, 7), v2(4, 7, 2, 7), v2(1, 7, 4, 7)}};
    Face tc2{{v2(6, 7, 3, 7), v2(5, 7, 6, 7), v2(3, 7, 5, 7)}};
    Vec2 q1 = v2(3, 7, -2, 7), q2 = v2(5, 7, -1, 7), q3 = v2(4, 7, 2, 7), q4 = v2(2, 7, 1, 7);
    Face a1{{q1, q2, q4}};
    Face a2{{q2, q3, q4}};
    Face b1 = map_face(kRotHex, a1);
    Face b2 = map_face(kRotHex, a2);
    Face c1 = shift_face(map_face(kRotHex, b1), v2i(1, 0));
    Face c2 = shift_face(map_face(kRotHex, b2), v2i(1, 0));
    return {hex, tc1, tc2, a1, a2, b1, b2, c1, c2};
}

std::vector<Face> faces_truncated_trihexagonal() {
    // 3.6.3.6 with every corner cut a third of the way along its edges
    Face dodec{{v2(1, 3, 1, 6), v2(1, 6, 1, 3), v2(-1, 6, 1, 2), v2(-1, 3, 1, 2), v2(-1, 2, 1, 3),
                v2(-1, 2, 1, 6), v2(-1, 3, -1, 6), v2(-1, 6, -1, 3), v2(1, 6, -1, 2),
                v2(1, 3, -1, 2), v2(1, 2, -1, 3), v2(1, 2, -1, 6)}};
    Face hex1{{v2(1, 2, 1, 6), v2(1, 2, 1, 3), v2(1, 3, 1, 2), v2(1, 6, 1, 2), v2(1, 6, 1, 3),
               v2(1, 3, 1, 6)}};
    Face hex2{{v2(2, 3, 1, 2), v2(5, 6, 1, 2), v2(5, 6, 2, 3), v2(2, 3, 5, 6), v2(1, 2, 5, 6),
               v2(1, 2, 2, 3)}};
    Face sqa{{v2(1, 2, -1, 6), v2(2, 3, -1, 6), v2(1, 2, 1, 6), v2(1, 3, 1, 6)}};
    Face sqb{{v2(1, 6, 1, 2), v2(-1, 6, 2, 3), v2(-1, 6, 1, 2), v2(1, 6, 1, 3)}};
    Face sqc{{v2(2, 3, 1, 2), v2(1, 2, 2, 3), v2(1, 3, 1, 2), v2(1, 2, 1, 3)}};
    return {dodec, hex1, hex2, sqa, sqb, sqc};
}

}  // namespace

std::vector<Face> atlas_faces(TilingId id) {
    switch (id) {
        case TilingId::Triangular: return faces_triangular();
        case TilingId::Square: return faces_square();
        case TilingId::Hexagonal: return faces_hexagonal();
        case TilingId::ElongatedTriangular: return faces_elongated_triangular();
        case TilingId::SnubSquare: return faces_snub_square();
        case TilingId::TruncatedSquare: return faces_truncated_square();
        case TilingId::Trihexagonal: return faces_trihexagonal();
        case TilingId::TruncatedHexagonal: return faces_truncated_hexagonal();
        case TilingId::Rhombitrihexagonal: return faces_rhombitrihexagonal();
        case TilingId::SnubTrihexagonal: return faces_snub_trihexagonal();
        case TilingId::TruncatedTrihexagonal: return faces_truncated_trihexagonal();
    }
    throw std::invalid_argument("unknown tiling id");
}

std::vector<int> atlas_vertex_type(TilingId id) {
    switch (id) {
        case TilingId::Triangular: return {3, 3, 3, 3, 3, 3};
        case TilingId::Square: return {4, 4, 4, 4};
        case TilingId::Hexagonal: return {6, 6, 6};
        case TilingId::ElongatedTriangular: return {3, 3, 3, 4, 4};
        case TilingId::SnubSquare: return {3, 3, 4, 3, 4};
        case TilingId::TruncatedSquare: return {4, 8, 8};
        case TilingId::Trihexagonal: return {3, 6, 3, 6};
        case TilingId::TruncatedHexagonal: return {3, 12, 12};
        case TilingId::Rhombitrihexagonal: return {3, 4, 6, 4};
        case TilingId::SnubTrihexagonal: return {3, 3, 3, 3, 6};
        case TilingId::TruncatedTrihexagonal: return {4, 6, 12};
    }
    throw std::invalid_argument("unknown tiling id");
}

}  // namespace torusmaps
