#include "torusmaps/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusmaps {

// atlas.cpp
std::vector<Face> atlas_faces(TilingId id);
std::vector<int> atlas_vertex_type(TilingId id);

namespace {

Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

Rat face_area2(const Face& f) {
    Rat s(0);
    size_t n = f.verts.size();
    for (size_t i = 0; i < n; ++i) s += cross(f.verts[i], f.verts[(i + 1) % n]);
    return s;
}

Vec2 face_barycenter(const Face& f) {
    Vec2 s;
    for (const Vec2& v : f.verts) s = s + v;
    Int n = static_cast<Int>(f.verts.size());
    return {s.x / n, s.y / n};
}

std::array<Rat, 6> anchor_key(const Vec2& v, const Vec2& m, const Vec2& b) {
    return {v.x, v.y, m.x, m.y, b.x, b.y};
}

// counterclockwise angular order for nonzero directions, starting just above
// the positive x axis
int half_of(const Vec2& d) { return (d.y > 0 || (rsign(d.y) == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

[[noreturn]] void fail(const std::string& tiling, const std::string& what) {
    throw std::logic_error("tiling " + tiling + ": " + what);
}

int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// p strictly between a and b on the segment's line
bool strictly_inside(const Vec2& p, const Vec2& a, const Vec2& b) {
    return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
}

}  // namespace

const std::vector<TilingId>& all_tilings() {
    static const std::vector<TilingId> ids = {
        TilingId::Triangular,         TilingId::Square,
        TilingId::Hexagonal,          TilingId::ElongatedTriangular,
        TilingId::SnubSquare,         TilingId::TruncatedSquare,
        TilingId::Trihexagonal,       TilingId::TruncatedHexagonal,
        TilingId::Rhombitrihexagonal, TilingId::SnubTrihexagonal,
        TilingId::TruncatedTrihexagonal,
    };
    return ids;
}

const char* tiling_name(TilingId id) {
    switch (id) {
        case TilingId::Triangular: return "3.3.3.3.3.3";
        case TilingId::Square: return "4.4.4.4";
        case TilingId::Hexagonal: return "6.6.6";
        case TilingId::ElongatedTriangular: return "3.3.3.4.4";
        case TilingId::SnubSquare: return "3.3.4.3.4";
        case TilingId::TruncatedSquare: return "4.8.8";
        case TilingId::Trihexagonal: return "3.6.3.6";
        case TilingId::TruncatedHexagonal: return "3.12.12";
        case TilingId::Rhombitrihexagonal: return "3.4.6.4";
        case TilingId::SnubTrihexagonal: return "3.3.3.3.6";
        case TilingId::TruncatedTrihexagonal: return "4.6.12";
    }
    return "?";
}

std::optional<TilingId> tiling_from_name(const std::string& name) {
    for (TilingId id : all_tilings())
        if (name == tiling_name(id)) return id;
    return std::nullopt;
}

std::optional<TilingId> hat_type(TilingId id) {
    switch (id) {
        case TilingId::SnubSquare:
        case TilingId::TruncatedSquare: return TilingId::Square;
        case TilingId::Trihexagonal:
        case TilingId::TruncatedHexagonal:
        case TilingId::Rhombitrihexagonal:
        case TilingId::SnubTrihexagonal:
        case TilingId::TruncatedTrihexagonal: return TilingId::Triangular;
        default: return std::nullopt;
    }
}

IsometryClass compose(const IsometryClass& g, const IsometryClass& h) {
    return {g.point * h.point, reduce01(g.point * h.offset + g.offset)};
}

int PeriodicTiling::flag_class_of(const Vec2& vert, const Vec2& mid, const Vec2& bary) const {
    auto it = flag_index.find(anchor_key(vert, mid, bary));
    return it == flag_index.end() ? -1 : it->second;
}

int PeriodicTiling::apply_to_flag(const IsometryClass& g, int flag) const {
    const FlagRec& f = flags[flag];
    Vec2 v = g.point * f.vert + g.offset;
    Vec2 m = g.point * f.mid + g.offset;
    Vec2 b = g.point * f.bary + g.offset;
    IVec2 fl = vfloor(v);
    Vec2 sh = to_vec(IVec2{-fl.x, -fl.y});
    int r = flag_class_of(v + sh, m + sh, b + sh);
    if (r < 0)
        throw std::logic_error("apply_to_flag: map " + g.point.str() + "+" + vec_str(g.offset) +
                               " is not a symmetry of " + name);
    return r;
}

std::vector<int> PeriodicTiling::flag_orbit_labels(const std::vector<IsometryClass>& group) const {
    int n = num_flags();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const IsometryClass& g : group)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(apply_to_flag(g, i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = next++;
        label[i] = label[r];
    }
    return label;
}

int PeriodicTiling::flag_orbit_count(const std::vector<IsometryClass>& group) const {
    auto l = flag_orbit_labels(group);
    return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

int PeriodicTiling::plane_flag_orbit_count() const { return flag_orbit_count(symmetries); }

std::vector<Mat2> PeriodicTiling::point_group() const {
    std::set<Mat2> ps;
    for (const IsometryClass& g : symmetries) ps.insert(g.point);
    return {ps.begin(), ps.end()};
}

std::vector<IsometryClass> discover_symmetries(const PeriodicTiling& t) {
    std::vector<IsometryClass> out;
    const PeriodicTiling::FlagRec& f0 = t.flags.at(0);
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b)
            for (Int c = -2; c <= 2; ++c)
                for (Int d = -2; d <= 2; ++d) {
                    Mat2 P = Mat2::from_rows(a, b, c, d);
                    if (!is_unimodular(P)) continue;
                    std::set<std::pair<Rat, Rat>> tried;
                    for (const auto& g : t.flags) {
                        Vec2 off = reduce01(g.vert - P * f0.vert);
                        if (!tried.insert({off.x, off.y}).second) continue;
                        bool ok = true;
                        for (const auto& h : t.flags) {
                            Vec2 v = P * h.vert + off;
                            Vec2 m = P * h.mid + off;
                            Vec2 bc = P * h.bary + off;
                            IVec2 fl = vfloor(v);
                            Vec2 sh = to_vec(IVec2{-fl.x, -fl.y});
                            if (t.flag_class_of(v + sh, m + sh, bc + sh) < 0) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) out.push_back({P, off});
                    }
                }
    // identity class first, rest in deterministic order
    std::sort(out.begin(), out.end(), [](const IsometryClass& x, const IsometryClass& y) {
        bool xi = x.point == Mat2::identity(), yi = y.point == Mat2::identity();
        if (xi != yi) return xi;
        if (x.point != y.point) return x.point < y.point;
        if (x.offset.x != y.offset.x) return x.offset.x < y.offset.x;
        return x.offset.y < y.offset.y;
    });
    return out;
}

namespace {

PeriodicTiling build_tiling(TilingId id) {
    PeriodicTiling t;
    t.id = id;
    t.name = tiling_name(id);
    t.vertex_type = atlas_vertex_type(id);
    t.faces = atlas_faces(id);
    for (const Face& f : t.faces) t.barycenters.push_back(face_barycenter(f));

    std::map<std::pair<Rat, Rat>, int> vmap;
    for (const Face& f : t.faces)
        for (const Vec2& v : f.verts) {
            Vec2 r = reduce01(v);
            auto key = std::make_pair(r.x, r.y);
            if (vmap.emplace(key, static_cast<int>(t.vertices.size())).second)
                t.vertices.push_back(r);
        }

    std::map<std::array<Rat, 4>, int> emap;
    t.edge_of.resize(t.faces.size());
    for (size_t i = 0; i < t.faces.size(); ++i) {
        const auto& verts = t.faces[i].verts;
        size_t n = verts.size();
        t.edge_of[i].assign(n, -1);
        for (size_t k = 0; k < n; ++k) {
            Vec2 p = verts[k], q = verts[(k + 1) % n];
            if (p == q) fail(t.name, "degenerate edge in face " + std::to_string(i));
            Vec2 u0 = p, w0 = q;
            bool swapped = false;
            if (w0 < u0) {
                std::swap(u0, w0);
                swapped = true;
            }
            IVec2 fl = vfloor(u0);
            IVec2 s{-fl.x, -fl.y};
            Vec2 u = u0 + to_vec(s), w = w0 + to_vec(s);
            auto key = std::array<Rat, 4>{u.x, u.y, w.x, w.y};
            int eid;
            if (auto it = emap.find(key); it != emap.end())
                eid = it->second;
            else {
                eid = static_cast<int>(t.edges.size());
                emap.emplace(key, eid);
                t.edges.push_back({u, w, {}});
            }
            PeriodicTiling::EdgeRef ref{static_cast<int>(i), static_cast<int>(k), s,
                                        swapped ? 1 : 0};
            auto& e = t.edges[eid];
            if (e.sides[0].face < 0)
                e.sides[0] = ref;
            else if (e.sides[1].face < 0)
                e.sides[1] = ref;
            else
                fail(t.name, "edge met by more than two face sides");
            t.edge_of[i][k] = eid;
        }
    }

    for (size_t i = 0; i < t.faces.size(); ++i) {
        t.flag_base.push_back(static_cast<int>(t.flags.size()));
        const auto& verts = t.faces[i].verts;
        size_t n = verts.size();
        for (size_t k = 0; k < n; ++k)
            for (int end = 0; end < 2; ++end) {
                Vec2 p = verts[k], q = verts[(k + 1) % n];
                Vec2 vert = end == 0 ? p : q;
                Vec2 mid = Rat(1, 2) * (p + q);
                Vec2 bary = t.barycenters[i];
                IVec2 fl = vfloor(vert);
                Vec2 sh = to_vec(IVec2{-fl.x, -fl.y});
                PeriodicTiling::FlagRec rec{static_cast<int>(i), static_cast<int>(k), end,
                                            vert + sh, mid + sh, bary + sh};
                auto key = anchor_key(rec.vert, rec.mid, rec.bary);
                if (!t.flag_index.emplace(key, static_cast<int>(t.flags.size())).second)
                    fail(t.name, "two flags with identical anchors");
                t.flags.push_back(rec);
            }
    }

    t.symmetries = discover_symmetries(t);
    return t;
}

}  // namespace

void validate_tiling(const PeriodicTiling& t) {
    if (t.faces.empty()) fail(t.name, "no faces");

    // faces: simple, positively oriented, total area one cell
    Rat total(0);
    for (size_t i = 0; i < t.faces.size(); ++i) {
        const auto& verts = t.faces[i].verts;
        if (verts.size() < 3) fail(t.name, "face with fewer than 3 vertices");
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (verts[a] == verts[b]) fail(t.name, "face repeats a vertex");
        Rat a2 = face_area2(t.faces[i]);
        if (!(a2 > 0)) fail(t.name, "face " + std::to_string(i) + " not counterclockwise");
        total += a2;
    }
    if (total != Rat(2)) fail(t.name, "face areas do not fill the cell exactly once");

    // edges: exactly two sides each, from opposite directions
    for (const auto& e : t.edges) {
        if (e.sides[0].face < 0 || e.sides[1].face < 0)
            fail(t.name, "edge with fewer than two face sides");
        if (e.sides[0].orient == e.sides[1].orient)
            fail(t.name, "edge traversed twice in the same direction");
    }
    if (t.flags.size() != 4 * t.edges.size()) fail(t.name, "flag count is not 4E");

    // edge midpoints and face barycenters must separate classes
    {
        std::set<std::pair<Rat, Rat>> mids, barys;
        for (const auto& e : t.edges) {
            Vec2 m = reduce01(Rat(1, 2) * (e.u + e.w));
            if (!mids.insert({m.x, m.y}).second)
                fail(t.name, "two edge classes share a midpoint");
        }
        for (const Vec2& b : t.barycenters) {
            Vec2 r = reduce01(b);
            if (!barys.insert({r.x, r.y}).second)
                fail(t.name, "two face classes share a barycenter");
        }
    }

    // rotation system around every vertex class: the face corners must cover
    // the full circle of edge directions exactly once, and read off the
    // declared vertex type
    struct Corner {
        int face, pos;
        Vec2 dnext, dprev;
    };
    std::map<std::pair<Rat, Rat>, std::vector<Corner>> at;
    for (size_t i = 0; i < t.faces.size(); ++i) {
        const auto& verts = t.faces[i].verts;
        int n = static_cast<int>(verts.size());
        for (int k = 0; k < n; ++k) {
            Vec2 r = reduce01(verts[k]);
            Corner c{static_cast<int>(i), k, verts[(k + 1) % n] - verts[k],
                     verts[(k + n - 1) % n] - verts[k]};
            if (c.dnext == c.dprev) fail(t.name, "zero-angle face corner");
            at[{r.x, r.y}].push_back(c);
        }
    }
    if (at.size() != t.vertices.size()) fail(t.name, "corner scan disagrees with vertex classes");

    Int degree_sum = 0;
    for (const auto& [vk, corners] : at) {
        std::vector<Vec2> dirs;
        for (const Corner& c : corners) {
            for (const Vec2& d : {c.dnext, c.dprev})
                if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        for (size_t j = 0; j + 1 < dirs.size(); ++j)
            if (!angle_less(dirs[j], dirs[j + 1]))
                fail(t.name, "coincident edge directions at a vertex");
        size_t deg = dirs.size();
        if (corners.size() != deg) fail(t.name, "corner count differs from vertex degree");
        degree_sum += static_cast<Int>(deg);

        std::vector<int> seq;
        for (size_t j = 0; j < deg; ++j) {
            const Vec2& d0 = dirs[j];
            const Vec2& d1 = dirs[(j + 1) % deg];
            int found = -1;
            for (size_t ci = 0; ci < corners.size(); ++ci)
                if (corners[ci].dnext == d0 && corners[ci].dprev == d1) {
                    if (found >= 0) fail(t.name, "wedge covered by two corners");
                    found = static_cast<int>(ci);
                }
            if (found < 0) fail(t.name, "wedge at a vertex not covered by any corner");
            seq.push_back(static_cast<int>(t.faces[corners[found].face].verts.size()));
        }
        // declared vertex type up to rotation and reversal
        auto matches = [&](std::vector<int> want) {
            if (want.size() != seq.size()) return false;
            for (size_t r = 0; r < want.size(); ++r) {
                std::rotate(want.begin(), want.begin() + 1, want.end());
                if (want == seq) return true;
            }
            return false;
        };
        std::vector<int> declared = t.vertex_type;
        std::vector<int> reversed(declared.rbegin(), declared.rend());
        if (!matches(declared) && !matches(reversed))
            fail(t.name, "vertex figure does not match the declared type");
    }
    if (degree_sum != static_cast<Int>(2 * t.edges.size()))
        fail(t.name, "degree sum is not twice the edge count");

    // no two edge instances may cross, touch interiors, or coincide
    struct Seg {
        Vec2 a, b;
        int cls;
        IVec2 shift;
    };
    std::vector<Seg> segs;
    for (size_t e = 0; e < t.edges.size(); ++e)
        for (Int sx = -1; sx <= 1; ++sx)
            for (Int sy = -1; sy <= 1; ++sy) {
                Vec2 s = to_vec(IVec2{sx, sy});
                segs.push_back({t.edges[e].u + s, t.edges[e].w + s, static_cast<int>(e), {sx, sy}});
            }
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s1 = segs[i], &s2 = segs[j];
            if ((s1.a == s2.a && s1.b == s2.b) || (s1.a == s2.b && s1.b == s2.a))
                fail(t.name, "duplicate edge instance");
            int o1 = sign(cross(s1.b - s1.a, s2.a - s1.a));
            int o2 = sign(cross(s1.b - s1.a, s2.b - s1.a));
            int o3 = sign(cross(s2.b - s2.a, s1.a - s2.a));
            int o4 = sign(cross(s2.b - s2.a, s1.b - s2.a));
            if (o1 * o2 < 0 && o3 * o4 < 0) fail(t.name, "edges cross");
            if ((o1 == 0 && strictly_inside(s2.a, s1.a, s1.b)) ||
                (o2 == 0 && strictly_inside(s2.b, s1.a, s1.b)) ||
                (o3 == 0 && strictly_inside(s1.a, s2.a, s2.b)) ||
                (o4 == 0 && strictly_inside(s1.b, s2.a, s2.b)))
                fail(t.name, "edge endpoint inside another edge");
        }

    // symmetry classes: identity present, cell primitive (no pure fractional
    // translation)
    bool id_found = false;
    for (const IsometryClass& g : t.symmetries) {
        if (g.point == Mat2::identity()) {
            if (g.offset != Vec2{})
                fail(t.name, "cell is not primitive: fractional translation survives");
            id_found = true;
        }
        if (reduce01(g.offset) != g.offset) fail(t.name, "symmetry offset not reduced");
    }
    if (!id_found) fail(t.name, "identity symmetry missing");
}

const PeriodicTiling& tiling(TilingId id) {
    static const std::vector<PeriodicTiling>* all = [] {
        auto* v = new std::vector<PeriodicTiling>;
        for (TilingId tid : all_tilings()) {
            PeriodicTiling t = build_tiling(tid);
            validate_tiling(t);
            v->push_back(std::move(t));
        }
        return v;
    }();
    return (*all)[static_cast<size_t>(id)];
}

}  // namespace torusmaps
