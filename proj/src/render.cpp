#include "torusmaps/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace torusmaps {

namespace {

// fixed fill palette for orbit classes (the plane counts top out at 10)
const char* kPalette[12] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#9c755f",
    "#edc948", "#76b7b2", "#ff9da7", "#86bcb6", "#d37295", "#bab0ac",
};

struct Basis {
    double ax, ay, bx, by;  // Euclidean images of the two lattice basis vectors
};

// the lattice basis drawn with true angles and lengths for each family
Basis euclid_basis(TilingId id) {
    const double h = std::sqrt(3.0) / 2.0;
    switch (id) {
        case TilingId::Square:
        case TilingId::SnubSquare:
        case TilingId::TruncatedSquare:
            return {1.0, 0.0, 0.0, 1.0};
        case TilingId::ElongatedTriangular:
            return {1.0, 0.0, 0.5, 1.0 + h};  // a square row plus a triangle row
        default:
            return {1.0, 0.0, 0.5, h};  // hexagonal lattice
    }
}

struct Pt {
    double x, y;
};

std::string fnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // avoid "-0.0000"
    return buf;
}

}  // namespace

std::string render_svg(TilingId id, int cells) {
    if (cells < 1 || cells > 6) throw std::invalid_argument("cell count must be in [1, 6]");
    const PeriodicTiling& t = tiling(id);
    const Basis eb = euclid_basis(id);
    const double scale = 72.0;

    auto emit = [&](const Vec2& v) -> Pt {
        double x = boost::rational_cast<double>(v.x);
        double y = boost::rational_cast<double>(v.y);
        // SVG's y axis points down; negate so the picture is right-side up
        return {scale * (x * eb.ax + y * eb.bx), -scale * (x * eb.ay + y * eb.by)};
    };

    // orbit class of every flag of the plane tiling
    std::vector<int> label = t.flag_orbit_labels(t.symmetries);

    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    auto grow = [&](Pt p) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (int cx = 0; cx < cells; ++cx)
        for (int cy = 0; cy < cells; ++cy)
            for (const auto& f : t.faces)
                for (const auto& v : f.verts) grow(emit(v + to_vec(IVec2{cx, cy})));

    const double pad = 0.06 * scale;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fnum(minx - pad) + " " +
           fnum(miny - pad) + " " + fnum(maxx - minx + 2 * pad) + " " +
           fnum(maxy - miny + 2 * pad) + "\">\n";

    auto polygon = [&](const std::vector<Pt>& ps, const std::string& attrs) {
        svg += "<polygon points=\"";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) svg += " ";
            svg += fnum(ps[i].x) + "," + fnum(ps[i].y);
        }
        svg += "\"";
        if (!attrs.empty()) svg += " " + attrs;
        svg += "/>\n";
    };

    // flag triangles, colored by orbit class
    svg += "<g stroke=\"#ffffff\" stroke-width=\"0.5\" stroke-linejoin=\"round\">\n";
    for (int cx = 0; cx < cells; ++cx)
        for (int cy = 0; cy < cells; ++cy) {
            Vec2 cell = to_vec(IVec2{cx, cy});
            for (size_t i = 0; i < t.faces.size(); ++i) {
                const auto& vs = t.faces[i].verts;
                int n = static_cast<int>(vs.size());
                Pt bary = emit(t.barycenters[i] + cell);
                for (int p = 0; p < n; ++p) {
                    Vec2 a = vs[p], b = vs[(p + 1) % n];
                    Pt mid = emit(Rat(1, 2) * (a + b) + cell);
                    for (int end = 0; end < 2; ++end) {
                        Pt corner = emit((end == 0 ? a : b) + cell);
                        int cls = label[t.flag_id(static_cast<int>(i), p, end)];
                        polygon({corner, mid, bary},
                                std::string("fill=\"") + kPalette[cls % 12] + "\"");
                    }
                }
            }
        }
    svg += "</g>\n";

    // face outlines on top so the tiling itself stays legible
    svg += "<g fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
    for (int cx = 0; cx < cells; ++cx)
        for (int cy = 0; cy < cells; ++cy) {
            Vec2 cell = to_vec(IVec2{cx, cy});
            for (const auto& f : t.faces) {
                std::vector<Pt> ps;
                for (const auto& v : f.verts) ps.push_back(emit(v + cell));
                polygon(ps, "");
            }
        }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace torusmaps
