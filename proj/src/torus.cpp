#include "torusmaps/torus.hpp"

#include <stdexcept>

namespace torusmaps {

MapCounts counts(const ToroidalMap& X) {
    const PeriodicTiling& t = tiling(X.type);
    Int n = X.sheets();
    return {n * static_cast<Int>(t.vertices.size()), n * static_cast<Int>(t.edges.size()),
            n * static_cast<Int>(t.faces.size()), n * static_cast<Int>(t.num_flags())};
}

std::vector<IsometryClass> surviving_symmetries(const ToroidalMap& X) {
    const PeriodicTiling& t = tiling(X.type);
    std::vector<IsometryClass> out;
    for (const IsometryClass& g : t.symmetries)
        if (normalizes(g.point, X.K)) out.push_back(g);
    return out;
}

OrbitReport flag_orbits(const ToroidalMap& X) {
    const PeriodicTiling& t = tiling(X.type);
    OrbitReport rep;
    rep.surviving = surviving_symmetries(X);
    std::vector<int> labels = t.flag_orbit_labels(rep.surviving);
    for (int lbl : labels) rep.orbit_count = std::max(rep.orbit_count, lbl + 1);
    rep.orbits.assign(rep.orbit_count, {-1, 0});
    Int n = X.sheets();
    for (int f = 0; f < t.num_flags(); ++f) {
        auto& [repr, size] = rep.orbits[labels[f]];
        if (repr < 0) repr = f;
        size += n;
    }
    return rep;
}

bool is_isomorphic(const ToroidalMap& X, const ToroidalMap& Y) {
    if (X.type != Y.type) return false;
    for (const Mat2& A : tiling(X.type).point_group())
        if (hnf(A * Y.K) == X.K) return true;
    return false;
}

ToroidalMap associated_equivelar(const ToroidalMap& X) {
    std::optional<TilingId> hat = hat_type(X.type);
    if (!hat)
        throw std::invalid_argument(std::string("no equivelar companion for type ") +
                                    tiling_name(X.type));
    return ToroidalMap(*hat, X.K);
}

}  // namespace torusmaps
