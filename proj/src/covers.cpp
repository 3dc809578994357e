#include "torusmaps/covers.hpp"

#include <stdexcept>

namespace torusmaps {

CoverDescriptor cyclic_cover(const ToroidalMap& X, Int n) {
    if (n < 1) throw std::invalid_argument("cyclic_cover: sheet count must be positive");
    return {X, Mat2::from_rows(n, 0, 0, 1), n};
}

std::vector<CoverDescriptor> enumerate_covers(const ToroidalMap& X, Int n) {
    if (n < 1) throw std::invalid_argument("enumerate_covers: sheet count must be positive");
    std::vector<CoverDescriptor> out;
    for (Int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        for (Int b = 0; b < d; ++b) out.push_back({X, Mat2::from_rows(n / d, 0, b, d), n});
    }
    return out;
}

std::vector<std::vector<int>> classify_covers_up_to_iso(const std::vector<CoverDescriptor>& cs) {
    for (const CoverDescriptor& c : cs)
        if (!(c.base == cs.front().base))
            throw std::invalid_argument("classify_covers_up_to_iso: covers of different bases");
    std::vector<std::vector<int>> classes;
    std::vector<ToroidalMap> reps;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
        ToroidalMap m = cs[i].cover();
        bool placed = false;
        for (size_t c = 0; c < reps.size(); ++c)
            if (is_isomorphic(reps[c], m)) {
                classes[c].push_back(i);
                placed = true;
                break;
            }
        if (!placed) {
            classes.push_back({i});
            reps.push_back(m);
        }
    }
    return classes;
}

CoverDescriptor semiregular_cover_mm(const ToroidalMap& X) {
    Int m = X.K.det();
    return {X, Mat2::diag(m, m), m * m};
}

std::optional<CoverDescriptor> minimal_cover_with_orbits(const ToroidalMap& X, int k,
                                                         std::optional<Int> bound) {
    if (k < 1) throw std::invalid_argument("minimal_cover_with_orbits: orbit count must be positive");
    Int limit;
    if (bound)
        limit = *bound;
    else if (k == tiling(X.type).plane_flag_orbit_count())
        limit = X.K.det() * X.K.det();
    else
        limit = 64;
    for (Int n = 1; n <= limit; ++n)
        for (const CoverDescriptor& c : enumerate_covers(X, n))
            if (flag_orbits(c.cover()).orbit_count == k) return c;
    return std::nullopt;
}

}  // namespace torusmaps
