#pragma once

#include "tiling.hpp"

namespace torusmaps {

// Quotient of a periodic tiling by the sublattice spanned by the columns of
// K (coordinates in the tiling's {A,B} basis).  K is normalized to Hermite
// form on construction, so two quotients are the same map exactly when the
// fields compare equal.
struct ToroidalMap {
    TilingId type;
    Mat2 K;  // Hermite form, det > 0

    ToroidalMap(TilingId t, const Mat2& k) : type(t), K(hnf(k)) {}

    Int sheets() const { return K.det(); }

    friend bool operator==(const ToroidalMap&, const ToroidalMap&) = default;
};

struct MapCounts {
    Int vertices, edges, faces, flags;
};

// n times the per-cell counts, n = det K; Euler characteristic is 0
MapCounts counts(const ToroidalMap& X);

// symmetry classes of the tiling whose point part maps K's lattice to
// itself — exactly the classes that descend to the quotient.  Always
// contains the identity and the half turn.
std::vector<IsometryClass> surviving_symmetries(const ToroidalMap& X);

struct OrbitReport {
    int orbit_count = 0;
    // one entry per orbit: a representative cell-flag id and the number of
    // quotient flags in the orbit
    std::vector<std::pair<int, Int>> orbits;
    std::vector<IsometryClass> surviving;
};

// Flag orbits of the quotient under its full symmetry group.  The deck
// translations act freely and transitively on the sheets of every cell-flag
// class, so quotient orbits are exactly the orbits of the surviving classes
// on cell flags, each inflated by the sheet count.  (The oracle module
// recomputes this from the raw flag permutations with no symmetry theory,
// which is what keeps this reduction honest.)
OrbitReport flag_orbits(const ToroidalMap& X);

// true when some point-group matrix carries Y's lattice onto X's
bool is_isomorphic(const ToroidalMap& X, const ToroidalMap& Y);

// the equivelar companion on the same lattice (square companion for the two
// square-ish types, triangular for the five hexagonal-ish ones); throws
// std::invalid_argument when X's type has none
ToroidalMap associated_equivelar(const ToroidalMap& X);

}  // namespace torusmaps
