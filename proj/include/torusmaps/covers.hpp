#pragma once

#include "torus.hpp"

#include <optional>

namespace torusmaps {

// A finite cover of `base`, described by a matrix S in the basis of the
// base's own lattice: the cover is the quotient by the sublattice K*S.
struct CoverDescriptor {
    ToroidalMap base;
    Mat2 S;      // columns generate the cover lattice inside K's basis
    Int sheets;  // |det S|

    ToroidalMap cover() const { return ToroidalMap(base.type, base.K * S); }
};

// the n-sheet cover that unrolls the first lattice direction n times
CoverDescriptor cyclic_cover(const ToroidalMap& X, Int n);

// all sublattices of index n in the base lattice, as Hermite matrices
// [[n/d,0],[b,d]] over divisors d of n and 0 <= b < d; there are sigma(n)
// of them (sum of divisors), pairwise distinct as maps.  Ordered by (d, b).
std::vector<CoverDescriptor> enumerate_covers(const ToroidalMap& X, Int n);

// partition of the given covers into isomorphism classes of their quotient
// maps; classes are listed by first appearance and hold input indices.
// All descriptors must share one base.
std::vector<std::vector<int>> classify_covers_up_to_iso(const std::vector<CoverDescriptor>& cs);

// the scaled cover S = m*I with m = det K: m^2 sheets over X.  Note the
// cover lattice m*K has exactly the surviving symmetries of K itself, so
// this cover's orbit count equals the base's, not in general the plane
// orbit count of the type (the acceptance tool prints a worked example).
CoverDescriptor semiregular_cover_mm(const ToroidalMap& X);

// Smallest cover of X whose flag-orbit count is exactly k, searching sheet
// counts 1, 2, ... and within a sheet count in enumerate_covers order.
// The search is exhaustive up to `bound` sheets (default: det(K)^2 when k
// is the plane orbit count of X's type — that always suffices, because the
// scalar lattice (det K) * Z^2 lies inside K and keeps the whole point
// group — otherwise 64).  Covers with MORE orbits than the base exist, so
// no monotonicity shortcut is taken and exhaustion means only "none within
// the bound", never "none exists".
std::optional<CoverDescriptor> minimal_cover_with_orbits(const ToroidalMap& X, int k,
                                                         std::optional<Int> bound = std::nullopt);

}  // namespace torusmaps
