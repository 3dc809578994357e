#pragma once

#include "torus.hpp"

namespace torusmaps {

// A finite map as bare flags and three matchings: s0 crosses a vertex (other
// end of the same edge), s1 crosses an edge (other edge at the same corner),
// s2 crosses a face (same edge seen from the other side).  This is the
// brute-force route: no symmetry or lattice theory enters, so agreement with
// the quotient machinery is genuine cross-validation.
struct CombinatorialMap {
    int n = 0;
    std::vector<int> s0, s1, s2;
};

// all n * (cell flags) quotient flags of X, with the matchings computed
// geometrically from the tiling's edge identifications and K's cosets
CombinatorialMap quotient_flag_graph(const ToroidalMap& X);

// throws std::logic_error unless each s_i and s0∘s2 are fixed-point-free
// involutions and the three together reach every flag from flag 0
void validate_map(const CombinatorialMap& cm);

// every flag permutation commuting with s0, s1, s2.  An automorphism of a
// connected map is pinned down by the image of one flag, so each of the n
// candidate images is propagated outward from flag 0 and kept if consistent.
std::vector<std::vector<int>> automorphism_group(const CombinatorialMap& cm);

// orbits of flags under the full automorphism group
int orbit_count_oracle(const CombinatorialMap& cm);

// number of distinct sublattices among ALL integer matrices with entries in
// [-n, n] and determinant of magnitude n, deduplicated by Hermite form.
// Guards n <= 24; the base map only supplies the basis language.
Int brute_force_cover_census(const ToroidalMap& X, Int n);

}  // namespace torusmaps
