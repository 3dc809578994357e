#pragma once

#include "mat2.hpp"

#include <vector>

namespace torusmaps {

// Sublattices of Z^2 are stored as 2x2 integer matrices whose *columns*
// generate the lattice.  Canonical form is the column-style Hermite normal
// form [[a,0],[b,d]] with a,d > 0 and 0 <= b < d.

// canonical HNF basis of the lattice spanned by the columns of M.
// Throws std::invalid_argument if M is singular.
Mat2 hnf(const Mat2& M);

// HNF basis of the lattice spanned by an arbitrary set of integer vectors.
// Throws if the span has rank < 2.
Mat2 hnf_cols(std::vector<IVec2> cols);

inline bool is_hnf(const Mat2& M) {
    return M.m[1] == 0 && M.m[0] > 0 && M.m[3] > 0 && M.m[2] >= 0 && M.m[2] < M.m[3];
}

// does the integer vector v lie in the lattice spanned by K's columns?
bool in_lattice(const Mat2& K, IVec2 v);

// is every column of L inside the lattice of K?
bool is_sublattice(const Mat2& L, const Mat2& K);

// index [K : L] of L as a sublattice of K; throws (naming a witness column)
// if L is not contained in K.
Int lattice_index(const Mat2& L, const Mat2& K);

inline bool is_unimodular(const Mat2& M) {
    Int d = M.det();
    return d == 1 || d == -1;
}

// P * Lambda(K) == Lambda(K) for a (necessarily unimodular) integer matrix P
bool normalizes(const Mat2& P, const Mat2& K);

// coset representatives of Z^2 / Lambda(K) for K in HNF, in row-major scan
// order (x outer, y inner); size == det(K).
std::vector<IVec2> coset_reps(const Mat2& K);

// representative of v modulo the lattice of K, lying in K * [0,1)^2
Vec2 reduce_mod(const Vec2& v, const Mat2& K);

// intersection of the two lattices, in HNF
Mat2 lattice_intersect(const Mat2& A, const Mat2& B);

}  // namespace torusmaps
