#include "torusmaps/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace torusmaps {

Mat2 hnf(const Mat2& M) {
    if (M.det() == 0) throw std::invalid_argument("hnf: singular matrix " + M.str());
    IVec2 c0 = M.col(0), c1 = M.col(1);
    // euclid on the top row
    while (c1.x != 0) {
        Int q = floor_div(c0.x, c1.x);
        c0 = c0 - q * c1;
        std::swap(c0, c1);
    }
    if (c0.x < 0) c0 = -c0;
    if (c1.y < 0) c1 = -c1;
    // c1.y != 0 since det != 0
    c0 = c0 - floor_div(c0.y, c1.y) * c1;
    return Mat2::from_cols(c0, c1);
}

Mat2 hnf_cols(std::vector<IVec2> cols) {
    // gather everything into one column with nonzero x plus columns with x == 0
    std::vector<IVec2> work;
    IVec2 lead{0, 0};
    for (IVec2 c : cols) {
        if (c.x == 0 && c.y == 0) continue;
        // fold c into (lead, work) keeping lead the only column with x != 0
        while (c.x != 0) {
            if (lead.x == 0) {
                std::swap(lead, c);
                continue;
            }
            Int q = floor_div(c.x, lead.x);
            c = c - q * lead;
            if (c.x != 0) std::swap(lead, c);
        }
        if (c.y != 0) work.push_back(c);
    }
    if (lead.x == 0) throw std::invalid_argument("hnf_cols: rank < 2");
    Int g = 0;
    for (IVec2 c : work) g = std::gcd(g, c.y);
    if (g == 0) throw std::invalid_argument("hnf_cols: rank < 2");
    if (lead.x < 0) lead = -lead;
    IVec2 second{0, g};
    lead = lead - floor_div(lead.y, g) * second;
    return Mat2::from_cols(lead, second);
}

bool in_lattice(const Mat2& K, IVec2 v) {
    Int d = K.det();
    if (d == 0) throw std::invalid_argument("in_lattice: singular lattice basis");
    IVec2 w = K.adjugate() * v;
    return w.x % d == 0 && w.y % d == 0;
}

bool is_sublattice(const Mat2& L, const Mat2& K) {
    return in_lattice(K, L.col(0)) && in_lattice(K, L.col(1));
}

Int lattice_index(const Mat2& L, const Mat2& K) {
    for (int c = 0; c < 2; ++c) {
        IVec2 v = L.col(c);
        if (!in_lattice(K, v)) {
            throw std::invalid_argument("lattice_index: generator (" + std::to_string(v.x) + "," +
                                        std::to_string(v.y) + ") of " + L.str() +
                                        " is not in lattice " + K.str());
        }
    }
    Int a = L.det(), b = K.det();
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return a / b;
}

bool normalizes(const Mat2& P, const Mat2& K) {
    if (!is_unimodular(P)) return false;
    return is_sublattice(P * K, K);
}

std::vector<IVec2> coset_reps(const Mat2& K) {
    if (!is_hnf(K)) throw std::invalid_argument("coset_reps: basis not in HNF: " + K.str());
    Int a = K.m[0], d = K.m[3];
    std::vector<IVec2> reps;
    reps.reserve(static_cast<size_t>(a * d));
    for (Int x = 0; x < a; ++x)
        for (Int y = 0; y < d; ++y) reps.push_back({x, y});
    return reps;
}

Vec2 reduce_mod(const Vec2& v, const Mat2& K) {
    Vec2 u = K.solve(v);
    IVec2 f = vfloor(u);
    return v - K * to_vec(f);
}

Mat2 lattice_intersect(const Mat2& A, const Mat2& B) {
    Int da = A.det(), db = B.det();
    if (da == 0 || db == 0) throw std::invalid_argument("lattice_intersect: singular basis");
    // duality: (L1 cap L2)^perp = L1^perp + L2^perp, with dual(M) = M^{-T}.
    // Scale duals by D = |da*db| to stay integral.
    Int D = da * db;
    if (D < 0) D = -D;
    Mat2 dualA = A.adjugate().transpose();  // columns * (1/da) generate dual(A)
    Mat2 dualB = B.adjugate().transpose();
    Int sa = D / da, sb = D / db;
    std::vector<IVec2> cols = {sa * dualA.col(0), sa * dualA.col(1), sb * dualB.col(0),
                               sb * dualB.col(1)};
    Mat2 S = hnf_cols(cols);
    Int ds = S.det();
    Mat2 adjT = S.adjugate().transpose();
    // result columns = (D/ds) * adjT columns; must come out integral
    Mat2 R;
    for (int i = 0; i < 4; ++i) {
        Int num = D * adjT.m[i];
        if (num % ds != 0)
            throw std::logic_error("lattice_intersect: non-integral result");
        R.m[i] = num / ds;
    }
    return hnf(R);
}

}  // namespace torusmaps
