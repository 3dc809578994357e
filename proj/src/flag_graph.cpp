#include "torusmaps/flag_graph.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace torusmaps {

namespace {

// coset representatives of K's lattice with lookup and reduction
struct CosetIndex {
    Mat2 K;
    std::vector<IVec2> reps;
    std::map<std::pair<Int, Int>, int> where;

    explicit CosetIndex(const Mat2& k) : K(k), reps(coset_reps(k)) {
        for (int i = 0; i < static_cast<int>(reps.size()); ++i)
            where.emplace(std::make_pair(reps[i].x, reps[i].y), i);
    }

    // K is Hermite [[a,0],[b,d]] with columns (a,b),(0,d): peel off the
    // first column to fix x, then the second to fix y
    int reduce(const IVec2& v) const {
        Int a = K.m[0], b = K.m[2], d = K.m[3];
        Int rx = mod_floor(v.x, a);
        Int s = (v.x - rx) / a;
        Int ry = mod_floor(v.y - b * s, d);
        auto it = where.find({rx, ry});
        if (it == where.end()) throw std::logic_error("coset reduction left the rep box");
        return it->second;
    }
};

}  // namespace

CombinatorialMap quotient_flag_graph(const ToroidalMap& X) {
    const PeriodicTiling& t = tiling(X.type);
    CosetIndex cosets(X.K);
    int C = static_cast<int>(cosets.reps.size());
    CombinatorialMap cm;
    cm.n = t.num_flags() * C;
    cm.s0.assign(cm.n, -1);
    cm.s1.assign(cm.n, -1);
    cm.s2.assign(cm.n, -1);
    for (int i = 0; i < static_cast<int>(t.faces.size()); ++i) {
        int sz = static_cast<int>(t.faces[i].verts.size());
        for (int k = 0; k < sz; ++k)
            for (int b = 0; b < 2; ++b) {
                int id = t.flag_id(i, k, b);
                int ve = t.flag_id(i, k, 1 - b);
                int ed = b == 0 ? t.flag_id(i, (k + sz - 1) % sz, 1)
                                : t.flag_id(i, (k + 1) % sz, 0);
                const auto& sides = t.edges[t.edge_of[i][k]].sides;
                int a = (sides[0].face == i && sides[0].pos == k) ? 0 : 1;
                if (!(sides[a].face == i && sides[a].pos == k))
                    throw std::logic_error("edge side lookup failed");
                const auto& other = sides[1 - a];
                // the two sides traverse the edge oppositely, so the partner
                // flag sits at the flipped end; crossing moves the cell by
                // the difference of the sides' frame shifts
                int fa = t.flag_id(other.face, other.pos, 1 - b);
                IVec2 delta = other.shift - sides[a].shift;
                for (int c = 0; c < C; ++c) {
                    cm.s0[id * C + c] = ve * C + c;
                    cm.s1[id * C + c] = ed * C + c;
                    cm.s2[id * C + c] = fa * C + cosets.reduce(cosets.reps[c] + delta);
                }
            }
    }
    validate_map(cm);
    return cm;
}

void validate_map(const CombinatorialMap& cm) {
    if (cm.n <= 0) throw std::logic_error("flag graph: empty");
    auto involution = [&](const std::vector<int>& s, const std::string& name) {
        if (static_cast<int>(s.size()) != cm.n)
            throw std::logic_error("flag graph: " + name + " has wrong length");
        for (int i = 0; i < cm.n; ++i) {
            if (s[i] < 0 || s[i] >= cm.n)
                throw std::logic_error("flag graph: " + name + " maps out of range");
            if (s[i] == i) throw std::logic_error("flag graph: " + name + " has a fixed point");
            if (s[s[i]] != i) throw std::logic_error("flag graph: " + name + " is not an involution");
        }
    };
    involution(cm.s0, "s0");
    involution(cm.s1, "s1");
    involution(cm.s2, "s2");
    for (int i = 0; i < cm.n; ++i) {
        int j = cm.s0[cm.s2[i]];
        if (j == i) throw std::logic_error("flag graph: s0*s2 has a fixed point");
        if (cm.s0[cm.s2[j]] != i) throw std::logic_error("flag graph: s0*s2 is not an involution");
    }
    std::vector<char> seen(cm.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : {cm.s0[u], cm.s1[u], cm.s2[u]})
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != cm.n) throw std::logic_error("flag graph: not connected");
}

std::vector<std::vector<int>> automorphism_group(const CombinatorialMap& cm) {
    const std::vector<int>* ss[3] = {&cm.s0, &cm.s1, &cm.s2};
    // spanning order from flag 0; every later flag is some s-image of an
    // earlier one, which pins down any commuting permutation
    std::vector<int> order;
    order.reserve(cm.n);
    std::vector<std::pair<int, int>> from(cm.n, {-1, -1});
    std::vector<char> seen(cm.n, 0);
    seen[0] = 1;
    order.push_back(0);
    for (size_t q = 0; q < order.size(); ++q)
        for (int s = 0; s < 3; ++s) {
            int v = (*ss[s])[order[q]];
            if (!seen[v]) {
                seen[v] = 1;
                from[v] = {order[q], s};
                order.push_back(v);
            }
        }
    std::vector<std::vector<int>> autos;
    std::vector<int> phi(cm.n);
    std::vector<char> hit(cm.n);
    for (int img = 0; img < cm.n; ++img) {
        phi.assign(cm.n, -1);
        phi[0] = img;
        for (size_t q = 1; q < order.size(); ++q) {
            auto [p, s] = from[order[q]];
            phi[order[q]] = (*ss[s])[phi[p]];
        }
        hit.assign(cm.n, 0);
        bool ok = true;
        for (int i = 0; i < cm.n && ok; ++i) {
            if (hit[phi[i]]) ok = false;
            hit[phi[i]] = 1;
            for (int s = 0; s < 3 && ok; ++s)
                if (phi[(*ss[s])[i]] != (*ss[s])[phi[i]]) ok = false;
        }
        if (ok) autos.push_back(phi);
    }
    return autos;
}

int orbit_count_oracle(const CombinatorialMap& cm) {
    auto autos = automorphism_group(cm);
    std::vector<int> parent(cm.n);
    for (int i = 0; i < cm.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& phi : autos)
        for (int i = 0; i < cm.n; ++i) {
            int a = find(i), b = find(phi[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    int count = 0;
    for (int i = 0; i < cm.n; ++i)
        if (find(i) == i) ++count;
    return count;
}

Int brute_force_cover_census(const ToroidalMap&, Int n) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("brute_force_cover_census: sheet count must be in 1..24");
    std::set<std::array<Int, 4>> seen;
    for (Int a = -n; a <= n; ++a)
        for (Int b = -n; b <= n; ++b)
            for (Int c = -n; c <= n; ++c)
                for (Int d = -n; d <= n; ++d) {
                    Int det = a * d - b * c;
                    if (det != n && det != -n) continue;
                    seen.insert(hnf(Mat2::from_rows(a, b, c, d)).m);
                }
    return static_cast<Int>(seen.size());
}

}  // namespace torusmaps
