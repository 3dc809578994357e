#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusmaps/lattice.hpp"

#include <random>

using namespace torusmaps;

namespace {

// independent membership check: small coefficient search, no linear algebra
bool brute_member(const Mat2& K, IVec2 v, Int bound = 60) {
    for (Int s = -bound; s <= bound; ++s)
        for (Int t = -bound; t <= bound; ++t)
            if (s * K.col(0) + t * K.col(1) == v) return true;
    return false;
}

Mat2 random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 2), shear(-3, 3);
    Mat2 U = Mat2::identity();
    for (int i = 0; i < 6; ++i) {
        int c = coin(rng);
        Int k = shear(rng);
        if (c == 0)
            U = U * Mat2::from_rows(1, k, 0, 1);
        else if (c == 1)
            U = U * Mat2::from_rows(1, 0, k, 1);
        else
            U = U * Mat2::from_rows(0, 1, 1, 0);
    }
    return U;
}

Mat2 random_nonsingular(std::mt19937& rng, Int lim = 9) {
    std::uniform_int_distribution<Int> d(-lim, lim);
    while (true) {
        Mat2 M = Mat2::from_rows(d(rng), d(rng), d(rng), d(rng));
        if (M.det() != 0) return M;
    }
}

}  // namespace

TEST_CASE("hnf on known inputs") {
    CHECK(hnf(Mat2::from_rows(0, 1, -2, 0)) == Mat2::from_rows(1, 0, 0, 2));
    CHECK(hnf(Mat2::from_cols({7, 0}, {3, 1})) == Mat2::from_rows(1, 0, 5, 7));
    CHECK(hnf(Mat2::diag(5, 3)) == Mat2::diag(5, 3));
    CHECK(hnf(Mat2::from_cols({1, 1}, {1, -1})) == Mat2::from_rows(1, 0, 1, 2));
    CHECK(hnf(Mat2::identity()) == Mat2::identity());
    CHECK_THROWS_AS(hnf(Mat2::from_rows(2, 4, 1, 2)), std::invalid_argument);
}

TEST_CASE("hnf output shape and span") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Mat2 M = random_nonsingular(rng, 6);
        Mat2 H = hnf(M);
        CHECK(is_hnf(H));
        Int dm = M.det(), dh = H.det();
        CHECK(dh == (dm < 0 ? -dm : dm));
        // same lattice both ways (in_lattice itself is checked against the
        // coefficient search in its own test)
        for (int c = 0; c < 2; ++c) {
            CHECK(in_lattice(M, H.col(c)));
            CHECK(in_lattice(H, M.col(c)));
        }
    }
}

TEST_CASE("hnf invariant under unimodular column ops") {
    std::mt19937 rng(999);
    for (int i = 0; i < 1000; ++i) {
        Mat2 M = random_nonsingular(rng);
        Mat2 U = random_unimodular(rng);
        CHECK(hnf(M * U) == hnf(M));
    }
}

TEST_CASE("hnf_cols handles redundant generating sets") {
    Mat2 H = hnf_cols({{18, 0}, {0, 18}, {12, 0}, {0, 12}});
    CHECK(H == Mat2::diag(6, 6));
    CHECK(hnf_cols({{1, 1}, {1, -1}, {2, 0}, {0, 2}}) == Mat2::from_rows(1, 0, 1, 2));
    CHECK(hnf_cols({{2, 3}, {4, 6}, {0, 5}}) == hnf(Mat2::from_cols({2, 3}, {0, 5})));
    CHECK_THROWS_AS(hnf_cols({{2, 4}, {1, 2}, {-3, -6}}), std::invalid_argument);
    CHECK_THROWS_AS(hnf_cols({{0, 0}}), std::invalid_argument);
}

TEST_CASE("in_lattice matches coefficient search") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<Int> d(-12, 12);
    for (int i = 0; i < 300; ++i) {
        Mat2 M = random_nonsingular(rng, 5);
        IVec2 v{d(rng), d(rng)};
        // Cramer: any valid coefficient is bounded by 2*12*5 = 120
        CHECK(in_lattice(M, v) == brute_member(M, v, 130));
    }
}

TEST_CASE("lattice_index") {
    CHECK(lattice_index(Mat2::diag(5, 3), Mat2::identity()) == 15);
    CHECK(lattice_index(Mat2::from_cols({1, 1}, {1, -1}), Mat2::identity()) == 2);
    CHECK(lattice_index(Mat2::diag(15, 15), Mat2::diag(5, 3)) == 15);
    CHECK(lattice_index(Mat2::identity(), Mat2::identity()) == 1);
    CHECK_THROWS_AS(lattice_index(Mat2::diag(5, 3), Mat2::diag(2, 1)), std::invalid_argument);
}

TEST_CASE("coset_reps are a transversal") {
    Mat2 K = hnf(Mat2::diag(5, 3));
    auto reps = coset_reps(K);
    REQUIRE(reps.size() == 15);
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(in_lattice(K, reps[i] - reps[j]));

    Mat2 K2 = hnf(Mat2::from_cols({1, 1}, {1, -1}));
    auto reps2 = coset_reps(K2);
    REQUIRE(reps2.size() == 2);
    CHECK_FALSE(in_lattice(K2, reps2[0] - reps2[1]));
}

TEST_CASE("reduce_mod") {
    Mat2 K = Mat2::diag(5, 3);
    Vec2 v{Rat(7, 2), Rat(-1)};
    Vec2 r = reduce_mod(v, K);
    CHECK(r == vec(Rat(7, 2), Rat(2)));
    CHECK(reduce_mod(r, K) == r);
    // difference lands in the lattice
    Vec2 diff = v - r;
    CHECK(is_integer(diff.x));
    CHECK(is_integer(diff.y));
    CHECK(in_lattice(K, {diff.x.numerator(), diff.y.numerator()}));

    std::mt19937 rng(4242);
    std::uniform_int_distribution<Int> num(-40, 40);
    std::uniform_int_distribution<Int> den(1, 7);
    for (int i = 0; i < 200; ++i) {
        Mat2 M = random_nonsingular(rng, 4);
        Vec2 w{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        Vec2 red = reduce_mod(w, M);
        Vec2 c = M.solve(red);
        CHECK(c.x >= 0);
        CHECK(c.x < 1);
        CHECK(c.y >= 0);
        CHECK(c.y < 1);
        CHECK(reduce_mod(red, M) == red);
    }
}

TEST_CASE("normalizes") {
    Mat2 R6 = Mat2::from_rows(0, -1, 1, 1);
    CHECK(normalizes(R6, Mat2::diag(3, 3)));
    CHECK_FALSE(normalizes(R6, Mat2::diag(5, 3)));
    CHECK(normalizes(-Mat2::identity(), Mat2::diag(5, 3)));
    // non-unimodular matrices never qualify even when the image fits
    CHECK_FALSE(normalizes(Mat2::diag(2, 2), Mat2::identity()));
    // congruence-mod-3 lattice is fixed by the hex rotation
    Mat2 L3 = hnf(Mat2::from_cols({1, 1}, {0, 3}));
    CHECK(normalizes(R6, L3));
}

TEST_CASE("lattice_intersect on known pairs") {
    CHECK(lattice_intersect(Mat2::diag(2, 2), Mat2::diag(3, 3)) == Mat2::diag(6, 6));
    Mat2 diamond = Mat2::from_cols({1, 1}, {1, -1});
    CHECK(lattice_intersect(diamond, Mat2::identity()) == hnf(diamond));
    CHECK(lattice_intersect(Mat2::diag(4, 6), Mat2::diag(6, 4)) == Mat2::diag(12, 12));
}

TEST_CASE("lattice_intersect properties") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 150; ++i) {
        Mat2 A = random_nonsingular(rng, 4);
        Mat2 B = random_nonsingular(rng, 4);
        Mat2 I1 = lattice_intersect(A, B);
        CHECK(I1 == lattice_intersect(B, A));
        CHECK(is_sublattice(I1, A));
        CHECK(is_sublattice(I1, B));
        CHECK(lattice_intersect(A, A) == hnf(A));
        // every point of a small box lying in both lattices lies in the meet
        for (Int x = -6; x <= 6; ++x)
            for (Int y = -6; y <= 6; ++y) {
                IVec2 v{x, y};
                bool both = in_lattice(A, v) && in_lattice(B, v);
                CHECK(both == in_lattice(I1, v));
            }
    }
}
