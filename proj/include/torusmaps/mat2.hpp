#pragma once

#include "arith.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

namespace torusmaps {

// integer lattice vector
struct IVec2 {
    Int x = 0, y = 0;
    friend IVec2 operator+(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend IVec2 operator-(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend IVec2 operator*(Int s, IVec2 v) { return {s * v.x, s * v.y}; }
    friend IVec2 operator-(IVec2 v) { return {-v.x, -v.y}; }
    friend bool operator==(IVec2 a, IVec2 b) = default;
    friend auto operator<=>(IVec2 a, IVec2 b) = default;
};

// rational point / vector in lattice coordinates (position = x*A + y*B)
struct Vec2 {
    Rat x{0}, y{0};
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) = default;
    // lexicographic, for canonical ordering only
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Vec2 vec(const Rat& x, const Rat& y) { return Vec2{x, y}; }
inline Vec2 to_vec(IVec2 v) { return Vec2{Rat(v.x), Rat(v.y)}; }

inline IVec2 vfloor(const Vec2& v) { return {rfloor(v.x), rfloor(v.y)}; }

inline std::string vec_str(const Vec2& v) { return "(" + rat_str(v.x) + "," + rat_str(v.y) + ")"; }

// 2x2 integer matrix, row-major: [[m00,m01],[m10,m11]]
struct Mat2 {
    std::array<Int, 4> m{0, 0, 0, 0};

    static Mat2 identity() { return {{1, 0, 0, 1}}; }
    static Mat2 from_rows(Int a, Int b, Int c, Int d) { return {{a, b, c, d}}; }
    static Mat2 from_cols(IVec2 c0, IVec2 c1) { return {{c0.x, c1.x, c0.y, c1.y}}; }
    static Mat2 diag(Int a, Int d) { return {{a, 0, 0, d}}; }

    Int entry(int r, int c) const { return m[2 * r + c]; }
    IVec2 col(int c) const { return {m[c], m[2 + c]}; }
    Int det() const { return m[0] * m[3] - m[1] * m[2]; }
    Mat2 transpose() const { return {{m[0], m[2], m[1], m[3]}}; }
    // adjugate: adj(M) * M = det(M) * I
    Mat2 adjugate() const { return {{m[3], -m[1], -m[2], m[0]}}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
    }
    friend IVec2 operator*(const Mat2& a, IVec2 v) {
        return {a.m[0] * v.x + a.m[1] * v.y, a.m[2] * v.x + a.m[3] * v.y};
    }
    friend Vec2 operator*(const Mat2& a, const Vec2& v) {
        return {Rat(a.m[0]) * v.x + Rat(a.m[1]) * v.y, Rat(a.m[2]) * v.x + Rat(a.m[3]) * v.y};
    }
    friend Mat2 operator-(const Mat2& a) { return {{-a.m[0], -a.m[1], -a.m[2], -a.m[3]}}; }
    friend bool operator==(const Mat2& a, const Mat2& b) = default;
    friend auto operator<=>(const Mat2& a, const Mat2& b) = default;

    // exact inverse applied to a rational vector; matrix must be nonsingular
    Vec2 solve(const Vec2& v) const {
        Int d = det();
        if (d == 0) throw std::invalid_argument("singular matrix");
        Mat2 a = adjugate();
        Vec2 w = a * v;
        return {w.x / d, w.y / d};
    }

    std::string str() const {
        return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
               std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
    }
};

}  // namespace torusmaps
