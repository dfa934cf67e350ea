#pragma once

#include <array>
#include <string>

#include "artin/cyclotomic.hpp"

namespace artin {

// 4x4 matrix over a cyclotomic field, row major. Entries are expected to
// share one field order; mixed orders still work through CycNum promotion.
struct Mat4 {
    std::array<CycNum, 16> a;

    CycNum& at(int r, int c) { return a[static_cast<size_t>(4 * r + c)]; }
    const CycNum& at(int r, int c) const { return a[static_cast<size_t>(4 * r + c)]; }
};

Mat4 mat_zero(unsigned order);
Mat4 mat_identity(unsigned order);

Mat4 operator*(const Mat4& x, const Mat4& y);
Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x);
Mat4 mat_scale(const CycNum& s, const Mat4& x);

bool operator==(const Mat4& x, const Mat4& y);
inline bool operator!=(const Mat4& x, const Mat4& y) { return !(x == y); }
// entrywise lexicographic order; canonical because CycNum comparison is exact
bool mat_less(const Mat4& x, const Mat4& y);
struct MatLess {
    bool operator()(const Mat4& x, const Mat4& y) const { return mat_less(x, y); }
};

CycNum trace(const Mat4& x);
CycNum det(const Mat4& x);
Mat4 transpose(const Mat4& x);
Mat4 mat_promoted(const Mat4& x, unsigned order);
Mat4 mat_pow(Mat4 x, unsigned long k);

// Kronecker product of two 2x2 matrices given row major
Mat4 kron(const std::array<CycNum, 4>& x, const std::array<CycNum, 4>& y);

std::string mat_str(const Mat4& x);

}  // namespace artin
