#include "artin/matrix.hpp"

namespace artin {

Mat4 mat_zero(unsigned order) {
    Mat4 m;
    for (CycNum& e : m.a) e = CycNum::zero(order);
    return m;
}

Mat4 mat_identity(unsigned order) {
    Mat4 m = mat_zero(order);
    for (int i = 0; i < 4; ++i) m.at(i, i) = CycNum::one(order);
    return m;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
    unsigned ord = x.a[0].order();
    Mat4 r = mat_zero(ord);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

Mat4 operator-(const Mat4& x) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.a[i] = -x.a[i];
    return r;
}

Mat4 mat_scale(const CycNum& s, const Mat4& x) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
    return r;
}

bool operator==(const Mat4& x, const Mat4& y) {
    for (size_t i = 0; i < 16; ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

bool mat_less(const Mat4& x, const Mat4& y) {
    for (size_t i = 0; i < 16; ++i) {
        int c = CycNum::cmp(x.a[i], y.a[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CycNum trace(const Mat4& x) {
    return x.at(0, 0) + x.at(1, 1) + x.at(2, 2) + x.at(3, 3);
}

namespace {
CycNum det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
    return m.at(r0, c0) * (m.at(r1, c1) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c1)) -
           m.at(r0, c1) * (m.at(r1, c0) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c0)) +
           m.at(r0, c2) * (m.at(r1, c0) * m.at(r2, c1) - m.at(r1, c1) * m.at(r2, c0));
}
}  // namespace

CycNum det(const Mat4& x) {
    CycNum d = CycNum::zero(x.a[0].order());
    int sign = 1;
    for (int c = 0; c < 4; ++c) {
        int cc[3], t = 0;
        for (int j = 0; j < 4; ++j)
            if (j != c) cc[t++] = j;
        CycNum m = x.at(0, c) * det3(x, 1, 2, 3, cc[0], cc[1], cc[2]);
        d = sign > 0 ? d + m : d - m;
        sign = -sign;
    }
    return d;
}

Mat4 transpose(const Mat4& x) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = x.at(j, i);
    return r;
}

Mat4 mat_promoted(const Mat4& x, unsigned order) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.a[i] = x.a[i].promoted(order);
    return r;
}

Mat4 mat_pow(Mat4 x, unsigned long k) {
    Mat4 r = mat_identity(x.a[0].order());
    while (k > 0) {
        if (k & 1) r = r * x;
        x = x * x;
        k >>= 1;
    }
    return r;
}

Mat4 kron(const std::array<CycNum, 4>& x, const std::array<CycNum, 4>& y) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r.at(2 * i + k, 2 * j + l) =
                        x[static_cast<size_t>(2 * i + j)] * y[static_cast<size_t>(2 * k + l)];
    return r;
}

std::string mat_str(const Mat4& x) {
    std::string out = "[";
    for (int i = 0; i < 4; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < 4; ++j) {
            if (j) out += ", ";
            out += x.at(i, j).str();
        }
    }
    return out + "]";
}

}  // namespace artin
