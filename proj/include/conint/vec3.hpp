#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace conint {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Complex 3-vector. dot() is the unmetric bilinear sum (no conjugation), so
// self-dot can be any complex number; norm_v takes its principal square root.
struct ComplexVec3 {
    Complex x{}, y{}, z{};

    ComplexVec3() = default;
    ComplexVec3(Complex a, Complex b, Complex c) : x(a), y(b), z(c) {}
    explicit ComplexVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    Complex& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    Complex operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    ComplexVec3 operator+(const ComplexVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    ComplexVec3 operator-(const ComplexVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    ComplexVec3 operator*(Complex s) const { return {x * s, y * s, z * s}; }

    Complex dot(const ComplexVec3& o) const { return x * o.x + y * o.y + z * o.z; }

    ComplexVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
};

inline ComplexVec3 cross(const ComplexVec3& a, const ComplexVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// principal branch: Re >= 0, cut on the negative real axis mapped to +i*|..|
inline Complex norm_v(const ComplexVec3& v) { return std::sqrt(v.dot(v)); }

}  // namespace conint
