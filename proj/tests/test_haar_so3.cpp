#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "conint/haar_so3.hpp"
#include "conint/quadrature.hpp"

using namespace conint;

namespace {

constexpr double kPi = std::numbers::pi;

double mat_dist(const So3cMatrix& A, const So3cMatrix& B) {
    return (A - B).cwiseAbs().maxCoeff();
}

double vec_dist(const ComplexVec3& a, const ComplexVec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

std::mt19937 rng(20240517);

Vec3 random_unit() {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    return v * (1.0 / v.norm());
}

LorentzMatrix random_lorentz(double max_rapidity = 1.5) {
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_real_distribution<double> rap(-max_rapidity, max_rapidity);
    return lorentz_rotation(random_unit(), ang(rng)) *
           lorentz_boost(random_unit(), rap(rng)) *
           lorentz_rotation(random_unit(), ang(rng));
}

ComplexVec3 apply(const So3cMatrix& M, const ComplexVec3& v) {
    ComplexVec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = M(i, 0) * v[0] + M(i, 1) * v[1] + M(i, 2) * v[2];
    return out;
}

FourVector apply4(const LorentzMatrix& L, const FourVector& v) { return L * v; }

}  // namespace

TEST_CASE("chart density: closed form, removable origin, domain") {
    const double at_origin = 1.0 / (16.0 * kPi * kPi);
    CHECK(haar_density(Vec3{0, 0, 0}) == doctest::Approx(at_origin).epsilon(1e-14));
    // tiny r agrees with the r = 0 limit (no 0/0 blowup)
    CHECK(haar_density(Vec3{1e-9, 0, 0}) == doctest::Approx(at_origin).epsilon(1e-12));

    const Vec3 r{0.6, 0.0, 0.0};
    const double direct = (1.0 / std::sqrt(1.0 - 0.36) - 1.0) / (8.0 * kPi * kPi * 0.36);
    CHECK(haar_density(r) == doctest::Approx(direct).epsilon(1e-14));

    CHECK_THROWS_AS(haar_density(Vec3{1.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(haar_density(Vec3{0.8, 0.8, 0.0}), std::domain_error);
}

TEST_CASE("chart density: total mass over the unit ball") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    auto res = integrate_ball(
        [](const Vec3& r) { return Complex(haar_density(r), 0.0); }, spec);
    REQUIRE(res.converged());
    const double mass = (kPi - 2.0) / (4.0 * kPi);
    CHECK(std::abs(res.value.real() - mass) < 1e-8);
    CHECK(std::abs(res.value.imag()) < 1e-12);
}

TEST_CASE("exponential map: pinned values") {
    CHECK(mat_dist(so3c_exp(ComplexVec3{}), So3cMatrix::Identity()) < 1e-15);

    // quarter turn about z
    const ComplexVec3 quarter{0.0, 0.0, kPi / 2.0};
    So3cMatrix Q;
    Q << 0, 1, 0,
        -1, 0, 0,
         0, 0, 1;
    CHECK(mat_dist(so3c_exp(quarter), Q) < 1e-15);
    CHECK(vec_dist(so3c_r(so3c_exp(quarter)), ComplexVec3{0.0, 0.0, 1.0}) < 1e-15);

    // imaginary angle: r picks up -i sinh
    const Complex mi(0.0, -1.0);
    const ComplexVec3 im_angle{0.0, 0.0, mi * 0.3};
    const ComplexVec3 expect{0.0, 0.0, mi * std::sinh(0.3)};
    CHECK(vec_dist(so3c_r(so3c_exp(im_angle)), expect) < 1e-14);
}

TEST_CASE("exponential map: orthogonality, roundtrip, series branch") {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int it = 0; it < 60; ++it) {
        // real and genuinely complex vectors, lengths spanning the series cutoff
        const double scale = std::pow(10.0, -6.0 * (it % 5) / 4.0) * 3.0;
        ComplexVec3 phi{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                        Complex(u(rng), u(rng))};
        if (it % 2 == 0) phi = ComplexVec3{Vec3{u(rng), u(rng), u(rng)}};
        phi = phi * Complex(scale, 0.0);

        const So3cMatrix M = so3c_exp(phi);
        CHECK(is_so3c(M, 1e-10));

        const Complex p2 = phi.dot(phi);
        const Complex p = std::sqrt(p2);
        const Complex fac = std::abs(p) < 1e-12 ? Complex(1.0) : std::sin(p) / p;
        CHECK(vec_dist(so3c_r(M), phi * fac) < 1e-10);

        // inverse = exponential of the negated vector
        CHECK(mat_dist(M * so3c_exp(phi * Complex(-1.0)), So3cMatrix::Identity()) < 1e-12);
    }

    // one-parameter subgroup: parallel angles compose additively
    const ComplexVec3 dir{Complex(0.3, 0.1), Complex(-0.2, 0.0), Complex(0.5, -0.4)};
    const So3cMatrix A = so3c_exp(dir * Complex(0.7));
    const So3cMatrix B = so3c_exp(dir * Complex(0.4));
    CHECK(mat_dist(A * B, so3c_exp(dir * Complex(1.1))) < 1e-13);
}

TEST_CASE("selfdual split: rotations and boosts") {
    const SelfdualSplit id = lorentz_selfdual_split(LorentzMatrix::Identity());
    CHECK(mat_dist(id.plus_R, So3cMatrix::Identity()) < 1e-14);
    CHECK(mat_dist(id.minus_R, So3cMatrix::Identity()) < 1e-14);

    // spatial rotation: both halves equal the same real rotation matrix
    const double th = 0.83;
    const SelfdualSplit rot =
        lorentz_selfdual_split(lorentz_rotation(Vec3{0, 0, 1}, th));
    So3cMatrix R;
    R << std::cos(th), -std::sin(th), 0,
         std::sin(th), std::cos(th), 0,
         0, 0, 1;
    CHECK(mat_dist(rot.plus_R, R) < 1e-13);
    CHECK(mat_dist(rot.minus_R, R) < 1e-13);

    // boost along z: plus half is the imaginary-angle rotation about z
    const double psi = 0.62;
    const SelfdualSplit bst =
        lorentz_selfdual_split(lorentz_boost(Vec3{0, 0, 1}, psi));
    const ComplexVec3 im_angle{0.0, 0.0, Complex(0.0, -psi)};
    CHECK(mat_dist(bst.plus_R, so3c_exp(im_angle)) < 1e-13);
    CHECK(mat_dist(bst.minus_R, bst.plus_R.conjugate()) < 1e-15);
    CHECK(vec_dist(so3c_r(bst.plus_R), ComplexVec3{0.0, 0.0, Complex(0.0, -std::sinh(psi))}) <
          1e-13);

    CHECK_THROWS_AS(lorentz_selfdual_split(2.0 * LorentzMatrix::Identity()),
                    std::domain_error);
    LorentzMatrix improper = LorentzMatrix::Identity();
    improper(0, 0) = -1.0;
    improper(1, 1) = -1.0;
    CHECK_THROWS_AS(lorentz_selfdual_split(improper), std::domain_error);
}

TEST_CASE("selfdual split: multiplicative and valued in the complex rotations") {
    for (int it = 0; it < 100; ++it) {
        const LorentzMatrix L1 = random_lorentz();
        const LorentzMatrix L2 = random_lorentz();
        const SelfdualSplit s1 = lorentz_selfdual_split(L1);
        const SelfdualSplit s2 = lorentz_selfdual_split(L2);
        const SelfdualSplit s12 = lorentz_selfdual_split(L1 * L2);
        CHECK(mat_dist(s12.plus_R, s1.plus_R * s2.plus_R) < 1e-9);
        CHECK(mat_dist(s12.minus_R, s1.minus_R * s2.minus_R) < 1e-9);
        CHECK(is_so3c(s1.plus_R, 1e-9));
        CHECK(mat_dist(s1.minus_R, s1.plus_R.conjugate()) < 1e-12);
    }
}

TEST_CASE("bivector split: pinned examples and symmetries") {
    const FourVector ex{0, 1, 0, 0}, ey{0, 0, 1, 0}, et{1, 0, 0, 0};

    const AreaBivector spat = bivector_split(ex, ey);
    CHECK(vec_dist(spat.plus_v, ComplexVec3{0.0, 0.0, Complex(0.0, 0.5)}) < 1e-15);
    CHECK(std::abs(spat.plus_v.dot(spat.plus_v) - Complex(-0.25)) < 1e-15);

    const AreaBivector timelike = bivector_split(et, ex);
    CHECK(vec_dist(timelike.plus_v, ComplexVec3{0.5, 0.0, 0.0}) < 1e-15);
    CHECK(std::abs(timelike.plus_v.dot(timelike.plus_v) - Complex(0.25)) < 1e-15);

    CHECK(vec_dist(bivector_split(ex, ex).plus_v, ComplexVec3{}) < 1e-15);

    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 20; ++it) {
        const FourVector l1{u(rng), u(rng), u(rng), u(rng)};
        const FourVector l2{u(rng), u(rng), u(rng), u(rng)};
        const AreaBivector ab = bivector_split(l1, l2);
        const AreaBivector ba = bivector_split(l2, l1);
        CHECK(vec_dist(ab.plus_v, ba.plus_v * Complex(-1.0)) < 1e-14);
        CHECK(vec_dist(ab.minus_v, ba.minus_v * Complex(-1.0)) < 1e-14);
        // real edges: the two halves are complex conjugates
        CHECK(vec_dist(ab.minus_v, ab.plus_v.conj()) < 1e-15);
    }
}

TEST_CASE("bivector split: equivariance under the split of the frame change") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 50; ++it) {
        const LorentzMatrix L = random_lorentz();
        const SelfdualSplit s = lorentz_selfdual_split(L);
        const FourVector l1{u(rng), u(rng), u(rng), u(rng)};
        const FourVector l2{u(rng), u(rng), u(rng), u(rng)};
        const AreaBivector before = bivector_split(l1, l2);
        const AreaBivector after = bivector_split(apply4(L, l1), apply4(L, l2));
        CHECK(vec_dist(after.plus_v, apply(s.plus_R, before.plus_v)) < 1e-9);
        CHECK(vec_dist(after.minus_v, apply(s.minus_R, before.minus_v)) < 1e-9);
    }
}
