#include "conint/haar_so3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conint {

namespace {

int levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a,b,c) of (0,1,2)
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

Eigen::Matrix3cd cross_matrix(const ComplexVec3& p) {
    Eigen::Matrix3cd K;
    K << 0.0, -p.z, p.y,
         p.z, 0.0, -p.x,
        -p.y, p.x, 0.0;
    return K;
}

LorentzMatrix minkowski_eta() {
    LorentzMatrix eta = LorentzMatrix::Identity();
    eta(0, 0) = -1.0;
    return eta;
}

// antisymmetric basis tensor with F^{0b} = delta_{ab} and
// F^{cd} = sign * i * eps_{cda}; sign = -1 selects the selfdual triple
Eigen::Matrix4cd split_basis_tensor(int a, double sign) {
    Eigen::Matrix4cd F = Eigen::Matrix4cd::Zero();
    F(0, a + 1) = 1.0;
    F(a + 1, 0) = -1.0;
    const Complex unit(0.0, sign);
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
            F(c + 1, d + 1) = unit * static_cast<double>(levi_civita(c, d, a));
    return F;
}

// electric/magnetic components of an antisymmetric complex tensor
void field_components(const Eigen::Matrix4cd& G, ComplexVec3& B, ComplexVec3& r) {
    B = ComplexVec3{G(0, 1), G(0, 2), G(0, 3)};
    r = ComplexVec3{0.5 * (G(2, 3) - G(3, 2)),
                    0.5 * (G(3, 1) - G(1, 3)),
                    0.5 * (G(1, 2) - G(2, 1))};
}

}  // namespace

bool is_so3c(const So3cMatrix& M, double tol) {
    const So3cMatrix defect = M.transpose() * M - So3cMatrix::Identity();
    return defect.cwiseAbs().maxCoeff() < tol &&
           std::abs(M.determinant() - 1.0) < tol;
}

bool is_lorentz(const LorentzMatrix& L, double tol) {
    const LorentzMatrix eta = minkowski_eta();
    const LorentzMatrix defect = L.transpose() * eta * L - eta;
    return defect.cwiseAbs().maxCoeff() < tol &&
           L.determinant() > 0.0 && L(0, 0) > 0.0;
}

double haar_density(const Vec3& r) {
    const double r2 = r.dot(r);
    if (r2 >= 1.0)
        throw std::domain_error("haar_density: point outside the open unit ball");
    const double s = std::sqrt(1.0 - r2);
    return 1.0 / (s * (1.0 + s)) / (8.0 * std::numbers::pi * std::numbers::pi);
}

So3cMatrix so3c_exp(const ComplexVec3& phi) {
    const Complex p2 = phi.dot(phi);
    Complex sin_over, cos_term;  // sin(p)/p and (1-cos(p))/p^2
    if (std::abs(p2) < 1e-8) {
        // both are entire in p^2; two series terms reach full precision here
        sin_over = 1.0 - p2 / 6.0 * (1.0 - p2 / 20.0);
        cos_term = 0.5 - p2 / 24.0 * (1.0 - p2 / 30.0);
    } else {
        const Complex p = std::sqrt(p2);  // either sqrt branch gives the same matrix
        sin_over = std::sin(p) / p;
        cos_term = (1.0 - std::cos(p)) / p2;
    }
    const Eigen::Matrix3cd K = cross_matrix(phi);
    return So3cMatrix::Identity() - sin_over * K + cos_term * (K * K);
}

ComplexVec3 so3c_r(const So3cMatrix& M) {
    return ComplexVec3{0.5 * (M(1, 2) - M(2, 1)),
                       0.5 * (M(2, 0) - M(0, 2)),
                       0.5 * (M(0, 1) - M(1, 0))};
}

SelfdualSplit lorentz_selfdual_split(const LorentzMatrix& L) {
    if (!is_lorentz(L))
        throw std::domain_error(
            "lorentz_selfdual_split: input is not proper orthochronous Lorentz");
    const Eigen::Matrix4cd Lc = L.cast<Complex>();
    SelfdualSplit out;
    for (int a = 0; a < 3; ++a) {
        for (double sign : {-1.0, +1.0}) {
            const Eigen::Matrix4cd G =
                Lc * split_basis_tensor(a, sign) * Lc.transpose();
            ComplexVec3 B, r;
            field_components(G, B, r);
            // v_pm = (B +- i r)/2; the basis tensor for `sign` is the one this
            // projection maps to the unit vector e_a
            const Complex unit(0.0, -sign);
            for (int b = 0; b < 3; ++b) {
                const Complex v = 0.5 * (B[b] + unit * r[b]);
                if (sign < 0.0)
                    out.plus_R(b, a) = v;
                else
                    out.minus_R(b, a) = v;
            }
        }
    }
    return out;
}

AreaBivector bivector_split(const FourVector& l1, const FourVector& l2) {
    const Vec3 s1{l1(1), l1(2), l1(3)};
    const Vec3 s2{l2(1), l2(2), l2(3)};
    const Vec3 cr = cross(s1, s2);
    const Vec3 zero_part = s2 * l1(0) - s1 * l2(0);
    AreaBivector out;
    const Complex half_i(0.0, 0.5);
    for (int b = 0; b < 3; ++b) {
        out.plus_v[b] = Complex(0.5 * zero_part[b], 0.0) + half_i * cr[b];
        out.minus_v[b] = Complex(0.5 * zero_part[b], 0.0) - half_i * cr[b];
    }
    return out;
}

LorentzMatrix lorentz_rotation(const Vec3& axis_unit, double angle) {
    const double s = std::sin(angle), c = std::cos(angle);
    Eigen::Matrix3d K;
    K << 0.0, -axis_unit.z, axis_unit.y,
         axis_unit.z, 0.0, -axis_unit.x,
        -axis_unit.y, axis_unit.x, 0.0;
    const Eigen::Matrix3d R =
        Eigen::Matrix3d::Identity() + s * K + (1.0 - c) * (K * K);
    LorentzMatrix L = LorentzMatrix::Identity();
    L.block<3, 3>(1, 1) = R;
    return L;
}

LorentzMatrix lorentz_boost(const Vec3& dir_unit, double rapidity) {
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    LorentzMatrix L = LorentzMatrix::Identity();
    L(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        L(0, i + 1) = sh * dir_unit[i];
        L(i + 1, 0) = sh * dir_unit[i];
        for (int j = 0; j < 3; ++j)
            L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) +
                              (ch - 1.0) * dir_unit[i] * dir_unit[j];
    }
    return L;
}

}  // namespace conint
