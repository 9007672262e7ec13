#pragma once

#include <Eigen/Dense>

#include "conint/vec3.hpp"

namespace conint {

using So3cMatrix = Eigen::Matrix3cd;   // complex orthogonal, det 1
using LorentzMatrix = Eigen::Matrix4d; // index 0 is time; signature (-,+,+,+)
using FourVector = Eigen::Vector4d;

bool is_so3c(const So3cMatrix& M, double tol = 1e-10);
bool is_lorentz(const LorentzMatrix& L, double tol = 1e-10);

// rotation-chart density (1/sqrt(1-r^2) - 1)/(8 pi^2 r^2) on the real unit
// ball, written as 1/(s(1+s))/(8 pi^2) with s = sqrt(1-r^2): algebraically the
// same and finite at r = 0 (value 1/(16 pi^2)) without a special case
double haar_density(const Vec3& r);

// exponential-map matrix for a complex rotation vector phi.
// Orientation fixed by the extraction below: so3c_r(so3c_exp(phi)) =
// phi sin(phi)/phi with phi = principal sqrt(phi.phi).
So3cMatrix so3c_exp(const ComplexVec3& phi);

// r_a = eps_{abc} M^{bc} / 2
ComplexVec3 so3c_r(const So3cMatrix& M);

struct SelfdualSplit {
    So3cMatrix plus_R;
    So3cMatrix minus_R;  // = conj(plus_R) for real Lorentz input
};

// multiplicative split: adjoint action of L on the (anti)selfdual basis of
// antisymmetric rank-2 tensors
SelfdualSplit lorentz_selfdual_split(const LorentzMatrix& L);

struct AreaBivector {
    ComplexVec3 plus_v;
    ComplexVec3 minus_v;
};

// 2 (+v) = +i l1 x l2 - l1 l2^0 + l2 l1^0 (spatial parts), and with -i for -v
AreaBivector bivector_split(const FourVector& l1, const FourVector& l2);

// explicit generators used by tests and the simplicial layer
LorentzMatrix lorentz_rotation(const Vec3& axis_unit, double angle);
LorentzMatrix lorentz_boost(const Vec3& dir_unit, double rapidity);

}  // namespace conint
