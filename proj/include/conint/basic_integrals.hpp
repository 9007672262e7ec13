#pragma once

#include <vector>

#include "conint/quadrature.hpp"
#include "conint/special_fn.hpp"
#include "conint/vec3.hpp"

namespace conint {

// ordered component labels, each in {0, 1, 2}
using MultiIndex = std::vector<int>;

// value of v d_{c1}...d_{cj} (1/v) at a complex 3-vector, v = |v|.  Rational in
// the components and v^2 = dot(v,v), so no square-root branch enters.
Complex tensor_structure(const ComplexVec3& v, const MultiIndex& idx);

// full contraction of the structure with unit-vector factors, averaged over
// the sphere.  The contracted scalar is homogeneous of degree zero and
// rotation invariant, hence constant on the sphere; it is evaluated exactly
// at one rational unit vector.
double angular_constant(int j);

// parity exponential with its first Taylor terms removed: sum over m >= j+2,
// m = j (mod 2), of u^m/m!, u = -i w / 2.  O(w^{j+2}) near zero and free of
// exponential growth for real w.
Complex subtracted_bracket(int j, Complex w);

// closed form -(4 pi^2 / r) (z-r)^j / (j! (2i)^j) for z > r, zero otherwise
Complex tilde_j(double r, double z, int j);

// brute-force route to tilde_j: the 3D oscillatory v-integral with subtracted
// Taylor terms, reduced to a radial half-line integral and evaluated with a
// damping schedule adapted to the distance from the support edge z = r
IntegralResult tilde_j_oracle(double r, double z, int j, const QuadratureSpec& spec);

// ball integral 4 pi^2 (-1)^{j+1}/j! int r_{c...} rho(r) d_{a...}[(z-r)^j/r]
// over r < z, rho the rotation-chart density; alpha are the derivative
// indices, gamma_idx the paired radius-component indices (equal lengths)
Complex tilde_i(double z, const MultiIndex& alpha, const MultiIndex& gamma_idx,
                const QuadratureSpec& spec);

// scalar factor N_j: (-i/2) [(1/g - i)/2]^{-j} Q/sinh(pi Q)
//   x (Q^2)^{floor(j/2)} / prod_{k=0}^{floor(j/2)} (Q^2 + (j+1-2k)^2),
// Q = (1/g - i) v / 2.  The euclidean flag swaps the coupling for (1/g + 1)
// and the prefactor for +1/2.
Complex n_scalar(Complex v, int j, const CouplingConfig& cfg);

struct BasicIntegralValue {
    Complex scalar;                // N_j including the sinh suppression
    int rank = 0;
    std::vector<Complex> tensor;   // 3^rank entries, row-major index tuples
    Complex value;                 // scalar * tensor[alpha]

    Complex at(const MultiIndex& idx) const;
};

// closed form of the basic connection integral: scalar factor times the
// traceless tensor structure, evaluated at v = principal sqrt(dot(v,v))
BasicIntegralValue basic_integral(const ComplexVec3& v, const MultiIndex& alpha,
                                  const CouplingConfig& cfg);

// magnitude bound for the order-r^j series term,
// 1/|G((j+3)/2 + w) G((j+3)/2 - w)| with w = i c v / 4, c the coupling
double series_term_bound(int j, double v, const CouplingConfig& cfg);

}  // namespace conint
