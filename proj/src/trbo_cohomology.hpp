#pragma once

#include "graded.hpp"

namespace l3kit {

// The representation of (V, [.,.,.]_T) on g induced by a twisted Rota-Baxter
// operator:
//   rho_T^l(u,v,x) = [Tu,Tv,x] - T(rho^m(Tu,v,x) + rho^r(u,Tv,x) + Phi(Tu,Tv,x))
//   rho_T^m(u,x,v) = [Tu,x,Tv] - T(rho^l(Tu,x,v) + rho^r(u,x,Tv) + Phi(Tu,x,Tv))
//   rho_T^r(x,u,v) = [x,Tu,Tv] - T(rho^l(x,Tu,v) + rho^m(x,u,Tv) + Phi(x,Tu,Tv))
struct InducedRep {
    ThreeLeibnizAlgebra on_v; // (V, [.,.,.]_T)
    DenseTensor rho_l;        // [v,v,d,d]
    DenseTensor rho_m;        // [v,d,v,d]
    DenseTensor rho_r;        // [d,v,v,d]
};

InducedRep induced_rep(const TwistedSetup& s, const LinearOperator& t);

// View as a plain Representation (of on_v acting on g) so the generic
// representation check applies.
Representation induced_rep_as_representation(const InducedRep& ir);

ModuleData induced_module(const InducedRep& ir);

// Element of g(x)g, the degree-0 piece of the twisted complex. The full
// tensor square is used: the degree-0 map below is not antisymmetric in its
// two legs, so restricting to antisymmetric tensors would silently shrink
// the space of 1-coboundaries.
struct DegreeZeroCochain {
    Matrix tensor; // [d x d]: coefficient of e_i(x)e_j at (i,j)
};

// Twisted coboundary on C^n(V,g), n >= 1.
Cochain delta_T(const TwistedSetup& s, const LinearOperator& t, const Cochain& f);

// wp(A)(u) = T rho^l(a,b,u) + T Phi(a,b,Tu) - [a,b,Tu], extended bilinearly;
// always a 1-cocycle of the twisted complex.
Cochain wp(const TwistedSetup& s, const LinearOperator& t, const DegreeZeroCochain& a);

// Full twisted differential: wp at degree 0, delta_T above.
Cochain partial_T(const TwistedSetup& s, const LinearOperator& t, const DegreeZeroCochain& a);
Cochain partial_T(const TwistedSetup& s, const LinearOperator& t, const Cochain& f);

// Matrix of wp in the lexicographic bases: (v*d) x (d*d).
Matrix wp_matrix(const TwistedSetup& s, const LinearOperator& t);

Matrix delta_T_matrix(const TwistedSetup& s, const LinearOperator& t, int n);

// dim ker(partial at n) - rank(partial at n-1); the degree-0 domain g(x)g
// feeds the coboundaries at n = 1.
int cohomology_dim_T(const TwistedSetup& s, const LinearOperator& t, int n);

} // namespace l3kit
