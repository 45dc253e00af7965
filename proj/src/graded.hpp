#pragma once

#include "trbo.hpp"

namespace l3kit {

// Element of degree p in the graded space on a based vector space W: a
// multilinear map with p pair slots plus one final slot (arity 2p+1), values
// in W. coeffs has 2p+2 axes of size dim.
struct GradedElement {
    int degree = 0;
    int dim = 0;
    DenseTensor coeffs;
};

GradedElement zero_graded(int degree, int dim);

// Number of (a,b)-shuffles of {0..a+b-1}.
std::size_t shuffle_count(int a, int b);

// Circle product: the three shuffle sums (insertion of Q into the first pair
// component, into the second pair component, and into the final slot) with
// signs (-1)^((k-1)q), (-1)^sigma and (-1)^(pq)(-1)^sigma.
GradedElement circle(const GradedElement& p, const GradedElement& q);

// [P,Q] = P o Q - (-1)^(pq) Q o P.
GradedElement graded_bracket(const GradedElement& p, const GradedElement& q);

// The structure element of a twisted setup on W = g(+)V: bracket, the three
// actions and Phi packed into one degree-1 element. Squares to zero under
// the graded bracket (asserted on construction).
struct BigStructure {
    TwistedSetup setup;
    GradedElement pi;
    int dim_g = 0;
    int dim_v = 0;
};

BigStructure build_pi(const TwistedSetup& s);

// C^*(V,g) realized inside the graded space on W: lift extends by zero off
// the V-block and lands in the g-block; project restricts. project(lift(f)) = f.
GradedElement lift(const Cochain& f, int dim_g, int dim_v);
Cochain project(const GradedElement& e, int dim_g, int dim_v);

// Derived operations: nested graded brackets against pi (never transcribed
// expansions), kept on W.
GradedElement l3_w(const BigStructure& b, const GradedElement& p, const GradedElement& q, const GradedElement& r);
GradedElement l4_w(const BigStructure& b, const GradedElement& p, const GradedElement& q, const GradedElement& r,
                   const GradedElement& s);

// Projected derived operations on V -> g cochains.
Cochain l3(const BigStructure& b, const Cochain& p, const Cochain& q, const Cochain& r);
Cochain l4(const BigStructure& b, const Cochain& p, const Cochain& q, const Cochain& r, const Cochain& s);

// (1/3!) l3(T,T,T) + (1/4!) l4(T,T,T,T), projected: the Maurer-Cartan
// residual of T. Zero iff T is a twisted Rota-Baxter operator.
Cochain mc_residual(const BigStructure& b, const LinearOperator& t);

// Twisted operations around a twisted Rota-Baxter operator T:
//   l1^T(P) = 1/2 l3(T,T,P) + 1/6 l4(T,T,T,P)
//   l2^T(P,Q) = l3(T,P,Q) + 1/2 l4(T,T,P,Q)
//   l3^T(P,Q,R) = l3(P,Q,R) + l4(T,P,Q,R)
//   l4^T = l4; higher operations vanish.
Cochain l1_t(const BigStructure& b, const LinearOperator& t, const Cochain& p);
Cochain l2_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q);
Cochain l3_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q, const Cochain& r);
Cochain l4_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q, const Cochain& r,
             const Cochain& s);

Cochain cochain_add(const Cochain& a, const Cochain& b2);
Cochain cochain_scale(const Scalar& c, const Cochain& a);

} // namespace l3kit
