#pragma once

#include "trbo.hpp"

namespace l3kit {

// Four ternary products: lt = left (triangleleft), rt = right
// (triangleright), md = middle (triangle), dia = diamond. The star product
// lt + rt + md + dia is the subadjacent bracket.
struct NSAlgebra {
    int dim = 0;
    DenseTensor lt;  // [d,d,d,d]
    DenseTensor rt;
    DenseTensor md;
    DenseTensor dia;
};

// The fifth axiom exists in two forms. The printed one duplicates the fourth
// axiom's right side and is not satisfied by the operator-induced algebras;
// the corrected form (middle-product compatibility) is the default.
enum class NsAxiomMode { Corrected, Printed };

Report check_ns(const NSAlgebra& a, NsAxiomMode mode = NsAxiomMode::Corrected);

DenseTensor ns_star(const NSAlgebra& a);

// Sub-adjacent 3-Leibniz algebra on the star product. Requires check_ns.
ThreeLeibnizAlgebra subadjacent(const NSAlgebra& a);

// The canonical data every NS algebra carries over its subadjacent algebra:
// the (rt, md, lt) actions form a representation on g itself, dia is a
// closed 2-cochain, and the identity map is a dia-twisted Rota-Baxter
// operator.
struct NsCanonicalPackage {
    Representation rep;
    TwoCocycle phi;
    Report witness;
};

NsCanonicalPackage ns_canonical_package(const NSAlgebra& a);

// NS structure on V from a twisted Rota-Baxter operator:
//   [u,v,w]_lt = rho^r(u,Tv,Tw), [u,v,w]_md = rho^m(Tu,v,Tw),
//   [u,v,w]_rt = rho^l(Tu,Tv,w), [u,v,w]_dia = Phi(Tu,Tv,Tw).
NSAlgebra ns_from_trbo(const TwistedSetup& s, const LinearOperator& t);

NSAlgebra ns_from_nijenhuis(const ThreeLeibnizAlgebra& a, const LinearOperator& n);

NSAlgebra ns_from_reynolds(const ThreeLeibnizAlgebra& a, const LinearOperator& t);

// Weight-lambda Rota-Baxter identity:
// [Bx,By,Bz] = B([x,By,Bz] + [Bx,y,Bz] + [Bx,By,z]
//              + lambda([x,y,Bz] + [Bx,y,z] + [x,By,z]) + lambda^2 [x,y,z]).
Report check_weighted_rbo(const ThreeLeibnizAlgebra& a, const LinearOperator& b, const Scalar& lambda);

NSAlgebra ns_from_weighted_rbo(const ThreeLeibnizAlgebra& a, const LinearOperator& b, const Scalar& lambda);

// Compatible NS structure on g itself from an invertible twisted
// Rota-Baxter operator; the star product reproduces the original bracket.
NSAlgebra compatible_ns_from_invertible_trbo(const TwistedSetup& s, const LinearOperator& t);

// Diagnostic for the 3-Lie reduction: rt antisymmetric in its first two
// slots, md and lt the stated cyclic rotations of rt. Reports the literal
// conditions only.
Report ns_3lie_diagnostic(const NSAlgebra& a);

} // namespace l3kit
