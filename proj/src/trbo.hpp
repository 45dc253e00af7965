#pragma once

#include "cohomology.hpp"

#include <optional>

namespace l3kit {

// Linear map between based spaces; matrix is dst_dim x src_dim.
struct LinearOperator {
    int src_dim = 0;
    int dst_dim = 0;
    Matrix matrix;
};

LinearOperator identity_operator(int n);
LinearOperator zero_operator(int src, int dst);

inline Vec op_apply(const LinearOperator& t, const Vec& x) { return t.matrix.apply(x); }
Vec op_column(const LinearOperator& t, int j);

// Degree-1 cochains are linear maps; these convert between the two views.
Cochain cochain_from_operator(const LinearOperator& w, Direction dir);
LinearOperator operator_from_cochain(const Cochain& f, int src, int dst);

// A representation together with a closed 2-cochain: the standing data for
// everything twisted.
struct TwistedSetup {
    Representation rep;
    TwoCocycle phi;
};

TwistedSetup make_setup(Representation rep, Cochain phi);

// Evaluates Phi on coordinate vectors.
Vec phi_eval(const TwistedSetup& s, const Vec& x, const Vec& y, const Vec& z);

// [Tu,Tv,Tw] = T(rho^l(Tu,Tv,w) + rho^m(Tu,v,Tw) + rho^r(u,Tv,Tw) + Phi(Tu,Tv,Tw))
// on all basis triples of V.
Report check_trbo(const TwistedSetup& s, const LinearOperator& t);

// The defect of the identity above: lhs - rhs on basis triples, as a
// degree-2 cochain in C^2(V,g). Zero iff T is a twisted Rota-Baxter operator.
Cochain trbo_defect(const TwistedSetup& s, const LinearOperator& t);

// [u,v,w]_T = rho^l(Tu,Tv,w) + rho^m(Tu,v,Tw) + rho^r(u,Tv,Tw) + Phi(Tu,Tv,Tw).
// Requires check_trbo; T then becomes a morphism onto the original bracket.
ThreeLeibnizAlgebra induced_bracket(const TwistedSetup& s, const LinearOperator& t);

// Same formula with no gate (needed to probe arbitrary linear maps).
ThreeLeibnizAlgebra induced_bracket_raw(const TwistedSetup& s, const LinearOperator& t);

// Graph criterion: {Tu+u} closed under the twisted semidirect bracket.
bool check_graph_subalgebra(const TwistedSetup& s, const LinearOperator& t);

// phi_map carries basis vectors of A into B-coordinates; checks
// phi_map([a,b,c]_A) = [phi_map a, phi_map b, phi_map c]_B on basis triples.
Report check_bracket_morphism(const ThreeLeibnizAlgebra& a, const ThreeLeibnizAlgebra& b, const Matrix& phi_map);

// Morphism of twisted Rota-Baxter operators (f,g): f an algebra morphism, g
// intertwining the three actions and Phi, and f T = T' g.
Report check_morphism(const TwistedSetup& s, const TwistedSetup& s2, const LinearOperator& t,
                      const LinearOperator& t2, const LinearOperator& f, const LinearOperator& g);

// [Nx,Ny,Nz] = N([x,Ny,Nz]+[Nx,y,Nz]+[Nx,Ny,z] - N([x,y,Nz]+[x,Ny,z]+[Nx,y,z]) + N^2[x,y,z]).
Report check_nijenhuis(const ThreeLeibnizAlgebra& a, const LinearOperator& n);

// Everything a Nijenhuis operator induces: the deformed algebra g_N, the
// representation of g_N back on g, the closed 2-cochain, and the witness
// that the identity map V=g -> g_N is a twisted Rota-Baxter operator.
struct NijenhuisPackage {
    ThreeLeibnizAlgebra deformed;
    Representation rep;   // of `deformed` on the underlying space of a
    TwoCocycle phi;
    Report witness;       // check_trbo of Id in this setup
};

NijenhuisPackage nijenhuis_package(const ThreeLeibnizAlgebra& a, const LinearOperator& n);

TwistedSetup nijenhuis_setup(const NijenhuisPackage& p);

// Reynolds operator: the twisted identity specialized to the adjoint
// representation with Phi = -bracket.
Report check_reynolds(const ThreeLeibnizAlgebra& a, const LinearOperator& t);

TwistedSetup reynolds_setup(const ThreeLeibnizAlgebra& a);

// (x,u) -> x + u - w(x) as an isomorphism from the Phi-twisted semidirect
// product onto the (Phi + delta w)-twisted one.
Report shift_iso(const Representation& r, const TwoCocycle& phi, const LinearOperator& w);

// T(Id - w T)^-1, a twisted Rota-Baxter operator in the setup whose twist is
// the shifted cocycle Phi + delta(w) (the twist shifts by the coboundary of
// the 1-cochain, which is the only degree-correct reading); nullopt when
// Id - w T is singular.
std::optional<LinearOperator> shift_trbo(const TwistedSetup& s, const LinearOperator& t, const LinearOperator& w);

// Gauge transform T_w = T(Id + w T)^-1 for a T-admissible 1-cocycle w; the
// twist is unchanged and Id + w T intertwines the induced brackets.
std::optional<LinearOperator> gauge_transform(const TwistedSetup& s, const LinearOperator& t, const LinearOperator& w);

} // namespace l3kit
