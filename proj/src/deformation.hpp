#pragma once

#include "trbo_cohomology.hpp"

namespace l3kit {

// Order-n deformation: operators V -> g with terms[0] the base twisted
// Rota-Baxter operator; the order-p balance holds for every p <= n.
struct OrderNDeformation {
    TwistedSetup setup;
    std::vector<LinearOperator> terms;
};

// The order-p system, for each p in 0..terms.size()-1 on all basis triples:
//   sum_{i+j+k=p} [T_i u, T_j v, T_k w]
//     = sum_{i+j+k=p} T_i(rho^l(T_j u, T_k v, w) + rho^m(T_j u, v, T_k w) + rho^r(u, T_j v, T_k w))
//     + sum_{i+j+k+l=p} T_i Phi(T_j u, T_k v, T_l w).
Report check_order_n(const TwistedSetup& s, const std::vector<LinearOperator>& terms);

OrderNDeformation make_deformation(const TwistedSetup& s, std::vector<LinearOperator> terms);

// The first-order term of a valid deformation, as a closed degree-1 cochain.
Cochain infinitesimal(const TwistedSetup& s, const std::vector<LinearOperator>& terms);

// Degree-2 obstruction cochain of an order-n deformation; always closed.
struct ObstructionCochain {
    Cochain ob;
};

ObstructionCochain obstruction(const TwistedSetup& s, const std::vector<LinearOperator>& terms);

// A next term X solving partial_T(X) = -Ob, when the system is consistent;
// the extended list then passes check_order_n at order n+1. nullopt means
// the obstruction class is nonzero.
std::optional<LinearOperator> extend(const TwistedSetup& s, const std::vector<LinearOperator>& terms);

// A degree-0 witness A with wp(A) = t2 - t1, when the infinitesimals differ
// by a coboundary; nullopt otherwise.
std::optional<DegreeZeroCochain> infinitesimals_cohomologous(const TwistedSetup& s, const LinearOperator& t,
                                                             const Cochain& t1, const Cochain& t2);

} // namespace l3kit
