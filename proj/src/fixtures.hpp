#pragma once

#include "ns.hpp"

#include <random>

namespace l3kit::fixtures {

// Deterministic generator for property runs; all sweeps are reproducible
// from the seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

    // Small rational, zero with probability ~ zero_percent.
    Scalar small_scalar(int zero_percent = 50);

    bool chance(int percent) { return uniform(0, 99) < percent; }

  private:
    std::mt19937_64 eng_;
};

// dim-2 algebra with [e1,e1,e1] = e2 and every other basis bracket zero.
ThreeLeibnizAlgebra a1();
Representation a1_adjoint();

// Setup over a1: adjoint actions, twist -2 times the bracket; the identity
// map is then a twisted Rota-Baxter operator.
TwistedSetup t_setup();
LinearOperator t_op();

// Nijenhuis operator on a1: N(e1) = e1 + e2, N(e2) = e2.
LinearOperator n_op();

// Reynolds operator on a1: T(e1) = e1, T(e2) = e2/2.
LinearOperator r_op();

// Richer dim-3 twisted Rota-Baxter operator built from an invertible
// 1-cochain: g is 2-step nilpotent, the actions factor through a square-zero
// endomorphism of V, Phi = -delta(w) and T = w^{-1}.
TwistedSetup big_setup();
LinearOperator big_t();

// One-dimensional setup with action scalars (1,-2,1) and Phi = 0: the
// twisted degree-2 differential is injective, so the second twisted
// cohomology group vanishes and every 1-cocycle extends to all orders.
TwistedSetup small_setup();
LinearOperator small_t();

// Random structure constants supported on a generating block with central
// outputs: every identity then holds by construction.
ThreeLeibnizAlgebra random_nilpotent_algebra(Rng& rng, int dim, int generators);

LeibnizAlgebra random_nilpotent_leibniz(Rng& rng, int dim, int generators);

// Valid representation drawn from a few families (zero, adjoint,
// square-zero-factor actions over a nilpotent algebra).
Representation random_representation(Rng& rng, int max_dim_g = 3, int max_dim_v = 2);

LinearOperator random_operator(Rng& rng, int src, int dst, int zero_percent = 40);

// Random closed 2-cochain: rational combination of a kernel basis of the
// degree-2 coboundary matrix.
Cochain random_closed_two_cochain(Rng& rng, const Representation& r);

Cochain random_cochain(Rng& rng, int degree, Direction dir, int src, int dst, int zero_percent = 60);

TwistedSetup random_setup(Rng& rng, int max_dim_g = 3, int max_dim_v = 2);

} // namespace l3kit::fixtures
