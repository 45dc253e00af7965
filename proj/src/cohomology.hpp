#pragma once

#include "algebra.hpp"
#include "linalg.hpp"

namespace l3kit {

enum class Direction { g_to_V, V_to_g };

// n-cochain, n >= 1: a multilinear map with 2n-1 source slots (n-1 pairs
// followed by one final slot) and values in the destination space.
// coeffs has 2n-1 axes of the source dimension plus one output axis.
struct Cochain {
    int degree = 1;
    Direction direction = Direction::g_to_V;
    DenseTensor coeffs;
};

Cochain zero_cochain(int degree, Direction dir, int src, int dst);

// Shape check: 2n-1 axes of size src, one of size dst.
void validate_cochain(const Cochain& f, int src, int dst);

// Bracket-plus-actions bundle the coboundary formula needs. The source space
// carries the ternary bracket; the destination space carries the actions.
struct ModuleData {
    int src = 0;
    int dst = 0;
    DenseTensor bracket; // [s,s,s,s]
    DenseTensor act_l;   // [s,s,D,D]
    DenseTensor act_m;   // [s,D,s,D]
    DenseTensor act_r;   // [D,s,s,D]
};

ModuleData module_of(const Representation& r);

// Coboundary of an n-cochain (coefficient tensor in, degree n+1 tensor out),
// computed term by term:
//   sum_{j<k} (-1)^j f(..X_j-hat.., x_k(x)[x_j,y_j,y_k] + [x_j,y_j,x_k](x)y_k, .., z)
// + sum_j (-1)^j f(..X_j-hat.., [x_j,y_j,z])
// + sum_j (-1)^{j+1} act_l(x_j, y_j, f(..X_j-hat.., z))
// + (-1)^{n+1} (act_m(x_n, f(X_1..X_{n-1}, y_n), z) + act_r(f(X_1..X_{n-1}, x_n), y_n, z)).
DenseTensor coboundary_tensor(const ModuleData& md, const DenseTensor& f, int n);

// Matrix of the coboundary at degree n in the lexicographic cochain bases.
Matrix coboundary_matrix(const ModuleData& md, int n);

// Coboundary in C^*(g, V). Errors on direction V_to_g (that complex lives in
// the twisted cohomology of an operator and uses different actions).
Cochain coboundary(const Representation& r, const Cochain& f);

bool is_cocycle(const Representation& r, const Cochain& f);

// 2-cocycle, closedness verified on construction.
struct TwoCocycle {
    Cochain phi;
};

TwoCocycle make_two_cocycle(const Representation& r, Cochain phi);

// dim Z^n - dim B^n (with B^1 = 0: the complex starts at degree 1).
int cohomology_dim(const Representation& r, int n);

// Twisted semidirect product on g(+)V: semidirect terms plus Phi(x,y,z) in
// the V component.
ThreeLeibnizAlgebra twisted_semidirect(const Representation& r, const TwoCocycle& phi);

// Same construction without the closedness gate; the bracket is evaluated
// literally, so the result is a 3-Leibniz algebra iff phi is closed.
ThreeLeibnizAlgebra twisted_semidirect_raw(const Representation& r, const Cochain& phi);

} // namespace l3kit
