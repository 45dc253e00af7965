#pragma once

#include "report.hpp"

#include <span>

namespace l3kit {

// 3-Leibniz algebra by structure constants: bracket[i][j][k][l] is the
// coefficient of e_l in [e_i, e_j, e_k].
struct ThreeLeibnizAlgebra {
    int dim = 0;
    DenseTensor bracket; // [dim, dim, dim, dim]
};

// Binary (left) Leibniz algebra: bracket[i][j][k] = coefficient of e_k in [e_i, e_j].
struct LeibnizAlgebra {
    int dim = 0;
    DenseTensor bracket; // [dim, dim, dim]
};

// Representation (V; rho^l, rho^m, rho^r) of a 3-Leibniz algebra.
//   rho_l[i][j][a][b]: coefficient of f_b in rho^l(e_i, e_j, f_a)
//   rho_m[i][a][j][b]: coefficient of f_b in rho^m(e_i, f_a, e_j)
//   rho_r[a][i][j][b]: coefficient of f_b in rho^r(f_a, e_i, e_j)
struct Representation {
    ThreeLeibnizAlgebra algebra;
    int dimV = 0;
    DenseTensor rho_l; // [d, d, v, v]
    DenseTensor rho_m; // [d, v, d, v]
    DenseTensor rho_r; // [v, d, d, v]
};

// Representation (V; rho^L, rho^R) of a Leibniz algebra.
struct LeibnizRepresentation {
    LeibnizAlgebra algebra;
    int dimV = 0;
    DenseTensor rho_L; // [d, v, v]
    DenseTensor rho_R; // [v, d, v]
};

// --- multilinear evaluation helpers (expansion in the basis) ---

// Contiguous output row of a tensor whose last axis is the output space.
std::span<const Scalar> out_row(const DenseTensor& t, std::span<const int> lead);

inline std::span<const Scalar> out_row3(const DenseTensor& t, int i, int j, int k) {
    const int idx[3] = {i, j, k};
    return out_row(t, idx);
}

// Trilinear map given by a [a,b,c,out] tensor, applied to coordinate vectors.
Vec tri_eval(const DenseTensor& t, const Vec& x, const Vec& y, const Vec& z);

// Trilinear map applied with one slot carrying a coefficient row and basis
// indices a, b filling the remaining slots in order.
Vec tri_slot(const DenseTensor& t, std::span<const Scalar> row, int slot, int a, int b);

// Bilinear map given by a [a,b,out] tensor.
Vec bi_eval(const DenseTensor& t, const Vec& x, const Vec& y);

Vec basis_vec(int dim, int i);

// --- axiom checks ---

// Fundamental identity on every basis 5-tuple (a,b,x,y,z).
Report check_3leibniz(const DenseTensor& bracket);
inline Report check_3leibniz(const ThreeLeibnizAlgebra& a) { return check_3leibniz(a.bracket); }

// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples.
Report check_leibniz(const DenseTensor& bracket);
inline Report check_leibniz(const LeibnizAlgebra& a) { return check_leibniz(a.bracket); }

// The five compatibility identities of a 3-Leibniz representation; violations
// cite the offending equation tag ("2.2".."2.6").
Report check_representation(const Representation& r);

Report check_leibniz_representation(const LeibnizRepresentation& r);

// --- constructions ---

// [x,y,z] = [[x,y],z]. Input must satisfy check_leibniz.
ThreeLeibnizAlgebra threeleibniz_from_leibniz(const LeibnizAlgebra& l);

// Leibniz bracket on the tensor square of a 3-Leibniz algebra:
// [x1(x)x2, y1(x)y2] = [x1,x2,y1](x)y2 + y1(x)[x1,x2,y2], on the product
// basis e_{i*d+j} = e_i(x)e_j.
LeibnizAlgebra leibniz_on_tensor_square(const ThreeLeibnizAlgebra& a);

// Adjoint representation: V = g, all three actions equal to the bracket.
Representation adjoint_rep(const ThreeLeibnizAlgebra& a);

// Semidirect product algebra on g(+)V. Requires check_representation.
ThreeLeibnizAlgebra semidirect_product(const Representation& r);

// Same bracket with no validity gate: the result satisfies the fundamental
// identity iff the actions form a representation.
ThreeLeibnizAlgebra semidirect_product_raw(const Representation& r);

// 3-Leibniz representation induced by a Leibniz representation:
// rho^l(x,y,u) = rho^L([x,y],u), rho^m(x,u,y) = rho^R(rho^L(x,u),y),
// rho^r(u,x,y) = rho^R(u,[x,y]); base algebra is threeleibniz_from_leibniz.
Representation rep_from_leibniz_rep(const LeibnizRepresentation& lr);

} // namespace l3kit
