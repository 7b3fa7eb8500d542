#pragma once

#include "quiverdt/fq.hpp"

#include <vector>

namespace quiverdt {

// Dense matrix over a small finite field, entries stored as Fq element
// indices in row-major order. A 0x0 matrix is the identity of the trivial
// group GL_0.
struct FqMat {
    int rows = 0, cols = 0;
    std::vector<int> a;

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const FqMat& o) const = default;
    bool operator<(const FqMat& o) const;
};

FqMat mat_zero(int rows, int cols);
FqMat mat_identity(int n);
FqMat mat_add(const Fq& f, const FqMat& x, const FqMat& y);
FqMat mat_sub(const Fq& f, const FqMat& x, const FqMat& y);
FqMat mat_mul(const Fq& f, const FqMat& x, const FqMat& y);
FqMat mat_scale(const Fq& f, int s, const FqMat& x);
FqMat mat_neg(const Fq& f, const FqMat& x);
FqMat mat_pow(const Fq& f, FqMat x, long e);
int mat_trace(const Fq& f, const FqMat& x);
int mat_rank(const Fq& f, FqMat x);
int mat_nullity(const Fq& f, const FqMat& x);
int mat_det(const Fq& f, FqMat x);
bool mat_invertible(const Fq& f, const FqMat& x);
FqMat mat_inverse(const Fq& f, const FqMat& x);  // math_error when singular
FqMat block_diag(const std::vector<FqMat>& blocks);

// Solve A c = b over the field; returns false when inconsistent. A is
// destroyed; b must have A.rows entries; the solution (one of possibly many)
// is written to out with A.cols entries.
bool mat_solve(const Fq& f, FqMat A, std::vector<int> b, std::vector<int>& out);

// Polynomials over the field: coefficient vectors, constant term first, no
// trailing zeros; the zero polynomial is the empty vector.
using FqPoly = std::vector<int>;

FqPoly fqpoly_trim(FqPoly a);
int fqpoly_degree(const FqPoly& a);  // -1 for zero
FqPoly fqpoly_add(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly fqpoly_mul(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly fqpoly_rem(const Fq& f, FqPoly a, const FqPoly& b);
FqPoly fqpoly_pow(const Fq& f, const FqPoly& a, int e);
FqPoly fqpoly_derivative(const Fq& f, const FqPoly& a);
FqPoly fqpoly_monic(const Fq& f, FqPoly a);
FqPoly fqpoly_gcd(const Fq& f, FqPoly a, FqPoly b);  // monic (or zero)
FqMat fqpoly_eval_matrix(const Fq& f, const FqPoly& a, const FqMat& m);

// companion matrix of a monic polynomial of degree >= 1
FqMat companion(const Fq& f, const FqPoly& monic);

// all irreducible monic polynomials of the given degree, in ascending
// element-encoding order (degree 1 includes the polynomial x)
std::vector<FqPoly> irreducible_monic(const Fq& f, int degree);

// monic minimal polynomial, found as the first linear dependency among the
// powers of the matrix
FqPoly minimal_polynomial(const Fq& f, const FqMat& m);

}  // namespace quiverdt
