#pragma once

#include "quiverdt/dimvec.hpp"
#include "quiverdt/fqlinalg.hpp"
#include "quiverdt/types.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace quiverdt {

// one invertible block per vertex
using GroupElement = std::vector<FqMat>;

mpz_class gl_order(const Fq& f, int n);
// order of the product group GL_v1 x ... x GL_vr
mpz_class group_order(const Fq& f, const DimVector& v);

// Every element of the product group exactly once. Errors when the order
// exceeds the budget, naming the order.
std::vector<GroupElement> enumerate_group(const Fq& f, const DimVector& v,
                                          long budget = 200000);

// Every tuple of (not necessarily invertible) square matrices, exactly once,
// in a fixed odometer order with the last entry fastest.
std::vector<std::vector<FqMat>> enumerate_gl(const Fq& f, const DimVector& v,
                                             long budget = 200000);
// position of a tuple in the enumerate_gl order
size_t gl_point_index(const Fq& f, const DimVector& v, const std::vector<FqMat>& x);

// Elementary divisor data of one conjugacy class: pairs of an irreducible
// monic polynomial (never x) and the nonzero multipartition of block sizes
// per vertex, sorted by ascending (degree, encoding) of the polynomial.
using Spectrum = std::vector<std::pair<FqPoly, MultiPartition>>;

struct ClassDescriptor {
    Spectrum spectrum;
    TypeOmega type{0};            // polynomials forgotten, only degrees kept
    mpz_class centralizer_order;  // from the centralizer polynomial of the type
    mpz_class size;
    std::vector<int> det;  // determinant per vertex
    GroupElement rep;      // block companion representative
};

// All conjugacy classes of the product group. Asserts that the class sizes
// sum to the group order. Errors when the class count exceeds the budget.
std::vector<ClassDescriptor> enumerate_classes(const Fq& f, const DimVector& v,
                                               long budget = 200000);

// Spectrum of a single element, from the nullity sequences of powers of
// gamma(g) over the irreducible polynomials gamma.
Spectrum element_spectrum(const Fq& f, const GroupElement& g);

TypeOmega spectrum_type(const Spectrum& s, size_t arity);

// Squarefree minimal polynomial test, blockwise; the cross-check for the
// all-parts-one reading of the spectrum.
bool is_semisimple_matrix(const Fq& f, const FqMat& m);

}  // namespace quiverdt
