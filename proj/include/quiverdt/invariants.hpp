#pragma once

#include "quiverdt/plethystic.hpp"
#include "quiverdt/poly.hpp"
#include "quiverdt/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace quiverdt {

// Counting-polynomial family R_mu attached to the quiver's arrows.
FamilyTable hua_family(const Quiver& g);

// Signed Steinberg-weighted family: (-1)^delta(|mu|) * St_mu(t) * R_mu(t),
// where St_mu vanishes unless every component is a column (1,...,1) and then
// contributes t^((sum v_i^2 - delta(v))/2).
FamilyTable steinberg_hua_family(const Quiver& g);

// Generic multiplicities of a family: for every 0 < w <= v the value
// (t-1) * sum over types of size w of c_omega * F_omega / Z_omega,
// cross-checked against the T^w coefficient of (t-1) * plog of the
// normalized family series. Throws when the two routes disagree.
std::map<DimVector, RatFun> generic_multiplicity_table(const FamilyTable& f,
                                                       const DimVector& v);
RatFun generic_multiplicity(const FamilyTable& f, const DimVector& v);

// Kac polynomials A_w for 0 < w <= v, asserted integral.
std::map<DimVector, Poly> kac_polynomials(const Quiver& g, const DimVector& v);

// DT invariants from the generating function
//   sum over w of (-1)^delta(w) t^(-(gamma_bar+delta)/2)
//     / prod_i prod_{j=1..w_i} (1 - t^-j) * T^w,
// via (t-1) * plog and the sign convention; asserted to have nonnegative
// integer coefficients.
std::map<DimVector, Poly> dt_invariants(const Quiver& g, const DimVector& v);

// The two input series of those pipelines, for inspection and dumps: the DT
// generating series above, and the counting series whose T^w coefficient
// sums hua_term(mu)/Z_mu over the multipartitions of w. Constant term 1.
TruncatedSeries dt_generating_series(const Quiver& g, const DimVector& v);
TruncatedSeries hua_series(const Quiver& g, const DimVector& v);

// Same values through the Steinberg-weighted family and the generic
// multiplicity machinery; checked against dt_invariants entry by entry.
std::map<DimVector, Poly> dt_via_steinberg(const Quiver& g, const DimVector& v);

// Isomorphism-class counting series V_w as rational functions, obtained as
// pexp of the Kac table; includes the constant 1 at w = 0.
std::map<DimVector, RatFun> total_count_symbolic(const Quiver& g, const DimVector& v);

// V_w evaluated at a prime power q, computed independently as a finite
// product with exponents phi_d(q) and checked against the pexp route.
std::map<DimVector, mpq_class> total_count_series(const Quiver& g, const DimVector& v,
                                                  long q);

struct InvariantReport {
    DimVector box;
    std::map<DimVector, Poly> kac;
    std::map<DimVector, Poly> dt;
    std::map<DimVector, RatFun> vgen;   // (t-1)Log table of the Hua family
    std::map<DimVector, RatFun> total;  // pexp route, includes w = 0
    std::vector<std::string> routes;
};

InvariantReport full_report(const Quiver& g, const DimVector& v);

}  // namespace quiverdt
