#pragma once

#include "quiverdt/dimvec.hpp"
#include "quiverdt/partition.hpp"
#include "quiverdt/ratfun.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace quiverdt {

// Finite quiver: vertices 0..r-1 internally, arrows a multiset of ordered
// pairs, loops allowed. The JSON interface is 1-based.
class Quiver {
  public:
    Quiver(int vertices, std::vector<std::pair<int, int>> arrows);

    int vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    size_t arrow_count() const { return arrows_.size(); }

  private:
    int vertices_;
    std::vector<std::pair<int, int>> arrows_;
};

// Arrow multiset doubled with the opposite orientation.
Quiver double_quiver(const Quiver& g);

long delta(const DimVector& v);

// sum of v_i^2 minus the arrow terms of the double quiver
long gamma_bar(const Quiver& g, const DimVector& v);

// t raised to the sum over arrows i->j of pairing(mu^i, mu^j)
RatFun hua_term(const Quiver& g, const MultiPartition& mu);

// Star-shaped extension: each base vertex i grows a leg whose dimensions are
// the strictly decreasing partial complements v_i - mu^i_1 - ... - mu^i_j.
// A one-part (or empty) component adds no leg.
struct ExtendedQuiver {
    Quiver base;
    std::vector<std::vector<int>> legs;       // per base vertex, leg dims
    std::vector<std::vector<long>> cartan;    // full matrix, base then legs
    DimVector dims;                           // dimension vector including legs
};

ExtendedQuiver extended_quiver(const Quiver& g, const DimVector& v, const MultiPartition& mu);

// value of the Tits form of the extended quiver at its dimension vector
long tits_form(const ExtendedQuiver& e);

struct VarietyDim {
    long dimension;
    long codim_in_regular;
};

// Dimension of the generic fiber attached to (v, mu), computed two
// independent ways and asserted equal:
//   via the Cartan matrix of the extension built on the componentwise dual
//   of mu, as 2 - v_C . C . v_C, and
//   as dim Rep of the double quiver + dim of the adjoint orbit closure's
//   centralizer complement - 2 (dim GL_v - 1).
// The result is always even; emptiness of the variety is not decided, so
// negative values are possible and returned as computed.
VarietyDim variety_dim(const Quiver& g, const DimVector& v, const MultiPartition& mu);

// Deterministic rational linear form with xi . v = 0 and xi . w != 0 for
// every componentwise 0 < w < v. Requires v nonzero with coprime entries.
std::vector<mpq_class> generic_xi_rational(const DimVector& v);

// Lexicographically first such form over the prime field F_q.
std::vector<int> generic_xi_mod(const DimVector& v, int q);

// Weaker form dropping the kernel condition xi . v = 0; used when the strict
// search is unsatisfiable over F_q.
std::vector<int> generic_xi_box_only_mod(const DimVector& v, int q);

}  // namespace quiverdt
