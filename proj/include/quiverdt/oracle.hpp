#pragma once

#include "quiverdt/cyclotomic.hpp"
#include "quiverdt/glclasses.hpp"
#include "quiverdt/quiver.hpp"

#include <functional>
#include <vector>

namespace quiverdt {

// additive character psi(x) = zeta_p^Tr(x)
Cyclo additive_char(const Fq& f, int x);

// Multiplicative character of order N = sum of the dimension entries,
// sending the stored generator of the unit group to zeta_N. Exists exactly
// when N divides q - 1.
class AlphaCharacter {
  public:
    AlphaCharacter(const Fq& f, const DimVector& v);
    int order() const { return n_; }
    Cyclo value(int x) const;  // x a nonzero field element
    // product of the character over per-vertex determinants
    Cyclo on_dets(const std::vector<int>& dets) const;

  private:
    const Fq* f_;
    int n_;
};

// Sum over the arrows of the nullity of Y -> X_head Y - Y X_tail; the number
// of representations commuting with the tuple is q to this exponent. Works
// for group elements and for arbitrary matrix tuples alike.
long commuting_exponent(const Quiver& g, const Fq& f, const std::vector<FqMat>& x);
mpz_class fixed_count(const Quiver& g, const Fq& f, const std::vector<FqMat>& x);

// Steinberg character on a conjugacy class: zero unless the class is
// semisimple (every partition a column of ones), otherwise the signed p-part
// of the centralizer order, with signs from the F_q-ranks.
mpq_class steinberg_value(const Fq& f, const DimVector& v, const ClassDescriptor& c);

// A product group together with its conjugacy classes. Class mode uses the
// closed-form descriptors only; element mode enumerates the group, rebuilds
// the classes by brute-force spectrum grouping, checks them against the
// closed form, and replaces each representative by an enumerated element.
class GroupScope {
  public:
    static GroupScope class_mode(const Fq& f, const DimVector& v, long budget = 200000);
    static GroupScope element_mode(const Fq& f, const DimVector& v, long budget = 200000);

    const Fq& field() const { return f_; }
    const DimVector& dims() const { return v_; }
    bool brute_force() const { return brute_; }
    const mpz_class& order() const { return order_; }
    const std::vector<ClassDescriptor>& classes() const { return classes_; }

    using ClassValue = std::function<Cyclo(const ClassDescriptor&)>;
    // (1/|G|) sum over classes of |C| a(C) conj(b(C))
    Cyclo inner_product(const ClassValue& a, const ClassValue& b) const;

  private:
    GroupScope(const Fq& f, DimVector v, bool brute, long budget);
    Fq f_;  // owned copy so the scope never outlives its field
    DimVector v_;
    bool brute_;
    mpz_class order_;
    std::vector<ClassDescriptor> classes_;
};

// One line of the class-sum identity: for a type omega, the sum of the
// twisted linear character over the classes of that type against the
// predicted rational value (q - 1) times the type constant.
struct OmLine {
    TypeOmega omega{0};
    Cyclo lhs;
    mpq_class rhs;
    bool pass = false;
};
std::vector<OmLine> verify_om(const GroupScope& scope);

// Which invariant the oracle value must reproduce.
enum class OracleTarget { kac, dt };

// Inner product of the fixed-point counting function against the twisted
// linear character (kac) or its Steinberg twist (dt); equals the
// corresponding invariant evaluated at q.
mpq_class multiplicity_oracle(const Quiver& g, const GroupScope& scope, OracleTarget t);

struct AdditiveSideResult {
    mpq_class value;
    bool strict_xi = false;   // the form also kills v in F_q; without that the
                              // sum is translation invariant and collapses to 0
    std::vector<int> xi;      // the form that was used, entries in F_q
};

// Exhaustive sum over the full matrix space: commuting counts against the
// additive character of a generic linear form, twisted by the Fourier
// transform of the nilpotent indicator for the dt target, scaled by
// (1 - 1/q) and the orbit-dimension power of q. Equals the same invariant
// as multiplicity_oracle whenever a kernel-generic form exists over F_q.
AdditiveSideResult additive_side(const Quiver& g, const Fq& f, const DimVector& v,
                                 OracleTarget t, long budget = 200000);

// Discrete Fourier transform on the matrix space, kernel psi of the trace
// pairing; input and output are indexed in enumerate_gl order.
std::vector<Cyclo> fourier_gl(const Fq& f, const DimVector& v,
                              const std::vector<Cyclo>& values, long budget = 200000);

}  // namespace quiverdt
