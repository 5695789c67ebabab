#ifndef DBR_BURNSIDE_HPP
#define DBR_BURNSIDE_HPP

#include <map>
#include <memory>
#include <vector>

#include "dbr/goursat.hpp"
#include "dbr/rational.hpp"

namespace dbr {

enum class SystemFlavor { All, LeftFree, Bifree, Custom };

// A conjugation-closed, subgroup-closed set of subgroups of G x H,
// stored as a set of conjugacy classes. Single-group systems used for
// rings and fusion systems additionally need star closure, the full
// diagonal, and (for symmetric systems) closure under opposites; those
// are queryable predicates here and enforced by the fusion layer.
class SubgroupSystem {
 public:
  static SubgroupSystem all(PairPtr ctx);
  static SubgroupSystem left_free(PairPtr ctx);
  static SubgroupSystem bifree(PairPtr ctx);
  // Validates closure under taking subgroups; conjugation closure is
  // automatic at class granularity.
  static SubgroupSystem custom(PairPtr ctx, std::vector<int> classes);

  const PairPtr& ctx() const { return ctx_; }
  SystemFlavor flavor() const { return flavor_; }
  const std::vector<int>& classes() const { return classes_; }
  bool contains_class(int c) const { return mask_[c] != 0; }
  bool contains_subgroup(int sub) const {
    return contains_class(ctx_->lattice().class_of(sub));
  }

  bool closed_under_star() const;      // needs G == H
  bool contains_diagonal() const;      // needs G == H
  bool closed_under_opposite() const;  // needs G == H

  friend bool operator==(const SubgroupSystem& a, const SubgroupSystem& b) {
    return a.ctx_.get() == b.ctx_.get() && a.classes_ == b.classes_;
  }

 private:
  SubgroupSystem(PairPtr ctx, SystemFlavor flavor, std::vector<int> classes);

  PairPtr ctx_;
  SystemFlavor flavor_;
  std::vector<int> classes_;   // sorted class ids
  std::vector<char> mask_;     // indexed by class id
};

// An exact-rational element of B^S(G,H) in the standard basis: a sparse
// vector over conjugacy classes of subgroups in the system. Elements
// with integer coefficients are classes of honest bisets.
class BurnsideElement {
 public:
  explicit BurnsideElement(SubgroupSystem system);
  static BurnsideElement basis_element(const SubgroupSystem& system, int cls);

  const SubgroupSystem& system() const { return system_; }
  const PairPtr& ctx() const { return system_.ctx(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int cls) const;
  void add_coeff(int cls, const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;

  BurnsideElement& operator+=(const BurnsideElement& other);
  BurnsideElement& operator-=(const BurnsideElement& other);
  BurnsideElement& operator*=(const Rational& r);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
    return a += b;
  }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) {
    return a -= b;
  }
  friend BurnsideElement operator*(const Rational& r, BurnsideElement a) {
    return a *= r;
  }

  // Elements over the same pair compare by coefficients alone; the
  // declared system is bookkeeping, not identity.
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.ctx().get() == b.ctx().get() && a.coeffs_ == b.coeffs_;
  }

  // Phi_L at the representative of one class / at every class.
  Rational mark_at(int cls) const;
  std::vector<Rational> all_marks() const;

 private:
  SubgroupSystem system_;
  std::map<int, Rational> coeffs_;
};

// Class ids of the system in basis order (ascending |L|, then
// canonical id of the representative).
std::vector<int> standard_basis(const SubgroupSystem& system);

// Integer table of marks restricted to the system: entry (i,j) is
// Phi_{L_i}([GxH/L_j]), upper triangular with diagonal [N(L):L].
std::vector<std::vector<long>> mark_matrix(const SubgroupSystem& system);

// [GxG/Delta(G)], the identity of B^S(G,G).
BurnsideElement identity_element(const SubgroupSystem& system);

// Bilinear Mackey product. The target system is derived from the
// factors' flavors (or reused for matching custom systems); a result
// class outside the target raises SystemClosureError.
BurnsideElement mackey_product(const BurnsideElement& a,
                               const BurnsideElement& b);
BurnsideElement mackey_product(const BurnsideElement& a,
                               const BurnsideElement& b,
                               const SubgroupSystem& target);

// [GxH/L] -> [HxG/L deg]; contravariant for the Mackey product.
BurnsideElement opposite_element(const BurnsideElement& a);

}  // namespace dbr

#endif
