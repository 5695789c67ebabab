#ifndef DBR_GROUP_HPP
#define DBR_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dbr/errors.hpp"

namespace dbr {

class FiniteGroup;
class SubgroupLattice;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Size bound for subgroup-lattice computations. Defaults to 256 and can
// be overridden through the environment variable BURNSIDE_MAX_ORDER.
int max_group_order();

// A finite group given by its full multiplication table over element
// indices 0..n-1, with the identity at index 0. Instances are immutable
// and shared; the subgroup lattice is computed once on first use.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  // `verify` runs the full axiom check (identity row/column, bijective
  // rows and columns, associativity over all triples). Tables built
  // programmatically from known-good constructions may skip it.
  static GroupPtr make(std::string name, std::vector<uint16_t> table,
                       bool verify = true);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const { return elem_order_[a]; }
  const std::vector<uint16_t>& table() const { return table_; }

  bool same_group(const FiniteGroup& other) const {
    return this == &other || (order_ == other.order_ && table_ == other.table_);
  }

  const SubgroupLattice& lattice() const;

 private:
  FiniteGroup(std::string name, std::vector<uint16_t> table);

  std::string name_;
  int order_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inverse_;
  std::vector<uint16_t> elem_order_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<const SubgroupLattice> lattice_;
};

// Handle to one subgroup of a fixed parent group; the actual data lives
// in the parent's lattice. Ordering follows the canonical subgroup id
// (order first, then the sorted element list lexicographically), which
// is exactly the lattice index order.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, int index) : parent_(std::move(parent)), index_(index) {}

  const GroupPtr& parent() const { return parent_; }
  int index() const { return index_; }
  const std::vector<uint16_t>& elements() const;
  int order() const { return static_cast<int>(elements().size()); }
  bool contains(int e) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.get() == b.parent_.get() && a.index_ == b.index_;
  }

 private:
  GroupPtr parent_;
  int index_ = -1;
};

// All subgroups of one group, sorted by canonical id, with conjugacy
// classes, normalizers/centralizers and the poset structure.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const FiniteGroup& g);

  int size() const { return static_cast<int>(subs_.size()); }
  const std::vector<uint16_t>& elements(int i) const { return subs_[i].elems; }
  int order(int i) const { return static_cast<int>(subs_[i].elems.size()); }
  bool contains(int i, int e) const {
    return (subs_[i].mask[e >> 6] >> (e & 63)) & 1;
  }
  bool subset(int i, int j) const;
  std::vector<int> subgroups_of(int j) const;

  // Index of the subgroup with exactly these elements; the vector must
  // be sorted. Throws if no such subgroup exists.
  int index_of(const std::vector<uint16_t>& sorted_elems) const;
  // Subgroup generated by the given elements.
  int generated_by(const std::vector<uint16_t>& gens) const;

  int conjugate(int i, int g) const;
  bool is_normal(int i) const { return class_members(class_of(i)).size() == 1; }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int i) const { return subs_[i].class_id; }
  int class_rep(int c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }

  int normalizer(int i) const { return subs_[i].normalizer; }
  int centralizer(int i) const { return subs_[i].centralizer; }
  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  // Moebius function of the subgroup poset on the closed interval
  // [lower, upper]; requires lower <= upper as subgroups.
  long mobius(int lower, int upper) const;

  int composition_length(int i) const;

  // The subgroup as a standalone group with elements reindexed to
  // 0..|U|-1 in sorted order (identity stays at 0).
  GroupPtr materialize(int i) const;

  const FiniteGroup& group() const { return g_; }

 private:
  struct Sub {
    std::vector<uint16_t> elems;
    std::vector<uint64_t> mask;
    int class_id = -1;
    int normalizer = -1;
    int centralizer = -1;
  };

  std::vector<uint64_t> mask_of(const std::vector<uint16_t>& elems) const;
  std::vector<uint16_t> close(std::vector<uint16_t> gens) const;

  const FiniteGroup& g_;
  int mask_words_;
  std::vector<Sub> subs_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> class_members_;

  mutable std::mutex lazy_mutex_;
  mutable std::vector<long> mobius_;       // size*size, LONG_MIN = unset
  mutable std::vector<int> comp_len_;      // -1 = unset
  mutable std::vector<GroupPtr> material_;
};

// A homomorphism between subgroups of (possibly different) groups,
// stored as a full value table over the domain's parent (-1 outside the
// domain subgroup).
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(Subgroup dom, Subgroup cod, std::vector<int16_t> values);

  const Subgroup& domain() const { return dom_; }
  const Subgroup& codomain() const { return cod_; }
  int apply(int e) const { return values_[e]; }

  bool is_injective() const;
  bool is_surjective() const;  // image equals the declared codomain
  std::vector<uint16_t> image_elements() const;
  Subgroup image() const;
  Subgroup kernel() const;

  GroupHom restricted_to(const Subgroup& d) const;   // same codomain
  GroupHom onto_image() const;                       // codomain := image

  // Values on the sorted domain elements; the deterministic identity of
  // the map for ordering and equality tests.
  std::vector<uint16_t> table() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.dom_ == b.dom_ && a.cod_.parent().get() == b.cod_.parent().get() &&
           a.table() == b.table();
  }

 private:
  Subgroup dom_;
  Subgroup cod_;
  std::vector<int16_t> values_;
};

// f after g; requires the image of g to lie in the domain of f.
GroupHom compose(const GroupHom& f, const GroupHom& g);
// Inverse of an isomorphism onto its codomain.
GroupHom inverse_iso(const GroupHom& f);
// Identity map of a subgroup.
GroupHom identity_hom(const Subgroup& u);
// Conjugation map c_g restricted to dom, as a map dom -> cod; requires
// g dom g^-1 <= cod and a common parent.
GroupHom conjugation_hom(const Subgroup& dom, const Subgroup& cod, int g);

enum class HomKind { All, Epi, Iso, ConjugationInduced };

// Exhaustive list of homomorphisms dom -> cod of the requested kind, in
// deterministic (value-table) order. Enumeration proceeds by assigning
// images to a generating sequence with consistency pruning.
std::vector<GroupHom> homomorphisms(const Subgroup& dom, const Subgroup& cod,
                                    HomKind kind);

// {g in N_G(U) cap N_G(V) : conjugation by g is trivial on V/U};
// requires U normal in V. relative_centralizer(1,V) is the centralizer
// and relative_centralizer(V,V) the normalizer of V.
Subgroup relative_centralizer(const Subgroup& u, const Subgroup& v);

int composition_length(const GroupPtr& g);

// Direct product with element index g*|H|+h.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

}  // namespace dbr

#endif
