#ifndef DBR_GOURSAT_HPP
#define DBR_GOURSAT_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbr/group.hpp"

namespace dbr {

class PairContext;
using PairPtr = std::shared_ptr<const PairContext>;

// A triple (U, alpha, V): an epimorphism alpha from V (a subgroup of
// the right-hand group) onto U (a subgroup of the left-hand group).
// Its graph {(alpha(v), v)} is a left-free subgroup of G x H, and the
// triple is twisted-diagonal exactly when alpha is injective.
struct Triple {
  GroupHom alpha;

  const Subgroup& image_side() const { return alpha.codomain(); }   // U <= G
  const Subgroup& domain_side() const { return alpha.domain(); }    // V <= H
  bool twisted_diagonal() const { return alpha.is_injective(); }
};

enum class ProductClass { General, LeftFree, RightFree, Bifree };

// Shared per-(G,H) workspace: the product group, its subgroup lattice,
// Goursat invariants, triples of left-free subgroups, the table of
// marks, and per-class annotations (grading degree, isomorphism type).
// Contexts are created once per ordered pair and cached for the
// process lifetime; all data is computed lazily under locks, so
// concurrent readers are safe.
class PairContext : public std::enable_shared_from_this<PairContext> {
 public:
  static PairPtr get(const GroupPtr& g, const GroupPtr& h);

  const GroupPtr& left_group() const { return left_; }
  const GroupPtr& right_group() const { return right_; }
  const GroupPtr& product_group() const { return product_; }
  PairPtr opposite_context() const { return get(right_, left_); }

  int encode(int g, int h) const { return g * right_->order() + h; }
  int left_of(int x) const { return x / right_->order(); }
  int right_of(int x) const { return x % right_->order(); }

  const SubgroupLattice& lattice() const { return product_->lattice(); }
  int num_classes() const { return lattice().num_classes(); }
  int class_rep(int c) const { return lattice().class_rep(c); }

  // Goursat quintuple (k1 <| p1 <= G, eta, k2 <| p2 <= H). eta is kept
  // as a map on least-element coset representatives; the membership
  // law (g,h) in L <=> eta(h k2) = g k1 is the contract.
  struct Quintuple {
    int k1, p1;  // subgroup indices in the left lattice
    int k2, p2;  // subgroup indices in the right lattice
    std::vector<std::pair<uint16_t, uint16_t>> eta;  // k2-coset rep -> k1-coset rep
  };
  const Quintuple& goursat(int sub) const;

  bool left_free(int sub) const;
  bool right_free(int sub) const;
  bool bifree(int sub) const;
  ProductClass classify(int sub) const;

  // (U, alpha, V) of a left-free subgroup; ClassificationError if
  // k1 != 1. The inverse of graph_of.
  Triple triple_of(int sub) const;
  // Subgroup index of {(phi(v), v) : v in dom(phi)} for any hom phi
  // from a subgroup of H to a subgroup of G.
  int graph_of(const GroupHom& phi) const;
  // Same graph from raw values (used where no hom object exists).
  int graph_of_values(const std::vector<uint16_t>& dom_elems,
                      const int16_t* values) const;

  int conjugate_subgroup(int sub, int x) const { return lattice().conjugate(sub, x); }

  // Number of L-fixed cosets of (G x H)/M, for class representatives;
  // the classical table of marks, cached entrywise.
  long mark(int cls_l, int cls_m) const;

  // Composition length of ker(alpha) for a left-free class.
  int degree_of_class(int c) const;
  // Isomorphism type of p1 = U for a left-free class.
  int type_of_class(int c) const;

  // Triples of every subgroup in a left-free class (the full orbit of
  // the representative triple).
  const std::vector<Triple>& class_expansion(int c) const;

  bool same_right_group(const PairContext& other) const {
    return right_->same_group(*other.left_group());
  }

 private:
  PairContext(GroupPtr g, GroupPtr h);

  GroupPtr left_, right_;
  GroupPtr product_;

  mutable std::mutex lazy_mutex_;
  mutable std::vector<std::optional<Quintuple>> goursat_;
  mutable std::vector<long> marks_;  // num_classes^2, -1 = unset
  mutable std::vector<int> degree_;  // per class, -2 = unset
  mutable std::vector<int> type_;    // per class, -2 = unset
  mutable std::vector<std::optional<std::vector<Triple>>> expansion_;
};

// Star product (relation composition) of L <= G x H and M <= H x K;
// returns the resulting context over (G, K) and the subgroup index of
// L*M. Middle groups must agree.
std::pair<PairPtr, int> star(const PairContext& gh, int l,
                             const PairContext& hk, int m);

// L -> L deg = {(h,g) : (g,h) in L} over the flipped pair.
std::pair<PairPtr, int> opposite(const PairContext& gh, int l);

// Graph of an epimorphism as a product subgroup ("from_triple").
int from_triple(const PairContext& ctx, const Triple& t);

// Isomorphism-type registry: abstract types of small groups, named
// deterministically (C<n>, V4, E<p^k>, C<a>xC<b>..., catalog matches,
// X<order>.<k> as a fallback).
class TypeRegistry {
 public:
  static TypeRegistry& instance();
  int classify(const GroupPtr& standalone);
  int classify_subgroup(const FiniteGroup& parent, int subgroup_index);
  const std::string& name(int id) const;
  GroupPtr representative(int id) const;

 private:
  struct Entry {
    GroupPtr rep;
    std::string name;
    std::vector<int> order_profile;  // sorted element orders
  };
  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
};

}  // namespace dbr

#endif
