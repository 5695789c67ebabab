#ifndef DBR_BISET_HPP
#define DBR_BISET_HPP

#include <vector>

#include "dbr/burnside.hpp"
#include "dbr/goursat.hpp"

namespace dbr {

// A concrete (G,H)-biset on points 0..m-1 with explicit action tables.
// This is the brute-force side of the oracle pair: tensor products are
// formed by materializing orbits, never through the Mackey formula.
class ExplicitBiset {
 public:
  ExplicitBiset(PairPtr ctx, int size, std::vector<int> left,
                std::vector<int> right);

  // The coset biset (G x H)/L for the representative of a class.
  static ExplicitBiset from_class(const PairPtr& ctx, int cls);
  static ExplicitBiset disjoint_union(const ExplicitBiset& x,
                                      const ExplicitBiset& y);

  const PairPtr& ctx() const { return ctx_; }
  int size() const { return size_; }
  int left_act(int g, int x) const { return left_[g * size_ + x]; }
  int right_act(int x, int h) const {
    return right_[x * ctx_->right_group()->order() + h];
  }
  // (g,h)x = g x h^-1 under the G x H identification.
  int pair_act(int pair_elem, int x) const;

  bool valid_biset() const;  // both action axioms and commutation

  long fixed_count(const std::vector<uint16_t>& product_subgroup_elems) const;
  long fixed_count(const Triple& t) const;

 private:
  PairPtr ctx_;
  int size_;
  std::vector<int> left_;   // |G| x size
  std::vector<int> right_;  // size x |H|
};

// H-orbits of X x Y under h(x,y) = (x h^-1, h y), with the induced
// (G,K)-structure. Middle groups must agree.
ExplicitBiset tensor_oracle(const ExplicitBiset& x, const ExplicitBiset& y);

// Orbit/stabilizer decomposition into the standard basis (over the
// full system of the pair).
BurnsideElement decompose_biset(const ExplicitBiset& x);

// A factorization gamma = alpha o beta through a subgroup V of the
// middle group: alpha : V ->> U, beta : W ->> V.
struct Factorization {
  GroupHom alpha;
  GroupHom beta;
};

// All factorizations of the epimorphism gamma : W ->> U through the
// exact subgroup v of the middle group, in deterministic order.
std::vector<Factorization> factorizations_via(const GroupHom& gamma,
                                              const Subgroup& v);

// One representative per H-orbit of all factorizations of gamma, where
// h acts by (alpha, V, beta) -> (alpha c_h^-1, hVh^-1, c_h beta).
std::vector<Factorization> fixed_point_factorizations(const GroupHom& gamma,
                                                      const GroupPtr& h);

}  // namespace dbr

#endif
