#ifndef DBR_FUSION_HPP
#define DBR_FUSION_HPP

#include <optional>
#include <vector>

#include "dbr/ghost.hpp"

namespace dbr {

// A fusion system on a finite p-group S, stored as the closed system
// of twisted-diagonal subgroups of S x S whose triples are the graphs
// of the morphisms. Morphism sets Hom_F(P,Q) are derived views.
class FusionSystem {
 public:
  // The minimal system: S-conjugation maps only.
  static FusionSystem inner(const GroupPtr& s, int prime);
  // Fusion system of an ambient group on a Sylow p-subgroup; the base
  // group is the materialized Sylow subgroup. The one-argument form
  // picks the canonical (least-id) Sylow subgroup.
  static FusionSystem from_group(const GroupPtr& ambient, int prime);
  static FusionSystem from_group(const GroupPtr& ambient,
                                 const Subgroup& sylow, int prime);
  // Smallest fusion system containing the given injective morphisms
  // between subgroups of s, via closure under conjugation, subgroups,
  // composition (star) and inverses (opposite).
  static FusionSystem generate(const GroupPtr& s, int prime,
                               const std::vector<GroupHom>& morphisms);
  // Every fusion system on s, by breadth-first closure from the inner
  // system; sorted by size then class list (a linear extension of the
  // inclusion order).
  static std::vector<FusionSystem> enumerate_all(const GroupPtr& s, int prime,
                                                 int max_order = 16);

  const GroupPtr& base() const { return base_; }
  int prime() const { return prime_; }
  const SubgroupSystem& system() const { return system_; }
  const PairPtr& ctx() const { return system_.ctx(); }

  // Hom_F(P,Q): injective maps P -> Q whose graph lies in the system.
  std::vector<GroupHom> morphisms(const Subgroup& p, const Subgroup& q) const;
  std::vector<GroupHom> automorphisms(const Subgroup& p) const;
  bool contains_graph(const GroupHom& phi) const;
  // |Hom_F(P,S)| for the class of a subgroup index.
  long hom_count_to_base(int subgroup_index) const;

  int f_class_of(int subgroup_index) const { return f_class_[subgroup_index]; }
  bool fully_normalized(int subgroup_index) const {
    return fully_normalized_[subgroup_index] != 0;
  }
  bool fully_centralized(int subgroup_index) const {
    return fully_centralized_[subgroup_index] != 0;
  }

  // The same system on an isomorphic group, along an isomorphism from
  // this base onto the target group.
  FusionSystem transported(const GroupHom& iso) const;

  friend bool operator==(const FusionSystem& a, const FusionSystem& b) {
    return a.base_->same_group(*b.base_) && a.prime_ == b.prime_ &&
           a.system_.classes() == b.system_.classes();
  }

 private:
  FusionSystem(GroupPtr s, int prime, SubgroupSystem system);

  GroupPtr base_;
  int prime_;
  SubgroupSystem system_;
  std::vector<long> hom_count_;         // per subgroup class of S
  std::vector<int> f_class_;            // per subgroup index
  std::vector<char> fully_normalized_;  // per subgroup index
  std::vector<char> fully_centralized_;
};

// Frobenius test through the fixed-point criterion: marks at the
// twisted diagonals Delta(phi P, phi psi^-1, psi P) for all P <= S and
// injective phi, psi. Needs twisted-diagonal support.
struct FrobeniusResult {
  bool left = false;
  bool right = false;
};
FrobeniusResult is_frobenius(const BurnsideElement& a);

struct SatFsRow {
  int subgroup_class;  // class id in the lattice of S
  Rational value;      // |S| / (|Hom_F(P,S)| |C_S(P)|)
  bool p_integral;
};

struct IdempotentReport {
  IdempotentReport(GhostElement ghost, BurnsideElement standard)
      : omega_ghost(std::move(ghost)), omega_standard(std::move(standard)) {}

  GhostElement omega_ghost;
  BurnsideElement omega_standard;
  bool is_idempotent = false;
  bool frobenius_left = false;
  bool frobenius_right = false;
  bool symmetric = false;  // omega deg = omega
  std::vector<int> fix_classes;
  bool fix_equals_system = false;
  bool standard_p_integral = false;
  long worst_standard_valuation = 0;
  std::vector<SatFsRow> sat_fs;
};

// The characteristic idempotent of a fusion system, built from its
// mark profile |S|/|Hom_F(p1(L),S)| and pulled back along the mark
// homomorphism, with all its advertised properties verified.
IdempotentReport omega(const FusionSystem& f);

struct IdempotentVerdicts {
  bool idempotent = false;
  bool frobenius_left = false;
  bool frobenius_right = false;
  bool fix_subgroup_closed = false;
  bool diagonal_in_fix = false;
  bool in_idem = false;  // all of the above
  std::vector<int> fix_classes;
  bool standard_p_integral = false;
  long worst_standard_valuation = 0;
  bool ghost_p_integral = false;
  long worst_ghost_valuation = 0;
};

// Membership tests for the idempotent sets over (S,S): the three
// axioms, plus p-integrality on the standard-basis side and on the
// ghost side.
IdempotentVerdicts classify_idempotent(const BurnsideElement& a, int prime);

struct SaturationResult {
  bool saturated = false;
  bool sylow_axiom = false;
  bool extension_axiom = false;
  // a violating (P, phi) when the extension axiom fails
  std::optional<GroupHom> witness;
  int witness_extender = -1;  // subgroup index of N_phi
};

// Brute-force check of the Sylow and extension axioms.
SaturationResult is_saturated(const FusionSystem& f);

struct FusionClassStats {
  int subgroup_class;  // S-conjugacy class id
  int f_class;
  bool fully_normalized;
  bool fully_centralized;
  bool automizer_sylow;  // Aut_S(P) Sylow in Aut_F(P)
  Rational sat_fs_value;
  bool sat_fs_integral;
};

struct SaturationStats {
  std::vector<FusionClassStats> per_class;      // per S-conjugacy class
  std::vector<long> f_class_normalized_count;   // f_F(P) per F-class
  bool all_sat_fs = false;
};

SaturationStats generalized_saturation_stats(const FusionSystem& f);

struct TriangleReport {
  int systems = 0;
  bool fix_matches_system = false;  // g(f(F)) = h(F) for every F
  bool omega_injective = false;     // f injective on the enumeration
  bool idempotents_valid = false;   // every omega_F lands in Idem(S)
};

// Enumerates Fus(S) and verifies the commuting triangle between fusion
// systems, their subgroup systems and their idempotents.
TriangleReport triangle_check(const GroupPtr& s, int prime);

}  // namespace dbr

#endif
