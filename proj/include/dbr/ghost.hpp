#ifndef DBR_GHOST_HPP
#define DBR_GHOST_HPP

#include <map>
#include <string>
#include <vector>

#include "dbr/burnside.hpp"

namespace dbr {

// An exact-rational vector over G x H-orbits of triples (U, alpha, V).
// Orbits of triples correspond to conjugacy classes of left-free
// subgroups, so coefficients are keyed by class id; the stored value is
// the coefficient of the orbit sum [U,alpha,V]^+, i.e. the coefficient
// of the element at each member triple.
class GhostElement {
 public:
  explicit GhostElement(SubgroupSystem system);
  static GhostElement basis_element(const SubgroupSystem& system, int cls);

  const SubgroupSystem& system() const { return system_; }
  const PairPtr& ctx() const { return system_.ctx(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int cls) const;
  void add_coeff(int cls, const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;

  int degree_of(int cls) const { return ctx()->degree_of_class(cls); }

  GhostElement& operator+=(const GhostElement& other);
  GhostElement& operator-=(const GhostElement& other);
  GhostElement& operator*=(const Rational& r);
  friend GhostElement operator+(GhostElement a, const GhostElement& b) {
    return a += b;
  }
  friend GhostElement operator-(GhostElement a, const GhostElement& b) {
    return a -= b;
  }
  friend GhostElement operator*(const Rational& r, GhostElement a) {
    return a *= r;
  }
  friend bool operator==(const GhostElement& a, const GhostElement& b) {
    return a.ctx().get() == b.ctx().get() && a.coeffs_ == b.coeffs_;
  }

 private:
  SubgroupSystem system_;
  std::map<int, Rational> coeffs_;
};

// Shared flavor derivation for bilinear products over (G,H) x (H,K).
SubgroupSystem derive_product_system(const SubgroupSystem& a,
                                     const SubgroupSystem& b,
                                     const PairPtr& gk);

// The mark homomorphism: coefficient at (U,alpha,V) is
// |X^{(U,alpha,V)}| / |C_G(U)|. Requires a left-free system.
GhostElement rho(const BurnsideElement& a);

// Moebius inversion of rho; exact on rational coefficients.
BurnsideElement rho_inverse(const GhostElement& x);

// Product defined triple-wise by (U,a,V)(V',b,W) = 0 unless V = V',
// else (|C_H(V)|/|H|)(U, ab, W), computed by full orbit expansion and
// re-collection. Integral inputs give integral outputs.
GhostElement ghost_product(const GhostElement& a, const GhostElement& b);

// Sum of [U, id, U]^+ over subgroup classes; the two-sided unit.
GhostElement ghost_identity(const SubgroupSystem& system);

// [U,alpha,V]^+ -> (|C_H(V)|/|C_G(U)|) [V,alpha^-1,U]^+ on bifree
// support.
GhostElement ghost_opposite(const GhostElement& x);

// Split by grading degree l(ker alpha); keys are occurring degrees.
std::map<int, GhostElement> grading(const GhostElement& x);

// The degree-n component of a on the Burnside side (rational).
BurnsideElement graded_component(const BurnsideElement& a, int degree);

struct RadicalSplit {
  std::vector<BurnsideElement> semisimple_basis;  // bifree standard basis
  std::vector<BurnsideElement> radical_basis;     // degree >= 1 preimages
  int nilpotency_bound = 0;                       // 1 + max l(U), U <= G
};

// Decomposition QB^S(G,G) = QB^{Delta(S)} + J with J nilpotent; the
// nilpotency claim is verified by explicit multiplication before
// returning.
RadicalSplit radical_complement(const SubgroupSystem& system);

// Components indexed by the isomorphism type of U; cross products of
// distinct types vanish. Requires twisted-diagonal support.
std::map<int, GhostElement> type_components(const GhostElement& x);

// A matrix between orbit bases of injective homomorphisms, constant on
// simultaneous right translation by the equivariance group.
struct EquivariantMatrix {
  std::string block_label;
  int block_type = -1;                 // type id for sigma/tau blocks
  GroupPtr type_rep;                   // representative group T
  std::vector<uint16_t> domain_elems;  // sigma-tilde: elements of U
  std::vector<std::vector<uint16_t>> row_labels;  // canonical value tables
  std::vector<std::vector<uint16_t>> col_labels;
  std::vector<Rational> entries;  // row-major
  // label permutations induced by each equivariance-group element
  std::vector<std::vector<int>> row_actions;
  std::vector<std::vector<int>> col_actions;

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
  const Rational& at(int r, int c) const { return entries[r * cols() + c]; }
  Rational& at(int r, int c) { return entries[r * cols() + c]; }

  bool equivariant() const;
  bool is_identity() const;
  bool is_zero() const;
};

EquivariantMatrix compose(const EquivariantMatrix& a,
                          const EquivariantMatrix& b);

// Per-type matrices of a bifree element: entry at ([lambda],[mu]) is
// Phi_{Delta(lambda T, lambda mu^-1, mu T)}(a) / |C_G(lambda(T))|.
EquivariantMatrix sigma_block(const BurnsideElement& a, int type_id);
std::vector<EquivariantMatrix> sigma_blocks(const BurnsideElement& a);

// The same matrix read off a ghost element's coefficients; satisfies
// tau o rho = sigma blockwise.
EquivariantMatrix tau_block(const GhostElement& x, int type_id);

// Per-subgroup endomorphism blocks over orbit bases of the morphism
// category of the system: one block per iso class of subgroups, rows
// and columns indexed by Inn(G)\Hom(U,G).
std::vector<EquivariantMatrix> sigma_tilde_blocks(const BurnsideElement& a,
                                                  const SubgroupSystem& system);

// Block entries rearranged into standard-basis coordinates via the
// orbit-pair bijection (position i = i-th system class).
std::vector<Rational> sigma_tilde_coordinates(
    const std::vector<EquivariantMatrix>& blocks,
    const SubgroupSystem& system);

}  // namespace dbr

#endif
