#include "dbr/biset.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace dbr {

ExplicitBiset::ExplicitBiset(PairPtr ctx, int size, std::vector<int> left,
                             std::vector<int> right)
    : ctx_(std::move(ctx)),
      size_(size),
      left_(std::move(left)),
      right_(std::move(right)) {}

ExplicitBiset ExplicitBiset::from_class(const PairPtr& ctx, int cls) {
  const FiniteGroup& p = *ctx->product_group();
  const auto& lat = p.lattice();
  int l = ctx->class_rep(cls);
  const auto& elems = lat.elements(l);
  // cosets xL, numbered by ascending least element
  std::vector<int> coset_of(p.order(), -1);
  int m = 0;
  for (int x = 0; x < p.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    for (uint16_t e : elems) coset_of[p.mul(x, e)] = m;
    ++m;
  }
  std::vector<int> reps(m, -1);
  for (int x = p.order() - 1; x >= 0; --x) reps[coset_of[x]] = x;
  const int ng = ctx->left_group()->order();
  const int nh = ctx->right_group()->order();
  std::vector<int> left(static_cast<size_t>(ng) * m);
  std::vector<int> right(static_cast<size_t>(m) * nh);
  for (int x = 0; x < m; ++x) {
    int g1 = ctx->left_of(reps[x]), g2 = ctx->right_of(reps[x]);
    for (int g = 0; g < ng; ++g)
      left[static_cast<size_t>(g) * m + x] =
          coset_of[p.mul(ctx->encode(g, 0), reps[x])];
    for (int h = 0; h < nh; ++h)
      right[static_cast<size_t>(x) * nh + h] = coset_of[ctx->encode(
          g1, ctx->right_group()->mul(ctx->right_group()->inv(h), g2))];
  }
  return ExplicitBiset(ctx, m, std::move(left), std::move(right));
}

ExplicitBiset ExplicitBiset::disjoint_union(const ExplicitBiset& x,
                                            const ExplicitBiset& y) {
  if (x.ctx().get() != y.ctx().get())
    throw CompositionError("disjoint union needs a common pair");
  const int ng = x.ctx()->left_group()->order();
  const int nh = x.ctx()->right_group()->order();
  const int m = x.size() + y.size();
  std::vector<int> left(static_cast<size_t>(ng) * m);
  std::vector<int> right(static_cast<size_t>(m) * nh);
  for (int g = 0; g < ng; ++g) {
    for (int p = 0; p < x.size(); ++p)
      left[static_cast<size_t>(g) * m + p] = x.left_act(g, p);
    for (int p = 0; p < y.size(); ++p)
      left[static_cast<size_t>(g) * m + x.size() + p] =
          x.size() + y.left_act(g, p);
  }
  for (int p = 0; p < x.size(); ++p)
    for (int h = 0; h < nh; ++h)
      right[static_cast<size_t>(p) * nh + h] = x.right_act(p, h);
  for (int p = 0; p < y.size(); ++p)
    for (int h = 0; h < nh; ++h)
      right[static_cast<size_t>(x.size() + p) * nh + h] =
          x.size() + y.right_act(p, h);
  return ExplicitBiset(x.ctx(), m, std::move(left), std::move(right));
}

int ExplicitBiset::pair_act(int pair_elem, int x) const {
  int g = ctx_->left_of(pair_elem), h = ctx_->right_of(pair_elem);
  return left_act(g, right_act(x, ctx_->right_group()->inv(h)));
}

bool ExplicitBiset::valid_biset() const {
  const FiniteGroup& g = *ctx_->left_group();
  const FiniteGroup& h = *ctx_->right_group();
  for (int x = 0; x < size_; ++x) {
    if (left_act(0, x) != x || right_act(x, 0) != x) return false;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (left_act(g.mul(a, b), x) != left_act(a, left_act(b, x)))
          return false;
    for (int a = 0; a < h.order(); ++a)
      for (int b = 0; b < h.order(); ++b)
        if (right_act(right_act(x, a), b) != right_act(x, h.mul(a, b)))
          return false;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < h.order(); ++b)
        if (right_act(left_act(a, x), b) != left_act(a, right_act(x, b)))
          return false;
  }
  return true;
}

long ExplicitBiset::fixed_count(
    const std::vector<uint16_t>& product_subgroup_elems) const {
  long count = 0;
  for (int x = 0; x < size_; ++x) {
    bool fixed = true;
    for (uint16_t e : product_subgroup_elems)
      if (pair_act(e, x) != x) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

long ExplicitBiset::fixed_count(const Triple& t) const {
  // x in X^{(U,alpha,V)}  <=>  x v = alpha(v) x for all v in V
  long count = 0;
  const auto& v_elems = t.domain_side().elements();
  for (int x = 0; x < size_; ++x) {
    bool fixed = true;
    for (uint16_t v : v_elems)
      if (right_act(x, v) != left_act(t.alpha.apply(v), x)) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

ExplicitBiset tensor_oracle(const ExplicitBiset& x, const ExplicitBiset& y) {
  if (!x.ctx()->same_right_group(*y.ctx()))
    throw CompositionError("tensor product: middle groups differ");
  const FiniteGroup& h = *x.ctx()->right_group();
  PairPtr gk = PairContext::get(x.ctx()->left_group(), y.ctx()->right_group());
  const int sy = y.size();
  auto pair_id = [sy](int a, int b) { return a * sy + b; };
  // H-orbits of pairs under t(a,b) = (a t^-1, t b)
  std::vector<int> orbit_rep(static_cast<size_t>(x.size()) * sy, -1);
  std::vector<int> reps;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < sy; ++b) {
      int p = pair_id(a, b);
      if (orbit_rep[p] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(p);
      for (int t = 0; t < h.order(); ++t)
        orbit_rep[pair_id(x.right_act(a, h.inv(t)), y.left_act(t, b))] = id;
    }
  const int m = static_cast<int>(reps.size());
  const int ng = gk->left_group()->order();
  const int nk = gk->right_group()->order();
  std::vector<int> left(static_cast<size_t>(ng) * m);
  std::vector<int> right(static_cast<size_t>(m) * nk);
  for (int p = 0; p < m; ++p) {
    int a = reps[p] / sy, b = reps[p] % sy;
    for (int g = 0; g < ng; ++g)
      left[static_cast<size_t>(g) * m + p] =
          orbit_rep[pair_id(x.left_act(g, a), b)];
    for (int k = 0; k < nk; ++k)
      right[static_cast<size_t>(p) * nk + k] =
          orbit_rep[pair_id(a, y.right_act(b, k))];
  }
  return ExplicitBiset(gk, m, std::move(left), std::move(right));
}

BurnsideElement decompose_biset(const ExplicitBiset& x) {
  const PairPtr& ctx = x.ctx();
  const FiniteGroup& p = *ctx->product_group();
  BurnsideElement out(SubgroupSystem::all(ctx));
  std::vector<char> seen(x.size(), 0);
  for (int pt = 0; pt < x.size(); ++pt) {
    if (seen[pt]) continue;
    std::vector<uint16_t> stab;
    for (int e = 0; e < p.order(); ++e) {
      int im = x.pair_act(e, pt);
      seen[im] = 1;
      if (im == pt) stab.push_back(static_cast<uint16_t>(e));
    }
    int sub = p.lattice().index_of(stab);
    out.add_coeff(p.lattice().class_of(sub), 1);
  }
  return out;
}

std::vector<Factorization> factorizations_via(const GroupHom& gamma,
                                              const Subgroup& v) {
  if (!gamma.is_surjective())
    throw PreconditionError("factorizations need an epimorphism");
  std::vector<Factorization> out;
  const Subgroup& w = gamma.domain();
  const Subgroup& u = gamma.codomain();
  if (w.order() % v.order() != 0 || v.order() % u.order() != 0) return out;
  for (const GroupHom& beta : homomorphisms(w, v, HomKind::Epi)) {
    // gamma factors through beta iff ker(beta) <= ker(gamma); the
    // induced map alpha(beta(x)) = gamma(x) is then an epimorphism.
    bool factors = true;
    std::vector<int16_t> alpha_vals(v.parent()->order(), -1);
    for (uint16_t e : w.elements()) {
      int mid = beta.apply(e), im = gamma.apply(e);
      if (alpha_vals[mid] < 0)
        alpha_vals[mid] = static_cast<int16_t>(im);
      else if (alpha_vals[mid] != im) {
        factors = false;
        break;
      }
    }
    if (!factors) continue;
    out.push_back(Factorization{GroupHom(v, u, std::move(alpha_vals)), beta});
  }
  return out;
}

std::vector<Factorization> fixed_point_factorizations(const GroupHom& gamma,
                                                      const GroupPtr& h) {
  const auto& lat = h->lattice();
  using Key = std::tuple<int, std::vector<uint16_t>, std::vector<uint16_t>>;
  std::map<Key, Factorization> reps;
  for (int vi = 0; vi < lat.size(); ++vi) {
    Subgroup v(h, vi);
    for (Factorization& f : factorizations_via(gamma, v)) {
      // canonical representative of the H-orbit
      Key best{-1, {}, {}};
      Factorization best_f = f;
      for (int x = 0; x < h->order(); ++x) {
        int vx = lat.conjugate(vi, x);
        Subgroup v2(h, vx);
        GroupHom into = conjugation_hom(v, v2, x);         // c_x : V -> xVx^-1
        GroupHom back = conjugation_hom(v2, v, h->inv(x)); // c_x^-1
        GroupHom alpha2 = compose(f.alpha, back);
        GroupHom beta2 = compose(into, f.beta);
        Key key{vx, alpha2.table(), beta2.table()};
        if (std::get<0>(best) < 0 || key < best) {
          best = std::move(key);
          best_f = Factorization{std::move(alpha2), std::move(beta2)};
        }
      }
      reps.emplace(std::move(best), std::move(best_f));
    }
  }
  std::vector<Factorization> out;
  out.reserve(reps.size());
  for (auto& [key, f] : reps) out.push_back(std::move(f));
  return out;
}

}  // namespace dbr
