#include "dbr/burnside.hpp"

#include <algorithm>

namespace dbr {

SubgroupSystem::SubgroupSystem(PairPtr ctx, SystemFlavor flavor,
                               std::vector<int> classes)
    : ctx_(std::move(ctx)), flavor_(flavor), classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  mask_.assign(ctx_->num_classes(), 0);
  for (int c : classes_) mask_[c] = 1;
}

SubgroupSystem SubgroupSystem::all(PairPtr ctx) {
  std::vector<int> cls(ctx->num_classes());
  for (int c = 0; c < ctx->num_classes(); ++c) cls[c] = c;
  return SubgroupSystem(std::move(ctx), SystemFlavor::All, std::move(cls));
}

SubgroupSystem SubgroupSystem::left_free(PairPtr ctx) {
  std::vector<int> cls;
  for (int c = 0; c < ctx->num_classes(); ++c)
    if (ctx->left_free(ctx->class_rep(c))) cls.push_back(c);
  return SubgroupSystem(std::move(ctx), SystemFlavor::LeftFree, std::move(cls));
}

SubgroupSystem SubgroupSystem::bifree(PairPtr ctx) {
  std::vector<int> cls;
  for (int c = 0; c < ctx->num_classes(); ++c)
    if (ctx->bifree(ctx->class_rep(c))) cls.push_back(c);
  return SubgroupSystem(std::move(ctx), SystemFlavor::Bifree, std::move(cls));
}

SubgroupSystem SubgroupSystem::custom(PairPtr ctx, std::vector<int> classes) {
  SubgroupSystem sys(std::move(ctx), SystemFlavor::Custom, std::move(classes));
  const auto& lat = sys.ctx_->lattice();
  for (int c : sys.classes_) {
    for (int sub : lat.subgroups_of(lat.class_rep(c))) {
      if (!sys.contains_class(lat.class_of(sub)))
        throw SystemClosureError(
            "system is not closed under taking subgroups");
    }
  }
  return sys;
}

bool SubgroupSystem::closed_under_star() const {
  if (!ctx_->left_group()->same_group(*ctx_->right_group())) return false;
  // Star products of arbitrary members are conjugates of products of a
  // representative against the (x,1)-twists of the other, so sweeping
  // the middle twist covers every member pair up to conjugacy.
  const int nh = ctx_->right_group()->order();
  for (int c1 : classes_)
    for (int c2 : classes_)
      for (int x = 0; x < nh; ++x) {
        int twisted =
            ctx_->conjugate_subgroup(ctx_->class_rep(c2), ctx_->encode(x, 0));
        auto [rc, sub] = star(*ctx_, ctx_->class_rep(c1), *ctx_, twisted);
        if (!contains_class(rc->lattice().class_of(sub))) return false;
      }
  return true;
}

bool SubgroupSystem::contains_diagonal() const {
  const GroupPtr& g = ctx_->left_group();
  if (!g->same_group(*ctx_->right_group())) return false;
  Subgroup full(g, g->lattice().full_index());
  int diag = ctx_->graph_of(identity_hom(full));
  return contains_subgroup(diag);
}

bool SubgroupSystem::closed_under_opposite() const {
  if (!ctx_->left_group()->same_group(*ctx_->right_group())) return false;
  for (int c : classes_) {
    auto [oc, sub] = opposite(*ctx_, ctx_->class_rep(c));
    // same pair, so the opposite lives in the same lattice
    if (!contains_class(oc->lattice().class_of(sub))) return false;
  }
  return true;
}

BurnsideElement::BurnsideElement(SubgroupSystem system)
    : system_(std::move(system)) {}

BurnsideElement BurnsideElement::basis_element(const SubgroupSystem& system,
                                               int cls) {
  BurnsideElement e(system);
  e.add_coeff(cls, 1);
  return e;
}

Rational BurnsideElement::coeff(int cls) const {
  auto it = coeffs_.find(cls);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BurnsideElement::add_coeff(int cls, const Rational& r) {
  if (!system_.contains_class(cls))
    throw SystemClosureError("coefficient at a class outside the system");
  Rational& slot = coeffs_[cls];
  slot += r;
  if (slot == 0) coeffs_.erase(cls);
}

bool BurnsideElement::is_integral() const {
  for (const auto& [cls, r] : coeffs_)
    if (!is_integer(r)) return false;
  return true;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& other) {
  for (const auto& [cls, r] : other.coeffs_) add_coeff(cls, r);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& other) {
  for (const auto& [cls, r] : other.coeffs_) add_coeff(cls, -r);
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rational& r) {
  if (r == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [cls, v] : coeffs_) v *= r;
  return *this;
}

Rational BurnsideElement::mark_at(int cls) const {
  Rational sum = 0;
  for (const auto& [c, r] : coeffs_) sum += r * ctx()->mark(cls, c);
  return sum;
}

std::vector<Rational> BurnsideElement::all_marks() const {
  std::vector<Rational> out(ctx()->num_classes(), Rational(0));
  for (int c = 0; c < ctx()->num_classes(); ++c) out[c] = mark_at(c);
  return out;
}

std::vector<int> standard_basis(const SubgroupSystem& system) {
  // class ids are assigned in order of their least member, which is
  // exactly the (order, canonical id) basis order
  return system.classes();
}

std::vector<std::vector<long>> mark_matrix(const SubgroupSystem& system) {
  const auto& cls = system.classes();
  std::vector<std::vector<long>> m(cls.size(), std::vector<long>(cls.size()));
  for (size_t i = 0; i < cls.size(); ++i)
    for (size_t j = 0; j < cls.size(); ++j)
      m[i][j] = system.ctx()->mark(cls[i], cls[j]);
  return m;
}

BurnsideElement identity_element(const SubgroupSystem& system) {
  const GroupPtr& g = system.ctx()->left_group();
  if (!g->same_group(*system.ctx()->right_group()))
    throw PreconditionError("identity element needs matching groups");
  Subgroup full(g, g->lattice().full_index());
  int diag = system.ctx()->graph_of(identity_hom(full));
  return BurnsideElement::basis_element(
      system, system.ctx()->lattice().class_of(diag));
}

namespace {

SubgroupSystem derive_target(const BurnsideElement& a,
                             const BurnsideElement& b, const PairPtr& gk) {
  SystemFlavor fa = a.system().flavor(), fb = b.system().flavor();
  if (fa == SystemFlavor::Custom || fb == SystemFlavor::Custom) {
    if (a.system() == b.system() && a.ctx().get() == gk.get())
      return a.system();
    throw SystemClosureError(
        "products of custom-system elements need an explicit target system");
  }
  if (fa == SystemFlavor::All || fb == SystemFlavor::All)
    return SubgroupSystem::all(gk);
  if (fa == SystemFlavor::LeftFree || fb == SystemFlavor::LeftFree)
    return SubgroupSystem::left_free(gk);
  return SubgroupSystem::bifree(gk);
}

}  // namespace

BurnsideElement mackey_product(const BurnsideElement& a,
                               const BurnsideElement& b,
                               const SubgroupSystem& target) {
  const PairContext& gh = *a.ctx();
  const PairContext& hk = *b.ctx();
  if (!gh.same_right_group(hk))
    throw CompositionError("Mackey product: middle groups differ");
  const FiniteGroup& h = *gh.right_group();
  BurnsideElement out(target);
  for (const auto& [ca, ra] : a.coeffs()) {
    int l = gh.class_rep(ca);
    const auto& ql = gh.goursat(l);
    const auto& p2l = h.lattice().elements(ql.p2);
    for (const auto& [cb, rb] : b.coeffs()) {
      int m = hk.class_rep(cb);
      const auto& qm = hk.goursat(m);
      const auto& p1m = h.lattice().elements(qm.p1);
      // Double cosets p2(L)\H/p1(M), least-element representatives.
      std::vector<char> seen(h.order(), 0);
      for (int x = 0; x < h.order(); ++x) {
        if (seen[x]) continue;
        for (uint16_t u : p2l)
          for (uint16_t v : p1m) seen[h.mul(h.mul(u, x), v)] = 1;
        // conjugate M by (x,1) and compose the relations
        int mx = hk.conjugate_subgroup(
            m, hk.encode(x, 0));
        auto [gk, term] = star(gh, l, hk, mx);
        try {
          out.add_coeff(gk->lattice().class_of(term), ra * rb);
        } catch (const SystemClosureError&) {
          throw SystemClosureError(
              "Mackey product left the declared subgroup system");
        }
      }
    }
  }
  return out;
}

BurnsideElement mackey_product(const BurnsideElement& a,
                               const BurnsideElement& b) {
  const PairContext& gh = *a.ctx();
  const PairContext& hk = *b.ctx();
  if (!gh.same_right_group(hk))
    throw CompositionError("Mackey product: middle groups differ");
  PairPtr gk = PairContext::get(gh.left_group(), hk.right_group());
  return mackey_product(a, b, derive_target(a, b, gk));
}

BurnsideElement opposite_element(const BurnsideElement& a) {
  const PairContext& gh = *a.ctx();
  PairPtr hg = gh.opposite_context();
  std::vector<int> classes;
  std::map<int, int> class_map;  // class over (G,H) -> class over (H,G)
  for (const auto& [c, r] : a.coeffs()) {
    auto [ctx2, sub] = opposite(gh, gh.class_rep(c));
    class_map[c] = ctx2->lattice().class_of(sub);
  }
  SubgroupSystem target = [&] {
    switch (a.system().flavor()) {
      case SystemFlavor::All:
        return SubgroupSystem::all(hg);
      case SystemFlavor::Bifree:
        return SubgroupSystem::bifree(hg);
      default: {
        // the mirror image of the source system
        std::vector<int> cls;
        for (int c : a.system().classes()) {
          auto [ctx2, sub] = opposite(gh, gh.class_rep(c));
          cls.push_back(ctx2->lattice().class_of(sub));
        }
        return SubgroupSystem::custom(hg, std::move(cls));
      }
    }
  }();
  BurnsideElement out(target);
  for (const auto& [c, r] : a.coeffs()) out.add_coeff(class_map[c], r);
  return out;
}

}  // namespace dbr
