#include "dbr/ghost.hpp"

#include <algorithm>
#include <functional>

namespace dbr {

GhostElement::GhostElement(SubgroupSystem system) : system_(std::move(system)) {}

GhostElement GhostElement::basis_element(const SubgroupSystem& system,
                                         int cls) {
  GhostElement e(system);
  e.add_coeff(cls, 1);
  return e;
}

Rational GhostElement::coeff(int cls) const {
  auto it = coeffs_.find(cls);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GhostElement::add_coeff(int cls, const Rational& r) {
  if (!system_.contains_class(cls))
    throw SystemClosureError("ghost coefficient at a class outside the system");
  Rational& slot = coeffs_[cls];
  slot += r;
  if (slot == 0) coeffs_.erase(cls);
}

bool GhostElement::is_integral() const {
  for (const auto& [cls, r] : coeffs_)
    if (!is_integer(r)) return false;
  return true;
}

GhostElement& GhostElement::operator+=(const GhostElement& other) {
  for (const auto& [cls, r] : other.coeffs_) add_coeff(cls, r);
  return *this;
}

GhostElement& GhostElement::operator-=(const GhostElement& other) {
  for (const auto& [cls, r] : other.coeffs_) add_coeff(cls, -r);
  return *this;
}

GhostElement& GhostElement::operator*=(const Rational& r) {
  if (r == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [cls, v] : coeffs_) v *= r;
  return *this;
}

SubgroupSystem derive_product_system(const SubgroupSystem& a,
                                     const SubgroupSystem& b,
                                     const PairPtr& gk) {
  SystemFlavor fa = a.flavor(), fb = b.flavor();
  if (fa == SystemFlavor::Custom || fb == SystemFlavor::Custom) {
    if (a == b && a.ctx().get() == gk.get()) return a;
    throw SystemClosureError(
        "products of custom-system elements need an explicit target system");
  }
  if (fa == SystemFlavor::All || fb == SystemFlavor::All)
    return SubgroupSystem::all(gk);
  if (fa == SystemFlavor::LeftFree || fb == SystemFlavor::LeftFree)
    return SubgroupSystem::left_free(gk);
  return SubgroupSystem::bifree(gk);
}

namespace {

void require_left_free_system(const SubgroupSystem& system) {
  for (int c : system.classes())
    if (!system.ctx()->left_free(system.ctx()->class_rep(c)))
      throw PreconditionError("operation needs a left-free subgroup system");
}

void require_bifree_support(const GhostElement& x) {
  for (const auto& [c, r] : x.coeffs())
    if (!x.ctx()->bifree(x.ctx()->class_rep(c)))
      throw PreconditionError("operation needs twisted-diagonal support");
}

long centralizer_order(const GroupPtr& g, int subgroup_index) {
  const auto& lat = g->lattice();
  return lat.order(lat.centralizer(subgroup_index));
}

}  // namespace

GhostElement rho(const BurnsideElement& a) {
  require_left_free_system(a.system());
  const PairContext& ctx = *a.ctx();
  GhostElement out(a.system());
  for (int c : a.system().classes()) {
    Rational marks = a.mark_at(c);
    if (marks == 0) continue;
    int u = ctx.goursat(ctx.class_rep(c)).p1;
    out.add_coeff(c, marks / centralizer_order(ctx.left_group(), u));
  }
  return out;
}

BurnsideElement rho_inverse(const GhostElement& x) {
  const PairContext& ctx = *x.ctx();
  const GroupPtr& h = ctx.right_group();
  const auto& hlat = h->lattice();
  BurnsideElement out(x.system());
  for (const auto& [c, r] : x.coeffs()) {
    int rep = ctx.class_rep(c);
    Triple t = ctx.triple_of(rep);
    long n_order = ctx.lattice().order(ctx.lattice().normalizer(rep));
    Rational factor =
        r * make_rational(centralizer_order(ctx.left_group(),
                                            t.image_side().index()),
                          n_order);
    int v = t.domain_side().index();
    std::vector<int16_t> vals(h->order(), -1);
    for (uint16_t e : t.domain_side().elements())
      vals[e] = static_cast<int16_t>(t.alpha.apply(e));
    for (int w : hlat.subgroups_of(v)) {
      long mu = hlat.mobius(w, v);
      if (mu == 0) continue;
      int graph = ctx.graph_of_values(hlat.elements(w), vals.data());
      out.add_coeff(ctx.lattice().class_of(graph),
                    factor * hlat.order(w) * mu);
    }
  }
  return out;
}

GhostElement ghost_product(const GhostElement& a, const GhostElement& b) {
  const PairContext& gh = *a.ctx();
  const PairContext& hk = *b.ctx();
  if (!gh.same_right_group(hk))
    throw CompositionError("ghost product: middle groups differ");
  PairPtr gk = PairContext::get(gh.left_group(), hk.right_group());
  const GroupPtr& h = gh.right_group();

  // Expand b to triples grouped by the image-side subgroup of H.
  std::vector<std::vector<std::pair<const Triple*, const Rational*>>> by_image(
      h->lattice().size());
  for (const auto& [cb, rb] : b.coeffs())
    for (const Triple& t : hk.class_expansion(cb))
      by_image[t.image_side().index()].emplace_back(&t, &rb);

  std::map<int, Rational> per_sub;  // result subgroup -> coefficient
  for (const auto& [ca, ra] : a.coeffs()) {
    for (const Triple& t1 : gh.class_expansion(ca)) {
      int v = t1.domain_side().index();
      if (by_image[v].empty()) continue;
      Rational factor =
          ra * make_rational(h->lattice().order(h->lattice().centralizer(v)),
                             h->order());
      for (auto [t2, rb] : by_image[v]) {
        GroupHom composed = compose(t1.alpha, t2->alpha);
        Rational& slot = per_sub[gk->graph_of(composed)];
        slot += factor * (*rb);
      }
    }
  }
  // Re-collect per conjugacy class and verify invariance on the way.
  GhostElement out(derive_product_system(a.system(), b.system(), gk));
  auto value_at = [&](int sub) {
    auto it = per_sub.find(sub);
    return it == per_sub.end() ? Rational(0) : it->second;
  };
  std::vector<char> done(gk->num_classes(), 0);
  for (const auto& [sub, val] : per_sub) {
    int c = gk->lattice().class_of(sub);
    if (done[c]) continue;
    done[c] = 1;
    Rational v0 = value_at(gk->class_rep(c));
    for (int member : gk->lattice().class_members(c))
      if (value_at(member) != v0)
        throw Error("ghost product lost conjugation invariance (internal)");
    if (v0 != 0) out.add_coeff(c, v0);
  }
  return out;
}

GhostElement ghost_identity(const SubgroupSystem& system) {
  const GroupPtr& g = system.ctx()->left_group();
  if (!g->same_group(*system.ctx()->right_group()))
    throw PreconditionError("ghost identity needs matching groups");
  GhostElement out(system);
  const auto& lat = g->lattice();
  for (int c = 0; c < lat.num_classes(); ++c) {
    Subgroup u(g, lat.class_rep(c));
    int graph = system.ctx()->graph_of(identity_hom(u));
    out.add_coeff(system.ctx()->lattice().class_of(graph), 1);
  }
  return out;
}

GhostElement ghost_opposite(const GhostElement& x) {
  require_bifree_support(x);
  const PairContext& gh = *x.ctx();
  PairPtr hg = gh.opposite_context();
  SubgroupSystem target = [&] {
    switch (x.system().flavor()) {
      case SystemFlavor::Bifree:
        return SubgroupSystem::bifree(hg);
      case SystemFlavor::LeftFree:
        return SubgroupSystem::left_free(hg);
      case SystemFlavor::All:
        return SubgroupSystem::all(hg);
      default: {
        std::vector<int> cls;
        for (int c : x.system().classes()) {
          auto [ctx2, sub] = opposite(gh, gh.class_rep(c));
          cls.push_back(ctx2->lattice().class_of(sub));
        }
        return SubgroupSystem::custom(hg, std::move(cls));
      }
    }
  }();
  GhostElement out(target);
  for (const auto& [c, r] : x.coeffs()) {
    Triple t = gh.triple_of(gh.class_rep(c));
    auto [ctx2, sub] = opposite(gh, gh.class_rep(c));
    Rational ratio = make_rational(
        centralizer_order(gh.right_group(), t.domain_side().index()),
        centralizer_order(gh.left_group(), t.image_side().index()));
    out.add_coeff(ctx2->lattice().class_of(sub), r * ratio);
  }
  return out;
}

std::map<int, GhostElement> grading(const GhostElement& x) {
  std::map<int, GhostElement> out;
  for (const auto& [c, r] : x.coeffs()) {
    int d = x.ctx()->degree_of_class(c);
    auto it = out.find(d);
    if (it == out.end())
      it = out.emplace(d, GhostElement(x.system())).first;
    it->second.add_coeff(c, r);
  }
  return out;
}

BurnsideElement graded_component(const BurnsideElement& a, int degree) {
  GhostElement ghost = rho(a);
  GhostElement part(ghost.system());
  for (const auto& [c, r] : ghost.coeffs())
    if (ghost.ctx()->degree_of_class(c) == degree) part.add_coeff(c, r);
  return rho_inverse(part);
}

RadicalSplit radical_complement(const SubgroupSystem& system) {
  require_left_free_system(system);
  const PairContext& ctx = *system.ctx();
  RadicalSplit split;
  const auto& glat = ctx.left_group()->lattice();
  for (int c = 0; c < glat.num_classes(); ++c)
    split.nilpotency_bound =
        std::max(split.nilpotency_bound,
                 glat.composition_length(glat.class_rep(c)));
  split.nilpotency_bound += 1;
  std::vector<GhostElement> radical_ghost;
  for (int c : system.classes()) {
    if (ctx.degree_of_class(c) == 0) {
      split.semisimple_basis.push_back(
          BurnsideElement::basis_element(system, c));
    } else {
      GhostElement g = GhostElement::basis_element(system, c);
      split.radical_basis.push_back(rho_inverse(g));
      radical_ghost.push_back(std::move(g));
    }
  }
  // Verify nilpotency: iterated products of the radical span vanish by
  // the bound.
  std::vector<GhostElement> power = radical_ghost;
  for (int k = 2; k <= split.nilpotency_bound && !power.empty(); ++k) {
    std::vector<GhostElement> next;
    for (const GhostElement& x : power)
      for (const GhostElement& y : radical_ghost) {
        GhostElement p = ghost_product(x, y);
        if (!p.is_zero()) next.push_back(std::move(p));
      }
    power = std::move(next);
  }
  if (!power.empty())
    throw Error("radical failed its nilpotency bound (internal)");
  return split;
}

std::map<int, GhostElement> type_components(const GhostElement& x) {
  require_bifree_support(x);
  std::map<int, GhostElement> out;
  for (const auto& [c, r] : x.coeffs()) {
    int t = x.ctx()->type_of_class(c);
    auto it = out.find(t);
    if (it == out.end()) it = out.emplace(t, GhostElement(x.system())).first;
    it->second.add_coeff(c, r);
  }
  return out;
}

bool EquivariantMatrix::equivariant() const {
  for (size_t a = 0; a < row_actions.size(); ++a)
    for (int r = 0; r < rows(); ++r)
      for (int c = 0; c < cols(); ++c)
        if (at(row_actions[a][r], col_actions[a][c]) != at(r, c)) return false;
  return true;
}

bool EquivariantMatrix::is_identity() const {
  if (rows() != cols() || row_labels != col_labels) return false;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool EquivariantMatrix::is_zero() const {
  for (const Rational& e : entries)
    if (e != 0) return false;
  return true;
}

EquivariantMatrix compose(const EquivariantMatrix& a,
                          const EquivariantMatrix& b) {
  if (a.col_labels != b.row_labels)
    throw CompositionError("matrix blocks are not composable");
  EquivariantMatrix out;
  out.block_label = a.block_label;
  out.block_type = a.block_type;
  out.type_rep = a.type_rep;
  out.domain_elems = a.domain_elems;
  out.row_labels = a.row_labels;
  out.col_labels = b.col_labels;
  out.row_actions = a.row_actions;
  out.col_actions = b.col_actions;
  out.entries.assign(static_cast<size_t>(out.rows()) * out.cols(),
                     Rational(0));
  for (int r = 0; r < a.rows(); ++r)
    for (int m = 0; m < a.cols(); ++m) {
      if (a.at(r, m) == 0) continue;
      for (int c = 0; c < b.cols(); ++c)
        out.at(r, c) += a.at(r, m) * b.at(m, c);
    }
  return out;
}

namespace {

// Canonical table of the orbit [lambda] = {c_g o lambda} of a map into
// G, where the map is given by its values on 0..|T|-1 (or on the sorted
// elements of a subgroup domain).
std::vector<uint16_t> orbit_canonical(const GroupPtr& g,
                                      const std::vector<uint16_t>& values) {
  std::vector<uint16_t> best;
  std::vector<uint16_t> cur(values.size());
  for (int x = 0; x < g->order(); ++x) {
    for (size_t i = 0; i < values.size(); ++i)
      cur[i] = static_cast<uint16_t>(g->conj(x, values[i]));
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

int label_index(const std::vector<std::vector<uint16_t>>& labels,
                const std::vector<uint16_t>& key) {
  auto it = std::lower_bound(labels.begin(), labels.end(), key);
  if (it == labels.end() || *it != key)
    throw Error("orbit label lookup failed (internal)");
  return static_cast<int>(it - labels.begin());
}

// Orbit labels of injective homomorphisms T -> G (value tables on
// 0..|T|-1), sorted.
std::vector<std::vector<uint16_t>> injection_orbit_labels(const GroupPtr& t,
                                                          const GroupPtr& g) {
  Subgroup tf(t, t->lattice().full_index());
  Subgroup gf(g, g->lattice().full_index());
  std::vector<std::vector<uint16_t>> labels;
  for (const GroupHom& h : homomorphisms(tf, gf, HomKind::All)) {
    if (!h.is_injective()) continue;
    labels.push_back(orbit_canonical(g, h.table()));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

// Permutations of the labels under pre-composition with each
// automorphism of T.
std::vector<std::vector<int>> label_actions(
    const GroupPtr& g, const std::vector<std::vector<uint16_t>>& labels,
    const std::vector<GroupHom>& auts) {
  std::vector<std::vector<int>> actions;
  for (const GroupHom& w : auts) {
    std::vector<int> perm(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      std::vector<uint16_t> translated(labels[i].size());
      for (size_t x = 0; x < labels[i].size(); ++x)
        translated[x] = labels[i][w.apply(static_cast<int>(x))];
      perm[i] = label_index(labels, orbit_canonical(g, translated));
    }
    actions.push_back(std::move(perm));
  }
  return actions;
}

// The subgroup of GxH generated by pairs (lambda(t), mu(t)); lambda and
// mu share the abstract domain 0..n-1.
int pairing_graph(const PairContext& ctx, const std::vector<uint16_t>& lambda,
                  const std::vector<uint16_t>& mu) {
  std::vector<uint16_t> elems(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    elems[i] = static_cast<uint16_t>(ctx.encode(lambda[i], mu[i]));
  std::sort(elems.begin(), elems.end());
  return ctx.lattice().index_of(elems);
}

long image_centralizer_order(const GroupPtr& g,
                             const std::vector<uint16_t>& values) {
  std::vector<uint16_t> img(values);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  const auto& lat = g->lattice();
  return lat.order(lat.centralizer(lat.index_of(img)));
}

void require_bifree_element(const BurnsideElement& a) {
  for (const auto& [c, r] : a.coeffs())
    if (!a.ctx()->bifree(a.ctx()->class_rep(c)))
      throw PreconditionError("operation needs twisted-diagonal support");
}

EquivariantMatrix sigma_skeleton(const PairPtr& ctx, int type_id) {
  EquivariantMatrix m;
  m.block_type = type_id;
  m.type_rep = TypeRegistry::instance().representative(type_id);
  m.block_label = TypeRegistry::instance().name(type_id);
  m.row_labels = injection_orbit_labels(m.type_rep, ctx->left_group());
  m.col_labels = injection_orbit_labels(m.type_rep, ctx->right_group());
  Subgroup tf(m.type_rep, m.type_rep->lattice().full_index());
  auto auts = homomorphisms(tf, tf, HomKind::Iso);
  m.row_actions = label_actions(ctx->left_group(), m.row_labels, auts);
  m.col_actions = label_actions(ctx->right_group(), m.col_labels, auts);
  m.entries.assign(static_cast<size_t>(m.rows()) * m.cols(), Rational(0));
  return m;
}

}  // namespace

EquivariantMatrix sigma_block(const BurnsideElement& a, int type_id) {
  require_bifree_element(a);
  const PairPtr& ctx = a.ctx();
  EquivariantMatrix m = sigma_skeleton(ctx, type_id);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      int graph = pairing_graph(*ctx, m.row_labels[r], m.col_labels[c]);
      Rational phi = a.mark_at(ctx->lattice().class_of(graph));
      if (phi == 0) continue;
      m.at(r, c) =
          phi / image_centralizer_order(ctx->left_group(), m.row_labels[r]);
    }
  return m;
}

std::vector<EquivariantMatrix> sigma_blocks(const BurnsideElement& a) {
  const PairPtr& ctx = a.ctx();
  auto& reg = TypeRegistry::instance();
  std::vector<int> types;
  const auto& glat = ctx->left_group()->lattice();
  const auto& hlat = ctx->right_group()->lattice();
  std::vector<int> left_types, right_types;
  for (int c = 0; c < glat.num_classes(); ++c)
    left_types.push_back(reg.classify_subgroup(*ctx->left_group(),
                                               glat.class_rep(c)));
  for (int c = 0; c < hlat.num_classes(); ++c)
    right_types.push_back(reg.classify_subgroup(*ctx->right_group(),
                                                hlat.class_rep(c)));
  std::sort(left_types.begin(), left_types.end());
  std::sort(right_types.begin(), right_types.end());
  std::set_intersection(left_types.begin(), left_types.end(),
                        right_types.begin(), right_types.end(),
                        std::back_inserter(types));
  types.erase(std::unique(types.begin(), types.end()), types.end());
  std::vector<EquivariantMatrix> out;
  for (int t : types) out.push_back(sigma_block(a, t));
  return out;
}

EquivariantMatrix tau_block(const GhostElement& x, int type_id) {
  require_bifree_support(x);
  const PairPtr& ctx = x.ctx();
  EquivariantMatrix m = sigma_skeleton(ctx, type_id);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      int graph = pairing_graph(*ctx, m.row_labels[r], m.col_labels[c]);
      m.at(r, c) = x.coeff(ctx->lattice().class_of(graph));
    }
  return m;
}

namespace {

// lattice indices of G paired by an isomorphism whose graph lies in the
// system, merged transitively.
std::vector<int> system_iso_transversal(const SubgroupSystem& system) {
  const PairContext& ctx = *system.ctx();
  const auto& glat = ctx.left_group()->lattice();
  std::vector<int> parent(glat.size());
  for (int i = 0; i < glat.size(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int c : system.classes())
    for (int member : ctx.lattice().class_members(c)) {
      const auto& q = ctx.goursat(member);
      int a = find(q.p1), b = find(q.p2);
      parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> reps;
  for (int i = 0; i < glat.size(); ++i)
    if (find(i) == i) reps.push_back(i);
  return reps;
}

// Injective maps U -> G with graph in the system, as Inn(G)-orbit
// labels (value tables on the sorted elements of U).
std::vector<std::vector<uint16_t>> morphism_orbit_labels(
    const SubgroupSystem& system, const Subgroup& u) {
  const PairContext& ctx = *system.ctx();
  const GroupPtr& g = ctx.left_group();
  Subgroup gf(g, g->lattice().full_index());
  std::vector<std::vector<uint16_t>> labels;
  for (const GroupHom& h : homomorphisms(u, gf, HomKind::All)) {
    if (!h.is_injective()) continue;
    if (!system.contains_subgroup(ctx.graph_of(h))) continue;
    labels.push_back(orbit_canonical(g, h.table()));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::vector<GroupHom> system_automorphisms(const SubgroupSystem& system,
                                           const Subgroup& u) {
  std::vector<GroupHom> out;
  for (const GroupHom& w : homomorphisms(u, u, HomKind::Iso))
    if (system.contains_subgroup(system.ctx()->graph_of(w)))
      out.push_back(w);
  return out;
}

// Value tables here live on sorted subgroup elements; translate the
// label through an automorphism of U given on parent indices.
std::vector<std::vector<int>> morphism_label_actions(
    const GroupPtr& g, const Subgroup& u,
    const std::vector<std::vector<uint16_t>>& labels,
    const std::vector<GroupHom>& auts) {
  const auto& elems = u.elements();
  std::vector<int> pos(u.parent()->order(), -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> actions;
  for (const GroupHom& w : auts) {
    std::vector<int> perm(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      std::vector<uint16_t> translated(labels[i].size());
      for (size_t x = 0; x < elems.size(); ++x)
        translated[x] = labels[i][pos[w.apply(elems[x])]];
      perm[i] = label_index(labels, orbit_canonical(g, translated));
    }
    actions.push_back(std::move(perm));
  }
  return actions;
}

int morphism_pair_graph(const PairContext& ctx, const Subgroup& u,
                        const std::vector<uint16_t>& phi,
                        const std::vector<uint16_t>& psi) {
  const auto& elems = u.elements();
  std::vector<uint16_t> graph(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    graph[i] = static_cast<uint16_t>(ctx.encode(phi[i], psi[i]));
  std::sort(graph.begin(), graph.end());
  return ctx.lattice().index_of(graph);
}

}  // namespace

std::vector<EquivariantMatrix> sigma_tilde_blocks(
    const BurnsideElement& a, const SubgroupSystem& system) {
  require_bifree_element(a);
  const PairContext& ctx = *system.ctx();
  if (!ctx.left_group()->same_group(*ctx.right_group()))
    throw PreconditionError("endomorphism blocks need a single group");
  if (a.ctx().get() != system.ctx().get())
    throw PreconditionError("element and system live over different pairs");
  const GroupPtr& g = ctx.left_group();
  std::vector<EquivariantMatrix> out;
  for (int ui : system_iso_transversal(system)) {
    Subgroup u(g, ui);
    EquivariantMatrix m;
    m.block_label = "U" + std::to_string(ui);
    m.domain_elems = u.elements();
    m.row_labels = morphism_orbit_labels(system, u);
    m.col_labels = m.row_labels;
    auto auts = system_automorphisms(system, u);
    m.row_actions = morphism_label_actions(g, u, m.row_labels, auts);
    m.col_actions = m.row_actions;
    m.entries.assign(static_cast<size_t>(m.rows()) * m.cols(), Rational(0));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        int graph = morphism_pair_graph(ctx, u, m.row_labels[r], m.col_labels[c]);
        Rational phi = a.mark_at(ctx.lattice().class_of(graph));
        if (phi == 0) continue;
        m.at(r, c) = phi / image_centralizer_order(g, m.row_labels[r]);
      }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Rational> sigma_tilde_coordinates(
    const std::vector<EquivariantMatrix>& blocks,
    const SubgroupSystem& system) {
  const PairContext& ctx = *system.ctx();
  const GroupPtr& g = ctx.left_group();
  std::vector<Rational> coords(system.classes().size(), Rational(0));
  std::vector<int> class_pos(ctx.num_classes(), -1);
  for (size_t i = 0; i < system.classes().size(); ++i)
    class_pos[system.classes()[i]] = static_cast<int>(i);
  std::vector<char> seen(system.classes().size(), 0);
  for (const EquivariantMatrix& m : blocks) {
    Subgroup u(g, g->lattice().index_of(m.domain_elems));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        int graph = morphism_pair_graph(ctx, u, m.row_labels[r], m.col_labels[c]);
        int pos = class_pos[ctx.lattice().class_of(graph)];
        if (pos < 0)
          throw Error("orbit-pair bijection left the system (internal)");
        if (!seen[pos]) {
          seen[pos] = 1;
          coords[pos] = m.at(r, c);
        }
      }
  }
  return coords;
}

}  // namespace dbr
