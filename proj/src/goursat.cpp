#include "dbr/goursat.hpp"

#include <algorithm>
#include <map>

#include "dbr/catalog.hpp"

namespace dbr {

PairContext::PairContext(GroupPtr g, GroupPtr h)
    : left_(std::move(g)), right_(std::move(h)) {
  product_ = direct_product(left_, right_);
}

PairPtr PairContext::get(const GroupPtr& g, const GroupPtr& h) {
  static std::mutex registry_mutex;
  static std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, PairPtr>
      registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(g.get(), h.get());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  PairPtr ctx(new PairContext(g, h));
  registry[key] = ctx;
  return ctx;
}

const PairContext::Quintuple& PairContext::goursat(int sub) const {
  const auto& lat = lattice();
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (goursat_.empty()) goursat_.resize(lat.size());
    if (goursat_[sub]) return *goursat_[sub];
  }
  const auto& elems = lat.elements(sub);
  std::vector<uint16_t> k1, k2, p1, p2;
  for (uint16_t x : elems) {
    int g = left_of(x), h = right_of(x);
    if (h == 0) k1.push_back(static_cast<uint16_t>(g));
    if (g == 0) k2.push_back(static_cast<uint16_t>(h));
    p1.push_back(static_cast<uint16_t>(g));
    p2.push_back(static_cast<uint16_t>(h));
  }
  auto dedupe = [](std::vector<uint16_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(k1);
  dedupe(k2);
  dedupe(p1);
  dedupe(p2);
  Quintuple q;
  q.k1 = left_->lattice().index_of(k1);
  q.p1 = left_->lattice().index_of(p1);
  q.k2 = right_->lattice().index_of(k2);
  q.p2 = right_->lattice().index_of(p2);
  // Least element of each k2-coset in p2, mapped to the least element
  // of the matching k1-coset in p1.
  const auto& k1e = left_->lattice().elements(q.k1);
  const auto& k2e = right_->lattice().elements(q.k2);
  auto coset_rep_left = [&](int g) {
    int best = -1;
    for (uint16_t k : k1e) {
      int e = left_->mul(g, k);
      if (best < 0 || e < best) best = e;
    }
    return best;
  };
  auto coset_rep_right = [&](int h) {
    int best = -1;
    for (uint16_t k : k2e) {
      int e = right_->mul(h, k);
      if (best < 0 || e < best) best = e;
    }
    return best;
  };
  std::map<uint16_t, uint16_t> eta;
  for (uint16_t x : elems) {
    int g = left_of(x), h = right_of(x);
    eta[static_cast<uint16_t>(coset_rep_right(h))] =
        static_cast<uint16_t>(coset_rep_left(g));
  }
  q.eta.assign(eta.begin(), eta.end());
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (!goursat_[sub]) goursat_[sub] = std::move(q);
  return *goursat_[sub];
}

bool PairContext::left_free(int sub) const {
  return left_->lattice().order(goursat(sub).k1) == 1;
}

bool PairContext::right_free(int sub) const {
  return right_->lattice().order(goursat(sub).k2) == 1;
}

bool PairContext::bifree(int sub) const {
  return left_free(sub) && right_free(sub);
}

ProductClass PairContext::classify(int sub) const {
  bool lf = left_free(sub), rf = right_free(sub);
  if (lf && rf) return ProductClass::Bifree;
  if (lf) return ProductClass::LeftFree;
  if (rf) return ProductClass::RightFree;
  return ProductClass::General;
}

Triple PairContext::triple_of(int sub) const {
  const Quintuple& q = goursat(sub);
  if (left_->lattice().order(q.k1) != 1)
    throw ClassificationError(
        "subgroup is not left-free (k1 is nontrivial), no triple exists");
  std::vector<int16_t> vals(right_->order(), -1);
  for (uint16_t x : lattice().elements(sub))
    vals[right_of(x)] = static_cast<int16_t>(left_of(x));
  Subgroup u(left_, q.p1), v(right_, q.p2);
  return Triple{GroupHom(v, u, std::move(vals))};
}

int PairContext::graph_of(const GroupHom& phi) const {
  std::vector<uint16_t> elems;
  elems.reserve(phi.domain().elements().size());
  for (uint16_t v : phi.domain().elements())
    elems.push_back(static_cast<uint16_t>(encode(phi.apply(v), v)));
  std::sort(elems.begin(), elems.end());
  return lattice().index_of(elems);
}

int PairContext::graph_of_values(const std::vector<uint16_t>& dom_elems,
                                 const int16_t* values) const {
  std::vector<uint16_t> elems;
  elems.reserve(dom_elems.size());
  for (uint16_t v : dom_elems)
    elems.push_back(static_cast<uint16_t>(encode(values[v], v)));
  std::sort(elems.begin(), elems.end());
  return lattice().index_of(elems);
}

long PairContext::mark(int cls_l, int cls_m) const {
  const auto& lat = lattice();
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (marks_.empty())
      marks_.assign(static_cast<size_t>(num_classes()) * num_classes(), -1);
    long v = marks_[static_cast<size_t>(cls_l) * num_classes() + cls_m];
    if (v >= 0) return v;
  }
  int l = lat.class_rep(cls_l), m = lat.class_rep(cls_m);
  // Phi_L([ (GxH)/M ]) = #{x : x^-1 L x <= M} / |M|; only possible if
  // |L| divides |M|.
  long count = 0;
  if (lat.order(l) <= lat.order(m)) {
    const FiniteGroup& p = *product_;
    for (int x = 0; x < p.order(); ++x) {
      int xi = p.inv(x);
      bool inside = true;
      for (uint16_t e : lat.elements(l)) {
        if (!lat.contains(m, p.mul(p.mul(xi, e), x))) {
          inside = false;
          break;
        }
      }
      if (inside) ++count;
    }
    count /= lat.order(m);
  }
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  marks_[static_cast<size_t>(cls_l) * num_classes() + cls_m] = count;
  return count;
}

int PairContext::degree_of_class(int c) const {
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (degree_.empty()) degree_.assign(num_classes(), -2);
    if (degree_[c] != -2) return degree_[c];
  }
  const Quintuple& q = goursat(class_rep(c));
  if (left_->lattice().order(q.k1) != 1)
    throw ClassificationError("grading degree requires a left-free class");
  int deg = right_->lattice().composition_length(q.k2);
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  degree_[c] = deg;
  return deg;
}

int PairContext::type_of_class(int c) const {
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (type_.empty()) type_.assign(num_classes(), -2);
    if (type_[c] != -2) return type_[c];
  }
  const Quintuple& q = goursat(class_rep(c));
  int t = TypeRegistry::instance().classify_subgroup(*left_, q.p1);
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  type_[c] = t;
  return t;
}

const std::vector<Triple>& PairContext::class_expansion(int c) const {
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (expansion_.empty()) expansion_.resize(num_classes());
    if (expansion_[c]) return *expansion_[c];
  }
  std::vector<Triple> triples;
  for (int sub : lattice().class_members(c)) triples.push_back(triple_of(sub));
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (!expansion_[c]) expansion_[c] = std::move(triples);
  return *expansion_[c];
}

std::pair<PairPtr, int> star(const PairContext& gh, int l,
                             const PairContext& hk, int m) {
  if (!gh.same_right_group(hk))
    throw CompositionError("star product: middle groups differ");
  PairPtr gk = PairContext::get(gh.left_group(), hk.right_group());
  // Join the two relations on the middle component.
  std::vector<std::vector<uint16_t>> by_mid(gh.right_group()->order());
  for (uint16_t x : hk.lattice().elements(m))
    by_mid[hk.left_of(x)].push_back(static_cast<uint16_t>(hk.right_of(x)));
  std::vector<uint16_t> elems;
  for (uint16_t x : gh.lattice().elements(l)) {
    int g = gh.left_of(x), h = gh.right_of(x);
    for (uint16_t k : by_mid[h])
      elems.push_back(static_cast<uint16_t>(gk->encode(g, k)));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return {gk, gk->lattice().index_of(elems)};
}

std::pair<PairPtr, int> opposite(const PairContext& gh, int l) {
  PairPtr hg = gh.opposite_context();
  std::vector<uint16_t> elems;
  for (uint16_t x : gh.lattice().elements(l))
    elems.push_back(
        static_cast<uint16_t>(hg->encode(gh.right_of(x), gh.left_of(x))));
  std::sort(elems.begin(), elems.end());
  return {hg, hg->lattice().index_of(elems)};
}

int from_triple(const PairContext& ctx, const Triple& t) {
  return ctx.graph_of(t.alpha);
}

TypeRegistry& TypeRegistry::instance() {
  static TypeRegistry reg;
  return reg;
}

namespace {

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p(g.order());
  for (int i = 0; i < g.order(); ++i) p[i] = g.element_order(i);
  std::sort(p.begin(), p.end());
  return p;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// Invariant factors of an abelian group, largest first, from the
// element-order statistics of each primary component.
std::vector<int> abelian_invariant_factors(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> primes;
  int m = n;
  for (int p = 2; p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  // partition exponents lambda_1 >= lambda_2 >= ... per prime
  std::vector<std::vector<int>> partitions;
  for (int p : primes) {
    // count elements of order dividing p^i
    std::vector<long> cnt;  // cnt[i] = #{x : x^(p^i) = 1}
    cnt.push_back(1);
    for (long pk = p;; pk *= p) {
      long c = 0;
      for (int x = 0; x < n; ++x)
        if (pk % g.element_order(x) == 0) ++c;
      cnt.push_back(c);
      if (c == cnt[cnt.size() - 2]) break;
    }
    // log_p cnt[i] = sum_j min(lambda_j, i); recover the partition
    std::vector<int> logs;
    for (long c : cnt) {
      int e = 0;
      while (c > 1) {
        c /= p;
        ++e;
      }
      logs.push_back(e);
    }
    std::vector<int> diffs;  // #parts >= i
    for (size_t i = 1; i < logs.size(); ++i) diffs.push_back(logs[i] - logs[i - 1]);
    std::vector<int> lambda;
    for (size_t i = 0; i < diffs.size(); ++i)
      for (int j = 0; j < diffs[i] - (i + 1 < diffs.size() ? diffs[i + 1] : 0);
           ++j)
        lambda.push_back(static_cast<int>(i) + 1);
    std::sort(lambda.rbegin(), lambda.rend());
    partitions.push_back(std::move(lambda));
  }
  size_t parts = 0;
  for (const auto& l : partitions) parts = std::max(parts, l.size());
  std::vector<int> factors(parts, 1);
  for (size_t pi = 0; pi < primes.size(); ++pi)
    for (size_t j = 0; j < partitions[pi].size(); ++j) {
      int pw = 1;
      for (int e = 0; e < partitions[pi][j]; ++e) pw *= primes[pi];
      factors[j] *= pw;
    }
  return factors;  // largest first, divisibility chain upward
}

bool groups_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return false;
  Subgroup fa(a, a->lattice().full_index());
  Subgroup fb(b, b->lattice().full_index());
  return !homomorphisms(fa, fb, HomKind::Iso).empty();
}

// Named nonabelian groups worth matching against, by order.
std::vector<std::string> nonabelian_candidates(int n) {
  std::vector<std::string> out;
  if (n == 6) out.push_back("S3");
  if (n == 8) out.push_back("Q8");
  if (n == 12) out.push_back("A4");
  if (n == 24) out.push_back("S4");
  if (n % 2 == 0 && n >= 6 && n != 6) out.push_back("D" + std::to_string(n));
  return out;
}

}  // namespace

int TypeRegistry::classify(const GroupPtr& g) {
  auto profile = order_profile(*g);
  const int n = g->order();
  const bool abelian = is_abelian(*g);
  std::lock_guard<std::mutex> lock(mutex_);
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].order_profile != profile) continue;
    // Matching order statistics pin down abelian types completely.
    if (abelian && is_abelian(*entries_[i].rep)) return static_cast<int>(i);
    if (groups_isomorphic(entries_[i].rep, g)) return static_cast<int>(i);
  }
  std::string name;
  if (n == 1) {
    name = "1";
  } else if (abelian) {
    auto factors = abelian_invariant_factors(*g);
    if (factors.size() == 1) {
      name = "C" + std::to_string(n);
    } else if (factors.size() == 2 && factors[0] == 2 && factors[1] == 2) {
      name = "V4";
    } else {
      for (size_t i = 0; i < factors.size(); ++i)
        name += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
    }
  } else {
    for (const std::string& cand : nonabelian_candidates(n)) {
      if (groups_isomorphic(load_group(cand), g)) {
        name = cand;
        break;
      }
    }
    if (name.empty()) {
      int count = 0;
      for (const auto& e : entries_)
        if (e.rep->order() == n) ++count;
      name = "X" + std::to_string(n) + "." + std::to_string(count + 1);
    }
  }
  entries_.push_back(Entry{g, std::move(name), std::move(profile)});
  return static_cast<int>(entries_.size()) - 1;
}

int TypeRegistry::classify_subgroup(const FiniteGroup& parent,
                                    int subgroup_index) {
  return classify(parent.lattice().materialize(subgroup_index));
}

const std::string& TypeRegistry::name(int id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_[id].name;
}

GroupPtr TypeRegistry::representative(int id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_[id].rep;
}

}  // namespace dbr
