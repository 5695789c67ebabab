#include "dbr/group.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>

namespace dbr {

int max_group_order() {
  static const int bound = [] {
    if (const char* env = std::getenv("BURNSIDE_MAX_ORDER")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 256;
  }();
  return bound;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<uint16_t> table)
    : name_(std::move(name)), table_(std::move(table)) {
  order_ = 1;
  while (static_cast<size_t>(order_) * order_ < table_.size()) ++order_;
  inverse_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) inverse_[a] = static_cast<uint16_t>(b);
    }
  }
  elem_order_.assign(order_, 1);
  for (int a = 0; a < order_; ++a) {
    int x = a, n = 1;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    elem_order_[a] = static_cast<uint16_t>(n);
  }
}

GroupPtr FiniteGroup::make(std::string name, std::vector<uint16_t> table,
                           bool verify) {
  size_t n = 1;
  while (n * n < table.size()) ++n;
  if (n * n != table.size() || table.empty())
    throw LoadError("group table is not square");
  if (verify) {
    for (size_t a = 0; a < n; ++a) {
      if (table[a] != a || table[a * n] != a)
        throw LoadError("index 0 is not a two-sided identity");
    }
    for (size_t a = 0; a < n; ++a) {
      std::vector<char> seen_row(n, 0), seen_col(n, 0);
      for (size_t b = 0; b < n; ++b) {
        uint16_t r = table[a * n + b], c = table[b * n + a];
        if (r >= n || c >= n) throw LoadError("table entry out of range");
        if (seen_row[r]++ || seen_col[c]++)
          throw LoadError("table rows/columns are not bijective");
      }
    }
    bool has_inverse;
    for (size_t a = 0; a < n; ++a) {
      has_inverse = false;
      for (size_t b = 0; b < n; ++b) has_inverse |= table[a * n + b] == 0;
      if (!has_inverse) throw LoadError("an element has no inverse");
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
            throw LoadError("multiplication table is not associative");
  }
  return GroupPtr(new FiniteGroup(std::move(name), std::move(table)));
}

const SubgroupLattice& FiniteGroup::lattice() const {
  std::call_once(lattice_once_, [this] {
    if (order_ > max_group_order())
      throw CapacityError("group order " + std::to_string(order_) +
                          " exceeds the subgroup-lattice bound " +
                          std::to_string(max_group_order()));
    lattice_ = std::make_unique<const SubgroupLattice>(*this);
  });
  return *lattice_;
}

const std::vector<uint16_t>& Subgroup::elements() const {
  return parent_->lattice().elements(index_);
}

bool Subgroup::contains(int e) const {
  return parent_->lattice().contains(index_, e);
}

std::vector<uint64_t> SubgroupLattice::mask_of(
    const std::vector<uint16_t>& elems) const {
  std::vector<uint64_t> m(mask_words_, 0);
  for (uint16_t e : elems) m[e >> 6] |= uint64_t(1) << (e & 63);
  return m;
}

std::vector<uint16_t> SubgroupLattice::close(std::vector<uint16_t> gens) const {
  std::vector<char> in(g_.order(), 0);
  std::vector<uint16_t> elems{0};
  in[0] = 1;
  for (uint16_t e : gens)
    if (!in[e]) {
      in[e] = 1;
      elems.push_back(e);
    }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      int p = g_.mul(elems[i], elems[j]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(static_cast<uint16_t>(p));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

SubgroupLattice::SubgroupLattice(const FiniteGroup& g)
    : g_(g), mask_words_((g.order() + 63) / 64) {
  const int n = g_.order();
  // Layered closure: grow every known subgroup by one extra generator.
  std::set<std::vector<uint16_t>> found;
  std::vector<std::vector<uint16_t>> queue;
  queue.push_back({0});
  found.insert(queue.back());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<uint16_t> base = queue[qi];
    for (int e = 1; e < n; ++e) {
      if (std::binary_search(base.begin(), base.end(), uint16_t(e))) continue;
      std::vector<uint16_t> gens = base;
      gens.push_back(static_cast<uint16_t>(e));
      auto closed = close(std::move(gens));
      if (found.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  subs_.reserve(found.size());
  std::vector<std::vector<uint16_t>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  for (auto& elems : sorted) {
    Sub s;
    s.mask = mask_of(elems);
    s.elems = std::move(elems);
    subs_.push_back(std::move(s));
  }

  std::map<std::vector<uint16_t>, int> index;
  for (int i = 0; i < size(); ++i) index[subs_[i].elems] = i;

  // Conjugacy classes, normalizers, centralizers.
  std::vector<int> conj_cache(size() * n, -1);
  auto conj_index = [&](int i, int x) {
    int& slot = conj_cache[i * n + x];
    if (slot >= 0) return slot;
    std::vector<uint16_t> c;
    c.reserve(subs_[i].elems.size());
    for (uint16_t e : subs_[i].elems)
      c.push_back(static_cast<uint16_t>(g_.conj(x, e)));
    std::sort(c.begin(), c.end());
    return slot = index.at(c);
  };
  for (int i = 0; i < size(); ++i) {
    if (subs_[i].class_id >= 0) continue;
    int cid = static_cast<int>(class_reps_.size());
    class_reps_.push_back(i);
    class_members_.emplace_back();
    std::vector<int> todo{i};
    subs_[i].class_id = cid;
    while (!todo.empty()) {
      int j = todo.back();
      todo.pop_back();
      class_members_.back().push_back(j);
      for (int x = 0; x < n; ++x) {
        int k = conj_index(j, x);
        if (subs_[k].class_id < 0) {
          subs_[k].class_id = cid;
          todo.push_back(k);
        }
      }
    }
    std::sort(class_members_.back().begin(), class_members_.back().end());
  }
  for (int i = 0; i < size(); ++i) {
    std::vector<uint16_t> nrm, cent;
    for (int x = 0; x < n; ++x) {
      if (conj_index(i, x) == i) nrm.push_back(static_cast<uint16_t>(x));
      bool central = true;
      for (uint16_t e : subs_[i].elems)
        if (g_.conj(x, e) != e) {
          central = false;
          break;
        }
      if (central) cent.push_back(static_cast<uint16_t>(x));
    }
    subs_[i].normalizer = index.at(nrm);
    subs_[i].centralizer = index.at(cent);
  }

  mobius_.assign(static_cast<size_t>(size()) * size(), LONG_MIN);
  comp_len_.assign(size(), -1);
  material_.assign(size(), nullptr);
}

bool SubgroupLattice::subset(int i, int j) const {
  for (int w = 0; w < mask_words_; ++w)
    if (subs_[i].mask[w] & ~subs_[j].mask[w]) return false;
  return true;
}

std::vector<int> SubgroupLattice::subgroups_of(int j) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (order(i) <= order(j) && subset(i, j)) out.push_back(i);
  return out;
}

int SubgroupLattice::index_of(const std::vector<uint16_t>& sorted_elems) const {
  auto cmp = [](const Sub& s, const std::vector<uint16_t>& key) {
    if (s.elems.size() != key.size()) return s.elems.size() < key.size();
    return s.elems < key;
  };
  auto it = std::lower_bound(subs_.begin(), subs_.end(), sorted_elems, cmp);
  if (it == subs_.end() || it->elems != sorted_elems)
    throw Error("element set is not a subgroup of " + g_.name());
  return static_cast<int>(it - subs_.begin());
}

int SubgroupLattice::generated_by(const std::vector<uint16_t>& gens) const {
  return index_of(close(gens));
}

int SubgroupLattice::conjugate(int i, int x) const {
  std::vector<uint16_t> c;
  c.reserve(subs_[i].elems.size());
  for (uint16_t e : subs_[i].elems)
    c.push_back(static_cast<uint16_t>(g_.conj(x, e)));
  std::sort(c.begin(), c.end());
  return index_of(c);
}

long SubgroupLattice::mobius(int lower, int upper) const {
  if (!subset(lower, upper)) throw PreconditionError("mobius: not an interval");
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  std::vector<std::pair<int, int>> stack{{lower, upper}};
  while (!stack.empty()) {
    auto [lo, up] = stack.back();
    long& slot = mobius_[static_cast<size_t>(lo) * size() + up];
    if (slot != LONG_MIN) {
      stack.pop_back();
      continue;
    }
    if (lo == up) {
      slot = 1;
      stack.pop_back();
      continue;
    }
    // mu(lo,up) = -sum over lo < X <= up of mu(X,up)
    long sum = 0;
    bool ready = true;
    for (int x = 0; x < size(); ++x) {
      if (x == lo || !subset(lo, x) || !subset(x, up)) continue;
      long v = mobius_[static_cast<size_t>(x) * size() + up];
      if (v == LONG_MIN) {
        stack.emplace_back(x, up);
        ready = false;
      } else {
        sum += v;
      }
    }
    if (ready) {
      slot = -sum;
      stack.pop_back();
    }
  }
  return mobius_[static_cast<size_t>(lower) * size() + upper];
}

GroupPtr SubgroupLattice::materialize(int i) const {
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (material_[i]) return material_[i];
  }
  const auto& elems = subs_[i].elems;
  const int m = static_cast<int>(elems.size());
  std::vector<uint16_t> pos(g_.order(), 0);
  for (int a = 0; a < m; ++a) pos[elems[a]] = static_cast<uint16_t>(a);
  std::vector<uint16_t> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = pos[g_.mul(elems[a], elems[b])];
  auto grp = FiniteGroup::make(g_.name() + ".sub" + std::to_string(i),
                               std::move(table), /*verify=*/false);
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (!material_[i]) material_[i] = grp;
  return material_[i];
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// If n is a prime power p^k, returns k; otherwise 0.
int prime_power_exponent(int n) {
  if (n < 2) return 0;
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : 0;
}

}  // namespace

int SubgroupLattice::composition_length(int i) const {
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (comp_len_[i] >= 0) return comp_len_[i];
  }
  int len = dbr::composition_length(materialize(i));
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  comp_len_[i] = len;
  return len;
}

int composition_length(const GroupPtr& g) {
  int n = g->order();
  if (n == 1) return 0;
  if (is_prime(n)) return 1;
  if (int k = prime_power_exponent(n)) return k;
  // Descend through a maximal proper normal subgroup (one of maximal
  // order among the proper normal subgroups).
  const auto& lat = g->lattice();
  int best = -1;
  for (int i = lat.size() - 2; i >= 0; --i) {
    if (lat.is_normal(i)) {
      best = i;
      break;  // lattice is sorted by order, so the last normal one wins
    }
  }
  if (best < 0) return 1;  // simple group
  return 1 + lat.composition_length(best);
}

GroupHom::GroupHom(Subgroup dom, Subgroup cod, std::vector<int16_t> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {}

bool GroupHom::is_injective() const {
  return image_elements().size() == dom_.elements().size();
}

bool GroupHom::is_surjective() const {
  return image_elements() == cod_.elements();
}

std::vector<uint16_t> GroupHom::image_elements() const {
  std::vector<uint16_t> img;
  img.reserve(dom_.elements().size());
  for (uint16_t e : dom_.elements()) img.push_back(static_cast<uint16_t>(values_[e]));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

Subgroup GroupHom::image() const {
  const auto& lat = cod_.parent()->lattice();
  return Subgroup(cod_.parent(), lat.index_of(image_elements()));
}

Subgroup GroupHom::kernel() const {
  std::vector<uint16_t> ker;
  for (uint16_t e : dom_.elements())
    if (values_[e] == 0) ker.push_back(e);
  return Subgroup(dom_.parent(), dom_.parent()->lattice().index_of(ker));
}

GroupHom GroupHom::restricted_to(const Subgroup& d) const {
  std::vector<int16_t> vals(values_.size(), -1);
  for (uint16_t e : d.elements()) vals[e] = values_[e];
  return GroupHom(d, cod_, std::move(vals));
}

GroupHom GroupHom::onto_image() const {
  return GroupHom(dom_, image(), values_);
}

std::vector<uint16_t> GroupHom::table() const {
  std::vector<uint16_t> t;
  t.reserve(dom_.elements().size());
  for (uint16_t e : dom_.elements()) t.push_back(static_cast<uint16_t>(values_[e]));
  return t;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (g.codomain().parent().get() != f.domain().parent().get() &&
      !g.codomain().parent()->same_group(*f.domain().parent()))
    throw CompositionError("homomorphisms are not composable");
  std::vector<int16_t> vals(g.domain().parent()->order(), -1);
  for (uint16_t e : g.domain().elements()) {
    int mid = g.apply(e);
    if (f.apply(mid) < 0)
      throw CompositionError("image of the inner map leaves the outer domain");
    vals[e] = static_cast<int16_t>(f.apply(mid));
  }
  return GroupHom(g.domain(), f.codomain(), std::move(vals));
}

GroupHom inverse_iso(const GroupHom& f) {
  if (!f.is_injective() || !f.is_surjective())
    throw PreconditionError("inverse of a non-bijective homomorphism");
  std::vector<int16_t> vals(f.codomain().parent()->order(), -1);
  for (uint16_t e : f.domain().elements())
    vals[f.apply(e)] = static_cast<int16_t>(e);
  return GroupHom(f.codomain(), f.domain(), std::move(vals));
}

GroupHom identity_hom(const Subgroup& u) {
  std::vector<int16_t> vals(u.parent()->order(), -1);
  for (uint16_t e : u.elements()) vals[e] = static_cast<int16_t>(e);
  return GroupHom(u, u, std::move(vals));
}

GroupHom conjugation_hom(const Subgroup& dom, const Subgroup& cod, int g) {
  const FiniteGroup& grp = *dom.parent();
  std::vector<int16_t> vals(grp.order(), -1);
  for (uint16_t e : dom.elements()) {
    int im = grp.conj(g, e);
    if (!cod.contains(im))
      throw PreconditionError("conjugate leaves the declared codomain");
    vals[e] = static_cast<int16_t>(im);
  }
  return GroupHom(dom, cod, std::move(vals));
}

namespace {

// Deterministic generating sequence: repeatedly adjoin the least
// element outside the subgroup generated so far.
std::vector<uint16_t> generating_sequence(const Subgroup& u) {
  const FiniteGroup& g = *u.parent();
  const auto& elems = u.elements();
  std::vector<char> in(g.order(), 0);
  std::vector<uint16_t> closed{0};
  in[0] = 1;
  std::vector<uint16_t> gens;
  for (uint16_t e : elems) {
    if (in[e]) continue;
    gens.push_back(e);
    in[e] = 1;
    closed.push_back(e);
    for (size_t i = 0; i < closed.size(); ++i)
      for (size_t j = 0; j < closed.size(); ++j) {
        int p = g.mul(closed[i], closed[j]);
        if (!in[p]) {
          in[p] = 1;
          closed.push_back(static_cast<uint16_t>(p));
        }
      }
  }
  return gens;
}

struct HomSearch {
  const FiniteGroup& dg;
  const FiniteGroup& cg;
  const Subgroup& cod;
  const std::vector<uint16_t>& gens;
  HomKind kind;
  std::vector<GroupHom> out;
  const Subgroup& dom;

  // Partial map: list of (element, image) with a lookup table.
  std::vector<int16_t> val;
  std::vector<uint16_t> defined;

  // Extends the partial homomorphism by gen -> img and closes under
  // products, checking consistency. Returns the number of elements
  // added (for rollback), or -1 on inconsistency.
  int extend(uint16_t gen, uint16_t img) {
    size_t before = defined.size();
    if (val[gen] >= 0) {
      if (val[gen] != static_cast<int16_t>(img)) return -1;
    } else {
      val[gen] = static_cast<int16_t>(img);
      defined.push_back(gen);
    }
    for (size_t i = 0; i < defined.size(); ++i)
      for (size_t j = 0; j < defined.size(); ++j) {
        int p = dg.mul(defined[i], defined[j]);
        int q = cg.mul(val[defined[i]], val[defined[j]]);
        if (val[p] < 0) {
          val[p] = static_cast<int16_t>(q);
          defined.push_back(static_cast<uint16_t>(p));
        } else if (val[p] != q) {
          rollback(before);
          return -1;
        }
      }
    return static_cast<int>(defined.size() - before);
  }

  void rollback(size_t keep) {
    while (defined.size() > keep) {
      val[defined.back()] = -1;
      defined.pop_back();
    }
  }

  void search(size_t gi) {
    if (gi == gens.size()) {
      GroupHom h(dom, cod, val);
      if (kind == HomKind::Epi && !h.is_surjective()) return;
      if (kind == HomKind::Iso && !(h.is_injective() && h.is_surjective()))
        return;
      out.push_back(std::move(h));
      return;
    }
    uint16_t gen = gens[gi];
    for (uint16_t img : cod.elements()) {
      // ord(f(x)) always divides ord(x); equality for isomorphisms.
      if (dg.element_order(gen) % cg.element_order(img) != 0) continue;
      if (kind == HomKind::Iso &&
          cg.element_order(img) != dg.element_order(gen))
        continue;
      size_t before = defined.size();
      if (extend(gen, img) >= 0) {
        search(gi + 1);
        rollback(before);
      }
    }
  }
};

}  // namespace

std::vector<GroupHom> homomorphisms(const Subgroup& dom, const Subgroup& cod,
                                    HomKind kind) {
  std::vector<GroupHom> out;
  if (kind == HomKind::ConjugationInduced) {
    if (dom.parent().get() != cod.parent().get())
      throw PreconditionError(
          "conjugation-induced maps need a common parent group");
    const FiniteGroup& g = *dom.parent();
    std::set<std::vector<uint16_t>> seen;
    for (int x = 0; x < g.order(); ++x) {
      bool inside = true;
      for (uint16_t e : dom.elements())
        if (!cod.contains(g.conj(x, e))) {
          inside = false;
          break;
        }
      if (!inside) continue;
      GroupHom h = conjugation_hom(dom, cod, x);
      if (seen.insert(h.table()).second) out.push_back(std::move(h));
    }
  } else {
    auto gens = generating_sequence(dom);
    HomSearch s{*dom.parent(),
                *cod.parent(),
                cod,
                gens,
                kind,
                {},
                dom,
                std::vector<int16_t>(dom.parent()->order(), -1),
                {}};
    s.val[0] = 0;
    s.defined.push_back(0);
    s.search(0);
    out = std::move(s.out);
  }
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) {
    return a.table() < b.table();
  });
  return out;
}

Subgroup relative_centralizer(const Subgroup& u, const Subgroup& v) {
  if (u.parent().get() != v.parent().get())
    throw PreconditionError("relative centralizer needs a common parent");
  const FiniteGroup& g = *u.parent();
  const auto& lat = g.lattice();
  // U must be normal in V (and contained in it).
  if (!lat.subset(u.index(), v.index()))
    throw PreconditionError("relative centralizer: U is not contained in V");
  for (uint16_t x : v.elements())
    for (uint16_t e : u.elements())
      if (!u.contains(g.conj(x, e)))
        throw PreconditionError("relative centralizer: U is not normal in V");
  std::vector<uint16_t> result;
  for (int x = 0; x < g.order(); ++x) {
    if (lat.conjugate(u.index(), x) != u.index()) continue;
    if (lat.conjugate(v.index(), x) != v.index()) continue;
    bool trivial_on_quotient = true;
    for (uint16_t e : v.elements()) {
      // x e x^-1 e^-1 must lie in U for c_x to fix eU.
      int comm = g.mul(g.conj(x, e), g.inv(e));
      if (!u.contains(comm)) {
        trivial_on_quotient = false;
        break;
      }
    }
    if (trivial_on_quotient) result.push_back(static_cast<uint16_t>(x));
  }
  return Subgroup(u.parent(), lat.index_of(result));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const int ng = g->order(), nh = h->order(), n = ng * nh;
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < ng; ++a1)
    for (int a2 = 0; a2 < nh; ++a2)
      for (int b1 = 0; b1 < ng; ++b1)
        for (int b2 = 0; b2 < nh; ++b2) {
          int a = a1 * nh + a2, b = b1 * nh + b2;
          table[static_cast<size_t>(a) * n + b] =
              static_cast<uint16_t>(g->mul(a1, b1) * nh + h->mul(a2, b2));
        }
  return FiniteGroup::make(g->name() + "x" + h->name(), std::move(table),
                           /*verify=*/false);
}

}  // namespace dbr
