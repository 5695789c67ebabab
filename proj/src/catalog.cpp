#include "dbr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace dbr {

namespace {

std::vector<uint16_t> cyclic_table(int n) {
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<uint16_t>((a + b) % n);
  return t;
}

// Dihedral group of order 2m: indices 0..m-1 are rotations r^i,
// m..2m-1 are reflections s r^i.
std::vector<uint16_t> dihedral_table(int m) {
  const int n = 2 * m;
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  auto idx = [m](bool refl, int k) {
    return static_cast<uint16_t>((refl ? m : 0) + ((k % m) + m) % m);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ra = a >= m, rb = b >= m;
      int ka = a % m, kb = b % m;
      // s r^k s = r^-k
      if (!ra && !rb)
        t[a * n + b] = idx(false, ka + kb);
      else if (!ra && rb)
        t[a * n + b] = idx(true, kb - ka);
      else if (ra && !rb)
        t[a * n + b] = idx(true, ka + kb);
      else
        t[a * n + b] = idx(false, kb - ka);
    }
  return t;
}

// Quaternion group: 0..7 = 1, -1, i, -i, j, -j, k, -k.
std::vector<uint16_t> quaternion_table() {
  // unit[a] = (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k.
  auto axis = [](int a) { return a / 2; };
  auto sign = [](int a) { return a % 2 == 0 ? 1 : -1; };
  auto pack = [](int ax, int sg) { return ax * 2 + (sg > 0 ? 0 : 1); };
  // quaternion unit multiplication on axes with sign
  auto unit_mul = [&](int ax1, int ax2, int& ax, int& sg) {
    static const int tbl_axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int tbl_sign[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    ax = tbl_axis[ax1][ax2];
    sg = tbl_sign[ax1][ax2];
  };
  std::vector<uint16_t> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax, sg;
      unit_mul(axis(a), axis(b), ax, sg);
      t[a * 8 + b] = static_cast<uint16_t>(pack(ax, sg * sign(a) * sign(b)));
    }
  return t;
}

std::vector<std::vector<uint8_t>> permutations(int n, bool even_only) {
  std::vector<uint8_t> p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<uint8_t>(i);
  std::vector<std::vector<uint8_t>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;  // lexicographic, identity first
}

std::vector<uint16_t> permutation_table(int letters, bool even_only) {
  auto perms = permutations(letters, even_only);
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<uint8_t>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  std::vector<uint8_t> comp(letters);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < letters; ++x) comp[x] = perms[a][perms[b][x]];
      t[a * n + b] = static_cast<uint16_t>(index.at(comp));
    }
  return t;
}

// Elementary abelian group of order p^k: vectors over F_p, index in
// base-p digits.
std::vector<uint16_t> elementary_abelian_table(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, pw = 1, s = 0;
      for (int i = 0; i < k; ++i) {
        s += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      t[a * n + b] = static_cast<uint16_t>(s);
    }
  return t;
}

// n = p^k with p prime, or 0.
bool split_prime_power(int n, int& p, int& k) {
  if (n < 2) return false;
  int q = 2;
  while (n % q != 0) ++q;
  k = 0;
  int m = n;
  while (m % q == 0) {
    m /= q;
    ++k;
  }
  if (m != 1) return false;
  p = q;
  return true;
}

GroupPtr build_catalog_group(const std::string& name) {
  if (name == "1" || name == "C1" || name == "trivial")
    return FiniteGroup::make("1", {0}, true);
  if (name == "V4")
    return FiniteGroup::make("V4", elementary_abelian_table(2, 2), true);
  if (name == "Q8") return FiniteGroup::make("Q8", quaternion_table(), true);
  if (name == "S3") return FiniteGroup::make("S3", permutation_table(3, false), true);
  if (name == "S4") return FiniteGroup::make("S4", permutation_table(4, false), true);
  if (name == "A4") return FiniteGroup::make("A4", permutation_table(4, true), true);
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'D' || name[0] == 'E')) {
    int n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(name[i]))) return nullptr;
      n = n * 10 + (name[i] - '0');
    }
    if (n <= 0 || n > max_group_order()) return nullptr;
    if (name[0] == 'C') return FiniteGroup::make(name, cyclic_table(n), true);
    if (name[0] == 'D') {
      // subscript is the group order, which must be even and >= 2
      if (n % 2 || n < 2) return nullptr;
      return FiniteGroup::make(name, dihedral_table(n / 2), true);
    }
    int p, k;
    if (!split_prime_power(n, p, k)) return nullptr;
    return FiniteGroup::make(name, elementary_abelian_table(p, k), true);
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"1",  "C<n>", "V4", "D<2n>", "Q8",
          "S3", "S4",   "A4", "E<p^k>"};
}

GroupPtr load_group(const std::string& spec) {
  if (spec.find('/') != std::string::npos ||
      spec.find(".json") != std::string::npos)
    return parse_group_file(spec);
  static std::mutex cache_mutex;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  GroupPtr g = build_catalog_group(spec);
  if (!g)
    throw LoadError("unknown group specification '" + spec +
                    "' (not a catalog name or group file)");
  cache[spec] = g;
  return g;
}

GroupPtr parse_group_text(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(origin + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw LoadError(origin + ": group file needs 'order' and 'table' fields");
  std::string name = j.value("name", origin);
  int n = 0;
  try {
    n = j.at("order").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw LoadError(origin + ": 'order' is not an integer");
  }
  if (n <= 0 || n > max_group_order())
    throw CapacityError(origin + ": order " + std::to_string(n) +
                        " is out of range (max " +
                        std::to_string(max_group_order()) + ")");
  const auto& jt = j.at("table");
  if (!jt.is_array() || jt.size() != static_cast<size_t>(n))
    throw LoadError(origin + ": 'table' must be an " + std::to_string(n) +
                    "x" + std::to_string(n) + " array");
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const auto& row = jt.at(r);
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw LoadError(origin + ": table row " + std::to_string(r) +
                      " has the wrong length");
    for (int c = 0; c < n; ++c) {
      int v = -1;
      try {
        v = row.at(c).get<int>();
      } catch (const nlohmann::json::exception&) {
      }
      if (v < 0 || v >= n)
        throw LoadError(origin + ": table entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") is not an element index");
      table[static_cast<size_t>(r) * n + c] = static_cast<uint16_t>(v);
    }
  }
  // Locate the identity and rename it to index 0 if necessary.
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (table[static_cast<size_t>(a) * n + b] != b ||
          table[static_cast<size_t>(b) * n + a] != b) {
        ok = false;
        break;
      }
    if (ok) e = a;
  }
  if (e < 0) throw LoadError(origin + ": table has no two-sided identity");
  if (e != 0) {
    std::vector<uint16_t> relabel(n);
    for (int a = 0; a < n; ++a) relabel[a] = static_cast<uint16_t>(a);
    std::swap(relabel[0], relabel[e]);
    std::vector<uint16_t> renamed(table.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        renamed[static_cast<size_t>(relabel[a]) * n + relabel[b]] =
            relabel[table[static_cast<size_t>(a) * n + b]];
    table = std::move(renamed);
  }
  return FiniteGroup::make(std::move(name), std::move(table), /*verify=*/true);
}

GroupPtr parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), path);
}

}  // namespace dbr
