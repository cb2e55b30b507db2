#include "sgw/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgw {

namespace {

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

void check_associativity(int m, const std::vector<int>& t) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = t[i * m + j];
      for (int k = 0; k < m; ++k) {
        const int jk = t[j * m + k];
        if (t[ij * m + k] != t[i * m + jk]) {
          std::ostringstream msg;
          msg << "not associative: (" << i << "*" << j << ")*" << k << " = "
              << t[ij * m + k] << " but " << i << "*(" << j << "*" << k
              << ") = " << t[i * m + jk];
          throw AssociativityError(i, j, k, msg.str());
        }
      }
    }
}

std::optional<int> detect_zero(int m, const std::vector<int>& t) {
  for (int z = 0; z < m; ++z) {
    bool ok = true;
    for (int s = 0; s < m && ok; ++s)
      ok = t[z * m + s] == z && t[s * m + z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<int> detect_identity(int m, const std::vector<int>& t) {
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int s = 0; s < m && ok; ++s)
      ok = t[e * m + s] == s && t[s * m + e] == s;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

int ElementSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < universe(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  if (universe() != other.universe()) return false;
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

CayleyTable validate_flat(const std::string& name, int order,
                          std::vector<int> flat,
                          std::vector<std::string> labels) {
  if (order < 1) throw RangeError("order must be positive, got " + std::to_string(order));
  if (flat.size() != static_cast<std::size_t>(order) * order)
    throw RangeError("table has " + std::to_string(flat.size()) +
                     " entries, expected " + std::to_string(order * order));
  for (std::size_t c = 0; c < flat.size(); ++c)
    if (flat[c] < 0 || flat[c] >= order)
      throw RangeError("entry " + std::to_string(flat[c]) + " at cell " +
                       std::to_string(c) + " out of range [0," +
                       std::to_string(order) + ")");
  if (labels.empty()) labels = default_labels(order);
  if (labels.size() != static_cast<std::size_t>(order))
    throw RangeError("got " + std::to_string(labels.size()) + " labels for order " +
                     std::to_string(order));
  check_associativity(order, flat);

  CayleyTable S;
  S.order = order;
  S.table = std::move(flat);
  S.labels = std::move(labels);
  S.zero = detect_zero(order, S.table);
  S.identity = detect_identity(order, S.table);
  S.name = name;
  return S;
}

CayleyTable validate(const std::string& name,
                     const std::vector<std::vector<int>>& rows,
                     std::vector<std::string> labels) {
  const int m = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw RangeError("table is not square: row of length " +
                       std::to_string(row.size()) + " in an order-" +
                       std::to_string(m) + " table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(name, m, std::move(flat), std::move(labels));
}

void revalidate(const CayleyTable& S) {
  CayleyTable checked = validate_flat(S.name, S.order, S.table, S.labels);
  if (S.zero && S.zero != checked.zero)
    throw RangeError("declared zero " + std::to_string(*S.zero) +
                     " is not the absorbing element of the table");
  if (S.identity && S.identity != checked.identity)
    throw RangeError("declared identity " + std::to_string(*S.identity) +
                     " is not neutral in the table");
}

ElementSet idempotents(const CayleyTable& S) {
  ElementSet out(S.order);
  for (int s = 0; s < S.order; ++s)
    if (S.at(s, s) == s) out.set(s);
  return out;
}

int omega_power(const CayleyTable& S, int s) {
  if (s < 0 || s >= S.order) throw RangeError("element out of range");
  // List the distinct powers s, s^2, ...; the unique idempotent among them
  // appears before the sequence first repeats.
  std::vector<bool> seen(S.order, false);
  int p = s;
  while (!seen[p]) {
    seen[p] = true;
    if (S.at(p, p) == p) return p;
    p = S.at(p, s);
  }
  throw Error("no idempotent power found; table is corrupt");
}

int omega_plus(const CayleyTable& S, int s, int k) {
  if (k < 0) throw RangeError("omega offset must be >= 0");
  int r = omega_power(S, s);
  for (int step = 0; step < k; ++step) r = S.at(r, s);
  return r;
}

ElementSet completely_regular(const CayleyTable& S) {
  ElementSet out(S.order);
  for (int s = 0; s < S.order; ++s)
    if (omega_plus(S, s, 1) == s) out.set(s);
  return out;
}

ElementSet set_product(const CayleyTable& S, const ElementSet& A,
                       const ElementSet& B) {
  if (A.universe() != S.order || B.universe() != S.order)
    throw RangeError("set universe does not match the table order");
  ElementSet out(S.order);
  for (int a : A.elements())
    for (int b : B.elements()) out.set(S.at(a, b));
  return out;
}

ElementSet power_ideal(const CayleyTable& S, int n) {
  if (n < 1) throw RangeError("power ideal needs n >= 1");
  ElementSet acc = ElementSet::full(S.order);
  for (int step = 2; step <= n; ++step)
    acc = set_product(S, ElementSet::full(S.order), acc);
  return acc;
}

CayleyTable direct_product(const CayleyTable& S, const CayleyTable& T) {
  constexpr int kMaxOrder = 512;
  const long long m = static_cast<long long>(S.order) * T.order;
  if (m > kMaxOrder)
    throw SizeGuardError("direct product of orders " + std::to_string(S.order) +
                         " and " + std::to_string(T.order) + " exceeds the cap of " +
                         std::to_string(kMaxOrder));
  const int n = static_cast<int>(m);
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  auto idx = [&](int a, int b) { return a * T.order + b; };
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < T.order; ++b)
      labels[idx(a, b)] = "(" + S.labels[a] + "," + T.labels[b] + ")";
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < T.order; ++b)
      for (int c = 0; c < S.order; ++c)
        for (int d = 0; d < T.order; ++d)
          flat[static_cast<std::size_t>(idx(a, b)) * n + idx(c, d)] =
              idx(S.at(a, c), T.at(b, d));
  return validate_flat(S.name + "x" + T.name, n, std::move(flat), std::move(labels));
}

Subsemigroup subsemigroup(const CayleyTable& S, const ElementSet& gens) {
  if (gens.universe() != S.order)
    throw RangeError("generator set universe does not match the table order");
  if (gens.count() == 0) throw RangeError("generator set is empty");
  ElementSet closed = gens;
  std::vector<int> work = gens.elements();
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (int b : closed.elements()) {
      for (int p : {S.at(a, b), S.at(b, a)}) {
        if (!closed.test(p)) {
          closed.set(p);
          work.push_back(p);
        }
      }
    }
  }
  std::vector<int> parent = closed.elements();
  std::vector<int> pos(S.order, -1);
  for (std::size_t i = 0; i < parent.size(); ++i) pos[parent[i]] = static_cast<int>(i);
  const int n = static_cast<int>(parent.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = S.labels[parent[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(i) * n + j] = pos[S.at(parent[i], parent[j])];
  Subsemigroup sub;
  sub.table = validate_flat(S.name + "-sub", n, std::move(flat), std::move(labels));
  sub.parent_index = std::move(parent);
  return sub;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Congruence normalize_partition(int m, std::vector<int>& parent) {
  Congruence c;
  c.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = uf_find(parent, i);
    if (c.class_of[r] == -1) c.class_of[r] = c.num_classes++;
    c.class_of[i] = c.class_of[r];
  }
  return c;
}

}  // namespace

Congruence congruence_closure(const CayleyTable& S,
                              const std::vector<std::pair<int, int>>& pairs) {
  const int m = S.order;
  for (auto [a, b] : pairs)
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw RangeError("congruence pair out of range");
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> work(pairs);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int ra = uf_find(parent, a), rb = uf_find(parent, b);
    if (ra == rb) continue;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    // Newly merged pair: close under translation on both sides.
    for (int s = 0; s < m; ++s) {
      work.emplace_back(S.at(s, a), S.at(s, b));
      work.emplace_back(S.at(a, s), S.at(b, s));
    }
  }
  return normalize_partition(m, parent);
}

bool is_congruence(const CayleyTable& S, const Congruence& c) {
  const int m = S.order;
  if (static_cast<int>(c.class_of.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    if (c.class_of[i] < 0 || c.class_of[i] >= c.num_classes) return false;
  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2) {
      if (c.class_of[i] != c.class_of[i2]) continue;
      for (int j = 0; j < m; ++j) {
        if (c.class_of[S.at(i, j)] != c.class_of[S.at(i2, j)]) return false;
        if (c.class_of[S.at(j, i)] != c.class_of[S.at(j, i2)]) return false;
      }
    }
  return true;
}

CayleyTable quotient(const CayleyTable& S, const Congruence& c) {
  if (!is_congruence(S, c))
    throw NotACongruenceError("partition is not compatible with multiplication");
  const int n = c.num_classes;
  std::vector<int> rep(n, -1);
  for (int i = S.order - 1; i >= 0; --i) rep[c.class_of[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = S.labels[rep[a]];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = c.class_of[S.at(rep[a], rep[b])];
  return validate_flat(S.name + "/~", n, std::move(flat), std::move(labels));
}

CayleyTable rees_quotient(const CayleyTable& S, const ElementSet& ideal) {
  if (ideal.universe() != S.order)
    throw RangeError("ideal universe does not match the table order");
  if (ideal.count() == 0) throw NotAnIdealError("ideal must be nonempty");
  for (int i : ideal.elements())
    for (int s = 0; s < S.order; ++s)
      if (!ideal.test(S.at(s, i)) || !ideal.test(S.at(i, s)))
        throw NotAnIdealError("set is not a two-sided ideal: " + S.labels[i] +
                              " escapes under translation by " + S.labels[s]);
  std::vector<int> keep;
  for (int s = 0; s < S.order; ++s)
    if (!ideal.test(s)) keep.push_back(s);
  const int n = static_cast<int>(keep.size()) + 1;
  const int zero = n - 1;
  std::vector<int> pos(S.order, zero);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<int> flat(static_cast<std::size_t>(n) * n, zero);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < keep.size(); ++i) labels[i] = S.labels[keep[i]];
  labels[zero] = "0";
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      flat[i * n + j] = pos[S.at(keep[i], keep[j])];
  return validate_flat(S.name + "/I", n, std::move(flat), std::move(labels));
}

CayleyTable opposite(const CayleyTable& S) {
  std::vector<int> flat(S.table.size());
  for (int i = 0; i < S.order; ++i)
    for (int j = 0; j < S.order; ++j)
      flat[static_cast<std::size_t>(i) * S.order + j] = S.at(j, i);
  return validate_flat(S.name + "-op", S.order, std::move(flat), S.labels);
}

namespace {

// Element fingerprint preserved by isomorphisms: (idempotent?, number of
// distinct powers, sorted row and column product-multiset sizes).
std::vector<int> signature(const CayleyTable& S, int s) {
  std::vector<int> sig;
  sig.push_back(S.at(s, s) == s ? 1 : 0);
  std::vector<bool> seen(S.order, false);
  int p = s, distinct = 0;
  while (!seen[p]) {
    seen[p] = true;
    ++distinct;
    p = S.at(p, s);
  }
  sig.push_back(distinct);
  std::vector<bool> row(S.order, false), col(S.order, false);
  for (int j = 0; j < S.order; ++j) {
    row[S.at(s, j)] = true;
    col[S.at(j, s)] = true;
  }
  sig.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  sig.push_back(static_cast<int>(std::count(col.begin(), col.end(), true)));
  return sig;
}

bool full_check(const CayleyTable& S, const CayleyTable& T,
                const std::vector<int>& map) {
  for (int i = 0; i < S.order; ++i)
    for (int j = 0; j < S.order; ++j)
      if (T.at(map[i], map[j]) != map[S.at(i, j)]) return false;
  return true;
}

bool extend(const CayleyTable& S, const CayleyTable& T, std::vector<int>& map,
            std::vector<bool>& used, int next,
            const std::vector<std::vector<int>>& sigS,
            const std::vector<std::vector<int>>& sigT) {
  const int m = S.order;
  // The incremental constraints below skip triples whose product is not
  // mapped yet, so the leaf runs the complete table comparison.
  if (next == m) return full_check(S, T, map);
  for (int cand = 0; cand < m; ++cand) {
    if (used[cand] || sigS[next] != sigT[cand]) continue;
    map[next] = cand;
    used[cand] = true;
    bool ok = true;
    for (int j = 0; j <= next && ok; ++j) {
      int p = S.at(next, j);
      if (p <= next && map[p] != -1 && T.at(cand, map[j]) != map[p]) ok = false;
      if (ok) {
        int q = S.at(j, next);
        if (q <= next && map[q] != -1 && T.at(map[j], cand) != map[q]) ok = false;
      }
    }
    if (ok && extend(S, T, map, used, next + 1, sigS, sigT)) return true;
    used[cand] = false;
    map[next] = -1;
  }
  return false;
}

bool iso_search(const CayleyTable& S, const CayleyTable& T) {
  if (S.order != T.order) return false;
  std::vector<std::vector<int>> sigS(S.order), sigT(T.order);
  for (int s = 0; s < S.order; ++s) {
    sigS[s] = signature(S, s);
    sigT[s] = signature(T, s);
  }
  {
    auto a = sigS, b = sigT;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> map(S.order, -1);
  std::vector<bool> used(S.order, false);
  return extend(S, T, map, used, 0, sigS, sigT);
}

}  // namespace

bool is_isomorphic(const CayleyTable& S, const CayleyTable& T) {
  return iso_search(S, T);
}

bool is_anti_isomorphic(const CayleyTable& S, const CayleyTable& T) {
  return iso_search(S, opposite(T));
}

}  // namespace sgw
