#include "sgw/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

namespace sgw {

namespace {

constexpr int kHardCap = 5;

// Backtracking enumerator over row-major partial tables, -1 marking unknown
// cells. After tentatively placing t[a][b] every associativity triple whose
// four participating cells just became known is checked, so complete tables
// need no final pass.
class Filler {
 public:
  // The prefix is trusted; callers only pass prefixes a previous Filler run
  // emitted.
  Filler(int m, std::vector<int> prefix) : m_(m), t_(m * m, -1) {
    for (std::size_t c = 0; c < prefix.size(); ++c) t_[c] = prefix[c];
    next_ = static_cast<int>(prefix.size());
  }

  // Extends cell by cell up to `limit` cells and emits each consistent
  // partial table of that size.
  template <typename Emit>
  void run_to(int limit, Emit&& emit) {
    fill(limit, emit);
  }

 private:
  int get(int a, int b) const { return t_[a * m_ + b]; }

  bool consistent(int a, int b) const {
    const int v = get(a, b);
    // (a*b)*z vs a*(b*z)
    for (int z = 0; z < m_; ++z) {
      const int bz = get(b, z);
      if (bz < 0) continue;
      const int l = get(v, z), r = get(a, bz);
      if (l >= 0 && r >= 0 && l != r) return false;
    }
    // (x*a)*b vs x*(a*b)
    for (int x = 0; x < m_; ++x) {
      const int xa = get(x, a);
      if (xa < 0) continue;
      const int l = get(xa, b), r = get(x, v);
      if (l >= 0 && r >= 0 && l != r) return false;
    }
    // (x*y)*b where x*y = a: compare t[a][b] with x*(y*b)
    for (int x = 0; x < m_; ++x)
      for (int y = 0; y < m_; ++y) {
        if (get(x, y) != a) continue;
        const int yb = get(y, b);
        if (yb < 0) continue;
        const int r = get(x, yb);
        if (r >= 0 && r != v) return false;
      }
    // a*(y*z) where y*z = b: compare t[a][b] with (a*y)*z
    for (int y = 0; y < m_; ++y)
      for (int z = 0; z < m_; ++z) {
        if (get(y, z) != b) continue;
        const int ay = get(a, y);
        if (ay < 0) continue;
        const int l = get(ay, z);
        if (l >= 0 && l != v) return false;
      }
    return true;
  }

  template <typename Emit>
  void fill(int limit, Emit& emit) {
    if (next_ == limit) {
      emit(std::vector<int>(t_.begin(), t_.begin() + limit));
      return;
    }
    const int cell = next_++;
    const int a = cell / m_, b = cell % m_;
    for (int v = 0; v < m_; ++v) {
      t_[cell] = v;
      if (consistent(a, b)) fill(limit, emit);
    }
    t_[cell] = -1;
    --next_;
  }

  int m_;
  std::vector<int> t_;
  int next_;
};

std::vector<int> min_key(const CayleyTable& S, bool include_opposite) {
  const int m = S.order;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, relabeled(m * m);
  const CayleyTable op = include_opposite ? opposite(S) : CayleyTable{};
  do {
    for (int pass = 0; pass < (include_opposite ? 2 : 1); ++pass) {
      const CayleyTable& src = pass == 0 ? S : op;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          relabeled[perm[i] * m + perm[j]] = perm[src.at(i, j)];
      if (best.empty() || relabeled < best) best = relabeled;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

int max_enumeration_order() {
  if (const char* env = std::getenv("WORKBENCH_MAX_ORDER")) {
    const int v = std::atoi(env);
    return std::clamp(v, 1, kHardCap);
  }
  return kHardCap;
}

std::vector<int> canonical_key(const CayleyTable& S) {
  return min_key(S, false);
}

std::vector<int> canonical_key_anti(const CayleyTable& S) {
  return min_key(S, true);
}

std::vector<CayleyTable> enumerate_semigroups(const EnumerationSpec& spec,
                                              int workers) {
  const int m = spec.order;
  if (m < 1 || m > max_enumeration_order())
    throw RangeError("enumeration order must lie in [1, " +
                     std::to_string(max_enumeration_order()) + "], got " +
                     std::to_string(m));
  if (workers < 1) throw RangeError("worker count must be positive");

  // First rows that survive the incremental checks, dealt round-robin.
  std::vector<std::vector<int>> prefixes;
  Filler(m, {}).run_to(m, [&](std::vector<int> row) {
    prefixes.push_back(std::move(row));
  });

  std::vector<std::set<std::vector<int>>> found(workers);
  auto work = [&](int w) {
    for (std::size_t p = w; p < prefixes.size(); p += workers) {
      Filler f(m, prefixes[p]);
      f.run_to(m * m, [&](const std::vector<int>& t) {
        CayleyTable S;
        S.order = m;
        S.table = t;
        switch (spec.mode) {
          case EnumMode::UpToIso:
            found[w].insert(canonical_key(S));
            break;
          case EnumMode::UpToIsoAnti:
            found[w].insert(canonical_key_anti(S));
            break;
          case EnumMode::RawTables:
            found[w].insert(t);
            break;
        }
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::set<std::vector<int>> merged;
  for (auto& s : found) merged.insert(s.begin(), s.end());

  std::vector<CayleyTable> out;
  int idx = 0;
  for (const auto& key : merged) {
    CayleyTable S = validate_flat(
        "S" + std::to_string(m) + "#" + std::to_string(idx), m, key);
    bool keep = true;
    for (const auto& e : spec.must_satisfy)
      if (!satisfies(S, e)) { keep = false; break; }
    for (const auto& e : spec.must_fail)
      if (keep && satisfies(S, e)) { keep = false; break; }
    if (keep) {
      out.push_back(std::move(S));
      ++idx;
    }
  }
  return out;
}

std::vector<CayleyTable> all_representatives(int max_order, int workers) {
  std::vector<CayleyTable> out;
  for (int m = 1; m <= max_order; ++m) {
    EnumerationSpec spec;
    spec.order = m;
    auto reps = enumerate_semigroups(spec, workers);
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

}  // namespace sgw
