#include "sgw/models.hpp"

#include "sgw/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace sgw {

namespace {

using Word = std::vector<int>;

bool length_lex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

LabeledModel finish(CayleyTable table, std::map<std::string, int> parameters,
                    std::string description) {
  LabeledModel m;
  m.table = std::move(table);
  m.parameters = std::move(parameters);
  m.description = std::move(description);
  return m;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

LabeledModel build_T(int k) {
  if (k < 1 || k > 6)
    throw SizeGuardError("injective-word model needs 1 <= k <= 6, got " +
                         std::to_string(k));
  std::vector<Word> words;
  Word cur;
  std::vector<bool> used(k, false);
  std::function<void()> gen = [&]() {
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      used[c] = true;
      cur.push_back(c);
      words.push_back(cur);
      gen();
      cur.pop_back();
      used[c] = false;
    }
  };
  gen();
  std::sort(words.begin(), words.end(), length_lex_less);

  const int zero = static_cast<int>(words.size());
  const int order = zero + 1;
  std::map<Word, int> index;
  std::vector<std::string> labels;
  for (int w = 0; w < zero; ++w) {
    index[words[w]] = w;
    std::string l;
    for (int c : words[w]) l += "a" + std::to_string(c + 1);
    labels.push_back(l);
  }
  labels.push_back("0");

  std::vector<int> flat(static_cast<std::size_t>(order) * order, zero);
  for (int u = 0; u < zero; ++u)
    for (int v = 0; v < zero; ++v) {
      Word w = words[u];
      w.insert(w.end(), words[v].begin(), words[v].end());
      std::vector<bool> seen(k, false);
      bool injective = true;
      for (int c : w) {
        if (seen[c]) { injective = false; break; }
        seen[c] = true;
      }
      if (injective) flat[u * order + v] = index.at(w);
    }

  return finish(
      validate_flat("T(" + std::to_string(k) + ")", order, std::move(flat),
                    std::move(labels)),
      {{"k", k}},
      "nonempty injective words over " + std::to_string(k) +
          " letters; concatenation, or zero when a letter would repeat");
}

LabeledModel build_Ufree(int k) {
  if (k < 1 || k > 10)
    throw SizeGuardError("disjoint-union model needs 1 <= k <= 10, got " +
                         std::to_string(k));
  std::vector<int> masks;
  for (int m = 1; m < (1 << k); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  const int zero = static_cast<int>(masks.size());
  const int order = zero + 1;
  std::vector<int> index(1 << k, -1);
  std::vector<std::string> labels;
  for (int s = 0; s < zero; ++s) {
    index[masks[s]] = s;
    std::string l = "{";
    for (int b = 0; b < k; ++b)
      if (masks[s] >> b & 1) {
        if (l.size() > 1) l += ",";
        l += std::to_string(b + 1);
      }
    labels.push_back(l + "}");
  }
  labels.push_back("0");

  std::vector<int> flat(static_cast<std::size_t>(order) * order, zero);
  for (int u = 0; u < zero; ++u)
    for (int v = 0; v < zero; ++v)
      if ((masks[u] & masks[v]) == 0)
        flat[u * order + v] = index[masks[u] | masks[v]];

  return finish(
      validate_flat("O(" + std::to_string(k) + ")", order, std::move(flat),
                    std::move(labels)),
      {{"k", k}},
      "nonempty subsets of a " + std::to_string(k) +
          "-element set; disjoint union, or zero on overlap");
}

LabeledModel build_W(int k) {
  if (k < 1 || k > 6)
    throw SizeGuardError("truncated-word model needs 1 <= k <= 6, got " +
                         std::to_string(k));
  std::vector<Word> words;
  Word cur;
  std::function<void()> gen = [&]() {
    if (static_cast<int>(cur.size()) == k) return;
    for (int c = 0; c < 2; ++c) {
      cur.push_back(c);
      words.push_back(cur);
      gen();
      cur.pop_back();
    }
  };
  gen();
  std::sort(words.begin(), words.end(), length_lex_less);

  const int order = static_cast<int>(words.size());
  std::map<Word, int> index;
  std::vector<std::string> labels;
  for (int w = 0; w < order; ++w) {
    index[words[w]] = w;
    std::string l;
    for (int c : words[w]) l += static_cast<char>('a' + c);
    labels.push_back(l);
  }

  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v) {
      Word w = words[u];
      w.insert(w.end(), words[v].begin(), words[v].end());
      if (static_cast<int>(w.size()) > k) w.resize(k);
      flat[u * order + v] = index.at(w);
    }

  return finish(
      validate_flat("W(" + std::to_string(k) + ")", order, std::move(flat),
                    std::move(labels)),
      {{"k", k}},
      "nonempty words of length at most " + std::to_string(k) +
          " over two letters; concatenation truncated to the first " +
          std::to_string(k) + " letters");
}

LabeledModel build_V(int k, int n) {
  if (k < 1 || k > n || n > 8)
    throw SizeGuardError("two-generator model needs 1 <= k <= n <= 8, got k=" +
                         std::to_string(k) + " n=" + std::to_string(n));
  // Indices: a^i at i-1 (i = 1..n), b a^r at n+r (r = 0..n-k), zero last.
  const int zero = 2 * n - k + 1;
  const int order = zero + 1;
  auto aid = [](int i) { return i - 1; };
  auto bid = [n](int r) { return n + r; };

  std::vector<int> flat(static_cast<std::size_t>(order) * order, zero);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      flat[aid(i) * order + aid(j)] = aid(std::min(i + j, n));
    for (int r = 0; r <= n - k; ++r) {
      flat[aid(i) * order + bid(r)] = bid(r);
      flat[bid(r) * order + aid(i)] = r + i <= n - k ? bid(r + i) : zero;
    }
  }

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  for (int r = 0; r <= n - k; ++r)
    labels.push_back(r == 0 ? "b" : r == 1 ? "ba" : "ba^" + std::to_string(r));
  labels.push_back("0");

  return finish(
      validate_flat("V(" + std::to_string(k) + "," + std::to_string(n) + ")",
                    order, std::move(flat), std::move(labels)),
      {{"k", k}, {"n", n}},
      "powers of a capped at " + std::to_string(n) +
          ", elements b a^r with b a^" + std::to_string(n - k + 1) +
          " collapsed to zero");
}

LabeledModel build_C(int r) {
  if (r < 1 || r > 4096)
    throw SizeGuardError("monogenic model needs 1 <= r <= 4096, got " +
                         std::to_string(r));
  std::vector<int> flat(static_cast<std::size_t>(r) * r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      flat[(i - 1) * r + (j - 1)] = std::min(i + j, r) - 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i)
    labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  return finish(validate_flat("C(" + std::to_string(r) + ")", r,
                              std::move(flat), std::move(labels)),
                {{"r", r}},
                "powers of a single generator with a^i a^j = a^min(i+j," +
                    std::to_string(r) + ")");
}

LabeledModel build_N1() {
  CayleyTable S = validate("N1",
                           {{0, 1, 2},
                            {1, 2, 2},
                            {2, 2, 2}},
                           {"1", "n", "0"});
  LabeledModel m = finish(std::move(S), {},
                          "the three-element monoid 1, n, 0 with n^2 = 0");
  if (!satisfies_all(m.table, preset_identities("VN1").identities))
    throw Error("N1 model fails its defining identity set");
  return m;
}

LabeledModel build_rees(int p, const SandwichMatrix& P) {
  if (p < 2 || p > 13)
    throw SizeGuardError("Rees model needs 2 <= p <= 13, got " +
                         std::to_string(p));
  if (!is_prime(p))
    throw RangeError("Rees model is defined for prime p, got " +
                     std::to_string(p));
  const int order = 4 * p;
  auto id = [p](int i, int g, int l) { return i * (2 * p) + g * 2 + l; };
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < 2; ++i)
    for (int g = 0; g < p; ++g)
      for (int l = 0; l < 2; ++l)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int h = 0; h < p; ++h)
            for (int l2 = 0; l2 < 2; ++l2)
              flat[id(i, g, l) * order + id(i2, h, l2)] =
                  id(i, (g + P[l][i2] % p + h) % p, l2);
  std::vector<std::string> labels;
  for (int i = 0; i < 2; ++i)
    for (int g = 0; g < p; ++g)
      for (int l = 0; l < 2; ++l) {
        std::ostringstream s;
        s << '(' << i + 1 << ',' << g << ',' << l + 1 << ')';
        labels.push_back(s.str());
      }
  return finish(validate_flat("K(" + std::to_string(p) + ")", order,
                              std::move(flat), std::move(labels)),
                {{"p", p}},
                "2x2 Rees matrix semigroup over the integers mod " +
                    std::to_string(p));
}

CayleyTable adjoin_identity(const CayleyTable& S) {
  const int m = S.order, n = m + 1;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[i * n + j] = S.at(i, j);
  for (int i = 0; i < n; ++i) {
    flat[i * n + m] = i;
    flat[m * n + i] = i;
  }
  std::vector<std::string> labels = S.labels;
  bool taken = std::find(labels.begin(), labels.end(), "1") != labels.end();
  labels.push_back(taken ? "1'" : "1");
  return validate_flat(S.name + "^1", n, std::move(flat), std::move(labels));
}

LabeledModel free_quotient(const CayleyTable& S,
                           const std::vector<Identity>& relations) {
  std::vector<Identity> flat_relations;
  for (const Identity& e : relations) {
    if (e.zero_form()) {
      auto ex = expand_zero(e);
      flat_relations.insert(flat_relations.end(), ex.begin(), ex.end());
    } else {
      flat_relations.push_back(e);
    }
  }

  const int m = S.order;
  std::vector<std::pair<int, int>> pairs;
  for (const Identity& e : flat_relations) {
    const int v = static_cast<int>(e.variables.size());
    std::uint64_t total = 1;
    for (int q = 0; q < v; ++q) {
      total *= static_cast<std::uint64_t>(m);
      if (total > kDefaultAssignmentBudget)
        throw CostGuardError("free quotient sweep over " +
                             std::to_string(e.variables.size()) +
                             " variables exceeds the assignment budget");
    }
    std::vector<int> idx(v, 0);
    for (std::uint64_t step = 0; step < total; ++step) {
      Assignment a;
      for (int q = 0; q < v; ++q) a[e.variables[q]] = idx[q];
      const int l = evaluate(e.lhs, S, a);
      const int r = evaluate(e.rhs, S, a);
      if (l != r) pairs.emplace_back(l, r);
      for (int q = v - 1; q >= 0; --q) {
        if (++idx[q] < m) break;
        idx[q] = 0;
      }
    }
  }

  CayleyTable Q = quotient(S, congruence_closure(S, pairs));
  for (const Identity& e : relations)
    if (!satisfies(Q, e))
      throw Error("free quotient fails one of its own relations: " +
                  print_identity(e));
  return finish(std::move(Q), {},
                "largest quotient of " + S.name +
                    " satisfying the given identities");
}

namespace {

Identity parse(const std::string& text) { return parse_identity(text); }

struct PresetName {
  std::string head;
  std::vector<std::string> args;
};

PresetName split_preset_name(const std::string& name) {
  PresetName out;
  auto open = name.find('(');
  if (open == std::string::npos) {
    out.head = name;
    return out;
  }
  if (name.back() != ')')
    throw UnknownPresetError("malformed preset name: " + name);
  out.head = name.substr(0, open);
  std::string body = name.substr(open + 1, name.size() - open - 2);
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.args.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty() || body.empty()) out.args.push_back(cur);
  return out;
}

int arg_int(const PresetName& p, std::size_t q) {
  try {
    std::size_t used = 0;
    int v = std::stoi(p.args.at(q), &used);
    if (used != p.args[q].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UnknownPresetError("preset " + p.head + " needs integer arguments");
  }
}

void need_args(const PresetName& p, std::size_t n) {
  if (p.args.size() != n)
    throw UnknownPresetError("preset " + p.head + " takes " +
                             std::to_string(n) + " argument(s)");
}

Preset make_preset(std::string name, std::vector<std::string> lines,
                   std::string notes = "") {
  Preset out;
  out.name = std::move(name);
  for (const auto& l : lines) out.identities.push_back(parse(l));
  out.notes = std::move(notes);
  for (std::size_t q = 0; q < out.identities.size(); ++q)
    if (!out.identities[q].zero_form() && is_trivial(out.identities[q])) {
      if (!out.notes.empty()) out.notes += "; ";
      out.notes += "kept verbatim although trivial as printed: " +
                   print_identity(out.identities[q]);
    }
  return out;
}

}  // namespace

Preset preset_identities(const std::string& name) {
  PresetName p = split_preset_name(name);
  if (p.head == "T") {
    need_args(p, 0);
    return make_preset("T", {"x y x = 0", "x^2 = 0"});
  }
  if (p.head == "U") {
    need_args(p, 0);
    return make_preset("U", {"x y = y x", "x^2 = 0"});
  }
  if (p.head == "Perm") {
    need_args(p, 0);
    return make_preset("Perm", {"x^w y1 y2 z^w = x^w y2 y1 z^w"});
  }
  if (p.head == "Medial") {
    need_args(p, 0);
    return make_preset("Medial", {"x y1 y2 z = x y2 y1 z"});
  }
  if (p.head == "LRB") {
    need_args(p, 0);
    return make_preset("LRB", {"x^2 = x", "x y x = x y"});
  }
  if (p.head == "RRB") {
    need_args(p, 0);
    return make_preset("RRB", {"x^2 = x", "x y x = y x"});
  }
  if (p.head == "VN1") {
    need_args(p, 0);
    return make_preset("VN1", {"x^3 = x^2", "x^2 y = x y x", "x y x = y x^2"});
  }
  if (p.head == "VY") {
    need_args(p, 0);
    return make_preset("VY",
                       {"x^3 = x^2", "x^2 y^2 = x y x", "x y x = y^2 x^2"});
  }
  if (p.head == "VQ") {
    need_args(p, 0);
    return make_preset("VQ", {"x^3 = x^2", "x^2 y x^2 = x y x",
                              "y1^2 x y2^2 = y1^2 x y2^2",
                              "x y1 x y2 x = x y2 x y1 x"});
  }
  if (p.head == "N" || p.head == "K") {
    need_args(p, 1);
    const int k = arg_int(p, 0);
    if (k < 1) throw UnknownPresetError("preset " + p.head + " needs k >= 1");
    std::string prod;
    for (int q = 1; q <= k; ++q) {
      if (q > 1) prod += " ";
      prod += "x" + std::to_string(q);
    }
    if (p.head == "N")
      return make_preset(name, {prod + " = 0"});
    return make_preset(name, {prod + " = " + prod + " y"});
  }
  if (p.head == "ACR") {
    need_args(p, 3);
    Preset out;
    out.name = name;
    out.identities.push_back(
        acr_identity(arg_int(p, 0), arg_int(p, 1), arg_int(p, 2)));
    return out;
  }
  if (p.head == "P") {
    need_args(p, 2);
    const int n = arg_int(p, 0);
    std::vector<int> sigma;
    for (char c : p.args[1]) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw UnknownPresetError("preset P takes a digit string like 213");
      sigma.push_back(c - '0');
    }
    Preset out;
    out.name = name;
    out.identities.push_back(perm_identity(n, sigma));
    return out;
  }
  throw UnknownPresetError("unknown preset: " + name);
}

std::vector<Identity> expanded_identities(const Preset& p) {
  std::vector<Identity> out;
  for (const Identity& e : p.identities) {
    if (e.zero_form()) {
      auto ex = expand_zero(e);
      out.insert(out.end(), ex.begin(), ex.end());
    } else {
      out.push_back(e);
    }
  }
  return out;
}

LabeledModel build_model(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  PresetName p = split_preset_name(t);
  if (p.head == "T") {
    need_args(p, 1);
    return build_T(arg_int(p, 0));
  }
  if (p.head == "O") {
    need_args(p, 1);
    return build_Ufree(arg_int(p, 0));
  }
  if (p.head == "W") {
    need_args(p, 1);
    return build_W(arg_int(p, 0));
  }
  if (p.head == "V") {
    need_args(p, 2);
    return build_V(arg_int(p, 0), arg_int(p, 1));
  }
  if (p.head == "C") {
    need_args(p, 1);
    return build_C(arg_int(p, 0));
  }
  if (p.head == "N1") {
    need_args(p, 0);
    return build_N1();
  }
  if (p.head == "K") {
    need_args(p, 1);
    return build_rees(arg_int(p, 0));
  }
  throw UnknownPresetError("unknown model: " + text +
                           " (expected T(k), O(k), W(k), V(k,n), C(r), N1, or K(p))");
}

}  // namespace sgw
