#include "sgw/derivation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace sgw {

namespace {

using Word = std::vector<int>;

std::vector<std::string> as_word(const TermPtr& t) {
  TermProfile p = profile(t);
  if (!p.length)
    throw RangeError("derive_search requires finite identities");
  std::vector<std::string> letters;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (u->kind == OmegaTerm::Kind::Var)
      letters.push_back(u->name);
    else
      for (const auto& part : u->parts) walk(part);
  };
  walk(t);
  return letters;
}

struct Rule {
  Word from, to;     // pattern words over pattern-variable ids
  int pattern_vars;  // ids are 0..pattern_vars-1
  std::vector<int> unbound;  // pattern vars in `to` that `from` never binds
  std::string desc;
};

std::string word_text(const Word& w, const std::vector<std::string>& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet[w[i]];
  }
  return out;
}

std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size());
  for (int c : w) k.push_back(static_cast<char>('a' + c));
  return k;
}

// Enumerates every substitution matching `pat` onto w[s..e).
void match_rec(const Word& pat, std::size_t pi, const Word& w, std::size_t at,
               std::size_t end, std::vector<Word>& bind,
               const std::function<void()>& found) {
  if (pi == pat.size()) {
    if (at == end) found();
    return;
  }
  const int v = pat[pi];
  const std::size_t rest = pat.size() - pi - 1;
  if (!bind[v].empty()) {
    const Word& img = bind[v];
    if (end - at >= img.size() + rest &&
        std::equal(img.begin(), img.end(), w.begin() + at))
      match_rec(pat, pi + 1, w, at + img.size(), end, bind, found);
    return;
  }
  for (std::size_t len = 1; at + len + rest <= end; ++len) {
    bind[v].assign(w.begin() + at, w.begin() + at + len);
    match_rec(pat, pi + 1, w, at + len, end, bind, found);
    bind[v].clear();
  }
}

struct Searcher {
  const std::vector<Rule>& rules;
  int alphabet_size;
  std::size_t max_len;
  const std::vector<std::string>& alphabet;

  // Emits every word reachable from w in one rewrite step.
  void successors(const Word& w, const std::function<void(const Word&, std::string)>& emit) const {
    for (const Rule& r : rules) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        for (std::size_t e = s + 1; e <= w.size(); ++e) {
          std::vector<Word> bind(r.pattern_vars);
          match_rec(r.from, 0, w, s, e, bind, [&]() {
            apply_binding(r, w, s, e, bind, emit);
          });
        }
      }
    }
  }

  void apply_binding(const Rule& r, const Word& w, std::size_t s, std::size_t e,
                     std::vector<Word>& bind,
                     const std::function<void(const Word&, std::string)>& emit) const {
    // Replacement length with every unbound variable still to choose.
    std::size_t fixed = w.size() - (e - s);
    for (int v : r.to) fixed += bind[v].empty() ? 0 : bind[v].size();
    std::function<void(std::size_t)> choose = [&](std::size_t ui) {
      if (ui == r.unbound.size()) {
        Word out;
        out.reserve(max_len);
        out.insert(out.end(), w.begin(), w.begin() + s);
        for (int v : r.to) out.insert(out.end(), bind[v].begin(), bind[v].end());
        out.insert(out.end(), w.begin() + e, w.end());
        if (out.size() <= max_len) emit(out, r.desc);
        return;
      }
      const int v = r.unbound[ui];
      if (fixed >= max_len) return;
      // Each remaining unbound slot needs at least one letter.
      std::size_t room = max_len - fixed;
      std::size_t uses = std::count(r.to.begin(), r.to.end(), v);
      std::size_t cap = uses == 0 ? 1 : room / uses;
      Word img;
      std::function<void(std::size_t)> grow = [&](std::size_t want) {
        if (img.size() == want) {
          bind[v] = img;
          fixed += uses * img.size();
          choose(ui + 1);
          fixed -= uses * img.size();
          bind[v].clear();
          return;
        }
        for (int c = 0; c < alphabet_size; ++c) {
          img.push_back(c);
          grow(want);
          img.pop_back();
        }
      };
      for (std::size_t len = 1; len <= cap; ++len) grow(len);
    };
    choose(0);
  }
};

struct Visit {
  std::string parent;
  std::string rule;
  bool forward;
};

}  // namespace

DeriveResult derive_search(const std::vector<Identity>& basis,
                           const Identity& goal, const DeriveBudget& budget) {
  if (goal.zero_form())
    throw RangeError("derive_search needs a two-sided goal; expand the zero-form first");
  if (budget.max_word_length < 1) throw RangeError("word length budget must be >= 1");

  std::vector<std::string> alphabet = goal.variables;
  std::unordered_map<std::string, int> letter;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    letter[alphabet[i]] = static_cast<int>(i);
  auto encode = [&](const TermPtr& t) {
    Word w;
    for (const auto& name : as_word(t)) w.push_back(letter.at(name));
    return w;
  };

  std::vector<Identity> flat;
  for (const auto& e : basis) {
    if (e.zero_form())
      for (auto& part : expand_zero(e)) flat.push_back(std::move(part));
    else
      flat.push_back(e);
  }

  std::vector<Rule> rules;
  for (const auto& e : flat) {
    std::vector<std::string> pvars = e.variables;
    std::unordered_map<std::string, int> pid;
    for (std::size_t i = 0; i < pvars.size(); ++i) pid[pvars[i]] = static_cast<int>(i);
    auto pattern = [&](const TermPtr& t) {
      Word w;
      for (const auto& name : as_word(t)) w.push_back(pid.at(name));
      return w;
    };
    Word l = pattern(e.lhs), r = pattern(e.rhs);
    auto mk = [&](Word from, Word to, const std::string& dir) {
      Rule rule;
      rule.from = std::move(from);
      rule.to = std::move(to);
      rule.pattern_vars = static_cast<int>(pvars.size());
      for (int v = 0; v < rule.pattern_vars; ++v) {
        bool in_from = std::find(rule.from.begin(), rule.from.end(), v) != rule.from.end();
        bool in_to = std::find(rule.to.begin(), rule.to.end(), v) != rule.to.end();
        if (!in_from && in_to) rule.unbound.push_back(v);
      }
      rule.desc = print_identity(e) + " (" + dir + ")";
      rules.push_back(std::move(rule));
    };
    mk(l, r, "forward");
    mk(r, l, "backward");
  }

  Word start = encode(goal.lhs), target = encode(goal.rhs);
  const std::size_t max_len = static_cast<std::size_t>(budget.max_word_length);
  DeriveResult result;
  if (start.size() > max_len || target.size() > max_len) return result;

  Searcher searcher{rules, static_cast<int>(alphabet.size()), max_len, alphabet};

  const std::string start_key = word_key(start), target_key = word_key(target);
  if (start_key == target_key) {
    result.status = DeriveResult::Status::Derived;
    return result;
  }

  std::deque<Word> fwd_frontier{start}, bwd_frontier{target};
  std::unordered_map<std::string, Visit> fwd_seen{{start_key, {"", "", true}}},
      bwd_seen{{target_key, {"", "", false}}};

  // Both halves of the chain, stitched at the meeting word: the forward
  // half walks meet -> start and is reversed; each backward-half edge was
  // found from the target side, so it enters the trace reversed.
  auto build_trace = [&](const std::string& meet) {
    std::vector<DeriveStep> half;
    std::string at = meet;
    while (at != start_key) {
      const Visit& v = fwd_seen.at(at);
      half.push_back({v.parent, at, v.rule});
      at = v.parent;
    }
    std::reverse(half.begin(), half.end());
    result.trace = std::move(half);
    at = meet;
    while (at != target_key) {
      const Visit& v = bwd_seen.at(at);
      result.trace.push_back({at, v.parent, v.rule + " [reversed]"});
      at = v.parent;
    }
  };

  auto decode = [&](const std::string& key) {
    Word w;
    for (char c : key) w.push_back(c - 'a');
    return w;
  };

  while ((!fwd_frontier.empty() || !bwd_frontier.empty()) &&
         result.expansions < budget.max_expansions) {
    bool expand_fwd = !fwd_frontier.empty() &&
                      (bwd_frontier.empty() || fwd_frontier.size() <= bwd_frontier.size());
    auto& frontier = expand_fwd ? fwd_frontier : bwd_frontier;
    auto& mine = expand_fwd ? fwd_seen : bwd_seen;
    auto& theirs = expand_fwd ? bwd_seen : fwd_seen;
    Word w = frontier.front();
    frontier.pop_front();
    ++result.expansions;
    const std::string wkey = word_key(w);
    bool met = false;
    searcher.successors(w, [&](const Word& next, std::string rule) {
      if (met) return;
      const std::string key = word_key(next);
      if (mine.count(key)) return;
      mine[key] = {wkey, std::move(rule), expand_fwd};
      if (theirs.count(key)) {
        build_trace(key);
        met = true;
        return;
      }
      frontier.push_back(next);
    });
    if (met) {
      result.status = DeriveResult::Status::Derived;
      for (auto& step : result.trace) {
        step.from = word_text(decode(step.from), alphabet);
        step.to = word_text(decode(step.to), alphabet);
      }
      return result;
    }
  }
  return result;
}

}  // namespace sgw
