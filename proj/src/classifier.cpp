#include "sgw/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sgw {

namespace {

std::vector<TermPtr> flat_factors(const TermPtr& t) {
  if (t->kind == OmegaTerm::Kind::Concat) return t->parts;
  return {t};
}

// Single normalization pass for the primitivity tests: when the boundary
// factor is an omega power with a positive offset, unroll one copy of the
// base toward that boundary so the boundary letter becomes visible.
std::vector<TermPtr> normalize_boundary(const TermPtr& rhs, Side side) {
  std::vector<TermPtr> fs = flat_factors(rhs);
  const TermPtr& edge = side == Side::Left ? fs.front() : fs.back();
  if (edge->kind == OmegaTerm::Kind::Power && edge->power_offset >= 1) {
    std::vector<TermPtr> inner = flat_factors(unroll(edge, side));
    if (side == Side::Left) {
      inner.insert(inner.end(), fs.begin() + 1, fs.end());
      fs = std::move(inner);
    } else {
      fs.erase(fs.end() - 1);
      fs.insert(fs.end(), inner.begin(), inner.end());
    }
  }
  return fs;
}

std::vector<std::string> word_letters(const TermPtr& t) {
  std::vector<std::string> letters;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (u->kind == OmegaTerm::Kind::Var)
      letters.push_back(u->name);
    else if (u->kind == OmegaTerm::Kind::Concat)
      for (const auto& part : u->parts) walk(part);
    else
      throw RangeError("expected a finite word");
  };
  walk(t);
  return letters;
}

Identity acr_over(const std::vector<std::string>& vars, int i, int j) {
  const int n = static_cast<int>(vars.size());
  std::vector<TermPtr> lhs_parts, rhs_parts, core;
  for (int p = 0; p < n; ++p) lhs_parts.push_back(var(vars[p]));
  for (int p = 0; p < i - 1; ++p) rhs_parts.push_back(var(vars[p]));
  for (int p = i - 1; p < j; ++p) core.push_back(var(vars[p]));
  rhs_parts.push_back(power(concat(std::move(core)), 1));
  for (int p = j; p < n; ++p) rhs_parts.push_back(var(vars[p]));
  return make_identity(concat(std::move(lhs_parts)), concat(std::move(rhs_parts)));
}

Identity perm_over(const std::vector<std::string>& vars,
                   const std::vector<int>& sigma) {
  const int n = static_cast<int>(vars.size());
  std::vector<TermPtr> lhs_parts, rhs_parts;
  for (int p = 0; p < n; ++p) lhs_parts.push_back(var(vars[p]));
  for (int p = 0; p < n; ++p) rhs_parts.push_back(var(vars[sigma[p] - 1]));
  return make_identity(concat(std::move(lhs_parts)), concat(std::move(rhs_parts)));
}

int least_missing(const ProductIdentity& p) {
  TermProfile prof = profile(p.rhs);
  for (int q = 0; q < p.arity(); ++q)
    if (!prof.content.count(p.vars[q])) return q + 1;
  return 0;
}

ProductIdentity strip_left(const ProductIdentity& p) {
  std::vector<TermPtr> fs = flat_factors(p.rhs);
  ProductIdentity out;
  out.vars.assign(p.vars.begin() + 1, p.vars.end());
  out.rhs = concat({fs.begin() + 1, fs.end()});
  return out;
}

ProductIdentity strip_right(const ProductIdentity& p) {
  std::vector<TermPtr> fs = flat_factors(p.rhs);
  ProductIdentity out;
  out.vars.assign(p.vars.begin(), p.vars.end() - 1);
  out.rhs = concat({fs.begin(), fs.end() - 1});
  return out;
}

}  // namespace

ProductIdentity as_product_identity(const Identity& e) {
  if (e.zero_form())
    throw NotAProductIdentityError("zero-form identities are not product identities");
  std::vector<TermPtr> fs = flat_factors(e.lhs);
  ProductIdentity p;
  for (const auto& f : fs) {
    if (f->kind != OmegaTerm::Kind::Var)
      throw NotAProductIdentityError(
          "left side must be a plain product of variables, got " + print_term(e.lhs));
    if (std::find(p.vars.begin(), p.vars.end(), f->name) != p.vars.end())
      throw NotAProductIdentityError("left side repeats variable " + f->name);
    p.vars.push_back(f->name);
  }
  TermProfile rp = profile(e.rhs);
  for (const auto& v : rp.content)
    if (std::find(p.vars.begin(), p.vars.end(), v) == p.vars.end())
      throw NotAProductIdentityError("right side uses " + v +
                                     " which the left side does not mention");
  if (is_trivial(e)) throw TrivialIdentityError("the two sides are equal");
  p.rhs = e.rhs;
  return p;
}

Identity to_identity(const ProductIdentity& p) {
  std::vector<TermPtr> lhs_parts;
  for (const auto& v : p.vars) lhs_parts.push_back(var(v));
  return make_identity(concat(std::move(lhs_parts)), p.rhs);
}

bool is_regular(const ProductIdentity& p) {
  return least_missing(p) == 0;
}

bool is_expansion(const ProductIdentity& p) {
  TermProfile prof = profile(p.rhs);
  return !prof.length || *prof.length > static_cast<std::uint64_t>(p.arity());
}

ProductIdentity regularize(const ProductIdentity& p) {
  const int i = least_missing(p);
  if (i == 0) throw AlreadyRegularError("every variable already occurs on the right");
  std::vector<TermPtr> rhs;
  for (int q = 0; q < p.arity(); ++q) {
    rhs.push_back(var(p.vars[q]));
    if (q + 1 == i) rhs.push_back(var(p.vars[q]));
  }
  ProductIdentity out;
  out.vars = p.vars;
  out.rhs = concat(std::move(rhs));
  return out;
}

std::vector<std::vector<std::string>> unroll_sequence(const ProductIdentity& p,
                                                      int steps) {
  if (steps < 0) throw RangeError("step count must be >= 0");
  TermProfile prof = profile(p.rhs);
  if (!prof.length)
    throw RangeError("unroll sequence needs a finite right side");
  if (!is_expansion(p) || !is_regular(p))
    throw RangeError("unroll sequence needs a regular expansion identity");
  const int n = p.arity();
  std::vector<std::string> rho = word_letters(p.rhs);
  std::vector<int> rho_index;
  for (const auto& l : rho) {
    auto it = std::find(p.vars.begin(), p.vars.end(), l);
    rho_index.push_back(static_cast<int>(it - p.vars.begin()));
  }
  std::vector<std::vector<std::string>> out;
  out.push_back(p.vars);
  for (int t = 0; t < steps; ++t) {
    const std::vector<std::string>& w = out.back();
    std::vector<std::string> next;
    for (int q : rho_index) next.push_back(w[q]);
    next.insert(next.end(), w.begin() + n, w.end());
    out.push_back(std::move(next));
  }
  return out;
}

bool is_left_primitive(const ProductIdentity& p) {
  std::vector<TermPtr> fs = normalize_boundary(p.rhs, Side::Left);
  const TermPtr& f0 = fs.front();
  if (f0->kind != OmegaTerm::Kind::Var || f0->name != p.vars.front()) return true;
  if (fs.size() == 1) return true;
  TermPtr rest = concat({fs.begin() + 1, fs.end()});
  return profile(rest).content.count(p.vars.front()) > 0;
}

bool is_right_primitive(const ProductIdentity& p) {
  std::vector<TermPtr> fs = normalize_boundary(p.rhs, Side::Right);
  const TermPtr& fl = fs.back();
  if (fl->kind != OmegaTerm::Kind::Var || fl->name != p.vars.back()) return true;
  if (fs.size() == 1) return true;
  TermPtr rest = concat({fs.begin(), fs.end() - 1});
  return profile(rest).content.count(p.vars.back()) > 0;
}

std::string Classification::verdict_text() const {
  std::ostringstream out;
  if (verdict == Verdict::Permutation) {
    out << "Permutation(";
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      if (p) out << ' ';
      out << sigma[p];
    }
    out << ')';
  } else {
    out << "ACR(" << i << ',' << j << ')';
  }
  return out.str();
}

Classification classify(const ProductIdentity& p, StripOrder order) {
  Classification c;
  c.n = p.arity();
  ProductIdentity cur = p;

  if (!is_regular(cur)) {
    int miss = least_missing(cur);
    cur = regularize(cur);
    c.trace.push_back({ReductionStep::Kind::NonRegularSquare, miss});
  }

  TermProfile prof = profile(cur.rhs);
  if (prof.length && *prof.length == static_cast<std::uint64_t>(c.n)) {
    // Regular with length n: the right side is a permutation of the left.
    std::vector<std::string> letters = word_letters(cur.rhs);
    c.verdict = Classification::Verdict::Permutation;
    for (const auto& l : letters) {
      auto it = std::find(p.vars.begin(), p.vars.end(), l);
      c.sigma.push_back(static_cast<int>(it - p.vars.begin()) + 1);
    }
    c.implied = perm_over(p.vars, c.sigma);
    return c;
  }

  int lo = 1, hi = c.n;
  auto strip_left_loop = [&]() {
    while (!is_left_primitive(cur)) {
      cur = strip_left(cur);
      c.trace.push_back({ReductionStep::Kind::LeftStrip, 0});
      ++lo;
    }
  };
  auto strip_right_loop = [&]() {
    while (!is_right_primitive(cur)) {
      cur = strip_right(cur);
      c.trace.push_back({ReductionStep::Kind::RightStrip, 0});
      --hi;
    }
  };
  if (order == StripOrder::LeftFirst) {
    strip_left_loop();
    strip_right_loop();
  } else {
    strip_right_loop();
    strip_left_loop();
  }
  c.trace.push_back({ReductionStep::Kind::PrimitiveCore, 0});
  c.verdict = Classification::Verdict::Acr;
  c.i = lo;
  c.j = hi;
  c.implied = acr_over(p.vars, lo, hi);
  return c;
}

Identity acr_identity(int n, int i, int j) {
  if (n < 1 || i < 1 || i > j || j > n)
    throw IndexError("need 1 <= i <= j <= n");
  std::vector<std::string> vars;
  for (int p = 1; p <= n; ++p) vars.push_back("x" + std::to_string(p));
  return acr_over(vars, i, j);
}

Identity perm_identity(int n, const std::vector<int>& sigma) {
  if (n < 2 || static_cast<int>(sigma.size()) != n)
    throw IndexError("permutation arity must be >= 2 and match sigma");
  std::vector<bool> hit(n, false);
  bool trivial = true;
  for (int p = 0; p < n; ++p) {
    if (sigma[p] < 1 || sigma[p] > n || hit[sigma[p] - 1])
      throw IndexError("sigma is not a permutation of 1..n");
    hit[sigma[p] - 1] = true;
    trivial = trivial && sigma[p] == p + 1;
  }
  if (trivial) throw TrivialIdentityError("identity permutation gives a trivial identity");
  std::vector<std::string> vars;
  for (int p = 1; p <= n; ++p) vars.push_back("x" + std::to_string(p));
  return perm_over(vars, sigma);
}

bool replay_trace(const ProductIdentity& p, const Classification& c) {
  ProductIdentity cur = p;
  int lo = 1, hi = p.arity();
  bool saw_core = false;
  for (const auto& step : c.trace) {
    switch (step.kind) {
      case ReductionStep::Kind::NonRegularSquare:
        if (is_regular(cur) || least_missing(cur) != step.index) return false;
        cur = regularize(cur);
        break;
      case ReductionStep::Kind::LeftStrip:
        if (is_left_primitive(cur)) return false;
        cur = strip_left(cur);
        ++lo;
        break;
      case ReductionStep::Kind::RightStrip:
        if (is_right_primitive(cur)) return false;
        cur = strip_right(cur);
        --hi;
        break;
      case ReductionStep::Kind::PrimitiveCore:
        if (!is_left_primitive(cur) || !is_right_primitive(cur)) return false;
        saw_core = true;
        break;
    }
  }
  if (c.verdict == Classification::Verdict::Permutation) {
    if (saw_core || c.sigma.empty()) return false;
    TermProfile prof = profile(cur.rhs);
    if (!prof.length || *prof.length != static_cast<std::uint64_t>(c.n)) return false;
    std::vector<std::string> letters = word_letters(cur.rhs);
    for (int q = 0; q < c.n; ++q)
      if (letters[q] != p.vars[c.sigma[q] - 1]) return false;
    return true;
  }
  return saw_core && lo == c.i && hi == c.j && c.n == p.arity();
}

}  // namespace sgw
