#include "qfodc/normalform.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "qfodc/error.hpp"
#include "qfodc/linalg.hpp"

namespace qfodc {

std::vector<AlgebraElement> rtt_relations(const GroupSpec& g) {
  const int n = g.n();
  RMatrix r = build_rhat(g);
  std::vector<AlgebraElement> rels;
  rels.reserve(static_cast<size_t>(n) * n * n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          AlgebraElement rel;
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              Scalar left = r.entry(i, j, a, b);
              if (!left.is_zero())
                rel.add_term(Word({Letter(a, k), Letter(b, l)}), left);
              Scalar right = r.entry(a, b, k, l);
              if (!right.is_zero())
                rel.add_term(Word({Letter(i, a), Letter(j, b)}), -right);
            }
          if (!rel.is_zero()) rels.push_back(std::move(rel));
        }
  if (g.has_metric()) {
    // u C u^t C^{-1} = I and C u^t C^{-1} u = I, entrywise
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int jp = g.conjugate_index(j);
        AlgebraElement m1, m2;
        Scalar cj_inv = g.metric_entry(j).inverse();
        for (int k = 1; k <= n; ++k) {
          int kp = g.conjugate_index(k);
          m1.add_term(Word({Letter(i, k), Letter(jp, kp)}), cj_inv * g.metric_entry(k));
          // (C u^t C^{-1} u)^i_j = sum_l c_i c_l^{-1} u^{l'}_{i'} u^l_j
          m2.add_term(Word({Letter(kp, g.conjugate_index(i)), Letter(k, j)}),
                      g.metric_entry(i) * g.metric_entry(k).inverse());
        }
        if (i == j) {
          m1 -= AlgebraElement::unit();
          m2 -= AlgebraElement::unit();
        }
        rels.push_back(std::move(m1));
        rels.push_back(std::move(m2));
      }
  }
  return rels;
}

namespace {

struct PairKey {
  Letter l1, l2;
  bool operator<(const PairKey& o) const {
    if (!(l1 == o.l1)) return l1 < o.l1;
    return l2 < o.l2;
  }
};

}  // namespace

class RulesBuilder {
 public:
  static StraighteningRules build(const GroupSpec& g) {
    if (!g.has_pbw_backend())
      throw Unsupported("PBW backend unsupported; use pairing zero-test");
    StraighteningRules rules;
    rules.g_ = g;
    const int n = g.n();

    // all length-2 monomials, descending pairs first so rref pivots on them
    std::vector<std::pair<Letter, Letter>> monomials;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d)
            monomials.emplace_back(Letter(a, b), Letter(c, d));
    std::stable_sort(monomials.begin(), monomials.end(), [](const auto& x, const auto& y) {
      bool desc_x = x.second < x.first;
      bool desc_y = y.second < y.first;
      if (desc_x != desc_y) return desc_x;  // descending monomials first
      if (!(x.first == y.first)) return y.first < x.first;
      return y.second < x.second;
    });
    std::map<std::pair<Letter, Letter>, size_t> index;
    for (size_t c = 0; c < monomials.size(); ++c) index[monomials[c]] = c;

    auto rels = rtt_relations(g);
    FracMatrix m(rels.size(), monomials.size());
    for (size_t r = 0; r < rels.size(); ++r) {
      for (const auto& [w, coeff] : rels[r].terms()) {
        if (w.degree() != 2 || w.detq_pow != 0)
          throw Error("unexpected relation shape");
        m.at(r, index[{w.letters[0], w.letters[1]}]) = ScalarFraction(coeff);
      }
    }
    auto pivots = m.rref();

    size_t expected = 0;
    for (const auto& [p, idx] : index)
      if (p.second < p.first) ++expected;
    if (pivots.size() != expected)
      throw Error("straightening rank " + std::to_string(pivots.size()) +
                  " does not match descending-pair count " + std::to_string(expected) +
                  " for " + g.name());

    for (size_t r = 0; r < pivots.size(); ++r) {
      const auto& pivot_mono = monomials[pivots[r]];
      if (!(pivot_mono.second < pivot_mono.first))
        throw Error("straightening pivot is not a descending pair");
      std::vector<std::pair<Word, Scalar>> repl;
      for (size_t c = pivots[r] + 1; c < monomials.size(); ++c) {
        const ScalarFraction& e = m.at(r, c);
        if (e.is_zero()) continue;
        auto s = e.as_scalar();
        if (!s) throw Error("non-polynomial straightening coefficient");
        if (monomials[c].second < monomials[c].first)
          throw Error("straightening rule rewrites into a descending pair");
        repl.emplace_back(Word({monomials[c].first, monomials[c].second}), -*s);
      }
      rules.rules_[{pivot_mono.first, pivot_mono.second}] = std::move(repl);
    }
    return rules;
  }
};

std::shared_ptr<const StraighteningRules> StraighteningRules::for_group(const GroupSpec& g) {
  static std::mutex mu;
  static std::map<std::pair<GroupFamily, int>, std::shared_ptr<const StraighteningRules>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g.family(), g.n());
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  auto rules = std::make_shared<StraighteningRules>(RulesBuilder::build(g));
  reg[key] = rules;
  return rules;
}

const std::vector<std::pair<Word, Scalar>>& StraighteningRules::rule(const Letter& l1,
                                                                     const Letter& l2) const {
  auto it = rules_.find({l1, l2});
  if (it == rules_.end()) throw Error("no straightening rule for this pair");
  return it->second;
}

namespace {

// (degree, sum of row*col, reverse-lex) order used to prove the reductions
// terminate; corrections of the diagonal rule strictly lower the weight.
long long word_weight(const std::vector<Letter>& ls) {
  long long w = 0;
  for (const auto& l : ls) w += static_cast<long long>(l.row) * l.col;
  return w;
}

struct LetterVecLess {
  bool operator()(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// map from sorted letter vectors to straightened elements, memoized per group
using WordMemo = std::map<std::vector<Letter>, AlgebraElement, LetterVecLess>;

WordMemo& memo_for(const GroupSpec& g) {
  static std::mutex mu;
  static std::map<std::pair<GroupFamily, int>, WordMemo> memos;
  std::lock_guard<std::mutex> lock(mu);
  return memos[{g.family(), g.n()}];
}

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

// rewrite until row-major sorted; leftmost descending pair when leftmost is
// set, rightmost otherwise (the diamond test runs both)
AlgebraElement straighten_letters(const std::vector<Letter>& input,
                                  const StraighteningRules& rules, bool leftmost,
                                  bool use_memo) {
  if (use_memo) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& memo = memo_for(rules.group());
    auto it = memo.find(input);
    if (it != memo.end()) return it->second;
  }

  AlgebraElement out;
  // worklist of (letters, coefficient)
  std::vector<std::pair<std::vector<Letter>, Scalar>> work;
  work.emplace_back(input, Scalar(1));
  size_t steps = 0;
  while (!work.empty()) {
    if (++steps > 2000000) throw Error("straightening did not terminate");
    auto [ls, coeff] = std::move(work.back());
    work.pop_back();
    long found = -1;
    if (leftmost) {
      for (size_t s = 0; s + 1 < ls.size(); ++s)
        if (ls[s + 1] < ls[s]) {
          found = static_cast<long>(s);
          break;
        }
    } else {
      for (size_t s = ls.size(); s >= 2; --s)
        if (ls[s - 1] < ls[s - 2]) {
          found = static_cast<long>(s - 2);
          break;
        }
    }
    if (found < 0) {
      out.add_term(Word(std::move(ls)), coeff);
      continue;
    }
    const auto& repl = rules.rule(ls[static_cast<size_t>(found)],
                                  ls[static_cast<size_t>(found) + 1]);
    for (const auto& [rw, rc] : repl) {
      std::vector<Letter> next;
      next.reserve(ls.size());
      next.insert(next.end(), ls.begin(), ls.begin() + found);
      next.insert(next.end(), rw.letters.begin(), rw.letters.end());
      next.insert(next.end(), ls.begin() + found + 2, ls.end());
      work.emplace_back(std::move(next), coeff * rc);
    }
  }

  if (use_memo) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    memo_for(rules.group()).emplace(input, out);
  }
  return out;
}

AlgebraElement straighten_element(const AlgebraElement& a, const StraighteningRules& rules,
                                  bool leftmost = true) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) {
    for (const auto& l : w.letters)
      if (l.parity) throw Error("normal form needs parity-0 letters; expand antipodes first");
    AlgebraElement s = straighten_letters(w.letters, rules, leftmost, leftmost);
    for (const auto& [sw, sc] : s.terms())
      out.add_term(Word(sw.letters, w.detq_pow), sc * c);
  }
  return out;
}

bool contains_multiset(const std::vector<Letter>& w, const std::vector<Letter>& sub) {
  auto rest = w;
  for (const auto& s : sub) {
    auto it = std::find(rest.begin(), rest.end(), s);
    if (it == rest.end()) return false;
    rest.erase(it);
  }
  return true;
}

std::vector<Letter> multiset_minus(const std::vector<Letter>& w,
                                   const std::vector<Letter>& sub) {
  auto rest = w;
  for (const auto& s : sub) {
    auto it = std::find(rest.begin(), rest.end(), s);
    rest.erase(it);
  }
  return rest;
}

// reduce modulo det_q = 1: eliminate every sorted word containing the full
// diagonal multiset, which is the leading term of det_q in the
// (degree, weight, lex) order
AlgebraElement slq_det_reduce(AlgebraElement a, const GroupSpec& g,
                              const StraighteningRules& rules) {
  std::vector<Letter> diag;
  for (int i = 1; i <= g.n(); ++i) diag.emplace_back(i, i);
  AlgebraElement det_minus_one = quantum_determinant(g) - AlgebraElement::unit();

  size_t guard = 0;
  while (true) {
    if (++guard > 200000) throw Error("det_q reduction did not terminate");
    // pick the largest reducible word in (degree, weight, lex)
    const Word* best = nullptr;
    Scalar best_coeff;
    for (const auto& [w, c] : a.terms()) {
      if (!contains_multiset(w.letters, diag)) continue;
      if (!best) {
        best = &w;
        best_coeff = c;
        continue;
      }
      auto key = [&](const Word& x) {
        return std::tuple(x.degree(), word_weight(x.letters), x.letters);
      };
      if (key(*best) < key(w)) {
        best = &w;
        best_coeff = c;
      }
    }
    if (!best) return a;
    Word target = *best;
    std::vector<Letter> rest = multiset_minus(target.letters, diag);
    std::sort(rest.begin(), rest.end());
    AlgebraElement g_elem = AlgebraElement::from_word(Word(rest)) * det_minus_one;
    g_elem = straighten_element(g_elem, rules);
    // leading coefficient of the target word inside g_elem
    auto it = g_elem.terms().find(target);
    if (it == g_elem.terms().end() || it->second.is_zero())
      throw Error("det_q reduction lost its leading term");
    Scalar factor = best_coeff * it->second.inverse();
    a -= g_elem.scaled(factor);
    // defensively keep the detq_pow of the reduced words
    if (target.detq_pow != 0) throw Error("det_q power inside slq normal form");
  }
}

}  // namespace

AlgebraElement normal_form(const AlgebraElement& a, const GroupSpec& g) {
  auto rules = StraighteningRules::for_group(g);
  if (g.family() == GroupFamily::SLq) {
    // det_q == 1: powers are dropped (antipode expansion already emits none)
    AlgebraElement flat;
    for (const auto& [w, c] : a.terms()) flat.add_term(Word(w.letters, 0), c);
    AlgebraElement s = straighten_element(flat, *rules);
    return slq_det_reduce(std::move(s), g, *rules);
  }
  // bring every word to the common lowest det_q power
  int pmin = 0;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (first || w.detq_pow < pmin) pmin = w.detq_pow;
    first = false;
  }
  if (first) return a;  // zero
  AlgebraElement det = quantum_determinant(g);
  AlgebraElement acc;
  for (const auto& [w, c] : a.terms()) {
    AlgebraElement t = AlgebraElement::from_word(Word(w.letters, pmin), c);
    for (int k = 0; k < w.detq_pow - pmin; ++k) t = t * det;
    acc += t;
  }
  return straighten_element(acc, *rules);
}

bool pbw_is_zero(const AlgebraElement& a, const GroupSpec& g) {
  return normal_form(a, g).is_zero();
}

bool pbw_is_zero_expanded(const AlgebraElement& a, const GroupSpec& g) {
  return pbw_is_zero(antipode_expand(a, g), g);
}

// exposed for the confluence diamond test
AlgebraElement normal_form_rightmost(const AlgebraElement& a, const GroupSpec& g) {
  auto rules = StraighteningRules::for_group(g);
  return straighten_element(a, *rules, /*leftmost=*/false);
}

}  // namespace qfodc
