#include "qfodc/numeric.hpp"

#include <algorithm>
#include <functional>

#include "qfodc/error.hpp"

namespace qfodc {

namespace {

// independent re-derivation of the metric data (deliberately not shared with
// the symbolic GroupSpec tables, so convention slips show up as oracle
// disagreement)
void metric_data(const GroupSpec& g, std::vector<long long>& rho2, std::vector<int>& eps) {
  const int n = g.n();
  rho2.assign(static_cast<size_t>(n), 0);
  eps.assign(static_cast<size_t>(n), 1);
  int half = n / 2;
  for (int i = 1; i <= n; ++i) {
    long long r2;
    if (g.family() == GroupFamily::Oq) {
      if (n % 2 == 1) {
        int mid = (n + 1) / 2;
        r2 = (i < mid) ? (n - 2 * i) : (i == mid ? 0 : n - 2 * i + 2);
      } else {
        r2 = (i <= half) ? (n - 2 * i) : (n - 2 * i + 2);
      }
    } else {
      r2 = (i <= half) ? (n - 2 * i + 2) : (n - 2 * i);
      if (i > half) eps[static_cast<size_t>(i - 1)] = -1;
    }
    rho2[static_cast<size_t>(i - 1)] = -r2;
  }
}

struct Dense4 {
  int n = 0;
  std::vector<Rational> v;
  explicit Dense4(int nn) : n(nn), v(static_cast<size_t>(nn) * nn * nn * nn, Rational(0)) {}
  Rational& at(int i, int j, int k, int l) {
    return v[static_cast<size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1))];
  }
  const Rational& at(int i, int j, int k, int l) const {
    return v[static_cast<size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1))];
  }
};

Dense4 dense_rhat(const GroupSpec& g, const Rational& q0, const Rational& root) {
  const int n = g.n();
  Dense4 r(n);
  Rational qdiff = q0 - 1 / q0;
  if (!g.has_metric()) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        r.at(i, j, j, i) += (i == j) ? q0 : Rational(1);
        if (j > i) r.at(i, j, i, j) += qdiff;
      }
    return r;
  }
  std::vector<long long> rho2;
  std::vector<int> eps;
  metric_data(g, rho2, eps);
  auto centry = [&](int i) {
    // rho2 holds 2*rho; for D = 2 the root is q0^(1/2) and c = root^rho2,
    // otherwise all rho2 are even and c = q0^(rho2/2)
    Rational c = (g.exponent_denominator() == 2)
                     ? rational_pow(root, rho2[static_cast<size_t>(i - 1)])
                     : rational_pow(q0, rho2[static_cast<size_t>(i - 1)] / 2);
    return eps[static_cast<size_t>(i - 1)] * c;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      int bp = n + 1 - b;
      long long e = (a == b ? 1 : 0) - (a == bp ? 1 : 0);
      r.at(a, b, b, a) += rational_pow(q0, e);
      if (b > a) r.at(a, b, a, b) += qdiff;
    }
  Rational epsf(g.epsilon());
  for (int a = 1; a <= n; ++a) {
    int ap = n + 1 - a;
    for (int m = 1; m <= n; ++m) {
      int mp = n + 1 - m;
      if (ap - m <= 0) continue;
      r.at(a, ap, m, mp) -= epsf * qdiff * centry(a) * centry(m);
    }
  }
  return r;
}

Dense4 dense_inverse(const Dense4& m) {
  const int n = m.n;
  const size_t dim = static_cast<size_t>(n) * n;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(2 * dim, Rational(0)));
  auto flat = [n](int i, int j) { return static_cast<size_t>((i - 1) * n + (j - 1)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) a[flat(i, j)][flat(k, l)] = m.at(i, j, k, l);
  for (size_t i = 0; i < dim; ++i) a[i][dim + i] = 1;
  for (size_t c = 0; c < dim; ++c) {
    size_t piv = c;
    while (piv < dim && a[piv][c] == 0) ++piv;
    if (piv == dim) throw Error("numeric R-matrix is singular at q0");
    std::swap(a[c], a[piv]);
    Rational inv = 1 / a[c][c];
    for (size_t j = 0; j < 2 * dim; ++j) a[c][j] *= inv;
    for (size_t r = 0; r < dim; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (size_t j = c; j < 2 * dim; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Dense4 out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) out.at(i, j, k, l) = a[flat(i, j)][dim + flat(k, l)];
  return out;
}

}  // namespace

Rational NumericEngine::default_q0(const GroupSpec& g) {
  long long d = g.exponent_denominator();
  if (d == 1) return Rational(7, 10);
  // (7/10)^D keeps the root itself at 7/10
  Rational q0 = 1;
  for (long long i = 0; i < d; ++i) q0 *= Rational(7, 10);
  return q0;
}

NumericEngine::NumericEngine(const GroupSpec& g, const Rational& q0)
    : g_(g), q0_(q0), n_(g.n()) {
  if (q0 == 0) throw Error("numeric oracle needs q0 != 0");
  long long d = g.exponent_denominator();
  auto root = exact_root(q0, d);
  if (!root) throw Error("q0 has no exact " + std::to_string(d) + "-th root");
  root_ = *root;
  if (g.family() == GroupFamily::SLq) z0_ = 1 / root_;  // z = q^{-1/N}

  Dense4 rh = dense_rhat(g, q0_, root_);
  Dense4 ri = dense_inverse(rh);

  gamma0_.assign(static_cast<size_t>(n_ + 1), Rational(1));
  if (g.has_gamma())
    for (int i = 1; i <= n_; ++i) gamma0_[static_cast<size_t>(i)] = rational_pow(q0_, 2 * i);
  detq_plus_ = q0_;

  size_t total = 2 * 2 * 2 * static_cast<size_t>(n_) * n_ * n_ * n_;
  t_.assign(total, Rational(0));
  auto idx = [this](int kind, int pa, int pl, int a, int b, int c, int d2) {
    return ((((((static_cast<size_t>(kind) * 2 + pa) * 2 + pl) * n_ + (a - 1)) * n_ +
              (b - 1)) *
                 n_ +
             (c - 1)) *
                n_ +
            (d2 - 1));
  };
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      for (int c = 1; c <= n_; ++c)
        for (int d2 = 1; d2 <= n_; ++d2) {
          Rational plus0 = z0_ == 1 ? rh.at(a, c, d2, b) : z0_ * rh.at(a, c, d2, b);
          Rational minus0 = z0_ == 1 ? ri.at(a, c, d2, b) : ri.at(a, c, d2, b) / z0_;
          Rational plus1 = z0_ == 1 ? ri.at(c, a, b, d2) : ri.at(c, a, b, d2) / z0_;
          Rational minus1 = z0_ == 1 ? rh.at(c, a, b, d2) : z0_ * rh.at(c, a, b, d2);
          t_[idx(0, 0, 0, a, b, c, d2)] = plus0;
          t_[idx(1, 0, 0, a, b, c, d2)] = minus0;
          t_[idx(0, 1, 0, a, b, c, d2)] = plus1;
          t_[idx(1, 1, 0, a, b, c, d2)] = minus1;
          t_[idx(0, 0, 1, a, b, c, d2)] = plus1;
          t_[idx(1, 0, 1, a, b, c, d2)] = minus1;
          if (g.has_gamma()) {
            Rational gr = gamma0_[static_cast<size_t>(c)] / gamma0_[static_cast<size_t>(d2)];
            t_[idx(0, 1, 1, a, b, c, d2)] = gr * plus0;
            t_[idx(1, 1, 1, a, b, c, d2)] = gr * minus0;
          }
        }
}

const Rational& NumericEngine::table(int kind, int pa, int pl, int a, int b, int c,
                                     int d) const {
  size_t i = ((((((static_cast<size_t>(kind) * 2 + pa) * 2 + pl) * n_ + (a - 1)) * n_ +
               (b - 1)) *
                  n_ +
              (c - 1)) *
                 n_ +
             (d - 1));
  return t_[i];
}

Rational NumericEngine::atom_on_word(LKind kind, int parity, int a, int b,
                                     const std::vector<Letter>& w) const {
  const int kk = kind == LKind::Plus ? 0 : 1;
  if (parity && !g_.has_gamma()) {
    for (const auto& l : w)
      if (l.parity)
        throw Unsupported("antipoded letters unsupported for " + g_.name());
  }
  // chain product; parity-1 atoms consume the word right-to-left
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n_),
                                       std::vector<Rational>(static_cast<size_t>(n_), 0));
  for (int x = 1; x <= n_; ++x) m[static_cast<size_t>(x - 1)][static_cast<size_t>(x - 1)] = 1;
  auto mul_letter = [&](const Letter& l) {
    std::vector<std::vector<Rational>> out(static_cast<size_t>(n_),
                                           std::vector<Rational>(static_cast<size_t>(n_), 0));
    for (int x = 1; x <= n_; ++x)
      for (int y = 1; y <= n_; ++y) {
        if (m[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] == 0) continue;
        for (int yy = 1; yy <= n_; ++yy) {
          const Rational& cellv = table(kk, parity, l.parity, y, yy, l.row, l.col);
          if (cellv == 0) continue;
          out[static_cast<size_t>(x - 1)][static_cast<size_t>(yy - 1)] +=
              m[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] * cellv;
        }
      }
    m = std::move(out);
  };
  if (!parity) {
    for (const auto& l : w) mul_letter(l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) mul_letter(*it);
  }
  return m[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
}

Rational NumericEngine::grouplike_value(const GroupLike& z, int c) const {
  Rational v = 1;
  for (int k = 1; k <= z.n(); ++k) {
    int ep = z.plus_exp[static_cast<size_t>(k - 1)];
    int em = z.minus_exp[static_cast<size_t>(k - 1)];
    if (ep != 0) {
      Rational base = table(0, 0, 0, k, k, c, c);
      v *= rational_pow(base, ep);
    }
    if (em != 0) {
      Rational base = table(1, 0, 0, k, k, c, c);
      v *= rational_pow(base, em);
    }
  }
  if (z.sign_at(c) == -1) v = -v;
  return v;
}

Rational NumericEngine::mono_on_word(const FuncMonomial& m, const std::vector<Letter>& w,
                                     int detq_pow) const {
  if (detq_pow != 0 && !g_.has_quantum_determinant())
    throw Error("det_q power outside glq");
  if (m.factors.empty()) {
    for (const auto& l : w)
      if (l.row != l.col) return 0;
    return 1;
  }
  const Factor& head = m.factors.front();
  FuncMonomial rest;
  rest.factors.assign(m.factors.begin() + 1, m.factors.end());

  const size_t p = w.size();
  std::vector<int> ks(p, 1);
  Rational acc = 0;
  while (true) {
    // split each letter across the head/rest legs at index ks
    std::vector<Letter> leg1(p), leg2(p);
    for (size_t s = 0; s < p; ++s) {
      const Letter& l = w[s];
      int k = ks[s];
      if (!l.parity) {
        leg1[s] = Letter(l.row, k, 0);
        leg2[s] = Letter(k, l.col, 0);
      } else {
        leg1[s] = Letter(k, l.col, 1);
        leg2[s] = Letter(l.row, k, 1);
      }
    }
    Rational head_val;
    if (std::holds_alternative<Atom>(head)) {
      const Atom& a = std::get<Atom>(head);
      head_val = atom_on_word(a.kind, a.parity, a.row, a.col, leg1);
      if (head_val != 0 && detq_pow != 0) {
        long long e = (a.kind == LKind::Plus) ? detq_pow : -detq_pow;
        if (a.parity) e = -e;
        head_val *= rational_pow(detq_plus_, e);
      }
    } else {
      const GroupLike& z = std::get<GroupLike>(head);
      head_val = 1;
      for (const auto& l : leg1) {
        if (l.row != l.col) {
          head_val = 0;
          break;
        }
        Rational v = grouplike_value(z, l.row);
        head_val *= l.parity ? 1 / v : v;
      }
      if (head_val != 0 && detq_pow != 0) {
        Rational dv = 1;
        for (int c = 1; c <= n_; ++c) dv *= grouplike_value(z, c);
        head_val *= rational_pow(dv, detq_pow);
      }
    }
    if (head_val != 0) {
      Rational tail = mono_on_word(rest, leg2, detq_pow);
      acc += head_val * tail;
    }
    // next split vector
    size_t s = 0;
    while (s < p) {
      if (++ks[s] <= n_) break;
      ks[s] = 1;
      ++s;
    }
    if (s == p) break;
    if (p == 0) break;
  }
  return acc;
}

Rational NumericEngine::eval(const FunctionalElement& f, const AlgebraElement& a) const {
  Rational acc = 0;
  for (const auto& [m, cf] : f.terms())
    for (const auto& [w, cw] : a.terms())
      acc += cf.specialize(q0_) * cw.specialize(q0_) * mono_on_word(m, w.letters, w.detq_pow);
  return acc;
}

bool NumericEngine::pairing_all_zero(const AlgebraElement& e, int bound) const {
  // numeric mirror of the symbolic prefix scan, over the dense tables
  struct WordState {
    std::vector<Letter> letters;
    int detq_pow = 0;
    Rational coeff;
    std::map<std::vector<std::uint8_t>, Rational> st;
    std::vector<std::uint8_t> target;
  };
  std::vector<WordState> words;
  for (const auto& [w, c] : e.terms()) {
    WordState ws;
    ws.letters = w.letters;
    ws.detq_pow = w.detq_pow;
    ws.coeff = c.specialize(q0_);
    std::vector<std::uint8_t> start;
    for (const auto& l : ws.letters) {
      start.push_back(l.parity ? l.col : l.row);
      ws.target.push_back(l.parity ? l.row : l.col);
    }
    ws.st.emplace(start, Rational(1));
    words.push_back(std::move(ws));
  }

  std::vector<Atom> alphabet;
  for (int kk = 0; kk < 2; ++kk)
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b) {
        bool nz = false;
        for (int c = 1; c <= n_ && !nz; ++c)
          for (int d = 1; d <= n_ && !nz; ++d)
            if (table(kk, 0, 0, a, b, c, d) != 0) nz = true;
        if (nz) alphabet.emplace_back(kk == 0 ? LKind::Plus : LKind::Minus, a, b, 0);
      }

  auto value_at = [&](const std::vector<WordState>& states) {
    Rational acc = 0;
    for (const auto& ws : states) {
      auto it = ws.st.find(ws.target);
      if (it != ws.st.end()) acc += ws.coeff * it->second;
    }
    return acc;
  };

  auto extend = [&](const std::vector<WordState>& states, const Atom& atom) {
    std::vector<WordState> out = states;
    int kk = atom.kind == LKind::Plus ? 0 : 1;
    for (auto& ws : out) {
      std::map<std::vector<std::uint8_t>, Rational> next;
      Rational dfac = 1;
      if (ws.detq_pow != 0) {
        long long e2 = (atom.kind == LKind::Plus) ? ws.detq_pow : -ws.detq_pow;
        dfac = rational_pow(detq_plus_, e2);
      }
      for (const auto& [vvec, amp] : ws.st) {
        std::vector<std::uint8_t> nv(vvec.size(), 0);
        std::function<void(size_t, int, const Rational&)> dfs = [&](size_t s, int h,
                                                                    const Rational& acc) {
          if (s == ws.letters.size()) {
            if (h != atom.col) return;
            auto [it, inserted] = next.emplace(nv, acc);
            if (!inserted) {
              it->second += acc;
              if (it->second == 0) next.erase(it);
            }
            return;
          }
          const Letter& l = ws.letters[s];
          int lp = l.parity;
          int v = vvec[s];
          for (int h_next = 1; h_next <= n_; ++h_next)
            for (int v_next = 1; v_next <= n_; ++v_next) {
              int c_leg = lp ? v_next : v;
              int d_leg = lp ? v : v_next;
              const Rational& val = table(kk, 0, lp, h, h_next, c_leg, d_leg);
              if (val == 0) continue;
              nv[s] = static_cast<std::uint8_t>(v_next);
              dfs(s + 1, v_next, acc * val);
            }
        };
        dfs(0, atom.row, amp * dfac);
      }
      ws.st = std::move(next);
    }
    return out;
  };

  std::function<bool(const std::vector<WordState>&, int)> scan =
      [&](const std::vector<WordState>& states, int depth) -> bool {
    if (value_at(states) != 0) return false;
    if (depth == bound) return true;
    bool alive = false;
    for (const auto& ws : states)
      if (!ws.st.empty()) alive = true;
    if (!alive) return true;
    for (const auto& atom : alphabet)
      if (!scan(extend(states, atom), depth + 1)) return false;
    return true;
  };
  return scan(words, 0);
}

}  // namespace qfodc
