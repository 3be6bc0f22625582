#include "qfodc/pairing.hpp"

#include <functional>

#include "qfodc/error.hpp"
#include "qfodc/linalg.hpp"

namespace qfodc {

struct PairingEngine::Row {
  bool is_grouplike = false;
  LKind kind = LKind::Plus;
  std::uint8_t parity = 0;
  std::uint8_t start = 0;  // chain entry: row for parity 0, col for parity 1
  std::uint8_t end = 0;    // chain exit: col for parity 0, row for parity 1
  GroupLike gl;
};

struct PairingEngine::Column {
  bool is_detq = false;
  Letter letter;
  int detq_pow = 0;
  std::uint8_t entry = 0;  // chain entry: row for parity 0, col for parity 1
  std::uint8_t exit = 0;
};

PairingEngine::PairingEngine(const GroupSpec& g)
    : g_(g), rhat_(build_rhat(g)), rinv_(rhat_.inverse()) {
  // Hecke identity pins the inverse for the A-series.
  if (g_.family() == GroupFamily::GLq || g_.family() == GroupFamily::SLq) {
    Scalar qdiff = Scalar::q_power(1) - Scalar::q_power(-1);
    RMatrix id(g_.n());
    for (int i = 1; i <= g_.n(); ++i)
      for (int j = 1; j <= g_.n(); ++j) id.set_entry(i, j, i, j, qdiff);
    if (!(rhat_ - id == rinv_)) throw Error("Hecke identity failed for " + g_.name());
  }
  for (int pm = 0; pm < 2; ++pm) {
    LKind kind = pm == 0 ? LKind::Plus : LKind::Minus;
    for (int a = 1; a <= g_.n(); ++a)
      for (int b = 1; b <= g_.n(); ++b) {
        bool nonzero = false;
        for (int c = 1; c <= g_.n() && !nonzero; ++c)
          for (int d = 1; d <= g_.n() && !nonzero; ++d)
            if (!cell(kind, 0, a, b, 0, c, d).is_zero()) nonzero = true;
        if (nonzero) alphabet_.emplace_back(kind, a, b, 0);
      }
  }
}

Scalar PairingEngine::cell(LKind kind, int pa, int a, int b, int pl, int c, int d) const {
  int t = pa + pl;
  const Scalar& z = g_.z_factor();
  auto base = [&](int aa, int bb, int cc, int dd) {
    if (kind == LKind::Plus) {
      Scalar v = rhat_.entry(aa, cc, dd, bb);
      return z.is_one() ? v : v * z;
    }
    Scalar v = rinv_.entry(aa, cc, dd, bb);
    return z.is_one() ? v : v * z.inverse();
  };
  auto base_s = [&](int aa, int bb, int cc, int dd) {
    if (kind == LKind::Plus) {
      Scalar v = rinv_.entry(cc, aa, bb, dd);
      return z.is_one() ? v : v * z.inverse();
    }
    Scalar v = rhat_.entry(cc, aa, bb, dd);
    return z.is_one() ? v : v * z;
  };
  switch (t) {
    case 0:
      return base(a, b, c, d);
    case 1:
      return base_s(a, b, c, d);
    default: {
      if (!g_.has_gamma())
        throw Unsupported("square-of-antipode pairing needs gamma weights (" +
                          g_.name() + ")");
      // <S(f), S(x)> = <f, S^2(x)> with S^2(u^c_d) = (gamma_c/gamma_d) u^c_d
      return g_.gamma(c) * g_.gamma(d).inverse() * base(a, b, c, d);
    }
  }
}

Scalar PairingEngine::atom_pairing(const Atom& atom, const Letter& letter) const {
  if (letter.parity && !g_.has_gamma() && atom.parity)
    throw Unsupported("pairing with an antipoded letter is unsupported for " + g_.name());
  return cell(atom.kind, atom.parity, atom.row, atom.col, letter.parity, letter.row,
              letter.col);
}

Scalar PairingEngine::diag_value(LKind kind, int k, int c) const {
  return cell(kind, 0, k, k, 0, c, c);
}

Scalar PairingEngine::grouplike_value(const GroupLike& z, int c) const {
  Scalar v(1);
  for (int k = 1; k <= z.n(); ++k) {
    int ep = z.plus_exp[static_cast<size_t>(k - 1)];
    int em = z.minus_exp[static_cast<size_t>(k - 1)];
    if (ep != 0) v *= diag_value(LKind::Plus, k, c).pow(ep);
    if (em != 0) v *= diag_value(LKind::Minus, k, c).pow(em);
  }
  if (z.sign_at(c) == -1) v = -v;
  return v;
}

Scalar PairingEngine::grouplike_on_detq(const GroupLike& z) const {
  Scalar v(1);
  for (int c = 1; c <= g_.n(); ++c) v *= grouplike_value(z, c);
  return v;
}

std::vector<PairingEngine::Row> PairingEngine::make_rows(const FuncMonomial& m) const {
  std::vector<Row> rows;
  rows.reserve(m.factors.size());
  for (const auto& f : m.factors) {
    Row r;
    if (std::holds_alternative<GroupLike>(f)) {
      r.is_grouplike = true;
      r.gl = std::get<GroupLike>(f);
      if (r.gl.n() != g_.n()) throw Error("group-like size mismatch");
    } else {
      const Atom& a = std::get<Atom>(f);
      r.kind = a.kind;
      r.parity = a.parity;
      r.start = a.parity ? a.col : a.row;
      r.end = a.parity ? a.row : a.col;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<PairingEngine::Column> PairingEngine::make_columns(const Word& w) const {
  std::vector<Column> cols;
  cols.reserve(w.letters.size() + 1);
  for (const auto& l : w.letters) {
    Column c;
    c.letter = l;
    c.entry = l.parity ? l.col : l.row;
    c.exit = l.parity ? l.row : l.col;
    cols.push_back(c);
  }
  if (w.detq_pow != 0) {
    if (!g_.has_quantum_determinant())
      throw Error("det_q power outside glq in pairing");
    Column c;
    c.is_detq = true;
    c.detq_pow = w.detq_pow;
    cols.push_back(c);
  }
  return cols;
}

PairingEngine::State PairingEngine::initial_state(const std::vector<Row>& rows) const {
  std::vector<std::uint8_t> pos(rows.size(), 0);
  for (size_t t = 0; t < rows.size(); ++t)
    pos[t] = rows[t].is_grouplike ? 0 : rows[t].start;
  State st;
  st.emplace(std::move(pos), Scalar(1));
  return st;
}

PairingEngine::State PairingEngine::process_column(const std::vector<Row>& rows,
                                                   const State& in,
                                                   const Column& col) const {
  State out;
  const int n = g_.n();
  const size_t m = rows.size();

  if (col.is_detq) {
    // group-like column: every row passes through diagonally
    for (const auto& [pos, amp] : in) {
      Scalar f = amp;
      for (size_t t = 0; t < m; ++t) {
        if (rows[t].is_grouplike) {
          f *= grouplike_on_detq(rows[t].gl).pow(col.detq_pow);
          continue;
        }
        // <l^{+a}_a, det_q> = q, <l^{-a}_a, det_q> = q^{-1}; S flips the sign
        long long e = (rows[t].kind == LKind::Plus) ? col.detq_pow : -col.detq_pow;
        if (rows[t].parity) e = -e;
        f *= Scalar::q_power(e);
      }
      if (!f.is_zero()) {
        auto it = out.find(pos);
        if (it == out.end())
          out.emplace(pos, f);
        else {
          it->second += f;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  }

  const int lp = col.letter.parity;
  std::vector<std::uint8_t> newpos(m, 0);
  for (const auto& [pos, amp] : in) {
    // depth-first over rows; v = current letter-chain index
    std::function<void(size_t, int, const Scalar&)> dfs = [&](size_t t, int v,
                                                              const Scalar& acc) {
      if (t == m) {
        if (v != col.exit) return;
        auto it = out.find(newpos);
        if (it == out.end()) {
          out.emplace(newpos, acc);
        } else {
          it->second += acc;
          if (it->second.is_zero()) out.erase(it);
        }
        return;
      }
      const Row& r = rows[t];
      if (r.is_grouplike) {
        // diagonal: v fixed
        Scalar val = grouplike_value(r.gl, v);
        if (lp) val = val.inverse();
        newpos[t] = pos[t];
        dfs(t + 1, v, acc * val);
        return;
      }
      int h_old = pos[t];
      for (int h_next = 1; h_next <= n; ++h_next) {
        int a_leg = r.parity ? h_next : h_old;
        int b_leg = r.parity ? h_old : h_next;
        for (int v_next = 1; v_next <= n; ++v_next) {
          int c_leg = lp ? v_next : v;
          int d_leg = lp ? v : v_next;
          Scalar val = cell(r.kind, r.parity, a_leg, b_leg, lp, c_leg, d_leg);
          if (val.is_zero()) continue;
          newpos[t] = static_cast<std::uint8_t>(h_next);
          dfs(t + 1, v_next, acc * val);
        }
      }
    };
    dfs(0, col.entry, amp);
  }
  return out;
}

Scalar PairingEngine::readout(const std::vector<Row>& rows, const State& st) const {
  std::vector<std::uint8_t> target(rows.size(), 0);
  for (size_t t = 0; t < rows.size(); ++t)
    target[t] = rows[t].is_grouplike ? 0 : rows[t].end;
  auto it = st.find(target);
  return it == st.end() ? Scalar() : it->second;
}

Scalar PairingEngine::eval_monomial_word(const FuncMonomial& m, const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find({m, w});
    if (it != memo_.end()) return it->second;
  }
  auto rows = make_rows(m);
  auto cols = make_columns(w);
  State st = initial_state(rows);
  for (const auto& col : cols) {
    st = process_column(rows, st, col);
    if (st.empty()) break;
  }
  Scalar result = readout(rows, st);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::make_pair(m, w), result);
  }
  return result;
}

ScalarFraction PairingEngine::eval(const FunctionalElement& f,
                                   const AlgebraElement& a) const {
  ScalarFraction acc;
  for (const auto& [m, cf] : f.terms())
    for (const auto& [w, cw] : a.terms())
      acc += cf * ScalarFraction(cw * eval_monomial_word(m, w));
  return acc;
}

std::optional<FuncMonomial> PairingEngine::pairing_nonzero_witness(
    const AlgebraElement& e, int bound) const {
  // Row-incremental scan: the state of word w after t functional rows is a
  // sparse map over per-column chain positions.
  struct WordState {
    std::vector<Column> cols;
    std::vector<std::uint8_t> target;
    Scalar coeff;
    State st;
  };
  const int n = g_.n();
  std::vector<WordState> words;
  for (const auto& [w, c] : e.terms()) {
    WordState ws;
    ws.cols = make_columns(w);
    ws.coeff = c;
    std::vector<std::uint8_t> start, target;
    for (const auto& col : ws.cols) {
      if (col.is_detq) continue;
      start.push_back(col.entry);
      target.push_back(col.exit);
    }
    ws.target = target;
    ws.st.emplace(start, Scalar(1));
    words.push_back(std::move(ws));
  }

  auto value_at = [&](const std::vector<WordState>& states) {
    Scalar acc;
    for (const auto& ws : states) {
      auto it = ws.st.find(ws.target);
      if (it != ws.st.end()) acc += ws.coeff * it->second;
    }
    return acc;
  };

  // Extend all word states by one parity-0 atom row.
  auto extend = [&](const std::vector<WordState>& states, const Atom& atom) {
    std::vector<WordState> out = states;
    for (auto& ws : out) {
      State next;
      for (const auto& [vvec, amp] : ws.st) {
        std::vector<std::uint8_t> nv(vvec.size(), 0);
        Scalar detq_factor(1);
        // per-row det_q factor, position-independent
        for (const auto& col : ws.cols)
          if (col.is_detq) {
            long long e2 = (atom.kind == LKind::Plus) ? col.detq_pow : -col.detq_pow;
            detq_factor *= Scalar::q_power(e2);
          }
        std::function<void(size_t, size_t, int, const Scalar&)> dfs =
            [&](size_t ci, size_t vi, int h, const Scalar& acc) {
              if (ci == ws.cols.size()) {
                if (h != atom.col) return;
                auto it = next.find(nv);
                if (it == next.end()) {
                  next.emplace(nv, acc);
                } else {
                  it->second += acc;
                  if (it->second.is_zero()) next.erase(it);
                }
                return;
              }
              const Column& col = ws.cols[ci];
              if (col.is_detq) {
                dfs(ci + 1, vi, h, acc);
                return;
              }
              int lp = col.letter.parity;
              int v = vvec[vi];
              for (int h_next = 1; h_next <= n; ++h_next)
                for (int v_next = 1; v_next <= n; ++v_next) {
                  int c_leg = lp ? v_next : v;
                  int d_leg = lp ? v : v_next;
                  Scalar val = cell(atom.kind, 0, h, h_next, lp, c_leg, d_leg);
                  if (val.is_zero()) continue;
                  nv[vi] = static_cast<std::uint8_t>(v_next);
                  dfs(ci + 1, vi + 1, h_next, acc * val);
                }
            };
        dfs(0, 0, atom.row, amp * detq_factor);
      }
      ws.st = std::move(next);
    }
    return out;
  };

  FuncMonomial prefix;
  std::function<std::optional<FuncMonomial>(const std::vector<WordState>&, int)> scan =
      [&](const std::vector<WordState>& states, int depth) -> std::optional<FuncMonomial> {
    if (!value_at(states).is_zero()) return prefix;
    if (depth == bound) return std::nullopt;
    bool alive = false;
    for (const auto& ws : states)
      if (!ws.st.empty()) alive = true;
    if (!alive) return std::nullopt;
    for (const auto& atom : alphabet_) {
      prefix.factors.emplace_back(atom);
      auto r = scan(extend(states, atom), depth + 1);
      if (r) return r;
      prefix.factors.pop_back();
    }
    return std::nullopt;
  };
  return scan(words, 0);
}

std::map<Word, ScalarFraction> PairingEngine::value_table(const FunctionalElement& f,
                                                          int bound) const {
  std::map<Word, ScalarFraction> table;
  // one rows/state pair per functional monomial; extend the word letterwise
  struct MonoState {
    std::vector<Row> rows;
    ScalarFraction coeff;
    State st;
  };
  std::vector<MonoState> monos;
  for (const auto& [m, c] : f.terms()) {
    MonoState ms;
    ms.rows = make_rows(m);
    ms.coeff = c;
    ms.st = initial_state(ms.rows);
    monos.push_back(std::move(ms));
  }

  Word w;
  std::function<void(const std::vector<MonoState>&, int)> walk =
      [&](const std::vector<MonoState>& states, int depth) {
        ScalarFraction v;
        for (const auto& ms : states)
          v += ms.coeff * ScalarFraction(readout(ms.rows, ms.st));
        if (!v.is_zero()) table.emplace(w, v);
        if (depth == bound) return;
        bool alive = false;
        for (const auto& ms : states)
          if (!ms.st.empty()) alive = true;
        if (!alive && depth > 0) return;
        for (int i = 1; i <= g_.n(); ++i)
          for (int j = 1; j <= g_.n(); ++j) {
            Column col;
            col.letter = Letter(i, j, 0);
            col.entry = static_cast<std::uint8_t>(i);
            col.exit = static_cast<std::uint8_t>(j);
            std::vector<MonoState> next = states;
            bool any = false;
            for (auto& ms : next) {
              ms.st = process_column(ms.rows, ms.st, col);
              if (!ms.st.empty()) any = true;
            }
            if (!any) continue;
            w.letters.emplace_back(i, j, 0);
            walk(next, depth + 1);
            w.letters.pop_back();
          }
      };
  walk(monos, 0);
  return table;
}

std::vector<Word> enumerate_words(int n, int bound) {
  std::vector<Word> out;
  out.emplace_back();
  std::vector<Word> level = {Word{}};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Word w2 = w;
          w2.letters.emplace_back(i, j, 0);
          next.push_back(w2);
        }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

SpanResult express_in_span(const PairingEngine& eng, const FunctionalElement& target,
                           const std::vector<FunctionalElement>& basis, int degree_bound) {
  SpanResult res;
  res.degree_bound = degree_bound;

  std::vector<std::map<Word, ScalarFraction>> tables;
  tables.reserve(basis.size());
  for (const auto& b : basis) tables.push_back(eng.value_table(b, degree_bound));
  auto target_table = eng.value_table(target, degree_bound);

  // rows = words where anything is nonzero
  std::map<Word, bool> support;
  for (const auto& t : tables)
    for (const auto& [w, v] : t) support[w] = true;
  for (const auto& [w, v] : target_table) support[w] = true;

  FracMatrix a(support.size(), basis.size());
  std::vector<ScalarFraction> rhs(support.size());
  size_t r = 0;
  std::vector<Word> row_words;
  row_words.reserve(support.size());
  for (const auto& [w, unused] : support) {
    for (size_t k = 0; k < basis.size(); ++k) {
      auto it = tables[k].find(w);
      if (it != tables[k].end()) a.at(r, k) = it->second;
    }
    auto it = target_table.find(w);
    if (it != target_table.end()) rhs[r] = it->second;
    row_words.push_back(w);
    ++r;
  }

  auto sol = solve_linear(a, rhs);
  if (!sol) {
    res.in_span = false;
    // locate one inconsistent word for the witness: rerun with the residual
    res.witness = "inconsistent system over words up to degree " +
                  std::to_string(degree_bound);
    return res;
  }
  res.in_span = true;
  res.coefficients = *sol;
  return res;
}

}  // namespace qfodc
