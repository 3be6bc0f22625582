#include "qfodc/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qfodc/error.hpp"

namespace qfodc {

std::string Letter::to_string() const {
  std::ostringstream os;
  if (parity) os << "S(";
  os << "u[" << int(row) << "," << int(col) << "]";
  if (parity) os << ")";
  return os.str();
}

std::pair<Letter, Scalar> make_letter(const GroupSpec& g, int i, int j, int s_power) {
  if (i < 1 || i > g.n() || j < 1 || j > g.n()) throw Error("letter index out of range");
  // s_power = 2m + p with p in {0,1}; S^(2m)(u^i_j) = (gamma_i/gamma_j)^m u^i_j.
  long long m = (s_power >= 0) ? s_power / 2 : -((-s_power + 1) / 2);
  int p = static_cast<int>(s_power - 2 * m);
  Scalar pref = Scalar(1);
  if (m != 0) {
    const Scalar& gi = g.gamma(i);
    const Scalar& gj = g.gamma(j);
    pref = gi.pow(m) * gj.pow(-m);
  }
  return {Letter(i, j, p), pref};
}

bool Word::operator<(const Word& o) const {
  if (detq_pow != o.detq_pow) return detq_pow < o.detq_pow;
  return std::lexicographical_compare(letters.begin(), letters.end(),
                                      o.letters.begin(), o.letters.end());
}

Word Word::concat(const Word& o) const {
  Word r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  r.detq_pow += o.detq_pow;
  return r;
}

std::string Word::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters) {
    if (!first) os << ".";
    os << l.to_string();
    first = false;
  }
  if (detq_pow != 0) {
    if (!first) os << " * ";
    os << "detq^" << detq_pow;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AlgebraElement AlgebraElement::from_word(const Word& w, const Scalar& c) {
  AlgebraElement a;
  a.add_term(w, c);
  return a;
}

AlgebraElement AlgebraElement::from_letter(const Letter& l, const Scalar& c) {
  return from_word(Word({l}), c);
}

AlgebraElement AlgebraElement::generator(int i, int j, int parity) {
  return from_letter(Letter(i, j, parity));
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + (-o);
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  return *this += -o;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1.concat(w2), c1 * c2);
  return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

Scalar AlgebraElement::counit() const {
  Scalar acc;
  for (const auto& [w, c] : terms_) {
    bool diag = true;
    for (const auto& l : w.letters)
      if (l.row != l.col) {
        diag = false;
        break;
      }
    if (diag) acc += c;
  }
  return acc;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement r;
  for (const auto& [w, c] : terms_) {
    Word sw;
    sw.detq_pow = -w.detq_pow;
    sw.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      // (u^i_j)^* = S(u^j_i); (S(u^i_j))^* = S^{-1}((u^i_j)^*) = u^j_i.
      sw.letters.emplace_back(it->col, it->row, it->parity ? 0 : 1);
    }
    r.add_term(sw, c.star());
  }
  return r;
}

int AlgebraElement::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.to_string();
    if (!first) os << " + ";
    bool simple = c.is_monomial() || c.is_rational();
    if (c.is_one()) {
      os << w.to_string();
    } else if (simple) {
      os << cs << " * " << w.to_string();
    } else {
      os << "(" << cs << ") * " << w.to_string();
    }
    first = false;
  }
  return os.str();
}

AlgebraElement x_generator(const GroupSpec& g, int i) {
  if (i < 1 || i > g.n()) throw Error("generator index out of range");
  return AlgebraElement::generator(i, g.n(), 0);
}

AlgebraElement y_generator(const GroupSpec& g, int i) {
  if (i < 1 || i > g.n()) throw Error("generator index out of range");
  return AlgebraElement::generator(g.n(), i, 1);
}

namespace {

// (-q)^len accumulated over inversions of sigma
int permutation_length(const std::vector<int>& sigma) {
  int inv = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++inv;
  return inv;
}

}  // namespace

AlgebraElement quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error("minor needs equal index sets");
  size_t m = rows.size();
  if (m == 0) return AlgebraElement::unit();
  std::vector<int> perm(m);
  for (size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
  AlgebraElement acc;
  do {
    std::vector<int> sigma(m);
    for (size_t i = 0; i < m; ++i) sigma[i] = perm[i];
    int len = permutation_length(sigma);
    Word w;
    w.letters.reserve(m);
    for (size_t i = 0; i < m; ++i)
      w.letters.emplace_back(rows[i], cols[static_cast<size_t>(sigma[i])], 0);
    Scalar coeff = Scalar::q_power(len);
    if (len % 2 != 0) coeff = -coeff;
    acc.add_term(w, coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

AlgebraElement quantum_determinant(const GroupSpec& g) {
  std::vector<int> idx(static_cast<size_t>(g.n()));
  for (int i = 1; i <= g.n(); ++i) idx[static_cast<size_t>(i - 1)] = i;
  return quantum_minor(idx, idx);
}

AlgebraElement antipode_expand(const AlgebraElement& a, const GroupSpec& g) {
  if (!g.has_pbw_backend())
    throw Unsupported("antipode expansion is defined for glq/slq only");
  const int n = g.n();
  auto expand_letter = [&](const Letter& l) -> AlgebraElement {
    if (!l.parity) return AlgebraElement::from_letter(l);
    // S(u^i_j) = (-q)^(i-j) * minor(without row j, col i) * det_q^{-1}
    int i = l.row, j = l.col;
    std::vector<int> rows, cols;
    for (int r = 1; r <= n; ++r)
      if (r != j) rows.push_back(r);
    for (int c = 1; c <= n; ++c)
      if (c != i) cols.push_back(c);
    AlgebraElement minor = quantum_minor(rows, cols);
    Scalar coeff = Scalar::q_power(i - j);
    if ((i - j) % 2 != 0) coeff = -coeff;
    AlgebraElement out;
    for (const auto& [w, c] : minor.terms()) {
      Word w2 = w;
      if (g.has_quantum_determinant()) w2.detq_pow -= 1;
      out.add_term(w2, c * coeff);
    }
    return out;
  };

  AlgebraElement result;
  for (const auto& [w, c] : a.terms()) {
    if (!g.has_quantum_determinant() && w.detq_pow != 0)
      throw Error("det_q power outside glq");
    AlgebraElement prod = AlgebraElement::from_word(Word({}, w.detq_pow), c);
    for (const auto& l : w.letters) prod = prod * expand_letter(l);
    result += prod;
  }
  return result;
}

AlgebraElement project_pi(const AlgebraElement& a, const GroupSpec& g) {
  if (!g.has_pbw_backend()) throw Unsupported("projection is defined for glq/slq only");
  if (g.n() < 2) throw Error("projection needs N >= 2");
  const int n = g.n();
  AlgebraElement r;
  for (const auto& [w, c] : a.terms()) {
    Word out;
    out.detq_pow = w.detq_pow;  // pi(det_q) is the smaller det_q
    bool killed = false;
    for (const auto& l : w.letters) {
      bool row_edge = (l.row == n), col_edge = (l.col == n);
      if (row_edge && col_edge) continue;        // u^N_N -> 1, S(u^N_N) -> 1
      if (row_edge || col_edge) {
        killed = true;                           // boundary entry -> 0
        break;
      }
      out.letters.push_back(l);
    }
    if (!killed) r.add_term(out, c);
  }
  return r;
}

}  // namespace qfodc
