#include "qfodc/functional.hpp"

#include <algorithm>
#include <sstream>

#include "qfodc/error.hpp"

namespace qfodc {

std::string Atom::to_string() const {
  std::ostringstream os;
  if (parity) os << "S(";
  os << "L" << (kind == LKind::Plus ? "+" : "-") << "[" << int(row) << "," << int(col) << "]";
  if (parity) os << ")";
  return os.str();
}

bool GroupLike::is_epsilon() const {
  for (int e : plus_exp)
    if (e != 0) return false;
  for (int e : minus_exp)
    if (e != 0) return false;
  for (auto s : sign)
    if (s != 1) return false;
  return true;
}

int GroupLike::sign_at(int k) const {
  if (sign.empty()) return 1;
  return sign[static_cast<size_t>(k - 1)];
}

std::vector<std::int8_t> GroupLike::sign_vector() const {
  if (!sign.empty()) return sign;
  return std::vector<std::int8_t>(plus_exp.size(), 1);
}

GroupLike GroupLike::inverse() const {
  GroupLike r = *this;
  for (auto& e : r.plus_exp) e = -e;
  for (auto& e : r.minus_exp) e = -e;
  // signs are their own inverses
  return r;
}

GroupLike GroupLike::operator*(const GroupLike& o) const {
  if (n() != o.n()) throw Error("group-like size mismatch");
  GroupLike r = *this;
  for (int k = 0; k < n(); ++k) {
    r.plus_exp[static_cast<size_t>(k)] += o.plus_exp[static_cast<size_t>(k)];
    r.minus_exp[static_cast<size_t>(k)] += o.minus_exp[static_cast<size_t>(k)];
  }
  auto sa = sign_vector(), sb = o.sign_vector();
  std::vector<std::int8_t> s(sa.size());
  bool nontrivial = false;
  for (size_t k = 0; k < sa.size(); ++k) {
    s[k] = static_cast<std::int8_t>(sa[k] * sb[k]);
    if (s[k] != 1) nontrivial = true;
  }
  r.sign = nontrivial ? s : std::vector<std::int8_t>{};
  return r;
}

std::string GroupLike::to_string() const {
  if (is_epsilon()) return "eps";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* tag, int k, int e) {
    if (e == 0) return;
    if (!first) os << ".";
    os << "L" << tag << "[" << k << "," << k << "]";
    if (e != 1) os << "^" << e;
    first = false;
  };
  for (int k = 1; k <= n(); ++k) emit("+", k, plus_exp[static_cast<size_t>(k - 1)]);
  for (int k = 1; k <= n(); ++k) emit("-", k, minus_exp[static_cast<size_t>(k - 1)]);
  for (int k = 1; k <= n(); ++k) {
    if (sign_at(k) == -1) {
      if (!first) os << ".";
      os << "sgn[" << k << "]";
      first = false;
    }
  }
  return os.str();
}

GroupLike GroupLike::diagonal_atom(int n, LKind kind, int k, int power) {
  GroupLike z(n);
  if (k < 1 || k > n) throw Error("diagonal index out of range");
  if (kind == LKind::Plus)
    z.plus_exp[static_cast<size_t>(k - 1)] = power;
  else
    z.minus_exp[static_cast<size_t>(k - 1)] = power;
  return z;
}

GroupLike GroupLike::sign_character(int n, int k) {
  GroupLike z(n);
  z.sign.assign(static_cast<size_t>(n), 1);
  z.sign[static_cast<size_t>(k - 1)] = -1;
  int kp = n + 1 - k;
  z.sign[static_cast<size_t>(kp - 1)] = -1;  // k = k' collapses to a single flip
  return z;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<Atom>(a))
    return std::get<Atom>(a) < std::get<Atom>(b);
  return std::get<GroupLike>(a) < std::get<GroupLike>(b);
}

int FuncMonomial::atom_degree() const {
  int d = 0;
  for (const auto& f : factors)
    if (std::holds_alternative<Atom>(f)) ++d;
  return d;
}

FuncMonomial FuncMonomial::concat(const FuncMonomial& o) const {
  FuncMonomial r = *this;
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  r.normalize();
  return r;
}

void FuncMonomial::normalize() {
  std::vector<Factor> out;
  for (auto& f : factors) {
    if (std::holds_alternative<GroupLike>(f)) {
      const auto& z = std::get<GroupLike>(f);
      if (z.is_epsilon()) continue;
      if (!out.empty() && std::holds_alternative<GroupLike>(out.back())) {
        GroupLike merged = std::get<GroupLike>(out.back()) * z;
        out.pop_back();
        if (!merged.is_epsilon()) out.emplace_back(std::move(merged));
        continue;
      }
    }
    out.push_back(f);
  }
  factors = std::move(out);
}

bool FuncMonomial::operator<(const FuncMonomial& o) const {
  return std::lexicographical_compare(factors.begin(), factors.end(),
                                      o.factors.begin(), o.factors.end(), factor_less);
}

std::string FuncMonomial::to_string() const {
  if (factors.empty()) return "eps";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << ".";
    if (std::holds_alternative<Atom>(f))
      os << std::get<Atom>(f).to_string();
    else
      os << std::get<GroupLike>(f).to_string();
    first = false;
  }
  return os.str();
}

FunctionalElement FunctionalElement::from_monomial(const FuncMonomial& m,
                                                   const ScalarFraction& c) {
  FunctionalElement f;
  FuncMonomial mm = m;
  mm.normalize();
  f.add_term(mm, c);
  return f;
}

FunctionalElement FunctionalElement::from_atom(const Atom& a, const ScalarFraction& c) {
  return from_monomial(FuncMonomial({Factor(a)}), c);
}

FunctionalElement FunctionalElement::from_grouplike(const GroupLike& z,
                                                    const ScalarFraction& c) {
  return from_monomial(FuncMonomial({Factor(z)}), c);
}

void FunctionalElement::add_term(FuncMonomial m, const ScalarFraction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FunctionalElement FunctionalElement::operator+(const FunctionalElement& o) const {
  FunctionalElement r = *this;
  r += o;
  return r;
}

FunctionalElement& FunctionalElement::operator+=(const FunctionalElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FunctionalElement FunctionalElement::operator-() const {
  FunctionalElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

FunctionalElement FunctionalElement::operator-(const FunctionalElement& o) const {
  return *this + (-o);
}

FunctionalElement& FunctionalElement::operator-=(const FunctionalElement& o) {
  return *this += -o;
}

FunctionalElement FunctionalElement::operator*(const FunctionalElement& o) const {
  FunctionalElement r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1.concat(m2), c1 * c2);
  return r;
}

FunctionalElement FunctionalElement::scaled(const ScalarFraction& c) const {
  FunctionalElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

int FunctionalElement::max_atom_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.atom_degree());
  return d;
}

std::string FunctionalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    if (c == ScalarFraction(Scalar(1))) {
      os << m.to_string();
    } else {
      os << "(" << c.to_string() << ") * " << m.to_string();
    }
    first = false;
  }
  return os.str();
}

FunctionalElement star_functional(const FunctionalElement& f) {
  FunctionalElement r;
  for (const auto& [m, c] : f.terms()) {
    FuncMonomial sm;
    sm.factors.reserve(m.factors.size());
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
      if (std::holds_alternative<GroupLike>(*it)) {
        sm.factors.emplace_back(std::get<GroupLike>(*it).star());
      } else {
        const Atom& a = std::get<Atom>(*it);
        LKind flipped = (a.kind == LKind::Plus) ? LKind::Minus : LKind::Plus;
        // parity 0: (l^{+-i}_j)^* = S(l^{-+j}_i); parity 1 unwinds through
        // S^{-1}, landing back on parity 0.
        sm.factors.emplace_back(Atom(flipped, a.col, a.row, a.parity ? 0 : 1));
      }
    }
    sm.normalize();
    r.add_term(std::move(sm), c);  // q real: scalars are fixed under star
  }
  return r;
}

}  // namespace qfodc
