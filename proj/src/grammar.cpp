#include "qfodc/grammar.hpp"

#include <cctype>

#include "qfodc/error.hpp"

namespace qfodc {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  const GroupSpec& g;

  Cursor(const std::string& str, const GroupSpec& grp) : s(str), g(grp) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_str(const std::string& t) {
    skip_ws();
    if (s.compare(pos, t.size(), t) == 0) {
      pos += t.size();
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(why + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  // integer or the symbol n/N
  int index() {
    skip_ws();
    if (pos < s.size() && (s[pos] == 'n' || s[pos] == 'N')) {
      ++pos;
      // allow n-1 style offsets
      if (peek() == '-') {
        ++pos;
        long long off = integer();
        return g.n() - static_cast<int>(off);
      }
      return g.n();
    }
    long long v = integer();
    return static_cast<int>(v);
  }

  // leading scalar coefficient up to the first '*' followed by a letter
  Scalar coefficient() {
    skip_ws();
    size_t save = pos;
    // scan ahead: the coefficient is everything before "* <letter token>"
    // when the term does not start with a letter token
    char c = peek();
    if (c == 'u' || c == 'L' || c == 'S' || c == 's' || c == 'd' || c == 'e') return Scalar(1);
    // find the last '*' before the first letter token
    size_t scan = pos;
    int depth = 0;
    size_t split = std::string::npos;
    for (; scan < s.size(); ++scan) {
      char ch = s[scan];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == 'u' || ch == 'L' || ch == 'S' || ch == 'd' || ch == 'e')) break;
      if (depth == 0 && ch == '*') split = scan;
      if (depth == 0 && (ch == '+' || (ch == '-' && scan > pos && s[scan - 1] != '^' &&
                                       s[scan - 1] != '(' && s[scan - 1] != '*')))
        break;  // next additive term: the whole term is a scalar
    }
    if (split == std::string::npos) {
      return Scalar(1);  // no coefficient prefix
    }
    std::string coeff = s.substr(pos, split - pos);
    pos = split + 1;
    (void)save;
    return Scalar::from_string(coeff);
  }
};

Letter parse_letter_token(Cursor& c) {
  int parity = 0;
  if (c.eat_str("S(")) {
    parity = 1;
    if (!c.eat_str("u[")) c.fail("expected u[ after S(");
  } else if (!c.eat_str("u[")) {
    c.fail("expected letter token");
  }
  int i = c.index();
  if (!c.eat(',')) c.fail("expected ,");
  int j = c.index();
  if (!c.eat(']')) c.fail("expected ]");
  if (parity && !c.eat(')')) c.fail("expected )");
  if (i < 1 || i > c.g.n() || j < 1 || j > c.g.n()) c.fail("letter index out of range");
  return Letter(i, j, parity);
}

Factor parse_functional_factor(Cursor& c) {
  int parity = 0;
  if (c.eat_str("sgn[")) {
    int k = c.index();
    if (!c.eat(']')) c.fail("expected ]");
    return Factor(GroupLike::sign_character(c.g.n(), k));
  }
  if (c.eat_str("eps")) return Factor(GroupLike(c.g.n()));
  bool antipode = false;
  if (c.eat_str("S(")) antipode = true;
  LKind kind;
  if (c.eat_str("L+[")) {
    kind = LKind::Plus;
  } else if (c.eat_str("L-[")) {
    kind = LKind::Minus;
  } else {
    c.fail("expected L+[ or L-[");
  }
  int i = c.index();
  if (!c.eat(',')) c.fail("expected ,");
  int j = c.index();
  if (!c.eat(']')) c.fail("expected ]");
  if (antipode) {
    if (!c.eat(')')) c.fail("expected )");
    parity = 1;
  }
  if (i < 1 || i > c.g.n() || j < 1 || j > c.g.n()) c.fail("index out of range");
  int power = 1;
  if (c.eat('^')) power = static_cast<int>(c.integer());
  if (i == j && !antipode) {
    // diagonal atoms may carry integer powers as group-likes
    return Factor(GroupLike::diagonal_atom(c.g.n(), kind, i, power));
  }
  if (power != 1) c.fail("powers are only defined for diagonal factors");
  return Factor(Atom(kind, i, j, parity));
}

}  // namespace

AlgebraElement parse_algebra_element(const std::string& s, const GroupSpec& g) {
  Cursor c(s, g);
  AlgebraElement acc;
  bool negate = false;
  if (c.eat('-')) negate = true;
  else c.eat('+');
  while (true) {
    Scalar coeff = c.coefficient();
    Word w;
    bool expect_factor = true;
    while (expect_factor) {
      char p = c.peek();
      if (p == 'u' || p == 'S') {
        w.letters.push_back(parse_letter_token(c));
      } else if (c.eat_str("detq^")) {
        w.detq_pow += static_cast<int>(c.integer());
      } else if (c.eat_str("detq")) {
        w.detq_pow += 1;
      } else if (c.eat_str("1")) {
        // unit word
      } else {
        c.fail("expected word factor");
      }
      expect_factor = c.eat('.') || c.eat('*');
      if (expect_factor && (c.peek() == '\0')) c.fail("dangling product");
    }
    acc.add_term(w, negate ? -coeff : coeff);
    if (c.eat('+')) {
      negate = false;
    } else if (c.eat('-')) {
      negate = true;
    } else {
      break;
    }
  }
  c.skip_ws();
  if (c.pos != s.size()) c.fail("trailing junk");
  return acc;
}

FunctionalElement parse_functional(const std::string& s, const GroupSpec& g) {
  Cursor c(s, g);
  FunctionalElement acc;
  bool negate = false;
  if (c.eat('-')) negate = true;
  else c.eat('+');
  while (true) {
    Scalar coeff = c.coefficient();
    FuncMonomial m;
    bool expect_factor = true;
    while (expect_factor) {
      m.factors.push_back(parse_functional_factor(c));
      expect_factor = c.eat('.') || c.eat('*');
    }
    m.normalize();
    acc.add_term(std::move(m), negate ? -coeff : coeff);
    if (c.eat('+')) {
      negate = false;
    } else if (c.eat('-')) {
      negate = true;
    } else {
      break;
    }
  }
  c.skip_ws();
  if (c.pos != s.size()) c.fail("trailing junk");
  return acc;
}

GroupLike parse_grouplike(const std::string& s, const GroupSpec& g) {
  FunctionalElement f = parse_functional(s, g);
  if (f.terms().size() != 1) throw Error("group-like literal must be a single monomial");
  const auto& [m, coeff] = *f.terms().begin();
  if (!(coeff == ScalarFraction(Scalar(1))))
    throw Error("group-like literal must have coefficient 1");
  GroupLike z(g.n());
  for (const auto& fac : m.factors) {
    if (!std::holds_alternative<GroupLike>(fac))
      throw Error("group-like literal may only contain diagonal factors");
    z = z * std::get<GroupLike>(fac);
  }
  return z;
}

}  // namespace qfodc
