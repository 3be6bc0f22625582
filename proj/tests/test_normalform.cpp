#include <random>

#include "doctest.h"
#include "qfodc/error.hpp"
#include "qfodc/normalform.hpp"
#include "qfodc/pairing.hpp"

using namespace qfodc;

namespace {
Scalar q(long long k = 1) { return Scalar::q_power(k); }
AlgebraElement gen(int i, int j) { return AlgebraElement::generator(i, j); }
}  // namespace

TEST_CASE("rtt relation list contains the row rule") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  auto rels = rtt_relations(g);
  // u^1_1 u^1_2 - q u^1_2 u^1_1 up to scalar normalization
  AlgebraElement target = gen(1, 1) * gen(1, 2) - q(1) * (gen(1, 2) * gen(1, 1));
  bool found = false;
  for (const auto& r : rels) {
    if (r.terms().size() != 2) continue;
    for (const Scalar& c : {r.terms().begin()->second}) {
      AlgebraElement scaled = r.scaled(c.is_zero() ? Scalar(1) : c.inverse());
      if (scaled == target.scaled(target.terms().begin()->second.inverse())) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("relations specialize to commutators at q = 1") {
  for (auto [fam, n] : std::vector<std::pair<GroupFamily, int>>{{GroupFamily::GLq, 2},
                                                                {GroupFamily::GLq, 3}}) {
    auto g = GroupSpec::make(fam, n);
    for (const auto& r : rtt_relations(g)) {
      // at q = 1 every surviving term must cancel against its letter swap
      std::map<Word, Rational> spec;
      for (const auto& [w, c] : r.terms()) {
        Rational v = c.specialize(1);
        if (v != 0) spec[w] += v;
      }
      for (const auto& [w, v] : spec) {
        if (v == 0) continue;
        REQUIRE(w.degree() == 2);
        Word swapped(std::vector<Letter>{w.letters[1], w.letters[0]});
        auto it = spec.find(swapped);
        REQUIRE(it != spec.end());
        CHECK(it->second == -v);
      }
    }
  }
}

TEST_CASE("straightening sorts a descending pair") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  AlgebraElement a = gen(1, 2) * gen(1, 1);
  CHECK(normal_form(a, g) == q(-1) * (gen(1, 1) * gen(1, 2)));
}

TEST_CASE("relations normalize to zero") {
  for (int n : {2, 3}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    for (const auto& r : rtt_relations(g)) CHECK(normal_form(r, g).is_zero());
  }
}

TEST_CASE("normal form is idempotent") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> idx(1, 2), len(0, 4);
  for (int iter = 0; iter < 50; ++iter) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.letters.emplace_back(idx(rng), idx(rng), 0);
    AlgebraElement nf = normal_form(AlgebraElement::from_word(w), g);
    CHECK(normal_form(nf, g) == nf);
  }
}

TEST_CASE("confluence diamond on random words") {
  for (int n : {2, 3}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> idx(1, n), len(0, 4);
    for (int iter = 0; iter < 200; ++iter) {
      Word w;
      int l = len(rng);
      for (int i = 0; i < l; ++i) w.letters.emplace_back(idx(rng), idx(rng), 0);
      AlgebraElement a = AlgebraElement::from_word(w);
      CHECK(normal_form(a, g) == normal_form_rightmost(a, g));
    }
  }
}

TEST_CASE("quantum determinant is central") {
  for (int n : {2, 3}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    AlgebraElement det = quantum_determinant(g);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(normal_form(det * gen(i, j) - gen(i, j) * det, g).is_zero());
  }
}

TEST_CASE("cofactor antipode, glq(2)") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  AlgebraElement s11 = antipode_expand(AlgebraElement::generator(1, 1, 1), g);
  CHECK(s11 == AlgebraElement::from_word(Word({Letter(2, 2)}, -1)));
  AlgebraElement s12 = antipode_expand(AlgebraElement::generator(1, 2, 1), g);
  CHECK(s12 == AlgebraElement::from_word(Word({Letter(1, 2)}, -1), -q(-1)));
}

TEST_CASE("classical adjugate at q = 1, glq(2)") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  // S(u^2_1) = -q u^2_1 det^{-1}; at q = 1 the four entries match the
  // adjugate over determinant
  AlgebraElement s21 = antipode_expand(AlgebraElement::generator(2, 1, 1), g);
  REQUIRE(s21.terms().size() == 1);
  CHECK(s21.terms().begin()->second.specialize(1) == -1);
  AlgebraElement s22 = antipode_expand(AlgebraElement::generator(2, 2, 1), g);
  CHECK(s22 == AlgebraElement::from_word(Word({Letter(1, 1)}, -1)));
}

TEST_CASE("antipode axiom") {
  for (int n : {2, 3}) {
    for (auto fam : {GroupFamily::GLq, GroupFamily::SLq}) {
      auto g = GroupSpec::make(fam, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          AlgebraElement lhs, rhs;
          for (int k = 1; k <= n; ++k) {
            lhs += antipode_expand(AlgebraElement::generator(i, k, 1), g) * gen(k, j);
            rhs += gen(i, k) * antipode_expand(AlgebraElement::generator(k, j, 1), g);
          }
          if (i == j) {
            lhs -= AlgebraElement::unit();
            rhs -= AlgebraElement::unit();
          }
          CHECK(normal_form(lhs, g).is_zero());
          CHECK(normal_form(rhs, g).is_zero());
        }
    }
  }
}

TEST_CASE("slq det reduction") {
  auto g = GroupSpec::make(GroupFamily::SLq, 2);
  AlgebraElement det = quantum_determinant(g);
  CHECK(normal_form(det - AlgebraElement::unit(), g).is_zero());
}

TEST_CASE("pbw rejects metric families") {
  auto g = GroupSpec::make(GroupFamily::Oq, 3);
  CHECK_THROWS_AS(normal_form(AlgebraElement::generator(1, 1), g), Unsupported);
}

TEST_CASE("metric relations annihilated by functionals, oq(3)") {
  auto g = GroupSpec::make(GroupFamily::Oq, 3);
  PairingEngine eng(g);
  for (const auto& r : rtt_relations(g)) {
    CHECK(!eng.pairing_nonzero_witness(r, 2).has_value());
  }
}
