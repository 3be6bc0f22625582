#include <random>

#include "doctest.h"
#include "qfodc/error.hpp"
#include "qfodc/numeric.hpp"
#include "qfodc/pairing.hpp"

using namespace qfodc;

namespace {

Scalar q(long long k = 1) { return Scalar::q_power(k); }

Atom lp(int i, int j, int p = 0) { return Atom(LKind::Plus, i, j, p); }
Atom lm(int i, int j, int p = 0) { return Atom(LKind::Minus, i, j, p); }

FuncMonomial mono(std::vector<Factor> fs) {
  FuncMonomial m(std::move(fs));
  m.normalize();
  return m;
}

Word word(std::vector<Letter> ls, int dp = 0) { return Word(std::move(ls), dp); }

FuncMonomial random_monomial(const PairingEngine& eng, std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(1, maxlen);
  std::uniform_int_distribution<size_t> pick(0, eng.alphabet().size() - 1);
  FuncMonomial m;
  int l = len(rng);
  for (int i = 0; i < l; ++i) m.factors.emplace_back(eng.alphabet()[pick(rng)]);
  return m;
}

Word random_word(const GroupSpec& g, std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), idx(1, g.n());
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.letters.emplace_back(idx(rng), idx(rng), 0);
  return w;
}

}  // namespace

TEST_CASE("pairing table on generators, glq") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  PairingEngine eng(g);
  CHECK(eng.atom_pairing(lp(1, 1), Letter(1, 1)) == q(1));
  CHECK(eng.atom_pairing(lm(2, 2), Letter(2, 2)) == q(-1));  // c_- = q^{-1}
  // diagonal atoms act diagonally: <l^{+i}_i, u^k_l> = q^{delta_ik} delta_kl
  for (int n : {2, 3}) {
    auto gn = GroupSpec::make(GroupFamily::GLq, n);
    PairingEngine en(gn);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          Scalar expect = (k == l) ? q(i == k ? 1 : 0) : Scalar::zero();
          CHECK(en.atom_pairing(lp(i, i), Letter(k, l)) == expect);
        }
  }
}

TEST_CASE("counit evaluations") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  PairingEngine eng(g);
  FunctionalElement eps = FunctionalElement::counit();
  CHECK(eng.eval(eps, AlgebraElement::generator(1, 2)).is_zero());
  CHECK(eng.eval(eps, AlgebraElement::generator(1, 1)) == Scalar(1));
  CHECK(eng.eval(eps, AlgebraElement::unit()) == Scalar(1));
}

TEST_CASE("squared diagonal atom on u^2_2") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  PairingEngine eng(g);
  FunctionalElement f = FunctionalElement::from_monomial(mono({lm(2, 2), lm(2, 2)}));
  CHECK(eng.eval(f, AlgebraElement::generator(2, 2)) == q(-2));
}

TEST_CASE("coproduct compatibility: <fg,a> = <f,a1><g,a2>") {
  // duality of products, via random atom pairs on random words
  for (auto fam : {GroupFamily::GLq, GroupFamily::SLq}) {
    auto g = GroupSpec::make(fam, 2);
    PairingEngine eng(g);
    std::mt19937 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
      FuncMonomial f = random_monomial(eng, rng, 2);
      FuncMonomial h = random_monomial(eng, rng, 2);
      Word w1 = random_word(g, rng, 2);
      Word w2 = random_word(g, rng, 1);
      // <f*h, w1 w2> = sum over coproduct legs computed independently:
      // evaluate the product monomial on the concatenated word, and compare
      // against splitting the functional across the two word factors.
      FuncMonomial fh = f.concat(h);
      Scalar lhs = eng.eval_monomial_word(fh, w1.concat(w2));
      // <fh, w1 w2> must also equal sum_k <fh_(1), w1><fh_(2), w2> where the
      // functional coproduct runs over atom chains; check via the product
      // rule on the algebra side instead: <f x h, D(w)> with w = w1.w2
      Scalar rhs;
      {
        // direct Sweedler sum over all intermediate index assignments of w1
        // and w2 is what eval already does; as an independent route compute
        // <f, (w1 w2)_(1)> <h, (w1 w2)_(2)> by brute force over legs
        const int n = g.n();
        std::vector<Letter> all = w1.letters;
        all.insert(all.end(), w2.letters.begin(), w2.letters.end());
        size_t p = all.size();
        std::vector<int> ks(p, 1);
        while (true) {
          std::vector<Letter> leg1(p), leg2(p);
          for (size_t s = 0; s < p; ++s) {
            leg1[s] = Letter(all[s].row, ks[s], 0);
            leg2[s] = Letter(ks[s], all[s].col, 0);
          }
          rhs += eng.eval_monomial_word(f, Word(leg1)) *
                 eng.eval_monomial_word(h, Word(leg2));
          size_t s = 0;
          while (s < p) {
            if (++ks[s] <= n) break;
            ks[s] = 1;
            ++s;
          }
          if (s == p || p == 0) break;
        }
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("group-likes are characters") {
  auto g = GroupSpec::make(GroupFamily::GLq, 3);
  PairingEngine eng(g);
  GroupLike z = GroupLike::diagonal_atom(3, LKind::Minus, 3, 2);
  FunctionalElement zf = FunctionalElement::from_grouplike(z);
  std::mt19937 rng(29);
  for (int iter = 0; iter < 50; ++iter) {
    Word a = random_word(g, rng, 2);
    Word b = random_word(g, rng, 2);
    Scalar za = eng.eval(zf, AlgebraElement::from_word(a));
    Scalar zb = eng.eval(zf, AlgebraElement::from_word(b));
    Scalar zab = eng.eval(zf, AlgebraElement::from_word(a.concat(b)));
    CHECK(zab == za * zb);
  }
  CHECK(eng.eval(zf, AlgebraElement::unit()) == Scalar(1));
}

TEST_CASE("triangularity of the L-functionals") {
  for (auto fam : {GroupFamily::GLq, GroupFamily::Oq}) {
    for (int n : {2, 3}) {
      auto g = GroupSpec::make(fam, n);
      PairingEngine eng(g);
      auto words = enumerate_words(n, 2);
      for (int m = 1; m < n; ++m) {
        FunctionalElement low = FunctionalElement::from_atom(lm(m, n));
        FunctionalElement high = FunctionalElement::from_atom(lp(n, m));
        for (const auto& w : words) {
          CHECK(eng.eval(low, AlgebraElement::from_word(w)).is_zero());
          CHECK(eng.eval(high, AlgebraElement::from_word(w)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("antipode tables are convolution inverses") {
  for (auto fam : {GroupFamily::GLq, GroupFamily::Oq, GroupFamily::Spq}) {
    int n = fam == GroupFamily::Spq ? 4 : 3;
    auto g = GroupSpec::make(fam, n);
    PairingEngine eng(g);
    for (auto kind : {LKind::Plus, LKind::Minus}) {
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d) {
              // sum_{k,m} <S(l^a_k), u^c_m><l^k_b, u^m_d> = delta_ab delta_cd
              Scalar acc;
              for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m)
                  acc += eng.cell(kind, 1, a, k, 0, c, m) *
                         eng.cell(kind, 0, k, b, 0, m, d);
              Scalar expect = (a == b && c == d) ? Scalar(1) : Scalar::zero();
              CHECK(acc == expect);
            }
    }
  }
}

TEST_CASE("glq constants from pairings") {
  for (int n : {2, 3}) {
    auto g = GroupSpec::make(GroupFamily::GLq, n);
    PairingEngine eng(g);
    // c = <l^{+n}_n, u^n_n> = q and c_- = <l^{-n}_n, u^n_n> = q^{-1}
    CHECK(eng.atom_pairing(lp(n, n), Letter(n, n)) == q(1));
    CHECK(eng.atom_pairing(lm(n, n), Letter(n, n)) == q(-1));
    for (int i = 1; i < n; ++i) {
      // alpha = <l^{-n}_i l^{-n}_n, u^i_n> = q^{-2} - 1
      FunctionalElement f = FunctionalElement::from_monomial(mono({lm(n, i), lm(n, n)}));
      CHECK(eng.eval(f, AlgebraElement::generator(i, n)) == q(-2) - Scalar(1));
      // beta = <l^{+n}_n l^{+i}_n, u^n_i> = q^2 - 1
      FunctionalElement fb = FunctionalElement::from_monomial(mono({lp(n, n), lp(i, n)}));
      CHECK(eng.eval(fb, AlgebraElement::generator(n, i)) == q(2) - Scalar(1));
      // gamma = <l^{-n}_i l^{+n}_n, u^i_n> = -(q^2 - 1)
      FunctionalElement fg = FunctionalElement::from_monomial(mono({lm(n, i), lp(n, n)}));
      CHECK(eng.eval(fg, AlgebraElement::generator(i, n)) == Scalar(1) - q(2));
      // zeta = <l^{-n}_n l^{+i}_n, u^n_i> = -(q^{-2} - 1)
      FunctionalElement fz = FunctionalElement::from_monomial(mono({lm(n, n), lp(i, n)}));
      CHECK(eng.eval(fz, AlgebraElement::generator(n, i)) == Scalar(1) - q(-2));
      // alpha = <(l^{-n}_n)^2, u^n_n> - 1  (both routes agree)
      FunctionalElement fa2 = FunctionalElement::from_monomial(mono({lm(n, n), lm(n, n)}));
      CHECK(eng.eval(fa2, AlgebraElement::generator(n, n)) - Scalar(1) ==
            q(-2) - Scalar(1));
    }
    // delta = <Z_n, u^n_n> = q^{-2} for Z_n = (l^{-n}_n)^2
    GroupLike z = GroupLike::diagonal_atom(n, LKind::Minus, n, 2);
    CHECK(eng.grouplike_value(z, n) == q(-2));
  }
}

TEST_CASE("slq pairings carry the root z") {
  auto g = GroupSpec::make(GroupFamily::SLq, 2);
  PairingEngine eng(g);
  // <l^{+1}_1, u^1_1> = z * q with z = q^{-1/2}
  Scalar expect = Scalar::q_power(Exponent(-1, 2)) * q(1);
  CHECK(eng.atom_pairing(lp(1, 1), Letter(1, 1)) == expect);
  // z^N = q^{-1}
  CHECK(g.z_factor().pow(2) == q(-1));
}

TEST_CASE("numeric oracle agrees with specialization") {
  for (auto fam : {GroupFamily::GLq, GroupFamily::SLq}) {
    for (int n : {2, 3}) {
      auto g = GroupSpec::make(fam, n);
      PairingEngine eng(g);
      Rational q0 = NumericEngine::default_q0(g);
      NumericEngine num(g, q0);
      std::mt19937 rng(31);
      for (int iter = 0; iter < 60; ++iter) {
        FuncMonomial m = random_monomial(eng, rng, 3);
        Word w = random_word(g, rng, 3);
        FunctionalElement f = FunctionalElement::from_monomial(m);
        AlgebraElement a = AlgebraElement::from_word(w);
        CHECK(eng.eval(f, a).specialize(q0) == num.eval(f, a));
      }
    }
  }
}

TEST_CASE("pairing zero scan finds witnesses") {
  auto g = GroupSpec::make(GroupFamily::GLq, 2);
  PairingEngine eng(g);
  // u^1_1 u^1_2 - q u^1_2 u^1_1 is a relation: all pairings vanish
  AlgebraElement rel =
      AlgebraElement::from_word(word({Letter(1, 1), Letter(1, 2)})) -
      q(1) * AlgebraElement::from_word(word({Letter(1, 2), Letter(1, 1)}));
  CHECK(!eng.pairing_nonzero_witness(rel, 3).has_value());
  // but with the wrong coefficient there is a witness
  AlgebraElement not_rel =
      AlgebraElement::from_word(word({Letter(1, 1), Letter(1, 2)})) -
      q(2) * AlgebraElement::from_word(word({Letter(1, 2), Letter(1, 1)}));
  CHECK(eng.pairing_nonzero_witness(not_rel, 3).has_value());
}
