#include "doctest.h"
#include "qfodc/calculus.hpp"
#include "qfodc/error.hpp"

using namespace qfodc;

namespace {
Scalar q(long long k = 1) { return Scalar::q_power(k); }

std::shared_ptr<PairingEngine> engine(GroupFamily f, int n) {
  return std::make_shared<PairingEngine>(GroupSpec::make(f, n));
}
}  // namespace

TEST_CASE("gamma-x constants and duality") {
  for (int n : {2, 3}) {
    auto c = build_gamma_x(engine(GroupFamily::GLq, n));
    CHECK(c.constants.at("alpha") == q(-2) - Scalar(1));
    CHECK(c.constants.at("c") == q(1));
    CHECK(c.constants.at("c_minus") == q(-1));
    CHECK(c.dim() == static_cast<size_t>(n));
    // f-matrix row: f[X_j][X_i] = l^{-j}_i l^{-n}_n as values on letters
    FunctionalElement expect = FunctionalElement::from_monomial(
        FuncMonomial({Factor(Atom(LKind::Minus, 1, 1)), Factor(Atom(LKind::Minus, n, n))}));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        CHECK(c.engine->eval(c.f[0][0], AlgebraElement::generator(a, b)) ==
              c.engine->eval(expect, AlgebraElement::generator(a, b)));
  }
}

TEST_CASE("gamma-y constants") {
  for (int n : {2, 3}) {
    auto c = build_gamma_y(engine(GroupFamily::GLq, n));
    CHECK(c.constants.at("beta") == q(2) - Scalar(1));
    CHECK(c.dim() == static_cast<size_t>(n));
  }
}

TEST_CASE("gamma-x rejects slq") {
  CHECK_THROWS_WITH_AS(build_gamma_x(engine(GroupFamily::SLq, 2)),
                       "assumption Bus5 violated", Error);
}

TEST_CASE("gamma-z1 constants, dimension, and distinguished relations") {
  for (int n : {2, 3}) {
    auto c = build_gamma_z(engine(GroupFamily::GLq, n), 1);
    CHECK(c.dim() == static_cast<size_t>(2 * n - 1));
    CHECK(c.constants.at("gamma") == Scalar(1) - q(2));
    CHECK(c.constants.at("zeta") == Scalar(1) - q(-2));
    CHECK(c.constants.at("delta") == q(-2));
    // alpha = gamma c^{-2} = delta - 1 for the distinguished Z_n
    Scalar alpha = c.constants.at("gamma") * q(-2);
    CHECK(alpha == c.constants.at("delta") - Scalar(1));
    // beta = zeta c^2 = delta^{-1} - 1
    Scalar beta = c.constants.at("zeta") * q(2);
    CHECK(beta == c.constants.at("delta").inverse() - Scalar(1));
  }
}

TEST_CASE("gamma-z1 coincides with the glued x/y spaces for distinguished Z") {
  // X_i of gamma-z1 equals X_i of gamma-x as functionals (Z = (l^-)^2)
  auto eng = engine(GroupFamily::GLq, 2);
  auto cz = build_gamma_z(eng, 1);
  auto cx = build_gamma_x(eng);
  for (size_t b = 0; b < 2; ++b) {
    FunctionalElement diff = cz.basis[b] - cx.basis[b];
    CHECK(eng->value_table(diff, 3).empty());
  }
}

TEST_CASE("omega relation eta_n = -delta^{-1} theta_n") {
  // theta_n = -delta eta_n: omega(S^{-1}(u^n_n)) has a single component
  // -delta^{-1} on theta_n, for all four variants
  auto eng = engine(GroupFamily::GLq, 2);
  for (int v : {1, 2, 3, 4}) {
    auto c = build_gamma_z(eng, v);
    auto [l, pref] = make_letter(eng->group(), 2, 2, -1);
    OneForm eta_n = c.omega(AlgebraElement::from_letter(l, pref));
    REQUIRE(eta_n.size() == 1);
    size_t theta_n_index = 1;  // labels: X1, X2, Y1 -> theta_2 at index 1
    CHECK(eta_n.count(theta_n_index) == 1);
    Scalar delta = c.constants.at("delta");
    AlgebraElement expect = AlgebraElement::from_word(Word{}, -delta.inverse());
    CHECK(eta_n.at(theta_n_index) == expect);
  }
}

TEST_CASE("gamma-z on slq builds with z-dressed delta") {
  auto c = build_gamma_z(engine(GroupFamily::SLq, 2), 1);
  // delta = z^{-2} q^{-2}
  Scalar z = c.group().z_factor();
  CHECK(c.constants.at("delta") == z.pow(-2) * q(-2));
  CHECK(c.dim() == 3);
}

TEST_CASE("gamma-full and rows") {
  auto eng = engine(GroupFamily::GLq, 3);
  auto c = build_gamma_full(eng);
  CHECK(c.dim() == 9);
  for (int j : {1, 2, 3}) {
    auto r = build_gamma_row(eng, j);
    CHECK(r.dim() == static_cast<size_t>(2 * j - 1));
  }
  // the union of the row bases is the full basis
  std::vector<std::string> all;
  for (int j : {1, 2, 3}) {
    auto r = build_gamma_row(eng, j);
    all.insert(all.end(), r.labels.begin(), r.labels.end());
  }
  std::sort(all.begin(), all.end());
  auto full = c.labels;
  std::sort(full.begin(), full.end());
  CHECK(all == full);
}

TEST_CASE("gamma-full duality instances, glq(2)") {
  auto c = build_gamma_full(engine(GroupFamily::GLq, 2));
  // <X_{12}, u^1_2> = 1, <X_{12}, u^2_1> = 0, <Y_{21}, S^{-1}(u^2_1)> = 1
  size_t x12 = 0, y21 = 0;
  for (size_t i = 0; i < c.labels.size(); ++i) {
    if (c.labels[i] == "X[1,2]") x12 = i;
    if (c.labels[i] == "Y[2,1]") y21 = i;
  }
  CHECK(c.engine->eval(c.basis[x12], AlgebraElement::generator(1, 2)) == Scalar(1));
  CHECK(c.engine->eval(c.basis[x12], AlgebraElement::generator(2, 1)).is_zero());
  auto [l, pref] = make_letter(c.group(), 2, 1, -1);
  CHECK(c.engine->eval(c.basis[y21], AlgebraElement::from_letter(l, pref)) == Scalar(1));
}

TEST_CASE("slq full calculus is flagged") {
  auto c = build_gamma_full(engine(GroupFamily::SLq, 2));
  bool flagged = false;
  for (const auto& f : c.flags)
    if (f.find("z-scaled") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("bicovariant commutation: omega_NN against the generators") {
  auto c = build_bicovariant(engine(GroupFamily::GLq, 2));
  const int n = 2;
  auto idx = [n](int i, int j) { return static_cast<size_t>((i - 1) * n + (j - 1)); };
  for (int i = 1; i <= n; ++i) {
    OneForm lhs = c.move_form(idx(n, n), x_generator(c.group(), i));
    // omega_NN x_i = q^2 x_i omega_NN
    REQUIRE(lhs.size() == 1);
    CHECK(lhs.at(idx(n, n)) == q(2) * x_generator(c.group(), i));
    OneForm lhy = c.move_form(idx(n, n), y_generator(c.group(), i));
    REQUIRE(lhy.size() == 1);
    CHECK(lhy.at(idx(n, n)) == q(-2) * y_generator(c.group(), i));
  }
}
