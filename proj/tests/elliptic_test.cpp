#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "rpi/elliptic.hpp"
#include "rpi/hankel.hpp"

using namespace rpi;
using support::coeffs;
using support::ints;

namespace {

std::vector<Rational> hankel_of(const Series& s) { return hankel_transform(s.coeffs()).values; }

}  // namespace

TEST_CASE("curve branch") {
  CHECK(coeffs(curve_branch(3, 6)) == ints({0, 1, -2, 1, 3, -7}));
  CHECK(coeffs(curve_branch(2, 5)) == ints({0, 1, -1, -1, 1}));
  oracle::Gen gen(61);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = gen.rational();
    const Series y = curve_branch(a, 12);
    CHECK(y[0] == 0);
    CHECK(y[1] == 1);
    CHECK(y[2] == 1 - a);
    CHECK(y[3] == 1 - 3 * a + a * a);
    // y^2 - axy - y = x^3 - x
    const Series x = Series::x(12);
    const Series lhs = y * y - a * (x * y) - y;
    CHECK(lhs == x * x * x - x);
  }
}

TEST_CASE("pipeline stages") {
  oracle::Gen gen(62);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a = gen.rational();
    const PipelineTrace t = pipeline(a, 14);
    const Series x = Series::x(16);
    CHECK(agree(t.stripped.shifted_up(2) + Series::x(14), t.branch));
    CHECK(agree(t.fraction * (Series::one(12) - Series::x(12) - t.stripped.shifted_up(2).truncated(12)),
                Series::one(12)));
    CHECK(t.f[0] == 1);
    CHECK(t.f.order() == 14);
    CHECK(t.g.order() == 14);
  }
}

TEST_CASE("reference curve expansions") {
  CHECK(coeffs(pipeline(-3, 11).g) == ints({1, 5, 25, 124, 610, 2979, 14457, 69784, 335330, 1605334, 7662014}));
  CHECK(coeffs(pipeline(2, 16).g) == ints({1, 0, 0, -1, 0, -1, 2, -1, 5, -6, 9, -22, 28, -57, 104, -163}));
  CHECK(coeffs(pipeline(3, 11).g) == ints({1, -1, 1, -2, 4, -9, 21, -50, 122, -302, 758}));
  CHECK(coeffs(f_from_curve(0, 15)) == ints({1, 0, 1, -1, 1, -1, 0, 0, 0, -2, 4, -4, -1, 11, -16}));
  CHECK(coeffs(f_from_curve(3, 14)) ==
        ints({1, 0, 1, -1, 4, -10, 30, -84, 237, -653, 1771, -4699, 12173, -30625}));
}

TEST_CASE("curve parameters") {
  CHECK(family_params_from_curve(2) == FamilyParams{0, -1, 1});
  CHECK(family_params_from_curve(3) == FamilyParams{-1, -2, -1});
  CHECK(family_params_from_curve(0) == FamilyParams{2, 1, -1});
  CHECK(pipeline(0, 20).g == g_family({2, 1, -1}, 20));

  const CurveBSequence m3 = b_from_curve(-3);
  CHECK(m3.num0 == 5);
  CHECK(m3.num1 == 19);
  CHECK(m3.den1 == 4);
  CHECK(coeffs(m3.expansion(5)) == ints({5, -1, 4, -16, 64}));
  CHECK(coeffs(b_from_curve(2).expansion(5)) == ints({0, -1, -1, -1, -1}));
  CHECK(coeffs(b_from_curve(1).expansion(5)) == ints({1, -1, 0, 0, 0}));
}

TEST_CASE("curve invariants at random rational a") {
  oracle::Gen gen(63);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = gen.rational();
    CAPTURE(format_rational(a));
    const Series g = pipeline(a, 24).g;
    const FamilyParams p = family_params_from_curve(a);
    CHECK(g == g_family(p, 24));
    CHECK(p.discriminant() == 1);
    const CurveBSequence b = b_from_curve(a);
    CHECK(b_extract(g).b == oracle::rational_function({b.num0, b.num1}, {1, b.den1}, 11));
    CHECK(is_pseudo_involution(g, 24));
    CHECK(curve_cf(a, 24) == g);
  }
}

TEST_CASE("hankel transforms of g and f") {
  oracle::Gen gen(64);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational a = gen.rational();
    const auto hg = hankel_of(pipeline(a, 21).g);
    CHECK(std::vector<Rational>(hg.begin(), hg.begin() + 6) ==
          std::vector<Rational>{1, 0, -1, -1, 1 - a, -a * a + 3 * a - 1});
    const auto hf = hankel_of(f_from_curve(a, 17));
    CHECK(std::vector<Rational>(hf.begin(), hf.begin() + 5) ==
          std::vector<Rational>{1, 1, a - 1, a * a - 3 * a + 1, -a * a * a + 4 * a * a - 6 * a + 2});
    for (std::size_t n = 0; n + 2 < hg.size() && n < hf.size(); ++n) CHECK(hg[n + 2] == -hf[n]);
  }
  CHECK(hankel_of(pipeline(-3, 17).g) == ints({1, 0, -1, -1, 4, -19, -83, -1112, 12171}));
  CHECK(hankel_of(f_from_curve(0, 15)) == ints({1, 1, -1, 1, 2, -1, -3, -5}));
}

TEST_CASE("curve somos checks") {
  const SomosReport m3 = curve_somos_check(-3, 24);
  CHECK(m3.ok());
  CHECK(m3.params == SomosParams{1, 4});
  CHECK(m3.checked() > 0);
  CHECK(curve_somos_check(0, 24).ok());
  CHECK(curve_somos_check(0, 24).params == SomosParams{1, 1});
  const SomosReport one = curve_somos_check(1, 24);
  CHECK(one.degenerate);
  CHECK(one.params == SomosParams{1, 0});
  oracle::Gen gen(65);
  for (int trial = 0; trial < 5; ++trial) CHECK(curve_somos_check(gen.rational(), 22).ok());
}

TEST_CASE("tabulated closed forms of g") {
  // g = (P +- sqrt(D))/Q, so (Q g - P)^2 = D.
  struct Row {
    int a;
    std::vector<Rational> p, d, q;
  };
  const Row rows[] = {
      {0, ints({-1, 2, 1}), ints({1, -4, 6, 0, 1}), ints({0, 0, 2, -2})},
      {1, ints({-1, 1}), ints({1, -2, 1, 4}), ints({0, 0, 0, 2})},
      {2, ints({-1, 0, -1}), ints({1, 0, -2, 4, 1}), ints({0, 0, -2, 2})},
      {3, ints({1, 1, 2}), ints({1, 2, -3, 0, 4}), ints({0, 0, 4, 2})},
      {4, ints({1, 2, 3}), ints({1, 4, -2, -8, 9}), ints({0, 0, 6, 10})},
      {5, ints({1, 3, 4}), ints({1, 6, 1, -20, 16}), ints({0, 0, 8, 22})},
      {-3, ints({-1, 5, 4}), ints({1, -10, 33, -36, 16}), ints({0, 0, 8, -38})},
  };
  constexpr std::size_t n = 20;
  for (const auto& r : rows) {
    CAPTURE(r.a);
    const Series root = Series::polynomial(r.q, n) * pipeline(r.a, n).g - Series::polynomial(r.p, n);
    CHECK(root * root == Series::polynomial(r.d, n));
  }
}
