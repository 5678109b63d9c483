#include "rpi/cli/known_sequences.hpp"

#include "rpi/elliptic.hpp"
#include "rpi/error.hpp"
#include "rpi/family.hpp"
#include "rpi/hankel.hpp"
#include "rpi/riordan.hpp"

#include <random>
#include <sstream>

namespace rpi::cli {

namespace {

using Values = std::vector<Rational>;

Values head(const Series& s, std::size_t n) {
  const auto c = s.coeffs();
  return Values(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(n, c.size())));
}

// Enough series terms for `n` Hankel values starting at `offset`.
std::size_t hankel_order(std::size_t n, std::size_t offset) { return 2 * (n + offset) + 1; }

template <class MakeSeries>
Values hankel_of(MakeSeries make, std::size_t n, std::size_t offset = 0) {
  const Series s = make(hankel_order(n, offset));
  const HankelTransform h = hankel_transform(s.coeffs());
  return Values(h.values.begin() + static_cast<std::ptrdiff_t>(offset),
                h.values.begin() + static_cast<std::ptrdiff_t>(offset + n));
}

auto family(Rational a, Rational b, Rational c) {
  return [p = FamilyParams{a, b, c}](std::size_t order) { return g_family(p, order); };
}

auto comp(Rational a, Rational b, Rational c) {
  return [p = FamilyParams{a, b, c}](std::size_t order) { return companion(p, order); };
}

auto curve_g(Rational a) {
  return [a](std::size_t order) { return pipeline(a, order).g; };
}

auto curve_f(Rational a) {
  return [a](std::size_t order) { return f_from_curve(a, order); };
}

template <class MakeSeries>
std::function<Values(std::size_t)> expansion(MakeSeries make) {
  return [make](std::size_t n) { return head(make(n), n); };
}

template <class MakeSeries>
std::function<Values(std::size_t)> hankel(MakeSeries make, std::size_t offset = 0, bool negate = false) {
  return [make, offset, negate](std::size_t n) {
    Values v = hankel_of(make, n, offset);
    if (negate) {
      for (auto& x : v) x = -x;
    }
    return v;
  };
}

Values flatten(const Matrix& m) {
  Values out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

// Number of rows of a triangle holding `entries` values.
std::size_t triangle_rows(std::size_t entries) {
  std::size_t rows = 0;
  while ((rows + 1) * (rows + 2) / 2 <= entries) ++rows;
  return rows;
}

std::size_t square_side(std::size_t entries) {
  std::size_t side = 0;
  while ((side + 1) * (side + 1) <= entries) ++side;
  return side;
}

std::function<Values(std::size_t)> curve_b(Rational a) {
  return [a](std::size_t n) {
    const BSequence b = b_extract(pipeline(a, 2 * n + 2).g);
    return Values(b.b.begin(), b.b.begin() + static_cast<std::ptrdiff_t>(n));
  };
}

std::vector<KnownSequence> build_sequences() {
  std::vector<KnownSequence> t;
  auto add = [&t](std::string label, std::vector<std::int64_t> prefix, std::string source,
                  std::function<Values(std::size_t)> compute) {
    t.push_back({std::move(label), std::move(prefix), std::move(source), std::move(compute)});
  };

  add("A000108", {1, 1, 2, 5, 14, 42}, "catalan", [](std::size_t n) { return head(catalan(n), n); });

  // Family expansions.
  add("A023431", {1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212}, "g_family(1,0,-1)", expansion(family(1, 0, -1)));
  add("A023431/ad", {1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212}, "g_ad(1,1)",
      [](std::size_t n) { return head(g_ad(1, 1, n), n); });
  add("A091565", {1, 1, 1, 3, 7, 13, 29, 71, 163, 377, 913}, "g_family(1,0,-2)", expansion(family(1, 0, -2)));
  add("A091561", {1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869, 7942}, "g_family(2,0,-1)", expansion(family(2, 0, -1)));
  add("A152225", {1, 1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869, 7942}, "1 + x g_family(2,0,-1)",
      [](std::size_t n) { return head(Series::one(n) + g_family({2, 0, -1}, n).shifted_up(1), n); });
  add("A004148", {1, 1, 1, 2, 4, 8, 17, 37, 82}, "g_family_cf(1,-1,0)",
      [](std::size_t n) { return head(g_family_cf({1, -1, 0}, n), n); });
  add("A004148/recurrence", {1, 1, 1, 2, 4, 8, 17, 37, 82}, "g_recurrence_c0(1,-1)",
      [](std::size_t n) { return head(g_recurrence_c0(1, -1, n), n); });
  add("A187256", {1, 2, 4, 10, 28, 82, 248, 770, 2440}, "g_family_cf(2,-1,0)",
      [](std::size_t n) { return head(g_family_cf({2, -1, 0}, n), n); });
  add("A105633", {1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455}, "g_family(2,-1,1)", expansion(family(2, -1, 1)));
  add("A105633/prepended-cf", {1, 1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455},
      "period-2 fraction (1-x, x^2), (1, x)", [](std::size_t n) {
        const CfLevel levels[] = {{Series::polynomial({1, -1}, n), Series::monomial(1, 2, n)},
                                  {Series::one(n), Series::x(n)}};
        return head(cf_eval(levels, n), n);
      });
  add("A105633/narayana", {1, 1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455}, "narayana_diagonal_sum",
      [](std::size_t n) {
        Values v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(narayana_diagonal_sum(i));
        return v;
      });
  add("A007477", {1, 1, 1, 2, 3, 6, 11, 22, 44, 90, 187, 392}, "inverse binomial transform of g_family(2,-1,1)",
      [](std::size_t n) {
        const Series g = g_family({2, -1, 1}, n);
        return binomial_transform(g.coeffs(), true);
      });
  add("g(2,-2,3)", {1, 2, 4, 9, 22, 58, 162, 472, 1418, 4357, 13618}, "g_family(2,-2,3)", expansion(family(2, -2, 3)));
  add("g(-1,2,1)", {1, -1, 1, 0, -2, 3, 1, -12, 20, 4, -84}, "g_family(-1,2,1)", expansion(family(-1, 2, 1)));
  add("g(-1,-2,-1)", {1, -1, 1, -2, 4, -9, 21, -50, 122, -302, 758}, "g_family(-1,-2,-1)",
      expansion(family(-1, -2, -1)));

  // Family Hankel transforms.
  add("hankel g_ad(1,1)", {1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0}, "hankel of g_ad(1,1)",
      hankel([](std::size_t n) { return g_ad(1, 1, n); }));
  add("hankel g(2,-2,3)", {1, 0, -1, -1, -2, -3, 5, 28, 67, 411, 506}, "hankel of g_family(2,-2,3)",
      hankel(family(2, -2, 3)));
  add("hankel g(-1,2,1)", {1, 0, -1, -1, 2, -1, -9, 16, 73, 145, -1442}, "hankel of g_family(-1,2,1)",
      hankel(family(-1, 2, 1)));
  add("A178075", {1, 1, -2, 1, 9, -16, -73, -145, 1442}, "negated tail of hankel g_family(-1,2,1)",
      hankel(family(-1, 2, 1), 2, true));
  add("hankel g(-1,-2,-1)", {1, 0, -1, -1, -2, -1, 7, 16, 57, 113, -670}, "hankel of g_family(-1,-2,-1)",
      hankel(family(-1, -2, -1)));
  add("hankel g(0,-1,1)", {1, 0, -1, -1, -1, 1, 2, 3, 1, -7, -11}, "hankel of g_family(0,-1,1)",
      hankel(family(0, -1, 1)));

  // Companion series and their transforms.
  add("companion(-1,1,2)", {1, 1, 0, 0, 2, 3, 1, 2, 11, 17, 12}, "companion(-1,1,2)", expansion(comp(-1, 1, 2)));
  add("companion(-1,-1,-2)", {1, 1, 2, 2, 2, -1, -7, -20, -37, -53, -40, 49, 301}, "companion(-1,-1,-2)",
      expansion(comp(-1, -1, -2)));
  add("companion(1,2,-1)", {1, -1, -1, 4, -4, -5, 23, -28, -28, 164, -232, -166}, "companion(1,2,-1)",
      expansion(comp(1, 2, -1)));
  add("companion(-1,-2,-1)", {1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090, 7936, 20544}, "companion(-1,-2,-1)",
      expansion(comp(-1, -2, -1)));
  add("A025243", {1, 2, 1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090, 7936, 20544}, "1 + 2x + x^2 companion(-1,-2,-1)",
      [](std::size_t n) {
        return head(Series::polynomial({1, 2}, n) + companion({-1, -2, -1}, n).shifted_up(2), n);
      });
  add("hankel companion(-1,1,2)", {1, -1, -2, -1, 5, 9, -8, -41, -61, 241}, "hankel of companion(-1,1,2)",
      hankel(comp(-1, 1, 2)));
  add("hankel companion(-1,-1,-2)", {1, 1, -2, -3, -7, 5, 32, 83, 87, -821}, "hankel of companion(-1,-1,-2)",
      hankel(comp(-1, -1, -2)));
  add("hankel companion(1,2,-1)", {1, -2, 1, 9, -16, -73, -145, 1442, 3951, -49121}, "hankel of companion(1,2,-1)",
      hankel(comp(1, 2, -1)));
  add("hankel companion(-1,-2,-1)", {1, 2, 1, -7, -16, -57, -113, 670, 3983, 23647},
      "hankel of companion(-1,-2,-1)", hankel(comp(-1, -2, -1)));

  // Curve pipeline.
  add("curve 3 branch", {0, 1, -2, 1, 3, -7}, "curve_branch(3)",
      [](std::size_t n) { return head(curve_branch(3, n), n); });
  add("curve 2 branch", {0, 1, -1, -1, 1}, "curve_branch(2)", [](std::size_t n) { return head(curve_branch(2, n), n); });
  add("curve 3 g", {1, -1, 1, -2, 4, -9, 21, -50, 122, -302, 758}, "pipeline(3).g", expansion(curve_g(3)));
  add("curve 3 f", {1, 0, 1, -1, 4, -10, 30, -84, 237, -653, 1771, -4699, 12173, -30625}, "f_from_curve(3)",
      expansion(curve_f(3)));
  add("hankel curve 3 f", {1, 1, 2, 1, -7, -16, -57}, "hankel of f_from_curve(3)", hankel(curve_f(3)));
  add("curve 2 g", {1, 0, 0, -1, 0, -1, 2, -1, 5, -6, 9, -22, 28, -57, 104, -163}, "pipeline(2).g",
      expansion(curve_g(2)));
  add("A050512", {1, 1, 1, -1, -2, -3, -1, 7, 11}, "hankel of f_from_curve(2)", hankel(curve_f(2)));
  add("curve 2 inverse binomial", {1, -1, 1, -2, 5, -12, 29, -72, 182, -466, 1207},
      "inverse binomial transform of pipeline(2).g", [](std::size_t n) {
        const Series g = pipeline(2, n).g;
        return binomial_transform(g.coeffs(), true);
      });
  add("curve 2 differences", {1, -1, 0, -1, 1, -1, 3, -3, 6, -11, 15, -31}, "(1 - x) pipeline(2).g",
      [](std::size_t n) { return head(Series::polynomial({1, -1}, n) * pipeline(2, n).g, n); });
  add("curve -3 g", {1, 5, 25, 124, 610, 2979, 14457, 69784, 335330, 1605334, 7662014}, "pipeline(-3).g",
      expansion(curve_g(-3)));
  add("curve -3 triangle",
      {1,     0,      0,     0,     0,    0,   0,  0,  //
       5,     1,      0,     0,     0,    0,   0,  0,  //
       25,    10,     1,     0,     0,    0,   0,  0,  //
       124,   75,     15,    1,     0,    0,   0,  0,  //
       610,   498,    150,   20,    1,    0,   0,  0,  //
       2979,  3085,   1247,  250,   25,   1,   0,  0,  //
       14457, 18258,  9300,  2496,  375,  30,  1,  0,  //
       69784, 104580, 64512, 21755, 4370, 525, 35, 1},
      "to_matrix(bell(pipeline(-3).g), 8)", [](std::size_t n) {
        const std::size_t side = square_side(n);
        return flatten(to_matrix(RiordanArray::bell(pipeline(-3, side).g), side).dense());
      });
  add("curve -3 production matrix",
      {5,  1,  0,  0,  0,  0, 0,  //
       0,  5,  1,  0,  0,  0, 0,  //
       -1, 0,  5,  1,  0,  0, 0,  //
       5,  -1, 0,  5,  1,  0, 0,  //
       -21, 5, -1, 0,  5,  1, 0,  //
       84, -21, 5, -1, 0,  5, 1,  //
       -326, 84, -21, 5, -1, 0, 5},
      "production_matrix(bell(pipeline(-3).g), 7)",
      [](std::size_t n) {
        const std::size_t side = square_side(n);
        return flatten(production_matrix(RiordanArray::bell(pipeline(-3, side + 2).g), side));
      });
  add("hankel curve -3 g", {1, 0, -1, -1, 4, -19, -83, -1112, 12171}, "hankel of pipeline(-3).g",
      hankel(curve_g(-3)));
  add("hankel curve -3 f", {1, 1, -4, 19, 83, 1112, -12171}, "hankel of f_from_curve(-3)", hankel(curve_f(-3)));
  add("curve 0 g", {1, 2, 4, 7, 10, 9, -6, -53, -151, -284, -301, 278, 2482, 7717}, "pipeline(0).g",
      expansion(curve_g(0)));
  add("hankel curve 0 g", {1, 0, -1, -1, 1, -1, -2, 1, 3, 5}, "hankel of pipeline(0).g", hankel(curve_g(0)));
  add("curve 0 f", {1, 0, 1, -1, 1, -1, 0, 0, 0, -2, 4, -4, -1, 11, -16}, "f_from_curve(0)", expansion(curve_f(0)));
  add("A006769", {1, 1, -1, 1, 2, -1, -3, -5}, "hankel of f_from_curve(0)", hankel(curve_f(0)));

  // B-sequences of the curve family, read off the involution itself.
  add("bseq curve 0", {2, -1, 1, -1, 1, -1}, "b_extract(pipeline(0).g)", curve_b(0));
  add("bseq curve 1", {1, -1, 0, 0, 0}, "b_extract(pipeline(1).g)", curve_b(1));
  add("bseq curve 2", {0, -1, -1, -1}, "b_extract(pipeline(2).g)", curve_b(2));
  add("bseq curve 3", {-1, -1, -2, -4, -8}, "b_extract(pipeline(3).g)", curve_b(3));
  add("bseq curve 4", {-2, -1, -3, -9, -27}, "b_extract(pipeline(4).g)", curve_b(4));
  add("bseq curve 5", {-3, -1, -4, -16}, "b_extract(pipeline(5).g)", curve_b(5));

  // Triangles.
  add("A090181", {1, 0, 1, 0, 1, 1, 0, 1, 3, 1, 0, 1, 6, 6, 1, 0, 1, 10, 20, 10, 1, 0, 1, 15, 50, 50, 15, 1},
      "narayana", [](std::size_t n) {
        Values v;
        for (std::size_t r = 0; r < triangle_rows(n); ++r) {
          for (std::size_t k = 0; k <= r; ++k) v.push_back(narayana(r, k));
        }
        return v;
      });
  add("A130749", {1, 1, 1, 1, 3, 1, 1, 7, 6, 1, 1, 15, 24, 10, 1, 1, 31, 80, 60, 15, 1, 1, 63, 240, 280, 125, 21, 1},
      "binomial matrix times narayana", [](std::size_t n) {
        Values v;
        for (std::size_t r = 0; r < triangle_rows(n); ++r) {
          for (std::size_t k = 0; k <= r; ++k) {
            Rational acc = 0;
            for (std::size_t j = k; j <= r; ++j) {
              acc += Rational(binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(j))) * narayana(j, k);
            }
            v.push_back(acc);
          }
        }
        return v;
      });
  return t;
}

std::vector<KnownSomos> build_fits() {
  std::vector<KnownSomos> t;
  auto add = [&t](std::string label, std::string source, std::function<Values()> terms, SomosParams expected) {
    t.push_back({std::move(label), std::move(source), std::move(terms), std::move(expected)});
  };
  add("somos g(2,-2,3)", "hankel of g_family(2,-2,3) from index 2", [] { return hankel_of(family(2, -2, 3), 9, 2); },
      {1, -2});
  add("somos g(-1,2,1)", "hankel of g_family(-1,2,1) from index 2", [] { return hankel_of(family(-1, 2, 1), 9, 2); },
      {1, 2});
  add("somos g(-1,-2,-1)", "hankel of g_family(-1,-2,-1) from index 2",
      [] { return hankel_of(family(-1, -2, -1), 9, 2); }, {1, -2});
  add("somos companion(-1,1,2)", "hankel of companion(-1,1,2)", [] { return hankel_of(comp(-1, 1, 2), 10); }, {1, 1});
  add("somos companion(-1,-1,-2)", "hankel of companion(-1,-1,-2)", [] { return hankel_of(comp(-1, -1, -2), 10); },
      {1, -1});
  add("somos companion(1,2,-1)", "hankel of companion(1,2,-1)", [] { return hankel_of(comp(1, 2, -1), 10); }, {1, 2});
  add("somos companion(-1,-2,-1)", "hankel of companion(-1,-2,-1)", [] { return hankel_of(comp(-1, -2, -1), 10); },
      {1, -2});
  add("somos curve -3", "hankel of f_from_curve(-3)", [] { return hankel_of(curve_f(-3), 7); }, {1, 4});
  add("somos curve 0", "hankel of f_from_curve(0)", [] { return hankel_of(curve_f(0), 8); }, {1, 1});
  add("somos curve 2", "hankel of f_from_curve(2)", [] { return hankel_of(curve_f(2), 9); }, {1, -1});
  add("somos curve 3", "hankel of f_from_curve(3)", [] { return hankel_of(curve_f(3), 7); }, {1, -2});
  return t;
}

std::string join(std::span<const Rational> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_rational(v[i]);
  return os.str();
}

}  // namespace

const std::vector<KnownSequence>& known_sequences() {
  static const std::vector<KnownSequence> table = build_sequences();
  return table;
}

const std::vector<KnownSomos>& known_somos_fits() {
  static const std::vector<KnownSomos> table = build_fits();
  return table;
}

const KnownSequence* find_known(std::string_view label) {
  for (const auto& k : known_sequences()) {
    if (k.label == label) return &k;
  }
  return nullptr;
}

std::vector<CheckOutcome> run_corpus_suite(std::span<const KnownSequence> sequences, std::span<const KnownSomos> fits) {
  std::vector<CheckOutcome> out;
  for (const auto& k : sequences) {
    CheckOutcome o{k.label, false, {}};
    try {
      const Values expected = to_rationals(k.prefix);
      const Values got = k.compute(k.prefix.size());
      o.pass = got == expected;
      if (!o.pass) o.detail = "expected [" + join(expected) + "] got [" + join(got) + "]";
    } catch (const Error& e) {
      o.detail = e.what();
    }
    out.push_back(std::move(o));
  }
  for (const auto& f : fits) {
    CheckOutcome o{f.label, false, {}};
    try {
      const Values terms = f.terms();
      const SomosParams p = somos4_fit(terms);
      const SomosReport r = somos4_check(terms, p);
      o.pass = p == f.expected && r.ok();
      if (!o.pass) {
        o.detail = "expected (" + format_rational(f.expected.alpha) + ", " + format_rational(f.expected.beta) +
                   ") got (" + format_rational(p.alpha) + ", " + format_rational(p.beta) + ")";
      }
    } catch (const Error& e) {
      o.detail = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> run_conjecture_suite(std::uint64_t seed, std::size_t trials, std::size_t order) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<CheckOutcome> out;
  for (std::size_t t = 0; t < trials; ++t) {
    FamilyParams p;
    do {
      p = {draw(-4, 4), draw(-4, 4), draw(-4, 4)};
    } while (p.discriminant() == 0);
    const ConjectureReport r = conjecture_family(p, order);
    CheckOutcome o;
    o.label = "family (" + format_rational(p.a) + "," + format_rational(p.b) + "," + format_rational(p.c) + ")";
    o.pass = r.ok();
    std::ostringstream d;
    d << "g-hankel " << r.family_check.passed.size() << "/" << r.family_check.checked() << ", companion-hankel "
      << r.companion_check.passed.size() << "/" << r.companion_check.checked();
    o.detail = d.str();
    out.push_back(std::move(o));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const Rational a = draw(-6, 6);
    const SomosReport r = curve_somos_check(a, order);
    CheckOutcome o;
    o.label = "curve a=" + format_rational(a);
    o.pass = r.ok();
    o.detail = "f-hankel " + std::to_string(r.passed.size()) + "/" + std::to_string(r.checked());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace rpi::cli
