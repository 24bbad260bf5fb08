#include "hoops/counterexample.hpp"
#include "hoops/decompose.hpp"
#include "hoops/error.hpp"
#include "hoops/homotopy.hpp"
#include "hoops/mollify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hoops::pathology;
using hoops::gauge::GroupName;
using hoops::gauge::LieGroupSpec;

namespace {

GraphCurve random_curve(std::mt19937_64& rng, bool with_factors)
{
  std::uniform_int_distribution<int> level(1, 6), count(1, 8);
  std::uniform_real_distribution<double> scale(0.0, 1.0);
  std::bernoulli_distribution neg(0.5);
  std::vector<BumpAtom> atoms;
  for (int i = count(rng); i > 0; --i)
    atoms.push_back({level(rng), neg(rng) ? -1 : 1, scale(rng)});
  std::vector<MollifierFactor> factors;
  if (with_factors) {
    std::uniform_real_distribution<double> point(0.1, 0.9), width(0.02, 0.2);
    factors.push_back({point(rng), width(rng)});
  }
  return GraphCurve(1.0, atoms, factors);
}

// Fourth-order central difference of the order-(n-1) oracle.
double central_difference(const GraphCurve& c, double x, int n, double h)
{
  auto g = [&](double y) { return c.derivative(y, n - 1); };
  return (8.0 * (g(x + h) - g(x - h)) - (g(x + 2 * h) - g(x - 2 * h))) / (12.0 * h);
}

double local_scale(const GraphCurve& c, int n)
{
  double s = 0.0;
  for (const auto& a : c.atoms())
    s += a.scale * std::ldexp(beta_sup(n), a.level * n);
  for (const auto& m : c.factors())
    s *= 1.0 + cutoff_sup(n) / std::pow(m.width, n);
  return s;
}

std::vector<GraphCurve> family_curves(int n_max)
{
  const auto fam = counterexample_family(n_max);
  return {fam.curves.begin(), fam.curves.end()};
}

} // namespace

TEST(Profile, IndependentOracleConstants)
{
  // Values from an independent sampled evaluation of (4u(1-u))^9.
  EXPECT_NEAR(beta_sup(1), 5.37584, 1e-4);
  EXPECT_DOUBLE_EQ(beta_sup(2), 72.0);
  EXPECT_NEAR(beta_sup(3), 838.068, 1e-2);
  EXPECT_NEAR(beta_sup(4), 13824.0, 1e-6);
  EXPECT_NEAR(beta_sup(8) / 1.30056e9, 1.0, 1e-5);
  EXPECT_NEAR(1.0 / step_sup(1), 0.28377319275152085, 1e-12); // integral of beta
  EXPECT_EQ(beta_sup(19), 0.0);
}

TEST(Profile, ShapeAndFlatness)
{
  EXPECT_DOUBLE_EQ(beta(0.5), 1.0);
  EXPECT_EQ(beta(0.0), 0.0);
  EXPECT_EQ(beta(1.0, 3), 0.0);
  EXPECT_NEAR(step(0.5), 0.5, 1e-15);
  EXPECT_EQ(step(0.0), 0.0);
  EXPECT_EQ(step(1.0), 1.0);
  EXPECT_EQ(cutoff(0.3), 0.0);
  EXPECT_EQ(cutoff(-0.5), 0.0);
  EXPECT_EQ(cutoff(1.0), 1.0);
  EXPECT_EQ(cutoff(-2.0), 1.0);
  // contact of order 8 at both ends: |beta^(k)(u)| = O(u^(9-k))
  for (int k = 0; k <= kMaxOrder; ++k) {
    const double a = std::abs(beta(1e-5, k)), b = std::abs(beta(1e-6, k));
    EXPECT_NEAR(a / b, std::pow(10.0, 9 - k), 1e-3 * std::pow(10.0, 9 - k)) << k;
    EXPECT_NEAR(std::abs(beta(1.0 - 1e-6, k)), b, 1e-9 * b) << k;
  }
  for (double u = 0.01; u < 1.0; u += 0.01)
    EXPECT_LT(step(u - 0.01), step(u));
}

TEST(Profile, StepIsTheNormalisedIntegral)
{
  // Simpson on 2000 panels
  const int m = 2000;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double w = (i == 0 || i == m) ? 1 : (i % 2 ? 4 : 2);
    sum += w * beta(0.3 * i / m);
  }
  EXPECT_NEAR(step(0.3), sum * 0.3 / (3.0 * m) * step_sup(1), 1e-12);
}

TEST(GraphCurve, Validation)
{
  EXPECT_THROW(GraphCurve(0.0), hoops::InputError);
  EXPECT_THROW(GraphCurve(1.0, {{0, 1, 1.0}}), hoops::InputError); // level 0 lives on (1, 2)
  EXPECT_NO_THROW(GraphCurve(2.0, {{0, 1, 1.0}}));
  EXPECT_THROW(GraphCurve(1.0, {{1, 2, 1.0}}), hoops::InputError);
  EXPECT_THROW(GraphCurve(1.0, {{1, 1, -1.0}}), hoops::InputError);
  EXPECT_THROW(GraphCurve(1.0, {}, {{0.5, 0.0}}), hoops::InputError);
  EXPECT_THROW(GraphCurve(1.0).jet(0.5, kMaxOrder + 1), hoops::PreconditionError);
}

TEST(GraphCurve, AtomExamples)
{
  const GraphCurve c(1.0, {{2, -1, 3.0}});
  EXPECT_DOUBLE_EQ(c.value(0.375), -3.0); // centre of (1/4, 1/2)
  EXPECT_EQ(c.value(0.25), 0.0);
  EXPECT_EQ(c.value(0.6), 0.0);
  EXPECT_NEAR(c.derivative(0.3, 2), -3.0 * 16.0 * beta(0.2, 2), 1e-12 * 778.0);
  EXPECT_EQ(c.breakpoints(), (std::vector<double>{0.0, 0.25, 0.5, 1.0}));
}

TEST(GraphCurve, SymbolicDifferenceCancelsExactly)
{
  const GraphCurve g(1.0, {{1, 1, 0.1}, {3, -1, 0.02}});
  const GraphCurve a = g.with_atom({2, 1, std::ldexp(1.0, -150)});
  const GraphCurve d = difference(a, g);
  ASSERT_EQ(d.atoms().size(), 1u);
  EXPECT_EQ(d.value(0.375), std::ldexp(1.0, -150));
  EXPECT_TRUE(difference(g, g).atoms().empty());
  EXPECT_THROW(difference(g, g.with_factors({{0.5, 0.1}})), hoops::PreconditionError);
}

TEST(GraphCurveProperty, DerivativeOracleMatchesFiniteDifferences)
{
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const GraphCurve c = random_curve(rng, trial % 2 == 1);
    double width = 1.0;
    for (const auto& m : c.factors())
      width = std::min(width, m.width);
    const auto bps = c.breakpoints();
    for (int s = 0; s < 20; ++s) {
      const double x = pos(rng);
      int e = 0;
      std::frexp(x, &e);
      const double h = 2e-4 * std::min(std::ldexp(1.0, e - 1), width);
      bool clear = true;
      for (double b : bps)
        clear = clear && std::abs(x - b) > 20 * h;
      if (!clear)
        continue;
      for (int n = 1; n <= kMaxOrder; ++n) {
        const double oracle = c.derivative(x, n);
        const double fd = central_difference(c, x, n, h);
        const double floor = 1e-4 * local_scale(c, n);
        EXPECT_LE(std::abs(oracle - fd), 1e-6 * std::max(std::abs(oracle), floor)) << "trial " << trial << " n " << n;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 3000);
}

TEST(Counterexample, Examples)
{
  const auto fam = counterexample_family(6);
  for (int n = 1; n <= 6; ++n) {
    const double x = std::ldexp(1.5, -n);
    const double f1 = fam.curves[0].value(x), f2 = fam.curves[1].value(x);
    EXPECT_GT(f1, 0.0);
    EXPECT_EQ(f2, n % 2 == 0 ? f1 : -f1) << n;
    EXPECT_DOUBLE_EQ(f1, level_scale(n));
    EXPECT_EQ(fam.curves[2].value(x), -f1);
    EXPECT_EQ(fam.curves[3].value(x), -f2);
  }
  for (double x : {0.0, std::ldexp(1.0, -6), std::ldexp(1.0, -9)})
    for (const auto& c : fam.curves)
      EXPECT_EQ(c.value(x), 0.0);
  EXPECT_THROW(counterexample_family(0), hoops::PreconditionError);
  EXPECT_THROW(counterexample_family(25), hoops::PreconditionError);
  EXPECT_NO_THROW(counterexample_family(24));
}

TEST(CounterexampleProperty, SignBookkeepingPerLevel)
{
  const auto fam = counterexample_family(8);
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = pos(rng);
    if (x <= std::ldexp(1.0, -8))
      continue;
    std::vector<double> v;
    for (const auto& c : fam.curves)
      v.push_back(c.value(x));
    const double b = std::abs(v[0]);
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<double>{-b, -b, b, b}));
    // c1 - c2 + c3 - c4 cancels as a chain
    EXPECT_EQ(fam.curves[0].value(x) - fam.curves[1].value(x) + fam.curves[2].value(x) - fam.curves[3].value(x),
              0.0);
  }
}

TEST(Counterexample, AbelianHolonomyIsTrivialButNotForSO3)
{
  const auto fam = counterexample_family(4);
  hoops::gauge::RandomConnectionOptions opt;
  opt.region_lo = {-0.5, -0.5};
  opt.region_hi = {1.5, 0.5};
  const auto u1 = LieGroupSpec::make(GroupName::U1);
  const auto so3 = LieGroupSpec::make(GroupName::SO3);
  double worst_u1 = 0.0, best_so3 = 0.0;
  for (int seed = 0; seed < 20; ++seed) {
    const auto h = transport_loop(hoops::gauge::random_connection(u1, opt, 6, seed), fam);
    worst_u1 = std::max(worst_u1, hoops::gauge::group_distance(h, u1.identity()));
    const auto g = transport_loop(hoops::gauge::random_connection(so3, opt, 6, seed), fam);
    best_so3 = std::max(best_so3, hoops::gauge::group_distance(g, so3.identity()));
  }
  EXPECT_LT(worst_u1, 1e-12);
  EXPECT_GT(best_so3, 1e-6);
  const auto a3 = hoops::gauge::random_connection(u1, {{0, 0, 0}, {1, 1, 1}}, 2, 1);
  EXPECT_THROW(transport_loop(a3, fam), hoops::InputError);
}

TEST(Counterexample, FlattenedLoopWord)
{
  EXPECT_TRUE(hoops::geom::decompose(flatten_loop(counterexample_family(1), 4)).word.empty());
  for (int n = 2; n <= 4; ++n) {
    const auto dec = hoops::geom::decompose(flatten_loop(counterexample_family(n), 4));
    EXPECT_FALSE(dec.word.empty()) << n;
    EXPECT_TRUE(hoops::words::exponent_vector(dec.word).is_zero()) << n;
  }
}

TEST(FlattenToPl, Examples)
{
  const auto flat = flatten_to_pl(GraphCurve(1.0), 4, 3);
  for (const auto& p : flat.vertices())
    EXPECT_EQ(p[1], 0);
  EXPECT_EQ(flat.vertices().front(), hoops::geom::Point::from_ints({0, 0}));
  EXPECT_EQ(flat.vertices().back(), hoops::geom::Point::from_ints({1, 0}));
  EXPECT_EQ(flat.num_segments(), 3u * 4u + 1u);
  EXPECT_THROW(flatten_to_pl(GraphCurve(1.0), 1), hoops::PreconditionError);

  const auto fam = counterexample_family(5);
  const auto p1 = flatten_to_pl(fam.curves[0], 6, 5).vertices();
  const auto p2 = flatten_to_pl(fam.curves[1], 6, 5).vertices();
  const auto p3 = flatten_to_pl(fam.curves[2], 6, 5).vertices();
  ASSERT_EQ(p1.size(), p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    EXPECT_EQ(p3[i][0], p1[i][0]);
    EXPECT_EQ(p3[i][1], -p1[i][1]);
    const double x = p1[i][0].get_d();
    int e = 0;
    std::frexp(x, &e);
    const bool even_level = (1 - e) % 2 == 0;
    if (even_level || p1[i][1] == 0)
      EXPECT_EQ(p1[i], p2[i]);
    else
      EXPECT_EQ(p2[i][1], -p1[i][1]);
  }
}

TEST(CnDistance, Examples)
{
  const auto f = counterexample_family(5).curves[0];
  EXPECT_EQ(cn_distance(f, f, 4).value, 0.0);
  EXPECT_THROW(cn_distance(f, f, kMaxOrder + 1), hoops::PreconditionError);
  EXPECT_THROW(cn_distance(f, GraphCurve(2.0), 1), hoops::PreconditionError);
  // Adding level 6: closed form max_k s_6 2^(6k) sup|beta^(k)|.
  const auto g = counterexample_family(6).curves[0];
  for (int order = 0; order <= 4; ++order) {
    double closed = 0.0;
    for (int k = 0; k <= order; ++k)
      closed = std::max(closed, level_scale(6) * std::ldexp(beta_sup(k), 6 * k));
    const auto d = cn_distance(f, g, order, 400);
    EXPECT_LE(d.value, closed * (1 + 1e-12));
    EXPECT_GE(d.value, closed * 0.999) << order;
    EXPECT_LE(std::abs(d.refinement_change()), 0.01 * closed);
  }
}

TEST(CnDistanceProperty, SymmetricAndTriangle)
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_curve(rng, false), b = random_curve(rng, false), c = random_curve(rng, false);
    const double ab = cn_distance(a, b, 3, 64).value, ba = cn_distance(b, a, 3, 64).value;
    EXPECT_NEAR(ab, ba, 1e-12 * ab);
    const double ac = cn_distance(a, c, 3, 64).value, cb = cn_distance(c, b, 3, 64).value;
    EXPECT_LE(ab, (ac + cb) * (1 + 1e-12));
  }
}

TEST(Mollify, Examples)
{
  const auto curves = family_curves(4);
  const auto same = mollify(curves, {});
  for (std::size_t i = 0; i < curves.size(); ++i)
    EXPECT_EQ(cn_distance(same[i], curves[i], 8).value, 0.0);

  const MollifierSpec spec{{{0.375, 0.1}}};
  const auto out = mollify(curves, spec);
  for (const auto& c : out)
    for (double x = 0.325; x <= 0.425; x += 0.005)
      EXPECT_EQ(c.value(x), 0.0);
  EXPECT_EQ(out[0].value(0.7), curves[0].value(0.7));

  EXPECT_THROW(mollify(curves, {{{0.3, 0.1}, {0.39, 0.1}}}), hoops::PreconditionError);
  EXPECT_NO_THROW(mollify(curves, {{{0.3, 0.1}, {0.41, 0.1}}}));
  EXPECT_THROW(mollify(curves, {{{1.5, 0.1}}}), hoops::PreconditionError);
  EXPECT_THROW(mollify(out, spec), hoops::PreconditionError);
}

TEST(MollifyProperty, PreservesCoincidences)
{
  const auto curves = family_curves(6);
  const auto out = mollify(curves, {{{0.5, 0.01}, {0.25, 0.004}, {0.0, 0.02}}});
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  int coincidences = 0;
  for (int s = 0; s < 2000; ++s) {
    const double x = s % 2 ? pos(rng) : std::ldexp(1.0, -(s % 12)) * (1.0 + pos(rng) * 1e-3);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (curves[i].value(x) == curves[j].value(x)) {
          ++coincidences;
          EXPECT_EQ(out[i].value(x), out[j].value(x));
        }
  }
  EXPECT_GT(coincidences, 1000);
}

TEST(ChooseWidth, DegenerateAtTheTruncatedAccumulationPoint)
{
  const auto curves = family_curves(6);
  const auto w = choose_width(curves, 0.0, 4, 1e-2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->degenerate);
  EXPECT_EQ(w->width, std::ldexp(1.0, -6));
}

TEST(ChooseWidth, LevelBoundaryMeetsTheBounds)
{
  const auto curves = family_curves(6);
  for (double eps : {1e-2, 1e-3}) {
    const auto w = choose_width(curves, 0.25, 4, eps);
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(w->degenerate);
    EXPECT_EQ(w->curves.size(), 4u);
    for (const auto& r : w->bounds)
      for (int n = 0; n <= 4; ++n) {
        EXPECT_LT(r[n], eps);
        double sum = 0.0;
        for (int k = 1; k <= n; ++k)
          sum += std::tgamma(n + 1) / (std::tgamma(k + 1) * std::tgamma(n - k + 1)) * cutoff_sup(k) * r[n - k];
        EXPECT_LT(sum, r[n]);
      }
    // a width twice as large must fail
    const auto ratios = contact_ratios(curves[0], 0.25, 2 * w->width, 4);
    EXPECT_GT(*std::max_element(ratios.begin(), ratios.end()), 0.0);
    const auto out = mollify(curves, {{{0.25, w->width}}});
    for (int i = 0; i < 4; ++i) {
      EXPECT_LE(cn_distance(curves[i], out[i], 4).value, deformation_bound(4, eps));
      for (double x = 0.25 - w->width; x <= 0.25 + w->width; x += w->width / 50)
        for (int n = 0; n <= 4; ++n)
          EXPECT_LT(std::abs(out[i].derivative(x, n)), 2 * eps);
    }
  }
}

TEST(ChooseWidth, NoContactMeansNoWidth)
{
  const GraphCurve c(1.0, {{1, 1, 1.0}});
  EXPECT_FALSE(choose_width({c}, 0.75, 4, 1e-2).has_value());
  EXPECT_TRUE(has_contact(c, 0.5, 8));
}

TEST(Homotopy, Examples)
{
  const auto gamma = counterexample_family(4).curves[0];
  const auto alphas = select_subsequence(gamma, {1, 1, 1.0}, 9);
  const InterpolatingHomotopy h(gamma, alphas);
  for (double t : {0.1, 0.3, 0.55, 0.8}) {
    EXPECT_EQ(h.value(0.0, t), gamma.value(t));
    EXPECT_EQ(h.value(-0.5, t), gamma.value(t));
    EXPECT_EQ(h.deviation(-0.25, t, 2), 0.0);
    for (int n = 1; n <= 8; ++n)
      EXPECT_EQ(h.value(std::ldexp(1.0, -n), t), alphas[n].value(t)) << n;
  }
  EXPECT_THROW(h.partial(0.3, 0.5, 0, 1), hoops::PreconditionError);
}

TEST(Homotopy, PreconditionNamesTheOffendingIndex)
{
  const auto gamma = counterexample_family(3).curves[0];
  auto alphas = select_subsequence(gamma, {1, 1, 1.0}, 4);
  alphas[2] = gamma.with_atom({2, 1, 1e-8});
  try {
    InterpolatingHomotopy h(gamma, alphas);
    FAIL() << "expected a precondition error";
  } catch (const hoops::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("alpha_2"), std::string::npos) << e.what();
  }
}

TEST(Homotopy, PartialMatchesFiniteDifferenceInS)
{
  const auto gamma = counterexample_family(3).curves[0];
  const InterpolatingHomotopy h(gamma, select_subsequence(gamma, {2, -1, 1.0}, 5));
  for (double s : {0.3, 0.7, 0.14, 0.09})
    for (double t : {0.3, 0.4}) {
      const double eps = 1e-4 * s;
      for (int l = 0; l <= 2; ++l) {
        auto d = [&](double x) { return h.deviation(x, t, l); };
        const double fd = (8.0 * (d(s + eps) - d(s - eps)) - (d(s + 2 * eps) - d(s - 2 * eps))) / (12.0 * eps);
        const double exact = h.partial(s, t, 1, l);
        EXPECT_NEAR(fd, exact, 1e-6 * std::abs(exact) + 1e-300) << s << " " << l;
      }
    }
}

TEST(HomotopyProperty, BoundsHold)
{
  for (int levels : {2, 5}) {
    const auto gamma = counterexample_family(levels).curves[1];
    const InterpolatingHomotopy h(gamma, select_subsequence(gamma, {3, 1, 0.5}, 9));
    const auto checks = h.verify_bounds(8, 3);
    EXPECT_EQ(checks.size(), 60u); // 1 + 3 + 6 + 5 * 10 admissible (n, k, l)
    for (const auto& c : checks)
      EXPECT_TRUE(c.ok()) << c.n << " " << c.k << " " << c.l << " " << c.sampled_max;
  }
}
