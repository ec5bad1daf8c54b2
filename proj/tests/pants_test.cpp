#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fnhol/error.hpp"
#include "fnhol/pants.hpp"
#include "support.hpp"

using namespace fnhol;

namespace {

PantsLengths random_lengths(testsupport::Rng& rng, double lo = 0.1, double hi = 10.0) {
  return {{rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)}};
}

PantsGauge random_gauge(testsupport::Rng& rng) {
  PantsGauge b;
  for (auto& g : b.at) g = ProjMat2(rng.sl2(1.5));
  return b;
}

double cocycle_distance(const PantsCocycle& x, const PantsCocycle& y) {
  double worst = 0.0;
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    worst = std::max(worst, proj_distance(x.edges[e], y.edges[e]));
  }
  return worst;
}

Mat2 sl2_product(std::initializer_list<Mat2> ms) {
  Mat2 out = Mat2::identity();
  for (const auto& m : ms) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("bc magnitude reference values") {
  const PantsLengths twos{{2.0, 2.0, 2.0}};
  // extended-precision evaluations of the closed form
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(bc_magnitude(twos, k) - 1.920673594207792318945) <= 1e-14);
  }
  const PantsLengths mixed{{0.7, 3.1, 1.9}};
  CHECK(std::abs(bc_magnitude(mixed, 0) - 5.643616887074613936743) <= 1e-13);
  CHECK(std::abs(bc_magnitude(mixed, 1) - 3.051477953587209666815) <= 1e-13);
  CHECK(std::abs(bc_magnitude(mixed, 2) - 1.454300156754002503676) <= 1e-13);
}

TEST_CASE("both closed forms of |bc| and |bc| - 1 agree") {
  testsupport::Rng rng(101);
  for (int n = 0; n < 1000; ++n) {
    const PantsLengths l = random_lengths(rng);
    for (int k = 0; k < 3; ++k) {
      const double f = bc_magnitude(l, k);
      CHECK(f > 1.0);
      CHECK(std::abs(bc_magnitude_product_form(l, k) - f) <= 1e-12 * f);
      CHECK(std::abs(bc_minus_one(l, k) - (f - 1.0)) <= 1e-12 * f);
    }
  }
}

TEST_CASE("seam matrix") {
  const PantsLengths twos{{2.0, 2.0, 2.0}};
  const Mat2 a = seam_matrix_sl2(twos, 0);
  CHECK(a.a == doctest::Approx(0.9595173756674718).epsilon(1e-13));
  CHECK(a.b == doctest::Approx(-1.3858836871136742).epsilon(1e-13));
  CHECK(a.c == doctest::Approx(1.3858836871136742).epsilon(1e-13));
  CHECK(a.d == doctest::Approx(-0.9595173756674718).epsilon(1e-13));

  testsupport::Rng rng(103);
  for (int n = 0; n < 500; ++n) {
    const PantsLengths l = random_lengths(rng);
    for (int k = 0; k < 3; ++k) {
      const Mat2 s = seam_matrix_sl2(l, k);
      const double scale = s.max_abs() * s.max_abs();
      CHECK(std::abs(s.det() - 1.0) <= 1e-12 * scale);
      CHECK(proj_distance(ProjMat2(s * s), ProjMat2::identity()) <= 1e-10 * scale);
      CHECK(s.a * s.b == doctest::Approx(s.c * s.d).epsilon(1e-14));
      CHECK(std::abs(nearest_point_on_imaginary_axis(ProjMat2(s)) - 1.0) <= 1e-12);
      // fixed points a/c and b/d on the positive side, a/c nearer to 0
      CHECK(s.b * s.c < 0.0);
      CHECK(0.0 < s.a / s.c);
      CHECK(s.a / s.c < s.b / s.d);
      // the reflection z -> -conj(z) gives the lemma's pattern b/d < a/c < 0
      const Mat2 m{s.a, -s.b, -s.c, s.d};
      CHECK(m.b / m.d < m.a / m.c);
      CHECK(m.a / m.c < 0.0);
      CHECK(m.c * m.d > 0.0);
    }
  }
}

TEST_CASE("standard pants cocycle satisfies both hexagon relations") {
  testsupport::Rng rng(107);
  for (int n = 0; n < 300; ++n) {
    const PantsLengths l = random_lengths(rng);
    const PantsCocycle c = pants_cocycle(l);
    CHECK(c.standard);
    CHECK(c.hexagon_residual() <= 1e-9);
    CHECK(is_standard(c));
    const PantsLengths back = boundary_lengths(c);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(back[k] - l[k]) <= 1e-10);
      CHECK(std::abs(translation_length(c.evaluate(gamma_word(k))) - l[k]) <= 1e-9 * std::max(1.0, l[k]));
    }
    // gamma_2 gamma_1 gamma_0 = 1
    LocalWord rel = gamma_word(2);
    for (int k : {1, 0}) {
      const LocalWord g = gamma_word(k);
      rel.insert(rel.end(), g.begin(), g.end());
    }
    const ProjMat2 r = c.evaluate(rel);
    CHECK(proj_distance(r, ProjMat2::identity()) <= 1e-8 * std::max(1.0, r.rep().max_abs()));
  }
}

TEST_CASE("SL2 signs of the hexagons with all-positive representatives") {
  const PantsLengths l{{1.3, 2.9, 0.6}};
  const PantsCocycle c = pants_cocycle(l);
  auto sl = [&](const LocalWord& w) {
    Mat2 m = Mat2::identity();
    for (const auto& s : w) {
      const Mat2 e = s.edge < 3 ? seam_matrix_sl2(l, s.edge) : c.edges[static_cast<std::size_t>(s.edge)].rep();
      m = m * (s.reversed ? e.inverse() : e);
    }
    return m;
  };
  CHECK(max_abs_diff(sl(top_hexagon_word()), Mat2::identity()) <= 1e-10);
  CHECK(max_abs_diff(sl(bottom_hexagon_word()), -Mat2::identity()) <= 1e-10);
}

TEST_CASE("Keen trace sign") {
  const PantsLengths twos{{2.0, 2.0, 2.0}};
  const Mat2 a0 = seam_matrix_sl2(twos, 0);
  const double lam = std::exp(1.0);
  const Mat2 m = sl2_product({diag(lam), a0, diag(lam), a0.inverse()});
  CHECK(m.trace() == doctest::Approx(-(lam + 1.0 / lam)).epsilon(1e-13));
  CHECK(m.trace() == doctest::Approx(-3.0861612696304874).epsilon(1e-13));

  testsupport::Rng rng(109);
  for (int n = 0; n < 500; ++n) {
    const PantsLengths l = random_lengths(rng);
    const Mat2 s = seam_matrix_sl2(l, 0);
    const Mat2 g = sl2_product({diag(l.lambda(0)), s, diag(l.lambda(2)), s.inverse()});
    CHECK(g.trace() < -2.0);
    CHECK(g.trace() == doctest::Approx(-(l.lambda(1) + 1.0 / l.lambda(1))).epsilon(1e-9));
  }
}

TEST_CASE("axis of the middle boundary holonomy") {
  testsupport::Rng rng(113);
  for (int n = 0; n < 300; ++n) {
    const PantsLengths l = n == 0 ? PantsLengths{{2.0, 2.0, 2.0}} : random_lengths(rng);
    const PantsCocycle c = pants_cocycle(l);
    const ProjMat2 g1 = c.evaluate(gamma_word(1));
    const double r = nearest_point_on_imaginary_axis(ProjMat2(hyperbolic_eigenbasis(g1.rep())));
    CHECK(std::abs(r - l.lambda(0)) <= 1e-8 * l.lambda(0));
    // the same point from the conjugator D(lambda_0^(1/2)) A_1^-1
    const ProjMat2 conj = proj_diag(std::sqrt(l.lambda(0))) * c.seam(1).inverse();
    CHECK(std::abs(nearest_point_on_imaginary_axis(conj) - l.lambda(0)) <= 1e-10 * l.lambda(0));
    if (n == 0) CHECK(r == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  }
}

TEST_CASE("cyclic symmetry") {
  const PantsLengths l{{0.8, 2.4, 5.5}};
  const PantsLengths rot{{l[1], l[2], l[0]}};
  const PantsCocycle a = pants_cocycle(l);
  const PantsCocycle b = pants_cocycle(rot);
  for (int k = 0; k < 3; ++k) {
    CHECK(proj_distance(b.seam(k), a.seam(k + 1)) <= 1e-14);
    CHECK(proj_distance(b.arc(k, 0), a.arc(k + 1, 0)) <= 1e-14);
  }
}

TEST_CASE("gauge transformations") {
  testsupport::Rng rng(127);
  const PantsLengths l = random_lengths(rng, 0.5, 5.0);
  const PantsCocycle c = pants_cocycle(l);

  const PantsCocycle same = gauge_transform(c, PantsGauge{});
  CHECK(cocycle_distance(same, c) == 0.0);

  PantsGauge constant;
  const ProjMat2 p(rng.sl2());
  for (auto& g : constant.at) g = p;
  CHECK(gauge_transform(c, constant).hexagon_residual() <= 1e-9);

  PantsGauge diagonal;
  for (int k = 0; k < 3; ++k) {
    const ProjMat2 t = proj_diag(rng.uniform(0.2, 5.0));
    diagonal.at[static_cast<std::size_t>(pants_vertex(k, 0))] = t;
    diagonal.at[static_cast<std::size_t>(pants_vertex(k, 1))] = t;
  }
  const PantsCocycle d = gauge_transform(c, diagonal);
  for (int k = 0; k < 3; ++k) {
    CHECK(proj_distance(d.arc(k, 0), c.arc(k, 0)) <= 1e-13);
    CHECK(proj_distance(d.arc(k, 1), c.arc(k, 1)) <= 1e-13);
  }

  const PantsGauge b1 = random_gauge(rng);
  const PantsGauge b2 = random_gauge(rng);
  const double comp = cocycle_distance(gauge_transform(gauge_transform(c, b1), b2),
                                       gauge_transform(c, compose(b1, b2)));
  CHECK(comp <= 1e-9);
}

TEST_CASE("standardize is idempotent on standard cocycles") {
  testsupport::Rng rng(131);
  for (int n = 0; n < 100; ++n) {
    const PantsCocycle c = pants_cocycle(random_lengths(rng, 0.2, 8.0));
    const Standardized s = standardize(c);
    CHECK(s.cocycle.standard);
    CHECK(cocycle_distance(s.cocycle, c) <= 1e-10);
    for (const auto& g : s.gauge.at) CHECK(proj_distance(g, ProjMat2::identity()) <= 1e-10);
  }
}

TEST_CASE("standardize recovers the standard cocycle after a random gauge") {
  testsupport::Rng rng(137);
  for (int n = 0; n < 200; ++n) {
    const PantsLengths l = random_lengths(rng, 0.3, 6.0);
    const PantsCocycle c = pants_cocycle(l);
    const PantsGauge b = random_gauge(rng);
    const PantsCocycle moved = gauge_transform(c, b);
    CHECK_FALSE(moved.standard);
    const Standardized s = standardize(moved);
    CHECK(cocycle_distance(s.cocycle, c) <= 1e-8);
    CHECK(cocycle_distance(gauge_transform(moved, s.gauge), s.cocycle) <= 1e-8);
    CHECK(is_standard(s.cocycle, 1e-8));
    const PantsLengths back = boundary_lengths(s.cocycle);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(back[k] - l[k]) <= 1e-10 * std::max(1.0, l[k]));
  }
}

TEST_CASE("standardize rejects non-hyperbolic boundaries") {
  PantsCocycle c = pants_cocycle({{1.0, 1.0, 1.0}});
  c.edges[static_cast<std::size_t>(arc_edge(1, 0))] = ProjMat2(half_turn());
  try {
    standardize(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFuchsian);
  }
}

TEST_CASE("invalid lengths") {
  CHECK_THROWS_AS(pants_cocycle({{1.0, 0.0, 1.0}}), Error);
  CHECK_THROWS_AS(pants_cocycle({{1.0, -2.0, 1.0}}), Error);
}
