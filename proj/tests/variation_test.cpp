#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fnhol/error.hpp"
#include "fnhol/variation.hpp"
#include "support.hpp"

using namespace fnhol;

namespace {

double fd_log_bc(PantsLengths l, int k, int m, double h) {
  PantsLengths up = l;
  PantsLengths down = l;
  up.l[static_cast<std::size_t>(m)] += h;
  down.l[static_cast<std::size_t>(m)] -= h;
  return (std::log(bc_magnitude(up, k)) - std::log(bc_magnitude(down, k))) / (2.0 * h);
}

double pairing_with_cartan(const TracelessMat2& z) {
  return (z.matrix() * kCartan.matrix()).trace();
}

bool is_zero(const TracelessMat2& z) { return z.x == 0.0 && z.y == 0.0 && z.z == 0.0; }

}  // namespace

TEST_CASE("gradient of log |bc| against finite differences") {
  const PantsLengths twos{{2.0, 2.0, 2.0}};
  const auto g = grad_log_bc(twos, 0);
  for (int m = 0; m < 3; ++m) {
    CHECK(std::abs(g[static_cast<std::size_t>(m)] - fd_log_bc(twos, 0, m, 1e-5)) <= 1e-8);
  }
  // cyclic shifts
  for (int k = 1; k < 3; ++k) {
    const auto gk = grad_log_bc(twos, k);
    for (int m = 0; m < 3; ++m) {
      CHECK(gk[static_cast<std::size_t>(PantsLengths::mod3(m + k))] ==
            doctest::Approx(g[static_cast<std::size_t>(m)]).epsilon(1e-14));
    }
  }

  testsupport::Rng rng(307);
  for (int n = 0; n < 300; ++n) {
    const PantsLengths l{{rng.uniform(0.2, 8.0), rng.uniform(0.2, 8.0), rng.uniform(0.2, 8.0)}};
    for (int k = 0; k < 3; ++k) {
      const auto gk = grad_log_bc(l, k);
      for (int m = 0; m < 3; ++m) {
        CHECK(std::abs(gk[static_cast<std::size_t>(m)] - fd_log_bc(l, k, m, 1e-5)) <= 1e-7);
      }
      const double lp = l[k + 1];
      const double expect =
          std::sinh(0.5 * lp) / (2.0 * (std::cosh(0.5 * lp) + std::cosh(0.5 * (l[k - 1] + l[k]))));
      CHECK(gk[static_cast<std::size_t>(PantsLengths::mod3(k + 1))] ==
            doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("zero and pure twist directions") {
  const SurfaceSpec s = testsupport::genus2();
  testsupport::Rng rng(311);
  const FNPoint fn = rng.fn(s);
  const VariationCocycle zero = variation_cocycle(s, fn, {});
  for (const auto& z : zero.values()) CHECK(is_zero(z));
  CHECK(max_entry_difference(fd_variation(s, fn, {}), zero) <= 1e-12);

  const VariationCocycle twist = variation_cocycle(s, fn, {{1, {0.0, 1.0}}});
  const CellComplex& cx = twist.complex();
  const int i = cx.curve_index(1);
  for (const Edge& e : cx.edges()) {
    if (e.id == cx.crossing(i, 0) || e.id == cx.crossing(i, 1)) {
      CHECK((twist[e.id] - 0.5 * kCartan).max_abs() == 0.0);
    } else {
      CHECK(is_zero(twist[e.id]));
    }
  }
}

TEST_CASE("length direction on boundary arcs") {
  const SurfaceSpec s = testsupport::genus2();
  testsupport::Rng rng(313);
  const FNPoint fn = rng.fn(s);
  const VariationCocycle fd = fd_variation(s, fn, {{2, {1.0, 0.0}}});
  const CellComplex& cx = fd.complex();
  const int i = cx.curve_index(2);
  for (const BoundarySlot& side : {s.curves[1].left, s.curves[1].right}) {
    const int j = cx.pants_index(side.pants);
    for (int eps = 0; eps < 2; ++eps) {
      CHECK((fd[cx.arc(j, side.k, eps)] - 0.25 * kCartan).max_abs() <= 1e-9);
    }
  }
  CHECK(is_zero(variation_cocycle(s, fn, {{2, {1.0, 0.0}}})[cx.crossing(i, 0)]));
}

TEST_CASE("closed form matches finite differences") {
  testsupport::Rng rng(317);
  for (const SurfaceSpec& s : {testsupport::genus2(), testsupport::genus3()}) {
    for (int n = 0; n < 50; ++n) {
      const FNPoint fn = rng.fn(s);
      const TangentVector v = rng.tangent(s);
      const SurfaceCocycle base = assemble_cocycle(s, fn);
      const double d = max_entry_difference(variation_cocycle(base, fn, v), fd_variation(base, fn, v));
      CHECK(d <= 1e-6);
    }
  }
}

TEST_CASE("finite differences converge at second order") {
  testsupport::Rng rng(331);
  const SurfaceSpec s = testsupport::genus2();
  for (int n = 0; n < 20; ++n) {
    const FNPoint fn = rng.fn(s);
    const TangentVector v = rng.tangent(s);
    const SurfaceCocycle base = assemble_cocycle(s, fn);
    const VariationCocycle exact = variation_cocycle(base, fn, v);
    const double e1 = max_entry_difference(exact, fd_variation(base, fn, v, 1e-2));
    const double e2 = max_entry_difference(exact, fd_variation(base, fn, v, 5e-3));
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
  }
}

TEST_CASE("linearity") {
  testsupport::Rng rng(337);
  const SurfaceSpec s = testsupport::genus3();
  const FNPoint fn = rng.fn(s);
  const SurfaceCocycle base = assemble_cocycle(s, fn);
  const TangentVector u = rng.tangent(s);
  const TangentVector v = rng.tangent(s);
  const double a = rng.normal();
  const double b = rng.normal();
  TangentVector w;
  for (const auto& c : s.curves) {
    w[c.id] = {a * u.at(c.id).dl + b * v.at(c.id).dl, a * u.at(c.id).dtau + b * v.at(c.id).dtau};
  }
  const VariationCocycle lhs = variation_cocycle(base, fn, w);
  const VariationCocycle rhs =
      variation_cocycle(base, fn, u).scaled(a) + variation_cocycle(base, fn, v).scaled(b);
  CHECK(max_entry_difference(lhs, rhs) <= 1e-13 * (std::abs(a) + std::abs(b) + 1.0) * 10.0);
}

TEST_CASE("seam and arc identities") {
  testsupport::Rng rng(347);
  const SurfaceSpec s = testsupport::genus3_cube();
  for (int n = 0; n < 30; ++n) {
    const FNPoint fn = rng.fn(s);
    const TangentVector v = rng.tangent(s);
    const VariationCocycle z = variation_cocycle(s, fn, v);
    const VariationCocycle fd = fd_variation(z.base(), fn, v);
    const CellComplex& cx = z.complex();
    for (int j = 0; j < cx.pants_count(); ++j) {
      for (int k = 0; k < 3; ++k) {
        const int seam = cx.seam(j, k);
        const Mat2& a = z.base()[seam].rep();
        CHECK(pairing_with_cartan(z[seam]) == 0.0);
        const TracelessMat2 moved = adjoint(a, z[seam]);
        CHECK(std::abs(pairing_with_cartan(moved)) <= 1e-12 * std::max(1.0, z[seam].max_abs()));
        // A is a traceless involution and z is B-orthogonal to it, so Ad(A) negates z
        CHECK((moved + z[seam]).max_abs() <= 1e-10 * std::max(1.0, z[seam].max_abs()));
        const TracelessMat2 fd_moved = adjoint(a, fd[seam]);
        CHECK((fd_moved + fd[seam]).max_abs() <= 1e-6);

        const int id = cx.spec().curves[static_cast<std::size_t>(cx.curve_at(j, k))].id;
        for (int eps = 0; eps < 2; ++eps) {
          const int arc = cx.arc(j, k, eps);
          const TracelessMat2 m = adjoint(z.base()[arc], z[arc]);
          CHECK((m - (0.25 * v.at(id).dl) * kCartan).max_abs() <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("reversal rule") {
  testsupport::Rng rng(349);
  const SurfaceSpec s = testsupport::genus2_handles();
  const FNPoint fn = rng.fn(s);
  const VariationCocycle z = variation_cocycle(s, fn, rng.tangent(s));
  for (const Edge& e : z.complex().edges()) {
    const Mat2 rho = z.base()[e.id].rep();
    // z(e) + Ad(rho(e)) z(e^-1) = 0 is the cocycle condition on the path e e^-1
    const TracelessMat2 sum = z.value({e.id, false}) + adjoint(rho, z.value({e.id, true}));
    CHECK(sum.max_abs() <= 1e-12 * std::max(1.0, rho.max_abs() * rho.max_abs()));
  }
}

TEST_CASE("twisted cocycle condition") {
  testsupport::Rng rng(353);
  for (const SurfaceSpec& s : {testsupport::genus2(), testsupport::genus2_handles(),
                               testsupport::genus3(), testsupport::genus3_cube()}) {
    for (int n = 0; n < 30; ++n) {
      const FNPoint fn = rng.fn(s);
      const SurfaceCocycle base = assemble_cocycle(s, fn);
      const VariationCocycle z = variation_cocycle(base, fn, rng.tangent(s));
      CHECK(check_cocycle_condition(base, z) <= 1e-8);
    }
  }
}

TEST_CASE("coboundaries") {
  testsupport::Rng rng(359);
  const SurfaceSpec s = testsupport::genus2();
  const FNPoint fn = rng.fn(s, 0.5, 3.0, 2.0);
  const SurfaceCocycle base = assemble_cocycle(s, fn);
  const std::size_t nv = base.complex().vertices().size();

  const VariationCocycle zero = coboundary(base, std::vector<TracelessMat2>(nv));
  for (const auto& z : zero.values()) CHECK(is_zero(z));

  const TracelessMat2 x = rng.traceless();
  const VariationCocycle constant = coboundary(base, std::vector<TracelessMat2>(nv, x));
  for (const Edge& e : base.complex().edges()) {
    CHECK((constant[e.id] - (adjoint(base[e.id], x) - x)).max_abs() <= 1e-14 * 1e3);
  }
  CHECK(check_cocycle_condition(base, constant) <= 1e-10);

  std::vector<TracelessMat2> w(nv);
  for (auto& t : w) t = rng.traceless();
  CHECK(check_cocycle_condition(base, coboundary(base, w)) <= 1e-10);
  CHECK_THROWS_AS(coboundary(base, std::vector<TracelessMat2>(3)), Error);
}

TEST_CASE("residual detects a perturbed edge") {
  testsupport::Rng rng(367);
  const SurfaceSpec s = testsupport::genus2();
  const FNPoint fn = rng.fn(s);
  const SurfaceCocycle base = assemble_cocycle(s, fn);
  const VariationCocycle z = variation_cocycle(base, fn, rng.tangent(s));
  for (const Edge& e : base.complex().edges()) {
    std::vector<TracelessMat2> values = z.values();
    values[static_cast<std::size_t>(e.id)].y += 1e-3;
    CHECK(check_cocycle_condition(base, VariationCocycle(base, values)) >= 1e-4);
  }
}

TEST_CASE("finite difference errors") {
  const SurfaceSpec s = testsupport::genus2();
  testsupport::Rng rng(373);
  const FNPoint fn = rng.fn(s);
  const SurfaceCocycle base = assemble_cocycle(s, fn);
  CHECK_THROWS_AS(fd_variation(base, fn, {}, 0.0), Error);

  // a base value a quarter turn away from the family leaves the sign undecided
  std::vector<ProjMat2> values = base.values();
  values[0] = ProjMat2(values[0].rep() * half_turn());
  const SurfaceCocycle skewed(base.complex_ptr(), values);
  try {
    fd_variation(skewed, fn, rng.tangent(s));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Lift);
  }
}
