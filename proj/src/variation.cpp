#include "fnhol/variation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fnhol/error.hpp"

namespace fnhol {

TangentCoord tangent_at(const TangentVector& v, int curve_id) {
  const auto it = v.find(curve_id);
  return it == v.end() ? TangentCoord{} : it->second;
}

namespace {

TracelessMat2 reversed_value(const Mat2& rho, const TracelessMat2& z) {
  return -adjoint(rho.inverse(), z);
}

}  // namespace

VariationCocycle::VariationCocycle(SurfaceCocycle base, std::vector<TracelessMat2> values)
    : base_(std::move(base)), values_(std::move(values)) {}

TracelessMat2 VariationCocycle::value(SignedEdge e) const {
  const TracelessMat2& z = values_.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? reversed_value(base_[e.edge].rep(), z) : z;
}

VariationCocycle VariationCocycle::operator+(const VariationCocycle& other) const {
  std::vector<TracelessMat2> out(values_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = values_[e] + other.values_.at(e);
  return VariationCocycle(base_, std::move(out));
}

VariationCocycle VariationCocycle::scaled(double s) const {
  std::vector<TracelessMat2> out(values_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = s * values_[e];
  return VariationCocycle(base_, std::move(out));
}

std::array<double, 3> grad_log_bc(const PantsLengths& l, int k) {
  const double lm = l[k - 1];
  const double l0 = l[k];
  const double lp = l[k + 1];
  const double num = std::cosh(0.5 * lp) + std::cosh(0.5 * (lm + l0));
  const double shared = std::sinh(0.5 * (lm + l0)) / (2.0 * num);
  std::array<double, 3> g{};
  g[static_cast<std::size_t>(PantsLengths::mod3(k + 1))] = std::sinh(0.5 * lp) / (2.0 * num);
  g[static_cast<std::size_t>(PantsLengths::mod3(k - 1))] = shared - 0.5 / std::tanh(0.5 * lm);
  g[static_cast<std::size_t>(PantsLengths::mod3(k))] = shared - 0.5 / std::tanh(0.5 * l0);
  return g;
}

VariationCocycle variation_cocycle(const SurfaceCocycle& base, const FNPoint& fn,
                                   const TangentVector& v) {
  const CellComplex& cx = base.complex();
  std::vector<TracelessMat2> z(cx.edges().size());
  for (int j = 0; j < cx.pants_count(); ++j) {
    const PantsLengths l = pants_lengths(cx, fn, j);
    std::array<double, 3> dl{};
    for (int k = 0; k < 3; ++k) {
      const int id = cx.spec().curves[static_cast<std::size_t>(cx.curve_at(j, k))].id;
      dl[static_cast<std::size_t>(k)] = tangent_at(v, id).dl;
    }
    for (int k = 0; k < 3; ++k) {
      const auto g = grad_log_bc(l, k);
      const double dlog = g[0] * dl[0] + g[1] * dl[1] + g[2] * dl[2];
      const double coeff = 0.5 * std::sqrt(bc_magnitude(l, k) / bc_minus_one(l, k)) * dlog;
      z[static_cast<std::size_t>(cx.seam(j, k))] = coeff * kSymmetricOffDiag;
      const TracelessMat2 arc = (0.25 * dl[static_cast<std::size_t>(k)]) * kCartan;
      z[static_cast<std::size_t>(cx.arc(j, k, 0))] = arc;
      z[static_cast<std::size_t>(cx.arc(j, k, 1))] = arc;
    }
  }
  for (int i = 0; i < cx.curve_count(); ++i) {
    const int id = cx.spec().curves[static_cast<std::size_t>(i)].id;
    const TracelessMat2 x = (0.5 * tangent_at(v, id).dtau) * kCartan;
    z[static_cast<std::size_t>(cx.crossing(i, 0))] = x;
    z[static_cast<std::size_t>(cx.crossing(i, 1))] = x;
  }
  return VariationCocycle(base, std::move(z));
}

VariationCocycle variation_cocycle(const SurfaceSpec& s, const FNPoint& fn, const TangentVector& v) {
  return variation_cocycle(assemble_cocycle(s, fn), fn, v);
}

FNPoint displaced(const FNPoint& fn, const TangentVector& v, double t) {
  FNPoint out = fn;
  for (auto& [id, coord] : out) {
    const TangentCoord d = tangent_at(v, id);
    coord.length += t * d.dl;
    coord.twist += t * d.dtau;
  }
  return out;
}

namespace {

Mat2 aligned(const Mat2& m, const Mat2& base, int edge) {
  const double same = (m - base).max_abs();
  const double flip = (m + base).max_abs();
  if (std::min(same, flip) > 0.5 * std::max(same, flip)) {
    throw Error(Errc::Lift, fmt::format("sign lift of edge {} is ambiguous", edge));
  }
  return same <= flip ? m : -m;
}

}  // namespace

VariationCocycle fd_variation(const SurfaceCocycle& base, const FNPoint& fn,
                              const TangentVector& v, double h) {
  if (!(h > 0.0)) throw Error(Errc::Domain, "fd_variation: step must be positive");
  const auto cx = base.complex_ptr();
  const SurfaceCocycle plus = assemble_cocycle(cx, displaced(fn, v, h));
  const SurfaceCocycle minus = assemble_cocycle(cx, displaced(fn, v, -h));
  std::vector<TracelessMat2> z(cx->edges().size());
  for (std::size_t e = 0; e < z.size(); ++e) {
    const int id = static_cast<int>(e);
    const Mat2& b = base[id].rep();
    const Mat2 p = aligned(plus[id].rep(), b, id);
    const Mat2 m = aligned(minus[id].rep(), b, id);
    z[e] = TracelessMat2::from((1.0 / (2.0 * h)) * ((p - m) * b.inverse()));
  }
  return VariationCocycle(base, std::move(z));
}

VariationCocycle fd_variation(const SurfaceSpec& s, const FNPoint& fn, const TangentVector& v,
                              double h) {
  return fd_variation(assemble_cocycle(s, fn), fn, v, h);
}

VariationCocycle coboundary(const SurfaceCocycle& c, const std::vector<TracelessMat2>& w) {
  const CellComplex& cx = c.complex();
  if (w.size() != cx.vertices().size()) {
    throw Error(Errc::Domain, "coboundary: one value per vertex required");
  }
  std::vector<TracelessMat2> z(cx.edges().size());
  for (const Edge& e : cx.edges()) {
    z[static_cast<std::size_t>(e.id)] = adjoint(c[e.id], w[static_cast<std::size_t>(e.end)]) -
                                        w[static_cast<std::size_t>(e.start)];
  }
  return VariationCocycle(c, std::move(z));
}

namespace {

double word_residual(const SurfaceCocycle& c, const VariationCocycle& z, const EdgeWord& w) {
  Mat2 prefix = Mat2::identity();
  TracelessMat2 sum;
  for (const SignedEdge& e : w) {
    const Mat2& rho = c[e.edge].rep();
    const TracelessMat2& raw = z[e.edge];
    sum += adjoint(prefix, e.reversed ? reversed_value(rho, raw) : raw);
    prefix = prefix * (e.reversed ? rho.inverse() : rho);
  }
  return sum.max_abs();
}

}  // namespace

double face_cocycle_residual(const VariationCocycle& z, int face_id) {
  return word_residual(z.base(), z, z.complex().face(face_id).boundary);
}

double check_cocycle_condition(const SurfaceCocycle& c, const VariationCocycle& z) {
  double worst = 0.0;
  for (const Face& f : c.complex().faces()) {
    worst = std::max(worst, word_residual(c, z, f.boundary));
  }
  return worst;
}

double max_entry_difference(const VariationCocycle& x, const VariationCocycle& y) {
  double worst = 0.0;
  for (std::size_t e = 0; e < x.values().size(); ++e) {
    worst = std::max(worst, (x.values()[e] - y.values().at(e)).max_abs());
  }
  return worst;
}

}  // namespace fnhol
