#include "fnhol/pants.hpp"

#include <cmath>

#include "fnhol/error.hpp"

namespace fnhol {

double PantsLengths::lambda(int k) const { return std::exp(0.5 * (*this)[k]); }

void check_lengths(const PantsLengths& l) {
  for (double x : l.l) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(Errc::Domain, "pants lengths must be positive and finite");
    }
  }
}

int pants_edge_start(int edge) {
  if (edge < 3) return pants_vertex(edge, 0);
  const int k = (edge - 3) / 2;
  const int eps = (edge - 3) % 2;
  return pants_vertex(k, eps);
}

int pants_edge_end(int edge) {
  if (edge < 3) return pants_vertex(edge - 1, 1);
  const int k = (edge - 3) / 2;
  const int eps = (edge - 3) % 2;
  return pants_vertex(k, 1 - eps);
}

namespace {

LocalStep seam(int k, bool reversed = false) { return {seam_edge(k), reversed}; }
LocalStep arc(int k, int eps, bool reversed = false) { return {arc_edge(k, eps), reversed}; }

LocalWord inverse_word(const LocalWord& w) {
  LocalWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->edge, !it->reversed});
  return out;
}

LocalWord concat(std::initializer_list<LocalWord> parts) {
  LocalWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

const LocalWord& top_hexagon_word() {
  static const LocalWord w{seam(1, true), arc(1, 0), seam(2, true),
                           arc(2, 0),     seam(0, true), arc(0, 0)};
  return w;
}

const LocalWord& bottom_hexagon_word() {
  static const LocalWord w{arc(0, 1), seam(0), arc(2, 1), seam(2), arc(1, 1), seam(1)};
  return w;
}

LocalWord boundary_word(int k) { return {arc(k, 0), arc(k, 1)}; }

LocalWord gamma_word(int k) {
  switch (PantsLengths::mod3(k)) {
    case 0:
      return boundary_word(0);
    case 1: {
      const LocalWord w{seam(0), arc(2, 0, true), seam(2)};
      return concat({w, {arc(1, 1), arc(1, 0)}, inverse_word(w)});
    }
    default:
      return {seam(0), arc(2, 1), arc(2, 0), seam(0, true)};
  }
}

double bc_magnitude(const PantsLengths& l, int k) {
  const double lm = l[k - 1];
  const double l0 = l[k];
  const double lp = l[k + 1];
  return (std::cosh(0.5 * lp) + std::cosh(0.5 * (lm + l0))) /
         (2.0 * std::sinh(0.5 * lm) * std::sinh(0.5 * l0));
}

double bc_magnitude_product_form(const PantsLengths& l, int k) {
  const double s = 0.25 * (l[0] + l[1] + l[2]);
  return std::cosh(s) * std::cosh(s - 0.5 * l[k + 1]) /
         (std::sinh(0.5 * l[k - 1]) * std::sinh(0.5 * l[k]));
}

double bc_minus_one(const PantsLengths& l, int k) {
  const double s = 0.25 * (l[0] + l[1] + l[2]);
  return std::cosh(s - 0.5 * l[k - 1]) * std::cosh(s - 0.5 * l[k]) /
         (std::sinh(0.5 * l[k - 1]) * std::sinh(0.5 * l[k]));
}

Mat2 seam_matrix_sl2(const PantsLengths& l, int k) {
  const double root_f = std::sqrt(bc_magnitude(l, k));
  // the product form of f - 1 avoids cancellation for long boundaries
  const double root_fm1 = std::sqrt(bc_minus_one(l, k));
  return {root_fm1, -root_f, root_f, -root_fm1};
}

ProjMat2 PantsCocycle::evaluate(const LocalWord& w) const {
  Mat2 m = Mat2::identity();
  for (const LocalStep& s : w) {
    const Mat2& e = edges[static_cast<std::size_t>(s.edge)].rep();
    m = m * (s.reversed ? e.inverse() : e);
  }
  return ProjMat2(m);
}

double PantsCocycle::hexagon_residual() const {
  return std::max(proj_distance(evaluate(top_hexagon_word()), ProjMat2::identity()),
                  proj_distance(evaluate(bottom_hexagon_word()), ProjMat2::identity()));
}

PantsCocycle pants_cocycle(const PantsLengths& l) {
  check_lengths(l);
  PantsCocycle c;
  for (int k = 0; k < 3; ++k) {
    c.edges[static_cast<std::size_t>(seam_edge(k))] = seam_matrix(l, k);
    const ProjMat2 d = proj_diag(std::exp(0.25 * l[k]));
    c.edges[static_cast<std::size_t>(arc_edge(k, 0))] = d;
    c.edges[static_cast<std::size_t>(arc_edge(k, 1))] = d;
  }
  c.standard = true;
  return c;
}

PantsCocycle gauge_transform(const PantsCocycle& c, const PantsGauge& b) {
  PantsCocycle out;
  for (int e = 0; e < kPantsEdges; ++e) {
    const auto& v0 = b.at[static_cast<std::size_t>(pants_edge_start(e))];
    const auto& v1 = b.at[static_cast<std::size_t>(pants_edge_end(e))];
    out.edges[static_cast<std::size_t>(e)] = v0.inverse() * c.edges[static_cast<std::size_t>(e)] * v1;
  }
  out.standard = false;
  return out;
}

PantsGauge compose(const PantsGauge& b1, const PantsGauge& b2) {
  PantsGauge out;
  for (std::size_t v = 0; v < out.at.size(); ++v) out.at[v] = b1.at[v] * b2.at[v];
  return out;
}

Standardized standardize(const PantsCocycle& c) {
  PantsGauge total;
  PantsCocycle cur = c;

  // diagonalize the boundary loops at both vertices of every boundary
  PantsGauge eig;
  for (int k = 0; k < 3; ++k) {
    const Mat2 at0 = (cur.arc(k, 0) * cur.arc(k, 1)).rep();
    const Mat2 at1 = (cur.arc(k, 1) * cur.arc(k, 0)).rep();
    if (!is_hyperbolic(at0)) {
      throw Error(Errc::NotFuchsian, "standardize: boundary holonomy is not hyperbolic");
    }
    eig.at[static_cast<std::size_t>(pants_vertex(k, 0))] = ProjMat2(hyperbolic_eigenbasis(at0));
    eig.at[static_cast<std::size_t>(pants_vertex(k, 1))] = ProjMat2(hyperbolic_eigenbasis(at1));
  }
  cur = gauge_transform(cur, eig);
  total = compose(total, eig);

  // split the boundary translation evenly between the two arcs
  PantsGauge split;
  for (int k = 0; k < 3; ++k) {
    const double mu = std::abs(cur.arc(k, 0).rep().a);
    const double lambda = std::abs((cur.arc(k, 0) * cur.arc(k, 1)).rep().a);
    split.at[static_cast<std::size_t>(pants_vertex(k, 1))] = proj_diag(std::sqrt(lambda) / mu);
  }
  cur = gauge_transform(cur, split);
  total = compose(total, split);

  PantsGauge scale;
  for (int k = 0; k < 3; ++k) {
    const Mat2& a = cur.seam(k).rep();
    const double ratio = (a.a * a.b) / (a.c * a.d);
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
      throw Error(Errc::NotFuchsian, "standardize: seam axis meets the imaginary axis");
    }
    const ProjMat2 t = proj_diag(std::pow(ratio, 0.25));
    scale.at[static_cast<std::size_t>(pants_vertex(k, 0))] = t;
    scale.at[static_cast<std::size_t>(pants_vertex(k, 1))] = t;
  }
  cur = gauge_transform(cur, scale);
  total = compose(total, scale);

  cur.standard = true;
  return {cur, total};
}

bool is_standard(const PantsCocycle& c, double tol) {
  for (int k = 0; k < 3; ++k) {
    const Mat2 loop = (c.arc(k, 0) * c.arc(k, 1)).rep();
    if (!is_hyperbolic(loop)) return false;
    const double half = std::sqrt(std::abs(loop.a) > std::abs(loop.d) ? std::abs(loop.a)
                                                                      : std::abs(loop.d));
    const ProjMat2 expect = proj_diag(half);
    if (!approx_equal(c.arc(k, 0), expect, tol) || !approx_equal(c.arc(k, 1), expect, tol)) {
      return false;
    }
    if (!(half > 1.0)) return false;
    const Mat2& s = c.seam(k).rep();
    if (!(s.b * s.c < 0.0) || !(s.c * s.d < 0.0)) return false;
    const double scale = std::max(1.0, s.max_abs() * s.max_abs());
    if (std::abs(s.a * s.b - s.c * s.d) > tol * scale) return false;
  }
  return c.hexagon_residual() <= tol * 10.0;
}

PantsLengths boundary_lengths(const PantsCocycle& c) {
  PantsLengths out;
  for (int k = 0; k < 3; ++k) {
    out.l[static_cast<std::size_t>(k)] = translation_length(c.evaluate(boundary_word(k)));
  }
  return out;
}

}  // namespace fnhol
