#include "fnhol/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "fnhol/error.hpp"

namespace fnhol {

Mat2 SlPantsCocycle::evaluate(const LocalWord& w) const {
  Mat2 m = Mat2::identity();
  for (const LocalStep& s : w) {
    const Mat2& e = edges[static_cast<std::size_t>(s.edge)];
    m = m * (s.reversed ? e.inverse() : e);
  }
  return m;
}

namespace {

constexpr double kLiftTolerance = 1e-8;

void check_signs(const BoundarySigns& eps) {
  for (int e : eps.eps) {
    if (e != 1 && e != -1) throw Error(Errc::SignConstraint, "boundary signs must be +1 or -1");
  }
  if (eps.eps[0] * eps.eps[1] * eps.eps[2] != -1) {
    throw Error(Errc::SignConstraint, "boundary signs must multiply to -1");
  }
}

}  // namespace

std::vector<SlPantsCocycle> sl2_pants_candidates(const PantsLengths& l, const BoundarySigns& eps) {
  check_lengths(l);
  std::vector<SlPantsCocycle> out;
  for (int bits = 0; bits < 64; ++bits) {
    SlPantsCocycle c;
    bool positive = true;
    for (int k = 0; k < 3; ++k) {
      const double seam_sign = (bits >> k) & 1 ? -1.0 : 1.0;
      const double arc_sign = (bits >> (k + 3)) & 1 ? -1.0 : 1.0;
      const Mat2 d = diag(std::exp(0.25 * l[k]));
      c.edges[static_cast<std::size_t>(seam_edge(k))] = seam_sign * seam_matrix_sl2(l, k);
      c.edges[static_cast<std::size_t>(arc_edge(k, 0))] = arc_sign * d;
      c.edges[static_cast<std::size_t>(arc_edge(k, 1))] =
          (arc_sign * eps.eps[static_cast<std::size_t>(k)]) * d;
      positive = positive && c.edges[static_cast<std::size_t>(seam_edge(k))].a > 0.0 &&
                 c.edges[static_cast<std::size_t>(arc_edge(k, 0))].a > 0.0;
    }
    if (!positive) continue;
    const double top = max_abs_diff(c.evaluate(top_hexagon_word()), Mat2::identity());
    const double bottom = max_abs_diff(c.evaluate(bottom_hexagon_word()), Mat2::identity());
    if (top <= kLiftTolerance && bottom <= kLiftTolerance) out.push_back(c);
  }
  return out;
}

SlPantsCocycle sl2_pants_cocycle(const PantsLengths& l, const BoundarySigns& eps) {
  check_signs(eps);
  auto found = sl2_pants_candidates(l, eps);
  if (found.size() != 1) {
    throw Error(Errc::SignConstraint,
                fmt::format("expected one SL2 lift of the pants, found {}", found.size()));
  }
  return found.front();
}

SpinTree spanning_tree(const SurfaceSpec& s) {
  std::map<int, int> pos;
  for (std::size_t j = 0; j < s.pants.size(); ++j) pos[s.pants[j]] = static_cast<int>(j);
  std::vector<int> parent(s.pants.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<CurveSpec> sorted = s.curves;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  SpinTree t;
  for (const auto& c : sorted) {
    const int a = root(pos.at(c.left.pants));
    const int b = root(pos.at(c.right.pants));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      t.tree_curves.push_back(c.id);
    } else {
      t.free_curves.push_back(c.id);
    }
  }
  return t;
}

SpinSurfaceCocycle::SpinSurfaceCocycle(std::shared_ptr<const CellComplex> complex,
                                       std::vector<Mat2> values, SignMap epsilon,
                                       SignMap crossing)
    : complex_(std::move(complex)),
      values_(std::move(values)),
      epsilon_(std::move(epsilon)),
      crossing_(std::move(crossing)) {}

Mat2 SpinSurfaceCocycle::value(SignedEdge e) const {
  const Mat2& v = values_.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? v.inverse() : v;
}

Mat2 SpinSurfaceCocycle::holonomy(const EdgeWord& w) const {
  complex_->check_composable(w);
  Mat2 m = Mat2::identity();
  for (const auto& e : w) m = m * value(e);
  return m;
}

double SpinSurfaceCocycle::face_residual(int face_id) const {
  return max_abs_diff(holonomy(complex_->face(face_id).boundary), Mat2::identity());
}

double SpinSurfaceCocycle::max_face_residual() const {
  double worst = 0.0;
  for (const auto& f : complex_->faces()) worst = std::max(worst, face_residual(f.id));
  return worst;
}

SurfaceCocycle SpinSurfaceCocycle::reduction() const {
  std::vector<ProjMat2> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.emplace_back(v);
  return SurfaceCocycle(complex_, std::move(out));
}

namespace {

int sign_of(const SignMap& m, int curve_id, const char* what) {
  const auto it = m.find(curve_id);
  if (it == m.end()) {
    throw Error(Errc::Validation, fmt::format("missing {} sign for curve {}", what, curve_id));
  }
  if (it->second != 1 && it->second != -1) {
    throw Error(Errc::Validation, fmt::format("{} sign for curve {} must be +1 or -1", what, curve_id));
  }
  return it->second;
}

}  // namespace

int pants_sign_product(const CellComplex& cx, const SignMap& epsilon, int j) {
  int product = 1;
  for (int k = 0; k < 3; ++k) {
    const int id = cx.spec().curves[static_cast<std::size_t>(cx.curve_at(j, k))].id;
    product *= sign_of(epsilon, id, "epsilon");
  }
  return product;
}

SpinSurfaceCocycle assemble_spin(std::shared_ptr<const CellComplex> cx, const FNPoint& fn,
                                 const SignMap& epsilon, const SignMap& crossing) {
  for (const auto& c : cx->spec().curves) {
    sign_of(epsilon, c.id, "epsilon");
    sign_of(crossing, c.id, "crossing");
  }
  for (int id : spanning_tree(cx->spec()).tree_curves) {
    if (crossing.at(id) != 1) {
      throw Error(Errc::SpinInconsistency,
                  fmt::format("tree curve {} must carry crossing sign +1", id));
    }
  }
  std::vector<Mat2> values(cx->edges().size());
  for (int j = 0; j < cx->pants_count(); ++j) {
    if (pants_sign_product(*cx, epsilon, j) != -1) {
      throw Error(Errc::SpinInconsistency,
                  fmt::format("boundary signs of pants {} do not multiply to -1",
                              cx->spec().pants[static_cast<std::size_t>(j)]));
    }
    BoundarySigns eps;
    for (int k = 0; k < 3; ++k) {
      const int id = cx->spec().curves[static_cast<std::size_t>(cx->curve_at(j, k))].id;
      eps.eps[static_cast<std::size_t>(k)] = epsilon.at(id);
    }
    const SlPantsCocycle p = sl2_pants_cocycle(pants_lengths(*cx, fn, j), eps);
    for (int e = 0; e < kPantsEdges; ++e) {
      values[static_cast<std::size_t>(9 * j + e)] = p.edges[static_cast<std::size_t>(e)];
    }
  }
  for (int i = 0; i < cx->curve_count(); ++i) {
    const int id = cx->spec().curves[static_cast<std::size_t>(i)].id;
    const auto it = fn.find(id);
    if (it == fn.end()) throw Error(Errc::Lookup, fmt::format("no coordinates for curve {}", id));
    const Mat2 x = static_cast<double>(crossing.at(id)) *
                   crossing_matrix(std::exp(-0.5 * it->second.twist));
    values[static_cast<std::size_t>(cx->crossing(i, 0))] = x;
    values[static_cast<std::size_t>(cx->crossing(i, 1))] = static_cast<double>(epsilon.at(id)) * x;
  }
  return SpinSurfaceCocycle(std::move(cx), std::move(values), epsilon, crossing);
}

SpinSurfaceCocycle assemble_spin(const SurfaceSpec& s, const FNPoint& fn, const SignMap& epsilon,
                                 const SignMap& crossing) {
  return assemble_spin(build_complex(s), fn, epsilon, crossing);
}

SignMap apply_pants_gauge(const SurfaceSpec& s, const SignMap& crossing, int pants_id) {
  SignMap out = crossing;
  for (const auto& c : s.curves) {
    const bool left = c.left.pants == pants_id;
    const bool right = c.right.pants == pants_id;
    if (left != right) out[c.id] = -out.at(c.id);
  }
  return out;
}

SignMap crossing_normal_form(const SurfaceSpec& s, const SignMap& crossing) {
  if (s.pants.empty()) return crossing;
  const SpinTree tree = spanning_tree(s);
  std::map<int, const CurveSpec*> by_id;
  for (const auto& c : s.curves) by_id[c.id] = &c;

  // gauge sign per pants id, propagated along the tree from the first pants
  std::map<int, int> gauge{{s.pants.front(), 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int id : tree.tree_curves) {
      const CurveSpec& c = *by_id.at(id);
      const bool has_l = gauge.count(c.left.pants) > 0;
      const bool has_r = gauge.count(c.right.pants) > 0;
      if (has_l == has_r) continue;
      const int known = has_l ? gauge.at(c.left.pants) : gauge.at(c.right.pants);
      gauge[has_l ? c.right.pants : c.left.pants] = crossing.at(id) * known;
      grew = true;
    }
  }
  SignMap out;
  for (const auto& c : s.curves) {
    out[c.id] = crossing.at(c.id) * gauge.at(c.left.pants) * gauge.at(c.right.pants);
  }
  return out;
}

SpinEnumeration enumerate_spin(const SurfaceSpec& s) {
  const auto cx = build_complex(s);
  const int m = cx->curve_count();
  if (m > 20) throw Error(Errc::Range, "enumerate_spin supports at most 20 curves");
  SpinEnumeration out;
  out.tree = spanning_tree(s);
  std::vector<int> ids;
  for (const auto& c : s.curves) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());

  for (long bits = 0; bits < (1L << m); ++bits) {
    SignMap eps;
    for (int i = 0; i < m; ++i) eps[ids[static_cast<std::size_t>(i)]] = (bits >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (int j = 0; j < cx->pants_count() && ok; ++j) ok = pants_sign_product(*cx, eps, j) == -1;
    if (!ok) continue;
    out.epsilons.push_back(eps);

    const auto& free = out.tree.free_curves;
    int count = 0;
    for (long sbits = 0; sbits < (1L << free.size()); ++sbits) {
      SignMap crossing;
      for (int id : ids) crossing[id] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) crossing[free[f]] = (sbits >> f) & 1 ? -1 : 1;
      out.classes.push_back({eps, crossing});
      ++count;
    }
    out.classes_per_epsilon.push_back(count);
  }
  return out;
}

int rot2(const SpinSurfaceCocycle& c, const EdgeWord& loop) {
  const Mat2 h = c.holonomy(loop);
  if (!is_hyperbolic(h)) throw Error(Errc::NonHyperbolic, "rot2: loop holonomy is not hyperbolic");
  return h.trace() > 0.0 ? 0 : 1;
}

}  // namespace fnhol
