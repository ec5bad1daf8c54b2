#include "fnhol/wp.hpp"

#include <set>

#include "fnhol/error.hpp"

namespace fnhol {

double killing_form(const TracelessMat2& x, const TracelessMat2& y) {
  return 2.0 * x.x * y.x + x.y * y.z + x.z * y.y;
}

namespace {

ChainCell real(int edge, bool reversed = false) { return {{edge, reversed}, false}; }
ChainCell aux(int edge, bool reversed) { return {{edge, reversed}, true}; }

int wrap(int p, int n) { return ((p % n) + n) % n; }

ChainRegion make_region(const CellComplex& cx, RegionKind kind, int orientation,
                        std::vector<ChainCell> upper, std::vector<ChainCell> lower,
                        const ChainOptions& opt) {
  ChainRegion r;
  r.kind = kind;
  r.orientation = orientation;
  r.upper = std::move(upper);
  r.lower = std::move(lower);
  r.source = cx.start(r.upper.front().edge);
  r.sink = cx.end(r.upper.back().edge);

  EdgeWord loop;
  for (const auto& cell : r.upper) loop.push_back(cell.edge);
  for (auto it = r.lower.rbegin(); it != r.lower.rend(); ++it) loop.push_back(it->edge.inverse());
  const int n = static_cast<int>(loop.size());
  const int np = static_cast<int>(r.upper.size());
  const int nq = static_cast<int>(r.lower.size());
  const int base = wrap(np + opt.basepoint_shift, n);
  r.basepoint = cx.start(loop[static_cast<std::size_t>(base)]);

  auto transport = [&](int pos) {
    EdgeWord path;
    if (!opt.backward) {
      for (int p = pos; p != base; p = wrap(p + 1, n)) path.push_back(loop[static_cast<std::size_t>(p)]);
    } else {
      for (int p = pos; p != base; p = wrap(p - 1, n)) {
        path.push_back(loop[static_cast<std::size_t>(wrap(p - 1, n))].inverse());
      }
    }
    return path;
  };

  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < i; ++j) {
      r.terms.push_back({-orientation, r.upper[static_cast<std::size_t>(i)],
                         r.upper[static_cast<std::size_t>(j)], transport(i), transport(j)});
    }
  }
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < i; ++j) {
      r.terms.push_back({orientation, r.lower[static_cast<std::size_t>(i)],
                         r.lower[static_cast<std::size_t>(j)], transport(wrap(np + nq - i, n)),
                         transport(wrap(np + nq - j, n))});
    }
  }
  return r;
}

Mat2 word_value(const SurfaceCocycle& c, const EdgeWord& w) {
  Mat2 m = Mat2::identity();
  for (const auto& e : w) {
    const Mat2& v = c[e.edge].rep();
    m = m * (e.reversed ? v.inverse() : v);
  }
  return m;
}

TracelessMat2 cell_value(const SurfaceCocycle& c, const VariationCocycle& z, SignedEdge e) {
  const TracelessMat2& raw = z[e.edge];
  return e.reversed ? -adjoint(c[e.edge].rep().inverse(), raw) : raw;
}

}  // namespace

FaceChain diagonal_chain(const CellComplex& cx, int face_id, const ChainOptions& opt) {
  const Face& f = cx.face(face_id);
  FaceChain out;
  out.face = face_id;
  if (f.kind == FaceKind::Hexagon) {
    const int j = f.owner;
    if (f.variant == 0) {
      out.regions.push_back(make_region(
          cx, RegionKind::Hexagon, -1,
          {real(cx.seam(j, 2)), aux(cx.arc(j, 1, 0), true), real(cx.seam(j, 1))},
          {real(cx.arc(j, 2, 0)), real(cx.seam(j, 0), true), real(cx.arc(j, 0, 0))}, opt));
      out.regions.push_back(make_region(cx, RegionKind::Bigon, 1,
                                        {real(cx.arc(j, 1, 0)), aux(cx.arc(j, 1, 0), true)}, {},
                                        opt));
    } else {
      out.regions.push_back(make_region(
          cx, RegionKind::Hexagon, -1,
          {real(cx.arc(j, 2, 1), true), real(cx.seam(j, 0), true), real(cx.arc(j, 0, 1), true)},
          {real(cx.seam(j, 2)), aux(cx.arc(j, 1, 1), false), real(cx.seam(j, 1))}, opt));
      out.regions.push_back(make_region(cx, RegionKind::Bigon, -1,
                                        {real(cx.arc(j, 1, 1), true), aux(cx.arc(j, 1, 1), false)},
                                        {}, opt));
    }
  } else {
    const int i = f.owner;
    const auto& curve = cx.spec().curves[static_cast<std::size_t>(i)];
    const int jl = cx.pants_index(curve.left.pants);
    const int jr = cx.pants_index(curve.right.pants);
    const int kl = curve.left.k;
    const int kr = curve.right.k;
    if (f.variant == 0) {
      out.regions.push_back(make_region(cx, RegionKind::Square, 1,
                                        {real(cx.crossing(i, 0)), real(cx.arc(jr, kr, 1), true)},
                                        {real(cx.arc(jl, kl, 0)), real(cx.crossing(i, 1))}, opt));
    } else {
      out.regions.push_back(make_region(cx, RegionKind::Square, 1,
                                        {real(cx.arc(jl, kl, 1), true), real(cx.crossing(i, 1))},
                                        {real(cx.crossing(i, 0)), real(cx.arc(jr, kr, 0))}, opt));
    }
  }
  return out;
}

double term_contribution(const SurfaceCocycle& c, const VariationCocycle& z1,
                         const VariationCocycle& z2, const DiagonalTerm& t) {
  const TracelessMat2 x =
      adjoint(word_value(c, t.transport_first).inverse(), cell_value(c, z1, t.first.edge));
  const TracelessMat2 y =
      adjoint(word_value(c, t.transport_second).inverse(), cell_value(c, z2, t.second.edge));
  return t.sign * killing_form(x, y);
}

double region_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                      const VariationCocycle& z2, const ChainRegion& r) {
  double sum = 0.0;
  for (const auto& t : r.terms) sum += term_contribution(c, z1, z2, t);
  return 2.0 * sum;
}

double pair_on_face(const SurfaceCocycle& c, const VariationCocycle& z1,
                    const VariationCocycle& z2, int face_id, const ChainOptions& opt) {
  double sum = 0.0;
  for (const auto& r : diagonal_chain(c.complex(), face_id, opt).regions) {
    sum += region_pairing(c, z1, z2, r);
  }
  return sum;
}

double wp_pairing(const SurfaceCocycle& c, const VariationCocycle& z1, const VariationCocycle& z2,
                  const ChainOptions& opt) {
  double sum = 0.0;
  for (const auto& f : c.complex().faces()) sum += pair_on_face(c, z1, z2, f.id, opt);
  return sum;
}

double annulus_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                       const VariationCocycle& z2, int curve_index) {
  const int base = 2 * c.complex().pants_count() + 2 * curve_index;
  return pair_on_face(c, z1, z2, base) + pair_on_face(c, z1, z2, base + 1);
}

double pants_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                     const VariationCocycle& z2, int pants_index) {
  return pair_on_face(c, z1, z2, 2 * pants_index) + pair_on_face(c, z1, z2, 2 * pants_index + 1);
}

double wolpert_reference(const TangentVector& u, const TangentVector& v) {
  std::set<int> ids;
  for (const auto& [id, _] : u) ids.insert(id);
  for (const auto& [id, _] : v) ids.insert(id);
  double sum = 0.0;
  for (int id : ids) {
    const TangentCoord a = tangent_at(u, id);
    const TangentCoord b = tangent_at(v, id);
    sum += a.dtau * b.dl - a.dl * b.dtau;
  }
  return sum;
}

std::vector<TangentVector> coordinate_basis(const SurfaceSpec& s) {
  std::vector<TangentVector> out;
  for (const auto& c : s.curves) out.push_back({{c.id, {1.0, 0.0}}});
  for (const auto& c : s.curves) out.push_back({{c.id, {0.0, 1.0}}});
  return out;
}

}  // namespace fnhol
