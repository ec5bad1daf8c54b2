#include "fnhol/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "fnhol/error.hpp"

namespace fnhol {

std::string Diagnostics::summary() const {
  std::string out;
  for (const auto& d : issues) {
    if (!out.empty()) out += "; ";
    out += d.message;
  }
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

std::string slot_text(const BoundarySlot& s) { return fmt::format("(pants {}, k {})", s.pants, s.k); }

}  // namespace

Diagnostics validate_surface(const SurfaceSpec& s) {
  Diagnostics diag;
  auto report = [&](std::string code, std::string msg) {
    diag.issues.push_back({std::move(code), std::move(msg)});
  };

  if (s.genus < 2) report("genus", fmt::format("genus must be at least 2, got {}", s.genus));
  const long long want_pants = 2LL * s.genus - 2;
  const long long want_curves = 3LL * s.genus - 3;
  if (s.genus >= 2 && static_cast<long long>(s.pants.size()) != want_pants) {
    report("genus", fmt::format("genus {} needs {} pants, got {}", s.genus, want_pants, s.pants.size()));
  }
  if (s.genus >= 2 && static_cast<long long>(s.curves.size()) != want_curves) {
    report("genus",
           fmt::format("genus {} needs {} curves, got {}", s.genus, want_curves, s.curves.size()));
  }

  std::map<int, int> pants_pos;
  for (std::size_t j = 0; j < s.pants.size(); ++j) {
    if (!pants_pos.emplace(s.pants[j], static_cast<int>(j)).second) {
      report("pants", fmt::format("duplicate pants id {}", s.pants[j]));
    }
  }

  std::set<int> curve_ids;
  std::map<BoundarySlot, int> uses;
  std::vector<int> parent(s.pants.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : s.curves) {
    if (!curve_ids.insert(c.id).second) report("curve", fmt::format("duplicate curve id {}", c.id));
    bool sides_ok = true;
    for (const BoundarySlot* side : {&c.left, &c.right}) {
      if (!pants_pos.count(side->pants)) {
        report("curve", fmt::format("curve {} refers to unknown pants {}", c.id, side->pants));
        sides_ok = false;
      } else if (side->k < 0 || side->k > 2) {
        report("curve", fmt::format("curve {} uses boundary index {} outside 0..2", c.id, side->k));
        sides_ok = false;
      }
    }
    if (!sides_ok) continue;
    if (c.left == c.right) {
      report("curve", fmt::format("curve {} has identical left and right sides {}", c.id,
                                  slot_text(c.left)));
      continue;
    }
    ++uses[c.left];
    ++uses[c.right];
    const int a = find_root(parent, pants_pos[c.left.pants]);
    const int b = find_root(parent, pants_pos[c.right.pants]);
    parent[static_cast<std::size_t>(a)] = b;
  }

  for (const auto& [id, j] : pants_pos) {
    for (int k = 0; k < 3; ++k) {
      const BoundarySlot slot{id, k};
      const auto it = uses.find(slot);
      const int n = it == uses.end() ? 0 : it->second;
      if (n == 0) report("pairing", fmt::format("unpaired boundary {}", slot_text(slot)));
      if (n > 1) report("pairing", fmt::format("boundary {} used {} times", slot_text(slot), n));
    }
  }

  if (!parent.empty()) {
    const int root = find_root(parent, 0);
    for (std::size_t j = 1; j < parent.size(); ++j) {
      if (find_root(parent, static_cast<int>(j)) != root) {
        report("connectivity", "pants gluing graph is not connected");
        break;
      }
    }
  }
  return diag;
}

EdgeWord inverse_word(const EdgeWord& w) {
  EdgeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

CellComplex::CellComplex(SurfaceSpec spec) : spec_(std::move(spec)) {
  const int n = pants_count();
  const int m = curve_count();
  for (int j = 0; j < n; ++j) pants_index_[spec_.pants[static_cast<std::size_t>(j)]] = j;
  for (int i = 0; i < m; ++i) curve_index_[spec_.curves[static_cast<std::size_t>(i)].id] = i;

  slot_curve_.assign(static_cast<std::size_t>(3 * n), -1);
  slot_left_.assign(static_cast<std::size_t>(3 * n), false);
  for (int i = 0; i < m; ++i) {
    const auto& c = spec_.curves[static_cast<std::size_t>(i)];
    const auto l = static_cast<std::size_t>(3 * pants_index(c.left.pants) + c.left.k);
    const auto r = static_cast<std::size_t>(3 * pants_index(c.right.pants) + c.right.k);
    slot_curve_[l] = i;
    slot_left_[l] = true;
    slot_curve_[r] = i;
  }

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int eps = 0; eps < 2; ++eps) vertices_.push_back({vertex(j, k, eps), j, k, eps});
    }
  }

  edges_.resize(static_cast<std::size_t>(9 * n + 2 * m));
  for (int j = 0; j < n; ++j) {
    const int pid = spec_.pants[static_cast<std::size_t>(j)];
    for (int k = 0; k < 3; ++k) {
      Edge& s = edges_[static_cast<std::size_t>(seam(j, k))];
      s = {seam(j, k), EdgeKind::Seam, vertex(j, k, 0), vertex(j, k - 1, 1), j, -1, k, 0,
           fmt::format("p{}.seam{}", pid, k)};
      for (int eps = 0; eps < 2; ++eps) {
        Edge& a = edges_[static_cast<std::size_t>(arc(j, k, eps))];
        a = {arc(j, k, eps), EdgeKind::Arc, vertex(j, k, eps), vertex(j, k, 1 - eps), j, -1, k, eps,
             fmt::format("p{}.b{}{}", pid, k, eps)};
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    const auto& c = spec_.curves[static_cast<std::size_t>(i)];
    const int jl = pants_index(c.left.pants);
    const int jr = pants_index(c.right.pants);
    for (int eps = 0; eps < 2; ++eps) {
      Edge& x = edges_[static_cast<std::size_t>(crossing(i, eps))];
      x = {crossing(i, eps), EdgeKind::Crossing, vertex(jl, c.left.k, eps),
           vertex(jr, c.right.k, eps), -1, i, 0, eps, fmt::format("c{}.x{}", c.id, eps)};
    }
  }
  for (const auto& e : edges_) edge_by_name_.emplace(e.name, e.id);

  auto fwd = [](int e) { return SignedEdge{e, false}; };
  auto rev = [](int e) { return SignedEdge{e, true}; };

  faces_.resize(static_cast<std::size_t>(2 * n + 2 * m));
  for (int j = 0; j < n; ++j) {
    for (int variant = 0; variant < 2; ++variant) {
      Face& f = faces_[static_cast<std::size_t>(2 * j + variant)];
      f.id = 2 * j + variant;
      f.kind = FaceKind::Hexagon;
      f.variant = variant;
      f.owner = j;
      const LocalWord& w = variant == 0 ? top_hexagon_word() : bottom_hexagon_word();
      for (const LocalStep& s : w) f.boundary.push_back({9 * j + s.edge, s.reversed});
    }
  }
  for (int i = 0; i < m; ++i) {
    const auto& c = spec_.curves[static_cast<std::size_t>(i)];
    const int jl = pants_index(c.left.pants);
    const int jr = pants_index(c.right.pants);
    const int c0 = crossing(i, 0);
    const int c1 = crossing(i, 1);
    Face& s0 = faces_[static_cast<std::size_t>(2 * n + 2 * i)];
    s0 = {2 * n + 2 * i, FaceKind::Square, 0, i,
          {fwd(c0), rev(arc(jr, c.right.k, 1)), rev(c1), rev(arc(jl, c.left.k, 0))}};
    Face& s1 = faces_[static_cast<std::size_t>(2 * n + 2 * i + 1)];
    s1 = {2 * n + 2 * i + 1, FaceKind::Square, 1, i,
          {rev(arc(jl, c.left.k, 1)), fwd(c1), rev(arc(jr, c.right.k, 0)), rev(c0)}};
  }
}

int CellComplex::pants_index(int pants_id) const {
  const auto it = pants_index_.find(pants_id);
  if (it == pants_index_.end()) throw Error(Errc::Lookup, fmt::format("unknown pants {}", pants_id));
  return it->second;
}

int CellComplex::curve_index(int curve_id) const {
  const auto it = curve_index_.find(curve_id);
  if (it == curve_index_.end()) throw Error(Errc::Lookup, fmt::format("unknown curve {}", curve_id));
  return it->second;
}

const Face& CellComplex::face(int face_id) const {
  if (face_id < 0 || face_id >= static_cast<int>(faces_.size())) {
    throw Error(Errc::Lookup, fmt::format("unknown face {}", face_id));
  }
  return faces_[static_cast<std::size_t>(face_id)];
}

int CellComplex::curve_at(int j, int k) const {
  return slot_curve_[static_cast<std::size_t>(3 * j + PantsLengths::mod3(k))];
}

bool CellComplex::is_left_side(int j, int k) const {
  return slot_left_[static_cast<std::size_t>(3 * j + PantsLengths::mod3(k))];
}

int CellComplex::start(SignedEdge e) const {
  const Edge& x = edges_.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? x.end : x.start;
}

int CellComplex::end(SignedEdge e) const {
  const Edge& x = edges_.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? x.start : x.end;
}

void CellComplex::check_composable(const EdgeWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].edge < 0 || w[i].edge >= static_cast<int>(edges_.size())) {
      throw Error(Errc::Path, fmt::format("edge id {} out of range", w[i].edge));
    }
    if (i > 0 && end(w[i - 1]) != start(w[i])) {
      throw Error(Errc::Path, fmt::format("word breaks between {} and {}",
                                          word_to_string({w[i - 1]}), word_to_string({w[i]})));
    }
  }
}

EdgeWord CellComplex::curve_loop(int i) const {
  const auto& c = spec_.curves.at(static_cast<std::size_t>(i));
  const int j = pants_index(c.left.pants);
  return {{arc(j, c.left.k, 0), false}, {arc(j, c.left.k, 1), false}};
}

std::string CellComplex::word_to_string(const EdgeWord& w) const {
  std::string out;
  for (const auto& e : w) {
    if (!out.empty()) out += ' ';
    out += edges_.at(static_cast<std::size_t>(e.edge)).name;
    if (e.reversed) out += '~';
  }
  return out;
}

EdgeWord CellComplex::parse_word(std::string_view text) const {
  EdgeWord out;
  std::size_t pos = 0;
  auto is_sep = [](char ch) { return ch == ' ' || ch == ',' || ch == '\t' || ch == '\n'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t stop = pos;
    while (stop < text.size() && !is_sep(text[stop])) ++stop;
    if (stop == pos) break;
    std::string_view token = text.substr(pos, stop - pos);
    pos = stop;
    bool reversed = false;
    if (token.back() == '~') {
      reversed = true;
      token.remove_suffix(1);
    }
    const auto it = edge_by_name_.find(token);
    if (it == edge_by_name_.end()) {
      throw Error(Errc::Lookup, fmt::format("unknown edge '{}'", token));
    }
    out.push_back({it->second, reversed});
  }
  return out;
}

std::shared_ptr<const CellComplex> build_complex(const SurfaceSpec& s) {
  const Diagnostics d = validate_surface(s);
  if (!d.ok()) throw Error(Errc::Validation, d.summary());
  return std::make_shared<const CellComplex>(s);
}

PantsLengths pants_lengths(const CellComplex& cx, const FNPoint& fn, int j) {
  PantsLengths l;
  for (int k = 0; k < 3; ++k) {
    const int curve_id = cx.spec().curves[static_cast<std::size_t>(cx.curve_at(j, k))].id;
    const auto it = fn.find(curve_id);
    if (it == fn.end()) {
      throw Error(Errc::Lookup, fmt::format("no coordinates for curve {}", curve_id));
    }
    l.l[static_cast<std::size_t>(k)] = it->second.length;
  }
  return l;
}

SurfaceCocycle::SurfaceCocycle(std::shared_ptr<const CellComplex> complex,
                               std::vector<ProjMat2> values)
    : complex_(std::move(complex)), values_(std::move(values)) {}

ProjMat2 SurfaceCocycle::value(SignedEdge e) const {
  const ProjMat2& v = values_.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? v.inverse() : v;
}

double SurfaceCocycle::face_residual(int face_id) const {
  return proj_distance(holonomy(*this, complex_->face(face_id).boundary), ProjMat2::identity());
}

double SurfaceCocycle::max_face_residual() const {
  double worst = 0.0;
  for (const auto& f : complex_->faces()) worst = std::max(worst, face_residual(f.id));
  return worst;
}

SurfaceCocycle assemble_cocycle(std::shared_ptr<const CellComplex> cx, const FNPoint& fn) {
  std::vector<ProjMat2> values(cx->edges().size());
  for (int j = 0; j < cx->pants_count(); ++j) {
    const PantsCocycle p = pants_cocycle(pants_lengths(*cx, fn, j));
    for (int e = 0; e < kPantsEdges; ++e) {
      values[static_cast<std::size_t>(9 * j + e)] = p.edges[static_cast<std::size_t>(e)];
    }
  }
  for (int i = 0; i < cx->curve_count(); ++i) {
    const int id = cx->spec().curves[static_cast<std::size_t>(i)].id;
    const auto it = fn.find(id);
    if (it == fn.end()) throw Error(Errc::Lookup, fmt::format("no coordinates for curve {}", id));
    const ProjMat2 x(crossing_matrix(std::exp(-0.5 * it->second.twist)));
    values[static_cast<std::size_t>(cx->crossing(i, 0))] = x;
    values[static_cast<std::size_t>(cx->crossing(i, 1))] = x;
  }
  return SurfaceCocycle(std::move(cx), std::move(values));
}

SurfaceCocycle assemble_cocycle(const SurfaceSpec& s, const FNPoint& fn) {
  return assemble_cocycle(build_complex(s), fn);
}

ProjMat2 holonomy(const SurfaceCocycle& c, const EdgeWord& w) {
  c.complex().check_composable(w);
  Mat2 m = Mat2::identity();
  for (const auto& e : w) {
    const Mat2& v = c[e.edge].rep();
    m = m * (e.reversed ? v.inverse() : v);
  }
  return ProjMat2(m);
}

FNPoint extract_fn(const SurfaceCocycle& c) {
  const CellComplex& cx = c.complex();
  FNPoint out;
  for (int i = 0; i < cx.curve_count(); ++i) {
    const int id = cx.spec().curves[static_cast<std::size_t>(i)].id;
    const Mat2& x0 = c[cx.crossing(i, 0)].rep();
    const Mat2& x1 = c[cx.crossing(i, 1)].rep();
    for (const Mat2* x : {&x0, &x1}) {
      const double cut = 1e-12 * x->max_abs();
      if (std::abs(x->a) > cut || std::abs(x->d) > cut) {
        throw Error(Errc::NonStandard,
                    fmt::format("crossing edge of curve {} is not antidiagonal", id));
      }
    }
    if (proj_distance(x0, x1) > 1e-9 * std::max(1.0, x0.max_abs())) {
      throw Error(Errc::NonStandard,
                  fmt::format("crossing edges of curve {} carry different values", id));
    }
    const double t = std::abs(x0.c);
    out[id] = {translation_length(holonomy(c, cx.curve_loop(i))), -2.0 * std::log(t)};
  }
  return out;
}

}  // namespace fnhol
