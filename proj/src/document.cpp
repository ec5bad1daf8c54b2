#include "fnhol/document.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "fnhol/error.hpp"
#include "fnhol/pants.hpp"
#include "fnhol/variation.hpp"
#include "fnhol/wp.hpp"
#include "json.hpp"

namespace fnhol {

using Json = nlohmann::ordered_json;

namespace {

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

[[noreturn]] void fail(Errc code, const std::string& where, const std::string& what) {
  throw Error(code, fmt::format("{}: {}", where.empty() ? "/" : where, what));
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(Errc::Validation, pointer(path, key), "missing field");
  return *it;
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(Errc::Validation, path, "expected an object");
  for (const auto& [k, _] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; })) {
      fail(Errc::Validation, pointer(path, k), "unknown field");
    }
  }
}

int as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(Errc::Validation, path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(Errc::Range, path, "integer out of range");
  }
  return static_cast<int>(x);
}

double as_number(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(Errc::Validation, path, "expected a number");
  return v.get<double>();
}

int as_sign(const Json& v, const std::string& path) {
  const int s = as_int(v, path);
  if (s != 1 && s != -1) fail(Errc::Range, path, "sign must be 1 or -1");
  return s;
}

const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(Errc::Validation, path, "expected an array");
  return v;
}

BoundarySlot parse_slot(const Json& v, const std::string& path) {
  only_keys(v, path, {"pants", "k"});
  return {as_int(member(v, path, "pants"), pointer(path, "pants")),
          as_int(member(v, path, "k"), pointer(path, "k"))};
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

SurfaceDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // the parser reports the byte just past the offending character
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw Error(Errc::Syntax, fmt::format("line {}, column {}: {}", line, col,
                                          cut == std::string::npos ? what : what.substr(cut)));
  }

  only_keys(root, "", {"genus", "pants", "curves", "fn", "spin"});
  SurfaceDocument doc;
  doc.spec.genus = as_int(member(root, "", "genus"), "/genus");

  const Json& pants = as_array(member(root, "", "pants"), "/pants");
  for (std::size_t j = 0; j < pants.size(); ++j) {
    doc.spec.pants.push_back(as_int(pants[j], pointer("/pants", j)));
  }

  const Json& curves = as_array(member(root, "", "curves"), "/curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string at = pointer("/curves", i);
    only_keys(curves[i], at, {"id", "left", "right"});
    CurveSpec c;
    c.id = as_int(member(curves[i], at, "id"), pointer(at, "id"));
    c.left = parse_slot(member(curves[i], at, "left"), pointer(at, "left"));
    c.right = parse_slot(member(curves[i], at, "right"), pointer(at, "right"));
    doc.spec.curves.push_back(c);
  }

  const Diagnostics diag = validate_surface(doc.spec);
  if (!diag.ok()) throw Error(Errc::Validation, diag.summary());

  std::set<int> ids;
  for (const auto& c : doc.spec.curves) ids.insert(c.id);

  const Json& fn = as_array(member(root, "", "fn"), "/fn");
  for (std::size_t i = 0; i < fn.size(); ++i) {
    const std::string at = pointer("/fn", i);
    only_keys(fn[i], at, {"curve", "length", "twist"});
    const int id = as_int(member(fn[i], at, "curve"), pointer(at, "curve"));
    if (!ids.count(id)) fail(Errc::Validation, pointer(at, "curve"), fmt::format("unknown curve {}", id));
    if (doc.fn.count(id)) {
      fail(Errc::Validation, pointer(at, "curve"), fmt::format("duplicate coordinates for curve {}", id));
    }
    const double length = as_number(member(fn[i], at, "length"), pointer(at, "length"));
    const double twist = as_number(member(fn[i], at, "twist"), pointer(at, "twist"));
    if (!(length >= kMinLength && length <= kMaxLength)) {
      fail(Errc::Range, pointer(at, "length"),
           fmt::format("length {} outside [{}, {}]", format_number(length),
                       format_number(kMinLength), format_number(kMaxLength)));
    }
    if (!std::isfinite(twist)) fail(Errc::Range, pointer(at, "twist"), "twist must be finite");
    doc.fn[id] = {length, twist};
  }
  for (int id : ids) {
    if (!doc.fn.count(id)) fail(Errc::Validation, "/fn", fmt::format("no coordinates for curve {}", id));
  }

  if (root.contains("spin")) {
    const Json& spin = as_array(root["spin"], "/spin");
    SpinBlock block;
    for (std::size_t i = 0; i < spin.size(); ++i) {
      const std::string at = pointer("/spin", i);
      only_keys(spin[i], at, {"curve", "epsilon", "crossing"});
      const int id = as_int(member(spin[i], at, "curve"), pointer(at, "curve"));
      if (!ids.count(id)) fail(Errc::Validation, pointer(at, "curve"), fmt::format("unknown curve {}", id));
      if (block.epsilon.count(id)) {
        fail(Errc::Validation, pointer(at, "curve"), fmt::format("duplicate spin entry for curve {}", id));
      }
      block.epsilon[id] = as_sign(member(spin[i], at, "epsilon"), pointer(at, "epsilon"));
      block.crossing[id] = as_sign(member(spin[i], at, "crossing"), pointer(at, "crossing"));
    }
    for (int id : ids) {
      if (!block.epsilon.count(id)) {
        fail(Errc::Validation, "/spin", fmt::format("no spin entry for curve {}", id));
      }
    }
    doc.spin = std::move(block);
  }
  return doc;
}

std::string serialize_document(const SurfaceDocument& doc) {
  Json root;
  root["genus"] = doc.spec.genus;
  root["pants"] = doc.spec.pants;
  Json curves = Json::array();
  for (const auto& c : doc.spec.curves) {
    curves.push_back({{"id", c.id},
                      {"left", {{"pants", c.left.pants}, {"k", c.left.k}}},
                      {"right", {{"pants", c.right.pants}, {"k", c.right.k}}}});
  }
  root["curves"] = curves;
  Json fn = Json::array();
  for (const auto& c : doc.spec.curves) {
    const auto it = doc.fn.find(c.id);
    if (it == doc.fn.end()) continue;
    fn.push_back({{"curve", c.id}, {"length", it->second.length}, {"twist", it->second.twist}});
  }
  root["fn"] = fn;
  if (doc.spin) {
    Json spin = Json::array();
    for (const auto& c : doc.spec.curves) {
      spin.push_back({{"curve", c.id},
                      {"epsilon", doc.spin->epsilon.at(c.id)},
                      {"crossing", doc.spin->crossing.at(c.id)}});
    }
    root["spin"] = spin;
  }
  return root.dump(2) + "\n";
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.15g}", x);
}

double default_tolerance(std::string_view command) {
  if (command == "fn") return 1e-12;
  return 1e-8;
}

namespace {

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_number(x));
}

Json matrix_json(const Mat2& m) { return Json::array({Json::array({num(m.a), num(m.b)}), Json::array({num(m.c), num(m.d)})}); }

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

std::string inline_text(const Json& v) {
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += inline_text(v[i]);
    }
    return out + "]";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, x] : v.items()) {
      if (!out.empty()) out += ' ';
      out += k + "=" + inline_text(x);
    }
    return out;
  }
  return scalar_text(v);
}

std::string render_text(const Json& root) {
  std::string out;
  for (const auto& [key, v] : root.items()) {
    if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      out += key + "\n";
      for (const auto& item : v) out += "  " + inline_text(item) + "\n";
    } else {
      out += key + " " + inline_text(v) + "\n";
    }
  }
  return out;
}

Report finish(const Json& root, OutputFormat format, int code) {
  return {code, format == OutputFormat::Json ? root.dump(2) + "\n" : render_text(root)};
}

std::string status(bool ok) { return ok ? "ok" : "fail"; }

Json verify(const SurfaceDocument& doc, double tol, bool& ok) {
  const auto cx = build_complex(doc.spec);
  const SurfaceCocycle c = assemble_cocycle(cx, doc.fn);
  Json faces = Json::array();
  double worst = 0.0;
  for (const auto& f : cx->faces()) {
    const double r = c.face_residual(f.id);
    worst = std::max(worst, r);
    const bool hex = f.kind == FaceKind::Hexagon;
    const int owner = hex ? cx->spec().pants[static_cast<std::size_t>(f.owner)]
                          : cx->spec().curves[static_cast<std::size_t>(f.owner)].id;
    faces.push_back({{"id", f.id},
                     {"kind", hex ? (f.variant == 0 ? "hexagon-top" : "hexagon-bottom")
                                  : (f.variant == 0 ? "square0" : "square1")},
                     {"owner", owner},
                     {"residual", num(r)}});
  }
  Json pants = Json::array();
  bool all_standard = true;
  for (int j = 0; j < cx->pants_count(); ++j) {
    PantsCocycle p;
    for (int e = 0; e < kPantsEdges; ++e) p.edges[static_cast<std::size_t>(e)] = c[9 * j + e];
    const bool standard = is_standard(p);
    all_standard = all_standard && standard;
    pants.push_back({{"pants", cx->spec().pants[static_cast<std::size_t>(j)]}, {"standard", standard}});
  }
  bool crossings_ok = true;
  try {
    extract_fn(c);
  } catch (const Error&) {
    crossings_ok = false;
  }
  const double zres =
      check_cocycle_condition(c, variation_cocycle(c, doc.fn, coordinate_basis(doc.spec).front()));

  Json out;
  out["command"] = "verify";
  out["faces"] = faces;
  out["max_face_residual"] = num(worst);
  out["pants"] = pants;
  out["crossings_standard"] = crossings_ok;
  out["variation_residual"] = num(zres);
  ok = worst <= tol && all_standard && crossings_ok && zres <= tol;
  if (doc.spin) {
    const SpinSurfaceCocycle s = assemble_spin(cx, doc.fn, doc.spin->epsilon, doc.spin->crossing);
    const double sr = s.max_face_residual();
    out["spin_max_face_residual"] = num(sr);
    ok = ok && sr <= tol;
  }
  out["tolerance"] = num(tol);
  out["status"] = status(ok);
  return out;
}

Json holonomy_report(const SurfaceDocument& doc, const std::string& text) {
  const auto cx = build_complex(doc.spec);
  const SurfaceCocycle c = assemble_cocycle(cx, doc.fn);
  EdgeWord w;
  try {
    w = cx->parse_word(text);
  } catch (const Error& e) {
    throw Error(Errc::Usage, e.what());
  }
  const ProjMat2 h = holonomy(c, w);
  const bool loop = w.empty() || cx->start(w.front()) == cx->end(w.back());
  Json out;
  out["command"] = "holonomy";
  out["word"] = cx->word_to_string(w);
  out["loop"] = loop;
  out["matrix"] = matrix_json(h.rep());
  out["abs_trace"] = num(h.abs_trace());
  out["translation_length"] =
      loop && is_hyperbolic(h.rep()) ? num(translation_length(h)) : Json(nullptr);
  out["status"] = "ok";
  return out;
}

Json fn_report(const SurfaceDocument& doc, double tol, bool& ok) {
  const SurfaceCocycle c = assemble_cocycle(doc.spec, doc.fn);
  const FNPoint back = extract_fn(c);
  Json curves = Json::array();
  double worst = 0.0;
  for (const auto& cv : doc.spec.curves) {
    const FNCoord in = doc.fn.at(cv.id);
    const FNCoord out = back.at(cv.id);
    const double err = std::max(std::abs(in.length - out.length), std::abs(in.twist - out.twist));
    worst = std::max(worst, err);
    curves.push_back({{"curve", cv.id},
                      {"length", num(in.length)},
                      {"twist", num(in.twist)},
                      {"extracted_length", num(out.length)},
                      {"extracted_twist", num(out.twist)},
                      {"error", num(err)}});
  }
  ok = worst <= tol;
  Json out;
  out["command"] = "fn";
  out["curves"] = curves;
  out["max_error"] = num(worst);
  out["tolerance"] = num(tol);
  out["status"] = status(ok);
  return out;
}

Json wp_report(const SurfaceDocument& doc, double tol, bool& ok) {
  const SurfaceCocycle c = assemble_cocycle(doc.spec, doc.fn);
  const auto basis = coordinate_basis(doc.spec);
  std::vector<VariationCocycle> z;
  for (const auto& v : basis) z.push_back(variation_cocycle(c, doc.fn, v));
  Json labels = Json::array();
  for (const auto& cv : doc.spec.curves) labels.push_back(fmt::format("dl{}", cv.id));
  for (const auto& cv : doc.spec.curves) labels.push_back(fmt::format("dtau{}", cv.id));

  const std::size_t n = basis.size();
  Json matrix = Json::array();
  double deviation = 0.0;
  double skew = 0.0;
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m[a][b] = wp_pairing(c, z[a], z[b]);
      deviation = std::max(deviation, std::abs(m[a][b] - wolpert_reference(basis[a], basis[b])));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) {
      row.push_back(num(m[a][b]));
      skew = std::max(skew, std::abs(m[a][b] + m[b][a]));
    }
    matrix.push_back(row);
  }
  ok = deviation <= tol && skew <= tol;
  Json out;
  out["command"] = "wp";
  out["basis"] = labels;
  out["matrix"] = matrix;
  out["max_deviation_from_reference"] = num(deviation);
  out["max_antisymmetry_error"] = num(skew);
  out["tolerance"] = num(tol);
  out["status"] = status(ok);
  return out;
}

Json signs_json(const SignMap& m) {
  Json out = Json::object();
  for (const auto& [id, s] : m) out[std::to_string(id)] = s;
  return out;
}

Json spin_report(const SurfaceDocument& doc, double tol, bool list, bool& ok) {
  const auto cx = build_complex(doc.spec);
  const SpinEnumeration en = enumerate_spin(doc.spec);
  Json out;
  out["command"] = "spin";
  out["tree_curves"] = en.tree.tree_curves;
  out["free_curves"] = en.tree.free_curves;
  out["epsilon_assignments"] = en.epsilons.size();
  out["classes_per_epsilon"] = en.classes_per_epsilon;
  out["total_classes"] = en.classes.size();
  ok = true;
  if (list) {
    Json classes = Json::array();
    for (const auto& cl : en.classes) {
      classes.push_back({{"epsilon", signs_json(cl.epsilon)}, {"crossing", signs_json(cl.crossing)}});
    }
    out["classes"] = classes;
  }
  if (doc.spin) {
    const SpinSurfaceCocycle s = assemble_spin(cx, doc.fn, doc.spin->epsilon, doc.spin->crossing);
    const double residual = s.max_face_residual();
    Json curves = Json::array();
    bool signs_ok = true;
    for (int i = 0; i < cx->curve_count(); ++i) {
      const int id = doc.spec.curves[static_cast<std::size_t>(i)].id;
      const EdgeWord loop = cx->curve_loop(i);
      const double trace = s.holonomy(loop).trace();
      const int rot = rot2(s, loop);
      const bool match = (trace > 0.0 ? 1 : -1) == doc.spin->epsilon.at(id);
      signs_ok = signs_ok && match;
      curves.push_back({{"curve", id},
                        {"epsilon", doc.spin->epsilon.at(id)},
                        {"crossing", doc.spin->crossing.at(id)},
                        {"trace", num(trace)},
                        {"rot", rot}});
    }
    Json pants = Json::array();
    bool congruence = true;
    for (int j = 0; j < cx->pants_count(); ++j) {
      int total = 0;
      for (int k = 0; k < 3; ++k) {
        total += rot2(s, {{cx->arc(j, k, 0), false}, {cx->arc(j, k, 1), false}});
      }
      congruence = congruence && total % 2 == 1;
      pants.push_back({{"pants", doc.spec.pants[static_cast<std::size_t>(j)]}, {"rot_sum_mod2", total % 2}});
    }
    out["max_face_residual"] = num(residual);
    out["curves"] = curves;
    out["pants"] = pants;
    ok = residual <= tol && signs_ok && congruence;
    out["tolerance"] = num(tol);
  }
  out["status"] = status(ok);
  return out;
}

Report error_report(const Error& e, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json out;
    out["error"] = {{"kind", std::string(errc_name(e.code()))}, {"message", e.what()}};
    return {2, out.dump(2) + "\n"};
  }
  return {2, fmt::format("error [{}]: {}\n", errc_name(e.code()), e.what())};
}

}  // namespace

Report run_command(const SurfaceDocument& doc, const CommandOptions& opt) {
  try {
    const double tol = opt.tolerance.value_or(default_tolerance(opt.command));
    if (!(tol > 0.0)) throw Error(Errc::Usage, "tolerance must be positive");
    bool ok = true;
    Json out;
    if (opt.command == "verify") {
      out = verify(doc, tol, ok);
    } else if (opt.command == "holonomy") {
      if (!opt.word) throw Error(Errc::Usage, "holonomy requires --word");
      out = holonomy_report(doc, *opt.word);
    } else if (opt.command == "fn") {
      out = fn_report(doc, tol, ok);
    } else if (opt.command == "wp") {
      out = wp_report(doc, tol, ok);
    } else if (opt.command == "spin") {
      out = spin_report(doc, tol, opt.list, ok);
    } else {
      throw Error(Errc::Usage, fmt::format("unknown command '{}'", opt.command));
    }
    return finish(out, opt.format, ok ? 0 : 1);
  } catch (const Error& e) {
    return error_report(e, opt.format);
  }
}

Report run_text(std::string_view text, const CommandOptions& opt) {
  try {
    return run_command(parse_document(text), opt);
  } catch (const Error& e) {
    return error_report(e, opt.format);
  }
}

}  // namespace fnhol
