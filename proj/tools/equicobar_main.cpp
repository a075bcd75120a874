// equicobar: batch front end. Parses JSON inputs, dispatches computations,
// emits machine-readable reports.
//
// Exit codes: 0 success / Yes, 1 certified No or violation, 2 inconclusive,
// 3 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "equicobar/acceptance.hpp"
#include "equicobar/json_io.hpp"

using namespace eqc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

void emit(const json& report, const std::string& output) {
  if (output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write output file: " + output);
    out << report.dump(2) << "\n";
  }
}

int exit_of_verdict(const Verdict& v) {
  return v.yes() ? kExitOk : v.no() ? kExitNo : kExitInconclusive;
}

json verdict_json(const Verdict& v) {
  return json{{"verdict", v.str()},
              {"evidence", v.evidence},
              {"caps", json{{"degree", v.degree_cap}, {"length", v.length_cap}}}};
}

template <class Fn>
int with_field(const FieldChoice& fc, Fn&& fn) {
  if (fc.rational) return fn(Rational::Ctx{});
  return fn(GF::Ctx(fc.p, fc.k));
}

int cmd_validate(const std::string& input, const std::string& output) {
  json j = load_json_file(input);
  check_schema(j);
  std::string type = j.value("type", j.contains("model") ? "sset" : "unknown");
  json report{{"schema", 1}, {"command", "validate"}, {"input", input}, {"object", type}};
  try {
    if (type == "sset") {
      auto x = sset_from_json(j);
      report["dimension_bound"] = x.dim_bound();
      report["reduced"] = x.reduced();
      json counts = json::array();
      for (int n = 0; n <= x.dim_bound(); ++n) counts.push_back(x.count(n));
      report["nondegenerate_counts"] = counts;
    } else if (type == "gsset") {
      auto y = gsset_from_json(j);
      report["group_order"] = y.group().size();
    } else if (type == "map") {
      auto src = sset_from_json(j.at("source"));
      auto dst = sset_from_json(j.at("target"));
      map_from_json(j, src, dst);
    } else if (type == "scoalg") {
      FieldChoice fc = parse_field_json(j.at("field"));
      with_field(fc, [&](auto ctx) {
        using F = typename decltype(ctx)::Elem;
        scoalg_from_json<F>(j, ctx);
        return 0;
      });
    } else {
      throw InputError("unknown object type: " + type);
    }
  } catch (const InputError& ex) {
    // a well-formed file describing an invalid object is a violation
    std::string what = ex.what();
    if (what.find("cannot open") != std::string::npos ||
        what.find("malformed") != std::string::npos)
      throw;
    report["status"] = "violation";
    report["violation"] = what;
    emit(report, output);
    return kExitNo;
  }
  report["status"] = "ok";
  emit(report, output);
  return kExitOk;
}

int cmd_homology(const std::string& input, const std::string& field, int through,
                 const std::string& output) {
  auto x = sset_from_json(load_json_file(input));
  if (through < 0) through = std::max(0, x.dim_bound() - 1);
  if (x.dim_bound() < through + 1)
    throw InputError("dimension bound must exceed the requested degree");
  FieldChoice fc = parse_field_name(field);
  json report{{"schema", 1}, {"command", "homology"}, {"field", fc.name()}};
  with_field(fc, [&](auto ctx) {
    using F = typename decltype(ctx)::Elem;
    auto ch = chains<F>(x, ctx);
    auto nr = normalized_chains(ch.sc);
    report["dimensions"] = homology_dims(nr.dg.complex(), through);
    return 0;
  });
  emit(report, output);
  return kExitOk;
}

int cmd_cobar(const std::string& input, const std::string& field, const Caps& caps,
              const std::string& output) {
  auto x = sset_from_json(load_json_file(input));
  if (!x.reduced()) throw InputError("cobar requires a reduced simplicial set");
  if (x.dim_bound() < caps.degree + 1)
    throw InputError("dimension bound below the cobar degree cap + 1");
  FieldChoice fc = parse_field_name(field);
  json report{{"schema", 1},
              {"command", "cobar"},
              {"field", fc.name()},
              {"caps", json{{"degree", caps.degree}, {"length", caps.length}}}};
  with_field(fc, [&](auto ctx) {
    using F = typename decltype(ctx)::Elem;
    auto ch = chains<F>(x, ctx);
    auto nr = normalized_chains(ch.sc);
    auto cb = cobar(nr.dg, caps.degree, caps.length);
    json dims = json::array();
    for (int n = 0; n <= caps.degree - 1; ++n) dims.push_back(cb.complex().homology_dim(n));
    report["homology_dimensions"] = dims;
    report["simply_connected_regime"] = cb.simply_connected_regime;
    report["length_relative"] = cb.length_flagged;
    return 0;
  });
  emit(report, output);
  return kExitOk;
}

int cmd_pi1(const std::string& input, long coset_bound, const std::string& output) {
  auto x = sset_from_json(load_json_file(input));
  auto r = pi1_pipeline(x, coset_bound);
  json report{{"schema", 1}, {"command", "pi1"}};
  report["presentation"] = r.presentation.str();
  report["localized"] = r.localized.str();
  report["abelianization"] =
      json{{"free_rank", r.abelian.free_rank}, {"torsion", [&] {
              json t = json::array();
              for (auto& d : r.abelian.torsion) t.push_back(d.get_str());
              return t;
            }()}};
  if (r.certified_finite) {
    report["certificate"] = "finite";
    report["order"] = r.table->order;
  } else if (r.certified_infinite) {
    report["certificate"] = "infinite";
  } else {
    report["certificate"] = "inconclusive";
    report["coset_bound"] = coset_bound;
  }
  emit(report, output);
  return r.certified_finite || r.certified_infinite ? kExitOk : kExitInconclusive;
}

int cmd_cover(const std::string& input, long coset_bound, const std::string& output) {
  auto x = sset_from_json(load_json_file(input));
  auto ep = edge_path_presentation(x);
  auto t = todd_coxeter(ep.pres, coset_bound);
  json report{{"schema", 1}, {"command", "cover"}};
  if (!t) {
    report["status"] = "inconclusive";
    report["note"] = "enumeration did not complete within the coset bound";
    emit(report, output);
    return kExitInconclusive;
  }
  auto cover = universal_cover(x, *t, ep);
  report["deck_order"] = t->order;
  json counts = json::array();
  for (int n = 0; n <= cover.total.dim_bound(); ++n) counts.push_back(cover.total.count(n));
  report["nondegenerate_counts"] = counts;
  auto again = pi1_pipeline(cover.total, std::max(coset_bound, 4 * t->order));
  report["cover_simply_connected"] = again.certified_finite && again.table->order == 1;
  Rational::Ctx q;
  report["cover_homology_Q"] =
      homology_dims(simplicial_homology_complex<Rational>(cover.total, q),
                    std::max(0, cover.total.dim_bound() - 1));
  report["total"] = sset_to_json(cover.total);
  emit(report, output);
  bool ok = report["cover_simply_connected"].get<bool>();
  return ok ? kExitOk : kExitNo;
}

int cmd_points(const std::string& input, const std::string& output) {
  json j = load_json_file(input);
  FieldChoice fc = parse_field_json(j.at("field"));
  json report{{"schema", 1}, {"command", "points"}, {"field", fc.name()}};
  int code = with_field(fc, [&](auto ctx) {
    using F = typename decltype(ctx)::Elem;
    auto sc = scoalg_from_json<F>(j, ctx);
    auto pts = points(sc);
    report["space"] = sset_to_json(pts.ex.sset);
    json counts = json::array();
    for (auto& gl : pts.grouplikes) counts.push_back(gl.elements.size());
    report["grouplike_counts"] = counts;
    return kExitOk;
  });
  emit(report, output);
  return code;
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& spec) {
  std::vector<int> elems;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t next = spec.find(',', pos);
    std::string name = spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (!name.empty()) {
      auto e = g.find(name);
      if (!e) throw InputError("unknown group element: " + name);
      elems.push_back(*e);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  Subgroup h = close_subset(g, elems);
  return h;
}

int cmd_fixed_points(const std::string& input, const std::string& subgroup,
                     const std::string& output) {
  auto y = gsset_from_json(load_json_file(input));
  Subgroup h = parse_subgroup(y.group(), subgroup);
  auto fp = fixed_points(y, h);
  json report{{"schema", 1},
              {"command", "fixed-points"},
              {"subgroup", subgroup_label(y.group(), h)},
              {"space", sset_to_json(fp.sset)}};
  emit(report, output);
  return kExitOk;
}

int cmd_orbit_diagram(const std::string& input, const std::string& output) {
  auto y = gsset_from_json(load_json_file(input));
  OrbitCategory oc(y.group());
  auto d = phi(y, oc);
  json objects = json::array();
  for (int i = 0; i < oc.num_objects(); ++i) {
    json entry{{"subgroup", subgroup_label(y.group(), oc.subgroup(i))},
               {"space", sset_to_json(d.object(i))}};
    objects.push_back(entry);
  }
  json homs = json::array();
  for (int h = 0; h < oc.num_objects(); ++h)
    for (int k = 0; k < oc.num_objects(); ++k) {
      if (oc.hom(h, k).empty()) continue;
      json reps = json::array();
      for (int t : oc.hom(h, k)) reps.push_back(y.group().name(t));
      homs.push_back(json{{"from", subgroup_label(y.group(), oc.subgroup(h))},
                          {"to", subgroup_label(y.group(), oc.subgroup(k))},
                          {"coset_representatives", reps}});
    }
  json report{{"schema", 1}, {"command", "orbit-diagram"}, {"objects", objects}, {"homs", homs}};
  emit(report, output);
  return kExitOk;
}

int cmd_cellularity(const std::string& input, const std::string& output) {
  json j = load_json_file(input);
  check_schema(j);
  FiniteGroup g = group_from_json(j.at("group"));
  SimplicialSet x = sset_from_json(j.at("space"));
  OrbitCategory oc(g);
  SimplicialSet pt = model_point(x.dim_bound());
  SimplicialMap f = basepoint_inclusion(pt, x);
  std::optional<SimplicialSet> src_holder;
  if (j.contains("map")) {
    src_holder = sset_from_json(j.at("map").at("source"));
    f = map_from_json(j.at("map"), *src_holder, x);
  }
  auto rep = check_cellularity(oc, x, f);
  json entries = json::array();
  for (auto& e : rep.entries)
    entries.push_back(json{{"check", e.check},
                           {"H", e.h_name},
                           {"K", e.k_name},
                           {"pass", e.pass},
                           {"note", e.note}});
  json report{{"schema", 1},
              {"command", "cellularity"},
              {"all_pass", rep.all_pass},
              {"entries", entries}};
  emit(report, output);
  return rep.all_pass ? kExitOk : kExitNo;
}

int cmd_equivalence(int notion, const std::string& map_path, const std::string& group_path,
                    const std::string& field, const Caps& caps, const std::string& output) {
  json mj = load_json_file(map_path);
  check_schema(mj);
  FieldChoice fc = parse_field_name(field);
  OracleCaps ocaps;
  ocaps.cobar_degree = caps.degree;
  ocaps.cobar_length = caps.length;
  ocaps.coset_bound = caps.cosets;
  ocaps.homology_degree = caps.homology;
  json report{{"schema", 1},
              {"command", "equivalence"},
              {"notion", notion},
              {"field", fc.name()}};
  int code = kExitInconclusive;
  if (group_path.empty()) {
    auto src = sset_from_json(mj.at("source"));
    auto dst = sset_from_json(mj.at("target"));
    auto f = map_from_json(mj, src, dst);
    code = with_field(fc, [&](auto ctx) {
      using F = typename decltype(ctx)::Elem;
      Verdict v = notion == 1   ? is_cat_F_equiv<F>(f, ctx, ocaps)
                  : notion == 2 ? is_pi1_F_equiv<F>(f, ctx, ocaps)
                  : notion == 3 ? is_F_equiv<F>(f, ctx, ocaps)
                                : throw InputError("notion must be 1, 2 or 3");
      report["result"] = verdict_json(v);
      return exit_of_verdict(v);
    });
  } else {
    json gj = load_json_file(group_path);
    auto wrap = [&](const json& side) {
      return json{{"schema", 1},
                  {"type", "gsset"},
                  {"group", gj},
                  {"space", side},
                  {"action", side.value("action", json::object())}};
    };
    GSimplicialSet ys = gsset_from_json(wrap(mj.at("source")));
    GSimplicialSet yd = gsset_from_json(wrap(mj.at("target")));
    SimplicialMap f = map_from_json(mj, ys.sset(), yd.sset());
    GMap gf{&ys, &yd, f};
    code = with_field(fc, [&](auto ctx) {
      using F = typename decltype(ctx)::Elem;
      GVerdict gv = g_equivalence<F>(gf, notion, ctx, ocaps);
      json rows = json::array();
      for (auto& row : gv.rows)
        rows.push_back(json{{"subgroup", row.subgroup}, {"result", verdict_json(row.verdict)}});
      report["rows"] = rows;
      report["result"] = verdict_json(gv.aggregate);
      return exit_of_verdict(gv.aggregate);
    });
  }
  emit(report, output);
  return code;
}

int cmd_descent(const std::string& input, const std::string& output) {
  json j = load_json_file(input);
  check_schema(j);
  const json& ext = j.at("extension");
  FieldExtension e = FieldExtension::make(ext.at("p").get<uint32_t>(),
                                          ext.at("k_base").get<uint32_t>(),
                                          ext.at("k_top").get<uint32_t>());
  SemilinearGSet s;
  s.size = j.at("gset").at("size").get<int>();
  s.perm = j.at("gset").at("perm").get<std::vector<int>>();
  s.validate(e.m);
  auto form = galois_fixed_coalgebra(s, e);
  bool dim_ok = form.coalg.dim() == s.size;
  bool descent_ok = descent_check(s, e);
  bool unit_ok = galois_unit_check(s, e);
  auto base_gl = grouplikes(form.coalg);
  auto pts = points_galois(form.coalg, e);
  json report{{"schema", 1},
              {"command", "descent"},
              {"base", e.base->name()},
              {"top", e.top->name()},
              {"fixed_form_dimension", form.coalg.dim()},
              {"dimension_matches", dim_ok},
              {"descent_isomorphism", descent_ok},
              {"unit_isomorphism", unit_ok},
              {"grouplikes_base", base_gl.elements.size()},
              {"grouplikes_top", pts.gset.size}};
  emit(report, output);
  return dim_ok && descent_ok && unit_ok ? kExitOk : kExitNo;
}

int cmd_corpus(const std::string& fixtures, const std::string& output) {
  namespace fs = std::filesystem;
  json report{{"schema", 1}, {"command", "corpus"}};
  // fixture audit first: every shipped input must load and validate
  json fixture_rows = json::array();
  bool fixtures_ok = true;
  if (!fixtures.empty()) {
    if (!fs::exists(fixtures)) throw InputError("fixtures directory not found: " + fixtures);
    std::vector<fs::path> files;
    for (auto& entry : fs::directory_iterator(fixtures))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("fixtures directory has no .json files: " + fixtures);
    for (auto& path : files) {
      json row{{"file", path.filename().string()}};
      try {
        json j = load_json_file(path.string());
        check_schema(j);
        std::string type = j.value("type", j.contains("model") ? "sset" : "other");
        if (type == "sset") sset_from_json(j);
        if (type == "gsset") gsset_from_json(j);
        if (type == "map") {
          auto src = sset_from_json(j.at("source"));
          auto dst = sset_from_json(j.at("target"));
          map_from_json(j, src, dst);
        }
        row["status"] = "ok";
      } catch (const InputError& ex) {
        std::string what = ex.what();
        if (what.find("cannot open") != std::string::npos ||
            what.find("malformed") != std::string::npos)
          throw;
        row["status"] = "violation";
        row["violation"] = what;
        fixtures_ok = false;
      }
      fixture_rows.push_back(row);
    }
  }
  report["fixtures"] = fixture_rows;

  auto results = run_acceptance();
  json rows = json::array();
  bool all = fixtures_ok;
  double total = 0;
  for (auto& r : results) {
    all = all && r.pass;
    total += r.seconds;
    rows.push_back(json{{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"details", r.details}});
    std::fprintf(stderr, "%s  %2d %-28s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                 r.seconds);
  }
  report["criteria"] = rows;
  report["all_pass"] = all;
  report["total_seconds"] = total;
  emit(report, output);
  return all ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equicobar: equivariant simplicial coalgebra engine"};
  app.require_subcommand(1);

  std::string input, output, field = "F2", map_path, group_path, subgroup, fixtures = "fixtures";
  int notion = 3, degree = -1;
  long coset_bound = -1;

  Caps caps;
  try {
    caps = caps_from_env();
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  }

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("--input", input, "input JSON file")->required();
    cmd->add_option("--output", output, "write the report here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "validate an input object");
  add_common(validate, true);
  auto* homology = app.add_subcommand("homology", "homology of the normalized chains");
  add_common(homology, true);
  homology->add_option("--field", field, "Q or F<q>");
  homology->add_option("--degree", degree, "compare through this degree");
  auto* cobarc = app.add_subcommand("cobar", "truncated cobar homology");
  add_common(cobarc, true);
  cobarc->add_option("--field", field, "Q or F<q>");
  cobarc->add_option("--degree", caps.degree, "degree cap N");
  cobarc->add_option("--length", caps.length, "word length cap L");
  auto* pi1 = app.add_subcommand("pi1", "edge-path group and certificates");
  add_common(pi1, true);
  pi1->add_option("--coset-bound", coset_bound, "Todd-Coxeter coset bound");
  auto* cover = app.add_subcommand("cover", "universal cover construction");
  add_common(cover, true);
  cover->add_option("--coset-bound", coset_bound, "Todd-Coxeter coset bound");
  auto* points_cmd = app.add_subcommand("points", "points of a simplicial coalgebra");
  add_common(points_cmd, true);
  auto* fixed = app.add_subcommand("fixed-points", "fixed points of a G-simplicial set");
  add_common(fixed, true);
  fixed->add_option("--subgroup", subgroup, "comma-separated generating elements")->required();
  auto* orbit = app.add_subcommand("orbit-diagram", "the fixed-point orbit diagram");
  add_common(orbit, true);
  auto* cell = app.add_subcommand("cellularity", "fixed-point functor cellularity report");
  add_common(cell, true);
  auto* equiv = app.add_subcommand("equivalence", "equivalence oracles");
  equiv->add_option("--notion", notion, "1, 2 or 3")->required();
  equiv->add_option("--map", map_path, "map JSON file")->required();
  equiv->add_option("--group", group_path, "group JSON file for the equivariant oracle");
  equiv->add_option("--field", field, "Q or F<q>");
  equiv->add_option("--output", output, "write the report here instead of stdout");
  auto* descent = app.add_subcommand("descent", "Galois descent report");
  add_common(descent, true);
  auto* corpus = app.add_subcommand("corpus", "run the acceptance suite");
  corpus->add_option("--fixtures", fixtures, "fixtures directory to audit");
  corpus->add_option("--output", output, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  if (coset_bound < 0) coset_bound = caps.cosets;

  try {
    if (*validate) return cmd_validate(input, output);
    if (*homology) return cmd_homology(input, field, degree, output);
    if (*cobarc) return cmd_cobar(input, field, caps, output);
    if (*pi1) return cmd_pi1(input, coset_bound, output);
    if (*cover) return cmd_cover(input, coset_bound, output);
    if (*points_cmd) return cmd_points(input, output);
    if (*fixed) return cmd_fixed_points(input, subgroup, output);
    if (*orbit) return cmd_orbit_diagram(input, output);
    if (*cell) return cmd_cellularity(input, output);
    if (*equiv) return cmd_equivalence(notion, map_path, group_path, field, caps, output);
    if (*descent) return cmd_descent(input, output);
    if (*corpus) return cmd_corpus(fixtures, output);
  } catch (const InconclusiveError& ex) {
    std::cerr << "inconclusive: " << ex.what() << "\n";
    return kExitInconclusive;
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const FieldError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
