#pragma once

// JSON input/output for every file format the CLI accepts. All formats
// carry "schema": 1; reports are deterministic (object keys sorted, arrays
// in canonical order).

#include <fstream>

#include <json.hpp>

#include "equicobar/galois.hpp"
#include "equicobar/oracles.hpp"

namespace eqc {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InputError("malformed JSON in " + path + ": " + ex.what());
  }
  return j;
}

inline void check_schema(const json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  if (j.contains("schema") && j.at("schema") != 1)
    throw InputError("unsupported schema version");
}

// ---------------------------------------------------------------------------
// field specs
// ---------------------------------------------------------------------------

struct FieldChoice {
  bool rational = true;
  uint32_t p = 0, k = 0;
  std::string name() const { return rational ? "Q" : FqSpec::get(p, k)->name(); }
};

inline FieldChoice parse_field_name(const std::string& s) {
  if (s == "Q" || s == "rational") return FieldChoice{};
  if (s.size() >= 2 && s[0] == 'F') {
    long q = std::stol(s.substr(1));
    for (uint32_t p = 2; long(p) <= q; ++p) {
      if (!is_prime_u32(p)) continue;
      uint32_t k = 0;
      long t = q;
      while (t % p == 0) {
        t /= p;
        ++k;
      }
      if (t == 1 && k >= 1) return FieldChoice{false, p, k};
    }
    throw InputError("field order is not a prime power: " + s);
  }
  throw InputError("unknown field name: " + s + " (use Q or F<q>)");
}

inline FieldChoice parse_field_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldChoice{};
  if (kind == "finite")
    return FieldChoice{false, j.at("p").get<uint32_t>(),
                       j.contains("k") ? j.at("k").get<uint32_t>() : 1};
  throw InputError("field kind must be rational or finite");
}

// ---------------------------------------------------------------------------
// simplicial sets
// ---------------------------------------------------------------------------

inline SimplicialSet sset_from_json(const json& j) {
  check_schema(j);
  if (j.contains("model")) {
    int d = j.contains("dimension_bound") ? j.at("dimension_bound").get<int>() : 6;
    return standard_model(j.at("model").get<std::string>(), d);
  }
  int d = j.at("dimension_bound").get<int>();
  bool reduced = j.at("reduced").get<bool>();
  SimplicialSet x(d, reduced);
  const json& simp = j.at("simplices");
  for (int n = 0; n <= d; ++n) {
    std::string key = std::to_string(n);
    if (!simp.contains(key)) continue;
    for (auto& cell : simp.at(key)) x.add_simplex(n, cell.at("name").get<std::string>());
  }
  for (int n = 1; n <= d; ++n) {
    std::string key = std::to_string(n);
    if (!simp.contains(key)) continue;
    int idx = 0;
    for (auto& cell : simp.at(key)) {
      const json& faces = cell.at("faces");
      if (int(faces.size()) != n + 1)
        throw InputError("simplex " + cell.at("name").get<std::string>() + " needs " +
                         std::to_string(n + 1) + " faces");
      for (int i = 0; i <= n; ++i) {
        DegWord w;
        for (auto& v : faces.at(i).at(0)) w.v.push_back(v.get<int>());
        std::string target = faces.at(i).at(1).get<std::string>();
        int core_dim = n - 1 - w.size();
        auto id = x.find(core_dim, target);
        if (!id)
          throw InputError("face target not found: " + target + " in dimension " +
                           std::to_string(core_dim));
        x.set_face({n, idx}, i, SPair{w, *id});
      }
      ++idx;
    }
  }
  if (auto v = x.validate()) throw InputError("invalid simplicial set: " + v->message);
  return x;
}

inline json sset_to_json(const SimplicialSet& x) {
  json simp = json::object();
  for (int n = 0; n <= x.dim_bound(); ++n) {
    if (x.count(n) == 0) continue;
    json arr = json::array();
    for (int i = 0; i < x.count(n); ++i) {
      json cell;
      cell["name"] = x.name({n, i});
      if (n >= 1) {
        json faces = json::array();
        for (int j = 0; j <= n; ++j) {
          const SPair& f = x.stored_face({n, i}, j);
          faces.push_back(json::array({f.w.v, x.name(f.s)}));
        }
        cell["faces"] = faces;
      }
      arr.push_back(cell);
    }
    simp[std::to_string(n)] = arr;
  }
  return json{{"schema", 1},
              {"type", "sset"},
              {"dimension_bound", x.dim_bound()},
              {"reduced", x.reduced()},
              {"simplices", simp}};
}

// ---------------------------------------------------------------------------
// groups and actions
// ---------------------------------------------------------------------------

inline FiniteGroup group_from_json(const json& j) {
  check_schema(j);
  if (j.contains("cyclic")) return FiniteGroup::cyclic(j.at("cyclic").get<int>());
  if (j.contains("symmetric")) return FiniteGroup::symmetric(j.at("symmetric").get<int>());
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  return FiniteGroup(std::move(names), std::move(table));
}

// action: { element name: { dim: { simplex: simplex } } }; omitted = fixed
inline GSimplicialSet gsset_from_json(const json& j) {
  check_schema(j);
  FiniteGroup g = group_from_json(j.at("group"));
  SimplicialSet x = sset_from_json(j.at("space"));
  GSimplicialSet out(std::move(x), std::move(g));
  if (j.contains("action")) {
    for (auto& [ename, dims] : j.at("action").items()) {
      auto e = out.group().find(ename);
      if (!e) throw InputError("action names unknown group element: " + ename);
      for (auto& [dimstr, perm] : dims.items()) {
        int n = std::stoi(dimstr);
        for (auto& [from, to] : perm.items()) {
          auto a = out.sset().find(n, from);
          auto b = out.sset().find(n, to.get<std::string>());
          if (!a || !b) throw InputError("action names unknown simplex in dimension " + dimstr);
          out.set_action(*e, n, a->idx, b->idx);
        }
      }
    }
  }
  out.validate();
  return out;
}

inline SimplicialMap map_from_json(const json& j, const SimplicialSet& src,
                                   const SimplicialSet& dst) {
  SimplicialMap f(&src, &dst);
  const json& images = j.at("images");
  for (int n = 0; n <= src.dim_bound(); ++n) {
    std::string key = std::to_string(n);
    for (int i = 0; i < src.count(n); ++i) {
      const std::string& nm = src.name({n, i});
      if (!images.contains(key) || !images.at(key).contains(nm))
        throw InputError("map is missing the image of " + nm);
      const json& img = images.at(key).at(nm);
      DegWord w;
      for (auto& v : img.at(0)) w.v.push_back(v.get<int>());
      std::string target = img.at(1).get<std::string>();
      auto id = dst.find(n - w.size(), target);
      if (!id) throw InputError("map image target not found: " + target);
      f.set_image({n, i}, SPair{w, *id});
    }
  }
  if (auto v = f.validate()) throw InputError("invalid simplicial map: " + v->message);
  return f;
}

// ---------------------------------------------------------------------------
// simplicial coalgebras
// ---------------------------------------------------------------------------

template <FieldScalar F>
SimplicialCoalgebra<F> scoalg_from_json(const json& j, typename F::Ctx ctx) {
  check_schema(j);
  SimplicialCoalgebra<F> sc;
  sc.ctx = ctx;
  const json& degrees = j.at("degrees");
  sc.top = int(degrees.size()) - 1;
  sc.connected = j.value("connected", true);
  sc.chains_type = false;
  sc.deg.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) {
    auto& c = sc.deg[n];
    c.ctx = ctx;
    c.basis = degrees.at(n).at("basis").get<std::vector<std::string>>();
    c.delta.resize(c.basis.size());
    for (auto& t : degrees.at(n).at("delta")) {
      int i = t.at(0).get<int>(), a = t.at(1).get<int>(), b = t.at(2).get<int>();
      c.delta[i].emplace_back(a, b, ctx.parse(t.at(3).get<std::string>()));
    }
    for (auto& s : degrees.at(n).at("counit"))
      c.counit.push_back(ctx.parse(s.get<std::string>()));
  }
  auto read_ops = [&](const json& arr, int n, int target_dim) {
    std::vector<Matrix<F>> ops;
    for (auto& mat : arr) {
      Matrix<F> m(sc.dim(target_dim), sc.dim(n), ctx);
      for (auto& t : mat)
        m.add_entry(t.at(0).get<int>(), t.at(1).get<int>(), ctx.parse(t.at(2).get<std::string>()));
      ops.push_back(std::move(m));
    }
    return ops;
  };
  sc.face.resize(sc.top + 1);
  sc.degen.resize(sc.top + 1);
  const json& faces = j.at("faces");
  for (int n = 1; n <= sc.top; ++n) sc.face[n] = read_ops(faces.at(n - 1), n, n - 1);
  const json& degens = j.at("degeneracies");
  for (int n = 0; n < sc.top; ++n) sc.degen[n] = read_ops(degens.at(n), n, n + 1);
  sc.require_valid("input simplicial coalgebra");
  return sc;
}

// ---------------------------------------------------------------------------
// caps from the environment
// ---------------------------------------------------------------------------

struct Caps {
  int degree = 5;        // N
  int length = 7;        // L
  long cosets = 1000;    // Todd-Coxeter bound
  int homology = 2;      // homology comparison degree
};

inline Caps caps_from_env() {
  Caps c;
  const char* e = std::getenv("EQUICOBAR_CAPS");
  if (!e) return c;
  std::string s(e);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
    auto eq = part.find('=');
    if (eq != std::string::npos) {
      std::string key = part.substr(0, eq);
      long val = std::stol(part.substr(eq + 1));
      if (key == "N") c.degree = int(val);
      else if (key == "L") c.length = int(val);
      else if (key == "cosets") c.cosets = val;
      else if (key == "H") c.homology = int(val);
      else throw InputError("unknown cap in EQUICOBAR_CAPS: " + key);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (c.degree < 1 || c.length < 1 || c.cosets < 1 || c.homology < 0)
    throw InputError("caps must be positive");
  return c;
}

}  // namespace eqc
