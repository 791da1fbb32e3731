#include "coalglab/io.hpp"

#include <algorithm>
#include <fstream>

namespace coalglab {

namespace {

void require_version(const Json& j, const char* what) {
  if (!j.is_object()) throw input_error(std::string(what) + ": expected an object");
  if (!j.contains("version") || !j["version"].is_string())
    throw input_error(std::string(what) + ": missing schema version");
  if (j["version"].get<std::string>() != kSchemaVersion)
    throw input_error(std::string(what) + ": unknown schema version \"" +
                      j["version"].get<std::string>() + "\"");
}

Field field_from(const Json& j, const char* what) {
  if (!j.contains("field") || !j["field"].is_string())
    throw input_error(std::string(what) + ": missing field descriptor");
  return Field::parse(j["field"].get<std::string>());
}

}  // namespace

Json coalgebra_to_json(const Coalgebra& c) {
  Json j;
  j["version"] = kSchemaVersion;
  j["field"] = c.field().to_string();
  j["basis"] = c.labels();
  Json delta = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    std::vector<DeltaTerm> terms = c.delta()[i];
    std::sort(terms.begin(), terms.end(), [](const DeltaTerm& a, const DeltaTerm& b) {
      return a.j != b.j ? a.j < b.j : a.k < b.k;
    });
    for (const auto& t : terms)
      delta.push_back(Json::array({i, t.j, t.k, t.coeff.to_string()}));
  }
  j["delta"] = std::move(delta);
  Json counit = Json::array();
  for (const auto& s : c.counit()) counit.push_back(s.to_string());
  j["counit"] = std::move(counit);
  return j;
}

Coalgebra coalgebra_from_json(const Json& j) {
  require_version(j, "coalgebra");
  Field f = field_from(j, "coalgebra");
  if (!j.contains("basis") || !j["basis"].is_array())
    throw input_error("coalgebra: missing basis array");
  std::vector<std::string> labels = j["basis"].get<std::vector<std::string>>();
  std::vector<std::vector<DeltaTerm>> delta(labels.size());
  if (!j.contains("delta") || !j["delta"].is_array())
    throw input_error("coalgebra: missing delta array");
  for (const auto& t : j["delta"]) {
    if (!t.is_array() || t.size() != 4)
      throw input_error("coalgebra: delta entries are [i, j, k, scalar]");
    std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>(),
                k = t[2].get<std::size_t>();
    if (i >= labels.size() || jj >= labels.size() || k >= labels.size())
      throw input_error("coalgebra: delta index out of range");
    delta[i].push_back({jj, k, Scalar::parse(f, t[3].get<std::string>())});
  }
  if (!j.contains("counit") || !j["counit"].is_array() || j["counit"].size() != labels.size())
    throw input_error("coalgebra: counit must list one scalar per basis element");
  std::vector<Scalar> counit;
  for (const auto& s : j["counit"]) counit.push_back(Scalar::parse(f, s.get<std::string>()));
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Json comodule_to_json(const Comodule& m) {
  Json j;
  j["version"] = kSchemaVersion;
  j["coalgebra"] = coalgebra_to_json(*m.coalgebra());
  j["dim"] = m.dim();
  Json rho = Json::array();
  for (std::size_t s = 0; s < m.dim(); ++s) {
    std::vector<RhoTerm> terms = m.rho()[s];
    std::sort(terms.begin(), terms.end(), [](const RhoTerm& a, const RhoTerm& b) {
      return a.c_index != b.c_index ? a.c_index < b.c_index : a.target < b.target;
    });
    for (const auto& t : terms)
      rho.push_back(Json::array({s, t.c_index, t.target, t.coeff.to_string()}));
  }
  j["rho"] = std::move(rho);
  return j;
}

Comodule comodule_from_json(const Json& j, CoalgebraPtr coalgebra) {
  require_version(j, "comodule");
  CoalgebraPtr c = coalgebra;
  if (j.contains("coalgebra")) {
    if (j["coalgebra"].is_string()) {
      c = std::make_shared<Coalgebra>(
          coalgebra_from_json(load_json_file(j["coalgebra"].get<std::string>())));
    } else {
      c = std::make_shared<Coalgebra>(coalgebra_from_json(j["coalgebra"]));
    }
  }
  if (!c) throw input_error("comodule: no coalgebra given (inline, path, or context)");
  if (!j.contains("dim")) throw input_error("comodule: missing dim");
  std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::vector<RhoTerm>> rho(dim);
  if (!j.contains("rho") || !j["rho"].is_array()) throw input_error("comodule: missing rho");
  for (const auto& t : j["rho"]) {
    if (!t.is_array() || t.size() != 4)
      throw input_error("comodule: rho entries are [s, i, t, scalar]");
    std::size_t s = t[0].get<std::size_t>(), i = t[1].get<std::size_t>(),
                tt = t[2].get<std::size_t>();
    if (s >= dim || i >= c->dim() || tt >= dim)
      throw input_error("comodule: rho index out of range");
    rho[s].push_back({i, tt, Scalar::parse(c->field(), t[3].get<std::string>())});
  }
  return Comodule(c, dim, std::move(rho));
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["version"] = kSchemaVersion;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back(Json::array({a.label, a.src, a.tgt}));
  j["arrows"] = std::move(arrows);
  return j;
}

Quiver quiver_from_json(const Json& j) {
  require_version(j, "quiver");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw input_error("quiver: missing vertices");
  std::vector<std::string> vs = j["vertices"].get<std::vector<std::string>>();
  std::vector<Arrow> arrows;
  if (j.contains("arrows"))
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 3)
        throw input_error("quiver: arrows are [label, src, tgt]");
      arrows.push_back({a[0].get<std::string>(), a[1].get<std::string>(),
                        a[2].get<std::string>()});
    }
  return Quiver(std::move(vs), std::move(arrows));
}

Json dimension_vector_to_json(const DimensionVector& d) {
  Json j;
  j["version"] = kSchemaVersion;
  Json entries = Json::object();
  for (const auto& [k, v] : d.entries)
    if (v) entries[k] = v;
  j["entries"] = std::move(entries);
  return j;
}

DimensionVector dimension_vector_from_json(const Json& j) {
  require_version(j, "dimension-vector");
  DimensionVector d;
  if (!j.contains("entries") || !j["entries"].is_object())
    throw input_error("dimension-vector: missing entries object");
  for (auto it = j["entries"].begin(); it != j["entries"].end(); ++it)
    d.entries[it.key()] = it.value().get<std::size_t>();
  return d;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, Field f) {
  if (!j.is_array()) throw input_error("matrix: expected an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw input_error("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Scalar::parse(f, j[r][c].get<std::string>());
  }
  return m;
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["version"] = kSchemaVersion;
  j["field"] = s.field().to_string();
  j["ambient"] = s.ambient();
  j["rows"] = matrix_to_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j, Field f) {
  require_version(j, "subspace");
  std::size_t ambient = j.at("ambient").get<std::size_t>();
  Matrix rows = matrix_from_json(j.at("rows"), f);
  if (rows.rows() == 0) return Subspace(f, ambient);
  if (rows.cols() != ambient) throw input_error("subspace: row width != ambient");
  return Subspace::from_rows(rows);
}

Json free_module_to_json(const FreeAlgebraModule& m) {
  Json j;
  j["version"] = kSchemaVersion;
  j["field"] = m.field().to_string();
  j["dim"] = m.dim();
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(matrix_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

FreeAlgebraModule free_module_from_json(const Json& j) {
  require_version(j, "module");
  Field f = field_from(j, "module");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Matrix> gens;
  for (const auto& g : j.at("generators")) {
    Matrix m = matrix_from_json(g, f);
    if (m.rows() != dim || m.cols() != dim)
      throw input_error("module: generator shape mismatch");
    gens.push_back(std::move(m));
  }
  return FreeAlgebraModule(f, dim, std::move(gens));
}

Json quiver_rep_to_json(const QuiverRep& r) {
  Json j;
  j["version"] = kSchemaVersion;
  j["field"] = r.field().to_string();
  j["quiver"] = quiver_to_json(r.quiver);
  Json dims = Json::object();
  for (const auto& [v, d] : r.dims) dims[v] = d;
  j["dims"] = std::move(dims);
  Json maps = Json::object();
  for (const auto& [a, m] : r.maps) maps[a] = matrix_to_json(m);
  j["maps"] = std::move(maps);
  return j;
}

QuiverRep quiver_rep_from_json(const Json& j) {
  require_version(j, "quiver-rep");
  Field f = field_from(j, "quiver-rep");
  QuiverRep r{quiver_from_json(j.at("quiver")), {}, {}, f};
  for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it)
    r.dims[it.key()] = it.value().get<std::size_t>();
  if (j.contains("maps"))
    for (auto it = j["maps"].begin(); it != j["maps"].end(); ++it)
      r.maps[it.key()] = matrix_from_json(it.value(), f);
  r.validate();
  return r;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << content;
}

}  // namespace coalglab
