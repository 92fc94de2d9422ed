#include "btres/input.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "btres/errors.hpp"

namespace btres {

using nlohmann::json;

bool InputSpec::operator==(const InputSpec& o) const {
  return quadruple.n == o.quadruple.n && quadruple.k == o.quadruple.k &&
         quadruple.psi == o.quadruple.psi &&
         quadruple.variables == o.quadruple.variables &&
         quadruple.fan == o.quadruple.fan && quadruple.group == o.quadruple.group &&
         options == o.options;
}

namespace {

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw ParseError("unknown key '" + key + "' in " + where);
}

long get_long(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + " must be an integer");
  return v.get<long>();
}

IntMatrix parse_int_matrix(const json& v, const std::string& where) {
  if (!v.is_array())
    throw ParseError(where + " must be an array of rows");
  std::size_t rows = v.size();
  std::size_t cols = rows ? v[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw ParseError(where + " must be rectangular");
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = get_long(v[i][j], where + " entry");
  }
  return m;
}

std::vector<std::vector<int>> parse_cones(const json& v, const std::string& where) {
  if (!v.is_array())
    throw ParseError(where + " must be an array of index lists");
  std::vector<std::vector<int>> cones;
  for (const auto& cone : v) {
    if (!cone.is_array())
      throw ParseError(where + " entries must be index lists");
    std::vector<int> c;
    for (const auto& idx : cone) c.push_back(static_cast<int>(get_long(idx, where)));
    cones.push_back(std::move(c));
  }
  return cones;
}

Rat parse_rat_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw ParseError(where + " must be an integer or a rational string");
}

ClassId parse_class_id(const json& v, const std::string& where) {
  ClassId id;
  if (v.is_array()) {
    for (const auto& c : v) id.free_part.push_back(get_long(c, where));
    return id;
  }
  if (v.is_object()) {
    require_keys(v, where, {"free", "torsion"});
    if (v.contains("free"))
      for (const auto& c : v["free"]) id.free_part.push_back(get_long(c, where));
    if (v.contains("torsion"))
      for (const auto& c : v["torsion"]) id.torsion.push_back(get_long(c, where));
    return id;
  }
  throw ParseError(where + " must be an array or {free,torsion} object");
}

InputOptions parse_options(const json& v) {
  InputOptions opts;
  require_keys(v, "options", {"contraction", "harmonic_basis", "emit"});
  if (v.contains("contraction")) {
    if (!v["contraction"].is_string())
      throw ParseError("options.contraction must be a string");
    opts.contraction = v["contraction"].get<std::string>();
  }
  if (v.contains("harmonic_basis")) {
    if (!v["harmonic_basis"].is_string())
      throw ParseError("options.harmonic_basis must be a string");
    opts.harmonic_basis = v["harmonic_basis"].get<std::string>();
  }
  if (v.contains("emit")) {
    if (!v["emit"].is_array())
      throw ParseError("options.emit must be an array");
    opts.emit.clear();
    static const std::set<std::string> known = {"report", "matrices", "m2", "svg"};
    for (const auto& e : v["emit"]) {
      if (!e.is_string() || !known.count(e.get<std::string>()))
        throw ParseError("options.emit entries must be report|matrices|m2|svg");
      opts.emit.push_back(e.get<std::string>());
    }
  }
  return opts;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError("JSON syntax error at byte " + std::to_string(err.byte) + ": " +
                     err.what());
  }
}

} // namespace

InputSpec parse_input(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object())
    throw ParseError("input must be a JSON object");

  InputSpec spec;
  if (root.contains("embedding")) {
    require_keys(root, "input", {"embedding", "variables", "group", "options"});
    const json& emb = root["embedding"];
    require_keys(emb, "embedding", {"rays", "cones", "sublattice"});
    if (!emb.contains("rays"))
      throw ParseError("embedding.rays is required");
    EmbeddingSpec e;
    // Rays are given one per entry; the ray matrix stores them as columns.
    IntMatrix ray_rows = parse_int_matrix(emb["rays"], "embedding.rays");
    e.rays = ray_rows.transpose();
    if (emb.contains("cones")) e.cones = parse_cones(emb["cones"], "embedding.cones");
    if (emb.contains("sublattice")) {
      IntMatrix sub_rows = parse_int_matrix(emb["sublattice"], "embedding.sublattice");
      e.sublattice = sub_rows.cols() == 0 ? IntMatrix(e.rays.rows(), 0)
                                          : sub_rows.transpose();
    } else {
      e.sublattice = IntMatrix(e.rays.rows(), 0);
    }
    spec.quadruple = embedding_to_quadruple(e);
  } else {
    require_keys(root, "input", {"n", "k", "psi", "variables", "fan", "group", "options"});
    for (const char* field : {"n", "k", "psi"})
      if (!root.contains(field))
        throw ParseError(std::string("missing required field '") + field + "'");
    long n = get_long(root["n"], "n");
    long k = get_long(root["k"], "k");
    if (n < 1) throw ValidationError("Shape", "n must be positive");
    if (k < 1) throw ValidationError("Shape", "k must be positive");
    spec.quadruple.n = static_cast<std::size_t>(n);
    spec.quadruple.k = static_cast<std::size_t>(k);
    spec.quadruple.psi = parse_int_matrix(root["psi"], "psi");
    if (spec.quadruple.psi.rows() != spec.quadruple.k ||
        spec.quadruple.psi.cols() != spec.quadruple.n)
      throw ValidationError("Shape", "psi must be a k x n matrix");
    if (root.contains("fan"))
      spec.quadruple.fan = parse_cones(root["fan"], "fan");
  }

  if (root.contains("variables")) {
    if (!root["variables"].is_array())
      throw ParseError("variables must be an array of strings");
    for (const auto& v : root["variables"]) {
      if (!v.is_string()) throw ParseError("variables must be strings");
      spec.quadruple.variables.push_back(v.get<std::string>());
    }
  }
  if (root.contains("group")) {
    if (!root["group"].is_string()) throw ParseError("group must be a string");
    spec.quadruple.group = root["group"].get<std::string>();
  }
  if (root.contains("options")) spec.options = parse_options(root["options"]);

  spec.quadruple.validate();
  return spec;
}

std::string emit_input(const InputSpec& spec) {
  json root;
  root["n"] = spec.quadruple.n;
  root["k"] = spec.quadruple.k;
  json psi = json::array();
  for (std::size_t i = 0; i < spec.quadruple.k; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < spec.quadruple.n; ++j)
      row.push_back(to_long(spec.quadruple.psi.at(i, j)));
    psi.push_back(std::move(row));
  }
  root["psi"] = std::move(psi);
  if (!spec.quadruple.variables.empty()) root["variables"] = spec.quadruple.variables;
  if (spec.quadruple.fan) root["fan"] = *spec.quadruple.fan;
  if (!spec.quadruple.group.empty()) root["group"] = spec.quadruple.group;
  json opts;
  opts["contraction"] = spec.options.contraction;
  opts["harmonic_basis"] = spec.options.harmonic_basis;
  opts["emit"] = spec.options.emit;
  root["options"] = std::move(opts);
  return root.dump(2) + "\n";
}

Quadruple embedding_to_quadruple(const EmbeddingSpec& e) {
  const std::size_t d = e.rays.rows();
  const std::size_t n = e.rays.cols();
  const std::size_t m = e.sublattice.cols();
  if (d == 0 || n == 0)
    throw ValidationError("Shape", "embedding needs a nonempty ray matrix");
  if (e.sublattice.rows() != d)
    throw ValidationError("Shape", "sublattice vectors must live in the ray lattice");
  if (m >= d)
    throw ValidationError("RankError",
                          "sublattice rank leaves no torus directions (k = 0)");

  IntMatrix quotient; // (d-m) x d
  if (m == 0) {
    quotient = IntMatrix::identity(d);
  } else {
    if (rank(e.sublattice.to_rat()) != m)
      throw ValidationError("RankError", "sublattice basis is not independent");
    SmithResult snf = smith(e.sublattice);
    for (const Int& f : snf.invariant_factors)
      if (f != 1)
        throw ValidationError("NotSaturated",
                              "sublattice is not saturated (invariant factor " +
                                  f.get_str() + ")");
    quotient = IntMatrix(d - m, d);
    for (std::size_t i = 0; i < d - m; ++i)
      for (std::size_t j = 0; j < d; ++j) quotient.at(i, j) = snf.u.at(m + i, j);
  }

  Quadruple q;
  q.n = n;
  q.k = d - m;
  q.psi = quotient * e.rays;
  if (!e.cones.empty()) q.fan = e.cones;
  q.validate();
  return q;
}

std::vector<std::tuple<ClassId, std::size_t, RatMatrix>>
parse_contraction_file(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object() || !root.contains("blocks"))
    throw ParseError("contraction file must be {\"blocks\": [...]}");
  require_keys(root, "contraction file", {"blocks"});
  std::vector<std::tuple<ClassId, std::size_t, RatMatrix>> out;
  for (const auto& item : root["blocks"]) {
    require_keys(item, "blocks entry", {"class", "degree", "matrix"});
    for (const char* field : {"class", "degree", "matrix"})
      if (!item.contains(field))
        throw ParseError(std::string("blocks entry missing '") + field + "'");
    ClassId cls = parse_class_id(item["class"], "blocks.class");
    long degree = get_long(item["degree"], "blocks.degree");
    if (degree < 0) throw ParseError("blocks.degree must be nonnegative");
    const json& mj = item["matrix"];
    if (!mj.is_array()) throw ParseError("blocks.matrix must be an array of rows");
    std::size_t rows = mj.size();
    std::size_t cols = rows ? mj[0].size() : 0;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!mj[i].is_array() || mj[i].size() != cols)
        throw ParseError("blocks.matrix must be rectangular");
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = parse_rat_json(mj[i][j], "blocks.matrix entry");
    }
    out.emplace_back(std::move(cls), static_cast<std::size_t>(degree), std::move(m));
  }
  return out;
}

std::vector<std::tuple<ClassId, std::size_t, std::vector<RatVec>>>
parse_harmonic_file(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object() || !root.contains("bases"))
    throw ParseError("harmonic basis file must be {\"bases\": [...]}");
  require_keys(root, "harmonic file", {"bases"});
  std::vector<std::tuple<ClassId, std::size_t, std::vector<RatVec>>> out;
  for (const auto& item : root["bases"]) {
    require_keys(item, "bases entry", {"class", "degree", "vectors"});
    for (const char* field : {"class", "degree", "vectors"})
      if (!item.contains(field))
        throw ParseError(std::string("bases entry missing '") + field + "'");
    ClassId cls = parse_class_id(item["class"], "bases.class");
    long degree = get_long(item["degree"], "bases.degree");
    if (degree < 0) throw ParseError("bases.degree must be nonnegative");
    std::vector<RatVec> vecs;
    for (const auto& vj : item["vectors"]) {
      if (!vj.is_array()) throw ParseError("bases.vectors entries must be arrays");
      RatVec v;
      for (const auto& c : vj) v.push_back(parse_rat_json(c, "bases.vectors entry"));
      vecs.push_back(std::move(v));
    }
    out.emplace_back(std::move(cls), static_cast<std::size_t>(degree), std::move(vecs));
  }
  return out;
}

RatMatrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  long rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("matrix text must start with 'rows cols'");
  RatMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok))
        throw ParseError("matrix text ended early at entry (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_rat(tok);
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix entries");
  return m;
}

} // namespace btres
