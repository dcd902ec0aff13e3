#include "tvb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tvb {

namespace {

using json = nlohmann::ordered_json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw Error("missing_field", std::string("missing field '") + name + "'");
  return *it;
}

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw Error("bad_integer", where + ": expected an integer");
  return j.get<long long>();
}

IVec get_ivec(const json& j, size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    throw Error("bad_vector",
                where + ": expected an array of " + std::to_string(len) + " integers");
  IVec v;
  for (const auto& c : j) v.push_back(get_int(c, where));
  return v;
}

Rational get_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw Error("bad_rational", where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

ToricVectorBundle parse_bundle(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& ex) {
    throw Error("bad_json", ex.what());
  }
  if (!doc.is_object()) throw Error("bad_json", "top level must be an object");

  ToricVectorBundle e;
  long long dim = get_int(field(doc, "dim"), "dim");
  if (dim < 1) throw Error("bad_dim", "dim must be >= 1");
  e.fan.dim = static_cast<size_t>(dim);

  const json& rays = field(doc, "rays");
  if (!rays.is_array() || rays.empty())
    throw Error("bad_ray", "rays: expected a nonempty array");
  for (size_t i = 0; i < rays.size(); ++i)
    e.fan.rays.push_back(get_ivec(rays[i], e.fan.dim, "rays[" + std::to_string(i) + "]"));

  const json& cones = field(doc, "max_cones");
  if (!cones.is_array() || cones.empty())
    throw Error("bad_cone", "max_cones: expected a nonempty array");
  for (size_t i = 0; i < cones.size(); ++i) {
    const json& c = cones[i];
    std::string where = "max_cones[" + std::to_string(i) + "]";
    if (!c.is_array()) throw Error("bad_cone", where + ": expected an array");
    std::vector<size_t> cone;
    for (const auto& r : c) {
      long long ri = get_int(r, where);
      if (ri < 0 || static_cast<size_t>(ri) >= e.fan.rays.size())
        throw Error("bad_cone_index", where + ": ray index out of range");
      cone.push_back(static_cast<size_t>(ri));
    }
    std::sort(cone.begin(), cone.end());
    e.fan.max_cones.push_back(std::move(cone));
  }

  long long rk = get_int(field(doc, "rank"), "rank");
  if (rk < 1) throw Error("bad_rank", "rank must be >= 1");
  e.rank = static_cast<size_t>(rk);

  const json& filts = field(doc, "filtrations");
  if (!filts.is_array() || filts.size() != e.fan.rays.size())
    throw Error("bad_filtration", "filtrations: expected one entry per ray");
  for (size_t ri = 0; ri < filts.size(); ++ri) {
    std::string rw = "filtrations[" + std::to_string(ri) + "]";
    const json& steps = field(filts[ri], "steps");
    if (!steps.is_array())
      throw Error("bad_filtration", rw + ".steps: expected an array");
    Filtration f;
    for (size_t si = 0; si < steps.size(); ++si) {
      std::string sw = rw + ".steps[" + std::to_string(si) + "]";
      long long jump = get_int(field(steps[si], "jump"), sw + ".jump");
      const json& basis = field(steps[si], "basis");
      if (!basis.is_array())
        throw Error("bad_basis", sw + ".basis: expected an array of rows");
      QMat rows;
      for (const auto& row : basis) {
        if (!row.is_array() || row.size() != e.rank)
          throw Error("bad_basis",
                      sw + ".basis: each row needs " + std::to_string(e.rank) + " entries");
        QVec v;
        for (const auto& c : row) v.push_back(get_rational(c, sw + ".basis"));
        rows.push_back(std::move(v));
      }
      Subspace s = rref(e.rank, rows);
      if (s.is_zero()) continue;  // explicit terminator; the zero tail is implicit
      f.steps.push_back({jump, std::move(s)});
    }
    if (f.steps.empty())
      throw Error("filtration_not_terminating",
                  rw + ": filtration does not terminate");
    e.filtrations.push_back(std::move(f));
  }

  require_smooth_complete(e.fan);
  validate_filtration_shape(e);
  return e;
}

ToricVectorBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str());
}

std::string serialize_bundle(const ToricVectorBundle& e) {
  json doc;
  doc["dim"] = e.fan.dim;
  doc["rays"] = json::array();
  for (const auto& r : e.fan.rays) doc["rays"].push_back(r);
  doc["max_cones"] = json::array();
  for (const auto& c : e.fan.max_cones) doc["max_cones"].push_back(c);
  doc["rank"] = e.rank;
  doc["filtrations"] = json::array();
  for (const auto& f : e.filtrations) {
    json steps = json::array();
    for (const auto& [j, s] : f.steps) {
      json basis = json::array();
      for (const auto& row : s.basis()) {
        json jr = json::array();
        for (const auto& c : row) jr.push_back(to_string(c));
        basis.push_back(std::move(jr));
      }
      steps.push_back(json{{"jump", j}, {"basis", std::move(basis)}});
    }
    doc["filtrations"].push_back(json{{"steps", std::move(steps)}});
  }
  return doc.dump(2) + "\n";
}

void save_bundle(const ToricVectorBundle& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path);
  out << serialize_bundle(e);
}

}  // namespace tvb
