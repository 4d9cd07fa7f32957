#include "tdlc/json_io.hpp"

#include <cstdint>
#include <cstdio>

#include "tdlc/errors.hpp"

namespace tdlc {

json pexp_json(PExp e) {
  if (e.is_infinite()) return json("inf");
  return json(e.value());
}

json matrix_json(const QMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw input_error("matrix: expected a non-empty array of arrays");
  std::size_t rows = j.size();
  std::size_t cols = j.front().size();
  QMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw input_error("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_string())
        throw input_error("matrix: entries must be rational strings");
      m.at(i, c) = parse_rat(j[i][c].get<std::string>());
    }
  }
  return m;
}

json lattice_json(const Lattice& l) {
  json j;
  j["p"] = l.p();
  j["basis"] = matrix_json(l.basis());
  return j;
}

Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("basis"))
    throw input_error("lattice: expected {\"p\": int, \"basis\": [[...]]}");
  long p = j["p"].get<long>();
  QMat basis = matrix_from_json(j["basis"]);
  if (!basis.is_square()) throw input_error("lattice: basis must be square");
  return Lattice::from_generators(p, basis);
}

json cylinder_json(const Cylinder& v) {
  json j;
  j["lo"] = v.lo();
  j["hi"] = v.hi();
  j["left"] = v.left();
  j["window"] = v.window();
  j["right"] = v.right();
  return j;
}

Cylinder cylinder_from_json(const json& j, int height) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("left") ||
      !j.contains("window") || !j.contains("right"))
    throw input_error(
        "cylinder: expected {\"lo\", \"hi\", \"left\", \"window\", \"right\"}");
  return Cylinder::make(height, j["lo"].get<long>(), j["left"].get<int>(),
                        j["window"].get<std::vector<int>>(),
                        j["right"].get<int>());
}

json system_json(const ShiftSystem& s) {
  json j;
  j["p"] = s.p;
  j["K"] = s.height;
  j["mode"] = mode_name(s.mode);
  return j;
}

ShiftSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("K") ||
      !j.contains("mode"))
    throw input_error("system: expected {\"p\", \"K\", \"mode\"}");
  return ShiftSystem(j["p"].get<long>(), j["K"].get<int>(),
                     mode_from_name(j["mode"].get<std::string>()));
}

json newton_json(const NewtonPolygon& np) {
  json j;
  json verts = json::array();
  for (const auto& v : np.vertices) verts.push_back(json::array({v.i, v.v}));
  j["vertices"] = std::move(verts);
  json segs = json::array();
  for (const auto& s : np.segments) {
    json seg;
    seg["slope"] = rat_str(s.slope);
    seg["width"] = s.width;
    segs.push_back(std::move(seg));
  }
  j["segments"] = std::move(segs);
  return j;
}

json tidy_trace_json(const TidyTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step;
    step["n"] = s.n;
    step["s_exponent"] = pexp_json(s.s_exponent);
    steps.push_back(std::move(step));
  }
  json j;
  j["steps"] = std::move(steps);
  j["terminal_n"] = t.terminal_n;
  j["terminal_exponent"] = pexp_json(t.terminal_exponent);
  return j;
}

json scale_report_json(const ScaleReport& r) {
  json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["scale_exponent"] = pexp_json(r.scale_exp);
  j["entropy_exponent"] = pexp_json(r.entropy_exp);
  j["entropy_stabilized_at"] = r.entropy_stabilized_at;
  json steps = json::array();
  for (const auto& s : r.witness.steps) {
    json step;
    step["n"] = s.n;
    step["s_exponent"] = pexp_json(s.s_exponent);
    steps.push_back(std::move(step));
  }
  j["tidy_trace"] = std::move(steps);
  j["newton"] = newton_json(r.newton);
  return j;
}

json bridge_report_json(const BridgeReport& r) {
  json j;
  j["local"] = pexp_json(r.local_lhs);
  j["local_dual"] = pexp_json(r.local_rhs);
  j["global"] = pexp_json(r.global_lhs);
  j["global_dual"] = pexp_json(r.global_rhs);
  j["witness"] = pexp_json(r.witness_lhs);
  j["witness_dual"] = pexp_json(r.witness_rhs);
  j["involution_ok"] = r.involution_ok;
  j["ok"] = r.ok;
  return j;
}

std::string input_hash(const json& j) {
  // hash the key-sorted form so flag order cannot change the stamp
  const std::string dump = nlohmann::json(j).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace tdlc
