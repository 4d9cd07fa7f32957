#pragma once

#include <json.hpp>
#include <string>

#include "tdlc/duality.hpp"
#include "tdlc/lattice.hpp"
#include "tdlc/matrix.hpp"
#include "tdlc/scale.hpp"
#include "tdlc/shift.hpp"

namespace tdlc {

// Reports preserve insertion order so that identical inputs produce
// byte-identical output.
using json = nlohmann::ordered_json;

json pexp_json(PExp e);  // finite -> number, infinite -> "inf"

json matrix_json(const QMat& m);  // [["rat", ...], ...], row-major
QMat matrix_from_json(const json& j);

json lattice_json(const Lattice& l);  // {"p": int, "basis": [[...]]}
Lattice lattice_from_json(const json& j);

json cylinder_json(const Cylinder& v);
Cylinder cylinder_from_json(const json& j, int height);

json system_json(const ShiftSystem& s);  // {"p", "K", "mode"}
ShiftSystem system_from_json(const json& j);

json newton_json(const NewtonPolygon& np);
json tidy_trace_json(const TidyTrace& t);
json scale_report_json(const ScaleReport& r);
json bridge_report_json(const BridgeReport& r);

// FNV-1a over the canonical dump of a JSON value; used to stamp inputs into
// reports so a run can be replayed bit for bit.
std::string input_hash(const json& j);

}  // namespace tdlc
