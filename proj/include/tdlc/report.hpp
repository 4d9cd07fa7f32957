#pragma once

#include <vector>

#include "tdlc/json_io.hpp"
#include "tdlc/props.hpp"
#include "tdlc/shift.hpp"

namespace tdlc {

// Full verdict sheet for one shift system: nub, scale, entropy, and a
// per-cylinder analysis of any supplied subgroups.
json analyze_system(const ShiftSystem& sys, const std::vector<Cylinder>& extra);

// The built-in gallery: all three modes at p = 2 and p = 3 with the worked
// subgroups.  Serves as the golden acceptance fixture; any diff fails CI.
json shift_gallery();

// Human-readable rendering of report JSON.  Exponent-first: values print as
// p^e and e*log p, never as decimals.
std::string render_text(const json& report);

std::string props_text(const std::vector<SuiteResult>& suites);
json props_json(const std::vector<SuiteResult>& suites);

}  // namespace tdlc
