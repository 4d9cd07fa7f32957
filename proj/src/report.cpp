#include "tdlc/report.hpp"

#include <sstream>

#include "tdlc/errors.hpp"

namespace tdlc {

namespace {

json cylinder_verdict(const ShiftSystem& sys, const Cylinder& v) {
  json j;
  j["cylinder"] = cylinder_json(v);
  j["s_exponent"] = pexp_json(local_scale_exponent(v));
  j["H_exponent"] = pexp_json(local_entropy_exponent(v));
  TidyVerdict verdict = tidy_check(sys, v);
  j["tidy_above"] = verdict.tidy_above;
  j["tidy_below"] = verdict.tidy_below;
  UnionLimit fwd = forward_union(sys, v);
  UnionLimit bwd = backward_union(sys, v);
  j["forward_part"] = cylinder_json(forward_part(v));
  j["backward_part"] = cylinder_json(backward_part(v));
  j["forward_union_limit"] = cylinder_json(fwd.limit);
  j["forward_union_closed"] = fwd.closed;
  j["backward_union_closed"] = bwd.closed;
  return j;
}

}  // namespace

json analyze_system(const ShiftSystem& sys, const std::vector<Cylinder>& extra) {
  for (const Cylinder& v : extra) require_admissible(sys, v);
  json j;
  j["system"] = system_json(sys);

  Cylinder nb = nub(sys);
  json nj;
  nj["cylinder"] = cylinder_json(nb);
  nj["is_whole_group"] = nb == Cylinder::constant(sys.height, 0);
  nj["is_trivial"] = nb == Cylinder::constant(sys.height, sys.height);
  nj["shift_stable"] = shift_image(nb, 1) == nb;
  j["nub"] = std::move(nj);

  ShiftScaleResult sc = scale_exponent(sys, extra);
  PExp h = h_top_exponent(sys, extra);
  j["scale_exponent"] = pexp_json(sc.exponent);
  j["scale_witness"] = cylinder_json(sc.witness);
  j["h_top_exponent"] = pexp_json(h);
  j["log_scale_equals_h_top"] = sc.exponent == h;

  json per = json::array();
  per.push_back(cylinder_verdict(sys, designated_open(sys)));
  for (const Cylinder& v : extra) per.push_back(cylinder_verdict(sys, v));
  j["cylinders"] = std::move(per);
  return j;
}

json shift_gallery() {
  json g;
  g["gallery_version"] = 1;
  json entries = json::array();
  for (long p : {2L, 3L}) {
    {
      ShiftSystem sys(p, 1, ShiftMode::FullCompact);
      // one pinned coordinate, the compact-mode analogue of the half-open
      // window subgroup below
      Cylinder pinned = Cylinder::make(1, 0, 0, {1}, 0);
      entries.push_back(analyze_system(sys, {pinned}));
    }
    {
      ShiftSystem sys(p, 1, ShiftMode::RightOpen);
      entries.push_back(analyze_system(sys, {shift_image(designated_open(sys), -1)}));
    }
    {
      ShiftSystem sys(p, 2, ShiftMode::HeightOpen);
      // V: order-p subgroup on every coordinate except a pinned zero at 0
      Cylinder v = Cylinder::make(2, 0, 1, {2}, 1);
      entries.push_back(analyze_system(sys, {v}));
    }
  }
  g["entries"] = std::move(entries);
  return g;
}

namespace {

std::string exp_value(const json& e, const json& p) {
  std::string ps = p.is_number() ? std::to_string(p.get<long>()) : "p";
  if (e.is_string()) return ps + "^inf";
  return ps + "^" + std::to_string(e.get<long long>());
}

std::string exp_log(const json& e, const json& p) {
  std::string ps = p.is_number() ? std::to_string(p.get<long>()) : "p";
  if (e.is_string()) return "inf";
  return std::to_string(e.get<long long>()) + "*log " + ps;
}

void render_system(std::ostringstream& out, const json& r) {
  const json& sys = r["system"];
  out << "shift system: p = " << sys["p"] << ", K = " << sys["K"] << ", mode "
      << sys["mode"].get<std::string>() << "\n";
  const json& nub = r["nub"];
  out << "  nub: "
      << (nub["is_whole_group"].get<bool>()
              ? "the whole group"
              : (nub["is_trivial"].get<bool>() ? "trivial"
                                               : "proper constant subgroup"))
      << ", shift-stable\n";
  out << "  scale s(sigma) = " << exp_value(r["scale_exponent"], sys["p"])
      << ", h_top(sigma) = " << exp_log(r["h_top_exponent"], sys["p"]) << "\n";
  out << "  log s = h_top: "
      << (r["log_scale_equals_h_top"].get<bool>() ? "yes" : "no") << "\n";
  for (const json& c : r["cylinders"]) {
    out << "  cylinder lo=" << c["cylinder"]["lo"] << " window="
        << c["cylinder"]["window"].dump()
        << ": s = " << exp_value(c["s_exponent"], sys["p"])
        << ", H = " << exp_log(c["H_exponent"], sys["p"])
        << ", tidy above " << (c["tidy_above"].get<bool>() ? "yes" : "no")
        << ", tidy below " << (c["tidy_below"].get<bool>() ? "yes" : "no")
        << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  if (report.contains("entries")) {
    for (const json& e : report["entries"]) render_system(out, e);
    return out.str();
  }
  if (report.contains("system")) {
    render_system(out, report);
    return out.str();
  }
  if (report.contains("scale_exponent") && report.contains("p")) {
    const json& p = report["p"];
    out << "automorphism of Q_p^" << report["n"] << ", p = " << p << "\n";
    out << "  scale s(phi) = " << exp_value(report["scale_exponent"], p)
        << "   (log s = " << exp_log(report["scale_exponent"], p) << ")\n";
    if (report.contains("entropy_exponent"))
      out << "  entropy h_top(phi) = " << exp_log(report["entropy_exponent"], p)
          << "   (stabilized at n = " << report["entropy_stabilized_at"]
          << ")\n";
    if (report.contains("tidy_trace")) {
      out << "  tidy iteration:";
      for (const json& s : report["tidy_trace"])
        out << " n=" << s["n"] << ":" << exp_value(s["s_exponent"], p);
      out << "\n";
    }
    if (report.contains("newton")) {
      out << "  newton segments:";
      for (const json& s : report["newton"]["segments"])
        out << " (slope " << s["slope"].get<std::string>() << ", width "
            << s["width"] << ")";
      out << "\n";
    }
    return out.str();
  }
  return report.dump(2) + "\n";
}

json props_json(const std::vector<SuiteResult>& suites) {
  json j;
  json arr = json::array();
  unsigned failures = 0;
  for (const auto& s : suites) {
    json e;
    e["suite"] = s.name;
    e["trials"] = s.trials;
    e["failures"] = s.failures;
    e["detail"] = s.detail;
    failures += s.failures;
    arr.push_back(std::move(e));
  }
  j["suites"] = std::move(arr);
  j["total_failures"] = failures;
  return j;
}

std::string props_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  for (const auto& s : suites)
    out << (s.ok() ? "[pass] " : "[FAIL] ") << s.name << ": " << s.trials
        << " trials, " << s.failures << " failures\n";
  return out.str();
}

}  // namespace tdlc
