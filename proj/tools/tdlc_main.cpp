#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tdlc/duality.hpp"
#include "tdlc/errors.hpp"
#include "tdlc/json_io.hpp"
#include "tdlc/props.hpp"
#include "tdlc/report.hpp"
#include "tdlc/scale.hpp"

namespace {

using tdlc::json;

struct CommonOpts {
  long p = 0;
  std::string matrix_inline;
  std::string lattice_inline;
  std::string input_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned cap = tdlc::kDefaultIterationCap;
  unsigned window = tdlc::kDefaultEntropyWindow;
  unsigned trials = 50;
};

unsigned env_cap() {
  if (const char* s = std::getenv("TDLC_ITERATION_CAP")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return tdlc::kDefaultIterationCap;
}

json load_input(const CommonOpts& o) {
  json in = json::object();
  if (!o.input_path.empty()) {
    std::ifstream f(o.input_path);
    if (!f) throw tdlc::input_error("cannot open input file " + o.input_path);
    try {
      in = json::parse(f);
    } catch (const std::exception& e) {
      throw tdlc::input_error(std::string("malformed JSON input: ") + e.what());
    }
  }
  if (o.p != 0) in["p"] = o.p;
  if (!o.matrix_inline.empty()) {
    try {
      in["matrix"] = json::parse(o.matrix_inline);
    } catch (const std::exception& e) {
      throw tdlc::input_error(std::string("malformed --matrix JSON: ") + e.what());
    }
  }
  if (!o.lattice_inline.empty()) {
    try {
      in["lattice"] = json::parse(o.lattice_inline);
    } catch (const std::exception& e) {
      throw tdlc::input_error(std::string("malformed --lattice JSON: ") + e.what());
    }
  }
  return in;
}

long need_p(const json& in) {
  if (!in.contains("p")) throw tdlc::input_error("missing prime: pass --p or \"p\" in the input");
  long p = in["p"].get<long>();
  tdlc::require_prime(p);
  return p;
}

tdlc::QMat need_matrix(const json& in) {
  if (!in.contains("matrix"))
    throw tdlc::input_error("missing matrix: pass --matrix or \"matrix\" in the input");
  tdlc::QMat m = tdlc::matrix_from_json(in["matrix"]);
  if (!m.is_square()) throw tdlc::input_error("matrix must be square");
  return m;
}

json envelope(const std::string& command, const CommonOpts& o, const json& in) {
  json j;
  j["command"] = command;
  j["seed"] = o.seed;
  json caps;
  caps["iteration_cap"] = o.cap;
  caps["window"] = o.window;
  caps["trials"] = o.trials;
  j["caps"] = std::move(caps);
  j["input_hash"] = tdlc::input_hash(in);
  return j;
}

void text_footer(const json& report) {
  if (report.contains("input_hash"))
    std::cout << "  (seed " << report["seed"] << ", cap "
              << report["caps"]["iteration_cap"] << ", window "
              << report["caps"]["window"] << ", input "
              << report["input_hash"].get<std::string>() << ")\n";
}

void emit(const CommonOpts& o, json report) {
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << tdlc::render_text(report);
  text_footer(report);
}

int run_scale(const CommonOpts& o) {
  json in = load_input(o);
  long p = need_p(in);
  tdlc::QMat m = need_matrix(in);
  tdlc::ScaleReport r = tdlc::scale(m, p, o.window, o.cap);
  json rep = envelope("scale", o, in);
  rep.update(tdlc::scale_report_json(r));
  emit(o, std::move(rep));
  return 0;
}

int run_entropy(const CommonOpts& o) {
  json in = load_input(o);
  long p = need_p(in);
  tdlc::QMat m = need_matrix(in);
  tdlc::Lattice l = in.contains("lattice")
                        ? tdlc::lattice_from_json(in["lattice"])
                        : tdlc::Lattice::standard(p, m.rows());
  tdlc::EntropyResult e = tdlc::entropy_exponent(m, l, o.window, o.cap);
  json rep = envelope("entropy", o, in);
  rep["p"] = p;
  rep["n"] = m.rows();
  rep["entropy_exponent"] = tdlc::pexp_json(e.increment);
  rep["stabilized_at"] = e.stabilization_n;
  rep["increments"] = e.increments;
  if (o.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "entropy h_top(phi, L) = " << e.increment.str() << "*log " << p
              << "   (stabilized at n = " << e.stabilization_n << ")\n";
    text_footer(rep);
  }
  return 0;
}

int run_tidy(const CommonOpts& o) {
  json in = load_input(o);
  long p = need_p(in);
  tdlc::QMat m = need_matrix(in);
  tdlc::Lattice l = in.contains("lattice")
                        ? tdlc::lattice_from_json(in["lattice"])
                        : tdlc::Lattice::standard(p, m.rows());
  tdlc::TidyTrace t = tdlc::tidy_iterate(m, l, o.cap);
  json rep = envelope("tidy", o, in);
  rep["p"] = p;
  rep["n"] = m.rows();
  rep.update(tdlc::tidy_trace_json(t));
  json lattices = json::array();
  for (const auto& s : t.steps) lattices.push_back(tdlc::lattice_json(s.lattice));
  rep["step_lattices"] = std::move(lattices);
  if (o.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "tidy iteration, p = " << p << ":";
    for (const auto& s : t.steps)
      std::cout << " n=" << s.n << ":" << p << "^" << s.s_exponent.str();
    std::cout << "\n  terminal n = " << t.terminal_n << ", s(phi) = " << p
              << "^" << t.terminal_exponent.str() << "\n";
    text_footer(rep);
  }
  return 0;
}

int run_bridge(const CommonOpts& o) {
  json in = load_input(o);
  long p = need_p(in);
  tdlc::QMat m = need_matrix(in);
  json rep = envelope("bridge", o, in);
  if (in.contains("lattice")) {
    tdlc::BridgeReport r =
        tdlc::check_bridge(m, tdlc::lattice_from_json(in["lattice"]), o.cap);
    rep["bridge"] = tdlc::bridge_report_json(r);
  } else {
    std::mt19937_64 rng(o.seed);
    json arr = json::array();
    for (unsigned t = 0; t < o.trials; ++t) {
      tdlc::BridgeReport r =
          tdlc::check_bridge(m, tdlc::random_lattice(rng, m.rows(), p), o.cap);
      arr.push_back(tdlc::bridge_report_json(r));
    }
    rep["trials"] = o.trials;
    rep["bridge"] = std::move(arr);
  }
  if (o.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "duality bridge: all identities hold\n";
    text_footer(rep);
  }
  return 0;
}

int run_shift_gallery(const CommonOpts& o, const std::string& out_path) {
  json rep;
  if (!o.input_path.empty()) {
    json in = load_input(o);
    if (!in.contains("system"))
      throw tdlc::input_error("shift input needs {\"system\": {...}, \"cylinders\": [...]}");
    tdlc::ShiftSystem sys = tdlc::system_from_json(in["system"]);
    std::vector<tdlc::Cylinder> extra;
    if (in.contains("cylinders"))
      for (const json& c : in["cylinders"])
        extra.push_back(tdlc::cylinder_from_json(c, sys.height));
    rep = tdlc::analyze_system(sys, extra);
  } else {
    rep = tdlc::shift_gallery();
  }
  std::string dump = rep.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw tdlc::input_error("cannot write " + out_path);
    f << dump;
  }
  if (o.format == "json")
    std::cout << dump;
  else
    std::cout << tdlc::render_text(rep);
  return 0;
}

int run_props(const CommonOpts& o, std::vector<long> primes,
              std::vector<std::size_t> dims) {
  if (primes.empty()) primes = {2, 3, 5};
  if (dims.empty()) dims = {1, 2, 3};
  for (long p : primes) tdlc::require_prime(p);
  auto suites = tdlc::run_all_suites(o.seed, o.trials, primes, dims);
  json rep = envelope("props", o, json::object());
  rep.update(tdlc::props_json(suites));
  if (o.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << tdlc::props_text(suites) << "seed " << o.seed << ", trials "
              << o.trials << "\n";
  unsigned failures = 0;
  for (const auto& s : suites) failures += s.failures;
  return failures ? 2 : 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_matrix = true) {
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", o.seed, "seed for randomized parts");
  cmd->add_option("--cap", o.cap, "iteration cap");
  cmd->add_option("--window", o.window, "entropy stabilization window");
  cmd->add_option("--input", o.input_path, "JSON input file");
  if (with_matrix) {
    cmd->add_option("--p", o.p, "context prime");
    cmd->add_option("--matrix", o.matrix_inline,
                    "matrix as JSON rows of rational strings");
    cmd->add_option("--lattice", o.lattice_inline, "lattice as JSON {p, basis}");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact scale and entropy computations for automorphisms of Q_p^n and "
      "shift systems"};
  app.require_subcommand(1);

  CommonOpts scale_o, entropy_o, tidy_o, bridge_o, gallery_o, props_o;
  scale_o.cap = entropy_o.cap = tidy_o.cap = bridge_o.cap = env_cap();

  auto* c_scale = app.add_subcommand("scale", "scale + entropy report for a matrix");
  add_common(c_scale, scale_o);
  auto* c_entropy = app.add_subcommand("entropy", "entropy increments for a matrix and lattice");
  add_common(c_entropy, entropy_o);
  auto* c_tidy = app.add_subcommand("tidy", "tidying iteration trace");
  add_common(c_tidy, tidy_o);
  auto* c_bridge = app.add_subcommand("bridge", "duality bridge identities");
  bridge_o.trials = 20;
  add_common(c_bridge, bridge_o);
  c_bridge->add_option("--trials", bridge_o.trials, "random lattices to test");

  std::string gallery_out;
  auto* c_gallery = app.add_subcommand(
      "shift-gallery", "worked shift systems (or analyze a custom one)");
  add_common(c_gallery, gallery_o, false);
  c_gallery->add_option("--out", gallery_out, "also write the JSON to a file");

  std::vector<long> primes;
  std::vector<std::size_t> dims;
  auto* c_props = app.add_subcommand("props", "randomized verification suites");
  add_common(c_props, props_o, false);
  c_props->add_option("--trials", props_o.trials, "trials per suite");
  c_props->add_option("--primes", primes, "primes to sample");
  c_props->add_option("--dims", dims, "dimensions to sample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_scale->parsed()) return run_scale(scale_o);
    if (c_entropy->parsed()) return run_entropy(entropy_o);
    if (c_tidy->parsed()) return run_tidy(tidy_o);
    if (c_bridge->parsed()) return run_bridge(bridge_o);
    if (c_gallery->parsed()) return run_shift_gallery(gallery_o, gallery_out);
    if (c_props->parsed()) return run_props(props_o, primes, dims);
  } catch (const tdlc::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const tdlc::iteration_limit_error& e) {
    std::cerr << "iteration limit: " << e.what() << "\n  partial:";
    for (long long v : e.partial) std::cerr << " " << v;
    std::cerr << "\n";
    return 2;
  } catch (const tdlc::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const tdlc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
