#include "cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "upst/errors.hpp"
#include "upst/io.hpp"
#include "upst/walk.hpp"

namespace upst::cli {

namespace {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

// Writes to the named file, or to `fallback` when the name is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

int scan_steps() {
  const char* env = std::getenv("UPST_SCAN_STEPS");
  if (env == nullptr || *env == '\0') return tol::kDefaultScanSteps;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 10 || v > 100000000)
    throw InputError(std::string("UPST_SCAN_STEPS must be an integer in [10, 1e8], got '") + env + "'");
  return static_cast<int>(v);
}

GraphBundle load(const std::string& path, const std::string& shift) {
  GraphBundle bundle = bundle_from_json(parse_json(read_text(path), "'" + path + "'"));
  if (!shift.empty()) bundle = shifted(bundle, parse_rational(shift));
  return bundle;
}

// Matrix-only inputs carry no diagonalizer; fall back to a dense solver.
const EigenSystem& eigensystem(GraphBundle& bundle) {
  if (!bundle.eigensystem) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(bundle.graph.adjacency());
    if (solver.info() != Eigen::Success) throw SpectrumError("dense eigensolver did not converge");
    const Eigen::VectorXd values = solver.eigenvalues();
    bundle.eigensystem = EigenSystem::make(
        solver.eigenvectors(), std::vector<double>(values.data(), values.data() + values.size()));
  }
  return *bundle.eigensystem;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

int cmd_generate(const std::string& desc, const std::string& desc_file, const std::string& shift,
                 const std::string& out_path, std::ostream& out) {
  if (desc.empty() == desc_file.empty())
    throw InputError("generate needs exactly one of --desc or --desc-file");
  const Json j = desc.empty() ? parse_json(read_text(desc_file), "'" + desc_file + "'")
                              : parse_json(desc, "descriptor");
  GraphBundle bundle = build(descriptor_from_json(j));
  if (!shift.empty()) bundle = shifted(bundle, parse_rational(shift));
  emit(out_path, to_json(bundle).dump(2) + "\n", out);
  return kPass;
}

int cmd_verify(const std::string& in, std::vector<std::string> checks, const std::string& format,
               const std::string& shift, const std::string& out_path, std::ostream& out) {
  if (checks.empty()) throw InputError("verify needs at least one check");
  GraphBundle bundle = load(in, shift);
  const EigenSystem& es = eigensystem(bundle);

  auto wants = [&](const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  std::optional<TransferReport> report;
  if (wants("upst") || wants("spacing")) {
    VerifyOptions options;
    options.scan_steps = scan_steps();
    report = verify_upst(bundle.graph, es, options);
  }
  std::optional<SpacingResult> spacing;

  std::vector<CheckResult> results;
  for (const auto& name : checks) {
    CheckResult r{name, false, {}};
    if (name == "upst") {
      r.pass = report->upst;
      r.detail = report->upst ? "" : std::string(to_string(report->reason)) + ": " + report->detail;
    } else if (name == "spacing") {
      if (!report->upst) {
        r.detail = "needs a UPST graph (" + std::string(to_string(report->reason)) + ")";
      } else {
        spacing = spacing_test(*report);
        r.pass = spacing->circulant;
        r.detail = spacing->circulant ? "equal consecutive transfer times"
                                      : "non-circulant timing: consecutive transfer times differ by up to " +
                                            fmt(spacing->max_deviation);
        if (!spacing->detail.empty()) r.detail = spacing->detail;
      }
    } else if (name == "dense") {
      if (const auto& spec = bundle.graph.circulant()) {
        const DensenessResult d = denseness_check(*spec);
        r.pass = d.dense;
        if (!d.dense) {
          r.detail = "a_j = 0 for j =";
          for (int j : d.zero_indices) r.detail += " " + std::to_string(j);
        }
      } else {
        const auto& a = bundle.graph.adjacency();
        r.pass = true;
        for (Eigen::Index j = 0; j < a.rows(); ++j)
          for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (j != k && std::abs(a(j, k)) <= tol::kHermitian) r.pass = false;
        r.detail = r.pass ? "no exact spec; numeric off-diagonal test"
                          : "zero off-diagonal entry (numeric test, no exact spec)";
      }
    } else if (name == "typeii") {
      r.pass = is_type_ii(es.X);
      if (!r.pass) r.detail = "diagonalizer not flat";
    } else if (name == "connectivity") {
      r.pass = is_connected(bundle.graph);
      if (!r.pass) r.detail = "graph is disconnected";
    } else {
      throw InputError("unknown check '" + name + "'");
    }
    results.push_back(std::move(r));
  }

  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  std::ostringstream text;
  if (format == "json") {
    Json j;
    j["pass"] = all_pass;
    j["checks"] = Json::object();
    for (const auto& r : results) j["checks"][r.name] = {{"pass", r.pass}, {"detail", r.detail}};
    if (report) j["report"] = to_json(*report);
    if (spacing)
      j["spacing"] = {{"circulant", spacing->circulant},
                      {"order", spacing->order},
                      {"step_times", spacing->step_times},
                      {"row_gaps", spacing->row_gaps},
                      {"max_deviation", spacing->max_deviation}};
    text << j.dump(2) << "\n";
  } else {
    text << std::left << std::setw(14) << "check" << std::setw(6) << "pass" << "detail\n";
    for (const auto& r : results)
      text << std::setw(14) << r.name << std::setw(6) << (r.pass ? "yes" : "no") << r.detail << "\n";
    if (report && report->upst) {
      text << "\nanalytic t_l (transfer 0 -> l):\n";
      for (int l = 0; l < report->n; ++l) text << "  t_" << l << " = " << fmt(report->analytic_times[l]) << "\n";
    }
    if (spacing) {
      text << "\nrelabeled t_{k,k+1}:";
      for (double t : spacing->step_times) text << " " << fmt(t);
      text << "\n";
    }
  }
  emit(out_path, text.str(), out);
  return all_pass ? kPass : kCheckFailed;
}

int cmd_times(const std::string& in, const std::string& shift, const std::string& out_path,
              const std::string& analytic_path, std::ostream& out, std::ostream& err) {
  GraphBundle bundle = load(in, shift);
  const EigenSystem& es = eigensystem(bundle);
  VerifyOptions options;
  options.scan_steps = scan_steps();
  const TransferReport report = verify_upst(bundle.graph, es, options);
  if (!report.upst) {
    err << "refused: graph is not certified UPST (" << to_string(report.reason) << ": "
        << report.detail << ")\n";
    return kCheckFailed;
  }
  std::ostringstream csv;
  csv << "u,v,t_uv,phase_re,phase_im\n";
  for (int u = 0; u < report.n; ++u)
    for (int v = 0; v < report.n; ++v) {
      const auto p = report.phase(u, v);
      csv << u << "," << v << "," << fmt(*report.min_time(u, v)) << "," << fmt(p.real()) << ","
          << fmt(p.imag()) << "\n";
    }
  emit(out_path, csv.str(), out);
  if (!analytic_path.empty()) {
    std::ostringstream a;
    a << "l,t_l\n";
    for (int l = 0; l < report.n; ++l) a << l << "," << fmt(report.analytic_times[l]) << "\n";
    emit(analytic_path, a.str(), out);
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal perfect state transfer: construct, certify and time graphs", "upst"};
  app.require_subcommand(1);

  std::string desc, desc_file, shift, out_path, in, format = "table", analytic_path;
  std::vector<std::string> checks;

  auto* generate = app.add_subcommand("generate", "build a graph file from a construction descriptor");
  generate->add_option("--desc", desc, "descriptor JSON text");
  generate->add_option("--desc-file", desc_file, "descriptor JSON file");
  generate->add_option("--shift", shift, "add this rational multiple of I (a_0 += shift)");
  generate->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run checks on a graph file or descriptor");
  verify->add_option("input", in, "graph file, descriptor file, or - for stdin")->required();
  verify->add_option("-c,--checks", checks, "upst,spacing,dense,typeii,connectivity")
      ->delimiter(',')
      ->check(CLI::IsMember({"upst", "spacing", "dense", "typeii", "connectivity"}))
      ->required();
  verify->add_option("-f,--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--shift", shift, "add this rational multiple of I");
  verify->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* times = app.add_subcommand("times", "CSV of minimum transfer times for a UPST graph");
  times->add_option("input", in, "graph file, descriptor file, or - for stdin")->required();
  times->add_option("--shift", shift, "add this rational multiple of I");
  times->add_option("-o,--out", out_path, "CSV output file (default stdout)");
  times->add_option("--analytic", analytic_path, "also write the analytic t_l as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*generate) return cmd_generate(desc, desc_file, shift, out_path, out);
    if (*verify) return cmd_verify(in, checks, format, shift, out_path, out);
    return cmd_times(in, shift, out_path, analytic_path, out, err);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace upst::cli
