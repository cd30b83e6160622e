#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "commands.hpp"
#include "lgc/error.hpp"

namespace lgc::cli {
namespace {

using nlohmann::json;

// Numbers are compared exactly unless a report records a looser bound.
constexpr double kFloatTolerance = 0.0;

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kRetryExhausted:
      return kExitBudget;
    case ErrorCode::kConvergenceFailure:
      return kExitFailure;
    default:
      return kExitValidation;
  }
}

json ConfigOf(const CLI::App& sub) {
  json config = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || opt->get_group() == kOutputsGroup) continue;
    if (opt->get_expected_min() == 0) {
      config[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& values = opt->results();
      config[name] = values.size() == 1 ? json(values.front()) : json(values);
    } else {
      config[name] = opt->get_default_str();
    }
  }
  return config;
}

json InputsOf(const CLI::App& sub) {
  json inputs = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_group() != kInputsGroup || opt->count() == 0) continue;
    const std::string path = opt->as<std::string>();
    inputs[opt->get_single_name()] = {{"path", path}, {"fnv1a64", FileDigest(path)}};
  }
  return inputs;
}

std::vector<std::string> ArgsFromConfig(const std::string& command, const json& config) {
  std::vector<std::string> args = {command};
  for (const auto& [name, value] : config.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + name);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        args.push_back("--" + name);
        args.push_back(v.get<std::string>());
      }
    } else if (value.is_string()) {
      if (value.get<std::string>().empty()) continue;
      args.push_back("--" + name);
      args.push_back(value.get<std::string>());
    } else {
      throw Error(ErrorCode::kParse, "config entry '" + name + "' is not a string or flag");
    }
  }
  return args;
}

bool SameJson(const json& a, const json& b, double tol) {
  if (a.is_number() && b.is_number() && (a.is_number_float() || b.is_number_float())) {
    const double x = a.get<double>();
    const double y = b.get<double>();
    return x == y || std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
  }
  if (a.type() != b.type()) return false;
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (const auto& [key, value] : a.items()) {
      if (!b.contains(key) || !SameJson(value, b.at(key), tol)) return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!SameJson(a[i], b[i], tol)) return false;
    }
    return true;
  }
  return a == b;
}

void Emit(const json& report, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << report.dump(2) << '\n';
}

json Replay(const std::string& path, std::ostream& err, int& exit_code) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  json report;
  try {
    report = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
  if (!report.is_object() || report.value("tool", "") != kToolName || !report.contains("config") ||
      !report.contains("command") || !report.contains("result")) {
    throw Error(ErrorCode::kParse, path + " is not a report from this tool");
  }
  const std::string command = report.at("command").get<std::string>();
  if (command == "replay") throw Error(ErrorCode::kInvalidArgument, "cannot replay a replay report");
  const double tol = report.value("float_tolerance", kFloatTolerance);

  std::ostringstream rerun_out;
  std::ostringstream rerun_err;
  const int rerun_code =
      RunCommand(ArgsFromConfig(command, report.at("config")), rerun_out, rerun_err);

  json verdict = {{"report", path},
                  {"command", command},
                  {"recorded_version", report.value("version", "")},
                  {"float_tolerance", tol}};
  if (rerun_code != kExitOk) {
    verdict["verdict"] = "mismatch";
    verdict["rerun_exit"] = rerun_code;
    verdict["rerun_error"] = rerun_err.str();
    exit_code = kExitMismatch;
    return verdict;
  }
  const json rerun = json::parse(rerun_out.str());
  const json expected = {{"inputs", report.value("inputs", json::object())},
                         {"result", report.at("result")}};
  const json actual = {{"inputs", rerun.value("inputs", json::object())},
                       {"result", rerun.at("result")}};
  if (SameJson(expected, actual, tol)) {
    verdict["verdict"] = "identical";
  } else {
    verdict["verdict"] = "mismatch";
    verdict["diff"] = json::diff(expected, actual);
    exit_code = kExitMismatch;
    err << "replay mismatch for " << path << '\n';
  }
  return verdict;
}

}  // namespace

std::string FileDigest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[1 << 14];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << hash;
  return hex.str();
}

int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local and local-global statistics of bounded-degree graphs", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::map<std::string, Handler> handlers = RegisterCommands(app);

  std::string report_path;
  auto* replay = app.add_subcommand("replay", "Re-run a report and compare its result");
  replay->add_option("--report", report_path, "Report file")->required()->check(CLI::ExistingFile);
  std::string replay_out;
  replay->add_option("--out", replay_out, "Verdict path (default stdout)")->group(kOutputsGroup);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (command == "replay") {
      int exit_code = kExitOk;
      json verdict = Replay(report_path, err, exit_code);
      json report = {{"tool", kToolName}, {"version", kVersion}, {"command", "replay"},
                     {"result", std::move(verdict)}};
      Emit(report, replay_out, out);
      return exit_code;
    }
    Context ctx;
    json config = ConfigOf(*sub);
    json inputs = InputsOf(*sub);
    const auto start = std::chrono::steady_clock::now();
    json result = handlers.at(command)(ctx);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    json report = {{"tool", kToolName},         {"version", kVersion},
                   {"command", command},        {"config", std::move(config)},
                   {"inputs", std::move(inputs)}, {"result", std::move(result)},
                   {"float_tolerance", kFloatTolerance}};
    if (!ctx.artifacts.empty()) report["artifacts"] = std::move(ctx.artifacts);
    report["timing"] = {{"elapsed_seconds", elapsed.count()}};
    const CLI::Option* out_option = sub->get_option("--out");
    Emit(report, out_option->count() > 0 ? out_option->as<std::string>() : "", out);
    return kExitOk;
  } catch (const Error& e) {
    err << json{{"error", std::string(ErrorCodeName(e.code()))}, {"message", e.what()}}.dump()
        << '\n';
    return ExitFor(e.code());
  } catch (const std::exception& e) {
    err << json{{"error", "Failure"}, {"message", e.what()}}.dump() << '\n';
    return kExitFailure;
  }
}

}  // namespace lgc::cli
