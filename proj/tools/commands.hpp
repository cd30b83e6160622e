#pragma once

#include <functional>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

namespace lgc::cli {

// Options in the inputs group are files whose digests enter the report;
// options in the outputs group are left out of the replayable config.
inline constexpr const char* kInputsGroup = "Inputs";
inline constexpr const char* kOutputsGroup = "Outputs";

struct Context {
  nlohmann::json artifacts = nlohmann::json::object();
};

using Handler = std::function<nlohmann::json(Context&)>;

// Adds every experiment subcommand to `app`, keyed by name.
std::map<std::string, Handler> RegisterCommands(CLI::App& app);

}  // namespace lgc::cli
