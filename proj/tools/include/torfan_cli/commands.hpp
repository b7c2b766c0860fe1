#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torfan/rational.hpp"

namespace torfan::cli {

struct CommandOptions {
  std::uint64_t seed = 0;
  bool t_symbolic = false;
  std::optional<BigInt> k;
  std::optional<BigRational> epsilon;
};

struct Report {
  std::string command;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;
};

const std::vector<std::string>& command_names();

// Module errors propagate as torfan::Error.
Report run_command(const std::string& command, std::string_view input, const CommandOptions& options = {});

enum class Format { text, json };

std::string render_report(const Report& report, Format format);

// Exit status for a failure kind: 2 for parse and validation errors, 1 for
// everything else.
int exit_status(const std::exception& error);

}  // namespace torfan::cli
