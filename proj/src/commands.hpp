#pragma once

#include "manifest.hpp"

#include <optional>

namespace l3kit {

struct CommandOptions {
    std::vector<std::string> objects;
    std::optional<int> degree;
    std::optional<std::string> lambda;
    std::string strict_ns = "corrected";
    std::string out_name = "result";
};

// exit_code: 0 ok, 1 check failed, 2 usage/parse/precondition error.
struct CommandOutcome {
    int exit_code = 0;
    nlohmann::ordered_json body;
};

const std::vector<std::string>& command_names();

CommandOutcome run_command(const Manifest& m, const std::string& command, const CommandOptions& opts);

} // namespace l3kit
