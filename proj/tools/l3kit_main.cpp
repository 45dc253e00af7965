// Command-line front end. Everything goes through the shared library's C
// API; this file only parses arguments, assembles the options JSON and
// prints results.

#include "l3kit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int status_to_exit(l3k_status s) {
    if (s == L3K_OK) return 0;
    if (s == L3K_CHECK_FAILED) return 1;
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for 3-Leibniz algebras and twisted Rota-Baxter operators"};
    app.set_version_flag("--version", std::string(l3k_version()));

    std::string command;
    std::string manifest_path;
    std::vector<std::string> objects;
    int degree = -1;
    std::string lambda;
    std::string out_path;
    std::string artifact_name = "result";
    std::string strict_ns = "corrected";
    bool list_commands = false;

    app.add_flag("--list-commands", list_commands, "print the available commands and exit");
    app.add_option("command", command, "command to run (see --list-commands)");
    app.add_option("--manifest", manifest_path, "manifest JSON file (optional for selftest)");
    app.add_option("--object", objects, "object name arguments, in the order the command expects");
    app.add_option("--degree", degree, "cochain degree for cohomology commands");
    app.add_option("--lambda", lambda, "weight for the weighted Rota-Baxter commands, e.g. \"2\" or \"1/3\"");
    app.add_option("--out", out_path, "write the result JSON to this file instead of stdout");
    app.add_option("--name", artifact_name, "name for emitted artifact objects (default \"result\")");
    app.add_option("--strict-ns", strict_ns, "NS fifth-axiom form: corrected (default) or printed")
        ->check(CLI::IsMember({"corrected", "printed"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (list_commands) {
        for (unsigned long i = 0; i < l3k_command_count(); ++i) std::cout << l3k_command_name(i) << "\n";
        return 0;
    }
    if (command.empty()) {
        std::cerr << "error: no command given (try --help or --list-commands)\n";
        return 2;
    }

    char errbuf[1024];
    l3k_manifest* manifest = nullptr;
    l3k_status st;
    if (manifest_path.empty()) {
        st = l3k_manifest_parse("{\"schema_version\":\"1\",\"objects\":{}}", &manifest, errbuf, sizeof errbuf);
    } else {
        st = l3k_manifest_load(manifest_path.c_str(), &manifest, errbuf, sizeof errbuf);
    }
    if (st != L3K_OK) {
        std::cerr << "error: " << errbuf << "\n";
        return 2;
    }

    nlohmann::json opts;
    opts["objects"] = objects;
    if (degree >= 0) opts["degree"] = degree;
    if (!lambda.empty()) opts["lambda"] = lambda;
    opts["strict_ns"] = strict_ns;
    opts["out"] = artifact_name;
    const std::string opts_text = opts.dump();

    l3k_result* result = nullptr;
    st = l3k_run(manifest, command.c_str(), opts_text.c_str(), &result, errbuf, sizeof errbuf);
    if (st != L3K_OK && st != L3K_CHECK_FAILED) {
        std::cerr << "error: " << errbuf << "\n";
        l3k_manifest_free(manifest);
        return 2;
    }

    const std::string body = l3k_result_json(result);
    if (command == "selftest") {
        // one pass/fail line per criterion, then the JSON only when requested
        auto j = nlohmann::json::parse(body);
        for (const auto& crit : j["criteria"]) std::cout << crit["text"].get<std::string>() << "\n";
        std::cout << (j["ok"].get<bool>() ? "selftest: ok" : "selftest: FAILED") << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << body;
        }
    } else if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            l3k_result_free(result);
            l3k_manifest_free(manifest);
            return 2;
        }
        f << body;
    } else {
        std::cout << body;
    }

    const int code = status_to_exit(st);
    l3k_result_free(result);
    l3k_manifest_free(manifest);
    return code;
}
