#include "l3kit.h"

#include "commands.hpp"

#include <cstring>
#include <new>

using namespace l3kit;

struct l3k_manifest {
    Manifest m;
    mutable std::string json_cache;
};

struct l3k_result {
    int exit_code = 0;
    std::string json;
};

namespace {

void put_error(char* errbuf, unsigned long errbuf_len, const char* msg) {
    if (!errbuf || errbuf_len == 0) return;
    std::strncpy(errbuf, msg, errbuf_len - 1);
    errbuf[errbuf_len - 1] = '\0';
}

l3k_status classify(const std::exception& e) {
    if (dynamic_cast<const parse_error*>(&e)) return L3K_ERR_PARSE;
    if (dynamic_cast<const manifest_error*>(&e)) {
        const std::string what = e.what();
        if (what.find("missing object") != std::string::npos) return L3K_ERR_NOT_FOUND;
        if (what.find("unknown command") != std::string::npos) return L3K_ERR_ARGS;
        return L3K_ERR_PARSE;
    }
    if (dynamic_cast<const precondition_error*>(&e)) return L3K_ERR_PRECONDITION;
    if (dynamic_cast<const dim_error*>(&e)) return L3K_ERR_ARGS;
    return L3K_ERR_INTERNAL;
}

} // namespace

extern "C" {

const char* l3k_version(void) { return "1.0.0"; }

l3k_status l3k_manifest_parse(const char* json_text, l3k_manifest** out, char* errbuf, unsigned long errbuf_len) {
    if (!json_text || !out) {
        put_error(errbuf, errbuf_len, "null argument");
        return L3K_ERR_ARGS;
    }
    *out = nullptr;
    try {
        auto* h = new l3k_manifest{parse_manifest(json_text), {}};
        *out = h;
        return L3K_OK;
    } catch (const std::exception& e) {
        put_error(errbuf, errbuf_len, e.what());
        return classify(e);
    } catch (...) {
        put_error(errbuf, errbuf_len, "unknown error");
        return L3K_ERR_INTERNAL;
    }
}

l3k_status l3k_manifest_load(const char* path, l3k_manifest** out, char* errbuf, unsigned long errbuf_len) {
    if (!path || !out) {
        put_error(errbuf, errbuf_len, "null argument");
        return L3K_ERR_ARGS;
    }
    *out = nullptr;
    try {
        auto* h = new l3k_manifest{load_manifest(path), {}};
        *out = h;
        return L3K_OK;
    } catch (const std::exception& e) {
        put_error(errbuf, errbuf_len, e.what());
        return classify(e);
    } catch (...) {
        put_error(errbuf, errbuf_len, "unknown error");
        return L3K_ERR_INTERNAL;
    }
}

void l3k_manifest_free(l3k_manifest* m) { delete m; }

const char* l3k_manifest_json(const l3k_manifest* m) {
    if (!m) return nullptr;
    if (m->json_cache.empty()) m->json_cache = save_manifest(m->m);
    return m->json_cache.c_str();
}

l3k_status l3k_run(const l3k_manifest* m, const char* command, const char* options_json, l3k_result** out,
                   char* errbuf, unsigned long errbuf_len) {
    if (!m || !command || !out) {
        put_error(errbuf, errbuf_len, "null argument");
        return L3K_ERR_ARGS;
    }
    *out = nullptr;
    try {
        CommandOptions opts;
        if (options_json && *options_json) {
            nlohmann::json j = nlohmann::json::parse(options_json);
            if (!j.is_object()) throw manifest_error("options: expected a JSON object");
            if (j.contains("objects")) {
                for (const auto& name : j["objects"]) opts.objects.push_back(name.get<std::string>());
            }
            if (j.contains("degree")) opts.degree = j["degree"].get<int>();
            if (j.contains("lambda")) opts.lambda = j["lambda"].get<std::string>();
            if (j.contains("strict_ns")) opts.strict_ns = j["strict_ns"].get<std::string>();
            if (j.contains("out")) opts.out_name = j["out"].get<std::string>();
        }
        CommandOutcome outcome = run_command(m->m, command, opts);
        auto* r = new l3k_result{outcome.exit_code, outcome.body.dump(2) + "\n"};
        *out = r;
        return outcome.exit_code == 0 ? L3K_OK : L3K_CHECK_FAILED;
    } catch (const nlohmann::json::exception& e) {
        put_error(errbuf, errbuf_len, e.what());
        return L3K_ERR_PARSE;
    } catch (const std::exception& e) {
        put_error(errbuf, errbuf_len, e.what());
        return classify(e);
    } catch (...) {
        put_error(errbuf, errbuf_len, "unknown error");
        return L3K_ERR_INTERNAL;
    }
}

int l3k_result_ok(const l3k_result* r) { return r && r->exit_code == 0 ? 1 : 0; }

const char* l3k_result_json(const l3k_result* r) { return r ? r->json.c_str() : nullptr; }

void l3k_result_free(l3k_result* r) { delete r; }

unsigned long l3k_command_count(void) { return command_names().size(); }

const char* l3k_command_name(unsigned long i) {
    const auto& names = command_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

} // extern "C"
