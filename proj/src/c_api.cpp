#include "nadyn/nadyn.h"

#include "nadyn/runner.hpp"

#include <algorithm>

#include <new>
#include <string>

struct nadyn_config {
    nadyn::RunConfig cfg;
};

struct nadyn_result {
    nadyn::RunResult r;
};

namespace {

thread_local std::string last_error;

nadyn_status set_error(nadyn_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

}  // namespace

extern "C" {

const char* nadyn_version(void) { return "1.0.0"; }

int nadyn_subcommand_count(void) { return static_cast<int>(nadyn::subcommands().size()); }

const char* nadyn_subcommand_name(int index) {
    const auto& names = nadyn::subcommands();
    if (index < 0 || index >= static_cast<int>(names.size())) {
        set_error(NADYN_ERR_ARGUMENT, "subcommand index out of range");
        return nullptr;
    }
    return names[static_cast<std::size_t>(index)].c_str();
}

nadyn_config* nadyn_config_new(const char* subcommand) {
    if (!subcommand) {
        set_error(NADYN_ERR_ARGUMENT, "subcommand is null");
        return nullptr;
    }
    const auto& names = nadyn::subcommands();
    if (std::find(names.begin(), names.end(), subcommand) == names.end()) {
        set_error(NADYN_ERR_ARGUMENT, std::string("unknown subcommand ") + subcommand);
        return nullptr;
    }
    auto* c = new (std::nothrow) nadyn_config;
    if (!c) {
        set_error(NADYN_ERR_ARGUMENT, "out of memory");
        return nullptr;
    }
    c->cfg.subcommand = subcommand;
    return c;
}

void nadyn_config_free(nadyn_config* config) { delete config; }

nadyn_status nadyn_config_set_seed(nadyn_config* config, uint64_t seed) {
    if (!config) return set_error(NADYN_ERR_ARGUMENT, "config is null");
    config->cfg.seed = seed;
    return NADYN_OK;
}

nadyn_status nadyn_config_set_budget_bits(nadyn_config* config, uint64_t bits) {
    if (!config) return set_error(NADYN_ERR_ARGUMENT, "config is null");
    if (bits == 0) return set_error(NADYN_ERR_ARGUMENT, "budget must be positive");
    config->cfg.budget_bits = bits;
    return NADYN_OK;
}

nadyn_status nadyn_config_set_horizon(nadyn_config* config, uint64_t horizon) {
    if (!config) return set_error(NADYN_ERR_ARGUMENT, "config is null");
    if (horizon == 0) return set_error(NADYN_ERR_ARGUMENT, "horizon must be positive");
    config->cfg.horizon = horizon;
    return NADYN_OK;
}

nadyn_status nadyn_config_set_sample(nadyn_config* config, uint64_t sample) {
    if (!config) return set_error(NADYN_ERR_ARGUMENT, "config is null");
    if (sample == 0) return set_error(NADYN_ERR_ARGUMENT, "sample size must be positive");
    config->cfg.sample = sample;
    return NADYN_OK;
}

nadyn_status nadyn_run(const nadyn_config* config, const char* input, nadyn_result** result) {
    if (!config || !input || !result) return set_error(NADYN_ERR_ARGUMENT, "null argument");
    *result = nullptr;
    auto* r = new (std::nothrow) nadyn_result;
    if (!r) return set_error(NADYN_ERR_ARGUMENT, "out of memory");
    r->r = nadyn::run(config->cfg, input);
    *result = r;
    const auto s = static_cast<nadyn_status>(r->r.code);
    if (s != NADYN_OK) set_error(s, r->r.error + ": " + r->r.message);
    return s;
}

nadyn_status nadyn_result_status(const nadyn_result* result) {
    if (!result) return set_error(NADYN_ERR_ARGUMENT, "result is null");
    return static_cast<nadyn_status>(result->r.code);
}

const char* nadyn_result_output(const nadyn_result* result) { return result ? result->r.output.c_str() : ""; }

const char* nadyn_result_error_name(const nadyn_result* result) { return result ? result->r.error.c_str() : ""; }

const char* nadyn_result_error_message(const nadyn_result* result) {
    return result ? result->r.message.c_str() : "";
}

void nadyn_result_free(nadyn_result* result) { delete result; }

const char* nadyn_last_error(void) { return last_error.c_str(); }

}  // extern "C"
