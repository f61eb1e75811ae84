#include "nadyn/nadyn.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

bool read_all(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

const std::map<std::string, std::string> kAbout{
    {"good-reduction", "good reduction test and resultant valuation of a P1 map"},
    {"degseq", "degrees of iterates of a plane map (CSV)"},
    {"dyndeg", "dynamical degrees of a monomial map"},
    {"entropy-sample", "separated / spanning counts and entropy rate on a sample (CSV)"},
    {"eps-reduce", "partition of points into eps-reduction classes"},
    {"noetherian", "cover complexity and recurrence certificate on a finite spectral space"},
    {"keylemma", "volume and C(n) table for a product map (CSV)"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-archimedean dynamics toolkit"};
    app.require_subcommand(1);

    std::string input = "-", output = "-";
    std::uint64_t seed = 0, budget_bits = 4096, horizon = 0, sample = 0;
    for (int i = 0; i < nadyn_subcommand_count(); ++i) {
        const std::string sname = nadyn_subcommand_name(i);
        const auto about = kAbout.find(sname);
        auto* sub = app.add_subcommand(sname, about == kAbout.end() ? "" : about->second);
        sub->add_option("--input,-i", input, "JSON input file, - for stdin")->capture_default_str();
        sub->add_option("--output,-o", output, "output file, - for stdout")->capture_default_str();
        sub->add_option("--seed", seed, "seed for random sampling")->capture_default_str();
        sub->add_option("--budget-bits", budget_bits, "coefficient bit budget for symbolic work")
            ->capture_default_str();
        sub->add_option("--horizon", horizon, "override the input's horizon / nmax / N");
        sub->add_option("--sample", sample, "override the random sample size");
    }
    CLI11_PARSE(app, argc, argv);

    const std::string name = app.get_subcommands().front()->get_name();
    std::string text;
    if (!read_all(input, text)) {
        std::cerr << "error: IOError: cannot read " << input << "\n";
        return 2;
    }

    std::unique_ptr<nadyn_config, decltype(&nadyn_config_free)> cfg(nadyn_config_new(name.c_str()),
                                                                    nadyn_config_free);
    if (!cfg || nadyn_config_set_seed(cfg.get(), seed) != NADYN_OK ||
        nadyn_config_set_budget_bits(cfg.get(), budget_bits) != NADYN_OK ||
        (horizon && nadyn_config_set_horizon(cfg.get(), horizon) != NADYN_OK) ||
        (sample && nadyn_config_set_sample(cfg.get(), sample) != NADYN_OK)) {
        std::cerr << "error: " << nadyn_last_error() << "\n";
        return 2;
    }

    nadyn_result* raw = nullptr;
    const nadyn_status status = nadyn_run(cfg.get(), text.c_str(), &raw);
    std::unique_ptr<nadyn_result, decltype(&nadyn_result_free)> result(raw, nadyn_result_free);
    if (!result) {
        std::cerr << "error: " << nadyn_last_error() << "\n";
        return 2;
    }
    if (status != NADYN_OK) {
        std::cerr << "error: " << nadyn_result_error_name(result.get()) << ": "
                  << nadyn_result_error_message(result.get()) << "\n";
        return static_cast<int>(status);
    }

    const char* out = nadyn_result_output(result.get());
    if (output == "-") {
        std::fputs(out, stdout);
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!(f << out)) {
            std::cerr << "error: IOError: cannot write " << output << "\n";
            return 1;
        }
    }
    return 0;
}
