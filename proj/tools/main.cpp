#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharplab/diagram.hpp"
#include "sharplab/suite.hpp"

using namespace sharplab;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SHARPLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SHARPLAB_SEED", "not a 64-bit unsigned integer");
        }
    }
    return 0;
}

std::vector<std::string> known_checks() {
    std::vector<std::string> out;
    for (const char* c : {"composability", "transformability", "probabilities", "testability",
                          "sharpness", "certainty", "scalar_identity", "state_involution",
                          "effect_involution", "process_involution", "dagger_seq", "dagger_par",
                          "constraint_C1", "constraint_C2"}) {
        out.push_back(std::string("hermitian/") + c);
        out.push_back(std::string("transpose/") + c);
    }
    for (const char* c : {"hermitian/inner_product/symmetry", "hermitian/inner_product/linearity",
                          "hermitian/inner_product/positivity", "transpose/counterexample",
                          "mclm/testability", "tomography/local", "tomography/ancilla"})
        out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

int emit(const SuiteResult& res, const std::vector<std::string>& selection, bool json_out) {
    std::vector<CheckReport> chosen;
    for (const auto& r : res.reports) {
        if (!selection.empty() &&
            std::find(selection.begin(), selection.end(), r.check_id) == selection.end())
            continue;
        chosen.push_back(r);
    }
    if (json_out) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : chosen) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : chosen) std::cout << r.text_line() << "\n";
    }
    for (const auto& r : chosen)
        if (!r.as_expected()) return 1;
    return 0;
}

int run_verify(const SuiteConfig& cfg, const std::vector<std::string>& selection) {
    if (!selection.empty()) {
        auto known = known_checks();
        for (const auto& s : selection)
            if (std::find(known.begin(), known.end(), s) == known.end()) {
                std::cerr << "unknown check id: " << s << "\n";
                return 2;
            }
    }
    SuiteResult res = cfg.backend == Backend::Exact
        ? run_suite_typed<GaussianRational>(cfg)
        : run_suite_typed<std::complex<double>>(cfg);
    return emit(res, selection, cfg.json);
}

template <class S>
int run_eval(const std::string& path, const std::string& theory) {
    nlohmann::json j;
    {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << "\n";
            return 2;
        }
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        }
    }
    Diagram<S> d;
    try {
        d = diagram_from_json<S>(j);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    auto vr = d.validate();
    if (!vr.ok()) {
        std::cerr << vr.str();
        return 2;
    }
    if (theory == "DCLM") {
        for (auto& b : d.boxes) {
            for (auto& x : b.dims_in) x *= x;
            for (auto& x : b.dims_out) x *= x;
            if (b.payload) b.payload = double_map(*b.payload);
        }
    }
    LinearMap<S> result;
    try {
        result = eval_diagram(d);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (result.is_scalar())
        std::cout << ScalarTraits<S>::str(result.scalar_value()) << "\n";
    else
        std::cout << render(result) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharplab: verification suite for test structures on doubled linear maps"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::vector<std::size_t> dims;
    std::string backend = "exact", format = "text", theory = "CLM", eval_path;
    std::vector<std::string> selection;
    bool all = false;

    auto* verify = app.add_subcommand("verify", "run paper checks and compare verdicts");
    verify->add_option("--dim", dims, "wire dimensions (repeatable)");
    verify->add_option("--seed", cfg.seed, "probe RNG seed");
    verify->add_option("--samples", cfg.samples, "random probes per dimension");
    verify->add_option("--tolerance", cfg.tolerance, "float comparison tolerance");
    verify->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--check", selection, "run only the named checks");
    verify->add_flag("--all", all, "run every check");

    auto* eval = app.add_subcommand("eval", "evaluate a diagram file");
    eval->add_option("file", eval_path, "diagram JSON file")->required();
    eval->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
    eval->add_option("--theory", theory)->check(CLI::IsMember({"CLM", "DCLM"}));

    auto* list = app.add_subcommand("list", "list known check ids");

    try {
        cfg.seed = default_seed();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const auto& c : known_checks()) std::cout << c << "\n";
        return 0;
    }
    if (eval->parsed())
        return backend == "exact" ? run_eval<GaussianRational>(eval_path, theory)
                                  : run_eval<std::complex<double>>(eval_path, theory);

    for (auto d : dims)
        if (d < 1) {
            std::cerr << "dimension must be >= 1\n";
            return 2;
        }
    if (!dims.empty()) cfg.dims = dims;
    if (cfg.samples == 0 || cfg.tolerance <= 0) {
        std::cerr << "samples must be >= 1 and tolerance > 0\n";
        return 2;
    }
    cfg.backend = backend == "exact" ? Backend::Exact : Backend::Float;
    cfg.json = format == "json";
    (void)all;  // default is already the full suite
    return run_verify(cfg, selection);
}
