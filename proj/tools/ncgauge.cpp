// Command-line front end: `ncgauge catalog` and `ncgauge run <input> --suite <name>`.
#include <iostream>

#include "CLI11.hpp"
#include "ncgauge/catalog/suites.hpp"
#include "ncgauge/foundation/errors.hpp"

namespace {

constexpr int kExitInputError = 2;

// Pads to a column width counted in code points, so names such as "crossprod-mu:μ" line up.
std::string pad(const std::string& s, std::size_t width) {
    std::size_t points = 0;
    for (unsigned char c : s) points += (c & 0xC0) != 0x80;
    return s + std::string(points < width ? width - points : 1, ' ');
}

int print_catalog(bool json) {
    const std::vector<ncg::CatalogEntry> entries = ncg::catalog();
    if (json) {
        ncg::Json out = ncg::Json::array();
        for (const auto& e : entries)
            out.push_back({{"name", e.name}, {"instance", e.instance}, {"description", e.description}, {"flags", e.flags}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : entries) {
        std::string flags;
        for (const auto& f : e.flags) flags += (flags.empty() ? "" : ",") + f;
        std::cout << pad(e.name, 20) << pad(flags, 40) << e.description;
        if (e.instance != e.name) std::cout << " [flags from " << e.instance << "]";
        std::cout << "\n";
    }
    return 0;
}

int run_suite(const std::string& input, const std::string& suite_name, bool json, std::size_t max_degree,
              bool timings) {
    const std::optional<ncg::Suite> suite = ncg::parse_suite(suite_name);
    if (!suite) {
        std::cerr << "error: unknown suite '" << suite_name << "'\n";
        return kExitInputError;
    }
    try {
        const ncg::Input in = ncg::load_input(input);
        ncg::RunOptions options;
        options.max_degree = max_degree;
        options.timings = timings;
        const ncg::RunReport report = ncg::run(in, *suite, options);
        if (json)
            std::cout << ncg::report_to_json(report, timings).dump(2) << "\n";
        else
            std::cout << ncg::render_text(report, timings);
        return report.exit_code();
    } catch (const ncg::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const ncg::AxiomPrecheckError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const ncg::InvariantFailure& e) {
        // Raised while constructing a built-in or ingested structure.
        std::cerr << "input error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Hopf-Galois bundles, connections and gauge theory"};
    app.require_subcommand(1);

    bool catalog_json = false;
    CLI::App* cat = app.add_subcommand("catalog", "List the built-in inputs with their flags");
    cat->add_flag("--json", catalog_json, "Emit JSON");

    std::string input, suite = "all";
    bool json = false, no_timings = false;
    std::size_t max_degree = 1;
    CLI::App* run = app.add_subcommand("run", "Run a verification suite on a catalog name or JSON file");
    run->add_option("input", input, "Catalog name or path to a JSON file")->required();
    run->add_option("--suite", suite,
                    "hopf, bundle, connection, gauge, cocycle, associated, local, braided, bosonisation, all")
        ->capture_default_str();
    run->add_flag("--json", json, "Emit the report as JSON");
    run->add_option("--max-degree", max_degree, "Highest form degree for matter fields in the local suite")
        ->capture_default_str()
        ->check(CLI::Range(0, 4));
    run->add_flag("--no-timings", no_timings, "Omit timings so reports are byte-identical across runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }
    if (*cat) return print_catalog(catalog_json);
    return run_suite(input, suite, json, max_degree, !no_timings);
}
