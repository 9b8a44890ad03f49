#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncgauge/catalog/registry.hpp"

// Verification suites run by the command line. Cases run concurrently; the report lists
// them sorted by (suite, name), so its content never depends on scheduling.
namespace ncg {

enum class Suite { Hopf, Bundle, Connection, Gauge, Cocycle, Associated, Local, Braided, Bosonisation, All };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);

struct RunOptions {
    std::size_t max_degree = 1;  // highest form degree of the matter fields in the local suite
    bool timings = true;
    std::uint32_t seed = 20261018;
};

struct CaseResult {
    std::string suite;
    std::string name;
    Report report;
    double seconds = 0.0;

    Status status() const;
};

struct RunReport {
    std::string input;
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const;
    /// 0 when every check passed, 1 otherwise.
    int exit_code() const { return passed() ? 0 : 1; }
};

/// Suites that apply to the input without further data; `All` expands to these.
std::vector<Suite> applicable_suites(const Input& in);

/// Throws AxiomPrecheckError when the input lacks a structure the suite needs, or when the
/// Hopf axioms fail for a suite other than `hopf`.
RunReport run(const Input& in, Suite suite, const RunOptions& options = {});

/// One line per case; failing checks add their witness element and both sides.
std::string render_text(const RunReport& r, bool timings = true);
Json report_to_json(const RunReport& r, bool timings = true);
/// Inverse of report_to_json; throws ParseError.
RunReport report_from_json(const Json& j);

}  // namespace ncg
