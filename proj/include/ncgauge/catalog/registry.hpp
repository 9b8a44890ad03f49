#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgauge/braided/braided.hpp"
#include "ncgauge/bundle/cocycle.hpp"
#include "ncgauge/catalog/json_io.hpp"

// Named inputs for the command line: built-in examples and JSON files.
namespace ncg {

/// Everything a suite may need. Only `name` and `hopf` are always present.
struct Input {
    std::string name;
    std::string description;
    HopfAlgebra hopf;
    std::optional<ComoduleAlgebra> bundle;  // total space over its structure group
    std::optional<Matrix> trivialisation;   // Φ known by construction
    std::optional<CocycleData> cocycle;
    std::optional<BraidedCategory> category;
    std::optional<BraidedGroup> braided;
    std::optional<Bosonisation> bosonisation;
    std::optional<int> line_order;  // set for braided lines and their bosonisations
};

struct CatalogEntry {
    std::string name;      // pattern, e.g. "kZn:n"
    std::string instance;  // concrete name the flags were computed on
    std::string description;
    std::vector<std::string> flags;
};

/// Built-ins with flags computed on the spot: hopf, dqt, braided, and for bundles one of
/// trivializable / nontrivializable / trivialisation-undecided / not-free / not-galois.
std::vector<CatalogEntry> catalog();

/// "kZ2", "kZn:n", "sweedler", "taft:n", "bosonisation:n", "braided-line:n",
/// "fnZ4-over-fnZ2", "crossprod-mu:μ" (μ rational), "crossprod-action", "m3-graded",
/// "fnZ2-sum-not-free". Throws ParseError for anything else.
Input resolve(const std::string& name);

/// JSON object with "kind" one of "hopf" (default), "bundle", "braided-group".
Input input_from_json(const Json& j, const std::string& source);

/// A catalog name, or a path to a JSON file when no built-in matches and the file exists.
Input load_input(const std::string& name_or_path);

}  // namespace ncg
