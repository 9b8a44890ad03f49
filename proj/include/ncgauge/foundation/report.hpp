#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgauge/foundation/linalg.hpp"

namespace ncg {

enum class Status { Pass, Fail, Undecided };
const char* to_string(Status s);

struct Witness {
    std::string element;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    Status status = Status::Pass;
    std::optional<Witness> witness;
    std::string detail;
    double time_ms = 0.0;

    bool passed() const { return status == Status::Pass; }
};

CheckResult pass(std::string name, std::string detail = {});
CheckResult fail(std::string name, Witness w, std::string detail = {});
CheckResult fail(std::string name, std::string detail);
CheckResult undecided(std::string name, std::string detail);
CheckResult check(std::string name, bool ok, std::string detail = {});

/// Compare two maps column by column; the first differing source basis vector is the witness.
CheckResult compare_maps(std::string name, const Matrix& lhs, const Matrix& rhs, const StructuredSpace& source,
                         const StructuredSpace& target);
/// Compare two maps on the given source vectors only (e.g. a basis of a subspace).
CheckResult compare_on(std::string name, const Matrix& lhs, const Matrix& rhs, const std::vector<Vec>& vectors,
                       const StructuredSpace& source, const StructuredSpace& target);
CheckResult compare_vectors(std::string name, const std::string& element, const Vec& lhs, const Vec& rhs,
                            const StructuredSpace& target);

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void append(const Report& other, const std::string& prefix = {});
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    const CheckResult* first_failure() const;
    std::string summary() const;
};

/// Throws InvariantFailure carrying the first failed check and its witness.
void require_passed(const Report& r, const std::string& context);

}  // namespace ncg
