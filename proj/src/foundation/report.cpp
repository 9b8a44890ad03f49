#include "ncgauge/foundation/report.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Undecided: return "undecided";
    }
    return "unknown";
}

CheckResult pass(std::string name, std::string detail) {
    return CheckResult{std::move(name), Status::Pass, std::nullopt, std::move(detail), 0.0};
}

CheckResult fail(std::string name, Witness w, std::string detail) {
    return CheckResult{std::move(name), Status::Fail, std::move(w), std::move(detail), 0.0};
}

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), Status::Fail, std::nullopt, std::move(detail), 0.0};
}

CheckResult undecided(std::string name, std::string detail) {
    return CheckResult{std::move(name), Status::Undecided, std::nullopt, std::move(detail), 0.0};
}

CheckResult check(std::string name, bool ok, std::string detail) {
    return ok ? pass(std::move(name), std::move(detail)) : fail(std::move(name), std::move(detail));
}

CheckResult compare_maps(std::string name, const Matrix& lhs, const Matrix& rhs, const StructuredSpace& source,
                         const StructuredSpace& target) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw DimensionMismatch("compare_maps(" + name + "): shapes differ");
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        bool same = true;
        for (std::size_t r = 0; r < lhs.rows() && same; ++r) same = lhs(r, c) == rhs(r, c);
        if (!same) {
            std::string el = source.dim() == lhs.cols() ? source.label(c) : "e" + std::to_string(c);
            return fail(std::move(name), Witness{el, render(lhs.column(c), target), render(rhs.column(c), target)});
        }
    }
    return pass(std::move(name));
}

CheckResult compare_on(std::string name, const Matrix& lhs, const Matrix& rhs, const std::vector<Vec>& vectors,
                       const StructuredSpace& source, const StructuredSpace& target) {
    for (const auto& v : vectors) {
        Vec a = lhs * v, b = rhs * v;
        if (a != b) return fail(std::move(name), Witness{render(v, source), render(a, target), render(b, target)});
    }
    return pass(std::move(name));
}

CheckResult compare_vectors(std::string name, const std::string& element, const Vec& lhs, const Vec& rhs,
                            const StructuredSpace& target) {
    if (lhs == rhs) return pass(std::move(name));
    return fail(std::move(name), Witness{element, render(lhs, target), render(rhs, target)});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        CheckResult r = c;
        if (!prefix.empty()) r.name = prefix + "/" + r.name;
        checks.push_back(std::move(r));
    }
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const CheckResult* Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed()) return &c;
    return nullptr;
}

void require_passed(const Report& r, const std::string& context) {
    const CheckResult* f = r.first_failure();
    if (!f) return;
    std::string w;
    if (f->witness) w = f->witness->element + ": " + f->witness->lhs + " vs " + f->witness->rhs;
    throw InvariantFailure(context + ": " + f->name, w);
}

std::string Report::summary() const {
    std::size_t p = 0, f = 0, u = 0;
    for (const auto& c : checks) {
        if (c.status == Status::Pass) ++p;
        else if (c.status == Status::Fail) ++f;
        else ++u;
    }
    return std::to_string(p) + " passed, " + std::to_string(f) + " failed, " + std::to_string(u) + " undecided";
}

}  // namespace ncg
