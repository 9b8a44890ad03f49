#include <algorithm>

#include "doctest.h"
#include "ncgauge/bundle/gauge.hpp"
#include "ncgauge/catalog/examples.hpp"
#include "ncgauge/catalog/suites.hpp"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/kernels.hpp"
#include "ncgauge/hopf/presentation.hpp"

using namespace ncg;

namespace {

const CatalogEntry& entry(const std::vector<CatalogEntry>& c, const std::string& name) {
    auto it = std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
    REQUIRE(it != c.end());
    return *it;
}

bool has_flag(const CatalogEntry& e, const std::string& f) {
    return std::find(e.flags.begin(), e.flags.end(), f) != e.flags.end();
}

Json kz2_json() {
    return Json::parse(R"({"dim": 2, "basis": ["1", "g"],
        "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "unit": [1, 0],
        "comult": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "counit": [1, 1],
        "antipode": [[1, 0], [0, 1]]})");
}

std::string parse_error_of(const Json& j) {
    try {
        input_from_json(j, "doc");
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("catalog lists the built-ins with computed flags") {
    const std::vector<CatalogEntry> c = catalog();
    for (const char* name : {"kZ2", "kZn:n", "sweedler", "taft:n", "fnZ4-over-fnZ2", "crossprod-mu:μ",
                             "braided-line:n", "bosonisation:n"})
        CHECK(std::any_of(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; }));
    CHECK(has_flag(entry(c, "sweedler"), "trivializable"));
    CHECK(has_flag(entry(c, "m3-graded"), "nontrivializable"));
    CHECK(has_flag(entry(c, "fnZ2-sum-not-free"), "not-free"));
    CHECK(has_flag(entry(c, "braided-line:n"), "braided"));
    // The double cover has the trivialisation δ0 ↦ δ0+δ1, δ1 ↦ δ2+δ3, so the search must find one.
    CHECK(has_flag(entry(c, "fnZ4-over-fnZ2"), "trivializable"));
    const PrincipalBundle b = build_bundle(fn_z4_over_fn_z2());
    Matrix phi(4, 2);
    phi(0, 0) = phi(1, 0) = phi(2, 1) = phi(3, 1) = 1;
    CHECK(check_trivialisation(b, phi).passed());
}

TEST_CASE("catalog names resolve") {
    CHECK(resolve("kZn:5").hopf.dim() == 5);
    CHECK(resolve("taft:3").hopf.dim() == 9);
    CHECK(resolve("braided-line:4").braided->dim() == 4);
    const Input mu = resolve("crossprod-mu:-3/2");
    REQUIRE(mu.cocycle);
    CHECK(mu.cocycle->c(0, 3) == Scalar(Rational(-3, 2)));
    for (const char* bad : {"kZ3", "kZn:", "kZn:x", "kZn:99", "taft:1", "crossprod-mu:0", "crossprod-mu:1/0", "nope"})
        CHECK_THROWS_AS(resolve(bad), ParseError);
}

TEST_CASE("Hopf JSON round-trips") {
    for (const HopfAlgebra& h : {sweedler(), resolve("taft:3").hopf, group_algebra(4)}) {
        const Json j = hopf_to_json(h);
        const HopfAlgebra back = hopf_from_json(j);
        CHECK(back.algebra.mult() == h.algebra.mult());
        CHECK(back.coalgebra.comult() == h.coalgebra.comult());
        CHECK(back.counit() == h.counit());
        CHECK(back.antipode == h.antipode);
        CHECK(back.r_form.has_value() == h.r_form.has_value());
        if (h.r_form) CHECK(*back.r_form == *h.r_form);
        CHECK(hopf_to_json(back) == j);
    }
}

TEST_CASE("scalar forms") {
    CHECK(scalar_from_json(Json(3), 1, "") == Scalar(3));
    CHECK(scalar_from_json(Json("-2/6"), 1, "") == Scalar(Rational(-1, 3)));
    CHECK(scalar_from_json(Json::parse("[0, 1]"), 3, "") == Scalar::root_of_unity(3));
    const Json obj = Json::parse(R"({"conductor": 4, "coeffs": [[1, 2], [0, 1]]})");
    CHECK(scalar_from_json(obj, 1, "") == Scalar(Rational(1, 2)));
    const Scalar z = Scalar(Rational(2, 3)) * Scalar::root_of_unity(5, 2) - Scalar(1);
    CHECK(scalar_from_json(scalar_to_json(z), 1, "") == z);
    CHECK_THROWS_AS(scalar_from_json(Json("x"), 1, "/a"), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"conductor": 2, "coeffs": [[1, 0]]})"), 1, "/a"), ParseError);
}

TEST_CASE("malformed inputs name the location") {
    Json j = kz2_json();
    j["mult"][1][0] = Json::array({0});
    CHECK(parse_error_of(j).find("/mult/1/0") != std::string::npos);
    j = kz2_json();
    j["counit"][1] = "1/x";
    CHECK(parse_error_of(j).find("/counit/1") != std::string::npos);
    j = kz2_json();
    j.erase("antipode");
    CHECK(parse_error_of(j).find("antipode") != std::string::npos);
    j = kz2_json();
    j["kind"] = "torus";
    CHECK(parse_error_of(j).find("/kind") != std::string::npos);
    CHECK_THROWS_AS(parse_json_text("{\"dim\": ", "file.json"), ParseError);
}

TEST_CASE("bundle JSON with a grading") {
    const Json j = Json::parse(R"({"kind": "bundle", "hopf": "kZ2",
        "algebra": {"dim": 2, "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "unit": [1, 0]},
        "grading": [0, 1]})");
    const Input in = input_from_json(j, "doc");
    REQUIRE(in.bundle);
    CHECK(in.bundle->comodule.coaction() == in.hopf.coalgebra.comult());
    const RunReport r = run(in, Suite::Bundle);
    CHECK(r.passed());
}

TEST_CASE("suite runs, exit codes and preconditions") {
    const RunReport kz2 = run(resolve("kZ2"), Suite::Bundle);
    CHECK(kz2.passed());
    CHECK(kz2.exit_code() == 0);

    Json bad = kz2_json();
    bad["antipode"][1][1] = 2;
    const Input in = input_from_json(bad, "doc");
    const RunReport r = run(in, Suite::Hopf);
    CHECK(r.exit_code() == 1);
    CHECK_THROWS_AS(run(in, Suite::Local), AxiomPrecheckError);
    CHECK_THROWS_AS(run(resolve("kZ2"), Suite::Cocycle), AxiomPrecheckError);
    CHECK_THROWS_AS(run(resolve("sweedler"), Suite::Braided), AxiomPrecheckError);

    // The failure carries the basis element and both sides.
    const std::string text = render_text(r);
    CHECK(text.find("at g") != std::string::npos);
    CHECK(text.find("lhs = 2*1") != std::string::npos);
    CHECK(text.find("rhs = 1") != std::string::npos);
}

TEST_CASE("bosonisation suite on taft:2 includes the Sweedler isomorphism") {
    const RunReport r = run(resolve("taft:2"), Suite::Bosonisation);
    CHECK(r.passed());
    auto it = std::find_if(r.cases.begin(), r.cases.end(), [](const CaseResult& c) { return c.name == "isomorphism"; });
    REQUIRE(it != r.cases.end());
    const CheckResult* iso = it->report.find("isomorphic to sweedler");
    REQUIRE(iso != nullptr);
    CHECK(iso->passed());
    CHECK(iso->detail.find("x -> ") != std::string::npos);
}

TEST_CASE("reports round-trip and are deterministic") {
    const Input in = resolve("crossprod-mu:3");
    const RunReport a = run(in, Suite::All, {1, false, 20261018});
    const Json ja = report_to_json(a, false);
    CHECK(report_to_json(report_from_json(ja), false) == ja);
    // Same content with a single thread.
    const int saved = kernels::thread_count();
    kernels::set_thread_count(1);
    const RunReport b = run(in, Suite::All, {1, false, 20261018});
    kernels::set_thread_count(saved);
    CHECK(report_to_json(b, false).dump() == ja.dump());
    CHECK(render_text(b, false) == render_text(a, false));

    const Json timed = report_to_json(a, true);
    for (const Json& c : timed["cases"]) CHECK(c.contains("seconds"));

    Json failing = report_to_json(run(input_from_json(kz2_json(), "doc"), Suite::Hopf), false);
    failing["cases"][0]["checks"][0]["status"] = "fail";
    CHECK_THROWS_AS(report_from_json(failing), ParseError);  // case status no longer matches its checks
    failing["cases"][0]["status"] = "fail";
    failing["passed"] = false;
    CHECK(report_to_json(report_from_json(failing), false) == failing);
}
