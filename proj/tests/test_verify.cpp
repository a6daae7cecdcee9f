#include <catch2/catch_amalgamated.hpp>

#include "meetlab/verify.hpp"

using namespace meetlab;

TEST_CASE("every check passes on P2") {
    const VerifyReport rep = run_verification(generate(GraphFamily::path, 2), "path-2");
    CHECK(rep.overall_pass);
    for (const auto& c : rep.checks) {
        INFO(c.name << " worst=" << c.worst);
        CHECK((c.pass || c.skipped));
    }
}

TEST_CASE("every check passes on a lollipop") {
    GenOptions o;
    o.clique = 4;
    const VerifyReport rep = run_verification(generate(GraphFamily::lollipop, 8, o), "lollipop-8-4");
    CHECK(rep.overall_pass);
}

TEST_CASE("verification is deterministic for fixed seeds") {
    const Graph g = generate(GraphFamily::cycle, 5);
    const VerifyReport a = run_verification(g, "cycle-5");
    const VerifyReport b = run_verification(g, "cycle-5");
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].pass == b.checks[i].pass);
        CHECK(a.checks[i].worst == b.checks[i].worst);
    }
}

TEST_CASE("oversized instances skip the meeting checks instead of failing") {
    VerifyOptions opts;
    opts.mdp_config_cap = 10;  // force the skip path
    const VerifyReport rep = run_verification(generate(GraphFamily::path, 3), "path-3", opts);
    CHECK(rep.overall_pass);
    bool sawskip = false;
    for (const auto& c : rep.checks) sawskip = sawskip || c.skipped;
    CHECK(sawskip);
}

TEST_CASE("sweep emits complete rows over a cycle range") {
    const auto rows = sweep(GraphFamily::cycle, 4, 7);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        REQUIRE(r.ok);
        CHECK(r.h_g > 0.0);
        // Bounded-degree growth: the worst meeting time stays within the
        // linear-overhead envelope of the worst hitting time.
        CHECK(r.max_m_nonatomic <= 4.0 * r.h_g + 8.0 * r.n);
        CHECK(r.slack >= -1e-6);
        // The closed form covers vertex pairs only, so its maximum cannot
        // exceed the all-configuration potential maximum.
        CHECK(r.theorem1_max <= r.max_phi + 1e-9);
    }
}

TEST_CASE("sweep reports atomic complete-graph values exactly") {
    const auto rows = sweep(GraphFamily::complete, 4, 6);
    for (const auto& r : rows) {
        REQUIRE(r.ok);
        CHECK_THAT(r.max_m_atomic, Catch::Matchers::WithinAbs(r.n - 1.0, 1e-6));
    }
}

TEST_CASE("sweep records per-size failures as rows with a reason") {
    SweepOptions opts;
    opts.config_cap = 50;
    const auto rows = sweep(GraphFamily::complete, 4, 5, opts);
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK_FALSE(r.ok);
        CHECK(r.error.find("scale") != std::string::npos);
    }
}

TEST_CASE("the standard suite has the documented composition") {
    const auto suite = standard_suite();
    CHECK(suite.size() == 10 + 10 + 6 + 5 + 3 + 5);
    for (const auto& [name, g] : suite) {
        INFO(name);
        CHECK(g.n() >= 3);
        // Every suite instance stays within the scale the exact solvers target.
        const int states = g.n() + 2 * g.m();
        CHECK(states * states <= 10'000);
    }
}
