#include <catch2/catch_amalgamated.hpp>

#include "meetlab/hitting.hpp"
#include "meetlab/verify.hpp"

using namespace meetlab;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("classical hitting times on P3 match the hand-solved system") {
    const Graph g = generate(GraphFamily::path, 3);
    const HitTable h = hitting_times(g);
    // Frozen from solving the 2x2 systems by hand: H(0,1)=1, H(1,2)=3,
    // H(0,2)=4 and the mirror images.
    const double expect[3][3] = {{0, 1, 4}, {3, 0, 3}, {4, 1, 0}};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK_THAT(h(x, y), Catch::Matchers::WithinAbs(expect[x][y], kTol));
}

TEST_CASE("classical hitting times on K3 are all 2") {
    const HitTable h = hitting_times(generate(GraphFamily::complete, 3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK_THAT(h(x, y), Catch::Matchers::WithinAbs(x == y ? 0.0 : 2.0, kTol));
}

TEST_CASE("hitting equations hold on a lollipop") {
    GenOptions o;
    o.clique = 4;
    const Graph g = generate(GraphFamily::lollipop, 8, o);
    const HitTable h = hitting_times(g);
    for (int y = 0; y < g.n(); ++y) {
        CHECK(h(y, y) == 0.0);
        for (int x = 0; x < g.n(); ++x) {
            if (x == y) continue;
            CHECK(h(x, y) > 0.0);
            double avg = 0.0;
            for (int z : g.neighbors(x)) avg += h(z, y);
            avg /= g.degree(x);
            CHECK_THAT(h(x, y), Catch::Matchers::WithinAbs(1.0 + avg, kTol));
        }
    }
}

TEST_CASE("P2 state table is the hand-computed 4x4") {
    const Graph g = generate(GraphFamily::path, 2);
    const StateSpace ss(g);
    const HitTable h = hitting_times(g);
    // State order: v:0, v:1, i:0>1, i:1>0. Two forced moves from v:0 to v:1;
    // committing out of a degree-1 vertex takes 2*1-1 = 1 move.
    const double expect[4][4] = {
        {0, 2, 1, 3},
        {2, 0, 3, 1},
        {3, 1, 0, 2},
        {1, 3, 2, 0},
    };
    for (const auto& table : {ext_hitting_formula(ss, h), ext_hitting_oracle(ss)}) {
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t)
                CHECK_THAT(table(s, t), Catch::Matchers::WithinAbs(expect[s][t], kTol));
    }
}

TEST_CASE("P3 spot values from the reductions") {
    const Graph g = generate(GraphFamily::path, 3);
    const StateSpace ss(g);
    const HitTable h = hitting_times(g);
    const ExtHitTable eh = ext_hitting_formula(ss, h);
    const int b = 1, i_ba = ss.index_of(State::intermediate(1, 0));
    // Committing from the middle vertex onto edge (1,0): solved by hand via
    // T = 1/2 * 1 + 1/2 * (4 + T)  =>  T = 5.
    CHECK_THAT(eh(b, i_ba), Catch::Matchers::WithinAbs(5.0, kTol));
    // Vertex-to-vertex rides are twice the classical time.
    CHECK_THAT(eh(0, 2), Catch::Matchers::WithinAbs(8.0, kTol));
}

TEST_CASE("formula and oracle agree entrywise on the standard suite") {
    for (const auto& [name, g] : standard_suite()) {
        const StateSpace ss(g);
        const HitTable h = hitting_times(g);
        const ExtHitTable a = ext_hitting_formula(ss, h);
        const ExtHitTable b = ext_hitting_oracle(ss);
        double worst = 0.0;
        for (int s = 0; s < ss.size(); ++s)
            for (int t = 0; t < ss.size(); ++t)
                worst = std::max(worst, std::fabs(a(s, t) - b(s, t)));
        INFO(name);
        CHECK(worst <= kTol);
    }
}

TEST_CASE("state-table diagonals are zero and off-diagonals positive") {
    const StateSpace ss(generate(GraphFamily::cycle, 5));
    const ExtHitTable eh = ext_hitting_oracle(ss);
    for (int s = 0; s < ss.size(); ++s)
        for (int t = 0; t < ss.size(); ++t) {
            if (s == t)
                CHECK(eh(s, t) == 0.0);
            else
                CHECK(eh(s, t) > 0.0);
        }
}

TEST_CASE("one-step averaging holds for every distinct pair") {
    for (GraphFamily f : {GraphFamily::path, GraphFamily::complete, GraphFamily::star}) {
        const StateSpace ss(generate(f, 5));
        const ExtHitTable eh = ext_hitting_formula(ss, hitting_times(ss.graph()));
        for (int s = 0; s < ss.size(); ++s)
            for (int t = 0; t < ss.size(); ++t)
                if (s != t) CHECK(averaging_residual(eh, ss, s, t) <= kTol);
    }
}

TEST_CASE("tail split holds away from the mid-edge diagonal") {
    const StateSpace ss(generate(GraphFamily::cycle, 4));
    const ExtHitTable eh = ext_hitting_formula(ss, hitting_times(ss.graph()));
    for (int s = 0; s < ss.size(); ++s)
        for (int t = 0; t < ss.size(); ++t)
            if (s != t) CHECK(splitting_residual(eh, ss, s, t) <= kTol);
}

TEST_CASE("triangle identity on vertices") {
    const HitTable h3 = hitting_times(generate(GraphFamily::path, 3));
    CHECK(check_triangle_original(h3, 0, 1, 2) <= kTol);
    CHECK(check_triangle_original(h3, 1, 1, 1) == 0.0);
    const HitTable hk = hitting_times(generate(GraphFamily::complete, 3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) CHECK(check_triangle_original(hk, x, y, z) <= kTol);
    // A lopsided graph where the identity is not forced by symmetry.
    GenOptions o;
    o.clique = 3;
    const HitTable hl = hitting_times(generate(GraphFamily::lollipop, 6, o));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            for (int z = 0; z < 6; ++z) CHECK(check_triangle_original(hl, x, y, z) <= kTol);
}

TEST_CASE("triangle identity on states, exhaustively") {
    for (GraphFamily f : {GraphFamily::path, GraphFamily::complete}) {
        const StateSpace ss(generate(f, 3));
        const ExtHitTable eh = ext_hitting_formula(ss, hitting_times(ss.graph()));
        double worst = 0.0;
        for (int x = 0; x < ss.size(); ++x)
            for (int y = 0; y < ss.size(); ++y)
                for (int z = 0; z < ss.size(); ++z)
                    worst = std::max(worst, check_triangle_extended(eh, ss, x, y, z));
        CHECK(worst <= kTol);
    }
}

TEST_CASE("solver reports singular systems with the failing column") {
    Matrix a(2, 2, 0.0);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 1.0;
    try {
        solve_dense(std::move(a), {1.0, 2.0});
        FAIL("expected SingularSystem");
    } catch (const SingularSystem& e) {
        CHECK(e.column == 1);
    }
}
