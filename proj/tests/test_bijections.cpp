#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "ferrers/bijections.hpp"
#include "ferrers/families.hpp"
#include "ferrers/json_io.hpp"
#include "test_util.hpp"

using namespace ferrers;
using ferrers::testutil::G;
using ferrers::testutil::P;

namespace {

void check_telescoping(const BijectionTrace& t)
{
    const long long total =
        std::accumulate(t.diffs.values.begin(), t.diffs.values.end(), 0LL);
    CHECK(t.partition_chain.front().size() ==
          t.partition_chain.back().size() + total);
    CHECK(OddFerrersGraph(t.shape_chain.front()).size() ==
          OddFerrersGraph(t.shape_chain.back()).size() + total);
    for (size_t i = 0; i < t.diffs.values.size(); ++i)
        CHECK(t.partition_chain[i].size() ==
              t.partition_chain[i + 1].size() + t.diffs.values[i]);
}

}  // namespace

TEST_CASE("destructive operator on P_omega")
{
    auto [r1, d1] = psi_minus(P({6, 4, 2, 2, 0}));
    CHECK(r1 == P({6, 4, 2, 1}));
    CHECK(d1 == 1);

    // Case with equal neighbor parts merging: the drop is the size
    // difference, always computed by subtraction.
    auto [r2, d2] = psi_minus(P({10, 8, 7, 7, 5, 4}));
    CHECK(r2 == P({10, 9, 8, 7, 6}));
    CHECK(d2 == P({10, 8, 7, 7, 5, 4}).size() - r2.size());
    CHECK(d2 == 1);

    auto [r3, d3] = psi_minus(P({8, 7, 5, 5, 3}));
    CHECK(r3 == P({6, 5, 3, 3, 2}));
    CHECK(d3 == 9);

    auto [r4, d4] = psi_minus(P({1, 0}));
    CHECK(r4 == P({0}));
    CHECK(d4 == 1);

    CHECK_THROWS_AS(psi_minus(P({5})), domain_error);
    CHECK_THROWS_AS(psi_minus(P({3, 3})), domain_error);
}

TEST_CASE("constructive operators on P_omega")
{
    CHECK(psi_plus(P({6, 6, 4, 3}), Branch::one) == P({6, 6, 4, 4, 0}));
    CHECK(psi_plus(P({8, 8, 4, 2}), Branch::one) == P({8, 8, 4, 2, 1}));
    CHECK(psi_plus(P({6, 5, 4, 3}), Branch::one) == P({6, 4, 4, 3, 2}));
    CHECK(psi_plus(P({5, 3, 3, 2}), Branch::two) == P({7, 5, 5, 3}));
    CHECK_THROWS_AS(psi_plus(P({3, 3}), Branch::one), domain_error);
}

TEST_CASE("destructive operator on P_nu")
{
    auto [r1, d1] = rho_minus(P({12, 8, 4, 2, 0}));
    CHECK(r1 == P({10, 6, 2, 0}));
    CHECK(d1 == 8);

    auto [r2, d2] = rho_minus(P({10, 8, 7, 5, 4}));
    CHECK(r2 == P({8, 7, 6, 5}));
    CHECK(d2 == 8);

    auto [r3, d3] = rho_minus(P({8, 6, 5, 3}));
    CHECK(r3 == P({6, 4, 3, 2}));
    CHECK(d3 == 7);

    CHECK_THROWS_AS(rho_minus(P({4})), domain_error);
    CHECK_THROWS_AS(rho_minus(P({3, 1})), domain_error);
}

TEST_CASE("constructive operators on P_nu")
{
    CHECK(rho_plus(P({10, 8, 7, 6, 5}), Branch::two) == P({12, 10, 9, 8, 6}));
    CHECK(rho_plus(P({10, 8, 4, 2}), Branch::one) == P({12, 10, 6, 4, 0}));
    CHECK(rho_plus(P({10, 8, 7, 4}), Branch::one) == P({12, 10, 6, 5, 4}));
    CHECK_THROWS_AS(rho_plus(P({3, 1}), Branch::one), domain_error);
}

TEST_CASE("omega forward reproduces the worked trace")
{
    const auto [graph, trace] = omega_forward(P({6, 4, 3, 3, 2}));
    CHECK(graph == G({7, 3, 2, 2, 1}));
    CHECK(trace.diffs.values == std::vector<long long>{1, 7, 1, 1, 3, 1});
    REQUIRE(trace.partition_chain.size() == 7);
    CHECK(trace.partition_chain[1] == P({6, 5, 4, 2}));
    CHECK(trace.partition_chain[2] == P({4, 3, 2, 1}));
    CHECK(trace.partition_chain[3] == P({4, 3, 2}));
    CHECK(trace.partition_chain[4] == P({5, 3}));
    CHECK(trace.partition_chain[5] == P({3, 2}));
    CHECK(trace.partition_chain[6] == P({4}));
    check_telescoping(trace);
    CHECK(check_claims(trace.diffs));

    CHECK(omega_forward(P({12, 2, 1, 0})).first == G({11, 2, 1, 1}));
    for (int n = 0; n <= 8; ++n) {
        const auto [g, tr] = omega_forward(P({n}));
        CHECK(g == G({n + 1}));
        CHECK(tr.diffs.values.empty());
    }
    CHECK_THROWS_AS(omega_forward(P({3, 3})), domain_error);
}

TEST_CASE("omega inverse undoes the worked examples")
{
    CHECK(omega_inverse(G({7, 3, 2, 2, 1})).first == P({6, 4, 3, 3, 2}));
    CHECK(omega_inverse(G({13, 1, 1, 1})).first == P({4, 4, 4, 3}));
    for (int n = 0; n <= 8; ++n)
        CHECK(omega_inverse(G({n + 1})).first == P({n}));

    const auto [p, trace] = omega_inverse(G({7, 3, 2, 2, 1}));
    CHECK(p == P({6, 4, 3, 3, 2}));
    CHECK(trace.diffs.kind == DiffKind::omega_h);
    CHECK(check_claims(trace.diffs));
    check_telescoping(trace);
}

TEST_CASE("nu forward reproduces the worked trace")
{
    const auto [graph, trace] = nu_forward(P({10, 8, 5, 4, 3}));
    CHECK(graph == G({9, 5, 4, 3, 1}));
    CHECK(trace.diffs.values == std::vector<long long>{8, 7, 6, 4, 2});
    REQUIRE(trace.partition_chain.size() == 6);
    CHECK(trace.partition_chain[1] == P({8, 6, 5, 3}));
    CHECK(trace.partition_chain[2] == P({6, 4, 3, 2}));
    CHECK(trace.partition_chain[3] == P({4, 3, 2}));
    CHECK(trace.partition_chain[4] == P({3, 2}));
    CHECK(trace.partition_chain[5] == P({3}));
    check_telescoping(trace);
    CHECK(check_claims(trace.diffs));

    CHECK(nu_forward(P({18, 6, 4, 2, 0})).first == G({15, 4, 3, 2, 1}));
    for (int n = 0; n <= 8; ++n)
        CHECK(nu_forward(P({n})).first == G({n + 1}));
    CHECK_THROWS_AS(nu_forward(P({3, 1})), domain_error);
}

TEST_CASE("nu inverse undoes the worked examples")
{
    CHECK(nu_inverse(G({9, 5, 4, 3, 1})).first == P({10, 8, 5, 4, 3}));
    CHECK(nu_inverse(G({13, 5, 3, 2, 1})).first == P({8, 7, 6, 5, 4}));
    for (int n = 0; n <= 8; ++n)
        CHECK(nu_inverse(G({n + 1})).first == P({n}));
    CHECK_THROWS_AS(nu_inverse(G({3, 3})), domain_error);

    const auto [p, trace] = nu_inverse(G({9, 5, 4, 3, 1}));
    CHECK(p == P({10, 8, 5, 4, 3}));
    CHECK(trace.diffs.values == std::vector<long long>{8, 7, 6, 4, 2});
    CHECK(check_claims(trace.diffs));
}

TEST_CASE("claim checker")
{
    using DS = DifferenceSequence;
    CHECK(check_claims(DS{{1, 7, 1, 1, 3, 1}, DiffKind::omega_d}));
    CHECK(check_claims(DS{{8, 7, 6, 4, 2}, DiffKind::nu_d}));
    CHECK(check_claims(DS{{3, 1}, DiffKind::omega_d}));
    CHECK_FALSE(check_claims(DS{{3}, DiffKind::omega_d}));
    CHECK_FALSE(check_claims(DS{{3, 1, 1}, DiffKind::omega_d}));
    CHECK_FALSE(check_claims(DS{{2, 1}, DiffKind::omega_d}));
    CHECK_FALSE(check_claims(DS{{5, 1}, DiffKind::omega_d}));
    CHECK(check_claims(DS{{5, 1, 1}, DiffKind::omega_h}));
    CHECK(check_claims(DS{{}, DiffKind::omega_d}));
    CHECK(check_claims(DS{{2}, DiffKind::nu_d}));
    CHECK_FALSE(check_claims(DS{{3}, DiffKind::nu_d}));
    CHECK_FALSE(check_claims(DS{{3, 2, 2}, DiffKind::nu_h}));
    CHECK(check_claims(DS{{3, 2}, DiffKind::nu_h}));
    CHECK_FALSE(check_claims(DS{{1, 2}, DiffKind::nu_d}));
}

TEST_CASE("destructive cases are mutually exclusive and total")
{
    for (long long n = 0; n <= 25; ++n) {
        for (int len = 2; len <= n + 1; ++len) {
            for (const auto& p : enumerate_partitions(Family::p_omega, len - 1, n)) {
                const int last = p.last();
                const int prev = p.parts()[static_cast<size_t>(p.length() - 2)];
                int cases = 0;
                if (last == 0 && prev >= 2) ++cases;
                if (prev == last + 1) ++cases;
                if (last >= 1 && prev >= last + 2) ++cases;
                CHECK(cases == 1);
            }
            for (const auto& p : enumerate_partitions(Family::p_nu, len - 1, n)) {
                const int last = p.last();
                const int prev = p.parts()[static_cast<size_t>(p.length() - 2)];
                int cases = 0;
                if (last == 0) ++cases;
                if (last >= 1 && prev == last + 1) ++cases;
                if (last >= 1 && prev >= last + 2) ++cases;
                CHECK(cases == 1);
            }
        }
    }
}

TEST_CASE("operators stay inside their sets for all sizes up to 25")
{
    for (long long n = 0; n <= 25; ++n) {
        for (int len = 1; len <= n + 1; ++len) {
            for (const auto& p : enumerate_partitions(Family::p_omega, len - 1, n)) {
                if (p.length() >= 2) CHECK(is_in_p_omega(psi_minus(p).first));
                CHECK(is_in_p_omega(psi_plus(p, Branch::one)));
                CHECK(is_in_p_omega(psi_plus(p, Branch::two)));
            }
            for (const auto& p : enumerate_partitions(Family::p_nu, len - 1, n)) {
                if (p.length() >= 2) CHECK(is_in_p_nu(rho_minus(p).first));
                CHECK(is_in_p_nu(rho_plus(p, Branch::one)));
                CHECK(is_in_p_nu(rho_plus(p, Branch::two)));
            }
        }
    }
}

TEST_CASE("round trips are exact for all sizes up to 18")
{
    for (long long n = 0; n <= 18; ++n) {
        long long p_omega_total = 0;
        long long p_nu_total = 0;
        for (int len = 1; len <= n + 1; ++len) {
            for (const auto& p : enumerate_partitions(Family::p_omega, len - 1, n)) {
                ++p_omega_total;
                const auto [graph, trace] = omega_forward(p);
                CHECK(graph.size() == n);
                CHECK(graph.rows() == len);
                CHECK(check_claims(trace.diffs));
                CHECK(omega_inverse(graph).first == p);
            }
            for (const auto& p : enumerate_partitions(Family::p_nu, len - 1, n)) {
                ++p_nu_total;
                const auto [graph, trace] = nu_forward(p);
                CHECK(graph.is_distinct());
                CHECK(graph.rows() == len);
                CHECK(check_claims(trace.diffs));
                CHECK(nu_inverse(graph).first == p);
            }
        }
        // Graph side, plus the cardinality consequence per cell.
        long long graph_omega_total = 0;
        for (const auto& shape : shapes_with_graph_size_up_to(n, false)) {
            const OddFerrersGraph g(shape);
            if (g.size() != n) continue;
            ++graph_omega_total;
            const auto [p, trace] = omega_inverse(g);
            CHECK(check_claims(trace.diffs));
            CHECK(omega_forward(p).first == g);
        }
        long long graph_nu_total = 0;
        for (const auto& shape : shapes_with_graph_size_up_to(n, true)) {
            const OddFerrersGraph g(shape);
            if (g.size() != n) continue;
            ++graph_nu_total;
            const auto [p, trace] = nu_inverse(g);
            CHECK(check_claims(trace.diffs));
            CHECK(nu_forward(p).first == g);
        }
        CHECK(p_omega_total == graph_omega_total);
        CHECK(p_nu_total == graph_nu_total);
    }
}

TEST_CASE("per-cell cardinalities agree across the bijection")
{
    for (long long n = 0; n <= 16; ++n)
        for (int m = 0; m <= n; ++m) {
            CHECK(family_count(Family::p_omega, m, n) ==
                  family_count(Family::b1_omega, m, n));
            CHECK(family_count(Family::p_nu, m, n) ==
                  family_count(Family::b1_nu, m, n));
        }
}

TEST_CASE("trace serialization")
{
    const auto [graph, trace] = omega_forward(P({6, 4, 3, 3, 2}));
    (void)graph;
    const auto j = to_json(trace);
    CHECK(j["kind"] == "omega_d");
    CHECK(j["start"] == std::vector<int>{6, 4, 3, 3, 2});
    CHECK(j["terminal"] == std::vector<int>{4});
    REQUIRE(j["steps"].size() == 6);
    CHECK(j["steps"][1]["delta"] == 7);
    CHECK(j["steps"][1]["object"] == std::vector<int>{4, 3, 2, 1});
    CHECK(j["graph_shapes"][0] == std::vector<int>{7, 3, 2, 2, 1});
}
