#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ferrers/families.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/partition.hpp"
#include "test_util.hpp"

using namespace ferrers;
using ferrers::testutil::P;

TEST_CASE("construction enforces the invariants")
{
    CHECK_THROWS_AS(P({1, 2}), domain_error);
    CHECK_THROWS_AS(P({2, -1}), domain_error);
    CHECK_THROWS_AS(P({2, 0, 0}), domain_error);
    CHECK_NOTHROW(P({2, 0}));
    CHECK_NOTHROW(P({0}));
    CHECK(P({3, 1, 0}).length() == 3);
    CHECK(P({3, 1, 0}).size() == 4);
    CHECK(P({3, 1, 0}) != P({3, 1}));
}

TEST_CASE("text round trip")
{
    CHECK(Partition::parse("(6,4,3,3,2)") == P({6, 4, 3, 3, 2}));
    CHECK(Partition::parse("6, 4, 3") == P({6, 4, 3}));
    CHECK(Partition::parse("5") == P({5}));
    CHECK(Partition::parse("()").empty());
    CHECK(P({6, 4, 3, 3, 2}).str() == "(6,4,3,3,2)");
    CHECK(Partition::parse(P({12, 2, 1, 0}).str()) == P({12, 2, 1, 0}));
    CHECK_THROWS_AS(Partition::parse("(a,b)"), domain_error);
    CHECK_THROWS_AS(Partition::parse("(1,,2)"), domain_error);
}

TEST_CASE("json round trip")
{
    const Partition p = P({12, 2, 1, 0});
    CHECK(to_json(p) == nlohmann::json::array({12, 2, 1, 0}));
    CHECK(partition_from_json(to_json(p)) == p);
    CHECK(partition_from_json(to_json(Partition{})).empty());
}

TEST_CASE("membership in P_omega")
{
    CHECK(is_in_p_omega(P({6, 4, 3, 3, 2})));
    CHECK(is_in_p_omega(P({0})));
    CHECK(is_in_p_omega(P({5, 2})));
    CHECK_FALSE(is_in_p_omega(P({7, 2})));
    CHECK_FALSE(is_in_p_omega(P({3, 3})));
    CHECK(is_in_p_omega(P({1, 0})));
    CHECK(p_omega_violation(P({3, 3})) == "smallest part not unique");
    CHECK(p_omega_violation(P({7, 2})) ==
          "odd part exceeds twice the smallest part plus 1");
    CHECK_THROWS_AS(is_in_p_omega(Partition{}), domain_error);
}

TEST_CASE("membership in P_nu")
{
    CHECK(is_in_p_nu(P({10, 8, 5, 4, 3})));
    CHECK(is_in_p_nu(P({12, 8, 4, 2, 0})));
    CHECK_FALSE(is_in_p_nu(P({3, 1})));
    CHECK_FALSE(is_in_p_nu(P({4, 4, 2})));
    CHECK(is_in_p_nu(P({0})));
    CHECK_THROWS_AS(is_in_p_nu(Partition{}), domain_error);
}

TEST_CASE("pointwise operators")
{
    CHECK(phi_pointwise(Phi::plus_o, P({5, 3, 3, 2})) == P({7, 5, 5, 3}));
    CHECK(phi_pointwise(Phi::minus_o, P({8, 7, 5, 5, 3})) == P({6, 5, 3, 3, 2}));
    CHECK(phi_pointwise(Phi::minus_e, P({12, 8, 4, 2})) == P({10, 6, 2, 0}));
    CHECK(phi_pointwise(Phi::plus, P({3, 3})) == P({4, 3}));
    CHECK(phi_pointwise(Phi::minus, P({3, 2})) == P({3, 1}));
    CHECK(phi_pointwise(Phi::star, P({4, 2, 1})) == P({3, 1, 0}));
    CHECK(phi_pointwise(Phi::minus_o, P({5, 4, 4})) == P({3, 3, 2}));

    CHECK_THROWS_AS(phi_pointwise(Phi::minus, P({1, 0})), domain_error);
    CHECK_THROWS_AS(phi_pointwise(Phi::star, P({1, 1})), domain_error);
    CHECK_THROWS_AS(phi_pointwise(Phi::minus_e, P({2, 1})), domain_error);
    CHECK_THROWS_AS(phi_pointwise(Phi::plus, Partition{}), domain_error);
}

TEST_CASE("splitting the largest odd part")
{
    CHECK(phi_split(P({8, 8, 4, 3})) == P({8, 8, 4, 2, 1}));
    CHECK(phi_split(P({1})) == P({1, 0}));
    CHECK(phi_split(phi_pointwise(Phi::plus, P({6, 5, 4, 3}))) ==
          P({6, 4, 4, 3, 2}));
    CHECK_THROWS_AS(phi_split(P({4, 2})), domain_error);
}

TEST_CASE("split result does not depend on which maximal odd part goes")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> part(1, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> v;
        for (int i = 0; i < 6; ++i) v.push_back(part(rng));
        std::sort(v.begin(), v.end(), std::greater<int>());
        Partition p(v);
        int best = -1;
        for (int x : v)
            if (x % 2 == 1) best = std::max(best, x);
        if (best < 0) continue;
        const Partition expected = phi_split(p);
        // Remove each occurrence of the maximal odd part by hand.
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] != best) continue;
            std::vector<int> w = v;
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            w.push_back((best + 1) / 2);
            w.push_back((best - 1) / 2);
            std::sort(w.begin(), w.end(), std::greater<int>());
            CHECK(Partition(w) == expected);
        }
    }
}

TEST_CASE("merging the last two parts")
{
    CHECK(phi_merge(P({10, 8, 7, 7, 5, 4})) == P({10, 9, 8, 7, 7}));
    CHECK(phi_merge(P({1, 1})) == P({2}));
    CHECK(phi_merge(P({3, 2, 1})) == P({3, 3}));
    CHECK_THROWS_AS(phi_merge(P({4})), domain_error);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(P({6, 6, 3, 2})) == P({4, 4, 3, 2, 2, 2}));
    CHECK(conjugate(P({1})) == P({1}));
    CHECK(conjugate(P({7})) == P({1, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(conjugate(P({3, 0})), domain_error);
    for (long long n = 1; n <= 14; ++n)
        for (const auto& p : partitions_of(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("frobenius symbol")
{
    const FrobeniusSymbol fs = frobenius_symbol(P({4, 3, 3, 1}));
    CHECK(fs.durfee_side == 3);
    CHECK(fs.top == std::vector<int>{3, 1, 0});
    CHECK(fs.bottom == std::vector<int>{3, 1, 0});

    const FrobeniusSymbol one = frobenius_symbol(P({1}));
    CHECK(one.durfee_side == 1);
    CHECK(one.top == std::vector<int>{0});
    CHECK(one.bottom == std::vector<int>{0});

    const FrobeniusSymbol sq = frobenius_symbol(P({2, 2}));
    CHECK(sq.durfee_side == 2);
    CHECK(sq.top == std::vector<int>{1, 0});
    CHECK(sq.bottom == std::vector<int>{1, 0});

    CHECK_THROWS_AS(frobenius_symbol(P({2, 0})), domain_error);
    CHECK_THROWS_AS(frobenius_symbol(Partition{}), domain_error);
}

TEST_CASE("frobenius round trip is exact for all sizes up to 30")
{
    for (long long n = 1; n <= 30; ++n)
        for (const auto& p : partitions_of(n))
            CHECK(from_frobenius(frobenius_symbol(p)) == p);
}

TEST_CASE("operator size deltas")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> part(2, 12);
    std::uniform_int_distribution<int> len(1, 7);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<int> v;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) v.push_back(part(rng));
        std::sort(v.begin(), v.end(), std::greater<int>());
        const Partition p(v);
        const long long ell = p.length();
        CHECK(phi_pointwise(Phi::plus, p).size() == p.size() + 1);
        CHECK(phi_pointwise(Phi::plus_e, p).size() == p.size() + 2 * ell);
        CHECK(phi_pointwise(Phi::plus_o, p).size() == p.size() + 2 * ell - 1);
        CHECK(phi_pointwise(Phi::star, p).size() == p.size() - ell);
        if (p.length() >= 2) CHECK(phi_merge(p).size() == p.size());
        if (std::any_of(v.begin(), v.end(), [](int x) { return x % 2; }))
            CHECK(phi_split(p).size() == p.size());
        // Round trips.
        CHECK(phi_pointwise(Phi::minus_e, phi_pointwise(Phi::plus_e, p)) == p);
        if (p.length() == 1 || v[v.size() - 2] > v.back())
            CHECK(phi_pointwise(Phi::minus, phi_pointwise(Phi::plus, p)) == p);
    }
}
