#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace icemine;
using namespace icemine::testing;

TEST_CASE("closure laws hold before the oracle is trusted") {
    CHECK(oracle_closure_laws_hold(make_fig1()));
    CHECK(oracle_closure_laws_hold(worst_case_context(5)));
    std::mt19937_64 rng(11u);
    for (int round = 0; round < 10; ++round) CHECK(oracle_closure_laws_hold(random_context(rng)));
}

TEST_CASE("oracle on the running example matches the published figures") {
    TransactionContext ctx = make_fig1();
    OracleResult r = oracle_mine(ctx, {2, Rational(1, 2)});

    REQUIRE(r.classes.size() == 6);
    std::vector<std::pair<Itemset, std::uint32_t>> closures;
    for (const OracleClass& c : r.classes) closures.emplace_back(c.closed, c.support);
    std::vector<std::pair<Itemset, std::uint32_t>> expected = {
        {letters(ctx, ""), 5},    {letters(ctx, "BE"), 4},  {letters(ctx, "C"), 4},
        {letters(ctx, "AC"), 3},  {letters(ctx, "BCE"), 3}, {letters(ctx, "ABCE"), 2},
    };
    CHECK(closures == expected);
    CHECK(r.bg.size() == 7);
    CHECK(r.ri.size() == 9);
    CHECK(r.hasse.size() == 7);
}

TEST_CASE("oracle worst-case(3) is the Boolean lattice") {
    TransactionContext ctx = worst_case_context(3);
    OracleResult r = oracle_mine(ctx, {1, Rational(0, 1)});
    CHECK(r.classes.size() == 8);
    CHECK(r.hasse.size() == 3 * 4);   // n * 2^(n-1)
    for (const OracleClass& c : r.classes) {
        REQUIRE(c.generators.size() == 1);
        CHECK(c.generators[0] == c.closed);
    }
    CHECK(r.bg.empty());
    CHECK(r.ri.size() == 12);
}

TEST_CASE("single-transaction context degenerates to one class") {
    TransactionContext ctx = TransactionContext::from_rows({{1, 2}});
    OracleResult r = oracle_mine(ctx, {1, Rational(0, 1)});
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0].closed == set_of(ctx, {1, 2}));
    CHECK(r.classes[0].generators == std::vector<Itemset>{Itemset{}});
    REQUIRE(r.bg.size() == 1);   // {} => {1,2}
    CHECK(r.bg[0].premise == Itemset{});
    CHECK(r.ri.empty());
}

TEST_CASE("oracle refuses oversized contexts") {
    std::vector<std::vector<std::int64_t>> rows(1);
    for (std::int64_t i = 1; i <= 21; ++i) rows[0].push_back(i);
    TransactionContext ctx = TransactionContext::from_rows(rows);
    CHECK_THROWS_AS(oracle_mine(ctx, {1, Rational(0, 1)}), std::domain_error);
}

TEST_CASE("oracle rule sets respect the confidence contract") {
    std::mt19937_64 rng(13u);
    for (int round = 0; round < 25; ++round) {
        TransactionContext ctx = random_context(rng);
        std::uniform_int_distribution<std::uint32_t> supp_d(
            1, static_cast<std::uint32_t>(std::max<std::size_t>(1, ctx.object_count())));
        MiningParams params{supp_d(rng), Rational(1, 2)};
        OracleResult r = oracle_mine(ctx, params);
        for (const GenericRule& rule : r.bg) {
            CHECK(rule.confidence == Rational(1, 1));
            CHECK(validate_rule(rule, ctx));
        }
        for (const GenericRule& rule : r.ri) {
            CHECK(rule.confidence >= params.minconf);
            CHECK(rule.confidence < Rational(1, 1));
            CHECK(validate_rule(rule, ctx));
        }
        // hasse is a transitive reduction: no arc implied by two others
        std::set<std::pair<int, int>> arcs(r.hasse.begin(), r.hasse.end());
        for (auto [a, b] : arcs)
            for (auto [c, d] : arcs)
                if (b == c) CHECK(arcs.count({a, d}) == 0);
    }
}
