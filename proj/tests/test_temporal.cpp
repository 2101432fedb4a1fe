#include <doctest.h>

#include <random>
#include <set>

#include "asca/engine.hpp"
#include "asca/error.hpp"
#include "asca/temporal.hpp"
#include "oracles.hpp"

using namespace asca;

TEST_CASE("parse") {
    CHECK_THROWS_AS(TemporalRule::parse("\xE2\x89\xA1<\xE2\x89\xA1"), IllFormed);
    CHECK_THROWS_AS(TemporalRule::parse("=<="), IllFormed);
    CHECK_THROWS_AS(TemporalRule::parse("<<<"), IllFormed);
    CHECK_THROWS_AS(TemporalRule::parse("<>"), InvalidWord);
    CHECK_THROWS_AS(TemporalRule::parse("<x>"), InvalidWord);
    CHECK(TemporalRule::parse("\xE2\x89\xA1\xE2\x89\xA1\xE2\x89\xA1").is_synchronous());
    CHECK(TemporalRule::parse("<\xE2\x89\xA1>>").str() == "<=>>");
    CHECK(TemporalRule::parse("<=>>").has_equal());
}

TEST_CASE("count_rules matches brute force") {
    for (int n = 3; n <= 8; ++n) {
        std::uint64_t words = 1;
        for (int i = 0; i < n; ++i) words *= 3;
        std::uint64_t valid = 0;
        for (std::uint64_t idx = 0; idx < words; ++idx) {
            std::string w;
            for (std::uint64_t x = idx, i = 0; i < std::uint64_t(n); ++i, x /= 3) w.push_back("<=>"[x % 3]);
            // Syntactic criterion and acyclicity agree.
            CHECK(oracle::word_valid(w) == oracle::word_acyclic(w));
            valid += oracle::word_valid(w);
        }
        CHECK(count_rules(n) == valid);
        CHECK(enumerate_rules(n).size() == valid);
    }
    CHECK(count_rules(10) == 57003);
}

TEST_CASE("realizable words are exactly the valid ones") {
    for (int n = 3; n <= 6; ++n) {
        const auto words = oracle::labelling_per_word(n);
        CHECK(words.size() == count_rules(n));
        for (const auto& [w, label] : words) CHECK(oracle::word_valid(w));
    }
}

TEST_CASE("schedule") {
    CHECK(schedule(TemporalRule::parse("<=>>")).str() == "(1,2|3|0)");
    CHECK(schedule(TemporalRule::parse("<><>")).str() == "(1,3|0,2)");
    CHECK(schedule(TemporalRule::parse(">=><")).str() == "(0|1,2|3)");
    CHECK(schedule(TemporalRule::parse("====")).layer_count() == 1);
}

TEST_CASE("schedule is consistent with the word") {
    for (int n = 3; n <= 7; ++n) {
        for (const auto& rule : enumerate_rules(n)) {
            const UpdateSchedule s = schedule(rule);
            CHECK(from_partition(s) == rule);
            for (int i = 0; i < n; ++i) {
                const int a = s.layer_of(i);
                const int b = s.layer_of((i + 1) % n);
                const Order want = a < b ? Order::Greater : a == b ? Order::Equal : Order::Less;
                CHECK(rule[i] == want);
            }
        }
    }
}

TEST_CASE("from_partition") {
    CHECK(from_partition(UpdateSchedule(3, {{1}, {0}, {2}})).str() == "<><");
    CHECK(from_partition(UpdateSchedule(3, {{0}, {1}, {2}})).str() == ">><");
    CHECK(from_partition(UpdateSchedule(5, {{0, 1, 2, 3, 4}})).str() == "=====");
    CHECK_THROWS_AS(UpdateSchedule(3, {{0}, {1}}), BadParams);
    CHECK_THROWS_AS(UpdateSchedule(3, {{0, 1}, {1, 2}}), BadParams);
    CHECK_THROWS_AS(UpdateSchedule(3, {{0, 1, 2}, {}}), BadParams);
}

TEST_CASE("from_partition ignores order-preserving relabelling") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + int(rng() % 5);
        std::vector<int> label(static_cast<std::size_t>(n));
        for (auto& l : label) l = int(rng() % 4);
        std::vector<int> stretched(label);
        for (auto& l : stretched) l = 3 * l + 10;
        CHECK(from_partition(UpdateSchedule::from_labels(label)) ==
              from_partition(UpdateSchedule::from_labels(stretched)));
    }
}

TEST_CASE("partitions with equal sign triples induce equal maps") {
    std::mt19937 rng(11);
    for (int n = 4; n <= 7; ++n) {
        const auto partitions = oracle::ordered_partitions(n);
        int pairs = 0;
        for (int trial = 0; trial < 4000 && pairs < 50; ++trial) {
            const auto& a = partitions[rng() % partitions.size()];
            const auto& b = partitions[rng() % partitions.size()];
            const auto sa = UpdateSchedule::from_labels(a);
            const auto sb = UpdateSchedule::from_labels(b);
            if (sa == sb || sign_triples(sa) != sign_triples(sb)) continue;
            ++pairs;
            for (int code : {57, 105}) {
                CHECK(state_map(WolframRule(std::uint8_t(code)), sa) == state_map(WolframRule(std::uint8_t(code)), sb));
            }
        }
        CHECK(pairs > 0);
    }
}

TEST_CASE("sign triples cover the nine combinations") {
    std::set<std::pair<int, int>> seen;
    for (int n = 3; n <= 6; ++n) {
        for (const auto& label : oracle::ordered_partitions(n)) {
            for (const auto& t : sign_triples(UpdateSchedule::from_labels(label))) seen.emplace(t.left_sign, t.right_sign);
        }
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("enumeration order and ranges") {
    const auto rules = enumerate_rules(3);
    REQUIRE(rules.size() == 13);
    CHECK(std::is_sorted(rules.begin(), rules.end()));
    CHECK(std::count_if(rules.begin(), rules.end(), [](const auto& r) { return r.is_synchronous(); }) == 1);
    for (const auto& r : rules) CHECK(TemporalRule::parse(r.str()) == r);

    // Disjoint ranges concatenate to the full stream.
    const int n = 6;
    const std::uint64_t total = RuleStream::word_count(n);
    std::vector<TemporalRule> joined;
    for (std::uint64_t begin = 0; begin < total; begin += 100) {
        RuleStream s(n, begin, begin + 100);
        while (auto r = s.next()) joined.push_back(*r);
    }
    CHECK(joined == enumerate_rules(n));
}

TEST_CASE("bijective_subset") {
    CHECK(bijective_subset(3).size() == 6);
    CHECK(bijective_subset(10).size() == 1022);
    for (const auto& r : bijective_subset(6)) CHECK_FALSE(r.has_equal());
}
