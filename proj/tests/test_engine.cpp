#include <doctest.h>

#include <random>

#include "asca/engine.hpp"
#include "asca/error.hpp"
#include "oracles.hpp"

using namespace asca;

namespace {

TemporalRule W(const char* s) { return TemporalRule::parse(s); }
Configuration C(const char* s) { return Configuration::parse_bits(s); }

}  // namespace

TEST_CASE("configuration encoding") {
    const auto c = C("100");
    CHECK(c.value() == 4);
    CHECK(c.cell(0));
    CHECK_FALSE(c.cell(2));
    CHECK(c.str() == "100");
    CHECK_THROWS_AS(C("10a"), BadParams);
}

TEST_CASE("single sweeps") {
    const WolframRule r57(57);
    CHECK(sweep(r57, W("<><"), C("000")).str() == "011");
    CHECK(sweep(r57, W("<>="), C("000")).str() == "011");
    CHECK(sweep(r57, W("===="), C("0000")).str() == "1111");
    CHECK(iterate(r57, W("<><"), C("101"), 0).str() == "101");
    CHECK_THROWS_AS(sweep(r57, W("<><"), C("0000")), DimensionMismatch);
}

TEST_CASE("apply_sequence") {
    const WolframRule r57(57);
    const std::vector<TemporalRule> inc{W("<><"), W("<>>"), W("<>="), W("=><"), W(">><")};
    const auto inc_map = sequence_map(r57, inc, 3);
    for (State v = 0; v < 8; ++v) CHECK(inc_map[v] == ((v + 1) & 7));
    CHECK(apply_sequence(r57, inc, C("000")).str() == "001");

    const std::vector<TemporalRule> mul3{W("<<>"), W("><>"), W("=<>"), W(">=<"), W(">><")};
    const auto mul3_map = sequence_map(r57, mul3, 3);
    for (State v = 0; v < 8; ++v) CHECK(mul3_map[v] == ((3 * v) & 7));
    CHECK(apply_sequence(r57, mul3, C("010")).str() == "110");
}

TEST_CASE("state map and orbit") {
    const auto m = state_map(WolframRule(57), W("<><"));
    CHECK(m.table() == std::vector<State>{3, 5, 4, 6, 7, 2, 1, 0});
    CHECK(m.is_bijective());
    CHECK(compose(m, m.inverse()).is_identity());
    const auto o = orbit(m, 0);
    CHECK(o.period == 8);
    CHECK(o.preperiod == 0);
    CHECK(o.visited.front() == 0);
}

TEST_CASE("first layer of <=>>") {
    const auto s = schedule(W("<=>>"));
    CHECK(sweep_partial(WolframRule(57), s, C("0000"), 1).str() == "0110");
    CHECK(sweep_partial(WolframRule(57), s, C("0000"), 3) == sweep(WolframRule(57), s, C("0000")));
}

TEST_CASE("any labelling realizing a word induces the rule's map") {
    for (int n = 3; n <= 6; ++n) {
        const auto by_word = oracle::labelling_per_word(n);
        for (const auto& label : oracle::ordered_partitions(n)) {
            const auto rule = W(oracle::word_of(label).c_str());
            for (int code : {30, 57, 105, 110}) {
                const auto want = oracle::map_by_labels(code, label);
                const auto got = state_map(WolframRule(std::uint8_t(code)), rule);
                REQUIRE(got.size() == want.size());
                for (State v = 0; v < got.size(); ++v) CHECK(got[v] == want[v]);
            }
        }
        CHECK(by_word.size() == count_rules(n));
    }
}

TEST_CASE("sweep plan agrees with the oracle on random inputs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + int(rng() % 18);
        std::vector<int> label(static_cast<std::size_t>(n));
        for (auto& l : label) l = int(rng() % 5);
        const auto sched = UpdateSchedule::from_labels(label);
        const int code = int(rng() % 256);
        const std::uint64_t v = rng() & ((std::uint64_t{1} << n) - 1);
        const auto want = oracle::to_value(oracle::sweep_by_labels(code, label, oracle::to_cells(v, n)));
        CHECK(sweep(WolframRule(std::uint8_t(code)), sched, Configuration(n, v)).value() == want);
    }
}

TEST_CASE("compose order") {
    const WolframRule r57(57);
    const auto a = state_map(r57, W("<><"));
    const auto b = state_map(r57, W("<<>"));
    const auto ab = compose(a, b);
    for (State v = 0; v < 8; ++v) CHECK(ab[v] == b[a[v]]);
    const std::vector<TemporalRule> seq{W("<><"), W("<<>")};
    CHECK(sequence_map(r57, seq, 3) == ab);
}

TEST_CASE("non-bijective inverse throws") {
    const auto m = state_map(WolframRule(57), W("===="));
    CHECK_FALSE(m.is_bijective());
    CHECK_THROWS_AS(m.inverse(), NonBijectiveGenerator);
}
