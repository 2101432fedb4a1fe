#include <doctest.h>

#include <set>

#include "asca/rulespace.hpp"

using namespace asca;

TEST_CASE("local update follows the Wolfram code") {
    const WolframRule r57(57);
    CHECK_FALSE(local_update(r57, true, true, true));
    for (bool c : {false, true}) CHECK(local_update(r57, false, c, true) == c);
    for (int k = 0; k < 8; ++k) {
        CHECK(local_update(WolframRule(204), k & 4, k & 2, k & 1) == bool(k & 2));
    }
}

TEST_CASE("bits round trip") {
    for (int code = 0; code < 256; ++code) {
        const WolframRule r(static_cast<std::uint8_t>(code));
        CHECK(WolframRule::from_bits(r.bits()) == r);
    }
}

TEST_CASE("mirror and complement") {
    CHECK(mirror(WolframRule(2)).code() == 16);
    CHECK(mirror(WolframRule(204)).code() == 204);
    CHECK(complement(WolframRule(0)).code() == 255);
    CHECK(complement(WolframRule(57)).code() == 99);
    // Both are involutions and commute.
    for (int code = 0; code < 256; ++code) {
        const WolframRule r(static_cast<std::uint8_t>(code));
        CHECK(mirror(mirror(r)) == r);
        CHECK(complement(complement(r)) == r);
        CHECK(mirror(complement(r)) == complement(mirror(r)));
    }
}

TEST_CASE("family_of") {
    const auto f57 = family_of(WolframRule(57));
    CHECK(f57.canonical.code() == 57);
    CHECK(f57.members == std::vector<WolframRule>{WolframRule(57), WolframRule(99)});

    const auto f30 = family_of(WolframRule(149));
    CHECK(f30.canonical.code() == 30);
    std::set<int> codes;
    for (auto m : f30.members) codes.insert(m.code());
    CHECK(codes == std::set<int>{30, 86, 135, 149});

    const auto f105 = family_of(WolframRule(105));
    CHECK(f105.members.size() == 1);
    CHECK(f105.contains(WolframRule(105)));
}

TEST_CASE("enumerate_families partitions all 256 rules") {
    const auto families = enumerate_families();
    CHECK(families.size() == 88);
    std::set<int> seen;
    for (const auto& f : families) {
        CHECK(f.canonical == f.members.front());
        CHECK(std::is_sorted(f.members.begin(), f.members.end()));
        for (auto m : f.members) {
            CHECK(seen.insert(m.code()).second);
            CHECK(family_of(m) == f);
        }
    }
    CHECK(seen.size() == 256);
}
