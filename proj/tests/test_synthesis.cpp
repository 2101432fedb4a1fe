#include <doctest.h>

#include <numeric>
#include <random>

#include "asca/error.hpp"
#include "asca/synthesis.hpp"

using namespace asca;

namespace {

const WolframRule k57(57);

TemporalRule W(const char* s) { return TemporalRule::parse(s); }

std::vector<State> random_even_perm(std::mt19937& rng, std::size_t size) {
    std::vector<State> p(size);
    std::iota(p.begin(), p.end(), State{0});
    std::shuffle(p.begin(), p.end(), rng);
    if (permutation_info(StateMap(int(std::countr_zero(size)), p)).parity == Parity::odd) std::swap(p[0], p[1]);
    return p;
}

}  // namespace

TEST_CASE("builtin tables") {
    CHECK(builtin("INC", 3).table() == std::vector<State>{1, 2, 3, 4, 5, 6, 7, 0});
    const auto inc2 = builtin("INC'", 4);
    for (State v = 0; v < 15; ++v) CHECK(inc2[v] == (v + 1) % 15);
    CHECK(inc2[15] == 15);
    for (State v = 0; v < 16; ++v) {
        CHECK(builtin("COMP", 4)[v] == (v ^ 15U));
        CHECK(builtin("NEG", 4)[v] == ((16 - v) & 15U));
        const State a = v >> 2, b = v & 3;
        CHECK(builtin("MUL_KXK", 4)[v] == a * b);
        CHECK(builtin("mul-kxk", 4)[v] == a * b);
        CHECK(builtin("XOR1", 4)[v] == (a ^ b));
        CHECK(builtin("AND2", 4)[v] == (((a & b) << 2) | (a & b)));
        CHECK(builtin("SUB'", 4)[v] == ((a - b) & 3U));
    }
    CHECK(builtin("MUL_BY_3", 3).table() == std::vector<State>{0, 3, 6, 1, 4, 7, 2, 5});
    CHECK_THROWS_AS(builtin("MUL_KXK", 5), BadParams);
    CHECK_THROWS_AS(builtin("NOPE", 4), BadParams);
    for (const auto& name : builtin_names()) CHECK(builtin(name, 4).size() == 16);
}

TEST_CASE("representability verdicts") {
    const auto mul = representable(builtin("MUL_KXK", 4));
    CHECK(mul.verdict_case == VerdictCase::nonbijective_pass);
    CHECK(mul.pairable == 6);
    CHECK(mul.slack == 4);
    CHECK(mul.representable);

    const auto neg = representable(builtin("NEG", 4));
    CHECK(neg.verdict_case == VerdictCase::bijective_odd);
    CHECK_FALSE(neg.representable);

    const auto zero = representable(FunctionTable::constant(4, 0));
    CHECK(zero.verdict_case == VerdictCase::nonbijective_pass);
    CHECK(zero.pairable == 8);

    CHECK(representable(builtin("NEG", 3)).representable);
    CHECK_FALSE(representable(FunctionTable::constant(3, 0)).representable);
}

TEST_CASE("as* profile") {
    CHECK(as_star(4).str() == "<=>>");
    CHECK_THROWS_AS(as_star(3), BadParams);
    for (int n = 4; n <= 8; ++n) {
        const auto p = multiplicity_profile(state_map(k57, as_star(n)));
        const std::size_t unit = std::size_t{1} << (n - 3);
        CHECK(p.at_count(0) == unit);
        CHECK(p.at_count(2) == unit);
        CHECK(p.at_count(1) == 6 * unit);
    }
}

TEST_CASE("as* shrinks fresh images by 2^(n-3)") {
    for (int n = 4; n <= 5; ++n) {
        const auto star = state_map(k57, as_star(n));
        for (const auto& r : bijective_subset(n)) {
            const auto m = compose(state_map(k57, r), star);
            CHECK(multiplicity_profile(m).image_size() == (std::size_t{1} << n) - (std::size_t{1} << (n - 3)));
        }
    }
}

TEST_CASE("certificate verification") {
    CHECK(verify_certificate({k57, {W("<><"), W("<>>"), W("<>="), W("=><"), W(">><")}, builtin("INC", 3)}));
    CHECK(verify_certificate({k57, {W("<<>"), W("><>"), W("=<>"), W(">=<"), W(">><")}, builtin("MUL_BY_3", 3)}));
    CHECK_FALSE(verify_certificate({k57, {}, builtin("INC", 3)}));
    CHECK(verify_certificate({k57, {}, FunctionTable::identity(5)}));
}

TEST_CASE("synthesis returns verified certificates") {
    const auto inc = synthesize(k57, builtin("INC", 3));
    CHECK(inc.method == SynthesisMethod::bidirectional_search);
    CHECK(inc.certificate.rules.size() <= 12);
    CHECK(verify_certificate(inc.certificate));

    CHECK(synthesize(k57, FunctionTable::identity(6)).certificate.rules.empty());
    CHECK_THROWS_AS(synthesize(k57, builtin("NEG", 4)), NotRepresentable);
    CHECK_THROWS_AS(synthesize(k57, FunctionTable::constant(3, 1)), NotRepresentable);
    CHECK_THROWS_AS(synthesize(WolframRule(105), builtin("INC", 3)), BadParams);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const FunctionTable f(3, random_even_perm(rng, 8));
        CHECK(verify_certificate(synthesize(k57, f).certificate));
    }
}

TEST_CASE("constructive synthesis") {
    for (const char* name : {"MUL_KXK", "INC'", "COMP", "AND1"}) {
        const auto r = synthesize(k57, builtin(name, 4));
        CHECK(verify_certificate(r.certificate));
        CHECK(r.certificate.target == builtin(name, 4));
    }
    std::mt19937 rng(31);
    const FunctionTable f5(5, random_even_perm(rng, 32));
    const auto r5 = synthesize(k57, f5);
    CHECK(r5.method == SynthesisMethod::constructive);
    CHECK(verify_certificate(r5.certificate));

    std::vector<State> squash(32);
    for (State v = 0; v < 32; ++v) squash[v] = v / 2;
    const auto rs = synthesize(k57, FunctionTable(5, squash));
    CHECK(verify_certificate(rs.certificate));
    CHECK(rs.as_star_applications >= 1);
}

TEST_CASE("constructive plan") {
    const auto mul = theorem3_constructive_profile(builtin("MUL_KXK", 4));
    CHECK(mul.merges_needed == 9);
    CHECK(mul.first_merges == 2);
    CHECK(mul.applications == 8);
    CHECK(theorem3_constructive_profile(builtin("INC", 4)).applications == 0);
    CHECK(theorem3_constructive_profile(FunctionTable::from_map(state_map(k57, as_star(4)))).applications == 1);
    CHECK(theorem3_constructive_profile(builtin("NEG", 4)).applications == 0);
    std::vector<State> one_merge(16);
    std::iota(one_merge.begin(), one_merge.end(), State{0});
    one_merge[1] = 0;
    CHECK(representable(FunctionTable(4, one_merge)).verdict_case == VerdictCase::nonbijective_fail);
    CHECK_THROWS_AS(theorem3_constructive_profile(FunctionTable(4, one_merge)), NotRepresentable);
}

TEST_CASE("function closure at n = 3") {
    CHECK(function_closure_size(k57) == 40320);
    CHECK(function_closure_size(WolframRule(25)) == 22496);
    CHECK(function_closure_size(WolframRule(3)) == 39155);
}
