#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace asca {

// An elementary CA rule as its Wolfram code. Bit k of the code is the new
// center value for the neighborhood (left, center, right) with
// k = 4*left + 2*center + right.
class WolframRule {
public:
    constexpr WolframRule() = default;
    constexpr explicit WolframRule(std::uint8_t code) : code_(code) {}

    static WolframRule from_bits(const std::array<bool, 8>& bits);

    constexpr std::uint8_t code() const { return code_; }
    constexpr bool bit(int k) const { return (code_ >> k) & 1U; }
    std::array<bool, 8> bits() const;

    friend constexpr bool operator==(WolframRule, WolframRule) = default;
    friend constexpr auto operator<=>(WolframRule a, WolframRule b) { return a.code_ <=> b.code_; }

private:
    std::uint8_t code_ = 0;
};

constexpr bool local_update(WolframRule rule, bool left, bool center, bool right) {
    return rule.bit(4 * int(left) + 2 * int(center) + int(right));
}

// Swap the roles of the left and right neighbor.
WolframRule mirror(WolframRule rule);

// Swap 0 and 1 in both the neighborhood and the result.
WolframRule complement(WolframRule rule);

// Equivalence class of a rule under mirror and complement.
struct FamilyRecord {
    WolframRule canonical;
    std::vector<WolframRule> members;  // sorted ascending, canonical first

    bool contains(WolframRule r) const;
    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

FamilyRecord family_of(WolframRule rule);

// All 88 families, sorted by canonical code.
std::vector<FamilyRecord> enumerate_families();

}  // namespace asca
