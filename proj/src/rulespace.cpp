#include "asca/rulespace.hpp"

#include <algorithm>

namespace asca {

WolframRule WolframRule::from_bits(const std::array<bool, 8>& bits) {
    std::uint8_t code = 0;
    for (int k = 0; k < 8; ++k) {
        code |= std::uint8_t(bits[k]) << k;
    }
    return WolframRule{code};
}

std::array<bool, 8> WolframRule::bits() const {
    std::array<bool, 8> out{};
    for (int k = 0; k < 8; ++k) {
        out[k] = bit(k);
    }
    return out;
}

WolframRule mirror(WolframRule rule) {
    std::array<bool, 8> out{};
    for (int l = 0; l < 2; ++l)
        for (int c = 0; c < 2; ++c)
            for (int r = 0; r < 2; ++r) {
                out[4 * l + 2 * c + r] = rule.bit(4 * r + 2 * c + l);
            }
    return WolframRule::from_bits(out);
}

WolframRule complement(WolframRule rule) {
    std::array<bool, 8> out{};
    for (int k = 0; k < 8; ++k) {
        out[k] = !rule.bit(7 - k);
    }
    return WolframRule::from_bits(out);
}

bool FamilyRecord::contains(WolframRule r) const {
    return std::binary_search(members.begin(), members.end(), r);
}

FamilyRecord family_of(WolframRule rule) {
    std::vector<WolframRule> members{rule, mirror(rule), complement(rule),
                                     complement(mirror(rule))};
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return FamilyRecord{members.front(), std::move(members)};
}

std::vector<FamilyRecord> enumerate_families() {
    std::vector<FamilyRecord> out;
    for (int code = 0; code < 256; ++code) {
        FamilyRecord fam = family_of(WolframRule(std::uint8_t(code)));
        if (fam.canonical.code() == code) {
            out.push_back(std::move(fam));
        }
    }
    return out;
}

}  // namespace asca
