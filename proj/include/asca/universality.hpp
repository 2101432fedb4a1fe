#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asca/engine.hpp"
#include "asca/parallel.hpp"
#include "asca/rulespace.hpp"

namespace asca {

using BigInt = boost::multiprecision::cpp_int;

struct UniversalityOptions {
    // The synchronous word =^n belongs to AS_n; clearing this flag drops it
    // for sensitivity checks.
    bool include_synchronous = true;
    int threads = default_threads();
};

// Reach counts |union over rules of orbit(v)| with tau >= 1, i.e. every state
// visited after at least one sweep.
struct ReachReport {
    WolframRule eca;
    int n = 0;
    std::vector<std::size_t> per_source;
    std::size_t max_count = 0;
    std::size_t min_count = 0;
    State max_witness = 0;  // smallest v attaining max_count
    State min_witness = 0;  // smallest v attaining min_count

    std::size_t universe() const { return std::size_t{1} << n; }
    bool property_o_holds() const { return max_count == universe(); }
    bool property_i_holds() const { return min_count == universe(); }
};

std::vector<State> reach_set(WolframRule eca, int n, State v, const UniversalityOptions& opts = {});

// One pass computes both the (o) maximum and the (i) minimum.
ReachReport reach_report(WolframRule eca, int n, const UniversalityOptions& opts = {});
inline ReachReport property_o(WolframRule eca, int n, const UniversalityOptions& opts = {}) {
    return reach_report(eca, n, opts);
}
inline ReachReport property_i(WolframRule eca, int n, const UniversalityOptions& opts = {}) {
    return reach_report(eca, n, opts);
}

enum class TauProperty { ii, iii };

struct TauReport {
    TauProperty property = TauProperty::ii;
    std::uint64_t tau_max = 0;
    // (ii): smallest tau per source, nullopt when none <= tau_max.
    std::vector<std::optional<std::uint64_t>> per_source;
    // (ii): max over sources, present only when every source has a tau.
    std::optional<std::uint64_t> max_over_sources;
    // (iii): the joint tau.
    std::optional<std::uint64_t> joint;
};

inline constexpr std::uint64_t kDefaultTauMax = 1000;

// Smallest tau in 1..tau_max at which the rules of AS_n, each applied tau
// times to v, hit every state.
std::optional<std::uint64_t> property_ii_tau(WolframRule eca, int n, State v, std::uint64_t tau_max,
                                             const UniversalityOptions& opts = {});

// Property (ii) for every source at once.
TauReport property_ii_all(WolframRule eca, int n, std::uint64_t tau_max,
                          const UniversalityOptions& opts = {});

// Smallest tau valid for every source simultaneously.
TauReport property_iii_tau(WolframRule eca, int n, std::uint64_t tau_max,
                           const UniversalityOptions& opts = {});

// Why property (iv) fails at v: with PER the lcm of the cycle lengths through
// v (rules where v is periodic with period > 1), no such rule brings v back in
// PER-1 or PER+1 sweeps.
struct PeriodCertificate {
    State v = 0;
    BigInt per = 1;
    std::vector<BigInt> failing_taus;
    std::size_t cycling_rules = 0;
    std::size_t fixed_point_rules = 0;
    std::size_t preperiodic_rules = 0;
    // Every cycling rule misses v at PER-1 and PER+1 (vacuously true if none).
    bool verified = false;

    // The certificate rules out v -> v at PER+-1 for every rule of AS_n.
    bool blocks_identity_transduction() const {
        return verified && per > 1 && fixed_point_rules == 0;
    }
};

PeriodCertificate theorem2_certificate(WolframRule eca, int n, State v,
                                       const UniversalityOptions& opts = {});

struct UniversalityRow {
    WolframRule family;
    int n = 0;
    std::size_t o_max = 0;
    std::size_t i_min = 0;
};

std::vector<UniversalityRow> universality_table(const std::vector<WolframRule>& families,
                                                const std::vector<int>& n_list,
                                                const UniversalityOptions& opts = {});

// Columns: family,n,o_max,i_min
std::string to_csv(const std::vector<UniversalityRow>& rows);

}  // namespace asca
