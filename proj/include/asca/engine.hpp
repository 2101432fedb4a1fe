#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asca/rulespace.hpp"
#include "asca/temporal.hpp"

namespace asca {

using State = std::uint32_t;

// State maps hold 2^n entries; beyond this the tables stop being practical.
inline constexpr int kMaxMapCells = 24;

// n cells c_0..c_{n-1}; c_0 is the most significant bit of value().
class Configuration {
public:
    Configuration(int n, std::uint64_t value);

    // Bit string, most significant (cell 0) first.
    static Configuration parse_bits(std::string_view bits);

    int cells() const { return n_; }
    std::uint64_t value() const { return value_; }
    bool cell(int i) const { return (value_ >> (n_ - 1 - i)) & 1U; }
    std::string str() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int n_;
    std::uint64_t value_;
};

// A rule and schedule compiled to per-layer bit masks; one call to apply() is
// one sweep. Every cell of a layer reads the state as it was when the layer
// started; later layers see earlier layers' writes.
class SweepPlan {
public:
    SweepPlan(WolframRule eca, const UpdateSchedule& schedule);
    SweepPlan(WolframRule eca, const TemporalRule& rule);

    int cells() const { return n_; }
    std::uint64_t apply(std::uint64_t x) const { return apply_layers(x, masks_.size()); }
    std::uint64_t apply_layers(std::uint64_t x, std::size_t layer_count) const;

private:
    std::uint64_t layer_step(std::uint64_t x, std::uint64_t mask) const;

    WolframRule eca_;
    int n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> masks_;
};

// The total function on {0..2^n-1} induced by one sweep.
class StateMap {
public:
    StateMap(int n, std::vector<State> table);
    static StateMap identity(int n);

    int cells() const { return n_; }
    std::size_t size() const { return table_.size(); }
    State operator[](State v) const { return table_[v]; }
    const std::vector<State>& table() const { return table_; }

    bool is_bijective() const;
    bool is_identity() const;
    // Throws NonBijectiveGenerator unless bijective.
    StateMap inverse() const;

    friend bool operator==(const StateMap&, const StateMap&) = default;

private:
    int n_;
    std::vector<State> table_;
};

struct OrbitInfo {
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::vector<State> visited;  // in visiting order, start state first
};

Configuration sweep(WolframRule eca, const TemporalRule& rule, const Configuration& config);
Configuration sweep(WolframRule eca, const UpdateSchedule& schedule, const Configuration& config);

// Only the first `layer_count` layers of the sweep.
Configuration sweep_partial(WolframRule eca, const UpdateSchedule& schedule,
                            const Configuration& config, std::size_t layer_count);

Configuration iterate(WolframRule eca, const TemporalRule& rule, const Configuration& config,
                      std::uint64_t tau);

// rules[0] is applied first.
Configuration apply_sequence(WolframRule eca, std::span<const TemporalRule> rules,
                             const Configuration& config);

StateMap state_map(WolframRule eca, const TemporalRule& rule, int n);
StateMap state_map(WolframRule eca, const TemporalRule& rule);
StateMap state_map(WolframRule eca, const UpdateSchedule& schedule);
StateMap state_map(const SweepPlan& plan);

// result[v] = second[first[v]].
StateMap compose(const StateMap& first, const StateMap& second);

// Composition of the maps of `rules`, rules[0] first.
StateMap sequence_map(WolframRule eca, std::span<const TemporalRule> rules, int n);

OrbitInfo orbit(const StateMap& map, State v);

}  // namespace asca
