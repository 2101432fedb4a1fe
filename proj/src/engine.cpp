#include "asca/engine.hpp"

#include <algorithm>

#include "asca/error.hpp"

namespace asca {

namespace {

void check_cells(int n) {
    if (n < 3 || n > 64) {
        throw BadParams("cell count must be in 3..64, got " + std::to_string(n));
    }
}

void check_map_cells(int n) {
    if (n < 3 || n > kMaxMapCells) {
        throw BadParams("state maps need 3 <= n <= " + std::to_string(kMaxMapCells) + ", got " +
                        std::to_string(n));
    }
}

}  // namespace

Configuration::Configuration(int n, std::uint64_t value) : n_(n), value_(value) {
    check_cells(n);
    if (n < 64 && (value >> n) != 0) {
        throw BadParams("configuration value " + std::to_string(value) + " does not fit in " +
                        std::to_string(n) + " cells");
    }
}

Configuration Configuration::parse_bits(std::string_view bits) {
    std::uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw BadParams("configuration must be a bit string, got \"" + std::string(bits) + "\"");
        }
        value = (value << 1) | std::uint64_t(c == '1');
    }
    return Configuration(int(bits.size()), value);
}

std::string Configuration::str() const {
    std::string out(std::size_t(n_), '0');
    for (int i = 0; i < n_; ++i) {
        if (cell(i)) out[std::size_t(i)] = '1';
    }
    return out;
}

SweepPlan::SweepPlan(WolframRule eca, const UpdateSchedule& schedule)
    : eca_(eca),
      n_(schedule.cells()),
      full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
      masks_(schedule.masks()) {
    check_cells(n_);
}

SweepPlan::SweepPlan(WolframRule eca, const TemporalRule& rule)
    : SweepPlan(eca, schedule(rule)) {}

std::uint64_t SweepPlan::layer_step(std::uint64_t x, std::uint64_t mask) const {
    // Align each cell's left and right neighbor onto the cell's own bit.
    const std::uint64_t left = ((x >> 1) | (x << (n_ - 1))) & full_;
    const std::uint64_t right = ((x << 1) | (x >> (n_ - 1))) & full_;
    std::uint64_t out = 0;
    for (int k = 0; k < 8; ++k) {
        if (!eca_.bit(k)) continue;
        out |= ((k & 4) ? left : ~left) & ((k & 2) ? x : ~x) & ((k & 1) ? right : ~right);
    }
    return (x & ~mask) | (out & mask);
}

std::uint64_t SweepPlan::apply_layers(std::uint64_t x, std::size_t layer_count) const {
    layer_count = std::min(layer_count, masks_.size());
    for (std::size_t k = 0; k < layer_count; ++k) {
        x = layer_step(x, masks_[k]);
    }
    return x;
}

StateMap::StateMap(int n, std::vector<State> table) : n_(n), table_(std::move(table)) {
    check_map_cells(n);
    if (table_.size() != (std::size_t{1} << n)) {
        throw BadParams("state map for n=" + std::to_string(n) + " needs " +
                        std::to_string(std::size_t{1} << n) + " entries");
    }
    for (State s : table_) {
        if (s >= table_.size()) {
            throw BadParams("state map entry " + std::to_string(s) + " out of range");
        }
    }
}

StateMap StateMap::identity(int n) {
    check_map_cells(n);
    std::vector<State> table(std::size_t{1} << n);
    for (std::size_t v = 0; v < table.size(); ++v) table[v] = State(v);
    return StateMap(n, std::move(table));
}

bool StateMap::is_bijective() const {
    std::vector<bool> hit(table_.size(), false);
    for (State s : table_) {
        if (hit[s]) return false;
        hit[s] = true;
    }
    return true;
}

bool StateMap::is_identity() const {
    for (std::size_t v = 0; v < table_.size(); ++v) {
        if (table_[v] != v) return false;
    }
    return true;
}

StateMap StateMap::inverse() const {
    if (!is_bijective()) {
        throw NonBijectiveGenerator("state map is not a bijection");
    }
    std::vector<State> inv(table_.size());
    for (std::size_t v = 0; v < table_.size(); ++v) inv[table_[v]] = State(v);
    return StateMap(n_, std::move(inv));
}

Configuration sweep(WolframRule eca, const TemporalRule& rule, const Configuration& config) {
    return sweep(eca, schedule(rule), config);
}

Configuration sweep(WolframRule eca, const UpdateSchedule& schedule, const Configuration& config) {
    if (schedule.cells() != config.cells()) {
        throw DimensionMismatch(schedule.cells(), config.cells());
    }
    return Configuration(config.cells(), SweepPlan(eca, schedule).apply(config.value()));
}

Configuration sweep_partial(WolframRule eca, const UpdateSchedule& schedule,
                            const Configuration& config, std::size_t layer_count) {
    if (schedule.cells() != config.cells()) {
        throw DimensionMismatch(schedule.cells(), config.cells());
    }
    return Configuration(config.cells(),
                         SweepPlan(eca, schedule).apply_layers(config.value(), layer_count));
}

Configuration iterate(WolframRule eca, const TemporalRule& rule, const Configuration& config,
                      std::uint64_t tau) {
    if (rule.size() != config.cells()) {
        throw DimensionMismatch(rule.size(), config.cells());
    }
    const SweepPlan plan(eca, rule);
    std::uint64_t x = config.value();
    for (std::uint64_t t = 0; t < tau; ++t) x = plan.apply(x);
    return Configuration(config.cells(), x);
}

Configuration apply_sequence(WolframRule eca, std::span<const TemporalRule> rules,
                             const Configuration& config) {
    std::uint64_t x = config.value();
    for (const auto& rule : rules) {
        if (rule.size() != config.cells()) {
            throw DimensionMismatch(config.cells(), rule.size());
        }
        x = SweepPlan(eca, rule).apply(x);
    }
    return Configuration(config.cells(), x);
}

StateMap state_map(const SweepPlan& plan) {
    const int n = plan.cells();
    check_map_cells(n);
    std::vector<State> table(std::size_t{1} << n);
    for (std::size_t v = 0; v < table.size(); ++v) {
        table[v] = State(plan.apply(v));
    }
    return StateMap(n, std::move(table));
}

StateMap state_map(WolframRule eca, const TemporalRule& rule, int n) {
    if (rule.size() != n) {
        throw DimensionMismatch(n, rule.size());
    }
    return state_map(SweepPlan(eca, rule));
}

StateMap state_map(WolframRule eca, const TemporalRule& rule) {
    return state_map(SweepPlan(eca, rule));
}

StateMap state_map(WolframRule eca, const UpdateSchedule& schedule) {
    return state_map(SweepPlan(eca, schedule));
}

StateMap compose(const StateMap& first, const StateMap& second) {
    if (first.cells() != second.cells()) {
        throw DimensionMismatch(first.cells(), second.cells());
    }
    std::vector<State> table(first.size());
    for (std::size_t v = 0; v < table.size(); ++v) {
        table[v] = second[first[State(v)]];
    }
    return StateMap(first.cells(), std::move(table));
}

StateMap sequence_map(WolframRule eca, std::span<const TemporalRule> rules, int n) {
    StateMap out = StateMap::identity(n);
    for (const auto& rule : rules) {
        out = compose(out, state_map(eca, rule, n));
    }
    return out;
}

OrbitInfo orbit(const StateMap& map, State v) {
    if (v >= map.size()) {
        throw BadParams("state " + std::to_string(v) + " out of range");
    }
    // Position of each state on the walk, 0 meaning unvisited.
    std::vector<std::size_t> position(map.size(), 0);
    OrbitInfo info;
    State x = v;
    while (position[x] == 0) {
        info.visited.push_back(x);
        position[x] = info.visited.size();
        x = map[x];
    }
    info.preperiod = position[x] - 1;
    info.period = info.visited.size() - info.preperiod;
    return info;
}

}  // namespace asca
