#include "asca/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "asca/error.hpp"

namespace asca {

PermutationInfo permutation_info(const StateMap& map) {
    PermutationInfo info;
    info.bijective = map.is_bijective();
    if (!info.bijective) return info;

    const auto& table = map.table();
    std::vector<bool> seen(table.size(), false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < table.size(); ++start) {
        if (seen[start]) continue;
        std::size_t length = 0;
        for (State x = State(start); !seen[x]; x = table[x]) {
            seen[x] = true;
            ++length;
        }
        ++info.cycle_type[length];
        ++cycles;
    }
    info.parity = (table.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
    return info;
}

std::size_t MultiplicityProfile::pairable() const {
    std::size_t total = 0;
    for (auto s : sharp) total += s / 2;
    return total;
}

MultiplicityProfile multiplicity_profile(const std::vector<State>& table) {
    MultiplicityProfile profile;
    profile.sharp.assign(table.size(), 0);
    for (State w : table) {
        if (w >= table.size()) throw BadParams("table value out of range");
        ++profile.sharp[w];
    }
    for (auto s : profile.sharp) ++profile.at[s];
    std::size_t weighted = 0;
    for (const auto& [k, count] : profile.at) weighted += k * count;
    if (weighted != table.size()) throw Error("multiplicity profile does not sum to 2^n");
    return profile;
}

BigInt factorial(std::size_t k) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= k; ++i) out *= i;
    return out;
}

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree), levels_(degree) {
    Perm id(degree);
    std::iota(id.begin(), id.end(), State{0});
    for (std::size_t k = 0; k < degree; ++k) {
        auto& level = levels_[k];
        level.rep.assign(degree, -1);
        level.rep[k] = 0;
        level.reps.push_back(id);
        level.inverse.push_back(id);
        level.orbit.push_back(State(k));
    }
}

namespace {

// (a b)[x] = b[a[x]]
std::vector<State> multiply(const std::vector<State>& a, const std::vector<State>& b) {
    std::vector<State> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
    return out;
}

std::vector<State> invert(const std::vector<State>& a) {
    std::vector<State> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = State(x);
    return out;
}

bool is_identity(const std::vector<State>& a) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] != x) return false;
    }
    return true;
}

}  // namespace

bool StabilizerChain::sifts(std::size_t k, Perm perm) const {
    for (std::size_t i = k; i < degree_; ++i) {
        const State j = perm[i];
        if (j == i) continue;
        const int r = levels_[i].rep[j];
        if (r < 0) return false;
        perm = multiply(perm, levels_[i].inverse[std::size_t(r)]);
    }
    return true;
}

bool StabilizerChain::contains(std::vector<State> perm) const {
    if (perm.size() != degree_) throw BadParams("permutation degree mismatch");
    return sifts(0, std::move(perm));
}

void StabilizerChain::add_generator(const std::vector<State>& perm) {
    if (perm.size() != degree_) throw BadParams("permutation degree mismatch");
    if (degree_ == 0 || is_identity(perm)) return;
    add(0, perm);
}

// perm fixes 0..k-1.
void StabilizerChain::add(std::size_t k, const Perm& perm) {
    if (sifts(k, perm)) return;
    auto& level = levels_[k];
    level.strong.push_back(perm);
    const std::size_t known = level.orbit.size();
    for (std::size_t i = 0; i < known; ++i) {
        const State j = level.orbit[i];
        extend(k, multiply(levels_[k].reps[std::size_t(levels_[k].rep[j])], perm));
    }
}

// perm lies in the stabilizer of 0..k-1.
void StabilizerChain::extend(std::size_t k, const Perm& perm) {
    auto& level = levels_[k];
    const State j = perm[k];
    if (level.rep[j] < 0) {
        level.rep[j] = int(level.reps.size());
        level.reps.push_back(perm);
        level.inverse.push_back(invert(perm));
        level.orbit.push_back(j);
        for (std::size_t s = 0; s < levels_[k].strong.size(); ++s) {
            extend(k, multiply(perm, levels_[k].strong[s]));
        }
    } else {
        Perm fixed = multiply(perm, level.inverse[std::size_t(level.rep[j])]);
        if (k + 1 < degree_ && !is_identity(fixed)) add(k + 1, fixed);
    }
}

std::size_t StabilizerChain::orbit_size(std::size_t k) const { return levels_.at(k).orbit.size(); }

BigInt StabilizerChain::order() const {
    BigInt out = 1;
    for (const auto& level : levels_) out *= level.orbit.size();
    return out;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::symmetric: return "symmetric";
        case Classification::alternating: return "alternating";
        case Classification::other: return "other";
    }
    return "other";
}

std::string to_string(GeneratorSet set) {
    return set == GeneratorSet::no_eq ? "no_eq" : "all_bijective";
}

namespace {

std::size_t check_generators(const std::vector<StateMap>& generators, const AlgebraOptions& opts) {
    if (generators.empty()) throw BadParams("at least one generator is required");
    const int n = generators.front().cells();
    for (const auto& g : generators) {
        if (g.cells() != n) throw DimensionMismatch(n, g.cells());
        if (!g.is_bijective()) throw NonBijectiveGenerator("generator is not a bijection");
    }
    const std::size_t degree = generators.front().size();
    if (degree > opts.degree_cap) throw DegreeTooLarge(degree, opts.degree_cap);
    return degree;
}

}  // namespace

GroupReport group_order(const std::vector<StateMap>& generators, const AlgebraOptions& opts) {
    const std::size_t degree = check_generators(generators, opts);
    StabilizerChain chain(degree);
    for (const auto& g : generators) chain.add_generator(g.table());

    GroupReport report;
    report.generator_count = generators.size();
    report.degree = degree;
    report.order = chain.order();
    const BigInt full = factorial(degree);
    if (report.order == full) {
        report.classification = Classification::symmetric;
    } else if (degree >= 2 && report.order * 2 == full) {
        report.classification = Classification::alternating;
    }
    return report;
}

bool contains_alternating(const std::vector<StateMap>& generators, const AlgebraOptions& opts) {
    const GroupReport report = group_order(generators, opts);
    return report.order * 2 >= factorial(report.degree);
}

RuleMaps generator_rules(WolframRule eca, int n, GeneratorSet set) {
    if (n < 3 || n > kMaxMapCells) throw BadParams("generator sets need 3 <= n <= 24");
    RuleMaps out;
    const auto candidates = set == GeneratorSet::no_eq ? bijective_subset(n) : enumerate_rules(n);
    for (const auto& rule : candidates) {
        StateMap map = state_map(eca, rule);
        if (!map.is_bijective()) continue;
        out.rules.push_back(rule);
        out.maps.push_back(std::move(map));
    }
    return out;
}

std::optional<std::array<TemporalRule, 3>> minimal_generating_triples(WolframRule eca, int n,
                                                                      std::size_t budget,
                                                                      const AlgebraOptions& opts) {
    const std::size_t degree = std::size_t{1} << n;
    if (degree > opts.degree_cap) throw DegreeTooLarge(degree, opts.degree_cap);
    const RuleMaps gens = generator_rules(eca, n, GeneratorSet::all_bijective);
    const BigInt target = factorial(degree) / 2;
    const std::size_t m = gens.maps.size();
    std::size_t tried = 0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                if (tried++ >= budget) return std::nullopt;
                StabilizerChain chain(degree);
                chain.add_generator(gens.maps[a].table());
                chain.add_generator(gens.maps[b].table());
                chain.add_generator(gens.maps[c].table());
                if (chain.order() >= target) {
                    return std::array<TemporalRule, 3>{gens.rules[a], gens.rules[b], gens.rules[c]};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace asca
