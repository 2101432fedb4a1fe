#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asca/engine.hpp"

namespace asca {

using BigInt = boost::multiprecision::cpp_int;

enum class Parity { even, odd };

struct PermutationInfo {
    bool bijective = false;
    std::optional<Parity> parity;            // set only when bijective
    std::map<std::size_t, std::size_t> cycle_type;  // cycle length -> count
};

PermutationInfo permutation_info(const StateMap& map);

struct MultiplicityProfile {
    std::vector<std::size_t> sharp;          // sharp[w] = |{v : f(v) = w}|
    std::map<std::size_t, std::size_t> at;   // k -> |{w : sharp[w] = k}|, zero counts omitted

    std::size_t at_count(std::size_t k) const {
        const auto it = at.find(k);
        return it == at.end() ? 0 : it->second;
    }
    std::size_t image_size() const { return sharp.size() - at_count(0); }
    // sum over w of floor(sharp[w] / 2)
    std::size_t pairable() const;
};

MultiplicityProfile multiplicity_profile(const std::vector<State>& table);
inline MultiplicityProfile multiplicity_profile(const StateMap& map) {
    return multiplicity_profile(map.table());
}

BigInt factorial(std::size_t k);

// Deterministic incremental Schreier-Sims over the base 0, 1, ..., degree-1.
// Permutations are tables p[x]; products act left to right.
class StabilizerChain {
public:
    explicit StabilizerChain(std::size_t degree);

    std::size_t degree() const { return degree_; }
    void add_generator(const std::vector<State>& perm);
    bool contains(std::vector<State> perm) const;
    BigInt order() const;
    // Orbit length of base point k under the stabilizer of 0..k-1.
    std::size_t orbit_size(std::size_t k) const;

private:
    using Perm = std::vector<State>;
    struct Level {
        std::vector<Perm> strong;         // generators added at this level
        std::vector<int> rep;             // rep[j] indexes reps/inverse, -1 if unreached
        std::vector<Perm> reps;           // maps k to j
        std::vector<Perm> inverse;
        std::vector<State> orbit;         // reached points in discovery order
    };

    bool sifts(std::size_t k, Perm perm) const;
    void add(std::size_t k, const Perm& perm);
    void extend(std::size_t k, const Perm& perm);

    std::size_t degree_;
    std::vector<Level> levels_;
};

enum class Classification { symmetric, alternating, other };
std::string to_string(Classification c);

struct GroupReport {
    std::size_t generator_count = 0;
    std::size_t degree = 0;
    BigInt order = 1;
    Classification classification = Classification::other;
};

struct AlgebraOptions {
    // 2^7 points; long runs raise it.
    std::size_t degree_cap = 128;
};

// Throws NonBijectiveGenerator, DimensionMismatch, DegreeTooLarge.
GroupReport group_order(const std::vector<StateMap>& generators, const AlgebraOptions& opts = {});
bool contains_alternating(const std::vector<StateMap>& generators, const AlgebraOptions& opts = {});

// no_eq: bijective words over {<, >} only. all_bijective: every rule of AS_n
// with a bijective map.
enum class GeneratorSet { no_eq, all_bijective };
std::string to_string(GeneratorSet set);

struct RuleMaps {
    std::vector<TemporalRule> rules;
    std::vector<StateMap> maps;
};

RuleMaps generator_rules(WolframRule eca, int n, GeneratorSet set);

// The first triple, in lexicographic index order over generator_rules(all_bijective),
// whose group has order at least (2^n)!/2. `budget` caps the number of triples tried.
std::optional<std::array<TemporalRule, 3>> minimal_generating_triples(WolframRule eca, int n,
                                                                      std::size_t budget,
                                                                      const AlgebraOptions& opts = {});

}  // namespace asca
