#include "asca/synthesis.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "asca/error.hpp"

namespace asca {

FunctionTable::FunctionTable(int n, std::vector<State> table) : n_(n), table_(std::move(table)) {
    if (n < 3 || n > kMaxMapCells) throw BadParams("function tables need 3 <= n <= 24");
    if (table_.size() != (std::size_t{1} << n)) {
        throw BadParams("function table for n=" + std::to_string(n) + " needs " +
                        std::to_string(std::size_t{1} << n) + " entries, got " +
                        std::to_string(table_.size()));
    }
    for (State w : table_) {
        if (w >= table_.size()) throw BadParams("function value " + std::to_string(w) + " out of range");
    }
}

FunctionTable FunctionTable::identity(int n) {
    std::vector<State> table(std::size_t{1} << n);
    std::iota(table.begin(), table.end(), State{0});
    return FunctionTable(n, std::move(table));
}

FunctionTable FunctionTable::constant(int n, State value) {
    return FunctionTable(n, std::vector<State>(std::size_t{1} << n, value));
}

bool FunctionTable::is_bijective() const {
    std::vector<bool> hit(table_.size(), false);
    for (State w : table_) {
        if (hit[w]) return false;
        hit[w] = true;
    }
    return true;
}

bool FunctionTable::is_identity() const {
    for (std::size_t v = 0; v < table_.size(); ++v) {
        if (table_[v] != v) return false;
    }
    return true;
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) out.push_back(c == '-' ? '_' : char(std::toupper(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"ID",  "INC",  "INC'", "MUL_BY_2", "MUL_BY_3", "MUL_KXK", "OR1", "OR2", "AND1",
            "AND2", "XOR1", "XOR2", "SUB", "SUB'", "NEG", "COMP"};
}

FunctionTable builtin(std::string_view raw_name, int n, SubMode sub_mode) {
    const std::string name = normalize_name(raw_name);
    if (n < 3 || n > kMaxMapCells) throw BadParams("builtin functions need 3 <= n <= 24");
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t mask = size - 1;
    const int k = n / 2;
    const std::uint64_t low = (std::uint64_t{1} << k) - 1;

    const bool two_operand = name == "MUL_KXK" || name == "OR1" || name == "OR2" || name == "AND1" ||
                             name == "AND2" || name == "XOR1" || name == "XOR2" || name == "SUB" ||
                             name == "SUB'";
    if (two_operand && n % 2 != 0) throw BadParams(name + " needs an even n, got " + std::to_string(n));

    std::vector<State> table(size);
    for (std::uint64_t v = 0; v < size; ++v) {
        const std::uint64_t a = v >> k;
        const std::uint64_t b = v & low;
        std::uint64_t w = 0;
        if (name == "ID") {
            w = v;
        } else if (name == "INC") {
            w = (v + 1) & mask;
        } else if (name == "INC'") {
            w = v == mask ? v : (v + 1) % mask;
        } else if (name == "MUL_BY_2") {
            w = (2 * v) & mask;
        } else if (name == "MUL_BY_3") {
            w = (3 * v) & mask;
        } else if (name == "MUL_KXK") {
            w = a * b;
        } else if (name == "OR1" || name == "OR2") {
            w = a | b;
            if (name == "OR2") w |= w << k;
        } else if (name == "AND1" || name == "AND2") {
            w = a & b;
            if (name == "AND2") w |= w << k;
        } else if (name == "XOR1" || name == "XOR2") {
            w = a ^ b;
            if (name == "XOR2") w |= w << k;
        } else if (name == "SUB") {
            if (sub_mode == SubMode::literal) {
                w = (a - b) & mask;
            } else {
                w = (std::uint64_t(a < b) << k) | ((a - b) & low);
            }
        } else if (name == "SUB'") {
            w = (a - b) & low;
        } else if (name == "NEG") {
            w = (size - v) & mask;
        } else if (name == "COMP") {
            w = v ^ mask;
        } else {
            throw BadParams("unknown builtin function '" + std::string(raw_name) + "'");
        }
        table[v] = State(w);
    }
    return FunctionTable(n, std::move(table));
}

std::string to_string(VerdictCase c) {
    switch (c) {
        case VerdictCase::bijective_even: return "bijective_even";
        case VerdictCase::bijective_odd: return "bijective_odd";
        case VerdictCase::nonbijective_pass: return "nonbijective_pass";
        case VerdictCase::nonbijective_fail: return "nonbijective_fail";
    }
    return "";
}

std::string to_string(SynthesisMethod m) {
    switch (m) {
        case SynthesisMethod::trivial: return "trivial";
        case SynthesisMethod::bidirectional_search: return "bidirectional_search";
        case SynthesisMethod::constructive: return "constructive";
    }
    return "";
}

RepresentabilityVerdict representable(const FunctionTable& f) {
    RepresentabilityVerdict verdict;
    const int n = f.cells();
    if (f.is_bijective()) {
        const PermutationInfo info = permutation_info(StateMap(n, f.table()));
        const bool even = *info.parity == Parity::even;
        verdict.verdict_case = even ? VerdictCase::bijective_even : VerdictCase::bijective_odd;
        verdict.representable = n == 3 || even;
        return verdict;
    }
    const MultiplicityProfile profile = multiplicity_profile(f.table());
    verdict.pairable = profile.pairable();
    verdict.slack = std::int64_t(verdict.pairable) - std::int64_t(std::size_t{1} << (n - 3));
    verdict.verdict_case = verdict.slack >= 0 ? VerdictCase::nonbijective_pass : VerdictCase::nonbijective_fail;
    verdict.representable = n >= 4 && verdict.slack >= 0;
    return verdict;
}

TemporalRule as_star(int n) {
    if (n < 4) throw BadParams("as* needs n >= 4, got " + std::to_string(n));
    return TemporalRule::parse("<=" + std::string(std::size_t(n - 2), '>'));
}

bool verify_certificate(const SynthesisCertificate& cert) {
    const int n = cert.target.cells();
    for (const auto& rule : cert.rules) {
        if (rule.size() != n) return false;
    }
    std::vector<SweepPlan> plans;
    plans.reserve(cert.rules.size());
    for (const auto& rule : cert.rules) plans.emplace_back(cert.eca, rule);
    for (std::size_t v = 0; v < cert.target.size(); ++v) {
        std::uint64_t x = v;
        for (const auto& plan : plans) x = plan.apply(x);
        if (x != cert.target[State(v)]) return false;
    }
    return true;
}

namespace {

using Perm = std::vector<State>;

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::vector<std::size_t> cycle_lengths(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (State x = State(s); !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

bool is_even(const Perm& p) { return (p.size() - cycle_lengths(p).size()) % 2 == 0; }

Perm then(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
    return out;
}

// Distinct maps among `rules`, first rule kept.
RuleMaps distinct_maps(WolframRule eca, const std::vector<TemporalRule>& rules, bool bijective_only) {
    RuleMaps out;
    for (const auto& rule : rules) {
        StateMap map = state_map(eca, rule);
        if (bijective_only && !map.is_bijective()) continue;
        if (std::find(out.maps.begin(), out.maps.end(), map) != out.maps.end()) continue;
        out.rules.push_back(rule);
        out.maps.push_back(std::move(map));
    }
    return out;
}

// ---- bidirectional search over state maps (n <= 4) ----

std::uint64_t pack(const std::vector<State>& t) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < t.size(); ++i) key |= std::uint64_t(t[i]) << (4 * i);
    return key;
}

std::vector<State> unpack(std::uint64_t key, std::size_t size) {
    std::vector<State> t(size);
    for (std::size_t i = 0; i < size; ++i) t[i] = State((key >> (4 * i)) & 15U);
    return t;
}

struct Node {
    std::uint64_t parent;
    int gen;  // -1 at the root
};

enum class SearchOutcome { found, exhausted, limited };

SearchOutcome bidirectional_search(const FunctionTable& f, const RuleMaps& forward, const RuleMaps& backward,
                                   const SynthesisLimits& limits, std::vector<TemporalRule>& out) {
    const std::size_t size = f.size();
    std::vector<Perm> inverse;
    for (const auto& m : backward.maps) inverse.push_back(m.inverse().table());

    const std::uint64_t start = pack(FunctionTable::identity(f.cells()).table());
    const std::uint64_t goal = pack(f.table());
    std::unordered_map<std::uint64_t, Node> fwd{{start, {start, -1}}};
    std::unordered_map<std::uint64_t, Node> bwd{{goal, {goal, -1}}};
    std::vector<std::uint64_t> fwd_frontier{start};
    std::vector<std::uint64_t> bwd_frontier{goal};
    int fwd_depth = 0;
    int bwd_depth = 0;

    auto finish = [&](std::uint64_t meet) {
        std::vector<TemporalRule> head;
        for (std::uint64_t key = meet; fwd.at(key).gen >= 0; key = fwd.at(key).parent) {
            head.push_back(forward.rules[std::size_t(fwd.at(key).gen)]);
        }
        std::reverse(head.begin(), head.end());
        for (std::uint64_t key = meet; bwd.at(key).gen >= 0; key = bwd.at(key).parent) {
            head.push_back(backward.rules[std::size_t(bwd.at(key).gen)]);
        }
        out = std::move(head);
        return SearchOutcome::found;
    };

    while (true) {
        const bool can_fwd = fwd_depth < limits.depth && !fwd_frontier.empty();
        const bool can_bwd = bwd_depth < limits.depth && !bwd_frontier.empty();
        if (!can_fwd && !can_bwd) {
            return fwd_frontier.empty() || bwd_frontier.empty() ? SearchOutcome::exhausted
                                                                : SearchOutcome::limited;
        }
        const bool go_fwd = can_fwd && (!can_bwd || fwd_frontier.size() <= bwd_frontier.size());
        auto& seen = go_fwd ? fwd : bwd;
        auto& other = go_fwd ? bwd : fwd;
        auto& frontier = go_fwd ? fwd_frontier : bwd_frontier;
        const std::size_t gens = go_fwd ? forward.maps.size() : inverse.size();
        std::vector<std::uint64_t> next;
        for (std::uint64_t key : frontier) {
            const std::vector<State> table = unpack(key, size);
            for (std::size_t g = 0; g < gens; ++g) {
                const Perm& step = go_fwd ? forward.maps[g].table() : inverse[g];
                const std::uint64_t child = pack(then(table, step));
                if (!seen.emplace(child, Node{key, int(g)}).second) continue;
                if (other.count(child)) return finish(child);
                next.push_back(child);
                if (seen.size() > limits.frontier_cap) return SearchOutcome::limited;
            }
        }
        frontier = std::move(next);
        (go_fwd ? fwd_depth : bwd_depth)++;
    }
}

// ---- constructive realization (n >= 4) ----

// Realizes even permutations as words over bijective rule maps by conjugating
// one fixed 3-cycle.
class PermutationRealizer {
public:
    PermutationRealizer(WolframRule eca, int n) : size_(std::size_t{1} << n) {
        gens_ = distinct_maps(eca, enumerate_rules(n), true);
        if (gens_.maps.empty()) throw LimitsExceeded("no bijective rules to build permutations from");
        for (const auto& m : gens_.maps) {
            std::uint64_t order = 1;
            for (auto len : cycle_lengths(m.table())) order = lcm_u64(order, len);
            inverse_power_.push_back(order - 1);
        }
        find_three_cycle();
        build_triple_tree();
    }

    // Appends rule indices realizing the even permutation p.
    void realize(Perm sigma, std::vector<std::size_t>& out) const {
        if (!is_even(sigma)) throw Error("internal: odd permutation passed to realizer");
        std::vector<std::array<State, 3>> cycles;  // t: p -> q -> r -> p
        for (std::size_t p = 0; p + 2 < size_; ++p) {
            const State q = sigma[p];
            if (q == p) continue;
            State best = 0;
            std::uint32_t best_depth = UINT32_MAX;
            for (std::size_t r = p + 1; r < size_; ++r) {
                if (r == q) continue;
                const std::uint32_t d = depth_[index(State(p), q, State(r))];
                if (d < best_depth) {
                    best_depth = d;
                    best = State(r);
                }
            }
            // sigma <- sigma * t^-1 with t^-1 : q -> p -> best -> q
            Perm t_inv(size_);
            std::iota(t_inv.begin(), t_inv.end(), State{0});
            t_inv[q] = State(p);
            t_inv[p] = best;
            t_inv[best] = q;
            sigma = then(sigma, t_inv);
            cycles.push_back({State(p), q, best});
        }
        for (std::size_t x = 0; x < size_; ++x) {
            if (sigma[x] != x) throw Error("internal: 3-cycle reduction left a residue");
        }
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) append_three_cycle(*it, out);
    }

    const RuleMaps& generators() const { return gens_; }

private:
    std::size_t index(State x, State y, State z) const { return (std::size_t(x) * size_ + y) * size_ + z; }

    void find_three_cycle() {
        // Words up to length 3 with exactly one 3-cycle and no other cycle
        // length divisible by 3; the cheapest power that kills the rest wins.
        std::uint64_t best_cost = UINT64_MAX;
        const std::size_t m = gens_.maps.size();
        auto consider = [&](const std::vector<std::size_t>& word, const Perm& p) {
            std::size_t threes = 0;
            std::uint64_t e = 1;
            for (auto len : cycle_lengths(p)) {
                if (len == 3) {
                    ++threes;
                } else if (len % 3 == 0) {
                    return;
                } else {
                    e = lcm_u64(e, len);
                }
                if (threes > 1 || e * word.size() >= best_cost) return;
            }
            if (threes != 1) return;
            const std::uint64_t cost = e * word.size();
            if (cost >= best_cost) return;
            best_cost = cost;
            cycle_word_ = word;
            cycle_power_ = e;
            Perm c(size_);
            std::iota(c.begin(), c.end(), State{0});
            for (std::uint64_t i = 0; i < e; ++i) c = then(c, p);
            base_[0] = 0;
            while (c[base_[0]] == base_[0]) ++base_[0];
            base_[1] = c[base_[0]];
            base_[2] = c[base_[1]];
        };
        for (std::size_t a = 0; a < m; ++a) consider({a}, gens_.maps[a].table());
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                consider({a, b}, then(gens_.maps[a].table(), gens_.maps[b].table()));
            }
        }
        if (cycle_word_.empty()) {
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    const Perm ab = then(gens_.maps[a].table(), gens_.maps[b].table());
                    for (std::size_t c = 0; c < m; ++c) consider({a, b, c}, then(ab, gens_.maps[c].table()));
                }
            }
        }
        if (cycle_word_.empty()) throw LimitsExceeded("no short word has a power that is a single 3-cycle");
    }

    // BFS over ordered triples from the base triple of the 3-cycle.
    void build_triple_tree() {
        const std::size_t states = size_ * size_ * size_;
        depth_.assign(states, UINT32_MAX);
        parent_.assign(states, 0);
        via_.assign(states, 0);
        std::vector<std::size_t> frontier{index(base_[0], base_[1], base_[2])};
        depth_[frontier[0]] = 0;
        for (std::uint32_t d = 1; !frontier.empty(); ++d) {
            std::vector<std::size_t> next;
            for (std::size_t s : frontier) {
                const State x = State(s / (size_ * size_));
                const State y = State((s / size_) % size_);
                const State z = State(s % size_);
                for (std::size_t g = 0; g < gens_.maps.size(); ++g) {
                    const auto& m = gens_.maps[g];
                    const std::size_t t = index(m[x], m[y], m[z]);
                    if (depth_[t] != UINT32_MAX) continue;
                    depth_[t] = d;
                    parent_[t] = s;
                    via_[t] = std::uint16_t(g);
                    next.push_back(t);
                }
            }
            frontier = std::move(next);
        }
    }

    void append_three_cycle(const std::array<State, 3>& target, std::vector<std::size_t>& out) const {
        std::size_t s = index(target[0], target[1], target[2]);
        if (depth_[s] == UINT32_MAX) throw LimitsExceeded("3-cycle not reachable by conjugation");
        std::vector<std::size_t> path;  // u = path applied in order
        for (; depth_[s] > 0; s = parent_[s]) path.push_back(via_[s]);
        std::reverse(path.begin(), path.end());
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            out.insert(out.end(), inverse_power_[*it], *it);
        }
        for (std::uint64_t i = 0; i < cycle_power_; ++i) out.insert(out.end(), cycle_word_.begin(), cycle_word_.end());
        out.insert(out.end(), path.begin(), path.end());
    }

    std::size_t size_;
    RuleMaps gens_;
    std::vector<std::uint64_t> inverse_power_;
    std::vector<std::size_t> cycle_word_;
    std::uint64_t cycle_power_ = 0;
    std::array<State, 3> base_{};
    std::vector<std::uint32_t> depth_;
    std::vector<std::size_t> parent_;
    std::vector<std::uint16_t> via_;
};

// Disjoint merge pairs within fibers, at most `limit`, largest fibers first.
// classes[w] lists the current class representatives (h-values) of fiber w.
std::vector<std::pair<State, State>> choose_merges(std::vector<std::vector<State>>& classes, std::size_t limit) {
    std::vector<std::pair<State, State>> merges;
    while (merges.size() < limit) {
        std::size_t best = classes.size();
        for (std::size_t w = 0; w < classes.size(); ++w) {
            if (classes[w].size() >= 2 && (best == classes.size() || classes[w].size() > classes[best].size())) {
                best = w;
            }
        }
        if (best == classes.size()) break;
        auto& members = classes[best];
        // Both classes are spent for this application.
        const State u2 = members.back();
        members.pop_back();
        const State u1 = members.back();
        members.pop_back();
        merges.emplace_back(u1, u2);
    }
    return merges;
}

std::vector<std::size_t> simulate_greedy(std::vector<std::size_t> fiber_sizes, std::size_t first) {
    // Returns merges per application.
    std::vector<std::size_t> steps;
    auto remaining = [&] {
        std::size_t r = 0;
        for (auto c : fiber_sizes) r += c > 0 ? c - 1 : 0;
        return r;
    };
    while (remaining() > 0) {
        std::size_t done = 0;
        bool progress = true;
        while (done < first && progress) {
            progress = false;
            auto it = std::max_element(fiber_sizes.begin(), fiber_sizes.end());
            if (*it >= 2) {
                --*it;
                ++done;
                progress = true;
            }
        }
        steps.push_back(done);
    }
    return steps;
}

}  // namespace

ConstructivePlan theorem3_constructive_profile(const FunctionTable& f) {
    const RepresentabilityVerdict verdict = representable(f);
    const int n = f.cells();
    ConstructivePlan plan;
    if (f.is_bijective()) return plan;
    if (verdict.verdict_case != VerdictCase::nonbijective_pass || n < 4) {
        throw NotRepresentable("function fails the pairing condition for ECA-57");
    }
    const MultiplicityProfile profile = multiplicity_profile(f.table());
    plan.merges_needed = f.size() - profile.image_size();
    plan.pairable = profile.pairable();
    plan.first_merges = std::size_t{1} << (n - 3);
    plan.applications = 1 + (plan.merges_needed - plan.first_merges);
    plan.greedy_applications = simulate_greedy(profile.sharp, plan.first_merges).size();
    return plan;
}

namespace {

SynthesisResult constructive(WolframRule eca, const FunctionTable& f) {
    const int n = f.cells();
    const std::size_t size = f.size();
    PermutationRealizer realizer(eca, n);
    std::vector<std::size_t> word;
    SynthesisResult result;
    result.method = SynthesisMethod::constructive;

    std::vector<TemporalRule> rules;
    auto flush = [&] {
        for (auto g : word) rules.push_back(realizer.generators().rules[g]);
        word.clear();
    };

    if (f.is_bijective()) {
        realizer.realize(f.table(), word);
        flush();
    } else {
        const TemporalRule star = as_star(n);
        const Perm star_map = state_map(eca, star).table();
        const std::size_t pairs_per_step = std::size_t{1} << (n - 3);

        // Pair slots of as*: inputs sharing an image.
        std::vector<std::vector<State>> preimages(size);
        for (std::size_t x = 0; x < size; ++x) preimages[star_map[x]].push_back(State(x));
        std::vector<std::pair<State, State>> pair_slots;
        std::vector<State> single_slots;
        for (const auto& pre : preimages) {
            if (pre.size() == 2) pair_slots.emplace_back(pre[0], pre[1]);
            if (pre.size() == 1) single_slots.push_back(pre[0]);
        }
        if (pair_slots.size() != pairs_per_step) {
            throw Error("internal: unexpected as* multiplicity profile");
        }

        Perm h(size);
        std::iota(h.begin(), h.end(), State{0});
        bool first = true;
        while (true) {
            // Group the current image by target fiber.
            std::vector<std::vector<State>> classes(size);
            std::vector<bool> in_image(size, false);
            for (std::size_t v = 0; v < size; ++v) {
                if (in_image[h[v]]) continue;
                in_image[h[v]] = true;
                classes[f[State(v)]].push_back(h[v]);
            }
            std::size_t pending = 0;
            for (const auto& c : classes) pending += c.size() > 1 ? c.size() - 1 : 0;
            if (pending == 0) break;

            auto merges = choose_merges(classes, pairs_per_step);
            if (first && merges.size() != pairs_per_step) {
                throw Error("internal: first as* step lacks merge pairs");
            }
            first = false;

            Perm sigma(size, State(size));
            std::vector<bool> used(size, false);
            std::vector<bool> assigned(size, false);
            auto place = [&](State from, State to) {
                sigma[from] = to;
                assigned[from] = true;
                used[to] = true;
            };
            std::size_t slot = 0;
            for (const auto& [u1, u2] : merges) {
                place(u1, pair_slots[slot].first);
                place(u2, pair_slots[slot].second);
                ++slot;
            }
            std::vector<State> free_targets(single_slots);
            for (std::size_t s = slot; s < pair_slots.size(); ++s) free_targets.push_back(pair_slots[s].first);
            std::size_t next_free = 0;
            for (std::size_t u = 0; u < size; ++u) {
                if (!in_image[u] || assigned[u]) continue;
                if (next_free >= free_targets.size()) throw Error("internal: out of single slots");
                place(State(u), free_targets[next_free++]);
            }
            std::vector<State> leftovers;
            for (std::size_t t = 0; t < size; ++t) {
                if (!used[t]) leftovers.push_back(State(t));
            }
            std::size_t li = 0;
            std::vector<State> non_image;
            for (std::size_t u = 0; u < size; ++u) {
                if (!assigned[u]) {
                    non_image.push_back(State(u));
                    place(State(u), leftovers[li++]);
                }
            }
            if (!is_even(sigma)) {
                if (!merges.empty()) {
                    std::swap(sigma[merges.front().first], sigma[merges.front().second]);
                } else {
                    std::swap(sigma[non_image[0]], sigma[non_image[1]]);
                }
            }
            realizer.realize(sigma, word);
            flush();
            rules.push_back(star);
            ++result.as_star_applications;
            h = then(then(h, sigma), star_map);
        }

        // Final bijection: class value -> fiber value, the rest in order.
        Perm pi(size, State(size));
        std::vector<bool> used(size, false);
        std::vector<bool> in_image(size, false);
        for (std::size_t v = 0; v < size; ++v) {
            if (pi[h[v]] == size) {
                pi[h[v]] = f[State(v)];
                used[f[State(v)]] = true;
                in_image[h[v]] = true;
            }
        }
        std::vector<State> spare_targets;
        for (std::size_t t = 0; t < size; ++t) {
            if (!used[t]) spare_targets.push_back(State(t));
        }
        std::vector<State> spare_sources;
        for (std::size_t u = 0; u < size; ++u) {
            if (!in_image[u]) spare_sources.push_back(State(u));
        }
        for (std::size_t i = 0; i < spare_sources.size(); ++i) pi[spare_sources[i]] = spare_targets[i];
        if (!is_even(pi)) std::swap(pi[spare_sources[0]], pi[spare_sources[1]]);
        realizer.realize(pi, word);
        flush();
    }

    result.certificate = SynthesisCertificate{eca, std::move(rules), f};
    return result;
}

}  // namespace

SynthesisResult synthesize(WolframRule eca, const FunctionTable& f, const SynthesisLimits& limits) {
    if (eca.code() != 57) throw BadParams("synthesis supports eca 57 only");
    const int n = f.cells();
    const RepresentabilityVerdict verdict = representable(f);
    if (!verdict.representable) {
        throw NotRepresentable("not representable by ECA-57 at n=" + std::to_string(n) + " (" +
                               to_string(verdict.verdict_case) + ")");
    }

    SynthesisResult result;
    if (f.is_identity()) {
        result.certificate = SynthesisCertificate{eca, {}, f};
        return result;
    }

    if (n <= 4) {
        const auto rules = enumerate_rules(n);
        const RuleMaps forward = distinct_maps(eca, rules, f.is_bijective());
        const RuleMaps backward = distinct_maps(eca, rules, true);
        std::vector<TemporalRule> found;
        if (bidirectional_search(f, forward, backward, limits, found) == SearchOutcome::found) {
            result.certificate = SynthesisCertificate{eca, std::move(found), f};
            result.method = SynthesisMethod::bidirectional_search;
            for (const auto& r : result.certificate.rules) {
                if (n >= 4 && r == as_star(n)) ++result.as_star_applications;
            }
        } else if (n == 3) {
            throw LimitsExceeded("no sequence found within depth " + std::to_string(limits.depth) +
                                 " per direction");
        }
    }
    if (result.certificate.rules.empty()) {
        if (n > limits.max_constructive_n) {
            throw LimitsExceeded("constructive synthesis is limited to n <= " +
                                 std::to_string(limits.max_constructive_n));
        }
        result = constructive(eca, f);
    }
    if (!verify_certificate(result.certificate)) throw Error("internal: synthesized certificate failed verification");
    return result;
}

std::size_t function_closure_size(WolframRule eca) {
    constexpr int n = 3;
    constexpr std::size_t size = 8;
    auto encode = [](const std::vector<State>& t) {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < size; ++i) code |= t[i] << (3 * i);
        return code;
    };
    std::vector<std::vector<State>> gens;
    for (const auto& rule : enumerate_rules(n)) gens.push_back(state_map(eca, rule).table());

    std::vector<bool> seen(std::size_t{1} << (3 * size), false);
    std::vector<std::uint32_t> queue;
    for (const auto& g : gens) {
        const auto code = encode(g);
        if (!seen[code]) {
            seen[code] = true;
            queue.push_back(code);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t code = queue[head];
        for (const auto& g : gens) {
            std::uint32_t next = 0;
            for (std::size_t i = 0; i < size; ++i) next |= g[(code >> (3 * i)) & 7U] << (3 * i);
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return queue.size();
}

}  // namespace asca
