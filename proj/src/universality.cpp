#include "asca/universality.hpp"

#include <algorithm>
#include <sstream>

#include "asca/error.hpp"
#include "asca/state_set.hpp"

namespace asca {

namespace {

void check_n(int n) {
    if (n < 3 || n > 16) {
        throw BadParams("universality analysis needs 3 <= n <= 16, got " + std::to_string(n));
    }
}

void check_state(int n, State v) {
    if (v >= (std::size_t{1} << n)) {
        throw BadParams("state " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    }
}

std::vector<TemporalRule> rule_set(int n, const UniversalityOptions& opts) {
    std::vector<TemporalRule> rules = enumerate_rules(n);
    if (!opts.include_synchronous) {
        std::erase_if(rules, [](const TemporalRule& r) { return r.is_synchronous(); });
    }
    return rules;
}

// Cycle structure of a functional graph: cycle id per node (-1 on tails) and
// the member list of each cycle.
struct FunctionalGraph {
    std::vector<int> cycle_of;
    std::vector<std::vector<State>> cycles;

    explicit FunctionalGraph(const std::vector<State>& next) : cycle_of(next.size(), -1) {
        std::vector<std::uint8_t> color(next.size(), 0);  // 0 new, 1 on stack, 2 done
        std::vector<State> path;
        for (std::size_t start = 0; start < next.size(); ++start) {
            if (color[start]) continue;
            path.clear();
            State x = State(start);
            while (color[x] == 0) {
                color[x] = 1;
                path.push_back(x);
                x = next[x];
            }
            if (color[x] == 1) {
                const auto first = std::find(path.begin(), path.end(), x);
                const int id = int(cycles.size());
                cycles.emplace_back(first, path.end());
                for (auto it = first; it != path.end(); ++it) cycle_of[*it] = id;
            }
            for (State s : path) color[s] = 2;
        }
    }
};

}  // namespace

std::vector<State> reach_set(WolframRule eca, int n, State v, const UniversalityOptions& opts) {
    check_n(n);
    check_state(n, v);
    StateSet reached(std::size_t{1} << n);
    StateSet seen(std::size_t{1} << n);
    for (const auto& rule : rule_set(n, opts)) {
        const SweepPlan plan(eca, rule);
        seen.clear();
        std::uint64_t x = plan.apply(v);
        while (seen.insert(State(x))) {
            reached.insert(State(x));
            x = plan.apply(x);
        }
    }
    return reached.elements();
}

ReachReport reach_report(WolframRule eca, int n, const UniversalityOptions& opts) {
    check_n(n);
    const std::size_t universe = std::size_t{1} << n;
    const std::vector<TemporalRule> rules = rule_set(n, opts);
    const std::size_t workers = worker_count(rules.size(), opts.threads);
    const std::size_t words = (universe + 63) / 64;

    std::vector<std::vector<StateSet>> partial(workers, std::vector<StateSet>(universe, StateSet(universe)));

    parallel_blocks(rules.size(), opts.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& reached = partial[w];
        std::vector<std::size_t> count(universe, 0);
        for (std::size_t r = begin; r < end; ++r) {
            const StateMap map = state_map(SweepPlan(eca, rules[r]));
            const auto& next = map.table();
            const FunctionalGraph graph(next);
            std::vector<StateSet> cycle_bits(graph.cycles.size());
            for (std::size_t v = 0; v < universe; ++v) {
                if (count[v] == universe) continue;
                State x = next[v];
                while (graph.cycle_of[x] < 0) {
                    count[v] += reached[v].insert(x);
                    x = next[x];
                }
                const auto id = std::size_t(graph.cycle_of[x]);
                const auto& members = graph.cycles[id];
                if (members.size() <= words) {
                    for (State s : members) count[v] += reached[v].insert(s);
                } else {
                    if (cycle_bits[id].universe() == 0) {
                        cycle_bits[id] = StateSet(universe);
                        for (State s : members) cycle_bits[id].insert(s);
                    }
                    count[v] += reached[v].merge(cycle_bits[id]);
                }
            }
        }
    });

    for (std::size_t w = 1; w < workers; ++w) {
        for (std::size_t v = 0; v < universe; ++v) partial[0][v].merge(partial[w][v]);
    }

    ReachReport report;
    report.eca = eca;
    report.n = n;
    report.per_source.resize(universe);
    for (std::size_t v = 0; v < universe; ++v) report.per_source[v] = partial[0][v].count();
    const auto [lo, hi] = std::minmax_element(report.per_source.begin(), report.per_source.end());
    // minmax_element returns the first minimum and the last maximum.
    report.min_count = *lo;
    report.min_witness = State(lo - report.per_source.begin());
    report.max_count = *hi;
    report.max_witness = State(std::find(report.per_source.begin(), report.per_source.end(), *hi) -
                               report.per_source.begin());
    return report;
}

std::optional<std::uint64_t> property_ii_tau(WolframRule eca, int n, State v, std::uint64_t tau_max,
                                             const UniversalityOptions& opts) {
    check_n(n);
    check_state(n, v);
    if (tau_max < 1) throw BadParams("tau_max must be at least 1");
    const std::size_t universe = std::size_t{1} << n;
    std::vector<StateMap> maps;
    for (const auto& rule : rule_set(n, opts)) maps.push_back(state_map(SweepPlan(eca, rule)));
    if (maps.size() < universe) return std::nullopt;

    std::vector<State> cur(maps.size(), v);
    StateSet hit(universe);
    for (std::uint64_t tau = 1; tau <= tau_max; ++tau) {
        hit.clear();
        std::size_t count = 0;
        for (std::size_t r = 0; r < maps.size(); ++r) {
            cur[r] = maps[r][cur[r]];
            count += hit.insert(cur[r]);
        }
        if (count == universe) return tau;
    }
    return std::nullopt;
}

namespace {

TauReport tau_scan(WolframRule eca, int n, std::uint64_t tau_max, const UniversalityOptions& opts,
                   TauProperty property) {
    check_n(n);
    if (tau_max < 1) throw BadParams("tau_max must be at least 1");
    const std::size_t universe = std::size_t{1} << n;
    const std::vector<TemporalRule> rules = rule_set(n, opts);
    const std::size_t count_rules = rules.size();

    // next[r * universe + v] is rule r's map; cur holds the tau-th powers.
    std::vector<State> next(count_rules * universe);
    std::vector<State> cur(count_rules * universe);
    parallel_blocks(count_rules, opts.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const SweepPlan plan(eca, rules[r]);
            for (std::size_t v = 0; v < universe; ++v) {
                next[r * universe + v] = State(plan.apply(v));
                cur[r * universe + v] = State(v);
            }
        }
    });

    TauReport report;
    report.property = property;
    report.tau_max = tau_max;
    report.per_source.assign(universe, std::nullopt);
    std::size_t resolved = 0;

    std::vector<StateSet> hit(universe, StateSet(universe));
    std::vector<std::size_t> count(universe);
    for (std::uint64_t tau = 1; tau <= tau_max; ++tau) {
        for (auto& h : hit) h.clear();
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t r = 0; r < count_rules; ++r) {
            State* row = &cur[r * universe];
            const State* step = &next[r * universe];
            for (std::size_t v = 0; v < universe; ++v) {
                row[v] = step[row[v]];
                count[v] += hit[v].insert(row[v]);
            }
        }
        bool all_full = true;
        for (std::size_t v = 0; v < universe; ++v) {
            if (count[v] == universe) {
                if (!report.per_source[v]) {
                    report.per_source[v] = tau;
                    ++resolved;
                }
            } else {
                all_full = false;
            }
        }
        if (property == TauProperty::iii && all_full) {
            report.joint = tau;
            break;
        }
        if (property == TauProperty::ii && resolved == universe) break;
    }

    if (resolved == universe) {
        std::uint64_t worst = 0;
        for (const auto& t : report.per_source) worst = std::max(worst, *t);
        report.max_over_sources = worst;
    }
    return report;
}

}  // namespace

TauReport property_ii_all(WolframRule eca, int n, std::uint64_t tau_max, const UniversalityOptions& opts) {
    return tau_scan(eca, n, tau_max, opts, TauProperty::ii);
}

TauReport property_iii_tau(WolframRule eca, int n, std::uint64_t tau_max, const UniversalityOptions& opts) {
    return tau_scan(eca, n, tau_max, opts, TauProperty::iii);
}

PeriodCertificate theorem2_certificate(WolframRule eca, int n, State v, const UniversalityOptions& opts) {
    check_n(n);
    check_state(n, v);
    const std::size_t universe = std::size_t{1} << n;
    const std::vector<TemporalRule> rules = rule_set(n, opts);

    PeriodCertificate cert;
    cert.v = v;
    std::vector<std::pair<std::size_t, std::uint64_t>> cycling;  // rule index, period
    std::vector<std::size_t> position(universe, 0);
    std::vector<State> walk;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const SweepPlan plan(eca, rules[r]);
        walk.clear();
        State x = v;
        while (position[x] == 0) {
            walk.push_back(x);
            position[x] = walk.size();
            x = State(plan.apply(x));
        }
        const std::size_t preperiod = position[x] - 1;
        const std::uint64_t period = walk.size() - preperiod;
        for (State s : walk) position[s] = 0;

        if (preperiod > 0) {
            ++cert.preperiodic_rules;
        } else if (period == 1) {
            ++cert.fixed_point_rules;
        } else {
            ++cert.cycling_rules;
            cycling.emplace_back(r, period);
            cert.per = cert.per / boost::multiprecision::gcd(cert.per, BigInt(period)) * period;
        }
    }

    cert.failing_taus = {cert.per - 1, cert.per + 1};
    cert.verified = true;
    for (const auto& [r, period] : cycling) {
        const SweepPlan plan(eca, rules[r]);
        for (const BigInt& tau : cert.failing_taus) {
            // v lies on a cycle of this length, so only tau mod period matters.
            auto steps = static_cast<std::uint64_t>(tau % period);
            std::uint64_t x = v;
            for (std::uint64_t t = 0; t < steps; ++t) x = plan.apply(x);
            if (x == v) cert.verified = false;
        }
    }
    return cert;
}

std::vector<UniversalityRow> universality_table(const std::vector<WolframRule>& families,
                                                const std::vector<int>& n_list,
                                                const UniversalityOptions& opts) {
    std::vector<UniversalityRow> rows;
    for (WolframRule family : families) {
        for (int n : n_list) {
            const ReachReport report = reach_report(family, n, opts);
            rows.push_back({family, n, report.max_count, report.min_count});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<UniversalityRow>& rows) {
    std::ostringstream out;
    out << "family,n,o_max,i_min\n";
    for (const auto& row : rows) {
        out << int(row.family.code()) << ',' << row.n << ',' << row.o_max << ',' << row.i_min << '\n';
    }
    return out.str();
}

}  // namespace asca
