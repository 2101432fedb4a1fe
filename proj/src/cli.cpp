#include "asca/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "asca/algebra.hpp"
#include "asca/error.hpp"
#include "asca/reproduction.hpp"
#include "asca/synthesis.hpp"
#include "asca/universality.hpp"

namespace asca::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string eca = "57";
    std::string n;
    std::string rule;
    std::string input;
    std::uint64_t tau = 1;
    std::uint64_t tau_max = kDefaultTauMax;
    std::string which = "o";
    std::string format = "text";
    bool long_run = false;
    int threads = default_threads();
    int depth = 6;
    std::size_t frontier_cap = 2'000'000;
    std::string function;
    std::string sub_mode = "literal";
    std::string generators = "auto";
    std::string scope = "fast";
    bool timing = false;
    bool no_sync = false;
};

int parse_int(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected an integer, got '" + text + "'");
    }
}

// "57", "0,57,105" or "families" (every canonical family).
std::vector<WolframRule> parse_ecas(const std::string& text) {
    std::vector<WolframRule> out;
    if (text == "families") {
        for (const auto& f : enumerate_families()) out.push_back(f.canonical);
        return out;
    }
    std::istringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
        const int code = parse_int(part, "--eca");
        if (code < 0 || code > 255) throw UsageError("--eca: code must be in 0..255, got " + part);
        out.push_back(WolframRule(std::uint8_t(code)));
    }
    if (out.empty()) throw UsageError("--eca: no rule given");
    return out;
}

WolframRule single_eca(const Options& o) {
    const auto ecas = parse_ecas(o.eca);
    if (ecas.size() != 1) throw UsageError("--eca: this command takes a single rule");
    return ecas.front();
}

// "4", "4,8" or "4..8".
std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = parse_int(text.substr(0, dots), "--n");
        const int hi = parse_int(text.substr(dots + 2), "--n");
        for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
        std::istringstream in(text);
        for (std::string part; std::getline(in, part, ',');) out.push_back(parse_int(part, "--n"));
    }
    if (out.empty()) throw UsageError("--n: no size given");
    for (int n : out) {
        if (n < 3) throw UsageError("--n: sizes must be at least 3");
    }
    return out;
}

int single_size(const Options& o) {
    if (o.n.empty()) throw UsageError("--n is required");
    const auto sizes = parse_sizes(o.n);
    if (sizes.size() != 1) throw UsageError("--n: this command takes a single size");
    return sizes.front();
}

TemporalRule require_rule(const Options& o) {
    if (o.rule.empty()) throw UsageError("--rule is required");
    const TemporalRule rule = TemporalRule::parse(o.rule);
    if (!o.n.empty() && single_size(o) != rule.size()) throw DimensionMismatch(single_size(o), rule.size());
    return rule;
}

// Bit string when it has exactly n binary digits, decimal otherwise.
Configuration parse_input(const std::string& text, int n) {
    if (text.empty()) throw UsageError("--input is required");
    const bool binary = text.size() == std::size_t(n) && text.find_first_not_of("01") == std::string::npos;
    if (binary) return Configuration::parse_bits(text);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("--input: expected " + std::to_string(n) + " bits or a decimal state, got '" + text + "'");
    }
    std::uint64_t value = 0;
    try {
        value = std::stoull(text);
    } catch (const std::exception&) {
        throw UsageError("--input: value out of range");
    }
    if (n < 64 && value >= (std::uint64_t{1} << n)) {
        throw BadParams("input " + text + " does not fit in n=" + std::to_string(n) + " cells");
    }
    return Configuration(n, value);
}

std::string bits_of(State v, int n) { return Configuration(n, v).str(); }

FunctionTable parse_function(const Options& o, int n) {
    if (o.function.empty()) throw UsageError("--function is required");
    const SubMode mode = o.sub_mode == "borrow" ? SubMode::borrow : SubMode::literal;
    if (o.function.front() == '[') {
        Json values;
        try {
            values = Json::parse(o.function);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("--function: bad JSON array: ") + e.what());
        }
        std::vector<State> table;
        for (const auto& v : values) {
            if (!v.is_number_unsigned()) throw UsageError("--function: entries must be non-negative integers");
            table.push_back(v.get<State>());
        }
        return FunctionTable(n, std::move(table));
    }
    if (o.function == "CONST0") return FunctionTable::constant(n, 0);
    return builtin(o.function, n, mode);
}

UniversalityOptions universality_options(const Options& o) {
    UniversalityOptions u;
    u.threads = o.threads;
    u.include_synchronous = !o.no_sync;
    return u;
}

std::string tau_text(const std::optional<std::uint64_t>& t) { return t ? std::to_string(*t) : "none"; }
Json tau_json(const std::optional<std::uint64_t>& t) { return t ? Json(*t) : Json(nullptr); }

// What a command produced: the JSON outputs plus text and CSV renderings.
struct Emitted {
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::string text;
    std::string csv;  // empty when the command has no CSV form
    int status = 0;
};

Emitted cmd_simulate(const Options& o) {
    const WolframRule eca = single_eca(o);
    const TemporalRule rule = require_rule(o);
    const Configuration start = parse_input(o.input, rule.size());
    const Configuration end = iterate(eca, rule, start, o.tau);
    Emitted e;
    e.inputs = {{"eca", eca.code()}, {"rule", rule.str()}, {"input", start.str()}, {"tau", o.tau}};
    e.outputs = {{"output", end.str()}, {"value", end.value()}, {"layers", schedule(rule).str()}};
    e.text = end.str() + "\n";
    return e;
}

Emitted cmd_map(const Options& o) {
    const WolframRule eca = single_eca(o);
    const TemporalRule rule = require_rule(o);
    const StateMap map = state_map(eca, rule);
    const int n = rule.size();
    Emitted e;
    e.inputs = {{"eca", eca.code()}, {"rule", rule.str()}};
    e.outputs = {{"n", n}, {"table", map.table()}, {"bijective", map.is_bijective()}};
    e.csv = "v,w\n";
    for (State v = 0; v < map.size(); ++v) {
        e.text += bits_of(v, n) + " -> " + bits_of(map[v], n) + "\n";
        e.csv += std::to_string(v) + "," + std::to_string(map[v]) + "\n";
    }
    return e;
}

Emitted cmd_orbit(const Options& o) {
    const WolframRule eca = single_eca(o);
    const TemporalRule rule = require_rule(o);
    const int n = rule.size();
    const Configuration start = parse_input(o.input, n);
    const OrbitInfo info = orbit(state_map(eca, rule), State(start.value()));
    Emitted e;
    e.inputs = {{"eca", eca.code()}, {"rule", rule.str()}, {"input", start.str()}};
    Json visited = Json::array();
    for (State s : info.visited) visited.push_back(bits_of(s, n));
    e.outputs = {{"preperiod", info.preperiod}, {"period", info.period}, {"visited", visited}};
    e.text = "preperiod " + std::to_string(info.preperiod) + " period " + std::to_string(info.period) + "\n";
    for (State s : info.visited) e.text += bits_of(s, n) + "\n";
    return e;
}

Emitted cmd_property(const Options& o) {
    if (o.n.empty()) throw UsageError("--n is required");
    const UniversalityOptions uo = universality_options(o);
    Emitted e;
    e.inputs = {{"which", o.which}, {"include_synchronous", uo.include_synchronous}};

    if (o.which == "o" || o.which == "i") {
        const auto ecas = parse_ecas(o.eca);
        const auto sizes = parse_sizes(o.n);
        Json rows = Json::array();
        std::vector<UniversalityRow> table;
        for (WolframRule eca : ecas) {
            for (int n : sizes) {
                const ReachReport rep = reach_report(eca, n, uo);
                table.push_back({eca, n, rep.max_count, rep.min_count});
                const bool o_side = o.which == "o";
                const std::size_t count = o_side ? rep.max_count : rep.min_count;
                const State witness = o_side ? rep.max_witness : rep.min_witness;
                const bool holds = o_side ? rep.property_o_holds() : rep.property_i_holds();
                rows.push_back({{"eca", eca.code()},
                                {"n", n},
                                {o_side ? "o_max" : "i_min", count},
                                {"witness", bits_of(witness, n)},
                                {"holds", holds}});
                e.text += "eca " + std::to_string(eca.code()) + " n " + std::to_string(n) + " " +
                          (o_side ? "o_max " : "i_min ") + std::to_string(count) + " of " +
                          std::to_string(rep.universe()) + " witness " + bits_of(witness, n) + "\n";
            }
        }
        e.inputs["eca"] = o.eca;
        e.inputs["n"] = o.n;
        e.outputs["rows"] = rows;
        e.csv = to_csv(table);
        return e;
    }

    const WolframRule eca = single_eca(o);
    const int n = single_size(o);
    e.inputs["eca"] = eca.code();
    e.inputs["n"] = n;
    if (o.which == "ii") {
        e.inputs["tau_max"] = o.tau_max;
        if (!o.input.empty()) {
            const Configuration v = parse_input(o.input, n);
            const auto tau = property_ii_tau(eca, n, State(v.value()), o.tau_max, uo);
            e.inputs["input"] = v.str();
            e.outputs["tau"] = tau_json(tau);
            e.text = tau_text(tau) + "\n";
        } else {
            const TauReport rep = property_ii_all(eca, n, o.tau_max, uo);
            Json per = Json::array();
            for (const auto& t : rep.per_source) per.push_back(tau_json(t));
            e.outputs["max_over_sources"] = tau_json(rep.max_over_sources);
            e.outputs["per_source"] = per;
            e.text = tau_text(rep.max_over_sources) + "\n";
        }
    } else if (o.which == "iii") {
        e.inputs["tau_max"] = o.tau_max;
        const TauReport rep = property_iii_tau(eca, n, o.tau_max, uo);
        e.outputs["tau"] = tau_json(rep.joint);
        e.text = tau_text(rep.joint) + "\n";
    } else {
        std::vector<State> sources;
        if (!o.input.empty()) {
            sources.push_back(State(parse_input(o.input, n).value()));
        } else {
            for (State v = 0; v < (State{1} << n); ++v) sources.push_back(v);
        }
        Json certs = Json::array();
        bool all_blocked = true;
        for (State v : sources) {
            const PeriodCertificate c = theorem2_certificate(eca, n, v, uo);
            Json taus = Json::array();
            for (const auto& t : c.failing_taus) taus.push_back(t.str());
            certs.push_back({{"v", bits_of(v, n)},
                             {"per", c.per.str()},
                             {"failing_taus", taus},
                             {"cycling_rules", c.cycling_rules},
                             {"fixed_point_rules", c.fixed_point_rules},
                             {"preperiodic_rules", c.preperiodic_rules},
                             {"verified", c.verified},
                             {"blocks_identity_transduction", c.blocks_identity_transduction()}});
            all_blocked = all_blocked && c.blocks_identity_transduction();
            e.text += bits_of(v, n) + " per " + c.per.str() + " verified " + (c.verified ? "yes" : "no") +
                      " fixed " + std::to_string(c.fixed_point_rules) + "\n";
        }
        e.outputs["certificates"] = certs;
        e.outputs["all_block_identity_transduction"] = all_blocked;
    }
    return e;
}

Emitted cmd_group(const Options& o) {
    const WolframRule eca = single_eca(o);
    const int n = single_size(o);
    GeneratorSet set = GeneratorSet::no_eq;
    if (o.generators == "all_bijective" || (o.generators == "auto" && n == 3)) set = GeneratorSet::all_bijective;
    AlgebraOptions ao;
    if (o.long_run) ao.degree_cap = std::size_t{1} << 10;
    if (n > 20 || (std::size_t{1} << n) > ao.degree_cap) throw DegreeTooLarge(std::size_t{1} << std::min(n, 20), ao.degree_cap);
    const RuleMaps gens = generator_rules(eca, n, set);
    Emitted e;
    e.inputs = {{"eca", eca.code()}, {"n", n}, {"generators", to_string(set)}};
    if (gens.maps.empty()) throw BadParams("no bijective rules in the generator set");
    const GroupReport rep = group_order(gens.maps, ao);
    e.outputs = {{"eca", eca.code()},
                 {"n", n},
                 {"generator_count", rep.generator_count},
                 {"order", rep.order.str()},
                 {"classification", to_string(rep.classification)}};
    e.text = rep.order.str() + " " + to_string(rep.classification) + "\n";
    return e;
}

Json profile_json(const MultiplicityProfile& p) {
    Json at = Json::object();
    for (const auto& [k, count] : p.at) at[std::to_string(k)] = count;
    return {{"sharp", p.sharp}, {"at", at}, {"image_size", p.image_size()}, {"pairable", p.pairable()}};
}

std::string profile_text(const MultiplicityProfile& p) {
    std::string s;
    for (const auto& [k, count] : p.at) s += "@(" + std::to_string(k) + ")=" + std::to_string(count) + " ";
    if (!s.empty()) s.pop_back();
    return s + "\n";
}

Emitted cmd_profile(const Options& o) {
    Emitted e;
    MultiplicityProfile p;
    if (!o.function.empty()) {
        const FunctionTable f = parse_function(o, single_size(o));
        e.inputs = {{"function", o.function}, {"n", f.cells()}};
        p = multiplicity_profile(f.table());
    } else {
        const WolframRule eca = single_eca(o);
        const TemporalRule rule = require_rule(o);
        e.inputs = {{"eca", eca.code()}, {"rule", rule.str()}};
        const StateMap map = state_map(eca, rule);
        p = multiplicity_profile(map);
        const PermutationInfo info = permutation_info(map);
        e.outputs["bijective"] = info.bijective;
        if (info.parity) e.outputs["parity"] = *info.parity == Parity::even ? "even" : "odd";
    }
    e.outputs.update(profile_json(p));
    e.text = profile_text(p);
    e.csv = "k,count\n";
    for (const auto& [k, count] : p.at) e.csv += std::to_string(k) + "," + std::to_string(count) + "\n";
    return e;
}

Emitted cmd_families(const Options& o, bool eca_given) {
    Emitted e;
    std::vector<FamilyRecord> families;
    if (eca_given) {
        for (WolframRule r : parse_ecas(o.eca)) families.push_back(family_of(r));
        e.inputs = {{"eca", o.eca}};
    } else {
        families = enumerate_families();
    }
    Json list = Json::array();
    e.csv = "canonical,members\n";
    for (const auto& f : families) {
        std::vector<int> members;
        for (auto m : f.members) members.push_back(m.code());
        list.push_back({{"canonical", f.canonical.code()}, {"members", members}});
        std::string spaced;
        std::string listed;
        for (int m : members) {
            spaced += (spaced.empty() ? "" : " ") + std::to_string(m);
            listed += (listed.empty() ? "" : ", ") + std::to_string(m);
        }
        e.text += "{" + listed + "}\n";
        e.csv += std::to_string(f.canonical.code()) + "," + spaced + "\n";
    }
    e.outputs = {{"count", families.size()}, {"families", list}};
    return e;
}

Json verdict_json(const RepresentabilityVerdict& v) {
    return {{"case", to_string(v.verdict_case)},
            {"slack", v.slack},
            {"pairable", v.pairable},
            {"representable", v.representable}};
}

Emitted cmd_check(const Options& o) {
    const FunctionTable f = parse_function(o, single_size(o));
    const RepresentabilityVerdict v = representable(f);
    Emitted e;
    e.inputs = {{"function", o.function}, {"n", f.cells()}, {"sub_mode", o.sub_mode}};
    e.outputs = verdict_json(v);
    if (v.verdict_case == VerdictCase::nonbijective_pass && f.cells() >= 4) {
        const ConstructivePlan plan = theorem3_constructive_profile(f);
        e.outputs["plan"] = {{"merges_needed", plan.merges_needed},
                             {"pairable", plan.pairable},
                             {"first_merges", plan.first_merges},
                             {"applications", plan.applications},
                             {"greedy_applications", plan.greedy_applications}};
    }
    e.text = to_string(v.verdict_case) + " slack " + std::to_string(v.slack) + " " +
             (v.representable ? "representable" : "not representable") + "\n";
    return e;
}

Emitted cmd_synthesize(const Options& o) {
    const WolframRule eca = single_eca(o);
    const FunctionTable f = parse_function(o, single_size(o));
    SynthesisLimits limits;
    limits.depth = o.depth;
    limits.frontier_cap = o.frontier_cap;
    if (o.long_run) limits.max_constructive_n = 8;
    const SynthesisResult result = synthesize(eca, f, limits);
    Emitted e;
    e.inputs = {{"eca", eca.code()}, {"function", o.function}, {"n", f.cells()}, {"depth", o.depth},
                {"frontier_cap", o.frontier_cap}};
    Json rules = Json::array();
    for (const auto& r : result.certificate.rules) {
        rules.push_back(r.str());
        e.text += r.str() + "\n";
    }
    e.outputs = {{"method", to_string(result.method)},
                 {"length", result.certificate.rules.size()},
                 {"as_star_applications", result.as_star_applications},
                 {"verified", verify_certificate(result.certificate)},
                 {"rules", rules}};
    return e;
}

Emitted cmd_verify(const Options& o) {
    if (o.scope != "fast" && o.scope != "full") throw UsageError("--scope: expected fast or full, got '" + o.scope + "'");
    ReproductionOptions ro;
    ro.scope = o.scope == "full" ? Scope::full : Scope::fast;
    ro.long_run = o.long_run;
    ro.threads = o.threads;
    Emitted e;
    e.inputs = {{"scope", o.scope}, {"long_run", o.long_run}};
    Json checks = Json::array();
    std::size_t passed = 0;
    const auto results = verify_paper(ro);
    for (const auto& r : results) {
        Json c = {{"id", r.id},     {"name", r.name},         {"pass", r.pass},
                  {"expected", r.expected}, {"computed", r.computed}, {"skipped", r.skipped}};
        if (o.timing) c["seconds"] = r.seconds;
        checks.push_back(c);
        passed += r.pass;
        std::ostringstream line;
        line << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
             << std::setprecision(3) << r.seconds << " s)\n";
        if (!r.pass) line << "    expected: " << r.expected << "\n    computed: " << r.computed << "\n";
        for (const auto& s : r.skipped) line << "    skipped: " << s << "\n";
        e.text += line.str();
    }
    e.text += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    e.outputs = {{"passed", passed}, {"total", results.size()}, {"checks", checks}};
    e.status = passed == results.size() ? 0 : 1;
    return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asynchronous elementary cellular automata on the ring Z/nZ"};
    app.name("asca");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    const std::vector<std::string> formats{"text", "json", "csv"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--threads", o.threads, "Worker threads (default from ASCA_THREADS)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--timing", o.timing, "Include wall time in JSON output");
        sub->add_flag("--long-run", o.long_run, "Raise size caps for long computations");
    };
    auto eca_opt = [&](CLI::App* sub) { return sub->add_option("--eca", o.eca, "Wolfram code(s)"); };
    auto rule_opt = [&](CLI::App* sub) {
        return sub->add_option("--rule", o.rule, "Temporal rule word over <, =, >");
    };
    auto n_opt = [&](CLI::App* sub) { return sub->add_option("--n", o.n, "Ring size, list or range (4..8)"); };
    auto input_opt = [&](CLI::App* sub) {
        return sub->add_option("--input", o.input, "Configuration as n bits or a decimal state");
    };
    auto function_opt = [&](CLI::App* sub) {
        sub->add_option("--function", o.function, "Builtin name or JSON array of 2^n values");
        sub->add_option("--sub-mode", o.sub_mode, "SUB embedding")->check(CLI::IsMember({"literal", "borrow"}));
    };

    std::function<Emitted()> handler;
    std::string command;
    auto bind = [&](CLI::App* sub, std::function<Emitted()> fn) {
        sub->callback([&, sub, fn] {
            command = sub->get_name();
            handler = fn;
        });
    };

    auto* simulate = app.add_subcommand("simulate", "Apply a temporal rule tau times to a configuration");
    common(simulate);
    eca_opt(simulate);
    rule_opt(simulate)->required();
    input_opt(simulate)->required();
    simulate->add_option("--tau", o.tau, "Number of sweeps");
    bind(simulate, [&] { return cmd_simulate(o); });

    auto* map = app.add_subcommand("map", "Full state map of a temporal rule");
    common(map);
    eca_opt(map);
    rule_opt(map)->required();
    n_opt(map);
    bind(map, [&] { return cmd_map(o); });

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a configuration under a temporal rule");
    common(orbit_cmd);
    eca_opt(orbit_cmd);
    rule_opt(orbit_cmd)->required();
    input_opt(orbit_cmd)->required();
    bind(orbit_cmd, [&] { return cmd_orbit(o); });

    auto* property = app.add_subcommand("property", "Pattern-universality properties over all temporal rules");
    common(property);
    eca_opt(property);
    n_opt(property)->required();
    input_opt(property);
    property->add_option("--which", o.which, "Property")->check(CLI::IsMember({"o", "i", "ii", "iii", "iv"}));
    property->add_option("--tau-max", o.tau_max, "Largest tau searched")->check(CLI::PositiveNumber);
    property->add_flag("--no-sync", o.no_sync, "Leave the synchronous rule out of AS_n");
    bind(property, [&] { return cmd_property(o); });

    auto* group = app.add_subcommand("group", "Order of the group generated by bijective rule maps");
    common(group);
    eca_opt(group);
    n_opt(group)->required();
    group->add_option("--generators", o.generators, "Generator set")
        ->check(CLI::IsMember({"auto", "no_eq", "all_bijective"}));
    bind(group, [&] { return cmd_group(o); });

    auto* profile = app.add_subcommand("profile", "Preimage multiplicities of a rule map or function");
    common(profile);
    eca_opt(profile);
    rule_opt(profile);
    n_opt(profile);
    function_opt(profile);
    bind(profile, [&] { return cmd_profile(o); });

    bool families_eca = false;
    auto* families = app.add_subcommand("families", "Rule families under mirror and complement");
    common(families);
    auto* fam_eca = eca_opt(families);
    bind(families, [&] { return cmd_families(o, families_eca); });

    auto* check = app.add_subcommand("check-representable", "Representability verdict for a function");
    common(check);
    n_opt(check)->required();
    function_opt(check);
    bind(check, [&] { return cmd_check(o); });

    auto* synth = app.add_subcommand("synthesize", "Find a rule sequence computing a function");
    common(synth);
    eca_opt(synth);
    n_opt(synth)->required();
    function_opt(synth);
    synth->add_option("--depth", o.depth, "Search depth per direction")->check(CLI::PositiveNumber);
    synth->add_option("--frontier-cap", o.frontier_cap, "Maps stored per direction")->check(CLI::PositiveNumber);
    bind(synth, [&] { return cmd_synthesize(o); });

    auto* verify = app.add_subcommand("verify-paper", "Check the published reference values");
    common(verify);
    verify->add_option("--scope", o.scope, "fast or full");
    bind(verify, [&] { return cmd_verify(o); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        families_eca = fam_eca->count() > 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Emitted e = handler();
        if (o.format == "csv") {
            if (e.csv.empty()) throw UsageError("--format csv is not available for " + command);
            out << e.csv;
        } else if (o.format == "json") {
            Json record = {{"command", command}, {"inputs", e.inputs}, {"outputs", e.outputs}, {"version", kVersion}};
            if (o.timing) {
                record["wall_time_s"] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            }
            out << record.dump(2) << "\n";
        } else {
            out << e.text;
        }
        return e.status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace asca::cli
