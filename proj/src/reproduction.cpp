#include "asca/reproduction.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "asca/algebra.hpp"
#include "asca/error.hpp"
#include "asca/synthesis.hpp"
#include "asca/universality.hpp"

namespace asca {

namespace {

// Families under mirror and complement, canonical member first.
constexpr const char* kFamilies =
    "0 255;1 127;2 191 16 247;3 63 17 119;4 223;5 95;6 159 20 215;7 31 21 87;8 239 64 253;"
    "9 111 65 125;10 175 80 245;11 47 81 117;12 207 68 221;13 79 69 93;14 143 84 213;15 85;"
    "18 183;19 55;22 151;23;24 231 66 189;25 103 67 61;26 167 82 181;27 39 83 53;28 199 70 157;"
    "29 71;30 135 86 149;32 251;33 123;34 187 48 243;35 59 49 115;36 219;37 91;38 155 52 211;"
    "40 235 96 249;41 107 97 121;42 171 112 241;43 113;44 203 100 217;45 75 101 89;46 139 116 209;"
    "50 179;51;54 147;56 227 98 185;57 99;58 163 114 177;60 195 102 153;62 131 118 145;72 237;"
    "73 109;74 173 88 229;76 205 76 205;77;78 141 92 197;90 165 90 165;94 133;104 233;105;"
    "106 169 120 225;108 201;110 137 124 193;122 161;126 129;128 254;130 190 144 246;132 222;"
    "134 158 148 214;136 238 192 252;138 174 208 244;140 206 196 220;142 212;146 182;150;"
    "152 230 194 188;154 166 210 180;156 198;160 250;162 186 176 242;164 218;168 234 224 248;"
    "170 240;172 202 228 216;178;184 226;200 236;204;232";

struct SequenceRow {
    const char* rule;
    const char* layers;
    std::array<const char*, 8> images;  // inputs 000..111
};

constexpr std::array<SequenceRow, 5> kIncRows{{
    {"<><", "(1|0|2)", {"011", "101", "100", "110", "111", "010", "001", "000"}},
    {"<>>", "(1|2|0)", {"010", "110", "011", "000", "001", "101", "100", "111"}},
    {"<>=", "(1|0,2)", {"101", "000", "110", "011", "100", "010", "111", "001"}},
    {"=><", "(0,1|2)", {"010", "111", "100", "110", "011", "001", "000", "101"}},
    {">><", "(0|1|2)", {"001", "010", "011", "100", "101", "110", "111", "000"}},
}};

constexpr std::array<SequenceRow, 5> kMul3Rows{{
    {"<<>", "(2|1|0)", {"101", "010", "111", "100", "110", "011", "001", "000"}},
    {"><>", "(2|0|1)", {"001", "101", "100", "010", "011", "000", "110", "111"}},
    {"=<>", "(2|0,1)", {"110", "011", "010", "111", "000", "101", "001", "100"}},
    {">=<", "(0|1,2)", {"101", "100", "001", "010", "110", "000", "111", "011"}},
    {">><", "(0|1|2)", {"000", "011", "110", "001", "100", "111", "010", "101"}},
}};

// The first layer of "<=>>" on four cells, as listed.
constexpr std::array<std::pair<const char*, const char*>, 16> kFirstLayer{{
    {"0000", "0110"}, {"0001", "0101"}, {"1000", "1110"}, {"1001", "1101"},
    {"0010", "0000"}, {"0011", "0011"}, {"1010", "1100"}, {"1011", "1111"},
    {"0100", "0010"}, {"0101", "0011"}, {"1100", "1010"}, {"1101", "1011"},
    {"0110", "0100"}, {"0111", "0101"}, {"1110", "1000"}, {"1111", "1001"},
}};

using Counts = std::map<int, std::size_t>;  // eca -> count

const std::map<int, Counts> kOMax{
    {4, {{0, 1}, {140, 2}, {136, 2}, {128, 2}, {160, 12}, {2, 11}, {57, 16}}},
    {8, {{140, 6}, {136, 9}, {128, 16}, {160, 130}, {2, 211}, {57, 256}}},
};
const std::map<int, Counts> kIMin{
    {4, {{3, 15}, {9, 12}, {27, 16}, {57, 16}, {22, 1}}},
    {8, {{3, 233}, {9, 243}, {27, 253}, {57, 256}, {22, 1}}},
};

const std::vector<std::pair<int, std::size_t>> kClosureFast{{57, 40320}, {25, 22496}};
const std::vector<std::pair<int, std::size_t>> kClosureLong{
    {110, 23166}, {30, 25258},   {3, 39155},   {11, 52934},    {62, 62683},    {46, 89110},  {41, 210493},
    {38, 223102}, {27, 268034}, {35, 751760}, {54, 1190449}, {19, 3519992}, {105, 344}};

Configuration bits(const char* s) { return Configuration::parse_bits(s); }

// Accumulates "label=value" items and tracks mismatches.
class Tally {
public:
    template <class A, class B>
    void item(const std::string& label, const A& expected, const B& computed) {
        std::ostringstream e;
        std::ostringstream c;
        e << expected;
        c << computed;
        add(label, e.str(), c.str(), e.str() == c.str());
    }
    void add(const std::string& label, const std::string& expected, const std::string& computed, bool ok) {
        expected_ += sep() + label + "=" + expected;
        computed_ += sep(false) + label + "=" + computed;
        pass_ = pass_ && ok;
    }
    void fail() { pass_ = false; }

    void into(CheckResult& r) const {
        r.expected = expected_;
        r.computed = computed_;
        r.pass = pass_;
    }

private:
    std::string sep(bool first_list = true) const {
        return (first_list ? expected_ : computed_).empty() ? "" : " ";
    }
    std::string expected_;
    std::string computed_;
    bool pass_ = true;
};

bool full(const ReproductionOptions& o) { return o.scope == Scope::full; }

void check_example(CheckResult& r, const ReproductionOptions&) {
    r.name = "single sweep 57 <><> 1000";
    Tally t;
    t.item("1000", "1110", sweep(WolframRule(57), TemporalRule::parse("<><>"), bits("1000")).str());
    t.into(r);
}

void check_sequences(CheckResult& r, const ReproductionOptions&) {
    r.name = "INC and MUL-BY-3 sequences n=3";
    Tally t;
    std::size_t matched = 0;
    std::size_t layers_ok = 0;
    for (const auto* rows : {&kIncRows, &kMul3Rows}) {
        std::array<Configuration, 8> state{bits("000"), bits("001"), bits("010"), bits("011"),
                                           bits("100"), bits("101"), bits("110"), bits("111")};
        for (const auto& row : *rows) {
            const TemporalRule rule = TemporalRule::parse(row.rule);
            layers_ok += schedule(rule).str() == row.layers;
            for (std::size_t v = 0; v < 8; ++v) {
                state[v] = sweep(WolframRule(57), rule, state[v]);
                matched += state[v].str() == row.images[v];
            }
        }
    }
    t.item("rows", 80, matched);
    t.item("layers", 10, layers_ok);

    const auto inc = builtin("INC", 3);
    const auto mul3 = builtin("MUL_BY_3", 3);
    std::vector<TemporalRule> inc_rules;
    std::vector<TemporalRule> mul_rules;
    for (const auto& row : kIncRows) inc_rules.push_back(TemporalRule::parse(row.rule));
    for (const auto& row : kMul3Rows) mul_rules.push_back(TemporalRule::parse(row.rule));
    t.item("INC", true, verify_certificate({WolframRule(57), inc_rules, inc}));
    t.item("MUL_BY_3", true, verify_certificate({WolframRule(57), mul_rules, mul3}));
    t.into(r);
}

void check_first_layer(CheckResult& r, const ReproductionOptions&) {
    r.name = "57 <=>> n=4 mapping and profile";
    Tally t;
    const UpdateSchedule layers = schedule(TemporalRule::parse("<=>>"));
    std::size_t matched = 0;
    std::vector<State> first(16);
    for (const auto& [v, w] : kFirstLayer) {
        const Configuration out = sweep_partial(WolframRule(57), layers, bits(v), 1);
        matched += out.str() == w;
        first[bits(v).value()] = State(out.value());
    }
    t.item("mappings", 16, matched);
    const auto p_first = multiplicity_profile(first);
    const auto p_full = multiplicity_profile(state_map(WolframRule(57), as_star(4)));
    auto profile = [](const MultiplicityProfile& p) {
        return std::to_string(p.at_count(0)) + "/" + std::to_string(p.at_count(1)) + "/" +
               std::to_string(p.at_count(2));
    };
    t.item("@0/@1/@2 listed", "2/12/2", profile(p_first));
    t.item("@0/@1/@2 sweep", "2/12/2", profile(p_full));
    t.into(r);
}

void check_rule_count(CheckResult& r, const ReproductionOptions&) {
    r.name = "|AS_n| = 3^n - 2^(n+1) + 2, n=3..8";
    Tally t;
    for (int n = 3; n <= 8; ++n) t.item("n" + std::to_string(n), count_rules(n), enumerate_rules(n).size());
    t.into(r);
}

void check_families(CheckResult& r, const ReproductionOptions&) {
    r.name = "88 rule families";
    Tally t;
    std::set<std::set<int>> listed;
    std::istringstream groups(kFamilies);
    for (std::string group; std::getline(groups, group, ';');) {
        std::istringstream codes(group);
        std::set<int> members;
        for (int c; codes >> c;) members.insert(c);
        listed.insert(members);
    }
    std::set<std::set<int>> computed;
    for (const auto& f : enumerate_families()) {
        std::set<int> members;
        for (auto m : f.members) members.insert(m.code());
        computed.insert(members);
    }
    t.item("classes", listed.size(), computed.size());
    t.item("memberships", "equal", listed == computed ? "equal" : "differ");
    t.into(r);
}

void check_reach(CheckResult& r, const ReproductionOptions& o) {
    r.name = "(o) max and (i) min reach counts";
    Tally t;
    UniversalityOptions uo;
    uo.threads = o.threads;
    std::vector<int> sizes{4};
    if (full(o)) {
        sizes.push_back(8);
    } else {
        r.skipped.push_back("n=8 (full scope)");
    }
    for (int n : sizes) {
        std::map<int, ReachReport> cache;
        auto report = [&](int eca) -> const ReachReport& {
            auto it = cache.find(eca);
            if (it == cache.end()) it = cache.emplace(eca, reach_report(WolframRule(std::uint8_t(eca)), n, uo)).first;
            return it->second;
        };
        for (const auto& [eca, want] : kOMax.at(n)) {
            t.item("o" + std::to_string(eca) + "@" + std::to_string(n), want, report(eca).max_count);
        }
        for (const auto& [eca, want] : kIMin.at(n)) {
            t.item("i" + std::to_string(eca) + "@" + std::to_string(n), want, report(eca).min_count);
        }
    }
    t.into(r);
}

std::string tau_text(const std::optional<std::uint64_t>& t) { return t ? std::to_string(*t) : "none"; }

void check_tau_ii(CheckResult& r, const ReproductionOptions& o) {
    r.name = "(ii) eca 57 max-over-v tau";
    Tally t;
    UniversalityOptions uo;
    uo.threads = o.threads;
    std::vector<std::pair<int, int>> cases{{5, 28}, {6, 14}};
    if (full(o)) {
        cases.emplace_back(7, 10);
    } else {
        r.skipped.push_back("n=7 (full scope)");
    }
    for (const auto& [n, want] : cases) {
        const TauReport rep = property_ii_all(WolframRule(57), n, kDefaultTauMax, uo);
        t.item("n" + std::to_string(n), want, tau_text(rep.max_over_sources));
    }
    t.into(r);
}

void check_tau_iii(CheckResult& r, const ReproductionOptions& o) {
    r.name = "(iii) joint tau";
    Tally t;
    UniversalityOptions uo;
    uo.threads = o.threads;
    std::vector<std::tuple<int, int, int>> cases{{57, 5, 445}};
    if (full(o)) {
        cases.emplace_back(57, 7, 70);
    } else {
        r.skipped.push_back("57@7 (full scope)");
    }
    if (o.long_run) {
        cases.emplace_back(105, 9, 14);
    } else {
        r.skipped.push_back("105@9 (long run)");
    }
    for (const auto& [eca, n, want] : cases) {
        const TauReport rep = property_iii_tau(WolframRule(std::uint8_t(eca)), n, kDefaultTauMax, uo);
        t.item(std::to_string(eca) + "@" + std::to_string(n), want, tau_text(rep.joint));
    }
    t.into(r);
}

void check_period_certificates(CheckResult& r, const ReproductionOptions& o) {
    r.name = "period certificates eca 57, n=3,4, every v";
    Tally t;
    UniversalityOptions uo;
    uo.threads = o.threads;
    for (int n : {3, 4}) {
        std::size_t valid = 0;
        for (State v = 0; v < (State{1} << n); ++v) valid += theorem2_certificate(WolframRule(57), n, v, uo).verified;
        t.item("n" + std::to_string(n), std::size_t{1} << n, valid);
    }
    t.into(r);
}

void check_parity(CheckResult& r, const ReproductionOptions&) {
    r.name = "odd rules of eca 57";
    Tally t;
    auto odd_count = [](int n, GeneratorSet set) {
        std::size_t odd = 0;
        for (const auto& m : generator_rules(WolframRule(57), n, set).maps) {
            odd += *permutation_info(m).parity == Parity::odd;
        }
        return odd;
    };
    const std::size_t odd3 = odd_count(3, GeneratorSet::all_bijective);
    t.add("n3", ">=1", std::to_string(odd3), odd3 >= 1);
    for (int n = 4; n <= 8; ++n) {
        // Every word over {<, >} must be bijective here.
        const std::size_t total = bijective_subset(n).size();
        const std::size_t bij = generator_rules(WolframRule(57), n, GeneratorSet::no_eq).maps.size();
        if (bij != total) t.fail();
        t.item("n" + std::to_string(n), 0, odd_count(n, GeneratorSet::no_eq));
    }
    t.into(r);
}

void check_group_orders(CheckResult& r, const ReproductionOptions& o) {
    r.name = "generated group orders";
    Tally t;
    std::vector<std::tuple<int, int, GeneratorSet, std::string>> cases{
        {105, 3, GeneratorSet::no_eq, "24"},
        {105, 4, GeneratorSet::no_eq, "48"},
        {105, 5, GeneratorSet::no_eq, "1920"},
        {57, 3, GeneratorSet::all_bijective, "40320"},
    };
    if (o.long_run) {
        cases.emplace_back(105, 6, GeneratorSet::no_eq, "11520");
        cases.emplace_back(105, 7, GeneratorSet::no_eq, "322560");
    } else {
        r.skipped.push_back("105@6, 105@7 (long run)");
    }
    for (const auto& [eca, n, set, want] : cases) {
        const auto gens = generator_rules(WolframRule(std::uint8_t(eca)), n, set);
        t.item(std::to_string(eca) + "@" + std::to_string(n), want, group_order(gens.maps).order.str());
    }
    t.into(r);
}

void check_alternating(CheckResult& r, const ReproductionOptions&) {
    r.name = "eca 57 n=4 contains A_16";
    Tally t;
    const auto gens = generator_rules(WolframRule(57), 4, GeneratorSet::all_bijective);
    t.item("generators", 14, gens.maps.size());
    t.item("all", true, contains_alternating(gens.maps));
    const auto triple = minimal_generating_triples(WolframRule(57), 4, 364);
    t.add("triple", "found", triple ? (*triple)[0].str() + "," + (*triple)[1].str() + "," + (*triple)[2].str() : "none",
          triple.has_value());
    t.into(r);
}

void check_closures(CheckResult& r, const ReproductionOptions& o) {
    r.name = "n=3 function closure sizes";
    Tally t;
    auto cases = kClosureFast;
    if (o.long_run) {
        cases.insert(cases.end(), kClosureLong.begin(), kClosureLong.end());
    } else {
        r.skipped.push_back("remaining rows (long run)");
    }
    for (const auto& [eca, want] : cases) {
        t.item(std::to_string(eca), want, function_closure_size(WolframRule(std::uint8_t(eca))));
    }
    t.into(r);
}

void check_verdicts(CheckResult& r, const ReproductionOptions&) {
    r.name = "representability verdicts";
    Tally t;
    const auto mul = representable(builtin("MUL_KXK", 4));
    t.item("MUL2x2", "nonbijective_pass/4", to_string(mul.verdict_case) + "/" + std::to_string(mul.slack));
    const auto neg = representable(builtin("NEG", 4));
    t.item("NEG4", "bijective_odd/no", to_string(neg.verdict_case) + (neg.representable ? "/yes" : "/no"));
    const auto comp = representable(builtin("COMP", 4));
    t.item("COMP4", "bijective_even/yes", to_string(comp.verdict_case) + (comp.representable ? "/yes" : "/no"));
    for (int k : {2, 3}) {
        const auto v = representable(builtin("MUL_KXK", 2 * k));
        t.item("MUL_KXK k=" + std::to_string(k), "yes", v.representable ? "yes" : "no");
    }
    t.into(r);
}

void check_synthesis(CheckResult& r, const ReproductionOptions&) {
    r.name = "synthesis soundness";
    Tally t;
    std::mt19937 rng(20240607);
    std::vector<FunctionTable> targets{builtin("INC", 3), builtin("MUL_BY_3", 3)};
    while (targets.size() < 22) {
        std::vector<State> p{0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(p.begin(), p.end(), rng);
        FunctionTable f(3, p);
        if (*permutation_info(StateMap(3, p)).parity == Parity::even) targets.push_back(f);
    }
    std::size_t verified = 0;
    for (const auto& f : targets) {
        const auto result = synthesize(WolframRule(57), f);
        verified += verify_certificate(result.certificate);
    }
    t.item("verified", targets.size(), verified);
    std::string neg = "accepted";
    try {
        synthesize(WolframRule(57), builtin("NEG", 4));
    } catch (const NotRepresentable&) {
        neg = "refused";
    }
    t.item("NEG4", "refused", neg);
    t.into(r);
}

}  // namespace

CheckResult run_check(int id, const ReproductionOptions& opts) {
    using Fn = void (*)(CheckResult&, const ReproductionOptions&);
    static constexpr std::array<Fn, kCheckCount> checks{
        check_example,  check_sequences,           check_first_layer, check_rule_count,   check_families,
        check_reach,    check_tau_ii,              check_tau_iii,     check_period_certificates,
        check_parity,   check_group_orders,        check_alternating, check_closures,     check_verdicts,
        check_synthesis};
    if (id < 1 || id > kCheckCount) throw BadParams("no check with id " + std::to_string(id));
    CheckResult result;
    result.id = id;
    const auto start = std::chrono::steady_clock::now();
    try {
        checks[std::size_t(id - 1)](result, opts);
    } catch (const Error& e) {
        result.pass = false;
        result.computed += (result.computed.empty() ? "" : " ") + std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CheckResult> verify_paper(const ReproductionOptions& opts) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, opts));
    return out;
}

}  // namespace asca
