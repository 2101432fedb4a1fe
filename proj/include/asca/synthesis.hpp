#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asca/algebra.hpp"
#include "asca/engine.hpp"

namespace asca {

// A target function F_2^n -> F_2^n given by its value table.
class FunctionTable {
public:
    FunctionTable(int n, std::vector<State> table);
    static FunctionTable identity(int n);
    static FunctionTable constant(int n, State value);
    static FunctionTable from_map(const StateMap& map) { return FunctionTable(map.cells(), map.table()); }

    int cells() const { return n_; }
    std::size_t size() const { return table_.size(); }
    State operator[](State v) const { return table_[v]; }
    const std::vector<State>& table() const { return table_; }
    bool is_bijective() const;
    bool is_identity() const;

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
    int n_;
    std::vector<State> table_;
};

// SUB as a - b reduced mod 2^n, or with the borrow in the top half:
// (a < b) | (a - b mod 2^k).
enum class SubMode { literal, borrow };

// Names: INC, INC', MUL_BY_2, MUL_BY_3, MUL_kxk, OR1, OR2, AND1, AND2, XOR1,
// XOR2, SUB, SUB', NEG, COMP, ID. Two-operand functions split v = a|b with a
// the high k = n/2 bits and need even n.
FunctionTable builtin(std::string_view name, int n, SubMode sub_mode = SubMode::literal);
std::vector<std::string> builtin_names();

enum class VerdictCase { bijective_even, bijective_odd, nonbijective_pass, nonbijective_fail };
std::string to_string(VerdictCase c);

struct RepresentabilityVerdict {
    VerdictCase verdict_case = VerdictCase::bijective_even;
    // sum_w floor(#(w)/2) - 2^(n-3); zero for bijections.
    std::int64_t slack = 0;
    std::size_t pairable = 0;
    bool representable = false;
};

// Representability by ECA-57 rule sequences.
RepresentabilityVerdict representable(const FunctionTable& f);

// "<=>...>": the word < = > > ... > of length n.
TemporalRule as_star(int n);

struct SynthesisCertificate {
    WolframRule eca;
    std::vector<TemporalRule> rules;
    FunctionTable target = FunctionTable::identity(3);
};

bool verify_certificate(const SynthesisCertificate& cert);

struct SynthesisLimits {
    int depth = 6;                         // per search direction
    std::size_t frontier_cap = 2'000'000;  // maps stored per direction
    int max_constructive_n = 7;
};

enum class SynthesisMethod { trivial, bidirectional_search, constructive };
std::string to_string(SynthesisMethod m);

struct SynthesisResult {
    SynthesisCertificate certificate;
    SynthesisMethod method = SynthesisMethod::trivial;
    std::size_t as_star_applications = 0;
};

// Eca 57 only. Throws NotRepresentable when the verdict is negative and
// LimitsExceeded when no sequence is found within limits. Every returned
// certificate has passed verify_certificate.
SynthesisResult synthesize(WolframRule eca, const FunctionTable& f, const SynthesisLimits& limits = {});

struct ConstructivePlan {
    std::size_t merges_needed = 0;      // 2^n - |Im f|
    std::size_t pairable = 0;           // sum_w floor(#(w)/2)
    std::size_t first_merges = 0;       // 2^(n-3), forced on the first as* application
    // One application for the first 2^(n-3) merges, one per merge afterwards.
    std::size_t applications = 0;
    // Applications when every later as* also merges up to 2^(n-3) classes.
    std::size_t greedy_applications = 0;
};

// Throws NotRepresentable unless the verdict is nonbijective_pass or bijective.
ConstructivePlan theorem3_constructive_profile(const FunctionTable& f);

// Size of the semigroup generated by the maps of all rules of AS_3 under
// composition (identity only if generated). n = 3 only.
std::size_t function_closure_size(WolframRule eca);

}  // namespace asca
