#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asca {

// Relative update order of cell i with respect to cell i+1 (mod n).
// Less: i updates after i+1. Equal: together. Greater: i updates before i+1.
// The enumerator order is the lexicographic order used for enumeration.
enum class Order : std::uint8_t { Less = 0, Equal = 1, Greater = 2 };

char to_char(Order o);

// A temporal (asynchronicity) rule over Z/nZ. Always valid once constructed:
// either every symbol is Equal, or both Less and Greater occur.
class TemporalRule {
public:
    // Accepts '<', '=', '>' and the UTF-8 '≡'. Throws InvalidWord or IllFormed.
    static TemporalRule parse(std::string_view word);

    // Returns nullopt for an ill-formed symbol sequence; throws InvalidWord
    // when the length is below 3.
    static std::optional<TemporalRule> from_symbols(std::vector<Order> symbols);

    int size() const { return int(symbols_.size()); }
    Order operator[](int i) const { return symbols_[std::size_t(i)]; }
    std::span<const Order> symbols() const { return symbols_; }

    bool is_synchronous() const;
    bool has_equal() const;

    // Rendered with '=' for the simultaneous symbol.
    std::string str() const;

    friend bool operator==(const TemporalRule&, const TemporalRule&) = default;
    friend auto operator<=>(const TemporalRule&, const TemporalRule&) = default;

private:
    explicit TemporalRule(std::vector<Order> symbols) : symbols_(std::move(symbols)) {}
    std::vector<Order> symbols_;
};

// Syntactic validity: all-Equal, or contains both Less and Greater.
bool is_well_formed(std::span<const Order> symbols);

// Ordered partition of the cells into layers S_1..S_m. Cells in a layer update
// simultaneously; layers are processed in order.
class UpdateSchedule {
public:
    // Throws BadParams unless `layers` is a partition of {0..n-1} into
    // nonempty sets.
    UpdateSchedule(int n, std::vector<std::vector<int>> layers);

    // Build from a per-cell layer label; labels are compressed to 0..m-1
    // preserving their order.
    static UpdateSchedule from_labels(std::span<const int> label_of_cell);

    int cells() const { return n_; }
    int layer_count() const { return int(layers_.size()); }
    const std::vector<std::vector<int>>& layers() const { return layers_; }
    int layer_of(int cell) const { return layer_of_[std::size_t(cell)]; }

    // Bit masks in the configuration encoding (cell i at bit n-1-i).
    std::vector<std::uint64_t> masks() const;

    // Rendered like "(1,2|3|0)".
    std::string str() const;

    friend bool operator==(const UpdateSchedule& a, const UpdateSchedule& b) {
        return a.n_ == b.n_ && a.layers_ == b.layers_;
    }

private:
    int n_;
    std::vector<std::vector<int>> layers_;
    std::vector<int> layer_of_;
};

// Signs of (layer(i-1) - layer(i)) and (layer(i) - layer(i+1)).
struct SignTriple {
    int left_sign = 0;
    int right_sign = 0;
    friend bool operator==(const SignTriple&, const SignTriple&) = default;
};

std::vector<SignTriple> sign_triples(const UpdateSchedule& schedule);

// |AS_n| = 3^n - 2^(n+1) + 2, for 3 <= n <= 40.
std::uint64_t count_rules(int n);

// Canonical layering: each EQ-linked run of cells is one node, and its layer is
// the length of the longest precedence chain ending at it.
UpdateSchedule schedule(const TemporalRule& rule);

// The rule whose pairwise orders agree with the layer order of `layers`.
TemporalRule from_partition(const UpdateSchedule& layers);

// Valid rules of length n in lexicographic order (Less < Equal < Greater).
// A stream covers the word indices [begin, end) of the 3^n words in base 3,
// cell 0 most significant, so disjoint ranges can be consumed independently.
class RuleStream {
public:
    explicit RuleStream(int n);
    RuleStream(int n, std::uint64_t begin, std::uint64_t end);

    std::optional<TemporalRule> next();
    static std::uint64_t word_count(int n);

private:
    int n_;
    std::uint64_t cursor_;
    std::uint64_t end_;
};

std::vector<TemporalRule> enumerate_rules(int n);

// The 2^n - 2 rules over {<,>} other than <^n and >^n, in lexicographic order.
std::vector<TemporalRule> bijective_subset(int n);

}  // namespace asca
