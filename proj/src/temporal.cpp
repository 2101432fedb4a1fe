#include "asca/temporal.hpp"

#include <algorithm>
#include <numeric>

#include "asca/error.hpp"

namespace asca {

char to_char(Order o) {
    switch (o) {
        case Order::Less: return '<';
        case Order::Equal: return '=';
        case Order::Greater: return '>';
    }
    return '?';
}

bool is_well_formed(std::span<const Order> symbols) {
    bool less = false, equal = false, greater = false;
    for (Order o : symbols) {
        less |= o == Order::Less;
        equal |= o == Order::Equal;
        greater |= o == Order::Greater;
    }
    if (!less && !greater) {
        return equal;
    }
    return less && greater;
}

TemporalRule TemporalRule::parse(std::string_view word) {
    // "≡" in UTF-8.
    constexpr std::string_view kEquiv = "\xE2\x89\xA1";

    std::vector<Order> symbols;
    for (std::size_t i = 0; i < word.size();) {
        const char c = word[i];
        if (c == '<') {
            symbols.push_back(Order::Less);
            ++i;
        } else if (c == '>') {
            symbols.push_back(Order::Greater);
            ++i;
        } else if (c == '=') {
            symbols.push_back(Order::Equal);
            ++i;
        } else if (word.substr(i, kEquiv.size()) == kEquiv) {
            symbols.push_back(Order::Equal);
            i += kEquiv.size();
        } else {
            throw InvalidWord("invalid character at offset " + std::to_string(i) +
                              " in temporal rule \"" + std::string(word) + "\"");
        }
    }
    auto rule = from_symbols(std::move(symbols));
    if (!rule) {
        throw IllFormed("temporal rule \"" + std::string(word) +
                        "\" orders a cell before itself around the ring; it needs both '<' "
                        "and '>' or only '='");
    }
    return *std::move(rule);
}

std::optional<TemporalRule> TemporalRule::from_symbols(std::vector<Order> symbols) {
    if (symbols.size() < 3) {
        throw InvalidWord("temporal rule needs at least 3 symbols, got " +
                          std::to_string(symbols.size()));
    }
    if (!is_well_formed(symbols)) {
        return std::nullopt;
    }
    return TemporalRule(std::move(symbols));
}

bool TemporalRule::is_synchronous() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](Order o) { return o == Order::Equal; });
}

bool TemporalRule::has_equal() const {
    return std::find(symbols_.begin(), symbols_.end(), Order::Equal) != symbols_.end();
}

std::string TemporalRule::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Order o : symbols_) {
        out.push_back(to_char(o));
    }
    return out;
}

UpdateSchedule::UpdateSchedule(int n, std::vector<std::vector<int>> layers)
    : n_(n), layers_(std::move(layers)), layer_of_(std::size_t(std::max(n, 0)), -1) {
    if (n < 1 || n > 64) {
        throw BadParams("schedule cell count must be in 1..64");
    }
    int seen = 0;
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        auto& layer = layers_[k];
        if (layer.empty()) {
            throw BadParams("schedule layer " + std::to_string(k) + " is empty");
        }
        std::sort(layer.begin(), layer.end());
        for (int cell : layer) {
            if (cell < 0 || cell >= n || layer_of_[std::size_t(cell)] != -1) {
                throw BadParams("schedule layers are not a partition of the cells");
            }
            layer_of_[std::size_t(cell)] = int(k);
            ++seen;
        }
    }
    if (seen != n) {
        throw BadParams("schedule layers do not cover every cell");
    }
}

UpdateSchedule UpdateSchedule::from_labels(std::span<const int> label_of_cell) {
    std::vector<int> distinct(label_of_cell.begin(), label_of_cell.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::vector<int>> layers(distinct.size());
    for (std::size_t i = 0; i < label_of_cell.size(); ++i) {
        const auto pos = std::lower_bound(distinct.begin(), distinct.end(), label_of_cell[i]);
        layers[std::size_t(pos - distinct.begin())].push_back(int(i));
    }
    return UpdateSchedule(int(label_of_cell.size()), std::move(layers));
}

std::vector<std::uint64_t> UpdateSchedule::masks() const {
    std::vector<std::uint64_t> out;
    out.reserve(layers_.size());
    for (const auto& layer : layers_) {
        std::uint64_t mask = 0;
        for (int cell : layer) {
            mask |= std::uint64_t{1} << (n_ - 1 - cell);
        }
        out.push_back(mask);
    }
    return out;
}

std::string UpdateSchedule::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        if (k) out += '|';
        for (std::size_t j = 0; j < layers_[k].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(layers_[k][j]);
        }
    }
    return out + ")";
}

std::vector<SignTriple> sign_triples(const UpdateSchedule& schedule) {
    const int n = schedule.cells();
    auto sgn = [](int x) { return (x > 0) - (x < 0); };
    std::vector<SignTriple> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int a = schedule.layer_of((i + n - 1) % n);
        const int b = schedule.layer_of(i);
        const int c = schedule.layer_of((i + 1) % n);
        out[std::size_t(i)] = {sgn(a - b), sgn(b - c)};
    }
    return out;
}

std::uint64_t count_rules(int n) {
    if (n < 3 || n > 40) {
        throw BadParams("count_rules needs 3 <= n <= 40");
    }
    std::uint64_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    return pow3 - (std::uint64_t{1} << (n + 1)) + 2;
}

UpdateSchedule schedule(const TemporalRule& rule) {
    const int n = rule.size();
    if (rule.is_synchronous()) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return UpdateSchedule(n, {std::move(all)});
    }

    // Start right after a non-Equal link so each EQ run gets one class id.
    int start = 0;
    while (rule[(start + n - 1) % n] == Order::Equal) ++start;
    std::vector<int> cls(static_cast<std::size_t>(n));
    int classes = 0;
    for (int step = 0; step < n; ++step) {
        const int i = (start + step) % n;
        if (step > 0 && rule[(i + n - 1) % n] != Order::Equal) ++classes;
        cls[std::size_t(i)] = classes;
    }
    ++classes;

    // Edges go from the class that updates first to the one that follows.
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(classes));
    std::vector<int> indegree(static_cast<std::size_t>(classes), 0);
    for (int i = 0; i < n; ++i) {
        const int a = cls[std::size_t(i)];
        const int b = cls[std::size_t((i + 1) % n)];
        if (rule[i] == Order::Greater) {
            succ[std::size_t(a)].push_back(b);
            ++indegree[std::size_t(b)];
        } else if (rule[i] == Order::Less) {
            succ[std::size_t(b)].push_back(a);
            ++indegree[std::size_t(a)];
        }
    }

    std::vector<int> rank(static_cast<std::size_t>(classes), 0);
    std::vector<int> ready;
    for (int c = 0; c < classes; ++c) {
        if (indegree[std::size_t(c)] == 0) ready.push_back(c);
    }
    while (!ready.empty()) {
        const int a = ready.back();
        ready.pop_back();
        for (int b : succ[std::size_t(a)]) {
            rank[std::size_t(b)] = std::max(rank[std::size_t(b)], rank[std::size_t(a)] + 1);
            if (--indegree[std::size_t(b)] == 0) ready.push_back(b);
        }
    }

    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[std::size_t(i)] = rank[std::size_t(cls[std::size_t(i)])];
    return UpdateSchedule::from_labels(label);
}

TemporalRule from_partition(const UpdateSchedule& layers) {
    const int n = layers.cells();
    std::vector<Order> symbols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int here = layers.layer_of(i);
        const int next = layers.layer_of((i + 1) % n);
        symbols[std::size_t(i)] = here < next ? Order::Greater : here == next ? Order::Equal : Order::Less;
    }
    // An ordered partition never induces a cyclic precedence.
    return *TemporalRule::from_symbols(std::move(symbols));
}

std::uint64_t RuleStream::word_count(int n) {
    if (n < 3 || n > 40) {
        throw BadParams("rule enumeration needs 3 <= n <= 40");
    }
    std::uint64_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    return pow3;
}

RuleStream::RuleStream(int n) : RuleStream(n, 0, word_count(n)) {}

RuleStream::RuleStream(int n, std::uint64_t begin, std::uint64_t end)
    : n_(n), cursor_(begin), end_(std::min(end, word_count(n))) {}

std::optional<TemporalRule> RuleStream::next() {
    std::vector<Order> symbols(static_cast<std::size_t>(n_));
    while (cursor_ < end_) {
        std::uint64_t idx = cursor_++;
        for (int i = n_ - 1; i >= 0; --i) {
            symbols[std::size_t(i)] = Order(idx % 3);
            idx /= 3;
        }
        if (is_well_formed(symbols)) {
            return TemporalRule::from_symbols(symbols);
        }
    }
    return std::nullopt;
}

std::vector<TemporalRule> enumerate_rules(int n) {
    std::vector<TemporalRule> out;
    out.reserve(count_rules(n));
    RuleStream stream(n);
    while (auto rule = stream.next()) {
        out.push_back(*std::move(rule));
    }
    return out;
}

std::vector<TemporalRule> bijective_subset(int n) {
    if (n < 3 || n > 40) {
        throw BadParams("bijective_subset needs 3 <= n <= 40");
    }
    std::vector<TemporalRule> out;
    const std::uint64_t words = std::uint64_t{1} << n;
    out.reserve(words - 2);
    for (std::uint64_t bits = 1; bits + 1 < words; ++bits) {
        std::vector<Order> symbols(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            symbols[std::size_t(i)] = (bits >> (n - 1 - i)) & 1 ? Order::Greater : Order::Less;
        }
        out.push_back(*TemporalRule::from_symbols(std::move(symbols)));
    }
    return out;
}

}  // namespace asca
