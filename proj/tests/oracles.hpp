#pragma once

// Slow, direct reimplementations used as independent references in tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Cells = std::vector<int>;

inline Cells to_cells(std::uint64_t value, int n) {
    Cells c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[std::size_t(i)] = int((value >> (n - 1 - i)) & 1U);
    return c;
}

inline std::uint64_t to_value(const Cells& c) {
    std::uint64_t v = 0;
    for (int b : c) v = (v << 1) | std::uint64_t(b);
    return v;
}

inline int rule_output(int code, int l, int c, int r) { return (code >> (4 * l + 2 * c + r)) & 1; }

// label[i] is the time step at which cell i updates; cells with equal labels
// read the same snapshot.
inline Cells sweep_by_labels(int code, const std::vector<int>& label, Cells cells) {
    const int n = int(cells.size());
    const int top = *std::max_element(label.begin(), label.end());
    for (int t = 0; t <= top; ++t) {
        const Cells snapshot = cells;
        for (int i = 0; i < n; ++i) {
            if (label[std::size_t(i)] != t) continue;
            cells[std::size_t(i)] = rule_output(code, snapshot[std::size_t((i + n - 1) % n)], snapshot[std::size_t(i)],
                                                snapshot[std::size_t((i + 1) % n)]);
        }
    }
    return cells;
}

// Every surjective labelling of n cells onto 0..m-1, i.e. every ordered set
// partition.
inline std::vector<std::vector<int>> ordered_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> label(std::size_t(n), 0);
    while (true) {
        std::set<int> used(label.begin(), label.end());
        if (int(used.size()) == *std::max_element(label.begin(), label.end()) + 1) out.push_back(label);
        int i = n - 1;
        while (i >= 0 && label[std::size_t(i)] == n - 1) label[std::size_t(i--)] = 0;
        if (i < 0) break;
        ++label[std::size_t(i)];
    }
    return out;
}

// '<' when i updates after i+1, '>' when before, '=' together.
inline std::string word_of(const std::vector<int>& label) {
    const std::size_t n = label.size();
    std::string w;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = label[i];
        const int b = label[(i + 1) % n];
        w.push_back(a > b ? '<' : a < b ? '>' : '=');
    }
    return w;
}

inline bool word_valid(const std::string& w) {
    const bool lt = w.find('<') != std::string::npos;
    const bool gt = w.find('>') != std::string::npos;
    const bool eq_only = w.find_first_not_of('=') == std::string::npos;
    return eq_only || (lt && gt);
}

// One labelling per realizable word.
inline std::map<std::string, std::vector<int>> labelling_per_word(int n) {
    std::map<std::string, std::vector<int>> out;
    for (const auto& label : ordered_partitions(n)) out.emplace(word_of(label), label);
    return out;
}

inline std::vector<std::uint64_t> map_by_labels(int code, const std::vector<int>& label) {
    const int n = int(label.size());
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        out.push_back(to_value(sweep_by_labels(code, label, to_cells(v, n))));
    }
    return out;
}

// Order of the group generated by permutations of a small set, by closure.
inline std::size_t closure_order(const std::vector<std::vector<std::uint32_t>>& gens) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> queue;
    std::vector<std::uint32_t> id(gens.front().size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = std::uint32_t(i);
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<std::uint32_t> next(id.size());
            for (std::size_t x = 0; x < id.size(); ++x) next[x] = g[queue[head][x]];
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen.size();
}

// A word is realizable iff no strict precedence lies on a cycle of the
// constraint graph ('>' : i before i+1, '<' : i+1 before i, '=' : both ways,
// non-strict).
inline bool word_acyclic(const std::string& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::pair<std::size_t, std::size_t>> strict;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (w[i] == '>') {
            reach[i][j] = true;
            strict.emplace_back(i, j);
        } else if (w[i] == '<') {
            reach[j][i] = true;
            strict.emplace_back(j, i);
        } else {
            reach[i][j] = reach[j][i] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (reach[a][k] && reach[k][b]) reach[a][b] = true;
    for (const auto& [a, b] : strict) {
        if (reach[b][a]) return false;
    }
    return true;
}

}  // namespace oracle
