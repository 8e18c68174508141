/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "cumulants/permutation.hpp"

#include "cumulants/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cumulants {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    int n = static_cast<int>(values_.size());
    require(n <= kMaxAmbient, "permutation too large");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        require(v >= 1 && v <= n, "permutation value out of range");
        require(!seen[static_cast<std::size_t>(v)], "permutation repeats a value");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    require(n >= 0 && n <= kMaxAmbient, "permutation size out of range");
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            require(a >= 1 && a <= n && b >= 1 && b <= n, "cycle element out of range");
            require(v[static_cast<std::size_t>(a - 1)] == 0, "element appears in two cycles");
            v[static_cast<std::size_t>(a - 1)] = b;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (v[static_cast<std::size_t>(i - 1)] == 0) v[static_cast<std::size_t>(i - 1)] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    std::vector<std::vector<int>> cycles;
    int maxe = 0;
    std::size_t i = 0;
    bool inside = false;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (!inside) {
            if (text[i] != '(') throw ParseError("expected '('", i);
            cycles.emplace_back();
            inside = true;
            ++i;
            skip();
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected element", i);
        std::size_t start = i;
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > kMaxAmbient) throw ParseError("element too large", start);
            ++i;
        }
        if (v == 0) throw ParseError("elements start at 1", start);
        cycles.back().push_back(static_cast<int>(v));
        maxe = std::max(maxe, static_cast<int>(v));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        } else if (i < text.size() && text[i] == ')') {
            inside = false;
            ++i;
            skip();
        } else {
            throw ParseError("expected ',' or ')'", i);
        }
    }
    if (inside) throw ParseError("unterminated cycle", text.size());
    if (n == 0) n = maxe;
    try {
        return from_cycles(n, cycles);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(values_.size() + 1, 0);
    for (int s = 1; s <= n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> c;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_word() const {
    std::vector<int> w;
    for (const auto& c : cycles()) w.insert(w.end(), c.begin(), c.end());
    return w;
}

std::string Permutation::cycle_str() const {
    std::string out;
    for (const auto& c : cycles()) {
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
        out += ")";
    }
    return out;
}

std::string Permutation::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
    return out + "]";
}

int Permutation::descents() const {
    int d = 0;
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) d += values_[i] > values_[i + 1];
    return d;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    require(n >= 1, "n must be positive");
    require_limit(n, kPermutationHardLimit, "permutations");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> cyclic_permutations(int n) {
    require(n >= 1, "n must be positive");
    require_limit(n, kPermutationHardLimit, "cyclic permutations");
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<Permutation> out;
    do {
        std::vector<int> word{1};
        word.insert(word.end(), rest.begin(), rest.end());
        out.push_back(Permutation::from_cycles(n, {word}));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

namespace {

// Blocks from maximal increasing segments of words.
SetPartition increasing_segments(int n, const std::vector<std::vector<int>>& words) {
    std::vector<SubsetMask> masks;
    for (const auto& w : words) {
        SubsetMask cur = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0 && w[i] < w[i - 1]) {
                masks.push_back(cur);
                cur = 0;
            }
            cur |= SubsetMask{1} << (w[i] - 1);
        }
        if (cur) masks.push_back(cur);
    }
    return SetPartition::from_masks(n, masks);
}

std::vector<int> orbit_word(const Permutation& sigma) {
    std::vector<int> w{1};
    for (int x = sigma(1); x != 1; x = sigma(x)) w.push_back(x);
    return w;
}

}  // namespace

Runs runs(const Permutation& sigma) {
    require(sigma.n() >= 1, "empty permutation");
    return {increasing_segments(sigma.n(), {sigma.values()}), sigma.descents()};
}

SetPartition cycles_partition(const Permutation& sigma) {
    std::vector<SubsetMask> masks;
    for (const auto& c : sigma.cycles()) {
        SubsetMask m = 0;
        for (int e : c) m |= SubsetMask{1} << (e - 1);
        masks.push_back(m);
    }
    return SetPartition::from_masks(sigma.n(), masks);
}

SetPartition cycle_runs(const Permutation& sigma) { return increasing_segments(sigma.n(), sigma.cycles()); }

bool is_cyclic(const Permutation& sigma) { return sigma.n() >= 1 && sigma.cycles().size() == 1; }

bool is_interval_type(const Permutation& sigma) {
    auto w = sigma.cycle_word();
    return std::is_sorted(w.begin(), w.end());
}

BigInt eulerian(int n, int k) {
    require(n >= 0, "negative Eulerian index");
    if (k < 0 || (n > 0 && k >= n) || (n == 0 && k != 0)) return 0;
    // <m,j> = (j+1)<m-1,j> + (m-j)<m-1,j-1>
    std::vector<BigInt> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            BigInt a = j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : BigInt(0);
            BigInt b = j >= 1 && j - 1 < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j - 1)] : BigInt(0);
            next[static_cast<std::size_t>(j)] = (j + 1) * a + (m - j) * b;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Polynomial eulerian_polynomial(int n, char variable) {
    if (n == 0) return Polynomial::constant(1, variable);
    std::vector<Rational> c;
    for (int k = 0; k < n; ++k) c.emplace_back(eulerian(n, k));
    return Polynomial(std::move(c), variable);
}

HeapOrder psi(const Permutation& sigma) {
    require(is_cyclic(sigma), "psi needs a full cycle");
    auto word = orbit_word(sigma);
    SetPartition base = cycle_runs(sigma);
    // Rank of each block by first appearance in the orbit word.
    std::vector<int> rank(static_cast<std::size_t>(base.block_count()), -1);
    int next = 0;
    for (int x : word) {
        int& r = rank[static_cast<std::size_t>(base.block_of(x))];
        if (r < 0) r = next++;
    }
    HeapOrder h{base, HeapMode::Interval, {}};
    for (int i = 0; i < base.block_count(); ++i)
        for (int j = i + 1; j < base.block_count(); ++j)
            if (hulls_intersect(base.mask(i), base.mask(j))) {
                if (rank[static_cast<std::size_t>(i)] < rank[static_cast<std::size_t>(j)]) h.edges.emplace_back(i, j);
                else h.edges.emplace_back(j, i);
            }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

Permutation psi_inverse(const HeapOrder& heap) {
    require(heap.mode == HeapMode::Interval, "psi inverse needs an interval heap");
    require(heap.is_heap(), "not an interval heap on its partition");
    require(heap.is_pyramid(), "psi inverse needs a pyramid");
    const SetPartition& p = heap.base;
    int k = p.block_count();
    std::vector<char> removed(static_cast<std::size_t>(k), 0);
    std::vector<int> word;
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int b = 0; b < k && pick < 0; ++b) {
            if (removed[static_cast<std::size_t>(b)]) continue;
            bool minimal = true;
            for (auto [hi, lo] : heap.edges)
                if (hi == b && !removed[static_cast<std::size_t>(lo)]) minimal = false;
            if (minimal) pick = b;  // blocks are indexed by minimum, so the first hit is leftmost
        }
        if (pick < 0) throw std::logic_error("heap has no minimal block");
        removed[static_cast<std::size_t>(pick)] = 1;
        auto elems = subset_elements(p.mask(pick));
        word.insert(word.begin(), elems.begin(), elems.end());
    }
    return Permutation::from_cycles(p.n(), {word});
}

Permutation phi(const Permutation& sigma) {
    require(!is_interval_type(sigma), "phi is undefined on permutations of interval type");
    auto cycles = sigma.cycles();
    // Locate the last descent of the concatenated word as (cycle, offset).
    int last_cycle = -1;
    std::size_t last_offset = 0;
    bool between = false;
    int prev = 0;
    bool have_prev = false;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (std::size_t i = 0; i < cycles[c].size(); ++i) {
            int v = cycles[c][i];
            if (have_prev && v < prev) {
                last_cycle = static_cast<int>(c);
                last_offset = i;
                between = i == 0;
            }
            prev = v;
            have_prev = true;
        }
    }
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (static_cast<int>(c) == last_cycle) {
            if (between) {
                // Join with the previous cycle.
                out.back().insert(out.back().end(), cycles[c].begin(), cycles[c].end());
            } else {
                // Split: the tail starts a new cycle.
                out.emplace_back(cycles[c].begin(), cycles[c].begin() + static_cast<std::ptrdiff_t>(last_offset));
                out.emplace_back(cycles[c].begin() + static_cast<std::ptrdiff_t>(last_offset), cycles[c].end());
            }
        } else {
            out.push_back(cycles[c]);
        }
    }
    return Permutation::from_cycles(sigma.n(), out);
}

}  // namespace cumulants
