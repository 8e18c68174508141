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

#include "cumulants/partitions.hpp"

#include "cumulants/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace cumulants {

namespace {

SubsetMask bit(int element) { return SubsetMask{1} << (element - 1); }

int lowest(SubsetMask s) { return std::countr_zero(s) + 1; }
int highest(SubsetMask s) { return 32 - std::countl_zero(s); }

SubsetMask hull(SubsetMask s) {
    int lo = lowest(s);
    int hi = highest(s);
    SubsetMask upto = hi == 32 ? ~SubsetMask{0} : (SubsetMask{1} << hi) - 1;
    return upto & ~(bit(lo) - 1);
}

// Number of maximal runs in the merged label sequence of a and b.
int alternations(SubsetMask a, SubsetMask b) {
    SubsetMask all = a | b;
    int runs = 0;
    int last = -1;
    while (all) {
        SubsetMask low = all & (~all + 1);
        int label = (a & low) ? 0 : 1;
        if (label != last) {
            ++runs;
            last = label;
        }
        all &= all - 1;
    }
    return runs;
}

SubsetMask range_mask(int n) { return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1; }

}  // namespace

SetPartition SetPartition::from_rgs(std::vector<int> rgs) {
    require(!rgs.empty(), "partition of an empty set");
    require(static_cast<int>(rgs.size()) <= kMaxAmbient, "partition too large");
    SetPartition p;
    int next = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        int b = rgs[i];
        require(b >= 0 && b <= next, "not a restricted growth string");
        if (b == next) {
            p.masks_.push_back(0);
            ++next;
        }
        p.masks_[static_cast<std::size_t>(b)] |= bit(static_cast<int>(i) + 1);
    }
    p.rgs_ = std::move(rgs);
    return p;
}

SetPartition SetPartition::from_masks(int n, const std::vector<SubsetMask>& masks) {
    require(n >= 1 && n <= kMaxAmbient, "partition size out of range");
    std::vector<int> rgs(static_cast<std::size_t>(n), -1);
    std::vector<SubsetMask> sorted = masks;
    for (SubsetMask m : sorted) require(m != 0, "empty block");
    std::sort(sorted.begin(), sorted.end(), [](SubsetMask a, SubsetMask b) { return lowest(a) < lowest(b); });
    SubsetMask seen = 0;
    for (std::size_t b = 0; b < sorted.size(); ++b) {
        require((sorted[b] & seen) == 0, "blocks are not disjoint");
        require((sorted[b] & ~range_mask(n)) == 0, "block element out of range");
        seen |= sorted[b];
        for (int e : subset_elements(sorted[b])) rgs[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
    require(seen == range_mask(n), "blocks do not cover the ground set");
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    require(n >= 1 && n <= kMaxAmbient, "partition size out of range");
    std::vector<SubsetMask> masks;
    for (const auto& block : blocks) {
        require(!block.empty(), "empty block");
        SubsetMask m = 0;
        for (int e : block) {
            require(e >= 1 && e <= n, "block element out of range");
            require((m & bit(e)) == 0, "repeated element in block");
            m |= bit(e);
        }
        masks.push_back(m);
    }
    return from_masks(n, masks);
}

SetPartition SetPartition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    int maxe = 0;
    std::size_t i = 0;
    bool expect_number = true;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!expect_number) throw ParseError("unexpected digit", i);
            long v = 0;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > kMaxAmbient) throw ParseError("element too large", start);
                ++i;
            }
            if (v == 0) throw ParseError("elements start at 1", start);
            blocks.back().push_back(static_cast<int>(v));
            maxe = std::max(maxe, static_cast<int>(v));
            expect_number = false;
        } else if (c == ',' || c == '|') {
            if (expect_number) throw ParseError("expected element", i);
            if (c == '|') blocks.emplace_back();
            expect_number = true;
            ++i;
        } else {
            throw ParseError("unexpected character", i);
        }
    }
    if (expect_number) throw ParseError("expected element", text.size());
    try {
        return from_blocks(maxe, blocks);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

SetPartition SetPartition::parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_array()) throw ParseError("expected a list of blocks", 0);
    std::vector<std::vector<int>> blocks;
    int maxe = 0;
    for (const auto& b : j) {
        if (!b.is_array()) throw ParseError("expected a list of blocks", 0);
        std::vector<int> block;
        for (const auto& e : b) {
            if (!e.is_number_integer()) throw ParseError("block elements must be integers", 0);
            int v = e.get<int>();
            if (v < 1 || v > kMaxAmbient) throw ParseError("element out of range", 0);
            block.push_back(v);
            maxe = std::max(maxe, v);
        }
        blocks.push_back(std::move(block));
    }
    try {
        return from_blocks(maxe, blocks);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

SetPartition SetPartition::finest(int n) {
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::coarsest(int n) {
    return from_rgs(std::vector<int>(static_cast<std::size_t>(n), 0));
}

SubsetMask SetPartition::ground() const { return range_mask(n()); }

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out;
    for (SubsetMask m : masks_) out.push_back(subset_elements(m));
    return out;
}

std::string SetPartition::str() const {
    std::string out;
    for (std::size_t b = 0; b < masks_.size(); ++b) {
        if (b) out += "|";
        bool first = true;
        for (int e : subset_elements(masks_[b])) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(e);
        }
    }
    return out;
}

std::string SetPartition::json() const {
    std::string out = "[";
    for (std::size_t b = 0; b < masks_.size(); ++b) {
        if (b) out += ",";
        out += "[";
        bool first = true;
        for (int e : subset_elements(masks_[b])) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(e);
        }
        out += "]";
    }
    return out + "]";
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) return a.n() <=> b.n();
    return a.rgs_ <=> b.rgs_;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.rgs()) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
    return h;
}

PartitionClass parse_partition_class(std::string_view name) {
    if (name == "all") return PartitionClass::All;
    if (name == "noncrossing") return PartitionClass::Noncrossing;
    if (name == "interval") return PartitionClass::Interval;
    if (name == "irreducible") return PartitionClass::Irreducible;
    if (name == "connected") return PartitionClass::Connected;
    if (name == "irreducible_noncrossing") return PartitionClass::IrreducibleNoncrossing;
    if (name == "connected_noncrossing") return PartitionClass::ConnectedNoncrossing;
    throw InvalidArgument("unknown partition class '" + std::string(name) + "'");
}

std::string partition_class_name(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All: return "all";
        case PartitionClass::Noncrossing: return "noncrossing";
        case PartitionClass::Interval: return "interval";
        case PartitionClass::Irreducible: return "irreducible";
        case PartitionClass::Connected: return "connected";
        case PartitionClass::IrreducibleNoncrossing: return "irreducible_noncrossing";
        case PartitionClass::ConnectedNoncrossing: return "connected_noncrossing";
    }
    return "all";
}

bool blocks_cross(SubsetMask a, SubsetMask b) { return alternations(a, b) >= 4; }

bool block_nests_in(SubsetMask inner, SubsetMask outer) {
    return alternations(inner, outer) == 3 && lowest(outer) < lowest(inner);
}

bool hulls_intersect(SubsetMask a, SubsetMask b) { return (hull(a) & hull(b)) != 0; }

bool is_noncrossing(const SetPartition& p) {
    const auto& m = p.masks();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (blocks_cross(m[i], m[j])) return false;
    return true;
}

bool is_interval(const SetPartition& p) {
    for (SubsetMask m : p.masks())
        if (hull(m) != m) return false;
    return true;
}

bool is_irreducible(const SetPartition& p) {
    // Reducible iff some proper prefix [k] is a union of blocks.
    SubsetMask covered = 0;
    SubsetMask reach = 0;
    for (int e = 1; e < p.n(); ++e) {
        covered |= bit(e);
        reach |= p.mask(p.block_of(e));
        if ((reach & ~covered) == 0) return false;
    }
    return true;
}

bool is_connected(const SetPartition& p) { return noncrossing_closure(p).block_count() == 1; }

PartitionFlags classify(const SetPartition& p) {
    return {is_noncrossing(p), is_interval(p), is_irreducible(p), is_connected(p)};
}

bool belongs_to(const SetPartition& p, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All: return true;
        case PartitionClass::Noncrossing: return is_noncrossing(p);
        case PartitionClass::Interval: return is_interval(p);
        case PartitionClass::Irreducible: return is_irreducible(p);
        case PartitionClass::Connected: return is_connected(p);
        case PartitionClass::IrreducibleNoncrossing: return is_noncrossing(p) && is_irreducible(p);
        case PartitionClass::ConnectedNoncrossing: return is_noncrossing(p) && is_connected(p);
    }
    return false;
}

namespace {

SetPartition merge_to_fixpoint(const SetPartition& p, bool (*conflict)(SubsetMask, SubsetMask)) {
    std::vector<SubsetMask> m = p.masks();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (conflict(m[i], m[j])) {
                    m[i] |= m[j];
                    m.erase(m.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
    return SetPartition::from_masks(p.n(), m);
}

}  // namespace

SetPartition noncrossing_closure(const SetPartition& p) { return merge_to_fixpoint(p, blocks_cross); }

SetPartition interval_closure(const SetPartition& p) { return merge_to_fixpoint(p, hulls_intersect); }

std::vector<Component> components(const SetPartition& p, ComponentMode mode) {
    SetPartition closure = mode == ComponentMode::Irreducible ? interval_closure(p) : noncrossing_closure(p);
    std::vector<Component> out;
    for (SubsetMask s : closure.masks()) out.push_back({s, restrict(p, s)});
    return out;
}

bool lattice_leq(const SetPartition& a, const SetPartition& b) {
    require(a.n() == b.n(), "partitions of different sizes");
    for (SubsetMask m : a.masks())
        if ((m & b.mask(b.block_of(lowest(m)))) != m) return false;
    return true;
}

SetPartition lattice_join(const SetPartition& a, const SetPartition& b) {
    require(a.n() == b.n(), "partitions of different sizes");
    std::vector<SubsetMask> m = a.masks();
    // Merge every a-block with all a-blocks met by a common b-block.
    for (SubsetMask bm : b.masks()) {
        SubsetMask merged = 0;
        std::vector<SubsetMask> rest;
        for (SubsetMask x : m) {
            if (x & bm) merged |= x;
            else rest.push_back(x);
        }
        rest.push_back(merged);
        m = std::move(rest);
    }
    return SetPartition::from_masks(a.n(), m);
}

SetPartition lattice_meet(const SetPartition& a, const SetPartition& b) {
    require(a.n() == b.n(), "partitions of different sizes");
    std::vector<SubsetMask> m;
    for (SubsetMask x : a.masks())
        for (SubsetMask y : b.masks())
            if (x & y) m.push_back(x & y);
    return SetPartition::from_masks(a.n(), m);
}

bool triangle_geq(const SetPartition& sigma, const SetPartition& pi) {
    if (!lattice_leq(pi, sigma)) return false;
    for (SubsetMask w : sigma.masks())
        if (!is_noncrossing(restrict(pi, w))) return false;
    return true;
}

SetPartition restrict(const SetPartition& p, SubsetMask s) {
    require(s != 0, "restriction to the empty set");
    require((s & ~p.ground()) == 0, "restriction set outside the ground set");
    std::vector<int> rgs;
    std::vector<int> relabel(static_cast<std::size_t>(p.block_count()), -1);
    int next = 0;
    for (int e : subset_elements(s)) {
        int b = p.block_of(e);
        int& r = relabel[static_cast<std::size_t>(b)];
        if (r < 0) r = next++;
        rgs.push_back(r);
    }
    return SetPartition::from_rgs(std::move(rgs));
}

std::string lattice_name(Lattice lattice) {
    switch (lattice) {
        case Lattice::P: return "P";
        case Lattice::NC: return "NC";
        case Lattice::I: return "I";
    }
    return "P";
}

Lattice parse_lattice(std::string_view name) {
    if (name == "P" || name == "p" || name == "all") return Lattice::P;
    if (name == "NC" || name == "nc" || name == "noncrossing") return Lattice::NC;
    if (name == "I" || name == "i" || name == "interval") return Lattice::I;
    throw InvalidArgument("unknown lattice '" + std::string(name) + "'");
}

SetPartition kreweras(const SetPartition& p) {
    require(is_noncrossing(p), "Kreweras complement of a crossing partition");
    int n = p.n();
    // Block permutation: each block is a cycle in increasing order.
    std::vector<int> next(static_cast<std::size_t>(n + 1));
    for (SubsetMask m : p.masks()) {
        auto e = subset_elements(m);
        for (std::size_t i = 0; i < e.size(); ++i) next[static_cast<std::size_t>(e[i])] = e[(i + 1) % e.size()];
    }
    std::vector<int> prev(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) prev[static_cast<std::size_t>(next[static_cast<std::size_t>(i)])] = i;
    // K = P^{-1} gamma with gamma = (1 2 ... n).
    std::vector<int> rgs(static_cast<std::size_t>(n), -1);
    int label = 0;
    for (int s = 1; s <= n; ++s) {
        if (rgs[static_cast<std::size_t>(s - 1)] >= 0) continue;
        int x = s;
        do {
            rgs[static_cast<std::size_t>(x - 1)] = label;
            int g = x == n ? 1 : x + 1;
            x = prev[static_cast<std::size_t>(g)];
        } while (x != s);
        ++label;
    }
    return SetPartition::from_rgs(std::move(rgs));
}

BigInt mobius(const SetPartition& pi, const SetPartition& sigma, Lattice lattice) {
    require(lattice_leq(pi, sigma), "mobius needs pi <= sigma");
    if (lattice == Lattice::NC) require(is_noncrossing(pi) && is_noncrossing(sigma), "mobius in NC needs noncrossing partitions");
    if (lattice == Lattice::I) require(is_interval(pi) && is_interval(sigma), "mobius in I needs interval partitions");
    BigInt result = 1;
    for (SubsetMask w : sigma.masks()) {
        SetPartition local = restrict(pi, w);
        int k = local.block_count();
        switch (lattice) {
            case Lattice::P:
                result *= (k % 2 == 1 ? 1 : -1) * factorial(static_cast<unsigned>(k - 1));
                break;
            case Lattice::I:
                if (k % 2 == 0) result = -result;
                break;
            case Lattice::NC: {
                SetPartition complement = kreweras(local);
                for (SubsetMask v : complement.masks()) {
                    int size = std::popcount(v);
                    result *= (size % 2 == 1 ? 1 : -1) * catalan(static_cast<unsigned>(size - 1));
                }
                break;
            }
        }
    }
    return result;
}

int depth(const SetPartition& p) {
    require(is_noncrossing(p), "depth of a crossing partition");
    int best = 0;
    for (SubsetMask v : p.masks()) {
        int d = 1;
        for (SubsetMask w : p.masks())
            if (w != v && block_nests_in(v, w)) ++d;
        best = std::max(best, d);
    }
    return best;
}

MomentPolynomial moment_monomial(const SetPartition& p) {
    return MomentPolynomial::term(p.n(), Monomial(p.masks().begin(), p.masks().end()), 1);
}

int default_limit(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All:
        case PartitionClass::Irreducible:
        case PartitionClass::Connected: return 10;
        case PartitionClass::Noncrossing:
        case PartitionClass::IrreducibleNoncrossing:
        case PartitionClass::ConnectedNoncrossing: return 12;
        case PartitionClass::Interval: return 16;
    }
    return 10;
}

int hard_limit(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All:
        case PartitionClass::Irreducible:
        case PartitionClass::Connected: return 12;
        case PartitionClass::Noncrossing:
        case PartitionClass::IrreducibleNoncrossing:
        case PartitionClass::ConnectedNoncrossing: return 16;
        case PartitionClass::Interval: return 24;
    }
    return 12;
}

namespace {

int resolve_limit(int limit, int deflt, int hard, const std::string& what) {
    if (limit < 0) return deflt;
    if (limit > hard)
        throw ResourceLimit(what + ": limit " + std::to_string(limit) + " exceeds hard maximum " + std::to_string(hard));
    return limit;
}

struct Generator {
    int n;
    bool noncrossing;
    bool interval;
    const std::function<void(const std::vector<int>&)>& emit;
    std::vector<int> rgs;
    std::vector<SubsetMask> masks;

    void run(int e) {
        if (e > n) {
            emit(rgs);
            return;
        }
        int k = static_cast<int>(masks.size());
        for (int b = 0; b <= k; ++b) {
            if (interval && b < k && b != rgs.back()) continue;
            if (b == k) masks.push_back(0);
            masks[static_cast<std::size_t>(b)] |= bit(e);
            bool ok = true;
            if (noncrossing && b < k) {
                for (int c = 0; c < k && ok; ++c)
                    if (c != b && blocks_cross(masks[static_cast<std::size_t>(b)], masks[static_cast<std::size_t>(c)])) ok = false;
            }
            if (ok) {
                rgs.push_back(b);
                run(e + 1);
                rgs.pop_back();
            }
            masks[static_cast<std::size_t>(b)] &= ~bit(e);
            if (b == k) masks.pop_back();
        }
    }
};

}  // namespace

void for_each_partition(int n, PartitionClass cls, const std::function<void(const SetPartition&)>& visit, int limit) {
    require(n >= 1, "n must be positive");
    int lim = resolve_limit(limit, default_limit(cls), hard_limit(cls), "enumerate " + partition_class_name(cls));
    require_limit(n, lim, "enumerate " + partition_class_name(cls));
    bool nc = cls == PartitionClass::Noncrossing || cls == PartitionClass::IrreducibleNoncrossing ||
              cls == PartitionClass::ConnectedNoncrossing;
    bool iv = cls == PartitionClass::Interval;
    std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& rgs) {
        SetPartition p = SetPartition::from_rgs(rgs);
        if (nc || iv || belongs_to(p, cls)) {
            if (cls == PartitionClass::IrreducibleNoncrossing && !is_irreducible(p)) return;
            if (cls == PartitionClass::ConnectedNoncrossing && p.block_count() != 1) return;
            visit(p);
        }
    };
    Generator g{n, nc, iv, emit, {0}, {bit(1)}};
    g.run(2);
}

std::vector<SetPartition> enumerate(int n, PartitionClass cls, int limit) {
    std::vector<SetPartition> out;
    for_each_partition(n, cls, [&](const SetPartition& p) { out.push_back(p); }, limit);
    return out;
}

std::string OrderedPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += "|";
        bool first = true;
        for (int e : subset_elements(base.mask(order[i]))) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(e);
        }
    }
    return out;
}

bool is_monotone(const OrderedPartition& op) {
    int k = op.base.block_count();
    if (static_cast<int>(op.order.size()) != k) return false;
    std::vector<int> position(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        int b = op.order[static_cast<std::size_t>(i)];
        if (b < 0 || b >= k || position[static_cast<std::size_t>(b)] >= 0) return false;
        position[static_cast<std::size_t>(b)] = i;
    }
    if (!is_noncrossing(op.base)) return false;
    for (int v = 0; v < k; ++v)
        for (int w = 0; w < k; ++w)
            if (v != w && block_nests_in(op.base.mask(v), op.base.mask(w)) &&
                position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)])
                return false;
    return true;
}

namespace {

void linear_extensions(const std::vector<SubsetMask>& must_precede, std::vector<int>& prefix, SubsetMask placed,
                       const std::function<void(const std::vector<int>&)>& emit) {
    int k = static_cast<int>(must_precede.size());
    if (static_cast<int>(prefix.size()) == k) {
        emit(prefix);
        return;
    }
    for (int b = 0; b < k; ++b) {
        SubsetMask self = SubsetMask{1} << b;
        if ((placed & self) || (must_precede[static_cast<std::size_t>(b)] & ~placed)) continue;
        prefix.push_back(b);
        linear_extensions(must_precede, prefix, placed | self, emit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OrderedPartition> enumerate_monotone(int n, int limit) {
    require(n >= 1, "n must be positive");
    int lim = resolve_limit(limit, kMonotoneDefaultLimit, kMonotoneHardLimit, "enumerate monotone");
    require_limit(n, lim, "enumerate monotone");
    std::vector<OrderedPartition> out;
    for_each_partition(n, PartitionClass::Noncrossing, [&](const SetPartition& p) {
        int k = p.block_count();
        std::vector<SubsetMask> before(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < k; ++v)
            for (int w = 0; w < k; ++w)
                if (v != w && block_nests_in(p.mask(v), p.mask(w))) before[static_cast<std::size_t>(v)] |= SubsetMask{1} << w;
        std::vector<int> prefix;
        linear_extensions(before, prefix, 0, [&](const std::vector<int>& order) { out.push_back({p, order}); });
    }, hard_limit(PartitionClass::Noncrossing));
    return out;
}

}  // namespace cumulants
