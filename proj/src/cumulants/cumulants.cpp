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

#include "cumulants/cumulants.hpp"

#include "cumulants/error.hpp"
#include "cumulants/forest.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace cumulants {

std::string_view kind_name(CumulantKind kind) {
    switch (kind) {
    case CumulantKind::Classical: return "classical";
    case CumulantKind::Free: return "free";
    case CumulantKind::Boolean: return "boolean";
    case CumulantKind::Monotone: return "monotone";
    }
    return "?";
}

std::string_view kind_letter(CumulantKind kind) {
    switch (kind) {
    case CumulantKind::Classical: return "K";
    case CumulantKind::Free: return "R";
    case CumulantKind::Boolean: return "B";
    case CumulantKind::Monotone: return "H";
    }
    return "?";
}

std::string_view basis_name(Basis basis) {
    switch (basis) {
    case Basis::Moments: return "moments";
    case Basis::Classical: return "classical";
    case Basis::Free: return "free";
    case Basis::Boolean: return "boolean";
    case Basis::Monotone: return "monotone";
    }
    return "?";
}

std::optional<Basis> parse_basis(std::string_view text) {
    if (text == "moments" || text == "M") return Basis::Moments;
    if (text == "classical" || text == "K") return Basis::Classical;
    if (text == "free" || text == "R") return Basis::Free;
    if (text == "boolean" || text == "B") return Basis::Boolean;
    if (text == "monotone" || text == "H") return Basis::Monotone;
    return std::nullopt;
}

std::optional<CumulantKind> parse_kind(std::string_view text) {
    auto b = parse_basis(text);
    if (!b || *b == Basis::Moments) return std::nullopt;
    return static_cast<CumulantKind>(static_cast<int>(*b) - 1);
}

int cumulant_poly_limit(CumulantKind kind) { return kind == CumulantKind::Classical ? 8 : 9; }

namespace {

// Memo for polynomials that are handed out by reference; entries are never erased.
class PolyCache {
public:
    const MomentPolynomial* find(int key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second.get();
    }
    const MomentPolynomial& insert(int key, MomentPolynomial value) {
        std::unique_lock lock(mutex_);
        auto [it, fresh] = map_.try_emplace(key, nullptr);
        if (fresh) it->second = std::make_unique<MomentPolynomial>(std::move(value));
        return *it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<int, std::unique_ptr<MomentPolynomial>> map_;
};

PolyCache& multivariate_cache() {
    static PolyCache cache;
    return cache;
}

PolyCache& univariate_cache() {
    static PolyCache cache;
    return cache;
}

int cache_key(CumulantKind kind, int n) { return static_cast<int>(kind) * 64 + n; }

Rational signed_one(int k) { return (k % 2 == 1) ? Rational(1) : Rational(-1); }  // (-1)^{k-1}

MomentPolynomial compute_cumulant(CumulantKind kind, int n) {
    MomentPolynomial out(n);
    switch (kind) {
    case CumulantKind::Classical:
        for_each_partition(n, PartitionClass::All, [&](const SetPartition& s) {
            int k = s.block_count();
            out.add_scaled(moment_monomial(s), signed_one(k) * Rational(factorial(k - 1)));
        });
        break;
    case CumulantKind::Free: {
        auto top = SetPartition::coarsest(n);
        for_each_partition(n, PartitionClass::Noncrossing, [&](const SetPartition& s) {
            out.add_scaled(moment_monomial(s), Rational(mobius(s, top, Lattice::NC)));
        });
        break;
    }
    case CumulantKind::Boolean:
        for_each_partition(n, PartitionClass::Interval, [&](const SetPartition& s) {
            out.add_scaled(moment_monomial(s), signed_one(s.block_count()));
        });
        break;
    case CumulantKind::Monotone:
        out = MomentPolynomial::symbol(n, (n == 32) ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1));
        for_each_partition(n, PartitionClass::Noncrossing, [&](const SetPartition& s) {
            if (s.block_count() == 1) return;
            out.add_scaled(partitioned_cumulant(CumulantKind::Monotone, s),
                           -Rational(1) / Rational(tau_factorial(s)));
        });
        break;
    }
    return out;
}

std::vector<int> iota_positions(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

}  // namespace

const MomentPolynomial& cumulant_poly(CumulantKind kind, int n) {
    require(n >= 1, "cumulant order must be positive");
    require_limit(n, cumulant_poly_limit(kind), std::string(kind_name(kind)) + " cumulant");
    int key = cache_key(kind, n);
    if (auto* hit = multivariate_cache().find(key)) return *hit;
    return multivariate_cache().insert(key, compute_cumulant(kind, n));
}

MomentPolynomial partitioned_cumulant(CumulantKind kind, const SetPartition& pi) {
    int n = pi.n();
    MomentPolynomial out = MomentPolynomial::constant(n, 1);
    for (int b = 0; b < pi.block_count(); ++b) {
        auto elems = subset_elements(pi.mask(b));
        out = out * cumulant_poly(kind, static_cast<int>(elems.size())).relabel(elems, n);
    }
    return out;
}

MomentPolynomial univariate_cumulant(CumulantKind kind, int n) {
    int key = cache_key(kind, n);
    if (auto* hit = univariate_cache().find(key)) return *hit;
    return univariate_cache().insert(key, cumulant_poly(kind, n).univariate());
}

MomentPolynomial univariate_partitioned_cumulant(CumulantKind kind, const SetPartition& pi) {
    int n = pi.n();
    MomentPolynomial out = MomentPolynomial::constant(n, 1);
    for (int b = 0; b < pi.block_count(); ++b) {
        int k = std::popcount(pi.mask(b));
        out = out * univariate_cumulant(kind, k).relabel(iota_positions(k), n);
    }
    return out;
}

MomentPolynomial monotone_ordered_sum(int n) {
    MomentPolynomial out(n);
    for (const auto& op : enumerate_monotone(n))
        out.add_scaled(partitioned_cumulant(CumulantKind::Monotone, op.base),
                       Rational(1) / Rational(factorial(op.base.block_count())));
    return out;
}

Polynomial evaluate(const MomentPolynomial& p, const std::function<Polynomial(SubsetMask)>& value) {
    Polynomial out;
    for (const auto& [mono, c] : p.terms()) {
        Polynomial t = Polynomial::constant(c);
        for (SubsetMask s : mono) t *= value(s);
        out += t;
    }
    return out;
}

Rational evaluate(const MomentPolynomial& p, const std::function<Rational(SubsetMask)>& value) {
    Rational out;
    for (const auto& [mono, c] : p.terms()) {
        Rational t = c;
        for (SubsetMask s : mono) t *= value(s);
        out += t;
    }
    return out;
}

namespace {

void check_length(const Sequence& v) {
    require(!v.empty(), "sequence must be nonempty");
    require_limit(static_cast<int>(v.size()), kConvertLimit, "sequence length");
}

// For each n, the sum of 1/tau(pi)! over NC(n) grouped by block sizes.
using BlockSizes = std::vector<int>;
const std::map<BlockSizes, Rational>& monotone_weights(int n) {
    static std::shared_mutex mutex;
    static std::map<int, std::map<BlockSizes, Rational>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::map<BlockSizes, Rational> w;
    for_each_partition(n, PartitionClass::Noncrossing, [&](const SetPartition& s) {
        BlockSizes sizes;
        for (int b = 0; b < s.block_count(); ++b) sizes.push_back(std::popcount(s.mask(b)));
        std::sort(sizes.begin(), sizes.end());
        w[sizes] += Rational(1) / Rational(tau_factorial(s));
    });
    std::unique_lock lock(mutex);
    return cache.try_emplace(n, std::move(w)).first->second;
}

// Coefficient of z^k in M(z)^s where M = 1 + sum m_j z^j.
Rational power_coefficient(const Sequence& m, int s, int k) {
    std::vector<Rational> base(static_cast<std::size_t>(k) + 1);
    base[0] = 1;
    for (int j = 1; j <= k && j <= static_cast<int>(m.size()); ++j) base[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j - 1)];
    std::vector<Rational> acc(static_cast<std::size_t>(k) + 1);
    acc[0] = 1;
    for (int r = 0; r < s; ++r) {
        std::vector<Rational> next(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) {
            if (acc[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= k; ++j)
                next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * base[static_cast<std::size_t>(j)];
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(k)];
}

// n-th moment given cumulants c_1..c_n and moments m_1..m_{n-1}.
Rational next_moment(CumulantKind kind, const Sequence& c, const Sequence& m, int n) {
    auto C = [&](int k) -> const Rational& { return c[static_cast<std::size_t>(k - 1)]; };
    auto M = [&](int k) -> Rational { return k == 0 ? Rational(1) : m[static_cast<std::size_t>(k - 1)]; };
    Rational out;
    switch (kind) {
    case CumulantKind::Classical:
        for (int k = 1; k <= n; ++k) out += Rational(binomial(n - 1, k - 1)) * C(k) * M(n - k);
        break;
    case CumulantKind::Boolean:
        for (int k = 1; k <= n; ++k) out += C(k) * M(n - k);
        break;
    case CumulantKind::Free:
        for (int s = 1; s <= n; ++s) out += C(s) * power_coefficient(m, s, n - s);
        break;
    case CumulantKind::Monotone:
        for (const auto& [sizes, w] : monotone_weights(n)) {
            Rational t = w;
            for (int k : sizes) t *= C(k);
            out += t;
        }
        break;
    }
    return out;
}

}  // namespace

Sequence moments_from_cumulants(CumulantKind kind, const Sequence& cumulants) {
    check_length(cumulants);
    Sequence m;
    for (int n = 1; n <= static_cast<int>(cumulants.size()); ++n) m.push_back(next_moment(kind, cumulants, m, n));
    return m;
}

Sequence cumulants_from_moments(CumulantKind kind, const Sequence& moments) {
    check_length(moments);
    // Every moment formula is c_n plus terms in lower cumulants, so solve top-down.
    Sequence c;
    Sequence m;
    for (int n = 1; n <= static_cast<int>(moments.size()); ++n) {
        c.emplace_back(0);
        Rational rest = next_moment(kind, c, m, n);
        c.back() = moments[static_cast<std::size_t>(n - 1)] - rest;
        m.push_back(moments[static_cast<std::size_t>(n - 1)]);
    }
    return c;
}

Sequence convert_sequence(Basis from, Basis to, const Sequence& values) {
    check_length(values);
    if (from == to) return values;
    auto as_kind = [](Basis b) { return static_cast<CumulantKind>(static_cast<int>(b) - 1); };
    Sequence moments = from == Basis::Moments ? values : moments_from_cumulants(as_kind(from), values);
    return to == Basis::Moments ? moments : cumulants_from_moments(as_kind(to), moments);
}

TruncatedSeries moment_series(const Sequence& moments) {
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), moments.begin(), moments.end());
    return TruncatedSeries(static_cast<int>(moments.size()), std::move(c));
}

TruncatedSeries cumulant_series(const Sequence& cumulants) {
    std::vector<Rational> c{Rational(0)};
    c.insert(c.end(), cumulants.begin(), cumulants.end());
    return TruncatedSeries(static_cast<int>(cumulants.size()), std::move(c));
}

Sequence tilde_transform(const Sequence& moments) {
    Sequence b = cumulants_from_moments(CumulantKind::Boolean, moments);
    for (auto& v : b) v = -v;
    return moments_from_cumulants(CumulantKind::Free, b);
}

Sequence monotone_dilate(const Sequence& monotone_cumulants, const Rational& t) {
    Sequence h = monotone_cumulants;
    for (auto& v : h) v *= t;
    return moments_from_cumulants(CumulantKind::Monotone, h);
}

Polynomial boolean_poisson_kappa(int n) {
    require(n >= 1, "order must be positive");
    require_limit(n, kConvertLimit, "boolean Poisson cumulant");
    // m_k = x (1 + x)^{k-1}: a composition of k into j parts weighs x^j.
    Polynomial x = Polynomial::monomial(1);
    Polynomial one_plus_x({Rational(1), Rational(1)});
    std::vector<Polynomial> m{Polynomial::constant(1)};
    Polynomial p = x;
    for (int k = 1; k <= n; ++k) {
        m.push_back(p);
        p *= one_plus_x;
    }
    std::vector<Polynomial> kappa(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        Polynomial rest;
        for (int k = 1; k < j; ++k)
            rest += Rational(binomial(j - 1, k - 1)) * (kappa[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(j - k)]);
        kappa[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)] - rest;
    }
    return kappa[static_cast<std::size_t>(n)];
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    for (const auto& row : a) require(row.size() == n, "determinant needs a square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))); }

void check_prefix(const Sequence& v, int n) {
    require(n >= 1, "order must be positive");
    require(static_cast<int>(v.size()) >= n, "sequence shorter than the requested order");
}

Rational sign_power(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Rational determinant_cumulant(CumulantKind kind, const Sequence& moments, int n) {
    check_prefix(moments, n);
    auto m = [&](int k) { return moments[static_cast<std::size_t>(k - 1)]; };
    Matrix a = zero_matrix(n);
    for (int i = 1; i <= n; ++i) {
        if (i < n) a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)] = 1;
        for (int j = 1; j <= i; ++j) {
            Rational& e = a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (kind == CumulantKind::Classical) {
                // First column m_i/(i-1)!, then m_{i-j+1}/(i-j+1)!.
                e = j == 1 ? m(i) / Rational(factorial(i - 1)) : m(i - j + 1) / Rational(factorial(i - j + 1));
            } else if (kind == CumulantKind::Boolean) {
                e = m(i - j + 1);
            } else {
                throw InvalidArgument("determinant formulas exist for classical and boolean cumulants only");
            }
        }
    }
    Rational det = determinant(std::move(a)) * sign_power(n - 1);
    return kind == CumulantKind::Classical ? det * Rational(factorial(n - 1)) : det;
}

Rational determinant_moment(CumulantKind kind, const Sequence& cumulants, int n) {
    check_prefix(cumulants, n);
    auto c = [&](int k) { return cumulants[static_cast<std::size_t>(k - 1)]; };
    Matrix a = zero_matrix(n);
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)] =
                kind == CumulantKind::Classical ? Rational(-i) : Rational(-1);
        }
        for (int j = 1; j <= i; ++j) {
            Rational& e = a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (kind == CumulantKind::Classical) e = c(i - j + 1) / Rational(factorial(i - j));
            else if (kind == CumulantKind::Boolean) e = c(i - j + 1);
            else throw InvalidArgument("determinant formulas exist for classical and boolean cumulants only");
        }
    }
    return determinant(std::move(a));
}

}  // namespace cumulants
