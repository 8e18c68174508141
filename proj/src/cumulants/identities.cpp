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

#include "cumulants/identities.hpp"

#include "cumulants/beta.hpp"
#include "cumulants/cumulants.hpp"
#include "cumulants/error.hpp"
#include "cumulants/forest.hpp"
#include "cumulants/graph.hpp"
#include "cumulants/permutation.hpp"
#include "json.hpp"

#include <random>

namespace cumulants {

namespace {

using K = CumulantKind;

const std::vector<IdentityInfo> kCatalog = {
    {IdentityId::Free2Boolean, "free2boolean", "B_n = sum_{irr NC(n)} R_pi", 8},
    {IdentityId::Class2Free, "class2free", "R_n = sum_{conn P(n)} K_pi", 7},
    {IdentityId::Class2Boolean, "class2boolean", "B_n = sum_{irr P(n)} K_pi", 7},
    {IdentityId::Boolean2Free, "boolean2free", "R_n = sum_{irr NC(n)} (-1)^{|pi|-1} B_pi", 8},
    {IdentityId::Free2ClassTutte, "free2class_tutte", "K_n = sum_{conn P(n)} (-1)^{|pi|-1} T_{G(pi)}(1,0) R_pi", 7},
    {IdentityId::Mono2BooleanMultivariate, "thm1_mono2boolean", "B_n = sum_{irr NC(n)} H_pi / tau(pi)! = sum_{irr M(n)} H_pi / |pi|!", 8},
    {IdentityId::Mono2FreeMultivariate, "thm1_mono2free", "R_n = sum_{irr NC(n)} (-1)^{|pi|-1} H_pi / tau(pi)!", 8},
    {IdentityId::Free2MonoUnivariate, "thm2_free2mono", "h_n = sum_{irr NC(n)} alpha_pi r_pi", 8},
    {IdentityId::Boolean2MonoUnivariate, "thm2_boolean2mono", "h_n = sum_{irr NC(n)} (-1)^{|pi|-1} alpha_pi b_pi", 8},
    {IdentityId::Class2MonoUnivariate, "thm2_class2mono", "h_n = sum_{irr P(n)} alpha_{nc closure of pi} kappa_pi", 8},
    {IdentityId::Boolean2ClassTutte, "thm3_boolean2class_tutte", "K_n = sum_{irr P(n)} (-1)^{|pi|-1} T_{anti-interval graph}(1,0) B_pi", 7},
    {IdentityId::CycleRuns, "thm4_cyclecruns", "K_n = sum over cyclic sigma of (-1)^{#cycleruns-1} B_{cycleruns(sigma)}", 8},
    {IdentityId::Runs, "cor_runs", "K_n = sum over sigma(1)=1 of (-1)^{d(sigma)} B_{runs(sigma)}", 8},
    {IdentityId::MomentCumulantK, "moment_cumulant_K", "m_[n] = sum_{P(n)} K_pi", 8},
    {IdentityId::MomentCumulantR, "moment_cumulant_R", "m_[n] = sum_{NC(n)} R_pi", 9},
    {IdentityId::MomentCumulantB, "moment_cumulant_B", "m_[n] = sum_{I(n)} B_pi", 9},
    {IdentityId::MomentCumulantH, "moment_cumulant_H", "m_[n] = sum_{M(n)} H_pi / |pi|! = sum_{NC(n)} H_pi / tau(pi)!", 9},
    {IdentityId::MobiusInversions, "mobius_inversions", "A_pi = sum_{sigma <= pi} m_sigma mu(sigma, pi) on P, NC, I", 6},
    {IdentityId::SeriesB, "series_B", "B(z) M(z) = M(z) - 1", 9},
    {IdentityId::SeriesR, "series_R", "R(z M(z)) = M(z) - 1 and M(z/(1+R(z))) = 1 + R(z)", 9},
    {IdentityId::SwapIdentities, "swap_identities", "1 + R(z/(1-B)) = 1/(1-B) and 1 - B(z/(1+R)) = 1/(1+R)", 9},
    {IdentityId::TildeRelations, "tilde_lemma", "R(X~) = -B(X) implies B(X~) = -R(X) and H(X~) = -H(X)", 9},
    {IdentityId::MonotoneFlowInteger, "monotone_flow_integer", "zM(t+s, z) = zM(t, zM(s, z)) for integer t, s", 9},
    {IdentityId::LenczewskiSum, "lenczewski_sum", "sum_{NC(n)} P_pi(N) r_pi = m_n(X(N)) for N = 1..5", 7},
    {IdentityId::BetaExpansion, "beta_expansion", "K_n = sum_{P(n)} beta(pi) H_pi", 6},
    {IdentityId::BetaReducible, "thm5_reducible", "beta(pi) = 0 for reducible pi", 7},
    {IdentityId::BetaNoNesting, "thm5_nonesting", "beta(pi) = (-1)^{|pi|-1} T_{G(pi)}(1,0) for irreducible pi without nestings", 7},
    {IdentityId::BetaDepthTwo, "thm5_depth2", "beta(pi) = (-1)^{|pi|-1} / |pi| for irreducible noncrossing pi of depth <= 2", 7},
    {IdentityId::FactorialSum, "cor9_factorial", "sum_{irr P(n)} T_{anti-interval graph}(1,0) = (n-1)!, refined by |pi| into Eulerian numbers", 8},
    {IdentityId::EulerianKappa, "prop10_eulerian", "b_k = x for all k gives kappa_n = x E_{n-1}(-x)", 9},
    {IdentityId::DeterminantFormulas, "determinant_formulas", "Hessenberg determinants for kappa_n, b_n and back to m_n", 9},
    {IdentityId::LogBesselCarlitz, "logbessel_carlitz", "n! beta(pi_n) are log-Bessel coefficients and satisfy the Carlitz recursion", 7},
};

constexpr std::size_t kWitnessChars = 4000;
constexpr int kRandomSequences = 25;

class Checker {
public:
    explicit Checker(IdentityReport& r) : r_(r) {}

    void equal(const std::string& what, const MomentPolynomial& lhs, const MomentPolynomial& rhs) {
        r_.lhs_terms += lhs.size();
        r_.rhs_terms += rhs.size();
        if (lhs != rhs) fail(what, "lhs - rhs = " + (lhs - rhs).str());
        ++checks_;
    }
    template <class T>
    void same(const std::string& what, const T& lhs, const T& rhs) {
        r_.lhs_terms += 1;
        r_.rhs_terms += 1;
        if (!(lhs == rhs)) fail(what, "lhs = " + lhs.str() + ", rhs = " + rhs.str());
        ++checks_;
    }
    void series(const std::string& what, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        r_.lhs_terms += static_cast<std::size_t>(lhs.order()) + 1;
        r_.rhs_terms += static_cast<std::size_t>(rhs.order()) + 1;
        if (!(lhs == rhs)) fail(what, "lhs = " + lhs.json() + ", rhs = " + rhs.json());
        ++checks_;
    }
    void detail(const std::string& key, const std::string& value) { r_.details.emplace_back(key, value); }
    void finish() { detail("comparisons", std::to_string(checks_)); }

private:
    void fail(const std::string& what, std::string text) {
        if (!r_.holds) return;
        r_.holds = false;
        if (text.size() > kWitnessChars) text = text.substr(0, kWitnessChars) + " ...";
        r_.witness = what + ": " + text;
    }

    IdentityReport& r_;
    int checks_ = 0;
};

SubsetMask full_mask(int n) { return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1; }

MomentPolynomial top_moment(int n) { return MomentPolynomial::symbol(n, full_mask(n)); }

Rational sign(int k) { return k % 2 == 1 ? Rational(1) : Rational(-1); }  // (-1)^{k-1}

MomentPolynomial sum_over(int n, PartitionClass cls, K kind, const std::function<Rational(const SetPartition&)>& coef,
                          bool univariate = false) {
    MomentPolynomial out(n);
    for_each_partition(n, cls, [&](const SetPartition& p) {
        Rational c = coef(p);
        if (c.is_zero()) return;
        out.add_scaled(univariate ? univariate_partitioned_cumulant(kind, p) : partitioned_cumulant(kind, p), c);
    });
    return out;
}

std::vector<int> iota(int from, int to) {  // from..to inclusive
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

MomentPolynomial cumulant_on(K kind, const std::vector<int>& positions, int n) {
    return cumulant_poly(kind, static_cast<int>(positions.size())).relabel(positions, n);
}

MomentPolynomial interval_moment(int from, int to, int n) {  // m_{from..to}, 1 when empty
    if (from > to) return MomentPolynomial::constant(n, 1);
    SubsetMask s = 0;
    for (int i = from; i <= to; ++i) s |= SubsetMask{1} << (i - 1);
    return MomentPolynomial::symbol(n, s);
}

std::vector<Sequence> random_sequences(int n, unsigned seed) {
    std::mt19937 rng(seed * 7919u + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Sequence> out;
    for (int i = 0; i < kRandomSequences; ++i) {
        Sequence s;
        for (int k = 0; k < n; ++k) s.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
        out.push_back(std::move(s));
    }
    return out;
}

// Cumulants c_1..c_n by evaluating the univariate Moebius-inverted polynomials.
Sequence mobius_route(K kind, const Sequence& m, int n) {
    Sequence out;
    for (int k = 1; k <= n; ++k)
        out.push_back(evaluate(univariate_cumulant(kind, k), std::function<Rational(SubsetMask)>([&](SubsetMask s) {
                                   return m[static_cast<std::size_t>(std::popcount(s) - 1)];
                               })));
    return out;
}

Sequence negated(Sequence s) {
    for (auto& v : s) v = -v;
    return s;
}

std::string seq_str(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

// --- individual identities -------------------------------------------------

void free2boolean(int n, Checker& c) {
    c.equal("B_n", cumulant_poly(K::Boolean, n),
            sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Free, [](const SetPartition&) { return Rational(1); }));
}

void class2free(int n, Checker& c) {
    c.equal("R_n", cumulant_poly(K::Free, n),
            sum_over(n, PartitionClass::Connected, K::Classical, [](const SetPartition&) { return Rational(1); }));
}

void class2boolean(int n, Checker& c) {
    c.equal("B_n", cumulant_poly(K::Boolean, n),
            sum_over(n, PartitionClass::Irreducible, K::Classical, [](const SetPartition&) { return Rational(1); }));
}

void boolean2free(int n, Checker& c) {
    c.equal("R_n", cumulant_poly(K::Free, n),
            sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Boolean,
                     [](const SetPartition& p) { return sign(p.block_count()); }));
}

void free2class_tutte(int n, Checker& c) {
    c.equal("K_n", cumulant_poly(K::Classical, n),
            sum_over(n, PartitionClass::Connected, K::Free, [](const SetPartition& p) {
                return sign(p.block_count()) * tutte_eval(crossing_graph(p), 1, 0);
            }));
}

constexpr int kOrderedFormLimit = 6;

MomentPolynomial ordered_irreducible_sum(int n, bool alternating) {
    MomentPolynomial out(n);
    for (const auto& op : enumerate_monotone(n)) {
        if (!is_irreducible(op.base)) continue;
        int k = op.base.block_count();
        Rational w = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
        if (alternating) w *= sign(k);
        out.add_scaled(partitioned_cumulant(K::Monotone, op.base), w);
    }
    return out;
}

void mono2boolean(int n, Checker& c) {
    const auto& b = cumulant_poly(K::Boolean, n);
    c.equal("B_n via tau", b, sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Monotone, [](const SetPartition& p) {
                return Rational(1) / Rational(tau_factorial(p));
            }));
    if (n <= kOrderedFormLimit) c.equal("B_n via ordered partitions", b, ordered_irreducible_sum(n, false));
}

void mono2free(int n, Checker& c) {
    const auto& r = cumulant_poly(K::Free, n);
    c.equal("R_n via tau", r, sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Monotone, [](const SetPartition& p) {
                return sign(p.block_count()) / Rational(tau_factorial(p));
            }));
    if (n <= kOrderedFormLimit) c.equal("R_n via ordered partitions", r, ordered_irreducible_sum(n, true));
}

void free2mono(int n, Checker& c) {
    c.equal("h_n", univariate_cumulant(K::Monotone, n),
            sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Free, [](const SetPartition& p) { return alpha(p); }, true));
}

void boolean2mono(int n, Checker& c) {
    c.equal("h_n", univariate_cumulant(K::Monotone, n),
            sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Boolean,
                     [](const SetPartition& p) { return sign(p.block_count()) * alpha(p); }, true));
}

void class2mono(int n, Checker& c) {
    c.equal("h_n", univariate_cumulant(K::Monotone, n),
            sum_over(n, PartitionClass::Irreducible, K::Classical,
                     [](const SetPartition& p) { return alpha(noncrossing_closure(p)); }, true));
}

void boolean2class_tutte(int n, Checker& c) {
    c.equal("K_n", cumulant_poly(K::Classical, n),
            sum_over(n, PartitionClass::Irreducible, K::Boolean, [](const SetPartition& p) {
                return sign(p.block_count()) * tutte_eval(anti_interval_graph(p), 1, 0);
            }));
}

constexpr int kPermutationExpansionLimit = 7;

void cycle_runs_identity(int n, Checker& c) {
    MomentPolynomial rhs(n);
    for (const auto& s : cyclic_permutations(n)) {
        auto p = cycle_runs(s);
        rhs.add_scaled(partitioned_cumulant(K::Boolean, p), sign(p.block_count()));
    }
    c.equal("K_n", cumulant_poly(K::Classical, n), rhs);
    if (n <= kPermutationExpansionLimit) {
        // The cancellation behind it: the signed sum over all of S_n leaves the Boolean moment expansion.
        MomentPolynomial all(n);
        for_each_permutation(n, [&](const Permutation& s) {
            auto p = cycle_runs(s);
            int e = p.block_count() - static_cast<int>(s.cycles().size());
            all.add_scaled(partitioned_cumulant(K::Boolean, p), e % 2 == 0 ? Rational(1) : Rational(-1));
        });
        c.equal("m_[n] as a signed sum over S_n", top_moment(n), all);
    }
}

void runs_identity(int n, Checker& c) {
    MomentPolynomial rhs(n);
    for_each_permutation(n, [&](const Permutation& s) {
        if (s(1) != 1) return;
        auto r = runs(s);
        rhs.add_scaled(partitioned_cumulant(K::Boolean, r.partition), r.descents % 2 == 0 ? Rational(1) : Rational(-1));
    });
    c.equal("K_n", cumulant_poly(K::Classical, n), rhs);
}

constexpr int kMultiplicativeLimit = 6;
constexpr int kMonotoneOrderedLimit = 7;

void moment_cumulant(K kind, int n, Checker& c) {
    PartitionClass cls = kind == K::Classical ? PartitionClass::All
                       : kind == K::Boolean   ? PartitionClass::Interval
                                              : PartitionClass::Noncrossing;
    if (kind == K::Monotone) {
        c.equal("m_[n] via tau", top_moment(n), sum_over(n, cls, kind, [](const SetPartition& p) {
                    return Rational(1) / Rational(tau_factorial(p));
                }));
        if (n <= kMonotoneOrderedLimit) c.equal("m_[n] via monotone partitions", top_moment(n), monotone_ordered_sum(n));
        return;
    }
    c.equal("m_[n]", top_moment(n), sum_over(n, cls, kind, [](const SetPartition&) { return Rational(1); }));
    if (n > kMultiplicativeLimit) return;
    // Multiplicative extension over the same lattice.
    std::vector<SetPartition> members;
    for_each_partition(n, cls, [&](const SetPartition& p) { members.push_back(p); });
    for (const auto& pi : members) {
        MomentPolynomial rhs(n);
        for (const auto& s : members)
            if (lattice_leq(s, pi)) rhs += partitioned_cumulant(kind, s);
        c.equal("m_pi for pi = " + pi.str(), moment_monomial(pi), rhs);
    }
}

void mobius_inversions(int n, Checker& c) {
    std::vector<SetPartition> all = enumerate(n, PartitionClass::All);
    struct Case {
        K kind;
        Lattice lattice;
        bool (*member)(const SetPartition&);
    };
    const Case cases[] = {{K::Classical, Lattice::P, [](const SetPartition&) { return true; }},
                          {K::Free, Lattice::NC, is_noncrossing},
                          {K::Boolean, Lattice::I, is_interval}};
    for (const auto& cs : cases) {
        for (const auto& pi : all) {
            if (!cs.member(pi)) continue;
            MomentPolynomial rhs(n);
            for (const auto& s : all)
                if (cs.member(s) && lattice_leq(s, pi)) rhs.add_scaled(moment_monomial(s), Rational(mobius(s, pi, cs.lattice)));
            c.equal(std::string(kind_letter(cs.kind)) + "_pi for pi = " + pi.str(), partitioned_cumulant(cs.kind, pi), rhs);
        }
    }
}

void series_b(int n, Checker& c) {
    MomentPolynomial rhs = cumulant_poly(K::Boolean, n);
    for (int p = 1; p < n; ++p) rhs += cumulant_on(K::Boolean, iota(1, p), n) * interval_moment(p + 1, n, n);
    c.equal("coefficient of z_1...z_n", top_moment(n), rhs);
    for (const auto& m : random_sequences(n, 1)) {
        auto M = moment_series(m);
        auto B = cumulant_series(mobius_route(K::Boolean, m, n));
        c.series("B M = M - 1", B * M, M - TruncatedSeries::one(n));
        c.series("M = 1/(1-B)", M, series_reciprocal(TruncatedSeries::one(n) - B));
    }
}

// Sum over first-block decompositions: positions 1 = a_1 < ... < a_s, gaps filled by moments.
void add_free_words(int n, int last, std::vector<int>& chosen, MomentPolynomial& out) {
    // chosen holds a_1..a_s; the gap after a_s runs from a_s + 1 to the next choice or n.
    for (int next = last + 1; next <= n + 1; ++next) {
        if (next == n + 1) {
            MomentPolynomial t = cumulant_on(K::Free, chosen, n);
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                int from = chosen[i] + 1;
                int to = i + 1 < chosen.size() ? chosen[i + 1] - 1 : n;
                t = t * interval_moment(from, to, n);
            }
            out += t;
        } else {
            chosen.push_back(next);
            add_free_words(n, next, chosen, out);
            chosen.pop_back();
        }
    }
}

void series_r(int n, Checker& c) {
    MomentPolynomial rhs(n);
    std::vector<int> chosen{1};
    add_free_words(n, 1, chosen, rhs);
    c.equal("coefficient of z_1...z_n", top_moment(n), rhs);
    auto z = TruncatedSeries::identity(n);
    auto one = TruncatedSeries::one(n);
    for (const auto& m : random_sequences(n, 2)) {
        auto M = moment_series(m);
        auto R = cumulant_series(mobius_route(K::Free, m, n));
        c.series("1 + R(zM) = M", one + series_compose(R, z * M), M);
        c.series("M(z/(1+R)) = 1 + R", series_compose(M, z * series_reciprocal(one + R)), one + R);
    }
}

void swap_identities(int n, Checker& c) {
    auto z = TruncatedSeries::identity(n);
    auto one = TruncatedSeries::one(n);
    for (const auto& m : random_sequences(n, 3)) {
        auto B = cumulant_series(mobius_route(K::Boolean, m, n));
        auto R = cumulant_series(mobius_route(K::Free, m, n));
        auto inv_b = series_reciprocal(one - B);
        auto inv_r = series_reciprocal(one + R);
        c.series("1 + R(z/(1-B)) = 1/(1-B)", one + series_compose(R, z * inv_b), inv_b);
        c.series("1 - B(z/(1+R)) = 1/(1+R)", one - series_compose(B, z * inv_r), inv_r);
        // Replacing (R, B) by (-B, -R) maps each identity onto the other.
        auto Rt = -B, Bt = -R;
        auto inv_bt = series_reciprocal(one - Bt);
        auto inv_rt = series_reciprocal(one + Rt);
        c.series("swapped left identity", one + series_compose(Rt, z * inv_bt), inv_bt);
        c.series("swapped right identity", one - series_compose(Bt, z * inv_rt), inv_rt);
    }
}

constexpr int kTildeMultivariateLimit = 7;

void tilde_relations(int n, Checker& c) {
    for (const auto& m : random_sequences(n, 4)) {
        Sequence mt = tilde_transform(m);
        c.same("R(X~) = -B(X)", Polynomial(mobius_route(K::Free, mt, n)), Polynomial(negated(mobius_route(K::Boolean, m, n))));
        c.same("B(X~) = -R(X)", Polynomial(mobius_route(K::Boolean, mt, n)), Polynomial(negated(mobius_route(K::Free, m, n))));
        c.same("H(X~) = -H(X)", Polynomial(mobius_route(K::Monotone, mt, n)),
               Polynomial(negated(mobius_route(K::Monotone, m, n))));
        c.same("tilde(tilde(m)) = m", Polynomial(tilde_transform(mt)), Polynomial(m));
        c.same("X(-1) = X~", Polynomial(monotone_dilate(mobius_route(K::Monotone, m, n), -1)), Polynomial(mt));
    }
    if (n > kTildeMultivariateLimit) return;
    // Multivariate: the moments of X~ on a subset S are sum_{NC(S)} (-1)^{|pi|} B_pi(X_S).
    std::vector<MomentPolynomial> local;  // indexed by |S|, ambient |S|
    local.emplace_back(0);
    for (int k = 1; k <= n; ++k)
        local.push_back(sum_over(k, PartitionClass::Noncrossing, K::Boolean,
                                 [](const SetPartition& p) { return -sign(p.block_count()); }));
    auto image = [&](SubsetMask s) {
        auto e = subset_elements(s);
        return local[e.size()].relabel(e, n);
    };
    c.equal("R_n(X~) = -B_n(X)", cumulant_poly(K::Free, n).substitute(image), cumulant_poly(K::Boolean, n) * Rational(-1));
    c.equal("B_n(X~) = -R_n(X)", cumulant_poly(K::Boolean, n).substitute(image), cumulant_poly(K::Free, n) * Rational(-1));
    c.equal("H_n(X~) = -H_n(X)", cumulant_poly(K::Monotone, n).substitute(image), cumulant_poly(K::Monotone, n) * Rational(-1));
}

TruncatedSeries flow(const Sequence& h, int t) {
    auto m = monotone_dilate(h, t);
    int n = static_cast<int>(h.size());
    std::vector<Rational> c{Rational(0), Rational(1)};
    c.insert(c.end(), m.begin(), m.end());
    return TruncatedSeries(n + 1, std::move(c));  // z M_t(z)
}

void monotone_flow(int n, Checker& c) {
    for (const auto& h : random_sequences(n, 5)) {
        c.series("t = 0 is the identity", flow(h, 0), TruncatedSeries::identity(n + 1));
        for (int t = -2; t <= 2; ++t)
            for (int s = -2; s <= 2; ++s)
                c.series("flow at t=" + std::to_string(t) + ", s=" + std::to_string(s), flow(h, t + s),
                         series_compose(flow(h, t), flow(h, s)));
        c.same("X(-1) = X~", Polynomial(monotone_dilate(h, -1)), Polynomial(tilde_transform(monotone_dilate(h, 1))));
    }
}

constexpr int kLenczewskiColors = 5;

void lenczewski(int n, Checker& c) {
    std::vector<SetPartition> nc = enumerate(n, PartitionClass::Noncrossing);
    for (int colors = 1; colors <= kLenczewskiColors; ++colors) {
        MomentPolynomial lhs(n), rhs(n);
        for (const auto& p : nc) {
            lhs.add_scaled(univariate_partitioned_cumulant(K::Free, p), labelling_polynomial(p)(colors));
            rhs.add_scaled(univariate_partitioned_cumulant(K::Monotone, p),
                           Rational(colors).pow(p.block_count()) / Rational(tau_factorial(p)));
        }
        c.equal("N = " + std::to_string(colors), lhs, rhs);
    }
}

void beta_expansion(int n, Checker& c) {
    MomentPolynomial rhs(n);
    for_each_partition(n, PartitionClass::All, [&](const SetPartition& p) {
        Rational b = beta_formula(p);
        c.same("recursion = closed form at " + p.str(), beta_recursive(p), b);
        if (!b.is_zero()) rhs.add_scaled(partitioned_cumulant(K::Monotone, p), b);
    });
    c.equal("K_n", cumulant_poly(K::Classical, n), rhs);
}

bool has_nesting(const SetPartition& p) {
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = 0; j < p.block_count(); ++j)
            if (i != j && block_nests_in(p.mask(i), p.mask(j))) return true;
    return false;
}

void beta_reducible(int n, Checker& c) {
    int count = 0;
    for_each_partition(n, PartitionClass::All, [&](const SetPartition& p) {
        if (is_irreducible(p)) return;
        ++count;
        c.same("beta closed form at " + p.str(), beta_formula(p), Rational(0));
        c.same("beta recursion at " + p.str(), beta_recursive(p), Rational(0));
    });
    c.detail("reducible_partitions", std::to_string(count));
}

void beta_no_nesting(int n, Checker& c) {
    int count = 0;
    for_each_partition(n, PartitionClass::Irreducible, [&](const SetPartition& p) {
        if (has_nesting(p)) return;
        ++count;
        Rational expected = sign(p.block_count()) * tutte_eval(crossing_graph(p), 1, 0);
        c.same("beta at " + p.str(), beta_formula(p), expected);
    });
    c.detail("nesting_free_irreducible", std::to_string(count));
}

void beta_depth_two(int n, Checker& c) {
    int count = 0;
    for_each_partition(n, PartitionClass::IrreducibleNoncrossing, [&](const SetPartition& p) {
        if (depth(p) > 2) return;
        ++count;
        int k = p.block_count();
        c.same("beta at " + p.str(), beta_formula(p), sign(k) / Rational(k));
    });
    c.detail("depth_at_most_two", std::to_string(count));
}

void factorial_sum(int n, Checker& c) {
    Rational total;
    std::vector<Rational> by_size(static_cast<std::size_t>(n) + 1);
    for_each_partition(n, PartitionClass::Irreducible, [&](const SetPartition& p) {
        Rational t = tutte_eval(anti_interval_graph(p), 1, 0);
        total += t;
        by_size[static_cast<std::size_t>(p.block_count())] += t;
    });
    c.same("sum", total, Rational(factorial(static_cast<unsigned>(n - 1))));
    std::vector<Rational> sizes;
    for (int k = 1; k <= n; ++k) {
        c.same("blocks = " + std::to_string(k), by_size[static_cast<std::size_t>(k)], Rational(eulerian(n - 1, k - 1)));
        sizes.push_back(by_size[static_cast<std::size_t>(k)]);
    }
    c.detail("sum", total.str());
    c.detail("by_block_count", seq_str(sizes));
}

void eulerian_kappa(int n, Checker& c) {
    Polynomial kappa = boolean_poisson_kappa(n);
    Polynomial expected = Polynomial::monomial(1) * eulerian_polynomial(n - 1).shifted(-1, 0);
    c.same("kappa_n", kappa, expected);
    if (n <= cumulant_poly_limit(K::Classical)) {
        Polynomial x = Polynomial::monomial(1), one_plus_x({Rational(1), Rational(1)});
        Polynomial via_mobius = evaluate(univariate_cumulant(K::Classical, n), std::function<Polynomial(SubsetMask)>([&](SubsetMask s) {
                                             Polynomial v = x;
                                             for (int i = 1; i < std::popcount(s); ++i) v *= one_plus_x;
                                             return v;
                                         }));
        c.same("kappa_n through the Moebius polynomial", via_mobius, expected);
    }
    c.detail("kappa", kappa.str());
}

void determinants(int n, Checker& c) {
    for (const auto& m : random_sequences(n, 6)) {
        Sequence kappa = n <= cumulant_poly_limit(K::Classical) ? mobius_route(K::Classical, m, n)
                                                                : cumulants_from_moments(K::Classical, m);
        Sequence b = mobius_route(K::Boolean, m, n);
        c.same("kappa_n", determinant_cumulant(K::Classical, m, n), kappa.back());
        c.same("b_n", determinant_cumulant(K::Boolean, m, n), b.back());
        c.same("m_n from kappa", determinant_moment(K::Classical, kappa, n), m.back());
        c.same("m_n from b", determinant_moment(K::Boolean, b, n), m.back());
    }
}

void logbessel(int n, Checker& c) {
    auto expected = logbessel_coefficients(n);
    std::vector<Rational> seq;
    for (int k = 1; k <= n; ++k) {
        auto p = nested_pairs(k);
        Rational f(factorial(static_cast<unsigned>(k)));
        Rational closed = beta_formula(p) * f;
        c.same("closed form at k=" + std::to_string(k), closed, expected[static_cast<std::size_t>(k - 1)]);
        c.same("recursion at k=" + std::to_string(k), beta_recursive(p) * f, closed);
        seq.push_back(closed);
    }
    for (int k = 2; k <= n; ++k) {
        std::vector<Rational> prefix(seq.begin(), seq.begin() + (k - 1));
        c.same("Carlitz step to k=" + std::to_string(k), carlitz_next(prefix), seq[static_cast<std::size_t>(k - 1)]);
    }
    c.detail("sequence", seq_str(seq));
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : kCatalog)
        if (info.id == id) return info;
    throw InvalidArgument("unknown identity");
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    if (name == "thm4_cycleruns") return IdentityId::CycleRuns;
    for (const auto& info : kCatalog)
        if (info.name == name) return info.id;
    return std::nullopt;
}

std::string IdentityReport::json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["n"] = n;
    j["holds"] = holds;
    j["lhs_terms"] = lhs_terms;
    j["rhs_terms"] = rhs_terms;
    if (!witness.empty()) j["witness"] = witness;
    if (!details.empty()) {
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [k, v] : details) d[k] = v;
        j["details"] = d;
    }
    return j.dump();
}

IdentityReport verify_identity(IdentityId id, int n) {
    const auto& info = identity_info(id);
    require(n >= 1, "n must be positive");
    require_limit(n, info.max_n, std::string(info.name));
    IdentityReport r;
    r.identity = std::string(info.name);
    r.n = n;
    Checker c(r);
    switch (id) {
    case IdentityId::Free2Boolean: free2boolean(n, c); break;
    case IdentityId::Class2Free: class2free(n, c); break;
    case IdentityId::Class2Boolean: class2boolean(n, c); break;
    case IdentityId::Boolean2Free: boolean2free(n, c); break;
    case IdentityId::Free2ClassTutte: free2class_tutte(n, c); break;
    case IdentityId::Mono2BooleanMultivariate: mono2boolean(n, c); break;
    case IdentityId::Mono2FreeMultivariate: mono2free(n, c); break;
    case IdentityId::Free2MonoUnivariate: free2mono(n, c); break;
    case IdentityId::Boolean2MonoUnivariate: boolean2mono(n, c); break;
    case IdentityId::Class2MonoUnivariate: class2mono(n, c); break;
    case IdentityId::Boolean2ClassTutte: boolean2class_tutte(n, c); break;
    case IdentityId::CycleRuns: cycle_runs_identity(n, c); break;
    case IdentityId::Runs: runs_identity(n, c); break;
    case IdentityId::MomentCumulantK: moment_cumulant(K::Classical, n, c); break;
    case IdentityId::MomentCumulantR: moment_cumulant(K::Free, n, c); break;
    case IdentityId::MomentCumulantB: moment_cumulant(K::Boolean, n, c); break;
    case IdentityId::MomentCumulantH: moment_cumulant(K::Monotone, n, c); break;
    case IdentityId::MobiusInversions: mobius_inversions(n, c); break;
    case IdentityId::SeriesB: series_b(n, c); break;
    case IdentityId::SeriesR: series_r(n, c); break;
    case IdentityId::SwapIdentities: swap_identities(n, c); break;
    case IdentityId::TildeRelations: tilde_relations(n, c); break;
    case IdentityId::MonotoneFlowInteger: monotone_flow(n, c); break;
    case IdentityId::LenczewskiSum: lenczewski(n, c); break;
    case IdentityId::BetaExpansion: beta_expansion(n, c); break;
    case IdentityId::BetaReducible: beta_reducible(n, c); break;
    case IdentityId::BetaNoNesting: beta_no_nesting(n, c); break;
    case IdentityId::BetaDepthTwo: beta_depth_two(n, c); break;
    case IdentityId::FactorialSum: factorial_sum(n, c); break;
    case IdentityId::EulerianKappa: eulerian_kappa(n, c); break;
    case IdentityId::DeterminantFormulas: determinants(n, c); break;
    case IdentityId::LogBesselCarlitz: logbessel(n, c); break;
    }
    c.finish();
    return r;
}

IdentityReport experiment_multivariate_alpha(int n) {
    require(n >= 1, "n must be positive");
    require_limit(n, kExperimentLimit, "multivariate alpha experiment");
    IdentityReport r;
    r.identity = "multivariate_alpha";
    r.n = n;
    Checker c(r);
    const auto& h = cumulant_poly(K::Monotone, n);
    c.equal("H_n from R", h, sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Free,
                                     [](const SetPartition& p) { return alpha(p); }));
    c.equal("H_n from B", h, sum_over(n, PartitionClass::IrreducibleNoncrossing, K::Boolean,
                                     [](const SetPartition& p) { return sign(p.block_count()) * alpha(p); }));
    c.equal("H_n from K", h, sum_over(n, PartitionClass::Irreducible, K::Classical,
                                     [](const SetPartition& p) { return alpha(noncrossing_closure(p)); }));
    c.detail("status", "experimental");
    c.finish();
    return r;
}

}  // namespace cumulants
