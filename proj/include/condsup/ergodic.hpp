#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/errors.hpp"
#include "condsup/partition.hpp"
#include "condsup/sample_space.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// A conditional expectation preserving system on a finite space: F is the
/// global expectation and S f = f ∘ τ for a weight-preserving permutation τ.
/// S is then a Riesz homomorphism with S e = e and F S = F.
class TransformSystem {
public:
    TransformSystem(SampleSpace space, std::vector<std::size_t> tau)
        : sys_(space, Partition::trivial(space.size())), tau_(std::move(tau)) {
        const std::size_t n = sys_.size();
        if (tau_.size() != n)
            throw DimensionError("transform has " + std::to_string(tau_.size()) + " entries, expected " +
                                 std::to_string(n));
        std::vector<bool> hit(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (tau_[i] >= n || hit[tau_[i]])
                throw ValidationError("transform is not a permutation of 0.." + std::to_string(n - 1));
            hit[tau_[i]] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (sys_.space().weight(tau_[i]) != sys_.space().weight(i))
                throw ValidationError("transform does not preserve weights: outcome " + std::to_string(i) + " maps to " +
                                      std::to_string(tau_[i]) + " with a different weight");

        std::vector<bool> seen(n, false);
        for (std::size_t start = 0; start < n; ++start) {
            if (seen[start]) continue;
            std::vector<std::size_t> cycle;
            for (std::size_t w = start; !seen[w]; w = tau_[w]) {
                seen[w] = true;
                cycle.push_back(w);
            }
            cycles_.push_back(std::move(cycle));
        }
        period_ = 1;
        for (const auto& c : cycles_) period_ = std::lcm(period_, c.size());
    }

    const ConditionalSystem& system() const noexcept { return sys_; }
    const SampleSpace& space() const noexcept { return sys_.space(); }
    std::size_t size() const noexcept { return sys_.size(); }
    const std::vector<std::size_t>& permutation() const noexcept { return tau_; }
    /// Cycles of τ, each listed from its smallest element in orbit order.
    const std::vector<std::vector<std::size_t>>& cycles() const noexcept { return cycles_; }
    /// Smallest k ≥ 1 with τ^k = id (lcm of the cycle lengths).
    std::size_t period() const noexcept { return period_; }

private:
    ConditionalSystem sys_;
    std::vector<std::size_t> tau_;
    std::vector<std::vector<std::size_t>> cycles_;
    std::size_t period_;
};

/// (S^k f)(ω) = f(τ^k(ω)).
inline Vector apply_s(const TransformSystem& ts, const Vector& f, std::size_t k) {
    ts.system().require_member(f);
    Vector out = f;
    k %= ts.period();
    for (std::size_t step = 0; step < k; ++step) {
        Vector next = out;
        for (std::size_t w = 0; w < out.size(); ++w) next[w] = out[ts.permutation()[w]];
        out = std::move(next);
    }
    return out;
}

/// Ergodic iff τ is a single cycle, i.e. the only S-invariant vectors are
/// the constants.
inline bool is_ergodic(const TransformSystem& ts) { return ts.cycles().size() == 1; }

/// sup_{k ≥ 0} S^k f. The orbit of ω under τ is its cycle, so the time
/// maximum at ω is the maximum of f over that cycle.
inline Vector time_max(const TransformSystem& ts, const Vector& f) {
    ts.system().require_member(f);
    Vector out = f;
    for (const auto& cycle : ts.cycles()) {
        Rational best = f[cycle.front()];
        for (std::size_t w : cycle)
            if (f[w] > best) best = f[w];
        for (std::size_t w : cycle) out[w] = best;
    }
    return out;
}

/// (1/n) Σ_{k<n} S^k f, exact. On a cycle of length L, n = qL + r steps
/// visit every point of the cycle q times plus the next r points.
inline Vector cesaro_mean(const TransformSystem& ts, const Vector& f, std::size_t n) {
    if (n == 0) throw DomainError("Cesàro mean needs n >= 1");
    ts.system().require_member(f);
    const Rational steps(static_cast<long>(n));
    Vector out = Vector::zero(f.size());
    for (const auto& cycle : ts.cycles()) {
        const std::size_t len = cycle.size();
        const std::size_t rest = n % len;
        Rational total = 0;
        for (std::size_t w : cycle) total += f[w];
        const Rational base = total * Rational(static_cast<long>(n / len)) / steps;
        for (std::size_t i = 0; i < len; ++i) {
            if (rest == 0) {
                out[cycle[i]] = base;
                continue;
            }
            Rational partial = 0;
            for (std::size_t k = 0; k < rest; ++k) partial += f[cycle[(i + k) % len]];
            out[cycle[i]] = base + partial / steps;
        }
    }
    return out;
}

struct MaxErgodicReport {
    bool consistent;           ///< time_max = M_F on every probe
    std::size_t trials;        ///< random probes evaluated
    std::size_t mismatches;    ///< random probes where time_max ≠ M_F
    std::optional<Vector> counterexample;  ///< indicator of the first cycle, when τ has several
};

/// Random rational vector with numerators in [-100, 100] and denominators in
/// [1, 100].
inline Vector random_rational_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) values.emplace_back(num(rng), den(rng));
    return Vector(std::move(values));
}

/// Compares time_max(f) with cond_sup(f) on `trials` random vectors. When τ
/// is not a single cycle the indicator of the first cycle is probed as well:
/// its orbit never leaves the cycle, so its time maximum is the indicator
/// itself while M_F of it is e.
inline MaxErgodicReport max_ergodic_check(const TransformSystem& ts, std::size_t trials, std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    MaxErgodicReport report{true, trials, 0, std::nullopt};
    for (std::size_t i = 0; i < trials; ++i) {
        Vector f = random_rational_vector(ts.size(), rng);
        if (time_max(ts, f) != cond_sup(f, ts.system())) ++report.mismatches;
    }
    if (ts.cycles().size() > 1) {
        Vector probe = Vector::zero(ts.size());
        for (std::size_t w : ts.cycles().front()) probe[w] = 1;
        if (time_max(ts, probe) != cond_sup(probe, ts.system())) report.counterexample = std::move(probe);
    }
    report.consistent = report.mismatches == 0 && !report.counterexample;
    return report;
}

}  // namespace condsup
