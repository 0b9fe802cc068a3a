#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/errors.hpp"
#include "condsup/rational.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// N_p(f) = F(|f|^p)^{1/p}. `approx` is always filled; `exact` only for p = 1
/// where the norm is F(|f|).
struct NormValue {
    std::vector<double> approx;
    std::optional<Vector> exact;
};

/// Conditional L^p norm. Each atom is rescaled by its maximum M_F(|f|) before
/// exponentiation, so every powered term lies in [0, 1] and large p cannot
/// overflow.
inline NormValue n_p_norm(const Vector& f, const ConditionalSystem& sys, const Rational& p) {
    if (p < 1) throw DomainError("N_p requires p >= 1, got p = " + to_string(p));
    sys.require_member(f);
    const Vector magnitude = abs(f);
    NormValue out;
    if (p == 1) {
        out.exact = cond_expectation(magnitude, sys);
        for (const auto& v : *out.exact) out.approx.push_back(to_double(v));
        return out;
    }
    const double exponent = to_double(p);
    const Vector scale = cond_sup(magnitude, sys);
    out.approx.assign(f.size(), 0.0);
    for (const Atom& atom : sys.partition().atoms()) {
        const Rational& top = scale[atom.front()];
        if (top == 0) continue;
        Rational mass = 0;
        for (std::size_t w : atom) mass += sys.space().weight(w);
        double sum = 0.0;
        for (std::size_t w : atom) {
            double ratio = to_double(magnitude[w] / top);
            sum += to_double(sys.space().weight(w) / mass) * std::pow(ratio, exponent);
        }
        double value = to_double(top) * std::pow(sum, 1.0 / exponent);
        for (std::size_t w : atom) out.approx[w] = value;
    }
    return out;
}

struct LpLimitStep {
    unsigned long p;
    std::vector<double> norm;
    double gap;  ///< max_ω |N_p(f)_ω − M_F(f)_ω|
};

struct LpLimitReport {
    Vector limit;  ///< M_F(f)
    std::vector<LpLimitStep> steps;
    bool monotone;  ///< N_p non-decreasing in p at every outcome
};

/// Relative slack allowed when checking N_p for monotonicity in floating
/// point; the exact sequence is non-decreasing.
inline constexpr double kMonotoneSlack = 1e-12;

/// N_p(f) along p = 2, 4, 8, … ≤ p_max, with the sup-distance to M_F(f).
inline LpLimitReport lp_limit_estimate(const Vector& f, const ConditionalSystem& sys, unsigned long p_max = 4096) {
    sys.require_member(f);
    if (!is_nonnegative(f)) throw DomainError("lp_limit_estimate requires a non-negative vector");
    if (p_max < 2) throw DomainError("p_max must be at least 2");
    LpLimitReport report{cond_sup(f, sys), {}, true};
    std::vector<double> limit;
    for (const auto& v : report.limit) limit.push_back(to_double(v));
    for (unsigned long p = 2; p <= p_max; p *= 2) {
        NormValue value = n_p_norm(f, sys, Rational(static_cast<long>(p)));
        double gap = 0.0;
        for (std::size_t w = 0; w < f.size(); ++w) gap = std::max(gap, std::abs(value.approx[w] - limit[w]));
        if (!report.steps.empty()) {
            const auto& previous = report.steps.back().norm;
            for (std::size_t w = 0; w < f.size(); ++w)
                if (value.approx[w] < previous[w] - kMonotoneSlack * std::max(1.0, limit[w])) report.monotone = false;
        }
        report.steps.push_back({p, std::move(value.approx), gap});
        if (p > p_max / 2) break;
    }
    return report;
}

}  // namespace condsup
