#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/errors.hpp"
#include "condsup/filtration.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// One risky asset with non-negative adapted prices S_0..S_T and an implicit
/// zero-interest numéraire.
class MarketModel {
public:
    explicit MarketModel(AdaptedProcess prices) : prices_(std::move(prices)) {
        for (std::size_t t = 0; t <= prices_.horizon(); ++t)
            if (!is_nonnegative(prices_.at(t)))
                throw ValidationError("price at time " + std::to_string(t) + " has a negative entry");
    }

    MarketModel(Filtration filtration, std::vector<Vector> prices)
        : MarketModel(AdaptedProcess(std::move(filtration), std::move(prices))) {}

    const Filtration& filtration() const noexcept { return prices_.filtration(); }
    const AdaptedProcess& prices() const noexcept { return prices_; }
    std::size_t horizon() const noexcept { return prices_.horizon(); }
    std::size_t size() const noexcept { return filtration().size(); }
    const Vector& price(std::size_t t) const { return prices_.at(t); }
    /// ΔS_t = S_t − S_{t−1}, for 1 ≤ t ≤ T.
    Vector increment(std::size_t t) const { return price(t) - price(t - 1); }
    const Partition& partition(std::size_t t) const { return filtration().partition(t); }
    ConditionalSystem system(std::size_t t) const { return filtration().system(t); }

private:
    AdaptedProcess prices_;
};

/// Holdings θ_start, …, θ_{T−1}; θ_t is the position carried from t to t+1.
class Strategy {
public:
    Strategy(std::size_t start, std::vector<Vector> holdings) : start_(start), holdings_(std::move(holdings)) {}

    static Strategy zero(const MarketModel& m, std::size_t start) {
        return Strategy(start, std::vector<Vector>(m.horizon() - start, Vector::zero(m.size())));
    }

    std::size_t start() const noexcept { return start_; }
    std::size_t steps() const noexcept { return holdings_.size(); }
    const Vector& holding(std::size_t t) const { return holdings_.at(t - start_); }
    Vector& holding(std::size_t t) { return holdings_.at(t - start_); }
    const std::vector<Vector>& holdings() const noexcept { return holdings_; }

private:
    std::size_t start_;
    std::vector<Vector> holdings_;
};

/// A payoff h_T ∈ R(F_T).
struct Claim {
    Vector payoff;
};

inline void require_claim(const MarketModel& m, const Claim& h) {
    m.system(m.horizon()).require_member(h.payoff);
    if (!m.partition(m.horizon()).is_measurable(h.payoff))
        throw ValidationError("claim is not measurable at the horizon");
}

/// v_{t0,T} = p + Σ_{i=t0+1}^{T} θ_{i−1} ΔS_i.
inline Vector portfolio_value(const MarketModel& m, const Strategy& strat, std::size_t t0, const Vector& p) {
    if (t0 > m.horizon())
        throw DomainError("start time " + std::to_string(t0) + " is past the horizon " + std::to_string(m.horizon()));
    if (strat.start() != t0 || strat.steps() != m.horizon() - t0)
        throw DomainError("strategy covers times " + std::to_string(strat.start()) + ".." +
                          std::to_string(strat.start() + strat.steps()) + ", expected " + std::to_string(t0) + ".." +
                          std::to_string(m.horizon()));
    m.system(t0).require_member(p);
    if (!m.partition(t0).is_measurable(p))
        throw ValidationError("initial capital is not measurable at time " + std::to_string(t0));
    Vector value = p;
    for (std::size_t i = t0; i < m.horizon(); ++i) {
        const Vector& theta = strat.holding(i);
        m.system(i).require_member(theta);
        if (!m.partition(i).is_measurable(theta))
            throw ValidationError("strategy is not adapted at time " + std::to_string(i));
        value += theta * m.increment(i + 1);
    }
    return value;
}

// ---------------------------------------------------------------------------
// Absence of immediate profit

enum class BoundSide {
    lower,  ///< m_{F_t}(S_u) > S_t: the price can only rise
    upper,  ///< S_t > M_{F_t}(S_u): the price can only fall
};

inline std::string_view to_string(BoundSide s) { return s == BoundSide::lower ? "lower" : "upper"; }

/// A negative, F_t-measurable price that super-replicates the zero claim.
struct ImmediateProfit {
    std::size_t time;
    Vector price;       ///< ≤ 0 and non-zero
    Strategy strategy;  ///< price + v_{t,T} ≥ 0
};

struct AipViolation {
    std::size_t time;
    std::size_t later;  ///< t + 1 for the one-step check, u for the multi-period one
    std::size_t atom_index;
    Atom atom;
    BoundSide side;
    Rational spot;   ///< S_t on the atom
    Rational bound;  ///< m_{F_t}(S_u) or M_{F_t}(S_u) on the atom
};

struct AipReport {
    bool holds;
    std::vector<AipViolation> violations;
    std::vector<ImmediateProfit> witnesses;  ///< one per one-step violation
};

namespace detail {
inline ImmediateProfit one_step_profit(const MarketModel& m, const AipViolation& v) {
    // Long the atom when the price can only rise, short it when it can only fall.
    Rational direction = v.side == BoundSide::lower ? 1 : -1;
    Strategy strat = Strategy::zero(m, v.time);
    Vector price = Vector::zero(m.size());
    for (std::size_t w : v.atom) {
        strat.holding(v.time)[w] = direction;
        price[w] = -(direction * (v.bound - v.spot));
    }
    return {v.time, std::move(price), std::move(strat)};
}

inline std::vector<AipViolation> bound_violations(const MarketModel& m, std::size_t t, std::size_t u) {
    std::vector<AipViolation> out;
    const ConditionalSystem sys = m.system(t);
    const Vector lower = cond_inf(m.price(u), sys);
    const Vector upper = cond_sup(m.price(u), sys);
    const Vector& spot = m.price(t);
    for (std::size_t a = 0; a < sys.partition().atom_count(); ++a) {
        const Atom& atom = sys.partition().atom(a);
        std::size_t w = atom.front();
        if (lower[w] > spot[w]) out.push_back({t, u, a, atom, BoundSide::lower, spot[w], lower[w]});
        if (spot[w] > upper[w]) out.push_back({t, u, a, atom, BoundSide::upper, spot[w], upper[w]});
    }
    return out;
}
}  // namespace detail

/// AIP holds iff m_{F_t}(S_{t+1}) ≤ S_t ≤ M_{F_t}(S_{t+1}) for all t < T.
/// Each violated atom comes with an explicit immediate-profit witness.
inline AipReport aip_check(const MarketModel& m) {
    AipReport report{true, {}, {}};
    for (std::size_t t = 0; t < m.horizon(); ++t) {
        for (auto& v : detail::bound_violations(m, t, t + 1)) {
            report.witnesses.push_back(detail::one_step_profit(m, v));
            report.violations.push_back(std::move(v));
        }
    }
    report.holds = report.violations.empty();
    return report;
}

/// The two-index form m_{F_t}(S_u) ≤ S_t ≤ M_{F_t}(S_u), 0 ≤ t ≤ u ≤ T.
/// Always agrees with aip_check; violations carry no witness.
inline AipReport aip_check_multiperiod(const MarketModel& m) {
    AipReport report{true, {}, {}};
    for (std::size_t t = 0; t <= m.horizon(); ++t)
        for (std::size_t u = t; u <= m.horizon(); ++u)
            for (auto& v : detail::bound_violations(m, t, u)) report.violations.push_back(std::move(v));
    report.holds = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// No arbitrage

struct ArbitrageCertificate {
    std::size_t time;
    std::size_t atom_index;
    Atom atom;
    Strategy strategy;  ///< ±indicator of the atom at `time`, zero elsewhere
    Vector terminal;    ///< v_{t,T} ≥ 0, non-zero
};

struct NaReport {
    bool holds;
    std::optional<ArbitrageCertificate> certificate;
};

/// NA by per-node sign analysis: on every atom A of every partition t < T,
/// ΔS_{t+1} is either identically zero on A or takes both signs there.
/// Otherwise ±1_A held over (t, t+1] is an arbitrage.
inline NaReport arbitrage_bruteforce(const MarketModel& m) {
    for (std::size_t t = 0; t < m.horizon(); ++t) {
        const Vector step = m.increment(t + 1);
        const Partition& part = m.partition(t);
        for (std::size_t a = 0; a < part.atom_count(); ++a) {
            bool up = false;
            bool down = false;
            for (std::size_t w : part.atom(a)) {
                up = up || step[w] > 0;
                down = down || step[w] < 0;
            }
            if (up == down) continue;
            Strategy strat = Strategy::zero(m, t);
            for (std::size_t w : part.atom(a)) strat.holding(t)[w] = up ? 1 : -1;
            Vector terminal = portfolio_value(m, strat, t, Vector::zero(m.size()));
            return {false, ArbitrageCertificate{t, a, part.atom(a), std::move(strat), std::move(terminal)}};
        }
    }
    return {true, std::nullopt};
}

struct NaCheckReport {
    bool holds;
    /// min_A S_{t+1} < S_t < max_A S_{t+1} on every atom where ΔS_{t+1} ≢ 0
    bool strictness_hypothesis;
    AipReport aip;
    /// Set when the hypothesis failed and the sign analysis decided.
    std::optional<NaReport> fallback;
};

/// Under the strictness hypothesis (tested with singleton components, i.e.
/// pointwise) NA is equivalent to AIP, so the conditional-supremum bounds
/// decide. Otherwise the verdict defers to arbitrage_bruteforce.
inline NaCheckReport na_check(const MarketModel& m) {
    bool strict = true;
    for (std::size_t t = 0; t < m.horizon() && strict; ++t) {
        const ConditionalSystem sys = m.system(t);
        const Vector lower = cond_inf(m.price(t + 1), sys);
        const Vector upper = cond_sup(m.price(t + 1), sys);
        const Vector& spot = m.price(t);
        for (const Atom& atom : sys.partition().atoms()) {
            std::size_t w = atom.front();
            bool flat = lower[w] == spot[w] && upper[w] == spot[w];
            if (!flat && !(lower[w] < spot[w] && spot[w] < upper[w])) {
                strict = false;
                break;
            }
        }
    }
    NaCheckReport report{false, strict, aip_check(m), std::nullopt};
    if (strict) {
        report.holds = report.aip.holds;
    } else {
        report.fallback = arbitrage_bruteforce(m);
        report.holds = report.fallback->holds;
    }
    return report;
}

}  // namespace condsup
