#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condsup/errors.hpp"
#include "condsup/market.hpp"
#include "condsup/rational.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// The one-step minimax at some node is unbounded below, which happens
/// exactly when AIP fails there.
class UnboundedPriceError : public Error {
public:
    UnboundedPriceError(std::size_t time, Atom atom)
        : Error("superhedging price is unbounded below: AIP fails at time " + std::to_string(time) + " on atom " +
                to_string(atom)),
          time_(time),
          atom_(std::move(atom)) {}

    std::size_t time() const noexcept { return time_; }
    const Atom& atom() const noexcept { return atom_; }

private:
    std::size_t time_;
    Atom atom_;
};

/// A scenario (S_{t+1}(ω), π_{t+1}(ω)) seen from one node.
struct NodePoint {
    Rational spot;
    Rational value;

    friend bool operator==(const NodePoint&, const NodePoint&) = default;
};

struct NodeSolution {
    Rational value;  ///< min_θ max_ω (value_ω − θ (spot_ω − s))
    Rational theta;  ///< optimal holding
};

/// Solves min over θ ∈ ℝ of g(θ) = max_ω (y_ω − θ d_ω), d_ω = x_ω − s, by
/// walking the breakpoints of the lower envelope of the affine pieces.
///
/// The optimal θ form a closed interval. Its left end is returned when the
/// interval is bounded below; when it is not (s is the largest scenario
/// price) the right end is returned, and θ = 0 when every d_ω vanishes.
/// Returns nullopt when g is unbounded below, i.e. s lies outside
/// [min x, max x].
inline std::optional<NodeSolution> solve_node_minimax(std::vector<NodePoint> points, const Rational& s) {
    std::sort(points.begin(), points.end(), [](const NodePoint& a, const NodePoint& b) {
        return a.spot != b.spot ? a.spot < b.spot : a.value < b.value;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<Rational> d;
    d.reserve(points.size());
    bool rises = false;
    bool falls = false;
    bool flat = false;
    for (const auto& p : points) {
        d.push_back(p.spot - s);
        rises = rises || d.back() > 0;
        falls = falls || d.back() < 0;
        flat = flat || d.back() == 0;
    }
    auto g = [&](const Rational& theta) {
        Rational best = points.front().value - theta * d.front();
        for (std::size_t i = 1; i < points.size(); ++i) {
            Rational v = points[i].value - theta * d[i];
            if (v > best) best = v;
        }
        return best;
    };

    if (!rises || !falls) {
        if (!flat) return std::nullopt;
        Rational level = 0;
        bool first = true;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (d[i] == 0 && (first || points[i].value > level)) {
                level = points[i].value;
                first = false;
            }
        if (!rises && !falls) return NodeSolution{level, 0};
        // Pieces with d ≠ 0 all tilt the same way; θ must push them below `level`.
        std::optional<Rational> edge;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (d[i] == 0) continue;
            Rational cut = (points[i].value - level) / d[i];
            if (!edge || (rises ? cut > *edge : cut < *edge)) edge = cut;
        }
        return NodeSolution{level, *edge};
    }

    std::optional<NodeSolution> best;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (d[i] == d[j]) continue;
            Rational theta = (points[i].value - points[j].value) / (d[i] - d[j]);
            Rational value = g(theta);
            if (!best || value < best->value || (value == best->value && theta < best->theta))
                best = NodeSolution{value, theta};
        }
    }
    return best;
}

/// Concave envelope of the points evaluated at s: the largest interpolation
/// λ y_i + (1 − λ) y_j with λ x_i + (1 − λ) x_j = s. Every affine dominator
/// of the points lies above it, so it is a lower bound for any node price.
/// Returns nullopt when s lies outside the scenario prices.
inline std::optional<Rational> concave_envelope_at(const std::vector<NodePoint>& points, const Rational& s) {
    std::optional<Rational> best;
    for (const auto& lo : points) {
        if (lo.spot > s) continue;
        for (const auto& hi : points) {
            if (hi.spot < s) continue;
            Rational v = lo.spot == hi.spot
                             ? (lo.value < hi.value ? hi.value : lo.value)
                             : lo.value + (hi.value - lo.value) * (s - lo.spot) / (hi.spot - lo.spot);
            if (!best || v > *best) best = v;
        }
    }
    return best;
}

namespace detail {
inline std::vector<NodePoint> node_points(const MarketModel& m, std::size_t t, const Atom& atom, const Vector& next) {
    std::vector<NodePoint> pts;
    pts.reserve(atom.size());
    for (std::size_t w : atom) pts.push_back({m.price(t + 1)[w], next[w]});
    return pts;
}
}  // namespace detail

struct SuperhedgeResult {
    std::size_t time;
    Vector price;                ///< π_t ∈ R(F_t)
    std::vector<Vector> values;  ///< π_t, π_{t+1}, …, π_T = h
    Strategy strategy;           ///< θ_t, …, θ_{T−1}; π_t + v_{t,T} ≥ h
};

/// Minimal superhedging price by backward induction: π_T = h and on every
/// atom A of F_s, π_s = min_θ max_{ω∈A} (π_{s+1}(ω) − θ ΔS_{s+1}(ω)).
/// Throws UnboundedPriceError when AIP fails at a node after `t`.
inline SuperhedgeResult superhedge_price(const MarketModel& m, const Claim& h, std::size_t t) {
    require_claim(m, h);
    if (t > m.horizon())
        throw DomainError("time " + std::to_string(t) + " is past the horizon " + std::to_string(m.horizon()));
    const std::size_t T = m.horizon();
    std::vector<Vector> values(T - t + 1, Vector::zero(m.size()));
    std::vector<Vector> holdings(T - t, Vector::zero(m.size()));
    values.back() = h.payoff;
    for (std::size_t s = T; s-- > t;) {
        const Vector& next = values[s + 1 - t];
        Vector& current = values[s - t];
        Vector& theta = holdings[s - t];
        for (const Atom& atom : m.partition(s).atoms()) {
            auto solution = solve_node_minimax(detail::node_points(m, s, atom, next), m.price(s)[atom.front()]);
            if (!solution) throw UnboundedPriceError(s, atom);
            for (std::size_t w : atom) {
                current[w] = solution->value;
                theta[w] = solution->theta;
            }
        }
    }
    Vector price = values.front();
    return {t, std::move(price), std::move(values), Strategy(t, std::move(holdings))};
}

struct AtomVerification {
    Atom atom;
    Rational price;        ///< candidate price on the atom
    Rational lower_bound;  ///< concave-envelope value, no cheaper capital can superhedge
    bool refuted;          ///< lower_bound > price − eps
};

struct SuperhedgeVerification {
    bool certified;          ///< price + v_{t,T} ≥ h for `strategy`
    bool minimal;            ///< price − eps·e is refuted on some atom
    Strategy strategy;
    Vector surplus;          ///< price + v_{t,T} − h
    Vector lower_bound;      ///< envelope recursion at time t
    std::vector<AtomVerification> atoms;

    bool ok() const { return certified && minimal; }
};

/// Checks a candidate price from both sides.
///
/// (a) Certificate: the backward-induction strategy is replayed through
///     portfolio_value and price + v_{t,T} ≥ h is checked exactly.
/// (b) Minimality: an independent lower bound is built by recursing with
///     concave_envelope_at instead of the minimax; price − eps must fall
///     below it on at least one atom.
inline SuperhedgeVerification superhedge_verify(const MarketModel& m, const Claim& h, std::size_t t,
                                                const Vector& price, const Rational& eps = Rational(1, 1000)) {
    if (eps <= 0) throw DomainError("eps must be positive");
    require_claim(m, h);
    m.system(t).require_member(price);
    if (!m.partition(t).is_measurable(price))
        throw ValidationError("candidate price is not measurable at time " + std::to_string(t));

    SuperhedgeResult solved = superhedge_price(m, h, t);
    Vector terminal = portfolio_value(m, solved.strategy, t, price);
    Vector surplus = terminal - h.payoff;

    Vector bound = h.payoff;
    for (std::size_t s = m.horizon(); s-- > t;) {
        Vector current = Vector::zero(m.size());
        for (const Atom& atom : m.partition(s).atoms()) {
            auto v = concave_envelope_at(detail::node_points(m, s, atom, bound), m.price(s)[atom.front()]);
            if (!v) throw UnboundedPriceError(s, atom);
            for (std::size_t w : atom) current[w] = *v;
        }
        bound = std::move(current);
    }

    SuperhedgeVerification report{is_nonnegative(surplus), false, std::move(solved.strategy), std::move(surplus),
                                  bound, {}};
    for (const Atom& atom : m.partition(t).atoms()) {
        std::size_t w = atom.front();
        bool refuted = bound[w] > price[w] - eps;
        report.minimal = report.minimal || refuted;
        report.atoms.push_back({atom, price[w], bound[w], refuted});
    }
    return report;
}

}  // namespace condsup
