#pragma once

// Independent reference computations. None of these call the library's
// conditional operators; they work from the defining properties instead.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "condsup/condsup.hpp"

namespace condsup::oracle {

using Matrix = std::vector<std::vector<Rational>>;

/// Conditional expectation as an n×n matrix: P[i][j] = w_j / w(A) when i and
/// j share an atom A, else 0.
inline Matrix expectation_matrix(const SampleSpace& space, const Partition& p) {
    const std::size_t n = space.size();
    Matrix out(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Rational mass = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (p.atom_of(j) == p.atom_of(i)) mass += space.weight(j);
        for (std::size_t j = 0; j < n; ++j)
            if (p.atom_of(j) == p.atom_of(i)) out[i][j] = space.weight(j) / mass;
    }
    return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Vector apply(const Matrix& a, const Vector& f) {
    Vector out = Vector::zero(f.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != 0) out[i] += a[i][j] * f[j];
    return out;
}

/// g ∈ R(F) is F f iff Σ_{ω∈A} w_ω (f_ω − g_ω) = 0 on every atom A
/// (weighted orthogonal projection onto atom-constant vectors).
inline bool is_projection(const Vector& f, const Vector& g, const SampleSpace& space, const Partition& p) {
    if (!p.is_measurable(g)) return false;
    for (const Atom& atom : p.atoms()) {
        Rational residual = 0;
        for (std::size_t w : atom) residual += space.weight(w) * (f[w] - g[w]);
        if (residual != 0) return false;
    }
    return true;
}

/// The least g ∈ R(F) with f ≤ g, found by scanning candidate levels: on an
/// atom, any upper bound must be ≥ every f_ω, and the least one must equal
/// some f_ω (otherwise it could be lowered).
inline Vector least_measurable_majorant(const Vector& f, const Partition& p) {
    Vector out = Vector::zero(f.size());
    for (const Atom& atom : p.atoms()) {
        std::optional<Rational> best;
        for (std::size_t cand : atom) {
            bool dominates = true;
            for (std::size_t w : atom) dominates = dominates && f[w] <= f[cand];
            if (dominates && (!best || f[cand] < *best)) best = f[cand];
        }
        for (std::size_t w : atom) out[w] = *best;
    }
    return out;
}

inline Vector greatest_measurable_minorant(const Vector& f, const Partition& p) {
    return -least_measurable_majorant(-f, p);
}

/// (S^k f) through the permutation matrix Q[i][τ(i)] = 1.
inline Vector permutation_power(const std::vector<std::size_t>& tau, const Vector& f, std::size_t k) {
    const std::size_t n = tau.size();
    Matrix q(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) q[i][tau[i]] = 1;
    Vector out = f;
    for (std::size_t step = 0; step < k; ++step) out = oracle::apply(q, out);
    return out;
}

/// Number of cycles of τ, computed by repeated pointer chasing with a
/// label array.
inline std::size_t cycle_count(const std::vector<std::size_t>& tau) {
    std::vector<long> label(tau.size(), -1);
    std::size_t count = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (label[i] >= 0) continue;
        std::size_t j = i;
        do {
            label[j] = static_cast<long>(count);
            j = tau[j];
        } while (j != i);
        ++count;
    }
    return count;
}

/// Exhaustive arbitrage search over θ with every atomwise entry in
/// {−1, 0, 1}, for every start time. Returns true when an arbitrage exists.
/// Only suitable for markets with few atoms in total.
inline bool exhaustive_arbitrage(const MarketModel& m, std::size_t max_atoms = 10) {
    for (std::size_t start = 0; start < m.horizon(); ++start) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;  // (time, atom)
        for (std::size_t t = start; t < m.horizon(); ++t)
            for (std::size_t a = 0; a < m.partition(t).atom_count(); ++a) slots.push_back({t, a});
        if (slots.size() > max_atoms) return false;
        std::vector<int> choice(slots.size(), -1);
        while (true) {
            std::vector<Vector> holdings(m.horizon() - start, Vector::zero(m.size()));
            for (std::size_t s = 0; s < slots.size(); ++s)
                for (std::size_t w : m.partition(slots[s].first).atom(slots[s].second))
                    holdings[slots[s].first - start][w] = choice[s];
            Vector v = Vector::zero(m.size());
            for (std::size_t t = start; t < m.horizon(); ++t)
                for (std::size_t w = 0; w < m.size(); ++w)
                    v[w] += holdings[t - start][w] * (m.price(t + 1)[w] - m.price(t)[w]);
            if (is_nonnegative(v) && !is_zero(v)) return true;
            std::size_t k = 0;
            while (k < choice.size() && choice[k] == 1) choice[k++] = -1;
            if (k == choice.size()) break;
            ++choice[k];
        }
    }
    return false;
}

/// Whether the slot budget of exhaustive_arbitrage covers this market.
inline bool exhaustive_feasible(const MarketModel& m, std::size_t max_atoms = 10) {
    std::size_t slots = 0;
    for (std::size_t t = 0; t < m.horizon(); ++t) slots += m.partition(t).atom_count();
    return slots <= max_atoms;
}

/// min over θ of max_i (y_i − θ d_i) by evaluating every breakpoint and a
/// rational grid; exact for the breakpoint set.
inline Rational one_step_minimax(const std::vector<Rational>& d, const std::vector<Rational>& y) {
    auto g = [&](const Rational& theta) {
        Rational best = y[0] - theta * d[0];
        for (std::size_t i = 1; i < d.size(); ++i) best = std::max(best, Rational(y[i] - theta * d[i]));
        return best;
    };
    Rational best = g(0);
    for (long k = -400; k <= 400; ++k) best = std::min(best, g(Rational(k, 8)));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d[i] != d[j]) best = std::min(best, g((y[i] - y[j]) / (d[i] - d[j])));
    return best;
}

}  // namespace condsup::oracle
