#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "condsup/errors.hpp"
#include "condsup/partition.hpp"
#include "condsup/rational.hpp"
#include "condsup/sample_space.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// The conditional triple (E, e, F) on a finite weighted outcome set: E is
/// every rational vector, e the all-ones vector and F the weighted average
/// over the atoms of `partition`. R(F) is the set of atom-constant vectors.
///
/// On a finite space E, its natural domain L¹(F) and L^∞(F) coincide, so
/// there is one vector type for all of them.
class ConditionalSystem {
public:
    ConditionalSystem(SampleSpace space, Partition partition)
        : space_(std::move(space)), partition_(std::move(partition)) {
        if (partition_.outcomes() != space_.size())
            throw DimensionError("partition covers " + std::to_string(partition_.outcomes()) +
                                 " outcomes but the sample space has " + std::to_string(space_.size()));
    }

    const SampleSpace& space() const noexcept { return space_; }
    const Partition& partition() const noexcept { return partition_; }
    std::size_t size() const noexcept { return space_.size(); }

    bool in_range(const Vector& f) const { return partition_.is_measurable(f); }

    void require_member(const Vector& f) const {
        if (f.size() != size())
            throw DimensionError("vector has " + std::to_string(f.size()) + " entries, system has " +
                                 std::to_string(size()) + " outcomes");
    }

private:
    SampleSpace space_;
    Partition partition_;
};

namespace detail {
/// Writes `reduce(atom)` onto every outcome of each atom.
template <typename Reduce>
Vector atomwise(const Vector& f, const ConditionalSystem& sys, Reduce reduce) {
    sys.require_member(f);
    Vector out = Vector::zero(f.size());
    for (const Atom& atom : sys.partition().atoms()) {
        Rational value = reduce(atom);
        for (std::size_t w : atom) out[w] = value;
    }
    return out;
}
}  // namespace detail

/// F f: on each atom A, Σ_{ω∈A} w_ω f_ω / Σ_{ω∈A} w_ω.
inline Vector cond_expectation(const Vector& f, const ConditionalSystem& sys) {
    return detail::atomwise(f, sys, [&](const Atom& atom) {
        Rational mass = 0;
        Rational moment = 0;
        for (std::size_t w : atom) {
            mass += sys.space().weight(w);
            moment += sys.space().weight(w) * f[w];
        }
        return Rational(moment / mass);
    });
}

/// M_F(f) = inf{g ∈ R(F) : f ≤ g}. With strictly positive weights the
/// infimum is the atomwise maximum.
inline Vector cond_sup(const Vector& f, const ConditionalSystem& sys) {
    return detail::atomwise(f, sys, [&](const Atom& atom) {
        Rational best = f[atom.front()];
        for (std::size_t w : atom)
            if (f[w] > best) best = f[w];
        return best;
    });
}

/// m_F(f) = sup{g ∈ R(F) : g ≤ f}, the atomwise minimum; m_F(−f) = −M_F(f).
inline Vector cond_inf(const Vector& f, const ConditionalSystem& sys) {
    return detail::atomwise(f, sys, [&](const Atom& atom) {
        Rational best = f[atom.front()];
        for (std::size_t w : atom)
            if (f[w] < best) best = f[w];
        return best;
    });
}

/// The R(F)-valued norm ‖f‖_{∞,F} = M_F(|f|).
inline Vector sup_norm(const Vector& f, const ConditionalSystem& sys) { return cond_sup(abs(f), sys); }

/// δ(f) = M_F(f) − m_F(f); zero exactly on R(F).
inline Vector delta(const Vector& f, const ConditionalSystem& sys) { return cond_sup(f, sys) - cond_inf(f, sys); }

struct RangeProjection {
    Vector point;     ///< (m_F(f) + M_F(f)) / 2, a nearest element of R(F)
    Vector distance;  ///< δ(f) / 2 = M_F(|f − point|)
};

/// Nearest element of R(F) to f in the vector-valued ∞-norm.
inline RangeProjection nearest_in_range(const Vector& f, const ConditionalSystem& sys) {
    Vector upper = cond_sup(f, sys);
    Vector lower = cond_inf(f, sys);
    Vector gap = upper - lower;
    return {(upper + lower) / 2, gap / 2};
}

}  // namespace condsup
