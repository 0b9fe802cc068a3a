#pragma once

#include <utility>
#include <vector>

#include "condsup/errors.hpp"
#include "condsup/rational.hpp"
#include "condsup/vector.hpp"

namespace condsup {

struct AffinePiece {
    Rational slope;
    Rational intercept;

    Rational operator()(const Rational& x) const { return slope * x + intercept; }
};

/// φ(x) = max_i (a_i x + b_i). Finite maxima of rational affine maps; any
/// other convex function has to be approximated from below by the caller.
class PiecewiseAffineConvex {
public:
    explicit PiecewiseAffineConvex(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
        if (pieces_.empty()) throw DomainError("a piecewise affine convex function needs at least one piece");
    }

    static PiecewiseAffineConvex absolute_value() { return PiecewiseAffineConvex({{1, 0}, {-1, 0}}); }

    /// (x − strike)⁺
    static PiecewiseAffineConvex call_payoff(const Rational& strike) {
        return PiecewiseAffineConvex({{0, 0}, {1, -strike}});
    }

    Rational operator()(const Rational& x) const {
        Rational best = pieces_.front()(x);
        for (const auto& piece : pieces_) {
            Rational v = piece(x);
            if (v > best) best = v;
        }
        return best;
    }

    const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }

private:
    std::vector<AffinePiece> pieces_;
};

/// Pointwise φ(f).
inline Vector apply_convex(const PiecewiseAffineConvex& phi, const Vector& f) {
    return detail::pointwise(f, [&](const Rational& x) { return phi(x); });
}

}  // namespace condsup
