#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "condsup/errors.hpp"
#include "condsup/rational.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// A finite outcome set Ω with strictly positive weights summing to one.
///
/// Strict positivity is what makes the conditional expectation strictly
/// positive, and with it the conditional supremum an atomwise maximum.
class SampleSpace {
public:
    explicit SampleSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw ValidationError("sample space must have at least one outcome");
        Rational total = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i] <= 0)
                throw ValidationError("weight of outcome " + std::to_string(i) + " is " + to_string(weights_[i]) +
                                      ", weights must be strictly positive");
            total += weights_[i];
        }
        if (total != 1) throw ValidationError("weights sum to " + to_string(total) + ", expected 1");
    }

    static SampleSpace uniform(std::size_t n) {
        if (n == 0) throw ValidationError("sample space must have at least one outcome");
        return SampleSpace(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
    }

    std::size_t size() const noexcept { return weights_.size(); }
    const Rational& weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

    Vector unit() const { return Vector::unit(size()); }
    Vector zero() const { return Vector::zero(size()); }

    friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

private:
    std::vector<Rational> weights_;
};

}  // namespace condsup
