#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/filtration.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// How M_{F_n}(x_{n+1}) compares with x_n at one step.
enum class StepRelation { equal, above, below, incomparable };

enum class MaxingaleClass { maxingale, sub_maxingale, super_maxingale, none };

inline std::string_view to_string(MaxingaleClass c) {
    switch (c) {
        case MaxingaleClass::maxingale: return "maxingale";
        case MaxingaleClass::sub_maxingale: return "sub-maxingale";
        case MaxingaleClass::super_maxingale: return "super-maxingale";
        case MaxingaleClass::none: return "none";
    }
    return "none";
}

inline std::string_view to_string(StepRelation r) {
    switch (r) {
        case StepRelation::equal: return "equal";
        case StepRelation::above: return "above";
        case StepRelation::below: return "below";
        case StepRelation::incomparable: return "incomparable";
    }
    return "incomparable";
}

struct MaxingaleReport {
    std::vector<StepRelation> steps;  ///< entry n compares M_{F_n}(x_{n+1}) with x_n
    MaxingaleClass overall;

    bool is_sub() const { return overall == MaxingaleClass::maxingale || overall == MaxingaleClass::sub_maxingale; }
    bool is_super() const {
        return overall == MaxingaleClass::maxingale || overall == MaxingaleClass::super_maxingale;
    }
};

/// Sub-maxingale: M_{F_n}(x_{n+1}) ≥ x_n for all n; super-maxingale: ≤;
/// maxingale: both. A single-time process is vacuously a maxingale.
inline MaxingaleReport classify_maxingale(const AdaptedProcess& x) {
    MaxingaleReport report{{}, MaxingaleClass::maxingale};
    bool sub = true;
    bool super = true;
    for (std::size_t n = 0; n < x.horizon(); ++n) {
        Vector next_best = cond_sup(x.at(n + 1), x.filtration().system(n));
        bool up = geq(next_best, x.at(n));
        bool down = leq(next_best, x.at(n));
        sub = sub && up;
        super = super && down;
        report.steps.push_back(up && down ? StepRelation::equal
                               : up       ? StepRelation::above
                               : down     ? StepRelation::below
                                          : StepRelation::incomparable);
    }
    report.overall = sub && super ? MaxingaleClass::maxingale
                     : sub        ? MaxingaleClass::sub_maxingale
                     : super      ? MaxingaleClass::super_maxingale
                                  : MaxingaleClass::none;
    return report;
}

/// g_n = x_0 ∨ x_1 ∨ … ∨ x_n. Always a sub-maxingale.
inline AdaptedProcess running_max(const AdaptedProcess& x) {
    std::vector<Vector> out;
    out.reserve(x.horizon() + 1);
    for (std::size_t n = 0; n <= x.horizon(); ++n) out.push_back(n == 0 ? x.at(0) : sup(out.back(), x.at(n)));
    return AdaptedProcess(x.filtration(), std::move(out));
}

/// f_n = M_{F_n}(f). Always a maxingale, by the tower property.
inline AdaptedProcess maxingale_from_terminal(const Vector& f, const Filtration& filtration) {
    std::vector<Vector> out;
    for (std::size_t n = 0; n <= filtration.horizon(); ++n) out.push_back(cond_sup(f, filtration.system(n)));
    return AdaptedProcess(filtration, std::move(out));
}

}  // namespace condsup
