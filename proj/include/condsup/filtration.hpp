#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/errors.hpp"
#include "condsup/partition.hpp"
#include "condsup/sample_space.hpp"
#include "condsup/vector.hpp"

namespace condsup {

/// Raised when partition t+1 does not refine partition t.
class FiltrationError : public ValidationError {
public:
    FiltrationError(std::size_t earlier, std::size_t later, Atom atom)
        : ValidationError("partition at time " + std::to_string(later) + " does not refine time " +
                          std::to_string(earlier) + ": atom " + to_string(atom) + " straddles several atoms"),
          earlier_(earlier),
          later_(later),
          atom_(std::move(atom)) {}

    std::size_t earlier_time() const noexcept { return earlier_; }
    std::size_t later_time() const noexcept { return later_; }
    /// The atom of the later partition that is not contained in one earlier atom.
    const Atom& atom() const noexcept { return atom_; }

private:
    std::size_t earlier_;
    std::size_t later_;
    Atom atom_;
};

/// Refining partitions indexed by time 0..T. Refinement of each consecutive
/// pair is the finite form of F_i F_j = F_j F_i = F_i for i < j.
class Filtration {
public:
    Filtration(SampleSpace space, std::vector<Partition> partitions)
        : space_(std::move(space)), partitions_(std::move(partitions)) {
        if (partitions_.empty()) throw ValidationError("filtration needs at least one partition");
        for (std::size_t t = 0; t < partitions_.size(); ++t)
            if (partitions_[t].outcomes() != space_.size())
                throw DimensionError("partition at time " + std::to_string(t) + " covers " +
                                     std::to_string(partitions_[t].outcomes()) + " outcomes, expected " +
                                     std::to_string(space_.size()));
        for (std::size_t t = 0; t + 1 < partitions_.size(); ++t) {
            const Partition& coarse = partitions_[t];
            for (const Atom& atom : partitions_[t + 1].atoms()) {
                std::size_t host = coarse.atom_of(atom.front());
                for (std::size_t w : atom)
                    if (coarse.atom_of(w) != host) throw FiltrationError(t, t + 1, atom);
            }
        }
    }

    const SampleSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return space_.size(); }
    /// Time horizon T; valid times are 0..T.
    std::size_t horizon() const noexcept { return partitions_.size() - 1; }
    const Partition& partition(std::size_t t) const { return partitions_.at(t); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }

    ConditionalSystem system(std::size_t t) const { return ConditionalSystem(space_, partition(t)); }

private:
    SampleSpace space_;
    std::vector<Partition> partitions_;
};

inline Filtration validate_filtration(SampleSpace space, std::vector<Partition> partitions) {
    return Filtration(std::move(space), std::move(partitions));
}

/// (x_t) with x_t ∈ R(F_t) for every t = 0..T.
class AdaptedProcess {
public:
    AdaptedProcess(Filtration filtration, std::vector<Vector> values)
        : filtration_(std::move(filtration)), values_(std::move(values)) {
        if (values_.size() != filtration_.horizon() + 1)
            throw ValidationError("process has " + std::to_string(values_.size()) + " time steps, filtration has " +
                                  std::to_string(filtration_.horizon() + 1));
        for (std::size_t t = 0; t < values_.size(); ++t) {
            if (values_[t].size() != filtration_.size())
                throw DimensionError("process value at time " + std::to_string(t) + " has " +
                                     std::to_string(values_[t].size()) + " entries, expected " +
                                     std::to_string(filtration_.size()));
            if (!filtration_.partition(t).is_measurable(values_[t]))
                throw ValidationError("process is not adapted: value at time " + std::to_string(t) +
                                      " is not constant on the atoms of partition " + std::to_string(t));
        }
    }

    const Filtration& filtration() const noexcept { return filtration_; }
    std::size_t horizon() const noexcept { return filtration_.horizon(); }
    const Vector& at(std::size_t t) const { return values_.at(t); }
    const std::vector<Vector>& values() const noexcept { return values_; }

private:
    Filtration filtration_;
    std::vector<Vector> values_;
};

}  // namespace condsup
