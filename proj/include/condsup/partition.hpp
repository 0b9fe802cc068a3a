#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "condsup/errors.hpp"
#include "condsup/vector.hpp"

namespace condsup {

using Atom = std::vector<std::size_t>;

inline std::string to_string(const Atom& atom) {
    std::string out = "{";
    for (std::size_t i = 0; i < atom.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(atom[i]);
    }
    return out + "}";
}

/// A partition of {0, …, n−1} into non-empty atoms; the finite stand-in for
/// a sub-σ-algebra. Atoms are stored sorted internally and ordered by their
/// smallest index, so iteration order is deterministic.
class Partition {
public:
    Partition(std::size_t n, std::vector<Atom> atoms) : atoms_(std::move(atoms)), atom_of_(n, npos) {
        if (atoms_.empty()) throw ValidationError("partition has no atoms");
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            auto& atom = atoms_[a];
            if (atom.empty()) throw ValidationError("partition atom " + std::to_string(a) + " is empty");
            std::sort(atom.begin(), atom.end());
        }
        std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.front() < y.front(); });
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            for (std::size_t w : atoms_[a]) {
                if (w >= n)
                    throw ValidationError("outcome " + std::to_string(w) + " in atom " + to_string(atoms_[a]) +
                                          " is out of range for " + std::to_string(n) + " outcomes");
                if (atom_of_[w] != npos)
                    throw ValidationError("outcome " + std::to_string(w) + " belongs to more than one atom");
                atom_of_[w] = a;
            }
        }
        for (std::size_t w = 0; w < n; ++w)
            if (atom_of_[w] == npos) throw ValidationError("outcome " + std::to_string(w) + " is not covered by any atom");
    }

    /// One atom holding every outcome (F is the plain expectation).
    static Partition trivial(std::size_t n) {
        Atom all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return Partition(n, {all});
    }

    /// Singleton atoms (F is the identity).
    static Partition finest(std::size_t n) {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < n; ++i) atoms.push_back({i});
        return Partition(n, std::move(atoms));
    }

    std::size_t outcomes() const noexcept { return atom_of_.size(); }
    std::size_t atom_count() const noexcept { return atoms_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const Atom& atom(std::size_t a) const { return atoms_.at(a); }
    std::size_t atom_of(std::size_t outcome) const { return atom_of_.at(outcome); }

    /// True iff every atom of *this lies inside an atom of `coarser`.
    bool refines(const Partition& coarser) const {
        if (coarser.outcomes() != outcomes()) return false;
        return std::all_of(atoms_.begin(), atoms_.end(), [&](const Atom& atom) {
            std::size_t host = coarser.atom_of(atom.front());
            return std::all_of(atom.begin(), atom.end(), [&](std::size_t w) { return coarser.atom_of(w) == host; });
        });
    }

    /// Membership in R(F): constant on every atom.
    bool is_measurable(const Vector& f) const {
        if (f.size() != outcomes()) return false;
        return std::all_of(atoms_.begin(), atoms_.end(), [&](const Atom& atom) {
            return std::all_of(atom.begin(), atom.end(), [&](std::size_t w) { return f[w] == f[atom.front()]; });
        });
    }

    /// Indicator vector of atom `a`.
    Vector indicator(std::size_t a) const {
        Vector out = Vector::zero(outcomes());
        for (std::size_t w : atom(a)) out[w] = 1;
        return out;
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.atoms_ == y.atoms_; }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::vector<Atom> atoms_;
    std::vector<std::size_t> atom_of_;
};

inline std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t a = 0; a < p.atom_count(); ++a) {
        if (a) out += " ";
        out += to_string(p.atom(a));
    }
    return out;
}

}  // namespace condsup
