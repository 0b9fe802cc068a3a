#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "condsup/errors.hpp"
#include "condsup/rational.hpp"

namespace condsup {

/// An element of the finite Riesz space: one exact value per outcome.
///
/// Order, lattice operations and the product are all pointwise, which makes
/// the space an f-algebra with unit `Vector::unit(n)`. Equality is exact.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<Rational> values) : values_(std::move(values)) {}
    Vector(std::initializer_list<Rational> values) : values_(values) {}

    static Vector constant(std::size_t n, const Rational& c) { return Vector(std::vector<Rational>(n, c)); }
    static Vector zero(std::size_t n) { return constant(n, 0); }
    /// The weak order unit e.
    static Vector unit(std::size_t n) { return constant(n, 1); }

    std::size_t size() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    Rational& operator[](std::size_t i) { return values_[i]; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    friend bool operator==(const Vector& a, const Vector& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!same_value(a[i], b[i])) return false;
        return true;
    }

    Vector& operator+=(const Vector& other) { return zip_assign(other, [](Rational& a, const Rational& b) { a += b; }); }
    Vector& operator-=(const Vector& other) { return zip_assign(other, [](Rational& a, const Rational& b) { a -= b; }); }
    /// Pointwise (f-algebra) product.
    Vector& operator*=(const Vector& other) { return zip_assign(other, [](Rational& a, const Rational& b) { a *= b; }); }
    Vector& operator*=(const Rational& c) {
        for (auto& v : values_) v *= c;
        return *this;
    }
    Vector& operator/=(const Rational& c) {
        if (c == 0) throw DomainError("division of a vector by zero");
        for (auto& v : values_) v /= c;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const Vector& b) { return a *= b; }
    friend Vector operator*(Vector a, const Rational& c) { return a *= c; }
    friend Vector operator*(const Rational& c, Vector a) { return a *= c; }
    friend Vector operator/(Vector a, const Rational& c) { return a /= c; }
    friend Vector operator-(Vector a) {
        for (auto& v : a.values_) v = -v;
        return a;
    }

private:
    template <typename Op>
    Vector& zip_assign(const Vector& other, Op op) {
        if (other.size() != size())
            throw DimensionError("vector sizes differ: " + std::to_string(size()) + " vs " +
                                 std::to_string(other.size()));
        for (std::size_t i = 0; i < values_.size(); ++i) op(values_[i], other.values_[i]);
        return *this;
    }

    std::vector<Rational> values_;
};

inline void require_same_size(const Vector& f, const Vector& g) {
    if (f.size() != g.size())
        throw DimensionError("vector sizes differ: " + std::to_string(f.size()) + " vs " + std::to_string(g.size()));
}

/// Pointwise partial order f <= g.
inline bool leq(const Vector& f, const Vector& g) {
    require_same_size(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > g[i]) return false;
    return true;
}

inline bool geq(const Vector& f, const Vector& g) { return leq(g, f); }

inline bool is_nonnegative(const Vector& f) {
    return std::all_of(f.begin(), f.end(), [](const Rational& v) { return v >= 0; });
}

inline bool is_zero(const Vector& f) {
    return std::all_of(f.begin(), f.end(), [](const Rational& v) { return v == 0; });
}

inline bool is_constant(const Vector& f) {
    return std::all_of(f.begin(), f.end(), [&](const Rational& v) { return v == f[0]; });
}

namespace detail {
template <typename Op>
Vector pointwise(const Vector& f, const Vector& g, Op op) {
    require_same_size(f, g);
    std::vector<Rational> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(op(f[i], g[i]));
    return Vector(std::move(out));
}

template <typename Op>
Vector pointwise(const Vector& f, Op op) {
    std::vector<Rational> out;
    out.reserve(f.size());
    for (const auto& v : f) out.push_back(op(v));
    return Vector(std::move(out));
}
}  // namespace detail

/// f ∨ g
inline Vector sup(const Vector& f, const Vector& g) {
    return detail::pointwise(f, g, [](const Rational& a, const Rational& b) { return a < b ? b : a; });
}

/// f ∧ g
inline Vector inf(const Vector& f, const Vector& g) {
    return detail::pointwise(f, g, [](const Rational& a, const Rational& b) { return b < a ? b : a; });
}

inline Vector abs(const Vector& f) {
    return detail::pointwise(f, [](const Rational& a) { return a < 0 ? Rational(-a) : a; });
}

/// f⁺ = f ∨ 0
inline Vector positive_part(const Vector& f) {
    return detail::pointwise(f, [](const Rational& a) { return a > 0 ? a : Rational(0); });
}

/// f⁻ = (−f) ∨ 0, so that f = f⁺ − f⁻ and |f| = f⁺ + f⁻.
inline Vector negative_part(const Vector& f) {
    return detail::pointwise(f, [](const Rational& a) { return a < 0 ? Rational(-a) : Rational(0); });
}

/// The component of e carried by h⁺: the indicator of {h > 0}. The result p
/// satisfies p ∧ (e − p) = 0, p·h = h⁺ and (e − p)·h = −h⁻.
inline Vector band_component(const Vector& h) {
    return detail::pointwise(h, [](const Rational& a) { return a > 0 ? Rational(1) : Rational(0); });
}

/// True iff p ∧ (e − p) = 0 and p ≥ 0, i.e. p is an indicator vector.
inline bool is_component(const Vector& p) {
    return is_nonnegative(p) && is_zero(inf(p, Vector::unit(p.size()) - p));
}

inline std::string to_string(const Vector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += to_string(f[i]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Vector& f) { return os << to_string(f); }

}  // namespace condsup
