/*
   Copyright 2026 The Skyburst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "skyburst/scalar.hpp"

namespace skyburst {

/// Dense polynomial; coeffs()[j] is the coefficient of z^j. The highest
/// stored coefficient is nonzero, and the zero polynomial has no coefficients.
template <FieldScalar T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    /// z^k
    static Polynomial monomial(std::size_t k) {
        std::vector<T> c(k + 1, zero());
        c[k] = one();
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::span<const T> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^j (zero beyond the degree).
    T coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : zero(); }

    T leading() const { return coeffs_.empty() ? zero() : coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero());
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero());
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplication by z^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> c(k, zero());
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(c));
    }

    /// k-th formal derivative.
    Polynomial derivative(std::size_t k = 1) const {
        std::vector<T> c = coeffs_;
        for (std::size_t step = 0; step < k; ++step) {
            if (c.empty()) break;
            for (std::size_t j = 1; j < c.size(); ++j) c[j - 1] = c[j] * from_int(static_cast<long>(j));
            c.pop_back();
        }
        return Polynomial(std::move(c));
    }

    /// Horner evaluation.
    T operator()(const T& z) const {
        T acc = zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Coefficient sequence reversed to length `size` (z^size p(1/z) when size = degree).
    Polynomial reversed(std::size_t size) const {
        std::vector<T> c(size + 1, zero());
        for (std::size_t j = 0; j < coeffs_.size() && j <= size; ++j) c[size - j] = coeffs_[j];
        return Polynomial(std::move(c));
    }

    /// Largest coefficient magnitude; the residual norm used by identity checks.
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, ScalarTraits<T>::magnitude(c));
        return m;
    }

    static T zero() { return ScalarTraits<T>::from_rational(Rational(0)); }
    static T one() { return ScalarTraits<T>::from_rational(Rational(1)); }
    static T from_int(long v) { return ScalarTraits<T>::from_rational(Rational(v)); }

private:
    void normalize() {
        while (!coeffs_.empty() && ScalarTraits<T>::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// Star conjugate z^n conj(p(1/conj z)) with n = deg p.
template <FieldScalar T>
Polynomial<T> star(const Polynomial<T>& p) {
    if (p.is_zero()) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<T> c(n + 1, Polynomial<T>::zero());
    for (std::size_t j = 0; j <= n; ++j) c[n - j] = ScalarTraits<T>::conj(p.coeffs()[j]);
    return Polynomial<T>(std::move(c));
}

/// Coefficientwise rounding into the float field.
inline Polynomial<Complex> to_float(const Polynomial<Rational>& p) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.push_back(to_float(r));
    return Polynomial<Complex>(std::move(c));
}

inline Polynomial<Complex> to_float(const Polynomial<Complex>& p) { return p; }

/// True when a and b are scalar multiples of each other (both nonzero).
template <FieldScalar T>
bool proportional(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    // a_j b_k == a_k b_j for all pairs with a fixed pivot
    std::size_t pivot = 0;
    while (ScalarTraits<T>::is_zero(a.coeffs()[pivot])) ++pivot;
    if (ScalarTraits<T>::is_zero(b.coeffs()[pivot])) return false;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        if (!(a.coeffs()[j] * b.coeffs()[pivot] == b.coeffs()[j] * a.coeffs()[pivot])) return false;
    }
    return true;
}

}  // namespace skyburst
