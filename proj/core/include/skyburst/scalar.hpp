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

// Field scalars: exact rationals (GMP-backed) and complex doubles under one
// traits interface, plus the combinatorial primitives every closed form uses.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "skyburst/errors.hpp"

namespace skyburst {

using Complex = std::complex<double>;

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Exact binary value of a finite double.
    static Rational from_double(double value);

    /// Parses "p/q" (optional sign on p, q > 0) or the integer shorthand "p".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    /// The value as a long when it is an integer that fits.
    std::optional<long> to_long() const;

    std::string numerator_string() const { return q_.get_num().get_str(); }
    std::string denominator_string() const { return q_.get_den().get_str(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Nearest double (round-to-nearest-even). Throws RangeError outside the double range.
double to_double(const Rational& r);

/// Nearest-double conversion into the float field.
Complex to_float(const Rational& r);
inline Complex to_float(const Complex& c) { return c; }

/// Per-field operations used by the generic algorithms.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
    static Rational from_rational(const Rational& r) { return r; }
    static Rational conj(const Rational& r) { return r; }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static double magnitude(const Rational& r) { return std::abs(to_double(r)); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "complex";
    static Complex from_rational(const Rational& r) { return to_float(r); }
    static Complex conj(const Complex& c) { return std::conj(c); }
    static bool is_zero(const Complex& c) { return c == Complex{}; }
    static double magnitude(const Complex& c) { return std::abs(c); }
};

template <class T>
concept FieldScalar = requires(const T& a, const T& b) {
    { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
};

/// The measure parameter. Rational values detect integrality themselves;
/// float values are integral only when the caller asserts it.
class Omega {
public:
    static Omega exact(Rational value);
    static Omega real(double value, bool asserted_integer = false);

    /// "p/q" or "p" gives an exact Omega, anything else parses as a double.
    static Omega parse(std::string_view text);

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    bool is_integer() const noexcept { return integer_; }
    bool is_zero() const noexcept;

    /// Throws DomainError for a float Omega.
    const Rational& rational() const;
    double to_double() const;

    /// Set only when is_integer().
    std::optional<long> integer_value() const;

    Omega shifted(long k) const;
    Omega negated() const;

    template <FieldScalar T>
    T as() const;

    std::string to_string() const;

private:
    Omega(std::variant<Rational, double> v, bool integer) : value_(std::move(v)), integer_(integer) {}

    std::variant<Rational, double> value_;
    bool integer_ = false;
};

template <>
Rational Omega::as<Rational>() const;
template <>
Complex Omega::as<Complex>() const;

/// Rising factorial x(x+1)...(x+k-1), multiplied out term by term so a
/// non-positive integer base gives an exact zero.
template <FieldScalar T>
T pochhammer(const T& x, unsigned k) {
    T result = ScalarTraits<T>::from_rational(Rational(1));
    T term = x;
    const T one = ScalarTraits<T>::from_rational(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        result *= term;
        term += one;
    }
    return result;
}

/// Index of the first vanishing factor of (x)_k, if any.
template <FieldScalar T>
std::optional<unsigned> pochhammer_zero_factor(const T& x, unsigned k) {
    T term = x;
    const T one = ScalarTraits<T>::from_rational(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        if (ScalarTraits<T>::is_zero(term)) return i;
        term += one;
    }
    return std::nullopt;
}

/// Exact binomial coefficient; k > n is a DomainError.
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

/// (-1)^k as a field element.
template <FieldScalar T>
T sign_power(long k) {
    return ScalarTraits<T>::from_rational(Rational((k % 2 == 0) ? 1 : -1));
}

}  // namespace skyburst
