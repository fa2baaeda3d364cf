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

#include "skyburst/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace skyburst {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_unsigned_literal(std::string_view s) {
    return !s.empty() && s.front() != '-' && s.front() != '+' && is_integer_literal(s);
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, 1);
    q_ /= mpq_class(den, 1);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
    return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw DomainError("malformed rational '" + std::string(text) + "'");
        return Rational(mpq_class(parse_integer(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_unsigned_literal(den)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw DomainError("rational '" + std::string(text) + "' has zero denominator");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::optional<long> Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
    return q_.get_num().get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

double to_double(const Rational& r) {
    mpfr_t x;
    mpfr_init2(x, std::numeric_limits<double>::digits);
    mpfr_set_q(x, r.raw().get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    if (!std::isfinite(d)) throw RangeError("rational " + r.to_string() + " overflows the double range");
    return d;
}

Complex to_float(const Rational& r) { return {to_double(r), 0.0}; }

Omega Omega::exact(Rational value) {
    const bool integer = value.is_integer();
    return Omega(std::move(value), integer);
}

Omega Omega::real(double value, bool asserted_integer) {
    if (!std::isfinite(value)) throw DomainError("omega must be finite");
    if (asserted_integer && std::trunc(value) != value) {
        throw DomainError("omega asserted integral but is not an integer");
    }
    return Omega(value, asserted_integer);
}

Omega Omega::parse(std::string_view text) {
    try {
        return exact(Rational::parse(text));
    } catch (const DomainError&) {
    }
    std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed omega '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed omega '" + s + "'");
    return real(v);
}

bool Omega::is_zero() const noexcept {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
    return std::get<double>(value_) == 0.0;
}

const Rational& Omega::rational() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw DomainError("exact arithmetic requires a rational omega");
}

double Omega::to_double() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return skyburst::to_double(*r);
    return std::get<double>(value_);
}

std::optional<long> Omega::integer_value() const {
    if (!integer_) return std::nullopt;
    if (const auto* r = std::get_if<Rational>(&value_)) return r->to_long();
    return static_cast<long>(std::get<double>(value_));
}

Omega Omega::shifted(long k) const {
    if (const auto* r = std::get_if<Rational>(&value_)) return exact(*r + Rational(k));
    return Omega(std::get<double>(value_) + static_cast<double>(k), integer_);
}

Omega Omega::negated() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return exact(-*r);
    return Omega(-std::get<double>(value_), integer_);
}

template <>
Rational Omega::as<Rational>() const {
    return rational();
}

template <>
Complex Omega::as<Complex>() const {
    return {to_double(), 0.0};
}

std::string Omega::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
    return buf;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k > n");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

}  // namespace skyburst
