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

#include "skyburst/skypoly.hpp"

#include <string>

namespace skyburst {

namespace {

template <FieldScalar T>
T lift(const Rational& r) {
    return ScalarTraits<T>::from_rational(r);
}

template <FieldScalar T>
void require_pochhammer_nonzero(const T& base, unsigned k, const char* where, const char* symbol) {
    if (auto i = pochhammer_zero_factor(base, k)) {
        throw PoleError(where, std::string(symbol) + " vanishes at factor " + std::to_string(*i) +
                                   " of " + std::to_string(k));
    }
}

bool is_positive(const Omega& omega) {
    if (omega.is_exact()) return omega.rational().sign() > 0;
    return omega.to_double() > 0.0;
}

}  // namespace

template <FieldScalar T>
Polynomial<T> hypergeometric_sum(unsigned n, const Omega& omega) {
    const T w = omega.as<T>();
    const T minus_w = -w;
    const T lower = lift<T>(Rational(-static_cast<long>(n))) - w;
    std::vector<T> c(n + 1, Polynomial<T>::zero());
    for (unsigned l = 0; l <= n; ++l) {
        const T den = pochhammer(lower, l);
        if (ScalarTraits<T>::is_zero(den)) {
            throw PoleError("explicit hypergeometric form",
                            "(-n-omega)_l vanishes at l=" + std::to_string(l) + " for n=" + std::to_string(n) +
                                ", omega=" + omega.to_string());
        }
        c[n - l] = lift<T>(binomial(n, l)) * pochhammer(minus_w, l) / den;
    }
    return Polynomial<T>(std::move(c));
}

template <FieldScalar T>
Polynomial<T> construct(unsigned n, const Omega& omega) {
    if (n == 0) return Polynomial<T>::constant(Polynomial<T>::one());
    if (const auto m = omega.integer_value(); m && *m >= 0 && *m < static_cast<long>(n)) {
        return construct_via_symmetry<T>(n, static_cast<unsigned>(*m));
    }
    return hypergeometric_sum<T>(n, omega);
}

template <FieldScalar T>
T value_at_minus_one(unsigned n, const Omega& omega) {
    const T base = Polynomial<T>::one() + omega.as<T>();
    require_pochhammer_nonzero(base, n, "value at -1", "(1+omega)_n");
    return sign_power<T>(n) * lift<T>(factorial(n)) / pochhammer(base, n);
}

template <FieldScalar T>
T derivative_at_minus_one(unsigned m, unsigned n, const Omega& omega) {
    if (m > n) {
        throw DomainError("derivative at -1: order " + std::to_string(m) + " exceeds degree " + std::to_string(n));
    }
    const T base = Polynomial<T>::one() + omega.as<T>();
    require_pochhammer_nonzero(base, n, "derivative at -1", "(1+omega)_n");
    return sign_power<T>(static_cast<long>(n - m)) * lift<T>(factorial(n) * binomial(n, m)) *
           pochhammer(base, m) / pochhammer(base, n);
}

template <FieldScalar T>
T value_at_zero(unsigned n, const Omega& omega) {
    const T w = omega.as<T>();
    const T lower = lift<T>(Rational(-static_cast<long>(n))) - w;
    require_pochhammer_nonzero(lower, n, "value at 0", "(-n-omega)_n");
    return pochhammer(T(-w), n) / pochhammer(lower, n);
}

template <FieldScalar T>
Polynomial<T> reflect_negative_omega(unsigned n, const Omega& omega) {
    if (!is_positive(omega)) throw DomainError("reflection requires omega > 0, got " + omega.to_string());
    if (const auto m = omega.integer_value(); m && *m >= 1 && *m <= static_cast<long>(n)) {
        throw DomainError("S_n^{-m} blows up for m in {1..n}; got n=" + std::to_string(n) +
                          ", omega=" + omega.to_string());
    }
    const T w = omega.as<T>();
    const T one = Polynomial<T>::one();
    require_pochhammer_nonzero(T(one - w), n, "negative-omega reflection", "(1-omega)_n");
    const T scale = sign_power<T>(n) * pochhammer(w, n) / pochhammer(T(one - w), n);
    return construct<T>(n, omega.shifted(-1)).reversed(n) * scale;
}

template <FieldScalar T>
Polynomial<T> construct_via_symmetry(unsigned n, unsigned m) {
    if (m >= n) {
        throw DomainError("symmetry route needs m < n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
    }
    return construct<T>(m, Omega::exact(Rational(static_cast<long>(n)))).shifted(n - m);
}

template <FieldScalar T>
std::vector<T> taylor_about_minus_one(unsigned n, const Omega& omega) {
    std::vector<T> c;
    c.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) c.push_back(derivative_at_minus_one<T>(m, n, omega) / lift<T>(factorial(m)));
    return c;
}

template <FieldScalar T>
Polynomial<T> from_taylor_about_minus_one(const std::vector<T>& c) {
    const Polynomial<T> one_plus_z{Polynomial<T>::one(), Polynomial<T>::one()};
    Polynomial<T> power = Polynomial<T>::constant(Polynomial<T>::one());
    Polynomial<T> sum;
    for (const auto& cm : c) {
        sum += power * cm;
        power = power * one_plus_z;
    }
    return sum;
}

#define SKYBURST_SKYPOLY_INSTANTIATE(T)                                            \
    template Polynomial<T> hypergeometric_sum<T>(unsigned, const Omega&);          \
    template Polynomial<T> construct<T>(unsigned, const Omega&);                   \
    template T value_at_minus_one<T>(unsigned, const Omega&);                      \
    template T derivative_at_minus_one<T>(unsigned, unsigned, const Omega&);       \
    template T value_at_zero<T>(unsigned, const Omega&);                           \
    template Polynomial<T> reflect_negative_omega<T>(unsigned, const Omega&);      \
    template Polynomial<T> construct_via_symmetry<T>(unsigned, unsigned);          \
    template std::vector<T> taylor_about_minus_one<T>(unsigned, const Omega&);     \
    template Polynomial<T> from_taylor_about_minus_one<T>(const std::vector<T>&);

SKYBURST_SKYPOLY_INSTANTIATE(Rational)
SKYBURST_SKYPOLY_INSTANTIATE(Complex)

}  // namespace skyburst
