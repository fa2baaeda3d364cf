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

// Closed-form construction of the skyburst polynomials S_n^omega and their
// special values. Every function is instantiated for Rational (exact) and
// Complex (float) scalars.

#include <vector>

#include "skyburst/polynomial.hpp"
#include "skyburst/scalar.hpp"

namespace skyburst {

struct SkyburstSpec {
    unsigned n = 0;
    Omega omega = Omega::exact(Rational(0));
};

/// The terminating sum z^n 2F1(-n, -omega; -n-omega; -1/z) taken literally:
/// coefficient of z^(n-l) is C(n,l) (-omega)_l / (-n-omega)_l.
/// Throws PoleError naming the first l whose denominator vanishes.
template <FieldScalar T>
Polynomial<T> hypergeometric_sum(unsigned n, const Omega& omega);

/// Monic S_n^omega. Integer omega in {0..n-1} goes through the symmetry
/// route z^(n-m) S_m^n; everything else through the terminating sum.
template <FieldScalar T>
Polynomial<T> construct(unsigned n, const Omega& omega);

template <FieldScalar T>
Polynomial<T> construct(const SkyburstSpec& spec) {
    return construct<T>(spec.n, spec.omega);
}

template <FieldScalar T>
T eval(const Polynomial<T>& p, const T& z) {
    return p(z);
}

/// (-1)^n n! / (1+omega)_n
template <FieldScalar T>
T value_at_minus_one(unsigned n, const Omega& omega);

/// m-th derivative at -1: (-1)^(n-m) n! (1+omega)_m / (1+omega)_n C(n,m).
template <FieldScalar T>
T derivative_at_minus_one(unsigned m, unsigned n, const Omega& omega);

/// n! (-omega)_n / (-n-omega)_n; zero exactly for omega in {0..n-1}.
template <FieldScalar T>
T value_at_zero(unsigned n, const Omega& omega);

/// S_n^{-omega} from the reflection of S_n^{omega-1} in the unit circle.
/// Requires omega > 0; omega in {1..n} is a DomainError (the target blows up).
template <FieldScalar T>
Polynomial<T> reflect_negative_omega(unsigned n, const Omega& omega);

/// z^(n-m) S_m^n for integers 0 <= m < n.
template <FieldScalar T>
Polynomial<T> construct_via_symmetry(unsigned n, unsigned m);

/// Coefficients c_m of S_n^omega in powers of (1+z).
template <FieldScalar T>
std::vector<T> taylor_about_minus_one(unsigned n, const Omega& omega);

/// Reassembles sum c_m (1+z)^m into monomial coefficients.
template <FieldScalar T>
Polynomial<T> from_taylor_about_minus_one(const std::vector<T>& c);

#define SKYBURST_SKYPOLY_EXTERN(T)                                                        \
    extern template Polynomial<T> hypergeometric_sum<T>(unsigned, const Omega&);          \
    extern template Polynomial<T> construct<T>(unsigned, const Omega&);                   \
    extern template T value_at_minus_one<T>(unsigned, const Omega&);                      \
    extern template T derivative_at_minus_one<T>(unsigned, unsigned, const Omega&);       \
    extern template T value_at_zero<T>(unsigned, const Omega&);                           \
    extern template Polynomial<T> reflect_negative_omega<T>(unsigned, const Omega&);      \
    extern template Polynomial<T> construct_via_symmetry<T>(unsigned, unsigned);          \
    extern template std::vector<T> taylor_about_minus_one<T>(unsigned, const Omega&);     \
    extern template Polynomial<T> from_taylor_about_minus_one<T>(const std::vector<T>&);

SKYBURST_SKYPOLY_EXTERN(Rational)
SKYBURST_SKYPOLY_EXTERN(Complex)
#undef SKYBURST_SKYPOLY_EXTERN

}  // namespace skyburst
