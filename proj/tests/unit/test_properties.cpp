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

// Randomized properties with a fixed seed.

#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace skyburst;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261016);
    return gen;
}

Rational random_rational(long max_num = 40, long max_den = 17) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng()), den(rng()));
}

// Positive and non-integer.
Omega random_omega() {
    for (;;) {
        const Rational r = abs(random_rational(60, 11));
        if (!r.is_integer()) return Omega::exact(r);
    }
}

unsigned random_degree(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng()); }

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("rational field laws") {
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

TEST_CASE("pochhammer splits and vanishes at negative integers") {
    for (int i = 0; i < 200; ++i) {
        const Rational x = random_rational();
        const unsigned j = random_degree(0, 6), k = random_degree(0, 6);
        CHECK(pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(x + Rational(static_cast<long>(j)), k));
        const unsigned n = random_degree(0, 8);
        CHECK(pochhammer(Rational(-static_cast<long>(n)), n + 1 + random_degree(0, 3)).is_zero());
        if (n > 0) CHECK_FALSE(pochhammer(Rational(-static_cast<long>(n)), n).is_zero());
    }
}

TEST_CASE("skyburst polynomials are monic of degree n") {
    for (int i = 0; i < 60; ++i) {
        const unsigned n = random_degree(0, 10);
        const Omega w = random_omega();
        const auto p = construct<Rational>(n, w);
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.leading() == Rational(1));
    }
}

TEST_CASE("three routes agree") {
    for (int i = 0; i < 25; ++i) {
        const unsigned n = random_degree(1, 7);
        const Omega w = random_omega();
        const auto p = construct<Rational>(n, w);
        CHECK(construct_determinantal<Rational>(n, w) == p);
        CHECK(step_mixed<Rational>(n, w) == p);
    }
}

TEST_CASE("orthogonality and determinant at random omega") {
    using P = Polynomial<Rational>;
    for (int i = 0; i < 25; ++i) {
        const unsigned n = random_degree(1, 7);
        const Omega w = random_omega();
        const auto p = construct<Rational>(n, w);
        for (unsigned k = 0; k < n; ++k) CHECK(bilinear(p, P::monomial(k), w).is_zero());
        CHECK(toeplitz_det_direct<Rational>(n, w) == toeplitz_det_closed<Rational>(n, w));
        CHECK(verify_identity(IdentityId::DifferentialEquation, n, w).passed());
    }
}

TEST_CASE("leading coefficient of <S_n, z^n> is the determinant ratio") {
    using P = Polynomial<Rational>;
    for (int i = 0; i < 20; ++i) {
        const unsigned n = random_degree(1, 6);
        const Omega w = random_omega();
        const auto p = construct<Rational>(n, w);
        CHECK(bilinear(p, P::monomial(n), w) ==
              toeplitz_det_direct<Rational>(n + 1, w) / toeplitz_det_direct<Rational>(n, w));
    }
}

TEST_CASE("float roots reproduce the polynomial") {
    std::uniform_real_distribution<double> om(0.05, 12.0);
    for (int i = 0; i < 40; ++i) {
        const unsigned n = random_degree(1, 12);
        const double w = om(rng());
        if (std::abs(w - std::round(w)) < 1e-3) continue;
        const auto zs = skyburst_zeros(n, w);
        CHECK(zs.roots.size() == n);
        Polynomial<Complex> prod({Complex(1.0)});
        for (const auto& r : zs.roots) prod = prod * Polynomial<Complex>({-r.value, Complex(1.0)});
        const auto p = float_coefficients(n, w);
        for (std::size_t j = 0; j <= n; ++j)
            CHECK(std::abs(prod.coeffs()[j] - p.coeffs()[j]) < 1e-7 * (1 + p.max_abs()));
    }
}

}
