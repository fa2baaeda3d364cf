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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

using namespace skyburst;
using skyburst::test::q;
using skyburst::test::w;

TEST_SUITE("moments") {

TEST_CASE("reduced and full moments") {
    CHECK(reduced_moment<Rational>(0, w("1/2")) == Rational(2));
    CHECK(reduced_moment<Rational>(1, w("1/2")) == q("-2/3"));
    CHECK(reduced_moment<Rational>(-1, w("1/2")) == Rational(2));
    CHECK_THROWS_AS(reduced_moment<Rational>(-2, w("2")), PoleError);
    CHECK(moment_prefactor(w("3")) == 0.0);
    CHECK(std::abs(moment_prefactor(w("1/2")) - 1.0 / std::numbers::pi) < 1e-16);
    CHECK(std::abs(moment_prefactor(Omega::real(1000.5)) - 1.0 / std::numbers::pi) < 1e-15);
    const MomentSequence m(w("1/2"));
    CHECK(std::abs(m.full(1) - Complex(-2.0 / (3.0 * std::numbers::pi))) < 1e-15);
}

TEST_CASE("toeplitz layout") {
    const ToeplitzMomentMatrix<Rational> t(3, w("1/3"));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            CHECK(t(i, j) == reduced_moment<Rational>(static_cast<long>(j) - static_cast<long>(i), w("1/3")));
}

TEST_CASE("determinants: direct and closed form") {
    CHECK(toeplitz_det_direct<Rational>(1, w("1/3")) == Rational(3));
    CHECK(toeplitz_det_closed<Rational>(1, w("1/3")) == Rational(3));
    CHECK(toeplitz_det_direct<Rational>(2, w("1/2")) == q("16/3"));
    CHECK(toeplitz_det_closed<Rational>(2, w("1/2")) == q("16/3"));
    CHECK(toeplitz_det_direct<Rational>(3, w("1/3")) == q("19683/560"));
    CHECK(toeplitz_det_closed<Rational>(3, w("5/4")) == q("1048576/394875"));
    CHECK(toeplitz_det_direct<Rational>(4, w("22/7")) == q("33232930569601/477583631065728000"));
    CHECK(toeplitz_det_direct<Rational>(0, w("1/2")) == Rational(1));
    CHECK_THROWS_AS(toeplitz_det_closed<Rational>(2, w("0")), PoleError);
    CHECK_THROWS_AS(toeplitz_det_closed<Rational>(3, w("-2")), PoleError);
    const Complex d = toeplitz_det_direct<Complex>(5, Omega::real(0.3));
    const Complex c = toeplitz_det_closed<Complex>(5, Omega::real(0.3));
    CHECK(std::abs(d - c) <= 1e-10 * std::abs(c));
}

TEST_CASE("bareiss matches LU on a generic matrix") {
    std::vector<std::vector<Rational>> a{{q("1/2"), Rational(3), Rational(-1)},
                                         {Rational(2), q("-1/3"), Rational(4)},
                                         {Rational(0), Rational(5), q("7/5")}};
    std::vector<std::vector<Complex>> b(3, std::vector<Complex>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = to_double(a[i][j]);
    CHECK(std::abs(to_double(determinant_bareiss(a)) - determinant_lu(b).real()) < 1e-12);
    std::vector<std::vector<Rational>> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(determinant_bareiss(singular).is_zero());
}

TEST_CASE("determinantal route") {
    CHECK(construct_determinantal<Rational>(3, w("1/3")) == construct<Rational>(3, w("1/3")));
    CHECK(construct_determinantal<Rational>(5, w("22/7")) == construct<Rational>(5, w("22/7")));
    CHECK(construct_determinantal<Rational>(0, w("1/2")) == construct<Rational>(0, w("1/2")));
    CHECK_THROWS_AS(construct_determinantal<Rational>(3, w("1")), ExistenceError);
    CHECK_THROWS_AS(construct_determinantal<Rational>(3, w("0")), ExistenceError);
}

TEST_CASE("orthogonality sums") {
    CHECK(r_nk<Rational>(2, 2, w("1/2")) == q("64/45"));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 0; k < n; ++k) CHECK(r_nk<Rational>(n, k, w("5/4")).is_zero());
}

TEST_CASE("bilinear form") {
    using P = Polynomial<Rational>;
    const auto s = construct<Rational>(4, w("2/3"));
    for (unsigned k = 0; k < 4; ++k) CHECK(bilinear(s, P::monomial(k), w("2/3")).is_zero());
    CHECK_FALSE(bilinear(s, P::monomial(4), w("2/3")).is_zero());
    CHECK(bilinear(P::monomial(2), P::monomial(0), w("1/2")) == reduced_moment<Rational>(2, w("1/2")));
}

}
