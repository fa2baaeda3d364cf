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

#include "doctest.h"
#include "support.hpp"

using namespace skyburst;
using skyburst::test::q;
using skyburst::test::strs;
using skyburst::test::w;
using S = std::vector<std::string>;

TEST_SUITE("skypoly") {

TEST_CASE("construct: reference coefficients") {
    CHECK(strs(construct<Rational>(0, w("1/2"))) == S{"1"});
    CHECK(strs(construct<Rational>(1, w("1/2"))) == S{"1/3", "1"});
    CHECK(strs(construct<Rational>(2, w("1/2"))) == S{"-1/15", "2/5", "1"});
    CHECK(strs(construct<Rational>(3, w("1/3"))) == S{"1/28", "-3/35", "3/10", "1"});
    CHECK(strs(construct<Rational>(2, w("7/3"))) == S{"14/65", "14/13", "1"});
    CHECK(strs(construct<Rational>(3, w("5/4"))) == S{"-5/663", "15/221", "15/17", "1"});
    CHECK(strs(construct<Rational>(1, w("3"))) == S{"3/4", "1"});
}

TEST_CASE("construct at omega = 0 is z^n") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(construct<Rational>(n, w("0")) == Polynomial<Rational>::monomial(n));
}

TEST_CASE("construct at integer omega below n") {
    CHECK(strs(construct<Rational>(3, w("1"))) == S{"0", "0", "3/4", "1"});
    CHECK(strs(construct<Rational>(4, w("2"))) == S{"0", "0", "2/5", "4/3", "1"});
    CHECK(construct<Rational>(4, w("2")) == hypergeometric_sum<Rational>(4, w("2")));
    CHECK(construct_via_symmetry<Rational>(3, 1) == construct<Rational>(3, w("1")));
    CHECK_THROWS_AS(construct_via_symmetry<Rational>(2, 2), DomainError);
}

TEST_CASE("poles at omega in {-1..-n}") {
    for (long m = 1; m <= 4; ++m) {
        CHECK_THROWS_AS(construct<Rational>(4, Omega::exact(Rational(-m))), PoleError);
    }
    CHECK_NOTHROW(construct<Rational>(4, w("-5")));
    CHECK_NOTHROW(construct<Rational>(4, w("-1/2")));
    try {
        (void)construct<Rational>(2, w("-2"));
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(std::string(e.what()).find("l=1") != std::string::npos);
    }
}

TEST_CASE("float construct agrees with exact") {
    for (const char* s : {"1/3", "1/2", "5/4", "22/7"}) {
        for (unsigned n = 0; n <= 8; ++n) {
            const auto exact = to_float(construct<Rational>(n, w(s)));
            const auto fl = construct<Complex>(n, Omega::real(to_double(q(s))));
            REQUIRE(exact.degree() == fl.degree());
            for (std::size_t j = 0; j < exact.coeffs().size(); ++j)
                CHECK(std::abs(exact.coeffs()[j] - fl.coeffs()[j]) <= 1e-12 * (1 + std::abs(exact.coeffs()[j])));
        }
    }
}

TEST_CASE("special values") {
    CHECK(value_at_minus_one<Rational>(3, w("1/2")) == q("-16/35"));
    CHECK(derivative_at_minus_one<Rational>(1, 3, w("1/2")) == q("72/35"));
    CHECK(value_at_zero<Rational>(3, w("1/2")) == q("1/35"));
    CHECK(value_at_zero<Rational>(2, w("1/2")) == q("-1/15"));
    CHECK(value_at_zero<Rational>(3, w("1")).is_zero());
    CHECK_THROWS_AS(derivative_at_minus_one<Rational>(4, 3, w("1/2")), DomainError);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto p = construct<Rational>(n, w("2/3"));
        for (unsigned m = 0; m <= n; ++m)
            CHECK(derivative_at_minus_one<Rational>(m, n, w("2/3")) == p.derivative(m)(Rational(-1)));
    }
}

TEST_CASE("reflection to negative omega") {
    CHECK(strs(reflect_negative_omega<Rational>(2, w("1/2"))) == S{"1", "-2/3", "1"});
    CHECK(reflect_negative_omega<Rational>(4, w("7/3")) == hypergeometric_sum<Rational>(4, w("-7/3")));
    CHECK_THROWS_AS(reflect_negative_omega<Rational>(3, w("2")), DomainError);
    CHECK_THROWS_AS(reflect_negative_omega<Rational>(3, w("-1/2")), DomainError);
}

TEST_CASE("taylor expansion about -1 round trips") {
    for (unsigned n = 0; n <= 7; ++n) {
        const auto c = taylor_about_minus_one<Rational>(n, w("5/4"));
        CHECK(from_taylor_about_minus_one<Rational>(c) == construct<Rational>(n, w("5/4")));
    }
}

}
