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

namespace {

const char* const kGrid[] = {"1/3", "1/2", "2/3", "5/4", "7/3", "22/7"};

}  // namespace

TEST_SUITE("recurrences") {

TEST_CASE("corrected identities hold exactly") {
    for (const char* s : kGrid) {
        for (unsigned n = 1; n <= 8; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(verify_identity(IdentityId::MixedRecurrence, n, w(s)).passed());
            CHECK(verify_identity(IdentityId::OmegaShiftCorrected, n, w(s)).passed());
            CHECK(verify_identity(IdentityId::LiftingCorrected, n, w(s)).passed());
            CHECK(verify_identity(IdentityId::Lowering, n, w(s)).passed());
            CHECK(verify_identity(IdentityId::DifferentialRecurrence, n, w(s)).passed());
            CHECK(verify_identity(IdentityId::DifferentialEquation, n, w(s)).passed());
        }
    }
}

TEST_CASE("printed omega shift fails at n = 1, omega = 1/2") {
    const auto r = verify_identity(IdentityId::OmegaShiftPrinted, 1, w("1/2"));
    CHECK_FALSE(r.passed());
    CHECK(r.residual_norm == q("4/15"));
    const auto exact = construct<Rational>(1, w("3/2"));
    const auto zsq = step_omega_up<Rational>(1, w("1/2"), OmegaShiftVariant::PrintedZSquared) - exact;
    const auto zlin = step_omega_up<Rational>(1, w("1/2"), OmegaShiftVariant::PrintedZ) - exact;
    CHECK(strs(zsq) == S{"-4/15", "0", "4/15"});
    CHECK(strs(zlin) == S{"-4/15", "4/15"});
}

TEST_CASE("printed lifting fails at n = 1, omega = 1/2") {
    const auto r = verify_identity(IdentityId::LiftingPrinted, 1, w("1/2"));
    CHECK_FALSE(r.passed());
    // (3z^2/2 - z - 1/2) / (5/2)
    CHECK(strs(lifting<Rational>(1, w("1/2"), true) - construct<Rational>(1, w("3/2"))) == S{"-1/5", "-2/5", "3/5"});
}

TEST_CASE("apply forms take explicit neighbours") {
    const Omega om = w("2/3");
    const auto s3 = construct<Rational>(3, om);
    const auto s2 = construct<Rational>(2, om);
    CHECK(apply_omega_up<Rational>(3, om, s3, s2) == construct<Rational>(3, om.shifted(1)));
    CHECK(apply_differential<Rational>(3, om, s2) == s3.derivative());
    CHECK(ode_residual<Rational>(s3, 3, om).is_zero());
    CHECK_FALSE(ode_residual<Rational>(s2, 3, om).is_zero());
    std::vector<Polynomial<Rational>> fam;
    for (unsigned k = 0; k <= 3; ++k) fam.push_back(construct<Rational>(k, om));
    CHECK(apply_lifting<Rational>(3, om, fam) == construct<Rational>(3, om.shifted(1)));
    CHECK(apply_lowering<Rational>(3, om, fam) == construct<Rational>(3, om.shifted(-1)));
    CHECK_THROWS_AS(apply_lifting<Rational>(3, om, std::span(fam).first(2)), DomainError);
}

TEST_CASE("float recurrences are close to exact") {
    const Omega om = Omega::real(0.37);
    const auto a = step_mixed<Complex>(6, om);
    const auto b = construct<Complex>(6, om);
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) CHECK(std::abs(a.coeffs()[j] - b.coeffs()[j]) < 1e-12);
}

TEST_CASE("generating function") {
    CHECK(genfun_compare(w("1/2"), 0.0, 0.0, 5) == 0.0);
    const Complex zs[] = {{0.3, 0.0}, {-0.5, 0.2}, {0.0, 0.8}, {0.7, -0.4}, {-0.9, 0.0}};
    const Complex ts[] = {{0.5, 0.0}, {-0.4, 0.3}, {0.2, -0.5}, {0.6, 0.0}, {-0.3, -0.2}};
    for (const char* s : kGrid) {
        for (int i = 0; i < 5; ++i) {
            CHECK(std::abs(zs[i] * ts[i]) <= 0.5);
            CHECK(genfun_compare(w(s), zs[i], ts[i], 60) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(genfun_compare(w("1/2"), 0.0, 0.0, 0), DomainError);
    CHECK_THROWS_AS(genfun_compare(w("1/2"), 0.0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(genfun_compare(w("1/2"), 3.0, 0.5, 5), DomainError);
}

TEST_CASE("identity names are stable") {
    CHECK(std::string(identity_name(IdentityId::OmegaShiftCorrected)) == "omega_shift_corrected");
    CHECK_THROWS_AS(verify_identity(IdentityId::GeneratingFunction, 2, w("1/2")), DomainError);
}

}
