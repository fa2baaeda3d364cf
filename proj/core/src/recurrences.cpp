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

#include "skyburst/recurrences.hpp"

#include <cmath>
#include <string>

#include "skyburst/skypoly.hpp"

namespace skyburst {

namespace {

template <FieldScalar T>
T lift(const Rational& r) {
    return ScalarTraits<T>::from_rational(r);
}

template <FieldScalar T>
T nonzero(const T& v, const char* where, const std::string& detail) {
    if (ScalarTraits<T>::is_zero(v)) throw PoleError(where, detail);
    return v;
}

template <FieldScalar T>
Polynomial<T> one_plus_z() {
    return Polynomial<T>{Polynomial<T>::one(), Polynomial<T>::one()};
}

void require_degree(unsigned n, unsigned min, const char* what) {
    if (n < min) throw DomainError(std::string(what) + " needs n >= " + std::to_string(min));
}

template <FieldScalar T>
std::vector<Polynomial<T>> family(unsigned n, const Omega& omega) {
    std::vector<Polynomial<T>> f;
    f.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) f.push_back(construct<T>(l, omega));
    return f;
}

Rational max_abs_exact(const Polynomial<Rational>& p) {
    Rational m(0);
    for (const auto& c : p.coeffs()) {
        const Rational a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::MixedRecurrence: return "mixed_recurrence";
        case IdentityId::OmegaShiftCorrected: return "omega_shift_corrected";
        case IdentityId::OmegaShiftPrinted: return "omega_shift_printed";
        case IdentityId::LiftingCorrected: return "lifting_corrected";
        case IdentityId::LiftingPrinted: return "lifting_printed";
        case IdentityId::Lowering: return "lowering";
        case IdentityId::DifferentialRecurrence: return "differential_recurrence";
        case IdentityId::DifferentialEquation: return "differential_equation";
        case IdentityId::GeneratingFunction: return "generating_function";
    }
    return "unknown";
}

template <FieldScalar T>
Polynomial<T> apply_mixed(unsigned n, const Omega& omega, const Polynomial<T>& s_prev,
                          const Polynomial<T>& s_prev_lowered) {
    require_degree(n, 1, "mixed recurrence");
    const T w = omega.as<T>();
    const T den = nonzero<T>((w + lift<T>(Rational(static_cast<long>(n) - 1))) * (w + lift<T>(Rational(n))),
                             "mixed recurrence", "(omega+n-1)(omega+n) = 0");
    return s_prev.shifted(1) + s_prev_lowered * (w * w / den);
}

template <FieldScalar T>
Polynomial<T> step_mixed(unsigned n, const Omega& omega) {
    require_degree(n, 1, "mixed recurrence");
    return apply_mixed<T>(n, omega, construct<T>(n - 1, omega), construct<T>(n - 1, omega.shifted(-1)));
}

template <FieldScalar T>
Polynomial<T> apply_omega_up(unsigned n, const Omega& omega, const Polynomial<T>& s_n, const Polynomial<T>& s_prev,
                             OmegaShiftVariant variant) {
    require_degree(n, 1, "omega-shift recurrence");
    const T w = omega.as<T>();
    const T den = nonzero<T>((w + lift<T>(Rational(n))) * (w + lift<T>(Rational(n + 1))), "omega-shift recurrence",
                             "(omega+n)(omega+n+1) = 0");
    const T nn = lift<T>(Rational(n));
    switch (variant) {
        case OmegaShiftVariant::Corrected: return s_n + s_prev * (nn * nn / den);
        case OmegaShiftVariant::PrintedZSquared: return s_n + s_prev.shifted(2) * (nn / den);
        case OmegaShiftVariant::PrintedZ: return s_n + s_prev.shifted(1) * (nn * nn / den);
    }
    return s_n;
}

template <FieldScalar T>
Polynomial<T> step_omega_up(unsigned n, const Omega& omega, OmegaShiftVariant variant) {
    require_degree(n, 1, "omega-shift recurrence");
    return apply_omega_up<T>(n, omega, construct<T>(n, omega), construct<T>(n - 1, omega), variant);
}

template <FieldScalar T>
Polynomial<T> apply_lifting(unsigned n, const Omega& omega, std::span<const Polynomial<T>> fam, bool printed) {
    if (fam.size() < n + 1) throw DomainError("lifting needs S_0 .. S_n");
    const T one = Polynomial<T>::one();
    const T w = omega.as<T>();
    const T nfact = lift<T>(factorial(n));
    const T scale = nonzero<T>(pochhammer(T(w + one + one), n), "lifting", "(2+omega)_n = 0");

    Polynomial<T> sum;
    for (unsigned l = 0; l < n; ++l)
        sum += fam[l].shifted(n - l - 1) * (pochhammer(T(w + one), l) / lift<T>(factorial(l)));
    Polynomial<T> last = fam[n] * (pochhammer(T(w + one), n) / nfact);
    if (printed) last = last.shifted(1);
    return (one_plus_z<T>() * sum + last) * (nfact / scale);
}

template <FieldScalar T>
Polynomial<T> lifting(unsigned n, const Omega& omega, bool printed) {
    const auto f = family<T>(n, omega);
    return apply_lifting<T>(n, omega, f, printed);
}

template <FieldScalar T>
Polynomial<T> apply_lowering(unsigned n, const Omega& omega, std::span<const Polynomial<T>> fam) {
    if (fam.size() < n + 1) throw DomainError("lowering needs S_0 .. S_n");
    const T one = Polynomial<T>::one();
    const T w = omega.as<T>();
    const T nfact = lift<T>(factorial(n));
    const T scale = nonzero<T>(pochhammer(w, n), "lowering", "(omega)_n = 0");

    Polynomial<T> sum;
    for (unsigned l = 0; l < n; ++l) {
        sum += fam[l] * (sign_power<T>(static_cast<long>(n - l)) * pochhammer(T(w + one), l) /
                         lift<T>(factorial(l)));
    }
    const Polynomial<T> last = fam[n] * (pochhammer(T(w + one), n) / nfact);
    return (one_plus_z<T>() * sum + last) * (nfact / scale);
}

template <FieldScalar T>
Polynomial<T> lowering(unsigned n, const Omega& omega) {
    const auto f = family<T>(n, omega);
    return apply_lowering<T>(n, omega, f);
}

template <FieldScalar T>
Polynomial<T> apply_differential(unsigned n, const Omega& omega, const Polynomial<T>& s_prev) {
    require_degree(n, 1, "differential recurrence");
    const T w = omega.as<T>();
    const T nn = lift<T>(Rational(n));
    const T den = nonzero<T>(w + nn, "differential recurrence", "omega + n = 0");
    const Polynomial<T> rhs = s_prev.derivative().shifted(1) * nn + s_prev * (nn * (Polynomial<T>::one() + w));
    return rhs * (Polynomial<T>::one() / den);
}

template <FieldScalar T>
Polynomial<T> differential_step(unsigned n, const Omega& omega) {
    require_degree(n, 1, "differential recurrence");
    return apply_differential<T>(n, omega, construct<T>(n - 1, omega));
}

template <FieldScalar T>
Polynomial<T> ode_residual(const Polynomial<T>& s, unsigned n, const Omega& omega) {
    const T one = Polynomial<T>::one();
    const T w = omega.as<T>();
    const Polynomial<T> d1 = s.derivative();
    const Polynomial<T> d2 = s.derivative(2);
    // -z(1+z) = -z - z^2
    const Polynomial<T> a2{Polynomial<T>::zero(), T(-one), T(-one)};
    // 1 - (2+w-n)(z+1)
    const T k = one + one + w - lift<T>(Rational(n));
    const Polynomial<T> a1{T(one - k), T(-k)};
    return a2 * d2 + a1 * d1 + s * ((one + w) * lift<T>(Rational(n)));
}

template <FieldScalar T>
Polynomial<T> ode_residual(unsigned n, const Omega& omega) {
    return ode_residual<T>(construct<T>(n, omega), n, omega);
}

double genfun_compare(const Omega& omega, Complex z, Complex t, unsigned terms) {
    if (terms < 1) throw DomainError("generating function comparison needs N >= 1");
    if (std::abs(t) >= 1.0 || std::abs(z * t) >= 1.0) {
        throw DomainError("generating function comparison needs |T| < 1 and |zT| < 1");
    }
    const Complex a = 1.0 + t;
    const Complex b = 1.0 - z * t;
    if ((a.imag() == 0.0 && a.real() <= 0.0) || (b.imag() == 0.0 && b.real() <= 0.0)) {
        throw DomainError("generating function comparison: argument on the branch cut");
    }
    const double w = omega.to_double();

    Complex sum = 0.0;
    double weight = 1.0;  // (1+w)_n / n!
    Complex tn = 1.0;
    for (unsigned n = 0; n <= terms; ++n) {
        if (n > 0) {
            weight *= (w + n) / n;
            tn *= t;
        }
        const Polynomial<Complex> s =
            omega.is_exact() ? to_float(construct<Rational>(n, omega)) : construct<Complex>(n, omega);
        sum += weight * s(z) * tn;
    }
    const Complex closed = std::pow(a, w) / std::pow(b, w + 1.0);
    return std::abs(sum - closed);
}

IdentityReport verify_identity(IdentityId id, unsigned n, const Omega& omega) {
    using P = Polynomial<Rational>;
    P residual;
    switch (id) {
        case IdentityId::MixedRecurrence:
            residual = step_mixed<Rational>(n, omega) - construct<Rational>(n, omega);
            break;
        case IdentityId::OmegaShiftCorrected:
            residual = step_omega_up<Rational>(n, omega) - construct<Rational>(n, omega.shifted(1));
            break;
        case IdentityId::OmegaShiftPrinted:
            residual = step_omega_up<Rational>(n, omega, OmegaShiftVariant::PrintedZSquared) -
                       construct<Rational>(n, omega.shifted(1));
            break;
        case IdentityId::LiftingCorrected:
            residual = lifting<Rational>(n, omega) - construct<Rational>(n, omega.shifted(1));
            break;
        case IdentityId::LiftingPrinted:
            residual = lifting<Rational>(n, omega, true) - construct<Rational>(n, omega.shifted(1));
            break;
        case IdentityId::Lowering:
            residual = lowering<Rational>(n, omega) - construct<Rational>(n, omega.shifted(-1));
            break;
        case IdentityId::DifferentialRecurrence:
            residual = differential_step<Rational>(n, omega) - construct<Rational>(n, omega).derivative();
            break;
        case IdentityId::DifferentialEquation:
            residual = ode_residual<Rational>(n, omega);
            break;
        case IdentityId::GeneratingFunction:
            throw DomainError("the generating function is checked in float mode by genfun_compare");
    }
    return IdentityReport{id, max_abs_exact(residual), n, omega.to_string(), std::nullopt, std::nullopt};
}

#define SKYBURST_RECURRENCES_INSTANTIATE(T)                                                                  \
    template Polynomial<T> apply_mixed<T>(unsigned, const Omega&, const Polynomial<T>&, const Polynomial<T>&); \
    template Polynomial<T> step_mixed<T>(unsigned, const Omega&);                                            \
    template Polynomial<T> apply_omega_up<T>(unsigned, const Omega&, const Polynomial<T>&,                   \
                                             const Polynomial<T>&, OmegaShiftVariant);                       \
    template Polynomial<T> step_omega_up<T>(unsigned, const Omega&, OmegaShiftVariant);                      \
    template Polynomial<T> apply_lifting<T>(unsigned, const Omega&, std::span<const Polynomial<T>>, bool);   \
    template Polynomial<T> lifting<T>(unsigned, const Omega&, bool);                                         \
    template Polynomial<T> apply_lowering<T>(unsigned, const Omega&, std::span<const Polynomial<T>>);        \
    template Polynomial<T> lowering<T>(unsigned, const Omega&);                                              \
    template Polynomial<T> apply_differential<T>(unsigned, const Omega&, const Polynomial<T>&);              \
    template Polynomial<T> differential_step<T>(unsigned, const Omega&);                                     \
    template Polynomial<T> ode_residual<T>(const Polynomial<T>&, unsigned, const Omega&);                    \
    template Polynomial<T> ode_residual<T>(unsigned, const Omega&);

SKYBURST_RECURRENCES_INSTANTIATE(Rational)
SKYBURST_RECURRENCES_INSTANTIATE(Complex)

}  // namespace skyburst
