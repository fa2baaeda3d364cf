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

// Recurrences, generating function and differential equation for S_n^omega.
//
// Each relation has an "apply" form taking the neighbouring polynomials and a
// convenience form that builds its inputs with construct(). Two relations
// also have a "printed" variant that does not hold. Those are kept only so
// the tests can show that they fail:
//   omega shift:  S_n^{w+1} = S_n^w + n^2/((w+n)(w+n+1)) S_{n-1}^w.
//                 The factors n z^2 and n^2 z already disagree at n = 1,
//                 where S_1^{w+1} - S_1^w = 1/((w+1)(w+2)) is constant.
//   lifting:      the last term is (1+w)_n/n! S_n^w with no extra factor z;
//                 the z-free term is what the generating-function expansion
//                 produces.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skyburst/polynomial.hpp"
#include "skyburst/scalar.hpp"

namespace skyburst {

enum class IdentityId {
    MixedRecurrence,
    OmegaShiftCorrected,
    OmegaShiftPrinted,
    LiftingCorrected,
    LiftingPrinted,
    Lowering,
    DifferentialRecurrence,
    DifferentialEquation,
    GeneratingFunction,
};

const char* identity_name(IdentityId id);

enum class OmegaShiftVariant { Corrected, PrintedZSquared, PrintedZ };

struct IdentityReport {
    IdentityId identity_id;
    Rational residual_norm;  // max |coeff| of the residual; 0 is an exact pass
    unsigned n = 0;
    std::string omega;
    std::optional<Complex> z;
    std::optional<Complex> t;

    bool passed() const { return residual_norm.is_zero(); }
};

/// z S_{n-1}^w + w^2/((w+n-1)(w+n)) S_{n-1}^{w-1}
template <FieldScalar T>
Polynomial<T> apply_mixed(unsigned n, const Omega& omega, const Polynomial<T>& s_prev,
                          const Polynomial<T>& s_prev_lowered);
template <FieldScalar T>
Polynomial<T> step_mixed(unsigned n, const Omega& omega);

/// S_n^{w+1} from S_n^w and S_{n-1}^w.
template <FieldScalar T>
Polynomial<T> apply_omega_up(unsigned n, const Omega& omega, const Polynomial<T>& s_n,
                             const Polynomial<T>& s_prev, OmegaShiftVariant variant = OmegaShiftVariant::Corrected);
template <FieldScalar T>
Polynomial<T> step_omega_up(unsigned n, const Omega& omega,
                            OmegaShiftVariant variant = OmegaShiftVariant::Corrected);

/// S_n^{w+1} from the family S_0^w .. S_n^w.
template <FieldScalar T>
Polynomial<T> apply_lifting(unsigned n, const Omega& omega, std::span<const Polynomial<T>> family,
                            bool printed = false);
template <FieldScalar T>
Polynomial<T> lifting(unsigned n, const Omega& omega, bool printed = false);

/// S_n^{w-1} from the family S_0^w .. S_n^w.
template <FieldScalar T>
Polynomial<T> apply_lowering(unsigned n, const Omega& omega, std::span<const Polynomial<T>> family);
template <FieldScalar T>
Polynomial<T> lowering(unsigned n, const Omega& omega);

/// d/dz S_n^w = [n z S_{n-1}^w' + n(1+w) S_{n-1}^w] / (w+n)
template <FieldScalar T>
Polynomial<T> apply_differential(unsigned n, const Omega& omega, const Polynomial<T>& s_prev);
template <FieldScalar T>
Polynomial<T> differential_step(unsigned n, const Omega& omega);

/// -z(1+z) S'' + [1-(2+w-n)(z+1)] S' + (1+w) n S
template <FieldScalar T>
Polynomial<T> ode_residual(const Polynomial<T>& s, unsigned n, const Omega& omega);
template <FieldScalar T>
Polynomial<T> ode_residual(unsigned n, const Omega& omega);

/// |sum_{n<=N} (1+w)_n/n! S_n^w(z) T^n - (1+T)^w / (1-zT)^(w+1)| with
/// principal branches. DomainError on the cuts, for |zT| >= 1 or |T| >= 1,
/// and for N < 1.
double genfun_compare(const Omega& omega, Complex z, Complex t, unsigned terms);

/// Exact residual report for one polynomial identity at (n, omega).
IdentityReport verify_identity(IdentityId id, unsigned n, const Omega& omega);

#define SKYBURST_RECURRENCES_EXTERN(T)                                                                        \
    extern template Polynomial<T> apply_mixed<T>(unsigned, const Omega&, const Polynomial<T>&,                \
                                                 const Polynomial<T>&);                                       \
    extern template Polynomial<T> step_mixed<T>(unsigned, const Omega&);                                      \
    extern template Polynomial<T> apply_omega_up<T>(unsigned, const Omega&, const Polynomial<T>&,             \
                                                    const Polynomial<T>&, OmegaShiftVariant);                 \
    extern template Polynomial<T> step_omega_up<T>(unsigned, const Omega&, OmegaShiftVariant);                \
    extern template Polynomial<T> apply_lifting<T>(unsigned, const Omega&, std::span<const Polynomial<T>>,    \
                                                   bool);                                                     \
    extern template Polynomial<T> lifting<T>(unsigned, const Omega&, bool);                                   \
    extern template Polynomial<T> apply_lowering<T>(unsigned, const Omega&, std::span<const Polynomial<T>>);  \
    extern template Polynomial<T> lowering<T>(unsigned, const Omega&);                                        \
    extern template Polynomial<T> apply_differential<T>(unsigned, const Omega&, const Polynomial<T>&);        \
    extern template Polynomial<T> differential_step<T>(unsigned, const Omega&);                               \
    extern template Polynomial<T> ode_residual<T>(const Polynomial<T>&, unsigned, const Omega&);              \
    extern template Polynomial<T> ode_residual<T>(unsigned, const Omega&);

SKYBURST_RECURRENCES_EXTERN(Rational)
SKYBURST_RECURRENCES_EXTERN(Complex)
#undef SKYBURST_RECURRENCES_EXTERN

}  // namespace skyburst
