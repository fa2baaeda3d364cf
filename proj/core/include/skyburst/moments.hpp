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

// Moments of z^(omega-1) dz on the unit circle, the induced bilinear form,
// Toeplitz moment determinants and the determinantal construction.
//
// Exact mode works on the reduced scale: the common factor
// sigma = sin(pi omega)/pi is stripped from every moment (and sigma^n from an
// n x n determinant), which turns each identity into a rational one.

#include <vector>

#include "skyburst/polynomial.hpp"
#include "skyburst/scalar.hpp"

namespace skyburst {

/// nu_k = (-1)^k / (k + omega). PoleError when k + omega = 0.
template <FieldScalar T>
T reduced_moment(long k, const Omega& omega);

/// sin(pi omega)/pi
double moment_prefactor(const Omega& omega);

/// Reduced moment in exact mode, full moment sigma * nu_k in float mode.
template <FieldScalar T>
T moment(long k, const Omega& omega);

class MomentSequence {
public:
    explicit MomentSequence(Omega omega) : omega_(std::move(omega)) {}

    const Omega& omega() const noexcept { return omega_; }

    template <FieldScalar T>
    T reduced(long k) const {
        return reduced_moment<T>(k, omega_);
    }

    double prefactor() const { return moment_prefactor(omega_); }

    /// mu_k = sigma * nu_k
    Complex full(long k) const { return prefactor() * reduced_moment<Complex>(k, omega_); }

private:
    Omega omega_;
};

/// n x n matrix with entry (i, j) = nu_{j-i}.
template <FieldScalar T>
class ToeplitzMomentMatrix {
public:
    ToeplitzMomentMatrix(unsigned n, const Omega& omega);

    unsigned size() const noexcept { return n_; }

    /// Zero-based row i, column j.
    const T& operator()(unsigned i, unsigned j) const { return diagonals_[static_cast<std::size_t>(j) + n_ - 1 - i]; }

    std::vector<std::vector<T>> dense() const;

private:
    unsigned n_;
    std::vector<T> diagonals_;  // nu_{-(n-1)} .. nu_{n-1}
};

/// Reduced <f, g> = sum_{j,k} f_j conj(g_k) nu_{j-k}.
template <FieldScalar T>
T bilinear(const Polynomial<T>& f, const Polynomial<T>& g, const Omega& omega);

/// Reduced determinant of the n x n Toeplitz moment matrix: Bareiss
/// fraction-free elimination (exact) or partial pivoting (float).
template <FieldScalar T>
T toeplitz_det_direct(unsigned n, const Omega& omega);

/// (1/omega)^n prod_{l<n} l!^2 / prod_{k=1}^{n-1} (k^2 - omega^2)^(n-k)
template <FieldScalar T>
T toeplitz_det_closed(unsigned n, const Omega& omega);

/// Monic degree-n polynomial from the orthogonality system
/// sum_j c_j nu_{j-i} = 0, i = 0..n-1. ExistenceError when singular
/// (and for every integer omega in exact mode).
template <FieldScalar T>
Polynomial<T> construct_determinantal(unsigned n, const Omega& omega);

/// Terminating 3F2 at 1:
/// sum_l (-n)_l (-omega)_l (k-n-omega)_l / (l! (-n-omega)_l (k-n-omega+1)_l).
template <FieldScalar T>
T r_nk(unsigned n, unsigned k, const Omega& omega);

/// Determinant of a dense square matrix by fraction-free elimination.
Rational determinant_bareiss(std::vector<std::vector<Rational>> a);
Complex determinant_lu(std::vector<std::vector<Complex>> a);

#define SKYBURST_MOMENTS_EXTERN(T)                                                              \
    extern template T reduced_moment<T>(long, const Omega&);                                   \
    extern template T moment<T>(long, const Omega&);                                           \
    extern template class ToeplitzMomentMatrix<T>;                                             \
    extern template T bilinear<T>(const Polynomial<T>&, const Polynomial<T>&, const Omega&);   \
    extern template T toeplitz_det_direct<T>(unsigned, const Omega&);                          \
    extern template T toeplitz_det_closed<T>(unsigned, const Omega&);                          \
    extern template Polynomial<T> construct_determinantal<T>(unsigned, const Omega&);          \
    extern template T r_nk<T>(unsigned, unsigned, const Omega&);

SKYBURST_MOMENTS_EXTERN(Rational)
SKYBURST_MOMENTS_EXTERN(Complex)
#undef SKYBURST_MOMENTS_EXTERN

}  // namespace skyburst
