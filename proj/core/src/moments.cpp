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

#include "skyburst/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace skyburst {

namespace {

template <FieldScalar T>
T lift(const Rational& r) {
    return ScalarTraits<T>::from_rational(r);
}

// Solves a x = b in place; false when a is singular.
template <FieldScalar T>
bool solve_in_place(std::vector<std::vector<T>>& a, std::vector<T>& b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        if constexpr (ScalarTraits<T>::exact) {
            while (pivot < n && ScalarTraits<T>::is_zero(a[pivot][k])) ++pivot;
            if (pivot == n) return false;
        } else {
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
            if (ScalarTraits<T>::is_zero(a[pivot][k])) return false;
        }
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ScalarTraits<T>::is_zero(a[i][k])) continue;
            const T f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        T acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * b[j];
        b[k] = acc / a[k][k];
    }
    return true;
}

}  // namespace

template <FieldScalar T>
T reduced_moment(long k, const Omega& omega) {
    const T den = lift<T>(Rational(k)) + omega.as<T>();
    if (ScalarTraits<T>::is_zero(den)) {
        throw PoleError("moment", "k + omega = 0 at k=" + std::to_string(k) + ", omega=" + omega.to_string());
    }
    return sign_power<T>(k) / den;
}

double moment_prefactor(const Omega& omega) {
    if (omega.is_integer()) return 0.0;
    const double w = omega.to_double();
    // reduce first so large omega keeps full relative accuracy
    const double r = std::fmod(w, 2.0);
    return std::sin(std::numbers::pi * r) / std::numbers::pi;
}

template <FieldScalar T>
T moment(long k, const Omega& omega) {
    if constexpr (ScalarTraits<T>::exact) {
        return reduced_moment<T>(k, omega);
    } else {
        return moment_prefactor(omega) * reduced_moment<T>(k, omega);
    }
}

template <FieldScalar T>
ToeplitzMomentMatrix<T>::ToeplitzMomentMatrix(unsigned n, const Omega& omega) : n_(n) {
    if (n == 0) return;
    diagonals_.reserve(2 * static_cast<std::size_t>(n) - 1);
    for (long d = -static_cast<long>(n) + 1; d <= static_cast<long>(n) - 1; ++d)
        diagonals_.push_back(reduced_moment<T>(d, omega));
}

template <FieldScalar T>
std::vector<std::vector<T>> ToeplitzMomentMatrix<T>::dense() const {
    std::vector<std::vector<T>> a(n_, std::vector<T>(n_));
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) a[i][j] = (*this)(i, j);
    return a;
}

template <FieldScalar T>
T bilinear(const Polynomial<T>& f, const Polynomial<T>& g, const Omega& omega) {
    T acc = Polynomial<T>::zero();
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    for (std::size_t j = 0; j < fc.size(); ++j) {
        if (ScalarTraits<T>::is_zero(fc[j])) continue;
        for (std::size_t k = 0; k < gc.size(); ++k) {
            if (ScalarTraits<T>::is_zero(gc[k])) continue;
            acc += fc[j] * ScalarTraits<T>::conj(gc[k]) *
                   reduced_moment<T>(static_cast<long>(j) - static_cast<long>(k), omega);
        }
    }
    return acc;
}

Rational determinant_bareiss(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    if (n == 0) return Rational(1);
    // Clear denominators row by row, then eliminate over the integers.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpq_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].raw().get_num() * (l / a[i][j].raw().get_den());
        scale *= mpq_class(l);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    mpq_class det(m[n - 1][n - 1] * sign);
    det /= scale;
    return Rational(det);
}

Complex determinant_lu(std::vector<std::vector<Complex>> a) {
    const std::size_t n = a.size();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (a[p][k] == Complex{}) return Complex{};
        if (p != k) {
            std::swap(a[k], a[p]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

template <FieldScalar T>
T toeplitz_det_direct(unsigned n, const Omega& omega) {
    const ToeplitzMomentMatrix<T> t(n, omega);
    if constexpr (ScalarTraits<T>::exact) {
        return determinant_bareiss(t.dense());
    } else {
        return determinant_lu(t.dense());
    }
}

template <FieldScalar T>
T toeplitz_det_closed(unsigned n, const Omega& omega) {
    if (omega.is_zero()) throw PoleError("Cauchy determinant closed form", "omega = 0");
    const T w = omega.as<T>();
    const T w2 = w * w;
    T num = Polynomial<T>::one();
    for (unsigned l = 0; l < n; ++l) {
        const T f = lift<T>(factorial(l));
        num *= f * f;
    }
    T den = Polynomial<T>::one();
    for (unsigned k = 1; k < n; ++k) {
        const T base = lift<T>(Rational(static_cast<long>(k) * static_cast<long>(k))) - w2;
        if (ScalarTraits<T>::is_zero(base)) {
            throw PoleError("Cauchy determinant closed form", "k^2 - omega^2 = 0 at k=" + std::to_string(k));
        }
        for (unsigned e = 0; e < n - k; ++e) den *= base;
    }
    T inv_w_pow = Polynomial<T>::one();
    for (unsigned i = 0; i < n; ++i) inv_w_pow /= w;
    return inv_w_pow * num / den;
}

template <FieldScalar T>
Polynomial<T> construct_determinantal(unsigned n, const Omega& omega) {
    if (n == 0) return Polynomial<T>::constant(Polynomial<T>::one());
    if (omega.is_integer()) {
        throw ExistenceError("determinantal construction: the moment system is singular at integer omega=" +
                             omega.to_string() + "; use the symmetry route");
    }
    auto a = ToeplitzMomentMatrix<T>(n, omega).dense();
    std::vector<T> b(n);
    for (unsigned i = 0; i < n; ++i)
        b[i] = -reduced_moment<T>(static_cast<long>(n) - static_cast<long>(i), omega);
    if (!solve_in_place(a, b)) {
        throw ExistenceError("determinantal construction: singular moment system for n=" + std::to_string(n) +
                             ", omega=" + omega.to_string());
    }
    b.push_back(Polynomial<T>::one());
    return Polynomial<T>(std::move(b));
}

template <FieldScalar T>
T r_nk(unsigned n, unsigned k, const Omega& omega) {
    const T w = omega.as<T>();
    const T one = Polynomial<T>::one();
    const T a1 = lift<T>(Rational(-static_cast<long>(n)));
    const T a2 = -w;
    const T a3 = lift<T>(Rational(static_cast<long>(k) - static_cast<long>(n))) - w;
    const T b1 = a1 - w;
    const T b2 = a3 + one;
    T sum = Polynomial<T>::zero();
    for (unsigned l = 0; l <= n; ++l) {
        const T den = lift<T>(factorial(l)) * pochhammer(b1, l) * pochhammer(b2, l);
        if (ScalarTraits<T>::is_zero(den)) {
            throw PoleError("orthogonality sum r_{n,k}", "denominator vanishes at l=" + std::to_string(l));
        }
        sum += pochhammer(a1, l) * pochhammer(a2, l) * pochhammer(a3, l) / den;
    }
    return sum;
}

#define SKYBURST_MOMENTS_INSTANTIATE(T)                                                  \
    template T reduced_moment<T>(long, const Omega&);                                   \
    template T moment<T>(long, const Omega&);                                           \
    template class ToeplitzMomentMatrix<T>;                                             \
    template T bilinear<T>(const Polynomial<T>&, const Polynomial<T>&, const Omega&);   \
    template T toeplitz_det_direct<T>(unsigned, const Omega&);                          \
    template T toeplitz_det_closed<T>(unsigned, const Omega&);                          \
    template Polynomial<T> construct_determinantal<T>(unsigned, const Omega&);          \
    template T r_nk<T>(unsigned, unsigned, const Omega&);

SKYBURST_MOMENTS_INSTANTIATE(Rational)
SKYBURST_MOMENTS_INSTANTIATE(Complex)

}  // namespace skyburst
