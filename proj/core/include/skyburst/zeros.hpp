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

// Zeros of S_n^omega: simultaneous root finding, classification, emergence
// directions near integer omega and continuation of zero paths in omega.

#include <cstddef>
#include <limits>
#include <vector>

#include "skyburst/polynomial.hpp"
#include "skyburst/scalar.hpp"

namespace skyburst {

enum class ZeroTag { NegUnitInterval, PosReal, ComplexOffAxis, Origin, OtherReal };

const char* tag_name(ZeroTag tag);

struct ClassifiedRoot {
    Complex value;
    ZeroTag tag;
};

struct ZeroSet {
    std::vector<ClassifiedRoot> roots;  // origin roots repeated by multiplicity
    unsigned n = 0;
    double omega = 0.0;
    double residual_max = 0.0;
};

struct ZeroCounts {
    int neg_unit = 0;
    int pos_real = 0;
    int complex_offaxis = 0;
    int origin = 0;
    int other_real = 0;
};

/// Classification thresholds.
inline constexpr double kRealTolerance = 1e-9;
inline constexpr double kOriginTolerance = 1e-12;
inline constexpr double kSimplicityThreshold = 1e-6;

ZeroTag classify_value(Complex z);

struct AberthOptions {
    unsigned max_iterations = 500;
    double start_rotation = 0.5;  // radians
    unsigned polish_steps = 3;
};

/// All roots of p (degree >= 1). Exact zero low-order coefficients are
/// deflated as origin roots first. Throws ConvergenceError when the
/// iteration cap is hit or the residual bound tol (1 + max |coeff|) fails.
ZeroSet find_zeros(const Polynomial<Complex>& p, double tol = 1e-10, const AberthOptions& options = {});

/// Float coefficients of S_n^omega: built exactly from the double's binary
/// value, then rounded once.
Polynomial<Complex> float_coefficients(unsigned n, double omega);
Polynomial<Complex> float_coefficients(unsigned n, const Omega& omega);

/// find_zeros on S_n^omega.
ZeroSet skyburst_zeros(unsigned n, double omega, double tol = 1e-10);
ZeroSet skyburst_zeros(unsigned n, const Omega& omega, double tol = 1e-10);

ZeroCounts classify(const ZeroSet& zs);

/// Arguments in [0, 2 pi) of the n-m smallest roots of S_n^{m+eps}, sorted.
std::vector<double> emergence_angles(unsigned n, unsigned m, double eps);

/// The reference directions pi + 2 pi k/(n-m) mod 2 pi, sorted.
std::vector<double> expected_emergence_angles(unsigned n, unsigned m);

/// Largest circular distance between matched sorted angle lists.
double max_angle_error(const std::vector<double>& measured, const std::vector<double>& expected);

struct TraceOptions {
    double integer_offset = 1e-10;  // closest approach to an integer omega
    double min_step = 1e-6;         // smallest linear step away from integers
    double tol = 1e-10;
    unsigned threads = 1;           // for the base grid only
};

struct TrajectoryBundle {
    unsigned n = 0;
    std::vector<double> omega_grid;
    std::vector<std::vector<Complex>> paths;  // paths[id][k] at omega_grid[k]
    std::vector<std::vector<ZeroTag>> tags;
    std::vector<long> burst_events;
    double match_threshold = 0.0;
};

/// Continues the zeros of S_n^omega over [omega_start, omega_end]. Grid
/// points are never closer than integer_offset to an integer; each integer
/// crossed is a burst event. Steps are bisected (geometrically near
/// integers) until every matched zero moves less than match_threshold.
TrajectoryBundle trace(unsigned n, double omega_start, double omega_end, double base_step, double match_threshold,
                       const TraceOptions& options = {});

/// Indices perm with cost[i][perm[i]] minimal in total (Hungarian method).
std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost);

/// Matches previous zeros to new ones: greedy nearest neighbour, falling
/// back to the optimal assignment when two zeros pick the same target.
std::vector<std::size_t> match_zeros(const std::vector<Complex>& previous, const std::vector<Complex>& next);

/// max_k |z_k + 1| over the zeros of S_n^omega for omega > n. Roots are
/// found in the shifted variable 1+z, where they are well separated.
double fizzle_gap(unsigned n, double omega);

/// Smallest distance between non-origin roots; +infinity with fewer than two.
double simplicity_margin(const ZeroSet& zs);

}  // namespace skyburst
