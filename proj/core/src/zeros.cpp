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

#include "skyburst/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "skyburst/skypoly.hpp"

namespace skyburst {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HornerResult {
    Complex value;
    Complex derivative;
};

HornerResult horner(std::span<const Complex> c, Complex z) {
    Complex p = 0.0;
    Complex dp = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

bool canonical_less(const ClassifiedRoot& a, const ClassifiedRoot& b) {
    const bool ao = a.tag == ZeroTag::Origin;
    const bool bo = b.tag == ZeroTag::Origin;
    if (ao != bo) return ao;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

// Aberth-Ehrlich on a monic polynomial without zero roots.
std::vector<Complex> aberth(std::span<const Complex> monic, const AberthOptions& options) {
    const std::size_t d = monic.size() - 1;
    double radius = 0.0;
    for (std::size_t j = 0; j < d; ++j) radius = std::max(radius, std::abs(monic[j]));
    radius += 1.0;

    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k)
        z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(d) + options.start_rotation);

    // A root is frozen once |p(z)| is within rounding of sum |c_j| |z|^j.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<char> done(d, 0);
    for (unsigned iter = 0; iter < options.max_iterations; ++iter) {
        bool converged = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (done[k]) continue;
            const auto [p, dp] = horner(monic, z[k]);
            double scale = 0.0;
            for (auto it = monic.rbegin(); it != monic.rend(); ++it) scale = scale * std::abs(z[k]) + std::abs(*it);
            if (std::abs(p) <= 4.0 * static_cast<double>(d) * eps * scale) {
                done[k] = 1;
                continue;
            }
            converged = false;
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            if (dp == Complex{}) {
                z[k] += 1.0 / repulsion;
            } else {
                const Complex ratio = p / dp;
                z[k] -= ratio / (1.0 - ratio * repulsion);
            }
        }
        if (converged) return z;
    }
    throw ConvergenceError("Aberth iteration did not converge in " + std::to_string(options.max_iterations) +
                               " iterations",
                           z);
}

Complex newton_polish(std::span<const Complex> c, Complex z, unsigned steps) {
    double best = std::abs(horner(c, z).value);
    for (unsigned s = 0; s < steps; ++s) {
        const auto [p, dp] = horner(c, z);
        if (p == Complex{} || dp == Complex{}) break;
        const Complex candidate = z - p / dp;
        const double r = std::abs(horner(c, candidate).value);
        if (!(r < best)) break;
        best = r;
        z = candidate;
    }
    return z;
}

double circular_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

const char* tag_name(ZeroTag tag) {
    switch (tag) {
        case ZeroTag::NegUnitInterval: return "NegUnitInterval";
        case ZeroTag::PosReal: return "PosReal";
        case ZeroTag::ComplexOffAxis: return "ComplexOffAxis";
        case ZeroTag::Origin: return "Origin";
        case ZeroTag::OtherReal: return "OtherReal";
    }
    return "Unknown";
}

ZeroTag classify_value(Complex z) {
    const double mag = std::abs(z);
    if (mag <= kOriginTolerance) return ZeroTag::Origin;
    if (std::abs(z.imag()) <= kRealTolerance * (1.0 + mag)) {
        if (z.real() > -1.0 && z.real() < 0.0) return ZeroTag::NegUnitInterval;
        if (z.real() > 0.0) return ZeroTag::PosReal;
        return ZeroTag::OtherReal;
    }
    return ZeroTag::ComplexOffAxis;
}

ZeroSet find_zeros(const Polynomial<Complex>& p, double tol, const AberthOptions& options) {
    if (p.degree() < 1) throw DomainError("find_zeros needs a polynomial of degree >= 1");
    const auto c = p.coeffs();

    std::size_t origin = 0;
    while (c[origin] == Complex{}) ++origin;

    ZeroSet zs;
    zs.n = static_cast<unsigned>(p.degree());
    for (std::size_t k = 0; k < origin; ++k) zs.roots.push_back({Complex{}, ZeroTag::Origin});

    const std::span<const Complex> reduced = c.subspan(origin);
    if (reduced.size() > 1) {
        const Complex lead = reduced.back();
        std::vector<Complex> monic(reduced.begin(), reduced.end());
        for (auto& x : monic) x /= lead;
        for (Complex r : aberth(monic, options)) {
            r = newton_polish(reduced, r, options.polish_steps);
            zs.roots.push_back({r, classify_value(r)});
        }
    }
    std::sort(zs.roots.begin(), zs.roots.end(), canonical_less);

    std::vector<Complex> best;
    for (const auto& r : zs.roots) {
        best.push_back(r.value);
        zs.residual_max = std::max(zs.residual_max, std::abs(p(r.value)));
    }
    const double bound = tol * (1.0 + p.max_abs());
    if (!(zs.residual_max <= bound)) {
        throw ConvergenceError("root residual " + std::to_string(zs.residual_max) + " exceeds " +
                                   std::to_string(bound),
                               std::move(best));
    }
    return zs;
}

Polynomial<Complex> float_coefficients(unsigned n, double omega) {
    return to_float(construct<Rational>(n, Omega::exact(Rational::from_double(omega))));
}

Polynomial<Complex> float_coefficients(unsigned n, const Omega& omega) {
    if (omega.is_exact()) return to_float(construct<Rational>(n, omega));
    return float_coefficients(n, omega.to_double());
}

ZeroSet skyburst_zeros(unsigned n, const Omega& omega, double tol) {
    if (n == 0) throw DomainError("S_0 is constant and has no zeros");
    ZeroSet zs = find_zeros(float_coefficients(n, omega), tol);
    zs.omega = omega.to_double();
    return zs;
}

ZeroSet skyburst_zeros(unsigned n, double omega, double tol) {
    return skyburst_zeros(n, Omega::real(omega), tol);
}

ZeroCounts classify(const ZeroSet& zs) {
    ZeroCounts counts;
    for (const auto& r : zs.roots) {
        switch (r.tag) {
            case ZeroTag::NegUnitInterval: ++counts.neg_unit; break;
            case ZeroTag::PosReal: ++counts.pos_real; break;
            case ZeroTag::ComplexOffAxis: ++counts.complex_offaxis; break;
            case ZeroTag::Origin: ++counts.origin; break;
            case ZeroTag::OtherReal: ++counts.other_real; break;
        }
    }
    return counts;
}

std::vector<double> emergence_angles(unsigned n, unsigned m, double eps) {
    if (m >= n) throw DomainError("emergence angles need m < n");
    if (!(eps > 0.0 && eps <= 0.05)) throw DomainError("emergence angles need 0 < eps <= 0.05");
    ZeroSet zs = skyburst_zeros(n, static_cast<double>(m) + eps);
    std::sort(zs.roots.begin(), zs.roots.end(),
              [](const ClassifiedRoot& a, const ClassifiedRoot& b) { return std::abs(a.value) < std::abs(b.value); });
    std::vector<double> angles;
    for (unsigned k = 0; k < n - m; ++k) {
        const auto& r = zs.roots[k];
        double a = 0.0;
        if (r.tag == ZeroTag::PosReal) {
            a = 0.0;
        } else if (r.tag == ZeroTag::NegUnitInterval || r.tag == ZeroTag::OtherReal) {
            a = std::numbers::pi;
        } else {
            a = std::arg(r.value);
            if (a < 0.0) a += kTwoPi;
        }
        angles.push_back(a);
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

std::vector<double> expected_emergence_angles(unsigned n, unsigned m) {
    if (m >= n) throw DomainError("emergence angles need m < n");
    const unsigned k = n - m;
    std::vector<double> angles;
    for (unsigned j = 0; j < k; ++j)
        angles.push_back(std::fmod(std::numbers::pi + kTwoPi * static_cast<double>(j) / k, kTwoPi));
    std::sort(angles.begin(), angles.end());
    return angles;
}

double max_angle_error(const std::vector<double>& measured, const std::vector<double>& expected) {
    if (measured.size() != expected.size()) throw DomainError("angle lists differ in length");
    if (measured.empty()) return 0.0;
    std::vector<std::vector<double>> cost(measured.size(), std::vector<double>(expected.size()));
    for (std::size_t i = 0; i < measured.size(); ++i)
        for (std::size_t j = 0; j < expected.size(); ++j) cost[i][j] = circular_distance(measured[i], expected[j]);
    const auto perm = optimal_assignment(cost);
    double worst = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) worst = std::max(worst, cost[i][perm[i]]);
    return worst;
}

std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost) {
    // Hungarian method with row/column potentials, 1-based internally.
    const std::size_t n = cost.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

std::vector<std::size_t> match_zeros(const std::vector<Complex>& previous, const std::vector<Complex>& next) {
    if (previous.size() != next.size()) throw DomainError("zero sets differ in size");
    const std::size_t n = previous.size();
    std::vector<std::size_t> greedy(n);
    std::vector<char> taken(n, 0);
    bool collision = false;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < n; ++j)
            if (std::abs(previous[i] - next[j]) < std::abs(previous[i] - next[best])) best = j;
        if (taken[best]) collision = true;
        taken[best] = 1;
        greedy[i] = best;
    }
    if (!collision) return greedy;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(previous[i] - next[j]);
    return optimal_assignment(cost);
}

namespace {

struct Sample {
    double omega;
    std::vector<Complex> roots;
};

Sample sample_at(unsigned n, double omega, double tol) {
    const ZeroSet zs = skyburst_zeros(n, omega, tol);
    Sample s{omega, {}};
    for (const auto& r : zs.roots) s.roots.push_back(r.value);
    return s;
}

// Distance to the nearest integer and that integer.
std::pair<double, double> nearest_integer(double x) {
    const double m = std::round(x);
    return {std::abs(x - m), m};
}

// Bisection point of (a, b), geometric in the distance to an integer when
// both ends sit on the same side of it and span a wide relative range.
std::optional<double> split(double a, double b, const TraceOptions& options) {
    const auto [da, ma] = nearest_integer(a);
    const auto [db, mb] = nearest_integer(b);
    const bool same_side = ma == mb && ((a - ma) * (b - mb) > 0.0);
    if (same_side && std::max(da, db) > 2.0 * std::min(da, db)) {
        const double d = std::sqrt(da * db);
        return a > ma ? ma + d : ma - d;
    }
    if (!(b - a >= options.min_step)) return std::nullopt;
    return 0.5 * (a + b);
}

std::vector<double> base_grid(double start, double end, double step, double offset, std::vector<long>& bursts) {
    auto too_close = [offset](double w) { return nearest_integer(w).first < offset; };
    std::vector<double> g;
    g.push_back(too_close(start) ? nearest_integer(start).second + offset : start);
    for (long k = 1;; ++k) {
        const double w = start + static_cast<double>(k) * step;
        if (w >= end) break;
        if (!too_close(w)) g.push_back(w);
    }
    g.push_back(too_close(end) ? nearest_integer(end).second - offset : end);
    for (long m = static_cast<long>(std::floor(start)) + 1; static_cast<double>(m) < end; ++m) {
        if (std::abs(static_cast<double>(m) - start) < offset || std::abs(static_cast<double>(m) - end) < offset) {
            continue;
        }
        bursts.push_back(m);
        g.push_back(static_cast<double>(m) - offset);
        g.push_back(static_cast<double>(m) + offset);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

TrajectoryBundle trace(unsigned n, double omega_start, double omega_end, double base_step, double match_threshold,
                       const TraceOptions& options) {
    if (n == 0) throw DomainError("trace needs n >= 1");
    if (!(omega_start >= 0.0 && omega_start < omega_end)) throw DomainError("trace needs 0 <= omega_start < omega_end");
    if (!(base_step > 0.0) || !(match_threshold > 0.0)) throw DomainError("trace needs positive step and threshold");
    if (!(options.integer_offset > 0.0 && options.integer_offset < 0.25)) {
        throw DomainError("trace needs 0 < integer_offset < 1/4");
    }

    TrajectoryBundle bundle;
    bundle.n = n;
    bundle.match_threshold = match_threshold;
    const auto grid = base_grid(omega_start, omega_end, base_step, options.integer_offset, bundle.burst_events);

    // Base grid zeros may be computed concurrently; assembly below is sequential.
    std::vector<Sample> base(grid.size());
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) base[i] = sample_at(n, grid[i], options.tol);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned t = 0; t < threads; ++t) {
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t i = t; i < grid.size(); i += threads) base[i] = sample_at(n, grid[i], options.tol);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    std::vector<Complex> current = base.front().roots;
    bundle.paths.assign(n, {});
    bundle.tags.assign(n, {});
    auto accept = [&](const Sample& s, const std::vector<std::size_t>& perm) {
        bundle.omega_grid.push_back(s.omega);
        for (std::size_t id = 0; id < n; ++id) {
            const Complex z = s.roots[perm[id]];
            bundle.paths[id].push_back(z);
            bundle.tags[id].push_back(classify_value(z));
            current[id] = z;
        }
    };
    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    accept(base.front(), identity);

    for (std::size_t i = 1; i < base.size(); ++i) {
        std::vector<Sample> pending{base[i]};
        while (!pending.empty()) {
            const Sample& target = pending.back();
            const auto perm = match_zeros(current, target.roots);
            double moved = 0.0;
            for (std::size_t id = 0; id < n; ++id) moved = std::max(moved, std::abs(target.roots[perm[id]] - current[id]));
            if (moved < match_threshold) {
                accept(target, perm);
                pending.pop_back();
                continue;
            }
            const double a = bundle.omega_grid.back();
            const auto mid = split(a, target.omega, options);
            if (!mid) {
                throw TrackingError("zero tracking failed: step underflow between omega=" + std::to_string(a) +
                                        " and " + std::to_string(target.omega),
                                    target.omega);
            }
            pending.push_back(sample_at(n, *mid, options.tol));
        }
    }
    return bundle;
}

double fizzle_gap(unsigned n, double omega) {
    if (!(omega > static_cast<double>(n))) throw DomainError("fizzle gap needs omega > n");
    if (n == 0) return 0.0;
    const auto c = taylor_about_minus_one<Rational>(n, Omega::exact(Rational::from_double(omega)));
    std::vector<Complex> fc;
    for (const auto& x : c) fc.push_back(to_float(x));
    const ZeroSet shifted = find_zeros(Polynomial<Complex>(std::move(fc)));
    double gap = 0.0;
    for (const auto& r : shifted.roots) gap = std::max(gap, std::abs(r.value));
    return gap;
}

double simplicity_margin(const ZeroSet& zs) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.roots.size(); ++i) {
        if (zs.roots[i].tag == ZeroTag::Origin) continue;
        for (std::size_t j = i + 1; j < zs.roots.size(); ++j) {
            if (zs.roots[j].tag == ZeroTag::Origin) continue;
            margin = std::min(margin, std::abs(zs.roots[i].value - zs.roots[j].value));
        }
    }
    return margin;
}

}  // namespace skyburst
