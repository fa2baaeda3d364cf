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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "skyburst/skyburst.hpp"

namespace skyburst::cli {

namespace {

using nlohmann::ordered_json;

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::Coeffs: return "coeffs";
        case Subcommand::Verify: return "verify";
        case Subcommand::Zeros: return "zeros";
        case Subcommand::Trajectory: return "trajectory";
        case Subcommand::Detn: return "detn";
        case Subcommand::Genfun: return "genfun";
    }
    return "?";
}

OutputFormat resolve_format(const RunConfig& config, OutputFormat fallback) {
    return config.output_format == OutputFormat::Default ? fallback : config.output_format;
}

Omega config_omega(const RunConfig& config) {
    try {
        return Omega::parse(config.omega);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("--omega: ") + e.what());
    }
}

std::string rational_json(const Rational& r) { return r.numerator_string() + "/" + r.denominator_string(); }

std::string omega_json(const Omega& omega) {
    return omega.is_exact() ? rational_json(omega.rational()) : format_double(omega.to_double());
}

// Runs tasks[i] for every i on up to `workers` threads; results keep index order.
template <typename R>
std::vector<R> parallel_map(const std::vector<std::function<R()>>& tasks, unsigned workers) {
    std::vector<R> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------- verify

struct Check {
    std::size_t family = 0;
    std::function<std::optional<std::string>()> run;  // failure message or nullopt
};

struct FamilyResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

std::string at(unsigned n, const Omega& omega) { return "n=" + std::to_string(n) + ", omega=" + omega.to_string(); }

std::optional<std::string> residual_failure(const IdentityReport& r) {
    if (r.passed()) return std::nullopt;
    return "residual " + r.residual_norm.to_string() + " at n=" + std::to_string(r.n) + ", omega=" + r.omega;
}

std::optional<std::string> check_orthogonality(unsigned n, const Omega& omega) {
    using P = Polynomial<Rational>;
    const P s = construct<Rational>(n, omega);
    for (unsigned k = 0; k < n; ++k) {
        const Rational v = bilinear(s, P::monomial(k), omega);
        if (!v.is_zero()) return "<S, z^" + std::to_string(k) + "> = " + v.to_string() + " at " + at(n, omega);
    }
    if (bilinear(s, P::monomial(n), omega).is_zero())
        return "<S, z^n> vanishes at " + at(n, omega);
    return std::nullopt;
}

std::optional<std::string> check_cauchy(unsigned n, const Omega& omega) {
    const Rational direct = toeplitz_det_direct<Rational>(n, omega);
    const Rational closed = toeplitz_det_closed<Rational>(n, omega);
    if (direct == closed) return std::nullopt;
    return "direct " + direct.to_string() + " != closed " + closed.to_string() + " at " + at(n, omega);
}

std::optional<std::string> check_symmetry(unsigned n) {
    // z^m S_n^m = z^n S_m^n for 0 <= m < n, and the limit of the sum agrees.
    for (unsigned m = 0; m < n; ++m) {
        const auto lhs = construct_via_symmetry<Rational>(n, m);
        const auto sum = hypergeometric_sum<Rational>(n, Omega::exact(Rational(static_cast<long>(m))));
        if (!(lhs == sum)) return "symmetry route differs from the sum at n=" + std::to_string(n) + ", m=" + std::to_string(m);
        const auto back = construct<Rational>(m, Omega::exact(Rational(static_cast<long>(n)))).shifted(n);
        if (!(lhs.shifted(m) == back))
            return "z^m S_n^m != z^n S_m^n at n=" + std::to_string(n) + ", m=" + std::to_string(m);
    }
    return std::nullopt;
}

std::optional<std::string> check_reflection(unsigned n, const Omega& omega) {
    const auto reflected = reflect_negative_omega<Rational>(n, omega);
    const auto direct = hypergeometric_sum<Rational>(n, omega.negated());
    if (reflected == direct) return std::nullopt;
    return "reflected polynomial differs from the direct sum at " + at(n, omega.negated());
}

std::optional<std::string> check_special_values(unsigned n, const Omega& omega) {
    auto p = construct<Rational>(n, omega);
    if (!(value_at_minus_one<Rational>(n, omega) == p(Rational(-1))))
        return "value at -1 differs at " + at(n, omega);
    for (unsigned m = 0; m <= n; ++m) {
        if (!(derivative_at_minus_one<Rational>(m, n, omega) == p.derivative(m)(Rational(-1))))
            return "derivative " + std::to_string(m) + " at -1 differs at " + at(n, omega);
    }
    const bool zero = p(Rational(0)).is_zero();
    if (!(value_at_zero<Rational>(n, omega) == p(Rational(0)))) return "value at 0 differs at " + at(n, omega);
    const bool expect_zero = omega.is_integer() && omega.rational() >= Rational(0) &&
                             omega.rational() < Rational(static_cast<long>(n));
    if (zero != expect_zero) return "S(0) = 0 does not match omega in {0..n-1} at " + at(n, omega);
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- config

void RunConfig::validate() const {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ConfigError("--tol must be positive");
    if (exact) {
        try {
            (void)Rational::parse(omega);
        } catch (const DomainError&) {
            throw ConfigError("--exact requires --omega as \"p/q\" or an integer, got '" + omega + "'");
        }
    }
    if (subcommand == Subcommand::Trajectory) {
        if (!(step > 0.0)) throw ConfigError("--step must be positive");
        if (!(omega_end > omega_start)) throw ConfigError("--omega-end must exceed --omega-start");
        if (!(match_threshold > 0.0)) throw ConfigError("--threshold must be positive");
        if (!(integer_offset > 0.0) || integer_offset >= 0.25) throw ConfigError("--integer-offset must be in (0, 0.25)");
        if (n == 0) throw ConfigError("trajectory needs --n >= 1");
    }
    if (subcommand == Subcommand::Zeros && n == 0) throw ConfigError("zeros needs --n >= 1");
    if (use_printed && *use_printed != "omega-shift" && *use_printed != "lifting")
        throw ConfigError("--use-printed must be omega-shift or lifting");
    if (subcommand == Subcommand::Verify) {
        for (const auto& g : omega_grid) {
            try {
                (void)Rational::parse(g);
            } catch (const DomainError&) {
                throw ConfigError("--grid entries must be rationals, got '" + g + "'");
            }
        }
    }
    if (subcommand == Subcommand::Genfun && terms < 1) throw ConfigError("--terms must be at least 1");
}

const std::vector<std::string>& default_verify_grid() {
    static const std::vector<std::string> grid{"1/3", "1/2", "2/3", "5/4", "7/3", "22/7"};
    return grid;
}

unsigned worker_count(const RunConfig& config) {
    unsigned w = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SKYBURST_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) w = std::min<unsigned>(w, static_cast<unsigned>(cap));
    }
    return w;
}

std::string format_double(double value) {
    if (value == 0.0) return "0";  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Complex parse_complex(const std::string& text) {
    auto parse_part = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ConfigError("malformed complex number '" + text + "'");
        }
        if (used != s.size()) throw ConfigError("malformed complex number '" + text + "'");
        return v;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_part(text), 0.0};
    return {parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1))};
}

// ---------------------------------------------------------------- coeffs

std::string serialize_coeffs(const CoeffsDocument& doc) {
    ordered_json j;
    j["n"] = doc.n;
    j["omega"] = doc.omega;
    ordered_json list = ordered_json::array();
    for (const auto& c : doc.coeffs) {
        ordered_json e;
        e["pow"] = c.pow;
        if (doc.exact) {
            e["num"] = c.num;
            e["den"] = c.den;
        } else {
            e["re"] = c.re;
            e["im"] = c.im;
        }
        list.push_back(std::move(e));
    }
    j["coeffs"] = std::move(list);
    return j.dump() + "\n";
}

CoeffsDocument parse_coeffs(const std::string& json_text) {
    CoeffsDocument doc;
    try {
        const auto j = ordered_json::parse(json_text);
        doc.n = j.at("n").get<unsigned>();
        doc.omega = j.at("omega").get<std::string>();
        const auto& list = j.at("coeffs");
        doc.exact = list.empty() || list.front().contains("num");
        for (const auto& e : list) {
            CoeffEntry c;
            c.pow = e.at("pow").get<unsigned>();
            if (doc.exact) {
                c.num = e.at("num").get<std::string>();
                c.den = e.at("den").get<std::string>();
            } else {
                c.re = e.at("re").get<std::string>();
                c.im = e.at("im").get<std::string>();
            }
            doc.coeffs.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed coefficient document: ") + e.what());
    }
    return doc;
}

CommandResult cmd_coeffs(const RunConfig& config) {
    const Omega omega = config_omega(config);
    const bool exact = config.exact || omega.is_exact();
    CoeffsDocument doc;
    doc.n = config.n;
    doc.omega = omega_json(omega);
    doc.exact = exact;
    if (exact) {
        const auto p = construct<Rational>(config.n, omega);
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
            const Rational& c = p.coeffs()[j];
            if (c.is_zero()) continue;
            doc.coeffs.push_back({static_cast<unsigned>(j), c.numerator_string(), c.denominator_string(), "", ""});
        }
    } else {
        const auto p = construct<Complex>(config.n, omega);
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
            const Complex c = p.coeffs()[j];
            if (c == Complex{}) continue;
            doc.coeffs.push_back({static_cast<unsigned>(j), "", "", format_double(c.real()), format_double(c.imag())});
        }
    }

    CommandResult result;
    if (resolve_format(config, OutputFormat::Json) == OutputFormat::Json) {
        result.output = serialize_coeffs(doc);
    } else {
        std::ostringstream os;
        os << (doc.exact ? "pow,num,den\n" : "pow,re,im\n");
        for (const auto& c : doc.coeffs)
            os << c.pow << ',' << (doc.exact ? c.num : c.re) << ',' << (doc.exact ? c.den : c.im) << '\n';
        result.output = os.str();
    }
    return result;
}

// ---------------------------------------------------------------- verify

CommandResult cmd_verify(const RunConfig& config) {
    std::vector<Omega> grid;
    for (const auto& g : config.omega_grid.empty() ? default_verify_grid() : config.omega_grid)
        grid.push_back(Omega::exact(Rational::parse(g)));

    const bool printed_shift = config.use_printed && *config.use_printed == "omega-shift";
    const bool printed_lift = config.use_printed && *config.use_printed == "lifting";
    const unsigned nmax = config.n_max;

    std::vector<FamilyResult> families;
    std::vector<Check> checks;
    auto family = [&](std::string name) {
        families.push_back({std::move(name), 0, 0, {}});
        return families.size() - 1;
    };
    auto per_grid = [&](std::size_t f, unsigned n_lo, auto fn) {
        for (unsigned n = n_lo; n <= nmax; ++n)
            for (const auto& w : grid) checks.push_back({f, [fn, n, w] { return fn(n, w); }});
    };
    auto identity = [](IdentityId id) {
        return [id](unsigned n, const Omega& w) { return residual_failure(verify_identity(id, n, w)); };
    };

    per_grid(family("orthogonality"), 0, check_orthogonality);
    per_grid(family("cauchy_determinant"), 1, check_cauchy);
    per_grid(family("mixed_recurrence"), 1, identity(IdentityId::MixedRecurrence));
    per_grid(family(printed_shift ? "omega_shift_printed" : "omega_shift"), 1,
             identity(printed_shift ? IdentityId::OmegaShiftPrinted : IdentityId::OmegaShiftCorrected));
    per_grid(family(printed_lift ? "lifting_printed" : "lifting"), 1,
             identity(printed_lift ? IdentityId::LiftingPrinted : IdentityId::LiftingCorrected));
    per_grid(family("lowering"), 1, identity(IdentityId::Lowering));
    per_grid(family("differential_recurrence"), 1, identity(IdentityId::DifferentialRecurrence));
    per_grid(family("differential_equation"), 0, identity(IdentityId::DifferentialEquation));
    {
        const auto f = family("integer_symmetry");
        for (unsigned n = 1; n <= nmax; ++n) checks.push_back({f, [n] { return check_symmetry(n); }});
    }
    per_grid(family("negative_omega_reflection"), 0, [](unsigned n, const Omega& w) -> std::optional<std::string> {
        if (!(w.rational() > Rational(0)) || w.is_integer()) return std::nullopt;
        return check_reflection(n, w);
    });
    per_grid(family("special_values"), 0, check_special_values);

    std::vector<std::function<std::optional<std::string>()>> tasks;
    tasks.reserve(checks.size());
    for (const auto& c : checks) {
        tasks.push_back([&c]() -> std::optional<std::string> {
            try {
                return c.run();
            } catch (const Error& e) {
                return std::string("error: ") + e.what();
            }
        });
    }
    const auto outcomes = parallel_map(tasks, worker_count(config));
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto& fr = families[checks[i].family];
        ++fr.checks;
        if (outcomes[i]) {
            if (fr.failures++ == 0) fr.first_failure = *outcomes[i];
        }
    }

    // The printed variants must fail at (n=1, omega=1/2).
    struct Falsification {
        std::string name;
        IdentityReport report;
    };
    const Omega half = Omega::exact(Rational(1, 2));
    const std::vector<Falsification> falsifications{
        {"omega_shift_printed", verify_identity(IdentityId::OmegaShiftPrinted, 1, half)},
        {"lifting_printed", verify_identity(IdentityId::LiftingPrinted, 1, half)},
    };

    bool ok = true;
    for (const auto& f : families) ok = ok && f.failures == 0;
    for (const auto& f : falsifications) ok = ok && !f.report.passed();

    CommandResult result;
    result.exit_code = ok ? kExitOk : kExitVerifyFailed;
    if (resolve_format(config, OutputFormat::Default) == OutputFormat::Json) {
        ordered_json j;
        j["n_max"] = nmax;
        ordered_json g = ordered_json::array();
        for (const auto& w : grid) g.push_back(rational_json(w.rational()));
        j["omega_grid"] = std::move(g);
        ordered_json fams = ordered_json::array();
        for (const auto& f : families) {
            ordered_json e;
            e["identity"] = f.name;
            e["checks"] = f.checks;
            e["passed"] = f.failures == 0;
            if (f.failures) e["first_failure"] = f.first_failure;
            fams.push_back(std::move(e));
        }
        j["identities"] = std::move(fams);
        ordered_json fal = ordered_json::array();
        for (const auto& f : falsifications) {
            ordered_json e;
            e["identity"] = f.name;
            e["n"] = f.report.n;
            e["omega"] = f.report.omega;
            e["residual"] = f.report.residual_norm.to_string();
            e["fails_as_expected"] = !f.report.passed();
            fal.push_back(std::move(e));
        }
        j["falsifications"] = std::move(fal);
        j["passed"] = ok;
        result.output = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& f : families) {
            os << (f.failures ? "FAIL " : "PASS ") << f.name << " (" << f.checks << " checks";
            if (f.failures) os << ", " << f.failures << " failed; first: " << f.first_failure;
            os << ")\n";
        }
        for (const auto& f : falsifications) {
            os << (f.report.passed() ? "FAIL " : "PASS ") << f.name << " fails as expected: residual "
               << f.report.residual_norm.to_string() << " at n=" << f.report.n << ", omega=" << f.report.omega << '\n';
        }
        os << (ok ? "all identities hold\n" : "verification failed\n");
        result.output = os.str();
    }
    return result;
}

// ---------------------------------------------------------------- zeros

CommandResult cmd_zeros(const RunConfig& config) {
    const Omega omega = config_omega(config);
    ZeroSet zs;
    try {
        zs = skyburst_zeros(config.n, omega, config.tolerance);
    } catch (const ConvergenceError& e) {
        throw TrackingError(std::string(e.what()) + " at omega=" + omega.to_string(), omega.to_double());
    }
    const auto p = float_coefficients(config.n, omega);
    const std::string w = format_double(omega.to_double());

    CommandResult result;
    if (resolve_format(config, OutputFormat::Csv) == OutputFormat::Csv) {
        std::ostringstream os;
        os << "omega,index,re,im,tag,residual\n";
        for (std::size_t i = 0; i < zs.roots.size(); ++i) {
            const auto& r = zs.roots[i];
            os << w << ',' << i << ',' << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
               << tag_name(r.tag) << ',' << format_double(std::abs(p(r.value))) << '\n';
        }
        result.output = os.str();
    } else {
        ordered_json j;
        j["n"] = config.n;
        j["omega"] = w;
        ordered_json roots = ordered_json::array();
        for (std::size_t i = 0; i < zs.roots.size(); ++i) {
            const auto& r = zs.roots[i];
            ordered_json e;
            e["index"] = i;
            e["re"] = format_double(r.value.real());
            e["im"] = format_double(r.value.imag());
            e["tag"] = tag_name(r.tag);
            e["residual"] = format_double(std::abs(p(r.value)));
            roots.push_back(std::move(e));
        }
        j["roots"] = std::move(roots);
        result.output = j.dump(2) + "\n";
    }
    return result;
}

// ---------------------------------------------------------------- trajectory

CommandResult cmd_trajectory(const RunConfig& config) {
    TraceOptions options;
    options.integer_offset = config.integer_offset;
    options.tol = config.tolerance;
    options.threads = worker_count(config);
    const auto bundle =
        trace(config.n, config.omega_start, config.omega_end, config.step, config.match_threshold, options);

    CommandResult result;
    const std::size_t samples = bundle.omega_grid.size();
    if (resolve_format(config, OutputFormat::Csv) == OutputFormat::Csv) {
        std::ostringstream os;
        os << "omega,path_id,re,im,tag\n";
        std::size_t next_burst = 0;
        for (std::size_t k = 0; k < samples; ++k) {
            const double w = bundle.omega_grid[k];
            while (next_burst < bundle.burst_events.size() && static_cast<double>(bundle.burst_events[next_burst]) < w)
                os << "# burst omega=" << bundle.burst_events[next_burst++] << '\n';
            const std::string ws = format_double(w);
            for (std::size_t id = 0; id < bundle.paths.size(); ++id) {
                const Complex z = bundle.paths[id][k];
                os << ws << ',' << id << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
                   << tag_name(bundle.tags[id][k]) << '\n';
            }
        }
        while (next_burst < bundle.burst_events.size())
            os << "# burst omega=" << bundle.burst_events[next_burst++] << '\n';
        result.output = os.str();
    } else {
        ordered_json j;
        j["n"] = bundle.n;
        j["match_threshold"] = format_double(bundle.match_threshold);
        j["burst_events"] = bundle.burst_events;
        ordered_json rows = ordered_json::array();
        for (std::size_t k = 0; k < samples; ++k) {
            ordered_json sample;
            sample["omega"] = format_double(bundle.omega_grid[k]);
            ordered_json zeros = ordered_json::array();
            for (std::size_t id = 0; id < bundle.paths.size(); ++id) {
                ordered_json e;
                e["path_id"] = id;
                e["re"] = format_double(bundle.paths[id][k].real());
                e["im"] = format_double(bundle.paths[id][k].imag());
                e["tag"] = tag_name(bundle.tags[id][k]);
                zeros.push_back(std::move(e));
            }
            sample["zeros"] = std::move(zeros);
            rows.push_back(std::move(sample));
        }
        j["samples"] = std::move(rows);
        result.output = j.dump() + "\n";
    }
    return result;
}

// ---------------------------------------------------------------- detn, genfun

CommandResult cmd_detn(const RunConfig& config) {
    const Omega omega = config_omega(config);
    std::string direct;
    std::string closed;
    bool equal = false;
    if (omega.is_exact()) {
        const Rational d = toeplitz_det_direct<Rational>(config.n, omega);
        const Rational c = toeplitz_det_closed<Rational>(config.n, omega);
        direct = rational_json(d);
        closed = rational_json(c);
        equal = d == c;
    } else {
        const Complex d = toeplitz_det_direct<Complex>(config.n, omega);
        const Complex c = toeplitz_det_closed<Complex>(config.n, omega);
        direct = format_double(d.real());
        closed = format_double(c.real());
        equal = std::abs(d - c) <= config.tolerance * std::max(1.0, std::abs(c));
    }
    CommandResult result;
    const char* verdict = equal ? "EQUAL" : "DIFFERENT";
    if (resolve_format(config, OutputFormat::Default) == OutputFormat::Json) {
        ordered_json j;
        j["n"] = config.n;
        j["omega"] = omega_json(omega);
        j["direct"] = direct;
        j["closed"] = closed;
        j["verdict"] = verdict;
        result.output = j.dump() + "\n";
    } else {
        result.output = "direct: " + direct + "\nclosed: " + closed + "\nverdict: " + verdict + "\n";
    }
    return result;
}

CommandResult cmd_genfun(const RunConfig& config) {
    const Omega omega = config_omega(config);
    const double r = genfun_compare(omega, parse_complex(config.z), parse_complex(config.t), config.terms);
    CommandResult result;
    if (resolve_format(config, OutputFormat::Default) == OutputFormat::Json) {
        ordered_json j;
        j["omega"] = omega_json(omega);
        j["z"] = config.z;
        j["t"] = config.t;
        j["terms"] = config.terms;
        j["residual"] = format_double(r);
        result.output = j.dump() + "\n";
    } else {
        result.output = "residual: " + format_double(r) + "\n";
    }
    return result;
}

// ---------------------------------------------------------------- dispatch

CommandResult run(const RunConfig& config) {
    CommandResult result;
    const std::string prefix = std::string("skyburst ") + subcommand_name(config.subcommand) + ": ";
    try {
        config.validate();
        switch (config.subcommand) {
            case Subcommand::Coeffs: result = cmd_coeffs(config); break;
            case Subcommand::Verify: result = cmd_verify(config); break;
            case Subcommand::Zeros: result = cmd_zeros(config); break;
            case Subcommand::Trajectory: result = cmd_trajectory(config); break;
            case Subcommand::Detn: result = cmd_detn(config); break;
            case Subcommand::Genfun: result = cmd_genfun(config); break;
        }
    } catch (const TrackingError& e) {
        return {kExitTracking, "", prefix + e.what() + " (omega=" + format_double(e.omega()) + ")\n"};
    } catch (const ConvergenceError& e) {
        return {kExitTracking, "", prefix + e.what() + "\n"};
    } catch (const PoleError& e) {
        return {kExitConfig, "", prefix + e.what() + "\n"};
    } catch (const Error& e) {
        return {kExitConfig, "", prefix + e.what() + "\n"};
    }

    if (config.output_path && result.exit_code != kExitConfig) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) return {kExitConfig, "", prefix + "cannot open " + *config.output_path + " for writing\n"};
        out << result.output;
        result.output.clear();
    }
    return result;
}

}  // namespace skyburst::cli
