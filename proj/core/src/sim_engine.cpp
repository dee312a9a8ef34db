// Copyright 2026 The bellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellsim/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace bellsim {

namespace {

// Splits [0, n) into contiguous chunks and runs fn(chunk, begin, end) on
// each, one thread per chunk.
template <typename Fn>
void for_chunks(std::uint64_t n, unsigned threads, Fn &&fn) {
    unsigned const workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n)));
    if (workers == 1) {
        fn(0u, std::uint64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t const begin = n * w / workers;
        std::uint64_t const end = n * (w + 1) / workers;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto &t : pool)
        t.join();
}

HiddenPair hidden_for(RunConfig const &config, TrialDraws const &d) {
    return sample_hidden(config.model, d.u1, d.u2, d.u3, d.u4, config.params);
}

} // namespace

RunConfig RunConfig::chsh(ModelId model, std::uint64_t n, std::uint64_t seed) {
    RunConfig config;
    config.model = model;
    config.params = ModelParams::defaults(model);
    config.n = n;
    config.seed = seed;
    return config;
}

void RunConfig::validate() const {
    auto check = [](std::vector<double> const &settings, char const *who) {
        if (settings.empty())
            throw std::invalid_argument(std::string(who) +
                                        " settings must not be empty");
        for (double s : settings) {
            if (!std::isfinite(s))
                throw std::invalid_argument(std::string(who) +
                                            " setting is not finite");
        }
    };
    check(alice_settings, "alice");
    check(bob_settings, "bob");
    if (!(emission_period > 0.0) || !std::isfinite(emission_period))
        throw std::invalid_argument("emission period must be positive");
    params.validate();
}

unsigned resolve_threads(ExecutionOptions const &opts) {
    if (opts.threads > 0)
        return opts.threads;
    if (char const *env = std::getenv("BELLSIM_THREADS")) {
        char *end = nullptr;
        long const v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

TrialDraws draw_trial(std::uint64_t seed, std::uint64_t trial_index) noexcept {
    TrialStream s(seed, trial_index);
    TrialDraws d;
    d.u_alice = s.next_uniform();
    d.u_bob = s.next_uniform();
    d.u1 = s.next_uniform();
    d.u2 = s.next_uniform();
    d.u3 = s.next_uniform();
    d.u4 = s.next_uniform();
    return d;
}

std::uint32_t pick_setting(double u, std::size_t n) noexcept {
    auto const idx = static_cast<std::size_t>(u * static_cast<double>(n));
    return static_cast<std::uint32_t>(std::min(idx, n - 1));
}

TableGrid run_pulsed(RunConfig const &config, ExecutionOptions const &opts) {
    config.validate();
    if (!is_pulsed(config.model))
        throw std::invalid_argument("run_pulsed needs a pulsed model, got " +
                                    std::string(to_string(config.model)));

    std::size_t const na = config.alice_settings.size();
    std::size_t const nb = config.bob_settings.size();
    unsigned const threads = resolve_threads(opts);
    std::vector<TableGrid> partial(threads, TableGrid(na, nb));

    for_chunks(config.n, threads,
               [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                   TableGrid &grid = partial[chunk];
                   for (std::uint64_t k = begin; k < end; ++k) {
                       TrialDraws const d = draw_trial(config.seed, k);
                       auto const a = pick_setting(d.u_alice, na);
                       auto const b = pick_setting(d.u_bob, nb);
                       HiddenPair const hv = hidden_for(config, d);
                       grid(a, b).add(
                           outcome_detect(config.model, hv,
                                          config.alice_settings[a],
                                          Station::Left),
                           outcome_detect(config.model, hv,
                                          config.bob_settings[b],
                                          Station::Right));
                   }
               });

    TableGrid result(na, nb);
    for (auto const &g : partial)
        result += g;
    return result;
}

double detector_clock(double t) noexcept {
    // Dividing the integer tick count yields the double nearest to the
    // decimal value, which is what a nine-decimal reader produces.
    return std::round(t * kTicksPerSecond) / kTicksPerSecond;
}

ClockedRun run_clocked(RunConfig const &config, ExecutionOptions const &opts) {
    config.validate();
    if (!is_clocked(config.model))
        throw std::invalid_argument("run_clocked needs a clocked model, got " +
                                    std::string(to_string(config.model)));

    std::size_t const na = config.alice_settings.size();
    std::size_t const nb = config.bob_settings.size();
    ClockedRun run;
    run.records.resize(config.n);
    run.left.resize(config.n);
    run.right.resize(config.n);

    for_chunks(config.n, resolve_threads(opts),
               [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                   for (std::uint64_t k = begin; k < end; ++k) {
                       TrialDraws const d = draw_trial(config.seed, k);
                       HiddenPair const hv = hidden_for(config, d);
                       TrialRecord &r = run.records[k];
                       r.trial_index = k;
                       r.a_idx = pick_setting(d.u_alice, na);
                       r.b_idx = pick_setting(d.u_bob, nb);
                       double const alpha = config.alice_settings[r.a_idx];
                       double const beta = config.bob_settings[r.b_idx];
                       r.a_out = outcome_sign(hv, alpha, Station::Left);
                       r.b_out = outcome_sign(hv, beta, Station::Right);
                       r.delay_a = delay(config.model, hv, alpha,
                                         Station::Left, config.params);
                       r.delay_b = delay(config.model, hv, beta,
                                         Station::Right, config.params);

                       double const t0 =
                           static_cast<double>(k) * config.emission_period;
                       run.left[k] = {detector_clock(t0 + r.delay_a),
                                      r.a_idx, r.a_out, k};
                       run.right[k] = {detector_clock(t0 + r.delay_b),
                                       r.b_idx, r.b_out, k};
                   }
               });

    auto by_time = [](DetectionEvent const &x, DetectionEvent const &y) {
        return x.time < y.time;
    };
    std::stable_sort(run.left.begin(), run.left.end(), by_time);
    std::stable_sort(run.right.begin(), run.right.end(), by_time);
    return run;
}

SweepCurve sweep(RunConfig const &config, double beta, double grid_step_deg,
                 std::uint64_t m, ExecutionOptions const &opts) {
    config.params.validate();
    if (!(grid_step_deg > 0.0) || !std::isfinite(grid_step_deg))
        throw std::invalid_argument("sweep grid step must be positive");
    double const steps_real = 360.0 / grid_step_deg;
    auto const steps = static_cast<std::size_t>(std::llround(steps_real));
    if (steps == 0 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9)
        throw std::invalid_argument("sweep grid step must divide 360 degrees");
    if (m == 0)
        throw std::invalid_argument("sweep needs at least one hidden pair");
    if (!std::isfinite(beta))
        throw std::invalid_argument("sweep beta must be finite");

    ModelId const model = config.model;
    ModelParams const &params = config.params;
    unsigned const threads = resolve_threads(opts);

    // Shared sample. Projections use cos(e - x) = cos e cos x + sin e sin x
    // on both sides, so equal angles give bitwise-equal magnitudes.
    std::vector<double> cos_e(m), sin_e(m), p(m), jl(m, 1.0), jr(m, 1.0);
    for_chunks(m, threads,
               [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                   for (std::uint64_t k = begin; k < end; ++k) {
                       TrialDraws const d = draw_trial(config.seed, k);
                       HiddenPair const hv = hidden_for(config, d);
                       cos_e[k] = std::cos(hv.e);
                       sin_e[k] = std::sin(hv.e);
                       p[k] = hv.p;
                       if (hv.jitter_left)
                           jl[k] = *hv.jitter_left;
                       if (hv.jitter_right)
                           jr[k] = *hv.jitter_right;
                   }
               });

    double const cb = std::cos(beta);
    double const sb = std::sin(beta);
    std::vector<double> bob_proj(m);
    for (std::uint64_t k = 0; k < m; ++k)
        bob_proj[k] = -(cos_e[k] * cb + sin_e[k] * sb);

    SweepCurve curve;
    curve.m_per_angle = m;
    curve.angles_deg.resize(steps + 1);
    curve.correlation.resize(steps + 1);
    curve.acceptance_rate.resize(steps + 1);
    curve.accepted.resize(steps + 1);

    for_chunks(steps, threads, [&](unsigned, std::uint64_t begin,
                                   std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            double const deg = static_cast<double>(i) * grid_step_deg;
            double const alpha = deg * kDegree;
            double const ca = std::cos(alpha);
            double const sa = std::sin(alpha);
            std::int64_t product_sum = 0;
            std::uint64_t accepted = 0;
            if (is_pulsed(model)) {
                for (std::uint64_t k = 0; k < m; ++k) {
                    Outcome const a =
                        detect(cos_e[k] * ca + sin_e[k] * sa, p[k]);
                    Outcome const b = detect(bob_proj[k], p[k]);
                    if (a != Outcome::None && b != Outcome::None) {
                        ++accepted;
                        product_sum += value(a) * value(b);
                    }
                }
            } else {
                for (std::uint64_t k = 0; k < m; ++k) {
                    double const c = cos_e[k] * ca + sin_e[k] * sa;
                    double const da = delay_from_magnitude(
                        model, std::abs(c), p[k], jl[k], params);
                    double const db = delay_from_magnitude(
                        model, std::abs(bob_proj[k]), p[k], jr[k], params);
                    if (std::abs(da - db) < params.coinc_window) {
                        ++accepted;
                        product_sum += value(sign_outcome(c)) *
                                       value(sign_outcome(bob_proj[k]));
                    }
                }
            }
            curve.angles_deg[i] = deg;
            curve.accepted[i] = accepted;
            curve.acceptance_rate[i] =
                static_cast<double>(accepted) / static_cast<double>(m);
            curve.correlation[i] =
                accepted > 0 ? static_cast<double>(product_sum) /
                                   static_cast<double>(accepted)
                             : std::numeric_limits<double>::quiet_NaN();
        }
    });

    curve.angles_deg[steps] = 360.0;
    curve.correlation[steps] = curve.correlation[0];
    curve.acceptance_rate[steps] = curve.acceptance_rate[0];
    curve.accepted[steps] = curve.accepted[0];
    return curve;
}

} // namespace bellsim
