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

#pragma once

// Deterministic Monte Carlo drivers.
//
// Trial k of a run with seed s consumes exactly six uniforms from
// TrialStream(s, k), in this order: Alice's setting, Bob's setting, then
// u1..u4 for sample_hidden. The layout is the same for every model, so a
// given (seed, k) sees the same e across models, and results never depend on
// how the trial range is split across threads.

#include "bellsim/hv_models.hpp"
#include "bellsim/rng.hpp"
#include "bellsim/types.hpp"

#include <cstdint>
#include <numbers>
#include <vector>

namespace bellsim {

inline constexpr double kDegree = std::numbers::pi / 180.0;

struct RunConfig {
    ModelId model = ModelId::EprSimple;
    ModelParams params = ModelParams::defaults(ModelId::EprSimple);
    std::vector<double> alice_settings{0.0, 90.0 * kDegree}; ///< radians
    std::vector<double> bob_settings{45.0 * kDegree, 135.0 * kDegree};
    std::uint64_t n = 0; ///< trials (pulsed) or emissions (clocked)
    std::uint64_t seed = 0;
    double emission_period = 10.0 / 200000.0; ///< seconds, clocked only

    /// CHSH angles with the model's default parameters.
    [[nodiscard]] static RunConfig chsh(ModelId model, std::uint64_t n,
                                        std::uint64_t seed);

    /// Throws std::invalid_argument on empty or non-finite setting lists,
    /// a non-positive emission period or invalid model parameters.
    void validate() const;
};

/// Threads == 0 means: BELLSIM_THREADS if set, else hardware concurrency.
/// The thread count never changes a result.
struct ExecutionOptions {
    unsigned threads = 0;
};

[[nodiscard]] unsigned resolve_threads(ExecutionOptions const &opts);

[[nodiscard]] inline TrialStream rng_substream(std::uint64_t seed,
                                               std::uint64_t trial_index) {
    return TrialStream(seed, trial_index);
}

struct TrialDraws {
    double u_alice = 0.0;
    double u_bob = 0.0;
    double u1 = 0.0, u2 = 0.0, u3 = 0.0, u4 = 0.0;
};

[[nodiscard]] TrialDraws draw_trial(std::uint64_t seed,
                                    std::uint64_t trial_index) noexcept;

/// floor(u * n), clamped to n - 1.
[[nodiscard]] std::uint32_t pick_setting(double u, std::size_t n) noexcept;

/// Pulsed (detection-loophole) run. Requires a pulsed model. The grid's
/// cells sum to config.n.
[[nodiscard]] TableGrid run_pulsed(RunConfig const &config,
                                   ExecutionOptions const &opts = {});

/// Resolution of detection timestamps, in seconds. Event files store times
/// with nine decimals, so a quantized time survives a write and read
/// unchanged.
inline constexpr double kTicksPerSecond = 1e9;

/// t rounded to the nearest clock tick.
[[nodiscard]] double detector_clock(double t) noexcept;

struct ClockedRun {
    // Streams are sorted by time; ties keep emission order.
    std::vector<DetectionEvent> left;
    std::vector<DetectionEvent> right;
    std::vector<TrialRecord> records; ///< indexed by emission
};

/// Clocked (coincidence-loophole) run. Emission k leaves the source at
/// k * emission_period; each particle is detected at that time plus its
/// delay, read off a clock with 1 ns resolution. Records keep the
/// exact delays.
[[nodiscard]] ClockedRun run_clocked(RunConfig const &config,
                                     ExecutionOptions const &opts = {});

struct SweepCurve {
    std::vector<double> angles_deg;
    std::vector<double> correlation; ///< NaN where nothing was accepted
    std::vector<double> acceptance_rate;
    std::vector<std::uint64_t> accepted;
    std::uint64_t m_per_angle = 0;
};

/// Correlation and acceptance as Alice's angle runs over 0..360 degrees in
/// steps of grid_step_deg, with Bob fixed at beta (radians).
///
/// One sample of m hidden pairs (trials 0..m-1 of config.seed) is shared by
/// every angle. The last grid point (360) copies the first. Uses
/// config.model, config.params and config.seed; settings and n are ignored.
/// grid_step_deg must be positive and divide 360.
[[nodiscard]] SweepCurve sweep(RunConfig const &config, double beta,
                               double grid_step_deg, std::uint64_t m,
                               ExecutionOptions const &opts = {});

} // namespace bellsim
