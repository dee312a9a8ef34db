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

// Hidden-variable models: how an emission's latent values are drawn, and how
// each station turns them into an outcome, a detection decision and a delay.
//
// Every station-side quantity is a function of the projection
// c = cos(e - setting) on the left and c = -cos(e - setting) on the right,
// i.e. the right particle carries the hidden angle e + pi.

#include "bellsim/types.hpp"

#include <numbers>
#include <optional>
#include <string_view>

namespace bellsim {

enum class ModelId {
    EprSimple,
    Pearle,
    ClockedCore,
    ClockedSimplified,
    ClockedOptimized,
};

[[nodiscard]] std::string_view to_string(ModelId model) noexcept;
/// Accepts "epr-simple", "pearle", "clocked-core", "clocked-simplified" and
/// "clocked-optimized"; throws std::invalid_argument otherwise.
[[nodiscard]] ModelId parse_model(std::string_view name);

[[nodiscard]] constexpr bool is_pulsed(ModelId m) noexcept {
    return m == ModelId::EprSimple || m == ModelId::Pearle;
}
[[nodiscard]] constexpr bool is_clocked(ModelId m) noexcept {
    return !is_pulsed(m);
}

enum class Station { Left, Right };

struct HiddenPair {
    double e = 0.0; ///< radians, [0, 2pi)
    double p = 0.0; ///< detection / delay threshold
    // Delay jitter factors in [asym, 1]; ClockedCore only.
    std::optional<double> jitter_left;
    std::optional<double> jitter_right;
};

struct ModelParams {
    double timescale_ts = std::numbers::pi * 0.03;
    double asym = 0.98;
    double delay_gain = 1.0;
    double coinc_window = 0.0004;

    /// Default parameter set for each model. Pulsed models ignore every
    /// field; they get the core values so that validate() still holds.
    [[nodiscard]] static ModelParams defaults(ModelId model) noexcept;

    /// Throws std::invalid_argument unless ts > 0, 0 < asym <= 1,
    /// delay_gain > 0 and coinc_window > 0.
    void validate() const;
};

/// Builds one emission's hidden variables from four unit uniforms.
///
/// e = 2 pi u1 for every model; p depends on the model:
///   EprSimple               sin^2(u2 pi / 2) / 2
///   Pearle, ClockedOptimized 2 / sqrt(1 + 3 u2) - 1
///   ClockedCore             sin^2(u2 pi / 6) / 2
///   ClockedSimplified       4 sin^2(u2 pi / 6)
/// u3 and u4 only feed ClockedCore's jitters, asym + (1 - asym) u.
/// Throws std::domain_error if any u is outside [0, 1).
[[nodiscard]] HiddenPair sample_hidden(ModelId model, double u1, double u2,
                                       double u3, double u4,
                                       ModelParams const &params = {});

/// cos(e - setting) for Left, -cos(e - setting) for Right.
[[nodiscard]] double projection(HiddenPair const &hv, double setting,
                                Station station) noexcept;

[[nodiscard]] constexpr Outcome sign_outcome(double c) noexcept {
    return c < 0.0 ? Outcome::Minus : Outcome::Plus;
}

/// Pulsed rule on a precomputed projection: sign(c) if |c| > p, else None.
[[nodiscard]] constexpr Outcome detect(double c, double p) noexcept {
    double const mag = c < 0.0 ? -c : c;
    return mag > p ? sign_outcome(c) : Outcome::None;
}

/// Pulsed models only (EprSimple, Pearle); throws std::invalid_argument for
/// a clocked model.
[[nodiscard]] Outcome outcome_detect(ModelId model, HiddenPair const &hv,
                                     double setting, Station station);

/// Clocked rule: always a sign, with sign(0) taken as +1.
[[nodiscard]] Outcome outcome_sign(HiddenPair const &hv, double setting,
                                   Station station) noexcept;

/// Delay from |cos(e - setting)|. `jitter` is used by ClockedCore only.
[[nodiscard]] double delay_from_magnitude(ModelId model, double abs_cos,
                                          double p, double jitter,
                                          ModelParams const &params);

/// Detection delay of one station's particle, in seconds. Clocked models
/// only; throws std::invalid_argument otherwise, or if a ClockedCore pair
/// lacks its jitters.
[[nodiscard]] double delay(ModelId model, HiddenPair const &hv, double setting,
                           Station station, ModelParams const &params);

} // namespace bellsim
