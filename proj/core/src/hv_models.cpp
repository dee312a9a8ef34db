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

#include "bellsim/hv_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bellsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit(double u, char const *name) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error(std::string("sample_hidden: ") + name +
                                " must lie in [0, 1)");
}

double sin_squared(double x) {
    double const s = std::sin(x);
    return s * s;
}

} // namespace

std::string_view to_string(ModelId model) noexcept {
    switch (model) {
    case ModelId::EprSimple:
        return "epr-simple";
    case ModelId::Pearle:
        return "pearle";
    case ModelId::ClockedCore:
        return "clocked-core";
    case ModelId::ClockedSimplified:
        return "clocked-simplified";
    case ModelId::ClockedOptimized:
        return "clocked-optimized";
    }
    return "unknown";
}

ModelId parse_model(std::string_view name) {
    for (auto m : {ModelId::EprSimple, ModelId::Pearle, ModelId::ClockedCore,
                   ModelId::ClockedSimplified, ModelId::ClockedOptimized}) {
        if (to_string(m) == name)
            return m;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

ModelParams ModelParams::defaults(ModelId model) noexcept {
    ModelParams params;
    switch (model) {
    case ModelId::ClockedSimplified:
        params.delay_gain = 1.28;
        params.coinc_window = 0.034;
        break;
    case ModelId::ClockedOptimized:
        params.delay_gain = 1.0;
        params.coinc_window = 1e-6;
        break;
    default:
        break;
    }
    return params;
}

void ModelParams::validate() const {
    if (!(timescale_ts > 0.0))
        throw std::invalid_argument("timescale must be positive");
    if (!(asym > 0.0 && asym <= 1.0))
        throw std::invalid_argument("asym must lie in (0, 1]");
    if (!(delay_gain > 0.0))
        throw std::invalid_argument("delay gain must be positive");
    if (!(coinc_window > 0.0))
        throw std::invalid_argument("coincidence window must be positive");
}

HiddenPair sample_hidden(ModelId model, double u1, double u2, double u3,
                         double u4, ModelParams const &params) {
    require_unit(u1, "u1");
    require_unit(u2, "u2");
    require_unit(u3, "u3");
    require_unit(u4, "u4");

    HiddenPair hv;
    hv.e = kTwoPi * u1;
    switch (model) {
    case ModelId::EprSimple:
        hv.p = sin_squared(u2 * std::numbers::pi / 2.0) / 2.0;
        break;
    case ModelId::Pearle:
    case ModelId::ClockedOptimized:
        hv.p = 2.0 / std::sqrt(1.0 + 3.0 * u2) - 1.0;
        break;
    case ModelId::ClockedCore:
        hv.p = 0.5 * sin_squared(u2 * std::numbers::pi / 6.0);
        hv.jitter_left = params.asym + (1.0 - params.asym) * u3;
        hv.jitter_right = params.asym + (1.0 - params.asym) * u4;
        break;
    case ModelId::ClockedSimplified:
        hv.p = 4.0 * sin_squared(u2 * std::numbers::pi / 6.0);
        break;
    }
    return hv;
}

double projection(HiddenPair const &hv, double setting,
                  Station station) noexcept {
    double const c = std::cos(hv.e - setting);
    return station == Station::Left ? c : -c;
}

Outcome outcome_detect(ModelId model, HiddenPair const &hv, double setting,
                       Station station) {
    if (!is_pulsed(model))
        throw std::invalid_argument(
            "outcome_detect applies to pulsed models only");
    return detect(projection(hv, setting, station), hv.p);
}

Outcome outcome_sign(HiddenPair const &hv, double setting,
                     Station station) noexcept {
    return sign_outcome(projection(hv, setting, station));
}

double delay_from_magnitude(ModelId model, double abs_cos, double p,
                            double jitter, ModelParams const &params) {
    switch (model) {
    case ModelId::ClockedCore:
        return params.timescale_ts *
               std::max(jitter * p - (0.5 / std::numbers::pi) * abs_cos, 0.0);
    case ModelId::ClockedSimplified:
    case ModelId::ClockedOptimized:
        return std::max(p - params.delay_gain * abs_cos, 0.0);
    default:
        throw std::invalid_argument("delay applies to clocked models only");
    }
}

double delay(ModelId model, HiddenPair const &hv, double setting,
             Station station, ModelParams const &params) {
    double jitter = 1.0;
    if (model == ModelId::ClockedCore) {
        auto const &j =
            station == Station::Left ? hv.jitter_left : hv.jitter_right;
        if (!j)
            throw std::invalid_argument("clocked-core pair without jitter");
        jitter = *j;
    }
    // |cos(e + pi - setting)| == |cos(e - setting)|; using one expression
    // for both sides keeps equal-setting delays bitwise equal.
    return delay_from_magnitude(model, std::abs(std::cos(hv.e - setting)),
                                hv.p, jitter, params);
}

} // namespace bellsim
