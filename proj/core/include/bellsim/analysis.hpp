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

// CHSH statistics over outcome tables: the correlation estimator, the CHSH
// sum, detection and coincidence efficiencies, and the efficiency-adjusted
// bounds 4/eta - 2 and 6/gamma - 4.

#include "bellsim/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellsim {

class UndefinedCorrelation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class UndefinedEfficiency : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class InconsistentCounts : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Contrast = std::array<std::array<int, 2>, 2>;

/// CHSH signs indexed [alice_idx][bob_idx]: +1 on (a, b'), -1 elsewhere.
/// With Alice at 0/90 degrees and Bob at 45/135 this maximises S for the
/// singlet correlation -cos(beta - alpha).
inline constexpr Contrast kChshContrast{{{-1, +1}, {-1, -1}}};

inline constexpr double kTsirelson = 2.8284271247461903;

/// (n++ + n-- - n+- - n-+) / (n++ + n-- + n+- + n-+); rows and columns for
/// a missing detection are ignored. Throws UndefinedCorrelation when the
/// four sign cells are all zero.
[[nodiscard]] double rho(OutcomeTable const &table);

/// Sum of contrast[i][j] * corrs[i][j]. The contrast must have entries in
/// {-1, +1} with exactly one entry differing in sign from the other three;
/// throws std::invalid_argument otherwise.
[[nodiscard]] double chsh(Matrix2 const &corrs,
                          Contrast const &contrast = kChshContrast);

/// P(Alice detects | Bob detects): joint detections over the table's Bob
/// +/- columns. Throws UndefinedEfficiency on a zero denominator.
[[nodiscard]] double eta_given_bob(OutcomeTable const &table);
/// P(Bob detects | Alice detects), over Alice's +/- rows.
[[nodiscard]] double eta_given_alice(OutcomeTable const &table);

/// Minimum of both conditional efficiencies over every setting pair.
[[nodiscard]] double eta_min(TableGrid const &tables);

/// 4/eta - 2. Throws std::invalid_argument unless 0 < eta <= 1.
[[nodiscard]] double detection_bound(double eta);
/// 6/gamma - 4, a conjectured bound. Throws std::invalid_argument unless
/// 0 < gamma <= 1.
[[nodiscard]] double coincidence_bound(double gamma);

/// n_pairs / n_singles. Throws UndefinedEfficiency if n_singles == 0 and
/// InconsistentCounts if n_pairs > n_singles.
[[nodiscard]] double gamma_overall(std::uint64_t n_pairs,
                                   std::uint64_t n_singles);

/// Singles attributed to setting pairs. left(i, j) counts left detections
/// made with setting i during emissions in which the right station used
/// setting j; right(i, j) likewise for right detections.
struct SinglesGrids {
    CountGrid left;
    CountGrid right;
};

/// Every record with a detected particle on a side is a single on that side.
[[nodiscard]] SinglesGrids singles_from_records(
    std::span<TrialRecord const> records, std::size_t n_alice,
    std::size_t n_bob);

/// Attribution through emission indices: a single whose emission has no
/// detection on the opposite side cannot be attributed and is skipped.
/// Throws std::invalid_argument if an event has no emission index.
[[nodiscard]] SinglesGrids singles_from_streams(
    std::span<DetectionEvent const> left,
    std::span<DetectionEvent const> right, std::size_t n_alice,
    std::size_t n_bob);

struct GammaBreakdown {
    /// pairs(i, j) / left(i, j) and pairs(i, j) / right(i, j), row-major
    /// [alice_idx * n_bob + bob_idx].
    std::vector<double> given_left;
    std::vector<double> given_right;
    double min = 0.0;
};

/// Per-setting-pair coincidence efficiencies and their minimum. Throws
/// UndefinedEfficiency on any zero denominator and InconsistentCounts if a
/// pair count exceeds its denominator or the grids disagree in shape.
[[nodiscard]] GammaBreakdown gamma_min(CountGrid const &pairs_by_setting,
                                       SinglesGrids const &singles);
[[nodiscard]] GammaBreakdown gamma_min(std::span<CoincidencePair const> pairs,
                                       SinglesGrids const &singles);

struct ClockedSummary {
    std::uint64_t pairs = 0;
    std::uint64_t singles_left = 0;
    std::uint64_t singles_right = 0;
    double gamma = 0.0;             ///< pairs / max(singles_left, singles_right)
    double coincidence_bound = 0.0; ///< from gamma
    std::optional<GammaBreakdown> by_pair;
    std::optional<double> coincidence_bound_min; ///< from by_pair->min
};

struct ChshReport {
    std::string model;
    std::vector<double> alice_settings_deg;
    std::vector<double> bob_settings_deg;
    TableGrid counts;

    Matrix2 corrs{};
    Contrast contrast = kChshContrast;
    double S = 0.0;
    Matrix2 qm{}; ///< -cos(beta - alpha)
    double qm_S = 0.0;
    double tsirelson = kTsirelson;

    // Pulsed runs.
    std::optional<Matrix2> eta_given_bob;
    std::optional<Matrix2> eta_given_alice;
    std::optional<double> eta_min;
    std::optional<double> detection_bound;

    // Clocked runs.
    std::optional<ClockedSummary> clocked;
};

/// Report for a pulsed run. Settings are in radians and must be 2 x 2,
/// matching the grid. Throws on any undefined statistic, so a report is
/// either complete or not produced.
[[nodiscard]] ChshReport assemble_pulsed_report(
    TableGrid const &tables, std::span<double const> alice_settings,
    std::span<double const> bob_settings, std::string model = {},
    Contrast const &contrast = kChshContrast);

/// Report for a clocked run from its accepted pairs. `singles` enables the
/// per-setting-pair gamma breakdown.
[[nodiscard]] ChshReport assemble_clocked_report(
    TableGrid const &pair_tables, std::uint64_t singles_left,
    std::uint64_t singles_right, std::optional<SinglesGrids> const &singles,
    std::span<double const> alice_settings,
    std::span<double const> bob_settings, std::string model = {},
    Contrast const &contrast = kChshContrast);

} // namespace bellsim
