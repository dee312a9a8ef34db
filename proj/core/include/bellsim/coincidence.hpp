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

#include "bellsim/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bellsim {

/// Keeps the records whose two delays differ by strictly less than window.
[[nodiscard]] std::vector<TrialRecord>
match_trial_paired(std::span<TrialRecord const> records, double window);

struct StreamMatch {
    std::vector<CoincidencePair> pairs; ///< ordered by left time
    std::uint64_t unmatched_left = 0;
    std::uint64_t unmatched_right = 0;
};

/// Pairs two time-sorted detection streams.
///
/// Events are visited in time order (left first on equal times). The
/// earliest unvisited event x is paired with the earliest unvisited
/// opposite event y when |x - y| < window and x is at least as close to y
/// as the next event on x's own side; otherwise x is discarded. Each event
/// ends up in at most one pair. Linear time.
///
/// Throws std::invalid_argument if window <= 0 or either stream is not
/// sorted by time; the input is never reordered.
[[nodiscard]] StreamMatch match_streams(std::span<DetectionEvent const> left,
                                        std::span<DetectionEvent const> right,
                                        double window);

struct CoincidenceCounts {
    TableGrid tables; ///< only the sign cells are populated
    CountGrid n_ab;
};

/// Per-setting-pair sign tables and pair counts. Throws std::out_of_range
/// if a pair carries a setting index outside the given sizes.
[[nodiscard]] CoincidenceCounts
coincidence_counts(std::span<CoincidencePair const> pairs,
                   std::size_t n_settings_a, std::size_t n_settings_b);

/// Accepted trial records viewed as coincidence pairs, with times equal to
/// each particle's delay and emission indices set.
[[nodiscard]] std::vector<CoincidencePair>
pairs_from_records(std::span<TrialRecord const> accepted);

} // namespace bellsim
