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

#include "bellsim/coincidence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bellsim {

namespace {

void require_sorted(std::span<DetectionEvent const> events, char const *who) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        double const t = events[i].time;
        if (std::isnan(t))
            throw std::invalid_argument(std::string(who) + " event " +
                                        std::to_string(i) + " has NaN time");
        if (i > 0 && t < events[i - 1].time)
            throw std::invalid_argument(
                std::string(who) + " stream is not time-sorted at event " +
                std::to_string(i));
    }
}

} // namespace

std::vector<TrialRecord>
match_trial_paired(std::span<TrialRecord const> records, double window) {
    if (!(window > 0.0))
        throw std::invalid_argument("coincidence window must be positive");
    std::vector<TrialRecord> accepted;
    for (auto const &r : records) {
        if (std::abs(r.delay_a - r.delay_b) < window)
            accepted.push_back(r);
    }
    return accepted;
}

StreamMatch match_streams(std::span<DetectionEvent const> left,
                          std::span<DetectionEvent const> right,
                          double window) {
    if (!(window > 0.0))
        throw std::invalid_argument("coincidence window must be positive");
    require_sorted(left, "left");
    require_sorted(right, "right");

    StreamMatch out;
    std::size_t i = 0;
    std::size_t j = 0;

    // x = own[a], y = other[b]; own[a].time <= other[b].time.
    auto accept = [window](std::span<DetectionEvent const> own, std::size_t a,
                           std::span<DetectionEvent const> other,
                           std::size_t b) {
        double const gap = other[b].time - own[a].time;
        if (!(gap < window))
            return false;
        if (a + 1 < own.size() &&
            std::abs(own[a + 1].time - other[b].time) < gap)
            return false;
        return true;
    };

    while (i < left.size() && j < right.size()) {
        if (left[i].time <= right[j].time) {
            if (accept(left, i, right, j)) {
                out.pairs.push_back({left[i], right[j]});
                ++j;
            } else {
                ++out.unmatched_left;
            }
            ++i;
        } else {
            if (accept(right, j, left, i)) {
                out.pairs.push_back({left[i], right[j]});
                ++i;
            } else {
                ++out.unmatched_right;
            }
            ++j;
        }
    }
    out.unmatched_left += left.size() - i;
    out.unmatched_right += right.size() - j;
    return out;
}

CoincidenceCounts coincidence_counts(std::span<CoincidencePair const> pairs,
                                     std::size_t n_settings_a,
                                     std::size_t n_settings_b) {
    CoincidenceCounts c{TableGrid(n_settings_a, n_settings_b),
                        CountGrid(n_settings_a, n_settings_b)};
    for (auto const &pr : pairs) {
        auto const a = pr.left.setting_idx;
        auto const b = pr.right.setting_idx;
        if (a >= n_settings_a || b >= n_settings_b)
            throw std::out_of_range("coincidence pair setting out of range");
        c.tables(a, b).add(pr.left.outcome, pr.right.outcome);
        ++c.n_ab(a, b);
    }
    return c;
}

std::vector<CoincidencePair>
pairs_from_records(std::span<TrialRecord const> accepted) {
    std::vector<CoincidencePair> pairs;
    pairs.reserve(accepted.size());
    for (auto const &r : accepted) {
        pairs.push_back({{r.delay_a, r.a_idx, r.a_out, r.trial_index},
                         {r.delay_b, r.b_idx, r.b_out, r.trial_index}});
    }
    return pairs;
}

} // namespace bellsim
