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

// Value types shared by the simulation, matching and analysis layers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bellsim {

/// Ternary measurement result; None means the particle was not detected.
enum class Outcome : std::int8_t { Plus = 1, None = 0, Minus = -1 };

[[nodiscard]] constexpr int value(Outcome o) noexcept {
    return static_cast<int>(o);
}

/// Maps +1 / 0 / -1 to an Outcome; anything else throws.
[[nodiscard]] Outcome outcome_from_int(int v);

/// Row/column position of an outcome in an OutcomeTable: + -> 0, 0 -> 1,
/// - -> 2.
[[nodiscard]] constexpr std::size_t table_index(Outcome o) noexcept {
    return static_cast<std::size_t>(1 - value(o));
}

/// 3x3 count matrix for one setting pair. Rows are Alice's outcome in the
/// order (+1, 0, -1); columns are Bob's outcome in the same order.
struct OutcomeTable {
    std::array<std::array<std::uint64_t, 3>, 3> counts{};

    void add(Outcome alice, Outcome bob, std::uint64_t n = 1) noexcept {
        counts[table_index(alice)][table_index(bob)] += n;
    }
    [[nodiscard]] std::uint64_t at(Outcome alice, Outcome bob) const noexcept {
        return counts[table_index(alice)][table_index(bob)];
    }
    [[nodiscard]] std::uint64_t total() const noexcept;
    /// Cells where both stations produced a sign outcome.
    [[nodiscard]] std::uint64_t joint_detections() const noexcept;

    OutcomeTable &operator+=(OutcomeTable const &other) noexcept;
    friend bool operator==(OutcomeTable const &, OutcomeTable const &) = default;
};

/// One OutcomeTable per (Alice setting, Bob setting) pair, indexed
/// [alice_idx][bob_idx].
class TableGrid {
  public:
    TableGrid() = default;
    TableGrid(std::size_t n_alice, std::size_t n_bob)
        : n_alice_(n_alice), n_bob_(n_bob), tables_(n_alice * n_bob) {}

    [[nodiscard]] std::size_t n_alice() const noexcept { return n_alice_; }
    [[nodiscard]] std::size_t n_bob() const noexcept { return n_bob_; }

    OutcomeTable &operator()(std::size_t a, std::size_t b) {
        return tables_.at(a * n_bob_ + b);
    }
    OutcomeTable const &operator()(std::size_t a, std::size_t b) const {
        return tables_.at(a * n_bob_ + b);
    }

    [[nodiscard]] std::uint64_t total() const noexcept;
    TableGrid &operator+=(TableGrid const &other);
    friend bool operator==(TableGrid const &, TableGrid const &) = default;

  private:
    std::size_t n_alice_ = 0;
    std::size_t n_bob_ = 0;
    std::vector<OutcomeTable> tables_;
};

/// Per-trial record of a simulated emission. Delays are only meaningful for
/// clocked runs and are zero otherwise.
struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint32_t a_idx = 0;
    std::uint32_t b_idx = 0;
    Outcome a_out = Outcome::None;
    Outcome b_out = Outcome::None;
    double delay_a = 0.0;
    double delay_b = 0.0;

    friend bool operator==(TrialRecord const &, TrialRecord const &) = default;
};

/// Timestamped single-station detection.
struct DetectionEvent {
    double time = 0.0;
    std::uint32_t setting_idx = 0;
    Outcome outcome = Outcome::Plus;
    std::optional<std::uint64_t> emission;

    friend bool operator==(DetectionEvent const &,
                           DetectionEvent const &) = default;
};

struct CoincidencePair {
    DetectionEvent left;
    DetectionEvent right;

    friend bool operator==(CoincidencePair const &,
                           CoincidencePair const &) = default;
};

/// Dense counts indexed [alice_idx][bob_idx].
class CountGrid {
  public:
    CountGrid() = default;
    CountGrid(std::size_t n_alice, std::size_t n_bob)
        : n_alice_(n_alice), n_bob_(n_bob), counts_(n_alice * n_bob, 0) {}

    [[nodiscard]] std::size_t n_alice() const noexcept { return n_alice_; }
    [[nodiscard]] std::size_t n_bob() const noexcept { return n_bob_; }
    std::uint64_t &operator()(std::size_t a, std::size_t b) {
        return counts_.at(a * n_bob_ + b);
    }
    std::uint64_t operator()(std::size_t a, std::size_t b) const {
        return counts_.at(a * n_bob_ + b);
    }
    friend bool operator==(CountGrid const &, CountGrid const &) = default;

  private:
    std::size_t n_alice_ = 0;
    std::size_t n_bob_ = 0;
    std::vector<std::uint64_t> counts_;
};

} // namespace bellsim
