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

// File formats. All text files are UTF-8 CSV with a header row, '.' as the
// decimal separator and LF line endings. Angles are stored in degrees.
//
//   events   [emission_index,]time,setting_deg,outcome
//   records  trial_index,a_idx,b_idx,a_setting_deg,b_setting_deg,a_out,b_out,
//            delay_a,delay_b
//   tables   alice_setting_deg,bob_setting_deg,alice_out,bob_out,count
//   pairs    left_emission,left_time,left_setting_deg,left_outcome,
//            right_emission,right_time,right_setting_deg,right_outcome
//   curve    angle_deg,correlation,neg_cosine_reference,acceptance_rate
//
// Event times are written with 9 decimals. Every other real number is
// written with 17 significant digits, so it reads back bit-exact.
//
// The tables reader also accepts the legacy 12-line layout: four blocks of
// three lines with three integers each, one block per setting pair in the
// order (a, b), (a, b'), (a', b), (a', b'); within a block rows are Alice's
// outcome (+1, 0, -1) and columns Bob's.

#include "bellsim/analysis.hpp"
#include "bellsim/sim_engine.hpp"
#include "bellsim/types.hpp"

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellsim::io {

/// Malformed input; the message names the source and line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string_view source, std::size_t line,
               std::string_view what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

[[nodiscard]] std::string format_real(double v);

struct EventFile {
    std::vector<DetectionEvent> events;
    std::vector<double> settings_deg; ///< setting_idx -> degrees
    bool has_emission = false;
};

void write_events(std::ostream &out, std::span<DetectionEvent const> events,
                  std::span<double const> settings_deg);

/// When `settings_order` is given, setting_idx is the position of the
/// event's angle in it (an unknown angle is an error); otherwise indices
/// follow the ascending order of the distinct angles in the file. Throws
/// ParseError on malformed rows, out-of-range values, or decreasing times.
[[nodiscard]] EventFile
read_events(std::istream &in, std::string_view source,
            std::optional<std::span<double const>> settings_order = {});

struct RecordsFile {
    std::vector<TrialRecord> records;
    std::vector<double> alice_settings_deg;
    std::vector<double> bob_settings_deg;
};

void write_records(std::ostream &out, std::span<TrialRecord const> records,
                   std::span<double const> alice_deg,
                   std::span<double const> bob_deg);
[[nodiscard]] RecordsFile read_records(std::istream &in,
                                       std::string_view source);

struct TablesFile {
    TableGrid tables;
    std::vector<double> alice_settings_deg; ///< empty for the legacy layout
    std::vector<double> bob_settings_deg;
    bool legacy = false;
};

void write_tables(std::ostream &out, TableGrid const &tables,
                  std::span<double const> alice_deg,
                  std::span<double const> bob_deg);
[[nodiscard]] TablesFile read_tables(std::istream &in,
                                     std::string_view source);

void write_pairs(std::ostream &out, std::span<CoincidencePair const> pairs,
                 std::span<double const> left_deg,
                 std::span<double const> right_deg);

void write_curve(std::ostream &out, SweepCurve const &curve, double beta_deg);

/// Stable key names: corrs, S, eta_min, detection_bound, gamma, gamma_min,
/// coincidence_bound, qm, counts, plus supporting fields. Fields that do
/// not apply to the run are null.
[[nodiscard]] std::string report_to_json(ChshReport const &report);
/// key,value rows carrying the same numbers as the JSON encoding.
[[nodiscard]] std::string report_to_csv(ChshReport const &report);
/// Human-readable summary with 7 significant digits.
[[nodiscard]] std::string report_summary(ChshReport const &report);

/// Writes to `path`.tmp and renames onto `path` on commit(); an uncommitted
/// file is removed on destruction.
class OutputFile {
  public:
    explicit OutputFile(std::filesystem::path path);
    OutputFile(OutputFile const &) = delete;
    OutputFile &operator=(OutputFile const &) = delete;
    ~OutputFile();

    std::ostream &stream() { return out_; }
    void commit();

  private:
    std::filesystem::path path_;
    std::filesystem::path tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

} // namespace bellsim::io
