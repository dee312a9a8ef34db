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

#include "bellsim/types.hpp"

#include <string>

namespace bellsim {

Outcome outcome_from_int(int v) {
    switch (v) {
    case 1:
        return Outcome::Plus;
    case 0:
        return Outcome::None;
    case -1:
        return Outcome::Minus;
    default:
        throw std::invalid_argument("outcome must be +1, 0 or -1, got " +
                                    std::to_string(v));
    }
}

std::uint64_t OutcomeTable::total() const noexcept {
    std::uint64_t sum = 0;
    for (auto const &row : counts)
        for (auto c : row)
            sum += c;
    return sum;
}

std::uint64_t OutcomeTable::joint_detections() const noexcept {
    return counts[0][0] + counts[0][2] + counts[2][0] + counts[2][2];
}

OutcomeTable &OutcomeTable::operator+=(OutcomeTable const &other) noexcept {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            counts[r][c] += other.counts[r][c];
    return *this;
}

std::uint64_t TableGrid::total() const noexcept {
    std::uint64_t sum = 0;
    for (auto const &t : tables_)
        sum += t.total();
    return sum;
}

TableGrid &TableGrid::operator+=(TableGrid const &other) {
    if (other.n_alice_ != n_alice_ || other.n_bob_ != n_bob_)
        throw std::invalid_argument("cannot merge table grids of different shape");
    for (std::size_t i = 0; i < tables_.size(); ++i)
        tables_[i] += other.tables_[i];
    return *this;
}

} // namespace bellsim
