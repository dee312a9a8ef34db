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

#include "bellsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <utility>

namespace bellsim {

namespace {

constexpr std::size_t kPlus = 0;
constexpr std::size_t kZero = 1;
constexpr std::size_t kMinus = 2;

double ratio(std::uint64_t num, std::uint64_t den, char const *what) {
    if (den == 0)
        throw UndefinedEfficiency(std::string(what) + ": zero denominator");
    return static_cast<double>(num) / static_cast<double>(den);
}

void require_chsh_shape(TableGrid const &tables,
                        std::span<double const> alice,
                        std::span<double const> bob) {
    if (alice.size() != 2 || bob.size() != 2)
        throw std::invalid_argument("a CHSH report needs two settings per side");
    if (tables.n_alice() != 2 || tables.n_bob() != 2)
        throw InconsistentCounts("a CHSH report needs a 2 x 2 table grid");
}

std::vector<double> to_degrees(std::span<double const> radians) {
    std::vector<double> out;
    out.reserve(radians.size());
    for (double r : radians)
        out.push_back(r * 180.0 / std::numbers::pi);
    return out;
}

// Fills the fields shared by pulsed and clocked reports.
ChshReport base_report(TableGrid const &tables, std::span<double const> alice,
                       std::span<double const> bob, std::string model,
                       Contrast const &contrast) {
    ChshReport rep;
    rep.model = std::move(model);
    rep.alice_settings_deg = to_degrees(alice);
    rep.bob_settings_deg = to_degrees(bob);
    rep.counts = tables;
    rep.contrast = contrast;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            rep.corrs[i][j] = rho(tables(i, j));
            rep.qm[i][j] = -std::cos(bob[j] - alice[i]);
        }
    }
    rep.S = chsh(rep.corrs, contrast);
    rep.qm_S = chsh(rep.qm, contrast);
    return rep;
}

} // namespace

double rho(OutcomeTable const &t) {
    auto const &D = t.counts;
    std::uint64_t const agree = D[kPlus][kPlus] + D[kMinus][kMinus];
    std::uint64_t const disagree = D[kPlus][kMinus] + D[kMinus][kPlus];
    if (agree + disagree == 0)
        throw UndefinedCorrelation("no jointly detected pairs");
    return (static_cast<double>(agree) - static_cast<double>(disagree)) /
           static_cast<double>(agree + disagree);
}

double chsh(Matrix2 const &corrs, Contrast const &contrast) {
    int plus = 0;
    for (auto const &row : contrast) {
        for (int s : row) {
            if (s != 1 && s != -1)
                throw std::invalid_argument("contrast entries must be +1 or -1");
            plus += s == 1;
        }
    }
    if (plus != 1 && plus != 3)
        throw std::invalid_argument(
            "contrast must have exactly one sign opposite to the other three");
    double s = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            s += contrast[i][j] * corrs[i][j];
    return s;
}

double eta_given_bob(OutcomeTable const &t) {
    auto const &D = t.counts;
    std::uint64_t den = 0;
    for (std::size_t r = 0; r < 3; ++r)
        den += D[r][kPlus] + D[r][kMinus];
    return ratio(t.joint_detections(), den, "eta given Bob");
}

double eta_given_alice(OutcomeTable const &t) {
    auto const &D = t.counts;
    std::uint64_t den = 0;
    for (std::size_t c = 0; c < 3; ++c)
        den += D[kPlus][c] + D[kMinus][c];
    return ratio(t.joint_detections(), den, "eta given Alice");
}

double eta_min(TableGrid const &tables) {
    if (tables.n_alice() == 0 || tables.n_bob() == 0)
        throw UndefinedEfficiency("eta_min of an empty table grid");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tables.n_alice(); ++i) {
        for (std::size_t j = 0; j < tables.n_bob(); ++j) {
            m = std::min({m, eta_given_bob(tables(i, j)),
                          eta_given_alice(tables(i, j))});
        }
    }
    return m;
}

double detection_bound(double eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("detection efficiency must lie in (0, 1]");
    return 4.0 / eta - 2.0;
}

double coincidence_bound(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("coincidence efficiency must lie in (0, 1]");
    return 6.0 / gamma - 4.0;
}

double gamma_overall(std::uint64_t n_pairs, std::uint64_t n_singles) {
    if (n_singles == 0)
        throw UndefinedEfficiency("gamma: no singles");
    if (n_pairs > n_singles)
        throw InconsistentCounts("gamma: more pairs than singles");
    return static_cast<double>(n_pairs) / static_cast<double>(n_singles);
}

SinglesGrids singles_from_records(std::span<TrialRecord const> records,
                                  std::size_t n_alice, std::size_t n_bob) {
    SinglesGrids s{CountGrid(n_alice, n_bob), CountGrid(n_alice, n_bob)};
    for (auto const &r : records) {
        if (r.a_out != Outcome::None)
            ++s.left(r.a_idx, r.b_idx);
        if (r.b_out != Outcome::None)
            ++s.right(r.a_idx, r.b_idx);
    }
    return s;
}

SinglesGrids singles_from_streams(std::span<DetectionEvent const> left,
                                  std::span<DetectionEvent const> right,
                                  std::size_t n_alice, std::size_t n_bob) {
    auto index = [](std::span<DetectionEvent const> events, char const *who) {
        std::unordered_map<std::uint64_t, std::uint32_t> setting_of;
        setting_of.reserve(events.size());
        for (auto const &ev : events) {
            if (!ev.emission)
                throw std::invalid_argument(
                    std::string(who) +
                    " events lack emission indices; per-setting gamma needs "
                    "them");
            setting_of[*ev.emission] = ev.setting_idx;
        }
        return setting_of;
    };
    auto const left_setting = index(left, "left");
    auto const right_setting = index(right, "right");

    SinglesGrids s{CountGrid(n_alice, n_bob), CountGrid(n_alice, n_bob)};
    for (auto const &ev : left) {
        if (auto it = right_setting.find(*ev.emission); it != right_setting.end())
            ++s.left(ev.setting_idx, it->second);
    }
    for (auto const &ev : right) {
        if (auto it = left_setting.find(*ev.emission); it != left_setting.end())
            ++s.right(it->second, ev.setting_idx);
    }
    return s;
}

GammaBreakdown gamma_min(CountGrid const &pairs, SinglesGrids const &singles) {
    std::size_t const na = pairs.n_alice();
    std::size_t const nb = pairs.n_bob();
    if (na == 0 || nb == 0)
        throw UndefinedEfficiency("gamma_min of an empty grid");
    for (auto const *g : {&singles.left, &singles.right}) {
        if (g->n_alice() != na || g->n_bob() != nb)
            throw InconsistentCounts("gamma_min: grid shapes differ");
    }
    GammaBreakdown out;
    out.min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            auto const n = pairs(i, j);
            if (n > singles.left(i, j) || n > singles.right(i, j))
                throw InconsistentCounts("gamma_min: more pairs than singles");
            double const l = ratio(n, singles.left(i, j), "gamma (left)");
            double const r = ratio(n, singles.right(i, j), "gamma (right)");
            out.given_left.push_back(l);
            out.given_right.push_back(r);
            out.min = std::min({out.min, l, r});
        }
    }
    return out;
}

GammaBreakdown gamma_min(std::span<CoincidencePair const> pairs,
                         SinglesGrids const &singles) {
    CountGrid counts(singles.left.n_alice(), singles.left.n_bob());
    for (auto const &p : pairs) {
        if (p.left.setting_idx >= counts.n_alice() ||
            p.right.setting_idx >= counts.n_bob())
            throw InconsistentCounts("gamma_min: pair setting out of range");
        ++counts(p.left.setting_idx, p.right.setting_idx);
    }
    return gamma_min(counts, singles);
}

ChshReport assemble_pulsed_report(TableGrid const &tables,
                                  std::span<double const> alice_settings,
                                  std::span<double const> bob_settings,
                                  std::string model,
                                  Contrast const &contrast) {
    require_chsh_shape(tables, alice_settings, bob_settings);
    ChshReport rep = base_report(tables, alice_settings, bob_settings,
                                 std::move(model), contrast);
    Matrix2 given_bob{}, given_alice{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            given_bob[i][j] = eta_given_bob(tables(i, j));
            given_alice[i][j] = eta_given_alice(tables(i, j));
        }
    }
    rep.eta_given_bob = given_bob;
    rep.eta_given_alice = given_alice;
    rep.eta_min = eta_min(tables);
    rep.detection_bound = detection_bound(*rep.eta_min);
    return rep;
}

ChshReport assemble_clocked_report(TableGrid const &pair_tables,
                                   std::uint64_t singles_left,
                                   std::uint64_t singles_right,
                                   std::optional<SinglesGrids> const &singles,
                                   std::span<double const> alice_settings,
                                   std::span<double const> bob_settings,
                                   std::string model,
                                   Contrast const &contrast) {
    require_chsh_shape(pair_tables, alice_settings, bob_settings);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            auto const &t = pair_tables(i, j);
            if (t.total() != t.joint_detections())
                throw InconsistentCounts(
                    "coincidence tables cannot contain missing outcomes");
        }
    }
    ChshReport rep = base_report(pair_tables, alice_settings, bob_settings,
                                 std::move(model), contrast);
    ClockedSummary c;
    c.pairs = pair_tables.total();
    c.singles_left = singles_left;
    c.singles_right = singles_right;
    c.gamma = gamma_overall(c.pairs, std::max(singles_left, singles_right));
    c.coincidence_bound = coincidence_bound(c.gamma);
    if (singles) {
        CountGrid n_ab(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                n_ab(i, j) = pair_tables(i, j).total();
        c.by_pair = gamma_min(n_ab, *singles);
        c.coincidence_bound_min = coincidence_bound(c.by_pair->min);
    }
    rep.clocked = std::move(c);
    return rep;
}

} // namespace bellsim
