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
#include "bellsim/coincidence.hpp"
#include "reference_counts.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace bellsim {
namespace {

using testdata::reference_grid;
using testdata::reference_table;

// Values printed with 7 significant digits; half a unit in the last place.
constexpr double kPrinted = 5e-8;

std::vector<double> const kAlice{0.0, std::numbers::pi / 2};
std::vector<double> const kBob{std::numbers::pi / 4, 3 * std::numbers::pi / 4};

OutcomeTable random_table(std::mt19937_64 &gen, bool with_misses) {
    std::uniform_int_distribution<std::uint64_t> n(0, 50);
    OutcomeTable t;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            t.counts[r][c] = (r == 1 || c == 1) && !with_misses ? 0 : n(gen);
    t.counts[0][0] += 1; // keep rho defined
    return t;
}

TEST(Rho, Examples) {
    EXPECT_NEAR(rho(reference_table(0)), -0.7003995, kPrinted);
    OutcomeTable t;
    t.add(Outcome::Plus, Outcome::Plus, 7);
    EXPECT_EQ(rho(t), 1.0);
    OutcomeTable even;
    for (auto a : {Outcome::Plus, Outcome::Minus})
        for (auto b : {Outcome::Plus, Outcome::Minus})
            even.add(a, b, 5);
    EXPECT_EQ(rho(even), 0.0);
}

TEST(Rho, IgnoresMissingDetections) {
    OutcomeTable t;
    t.add(Outcome::Plus, Outcome::Minus, 3);
    t.add(Outcome::None, Outcome::Plus, 100);
    t.add(Outcome::Minus, Outcome::None, 100);
    t.add(Outcome::None, Outcome::None, 100);
    EXPECT_EQ(rho(t), -1.0);
}

TEST(Rho, UndefinedWithoutJointDetections) {
    OutcomeTable t;
    t.add(Outcome::None, Outcome::Plus, 4);
    EXPECT_THROW((void)rho(t), UndefinedCorrelation);
    EXPECT_THROW((void)rho(OutcomeTable{}), UndefinedCorrelation);
}

TEST(Rho, ScaleInvariantAndBounded) {
    std::mt19937_64 gen(1);
    for (int i = 0; i < 500; ++i) {
        auto t = random_table(gen, true);
        double const r = rho(t);
        EXPECT_GE(r, -1.0);
        EXPECT_LE(r, 1.0);
        for (std::uint64_t k : {2u, 3u, 17u}) {
            OutcomeTable s = t;
            for (auto &row : s.counts)
                for (auto &c : row)
                    c *= k;
            EXPECT_DOUBLE_EQ(rho(s), r);
        }
    }
}

TEST(Chsh, Examples) {
    // Same four correlations laid out with Bob as the row index, and the
    // contrast transposed to match.
    Matrix2 const bob_major{{{-0.7003995, -0.7151515}, {0.6903536, -0.6928916}}};
    Contrast const bob_major_contrast{{{-1, -1}, {+1, -1}}};
    EXPECT_NEAR(chsh(bob_major, bob_major_contrast), 2.798796, 1e-6);
    Matrix2 const alice_major{{{-0.7003995, 0.6903536}, {-0.7151515, -0.6928916}}};
    EXPECT_NEAR(chsh(alice_major), 2.798796, 1e-6);
    EXPECT_EQ(chsh(Matrix2{}), 0.0);
    EXPECT_EQ(chsh(Matrix2{{{-1, +1}, {-1, -1}}}), 4.0);
    EXPECT_EQ(chsh(Matrix2{{{-1, -1}, {+1, -1}}}, bob_major_contrast), 4.0);
}

TEST(Chsh, RejectsNonChshContrast) {
    Matrix2 const z{};
    EXPECT_THROW((void)chsh(z, Contrast{{{1, 1}, {1, 1}}}), std::invalid_argument);
    EXPECT_THROW((void)chsh(z, Contrast{{{1, -1}, {-1, 1}}}), std::invalid_argument);
    EXPECT_THROW((void)chsh(z, Contrast{{{0, 1}, {1, 1}}}), std::invalid_argument);
    EXPECT_NO_THROW((void)chsh(z, Contrast{{{1, 1}, {1, -1}}}));
}

TEST(Chsh, LinearAndPermutationInvariant) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 500; ++i) {
        Matrix2 x, y, sum;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                x[a][b] = u(gen);
                y[a][b] = u(gen);
                sum[a][b] = 2 * x[a][b] - y[a][b];
            }
        EXPECT_NEAR(chsh(sum), 2 * chsh(x) - chsh(y), 1e-12);
        // Swap Alice's settings in both the data and the contrast.
        Matrix2 const xs{{x[1], x[0]}};
        Contrast const cs{{kChshContrast[1], kChshContrast[0]}};
        EXPECT_NEAR(chsh(xs, cs), chsh(x), 1e-15);
        EXPECT_LE(std::abs(chsh(x)), 4.0);
    }
}

TEST(Eta, Examples) {
    auto const t = reference_table(0);
    EXPECT_NEAR(eta_given_bob(t), 0.8163043, kPrinted);
    EXPECT_NEAR(eta_given_alice(t), 0.8178601, kPrinted);
    OutcomeTable clean;
    clean.add(Outcome::Plus, Outcome::Minus, 3);
    clean.add(Outcome::Minus, Outcome::Minus, 1);
    EXPECT_EQ(eta_given_bob(clean), 1.0);
    EXPECT_EQ(eta_given_alice(clean), 1.0);
}

TEST(Eta, ZeroDenominator) {
    OutcomeTable t;
    t.add(Outcome::None, Outcome::None, 5);
    EXPECT_THROW((void)eta_given_bob(t), UndefinedEfficiency);
    EXPECT_THROW((void)eta_given_alice(t), UndefinedEfficiency);
}

TEST(Eta, RangeAndUnitIffNoMisses) {
    std::mt19937_64 gen(3);
    for (int i = 0; i < 1000; ++i) {
        bool const misses = i % 2 == 0;
        auto t = random_table(gen, misses);
        double const b = eta_given_bob(t), a = eta_given_alice(t);
        EXPECT_GT(b, 0.0);
        EXPECT_LE(b, 1.0);
        EXPECT_GT(a, 0.0);
        EXPECT_LE(a, 1.0);
        bool const zero_cross = t.counts[1][0] + t.counts[1][2] +
                                    t.counts[0][1] + t.counts[2][1] ==
                                0;
        EXPECT_EQ(a == 1.0 && b == 1.0, zero_cross);
    }
}

TEST(EtaMin, Examples) {
    EXPECT_NEAR(eta_min(reference_grid()), 0.8109688, kPrinted);
    TableGrid clean(2, 2);
    for (int k = 0; k < 4; ++k)
        clean(k / 2, k % 2).add(Outcome::Plus, Outcome::Minus, 10);
    EXPECT_EQ(eta_min(clean), 1.0);

    // One ratio at 0.5, the rest at 0.9.
    TableGrid g(2, 2);
    for (int k = 0; k < 4; ++k) {
        auto &t = g(k / 2, k % 2);
        t.add(Outcome::Plus, Outcome::Minus, 9);
        t.add(Outcome::None, Outcome::Minus, 1);
        t.add(Outcome::Plus, Outcome::None, 1);
    }
    g(1, 0) = OutcomeTable{};
    g(1, 0).add(Outcome::Plus, Outcome::Minus, 9);
    g(1, 0).add(Outcome::None, Outcome::Minus, 9);
    g(1, 0).add(Outcome::Plus, Outcome::None, 1);
    EXPECT_EQ(eta_given_bob(g(1, 0)), 0.5);
    EXPECT_EQ(eta_given_alice(g(0, 0)), 0.9);
    EXPECT_EQ(eta_min(g), 0.5);

    g(0, 1) = OutcomeTable{};
    g(0, 1).add(Outcome::None, Outcome::None, 3);
    EXPECT_THROW((void)eta_min(g), UndefinedEfficiency);
}

TEST(Bounds, Examples) {
    EXPECT_NEAR(detection_bound(0.8109688), 2.932372, kPrinted * 10);
    EXPECT_EQ(detection_bound(1.0), 2.0);
    EXPECT_EQ(detection_bound(2.0 / 3.0), 4.0);
    EXPECT_NEAR(coincidence_bound(gamma_overall(109698, 199994)), 6.938796,
                kPrinted * 10);
    // From the rounded efficiency the last digit moves by up to 6/gamma^2
    // times the rounding error.
    EXPECT_NEAR(coincidence_bound(0.5485065), 6.938796, 1.5e-6);
    EXPECT_EQ(coincidence_bound(1.0), 2.0);
    EXPECT_EQ(coincidence_bound(0.75), 4.0);
    for (double bad : {0.0, -0.1, 1.0000001, std::nan("")}) {
        EXPECT_THROW((void)detection_bound(bad), std::invalid_argument);
        EXPECT_THROW((void)coincidence_bound(bad), std::invalid_argument);
    }
}

TEST(Bounds, StrictlyDecreasing) {
    double prev_d = detection_bound(0.01), prev_c = coincidence_bound(0.01);
    for (int i = 2; i <= 100; ++i) {
        double const x = i / 100.0;
        double const d = detection_bound(x), c = coincidence_bound(x);
        EXPECT_LT(d, prev_d);
        EXPECT_LT(c, prev_c);
        EXPECT_GE(d, 2.0);
        EXPECT_GE(c, 2.0);
        prev_d = d;
        prev_c = c;
    }
}

TEST(GammaOverall, Examples) {
    EXPECT_NEAR(gamma_overall(109698, 199994), 0.5485065, kPrinted);
    EXPECT_EQ(gamma_overall(0, 100), 0.0);
    EXPECT_EQ(gamma_overall(100, 100), 1.0);
    EXPECT_THROW((void)gamma_overall(101, 100), InconsistentCounts);
    EXPECT_THROW((void)gamma_overall(0, 0), UndefinedEfficiency);
}

// Ten emissions, enumerated by hand.
//   k  a b  a_out b_out  paired
//   0  0 0   +     -      yes
//   1  0 0   +     +      no
//   2  0 1   -     +      yes
//   3  0 1   +     .      no
//   4  1 0   +     -      yes
//   5  1 0   .     -      no
//   6  1 1   -     +      yes
//   7  1 1   +     -      yes
//   8  1 1   -     -      no
//   9  0 0   .     .      no
std::vector<TrialRecord> ten_emissions() {
    struct Row {
        int a, b, ao, bo;
        bool paired;
    };
    Row const rows[10] = {{0, 0, 1, -1, true},  {0, 0, 1, 1, false},
                          {0, 1, -1, 1, true},  {0, 1, 1, 0, false},
                          {1, 0, 1, -1, true},  {1, 0, 0, -1, false},
                          {1, 1, -1, 1, true},  {1, 1, 1, -1, true},
                          {1, 1, -1, -1, false}, {0, 0, 0, 0, false}};
    std::vector<TrialRecord> out;
    for (std::uint64_t k = 0; k < 10; ++k) {
        TrialRecord r;
        r.trial_index = k;
        r.a_idx = rows[k].a;
        r.b_idx = rows[k].b;
        r.a_out = outcome_from_int(rows[k].ao);
        r.b_out = outcome_from_int(rows[k].bo);
        r.delay_a = 0.1;
        r.delay_b = rows[k].paired ? 0.1 : 0.9;
        out.push_back(r);
    }
    return out;
}

TEST(GammaMin, HandEnumeratedFixtureFromRecords) {
    auto const recs = ten_emissions();
    auto const s = singles_from_records(recs, 2, 2);
    EXPECT_EQ(s.left(0, 0), 2u);
    EXPECT_EQ(s.left(0, 1), 2u);
    EXPECT_EQ(s.left(1, 0), 1u);
    EXPECT_EQ(s.left(1, 1), 3u);
    EXPECT_EQ(s.right(0, 0), 2u);
    EXPECT_EQ(s.right(0, 1), 1u);
    EXPECT_EQ(s.right(1, 0), 2u);
    EXPECT_EQ(s.right(1, 1), 3u);

    auto const acc = match_trial_paired(recs, 0.05);
    ASSERT_EQ(acc.size(), 5u);
    auto const g = gamma_min(pairs_from_records(acc), s);
    EXPECT_EQ(g.given_left, (std::vector<double>{0.5, 0.5, 1.0, 2.0 / 3.0}));
    EXPECT_EQ(g.given_right, (std::vector<double>{0.5, 1.0, 0.5, 2.0 / 3.0}));
    EXPECT_EQ(g.min, 0.5);
}

TEST(GammaMin, HandEnumeratedFixtureFromStreams) {
    // Emission indices only attribute a single when the partner station
    // detected something in the same emission, so emissions 3 and 5 drop
    // out of the denominators.
    auto const recs = ten_emissions();
    std::vector<DetectionEvent> l, r;
    for (auto const &rec : recs) {
        double const t = static_cast<double>(rec.trial_index);
        if (rec.a_out != Outcome::None)
            l.push_back({t + rec.delay_a, rec.a_idx, rec.a_out,
                         rec.trial_index});
        if (rec.b_out != Outcome::None)
            r.push_back({t + rec.delay_b, rec.b_idx, rec.b_out,
                         rec.trial_index});
    }
    auto const s = singles_from_streams(l, r, 2, 2);
    EXPECT_EQ(s.left(0, 1), 1u);
    EXPECT_EQ(s.right(1, 0), 1u);
    auto const m = match_streams(l, r, 0.05);
    ASSERT_EQ(m.pairs.size(), 5u);
    auto const g = gamma_min(m.pairs, s);
    EXPECT_EQ(g.given_left, (std::vector<double>{0.5, 1.0, 1.0, 2.0 / 3.0}));
    EXPECT_EQ(g.given_right, (std::vector<double>{0.5, 1.0, 1.0, 2.0 / 3.0}));
    EXPECT_EQ(g.min, 0.5);

    l[0].emission.reset();
    EXPECT_THROW((void)singles_from_streams(l, r, 2, 2), std::invalid_argument);
}

TEST(GammaMin, AllPairedAndNonePaired) {
    SinglesGrids s{CountGrid(2, 2), CountGrid(2, 2)};
    CountGrid pairs(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            s.left(a, b) = s.right(a, b) = 4;
            pairs(a, b) = 4;
        }
    EXPECT_EQ(gamma_min(pairs, s).min, 1.0);
    EXPECT_EQ(gamma_min(CountGrid(2, 2), s).min, 0.0);
    pairs(1, 1) = 5;
    EXPECT_THROW((void)gamma_min(pairs, s), InconsistentCounts);
    s.left(0, 0) = 0;
    EXPECT_THROW((void)gamma_min(CountGrid(2, 2), s), UndefinedEfficiency);
    EXPECT_THROW((void)gamma_min(CountGrid(2, 3), s), InconsistentCounts);
}

TEST(Report, ReferenceTables) {
    auto const rep = assemble_pulsed_report(reference_grid(), kAlice, kBob,
                                            "epr-simple");
    EXPECT_NEAR(rep.S, 2.798796, kPrinted * 10);
    EXPECT_NEAR(*rep.eta_min, 0.8109688, kPrinted);
    EXPECT_NEAR(*rep.detection_bound, 2.932372, kPrinted * 10);
    EXPECT_NEAR(rep.corrs[0][0], -0.7003995, kPrinted);
    EXPECT_NEAR(rep.corrs[0][1], 0.6903536, kPrinted);
    EXPECT_NEAR(rep.corrs[1][0], -0.7151515, kPrinted);
    EXPECT_NEAR(rep.corrs[1][1], -0.6928916, kPrinted);
    EXPECT_NEAR((*rep.eta_given_bob)[0][0], 0.8163043, kPrinted);
    EXPECT_NEAR((*rep.eta_given_alice)[0][0], 0.8178601, kPrinted);
    EXPECT_NEAR(rep.qm[0][0], -std::cos(std::numbers::pi / 4), 1e-15);
    EXPECT_NEAR(rep.qm[0][1], std::cos(std::numbers::pi / 4), 1e-15);
    EXPECT_NEAR(rep.qm_S, kTsirelson, 1e-12);
    EXPECT_EQ(rep.tsirelson, kTsirelson);
    EXPECT_FALSE(rep.clocked.has_value());
    EXPECT_EQ(rep.model, "epr-simple");
    EXPECT_EQ(rep.alice_settings_deg, (std::vector<double>{0, 90}));
    EXPECT_EQ(rep.bob_settings_deg, (std::vector<double>{45, 135}));
}

TEST(Report, PerfectSyntheticTables) {
    TableGrid g(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            g(a, b).add(Outcome::Plus,
                        kChshContrast[a][b] > 0 ? Outcome::Plus : Outcome::Minus,
                        25);
    auto const rep = assemble_pulsed_report(g, kAlice, kBob);
    EXPECT_EQ(rep.S, 4.0);
    EXPECT_EQ(*rep.eta_min, 1.0);
    EXPECT_EQ(*rep.detection_bound, 2.0);
}

TEST(Report, EmptyInputIsAnError) {
    EXPECT_THROW((void)assemble_pulsed_report(TableGrid(2, 2), kAlice, kBob),
                 UndefinedCorrelation);
    EXPECT_THROW((void)assemble_pulsed_report(TableGrid(), kAlice, kBob),
                 InconsistentCounts);
    std::vector<double> const three{0, 1, 2};
    EXPECT_THROW((void)assemble_pulsed_report(reference_grid(), three, kBob),
                 std::invalid_argument);
}

TEST(Report, ClockedSummary) {
    TableGrid g(2, 2);
    std::uint64_t const n[2][2] = {{27416, 27512}, {27345, 27425}};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            g(a, b).add(Outcome::Plus, Outcome::Minus, n[a][b] / 2);
            g(a, b).add(Outcome::Plus, Outcome::Plus, n[a][b] - n[a][b] / 2);
        }
    auto const rep = assemble_clocked_report(g, 199994, 199990, std::nullopt,
                                             kAlice, kBob, "clocked-core");
    ASSERT_TRUE(rep.clocked.has_value());
    EXPECT_EQ(rep.clocked->pairs, 109698u);
    EXPECT_NEAR(rep.clocked->gamma, 0.5485065, kPrinted);
    EXPECT_NEAR(rep.clocked->coincidence_bound, 6.938796, kPrinted * 10);
    EXPECT_FALSE(rep.clocked->by_pair.has_value());
    EXPECT_FALSE(rep.eta_min.has_value());

    TableGrid with_miss = g;
    with_miss(0, 0).add(Outcome::None, Outcome::Plus);
    EXPECT_THROW((void)assemble_clocked_report(with_miss, 199994, 199994,
                                               std::nullopt, kAlice, kBob),
                 InconsistentCounts);
}

} // namespace
} // namespace bellsim
