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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds are fixed; nothing is retried.

#include "bellsim/analysis.hpp"
#include "bellsim/cli.hpp"
#include "bellsim/coincidence.hpp"
#include "bellsim/sim_engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bellsim;
namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kChshSeed = 1234;
constexpr std::uint64_t kSweepSeed = 9875;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, std::string const &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

fs::path scratch() {
    static fs::path const dir = [] {
        auto d = fs::temp_directory_path() / "bellsim_acceptance";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(fs::path const &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli_run(std::vector<std::string> const &args) {
    std::ostringstream out, err;
    int const rc = cli::run(args, out, err);
    if (rc != 0)
        std::fprintf(stderr, "%s", err.str().c_str());
    return rc;
}

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

// Correlations of the reference run, indexed [alice][bob].
constexpr double kRefCorrs[2][2] = {{-0.7003995, 0.6903536},
                                    {-0.7151515, -0.6928916}};

json const &epr_simple_report() {
    static json const rep = [] {
        auto const out = scratch() / "epr_simple.json";
        if (cli_run({"simulate", "--model", "epr-simple", "--n", "4000000",
                     "--seed", std::to_string(kChshSeed), "--angles-a", "0,90",
                     "--angles-b", "45,135", "--out", out.string()}) != 0)
            return json();
        return json::parse(slurp(out));
    }();
    return rep;
}

Verdict ac1() {
    Verdict v;
    auto const &rep = epr_simple_report();
    if (rep.is_null()) {
        v.check(false, "simulate failed");
        return v;
    }
    double const S = rep["S"].get<double>();
    v.detail << "S=" << S;
    v.check(within(S, 2.78, 2.82), "S in [2.78, 2.82]");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double const r = rep["corrs"][a][b].get<double>();
            double const dev = std::abs(r - kRefCorrs[a][b]);
            v.detail << " rho" << a << b << "=" << r << " (dev " << dev << ")";
            v.check(dev <= 0.015, "rho[" + std::to_string(a) + "][" +
                                      std::to_string(b) + "] within 0.015");
        }
    return v;
}

Verdict ac2() {
    Verdict v;
    auto const &rep = epr_simple_report();
    if (rep.is_null()) {
        v.check(false, "simulate failed");
        return v;
    }
    double const eta = rep["eta_min"].get<double>();
    double const bound = rep["detection_bound"].get<double>();
    double const S = rep["S"].get<double>();
    v.detail << "eta_min=" << eta << " bound=" << bound << " S=" << S;
    v.check(within(eta, 0.805, 0.817), "eta_min in [0.805, 0.817]");
    v.check(within(bound, 2.89, 2.97), "bound in [2.89, 2.97]");
    v.check(S < bound, "S < bound");
    return v;
}

Verdict ac3() {
    Verdict v;
    auto const out = scratch() / "golden.json";
    if (cli_run({"analyze", "--tables",
                 BELLSIM_TEST_FIXTURES "/reference_counts.txt", "--out",
                 out.string()}) != 0) {
        v.check(false, "analyze failed");
        return v;
    }
    auto const rep = json::parse(slurp(out));
    auto sig7 = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.7g", x);
        return std::string(buf);
    };
    std::string const S = sig7(rep["S"].get<double>());
    std::string const eta = sig7(rep["eta_min"].get<double>());
    std::string const bound = sig7(rep["detection_bound"].get<double>());
    v.detail << "S=" << S << " eta_min=" << eta << " bound=" << bound;
    v.check(S == "2.798796", "S");
    v.check(eta == "0.8109688", "eta_min");
    v.check(bound == "2.932372", "detection_bound");
    return v;
}

SweepCurve sweep_curve(ModelId model) {
    return sweep(RunConfig::chsh(model, 0, kSweepSeed), 0.0, 1.0, 1000000);
}

Verdict ac4() {
    Verdict v;
    auto const c = sweep_curve(ModelId::Pearle);
    double worst = 0.0, at = 0.0;
    for (std::size_t i = 0; i < c.angles_deg.size(); ++i) {
        double const dev =
            std::abs(c.correlation[i] + std::cos(c.angles_deg[i] * kDegree));
        if (!(dev <= worst)) {
            worst = dev;
            at = c.angles_deg[i];
        }
    }
    v.detail << "max |corr + cos| = " << worst << " at " << at << " deg";
    v.check(worst <= 0.01, "max deviation <= 0.01");
    return v;
}

Verdict ac5() {
    Verdict v;
    auto const c = sweep_curve(ModelId::EprSimple);
    auto dev = [&](std::size_t i) {
        return std::abs(c.correlation[i] + std::cos(c.angles_deg[i] * kDegree));
    };
    double worst = 0.0, at = 0.0;
    for (std::size_t i = 0; i < c.angles_deg.size(); ++i) {
        if (i % 90 == 0)
            continue;
        if (dev(i) > worst) {
            worst = dev(i);
            at = c.angles_deg[i];
        }
    }
    v.detail << "max intermediate dev " << worst << " at " << at
             << " deg; dev(0)=" << dev(0) << " dev(90)=" << dev(90)
             << " dev(180)=" << dev(180);
    v.check(worst > 0.005, "intermediate deviation > 0.005");
    for (std::size_t i : {0u, 90u, 180u})
        v.check(dev(i) <= 0.002, "dev at " + std::to_string(i) + " <= 0.002");
    return v;
}

Verdict ac6() {
    Verdict v;
    auto const out = scratch() / "clocked_core.json";
    if (cli_run({"simulate", "--model", "clocked-core", "--n", "200000",
                 "--seed", std::to_string(kChshSeed), "--out",
                 out.string()}) != 0) {
        v.check(false, "simulate failed");
        return v;
    }
    auto const rep = json::parse(slurp(out));
    double const S = rep["S"].get<double>();
    double const gamma = rep["gamma"].get<double>();
    double const bound = rep["coincidence_bound"].get<double>();
    v.detail << "S=" << S << " gamma=" << gamma << " bound=" << bound;
    v.check(within(S, 2.74, 2.84), "S in [2.74, 2.84]");
    v.check(within(gamma, 0.50, 0.60), "gamma in [0.50, 0.60]");
    v.check(within(bound, 6.0, 8.0), "bound in [6, 8]");
    return v;
}

Verdict ac7() {
    Verdict v;
    auto const c = sweep_curve(ModelId::ClockedSimplified);
    v.detail << "corr(0)=" << c.correlation[0]
             << " acceptance(0)=" << c.acceptance_rate[0];
    v.check(c.correlation[0] == -1.0, "correlation exactly -1");
    v.check(c.acceptance_rate[0] == 1.0, "acceptance exactly 1");
    return v;
}

Verdict ac8() {
    Verdict v;
    auto config = RunConfig::chsh(ModelId::ClockedOptimized, 100000, kChshSeed);
    config.params.coinc_window = 1e-6;
    auto const run = run_clocked(config);
    std::uint64_t mismatches = 0, accepted = 0;
    for (auto const &rec : run.records) {
        TrialDraws const d = draw_trial(config.seed, rec.trial_index);
        HiddenPair const hv = sample_hidden(config.model, d.u1, d.u2, d.u3,
                                            d.u4, config.params);
        double const alpha = config.alice_settings[rec.a_idx];
        double const beta = config.bob_settings[rec.b_idx];
        bool const predicate = hv.p < std::abs(std::cos(hv.e - alpha)) &&
                               hv.p < std::abs(std::cos(hv.e - beta));
        bool const acc =
            std::abs(rec.delay_a - rec.delay_b) < config.params.coinc_window;
        accepted += acc;
        mismatches += acc != predicate;
    }
    v.detail << "trials=" << run.records.size() << " accepted=" << accepted
             << " mismatches=" << mismatches;
    v.check(mismatches == 0, "decision equals predicate on every trial");
    return v;
}

Verdict ac9() {
    Verdict v;
    v.check(detection_bound(1.0) == 2.0, "detection_bound(1)");
    v.check(detection_bound(2.0 / 3.0) == 4.0, "detection_bound(2/3)");
    v.check(coincidence_bound(1.0) == 2.0, "coincidence_bound(1)");
    v.check(coincidence_bound(0.75) == 4.0, "coincidence_bound(3/4)");
    v.detail << "4/eta-2 at 1, 2/3 and 6/gamma-4 at 1, 3/4";
    return v;
}

Verdict ac10() {
    Verdict v;
    auto d = scratch();
    auto twice = [&](std::vector<std::string> args, std::string const &flag,
                     std::string const &name) {
        auto a = args, b = args;
        a.insert(a.end(), {flag, (d / (name + "_1")).string()});
        b.insert(b.end(), {flag, (d / (name + "_2")).string()});
        bool const ran = cli_run(a) == 0 && cli_run(b) == 0;
        bool const same = ran && slurp(d / (name + "_1")) ==
                                     slurp(d / (name + "_2"));
        v.check(same, name + " byte-identical");
        return same;
    };
    twice({"simulate", "--model", "pearle", "--n", "200000", "--seed", "5"},
          "--out", "pulsed");
    twice({"simulate", "--model", "clocked-core", "--n", "50000", "--seed", "5",
           "--pairing", "stream"},
          "--events-left", "events");
    twice({"sweep", "--model", "epr-simple", "--step", "5", "--m", "50000",
           "--seed", "5"},
          "--out", "sweep");

    auto const pc = RunConfig::chsh(ModelId::EprSimple, 300001, 6);
    v.check(run_pulsed(pc, {1}) == run_pulsed(pc, {4}), "pulsed 1 vs 4 threads");
    auto const cc = RunConfig::chsh(ModelId::ClockedCore, 50001, 6);
    auto const c1 = run_clocked(cc, {1});
    auto const c4 = run_clocked(cc, {4});
    v.check(c1.left == c4.left && c1.right == c4.right &&
                c1.records == c4.records,
            "clocked 1 vs 4 threads");
    auto const s1 = sweep(cc, 0.2, 2, 50000, {1});
    auto const s4 = sweep(cc, 0.2, 2, 50000, {4});
    v.check(s1.accepted == s4.accepted &&
                std::equal(s1.correlation.begin(), s1.correlation.end(),
                           s4.correlation.begin(),
                           [](double x, double y) {
                               return x == y || (std::isnan(x) && std::isnan(y));
                           }),
            "sweep 1 vs 4 threads");
    v.detail << "files and thread counts compared";
    return v;
}

// Exhaustive search for the maximum-size, minimum-total-gap matchings.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
optimal_matchings(std::vector<double> const &l, std::vector<double> const &r,
                  double w) {
    using Matching = std::vector<std::pair<std::size_t, std::size_t>>;
    std::vector<Matching> best;
    std::size_t best_size = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    Matching cur;
    std::vector<bool> used(r.size());
    std::function<void(std::size_t, double)> rec = [&](std::size_t i,
                                                       double cost) {
        if (i == l.size()) {
            if (cur.size() > best_size ||
                (cur.size() == best_size && cost < best_cost - 1e-15)) {
                best_size = cur.size();
                best_cost = cost;
                best.assign(1, cur);
            } else if (cur.size() == best_size &&
                       std::abs(cost - best_cost) <= 1e-15) {
                best.push_back(cur);
            }
            return;
        }
        rec(i + 1, cost);
        for (std::size_t j = 0; j < r.size(); ++j) {
            double const dt = std::abs(l[i] - r[j]);
            if (used[j] || !(dt < w))
                continue;
            used[j] = true;
            cur.emplace_back(i, j);
            rec(i + 1, cost + dt);
            cur.pop_back();
            used[j] = false;
        }
    };
    rec(0, 0.0);
    return best;
}

Verdict ac11() {
    Verdict v;
    std::mt19937_64 gen(kChshSeed);
    std::uniform_int_distribution<int> count(0, 5), tick(0, 40), wsel(1, 8),
        bit(0, 1);
    std::uniform_real_distribution<double> delay(0.0, 0.3);
    std::size_t double_booked = 0, outside = 0, aligned_mismatch = 0,
                oracle_mismatch = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        // Free-form fixture on a coarse grid.
        std::vector<DetectionEvent> l, r;
        int const nl = count(gen), nr = count(gen);
        for (int i = 0; i < nl; ++i)
            l.push_back({tick(gen) * 0.125, 0, Outcome::Plus, std::nullopt});
        for (int i = 0; i < nr; ++i)
            r.push_back({tick(gen) * 0.125, 0, Outcome::Minus, std::nullopt});
        auto by_time = [](auto const &x, auto const &y) { return x.time < y.time; };
        std::sort(l.begin(), l.end(), by_time);
        std::sort(r.begin(), r.end(), by_time);
        for (std::size_t i = 0; i < l.size(); ++i)
            l[i].emission = i;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i].emission = i;
        double const w = wsel(gen) * 0.125;
        auto const m = match_streams(l, r, w);
        std::set<std::uint64_t> seen_l, seen_r;
        for (auto const &p : m.pairs) {
            double_booked += !seen_l.insert(*p.left.emission).second;
            double_booked += !seen_r.insert(*p.right.emission).second;
            outside += !(std::abs(p.left.time - p.right.time) < w);
        }
        if (m.pairs.size() + m.unmatched_left != l.size() ||
            m.pairs.size() + m.unmatched_right != r.size())
            ++double_booked;

        // Trial-aligned fixture: emission k at time k, delays below 0.3.
        int const n = count(gen);
        std::vector<TrialRecord> recs(n);
        std::vector<DetectionEvent> tl, tr;
        std::vector<double> lt, rt;
        for (int k = 0; k < n; ++k) {
            auto &x = recs[k];
            x.trial_index = k;
            x.a_idx = bit(gen);
            x.b_idx = bit(gen);
            x.a_out = bit(gen) ? Outcome::Plus : Outcome::Minus;
            x.b_out = bit(gen) ? Outcome::Plus : Outcome::Minus;
            x.delay_a = delay(gen);
            x.delay_b = delay(gen);
            tl.push_back({k + x.delay_a, x.a_idx, x.a_out,
                          static_cast<std::uint64_t>(k)});
            tr.push_back({k + x.delay_b, x.b_idx, x.b_out,
                          static_cast<std::uint64_t>(k)});
            lt.push_back(tl.back().time);
            rt.push_back(tr.back().time);
        }
        double const tw = 0.1;
        auto const acc = match_trial_paired(recs, tw);
        auto const sm = match_streams(tl, tr, tw);
        bool same = sm.pairs.size() == acc.size();
        for (std::size_t k = 0; same && k < acc.size(); ++k)
            same = *sm.pairs[k].left.emission == acc[k].trial_index &&
                   *sm.pairs[k].right.emission == acc[k].trial_index;
        aligned_mismatch += !same;

        auto const best = optimal_matchings(lt, rt, tw);
        std::vector<std::pair<std::size_t, std::size_t>> got;
        for (auto const &p : sm.pairs)
            got.emplace_back(*p.left.emission, *p.right.emission);
        oracle_mismatch += !(best.size() == 1 && best[0] == got);
    }
    v.detail << "fixtures=1000 double_booked=" << double_booked
             << " outside_window=" << outside
             << " trial_paired_mismatch=" << aligned_mismatch
             << " enumeration_mismatch=" << oracle_mismatch;
    v.check(double_booked == 0, "no double booking");
    v.check(outside == 0, "all pairs inside window");
    v.check(aligned_mismatch == 0, "equals trial pairing");
    v.check(oracle_mismatch == 0, "equals enumeration oracle");
    return v;
}

} // namespace

int main() {
    struct Criterion {
        char const *name;
        char const *title;
        Verdict (*fn)();
    };
    Criterion const criteria[] = {
        {"AC1", "epr-simple CHSH", ac1},
        {"AC2", "epr-simple efficiency", ac2},
        {"AC3", "golden arithmetic", ac3},
        {"AC4", "Pearle exactness", ac4},
        {"AC5", "epr-simple anomaly", ac5},
        {"AC6", "clocked-core CHSH and gamma", ac6},
        {"AC7", "equal-setting identity", ac7},
        {"AC8", "optimized-equivalence oracle", ac8},
        {"AC9", "bound formulas", ac9},
        {"AC10", "determinism", ac10},
        {"AC11", "matcher properties", ac11},
    };
    int failures = 0;
    for (auto const &c : criteria) {
        auto const t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.fn();
        } catch (std::exception const &e) {
            v.check(false, std::string("exception: ") + e.what());
        }
        double const secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        std::printf("%-4s %s  %s: %s (%.1fs)\n", c.name,
                    v.pass ? "PASS" : "FAIL", c.title, v.detail.str().c_str(),
                    secs);
        std::fflush(stdout);
        failures += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    fs::remove_all(scratch());
    return failures == 0 ? 0 : 1;
}
