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

#include "bellsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace bellsim::io {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto const comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

// Line reader that tracks line numbers and strips a trailing '\r'.
class LineReader {
  public:
    LineReader(std::istream &in, std::string_view source)
        : in_(in), source_(source) {}

    // Advances the line number even at end of input, so a complaint about a
    // missing line names the line that was expected.
    bool next(std::string &line) {
        ++number_;
        if (!std::getline(in_, line))
            return false;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    }

    [[noreturn]] void fail(std::string_view what) const {
        throw ParseError(source_, number_, what);
    }

    double real(std::string_view field, std::string_view name) const {
        double v = 0.0;
        auto const [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size() ||
            !std::isfinite(v))
            fail("bad " + std::string(name) + " '" + std::string(field) + "'");
        return v;
    }

    template <typename Int>
    Int integer(std::string_view field, std::string_view name) const {
        Int v{};
        auto const [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size())
            fail("bad " + std::string(name) + " '" + std::string(field) + "'");
        return v;
    }

    Outcome outcome(std::string_view field, bool allow_none) const {
        if (field.empty())
            fail("missing outcome");
        int const v = integer<int>(field[0] == '+' ? field.substr(1) : field,
                                   "outcome");
        if (v == 1)
            return Outcome::Plus;
        if (v == -1)
            return Outcome::Minus;
        if (v == 0 && allow_none)
            return Outcome::None;
        fail("outcome must be " + std::string(allow_none ? "+1, 0 or -1" : "+1 or -1"));
    }

    std::size_t number() const noexcept { return number_; }

  private:
    std::istream &in_;
    std::string_view source_;
    std::size_t number_ = 0;
};

void expect_header(LineReader &reader, std::string_view expected) {
    std::string line;
    if (!reader.next(line))
        reader.fail("empty file");
    if (line != expected)
        reader.fail("expected header '" + std::string(expected) + "'");
}

std::string format_time(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", t);
    return buf;
}

std::string format_outcome(Outcome o) {
    switch (o) {
    case Outcome::Plus:
        return "1";
    case Outcome::Minus:
        return "-1";
    case Outcome::None:
        break;
    }
    return "0";
}

// Index of `deg` in `settings`, appending it when absent.
std::uint32_t intern(std::vector<double> &settings, double deg) {
    auto it = std::find(settings.begin(), settings.end(), deg);
    if (it == settings.end()) {
        settings.push_back(deg);
        return static_cast<std::uint32_t>(settings.size() - 1);
    }
    return static_cast<std::uint32_t>(it - settings.begin());
}

json matrix(Matrix2 const &m) {
    return json::array({json::array({m[0][0], m[0][1]}),
                        json::array({m[1][0], m[1][1]})});
}

json optional_real(std::optional<double> const &v) {
    return v ? json(*v) : json(nullptr);
}

json real_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string sig7(double v) {
    std::ostringstream os;
    os << std::setprecision(7) << v;
    return os.str();
}

std::string degrees(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

ParseError::ParseError(std::string_view source, std::size_t line,
                       std::string_view what)
    : std::runtime_error(std::string(source) + ":" + std::to_string(line) +
                         ": " + std::string(what)),
      line_(line) {}

std::string format_real(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- events

void write_events(std::ostream &out, std::span<DetectionEvent const> events,
                  std::span<double const> settings_deg) {
    bool const with_emission =
        !events.empty() && std::all_of(events.begin(), events.end(),
                                       [](auto const &e) { return e.emission.has_value(); });
    out << (with_emission ? "emission_index,time,setting_deg,outcome\n"
                          : "time,setting_deg,outcome\n");
    for (auto const &ev : events) {
        if (with_emission)
            out << *ev.emission << ',';
        out << format_time(ev.time) << ','
            << format_real(settings_deg[ev.setting_idx]) << ','
            << format_outcome(ev.outcome) << '\n';
    }
}

EventFile read_events(std::istream &in, std::string_view source,
                      std::optional<std::span<double const>> settings_order) {
    LineReader reader(in, source);
    std::string line;
    if (!reader.next(line))
        reader.fail("empty file");

    EventFile file;
    if (line == "emission_index,time,setting_deg,outcome")
        file.has_emission = true;
    else if (line != "time,setting_deg,outcome")
        reader.fail("expected header '[emission_index,]time,setting_deg,outcome'");

    std::vector<double> angle_of_event;
    double last_time = 0.0;
    while (reader.next(line)) {
        if (line.empty())
            continue;
        auto const f = split(line);
        std::size_t const base = file.has_emission ? 1 : 0;
        if (f.size() != base + 3)
            reader.fail("expected " + std::to_string(base + 3) + " fields");
        DetectionEvent ev;
        if (file.has_emission)
            ev.emission = reader.integer<std::uint64_t>(f[0], "emission index");
        ev.time = reader.real(f[base], "time");
        if (ev.time < 0.0)
            reader.fail("negative time");
        if (!file.events.empty() && ev.time < last_time)
            reader.fail("times are not sorted");
        last_time = ev.time;
        double const deg = reader.real(f[base + 1], "setting");
        if (deg < 0.0 || deg >= 360.0)
            reader.fail("setting_deg must lie in [0, 360)");
        ev.outcome = reader.outcome(f[base + 2], false);
        if (settings_order) {
            auto const &order = *settings_order;
            auto it = std::find(order.begin(), order.end(), deg);
            if (it == order.end())
                reader.fail("setting " + format_real(deg) +
                            " is not one of the configured angles");
            ev.setting_idx = static_cast<std::uint32_t>(it - order.begin());
        }
        angle_of_event.push_back(deg);
        file.events.push_back(ev);
    }

    if (settings_order) {
        file.settings_deg.assign(settings_order->begin(), settings_order->end());
    } else {
        file.settings_deg = angle_of_event;
        std::sort(file.settings_deg.begin(), file.settings_deg.end());
        file.settings_deg.erase(
            std::unique(file.settings_deg.begin(), file.settings_deg.end()),
            file.settings_deg.end());
        for (std::size_t i = 0; i < file.events.size(); ++i) {
            auto it = std::lower_bound(file.settings_deg.begin(),
                                       file.settings_deg.end(), angle_of_event[i]);
            file.events[i].setting_idx =
                static_cast<std::uint32_t>(it - file.settings_deg.begin());
        }
    }
    return file;
}

// --------------------------------------------------------------- records

void write_records(std::ostream &out, std::span<TrialRecord const> records,
                   std::span<double const> alice_deg,
                   std::span<double const> bob_deg) {
    out << "trial_index,a_idx,b_idx,a_setting_deg,b_setting_deg,a_out,b_out,"
           "delay_a,delay_b\n";
    for (auto const &r : records) {
        out << r.trial_index << ',' << r.a_idx << ',' << r.b_idx << ','
            << format_real(alice_deg[r.a_idx]) << ','
            << format_real(bob_deg[r.b_idx]) << ',' << format_outcome(r.a_out)
            << ',' << format_outcome(r.b_out) << ',' << format_real(r.delay_a)
            << ',' << format_real(r.delay_b) << '\n';
    }
}

RecordsFile read_records(std::istream &in, std::string_view source) {
    LineReader reader(in, source);
    expect_header(reader, "trial_index,a_idx,b_idx,a_setting_deg,b_setting_deg,"
                          "a_out,b_out,delay_a,delay_b");
    RecordsFile file;
    std::map<std::uint32_t, double> alice, bob;
    auto bind = [&reader](std::map<std::uint32_t, double> &m, std::uint32_t idx,
                          double deg) {
        auto [it, inserted] = m.emplace(idx, deg);
        if (!inserted && it->second != deg)
            reader.fail("setting index " + std::to_string(idx) +
                        " maps to two different angles");
    };

    std::string line;
    while (reader.next(line)) {
        if (line.empty())
            continue;
        auto const f = split(line);
        if (f.size() != 9)
            reader.fail("expected 9 fields");
        TrialRecord r;
        r.trial_index = reader.integer<std::uint64_t>(f[0], "trial index");
        r.a_idx = reader.integer<std::uint32_t>(f[1], "a_idx");
        r.b_idx = reader.integer<std::uint32_t>(f[2], "b_idx");
        bind(alice, r.a_idx, reader.real(f[3], "a_setting_deg"));
        bind(bob, r.b_idx, reader.real(f[4], "b_setting_deg"));
        r.a_out = reader.outcome(f[5], true);
        r.b_out = reader.outcome(f[6], true);
        r.delay_a = reader.real(f[7], "delay_a");
        r.delay_b = reader.real(f[8], "delay_b");
        if (r.delay_a < 0.0 || r.delay_b < 0.0)
            reader.fail("negative delay");
        file.records.push_back(r);
    }

    auto dense = [&reader](std::map<std::uint32_t, double> const &m) {
        std::vector<double> out;
        for (auto const &[idx, deg] : m) {
            if (idx != out.size())
                reader.fail("setting indices are not contiguous from 0");
            out.push_back(deg);
        }
        return out;
    };
    file.alice_settings_deg = dense(alice);
    file.bob_settings_deg = dense(bob);
    return file;
}

// ---------------------------------------------------------------- tables

void write_tables(std::ostream &out, TableGrid const &tables,
                  std::span<double const> alice_deg,
                  std::span<double const> bob_deg) {
    static constexpr Outcome kOrder[] = {Outcome::Plus, Outcome::None,
                                         Outcome::Minus};
    out << "alice_setting_deg,bob_setting_deg,alice_out,bob_out,count\n";
    for (std::size_t i = 0; i < tables.n_alice(); ++i) {
        for (std::size_t j = 0; j < tables.n_bob(); ++j) {
            for (Outcome a : kOrder) {
                for (Outcome b : kOrder) {
                    out << format_real(alice_deg[i]) << ','
                        << format_real(bob_deg[j]) << ',' << format_outcome(a)
                        << ',' << format_outcome(b) << ','
                        << tables(i, j).at(a, b) << '\n';
                }
            }
        }
    }
}

namespace {

TablesFile read_legacy_tables(LineReader &reader, std::string first) {
    TablesFile file;
    file.legacy = true;
    file.tables = TableGrid(2, 2);
    std::string line = std::move(first);
    std::size_t row = 0;
    do {
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        if (row == 12)
            reader.fail("legacy tables have exactly 12 rows");
        if (tokens.size() != 3)
            reader.fail("legacy table rows have 3 counts");
        std::size_t const block = row / 3;
        std::size_t const alice_row = row % 3;
        auto &table = file.tables(block / 2, block % 2);
        for (std::size_t c = 0; c < 3; ++c)
            table.counts[alice_row][c] =
                reader.integer<std::uint64_t>(tokens[c], "count");
        ++row;
    } while (reader.next(line));
    if (row != 12)
        reader.fail("legacy tables have exactly 12 rows, found " +
                    std::to_string(row));
    return file;
}

} // namespace

TablesFile read_tables(std::istream &in, std::string_view source) {
    LineReader reader(in, source);
    std::string line;
    do {
        if (!reader.next(line))
            reader.fail("empty file");
    } while (line.find_first_not_of(" \t") == std::string::npos);

    auto const first = line.find_first_not_of(" \t");
    if (std::isdigit(static_cast<unsigned char>(line[first])))
        return read_legacy_tables(reader, line);

    if (line != "alice_setting_deg,bob_setting_deg,alice_out,bob_out,count")
        reader.fail("expected header "
                    "'alice_setting_deg,bob_setting_deg,alice_out,bob_out,count'");

    struct Cell {
        std::uint32_t a, b;
        Outcome ao, bo;
        std::uint64_t n;
    };
    std::vector<Cell> cells;
    TablesFile file;
    while (reader.next(line)) {
        if (line.empty())
            continue;
        auto const f = split(line);
        if (f.size() != 5)
            reader.fail("expected 5 fields");
        Cell c;
        c.a = intern(file.alice_settings_deg, reader.real(f[0], "alice setting"));
        c.b = intern(file.bob_settings_deg, reader.real(f[1], "bob setting"));
        c.ao = reader.outcome(f[2], true);
        c.bo = reader.outcome(f[3], true);
        c.n = reader.integer<std::uint64_t>(f[4], "count");
        cells.push_back(c);
    }
    file.tables = TableGrid(file.alice_settings_deg.size(),
                            file.bob_settings_deg.size());
    for (auto const &c : cells)
        file.tables(c.a, c.b).add(c.ao, c.bo, c.n);
    return file;
}

// ----------------------------------------------------------- pairs, curve

void write_pairs(std::ostream &out, std::span<CoincidencePair const> pairs,
                 std::span<double const> left_deg,
                 std::span<double const> right_deg) {
    out << "left_emission,left_time,left_setting_deg,left_outcome,"
           "right_emission,right_time,right_setting_deg,right_outcome\n";
    auto emission = [](DetectionEvent const &ev) {
        return ev.emission ? std::to_string(*ev.emission) : std::string();
    };
    for (auto const &p : pairs) {
        out << emission(p.left) << ',' << format_time(p.left.time) << ','
            << format_real(left_deg[p.left.setting_idx]) << ','
            << format_outcome(p.left.outcome) << ',' << emission(p.right)
            << ',' << format_time(p.right.time) << ','
            << format_real(right_deg[p.right.setting_idx]) << ','
            << format_outcome(p.right.outcome) << '\n';
    }
}

void write_curve(std::ostream &out, SweepCurve const &curve, double beta_deg) {
    out << "angle_deg,correlation,neg_cosine_reference,acceptance_rate\n";
    for (std::size_t i = 0; i < curve.angles_deg.size(); ++i) {
        double const reference =
            -std::cos((curve.angles_deg[i] - beta_deg) * kDegree);
        out << format_real(curve.angles_deg[i]) << ','
            << format_real(curve.correlation[i]) << ','
            << format_real(reference) << ','
            << format_real(curve.acceptance_rate[i]) << '\n';
    }
}

// ---------------------------------------------------------------- report

std::string report_to_json(ChshReport const &rep) {
    json j;
    j["model"] = rep.model;
    j["experiment"] = rep.clocked ? "clocked" : "pulsed";
    j["alice_settings_deg"] = rep.alice_settings_deg;
    j["bob_settings_deg"] = rep.bob_settings_deg;

    json counts = json::array();
    for (std::size_t i = 0; i < rep.counts.n_alice(); ++i) {
        for (std::size_t k = 0; k < rep.counts.n_bob(); ++k) {
            auto const &t = rep.counts(i, k);
            json table = json::array();
            for (auto const &row : t.counts)
                table.push_back(json::array({row[0], row[1], row[2]}));
            counts.push_back({{"alice_idx", i},
                              {"bob_idx", k},
                              {"alice_setting_deg", rep.alice_settings_deg.at(i)},
                              {"bob_setting_deg", rep.bob_settings_deg.at(k)},
                              {"n_ab", t.joint_detections()},
                              {"total", t.total()},
                              {"table", table}});
        }
    }
    j["counts"] = counts;
    j["counts_layout"] = "table rows: alice outcome (+1, 0, -1); "
                         "columns: bob outcome (+1, 0, -1)";
    j["corrs"] = matrix(rep.corrs);
    j["contrast"] = json::array(
        {json::array({rep.contrast[0][0], rep.contrast[0][1]}),
         json::array({rep.contrast[1][0], rep.contrast[1][1]})});
    j["S"] = rep.S;
    j["qm"] = matrix(rep.qm);
    j["qm_S"] = rep.qm_S;
    j["tsirelson"] = rep.tsirelson;

    j["eta_given_bob"] = rep.eta_given_bob ? matrix(*rep.eta_given_bob) : json(nullptr);
    j["eta_given_alice"] =
        rep.eta_given_alice ? matrix(*rep.eta_given_alice) : json(nullptr);
    j["eta_min"] = optional_real(rep.eta_min);
    j["detection_bound"] = optional_real(rep.detection_bound);

    if (rep.clocked) {
        auto const &c = *rep.clocked;
        j["pairs"] = c.pairs;
        j["singles_left"] = c.singles_left;
        j["singles_right"] = c.singles_right;
        j["gamma"] = c.gamma;
        j["coincidence_bound"] = c.coincidence_bound;
        if (c.by_pair) {
            j["gamma_by_pair"] = {{"given_left", c.by_pair->given_left},
                                  {"given_right", c.by_pair->given_right}};
            j["gamma_min"] = c.by_pair->min;
            j["coincidence_bound_gamma_min"] = real_or_null(*c.coincidence_bound_min);
        } else {
            j["gamma_by_pair"] = nullptr;
            j["gamma_min"] = nullptr;
            j["coincidence_bound_gamma_min"] = nullptr;
        }
        j["coincidence_bound_status"] = "conjectured";
    } else {
        for (auto const *key :
             {"pairs", "singles_left", "singles_right", "gamma", "coincidence_bound",
              "gamma_by_pair", "gamma_min", "coincidence_bound_gamma_min",
              "coincidence_bound_status"})
            j[key] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(ChshReport const &rep) {
    std::ostringstream os;
    os << "key,value\n";
    auto row = [&os](std::string const &key, std::string const &value) {
        os << key << ',' << value << '\n';
    };
    auto real = [&row](std::string const &key, double v) { row(key, format_real(v)); };
    auto opt = [&row](std::string const &key, std::optional<double> const &v) {
        row(key, v ? format_real(*v) : std::string());
    };
    auto mat = [&real](std::string const &key, Matrix2 const &m) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 0; k < 2; ++k)
                real(key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                     m[i][k]);
    };

    row("model", rep.model);
    row("experiment", rep.clocked ? "clocked" : "pulsed");
    for (std::size_t i = 0; i < rep.alice_settings_deg.size(); ++i)
        real("alice_settings_deg[" + std::to_string(i) + "]", rep.alice_settings_deg[i]);
    for (std::size_t i = 0; i < rep.bob_settings_deg.size(); ++i)
        real("bob_settings_deg[" + std::to_string(i) + "]", rep.bob_settings_deg[i]);
    for (std::size_t i = 0; i < rep.counts.n_alice(); ++i)
        for (std::size_t k = 0; k < rep.counts.n_bob(); ++k)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    row("counts[" + std::to_string(i) + "][" + std::to_string(k) +
                            "][" + std::to_string(r) + "][" + std::to_string(c) + "]",
                        std::to_string(rep.counts(i, k).counts[r][c]));
    mat("corrs", rep.corrs);
    real("S", rep.S);
    mat("qm", rep.qm);
    real("qm_S", rep.qm_S);
    real("tsirelson", rep.tsirelson);
    if (rep.eta_given_bob)
        mat("eta_given_bob", *rep.eta_given_bob);
    if (rep.eta_given_alice)
        mat("eta_given_alice", *rep.eta_given_alice);
    opt("eta_min", rep.eta_min);
    opt("detection_bound", rep.detection_bound);
    if (rep.clocked) {
        auto const &c = *rep.clocked;
        row("pairs", std::to_string(c.pairs));
        row("singles_left", std::to_string(c.singles_left));
        row("singles_right", std::to_string(c.singles_right));
        real("gamma", c.gamma);
        real("coincidence_bound", c.coincidence_bound);
        if (c.by_pair) {
            for (std::size_t i = 0; i < c.by_pair->given_left.size(); ++i) {
                real("gamma_by_pair.given_left[" + std::to_string(i) + "]",
                     c.by_pair->given_left[i]);
                real("gamma_by_pair.given_right[" + std::to_string(i) + "]",
                     c.by_pair->given_right[i]);
            }
        }
        opt("gamma_min", c.by_pair ? std::optional<double>(c.by_pair->min)
                                   : std::nullopt);
        opt("coincidence_bound_gamma_min", c.coincidence_bound_min);
        row("coincidence_bound_status", "conjectured");
    }
    return os.str();
}

std::string report_summary(ChshReport const &rep) {
    std::ostringstream os;
    if (!rep.model.empty())
        os << "Model: " << rep.model << '\n';
    if (rep.clocked) {
        os << "No. of detected particles\n"
           << "Alice: " << rep.clocked->singles_left << '\n'
           << "Bob:   " << rep.clocked->singles_right << "\n\n";
    }
    os << "Settings      N_ab        rho         QM\n";
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            std::ostringstream label;
            label << degrees(rep.alice_settings_deg[i]) << ", "
                  << degrees(rep.bob_settings_deg[k]);
            os << std::left << std::setw(14) << label.str() << std::setw(12)
               << rep.counts(i, k).joint_detections() << std::setw(12)
               << sig7(rep.corrs[i][k]) << std::showpos << std::fixed
               << std::setprecision(2) << rep.qm[i][k] << std::noshowpos
               << std::defaultfloat << std::setprecision(6) << '\n';
        }
    }
    char chsh_line[96];
    std::snprintf(chsh_line, sizeof chsh_line, "CHSH: <= 2.0, Sim: %.3f, QM: %.3f\n",
                  rep.S, rep.qm_S);
    os << '\n' << chsh_line;
    os << "S = " << sig7(rep.S) << "  (Tsirelson 2*sqrt(2) = "
       << sig7(rep.tsirelson) << ")\n";
    if (rep.eta_min) {
        os << "eta_min = " << sig7(*rep.eta_min)
           << "  detection bound 4/eta - 2 = " << sig7(*rep.detection_bound)
           << '\n';
    }
    if (rep.clocked) {
        auto const &c = *rep.clocked;
        os << "pairs = " << c.pairs << "  gamma = " << sig7(c.gamma)
           << "  conjectured bound 6/gamma - 4 = " << sig7(c.coincidence_bound)
           << '\n';
        if (c.by_pair) {
            os << "gamma_min = " << sig7(c.by_pair->min)
               << "  conjectured bound 6/gamma_min - 4 = "
               << sig7(*c.coincidence_bound_min) << '\n';
        }
    }
    return os.str();
}

// ----------------------------------------------------------- OutputFile

OutputFile::OutputFile(std::filesystem::path path)
    : path_(std::move(path)), tmp_(path_.string() + ".tmp") {
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_)
        throw std::runtime_error("cannot open '" + tmp_.string() + "' for writing");
}

OutputFile::~OutputFile() {
    if (!committed_) {
        out_.close();
        std::error_code ec;
        std::filesystem::remove(tmp_, ec);
    }
}

void OutputFile::commit() {
    out_.flush();
    if (!out_)
        throw std::runtime_error("write to '" + tmp_.string() + "' failed");
    out_.close();
    std::filesystem::rename(tmp_, path_);
    committed_ = true;
}

} // namespace bellsim::io
