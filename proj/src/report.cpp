#include "f1bench/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "f1bench/analytic_probs.hpp"

namespace f1bench {

namespace {

using nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string csv_quote(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

// Rows of a name/value table rendered in the requested format.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // Leading columns rendered left-aligned in Markdown.
    std::size_t text_columns = 1;

    std::string csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_quote(header[i]);
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(row[i]);
            os << '\n';
        }
        return os.str();
    }

    std::string markdown() const {
        std::ostringstream os;
        os << '|';
        for (const auto& h : header) os << ' ' << h << " |";
        os << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i) os << (i < text_columns ? " :--- |" : " ---: |");
        os << '\n';
        for (const auto& row : rows) {
            os << '|';
            for (const auto& cell : row) os << ' ' << cell << " |";
            os << '\n';
        }
        return os.str();
    }
};

constexpr std::array<std::string_view, 10> kPositionNames = {
    "win", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth", "tenth"};

} // namespace

std::string_view to_string(Format f) noexcept {
    switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::md: return "md";
    }
    return "csv";
}

Format parse_format(std::string_view text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "md" || text == "markdown") return Format::md;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected csv, json or md)");
}

std::string format_exact(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("format_exact: buffer too small");
    return std::string(buf, ptr);
}

std::string render_calibration(const ModelParams& params, Scenario scenario, Format format) {
    const CalibrationResiduals res = residuals(params);
    struct Entry {
        std::string_view name;
        double value;
        std::string_view equation;
        double residual;
    };
    const Entry entries[] = {
        {"mu_elite", params.mu_elite, "", 0.0},
        {"mu_nonelite", params.mu_nonelite, "", 0.0},
        {"sigma_elite", params.sigma_elite, "8*Phi(-3/sigma_elite) = 1", res.elite_win},
        {"sigma_nonelite", params.sigma_nonelite, "12*Phi(-5/sigma_nonelite) = 1", res.nonelite_top9},
        {"cov_elite_pair", params.cov_elite_pair, "sqrt(2*sigma_elite^2 + 2*cov_elite_pair) = 6/4.9",
         res.elite_pair_sum},
        {"cov_nonelite_pair", params.cov_nonelite_pair, "sqrt(2*sigma_nonelite^2 + 2*cov_nonelite_pair) = 10/4.9",
         res.nonelite_pair_sum},
        {"z_table_limit", params.z_table_limit, "", 0.0},
    };

    if (format == Format::json) {
        ordered_json j;
        j["scenario"] = to_string(scenario);
        ordered_json list = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json row;
            row["name"] = e.name;
            row["value"] = e.value;
            if (!e.equation.empty()) {
                row["equation"] = e.equation;
                row["residual"] = e.residual;
            }
            list.push_back(row);
        }
        j["parameters"] = list;
        j["max_abs_residual"] = res.max_abs();
        return j.dump(2) + "\n";
    }

    Table t{{"parameter", "value", "equation", "residual"}, {}};
    for (const auto& e : entries) {
        const bool has_eq = !e.equation.empty();
        const bool md = format == Format::md;
        t.rows.push_back({std::string(e.name), md ? fixed(e.value, 6) : format_exact(e.value),
                          std::string(e.equation), has_eq ? format_exact(e.residual) : ""});
    }
    if (format == Format::md) {
        return "Scenario: " + std::string(to_string(scenario)) + "\n\n" + t.markdown();
    }
    return t.csv();
}

std::string render_probabilities(const ModelParams& params, const SeasonConfig& config, Format format) {
    struct Row {
        std::string name;
        double elite;
        double nonelite;
    };
    std::vector<Row> rows;
    for (int k = 1; k <= 10; ++k) {
        rows.push_back({std::string(kPositionNames[static_cast<std::size_t>(k - 1)]),
                        position_probability(params, DriverClass::elite, k),
                        position_probability(params, DriverClass::nonelite, k)});
    }
    for (auto [name, kind] : {std::pair{"podium", Aggregate::podium}, std::pair{"top8", Aggregate::top8},
                              std::pair{"top10", Aggregate::top10}}) {
        rows.push_back({name, aggregate_probability(params, DriverClass::elite, kind),
                        aggregate_probability(params, DriverClass::nonelite, kind)});
    }
    rows.push_back({"expected_season_points", expected_season_points(params, DriverClass::elite, config),
                    expected_season_points(params, DriverClass::nonelite, config)});

    if (format == Format::json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"probability", r.name}, {"elite", r.elite}, {"nonelite", r.nonelite}});
        }
        return j.dump(2) + "\n";
    }
    Table t{{"probability", "elite", "nonelite"}, {}};
    for (const auto& r : rows) {
        if (format == Format::md) {
            t.rows.push_back({r.name, fixed(r.elite, 6), fixed(r.nonelite, 6)});
        } else {
            t.rows.push_back({r.name, format_exact(r.elite), format_exact(r.nonelite)});
        }
    }
    return format == Format::md ? t.markdown() : t.csv();
}

std::string render_summaries(std::span<const SimulationSummary> summaries, Format format) {
    if (format == Format::json) {
        ordered_json j = ordered_json::array();
        for (const auto& s : summaries) {
            j.push_back({{"category", to_string(s.category)},
                         {"scenario", to_string(s.scenario)},
                         {"mean_points", s.mean_points},
                         {"ci_low", s.ci_low},
                         {"ci_high", s.ci_high},
                         {"n_sims", s.n_sims}});
        }
        return j.dump(2) + "\n";
    }
    Table t{{"category", "scenario", "mean_points", "ci_low", "ci_high", "n_sims"}, {}, 2};
    for (const auto& s : summaries) {
        if (format == Format::md) {
            t.rows.push_back({std::string(to_string(s.category)), std::string(to_string(s.scenario)),
                              fixed(s.mean_points, 3), format_exact(s.ci_low), format_exact(s.ci_high),
                              std::to_string(s.n_sims)});
        } else {
            t.rows.push_back({std::string(to_string(s.category)), std::string(to_string(s.scenario)),
                              format_exact(s.mean_points), format_exact(s.ci_low), format_exact(s.ci_high),
                              std::to_string(s.n_sims)});
        }
    }
    return format == Format::md ? t.markdown() : t.csv();
}

std::string render_verdicts(std::span<const Verdict> verdicts, Format format) {
    if (format == Format::json) {
        ordered_json j = ordered_json::array();
        for (const auto& v : verdicts) {
            j.push_back({{"name", v.record.entrant_name},
                         {"team", v.record.team_name},
                         {"class", to_string(v.record.cls)},
                         {"entity", to_string(v.record.entity)},
                         {"points", v.record.points},
                         {"ci_low", v.benchmark.ci_low},
                         {"ci_high", v.benchmark.ci_high},
                         {"scenario", to_string(v.benchmark.scenario)},
                         {"outcome", to_string(v.outcome)}});
        }
        return j.dump(2) + "\n";
    }
    if (format == Format::md) {
        Table t{{"Entrant", "Team", "Points", "95% CI", "Performance"}, {}, 2};
        for (const auto& v : verdicts) {
            t.rows.push_back({v.record.entrant_name, v.record.team_name, format_exact(v.record.points),
                              "(" + format_exact(v.benchmark.ci_low) + "–" + format_exact(v.benchmark.ci_high) + ")",
                              std::string(glyph(v.outcome))});
        }
        return t.markdown();
    }
    Table t{{"name", "team", "class", "entity", "points", "ci_low", "ci_high", "outcome"}, {}};
    for (const auto& v : verdicts) {
        t.rows.push_back({v.record.entrant_name, v.record.team_name, std::string(to_string(v.record.cls)),
                          std::string(to_string(v.record.entity)), format_exact(v.record.points),
                          format_exact(v.benchmark.ci_low), format_exact(v.benchmark.ci_high),
                          std::string(to_string(v.outcome))});
    }
    return t.csv();
}

} // namespace f1bench
