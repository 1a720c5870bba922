#include "f1bench/benchmark.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

namespace f1bench {

namespace {

constexpr std::string_view kHeader = "name,team,class,points,entity";
constexpr std::string_view kFieldNames[] = {"name", "team", "class", "points", "entity"};

// Splits one CSV line; supports "quoted, fields" with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool field_started_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty() && !field_started_quoted) {
            quoted = true;
            field_started_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
            field_started_quoted = false;
        } else {
            current.push_back(c);
        }
    }
    if (quoted) {
        throw IngestError(line_no, std::string(kFieldNames[std::min<std::size_t>(fields.size(), 4)]),
                          "unterminated quoted field");
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_points(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw IngestError(line_no, "points", "not a number: '" + std::string(text) + "'");
    }
    if (value < 0.0) {
        throw IngestError(line_no, "points", "negative points: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

std::string_view to_string(Entity e) noexcept { return e == Entity::driver ? "driver" : "team"; }

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::above: return "above";
    case Outcome::meets: return "meets";
    case Outcome::below: return "below";
    }
    return "meets";
}

std::string_view glyph(Outcome o) noexcept {
    switch (o) {
    case Outcome::above: return "↑";
    case Outcome::meets: return "→";
    case Outcome::below: return "↓";
    }
    return "→";
}

Entity parse_entity(std::string_view text) {
    if (text == "driver") return Entity::driver;
    if (text == "team") return Entity::team;
    throw std::invalid_argument("unknown entity '" + std::string(text) + "' (expected driver or team)");
}

Outcome compare_to_interval(double points, double ci_low, double ci_high) noexcept {
    if (points > ci_high) return Outcome::above;
    if (points < ci_low) return Outcome::below;
    return Outcome::meets;
}

Verdict classify(const SeasonRecord& record, const SimulationSummary& benchmark) {
    if (record.category() != benchmark.category) {
        throw std::invalid_argument("record '" + record.entrant_name + "' is " +
                                    std::string(to_string(record.category())) + " but benchmark is " +
                                    std::string(to_string(benchmark.category)));
    }
    return {record, benchmark, compare_to_interval(record.points, benchmark.ci_low, benchmark.ci_high)};
}

std::vector<Verdict> classify_season(std::span<const SeasonRecord> records, const BenchmarkSet& benchmarks) {
    std::vector<Verdict> out;
    out.reserve(records.size());
    for (const auto& record : records) {
        const auto it = benchmarks.find(record.category());
        if (it == benchmarks.end()) {
            throw std::invalid_argument("no benchmark for record '" + record.entrant_name + "' (" +
                                        std::string(to_string(record.category())) + ")");
        }
        out.push_back(classify(record, it->second));
    }
    return out;
}

IngestError::IngestError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
      line_(line),
      field_(std::move(field)) {}

std::vector<SeasonRecord> ingest_results(std::istream& source) {
    std::vector<SeasonRecord> records;
    std::set<std::string, std::less<>> seen;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;

    while (std::getline(source, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) {
            view.remove_prefix(3);
        }
        if (trim(view).empty()) continue;

        if (!have_header) {
            if (trim(view) != kHeader) {
                throw IngestError(line_no, "header", "expected '" + std::string(kHeader) + "'");
            }
            have_header = true;
            continue;
        }

        auto fields = split_csv_line(trim(view), line_no);
        if (fields.size() != 5) {
            throw IngestError(line_no, fields.size() < 5 ? std::string(kFieldNames[fields.size()]) : "entity",
                              "expected 5 fields, found " + std::to_string(fields.size()));
        }

        SeasonRecord r;
        r.entrant_name = std::string(trim(fields[0]));
        r.team_name = std::string(trim(fields[1]));
        if (r.entrant_name.empty()) throw IngestError(line_no, "name", "empty entrant name");
        if (r.team_name.empty()) throw IngestError(line_no, "team", "empty team name");
        try {
            r.cls = parse_driver_class(trim(fields[2]));
        } catch (const std::invalid_argument& e) {
            throw IngestError(line_no, "class", e.what());
        }
        r.points = parse_points(trim(fields[3]), line_no);
        try {
            r.entity = parse_entity(trim(fields[4]));
        } catch (const std::invalid_argument& e) {
            throw IngestError(line_no, "entity", e.what());
        }
        if (!seen.insert(r.entrant_name).second) {
            throw IngestError(line_no, "name", "duplicate entrant '" + r.entrant_name + "'");
        }
        records.push_back(std::move(r));
    }
    if (!have_header) {
        throw IngestError(line_no == 0 ? 1 : line_no, "header", "missing header");
    }
    return records;
}

std::vector<SeasonRecord> aggregate_teams(std::span<const SeasonRecord> records) {
    struct Accum {
        SeasonRecord team;
        int drivers = 0;
    };
    std::vector<Accum> teams;
    std::unordered_map<std::string, std::size_t> index;

    for (const auto& r : records) {
        if (r.entity != Entity::driver) continue;
        auto [it, inserted] = index.try_emplace(r.team_name, teams.size());
        if (inserted) {
            teams.push_back({SeasonRecord{r.team_name, r.team_name, r.cls, 0.0, Entity::team}, 0});
        }
        Accum& acc = teams[it->second];
        if (acc.team.cls != r.cls) {
            throw std::invalid_argument("team '" + r.team_name + "' mixes elite and non-elite drivers");
        }
        acc.team.points += r.points;
        ++acc.drivers;
    }

    std::vector<SeasonRecord> out;
    out.reserve(teams.size());
    for (auto& acc : teams) {
        if (acc.drivers != 2) {
            throw std::invalid_argument("team '" + acc.team.team_name + "' has " + std::to_string(acc.drivers) +
                                        " drivers, expected 2");
        }
        out.push_back(std::move(acc.team));
    }
    return out;
}

} // namespace f1bench
