#pragma once

// Actual season results and their classification against simulated
// benchmark intervals.

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "f1bench/calibration.hpp"
#include "f1bench/season_sim.hpp"

namespace f1bench {

enum class Entity { driver, team };
enum class Outcome { above, meets, below };

std::string_view to_string(Entity e) noexcept;
std::string_view to_string(Outcome o) noexcept;
/// Arrow glyph for Markdown tables.
std::string_view glyph(Outcome o) noexcept;
Entity parse_entity(std::string_view text);

struct SeasonRecord {
    std::string entrant_name;
    std::string team_name;
    DriverClass cls = DriverClass::nonelite;
    double points = 0.0;
    Entity entity = Entity::driver;

    Category category() const noexcept { return make_category(cls, entity == Entity::team); }
};

struct Verdict {
    SeasonRecord record;
    SimulationSummary benchmark;
    Outcome outcome = Outcome::meets;
};

/// Outcome of `points` against the closed interval [ci_low, ci_high].
Outcome compare_to_interval(double points, double ci_low, double ci_high) noexcept;

/// Throws std::invalid_argument when the record's category differs from
/// the benchmark's.
Verdict classify(const SeasonRecord& record, const SimulationSummary& benchmark);

using BenchmarkSet = std::map<Category, SimulationSummary>;

/// One verdict per record, in input order. Throws std::invalid_argument
/// naming the record when no benchmark exists for its category.
std::vector<Verdict> classify_season(std::span<const SeasonRecord> records, const BenchmarkSet& benchmarks);

/// Error from ingest_results carrying the 1-based line and field name.
class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t line, std::string field, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// Parses CSV with header `name,team,class,points,entity`. Fields may be
/// double-quoted. Blank lines are skipped. Throws IngestError.
std::vector<SeasonRecord> ingest_results(std::istream& source);

/// Builds one team record per team from driver records, in order of first
/// appearance. Throws std::invalid_argument unless every team has exactly
/// two drivers of the same class.
std::vector<SeasonRecord> aggregate_teams(std::span<const SeasonRecord> records);

} // namespace f1bench
