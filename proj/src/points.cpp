#include "f1bench/points.hpp"

#include <stdexcept>
#include <string>

namespace f1bench {

int PointsTable::points(RaceKind kind, int position) const {
    if (position < 1 || position > kGridSize) {
        throw std::out_of_range("finishing position " + std::to_string(position) + " outside 1..20");
    }
    return points_unchecked(kind, position);
}

void SeasonConfig::validate() const {
    if (races_full < 0 || races_sprint < 0) {
        throw std::invalid_argument("race counts must be non-negative");
    }
    if (n_sims == 0) {
        throw std::invalid_argument("n_sims must be at least 1");
    }
}

} // namespace f1bench
