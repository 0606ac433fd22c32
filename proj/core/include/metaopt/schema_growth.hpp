#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace metaopt {

// Inputs of the reproduction schema growth equation
//   xi(t+1) = xi(t) * fitness_ratio * (1 - p_c * delta/(m-1) - o * p_m)
// for a schema of defining length delta and order o over chromosomes of
// length m in a population of size N.
struct SchemaSpec {
    double xi0 = 5.0;
    double fitness_ratio = 1.9; // f(S) / population average
    double p_c = 0.7;
    double p_m = 0.01;
    std::size_t delta = 11;
    std::size_t order = 6;
    std::size_t chromosome_length = 20;
    std::size_t population_size = 500;
    // Fraction of the population at which the fixed-average-fitness
    // assumption is considered broken and the takeover marker replaces the
    // count.  0.6 reproduces the published tables' markers.
    double takeover_fraction = 0.6;

    void validate() const;
    double survival_factor() const;
};

struct SchemaEntry {
    std::int64_t count = 0; // rounded; capped at the population size
    bool takeover = false;  // assumption broken, rendered as "-"
};

// Expected schema counts per generation.  Entry g (0-based) is generation
// g+1, so entry 0 reports xi0 and each later entry applies one update of the
// real-valued recurrence; counts are rounded only at reporting time.  Once a
// count crosses the takeover threshold every later entry carries the marker.
std::vector<SchemaEntry> schema_growth(const SchemaSpec& spec, std::size_t generations);

// Tabulates one row per parameter variation at the given report columns
// (1-based generation numbers) in the layout of the published tables.
struct SchemaTable {
    std::string row_label;
    std::vector<std::size_t> columns;
    std::vector<std::string> row_names;
    std::vector<std::vector<std::string>> cells; // "-" marks takeover

    std::string to_text() const;
    std::string to_csv() const;
};

SchemaTable schema_fitness_ratio_table(const SchemaSpec& base,
                                       const std::vector<double>& ratios,
                                       const std::vector<std::size_t>& columns);

SchemaTable schema_length_order_table(const SchemaSpec& base,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& dl_o,
                                      const std::vector<std::size_t>& columns);

} // namespace metaopt
