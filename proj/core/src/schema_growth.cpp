#include "metaopt/schema_growth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace metaopt {

void SchemaSpec::validate() const {
    if (chromosome_length < 2) throw std::invalid_argument("SchemaSpec: chromosome too short");
    if (delta > chromosome_length - 1)
        throw std::invalid_argument("SchemaSpec: defining length out of range");
    if (order > chromosome_length) throw std::invalid_argument("SchemaSpec: order out of range");
    if (!(xi0 >= 0.0)) throw std::invalid_argument("SchemaSpec: xi0 must be non-negative");
    if (p_c < 0.0 || p_c > 1.0 || p_m < 0.0 || p_m > 1.0)
        throw std::invalid_argument("SchemaSpec: rates out of [0, 1]");
    if (population_size == 0) throw std::invalid_argument("SchemaSpec: empty population");
    if (!(takeover_fraction > 0.0) || takeover_fraction > 1.0)
        throw std::invalid_argument("SchemaSpec: takeover fraction out of (0, 1]");
}

double SchemaSpec::survival_factor() const {
    return 1.0 - p_c * static_cast<double>(delta) / static_cast<double>(chromosome_length - 1) -
           static_cast<double>(order) * p_m;
}

std::vector<SchemaEntry> schema_growth(const SchemaSpec& spec, std::size_t generations) {
    spec.validate();
    if (generations < 1) throw std::invalid_argument("schema_growth: need at least one generation");

    const double growth = spec.fitness_ratio * spec.survival_factor();
    const double n = static_cast<double>(spec.population_size);
    const double threshold = spec.takeover_fraction * n;

    std::vector<SchemaEntry> out;
    out.reserve(generations);
    double xi = spec.xi0;
    bool takeover = false;
    for (std::size_t g = 0; g < generations; ++g) {
        if (g > 0) xi = std::max(xi * growth, 0.0);
        SchemaEntry e;
        const double reported = std::min(std::round(xi), n);
        takeover = takeover || reported > threshold;
        e.takeover = takeover;
        e.count = static_cast<std::int64_t>(reported);
        out.push_back(e);
    }
    return out;
}

namespace {

SchemaTable tabulate(const std::vector<std::string>& row_names,
                     const std::vector<SchemaSpec>& specs, const std::string& row_label,
                     const std::vector<std::size_t>& columns) {
    if (columns.empty()) throw std::invalid_argument("schema table: no report columns");
    std::size_t generations = *std::max_element(columns.begin(), columns.end());

    SchemaTable table;
    table.row_label = row_label;
    table.columns = columns;
    table.row_names = row_names;
    for (const auto& spec : specs) {
        const auto series = schema_growth(spec, generations);
        std::vector<std::string> row;
        row.reserve(columns.size());
        for (std::size_t col : columns) {
            const SchemaEntry& e = series[col - 1];
            row.push_back(e.takeover ? "-" : std::to_string(e.count));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

} // namespace

SchemaTable schema_fitness_ratio_table(const SchemaSpec& base, const std::vector<double>& ratios,
                                       const std::vector<std::size_t>& columns) {
    std::vector<std::string> names;
    std::vector<SchemaSpec> specs;
    for (double r : ratios) {
        SchemaSpec s = base;
        s.fitness_ratio = r;
        specs.push_back(s);
        std::ostringstream os;
        os << r;
        names.push_back(os.str());
    }
    return tabulate(names, specs, "f(S)/F", columns);
}

SchemaTable schema_length_order_table(const SchemaSpec& base,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& dl_o,
                                      const std::vector<std::size_t>& columns) {
    std::vector<std::string> names;
    std::vector<SchemaSpec> specs;
    for (auto [delta, order] : dl_o) {
        SchemaSpec s = base;
        s.delta = delta;
        s.order = order;
        specs.push_back(s);
        names.push_back("(" + std::to_string(delta) + ", " + std::to_string(order) + ")");
    }
    return tabulate(names, specs, "(delta, o)", columns);
}

std::string SchemaTable::to_text() const {
    std::size_t width = row_label.size();
    for (const auto& n : row_names) width = std::max(width, n.size());

    std::ostringstream os;
    os << row_label;
    os << std::string(width - row_label.size(), ' ');
    for (std::size_t c : columns) {
        std::string head = std::to_string(c);
        os << "  " << std::string(head.size() < 5 ? 5 - head.size() : 0, ' ') << head;
    }
    os << '\n';
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        os << row_names[r] << std::string(width - row_names[r].size(), ' ');
        for (const auto& cell : cells[r])
            os << "  " << std::string(cell.size() < 5 ? 5 - cell.size() : 0, ' ') << cell;
        os << '\n';
    }
    return os.str();
}

std::string SchemaTable::to_csv() const {
    std::ostringstream os;
    os << row_label;
    for (std::size_t c : columns) os << ',' << c;
    os << '\n';
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        os << '"' << row_names[r] << '"';
        for (const auto& cell : cells[r]) os << ',' << cell;
        os << '\n';
    }
    return os.str();
}

} // namespace metaopt
