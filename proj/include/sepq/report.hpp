#ifndef SEPQ_REPORT_HPP
#define SEPQ_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <sepq/laurent_series.hpp>

namespace sepq
{

struct Mismatch {
    int exponent = 0;
    // Set for multi-component identities.
    std::optional<int> component;
    // Coefficient at `exponent` per expression label, in expression order.
    std::vector<std::pair<std::string, Rational>> values;

    friend bool operator==(const Mismatch &, const Mismatch &) = default;
};

struct CheckReport {
    std::string id;
    int order = 0;
    bool pass = true;
    std::optional<Mismatch> mismatch; // present iff !pass

    friend bool operator==(const CheckReport &, const CheckReport &) = default;
};

using LabelledSeries = std::vector<std::pair<std::string, LaurentSeries>>;

// Compares every series below `order`. Each series must be known below
// `order`; otherwise OutOfPrecision is thrown rather than comparing padding.
CheckReport compare_series(const std::string &id, int order, const LabelledSeries &series,
                           std::optional<int> component = std::nullopt);

// {"id", "order", "status", "mismatch": null | {"exponent", "values", "component"?}}
// with rationals as "p/q" strings.
std::string report_to_json(const CheckReport &r, int indent = -1);
CheckReport report_from_json(std::string_view text);

// One line, e.g. "T1.1  order 100  pass".
std::string report_to_text(const CheckReport &r);

} // namespace sepq

#endif
