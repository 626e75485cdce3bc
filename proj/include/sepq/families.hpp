#ifndef SEPQ_FAMILIES_HPP
#define SEPQ_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>

#include <sepq/enumeration.hpp>
#include <sepq/laurent_series.hpp>

namespace sepq
{

using SeriesBuilder = std::function<LaurentSeries(int trunc)>;

// A series builder tagged with its role ("oracle", "closed", "lhs", ...).
struct Expression {
    std::string label;
    SeriesBuilder build;
};

// Calls build with a growing request until the result is known below
// `order`. Throws OutOfPrecision if that never happens.
LaurentSeries build_to_order(const SeriesBuilder &build, int order);

// Closed-form product/sum expression for a generating function, where one is
// known: all eight overlined families, six modified families (two via their
// reductions) and the plain eu/ou and od/eu families.
std::optional<SeriesBuilder> closed_form(const SepConfig &cfg, Variant v);

// The largest-part decomposition the closed form is derived from, where it
// is a distinct expression.
std::optional<SeriesBuilder> construction_form(const SepConfig &cfg, Variant v);

// Registry id of the identity that states closed_form(cfg, v).
std::optional<std::string> closed_form_id(const SepConfig &cfg, Variant v);

namespace forms
{

// (-q^2; q^2)_inf / (q^2; q^2)_inf: overpartitions into even parts.
LaurentSeries even_overpartitions(int trunc);
// (-q; q^2)_inf / (q; q^2)_inf: overpartitions into odd parts.
LaurentSeries odd_overpartitions(int trunc);

// Plain ed/od and od/ed by largest part of the lower block.
LaurentSeries plain_ed_od_construction(int trunc);
LaurentSeries plain_od_ed_construction(int trunc);

} // namespace forms

} // namespace sepq

#endif
