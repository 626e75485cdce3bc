#ifndef SEPQ_IDENTITIES_HPP
#define SEPQ_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <sepq/families.hpp>
#include <sepq/report.hpp>

namespace sepq
{

// An identity between two or more independently built series. Entries with
// several components (one identity per small n) check each component
// separately.
struct IdentityEntry {
    std::string id;
    std::string description;
    std::string anchor;
    int min_order = 100;
    int components = 1;
    // Expressions for one component; labels are unique within an entry and
    // the one to perturb is labelled "closed" (or, failing that, comes last).
    std::function<std::vector<Expression>(int component)> expressions;
};

// Every registered identity, in a fixed order.
const std::vector<IdentityEntry> &registry();

// Throws UnknownIdentity.
const IdentityEntry &find_identity(std::string_view id);

// Evaluates every expression below `order` and compares them. `perturb`
// adds q^k to the closed expression of every component (harness hook).
CheckReport check(const IdentityEntry &entry, int order, std::optional<int> perturb = std::nullopt);
CheckReport check(std::string_view id, int order, std::optional<int> perturb = std::nullopt);

// Representations of n as x^2 + y^2 over all integers x, y, by direct search.
long lattice_r2(long n);

} // namespace sepq

#endif
