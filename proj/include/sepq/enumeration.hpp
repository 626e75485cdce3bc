#ifndef SEPQ_ENUMERATION_HPP
#define SEPQ_ENUMERATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <sepq/laurent_series.hpp>

namespace sepq
{

enum class Parity { Odd, Even };
enum class Restriction { Unrestricted, Distinct };

// Plain: ordinary partitions. Overlined: the first part of each size may be
// overlined. Modified: as Overlined, except parts of a Distinct block never
// carry an overline.
enum class Variant { Plain, Overlined, Modified };

// Parts of the opposite parity to `low_parity` are all larger than parts of
// parity `low_parity`. Written "xy/zw": x, z in {o, e}; y, w in {u, d}; e.g.
// "od/eu" has distinct odd parts below unrestricted even parts.
struct SepConfig {
    Parity low_parity = Parity::Odd;
    Restriction low = Restriction::Unrestricted;
    Restriction high = Restriction::Unrestricted;

    Parity high_parity() const
    {
        return low_parity == Parity::Odd ? Parity::Even : Parity::Odd;
    }
    // Whether a part of this size lies in the low block.
    bool in_low_block(int size) const
    {
        return (size % 2 != 0) == (low_parity == Parity::Odd);
    }
    Restriction restriction_of(int size) const
    {
        return in_low_block(size) ? low : high;
    }

    std::string name() const;
    // Accepts "od/eu", "od^eu", "od-eu" and "odeu" (case-insensitive).
    static SepConfig parse(std::string_view text);

    friend bool operator==(const SepConfig &, const SepConfig &) = default;
};

// All eight configurations.
std::vector<SepConfig> all_configs();

std::string to_string(Variant v);
// "plain" | "over" | "mod" (also "overlined", "modified").
Variant parse_variant(std::string_view text);

struct Part {
    int size = 0;
    bool overlined = false;
    friend bool operator==(const Part &, const Part &) = default;
};

struct DecoratedPartition {
    std::vector<Part> parts; // sizes non-increasing

    long total() const;
    // "2~+1"; the empty partition renders as "".
    std::string to_string() const;
    friend bool operator==(const DecoratedPartition &, const DecoratedPartition &) = default;
};

// Whether p is a decorated partition of n valid for (cfg, v).
bool is_valid(const DecoratedPartition &p, const SepConfig &cfg, Variant v, long n);

// Every decorated partition of n for (cfg, v), each once. Size sequences come
// in reverse lexicographic order (largest first part first); within one size
// sequence the overline patterns count upward in binary with the largest size
// as the most significant bit, so the undecorated form comes first.
std::vector<DecoratedPartition> enumerate_sep(const SepConfig &cfg, Variant v, int n);

// Weighted count over undecorated parity-separated partitions (weight
// 2^{#sizes that may carry an overline}), summed over the largest low-block
// part. Independent of enumerate_sep.
mpz_class count_sep(const SepConfig &cfg, Variant v, int n);

// count_sep for every n in [0, nmax].
std::vector<mpz_class> count_sep_table(const SepConfig &cfg, Variant v, int nmax);

// Generating series; coefficient n is count_sep(cfg, v, n) for n < trunc.
LaurentSeries series_sep(const SepConfig &cfg, Variant v, int trunc);

// Overpartitions of n without parity separation.
mpz_class count_overpartitions(int n);

namespace detail
{

// Weighted counts of low-block partitions with every part <= max_part, as a
// table over n in [0, nmax]. max_part < smallest low-parity size gives the
// empty block only.
std::vector<mpz_class> low_block_upto(const SepConfig &cfg, Variant v, int max_part, int nmax);

// Weighted counts of high-block partitions with every part > min_exclusive.
std::vector<mpz_class> high_block_above(const SepConfig &cfg, Variant v, int min_exclusive, int nmax);

} // namespace detail

} // namespace sepq

#endif
