#include <sepq/enumeration.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sepq
{

namespace
{

char parity_letter(Parity p)
{
    return p == Parity::Odd ? 'o' : 'e';
}

char restriction_letter(Restriction r)
{
    return r == Restriction::Distinct ? 'd' : 'u';
}

bool may_overline(const SepConfig &cfg, Variant v, int size)
{
    switch (v) {
    case Variant::Plain:
        return false;
    case Variant::Overlined:
        return true;
    case Variant::Modified:
        return cfg.restriction_of(size) == Restriction::Unrestricted;
    }
    return false;
}

// Multiplies the table f in place by the generating factor of one part size.
void apply_size(std::vector<mpz_class> &f, const SepConfig &cfg, Variant v, int s)
{
    const auto nmax = static_cast<int>(f.size()) - 1;
    if (s > nmax) {
        return;
    }
    const unsigned long w = may_overline(cfg, v, s) ? 2 : 1;
    if (cfg.restriction_of(s) == Restriction::Distinct) {
        // 1 + w q^s
        for (int k = nmax; k >= s; --k) {
            f[k] += w * f[k - s];
        }
        return;
    }
    // 1 + w (q^s + q^{2s} + ...): g[k] = f[k] + w h[k-s] with h = f / (1 - q^s).
    std::vector<mpz_class> h(f);
    for (int k = s; k <= nmax; ++k) {
        h[k] += h[k - s];
    }
    for (int k = nmax; k >= s; --k) {
        f[k] += w * h[k - s];
    }
}

struct Enumerator {
    const SepConfig &cfg;
    Variant v;
    std::vector<int> sizes;
    std::vector<DecoratedPartition> out;

    void emit()
    {
        std::vector<int> distinct;
        for (int s : sizes) {
            if (distinct.empty() || distinct.back() != s) {
                distinct.push_back(s);
            }
        }
        std::vector<int> eligible;
        for (int s : distinct) {
            if (may_overline(cfg, v, s)) {
                eligible.push_back(s);
            }
        }
        const auto k = eligible.size();
        for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
            DecoratedPartition p;
            int prev = 0;
            for (int s : sizes) {
                bool over = false;
                if (s != prev) {
                    const auto it = std::find(eligible.begin(), eligible.end(), s);
                    if (it != eligible.end()) {
                        const auto bit = k - 1 - static_cast<std::size_t>(it - eligible.begin());
                        over = ((mask >> bit) & 1UL) != 0;
                    }
                }
                p.parts.push_back({s, over});
                prev = s;
            }
            out.push_back(std::move(p));
        }
    }

    // Parts are placed largest first: the high block, then the low block.
    void recurse(int remaining, int max_size, bool in_low)
    {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int s = std::min(remaining, max_size); s >= 1; --s) {
            const bool low = cfg.in_low_block(s);
            if (in_low && !low) {
                continue;
            }
            if (!sizes.empty() && sizes.back() == s && cfg.restriction_of(s) == Restriction::Distinct) {
                continue;
            }
            sizes.push_back(s);
            recurse(remaining - s, s, in_low || low);
            sizes.pop_back();
        }
    }
};

} // namespace

std::string SepConfig::name() const
{
    std::string s;
    s += parity_letter(low_parity);
    s += restriction_letter(low);
    s += '/';
    s += parity_letter(high_parity());
    s += restriction_letter(high);
    return s;
}

SepConfig SepConfig::parse(std::string_view text)
{
    std::string t;
    for (char ch : text) {
        if (ch != '/' && ch != '^' && ch != '-' && ch != '_') {
            t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
    }
    auto bad = [&] { return std::invalid_argument("unknown family '" + std::string(text) + "' (expected e.g. od/eu)"); };
    if (t.size() != 4) {
        throw bad();
    }
    auto parity = [&](char c) {
        if (c == 'o') {
            return Parity::Odd;
        }
        if (c == 'e') {
            return Parity::Even;
        }
        throw bad();
    };
    auto restriction = [&](char c) {
        if (c == 'u') {
            return Restriction::Unrestricted;
        }
        if (c == 'd') {
            return Restriction::Distinct;
        }
        throw bad();
    };
    SepConfig cfg{parity(t[0]), restriction(t[1]), restriction(t[3])};
    if (parity(t[2]) != cfg.high_parity()) {
        throw bad();
    }
    return cfg;
}

std::vector<SepConfig> all_configs()
{
    std::vector<SepConfig> out;
    for (auto p : {Parity::Even, Parity::Odd}) {
        for (auto lo : {Restriction::Unrestricted, Restriction::Distinct}) {
            for (auto hi : {Restriction::Unrestricted, Restriction::Distinct}) {
                out.push_back({p, lo, hi});
            }
        }
    }
    return out;
}

std::string to_string(Variant v)
{
    switch (v) {
    case Variant::Plain:
        return "plain";
    case Variant::Overlined:
        return "over";
    case Variant::Modified:
        return "mod";
    }
    return "?";
}

Variant parse_variant(std::string_view text)
{
    if (text == "plain") {
        return Variant::Plain;
    }
    if (text == "over" || text == "overlined") {
        return Variant::Overlined;
    }
    if (text == "mod" || text == "modified") {
        return Variant::Modified;
    }
    throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected plain, over or mod)");
}

long DecoratedPartition::total() const
{
    long t = 0;
    for (const auto &p : parts) {
        t += p.size;
    }
    return t;
}

std::string DecoratedPartition::to_string() const
{
    std::string s;
    for (const auto &p : parts) {
        if (!s.empty()) {
            s += '+';
        }
        s += std::to_string(p.size);
        if (p.overlined) {
            s += '~';
        }
    }
    return s;
}

bool is_valid(const DecoratedPartition &p, const SepConfig &cfg, Variant v, long n)
{
    if (p.total() != n) {
        return false;
    }
    int min_high = 0;
    int max_low = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto &part = p.parts[i];
        if (part.size < 1) {
            return false;
        }
        const bool first_of_size = i == 0 || p.parts[i - 1].size != part.size;
        if (i > 0 && p.parts[i - 1].size < part.size) {
            return false;
        }
        if (!first_of_size && cfg.restriction_of(part.size) == Restriction::Distinct) {
            return false;
        }
        if (part.overlined && (!first_of_size || !may_overline(cfg, v, part.size))) {
            return false;
        }
        if (cfg.in_low_block(part.size)) {
            max_low = std::max(max_low, part.size);
        } else {
            min_high = min_high == 0 ? part.size : std::min(min_high, part.size);
        }
    }
    return min_high == 0 || max_low == 0 || min_high > max_low;
}

std::vector<DecoratedPartition> enumerate_sep(const SepConfig &cfg, Variant v, int n)
{
    if (n < 0) {
        return {};
    }
    Enumerator e{cfg, v, {}, {}};
    e.recurse(n, n, false);
    return std::move(e.out);
}

namespace detail
{

std::vector<mpz_class> low_block_upto(const SepConfig &cfg, Variant v, int max_part, int nmax)
{
    std::vector<mpz_class> f(static_cast<std::size_t>(nmax + 1));
    f[0] = 1;
    for (int s = 1; s <= std::min(max_part, nmax); ++s) {
        if (cfg.in_low_block(s)) {
            apply_size(f, cfg, v, s);
        }
    }
    return f;
}

std::vector<mpz_class> high_block_above(const SepConfig &cfg, Variant v, int min_exclusive, int nmax)
{
    std::vector<mpz_class> f(static_cast<std::size_t>(nmax + 1));
    f[0] = 1;
    for (int s = std::max(min_exclusive + 1, 1); s <= nmax; ++s) {
        if (!cfg.in_low_block(s)) {
            apply_size(f, cfg, v, s);
        }
    }
    return f;
}

} // namespace detail

std::vector<mpz_class> count_sep_table(const SepConfig &cfg, Variant v, int nmax)
{
    std::vector<mpz_class> total(static_cast<std::size_t>(std::max(nmax, -1) + 1));
    if (nmax < 0) {
        return total;
    }
    const int first_low = cfg.low_parity == Parity::Odd ? 1 : 2;

    // Largest low part m: 0 stands for an empty low block. The low block with
    // largest part exactly m is (parts <= m) minus (parts <= m - 2), which
    // removes the overlap with smaller boundaries.
    std::vector<mpz_class> below(static_cast<std::size_t>(nmax + 1));
    below[0] = 1; // low block with parts <= 0: empty only
    auto high = detail::high_block_above(cfg, v, 0, nmax);
    for (int k = 0; k <= nmax; ++k) {
        total[k] = high[k];
    }

    auto upto = below;
    for (int m = first_low; m <= nmax; m += 2) {
        auto next = upto;
        apply_size(next, cfg, v, m);
        // Parts above m of the high parity.
        high = detail::high_block_above(cfg, v, m, nmax);
        for (int k = m; k <= nmax; ++k) {
            mpz_class exact = next[k] - upto[k];
            if (exact == 0) {
                continue;
            }
            for (int j = 0; j + k <= nmax; ++j) {
                if (high[j] != 0) {
                    total[j + k] += exact * high[j];
                }
            }
        }
        upto = std::move(next);
    }
    return total;
}

mpz_class count_sep(const SepConfig &cfg, Variant v, int n)
{
    if (n < 0) {
        return 0;
    }
    return count_sep_table(cfg, v, n)[static_cast<std::size_t>(n)];
}

LaurentSeries series_sep(const SepConfig &cfg, Variant v, int trunc)
{
    if (trunc <= 0) {
        return LaurentSeries(trunc);
    }
    const auto table = count_sep_table(cfg, v, trunc - 1);
    std::vector<Rational> c;
    c.reserve(table.size());
    for (const auto &x : table) {
        c.emplace_back(x);
    }
    return LaurentSeries::from_coefficients(0, std::move(c));
}

mpz_class count_overpartitions(int n)
{
    if (n < 0) {
        return 0;
    }
    // prod_k (1 + q^k) / (1 - q^k)
    std::vector<mpz_class> f(static_cast<std::size_t>(n + 1));
    f[0] = 1;
    for (int s = 1; s <= n; ++s) {
        std::vector<mpz_class> h(f);
        for (int k = s; k <= n; ++k) {
            h[k] += h[k - s];
        }
        for (int k = n; k >= s; --k) {
            f[k] += 2 * h[k - s];
        }
    }
    return f[static_cast<std::size_t>(n)];
}

} // namespace sepq
