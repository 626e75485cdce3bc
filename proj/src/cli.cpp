#include <sepq/cli.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <sepq/enumeration.hpp>
#include <sepq/errors.hpp>
#include <sepq/families.hpp>
#include <sepq/identities.hpp>
#include <sepq/report.hpp>

namespace sepq
{

namespace
{

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string valid_ids()
{
    std::string s;
    for (const auto &e : registry()) {
        s += s.empty() ? "" : ", ";
        s += e.id;
    }
    return s;
}

std::vector<const IdentityEntry *> select_ids(const std::vector<std::string> &raw)
{
    std::vector<std::string> ids;
    for (const auto &r : raw) {
        std::stringstream ss(r);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) {
                ids.push_back(part);
            }
        }
    }
    if (ids.empty()) {
        throw UsageError("no identity selected; valid ids: all, " + valid_ids());
    }
    std::vector<const IdentityEntry *> out;
    for (const auto &id : ids) {
        if (id == "all") {
            for (const auto &e : registry()) {
                out.push_back(&e);
            }
            continue;
        }
        try {
            out.push_back(&find_identity(id));
        } catch (const UnknownIdentity &) {
            throw UsageError("unknown identity '" + id + "'; valid ids: all, " + valid_ids());
        }
    }
    // Registry order, each id once.
    std::vector<const IdentityEntry *> ordered;
    for (const auto &e : registry()) {
        if (std::find(out.begin(), out.end(), &e) != out.end()) {
            ordered.push_back(&e);
        }
    }
    return ordered;
}

int clamp_order(int order, std::ostream &err)
{
    if (order < 1) {
        throw UsageError("--order must be >= 1");
    }
    if (order > max_order) {
        err << "warning: --order " << order << " capped at " << max_order << " (cost grows quadratically)\n";
        return max_order;
    }
    return order;
}

struct VerifyOptions {
    std::vector<std::string> ids;
    int order = default_order;
    bool json = false;
    int jobs = 1;
};

struct Outcome {
    std::optional<CheckReport> report;
    std::string error;
};

int cmd_verify(const VerifyOptions &o, std::ostream &out, std::ostream &err)
{
    const auto entries = select_ids(o.ids);
    const int order = clamp_order(o.order, err);
    if (o.jobs < 1) {
        throw UsageError("--jobs must be >= 1");
    }
    for (const auto *e : entries) {
        if (order < e->min_order) {
            err << "warning: " << e->id << " is meant to be checked at order >= " << e->min_order << "\n";
        }
    }

    std::vector<Outcome> outcomes(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                outcomes[i].report = check(*entries[i], order);
            } catch (const std::exception &ex) {
                outcomes[i].error = ex.what();
            }
        }
    };
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(o.jobs), entries.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    int passed = 0;
    int failed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &oc = outcomes[i];
        if (!oc.report) {
            ++failed;
            err << "error: " << entries[i]->id << ": " << oc.error << "\n";
            continue;
        }
        (oc.report->pass ? passed : failed) += 1;
        out << (o.json ? report_to_json(*oc.report) : report_to_text(*oc.report)) << "\n";
    }
    if (!o.json) {
        out << passed << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? exit_pass : exit_fail;
}

struct FamilyOptions {
    std::string family;
    std::string variant;
};

std::pair<SepConfig, Variant> parse_family(const FamilyOptions &f)
{
    try {
        return {SepConfig::parse(f.family), parse_variant(f.variant)};
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

int cmd_table(const FamilyOptions &f, int order_in, const std::string &format, std::ostream &out, std::ostream &err)
{
    const auto [cfg, v] = parse_family(f);
    const int order = clamp_order(order_in, err);
    if (format != "human" && format != "csv" && format != "json" && format != "bfile") {
        throw UsageError("unknown format '" + format + "' (expected human, csv, json or bfile)");
    }
    const auto oracle = count_sep_table(cfg, v, order - 1);
    if (format == "bfile") {
        for (int n = 0; n < order; ++n) {
            out << n << ' ' << oracle[static_cast<std::size_t>(n)].get_str() << "\n";
        }
        return exit_pass;
    }
    const auto builder = closed_form(cfg, v);
    if (!builder) {
        throw UsageError("no closed form is known for " + to_string(v) + " " + cfg.name()
                         + " (use --format bfile for the enumeration alone)");
    }
    LaurentSeries closed;
    try {
        closed = build_to_order(*builder, order);
    } catch (const OutOfPrecision &ex) {
        err << "error: " << ex.what() << "\n";
        return exit_fail;
    }

    bool all_match = true;
    json rows = json::array();
    if (format == "csv") {
        out << "n,closed,oracle,match\n";
    } else if (format == "human") {
        out << "# " << to_string(v) << " " << cfg.name() << " (closed form " << *closed_form_id(cfg, v) << ")\n";
    }
    for (int n = 0; n < order; ++n) {
        const auto c = closed.coefficient(n);
        const Rational o(oracle[static_cast<std::size_t>(n)]);
        const bool match = is_integer(c) && c == o;
        all_match = all_match && match;
        const auto cs = to_string(c);
        const auto os = to_string(o);
        if (format == "csv") {
            out << n << ',' << cs << ',' << os << ',' << (match ? "true" : "false") << "\n";
        } else if (format == "human") {
            out << n << '\t' << cs << '\t' << os << '\t' << (match ? "ok" : "MISMATCH") << "\n";
        } else {
            rows.push_back({{"n", n}, {"closed", cs}, {"oracle", os}, {"match", match}});
        }
    }
    if (format == "json") {
        json j{{"family", cfg.name()}, {"variant", to_string(v)}, {"order", order}, {"rows", std::move(rows)}};
        out << j.dump() << "\n";
    }
    return all_match ? exit_pass : exit_fail;
}

int cmd_enumerate(const FamilyOptions &f, int n, bool as_json, std::ostream &out)
{
    const auto [cfg, v] = parse_family(f);
    if (n < 0) {
        throw UsageError("--n must be >= 0");
    }
    const auto count = count_sep(cfg, v, n);
    if (count > enumerate_limit) {
        throw UsageError("refusing to list " + count.get_str() + " objects (limit " + std::to_string(enumerate_limit)
                         + ")");
    }
    for (const auto &p : enumerate_sep(cfg, v, n)) {
        if (as_json) {
            json parts = json::array();
            for (const auto &part : p.parts) {
                parts.push_back({part.size, part.overlined});
            }
            out << parts.dump() << "\n";
        } else {
            out << p.to_string() << "\n";
        }
    }
    return exit_pass;
}

int cmd_list(std::ostream &out)
{
    for (const auto &e : registry()) {
        out << e.id << "\tmin_order=" << e.min_order << "\t" << e.description << "\tanchor: " << e.anchor << "\n";
    }
    return exit_pass;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series verification for overpartitions with parts separated by parity", "sepq"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "check registered identities coefficient by coefficient");
    verify->add_option("--id", vo.ids, "identity id, comma-separated list, or 'all'")->required();
    verify->add_option("--order", vo.order, "truncation order (default 100, capped at 2000)");
    verify->add_flag("--json", vo.json, "one JSON report per line");
    verify->add_option("--jobs,-j", vo.jobs, "parallel workers");

    FamilyOptions tf;
    int table_order = default_order;
    std::string format = "human";
    auto *table = app.add_subcommand("table", "coefficients of a family: closed form against enumeration");
    table->add_option("--family", tf.family, "family, e.g. od/eu")->required();
    table->add_option("--variant", tf.variant, "plain, over or mod")->required();
    table->add_option("--order", table_order, "rows n = 0 .. order-1");
    table->add_option("--format", format, "human, csv, json or bfile");

    FamilyOptions ef;
    int en = 0;
    bool en_json = false;
    auto *enumerate = app.add_subcommand("enumerate", "list the decorated partitions of n");
    enumerate->add_option("--family", ef.family, "family, e.g. od/eu")->required();
    enumerate->add_option("--variant", ef.variant, "plain, over or mod")->required();
    enumerate->add_option("--n", en, "the integer partitioned")->required();
    enumerate->add_flag("--json", en_json, "one JSON array of [size, overlined] pairs per line");

    auto *list = app.add_subcommand("list", "list registered identities");

    std::vector<std::string> storage{"sepq"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(vo, out, err);
        }
        if (table->parsed()) {
            return cmd_table(tf, table_order, format, out, err);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(ef, en, en_json, out);
        }
        if (list->parsed()) {
            return cmd_list(out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}

} // namespace sepq
