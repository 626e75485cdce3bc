#include <sepq/report.hpp>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <sepq/errors.hpp>

namespace sepq
{

using json = nlohmann::ordered_json;

CheckReport compare_series(const std::string &id, int order, const LabelledSeries &series,
                           std::optional<int> component)
{
    CheckReport r{id, order, true, std::nullopt};
    for (const auto &[label, s] : series) {
        if (s.trunc() < order) {
            throw OutOfPrecision(id + ": expression '" + label + "' is only known below q^" + std::to_string(s.trunc())
                                 + ", not q^" + std::to_string(order));
        }
    }
    if (series.size() < 2) {
        return r;
    }
    std::optional<int> first;
    for (std::size_t i = 1; i < series.size(); ++i) {
        const auto m = first_mismatch(series[0].second, series[i].second, order);
        if (m && (!first || *m < *first)) {
            first = m;
        }
    }
    if (!first) {
        return r;
    }
    Mismatch mm;
    mm.exponent = *first;
    mm.component = component;
    for (const auto &[label, s] : series) {
        mm.values.emplace_back(label, s.coefficient(*first));
    }
    r.pass = false;
    r.mismatch = std::move(mm);
    return r;
}

std::string report_to_json(const CheckReport &r, int indent)
{
    json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.mismatch) {
        json m;
        m["exponent"] = r.mismatch->exponent;
        json values = json::object();
        for (const auto &[label, v] : r.mismatch->values) {
            values[label] = to_string(v);
        }
        m["values"] = std::move(values);
        if (r.mismatch->component) {
            m["component"] = *r.mismatch->component;
        }
        j["mismatch"] = std::move(m);
    } else {
        j["mismatch"] = nullptr;
    }
    return j.dump(indent);
}

CheckReport report_from_json(std::string_view text)
{
    const auto j = json::parse(text);
    CheckReport r;
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<int>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") {
        throw std::invalid_argument("report: status must be pass or fail");
    }
    r.pass = status == "pass";
    const auto &m = j.at("mismatch");
    if (!m.is_null()) {
        Mismatch mm;
        mm.exponent = m.at("exponent").get<int>();
        if (m.contains("component")) {
            mm.component = m.at("component").get<int>();
        }
        for (const auto &[label, v] : m.at("values").items()) {
            mm.values.emplace_back(label, parse_rational(v.get<std::string>()));
        }
        r.mismatch = std::move(mm);
    }
    if (r.pass == r.mismatch.has_value()) {
        throw std::invalid_argument("report: a mismatch is present iff the status is fail");
    }
    return r;
}

std::string report_to_text(const CheckReport &r)
{
    std::ostringstream os;
    os << r.id << "  order " << r.order << "  " << (r.pass ? "pass" : "FAIL");
    if (r.mismatch) {
        os << "  first mismatch at q^" << r.mismatch->exponent;
        if (r.mismatch->component) {
            os << " (component " << *r.mismatch->component << ")";
        }
        os << ":";
        for (const auto &[label, v] : r.mismatch->values) {
            os << ' ' << label << '=' << to_string(v);
        }
    }
    return os.str();
}

} // namespace sepq
