#include "couponlab/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace couponlab::cli {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Method method) {
    switch (method) {
        case Method::ClosedForm:
            return "closed-form";
        case Method::Series:
            return "series";
        case Method::Quadrature:
            return "quadrature";
        case Method::MonteCarlo:
            return "monte-carlo";
    }
    return "closed-form";
}

Method parse_method(const std::string& text) {
    if (text == "closed-form") return Method::ClosedForm;
    if (text == "series") return Method::Series;
    if (text == "quadrature") return Method::Quadrature;
    if (text == "monte-carlo") return Method::MonteCarlo;
    throw std::invalid_argument("unknown method '" + text + "'");
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + text + "'");
}

double round_significant(double value, int digits) {
    if (!std::isfinite(value)) {
        return value;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", std::max(0, digits - 1), value);
    return std::strtod(buf, nullptr);
}

OutputRecord exact_record(std::string quantity, Params params, const ExactRational& value, int digits, Method method) {
    OutputRecord r;
    r.quantity = std::move(quantity);
    r.params = std::move(params);
    r.exact = value.to_string();
    // correctly rounded from the rational, not from its double
    r.decimal = std::strtod(value.to_significant(digits).c_str(), nullptr);
    r.method = method;
    return r;
}

OutputRecord decimal_record(std::string quantity, Params params, double value, int digits, Method method) {
    OutputRecord r;
    r.quantity = std::move(quantity);
    r.params = std::move(params);
    r.decimal = round_significant(value, digits);
    r.method = method;
    return r;
}

namespace {

ordered_json to_json(const OutputRecord& record) {
    ordered_json j;
    j["quantity"] = record.quantity;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : record.params) {
        params[name] = value;
    }
    j["params"] = params;
    j["exact"] = record.exact ? ordered_json(*record.exact) : ordered_json(nullptr);
    j["decimal"] = record.decimal;
    j["method"] = to_string(record.method);
    if (record.tolerance) j["tolerance"] = *record.tolerance;
    if (record.std_error) j["std_error"] = *record.std_error;
    if (record.seed) j["seed"] = *record.seed;
    if (record.generator) j["generator"] = *record.generator;
    return j;
}

std::string csv_number(double value) { return ordered_json(value).dump(); }

}  // namespace

std::string to_json_line(const OutputRecord& record) { return to_json(record).dump(); }

OutputRecord from_json_line(const std::string& line) {
    const auto j = ordered_json::parse(line);
    OutputRecord r;
    r.quantity = j.at("quantity").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) {
        r.params.emplace_back(name, value.get<long long>());
    }
    if (!j.at("exact").is_null()) r.exact = j.at("exact").get<std::string>();
    r.decimal = j.at("decimal").get<double>();
    r.method = parse_method(j.at("method").get<std::string>());
    if (j.contains("tolerance")) r.tolerance = j["tolerance"].get<double>();
    if (j.contains("std_error")) r.std_error = j["std_error"].get<double>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("generator")) r.generator = j["generator"].get<std::string>();
    return r;
}

std::string to_csv_row(const OutputRecord& record) {
    std::ostringstream row;
    row << record.quantity << ',';
    for (std::size_t i = 0; i < record.params.size(); ++i) {
        row << (i ? ";" : "") << record.params[i].first << '=' << record.params[i].second;
    }
    row << ',' << record.exact.value_or("") << ',' << csv_number(record.decimal) << ',' << to_string(record.method)
        << ',';
    if (record.std_error) row << csv_number(*record.std_error);
    row << ',';
    if (record.seed) row << *record.seed;
    return row.str();
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
    if (format == Format::Csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records) out << to_csv_row(r) << '\n';
        return;
    }
    for (const auto& r : records) out << to_json_line(r) << '\n';
}

}  // namespace couponlab::cli
