#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "couponlab/rational.hpp"

namespace couponlab::cli {

enum class Method { ClosedForm, Series, Quadrature, MonteCarlo };

std::string to_string(Method method);
Method parse_method(const std::string& text);

using Params = std::vector<std::pair<std::string, long long>>;

struct OutputRecord {
    std::string quantity;
    Params params;
    std::optional<std::string> exact;  ///< "numerator/denominator"
    double decimal = 0.0;
    Method method = Method::ClosedForm;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::optional<double> std_error;
    std::optional<std::string> generator;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Rounds value to `digits` significant digits and back to the nearest double.
double round_significant(double value, int digits);

OutputRecord exact_record(std::string quantity, Params params, const ExactRational& value, int digits,
                          Method method = Method::ClosedForm);

OutputRecord decimal_record(std::string quantity, Params params, double value, int digits, Method method);

enum class Format { Json, Csv };

Format parse_format(const std::string& text);

/// One JSON object per line.
std::string to_json_line(const OutputRecord& record);
OutputRecord from_json_line(const std::string& line);

inline constexpr const char* kCsvHeader = "quantity,params,exact,decimal,method,std_error,seed";

/// params rendered as "d=3;h=1"
std::string to_csv_row(const OutputRecord& record);

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

}  // namespace couponlab::cli
