#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pbias/boolean_function.hpp"
#include "pbias/error.hpp"
#include "pbias/measure.hpp"

// Function file (JSON, UTF-8):
//   {"n": 3, "values": [... 2^n numbers ...], "encoding": "bit(i-1)=1 means x_i=+1"}
// The encoding string is required and compared verbatim.
//
// Measure document: {"p": 0.3} for the p-biased measure or
// {"biases": [p_1, ..., p_n]} for a general product measure.
namespace pbias::io {

inline constexpr std::string_view kEncodingTag = "bit(i-1)=1 means x_i=+1";

// The file could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

BooleanFunction parse_function(std::string_view text);
BooleanFunction read_function_file(const std::filesystem::path& path);

std::string serialize_function(const BooleanFunction& f);
void write_function_file(const std::filesystem::path& path, const BooleanFunction& f);

// n is the coordinate count the measure must match.
ProductMeasure parse_measure(std::string_view text, int n);
ProductMeasure read_measure_file(const std::filesystem::path& path, int n);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pbias::io
