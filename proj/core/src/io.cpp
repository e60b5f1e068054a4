#include "pbias/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace pbias::io {

namespace {

using nlohmann::json;

json parse_document(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

const json& require(const json& doc, const char* key, std::string_view what) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw FormatError(std::string(what) + " is missing the \"" + key + "\" field");
    }
    return doc.at(key);
}

std::vector<double> number_array(const json& node, std::string_view what) {
    if (!node.is_array()) {
        throw FormatError(std::string(what) + " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const json& v : node) {
        if (!v.is_number()) {
            throw FormatError(std::string(what) + " contains a non-numeric entry");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading " + path.string());
    }
    return buf.str();
}

BooleanFunction parse_function(std::string_view text) {
    const json doc = parse_document(text, "function file");
    const json& encoding = require(doc, "encoding", "function file");
    if (!encoding.is_string() || encoding.get<std::string>() != kEncodingTag) {
        throw FormatError("function file encoding must be exactly \"" + std::string(kEncodingTag) + "\"");
    }
    const json& n_node = require(doc, "n", "function file");
    if (!n_node.is_number_integer()) {
        throw FormatError("function file field \"n\" must be an integer");
    }
    const auto n = n_node.get<long long>();
    if (n < 1) {
        throw FormatError("function file field \"n\" must be >= 1");
    }
    if (n > kMaxCoordinates) {
        throw CapacityError("function file has n = " + std::to_string(n) + ", above the dense limit of " +
                            std::to_string(kMaxCoordinates));
    }
    std::vector<double> values = number_array(require(doc, "values", "function file"), "\"values\"");
    if (values.size() != (std::size_t{1} << n)) {
        throw FormatError("function file declares n = " + std::to_string(n) + " but has " +
                          std::to_string(values.size()) + " values");
    }
    return BooleanFunction(static_cast<int>(n), std::move(values));
}

BooleanFunction read_function_file(const std::filesystem::path& path) { return parse_function(read_text_file(path)); }

std::string serialize_function(const BooleanFunction& f) {
    json doc;
    doc["n"] = f.n();
    doc["values"] = std::vector<double>(f.values().begin(), f.values().end());
    doc["encoding"] = kEncodingTag;
    return doc.dump() + "\n";
}

void write_function_file(const std::filesystem::path& path, const BooleanFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << serialize_function(f);
}

ProductMeasure parse_measure(std::string_view text, int n) {
    const json doc = parse_document(text, "measure");
    if (!doc.is_object()) {
        throw FormatError("measure must be a JSON object");
    }
    const bool has_p = doc.contains("p");
    const bool has_biases = doc.contains("biases");
    if (has_p == has_biases) {
        throw FormatError("measure must have exactly one of \"p\" or \"biases\"");
    }
    if (has_p) {
        if (!doc.at("p").is_number()) {
            throw FormatError("measure field \"p\" must be a number");
        }
        return ProductMeasure::uniform(n, doc.at("p").get<double>());
    }
    std::vector<double> biases = number_array(doc.at("biases"), "\"biases\"");
    check_same_dimension(n, static_cast<int>(biases.size()));
    return ProductMeasure(std::move(biases));
}

ProductMeasure read_measure_file(const std::filesystem::path& path, int n) {
    return parse_measure(read_text_file(path), n);
}

}  // namespace pbias::io
