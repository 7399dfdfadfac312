#include "mmx/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmx {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

bool try_parse(const std::string& raw, double& out) {
    const std::string t = trim(raw);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') ++first;
    if (first == last) return false;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

[[noreturn]] void bad_field(const std::string& what, const std::string& field, std::size_t row) {
    throw std::domain_error("cannot parse " + what + " '" + trim(field) + "' at row " +
                            std::to_string(row));
}

std::size_t resolve_column(const std::string& selector, const std::vector<std::string>& header,
                           bool has_header, std::size_t field_count, const std::string& what) {
    if (all_digits(selector)) {
        const std::size_t idx = std::stoul(selector);
        if (idx < 1 || idx > field_count)
            throw std::invalid_argument(what + " column index " + selector + " outside 1.." +
                                        std::to_string(field_count));
        return idx - 1;
    }
    if (!has_header)
        throw std::invalid_argument(what +
                                    " column must be a 1-based index when the input has no "
                                    "header, got '" +
                                    selector + "'");
    const std::string want = lower(trim(selector));
    for (std::size_t i = 0; i < header.size(); ++i)
        if (lower(trim(header[i])) == want) return i;
    std::string names;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) names += ", ";
        names += trim(header[i]);
    }
    throw std::invalid_argument("no column named '" + selector + "' in header (columns: " +
                                names + ")");
}

}  // namespace

PriceSeries ingest_csv(std::istream& in, const InputSpec& spec) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }

    std::vector<std::string> header;
    std::size_t first_data = 0;
    if (spec.header) {
        if (lines.empty()) throw std::domain_error("input has no rows");
        header = split(lines[0], spec.delimiter);
        first_data = 1;
    }
    if (lines.size() - first_data < 2)
        throw std::domain_error("need at least 2 data rows, got " +
                                std::to_string(lines.size() - first_data));

    const std::size_t ref_fields =
        spec.header ? header.size() : split(lines[first_data], spec.delimiter).size();
    const std::size_t price_idx =
        resolve_column(spec.price_col, header, spec.header, ref_fields, "price");

    bool have_time = false;
    std::size_t time_idx = 0;
    if (!spec.time_col.empty()) {
        time_idx = resolve_column(spec.time_col, header, spec.header, ref_fields, "time");
        have_time = true;
    } else if (spec.header) {
        static const char* const kTimeNames[] = {"t", "time", "timestamp", "date", "datetime", "ts"};
        for (std::size_t i = 0; i < header.size() && !have_time; ++i) {
            if (i == price_idx) continue;
            const std::string name = lower(trim(header[i]));
            for (const char* cand : kTimeNames) {
                if (name != cand) continue;
                // Adopt the column only when its values look numeric.
                const std::vector<std::string> probe = split(lines[first_data], spec.delimiter);
                double v = 0.0;
                if (i < probe.size() && try_parse(probe[i], v)) {
                    time_idx = i;
                    have_time = true;
                }
                break;
            }
        }
    }

    PriceSeries out;
    out.values.reserve(lines.size() - first_data);
    if (have_time) out.timestamps.reserve(lines.size() - first_data);
    const std::size_t need = (have_time ? std::max(price_idx, time_idx) : price_idx) + 1;
    for (std::size_t li = first_data; li < lines.size(); ++li) {
        const std::size_t row = li - first_data + 1;
        const std::vector<std::string> fields = split(lines[li], spec.delimiter);
        if (fields.size() < need)
            throw std::domain_error("row " + std::to_string(row) + " has " +
                                    std::to_string(fields.size()) + " fields, expected at least " +
                                    std::to_string(need));
        double price = 0.0;
        if (!try_parse(fields[price_idx], price)) bad_field("price", fields[price_idx], row);
        if (!(price > 0.0) || !std::isfinite(price))
            throw std::domain_error("price must be a positive finite number, got " +
                                    trim(fields[price_idx]) + " at row " + std::to_string(row));
        out.values.push_back(price);
        if (have_time) {
            double t = 0.0;
            if (!try_parse(fields[time_idx], t)) bad_field("timestamp", fields[time_idx], row);
            if (!std::isfinite(t))
                throw std::domain_error("timestamp must be finite at row " + std::to_string(row));
            if (!out.timestamps.empty() && t < out.timestamps.back())
                throw std::domain_error("timestamps must be non-decreasing, violated at row " +
                                        std::to_string(row));
            out.timestamps.push_back(t);
        }
    }
    validate(out);
    return out;
}

PriceSeries ingest_csv(const InputSpec& spec) {
    if (spec.path == "-") return ingest_csv(std::cin, spec);
    std::ifstream in(spec.path);
    if (!in) throw std::domain_error("cannot open input file '" + spec.path + "'");
    return ingest_csv(in, spec);
}

}  // namespace mmx
