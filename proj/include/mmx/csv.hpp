#pragma once

#include <istream>
#include <string>

#include "mmx/series.hpp"

namespace mmx {

/**
 * Where and how to read delimited price data.
 *
 * Columns are picked by header name, or by 1-based index when the selector
 * is all digits (required with header = false). When time_col is empty and
 * a header is present, a column named t/time/timestamp/date/datetime/ts is
 * used as the timestamp column if its first value parses as a number.
 */
struct InputSpec {
    std::string path = "-";  // "-" reads stdin
    std::string price_col = "close";
    std::string time_col;  // empty: auto-detect by name
    char delimiter = ',';
    bool header = true;
};

/// Reads the spec's path (or stdin). Configuration problems (missing or
/// unresolvable columns) throw std::invalid_argument; bad content (unparsable
/// fields, non-positive prices, too few rows) throws std::domain_error with
/// the offending data row number, header excluded.
PriceSeries ingest_csv(const InputSpec& spec);

/// Same, from an already-open stream.
PriceSeries ingest_csv(std::istream& in, const InputSpec& spec);

}  // namespace mmx
