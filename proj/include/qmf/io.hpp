#pragma once

// JSON and CSV interchange formats.
//
//   LaurentPoly / filter:  [[degree, re, im], ...] sorted by degree
//   FilterSystem:          {"N": 2, "filters": [<poly>, <poly>]}
//   Signal:                {"<index>": [re, im], ...}
//   NadicInterval:         {"N": 3, "digits": [0, 2], "left": "2/9", "width": "1/9"}
//                          (fractions keep the unreduced N^k denominator)
//   MeasureTable (CSV):    word,left,value
//   CDF (CSV):             right,cumulative
//   Packet (CSV):          left,re,im

#include <string>

#include "json.hpp"
#include "qmf/filterbank.hpp"
#include "qmf/measures.hpp"
#include "qmf/nadic.hpp"
#include "qmf/pyramid.hpp"
#include "qmf/step_function.hpp"

namespace qmf {

using Json = nlohmann::ordered_json;

Json poly_to_json(const LaurentPoly& f);
/// Throws std::invalid_argument on malformed triples or repeated degrees.
LaurentPoly poly_from_json(const Json& j);

Json filters_to_json(const FilterSystem& fs);
FilterSystem filters_from_json(const Json& j);

/// Reads a filter-spec file.  Throws std::runtime_error if unreadable and
/// std::invalid_argument if malformed.
FilterSystem load_filters(const std::string& path);

Json signal_to_json(const Signal& xi);
Signal signal_from_json(const Json& j);
Signal load_signal(const std::string& path);

Json interval_to_json(const NadicInterval& J);

Json report_to_json(const ValidationReport& r);

std::string table_to_csv(const MeasureTable& t);
Json table_to_json(const MeasureTable& t);

/// Cumulative distribution at the right endpoint of each level-k cell.
std::string cdf_to_csv(const MeasureTable& t);
Json cdf_to_json(const MeasureTable& t);

/// {"word": "01", "signal": {...}, "children": [...]}, leaves last.
Json subband_tree_to_json(const SubbandTree& tree);

std::string step_function_to_csv(const StepFunction& g);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace qmf
