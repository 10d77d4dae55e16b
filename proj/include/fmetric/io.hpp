#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fmetric/gauge.hpp"
#include "fmetric/sequences.hpp"
#include "fmetric/space.hpp"

namespace fmetric {

/// Space from `kind:n` shorthand (hybrid, exp, square_grid), an inline JSON
/// descriptor, or a path to a CSV / JSON file.
///
/// CSV: first row holds labels, each following row one matrix row.
/// JSON: {"kind": "matrix"|"hybrid"|"exp"|"square_grid"|"two_metric", "n": int, "data": ...}
/// where matrix data is [[...], ...] or {"labels": [...], "matrix": [[...]]} and
/// two_metric data is {"labels": [...], "sigma": [[[...]]]}.
FiniteSpace load_space(std::string_view source);
FiniteSpace space_from_json(const nlohmann::json& j);
FiniteSpace parse_space_csv(std::string_view text);

/// Gauge from "log", "neg_reciprocal", an inline JSON descriptor or a file.
/// Descriptor: {"kind": "log"|"neg_reciprocal"|"table", "alpha": number, "table": [[t, f], ...]}.
Gauge load_gauge(std::string_view source);
Gauge gauge_from_json(const nlohmann::json& j);

/// Sequence from inline JSON or a file: {"points": [...], "tail_start": int, "tol": number},
/// or a bare list of labels / coordinates (tol then comes from `default_tol`).
SequenceSample load_sequence(const FiniteSpace& s, std::string_view source,
                             double default_tol = 0.0);
SequenceSample sequence_from_json(const FiniteSpace& s, const nlohmann::json& j,
                                  double default_tol = 0.0);

/// Matrix in the CSV input format, values with 17 significant digits.
std::string matrix_to_csv(const FiniteSpace& s, const Matrix& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Number formatted with 17 significant digits.
std::string format_number(double v);

}  // namespace fmetric
