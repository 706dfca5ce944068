#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexraf/core.hpp"
#include "lexraf/relations.hpp"

namespace lexraf {

/// The JSON input document, kept in document order:
///
///   {
///     "alternatives": ["$40", "$10"],
///     "priority":     ["$40", "$10"],
///     "payoffs":      {"$40": "40", "$10": "10"},     (optional)
///     "weights":      {"$40": 1, "$10": 1},           (optional)
///     "rafs": {
///       "A": {"$40": "1/5", "$10": "4/5"},
///       "B": {"$40": "0.1", "$10": "0.9"}
///     }
///   }
///
/// Probabilities and pay-offs are strings ("p/q" or a finite decimal) so
/// they stay exact.
struct InputDocument {
  using LabelValues = std::vector<std::pair<std::string, Rational>>;

  std::vector<std::string> alternatives;
  std::vector<std::string> priority;
  std::optional<LabelValues> payoffs;
  std::optional<std::vector<std::pair<std::string, unsigned>>> weights;
  std::vector<std::pair<std::string, LabelValues>> rafs;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws Error(Parse) for malformed JSON or rational strings and
/// Error(InvalidArgument) for structural problems; messages name the
/// offending field.
InputDocument parse_document(std::string_view json_text);

/// Canonical JSON (two-space indent, rationals in lowest terms).
std::string serialize_document(const InputDocument& doc);

/// The document resolved against one shared priority context.
struct LoadedDocument {
  ContextPtr context;
  std::vector<std::string> names;
  std::vector<Raf> rafs;
  std::optional<WeightVector> weights;
};

LoadedDocument load_document(const InputDocument& doc);

/// The two-alternative example used by the demo: X = {$40, $10},
/// A = (1/5, 4/5), B = (1/10, 9/10), payoffs (40, 10).
InputDocument example_document();

}  // namespace lexraf
