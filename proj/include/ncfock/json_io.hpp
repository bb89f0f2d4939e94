#pragma once

#include <json.hpp>

#include "ncfock/domain.hpp"
#include "ncfock/multiplier.hpp"
#include "ncfock/weights.hpp"

namespace ncfock {

// Deterministic key order keeps reports byte-identical for a fixed seed.
using json = nlohmann::ordered_json;

json word_to_json(const Word& w);
Word word_from_json(const json& j, int n);

/// { "n", "degree", "terms": [ { "word", "re", "im" } ] }; omitted terms are zero.
json series_to_json(const FreeSeries& s);
FreeSeries series_from_json(const json& j);

/// { "kind", "n", "degree", "s"?, "phi"?, "b"? }.
json weights_to_json(const WeightFamily& wf);
WeightFamily weights_from_json(const json& j);

/// { "dim", "rows": [[ [re,im], ... ]] }; "cols" is added when rectangular.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// { "n", "dim", "matrices": [Matrix] }.
json tuple_to_json(const OperatorTuple& t);
OperatorTuple tuple_from_json(const json& j);

/// { "n", "degree", "e1", "e2", "terms": [ { "word", "matrix" } ] }.
json symbol_to_json(const MultiplierSymbol& s);
MultiplierSymbol symbol_from_json(const json& j);

json classification_to_json(const Classification& c);

}  // namespace ncfock
