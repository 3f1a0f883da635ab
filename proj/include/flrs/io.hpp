#pragma once

#include <json.hpp>
#include <string>

#include "flrs/code.hpp"
#include "flrs/decoder.hpp"

namespace flrs::io {

using json = nlohmann::json;

/// {q, m, modulus: [ints], gamma: int, ell, h, N, k}; modulus and gamma are optional on input.
json params_to_json(const CodeParams& params);
CodeParams params_from_json(const json& j);

/// {blocks: [[[int]]]}, indexed blocks[i][row][column], entries in base-q integer encoding.
json word_to_json(const FoldedWord& word);
FoldedWord word_from_json(const CodeParams& params, const json& j);

/// {message: [f_0, ..., f_{k-1}]} or a bare array.
json message_to_json(const CodeParams& params, const SkewPoly& f);
SkewPoly message_from_json(const CodeParams& params, const json& j);

json outcome_to_json(const CodeParams& params, const DecodeOutcome& outcome, DecodeMode mode);

/// Parses `source` as inline JSON when it starts with '{' or '[', else reads it as a file path.
json load_json(const std::string& source);

}  // namespace flrs::io
