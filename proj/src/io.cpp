#include "flrs/io.hpp"

#include <fstream>
#include <sstream>

#include "flrs/errors.hpp"

namespace flrs::io {

namespace {

std::size_t get_count(const json& j, const char* key) {
    if (!j.contains(key)) throw ParameterError("json_schema", std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) {
        throw ParameterError("json_schema", std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::uint64_t get_encoding(const json& v) {
    if (!v.is_number_unsigned()) throw ParameterError("json_schema", "field elements must be non-negative integers");
    return v.get<std::uint64_t>();
}

}  // namespace

json params_to_json(const CodeParams& p) {
    return json{{"q", p.F().q()},       {"m", p.F().m()},   {"modulus", p.F().modulus()},
                {"gamma", p.F().gamma().value}, {"ell", p.ell}, {"h", p.h},
                {"N", p.N},             {"k", p.k}};
}

CodeParams params_from_json(const json& j) {
    if (!j.is_object()) throw ParameterError("json_schema", "code parameters must be a JSON object");
    FieldParams fp;
    fp.q = get_count(j, "q");
    fp.m = static_cast<unsigned>(get_count(j, "m"));
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        for (const auto& c : j.at("modulus")) fp.modulus.push_back(static_cast<std::uint32_t>(get_encoding(c)));
    }
    if (j.contains("gamma") && !j.at("gamma").is_null()) fp.gamma = get_encoding(j.at("gamma"));
    auto field = Field::make(std::move(fp));
    return make_code_params(std::move(field), get_count(j, "ell"), get_count(j, "h"), get_count(j, "N"),
                            get_count(j, "k"));
}

json word_to_json(const FoldedWord& word) {
    json blocks = json::array();
    for (const auto& b : word.blocks) {
        json rows = json::array();
        for (std::size_t r = 0; r < b.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(r, c).value);
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return json{{"blocks", std::move(blocks)}};
}

FoldedWord word_from_json(const CodeParams& params, const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
        throw ParameterError("json_schema", "word must be an object with a 'blocks' array");
    }
    FoldedWord word;
    for (const auto& jb : j.at("blocks")) {
        if (!jb.is_array() || jb.size() != params.h) throw ParameterError("word_shape", "word block must have h rows");
        Matrix<FieldElement> b(params.h, params.folded_block_length());
        for (std::size_t r = 0; r < params.h; ++r) {
            const auto& row = jb.at(r);
            if (!row.is_array() || row.size() != b.cols()) {
                throw ParameterError("word_shape", "word row must have N / ell entries");
            }
            for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = params.F().element(get_encoding(row.at(c)));
        }
        word.blocks.push_back(std::move(b));
    }
    check_shape(params, word);
    return word;
}

json message_to_json(const CodeParams& params, const SkewPoly& f) {
    json arr = json::array();
    for (const auto& c : f.padded(params.k)) arr.push_back(c.value);
    return json{{"message", std::move(arr)}};
}

SkewPoly message_from_json(const CodeParams& params, const json& j) {
    const json& arr = j.is_object() ? j.at("message") : j;
    if (!arr.is_array()) throw ParameterError("json_schema", "message must be an array of field elements");
    if (arr.size() > params.k) throw ParameterError("message_degree", "message has more than k coefficients");
    std::vector<FieldElement> coeffs;
    for (const auto& v : arr) coeffs.push_back(params.F().element(get_encoding(v)));
    return SkewPoly(std::move(coeffs));
}

json outcome_to_json(const CodeParams& params, const DecodeOutcome& outcome, DecodeMode mode) {
    json messages = json::array();
    for (const auto& f : outcome.messages) messages.push_back(message_to_json(params, f).at("message"));
    const auto& d = outcome.diagnostics;
    json j{{"kind", to_string(outcome.kind)},
           {"mode", to_string(mode)},
           {"messages", std::move(messages)},
           {"diagnostics",
            {{"D", d.D},
             {"d_I", d.d_I},
             {"interpolation_rank", d.interpolation_rank},
             {"rank_B", d.rank_B},
             {"d_RF", d.d_RF},
             {"candidate_count", d.candidate_count},
             {"verified_count", d.verified_count},
             {"verification_rejected", d.verification_rejected}}}};
    if (outcome.kind == OutcomeKind::Failure) j["reason"] = outcome.failure_reason;
    return j;
}

json load_json(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return json::parse(source);
        std::ifstream in(source);
        if (!in) throw ParameterError("input_file", "cannot open '" + source + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParameterError("json_syntax", std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace flrs::io
