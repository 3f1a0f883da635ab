#include "flrs/code.hpp"

#include <string>

#include "flrs/errors.hpp"

namespace flrs {

CodeParams make_code_params(FieldPtr field, std::size_t ell, std::size_t h, std::size_t N, std::size_t k) {
    if (!field) throw ParameterError("field", "missing field");
    CodeParams p;
    p.field = std::move(field);
    p.ell = ell;
    p.h = h;
    p.N = N;
    p.k = k;
    if (ell >= 1 && ell <= p.field->q() - 1) p.a = p.field->conjugacy_representatives(ell);
    validate(p);
    return p;
}

void validate(const CodeParams& p) {
    if (!p.field) throw ParameterError("field", "missing field");
    if (p.ell < 1) throw ParameterError("ell_positive", "block count ell must be at least 1");
    if (p.h < 1) throw ParameterError("h_positive", "folding parameter h must be at least 1");
    if (p.N < 1) throw ParameterError("N_positive", "folded length N must be at least 1");
    if (p.ell > p.field->q() - 1) throw ParameterError("conjugacy_classes", "not enough conjugacy classes");
    if (p.N % p.ell != 0) throw ParameterError("ell_divides_N", "block count ell must divide N");
    if (p.block_length() > p.field->m()) {
        throw ParameterError("block_length", "block exceeds extension degree: n_i = " +
                                                 std::to_string(p.block_length()) + " > m");
    }
    if (p.k < 1 || p.k > p.n()) throw ParameterError("dimension", "dimension k must satisfy 1 <= k <= n");
    if (p.a != p.field->conjugacy_representatives(p.ell)) {
        throw ParameterError("evaluation_parameters", "evaluation parameters must be gamma^0 .. gamma^{ell-1}");
    }
}

FoldedWord zero_word(const CodeParams& p) {
    FoldedWord w;
    w.blocks.assign(p.ell, Matrix<FieldElement>(p.h, p.folded_block_length()));
    return w;
}

void check_shape(const CodeParams& p, const FoldedWord& word) {
    if (word.blocks.size() != p.ell) throw ParameterError("word_shape", "word must have ell blocks");
    for (const auto& b : word.blocks) {
        if (b.rows() != p.h || b.cols() != p.folded_block_length()) {
            throw ParameterError("word_shape", "word block must be h x (N / ell)");
        }
        for (auto v : b.data()) {
            if (v.value >= p.field->order()) throw ParameterError("field_element", "word entry out of range");
        }
    }
}

namespace {

template <class Op>
FoldedWord combine(const FoldedWord& x, const FoldedWord& y, Op op) {
    if (x.blocks.size() != y.blocks.size()) throw ParameterError("word_shape", "block count mismatch");
    FoldedWord out = x;
    for (std::size_t i = 0; i < x.blocks.size(); ++i) {
        const auto& yb = y.blocks[i];
        auto& ob = out.blocks[i];
        if (ob.rows() != yb.rows() || ob.cols() != yb.cols()) throw ParameterError("word_shape", "block shape mismatch");
        for (std::size_t r = 0; r < ob.rows(); ++r)
            for (std::size_t c = 0; c < ob.cols(); ++c) ob(r, c) = op(ob(r, c), yb(r, c));
    }
    return out;
}

}  // namespace

FoldedWord word_add(const Field& F, const FoldedWord& x, const FoldedWord& y) {
    return combine(x, y, [&](FieldElement a, FieldElement b) { return F.add(a, b); });
}

FoldedWord word_sub(const Field& F, const FoldedWord& x, const FoldedWord& y) {
    return combine(x, y, [&](FieldElement a, FieldElement b) { return F.sub(a, b); });
}

std::vector<FieldElement> code_locators(const CodeParams& p) {
    std::vector<FieldElement> loc(p.block_length());
    FieldElement cur = p.F().one();
    for (auto& v : loc) {
        v = cur;
        cur = p.F().mul(cur, p.F().gamma());
    }
    return loc;
}

FoldedWord encode(const CodeParams& p, const SkewPoly& f) {
    if (f.degree() >= static_cast<long long>(p.k)) {
        throw ParameterError("message_degree", "message polynomial must have degree < k");
    }
    const Field& F = p.F();
    const auto locators = code_locators(p);
    FoldedWord word = zero_word(p);
    for (std::size_t i = 0; i < p.ell; ++i) {
        auto& block = word.blocks[i];
        for (std::size_t j = 0; j < block.cols(); ++j)
            for (std::size_t r = 0; r < p.h; ++r) block(r, j) = op_evaluate(F, f, locators[j * p.h + r], p.a[i]);
    }
    return word;
}

FoldedWord fold(std::span<const FieldElement> v, std::size_t ell, std::size_t h) {
    if (ell == 0 || h == 0 || v.size() % ell != 0 || (v.size() / ell) % h != 0) {
        throw ParameterError("fold_shape", "vector length must be a multiple of ell * h");
    }
    const std::size_t ni = v.size() / ell;
    FoldedWord word;
    word.blocks.assign(ell, Matrix<FieldElement>(h, ni / h));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t w = 0; w < ni; ++w) word.blocks[i](w % h, w / h) = v[i * ni + w];
    return word;
}

std::vector<FieldElement> unfold(const FoldedWord& word) {
    std::vector<FieldElement> v;
    for (const auto& block : word.blocks)
        for (std::size_t c = 0; c < block.cols(); ++c)
            for (std::size_t r = 0; r < block.rows(); ++r) v.push_back(block(r, c));
    return v;
}

MinDistance min_distance(const CodeParams& p) {
    const std::size_t ceil_kh = (p.k + p.h - 1) / p.h;
    return {p.N - ceil_kh + 1, p.k % p.h == 0};
}

}  // namespace flrs
