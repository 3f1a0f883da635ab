#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flrs/gf.hpp"
#include "flrs/matrix.hpp"
#include "flrs/skew.hpp"

namespace flrs {

/**
 * Parameters of an h-folded linearized Reed-Solomon code with ell blocks,
 * folded length N and dimension k over F_{q^m}.
 *
 * Derived lengths: n = h N (unfolded), n_i = n / ell (unfolded block),
 * N / ell folded columns per block. Code locators are gamma^0 .. gamma^{n_i-1}
 * in every block; block i is evaluated with respect to a[i] = gamma^i.
 */
struct CodeParams {
    FieldPtr field;
    std::size_t ell = 1;
    std::size_t h = 1;
    std::size_t N = 1;
    std::size_t k = 1;
    std::vector<FieldElement> a;

    const Field& F() const noexcept { return *field; }
    std::size_t n() const noexcept { return h * N; }
    std::size_t block_length() const noexcept { return n() / ell; }
    std::size_t folded_block_length() const noexcept { return N / ell; }
};

/// Builds and validates parameters; `a` is filled with conjugacy representatives.
CodeParams make_code_params(FieldPtr field, std::size_t ell, std::size_t h, std::size_t N, std::size_t k);

/// Throws ParameterError naming the first violated constraint.
void validate(const CodeParams& params);

/// ell blocks of h x (N / ell) matrices. Used for codewords, errors and received words.
struct FoldedWord {
    std::vector<Matrix<FieldElement>> blocks;

    friend bool operator==(const FoldedWord&, const FoldedWord&) = default;
};

FoldedWord zero_word(const CodeParams& params);
void check_shape(const CodeParams& params, const FoldedWord& word);
FoldedWord word_add(const Field& F, const FoldedWord& x, const FoldedWord& y);
FoldedWord word_sub(const Field& F, const FoldedWord& x, const FoldedWord& y);

/// gamma^0, ..., gamma^{n_i - 1}
std::vector<FieldElement> code_locators(const CodeParams& params);

/// Entry (r, j) of block i is f(gamma^{j h + r})_{a_i}. Requires deg f < k.
FoldedWord encode(const CodeParams& params, const SkewPoly& f);

/// Reshapes a length-n vector: entry w of block i goes to row w mod h, column w / h.
FoldedWord fold(std::span<const FieldElement> v, std::size_t ell, std::size_t h);
std::vector<FieldElement> unfold(const FoldedWord& word);

struct MinDistance {
    std::size_t distance;  // N - ceil(k / h) + 1
    bool msrd;             // h divides k
};
MinDistance min_distance(const CodeParams& params);

}  // namespace flrs
