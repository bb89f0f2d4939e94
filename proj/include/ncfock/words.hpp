#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ncfock {

/// A word in the unital free semigroup on n generators. Letters are 1-based
/// (g_1..g_n); the empty vector is the unit g_0.
using Word = std::vector<int>;

/// Throws std::invalid_argument unless every letter of w lies in {1..n}.
void check_word(const Word& w, int n);

/// Number of words of length exactly k, i.e. n^k. Throws on overflow.
std::int64_t words_at_degree(int n, int k);

/// Index of the first length-k word in graded-lex order: sum_{j<k} n^j.
std::int64_t degree_offset(int n, int k);

/// Dimension of the degree-<=N truncation: (n^{N+1}-1)/(n-1), or N+1 for n=1.
std::int64_t truncation_dim(int n, int degree);

/// Streams all n^k words of length k in lexicographic order (letter 1 < 2 < ... < n).
void for_each_word(int n, int k, const std::function<void(const Word&)>& fn);

/// Materializes the length-k slice. Guarded by a size cap (default 10^6 words).
std::vector<Word> enumerate_words(int n, int k, std::int64_t cap = 1000000);

/// Graded-lexicographic index: degree-major, then lex within a degree.
/// index(g_0) = 0. Bijection onto {0 .. truncation_dim-1} on each truncation.
std::int64_t word_index(const Word& w, int n);

/// Inverse of word_index. Throws std::out_of_range for negative indices.
Word index_word(std::int64_t index, int n);

Word concat(const Word& a, const Word& b);

/// reverse(g_{i_1}...g_{i_p}) = g_{i_p}...g_{i_1}; an involution and an
/// anti-homomorphism for concatenation.
Word reverse(Word w);

/// All ordered pairs (beta, alpha) with beta*alpha = gamma; exactly |gamma|+1
/// of them, including (g_0, gamma) and (gamma, g_0).
std::vector<std::pair<Word, Word>> two_factorizations(const Word& gamma);

/// All j-tuples (gamma_1,...,gamma_j) of nonempty words with product alpha.
/// Count = C(|alpha|-1, j-1). Requires 1 <= j <= |alpha|.
std::vector<std::vector<Word>> ordered_factorizations(const Word& alpha, int j);

/// Streams ordered factorizations without materializing the full list.
void for_each_ordered_factorization(const Word& alpha, int j,
                                    const std::function<void(const std::vector<Word>&)>& fn);

}  // namespace ncfock
