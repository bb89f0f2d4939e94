#include "ncfock/words.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ncfock {

void check_word(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("generator count must be >= 1");
  for (int letter : w) {
    if (letter < 1 || letter > n)
      throw std::invalid_argument("word letter " + std::to_string(letter) +
                                  " outside {1.." + std::to_string(n) + "}");
  }
}

std::int64_t words_at_degree(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("words_at_degree: bad arguments");
  std::int64_t count = 1;
  for (int j = 0; j < k; ++j) {
    if (count > std::numeric_limits<std::int64_t>::max() / n)
      throw std::overflow_error("words_at_degree: n^k overflows int64");
    count *= n;
  }
  return count;
}

std::int64_t degree_offset(int n, int k) {
  std::int64_t offset = 0, pw = 1;
  for (int j = 0; j < k; ++j) {
    offset += pw;
    if (pw > std::numeric_limits<std::int64_t>::max() / n)
      throw std::overflow_error("degree_offset: overflow");
    pw *= n;
  }
  return offset;
}

std::int64_t truncation_dim(int n, int degree) {
  return degree_offset(n, degree + 1);
}

void for_each_word(int n, int k, const std::function<void(const Word&)>& fn) {
  if (n < 1 || k < 0) throw std::invalid_argument("for_each_word: bad arguments");
  Word w(static_cast<std::size_t>(k), 1);
  if (k == 0) {
    fn(w);
    return;
  }
  // Odometer over base-n digits, most significant letter first.
  while (true) {
    fn(w);
    int pos = k - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
}

std::vector<Word> enumerate_words(int n, int k, std::int64_t cap) {
  const std::int64_t count = words_at_degree(n, k);
  if (count > cap)
    throw std::length_error("enumerate_words: n^k exceeds materialization cap");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_word(n, k, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::int64_t word_index(const Word& w, int n) {
  check_word(w, n);
  std::int64_t rank = 0;
  for (int letter : w) rank = rank * n + (letter - 1);
  return degree_offset(n, static_cast<int>(w.size())) + rank;
}

Word index_word(std::int64_t index, int n) {
  if (index < 0) throw std::out_of_range("index_word: negative index");
  if (n < 1) throw std::invalid_argument("index_word: n must be >= 1");
  int k = 0;
  std::int64_t remaining = index;
  while (remaining >= words_at_degree(n, k)) {
    remaining -= words_at_degree(n, k);
    ++k;
  }
  Word w(static_cast<std::size_t>(k), 1);
  for (int pos = k - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<int>(remaining % n) + 1;
    remaining /= n;
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word reverse(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::pair<Word, Word>> two_factorizations(const Word& gamma) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(gamma.size() + 1);
  for (std::size_t cut = 0; cut <= gamma.size(); ++cut) {
    out.emplace_back(Word(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(cut)),
                     Word(gamma.begin() + static_cast<std::ptrdiff_t>(cut), gamma.end()));
  }
  return out;
}

void for_each_ordered_factorization(const Word& alpha, int j,
                                    const std::function<void(const std::vector<Word>&)>& fn) {
  const int len = static_cast<int>(alpha.size());
  if (j < 1 || j > len)
    throw std::invalid_argument("ordered_factorizations: j must satisfy 1 <= j <= |alpha|");
  // Choose j-1 interior cut positions 0 < c_1 < ... < c_{j-1} < len.
  std::vector<int> cuts(static_cast<std::size_t>(j - 1));
  for (int i = 0; i < j - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Word> parts(static_cast<std::size_t>(j));
  auto emit = [&] {
    int prev = 0;
    for (int i = 0; i < j - 1; ++i) {
      parts[static_cast<std::size_t>(i)] =
          Word(alpha.begin() + prev, alpha.begin() + cuts[static_cast<std::size_t>(i)]);
      prev = cuts[static_cast<std::size_t>(i)];
    }
    parts[static_cast<std::size_t>(j - 1)] = Word(alpha.begin() + prev, alpha.end());
    fn(parts);
  };
  if (j == 1) {
    emit();
    return;
  }
  while (true) {
    emit();
    int pos = j - 2;
    while (pos >= 0 && cuts[static_cast<std::size_t>(pos)] == len - (j - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cuts[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < j - 1; ++i)
      cuts[static_cast<std::size_t>(i)] = cuts[static_cast<std::size_t>(i - 1)] + 1;
  }
}

std::vector<std::vector<Word>> ordered_factorizations(const Word& alpha, int j) {
  std::vector<std::vector<Word>> out;
  for_each_ordered_factorization(alpha, j, [&](const std::vector<Word>& parts) {
    out.push_back(parts);
  });
  return out;
}

}  // namespace ncfock
