#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "pearson/word.hpp"

namespace pearson {

// Ordered, duplicate-free collection of words sharing (q, n). Order is
// insertion order; the enumeration routines insert in lexicographic order.
class Codebook {
 public:
  Codebook(std::uint32_t q, std::size_t n);  // q >= 2, n >= 1

  // Rejects (q, n) mismatches and duplicates (std::invalid_argument).
  void add(Word w);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& operator[](std::size_t i) const noexcept { return words_[i]; }
  bool contains(const Word& w) const;

 private:
  struct SymbolsHash {
    std::size_t operator()(const std::vector<Symbol>& s) const noexcept;
  };

  std::uint32_t q_;
  std::size_t n_;
  std::vector<Word> words_;
  std::unordered_set<std::vector<Symbol>, SymbolsHash> index_;
};

// Text format: any number of '#' comment lines or blank lines, a header line
// "q n", then one word per line as space-separated decimal symbols.
// save emits no comments; load(save(cb)) reproduces cb exactly.
Codebook load_codebook(std::istream& in);
Codebook load_codebook_file(const std::string& path);
void save_codebook(const Codebook& cb, std::ostream& out);
void save_codebook_file(const Codebook& cb, const std::string& path);

}  // namespace pearson
