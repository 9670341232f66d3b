#include "pearson/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pearson {

Word::Word(std::uint32_t q, std::vector<Symbol> symbols)
    : q_(q), symbols_(std::move(symbols)) {
  if (q_ < 2) {
    throw std::invalid_argument("alphabet size must be at least 2");
  }
  if (q_ > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size exceeds " +
                                std::to_string(kMaxAlphabet));
  }
  if (symbols_.empty()) {
    throw std::invalid_argument("word must have at least one symbol");
  }
  for (Symbol s : symbols_) {
    if (s >= q_) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " out of range for q=" + std::to_string(q_));
    }
  }
}

bool Word::is_constant() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](Symbol s) { return s == symbols_.front(); });
}

std::string Word::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(symbols_[i]);
  }
  s += ')';
  return s;
}

bool operator==(const Word& a, const Word& b) noexcept {
  return a.symbols() == b.symbols();
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  return std::lexicographical_compare_three_way(
      a.symbols().begin(), a.symbols().end(), b.symbols().begin(),
      b.symbols().end());
}

Symbol word_min(const Word& w) {
  return *std::min_element(w.symbols().begin(), w.symbols().end());
}

Symbol word_max(const Word& w) {
  return *std::max_element(w.symbols().begin(), w.symbols().end());
}

Symbol word_gcd(const Word& w) {
  Symbol g = 0;  // gcd(0, k) = k, so zero symbols never contribute
  for (Symbol s : w.symbols()) {
    g = std::gcd(g, s);
    if (g == 1) break;
  }
  if (g == 0) {
    throw std::domain_error("gcd undefined for zero word");
  }
  return g;
}

}  // namespace pearson
