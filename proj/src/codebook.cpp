#include "pearson/codebook.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pearson/errors.hpp"

namespace pearson {

std::size_t Codebook::SymbolsHash::operator()(
    const std::vector<Symbol>& s) const noexcept {
  // FNV-1a over the symbol values.
  std::uint64_t h = 1469598103934665603ULL;
  for (Symbol v : s) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Codebook::Codebook(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
  if (q < 2) {
    throw std::invalid_argument("alphabet size must be at least 2");
  }
  if (q > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size exceeds " +
                                std::to_string(kMaxAlphabet));
  }
  if (n < 1) {
    throw std::invalid_argument("word length must be at least 1");
  }
}

void Codebook::add(Word w) {
  if (w.q() != q_ || w.n() != n_) {
    throw std::invalid_argument("word " + w.to_string() +
                                " does not match codebook (q=" +
                                std::to_string(q_) + ", n=" +
                                std::to_string(n_) + ")");
  }
  if (!index_.insert(w.symbols()).second) {
    throw std::invalid_argument("duplicate word " + w.to_string());
  }
  words_.push_back(std::move(w));
}

bool Codebook::contains(const Word& w) const {
  return index_.count(w.symbols()) != 0;
}

namespace {

// Strips one full-line comment or returns the line unchanged; only lines
// whose first non-space character is '#' are comments.
bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

}  // namespace

Codebook load_codebook(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint32_t q = 0;
  std::uint64_t n = 0;

  // Header: first non-comment line is "q n".
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream hs(line);
    if (!(hs >> q >> n)) {
      throw ParseError(lineno, "expected header \"q n\"");
    }
    std::string rest;
    if (hs >> rest) {
      throw ParseError(lineno, "trailing content after header \"q n\"");
    }
    if (q < 2) throw ParseError(lineno, "alphabet size must be at least 2");
    if (n < 1) throw ParseError(lineno, "word length must be at least 1");
    have_header = true;
    break;
  }
  if (!have_header) {
    throw ParseError(lineno, "missing header \"q n\"");
  }

  Codebook cb(q, static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ws(line);
    std::vector<Symbol> symbols;
    symbols.reserve(static_cast<std::size_t>(n));
    std::int64_t value = 0;
    while (ws >> value) {
      if (value < 0 || static_cast<std::uint64_t>(value) >= q) {
        throw ParseError(lineno, "symbol " + std::to_string(value) +
                                     " out of range for q=" +
                                     std::to_string(q));
      }
      symbols.push_back(static_cast<Symbol>(value));
    }
    if (!ws.eof()) {
      throw ParseError(lineno, "malformed symbol");
    }
    if (symbols.size() != n) {
      throw ParseError(lineno, "expected " + std::to_string(n) +
                                   " symbols, got " +
                                   std::to_string(symbols.size()));
    }
    try {
      cb.add(Word(q, std::move(symbols)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return cb;
}

Codebook load_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open " + path);
  }
  try {
    return load_codebook(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.message());
  }
}

void save_codebook(const Codebook& cb, std::ostream& out) {
  out << cb.q() << ' ' << cb.n() << '\n';
  for (const Word& w : cb.words()) {
    const auto& s = w.symbols();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

void save_codebook_file(const Codebook& cb, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  save_codebook(cb, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

}  // namespace pearson
