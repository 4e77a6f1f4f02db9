#include "powerfree/word.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace powerfree {

Symbol Symbol::from_char(char c) {
  if (c < '1' || c > '3')
    throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
  return Symbol(c - '0');
}

TernaryWord TernaryWord::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || c > '3')
      throw std::invalid_argument("invalid character '" + std::string(1, c) + "' at position " +
                                  std::to_string(i) + " (expected 1, 2 or 3)");
    symbols.emplace_back(c - '0');
  }
  return TernaryWord(std::move(symbols));
}

TernaryWord TernaryWord::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("factor leaves the word");
  return TernaryWord(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                         symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

TernaryWord TernaryWord::with_symbol(std::size_t pos, Symbol s) const {
  std::vector<Symbol> copy = symbols_;
  copy.at(pos) = s;
  return TernaryWord(std::move(copy));
}

std::string TernaryWord::to_string() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : symbols_) out.push_back(s.to_char());
  return out;
}

std::string TernaryWord::to_spaced_string() const {
  std::string out;
  out.reserve(size() + size() / 3);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0 && i % 3 == 0) out.push_back(' ');
    out.push_back(symbols_[i].to_char());
  }
  return out;
}

TernaryWord operator+(const TernaryWord& a, const TernaryWord& b) {
  std::vector<Symbol> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.symbols_.begin(), a.symbols_.end());
  out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
  return TernaryWord(std::move(out));
}

std::string Permutation3::to_string() const {
  return {images_[0].to_char(), images_[1].to_char(), images_[2].to_char()};
}

TernaryWord apply_permutation(const Permutation3& perm, const TernaryWord& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(perm(s));
  return TernaryWord(std::move(out));
}

TernaryWord phi(const TernaryWord& w) {
  std::vector<Symbol> out;
  out.reserve(3 * w.size());
  for (Symbol s : w) out.push_back(SIGMA(s));
  out.insert(out.end(), w.begin(), w.end());
  for (Symbol s : w) out.push_back(RHO(s));
  return TernaryWord(std::move(out));
}

TernaryWord generate(unsigned n, unsigned cap) {
  if (n > cap)
    throw ResourceLimitError("level " + std::to_string(n) + " exceeds generation cap " +
                             std::to_string(cap));
  TernaryWord w({kTwo});
  for (unsigned k = 0; k < n; ++k) w = phi(w);
  return w;
}

std::int64_t half_width(unsigned n) {
  if (n > 39) throw std::overflow_error("level too large for 64-bit indices");
  std::int64_t p = 1;
  for (unsigned k = 0; k < n; ++k) p *= 3;
  return (p - 1) / 2;
}

namespace {

// Read-mostly memo for symbol_at; entries are immutable once inserted.
const TernaryWord& cached_level(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const TernaryWord>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const TernaryWord>(generate(n, n));
  return *slot;
}

}  // namespace

Symbol symbol_at(unsigned n, std::int64_t i, unsigned cap) {
  if (n > cap)
    throw ResourceLimitError("level " + std::to_string(n) + " exceeds generation cap " +
                             std::to_string(cap));
  const std::int64_t h = half_width(n);
  if (i < -h || i > h)
    throw std::out_of_range("index " + std::to_string(i) + " outside [-" + std::to_string(h) +
                            ", " + std::to_string(h) + "] at level " + std::to_string(n));
  return cached_level(n)[static_cast<std::size_t>(i + h)];
}

namespace {

void require_triple_length(const TernaryWord& w) {
  if (w.size() % 3 != 0)
    throw std::invalid_argument("word length " + std::to_string(w.size()) +
                                " is not divisible by 3");
}

}  // namespace

TernaryWord extract_middles(const TernaryWord& w) {
  require_triple_length(w);
  std::vector<Symbol> out;
  out.reserve(w.size() / 3);
  for (std::size_t k = 1; k < w.size(); k += 3) out.push_back(w[k]);
  return TernaryWord(std::move(out));
}

std::vector<TernaryWord> triples(const TernaryWord& w) {
  require_triple_length(w);
  std::vector<TernaryWord> blocks;
  blocks.reserve(w.size() / 3);
  for (std::size_t k = 0; k < w.size(); k += 3) blocks.push_back(w.factor(k, 3));
  return blocks;
}

bool is_permutation_triple(const TernaryWord& w, std::size_t pos) {
  if (pos + 3 > w.size()) return false;
  const Symbol a = w[pos], b = w[pos + 1], c = w[pos + 2];
  return a != b && a != c && b != c;
}

}  // namespace powerfree
