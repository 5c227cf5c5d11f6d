#include "gauss_lintel/format.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace gauss_lintel {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Character-level scanner for the lintel listing format.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "' at column " +
                           std::to_string(pos_ + 1),
                       pos_);
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) {
        throw ParseError("number too large at column " +
                             std::to_string(start + 1),
                         start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a number at column " +
                           std::to_string(pos_ + 1),
                       pos_);
    }
    return static_cast<int>(value);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_lintel(const Lintel& L) {
  std::string out = "[";
  bool first = true;
  for (const Chord& c : L.chords()) {
    if (!first) out += ',';
    first = false;
    out += '[';
    out += std::to_string(c.first);
    out += ',';
    out += std::to_string(c.second);
    out += ']';
  }
  out += ']';
  return out;
}

SortedLintel parse_lintel(std::string_view text) {
  Scanner sc(text);
  sc.expect('[');
  std::vector<Chord> chords;
  if (!sc.accept(']')) {
    do {
      sc.expect('[');
      Chord c;
      c.first = sc.number();
      sc.expect(',');
      c.second = sc.number();
      sc.expect(']');
      chords.push_back(c);
    } while (sc.accept(','));
    sc.expect(']');
  }
  sc.accept('.');  // the listing style allows a trailing period
  if (!sc.done()) {
    throw ParseError("unexpected trailing input at column " +
                         std::to_string(sc.pos() + 1),
                     sc.pos());
  }
  return sort_lintel(Lintel(std::move(chords)));
}

std::string format_gauss_word(const GaussWord& w) {
  const auto& sym = w.symbols();
  const bool compact =
      w.size() <= 9 &&
      std::all_of(sym.begin(), sym.end(), [](int s) { return 0 <= s && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(sym[i]);
  }
  return out;
}

GaussWord parse_gauss_word(std::string_view text) {
  const bool delimited =
      text.find_first_of(", \t") != std::string_view::npos;
  std::vector<int> symbols;
  if (delimited) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || is_space(text[i]))) ++i;
      if (i >= text.size()) break;
      std::size_t start = i;
      int value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (i == start) {
        throw ParseError("expected a decimal symbol at column " +
                             std::to_string(i + 1),
                         i);
      }
      symbols.push_back(value);
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const auto c = static_cast<unsigned char>(text[i]);
      if (std::isdigit(c)) {
        symbols.push_back(c - '0');
      } else if (std::isalpha(c)) {
        symbols.push_back(static_cast<int>(c));
      } else {
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' at column " + std::to_string(i + 1),
                         i);
      }
    }
  }
  return GaussWord(std::move(symbols));
}

bool looks_like_lintel(std::string_view text) {
  for (char c : text) {
    if (is_space(c)) continue;
    return c == '[';
  }
  return false;
}

}  // namespace gauss_lintel
