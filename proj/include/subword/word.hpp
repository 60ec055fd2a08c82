#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace subword {

/// Ordered sequence of 1-based generator indices.  Positions run 1..size().
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<int> ls) : letters(ls) {}

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  int letter(int pos) const { return letters[static_cast<std::size_t>(pos) - 1]; }

  /// Parses "1,2,1,3" (whitespace around entries tolerated).
  static Word parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
};

}  // namespace subword
