#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subword/coxeter.hpp"
#include "subword/word.hpp"

namespace subword {

/// A (system, word, element) problem instance as it arrives on the command
/// line.  pi is given either as backing data (one-line permutation, signed
/// window, or dihedral pair) or as a reduced word.
struct InstanceSpec {
  Family family = Family::A;
  int rank = 3;  // A and B
  int m = 5;     // I2
  Word word;
  std::optional<std::vector<int>> pi_data;
  std::optional<Word> pi_word;

  CoxeterSystem make_system() const;
  /// Validates pi_word for reducedness (NotReduced) when given as a word.
  GroupElement make_pi(const CoxeterSystem& sys) const;

  /// Reproducer flags, e.g. "--family A --rank 3 --word 1,2,1 --pi 2,1,4,3".
  std::string flags_string() const;

  static Family parse_family(const std::string& text);
};

}  // namespace subword
