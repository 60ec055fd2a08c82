#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subword/word.hpp"

namespace subword {

enum class Family { A, B, I2 };

std::string family_name(Family f);

class CoxeterSystem;

/// Group element in canonical form.  The backing data depends on the family:
///   A(r)  : one-line permutation of {1..r+1}
///   B(r)  : signed window [w(1)..w(r)], |w| a permutation of {1..r}
///   I2(m) : {rotation count mod m, reflection flag}
/// Lengths are computed once at construction; equality compares the backing
/// data only, so equal group elements always compare equal.
class GroupElement {
public:
  const std::vector<int>& data() const { return data_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.data_ == b.data_;
  }

private:
  friend class CoxeterSystem;
  GroupElement(std::vector<int> data, int length)
      : data_(std::move(data)), length_(length) {}

  std::vector<int> data_;
  int length_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : g.data()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Finite Coxeter system descriptor with exact element arithmetic.  Supported
/// backends: A(1..7), B(2..5) with the sign generator labelled s1 (so
/// m(s1,s2)=4), and dihedral I2(m) for 3 <= m <= 12.
class CoxeterSystem {
public:
  static CoxeterSystem type_a(int rank);
  static CoxeterSystem type_b(int rank);
  static CoxeterSystem dihedral(int m);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dihedral_m() const { return m_; }
  long long group_order() const;
  std::string name() const;  // "A3", "B4", "I2(7)"

  /// Coxeter matrix entry m(s,t), 1-based.
  int coxeter_entry(int s, int t) const;

  void check_generator(int s) const;  // throws InvalidGenerator

  GroupElement identity() const;
  /// Builds an element from backing data, validating shape and content.
  GroupElement element_from_data(const std::vector<int>& data) const;

  GroupElement right_multiply(const GroupElement& g, int s) const;
  GroupElement left_multiply(int s, const GroupElement& g) const;

  int length(const GroupElement& g) const { return g.length(); }

  std::string describe(const GroupElement& g) const;  // "[2,4,3,1]"

private:
  CoxeterSystem(Family f, int rank, int m) : family_(f), rank_(rank), m_(m) {}
  int length_of(const std::vector<int>& data) const;
  GroupElement make(std::vector<int> data) const;

  Family family_;
  int rank_;
  int m_;  // only meaningful for I2
};

GroupElement element_of_word(const CoxeterSystem& sys, const Word& w);
bool is_reduced_word(const CoxeterSystem& sys, const Word& w);

std::vector<int> left_descents(const CoxeterSystem& sys, const GroupElement& g);
std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& g);

/// All reduced expressions, sorted lexicographically by generator index.
std::vector<Word> reduced_words(const CoxeterSystem& sys, const GroupElement& g);

/// The lexicographically first reduced word (smallest left descent peeled
/// repeatedly).
Word lex_first_reduced_word(const CoxeterSystem& sys, const GroupElement& g);

/// Bruhat order test via the lifting-property scan over one reduced word of w.
bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& u,
                const GroupElement& w);

/// Fold d <- d*s applied only when the length goes up.
GroupElement demazure_product(const CoxeterSystem& sys, const Word& w);

/// Every element of the group, sorted by (length, backing data).
std::vector<GroupElement> all_elements(const CoxeterSystem& sys);

}  // namespace subword
