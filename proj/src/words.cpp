#include "subword/words.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "subword/errors.hpp"

namespace subword {

// ---------------------------------------------------------------------------
// Word parsing / rendering

Word Word::parse(const std::string& text) {
  std::vector<int> letters;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad word entry '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw ParseError("bad word entry '" + token + "'");
    letters.push_back(value);
  }
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

namespace {

void check_letters(const CoxeterSystem& sys, const Word& q) {
  for (int s : q.letters) sys.check_generator(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// containment and representations

bool contains(const CoxeterSystem& sys, const Word& q, const GroupElement& pi) {
  check_letters(sys, q);
  GroupElement residual = pi;
  for (int i = q.size(); i >= 1; --i) {
    if (residual.is_identity()) return true;
    GroupElement shorter = sys.right_multiply(residual, q.letter(i));
    if (shorter.length() < residual.length()) residual = std::move(shorter);
  }
  return residual.is_identity();
}

namespace {

// Take-before-skip DFS over positions.  Taking position i requires its letter
// to be a left descent of the residual, so partial products stay reduced and
// every accepted subword has exactly length(pi) positions.  Take-first order
// emits the representations with lex-decreasing monomials.
void representations_rec(const CoxeterSystem& sys, const Word& q, int i,
                         const GroupElement& residual, std::vector<int>& stack,
                         std::vector<Subword>& out) {
  if (residual.is_identity()) {
    out.push_back(stack);
    return;
  }
  int need = residual.length();
  if (need > q.size() - i + 1) return;
  int s = q.letter(i);
  GroupElement peeled = sys.left_multiply(s, residual);
  if (peeled.length() < need) {
    stack.push_back(i);
    representations_rec(sys, q, i + 1, peeled, stack, out);
    stack.pop_back();
  }
  representations_rec(sys, q, i + 1, residual, stack, out);
}

}  // namespace

std::vector<Subword> representations(const CoxeterSystem& sys, const Word& q,
                                     const GroupElement& pi) {
  check_letters(sys, q);
  std::vector<Subword> out;
  std::vector<int> stack;
  representations_rec(sys, q, 1, pi, stack, out);
  return out;
}

// ---------------------------------------------------------------------------
// Demazure census

namespace {

struct CensusContext {
  const CoxeterSystem& sys;
  const Word& q;
  const GroupElement& pi;
  const std::function<void(std::uint64_t, int)>& visit;
  std::unordered_map<GroupElement, bool, GroupElementHash> below;

  bool below_pi(const GroupElement& g) {
    auto it = below.find(g);
    if (it != below.end()) return it->second;
    bool value = bruhat_leq(sys, g, pi);
    below.emplace(g, value);
    return value;
  }

  // The fold value only climbs in Bruhat order as positions are appended, so
  // a branch whose fold escaped above pi can never come back.
  void rec(int i, const GroupElement& d, std::uint64_t mask, int taken) {
    if (!below_pi(d)) return;
    if (i > q.size()) {
      if (d == pi) visit(mask, taken);
      return;
    }
    rec(i + 1, d, mask, taken);
    GroupElement ds = sys.right_multiply(d, q.letter(i));
    const GroupElement& next = ds.length() > d.length() ? ds : d;
    rec(i + 1, next, mask | (std::uint64_t{1} << (i - 1)), taken + 1);
  }
};

}  // namespace

void for_each_demazure_subword(const CoxeterSystem& sys, const Word& q,
                               const GroupElement& pi, int census_limit,
                               const std::function<void(std::uint64_t, int)>& visit) {
  check_letters(sys, q);
  if (q.size() > census_limit) throw WordTooLarge(q.size(), census_limit);
  CensusContext ctx{sys, q, pi, visit, {}};
  ctx.rec(1, sys.identity(), 0, 0);
}

std::map<int, long long> demazure_census(const CoxeterSystem& sys, const Word& q,
                                         const GroupElement& pi, int census_limit) {
  std::map<int, long long> counts;
  for_each_demazure_subword(sys, q, pi, census_limit,
                            [&](std::uint64_t, int size) { ++counts[size]; });
  return counts;
}

// ---------------------------------------------------------------------------
// repeated-letter construction

Word make_repeated_word(const CoxeterSystem& sys, const Word& rw, int position,
                        int reps) {
  check_letters(sys, rw);
  if (!is_reduced_word(sys, rw)) throw NotReduced();
  if (position < 1 || position > rw.size()) throw IndexOutOfRange(position);
  if (reps < 1) throw IndexOutOfRange(reps);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(rw.size() + reps - 1));
  for (int i = 1; i <= rw.size(); ++i) {
    int copies = i == position ? reps : 1;
    for (int c = 0; c < copies; ++c) letters.push_back(rw.letter(i));
  }
  return Word(std::move(letters));
}

}  // namespace subword
