#include "subword/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "subword/errors.hpp"

namespace subword {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::I2: return "I2";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// system construction

CoxeterSystem CoxeterSystem::type_a(int rank) {
  if (rank < 1 || rank > 7)
    throw InputError("family A supports rank 1..7, got " + std::to_string(rank));
  return CoxeterSystem(Family::A, rank, 0);
}

CoxeterSystem CoxeterSystem::type_b(int rank) {
  if (rank < 2 || rank > 5)
    throw InputError("family B supports rank 2..5, got " + std::to_string(rank));
  return CoxeterSystem(Family::B, rank, 0);
}

CoxeterSystem CoxeterSystem::dihedral(int m) {
  if (m < 3 || m > 12)
    throw InputError("family I2 supports m in 3..12, got " + std::to_string(m));
  return CoxeterSystem(Family::I2, 2, m);
}

long long CoxeterSystem::group_order() const {
  switch (family_) {
    case Family::A: {
      long long f = 1;
      for (int i = 2; i <= rank_ + 1; ++i) f *= i;
      return f;
    }
    case Family::B: {
      long long f = 1;
      for (int i = 2; i <= rank_; ++i) f *= i;
      return f << rank_;
    }
    case Family::I2: return 2ll * m_;
  }
  return 0;
}

std::string CoxeterSystem::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::I2: return "I2(" + std::to_string(m_) + ")";
  }
  return "?";
}

int CoxeterSystem::coxeter_entry(int s, int t) const {
  check_generator(s);
  check_generator(t);
  if (s == t) return 1;
  switch (family_) {
    case Family::A: return std::abs(s - t) == 1 ? 3 : 2;
    case Family::B:
      if (std::abs(s - t) != 1) return 2;
      return std::min(s, t) == 1 ? 4 : 3;
    case Family::I2: return m_;
  }
  return 2;
}

void CoxeterSystem::check_generator(int s) const {
  if (s < 1 || s > rank_) throw InvalidGenerator(s);
}

// ---------------------------------------------------------------------------
// element construction and lengths

GroupElement CoxeterSystem::make(std::vector<int> data) const {
  int len = length_of(data);
  return GroupElement(std::move(data), len);
}

GroupElement CoxeterSystem::identity() const {
  switch (family_) {
    case Family::A: {
      std::vector<int> d(static_cast<std::size_t>(rank_) + 1);
      std::iota(d.begin(), d.end(), 1);
      return make(std::move(d));
    }
    case Family::B: {
      std::vector<int> d(static_cast<std::size_t>(rank_));
      std::iota(d.begin(), d.end(), 1);
      return make(std::move(d));
    }
    case Family::I2: return make({0, 0});
  }
  throw InputError("unknown family");
}

GroupElement CoxeterSystem::element_from_data(const std::vector<int>& data) const {
  switch (family_) {
    case Family::A: {
      const int n = rank_ + 1;
      if (static_cast<int>(data.size()) != n)
        throw ParseError("one-line permutation needs " + std::to_string(n) + " entries");
      std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
      for (int v : data) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
          throw ParseError("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
      }
      return make(data);
    }
    case Family::B: {
      if (static_cast<int>(data.size()) != rank_)
        throw ParseError("signed window needs " + std::to_string(rank_) + " entries");
      std::vector<bool> seen(static_cast<std::size_t>(rank_) + 1, false);
      for (int v : data) {
        int a = std::abs(v);
        if (a < 1 || a > rank_ || seen[static_cast<std::size_t>(a)])
          throw ParseError("absolute values must form a permutation of 1.." +
                           std::to_string(rank_));
        seen[static_cast<std::size_t>(a)] = true;
      }
      return make(data);
    }
    case Family::I2: {
      if (data.size() != 2) throw ParseError("dihedral element needs a pair (rotation, flag)");
      int k = data[0], e = data[1];
      if (k < 0 || k >= m_) throw ParseError("rotation count must lie in 0.." + std::to_string(m_ - 1));
      if (e != 0 && e != 1) throw ParseError("reflection flag must be 0 or 1");
      return make({k, e});
    }
  }
  throw InputError("unknown family");
}

int CoxeterSystem::length_of(const std::vector<int>& data) const {
  switch (family_) {
    case Family::A: {
      int inv = 0;
      const int n = static_cast<int>(data.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (data[static_cast<std::size_t>(i)] > data[static_cast<std::size_t>(j)]) ++inv;
      return inv;
    }
    case Family::B: {
      // inv(w) + sum_{w(j)<0} |w(j)|, inversions in the natural integer order.
      int len = 0;
      const int n = static_cast<int>(data.size());
      for (int i = 0; i < n; ++i) {
        if (data[static_cast<std::size_t>(i)] < 0) len += -data[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
          if (data[static_cast<std::size_t>(i)] > data[static_cast<std::size_t>(j)]) ++len;
      }
      return len;
    }
    case Family::I2: {
      int k = data[0], e = data[1];
      if (e == 0) return 2 * std::min(k, m_ - k);
      // r^k s1: alternating words (s2 s1)^{k-1} s2 of length 2k-1, or
      // (s1 s2)^{m-k} s1 of length 2(m-k)+1 (k = 0 read modulo m).
      int a = k >= 1 ? 2 * k - 1 : 2 * m_ + 1;
      int b = 2 * ((m_ - k) % m_) + 1;
      return std::min(a, b);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// multiplication

GroupElement CoxeterSystem::right_multiply(const GroupElement& g, int s) const {
  check_generator(s);
  std::vector<int> d = g.data();
  switch (family_) {
    case Family::A:
      std::swap(d[static_cast<std::size_t>(s) - 1], d[static_cast<std::size_t>(s)]);
      break;
    case Family::B:
      if (s == 1)
        d[0] = -d[0];
      else
        std::swap(d[static_cast<std::size_t>(s) - 2], d[static_cast<std::size_t>(s) - 1]);
      break;
    case Family::I2: {
      int k = d[0], e = d[1];
      if (s == 1) {
        d = {k, 1 - e};
      } else {
        d = e == 0 ? std::vector<int>{(k + 1) % m_, 1}
                   : std::vector<int>{(k - 1 + m_) % m_, 0};
      }
      break;
    }
  }
  return make(std::move(d));
}

GroupElement CoxeterSystem::left_multiply(int s, const GroupElement& g) const {
  check_generator(s);
  std::vector<int> d = g.data();
  switch (family_) {
    case Family::A:
      // swap the values s and s+1 wherever they occur
      for (int& v : d) {
        if (v == s) v = s + 1;
        else if (v == s + 1) v = s;
      }
      break;
    case Family::B:
      if (s == 1) {
        for (int& v : d)
          if (std::abs(v) == 1) v = -v;
      } else {
        for (int& v : d) {
          if (std::abs(v) == s - 1) v = v > 0 ? s : -s;
          else if (std::abs(v) == s) v = v > 0 ? s - 1 : -(s - 1);
        }
      }
      break;
    case Family::I2: {
      int k = d[0], e = d[1];
      if (s == 1) d = {(m_ - k) % m_, 1 - e};
      else d = {((1 - k) % m_ + m_) % m_, 1 - e};
      break;
    }
  }
  return make(std::move(d));
}

std::string CoxeterSystem::describe(const GroupElement& g) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < g.data().size(); ++i) {
    if (i) out << ',';
    out << g.data()[i];
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// word operations

GroupElement element_of_word(const CoxeterSystem& sys, const Word& w) {
  GroupElement g = sys.identity();
  for (int s : w.letters) g = sys.right_multiply(g, s);
  return g;
}

bool is_reduced_word(const CoxeterSystem& sys, const Word& w) {
  GroupElement g = sys.identity();
  for (int s : w.letters) {
    GroupElement next = sys.right_multiply(g, s);
    if (next.length() < g.length()) return false;
    g = std::move(next);
  }
  return true;
}

std::vector<int> left_descents(const CoxeterSystem& sys, const GroupElement& g) {
  std::vector<int> out;
  for (int s = 1; s <= sys.rank(); ++s)
    if (sys.left_multiply(s, g).length() < g.length()) out.push_back(s);
  return out;
}

std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& g) {
  std::vector<int> out;
  for (int s = 1; s <= sys.rank(); ++s)
    if (sys.right_multiply(g, s).length() < g.length()) out.push_back(s);
  return out;
}

namespace {

using WordList = std::vector<std::vector<int>>;

// Left-descent peeling with memoization on the peeled element.  Iterating
// descents in increasing order keeps the concatenated output lexicographic.
const WordList& reduced_words_rec(
    const CoxeterSystem& sys, const GroupElement& g,
    std::unordered_map<GroupElement, WordList, GroupElementHash>& memo) {
  auto it = memo.find(g);
  if (it != memo.end()) return it->second;
  WordList result;
  if (g.is_identity()) {
    result.push_back({});
  } else {
    for (int s : left_descents(sys, g)) {
      const WordList& rest = reduced_words_rec(sys, sys.left_multiply(s, g), memo);
      for (const auto& tail : rest) {
        std::vector<int> word;
        word.reserve(tail.size() + 1);
        word.push_back(s);
        word.insert(word.end(), tail.begin(), tail.end());
        result.push_back(std::move(word));
      }
    }
  }
  return memo.emplace(g, std::move(result)).first->second;
}

}  // namespace

std::vector<Word> reduced_words(const CoxeterSystem& sys, const GroupElement& g) {
  std::unordered_map<GroupElement, WordList, GroupElementHash> memo;
  const WordList& raw = reduced_words_rec(sys, g, memo);
  std::vector<Word> out;
  out.reserve(raw.size());
  for (const auto& letters : raw) out.emplace_back(letters);
  return out;
}

Word lex_first_reduced_word(const CoxeterSystem& sys, const GroupElement& g) {
  std::vector<int> letters;
  GroupElement cur = g;
  while (!cur.is_identity()) {
    int s = left_descents(sys, cur).front();  // nonempty while length > 0
    letters.push_back(s);
    cur = sys.left_multiply(s, cur);
  }
  return Word(std::move(letters));
}

bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& u,
                const GroupElement& w) {
  if (u.length() > w.length()) return false;
  Word rw = lex_first_reduced_word(sys, w);
  GroupElement v = u;
  for (int i = rw.size(); i >= 1; --i) {
    int s = rw.letter(i);
    GroupElement vs = sys.right_multiply(v, s);
    if (vs.length() < v.length()) v = std::move(vs);
  }
  return v.is_identity();
}

GroupElement demazure_product(const CoxeterSystem& sys, const Word& w) {
  GroupElement d = sys.identity();
  for (int s : w.letters) {
    GroupElement ds = sys.right_multiply(d, s);
    if (ds.length() > d.length()) d = std::move(ds);
  }
  return d;
}

std::vector<GroupElement> all_elements(const CoxeterSystem& sys) {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::queue<GroupElement> queue;
  queue.push(sys.identity());
  seen.insert(sys.identity());
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop();
    out.push_back(g);
    for (int s = 1; s <= sys.rank(); ++s) {
      GroupElement h = sys.right_multiply(g, s);
      if (seen.insert(h).second) queue.push(h);
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.data() < b.data();
  });
  return out;
}

}  // namespace subword
