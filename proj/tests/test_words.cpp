#include <doctest.h>

#include <random>

#include "subword/errors.hpp"
#include "subword/oracles.hpp"
#include "subword/words.hpp"

using namespace subword;

namespace {

const Word kExampleWord{1, 2, 1, 3, 1, 2, 3, 1};

GroupElement example_pi(const CoxeterSystem& sys) {
  return sys.element_from_data({2, 4, 3, 1});
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("word parsing round-trips") {
  CHECK(Word::parse("1,2,1,3,1,2,3,1") == kExampleWord);
  CHECK(Word::parse("1, 2 ,1").letters == std::vector<int>{1, 2, 1});
  CHECK(kExampleWord.to_string() == "1,2,1,3,1,2,3,1");
  CHECK_THROWS_AS(Word::parse("1,x"), ParseError);
  CHECK_THROWS_AS(Word::parse("1,,2"), ParseError);
}

TEST_CASE("contains") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  GroupElement pi = example_pi(a3);
  CHECK(contains(a3, kExampleWord, a3.identity()));
  CHECK(contains(a3, Word{}, a3.identity()));
  CHECK(contains(a3, kExampleWord, pi));
  CHECK_FALSE(contains(a3, {1, 1}, element_of_word(a3, {2})));
}

TEST_CASE("representations reproduce the worked lists") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  GroupElement pi = example_pi(a3);

  CHECK(representations(a3, kExampleWord, pi) ==
        std::vector<Subword>{{1, 2, 4, 6}, {1, 4, 6, 7}, {3, 4, 6, 7}, {4, 5, 6, 7}});

  CHECK(representations(a3, {1, 3, 3, 1, 2, 3}, pi) ==
        std::vector<Subword>{{1, 2, 5, 6}, {1, 3, 5, 6}, {2, 4, 5, 6}, {3, 4, 5, 6}});

  // a single reduced word of pi represents it once, on all its positions
  CHECK(representations(a3, {1, 2, 3, 2}, pi) ==
        std::vector<Subword>{{1, 2, 3, 4}});

  CHECK(representations(a3, {1, 1}, element_of_word(a3, {2})).empty());
}

TEST_CASE("representations have exactly length(pi) positions") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    int len = 1 + static_cast<int>(rng() % 9);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& s : letters) s = 1 + static_cast<int>(rng() % 3);
    Word q(letters);
    std::vector<int> chosen;
    for (int i = 1; i <= len; ++i)
      if (rng() & 1) chosen.push_back(q.letter(i));
    GroupElement pi = demazure_product(a3, Word(chosen));
    for (const Subword& p : representations(a3, q, pi))
      CHECK(static_cast<int>(p.size()) == pi.length());
  }
}

TEST_CASE("containment, representations and Bruhat domination agree") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  std::mt19937 rng(777);
  std::vector<GroupElement> elements = all_elements(a3);
  for (int trial = 0; trial < 80; ++trial) {
    int len = 1 + static_cast<int>(rng() % 8);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& s : letters) s = 1 + static_cast<int>(rng() % 3);
    Word q(letters);
    const GroupElement& pi = elements[rng() % elements.size()];
    bool c = contains(a3, q, pi);
    CHECK(c == !representations(a3, q, pi).empty());
    CHECK(c == bruhat_leq(a3, pi, demazure_product(a3, q)));
    CHECK(c == exhaustive_contains(a3, q, pi));
  }
}

TEST_CASE("demazure_census") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  GroupElement pi = element_of_word(a3, {1, 2, 3});

  std::map<int, long long> expected{{3, 3}, {4, 3}, {5, 1}};
  CHECK(demazure_census(a3, {1, 2, 2, 2, 3}, pi) == expected);

  CHECK(demazure_census(a3, {1, 2, 3}, pi) == std::map<int, long long>{{3, 1}});
  CHECK(demazure_census(a3, {1, 1}, pi).empty());
  CHECK_THROWS_AS(demazure_census(a3, kExampleWord, pi, 4), WordTooLarge);
}

TEST_CASE("census totals against a literal enumeration") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    int len = 1 + static_cast<int>(rng() % 8);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& s : letters) s = 1 + static_cast<int>(rng() % 3);
    Word q(letters);
    std::vector<int> chosen;
    for (int i = 1; i <= len; ++i)
      if (rng() & 1) chosen.push_back(q.letter(i));
    GroupElement pi = demazure_product(a3, Word(chosen));

    std::map<int, long long> literal;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::vector<int> sub;
      for (int i = 1; i <= len; ++i)
        if ((mask >> (i - 1)) & 1) sub.push_back(q.letter(i));
      if (demazure_product(a3, Word(sub)) == pi)
        ++literal[static_cast<int>(sub.size())];
    }
    std::map<int, long long> census = demazure_census(a3, q, pi);
    CHECK(census == literal);
    if (!pi.is_identity()) {
      auto it = census.find(pi.length());
      long long reps = static_cast<long long>(representations(a3, q, pi).size());
      CHECK((it == census.end() ? 0 : it->second) == reps);
    }
  }
}

TEST_CASE("make_repeated_word") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  CHECK(make_repeated_word(a3, {1, 2, 3}, 2, 3) == Word{1, 2, 2, 2, 3});
  CHECK(make_repeated_word(a3, {1, 2, 3, 2}, 1, 1) == Word{1, 2, 3, 2});
  CHECK(make_repeated_word(a3, {1, 2, 3, 2}, 1, 2) == Word{1, 1, 2, 3, 2});
  CHECK_THROWS_AS(make_repeated_word(a3, {1, 1}, 1, 2), NotReduced);
  CHECK_THROWS_AS(make_repeated_word(a3, {1, 2}, 3, 2), IndexOutOfRange);
}

TEST_CASE("repeated-letter words have n - length + 1 representations") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  for (const GroupElement& pi : all_elements(a3)) {
    if (pi.is_identity()) continue;
    for (const Word& rw : reduced_words(a3, pi))
      for (int position = 1; position <= rw.size(); ++position)
        for (int reps = 1; reps <= 4; ++reps) {
          Word q = make_repeated_word(a3, rw, position, reps);
          CHECK(static_cast<int>(representations(a3, q, pi).size()) ==
                q.size() - pi.length() + 1);
        }
  }
}

TEST_SUITE_END();
