#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "subword/coxeter.hpp"
#include "subword/word.hpp"

namespace subword {

/// Strictly increasing 1-based positions into an ambient word.
using Subword = std::vector<int>;

inline constexpr int kDefaultCensusLimit = 20;

/// True iff some subword of q is a reduced expression for pi.  Greedy
/// right-to-left scan; agreement with the exhaustive oracle is enforced in
/// the test suites.
bool contains(const CoxeterSystem& sys, const Word& q, const GroupElement& pi);

/// All subwords representing pi, ordered so the associated monomials x_P are
/// lexicographically decreasing (take-before-skip position DFS).
std::vector<Subword> representations(const CoxeterSystem& sys, const Word& q,
                                     const GroupElement& pi);

/// For each size |P|, the number of subwords P of q with Demazure product pi.
/// Exhaustive over 2^n subwords with Bruhat-monotonicity pruning.
std::map<int, long long> demazure_census(const CoxeterSystem& sys, const Word& q,
                                         const GroupElement& pi,
                                         int census_limit = kDefaultCensusLimit);

/// Visits every subword P with Demazure product pi as (position bitmask, |P|).
void for_each_demazure_subword(const CoxeterSystem& sys, const Word& q,
                               const GroupElement& pi, int census_limit,
                               const std::function<void(std::uint64_t, int)>& visit);

/// The word rw with the letter at `position` repeated `reps` times.
Word make_repeated_word(const CoxeterSystem& sys, const Word& rw, int position,
                        int reps);

}  // namespace subword
