#pragma once

#include <vector>

#include "subword/complexes.hpp"
#include "subword/coxeter.hpp"
#include "subword/ideals.hpp"

namespace subword {

/// Reduced rational Betti numbers, indexed by dimension -1..dim.
struct HomologyProfile {
  int dim = -2;                   // dimension of the complex (-2 when void)
  std::vector<long long> ranks;   // ranks[k] = reduced Betti in dimension k-1

  long long reduced_betti(int dimension) const;
  bool all_zero() const;
  /// Exactly one rank 1 in `dimension`, zero elsewhere.
  bool is_sphere_profile(int dimension) const;
  /// All reduced homology below `dimension` vanishes.
  bool vanishes_below(int dimension) const;
};

/// Reduced homology over Q via boundary matrices with exact fraction-free
/// rank computation (no floating point).  Requires n <= 14.
HomologyProfile simplicial_homology(const SimplicialComplex& complex);

/// The complex whose Stanley-Reisner ideal is the given squarefree ideal:
/// faces are the subsets divisible by no generator.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

/// Graded Betti numbers of the ideal via Hochster's formula (restriction
/// homology summed over the lcm lattice).  Requires n <= 10.
BettiTable hochster_betti(const MonomialIdeal& ideal);

/// Literal enumeration of all subwords.  Requires |q| <= 18.
bool exhaustive_contains(const CoxeterSystem& sys, const Word& q,
                         const GroupElement& pi);

/// Literal enumeration of the subwords of one reduced word of w.  Requires
/// length(w) <= 12.
bool exhaustive_bruhat(const CoxeterSystem& sys, const GroupElement& u,
                       const GroupElement& w);

}  // namespace subword
