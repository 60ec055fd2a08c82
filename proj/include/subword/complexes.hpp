#pragma once

#include <vector>

#include "subword/coxeter.hpp"
#include "subword/ideals.hpp"
#include "subword/smallset.hpp"
#include "subword/word.hpp"

namespace subword {

/// Simplicial complex on [n] given by its facet list (an antichain).  The
/// facet order is preserved; it is meaningful for subword complexes, whose
/// facets are listed in the lex-dual order Q\P_1, ..., Q\P_r.
///
/// Conventions: an empty facet list is the void complex (no faces at all);
/// the facet list {emptyset} is the complex whose only face is the empty set.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  /// `facets` must already be an antichain; duplicates are removed.
  SimplicialComplex(int n, std::vector<IndexSet> facets);
  /// Minimalizes an arbitrary face list into its maximal elements.
  static SimplicialComplex from_faces(int n, const std::vector<IndexSet>& faces);

  int vertex_count() const { return n_; }
  const std::vector<IndexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  bool is_face(IndexSet s) const;
  bool is_pure() const;
  /// Dimension of the complex; -1 for {emptyset}, -2 for the void complex.
  int dimension() const;
  /// Every face, the empty set included, sorted by (size, mask).
  std::vector<IndexSet> faces() const;

  /// Equality as complexes (facet sets compared order-insensitively).
  bool same_complex(const SimplicialComplex& other) const;

private:
  int n_ = 0;
  std::vector<IndexSet> facets_;
};

/// Facets are the complements of the representing subwords, in lex-dual
/// order.  Pure of dimension n - length(pi) - 1.
SimplicialComplex subword_complex(const CoxeterSystem& sys, const Word& q,
                                  const GroupElement& pi);

/// I_{dual} = (x_{[n] \ F} : F facet), generators in facet order.
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex);

SimplicialComplex link(const SimplicialComplex& complex, int v);
SimplicialComplex deletion(const SimplicialComplex& complex, int v);

using ShellingOrder = std::vector<IndexSet>;

/// Shelling obtained by recursively splitting on the first letter of q.  At
/// every level the recursion checks its link/deletion pieces against link()
/// and deletion() applied to the complex directly, and throws
/// PropertyViolation on any disagreement.
ShellingOrder vertex_decompose_shelling(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi);

/// Pure-shelling test: for every j >= 2 and i < j some k < j has
/// |F_j \ F_k| = 1 and F_j \ F_k contained in F_j \ F_i.
bool is_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

/// True iff some labelling of the vertices makes the complex shifted.
/// Exhaustive search over labellings, pruned through the pairwise
/// exchange relation; n <= 9.
bool is_shifted(const SimplicialComplex& complex);

/// Generators of the Stanley-Reisner ideal: inclusion-minimal non-faces.
MonomialIdeal minimal_nonfaces(const SimplicialComplex& complex);

/// (f_{-1}, f_0, ..., f_dim); empty for the void complex.
std::vector<long long> f_vector(const SimplicialComplex& complex);

}  // namespace subword
