#ifndef CATLAS_PRESENTATION_HPP
#define CATLAS_PRESENTATION_HPP

#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/group_table.hpp"
#include "catlas/snf.hpp"

namespace catlas {

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word invert_word(const Word& w);
std::string word_to_string(const GroupPresentation& p, const Word& w);

/// Free rank and invariant factors of the abelianized presentation, via
/// Smith normal form of the relator exponent matrix.
HomologyGroup abelianization(const GroupPresentation& p);

/// Isomorphism-preserving simplification: free/cyclic reduction, duplicate
/// and empty relator removal, and single-occurrence generator elimination.
/// The result never has more generators nor greater total relator length
/// than the input (the best intermediate state is returned when moves
/// overshoot). gen_images maps each input generator to a word over the
/// output generators.
struct TietzeResult {
  GroupPresentation presentation;
  std::vector<Word> gen_images;  // input generator -> word over output generators
  bool budget_exhausted = false;

  Word rewrite(const Word& input_word) const;
};
TietzeResult tietze_simplify(const GroupPresentation& p, Budget& budget);

/// Edge-path presentation of the fundamental group of the nerve at a
/// basepoint, restricted to the basepoint's connected component.
/// Generators: the component's non-identity morphisms. Relators: one per
/// composable pair (g.f = composite) plus one per spanning-tree edge (tree
/// built breadth-first over the undirected morphism graph, lexicographic
/// tie-breaking).
struct Pi1Presentation {
  GroupPresentation presentation;
  Index basepoint = kNone;
  std::vector<Index> component_objects;   // sorted
  std::vector<Index> generator_morphism;  // generator g -> morphism index
  std::vector<Index> tree_edges;          // morphism indices of tree edges
  std::vector<Word> object_path;          // object -> generator word of the tree path
                                          // basepoint -> object (empty off-component)

  /// Generator index of a morphism, or kNone for identities/off-component.
  Index generator_of(Index morphism) const;
};
Pi1Presentation pi1_presentation(const FiniteCategory& c, Index basepoint);

/// A zigzag path in a category: morphism id plus traversal direction.
using PathWord = std::vector<std::pair<std::string, bool>>;

/// The homomorphism pi1(dom, basepoint) -> pi1(cod, y) induced by a
/// functor, as generator -> word data. y is F(basepoint), relocated along
/// `path_to_image` when one is given. Relator images are verified to die
/// in the codomain group; failure to verify within the coset budget raises
/// RelatorViolation.
struct InducedHom {
  Pi1Presentation dom, cod;
  std::vector<Word> gen_image;  // dom generator -> word over cod generators
  Word map_word(const Word& w) const;
};
InducedHom induced_pi1_hom(const Functor& f, Index basepoint, const PathWord& path_to_image,
                           std::size_t verify_max_cosets);

}  // namespace catlas

#endif  // CATLAS_PRESENTATION_HPP
