#ifndef CATLAS_CONSTRUCTIONS_HPP
#define CATLAS_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/nerve.hpp"

namespace catlas {

// ---- Simplicial complexes and posets --------------------------------------

struct SimplicialComplex {
  std::string name;
  std::vector<std::string> vertices;               // sorted
  std::vector<std::vector<std::string>> facets;    // each sorted; an antichain
};

/// Sorts, dedups, and rejects empty facets and facet containments.
SimplicialComplex validate_complex(std::string name, std::vector<std::vector<std::string>> facets);

/// All faces (nonempty subsets of facets), grouped by dimension, each
/// sorted; deterministic order.
std::vector<std::vector<std::vector<std::string>>> complex_faces(const SimplicialComplex& k);

struct Poset {
  std::string name;
  std::vector<std::string> elements;                      // sorted
  std::vector<std::pair<std::string, std::string>> leq;   // reflexive-transitive closed
};

/// Applies the reflexive-transitive closure, then checks antisymmetry.
Poset validate_poset(std::string name, std::vector<std::string> elements,
                     std::vector<std::pair<std::string, std::string>> leq);

/// One morphism "le(a,b)" per strict pair, identities "1_a".
CategoryPtr poset_category(const Poset& p);

struct FacePosetResult {
  Poset poset;
  CategoryPtr category;
};
FacePosetResult face_poset(const SimplicialComplex& k);

/// Order complex of the face poset: vertices are faces, facets are the
/// maximal chains.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& k);

/// Homology of the oriented simplicial chain complex; the independent
/// oracle for the nerve computations.
HomologyResult simplicial_homology(const SimplicialComplex& k, int d, Budget& budget);

// ---- Karoubi envelope ------------------------------------------------------

struct KaroubiResult {
  CategoryPtr envelope;
  Functor inclusion;  // X -> (X, id); identity on original ids
};

/// Idempotent splitting: objects are pairs (X, e) with e.e = e, morphisms
/// (X,e) -> (Y,e') are m with e'.m.e = m. Split objects are named
/// "spl(X|e)"; objects (X, id) and morphisms between them keep their ids.
KaroubiResult karoubi_envelope(CategoryPtr c);

// ---- Formal amalgamation ---------------------------------------------------

struct Span {
  Index apex, left, right;  // left: apex -> B, right: apex -> C
};
using SpanSet = std::vector<Span>;

struct AmalgamationResult {
  CategoryPtr category;
  Functor inclusion;
  std::vector<Span> adjoined;  // spans that received a new object
};

/// Adjoins one object B*(A)C per span with hom-sets the pushout
/// C(X,B) u_{C(X,A)} C(X,C) (union-find identification) and no nonidentity
/// morphisms out. Without an explicit SpanSet, every distinct-leg span
/// currently failing AP is adjoined.
AmalgamationResult adjoin_amalgamation_step(CategoryPtr c, const std::optional<SpanSet>& spans, Budget& budget);

// ---- Iterated construction --------------------------------------------------

struct StageReport {
  std::string stage;  // "D0", "C0", "D1", ...
  CategoryPtr category;
  std::optional<Functor> inclusion;              // from the previous stage
  std::optional<PropertyReport> previous_spans_ap;  // amalgamation stages only
  std::optional<PropertyReport> all_mono;
  std::optional<HomologyResult> homology;
};

struct IterationResult {
  std::vector<StageReport> stages;
};

/// Alternates idempotent splitting and span adjunction for `rounds` rounds,
/// reporting per stage: AP over the previous stage's spans, AllMono, and
/// homology up to homology_dim (skipped when negative).
IterationResult iterate_construction(CategoryPtr c, int rounds, const std::optional<SpanSet>& stage0_spans,
                                     int homology_dim, Budget& budget);

}  // namespace catlas

#endif  // CATLAS_CONSTRUCTIONS_HPP
