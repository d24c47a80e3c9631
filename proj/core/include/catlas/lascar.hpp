#ifndef CATLAS_LASCAR_HPP
#define CATLAS_LASCAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/group_table.hpp"
#include "catlas/properties.hpp"

namespace catlas {

/// Aut(U) as an explicit table. Element i of the table is the morphism
/// aut_morphisms[i]; names are morphism ids.
struct AutomorphismGroup {
  FiniteGroupTable table;
  std::vector<Index> aut_morphisms;
};
AutomorphismGroup automorphism_group(const FiniteCategory& c, Index u);

struct LstGenerator {
  int element;           // index into aut table
  Index witness_object;  // M in C0
  Index witness_mor;     // f: M -> U with alpha . f = f
};

struct LascarResult {
  AutomorphismGroup aut;
  std::vector<LstGenerator> lst_generators;
  std::vector<int> lst;  // sorted element indices of the generated subgroup
  bool normality_verified = false;
  std::optional<std::pair<int, int>> normality_witness;  // (conjugator, element)
  std::optional<QuotientGroup> quotient;                 // Gal_L, present after lascar_group
  bool normal_closure_taken = false;
};

/// Lst(C, C0, U): generators found by exhausting (alpha, M, f) triples;
/// normality checked by conjugating every subgroup element by every
/// automorphism. The quotient is left empty.
LascarResult lst_subgroup(const FiniteCategory& c, const std::vector<Index>& c0, Index u);

/// Gal_L = Aut(U) / Lst. When Lst fails the normality check the operation
/// refuses to quotient (NotNormal) unless take_normal_closure opts in.
LascarResult lascar_group(const FiniteCategory& c, const std::vector<Index>& c0, Index u,
                          bool take_normal_closure = false);

/// The canonical map [alpha] -> [[alpha]] from Gal_L cosets into the
/// enumerated fundamental group.
struct PhiMap {
  LascarResult lascar;
  std::size_t pi1_order = 0;
  std::vector<int> image;  // quotient element -> pi1 element index
  bool well_defined = false;
  std::string well_defined_evidence;
  bool homomorphism = false;
  bool bijective = false;
};

/// Throws EnumerationFailed when pi1 does not enumerate within max_cosets,
/// and WellDefinednessFailure if an Lst generator maps off the identity
/// (cannot happen for inputs of the definition's shape; it is an internal
/// consistency alarm).
PhiMap phi_map(const FiniteCategory& c, const std::vector<Index>& c0, Index u, std::size_t max_cosets);

struct MainTheoremReport {
  MonsterReport hypotheses;
  bool hypotheses_met = false;
  std::optional<PhiMap> phi;              // when pi1 enumerates
  std::optional<std::size_t> gal_order;   // emitted even when hypotheses fail
  std::optional<std::size_t> pi1_order;
  PropertyReport verdict;                 // Holds iff hypotheses hold and phi is a bijective homomorphism
};

/// Checks universality and strong homogeneity, then compares Gal_L with
/// the independently enumerated fundamental group through phi.
MainTheoremReport verify_main_theorem(const FiniteCategory& c, const std::vector<Index>& c0, Index u,
                                      std::size_t max_cosets);

}  // namespace catlas

#endif  // CATLAS_LASCAR_HPP
