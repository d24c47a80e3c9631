#ifndef CATLAS_GROUP_TABLE_HPP
#define CATLAS_GROUP_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/snf.hpp"

namespace catlas {

/// Explicit multiplication table of a finite group. validate() asserts the
/// group axioms by exhaustion; every constructor in this library calls it.
struct FiniteGroupTable {
  std::vector<std::string> elements;
  std::vector<int> mul;  // order^2, row-major: mul[a][b] = a * b
  int identity = 0;
  std::vector<int> inverse;

  std::size_t order() const { return elements.size(); }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;

  void validate() const;  // throws ErrorCode::Internal on a broken axiom

  static FiniteGroupTable trivial();
};

/// Smallest subgroup containing the given elements, as a sorted index set.
std::vector<int> subgroup_closure(const FiniteGroupTable& g, const std::vector<int>& generators);

/// Empty when normal, otherwise a witness (a, h) with a h a^-1 outside.
std::optional<std::pair<int, int>> normality_counterexample(const FiniteGroupTable& g,
                                                            const std::vector<int>& subgroup);

std::vector<int> normal_closure(const FiniteGroupTable& g, const std::vector<int>& subgroup);

struct QuotientGroup {
  FiniteGroupTable table;
  std::vector<int> coset_of;         // element -> quotient element
  std::vector<int> representative;   // quotient element -> least element index
};

/// Quotient by a (verified) normal subgroup; cosets are named "[rep]".
QuotientGroup quotient_by_normal(const FiniteGroupTable& g, const std::vector<int>& subgroup);

std::vector<int> commutator_subgroup(const FiniteGroupTable& g);

/// Invariant factors of the abelianization, in divisibility order, as a
/// HomologyGroup (free rank is always 0 for a finite group).
HomologyGroup abelian_invariants(const FiniteGroupTable& g);

/// Exhaustive isomorphism search with cheap invariant screening first.
/// nullopt with exhausted=false means "proved non-isomorphic".
struct IsomorphismSearch {
  std::optional<std::vector<int>> map;  // a-element -> b-element
  bool exhausted = false;
};
IsomorphismSearch find_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b, Budget& budget);

// ---- Coset enumeration ---------------------------------------------------

using Word = std::vector<int>;  // letter k>0: generator k-1; k<0: its inverse

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total_relator_length() const;
};

/// Todd-Coxeter enumeration of the trivial-subgroup cosets. On success the
/// regular permutation representation is returned as a multiplication
/// table; exceeding max_cosets leaves completed = false (the group may be
/// infinite or just larger than the cap allows).
struct CosetEnumeration {
  bool completed = false;
  std::size_t cosets_defined = 0;  // total ever defined, incl. merged ones
  FiniteGroupTable table;          // meaningful iff completed
  std::vector<std::vector<int>> action;  // live coset x (2g) column actions

  /// Element index of a word over the presentation's generators.
  int eval(const Word& w) const;
};

CosetEnumeration coset_enumeration(const GroupPresentation& p, std::size_t max_cosets);

}  // namespace catlas

#endif  // CATLAS_GROUP_TABLE_HPP
