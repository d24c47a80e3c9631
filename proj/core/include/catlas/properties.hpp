#ifndef CATLAS_PROPERTIES_HPP
#define CATLAS_PROPERTIES_HPP

#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"

namespace catlas {

enum class CategoryProperty {
  AllMono,
  Initial,
  Terminal,
  Filtered,
  JEP,
  AP,
  BinaryCoproducts,
  Pushouts,
  Pullbacks,
  RightFractions,
};

const char* category_property_name(CategoryProperty p);
CategoryProperty category_property_from_name(const std::string& name);

/// Exhaustive three-valued decider. Searches are cut off by the budget, in
/// which case the verdict is Unknown with the exhausted search recorded.
PropertyReport check_category_property(const FiniteCategory& c, CategoryProperty prop, Budget& budget);

enum class FunctorProperty { Valid, Fibration, Opfibration };

const char* functor_property_name(FunctorProperty p);
FunctorProperty functor_property_from_name(const std::string& name);

PropertyReport check_functor_property(const Functor& f, FunctorProperty prop, Budget& budget);

/// Prop-style contractibility witness: F: C x C -> C together with
/// iota1: proj1 => F and iota2: proj2 => F. Throws ShapeMismatch unless the
/// transformations connect the two projections with F.
PropertyReport check_functorial_joint_embedding(const FiniteCategory& c, const Functor& f,
                                                const NaturalTransformation& iota1,
                                                const NaturalTransformation& iota2);

struct MonsterReport {
  PropertyReport universal;
  PropertyReport strongly_homogeneous;
  bool both_hold() const { return universal.holds() && strongly_homogeneous.holds(); }
};

/// Universality and strong homogeneity of `u` relative to the full
/// subcategory spanned by `c0_objects`.
MonsterReport monster_report(const FiniteCategory& c, const std::vector<Index>& c0_objects, Index u);

/// Amalgam existence for one span f: A -> B, g: A -> C (shared source).
bool span_has_amalgam(const FiniteCategory& c, Index f, Index g);

}  // namespace catlas

#endif  // CATLAS_PROPERTIES_HPP
