#ifndef CATLAS_FINITE_CATEGORY_HPP
#define CATLAS_FINITE_CATEGORY_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "catlas/basics.hpp"

namespace catlas {

using Index = std::size_t;
inline constexpr Index kNone = static_cast<Index>(-1);

/// Unvalidated category description, as read from input files or assembled
/// by derived constructions. Identity morphisms and identity composites may
/// be omitted: validate_category infers them (auto-named "1_<object>").
struct RawCategory {
  struct Morphism {
    std::string id, src, tgt;
  };
  struct Composite {
    std::string g, f, gf;  // compose(g, f) = gf, i.e. g after f
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // (object, morphism)
  std::vector<Composite> compose;
};

/// A finite category with a total composition table over composable pairs.
/// Immutable after validation; objects and morphisms are sorted
/// lexicographically by id, and every iteration follows that order, so
/// witnesses and derived data are reproducible run to run.
class FiniteCategory {
 public:
  struct Morphism {
    std::string id;
    Index src, tgt;
  };

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  const std::string& object_id(Index o) const { return objects_[o]; }
  const std::string& morphism_id(Index m) const { return morphisms_[m].id; }

  Index object(const std::string& id) const;    // throws DanglingReference
  Index morphism(const std::string& id) const;  // throws DanglingReference
  Index find_object(const std::string& id) const;
  Index find_morphism(const std::string& id) const;

  Index src(Index m) const { return morphisms_[m].src; }
  Index tgt(Index m) const { return morphisms_[m].tgt; }
  Index identity(Index o) const { return identity_[o]; }
  bool is_identity(Index m) const { return identity_[morphisms_[m].src] == m && src(m) == tgt(m); }

  /// g after f; kNone when src(g) != tgt(f).
  Index compose(Index g, Index f) const {
    if (morphisms_[g].src != morphisms_[f].tgt) return kNone;
    return table_[g * morphisms_.size() + f];
  }
  bool composable(Index g, Index f) const { return morphisms_[g].src == morphisms_[f].tgt; }

  const std::vector<Index>& mors_from(Index o) const { return out_[o]; }
  const std::vector<Index>& mors_into(Index o) const { return in_[o]; }
  const std::vector<Index>& hom(Index a, Index b) const { return hom_[a * objects_.size() + b]; }

  /// Morphism indices in id order with identities skipped.
  const std::vector<Index>& non_identity_morphisms() const { return non_identity_; }

  bool same_presentation(const FiniteCategory& other) const;

  RawCategory to_raw() const;

  friend FiniteCategory validate_category(const RawCategory& raw);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Index> identity_;  // object -> identity morphism
  std::vector<Index> table_;     // morphism_count^2; kNone off the composable pairs
  std::vector<std::vector<Index>> out_, in_, hom_;
  std::vector<Index> non_identity_;
  std::unordered_map<std::string, Index> obj_index_, mor_index_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Checks totality of composition on composable pairs, src/tgt coherence,
/// both identity laws and associativity by exhaustion. Throws CatError with
/// codes MissingComposite, BrokenIdentity, BrokenAssociativity,
/// DanglingReference, ValidationError.
FiniteCategory validate_category(const RawCategory& raw);

inline CategoryPtr validate_shared(const RawCategory& raw) {
  return std::make_shared<FiniteCategory>(validate_category(raw));
}

// ---- Derived categories ----------------------------------------------

CategoryPtr opposite_category(const FiniteCategory& c, const std::string& name = "");

/// Object "(a,b)", morphism "(f,g)"; identities are named "1_(a,b)".
CategoryPtr product_category(const FiniteCategory& c, const FiniteCategory& d,
                             const std::string& name = "");

struct Functor;

/// Slice F | d: objects "(X|f)" for f: F(X) -> d, morphisms "sl(u|f|f')".
CategoryPtr slice_category(const Functor& f, Index cod_object, const std::string& name = "");

/// Fiber over d: the subcategory of objects over d and morphisms over 1_d.
/// Ids are inherited from the domain.
CategoryPtr fiber_category(const Functor& f, Index cod_object, const std::string& name = "");

// ---- Functors and natural transformations ----------------------------

struct Functor {
  std::string name;
  CategoryPtr dom, cod;
  std::vector<Index> on_obj;  // dom object index -> cod object index
  std::vector<Index> on_mor;  // dom morphism index -> cod morphism index

  Index apply_obj(Index o) const { return on_obj[o]; }
  Index apply_mor(Index m) const { return on_mor[m]; }
};

/// Throws InvalidFunctor unless mappings are total and preserve src/tgt,
/// identities and composition (checked by exhaustion).
Functor make_functor(std::string name, CategoryPtr dom, CategoryPtr cod,
                     const std::vector<std::pair<std::string, std::string>>& on_objects,
                     const std::vector<std::pair<std::string, std::string>>& on_morphisms);

/// Non-throwing validation used by the property decider.
PropertyReport functor_valid_report(const Functor& f);

Functor identity_functor(CategoryPtr c);
Functor compose_functors(const Functor& g, const Functor& f);  // g after f
Functor constant_functor(CategoryPtr dom, CategoryPtr cod, Index cod_object);
/// Projection C x D -> C (first = true) or -> D, where prod was built by
/// product_category(c, d).
Functor product_projection(CategoryPtr prod, CategoryPtr c, CategoryPtr d, bool first);

bool same_functor(const Functor& a, const Functor& b);

struct NaturalTransformation {
  std::string name;
  Functor source, target;        // parallel functors
  std::vector<Index> component;  // dom object index -> cod morphism index
};

/// Shape (parallel functors, component endpoints) is an error; a failing
/// naturality square is a Fails report with the square as witness.
PropertyReport naturality_report(const NaturalTransformation& nt);

NaturalTransformation make_transformation(
    std::string name, const Functor& source, const Functor& target,
    const std::vector<std::pair<std::string, std::string>>& components);

}  // namespace catlas

#endif  // CATLAS_FINITE_CATEGORY_HPP
