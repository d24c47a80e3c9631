#ifndef CATLAS_WORKSPACE_HPP
#define CATLAS_WORKSPACE_HPP

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catlas/constructions.hpp"
#include "catlas/finite_category.hpp"

namespace catlas {
namespace io {

using Json = nlohmann::ordered_json;

/// Named inputs loaded from workspace files. Categories are validated on
/// load; poset shorthands keep their poset form for round-tripping and are
/// expanded to categories as well.
struct Workspace {
  struct CategoryEntry {
    std::string name;
    std::optional<Poset> poset;  // present when given as a poset shorthand
    CategoryPtr category;
    std::string file;
  };
  struct ComplexEntry {
    SimplicialComplex complex;
    std::string file;
  };
  struct FunctorEntry {
    Functor functor;
    std::vector<std::pair<std::string, std::string>> on_objects, on_morphisms;  // as given
    std::string file;
  };
  struct TransformationEntry {
    NaturalTransformation transformation;
    std::string source_functor, target_functor;
    std::vector<std::pair<std::string, std::string>> components;
    std::string file;
  };

  std::map<std::string, CategoryEntry> categories;
  std::map<std::string, ComplexEntry> complexes;
  std::map<std::string, FunctorEntry> functors;
  std::map<std::string, TransformationEntry> transformations;

  const CategoryEntry& category(const std::string& name) const;
  const ComplexEntry& complex(const std::string& name) const;
  const FunctorEntry& functor(const std::string& name) const;
  const TransformationEntry& transformation(const std::string& name) const;
};

/// Parses and validates one or more workspace files. Positions of JSON
/// syntax errors are reported; unknown names raise UnresolvedReference.
Workspace parse_workspace(const std::vector<std::string>& files);

/// Parses from an in-memory document (file name used for provenance only).
void parse_workspace_json(Workspace& ws, const Json& doc, const std::string& file);

/// Normalized serialization; parsing it again yields identical validated
/// data, and serializing twice is byte-identical.
Json serialize_workspace(const Workspace& ws);

Json category_to_json(const FiniteCategory& c);

}  // namespace io
}  // namespace catlas

#endif  // CATLAS_WORKSPACE_HPP
