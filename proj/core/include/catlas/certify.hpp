#ifndef CATLAS_CERTIFY_HPP
#define CATLAS_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/nerve.hpp"

namespace catlas {

/// Tries the sufficient conditions in order (initial object, terminal
/// object, filtered) and records which one certified. Refutation is by
/// nonvanishing reduced homology up to `refute_dim`; emptiness refutes
/// directly. Neither route deciding leaves Unknown.
PropertyReport certify_contractible(const FiniteCategory& c, int refute_dim, Budget& budget);

enum class QuillenSide { Slice, FiberOpfibration, FiberFibration };

struct QuillenReport {
  PropertyReport verdict;               // per-object certificates or witness
  std::vector<std::string> per_object;  // one line per codomain object
  bool homology_checked = false;        // only on Holds
  bool homology_agrees = false;
  HomologyResult dom_homology, cod_homology;
};

/// Theorem-A style certification: every slice (or fiber, after the
/// (op)fibration check) contractible implies |F| is a homotopy
/// equivalence; on success the domain/codomain homology agreement up to
/// degree d is recorded as a cross-check.
QuillenReport quillen_a_certify(const Functor& f, QuillenSide side, int d, Budget& budget);

struct EquivalenceReport {
  PropertyReport verdict;
  bool homology_agrees = false;
  HomologyResult dom_homology, cod_homology;
  std::optional<std::size_t> pi1_order_dom, pi1_order_cod;  // when both enumerate
};

/// Certifies |C| ~ |D| from zigzag evidence: natural transformations
/// connecting id_C with GF and id_D with FG, in either direction. Shape
/// violations throw; a failing square is a Fails verdict with witness.
EquivalenceReport homotopy_equivalence_certify(const Functor& f, const Functor& g,
                                               const std::vector<NaturalTransformation>& evidence, int d,
                                               Budget& budget);

}  // namespace catlas

#endif  // CATLAS_CERTIFY_HPP
