#ifndef CATLAS_NERVE_HPP
#define CATLAS_NERVE_HPP

#include <vector>

#include "catlas/basics.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/snf.hpp"

namespace catlas {

/// Nondegenerate simplices of the nerve up to a dimension bound:
/// an n-simplex is a chain (f_1, ..., f_n) of composable non-identity
/// morphisms; inner faces compose adjacent morphisms and faces whose
/// composite is an identity are recorded as degenerate.
struct TruncatedNerve {
  struct Simplex {
    std::vector<Index> chain;  // morphism indices, src(chain[i+1]) = tgt(chain[i])
    std::vector<Index> face;   // face[i] = index into dimension n-1, kNone if degenerate
  };

  int dimension = -1;
  std::vector<std::vector<Simplex>> simplices;  // simplices[n], n = 0..dimension
                                                // (0-simplices are objects, empty chain)

  std::size_t count(int n) const {
    return n <= dimension ? simplices[static_cast<std::size_t>(n)].size() : 0;
  }
};

/// All nondegenerate simplices up to dimension d, in lexicographic chain
/// order. Throws ResourceLimit when the simplex count exceeds the budget.
TruncatedNerve nerve_truncated(const FiniteCategory& c, int d, Budget& budget);

/// Normalized chain complex of the nerve: basis the nondegenerate
/// simplices, boundary the alternating face sum with degenerate faces
/// contributing zero. Carries degrees 0..d.
ChainComplex nerve_chain_complex(const TruncatedNerve& nerve);

/// Integral homology of the classifying space in degrees 0..d, computed
/// from the (d+1)-truncated normalized chain complex.
HomologyResult nerve_homology(const FiniteCategory& c, int d, Budget& budget);

}  // namespace catlas

#endif  // CATLAS_NERVE_HPP
