#ifndef CATLAS_SNF_HPP
#define CATLAS_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "catlas/basics.hpp"

namespace catlas {

// Intermediate entries in integer elimination blow up even on small
// matrices, so everything here runs on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

IntMat matmul(const IntMat& x, const IntMat& y);
bool is_zero(const IntMat& m);

/// Nonzero diagonal of the Smith normal form, positive, in divisibility
/// order d1 | d2 | ... The length is the rank.
std::vector<BigInt> smith_invariants(IntMat m);

/// Betti number and torsion coefficients of one homology degree.
struct HomologyGroup {
  long betti = 0;
  std::vector<BigInt> torsion;  // entries > 1, divisibility order

  bool operator==(const HomologyGroup&) const = default;
  bool trivial() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// H_0 .. H_d of some chain complex, stamped with the truncation bound the
/// complex was built at.
struct HomologyResult {
  int max_degree = -1;
  std::vector<HomologyGroup> groups;  // groups[n] = H_n

  bool operator==(const HomologyResult&) const = default;
  const HomologyGroup& at(int n) const { return groups[static_cast<std::size_t>(n)]; }

  /// Reduced homology vanishes: H_0 = Z and H_n = 0 for 0 < n <= max_degree.
  bool reduced_trivial() const;
  std::string to_string() const;
};

/// Integer chain complex, degrees 0..top: boundary[n] maps n-chains to
/// (n-1)-chains (rows = rank of degree n-1, cols = rank of degree n).
/// boundary[0] is a 0 x rank_0 placeholder. The constructor checks
/// d(n-1) . d(n) = 0 exactly.
struct ChainComplex {
  std::vector<std::size_t> rank;  // chains per degree
  std::vector<IntMat> boundary;

  static ChainComplex from_boundaries(std::vector<std::size_t> ranks, std::vector<IntMat> boundaries);
};

/// Homology in degrees 0..d. Requires the complex to carry degrees up to
/// d+1 (missing top degrees count as zero modules).
HomologyResult homology_of_complex(const ChainComplex& cc, int d);

}  // namespace catlas

#endif  // CATLAS_SNF_HPP
