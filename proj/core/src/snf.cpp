#include "catlas/snf.hpp"

#include <algorithm>
#include <sstream>

namespace catlas {

IntMat matmul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw CatError(ErrorCode::Internal, "matmul shape mismatch");
  IntMat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

bool is_zero(const IntMat& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const BigInt& v) { return v == 0; });
}

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row[i] -= q * row[t]
void row_axpy(IntMat& m, std::size_t i, std::size_t t, const BigInt& q, std::size_t from_col) {
  if (q == 0) return;
  for (std::size_t k = from_col; k < m.cols; ++k) m.at(i, k) -= q * m.at(t, k);
}

void col_axpy(IntMat& m, std::size_t j, std::size_t t, const BigInt& q, std::size_t from_row) {
  if (q == 0) return;
  for (std::size_t k = from_row; k < m.rows; ++k) m.at(k, j) -= q * m.at(k, t);
}

}  // namespace

std::vector<BigInt> smith_invariants(IntMat m) {
  std::vector<BigInt> diag;
  const std::size_t nmin = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < nmin; ++t) {
    // Locate the minimal nonzero |entry| in the trailing submatrix.
    std::size_t pi = t, pj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        const BigInt& v = m.at(i, j);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (best == 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        row_axpy(m, i, t, q, t);
        if (m.at(i, t) != 0) {
          // remainder became the smaller pivot
          swap_rows(m, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        col_axpy(m, j, t, q, t);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Row and column are clear; pull in any entry the pivot does not
      // divide yet and keep reducing.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m.rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < m.cols; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t k = t; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    diag.push_back(abs(m.at(t, t)));
  }

  // The loop above already enforces d_t | (trailing entries), hence the
  // divisibility chain; normalize just in case of equal factors ordering.
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const BigInt& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool HomologyResult::reduced_trivial() const {
  if (max_degree < 0 || groups.empty()) return false;
  if (groups[0].betti != 1 || !groups[0].torsion.empty()) return false;
  for (std::size_t n = 1; n < groups.size(); ++n)
    if (!groups[n].trivial()) return false;
  return true;
}

std::string HomologyResult::to_string() const {
  std::ostringstream os;
  for (int n = 0; n <= max_degree; ++n) {
    if (n) os << ", ";
    os << "H" << n << "=" << groups[static_cast<std::size_t>(n)].to_string();
  }
  return os.str();
}

ChainComplex ChainComplex::from_boundaries(std::vector<std::size_t> ranks, std::vector<IntMat> boundaries) {
  ChainComplex cc;
  cc.rank = std::move(ranks);
  cc.boundary = std::move(boundaries);
  if (cc.boundary.size() != cc.rank.size())
    throw CatError(ErrorCode::Internal, "chain complex: rank/boundary length mismatch");
  for (std::size_t n = 0; n < cc.boundary.size(); ++n) {
    const IntMat& b = cc.boundary[n];
    std::size_t expect_rows = n == 0 ? 0 : cc.rank[n - 1];
    if (b.rows != expect_rows || b.cols != cc.rank[n])
      throw CatError(ErrorCode::Internal, "chain complex: boundary " + std::to_string(n) + " has wrong shape");
    if (n >= 2 && !is_zero(matmul(cc.boundary[n - 1], cc.boundary[n])))
      throw CatError(ErrorCode::Internal, "chain complex: d.d != 0 at degree " + std::to_string(n));
  }
  return cc;
}

HomologyResult homology_of_complex(const ChainComplex& cc, int d) {
  if (d < 0) throw CatError(ErrorCode::ValidationError, "homology degree bound must be >= 0");
  HomologyResult res;
  res.max_degree = d;
  res.groups.resize(static_cast<std::size_t>(d) + 1);

  auto rank_at = [&](std::size_t n) -> std::size_t { return n < cc.rank.size() ? cc.rank[n] : 0; };
  // invariants of boundary n (may be absent -> zero map)
  auto invariants_at = [&](std::size_t n) -> std::vector<BigInt> {
    if (n >= cc.boundary.size() || cc.boundary[n].rows == 0 || cc.boundary[n].cols == 0) return {};
    return smith_invariants(cc.boundary[n]);
  };

  // H_n = ker d_n / im d_{n+1}: free rank C_n - rank(d_n) - rank(d_{n+1}),
  // torsion from the invariant factors of d_{n+1}. Each boundary matrix is
  // reduced once and its invariants carried to the next degree.
  std::vector<BigInt> inv_dn;  // invariants of d_n (empty at n = 0)
  for (int n = 0; n <= d; ++n) {
    std::vector<BigInt> inv_out = invariants_at(static_cast<std::size_t>(n) + 1);
    std::size_t cn = rank_at(static_cast<std::size_t>(n));
    HomologyGroup& g = res.groups[static_cast<std::size_t>(n)];
    g.betti = static_cast<long>(cn) - static_cast<long>(inv_dn.size()) - static_cast<long>(inv_out.size());
    if (g.betti < 0) throw CatError(ErrorCode::Internal, "negative Betti number: inconsistent complex");
    for (const BigInt& v : inv_out)
      if (v > 1) g.torsion.push_back(v);
    inv_dn = std::move(inv_out);
  }
  return res;
}

}  // namespace catlas
