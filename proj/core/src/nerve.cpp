#include "catlas/nerve.hpp"

#include <map>

namespace catlas {

TruncatedNerve nerve_truncated(const FiniteCategory& c, int d, Budget& budget) {
  if (d < 0) throw CatError(ErrorCode::ValidationError, "nerve dimension bound must be >= 0");
  TruncatedNerve nerve;
  nerve.dimension = d;
  nerve.simplices.resize(static_cast<std::size_t>(d) + 1);

  // Dimension 0: one simplex per object; chain stores the object index so
  // faces of 1-simplices can refer to it.
  for (Index o = 0; o < c.object_count(); ++o) nerve.simplices[0].push_back({{o}, {}});

  // Chains extend on the right: (f_1, .., f_n) with src(f_{i+1}) = tgt(f_i).
  // Extending in morphism-index order keeps each dimension lexicographically
  // sorted, so chain -> index lookups can use ordered maps per dimension.
  for (int n = 1; n <= d; ++n) {
    auto& prev = nerve.simplices[static_cast<std::size_t>(n - 1)];
    auto& cur = nerve.simplices[static_cast<std::size_t>(n)];
    if (n == 1) {
      for (Index m : c.non_identity_morphisms()) {
        if (!budget.tick()) throw CatError(ErrorCode::ResourceLimit, "nerve simplex budget exhausted");
        cur.push_back({{m}, {}});
      }
    } else {
      for (const auto& s : prev) {
        Index end = c.tgt(s.chain.back());
        for (Index m : c.mors_from(end)) {
          if (c.is_identity(m)) continue;
          if (!budget.tick()) throw CatError(ErrorCode::ResourceLimit, "nerve simplex budget exhausted");
          std::vector<Index> chain = s.chain;
          chain.push_back(m);
          cur.push_back({std::move(chain), {}});
        }
      }
    }
  }

  // Face data. The chain list at each dimension is sorted, so faces are
  // found by binary search; a face containing an identity composite is
  // degenerate (kNone).
  for (int n = 1; n <= d; ++n) {
    auto& prev = nerve.simplices[static_cast<std::size_t>(n - 1)];
    auto find_prev = [&](const std::vector<Index>& chain) -> Index {
      auto it = std::lower_bound(prev.begin(), prev.end(), chain,
                                 [](const TruncatedNerve::Simplex& s, const std::vector<Index>& key) {
                                   return s.chain < key;
                                 });
      if (it == prev.end() || it->chain != chain) throw CatError(ErrorCode::Internal, "nerve face lookup failed");
      return static_cast<Index>(it - prev.begin());
    };
    for (auto& s : nerve.simplices[static_cast<std::size_t>(n)]) {
      s.face.resize(static_cast<std::size_t>(n) + 1, kNone);
      if (n == 1) {
        s.face[0] = find_prev({c.tgt(s.chain[0])});  // drop leading vertex
        s.face[1] = find_prev({c.src(s.chain[0])});
        continue;
      }
      for (int i = 0; i <= n; ++i) {
        std::vector<Index> face_chain;
        face_chain.reserve(static_cast<std::size_t>(n) - 1);
        bool degenerate = false;
        if (i == 0) {
          face_chain.assign(s.chain.begin() + 1, s.chain.end());
        } else if (i == n) {
          face_chain.assign(s.chain.begin(), s.chain.end() - 1);
        } else {
          Index composite = c.compose(s.chain[static_cast<std::size_t>(i)], s.chain[static_cast<std::size_t>(i - 1)]);
          if (c.is_identity(composite)) {
            degenerate = true;
          } else {
            face_chain.assign(s.chain.begin(), s.chain.begin() + (i - 1));
            face_chain.push_back(composite);
            face_chain.insert(face_chain.end(), s.chain.begin() + (i + 1), s.chain.end());
          }
        }
        if (!degenerate) s.face[static_cast<std::size_t>(i)] = find_prev(face_chain);
      }
    }
  }
  return nerve;
}

ChainComplex nerve_chain_complex(const TruncatedNerve& nerve) {
  std::vector<std::size_t> ranks;
  std::vector<IntMat> boundaries;
  for (int n = 0; n <= nerve.dimension; ++n) {
    const auto& simp = nerve.simplices[static_cast<std::size_t>(n)];
    ranks.push_back(simp.size());
    if (n == 0) {
      boundaries.emplace_back(0, simp.size());
      continue;
    }
    IntMat b(nerve.count(n - 1), simp.size());
    for (std::size_t j = 0; j < simp.size(); ++j) {
      int sign = 1;
      for (std::size_t i = 0; i < simp[j].face.size(); ++i, sign = -sign) {
        Index row = simp[j].face[i];
        if (row != kNone) b.at(row, j) += sign;
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex::from_boundaries(std::move(ranks), std::move(boundaries));
}

HomologyResult nerve_homology(const FiniteCategory& c, int d, Budget& budget) {
  TruncatedNerve nerve = nerve_truncated(c, d + 1, budget);
  ChainComplex cc = nerve_chain_complex(nerve);
  return homology_of_complex(cc, d);
}

}  // namespace catlas
