// Shared test corpus: the named finite categories the suites sweep over.
#ifndef CATLAS_TESTS_CORPUS_HPP
#define CATLAS_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "catlas/builders.hpp"
#include "catlas/constructions.hpp"
#include "catlas/finite_category.hpp"

namespace catlas_tests {

struct CorpusEntry {
  std::string name;
  catlas::CategoryPtr category;
};

inline std::vector<CorpusEntry> corpus() {
  using namespace catlas;
  namespace b = catlas::build;
  std::vector<CorpusEntry> out;
  out.push_back({"BZ2", b::delooping(b::cyclic_group(2), "BZ2")});
  out.push_back({"BZ3", b::delooping(b::cyclic_group(3), "BZ3")});
  out.push_back({"BZ4", b::delooping(b::cyclic_group(4), "BZ4")});
  out.push_back({"BS3", b::delooping(b::symmetric_group(3), "BS3")});
  out.push_back({"BS4", b::delooping(b::symmetric_group(4), "BS4")});
  out.push_back({"BV4", b::delooping(b::klein_four(), "BV4")});
  {
    CategoryPtr bz2 = b::delooping(b::cyclic_group(2), "BZ2");
    out.push_back({"ProdBZ2BZ2", product_category(*bz2, *bz2, "ProdBZ2BZ2")});
  }
  out.push_back({"CirclePoset", poset_category(b::circle_poset())});
  out.push_back({"WalkingArrow", b::walking_arrow()});
  out.push_back({"WalkingSpan", b::walking_span()});
  out.push_back({"WalkingCospan", b::walking_cospan()});
  out.push_back({"WalkingIdempotent", b::walking_idempotent()});
  out.push_back({"ParallelPair", b::parallel_pair()});
  out.push_back({"Discrete3", b::discrete(3)});
  out.push_back({"Chain3", poset_category(b::chain_poset(3))});
  out.push_back({"Bool2", poset_category(b::boolean_lattice(2))});
  out.push_back({"Bool3", poset_category(b::boolean_lattice(3))});
  out.push_back({"FacePosetDelta1", face_poset(b::simplex_complex(1)).category});
  out.push_back({"FacePosetBd2", face_poset(b::boundary_complex(2)).category});
  out.push_back({"FacePosetBd3", face_poset(b::boundary_complex(3)).category});
  out.push_back({"FinInj3", b::fininj_category(3)});
  out.push_back({"FinInj4", b::fininj_category(4)});
  return out;
}

}  // namespace catlas_tests

#endif
