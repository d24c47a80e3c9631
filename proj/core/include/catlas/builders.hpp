#ifndef CATLAS_BUILDERS_HPP
#define CATLAS_BUILDERS_HPP

#include <string>

#include "catlas/constructions.hpp"
#include "catlas/finite_category.hpp"
#include "catlas/group_table.hpp"

namespace catlas {
namespace build {

FiniteGroupTable cyclic_group(int n);       // elements "1", "r1", ..., "r{n-1}"
FiniteGroupTable symmetric_group(int n);    // elements "1" and "s<one-line images>"
FiniteGroupTable klein_four();              // elements "1", "a", "b", "c"
FiniteGroupTable product_group(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// One-object category "o" whose endomorphisms are the group elements;
/// the identity is renamed "1_o".
CategoryPtr delooping(const FiniteGroupTable& g, const std::string& name);

/// Groupoid of n torsor copies over g: hom(Ti, Tj) = left translations,
/// morphism ids "t<i><j>_<element>".
CategoryPtr torsor_category(const FiniteGroupTable& g, int copies, const std::string& name);

CategoryPtr walking_arrow();       // a -> b, morphism "ab"
CategoryPtr walking_span();        // b <- a -> c, morphisms "ab", "ac"
CategoryPtr walking_cospan();      // b -> d <- c, morphisms "bd", "cd"
CategoryPtr walking_idempotent();  // object "o", morphism "e", e.e = e
CategoryPtr parallel_pair();       // f, g: a -> b
CategoryPtr discrete(int n);       // objects "x1".."xn"

Poset chain_poset(int n);          // p1 < ... < pn
Poset circle_poset();              // a,b < x,y (four covers)
Poset boolean_lattice(int atoms);  // subsets of {1..atoms}, "s" + members

/// Injections between the sets [1]..[nmax]; objects "size1".."size<nmax>",
/// morphisms "j<m><n>_<images>".
CategoryPtr fininj_category(int nmax);

SimplicialComplex simplex_complex(int n);           // full n-simplex on v0..vn
SimplicialComplex boundary_complex(int n);          // boundary of the n-simplex
SimplicialComplex point_complex();

}  // namespace build
}  // namespace catlas

#endif  // CATLAS_BUILDERS_HPP
