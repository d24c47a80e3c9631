#include "catlas/lascar.hpp"

#include <algorithm>
#include <set>

#include "catlas/presentation.hpp"

namespace catlas {

AutomorphismGroup automorphism_group(const FiniteCategory& c, Index u) {
  if (u >= c.object_count()) throw CatError(ErrorCode::DanglingReference, "automorphism base object out of range");
  AutomorphismGroup g;
  Index id = c.identity(u);
  for (Index m : c.hom(u, u)) {
    for (Index n : c.hom(u, u))
      if (c.compose(m, n) == id && c.compose(n, m) == id) {
        g.aut_morphisms.push_back(m);
        break;
      }
  }
  const std::size_t n = g.aut_morphisms.size();
  g.table.elements.reserve(n);
  for (Index m : g.aut_morphisms) g.table.elements.push_back(c.morphism_id(m));
  std::vector<int> index_of(c.morphism_count(), -1);
  for (std::size_t i = 0; i < n; ++i) index_of[g.aut_morphisms[i]] = static_cast<int>(i);
  g.table.identity = index_of[id];
  g.table.mul.assign(n * n, -1);
  g.table.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int prod = index_of[c.compose(g.aut_morphisms[a], g.aut_morphisms[b])];
      if (prod < 0) throw CatError(ErrorCode::Internal, "automorphisms not closed under composition");
      g.table.mul[a * n + b] = prod;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table.mul[a * n + b] == g.table.identity) {
        g.table.inverse[a] = static_cast<int>(b);
        break;
      }
  g.table.validate();
  return g;
}

LascarResult lst_subgroup(const FiniteCategory& c, const std::vector<Index>& c0, Index u) {
  LascarResult res;
  res.aut = automorphism_group(c, u);
  const std::size_t n = res.aut.table.order();

  // alpha qualifies as a generator iff some f: M -> U with M in C0 is fixed:
  // alpha . f = f. The first witness in (M, f) order is recorded.
  for (std::size_t a = 0; a < n; ++a) {
    Index alpha = res.aut.aut_morphisms[a];
    bool found = false;
    for (Index m : c0) {
      for (Index f : c.hom(m, u)) {
        if (c.compose(alpha, f) == f) {
          res.lst_generators.push_back({static_cast<int>(a), m, f});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  std::vector<int> gens;
  gens.reserve(res.lst_generators.size());
  for (const auto& g : res.lst_generators) gens.push_back(g.element);
  res.lst = subgroup_closure(res.aut.table, gens);
  res.normality_witness = normality_counterexample(res.aut.table, res.lst);
  res.normality_verified = !res.normality_witness.has_value();
  return res;
}

LascarResult lascar_group(const FiniteCategory& c, const std::vector<Index>& c0, Index u, bool take_normal_closure) {
  LascarResult res = lst_subgroup(c, c0, u);
  if (!res.normality_verified) {
    if (!take_normal_closure) {
      const auto& w = *res.normality_witness;
      throw CatError(ErrorCode::NotNormal,
                     "Lst is not normal in Aut: conjugating " + res.aut.table.elements[static_cast<std::size_t>(w.second)] +
                         " by " + res.aut.table.elements[static_cast<std::size_t>(w.first)] + " leaves the subgroup");
    }
    res.lst = normal_closure(res.aut.table, res.lst);
    res.normal_closure_taken = true;
  }
  res.quotient = quotient_by_normal(res.aut.table, res.lst);
  return res;
}

PhiMap phi_map(const FiniteCategory& c, const std::vector<Index>& c0, Index u, std::size_t max_cosets) {
  PhiMap phi;
  phi.lascar = lascar_group(c, c0, u);

  Pi1Presentation pi1 = pi1_presentation(c, u);
  Budget tietze_budget(5'000'000);
  TietzeResult simplified = tietze_simplify(pi1.presentation, tietze_budget);
  CosetEnumeration en = coset_enumeration(simplified.presentation, max_cosets);
  if (!en.completed)
    throw CatError(ErrorCode::EnumerationFailed,
                   "pi1 did not enumerate within " + std::to_string(max_cosets) + " cosets");
  phi.pi1_order = en.table.order();

  // [alpha] evaluates as the generator word of alpha in the enumerated
  // group; identity automorphism evaluates to the identity element.
  auto eval_aut = [&](Index alpha_mor) -> int {
    if (c.is_identity(alpha_mor)) return en.table.identity;
    Index g = pi1.generator_of(alpha_mor);
    if (g == kNone) throw CatError(ErrorCode::Internal, "automorphism missing from pi1 generators");
    Word w{static_cast<int>(g) + 1};
    return en.eval(simplified.rewrite(w));
  };

  // Well-definedness: every Lst generator must map to the identity.
  phi.well_defined = true;
  for (const auto& gen : phi.lascar.lst_generators) {
    int img = eval_aut(phi.lascar.aut.aut_morphisms[static_cast<std::size_t>(gen.element)]);
    if (img != en.table.identity) {
      phi.well_defined = false;
      phi.well_defined_evidence = "Lst generator " +
                                  phi.lascar.aut.table.elements[static_cast<std::size_t>(gen.element)] +
                                  " maps to a nonidentity pi1 element";
      throw CatError(ErrorCode::WellDefinednessFailure, phi.well_defined_evidence);
    }
  }
  phi.well_defined_evidence = "all " + std::to_string(phi.lascar.lst_generators.size()) +
                              " Lst generators map to the identity loop";

  const QuotientGroup& q = *phi.lascar.quotient;
  phi.image.resize(q.table.order());
  for (std::size_t i = 0; i < q.table.order(); ++i)
    phi.image[i] = eval_aut(phi.lascar.aut.aut_morphisms[static_cast<std::size_t>(q.representative[i])]);

  phi.homomorphism = true;
  for (std::size_t a = 0; a < q.table.order() && phi.homomorphism; ++a)
    for (std::size_t b = 0; b < q.table.order(); ++b) {
      int lhs = phi.image[static_cast<std::size_t>(q.table.times(static_cast<int>(a), static_cast<int>(b)))];
      int rhs = en.table.times(phi.image[a], phi.image[b]);
      if (lhs != rhs) {
        phi.homomorphism = false;
        break;
      }
    }

  std::set<int> image_set(phi.image.begin(), phi.image.end());
  phi.bijective = phi.homomorphism && image_set.size() == q.table.order() && q.table.order() == en.table.order();
  return phi;
}

MainTheoremReport verify_main_theorem(const FiniteCategory& c, const std::vector<Index>& c0, Index u,
                                      std::size_t max_cosets) {
  MainTheoremReport rep;
  rep.hypotheses = monster_report(c, c0, u);
  rep.hypotheses_met = rep.hypotheses.both_hold();

  // Both groups are emitted even when the hypotheses fail, for inspection.
  try {
    rep.phi = phi_map(c, c0, u, max_cosets);
    rep.gal_order = rep.phi->lascar.quotient->table.order();
    rep.pi1_order = rep.phi->pi1_order;
  } catch (const CatError& e) {
    if (e.code() != ErrorCode::EnumerationFailed) throw;
    LascarResult partial = lascar_group(c, c0, u);
    rep.gal_order = partial.quotient->table.order();
  }

  const std::string prop = "MainTheorem";
  if (!rep.hypotheses_met) {
    const PropertyReport& bad =
        rep.hypotheses.universal.holds() ? rep.hypotheses.strongly_homogeneous : rep.hypotheses.universal;
    rep.verdict = PropertyReport::fail(prop, "HypothesesNotMet: " + bad.property + ": " + bad.witness);
    return rep;
  }
  if (!rep.phi) {
    rep.verdict = PropertyReport::unknown(prop, "pi1 enumeration exceeded the coset budget");
    return rep;
  }
  if (rep.phi->bijective) {
    rep.verdict = PropertyReport::hold(
        prop, "phi: Gal_L -> pi1 is a bijective homomorphism of order " + std::to_string(*rep.gal_order));
  } else {
    rep.verdict = PropertyReport::fail(prop, "phi is not an isomorphism: |Gal_L| = " + std::to_string(*rep.gal_order) +
                                                 ", |pi1| = " + std::to_string(*rep.pi1_order) +
                                                 (rep.phi->homomorphism ? "" : " (homomorphism check failed)"));
  }
  return rep;
}

}  // namespace catlas
