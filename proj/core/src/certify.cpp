#include "catlas/certify.hpp"

#include "catlas/group_table.hpp"
#include "catlas/presentation.hpp"
#include "catlas/properties.hpp"

namespace catlas {

PropertyReport certify_contractible(const FiniteCategory& c, int refute_dim, Budget& budget) {
  const std::string prop = "Contractible(" + c.name() + ")";
  if (c.object_count() == 0) return PropertyReport::fail(prop, "category is empty");

  PropertyReport initial = check_category_property(c, CategoryProperty::Initial, budget);
  if (initial.holds()) return PropertyReport::hold(prop, initial.certificate);
  PropertyReport terminal = check_category_property(c, CategoryProperty::Terminal, budget);
  if (terminal.holds()) return PropertyReport::hold(prop, terminal.certificate);
  PropertyReport filtered = check_category_property(c, CategoryProperty::Filtered, budget);
  if (filtered.holds()) return PropertyReport::hold(prop, "filtered");

  try {
    HomologyResult h = nerve_homology(c, refute_dim, budget);
    if (!h.reduced_trivial())
      return PropertyReport::fail(prop, "nonvanishing reduced homology: " + h.to_string());
  } catch (const CatError& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    return PropertyReport::unknown(prop, "no certificate; homology refutation hit the budget");
  }
  return PropertyReport::unknown(prop, "no sufficient condition applies and reduced homology vanishes to degree " +
                                           std::to_string(refute_dim));
}

QuillenReport quillen_a_certify(const Functor& f, QuillenSide side, int d, Budget& budget) {
  QuillenReport rep;
  const std::string prop = "QuillenA";
  PropertyReport valid = functor_valid_report(f);
  if (!valid.holds()) throw CatError(ErrorCode::InvalidFunctor, valid.witness);

  if (side != QuillenSide::Slice) {
    FunctorProperty need =
        side == QuillenSide::FiberOpfibration ? FunctorProperty::Opfibration : FunctorProperty::Fibration;
    PropertyReport fib = check_functor_property(f, need, budget);
    if (!fib.holds()) {
      rep.verdict = fib.verdict == Verdict::Unknown
                        ? PropertyReport::unknown(prop, fib.certificate)
                        : PropertyReport::fail(prop, std::string(functor_property_name(need)) + ": " + fib.witness);
      return rep;
    }
    rep.per_object.push_back(std::string(functor_property_name(need)) + ": Holds");
  }

  const FiniteCategory& cod = *f.cod;
  bool all_certified = true;
  for (Index dd = 0; dd < cod.object_count(); ++dd) {
    CategoryPtr local = side == QuillenSide::Slice ? slice_category(f, dd) : fiber_category(f, dd);
    PropertyReport c = certify_contractible(*local, d, budget);
    std::string tag = (side == QuillenSide::Slice ? "slice at '" : "fiber at '") + cod.object_id(dd) + "'";
    if (c.verdict == Verdict::Fails) {
      rep.verdict = PropertyReport::fail(prop, tag + ": " + c.witness);
      rep.per_object.push_back(tag + ": Fails (" + c.witness + ")");
      return rep;
    }
    if (c.verdict == Verdict::Unknown) {
      all_certified = false;
      rep.per_object.push_back(tag + ": Unknown (" + c.certificate + ")");
    } else {
      rep.per_object.push_back(tag + ": " + c.certificate);
    }
  }
  if (!all_certified) {
    rep.verdict = PropertyReport::unknown(prop, "some slices/fibers lack a contractibility certificate");
    return rep;
  }

  rep.verdict = PropertyReport::hold(prop, "all " + std::string(side == QuillenSide::Slice ? "slices" : "fibers") +
                                               " contractible; |F| is a homotopy equivalence");
  rep.homology_checked = true;
  rep.dom_homology = nerve_homology(*f.dom, d, budget);
  rep.cod_homology = nerve_homology(*f.cod, d, budget);
  rep.homology_agrees = rep.dom_homology == rep.cod_homology;
  return rep;
}

EquivalenceReport homotopy_equivalence_certify(const Functor& f, const Functor& g,
                                               const std::vector<NaturalTransformation>& evidence, int d,
                                               Budget& budget) {
  EquivalenceReport rep;
  const std::string prop = "HomotopyEquivalence";
  if (!f.dom->same_presentation(*g.cod) || !f.cod->same_presentation(*g.dom))
    throw CatError(ErrorCode::ShapeMismatch, "functors do not form a going-and-coming pair");

  Functor gf = compose_functors(g, f);
  Functor fg = compose_functors(f, g);
  Functor idc = identity_functor(f.dom);
  Functor idd = identity_functor(f.cod);

  bool side_c = false, side_d = false;
  for (const auto& nt : evidence) {
    bool recognized = false;
    if ((same_functor(nt.source, idc) && same_functor(nt.target, gf)) ||
        (same_functor(nt.source, gf) && same_functor(nt.target, idc))) {
      side_c = true;
      recognized = true;
    }
    if ((same_functor(nt.source, idd) && same_functor(nt.target, fg)) ||
        (same_functor(nt.source, fg) && same_functor(nt.target, idd))) {
      side_d = true;
      recognized = true;
    }
    if (!recognized)
      throw CatError(ErrorCode::ShapeMismatch,
                     "transformation '" + nt.name + "' does not connect an identity with GF or FG");
    PropertyReport nat = naturality_report(nt);
    if (!nat.holds()) {
      rep.verdict = PropertyReport::fail(prop, nat.witness);
      return rep;
    }
  }
  if (!side_c || !side_d)
    throw CatError(ErrorCode::ShapeMismatch, "evidence must connect both id_C with GF and id_D with FG");

  rep.verdict = PropertyReport::hold(prop, "|" + f.dom->name() + "| ~ |" + f.cod->name() + "| via '" + f.name +
                                               "' and '" + g.name + "'");
  rep.dom_homology = nerve_homology(*f.dom, d, budget);
  rep.cod_homology = nerve_homology(*f.cod, d, budget);
  rep.homology_agrees = rep.dom_homology == rep.cod_homology;

  // pi1 cross-check when both sides enumerate (and are connected at the
  // chosen basepoints).
  if (f.dom->object_count() > 0 && f.cod->object_count() > 0) {
    Budget tietze_budget(2'000'000);
    Pi1Presentation pc = pi1_presentation(*f.dom, 0);
    Pi1Presentation pd = pi1_presentation(*f.cod, 0);
    if (pc.component_objects.size() == f.dom->object_count() &&
        pd.component_objects.size() == f.cod->object_count()) {
      TietzeResult tc = tietze_simplify(pc.presentation, tietze_budget);
      TietzeResult td = tietze_simplify(pd.presentation, tietze_budget);
      CosetEnumeration ec = coset_enumeration(tc.presentation, 20000);
      CosetEnumeration ed = coset_enumeration(td.presentation, 20000);
      if (ec.completed) rep.pi1_order_dom = ec.table.order();
      if (ed.completed) rep.pi1_order_cod = ed.table.order();
      if (ec.completed && ed.completed && ec.table.order() != ed.table.order())
        rep.verdict = PropertyReport::fail(prop, "pi1 orders disagree: " + std::to_string(ec.table.order()) + " vs " +
                                                     std::to_string(ed.table.order()));
    }
  }
  return rep;
}

}  // namespace catlas
