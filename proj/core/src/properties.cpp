#include "catlas/properties.hpp"

#include <algorithm>
#include <optional>

namespace catlas {

const char* category_property_name(CategoryProperty p) {
  switch (p) {
    case CategoryProperty::AllMono: return "AllMono";
    case CategoryProperty::Initial: return "Initial";
    case CategoryProperty::Terminal: return "Terminal";
    case CategoryProperty::Filtered: return "Filtered";
    case CategoryProperty::JEP: return "JEP";
    case CategoryProperty::AP: return "AP";
    case CategoryProperty::BinaryCoproducts: return "BinaryCoproducts";
    case CategoryProperty::Pushouts: return "Pushouts";
    case CategoryProperty::Pullbacks: return "Pullbacks";
    case CategoryProperty::RightFractions: return "RightFractions";
  }
  return "?";
}

CategoryProperty category_property_from_name(const std::string& name) {
  for (CategoryProperty p :
       {CategoryProperty::AllMono, CategoryProperty::Initial, CategoryProperty::Terminal, CategoryProperty::Filtered,
        CategoryProperty::JEP, CategoryProperty::AP, CategoryProperty::BinaryCoproducts, CategoryProperty::Pushouts,
        CategoryProperty::Pullbacks, CategoryProperty::RightFractions})
    if (name == category_property_name(p)) return p;
  throw CatError(ErrorCode::ValidationError, "unknown category property '" + name + "'");
}

const char* functor_property_name(FunctorProperty p) {
  switch (p) {
    case FunctorProperty::Valid: return "Valid";
    case FunctorProperty::Fibration: return "Fibration";
    case FunctorProperty::Opfibration: return "Opfibration";
  }
  return "?";
}

FunctorProperty functor_property_from_name(const std::string& name) {
  for (FunctorProperty p : {FunctorProperty::Valid, FunctorProperty::Fibration, FunctorProperty::Opfibration})
    if (name == functor_property_name(p)) return p;
  throw CatError(ErrorCode::ValidationError, "unknown functor property '" + name + "'");
}

namespace {

std::string mor_ref(const FiniteCategory& c, Index m) {
  return c.morphism_id(m) + ": " + c.object_id(c.src(m)) + " -> " + c.object_id(c.tgt(m));
}

struct SearchCut {};  // internal signal: budget ran dry

bool tick(Budget& b, std::uint64_t n = 1) {
  if (!b.tick(n)) throw SearchCut{};
  return true;
}

// f monic: fg = fh implies g = h for all parallel pairs into src(f).
std::optional<std::string> find_non_mono(const FiniteCategory& c, Budget& b) {
  for (Index f = 0; f < c.morphism_count(); ++f) {
    Index a = c.src(f);
    for (Index x = 0; x < c.object_count(); ++x) {
      const auto& into = c.hom(x, a);
      for (std::size_t i = 0; i < into.size(); ++i)
        for (std::size_t j = i + 1; j < into.size(); ++j) {
          tick(b);
          if (c.compose(f, into[i]) == c.compose(f, into[j]))
            return "morphism " + mor_ref(c, f) + " is not monic: equalizes " + c.morphism_id(into[i]) + " and " +
                   c.morphism_id(into[j]);
        }
    }
  }
  return std::nullopt;
}

PropertyReport decide_all_mono(const FiniteCategory& c, Budget& b) {
  const std::string prop = "AllMono";
  if (auto w = find_non_mono(c, b)) return PropertyReport::fail(prop, *w);
  return PropertyReport::hold(prop);
}

PropertyReport decide_initial(const FiniteCategory& c, Budget& b) {
  const std::string prop = "Initial";
  std::string first_reason;
  for (Index i = 0; i < c.object_count(); ++i) {
    bool ok = true;
    for (Index x = 0; x < c.object_count() && ok; ++x) {
      tick(b);
      if (c.hom(i, x).size() != 1) {
        ok = false;
        if (first_reason.empty())
          first_reason = "'" + c.object_id(i) + "' has " + std::to_string(c.hom(i, x).size()) + " morphisms to '" +
                         c.object_id(x) + "'";
      }
    }
    if (ok) return PropertyReport::hold(prop, "initial object '" + c.object_id(i) + "'");
  }
  if (c.object_count() == 0) return PropertyReport::fail(prop, "category is empty");
  return PropertyReport::fail(prop, "no initial object; e.g. " + first_reason);
}

PropertyReport decide_terminal(const FiniteCategory& c, Budget& b) {
  const std::string prop = "Terminal";
  std::string first_reason;
  for (Index t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (Index x = 0; x < c.object_count() && ok; ++x) {
      tick(b);
      if (c.hom(x, t).size() != 1) {
        ok = false;
        if (first_reason.empty())
          first_reason = "'" + c.object_id(t) + "' receives " + std::to_string(c.hom(x, t).size()) +
                         " morphisms from '" + c.object_id(x) + "'";
      }
    }
    if (ok) return PropertyReport::hold(prop, "terminal object '" + c.object_id(t) + "'");
  }
  if (c.object_count() == 0) return PropertyReport::fail(prop, "category is empty");
  return PropertyReport::fail(prop, "no terminal object; e.g. " + first_reason);
}

// Cocone over a discrete pair: z with a -> z and b -> z.
bool has_pair_cocone(const FiniteCategory& c, Index a, Index b, Budget& bud) {
  for (Index z = 0; z < c.object_count(); ++z) {
    tick(bud);
    if (!c.hom(a, z).empty() && !c.hom(b, z).empty()) return true;
  }
  return false;
}

// Coequalizing cocone over a parallel pair f,g: a -> b: some h with hf = hg.
std::optional<Index> find_coequalizing(const FiniteCategory& c, Index f, Index g, Budget& bud) {
  for (Index h : c.mors_from(c.tgt(f))) {
    tick(bud);
    if (c.compose(h, f) == c.compose(h, g)) return h;
  }
  return std::nullopt;
}

PropertyReport decide_jep(const FiniteCategory& c, Budget& b) {
  const std::string prop = "JEP";
  for (Index a = 0; a < c.object_count(); ++a)
    for (Index bb = a; bb < c.object_count(); ++bb)
      if (!has_pair_cocone(c, a, bb, b))
        return PropertyReport::fail(prop,
                                    "objects '" + c.object_id(a) + "', '" + c.object_id(bb) + "' have no joint target");
  return PropertyReport::hold(prop);
}

// The three generating cases: nonempty, cocones for discrete pairs, and
// cocones for parallel pairs.
PropertyReport decide_filtered(const FiniteCategory& c, Budget& b) {
  const std::string prop = "Filtered";
  if (c.object_count() == 0) return PropertyReport::fail(prop, "empty category (no cocone for the empty diagram)");
  for (Index a = 0; a < c.object_count(); ++a)
    for (Index bb = a; bb < c.object_count(); ++bb)
      if (!has_pair_cocone(c, a, bb, b))
        return PropertyReport::fail(prop, "discrete pair ('" + c.object_id(a) + "', '" + c.object_id(bb) +
                                              "') admits no cocone");
  for (Index f = 0; f < c.morphism_count(); ++f)
    for (Index g = f + 1; g < c.morphism_count(); ++g) {
      if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g)) continue;
      if (!find_coequalizing(c, f, g, b))
        return PropertyReport::fail(prop, "parallel pair (" + c.morphism_id(f) + ", " + c.morphism_id(g) +
                                              ") admits no coequalizing morphism");
    }
  return PropertyReport::hold(prop);
}

PropertyReport decide_ap(const FiniteCategory& c, Budget& b) {
  const std::string prop = "AP";
  for (Index a = 0; a < c.object_count(); ++a) {
    const auto& legs = c.mors_from(a);
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i; j < legs.size(); ++j) {
        tick(b, legs.size());
        Index f = legs[i], g = legs[j];
        if (!span_has_amalgam(c, f, g))
          return PropertyReport::fail(prop, "span " + c.object_id(c.tgt(f)) + " <- " + c.object_id(a) + " -> " +
                                                c.object_id(c.tgt(g)) + " via (" + c.morphism_id(f) + ", " +
                                                c.morphism_id(g) + ") has no amalgam");
      }
  }
  return PropertyReport::hold(prop);
}

// Binary coproduct of (a, b): object d with injections verified universal.
PropertyReport decide_binary_coproducts(const FiniteCategory& c, Budget& b) {
  const std::string prop = "BinaryCoproducts";
  if (c.object_count() == 0) return PropertyReport::hold(prop, "vacuous (empty category)");
  for (Index a = 0; a < c.object_count(); ++a)
    for (Index bb = a; bb < c.object_count(); ++bb) {
      bool found = false;
      std::string cert;
      for (Index d = 0; d < c.object_count() && !found; ++d)
        for (Index i : c.hom(a, d)) {
          if (found) break;
          for (Index j : c.hom(bb, d)) {
            tick(b);
            // Universal: every cocone factors uniquely.
            bool universal = true;
            for (Index x = 0; x < c.object_count() && universal; ++x)
              for (Index u : c.hom(a, x)) {
                if (!universal) break;
                for (Index v : c.hom(bb, x)) {
                  tick(b);
                  int count = 0;
                  for (Index m : c.hom(d, x))
                    if (c.compose(m, i) == u && c.compose(m, j) == v) ++count;
                  if (count != 1) {
                    universal = false;
                    break;
                  }
                }
              }
            if (universal) {
              found = true;
              cert = c.object_id(a) + "+" + c.object_id(bb) + " = " + c.object_id(d) + " via (" + c.morphism_id(i) +
                     ", " + c.morphism_id(j) + ")";
              break;
            }
          }
        }
      if (!found)
        return PropertyReport::fail(prop,
                                    "pair ('" + c.object_id(a) + "', '" + c.object_id(bb) + "') has no coproduct");
      if (a == 0 && bb == 0) (void)cert;  // only the existence matters per pair
    }
  return PropertyReport::hold(prop);
}

PropertyReport decide_pushouts(const FiniteCategory& c, Budget& b) {
  const std::string prop = "Pushouts";
  for (Index a = 0; a < c.object_count(); ++a) {
    const auto& legs = c.mors_from(a);
    for (std::size_t fi = 0; fi < legs.size(); ++fi)
      for (std::size_t gi = fi; gi < legs.size(); ++gi) {
        Index f = legs[fi], g = legs[gi];
        bool found = false;
        for (Index d = 0; d < c.object_count() && !found; ++d)
          for (Index j : c.hom(c.tgt(f), d)) {
            if (found) break;
            for (Index k : c.hom(c.tgt(g), d)) {
              tick(b);
              if (c.compose(j, f) != c.compose(k, g)) continue;
              bool universal = true;
              for (Index x = 0; x < c.object_count() && universal; ++x)
                for (Index u : c.hom(c.tgt(f), x)) {
                  if (!universal) break;
                  for (Index v : c.hom(c.tgt(g), x)) {
                    tick(b);
                    if (c.compose(u, f) != c.compose(v, g)) continue;
                    int count = 0;
                    for (Index m : c.hom(d, x))
                      if (c.compose(m, j) == u && c.compose(m, k) == v) ++count;
                    if (count != 1) {
                      universal = false;
                      break;
                    }
                  }
                }
              if (universal) {
                found = true;
                break;
              }
            }
          }
        if (!found)
          return PropertyReport::fail(prop, "span via (" + c.morphism_id(f) + ", " + c.morphism_id(g) + ") at '" +
                                                c.object_id(a) + "' has no pushout");
      }
  }
  return PropertyReport::hold(prop);
}

PropertyReport decide_pullbacks(const FiniteCategory& c, Budget& b) {
  const std::string prop = "Pullbacks";
  for (Index z = 0; z < c.object_count(); ++z) {
    const auto& legs = c.mors_into(z);
    for (std::size_t fi = 0; fi < legs.size(); ++fi)
      for (std::size_t gi = fi; gi < legs.size(); ++gi) {
        Index f = legs[fi], g = legs[gi];
        bool found = false;
        for (Index p = 0; p < c.object_count() && !found; ++p)
          for (Index q1 : c.hom(p, c.src(f))) {
            if (found) break;
            for (Index q2 : c.hom(p, c.src(g))) {
              tick(b);
              if (c.compose(f, q1) != c.compose(g, q2)) continue;
              bool universal = true;
              for (Index x = 0; x < c.object_count() && universal; ++x)
                for (Index u : c.hom(x, c.src(f))) {
                  if (!universal) break;
                  for (Index v : c.hom(x, c.src(g))) {
                    tick(b);
                    if (c.compose(f, u) != c.compose(g, v)) continue;
                    int count = 0;
                    for (Index m : c.hom(x, p))
                      if (c.compose(q1, m) == u && c.compose(q2, m) == v) ++count;
                    if (count != 1) {
                      universal = false;
                      break;
                    }
                  }
                }
              if (universal) {
                found = true;
                break;
              }
            }
          }
        if (!found)
          return PropertyReport::fail(prop, "cospan via (" + c.morphism_id(f) + ", " + c.morphism_id(g) + ") into '" +
                                                c.object_id(z) + "' has no pullback");
      }
  }
  return PropertyReport::hold(prop);
}

PropertyReport decide_right_fractions(const FiniteCategory& c, Budget& b) {
  const std::string prop = "RightFractions";
  // Condition (1): every cospan has a commuting cone.
  for (Index z = 0; z < c.object_count(); ++z) {
    const auto& legs = c.mors_into(z);
    for (std::size_t fi = 0; fi < legs.size(); ++fi)
      for (std::size_t gi = fi; gi < legs.size(); ++gi) {
        Index f = legs[fi], g = legs[gi];
        bool found = false;
        for (Index w = 0; w < c.object_count() && !found; ++w)
          for (Index u : c.hom(w, c.src(f))) {
            if (found) break;
            for (Index v : c.hom(w, c.src(g))) {
              tick(b);
              if (c.compose(f, u) == c.compose(g, v)) {
                found = true;
                break;
              }
            }
          }
        if (!found)
          return PropertyReport::fail(prop, "cospan (" + c.morphism_id(f) + ", " + c.morphism_id(g) + ") into '" +
                                                c.object_id(z) + "' has no cone");
      }
  }
  // Condition (2): fu = fv implies some g with ug = vg. Vacuous when every
  // morphism is monic, and the decider records that shortcut.
  if (!find_non_mono(c, b))
    return PropertyReport::hold(prop, "condition (2) vacuous: all morphisms monic");
  for (Index f = 0; f < c.morphism_count(); ++f) {
    Index a = c.src(f);
    for (Index x = 0; x < c.object_count(); ++x) {
      const auto& into = c.hom(x, a);
      for (std::size_t i = 0; i < into.size(); ++i)
        for (std::size_t j = i + 1; j < into.size(); ++j) {
          tick(b);
          Index u = into[i], v = into[j];
          if (c.compose(f, u) != c.compose(f, v)) continue;
          bool found = false;
          for (Index g : c.mors_into(x)) {
            tick(b);
            if (c.compose(u, g) == c.compose(v, g)) {
              found = true;
              break;
            }
          }
          if (!found)
            return PropertyReport::fail(prop, "pair (" + c.morphism_id(u) + ", " + c.morphism_id(v) +
                                                  ") equalized by " + c.morphism_id(f) +
                                                  " admits no co-equalizing precomposition");
        }
    }
  }
  return PropertyReport::hold(prop);
}

}  // namespace

PropertyReport check_category_property(const FiniteCategory& c, CategoryProperty prop, Budget& budget) {
  std::uint64_t before = budget.used;
  PropertyReport rep;
  try {
    switch (prop) {
      case CategoryProperty::AllMono: rep = decide_all_mono(c, budget); break;
      case CategoryProperty::Initial: rep = decide_initial(c, budget); break;
      case CategoryProperty::Terminal: rep = decide_terminal(c, budget); break;
      case CategoryProperty::Filtered: rep = decide_filtered(c, budget); break;
      case CategoryProperty::JEP: rep = decide_jep(c, budget); break;
      case CategoryProperty::AP: rep = decide_ap(c, budget); break;
      case CategoryProperty::BinaryCoproducts: rep = decide_binary_coproducts(c, budget); break;
      case CategoryProperty::Pushouts: rep = decide_pushouts(c, budget); break;
      case CategoryProperty::Pullbacks: rep = decide_pullbacks(c, budget); break;
      case CategoryProperty::RightFractions: rep = decide_right_fractions(c, budget); break;
    }
  } catch (const SearchCut&) {
    rep = PropertyReport::unknown(category_property_name(prop), "search budget exhausted");
  }
  rep.steps_used = budget.used - before;
  return rep;
}

namespace {

// Cartesian lift of f at e: g: e' -> e over f such that every g'': e'' -> e
// over f.f' factors uniquely through g by a g' over f'.
bool is_cartesian_lift(const Functor& fun, Index f, Index g, Budget& bud) {
  const FiniteCategory& e = *fun.dom;
  const FiniteCategory& b = *fun.cod;
  Index eprime = e.src(g);
  for (Index fprime = 0; fprime < b.morphism_count(); ++fprime) {
    if (b.tgt(fprime) != b.src(f)) continue;
    Index ffprime = b.compose(f, fprime);
    for (Index gpp = 0; gpp < e.morphism_count(); ++gpp) {
      if (e.tgt(gpp) != e.tgt(g) || fun.apply_mor(gpp) != ffprime) continue;
      tick(bud);
      int count = 0;
      for (Index gp : e.hom(e.src(gpp), eprime))
        if (fun.apply_mor(gp) == fprime && e.compose(g, gp) == gpp) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

bool is_cocartesian_lift(const Functor& fun, Index f, Index g, Budget& bud) {
  const FiniteCategory& e = *fun.dom;
  const FiniteCategory& b = *fun.cod;
  Index eprime = e.tgt(g);
  for (Index fprime = 0; fprime < b.morphism_count(); ++fprime) {
    if (b.src(fprime) != b.tgt(f)) continue;
    Index fpf = b.compose(fprime, f);
    for (Index gpp = 0; gpp < e.morphism_count(); ++gpp) {
      if (e.src(gpp) != e.src(g) || fun.apply_mor(gpp) != fpf) continue;
      tick(bud);
      int count = 0;
      for (Index gp : e.hom(eprime, e.tgt(gpp)))
        if (fun.apply_mor(gp) == fprime && e.compose(gp, g) == gpp) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

PropertyReport decide_fibration(const Functor& fun, bool op, Budget& bud) {
  const std::string prop = op ? "Opfibration" : "Fibration";
  const FiniteCategory& e = *fun.dom;
  const FiniteCategory& b = *fun.cod;
  for (Index f = 0; f < b.morphism_count(); ++f) {
    for (Index obj = 0; obj < e.object_count(); ++obj) {
      if (fun.apply_obj(obj) != (op ? b.src(f) : b.tgt(f))) continue;
      bool found = false;
      if (op) {
        for (Index g : e.mors_from(obj)) {
          tick(bud);
          if (fun.apply_mor(g) == f && is_cocartesian_lift(fun, f, g, bud)) {
            found = true;
            break;
          }
        }
      } else {
        for (Index g : e.mors_into(obj)) {
          tick(bud);
          if (fun.apply_mor(g) == f && is_cartesian_lift(fun, f, g, bud)) {
            found = true;
            break;
          }
        }
      }
      if (!found)
        return PropertyReport::fail(prop, "no " + std::string(op ? "cocartesian" : "cartesian") + " lift of " +
                                              mor_ref(b, f) + " at '" + e.object_id(obj) + "'");
    }
  }
  return PropertyReport::hold(prop);
}

}  // namespace

PropertyReport check_functor_property(const Functor& f, FunctorProperty prop, Budget& budget) {
  std::uint64_t before = budget.used;
  PropertyReport rep;
  try {
    switch (prop) {
      case FunctorProperty::Valid: rep = functor_valid_report(f); break;
      case FunctorProperty::Fibration: rep = decide_fibration(f, false, budget); break;
      case FunctorProperty::Opfibration: rep = decide_fibration(f, true, budget); break;
    }
  } catch (const SearchCut&) {
    rep = PropertyReport::unknown(functor_property_name(prop), "search budget exhausted");
  }
  rep.steps_used = budget.used - before;
  return rep;
}

PropertyReport check_functorial_joint_embedding(const FiniteCategory& c, const Functor& f,
                                                const NaturalTransformation& iota1,
                                                const NaturalTransformation& iota2) {
  const std::string prop = "FunctorialJointEmbedding";
  if (c.object_count() == 0) return PropertyReport::fail(prop, "category is empty");

  CategoryPtr prod = f.dom;
  if (!prod || !f.cod || !f.cod->same_presentation(c))
    throw CatError(ErrorCode::ShapeMismatch, "F must land in the given category");
  CategoryPtr cc = product_category(c, c);
  if (!prod->same_presentation(*cc))
    throw CatError(ErrorCode::ShapeMismatch, "F is not defined on the product of the category with itself");

  CategoryPtr cptr = f.cod;
  Functor p1 = product_projection(prod, cptr, cptr, true);
  Functor p2 = product_projection(prod, cptr, cptr, false);
  if (!same_functor(iota1.source, p1)) throw CatError(ErrorCode::ShapeMismatch, "iota1 source is not proj1");
  if (!same_functor(iota2.source, p2)) throw CatError(ErrorCode::ShapeMismatch, "iota2 source is not proj2");
  if (!same_functor(iota1.target, f) || !same_functor(iota2.target, f))
    throw CatError(ErrorCode::ShapeMismatch, "iota target is not F");

  PropertyReport n1 = naturality_report(iota1);
  if (!n1.holds()) return PropertyReport::fail(prop, "iota1: " + n1.witness);
  PropertyReport n2 = naturality_report(iota2);
  if (!n2.holds()) return PropertyReport::fail(prop, "iota2: " + n2.witness);
  return PropertyReport::hold(prop, "functorial joint embedding via '" + f.name +
                                        "'; nonempty with natural inclusions, hence contractible");
}

bool span_has_amalgam(const FiniteCategory& c, Index f, Index g) {
  if (c.src(f) != c.src(g)) throw CatError(ErrorCode::SpanNotInCategory, "span legs do not share a source");
  for (Index jm : c.mors_from(c.tgt(f)))
    for (Index km : c.hom(c.tgt(g), c.tgt(jm)))
      if (c.compose(jm, f) == c.compose(km, g)) return true;
  return false;
}

MonsterReport monster_report(const FiniteCategory& c, const std::vector<Index>& c0_objects, Index u) {
  MonsterReport rep;
  rep.universal.property = "Universal";
  rep.universal.verdict = Verdict::Holds;
  for (Index m : c0_objects) {
    if (c.hom(m, u).empty()) {
      rep.universal =
          PropertyReport::fail("Universal", "no morphism from '" + c.object_id(m) + "' to '" + c.object_id(u) + "'");
      break;
    }
  }

  rep.strongly_homogeneous.property = "StronglyHomogeneous";
  rep.strongly_homogeneous.verdict = Verdict::Holds;
  // Collect automorphisms of u once.
  std::vector<Index> autos;
  for (Index a : c.hom(u, u)) {
    for (Index binv : c.hom(u, u))
      if (c.compose(a, binv) == c.identity(u) && c.compose(binv, a) == c.identity(u)) {
        autos.push_back(a);
        break;
      }
  }
  for (Index m : c0_objects) {
    const auto& maps = c.hom(m, u);
    for (Index f : maps)
      for (Index g : maps) {
        bool found = false;
        for (Index a : autos)
          if (c.compose(a, f) == g) {
            found = true;
            break;
          }
        if (!found) {
          rep.strongly_homogeneous = PropertyReport::fail(
              "StronglyHomogeneous", "no automorphism of '" + c.object_id(u) + "' carries " + c.morphism_id(f) +
                                         " to " + c.morphism_id(g) + " (from '" + c.object_id(m) + "')");
          return rep;
        }
      }
  }
  return rep;
}

}  // namespace catlas
