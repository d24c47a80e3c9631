#include "catlas/finite_category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catlas {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::BrokenAssociativity: return "BrokenAssociativity";
    case ErrorCode::BrokenIdentity: return "BrokenIdentity";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::InvalidFunctor: return "InvalidFunctor";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SpanNotInCategory: return "SpanNotInCategory";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::EnumerationFailed: return "EnumerationFailed";
    case ErrorCode::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorCode::RelatorViolation: return "RelatorViolation";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Index FiniteCategory::object(const std::string& id) const {
  Index o = find_object(id);
  if (o == kNone) throw CatError(ErrorCode::DanglingReference, "unknown object '" + id + "' in category '" + name_ + "'");
  return o;
}

Index FiniteCategory::morphism(const std::string& id) const {
  Index m = find_morphism(id);
  if (m == kNone) throw CatError(ErrorCode::DanglingReference, "unknown morphism '" + id + "' in category '" + name_ + "'");
  return m;
}

Index FiniteCategory::find_object(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? kNone : it->second;
}

Index FiniteCategory::find_morphism(const std::string& id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? kNone : it->second;
}

bool FiniteCategory::same_presentation(const FiniteCategory& other) const {
  if (objects_ != other.objects_) return false;
  if (morphisms_.size() != other.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].id != other.morphisms_[i].id || morphisms_[i].src != other.morphisms_[i].src ||
        morphisms_[i].tgt != other.morphisms_[i].tgt)
      return false;
  }
  return identity_ == other.identity_ && table_ == other.table_;
}

RawCategory FiniteCategory::to_raw() const {
  RawCategory raw;
  raw.name = name_;
  raw.objects = objects_;
  for (const auto& m : morphisms_) raw.morphisms.push_back({m.id, objects_[m.src], objects_[m.tgt]});
  for (Index o = 0; o < objects_.size(); ++o) raw.identities.emplace_back(objects_[o], morphisms_[identity_[o]].id);
  const std::size_t n = morphisms_.size();
  for (Index g = 0; g < n; ++g)
    for (Index f = 0; f < n; ++f) {
      Index gf = table_[g * n + f];
      if (gf == kNone) continue;
      if (is_identity(g) || is_identity(f)) continue;  // inferable
      raw.compose.push_back({morphisms_[g].id, morphisms_[f].id, morphisms_[gf].id});
    }
  return raw;
}

FiniteCategory validate_category(const RawCategory& raw) {
  FiniteCategory cat;
  cat.name_ = raw.name;

  cat.objects_ = raw.objects;
  std::sort(cat.objects_.begin(), cat.objects_.end());
  if (std::adjacent_find(cat.objects_.begin(), cat.objects_.end()) != cat.objects_.end())
    throw CatError(ErrorCode::ValidationError, "duplicate object id in category '" + raw.name + "'");
  for (Index o = 0; o < cat.objects_.size(); ++o) cat.obj_index_[cat.objects_[o]] = o;

  // Identity assignment: explicit mapping wins; otherwise the conventional
  // name "1_<object>", created if the input did not list it.
  std::map<std::string, std::string> identity_of;  // object -> morphism id
  for (const auto& [obj, mor] : raw.identities) {
    if (cat.obj_index_.find(obj) == cat.obj_index_.end())
      throw CatError(ErrorCode::DanglingReference, "identity entry names unknown object '" + obj + "'");
    identity_of[obj] = mor;
  }

  std::vector<RawCategory::Morphism> mors = raw.morphisms;
  std::set<std::string> mor_ids;
  for (const auto& m : mors) {
    if (!mor_ids.insert(m.id).second)
      throw CatError(ErrorCode::ValidationError, "duplicate morphism id '" + m.id + "'");
  }
  for (const auto& obj : cat.objects_) {
    auto it = identity_of.find(obj);
    std::string id = it != identity_of.end() ? it->second : "1_" + obj;
    if (!mor_ids.count(id)) {
      if (it != identity_of.end())
        throw CatError(ErrorCode::DanglingReference, "identity morphism '" + id + "' of '" + obj + "' is not listed");
      mors.push_back({id, obj, obj});
      mor_ids.insert(id);
    }
    identity_of[obj] = id;
  }

  std::sort(mors.begin(), mors.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  const std::size_t n = mors.size();
  cat.morphisms_.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const auto& m = mors[i];
    auto s = cat.obj_index_.find(m.src);
    auto t = cat.obj_index_.find(m.tgt);
    if (s == cat.obj_index_.end())
      throw CatError(ErrorCode::DanglingReference, "morphism '" + m.id + "' has unknown src '" + m.src + "'");
    if (t == cat.obj_index_.end())
      throw CatError(ErrorCode::DanglingReference, "morphism '" + m.id + "' has unknown tgt '" + m.tgt + "'");
    cat.morphisms_.push_back({m.id, s->second, t->second});
    cat.mor_index_[m.id] = i;
  }

  cat.identity_.assign(cat.objects_.size(), kNone);
  for (const auto& [obj, mor] : identity_of) {
    Index o = cat.obj_index_.at(obj);
    Index m = cat.mor_index_.at(mor);
    if (cat.morphisms_[m].src != o || cat.morphisms_[m].tgt != o)
      throw CatError(ErrorCode::ValidationError,
                     "identity '" + mor + "' of '" + obj + "' is not an endomorphism of it");
    cat.identity_[o] = m;
  }

  cat.table_.assign(n * n, kNone);
  auto put = [&](Index g, Index f, Index gf, const char* origin) {
    if (cat.morphisms_[g].src != cat.morphisms_[f].tgt)
      throw CatError(ErrorCode::ValidationError, std::string("compose entry (") + cat.morphisms_[g].id + "," +
                                                     cat.morphisms_[f].id + ") is not composable (" + origin + ")");
    Index& slot = cat.table_[g * n + f];
    if (slot != kNone && slot != gf)
      throw CatError(ErrorCode::ValidationError, "conflicting compose entries for (" + cat.morphisms_[g].id + "," +
                                                     cat.morphisms_[f].id + ")");
    if (cat.morphisms_[gf].src != cat.morphisms_[f].src || cat.morphisms_[gf].tgt != cat.morphisms_[g].tgt)
      throw CatError(ErrorCode::ValidationError, "composite of (" + cat.morphisms_[g].id + "," + cat.morphisms_[f].id +
                                                     ") has wrong endpoints: " + cat.morphisms_[gf].id);
    slot = gf;
  };

  for (const auto& e : raw.compose) {
    auto g = cat.mor_index_.find(e.g);
    auto f = cat.mor_index_.find(e.f);
    auto gf = cat.mor_index_.find(e.gf);
    if (g == cat.mor_index_.end()) throw CatError(ErrorCode::DanglingReference, "compose entry names unknown morphism '" + e.g + "'");
    if (f == cat.mor_index_.end()) throw CatError(ErrorCode::DanglingReference, "compose entry names unknown morphism '" + e.f + "'");
    if (gf == cat.mor_index_.end()) throw CatError(ErrorCode::DanglingReference, "compose entry names unknown morphism '" + e.gf + "'");
    put(g->second, f->second, gf->second, "input");
  }

  // Identity composites are inferable; explicit contradictions surface as
  // BrokenIdentity rather than generic conflicts.
  for (Index m = 0; m < n; ++m) {
    Index ids = cat.identity_[cat.morphisms_[m].src];
    Index idt = cat.identity_[cat.morphisms_[m].tgt];
    Index& right = cat.table_[m * n + ids];
    if (right != kNone && right != m)
      throw CatError(ErrorCode::BrokenIdentity, "compose(" + cat.morphisms_[m].id + ", " + cat.morphisms_[ids].id +
                                                    ") = " + cat.morphisms_[right].id + " != " + cat.morphisms_[m].id);
    right = m;
    Index& left = cat.table_[idt * n + m];
    if (left != kNone && left != m)
      throw CatError(ErrorCode::BrokenIdentity, "compose(" + cat.morphisms_[idt].id + ", " + cat.morphisms_[m].id +
                                                    ") = " + cat.morphisms_[left].id + " != " + cat.morphisms_[m].id);
    left = m;
  }

  // Totality on composable pairs.
  for (Index g = 0; g < n; ++g)
    for (Index f = 0; f < n; ++f) {
      if (cat.morphisms_[g].src != cat.morphisms_[f].tgt) continue;
      if (cat.table_[g * n + f] == kNone)
        throw CatError(ErrorCode::MissingComposite,
                       "(" + cat.morphisms_[g].id + ", " + cat.morphisms_[f].id + ") has no composite");
    }

  // Associativity over all composable triples.
  for (Index h = 0; h < n; ++h)
    for (Index g = 0; g < n; ++g) {
      if (cat.morphisms_[h].src != cat.morphisms_[g].tgt) continue;
      Index hg = cat.table_[h * n + g];
      for (Index f = 0; f < n; ++f) {
        if (cat.morphisms_[g].src != cat.morphisms_[f].tgt) continue;
        Index gf = cat.table_[g * n + f];
        if (cat.table_[h * n + gf] != cat.table_[hg * n + f])
          throw CatError(ErrorCode::BrokenAssociativity, "h=" + cat.morphisms_[h].id + ", g=" + cat.morphisms_[g].id +
                                                             ", f=" + cat.morphisms_[f].id);
      }
    }

  cat.out_.assign(cat.objects_.size(), {});
  cat.in_.assign(cat.objects_.size(), {});
  cat.hom_.assign(cat.objects_.size() * cat.objects_.size(), {});
  for (Index m = 0; m < n; ++m) {
    cat.out_[cat.morphisms_[m].src].push_back(m);
    cat.in_[cat.morphisms_[m].tgt].push_back(m);
    cat.hom_[cat.morphisms_[m].src * cat.objects_.size() + cat.morphisms_[m].tgt].push_back(m);
    if (!cat.is_identity(m)) cat.non_identity_.push_back(m);
  }
  return cat;
}

// ---- Derived categories ------------------------------------------------

CategoryPtr opposite_category(const FiniteCategory& c, const std::string& name) {
  RawCategory raw;
  raw.name = name.empty() ? c.name() + "^op" : name;
  raw.objects = c.objects();
  for (const auto& m : c.morphisms()) raw.morphisms.push_back({m.id, c.object_id(m.tgt), c.object_id(m.src)});
  for (Index o = 0; o < c.object_count(); ++o)
    raw.identities.emplace_back(c.object_id(o), c.morphism_id(c.identity(o)));
  const std::size_t n = c.morphism_count();
  for (Index g = 0; g < n; ++g)
    for (Index f = 0; f < n; ++f) {
      Index gf = c.compose(g, f);
      if (gf == kNone) continue;
      raw.compose.push_back({c.morphism_id(f), c.morphism_id(g), c.morphism_id(gf)});
    }
  return validate_shared(raw);
}

static std::string pair_obj_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

CategoryPtr product_category(const FiniteCategory& c, const FiniteCategory& d, const std::string& name) {
  RawCategory raw;
  raw.name = name.empty() ? c.name() + "x" + d.name() : name;
  for (const auto& a : c.objects())
    for (const auto& b : d.objects()) raw.objects.push_back(pair_obj_id(a, b));

  auto mor_id = [&](Index f, Index g) -> std::string {
    if (c.is_identity(f) && d.is_identity(g))
      return "1_" + pair_obj_id(c.object_id(c.src(f)), d.object_id(d.src(g)));
    return "(" + c.morphism_id(f) + "," + d.morphism_id(g) + ")";
  };

  for (Index f = 0; f < c.morphism_count(); ++f)
    for (Index g = 0; g < d.morphism_count(); ++g) {
      raw.morphisms.push_back({mor_id(f, g), pair_obj_id(c.object_id(c.src(f)), d.object_id(d.src(g))),
                               pair_obj_id(c.object_id(c.tgt(f)), d.object_id(d.tgt(g)))});
    }
  for (Index f2 = 0; f2 < c.morphism_count(); ++f2)
    for (Index g2 = 0; g2 < d.morphism_count(); ++g2)
      for (Index f1 = 0; f1 < c.morphism_count(); ++f1) {
        Index ff = c.compose(f2, f1);
        if (ff == kNone) continue;
        for (Index g1 = 0; g1 < d.morphism_count(); ++g1) {
          Index gg = d.compose(g2, g1);
          if (gg == kNone) continue;
          raw.compose.push_back({mor_id(f2, g2), mor_id(f1, g1), mor_id(ff, gg)});
        }
      }
  return validate_shared(raw);
}

CategoryPtr slice_category(const Functor& fun, Index cod_object, const std::string& name) {
  const FiniteCategory& c = *fun.dom;
  const FiniteCategory& d = *fun.cod;
  RawCategory raw;
  raw.name = name.empty() ? fun.name + "|" + d.object_id(cod_object) : name;

  // Objects: (X, f) with f: F(X) -> d.
  struct SliceObj {
    Index x, f;
  };
  std::vector<SliceObj> objs;
  auto slice_obj_id = [&](const SliceObj& s) {
    return "(" + c.object_id(s.x) + "|" + d.morphism_id(s.f) + ")";
  };
  for (Index x = 0; x < c.object_count(); ++x)
    for (Index f : d.hom(fun.apply_obj(x), cod_object)) objs.push_back({x, f});
  for (const auto& s : objs) raw.objects.push_back(slice_obj_id(s));

  auto slice_mor_id = [&](Index u, const SliceObj& a, const SliceObj& b) -> std::string {
    if (c.is_identity(u) && a.f == b.f) return "1_" + slice_obj_id(a);
    return "sl(" + c.morphism_id(u) + "|" + d.morphism_id(a.f) + "|" + d.morphism_id(b.f) + ")";
  };

  // Morphisms (a) -> (b): u: X_a -> X_b with f_b . F(u) = f_a.
  struct SliceMor {
    Index u;
    std::size_t a, b;
  };
  std::vector<SliceMor> mors;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (Index u : c.hom(objs[a].x, objs[b].x)) {
        if (d.compose(objs[b].f, fun.apply_mor(u)) == objs[a].f) {
          mors.push_back({u, a, b});
          raw.morphisms.push_back({slice_mor_id(u, objs[a], objs[b]), slice_obj_id(objs[a]), slice_obj_id(objs[b])});
        }
      }
  for (const auto& m2 : mors)
    for (const auto& m1 : mors) {
      if (m1.b != m2.a) continue;
      Index uu = c.compose(m2.u, m1.u);
      raw.compose.push_back({slice_mor_id(m2.u, objs[m2.a], objs[m2.b]), slice_mor_id(m1.u, objs[m1.a], objs[m1.b]),
                             slice_mor_id(uu, objs[m1.a], objs[m2.b])});
    }
  return validate_shared(raw);
}

CategoryPtr fiber_category(const Functor& fun, Index cod_object, const std::string& name) {
  const FiniteCategory& c = *fun.dom;
  const FiniteCategory& d = *fun.cod;
  Index idd = d.identity(cod_object);
  RawCategory raw;
  raw.name = name.empty() ? fun.name + "^-1(" + d.object_id(cod_object) + ")" : name;
  for (Index x = 0; x < c.object_count(); ++x)
    if (fun.apply_obj(x) == cod_object) raw.objects.push_back(c.object_id(x));
  std::vector<Index> keep;
  for (Index m = 0; m < c.morphism_count(); ++m)
    if (fun.apply_mor(m) == idd && fun.apply_obj(c.src(m)) == cod_object && fun.apply_obj(c.tgt(m)) == cod_object) {
      keep.push_back(m);
      raw.morphisms.push_back({c.morphism_id(m), c.object_id(c.src(m)), c.object_id(c.tgt(m))});
    }
  for (Index o = 0; o < c.object_count(); ++o)
    if (fun.apply_obj(o) == cod_object) raw.identities.emplace_back(c.object_id(o), c.morphism_id(c.identity(o)));
  for (Index g : keep)
    for (Index f : keep) {
      Index gf = c.compose(g, f);
      if (gf == kNone) continue;
      raw.compose.push_back({c.morphism_id(g), c.morphism_id(f), c.morphism_id(gf)});
    }
  return validate_shared(raw);
}

// ---- Functors -----------------------------------------------------------

Functor make_functor(std::string name, CategoryPtr dom, CategoryPtr cod,
                     const std::vector<std::pair<std::string, std::string>>& on_objects,
                     const std::vector<std::pair<std::string, std::string>>& on_morphisms) {
  Functor f;
  f.name = std::move(name);
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.on_obj.assign(f.dom->object_count(), kNone);
  f.on_mor.assign(f.dom->morphism_count(), kNone);
  for (const auto& [a, b] : on_objects) f.on_obj[f.dom->object(a)] = f.cod->object(b);
  for (const auto& [a, b] : on_morphisms) f.on_mor[f.dom->morphism(a)] = f.cod->morphism(b);
  // Missing identity images default to the identity of the object image.
  for (Index m = 0; m < f.dom->morphism_count(); ++m) {
    if (f.on_mor[m] == kNone && f.dom->is_identity(m) && f.on_obj[f.dom->src(m)] != kNone)
      f.on_mor[m] = f.cod->identity(f.on_obj[f.dom->src(m)]);
  }
  PropertyReport rep = functor_valid_report(f);
  if (!rep.holds()) throw CatError(ErrorCode::InvalidFunctor, f.name + ": " + rep.witness);
  return f;
}

PropertyReport functor_valid_report(const Functor& f) {
  const FiniteCategory& c = *f.dom;
  const FiniteCategory& d = *f.cod;
  const std::string prop = "Valid(" + f.name + ")";
  if (f.on_obj.size() != c.object_count() || f.on_mor.size() != c.morphism_count())
    return PropertyReport::fail(prop, "object/morphism mapping has wrong arity");
  for (Index o = 0; o < c.object_count(); ++o)
    if (f.on_obj[o] == kNone) return PropertyReport::fail(prop, "object '" + c.object_id(o) + "' has no image");
  for (Index m = 0; m < c.morphism_count(); ++m) {
    if (f.on_mor[m] == kNone) return PropertyReport::fail(prop, "morphism '" + c.morphism_id(m) + "' has no image");
    if (d.src(f.on_mor[m]) != f.on_obj[c.src(m)] || d.tgt(f.on_mor[m]) != f.on_obj[c.tgt(m)])
      return PropertyReport::fail(prop, "image of '" + c.morphism_id(m) + "' has wrong endpoints");
  }
  for (Index o = 0; o < c.object_count(); ++o)
    if (f.on_mor[c.identity(o)] != d.identity(f.on_obj[o]))
      return PropertyReport::fail(prop, "identity of '" + c.object_id(o) + "' is not sent to an identity");
  for (Index g = 0; g < c.morphism_count(); ++g)
    for (Index fm = 0; fm < c.morphism_count(); ++fm) {
      Index gf = c.compose(g, fm);
      if (gf == kNone) continue;
      if (d.compose(f.on_mor[g], f.on_mor[fm]) != f.on_mor[gf])
        return PropertyReport::fail(prop, "composition not preserved on (" + c.morphism_id(g) + ", " +
                                              c.morphism_id(fm) + ")");
    }
  return PropertyReport::hold(prop);
}

Functor identity_functor(CategoryPtr c) {
  Functor f;
  f.name = "id_" + c->name();
  f.dom = c;
  f.cod = c;
  f.on_obj.resize(c->object_count());
  f.on_mor.resize(c->morphism_count());
  for (Index o = 0; o < c->object_count(); ++o) f.on_obj[o] = o;
  for (Index m = 0; m < c->morphism_count(); ++m) f.on_mor[m] = m;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (f.cod.get() != g.dom.get() && !f.cod->same_presentation(*g.dom))
    throw CatError(ErrorCode::ShapeMismatch, "functor composition: cod(" + f.name + ") != dom(" + g.name + ")");
  Functor h;
  h.name = g.name + "." + f.name;
  h.dom = f.dom;
  h.cod = g.cod;
  h.on_obj.resize(f.on_obj.size());
  h.on_mor.resize(f.on_mor.size());
  for (std::size_t o = 0; o < f.on_obj.size(); ++o) h.on_obj[o] = g.on_obj[f.on_obj[o]];
  for (std::size_t m = 0; m < f.on_mor.size(); ++m) h.on_mor[m] = g.on_mor[f.on_mor[m]];
  return h;
}

Functor constant_functor(CategoryPtr dom, CategoryPtr cod, Index cod_object) {
  Functor f;
  f.name = "const_" + cod->object_id(cod_object);
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.on_obj.assign(f.dom->object_count(), cod_object);
  f.on_mor.assign(f.dom->morphism_count(), f.cod->identity(cod_object));
  return f;
}

Functor product_projection(CategoryPtr prod, CategoryPtr c, CategoryPtr d, bool first) {
  Functor f;
  f.name = first ? "proj1" : "proj2";
  f.dom = prod;
  f.cod = first ? c : d;
  f.on_obj.assign(prod->object_count(), kNone);
  f.on_mor.assign(prod->morphism_count(), kNone);
  // Recover the factors from the "(a,b)" object ids produced by
  // product_category: a and b are existing object ids, so the split is
  // located by lookup rather than by parsing.
  std::vector<std::pair<Index, Index>> obj_factors(prod->object_count());
  for (Index o = 0; o < prod->object_count(); ++o) {
    const std::string& id = prod->object_id(o);
    if (id.size() < 3 || id.front() != '(' || id.back() != ')')
      throw CatError(ErrorCode::ShapeMismatch, "object '" + id + "' is not a product pair");
    bool found = false;
    for (std::size_t cut = 1; cut + 1 < id.size(); ++cut) {
      if (id[cut] != ',') continue;
      Index a = c->find_object(id.substr(1, cut - 1));
      Index b = d->find_object(id.substr(cut + 1, id.size() - cut - 2));
      if (a != kNone && b != kNone) {
        obj_factors[o] = {a, b};
        f.on_obj[o] = first ? a : b;
        found = true;
        break;
      }
    }
    if (!found) throw CatError(ErrorCode::ShapeMismatch, "object '" + id + "' does not split over the given factors");
  }
  for (Index m = 0; m < prod->morphism_count(); ++m) {
    const std::string& id = prod->morphism_id(m);
    Index so = prod->src(m);
    if (prod->is_identity(m)) {
      f.on_mor[m] = f.cod->identity(f.on_obj[so]);
      continue;
    }
    if (id.size() < 3 || id.front() != '(' || id.back() != ')')
      throw CatError(ErrorCode::ShapeMismatch, "morphism '" + id + "' is not a product pair");
    bool found = false;
    for (std::size_t cut = 1; cut + 1 < id.size(); ++cut) {
      if (id[cut] != ',') continue;
      Index a = c->find_morphism(id.substr(1, cut - 1));
      Index b = d->find_morphism(id.substr(cut + 1, id.size() - cut - 2));
      if (a != kNone && b != kNone && c->src(a) == obj_factors[so].first && d->src(b) == obj_factors[so].second) {
        f.on_mor[m] = first ? a : b;
        found = true;
        break;
      }
    }
    if (!found) throw CatError(ErrorCode::ShapeMismatch, "morphism '" + id + "' does not split over the given factors");
  }
  return f;
}

bool same_functor(const Functor& a, const Functor& b) {
  return a.dom->same_presentation(*b.dom) && a.cod->same_presentation(*b.cod) && a.on_obj == b.on_obj &&
         a.on_mor == b.on_mor;
}

// ---- Natural transformations -------------------------------------------

PropertyReport naturality_report(const NaturalTransformation& nt) {
  const std::string prop = "Natural(" + nt.name + ")";
  const Functor& s = nt.source;
  const Functor& t = nt.target;
  if (!s.dom->same_presentation(*t.dom) || !s.cod->same_presentation(*t.cod))
    throw CatError(ErrorCode::ShapeMismatch, nt.name + ": source and target functors are not parallel");
  const FiniteCategory& c = *s.dom;
  const FiniteCategory& d = *s.cod;
  if (nt.component.size() != c.object_count())
    throw CatError(ErrorCode::ShapeMismatch, nt.name + ": component arity mismatch");
  for (Index o = 0; o < c.object_count(); ++o) {
    Index a = nt.component[o];
    if (a == kNone || d.src(a) != s.on_obj[o] || d.tgt(a) != t.on_obj[o])
      throw CatError(ErrorCode::ShapeMismatch,
                     nt.name + ": component at '" + c.object_id(o) + "' has wrong endpoints");
  }
  for (Index m = 0; m < c.morphism_count(); ++m) {
    Index x = c.src(m), y = c.tgt(m);
    Index left = d.compose(t.on_mor[m], nt.component[x]);
    Index right = d.compose(nt.component[y], s.on_mor[m]);
    if (left != right)
      return PropertyReport::fail(prop, "naturality square fails at '" + c.morphism_id(m) + "': " +
                                            d.morphism_id(t.on_mor[m]) + " . " + d.morphism_id(nt.component[x]) +
                                            " != " + d.morphism_id(nt.component[y]) + " . " +
                                            d.morphism_id(s.on_mor[m]));
  }
  return PropertyReport::hold(prop);
}

NaturalTransformation make_transformation(
    std::string name, const Functor& source, const Functor& target,
    const std::vector<std::pair<std::string, std::string>>& components) {
  NaturalTransformation nt;
  nt.name = std::move(name);
  nt.source = source;
  nt.target = target;
  nt.component.assign(source.dom->object_count(), kNone);
  for (const auto& [obj, mor] : components)
    nt.component[source.dom->object(obj)] = source.cod->morphism(mor);
  return nt;
}

}  // namespace catlas
