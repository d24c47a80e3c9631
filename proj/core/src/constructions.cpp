#include "catlas/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "catlas/properties.hpp"

namespace catlas {

// ---- Simplicial complexes ---------------------------------------------------

SimplicialComplex validate_complex(std::string name, std::vector<std::vector<std::string>> facets) {
  SimplicialComplex k;
  k.name = std::move(name);
  std::set<std::string> verts;
  std::set<std::vector<std::string>> seen;
  for (auto& f : facets) {
    if (f.empty()) throw CatError(ErrorCode::ValidationError, "complex '" + k.name + "' has an empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    verts.insert(f.begin(), f.end());
    if (seen.insert(f).second) k.facets.push_back(f);
  }
  std::sort(k.facets.begin(), k.facets.end());
  for (const auto& a : k.facets)
    for (const auto& b : k.facets) {
      if (a == b || a.size() > b.size()) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw CatError(ErrorCode::ValidationError, "complex '" + k.name + "': facet is contained in another facet");
    }
  k.vertices.assign(verts.begin(), verts.end());
  return k;
}

std::vector<std::vector<std::vector<std::string>>> complex_faces(const SimplicialComplex& k) {
  std::set<std::vector<std::string>> all;
  for (const auto& facet : k.facets) {
    const std::size_t n = facet.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(facet[i]);
      all.insert(std::move(face));
    }
  }
  std::size_t maxdim = 0;
  for (const auto& f : all) maxdim = std::max(maxdim, f.size());
  std::vector<std::vector<std::vector<std::string>>> by_dim(maxdim);
  for (const auto& f : all) by_dim[f.size() - 1].push_back(f);
  for (auto& dim : by_dim) std::sort(dim.begin(), dim.end());
  return by_dim;
}

// ---- Posets ------------------------------------------------------------------

Poset validate_poset(std::string name, std::vector<std::string> elements,
                     std::vector<std::pair<std::string, std::string>> leq) {
  Poset p;
  p.name = std::move(name);
  p.elements = std::move(elements);
  std::sort(p.elements.begin(), p.elements.end());
  if (std::adjacent_find(p.elements.begin(), p.elements.end()) != p.elements.end())
    throw CatError(ErrorCode::ValidationError, "poset '" + p.name + "' has duplicate elements");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.elements.size(); ++i) index[p.elements[i]] = i;

  const std::size_t n = p.elements.size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
  for (const auto& [a, b] : leq) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw CatError(ErrorCode::DanglingReference, "poset '" + p.name + "' relation names unknown element");
    rel[ia->second * n + ib->second] = true;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k * n + j]) rel[i * n + j] = true;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw CatError(ErrorCode::ValidationError, "poset '" + p.name + "' violates antisymmetry on ('" +
                                                       p.elements[i] + "', '" + p.elements[j] + "')");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i * n + j]) p.leq.emplace_back(p.elements[i], p.elements[j]);
  return p;
}

CategoryPtr poset_category(const Poset& p) {
  RawCategory raw;
  raw.name = p.name;
  raw.objects = p.elements;
  std::set<std::pair<std::string, std::string>> rel(p.leq.begin(), p.leq.end());
  auto mor_id = [](const std::string& a, const std::string& b) { return "le(" + a + "," + b + ")"; };
  for (const auto& [a, b] : p.leq)
    if (a != b) raw.morphisms.push_back({mor_id(a, b), a, b});
  for (const auto& [a, b] : p.leq) {
    if (a == b) continue;
    for (const auto& c : p.elements) {
      if (c == b || !rel.count({b, c})) continue;
      raw.compose.push_back({mor_id(b, c), mor_id(a, b), mor_id(a, c)});
    }
  }
  return validate_shared(raw);
}

FacePosetResult face_poset(const SimplicialComplex& k) {
  auto by_dim = complex_faces(k);
  auto face_id = [](const std::vector<std::string>& face) {
    std::string s;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i) s += ".";
      s += face[i];
    }
    return s;
  };
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> faces_flat;
  for (const auto& dim : by_dim)
    for (const auto& f : dim) {
      elements.push_back(face_id(f));
      faces_flat.push_back(f);
    }
  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& a : faces_flat)
    for (const auto& b : faces_flat)
      if (a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        leq.emplace_back(face_id(a), face_id(b));
  FacePosetResult out;
  out.poset = validate_poset(k.name + ".faces", std::move(elements), std::move(leq));
  out.category = poset_category(out.poset);
  return out;
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k) {
  auto by_dim = complex_faces(k);
  auto face_id = [](const std::vector<std::string>& face) {
    std::string s;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i) s += ".";
      s += face[i];
    }
    return s;
  };
  std::set<std::vector<std::string>> facet_set(k.facets.begin(), k.facets.end());
  std::vector<std::vector<std::string>> chains;
  // maximal chains = complete flags ending at a facet
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> stack;  // (chain ids, top face)
  for (const auto& dim : by_dim)
    if (dim == by_dim.front())
      for (const auto& v : by_dim[0]) stack.push_back({{face_id(v)}, v});
  while (!stack.empty()) {
    auto [chain, top] = stack.back();
    stack.pop_back();
    if (facet_set.count(top)) {
      chains.push_back(chain);
      continue;
    }
    // extend by one vertex inside some face of one higher dimension
    if (top.size() > by_dim.size()) continue;
    for (const auto& next : by_dim[top.size()]) {  // faces of size top.size()+1
      if (!std::includes(next.begin(), next.end(), top.begin(), top.end())) continue;
      auto extended = chain;
      extended.push_back(face_id(next));
      stack.push_back({std::move(extended), next});
    }
  }
  return validate_complex(k.name + ".sd", std::move(chains));
}

HomologyResult simplicial_homology(const SimplicialComplex& k, int d, Budget& budget) {
  auto by_dim = complex_faces(k);
  const int top = std::min<int>(d + 1, static_cast<int>(by_dim.size()) - 1);
  std::vector<std::size_t> ranks;
  std::vector<IntMat> boundaries;
  std::map<std::vector<std::string>, std::size_t> index_prev;
  for (int n = 0; n <= top; ++n) {
    const auto& faces = by_dim[static_cast<std::size_t>(n)];
    if (!budget.tick(faces.size())) throw CatError(ErrorCode::ResourceLimit, "simplicial chain budget exhausted");
    ranks.push_back(faces.size());
    if (n == 0) {
      boundaries.emplace_back(0, faces.size());
    } else {
      IntMat b(ranks[static_cast<std::size_t>(n - 1)], faces.size());
      for (std::size_t j = 0; j < faces.size(); ++j) {
        int sign = 1;
        for (std::size_t drop = 0; drop < faces[j].size(); ++drop, sign = -sign) {
          std::vector<std::string> sub;
          for (std::size_t i = 0; i < faces[j].size(); ++i)
            if (i != drop) sub.push_back(faces[j][i]);
          b.at(index_prev.at(sub), j) += sign;
        }
      }
      boundaries.push_back(std::move(b));
    }
    index_prev.clear();
    for (std::size_t i = 0; i < faces.size(); ++i) index_prev[faces[i]] = i;
  }
  ChainComplex cc = ChainComplex::from_boundaries(std::move(ranks), std::move(boundaries));
  return homology_of_complex(cc, d);
}

// ---- Karoubi envelope --------------------------------------------------------

KaroubiResult karoubi_envelope(CategoryPtr cp) {
  const FiniteCategory& c = *cp;
  struct EnvObj {
    Index obj, idem;
    std::string id;
  };
  std::vector<EnvObj> objs;
  for (Index o = 0; o < c.object_count(); ++o)
    for (Index e : c.hom(o, o))
      if (c.compose(e, e) == e) {
        std::string id = c.is_identity(e) ? c.object_id(o) : "spl(" + c.object_id(o) + "|" + c.morphism_id(e) + ")";
        objs.push_back({o, e, std::move(id)});
      }

  RawCategory raw;
  raw.name = c.name() + ".kar";
  for (const auto& o : objs) raw.objects.push_back(o.id);

  struct EnvMor {
    Index m;
    std::size_t src, tgt;  // indices into objs
    std::string id;
  };
  auto env_mor_id = [&](Index m, const EnvObj& a, const EnvObj& b) -> std::string {
    if (c.is_identity(a.idem) && c.is_identity(b.idem)) return c.morphism_id(m);
    if (a.obj == b.obj && a.idem == b.idem && m == a.idem) return "1_" + a.id;
    return "spl(" + c.morphism_id(m) + "|" + c.morphism_id(a.idem) + "|" + c.morphism_id(b.idem) + ")";
  };
  std::vector<EnvMor> mors;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (Index m : c.hom(objs[a].obj, objs[b].obj)) {
        if (c.compose(objs[b].idem, c.compose(m, objs[a].idem)) != m) continue;
        mors.push_back({m, a, b, env_mor_id(m, objs[a], objs[b])});
        raw.morphisms.push_back({mors.back().id, objs[a].id, objs[b].id});
      }
  for (const auto& o : objs) {
    // identity of (X, e) is e itself
    for (const auto& em : mors)
      if (em.src == em.tgt && objs[em.src].obj == o.obj && objs[em.src].idem == o.idem && em.m == o.idem) {
        raw.identities.emplace_back(o.id, em.id);
        break;
      }
  }
  for (const auto& m2 : mors)
    for (const auto& m1 : mors) {
      if (m1.tgt != m2.src) continue;
      Index mm = c.compose(m2.m, m1.m);
      raw.compose.push_back({m2.id, m1.id, env_mor_id(mm, objs[m1.src], objs[m2.tgt])});
    }

  KaroubiResult out;
  out.envelope = validate_shared(raw);
  std::vector<std::pair<std::string, std::string>> on_obj, on_mor;
  for (Index o = 0; o < c.object_count(); ++o) on_obj.emplace_back(c.object_id(o), c.object_id(o));
  for (Index m = 0; m < c.morphism_count(); ++m) on_mor.emplace_back(c.morphism_id(m), c.morphism_id(m));
  out.inclusion = make_functor("kar_incl", cp, out.envelope, on_obj, on_mor);
  return out;
}

// ---- Formal amalgamation -------------------------------------------------------

namespace {

struct TaggedMor {
  bool right;  // false: into B, true: into C
  Index m;
  bool operator<(const TaggedMor& o) const { return right != o.right ? right < o.right : m < o.m; }
  bool operator==(const TaggedMor& o) const = default;
};

}  // namespace

AmalgamationResult adjoin_amalgamation_step(CategoryPtr cp, const std::optional<SpanSet>& spans, Budget& budget) {
  const FiniteCategory& c = *cp;
  SpanSet chosen;
  if (spans) {
    for (const Span& s : *spans) {
      if (s.apex >= c.object_count() || s.left >= c.morphism_count() || s.right >= c.morphism_count() ||
          c.src(s.left) != s.apex || c.src(s.right) != s.apex)
        throw CatError(ErrorCode::SpanNotInCategory, "span legs do not start at the apex");
      chosen.push_back(s);
    }
  } else {
    // All policy: distinct-leg spans that currently fail AP, one amalgam
    // per unordered leg pair.
    for (Index a = 0; a < c.object_count(); ++a) {
      const auto& legs = c.mors_from(a);
      for (std::size_t i = 0; i < legs.size(); ++i)
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
          if (!budget.tick(legs.size())) throw CatError(ErrorCode::ResourceLimit, "span enumeration budget exhausted");
          if (!span_has_amalgam(c, legs[i], legs[j])) chosen.push_back({a, legs[i], legs[j]});
        }
    }
  }

  RawCategory raw = cp->to_raw();
  raw.name = c.name() + ".am";
  AmalgamationResult out;
  out.adjoined = chosen;

  for (const Span& s : chosen) {
    std::string amal_id =
        "amal(" + c.object_id(s.apex) + "|" + c.morphism_id(s.left) + "|" + c.morphism_id(s.right) + ")";
    raw.objects.push_back(amal_id);
    Index bobj = c.tgt(s.left), cobj = c.tgt(s.right);

    // Per source object X: pushout of hom-sets via union-find over tagged
    // morphisms, unions along precompositions with the span legs.
    std::map<std::pair<std::string, std::string>, std::string> class_id_of;  // (side, mor) -> class id
    for (Index x = 0; x < c.object_count(); ++x) {
      std::vector<TaggedMor> items;
      for (Index m : c.hom(x, bobj)) items.push_back({false, m});
      for (Index m : c.hom(x, cobj)) items.push_back({true, m});
      if (items.empty()) continue;
      std::map<TaggedMor, std::size_t> pos;
      for (std::size_t i = 0; i < items.size(); ++i) pos[items[i]] = i;
      std::vector<std::size_t> parent(items.size());
      for (std::size_t i = 0; i < items.size(); ++i) parent[i] = i;
      auto find = [&](std::size_t i) {
        while (parent[i] != i) {
          parent[i] = parent[parent[i]];
          i = parent[i];
        }
        return i;
      };
      auto unite = [&](std::size_t i, std::size_t j) {
        i = find(i);
        j = find(j);
        if (i != j) parent[std::max(i, j)] = std::min(i, j);
      };
      for (Index u : c.hom(x, s.apex)) {
        if (!budget.tick()) throw CatError(ErrorCode::ResourceLimit, "hom pushout budget exhausted");
        unite(pos.at({false, c.compose(s.left, u)}), pos.at({true, c.compose(s.right, u)}));
      }
      // class representative: least tagged member
      std::map<std::size_t, TaggedMor> rep;
      for (std::size_t i = 0; i < items.size(); ++i) {
        std::size_t r = find(i);
        auto it = rep.find(r);
        if (it == rep.end() || items[i] < it->second) rep[r] = items[i];
      }
      std::map<std::size_t, std::string> class_name;
      for (const auto& [r, t] : rep)
        class_name[r] = "am(" + amal_id + "|" + (t.right ? "c" : "b") + "|" + c.morphism_id(t.m) + ")";
      for (std::size_t i = 0; i < items.size(); ++i)
        class_id_of[{items[i].right ? "c" : "b", c.morphism_id(items[i].m)}] = class_name[find(i)];
      std::set<std::string> emitted;
      for (const auto& [r, name] : class_name)
        if (emitted.insert(name).second) raw.morphisms.push_back({name, c.object_id(x), amal_id});
    }

    // compositions: class(side, m) . h = class(side, m.h)
    for (const auto& [key, cls] : class_id_of) {
      Index m = c.morphism(key.second);
      for (Index h : c.mors_into(c.src(m))) {
        Index mh = c.compose(m, h);
        raw.compose.push_back({cls, c.morphism_id(h), class_id_of.at({key.first, c.morphism_id(mh)})});
      }
    }
  }

  out.category = validate_shared(raw);
  std::vector<std::pair<std::string, std::string>> on_obj, on_mor;
  for (Index o = 0; o < c.object_count(); ++o) on_obj.emplace_back(c.object_id(o), c.object_id(o));
  for (Index m = 0; m < c.morphism_count(); ++m) on_mor.emplace_back(c.morphism_id(m), c.morphism_id(m));
  out.inclusion = make_functor("am_incl", cp, out.category, on_obj, on_mor);
  return out;
}

// ---- Iterated construction ------------------------------------------------------

namespace {

PropertyReport previous_spans_ap(const FiniteCategory& prev, const Functor& incl, const FiniteCategory& cur,
                                 Budget& budget) {
  const std::string prop = "AP(previous-stage spans)";
  for (Index a = 0; a < prev.object_count(); ++a) {
    const auto& legs = prev.mors_from(a);
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i; j < legs.size(); ++j) {
        if (!budget.tick()) return PropertyReport::unknown(prop, "span check budget exhausted");
        if (!span_has_amalgam(cur, incl.apply_mor(legs[i]), incl.apply_mor(legs[j])))
          return PropertyReport::fail(prop, "span (" + prev.morphism_id(legs[i]) + ", " + prev.morphism_id(legs[j]) +
                                                ") at '" + prev.object_id(a) + "' has no amalgam in the next stage");
      }
  }
  return PropertyReport::hold(prop);
}

}  // namespace

IterationResult iterate_construction(CategoryPtr c, int rounds, const std::optional<SpanSet>& stage0_spans,
                                     int homology_dim, Budget& budget) {
  if (rounds < 0) throw CatError(ErrorCode::ValidationError, "rounds must be >= 0");
  IterationResult out;

  auto report_stage = [&](std::string name, CategoryPtr cat, std::optional<Functor> incl,
                          std::optional<PropertyReport> ap) {
    StageReport sr;
    sr.stage = std::move(name);
    sr.category = cat;
    sr.inclusion = std::move(incl);
    sr.previous_spans_ap = std::move(ap);
    sr.all_mono = check_category_property(*cat, CategoryProperty::AllMono, budget);
    if (homology_dim >= 0) sr.homology = nerve_homology(*cat, homology_dim, budget);
    out.stages.push_back(std::move(sr));
  };

  report_stage("D0", c, std::nullopt, std::nullopt);
  CategoryPtr cur = c;
  for (int r = 0; r < rounds; ++r) {
    KaroubiResult kar = karoubi_envelope(cur);
    report_stage("C" + std::to_string(r), kar.envelope, kar.inclusion, std::nullopt);
    CategoryPtr mid = kar.envelope;

    std::optional<SpanSet> spans;
    if (r == 0 && stage0_spans) {
      // user-selected spans live in the input category; transport them
      SpanSet mapped;
      for (const Span& s : *stage0_spans)
        mapped.push_back({kar.inclusion.apply_obj(s.apex), kar.inclusion.apply_mor(s.left),
                          kar.inclusion.apply_mor(s.right)});
      spans = std::move(mapped);
    }
    AmalgamationResult am = adjoin_amalgamation_step(mid, spans, budget);
    PropertyReport ap = previous_spans_ap(*mid, am.inclusion, *am.category, budget);
    report_stage("D" + std::to_string(r + 1), am.category, am.inclusion, ap);
    cur = am.category;
  }
  return out;
}

}  // namespace catlas
