#include "catlas/workspace.hpp"

#include <fstream>
#include <sstream>

namespace catlas {
namespace io {

const Workspace::CategoryEntry& Workspace::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) throw CatError(ErrorCode::UnresolvedReference, "no category named '" + name + "'");
  return it->second;
}

const Workspace::ComplexEntry& Workspace::complex(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) throw CatError(ErrorCode::UnresolvedReference, "no complex named '" + name + "'");
  return it->second;
}

const Workspace::FunctorEntry& Workspace::functor(const std::string& name) const {
  auto it = functors.find(name);
  if (it == functors.end()) throw CatError(ErrorCode::UnresolvedReference, "no functor named '" + name + "'");
  return it->second;
}

const Workspace::TransformationEntry& Workspace::transformation(const std::string& name) const {
  auto it = transformations.find(name);
  if (it == transformations.end())
    throw CatError(ErrorCode::UnresolvedReference, "no transformation named '" + name + "'");
  return it->second;
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_pairs(const Json& arr, const char* what) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!arr.is_array()) throw CatError(ErrorCode::SyntaxError, std::string(what) + " must be an array of pairs");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw CatError(ErrorCode::SyntaxError, std::string(what) + " entries must be [string, string]");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

std::string require_name(const Json& entry, const char* kind) {
  if (!entry.contains("name") || !entry["name"].is_string())
    throw CatError(ErrorCode::SyntaxError, std::string(kind) + " entry is missing a string \"name\"");
  return entry["name"].get<std::string>();
}

}  // namespace

void parse_workspace_json(Workspace& ws, const Json& doc, const std::string& file) {
  if (!doc.is_object()) throw CatError(ErrorCode::SyntaxError, file + ": top level must be an object");

  for (const auto& entry : doc.value("categories", Json::array())) {
    std::string name = require_name(entry, "category");
    if (ws.categories.count(name))
      throw CatError(ErrorCode::ValidationError, "duplicate category name '" + name + "'");
    Workspace::CategoryEntry ce;
    ce.name = name;
    ce.file = file;
    if (entry.contains("poset")) {
      const Json& p = entry["poset"];
      std::vector<std::string> elements;
      for (const auto& e : p.value("elements", Json::array())) elements.push_back(e.get<std::string>());
      std::vector<std::pair<std::string, std::string>> leq = parse_pairs(p.value("leq", Json::array()), "leq");
      Poset poset = validate_poset(name, std::move(elements), std::move(leq));
      ce.category = poset_category(poset);
      ce.poset = std::move(poset);
    } else {
      RawCategory raw;
      raw.name = name;
      for (const auto& o : entry.value("objects", Json::array())) raw.objects.push_back(o.get<std::string>());
      for (const auto& m : entry.value("morphisms", Json::array())) {
        if (!m.contains("id") || !m.contains("src") || !m.contains("tgt"))
          throw CatError(ErrorCode::SyntaxError, "morphism entries need id/src/tgt");
        raw.morphisms.push_back(
            {m["id"].get<std::string>(), m["src"].get<std::string>(), m["tgt"].get<std::string>()});
      }
      for (const auto& t : entry.value("compose", Json::array())) {
        if (!t.is_array() || t.size() != 3)
          throw CatError(ErrorCode::SyntaxError, "compose entries must be [g, f, gf]");
        raw.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
      }
      ce.category = validate_shared(raw);
    }
    ws.categories.emplace(name, std::move(ce));
  }

  for (const auto& entry : doc.value("complexes", Json::array())) {
    std::string name = require_name(entry, "complex");
    if (ws.complexes.count(name)) throw CatError(ErrorCode::ValidationError, "duplicate complex name '" + name + "'");
    if (!entry.contains("complex") || !entry["complex"].contains("facets"))
      throw CatError(ErrorCode::SyntaxError, "complex entry needs complex.facets");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : entry["complex"]["facets"]) {
      std::vector<std::string> facet;
      for (const auto& v : f) facet.push_back(v.get<std::string>());
      facets.push_back(std::move(facet));
    }
    ws.complexes.emplace(name, Workspace::ComplexEntry{validate_complex(name, std::move(facets)), file});
  }

  for (const auto& entry : doc.value("functors", Json::array())) {
    std::string name = require_name(entry, "functor");
    if (ws.functors.count(name)) throw CatError(ErrorCode::ValidationError, "duplicate functor name '" + name + "'");
    std::string dom = entry.value("dom", "");
    std::string cod = entry.value("cod", "");
    Workspace::FunctorEntry fe;
    fe.file = file;
    fe.on_objects = parse_pairs(entry.value("on_objects", Json::array()), "on_objects");
    fe.on_morphisms = parse_pairs(entry.value("on_morphisms", Json::array()), "on_morphisms");
    fe.functor =
        make_functor(name, ws.category(dom).category, ws.category(cod).category, fe.on_objects, fe.on_morphisms);
    ws.functors.emplace(name, std::move(fe));
  }

  for (const auto& entry : doc.value("transformations", Json::array())) {
    std::string name = require_name(entry, "transformation");
    if (ws.transformations.count(name))
      throw CatError(ErrorCode::ValidationError, "duplicate transformation name '" + name + "'");
    Workspace::TransformationEntry te;
    te.file = file;
    te.source_functor = entry.value("source", "");
    te.target_functor = entry.value("target", "");
    te.components = parse_pairs(entry.value("components", Json::array()), "components");
    te.transformation = make_transformation(name, ws.functor(te.source_functor).functor,
                                            ws.functor(te.target_functor).functor, te.components);
    PropertyReport nat = naturality_report(te.transformation);
    if (!nat.holds())
      throw CatError(ErrorCode::ValidationError, "transformation '" + name + "' is not natural: " + nat.witness);
    ws.transformations.emplace(name, std::move(te));
  }
}

Workspace parse_workspace(const std::vector<std::string>& files) {
  Workspace ws;
  for (const std::string& file : files) {
    std::ifstream in(file);
    if (!in) throw CatError(ErrorCode::SyntaxError, "cannot open workspace file '" + file + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw CatError(ErrorCode::SyntaxError, file + ": " + e.what());
    }
    parse_workspace_json(ws, doc, file);
  }
  return ws;
}

Json category_to_json(const FiniteCategory& c) {
  Json entry;
  entry["name"] = c.name();
  entry["objects"] = c.objects();
  Json mors = Json::array();
  for (const auto& m : c.morphisms()) {
    Json jm;
    jm["id"] = m.id;
    jm["src"] = c.object_id(m.src);
    jm["tgt"] = c.object_id(m.tgt);
    mors.push_back(std::move(jm));
  }
  entry["morphisms"] = std::move(mors);
  Json comp = Json::array();
  RawCategory raw = c.to_raw();
  for (const auto& t : raw.compose) comp.push_back(Json::array({t.g, t.f, t.gf}));
  entry["compose"] = std::move(comp);
  return entry;
}

Json serialize_workspace(const Workspace& ws) {
  Json doc;
  Json cats = Json::array();
  for (const auto& [name, ce] : ws.categories) {
    if (ce.poset) {
      Json entry;
      entry["name"] = name;
      Json p;
      p["elements"] = ce.poset->elements;
      Json leq = Json::array();
      for (const auto& [a, b] : ce.poset->leq) leq.push_back(Json::array({a, b}));
      p["leq"] = std::move(leq);
      entry["poset"] = std::move(p);
      cats.push_back(std::move(entry));
    } else {
      cats.push_back(category_to_json(*ce.category));
    }
  }
  doc["categories"] = std::move(cats);

  Json comps = Json::array();
  for (const auto& [name, ke] : ws.complexes) {
    Json entry;
    entry["name"] = name;
    Json facets = Json::array();
    for (const auto& f : ke.complex.facets) facets.push_back(f);
    entry["complex"] = Json{{"facets", std::move(facets)}};
    comps.push_back(std::move(entry));
  }
  doc["complexes"] = std::move(comps);

  Json funs = Json::array();
  for (const auto& [name, fe] : ws.functors) {
    Json entry;
    entry["name"] = name;
    entry["dom"] = fe.functor.dom->name();
    entry["cod"] = fe.functor.cod->name();
    Json oo = Json::array(), om = Json::array();
    for (Index o = 0; o < fe.functor.dom->object_count(); ++o)
      oo.push_back(Json::array(
          {fe.functor.dom->object_id(o), fe.functor.cod->object_id(fe.functor.apply_obj(o))}));
    for (Index m = 0; m < fe.functor.dom->morphism_count(); ++m)
      om.push_back(Json::array(
          {fe.functor.dom->morphism_id(m), fe.functor.cod->morphism_id(fe.functor.apply_mor(m))}));
    entry["on_objects"] = std::move(oo);
    entry["on_morphisms"] = std::move(om);
    funs.push_back(std::move(entry));
  }
  doc["functors"] = std::move(funs);

  Json trans = Json::array();
  for (const auto& [name, te] : ws.transformations) {
    Json entry;
    entry["name"] = name;
    entry["source"] = te.source_functor;
    entry["target"] = te.target_functor;
    Json comps_arr = Json::array();
    const auto& nt = te.transformation;
    for (Index o = 0; o < nt.source.dom->object_count(); ++o)
      comps_arr.push_back(Json::array(
          {nt.source.dom->object_id(o), nt.source.cod->morphism_id(nt.component[o])}));
    entry["components"] = std::move(comps_arr);
    trans.push_back(std::move(entry));
  }
  doc["transformations"] = std::move(trans);
  return doc;
}

}  // namespace io
}  // namespace catlas
