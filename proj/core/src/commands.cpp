#include "catlas/commands.hpp"

#include <algorithm>
#include <sstream>

#include "catlas/builders.hpp"
#include "catlas/certify.hpp"
#include "catlas/lascar.hpp"
#include "catlas/nerve.hpp"
#include "catlas/presentation.hpp"
#include "catlas/properties.hpp"

namespace catlas {
namespace io {

namespace {

Json verdict_json(const PropertyReport& rep) {
  Json j;
  j["property"] = rep.property;
  j["verdict"] = verdict_name(rep.verdict);
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  if (!rep.certificate.empty()) j["certificate"] = rep.certificate;
  return j;
}

Json group_json(const HomologyGroup& g) {
  Json j;
  j["rank"] = g.betti;
  Json torsion = Json::array();
  for (const BigInt& t : g.torsion) torsion.push_back(t.str());
  j["torsion"] = std::move(torsion);
  j["pretty"] = g.to_string();
  return j;
}

Json homology_json(const HomologyResult& h) {
  Json j;
  j["max_degree"] = h.max_degree;
  Json groups = Json::array();
  for (int n = 0; n <= h.max_degree; ++n) {
    Json g = group_json(h.at(n));
    g.insert(g.begin(), {"degree", n});
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  j["pretty"] = h.to_string();
  return j;
}

Json presentation_json(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (const Word& r : p.relators) rels.push_back(word_to_string(p, r));
  j["relators"] = std::move(rels);
  return j;
}

Json table_json(const FiniteGroupTable& t) {
  Json j;
  j["order"] = t.order();
  j["abelianization"] = group_json(abelian_invariants(t));
  if (t.order() <= 24) j["elements"] = t.elements;
  return j;
}

int verdict_exit(const PropertyReport& rep) {
  switch (rep.verdict) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return 1;
    case Verdict::Unknown: return 3;
  }
  return 3;
}

QuillenSide parse_side(const std::string& side) {
  if (side == "slice") return QuillenSide::Slice;
  if (side == "fiber") return QuillenSide::FiberOpfibration;
  if (side == "fiber-dual") return QuillenSide::FiberFibration;
  throw CatError(ErrorCode::ValidationError, "unknown --side '" + side + "' (slice|fiber|fiber-dual)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  return out;
}

Span parse_span(const FiniteCategory& c, const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 3)
    throw CatError(ErrorCode::ValidationError, "--span expects 'apex,leftLeg,rightLeg', got '" + text + "'");
  Span s{c.object(parts[0]), c.morphism(parts[1]), c.morphism(parts[2])};
  if (c.src(s.left) != s.apex || c.src(s.right) != s.apex)
    throw CatError(ErrorCode::SpanNotInCategory, "span legs of '" + text + "' do not start at the apex");
  return s;
}

}  // namespace

std::vector<Index> parse_subcategory_selector(const FiniteCategory& c, const std::string& selector) {
  std::vector<Index> out;
  if (selector.empty() || selector == "none") return out;
  auto le = selector.find("<=");
  if (le != std::string::npos) {
    std::string prefix = selector.substr(0, le);
    long bound = std::stol(selector.substr(le + 2));
    for (Index o = 0; o < c.object_count(); ++o) {
      const std::string& id = c.object_id(o);
      if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) continue;
      std::string tail = id.substr(prefix.size());
      if (!std::all_of(tail.begin(), tail.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) continue;
      if (std::stol(tail) <= bound) out.push_back(o);
    }
    return out;
  }
  for (const std::string& id : split_commas(selector)) out.push_back(c.object(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Report cmd_validate(const Workspace& ws, const CommandOptions& opt) {
  // Loading already validated everything; report what the workspace holds.
  Report rep;
  Json cats = Json::array();
  for (const auto& [name, ce] : ws.categories) {
    Json j;
    j["name"] = name;
    j["objects"] = ce.category->object_count();
    j["morphisms"] = ce.category->morphism_count();
    j["verdict"] = "Holds";
    if (ce.poset) j["source"] = "poset";
    cats.push_back(std::move(j));
  }
  rep.data["categories"] = std::move(cats);
  Json comps = Json::array();
  for (const auto& [name, ke] : ws.complexes) {
    Json j;
    j["name"] = name;
    j["vertices"] = ke.complex.vertices.size();
    j["facets"] = ke.complex.facets.size();
    j["verdict"] = "Holds";
    comps.push_back(std::move(j));
  }
  rep.data["complexes"] = std::move(comps);
  rep.data["functors"] = ws.functors.size();
  rep.data["transformations"] = ws.transformations.size();
  (void)opt;
  return rep;
}

Report cmd_props(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const FiniteCategory& c = *ws.category(opt.category).category;
  std::vector<CategoryProperty> todo;
  if (opt.props.empty() || (opt.props.size() == 1 && opt.props[0] == "all")) {
    todo = {CategoryProperty::AllMono,  CategoryProperty::Initial,  CategoryProperty::Terminal,
            CategoryProperty::Filtered, CategoryProperty::JEP,      CategoryProperty::AP,
            CategoryProperty::BinaryCoproducts, CategoryProperty::Pushouts, CategoryProperty::Pullbacks,
            CategoryProperty::RightFractions};
  } else {
    for (const std::string& p : opt.props) todo.push_back(category_property_from_name(p));
  }
  Report rep;
  rep.data["category"] = opt.category;
  Json list = Json::array();
  int exit_code = 0;
  for (CategoryProperty p : todo) {
    PropertyReport r = check_category_property(c, p, budget);
    if (r.verdict == Verdict::Fails) exit_code = std::max(exit_code, 1);
    if (r.verdict == Verdict::Unknown) exit_code = std::max(exit_code, 3);
    list.push_back(verdict_json(r));
  }
  rep.data["properties"] = std::move(list);
  rep.exit_code = exit_code;
  return rep;
}

Report cmd_pi1(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const FiniteCategory& c = *ws.category(opt.category).category;
  if (opt.basepoint.empty()) throw CatError(ErrorCode::ValidationError, "pi1 requires --basepoint");
  Index base = c.object(opt.basepoint);
  Pi1Presentation pi1 = pi1_presentation(c, base);

  Report rep;
  rep.data["category"] = opt.category;
  rep.data["basepoint"] = opt.basepoint;
  Json comp = Json::array();
  for (Index o : pi1.component_objects) comp.push_back(c.object_id(o));
  rep.data["component"] = std::move(comp);
  rep.data["component_restricted"] = pi1.component_objects.size() != c.object_count();
  rep.data["generators"] = pi1.presentation.generators.size();
  rep.data["relators"] = pi1.presentation.relators.size();

  TietzeResult simp = tietze_simplify(pi1.presentation, budget);
  rep.data["simplified"] = presentation_json(simp.presentation);
  rep.data["simplification_budget_exhausted"] = simp.budget_exhausted;
  rep.data["abelianization"] = group_json(abelianization(pi1.presentation));

  if (opt.identify > 0) {
    CosetEnumeration en = coset_enumeration(simp.presentation, opt.identify);
    rep.data["identify"]["max_cosets"] = opt.identify;
    if (en.completed) {
      rep.data["identify"]["order"] = en.table.order();
      rep.data["identify"]["group"] = table_json(en.table);
    } else {
      rep.data["identify"]["order"] = "ResourceLimit";
      rep.exit_code = 3;
    }
    rep.data["identify"]["cosets_defined"] = en.cosets_defined;
  }
  return rep;
}

Report cmd_homology(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  Report rep;
  if (!opt.category.empty()) {
    const FiniteCategory& c = *ws.category(opt.category).category;
    rep.data["category"] = opt.category;
    rep.data["homology"] = homology_json(nerve_homology(c, opt.max_dim, budget));
  } else if (!opt.complex_name.empty()) {
    const SimplicialComplex& k = ws.complex(opt.complex_name).complex;
    rep.data["complex"] = opt.complex_name;
    rep.data["homology"] = homology_json(simplicial_homology(k, opt.max_dim, budget));
  } else {
    throw CatError(ErrorCode::ValidationError, "homology requires --category or --complex");
  }
  return rep;
}

Report cmd_lascar(const Workspace& ws, const CommandOptions& opt) {
  const FiniteCategory& c = *ws.category(opt.category).category;
  if (opt.at.empty()) throw CatError(ErrorCode::ValidationError, "lascar requires --at <object>");
  Index u = c.object(opt.at);
  std::vector<Index> c0 = parse_subcategory_selector(c, opt.sub);

  LascarResult res = lascar_group(c, c0, u, opt.normal_closure);
  Report rep;
  rep.data["category"] = opt.category;
  rep.data["at"] = opt.at;
  Json c0j = Json::array();
  for (Index o : c0) c0j.push_back(c.object_id(o));
  rep.data["c0"] = std::move(c0j);
  rep.data["aut"] = table_json(res.aut.table);
  rep.data["lst"]["generator_count"] = res.lst_generators.size();
  Json wits = Json::array();
  for (std::size_t i = 0; i < res.lst_generators.size() && i < 8; ++i) {
    const auto& g = res.lst_generators[i];
    Json w;
    w["alpha"] = res.aut.table.elements[static_cast<std::size_t>(g.element)];
    w["fixes"] = c.morphism_id(g.witness_mor);
    w["from"] = c.object_id(g.witness_object);
    wits.push_back(std::move(w));
  }
  rep.data["lst"]["witnesses"] = std::move(wits);
  rep.data["lst"]["order"] = res.lst.size();
  rep.data["lst"]["normality_verified"] = res.normality_verified;
  if (res.normal_closure_taken) rep.data["lst"]["normal_closure_taken"] = true;
  rep.data["gal"] = table_json(res.quotient->table);
  return rep;
}

Report cmd_main_theorem(const Workspace& ws, const CommandOptions& opt) {
  const FiniteCategory& c = *ws.category(opt.category).category;
  if (opt.at.empty()) throw CatError(ErrorCode::ValidationError, "main-theorem requires --at <object>");
  Index u = c.object(opt.at);
  std::vector<Index> c0 = parse_subcategory_selector(c, opt.sub);

  MainTheoremReport res = verify_main_theorem(c, c0, u, opt.max_cosets);
  Report rep;
  rep.data["category"] = opt.category;
  rep.data["at"] = opt.at;
  rep.data["hypotheses"]["universal"] = verdict_json(res.hypotheses.universal);
  rep.data["hypotheses"]["strongly_homogeneous"] = verdict_json(res.hypotheses.strongly_homogeneous);
  if (res.gal_order) rep.data["gal_order"] = *res.gal_order;
  if (res.pi1_order) rep.data["pi1_order"] = *res.pi1_order;
  if (res.phi) {
    rep.data["phi"]["well_defined"] = res.phi->well_defined;
    rep.data["phi"]["well_defined_evidence"] = res.phi->well_defined_evidence;
    rep.data["phi"]["homomorphism"] = res.phi->homomorphism;
    rep.data["phi"]["bijective"] = res.phi->bijective;
  }
  rep.data["verdict"] = verdict_json(res.verdict);
  rep.exit_code = verdict_exit(res.verdict);
  return rep;
}

Report cmd_quillen_a(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const Functor& f = ws.functor(opt.functor_name).functor;
  QuillenReport res = quillen_a_certify(f, parse_side(opt.side), opt.max_dim, budget);
  Report rep;
  rep.data["functor"] = opt.functor_name;
  rep.data["side"] = opt.side;
  rep.data["verdict"] = verdict_json(res.verdict);
  rep.data["per_object"] = res.per_object;
  if (res.homology_checked) {
    rep.data["homology_agrees"] = res.homology_agrees;
    rep.data["dom_homology"] = homology_json(res.dom_homology);
    rep.data["cod_homology"] = homology_json(res.cod_homology);
  }
  rep.exit_code = verdict_exit(res.verdict);
  return rep;
}

Report cmd_equiv(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const Functor& f = ws.functor(opt.functor_name).functor;
  if (opt.functor_back.empty()) throw CatError(ErrorCode::ValidationError, "equiv requires --back <functor>");
  const Functor& g = ws.functor(opt.functor_back).functor;
  std::vector<NaturalTransformation> evidence;
  for (const std::string& name : opt.transformations) evidence.push_back(ws.transformation(name).transformation);
  EquivalenceReport res = homotopy_equivalence_certify(f, g, evidence, opt.max_dim, budget);
  Report rep;
  rep.data["functor"] = opt.functor_name;
  rep.data["back"] = opt.functor_back;
  rep.data["verdict"] = verdict_json(res.verdict);
  rep.data["homology_agrees"] = res.homology_agrees;
  rep.data["dom_homology"] = homology_json(res.dom_homology);
  rep.data["cod_homology"] = homology_json(res.cod_homology);
  if (res.pi1_order_dom) rep.data["pi1_order_dom"] = *res.pi1_order_dom;
  if (res.pi1_order_cod) rep.data["pi1_order_cod"] = *res.pi1_order_cod;
  rep.exit_code = verdict_exit(res.verdict);
  return rep;
}

Report cmd_amalgamate(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  CategoryPtr c = ws.category(opt.category).category;
  Report rep;
  rep.data["category"] = opt.category;

  std::optional<SpanSet> spans;
  if (!opt.spans.empty()) {
    SpanSet set;
    for (const std::string& s : opt.spans) set.push_back(parse_span(*c, s));
    spans = std::move(set);
  }

  if (opt.rounds <= 0) {
    AmalgamationResult res = adjoin_amalgamation_step(c, spans, budget);
    Json adjoined = Json::array();
    for (const Span& s : res.adjoined)
      adjoined.push_back(Json::array(
          {c->object_id(s.apex), c->morphism_id(s.left), c->morphism_id(s.right)}));
    rep.data["adjoined_spans"] = std::move(adjoined);
    rep.data["result"] = category_to_json(*res.category);
    return rep;
  }

  IterationResult res = iterate_construction(c, opt.rounds, spans, opt.max_dim, budget);
  Json stages = Json::array();
  bool any_fail = false, any_unknown = false;
  for (const auto& st : res.stages) {
    Json j;
    j["stage"] = st.stage;
    j["objects"] = st.category->object_count();
    j["morphisms"] = st.category->morphism_count();
    if (st.previous_spans_ap) {
      j["previous_spans_ap"] = verdict_json(*st.previous_spans_ap);
      any_fail |= st.previous_spans_ap->verdict == Verdict::Fails;
      any_unknown |= st.previous_spans_ap->verdict == Verdict::Unknown;
    }
    if (st.all_mono) j["all_mono"] = verdict_json(*st.all_mono);
    if (st.homology) j["homology"] = homology_json(*st.homology);
    stages.push_back(std::move(j));
  }
  rep.data["stages"] = std::move(stages);
  rep.data["final"] = category_to_json(*res.stages.back().category);
  rep.exit_code = any_fail ? 1 : (any_unknown ? 3 : 0);
  return rep;
}

Report cmd_karoubi(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  CategoryPtr c = ws.category(opt.category).category;
  KaroubiResult res = karoubi_envelope(c);
  Report rep;
  rep.data["category"] = opt.category;
  rep.data["envelope"] = category_to_json(*res.envelope);
  rep.data["split_objects"] = res.envelope->object_count() - c->object_count();
  if (opt.max_dim >= 0) {
    HomologyResult before = nerve_homology(*c, opt.max_dim, budget);
    HomologyResult after = nerve_homology(*res.envelope, opt.max_dim, budget);
    rep.data["homology_before"] = homology_json(before);
    rep.data["homology_after"] = homology_json(after);
    rep.data["homology_agrees"] = before == after;
  }
  return rep;
}

Report cmd_face_poset(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const SimplicialComplex& k = ws.complex(opt.complex_name).complex;
  FacePosetResult res = face_poset(k);
  Report rep;
  rep.data["complex"] = opt.complex_name;
  rep.data["elements"] = res.poset.elements.size();
  rep.data["category"] = category_to_json(*res.category);
  if (opt.max_dim >= 0) {
    HomologyResult nerve = nerve_homology(*res.category, opt.max_dim, budget);
    HomologyResult oracle = simplicial_homology(k, opt.max_dim, budget);
    rep.data["nerve_homology"] = homology_json(nerve);
    rep.data["complex_homology"] = homology_json(oracle);
    rep.data["homology_agrees"] = nerve == oracle;
  }
  return rep;
}

Report cmd_subdivide(const Workspace& ws, const CommandOptions& opt, Budget& budget) {
  const SimplicialComplex& k = ws.complex(opt.complex_name).complex;
  SimplicialComplex sd = barycentric_subdivide(k);
  Report rep;
  rep.data["complex"] = opt.complex_name;
  Json facets = Json::array();
  for (const auto& f : sd.facets) facets.push_back(f);
  rep.data["subdivision"]["name"] = sd.name;
  rep.data["subdivision"]["vertices"] = sd.vertices.size();
  rep.data["subdivision"]["facets"] = std::move(facets);
  if (opt.max_dim >= 0) {
    HomologyResult before = simplicial_homology(k, opt.max_dim, budget);
    HomologyResult after = simplicial_homology(sd, opt.max_dim, budget);
    rep.data["homology_before"] = homology_json(before);
    rep.data["homology_after"] = homology_json(after);
    rep.data["homology_agrees"] = before == after;
  }
  return rep;
}

void render_text_node(const Json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array()))) {
        os << pad << key << ":\n";
        render_text_node(value, os, indent + 1);
      } else if (value.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) os << ", ";
          if (value[i].is_string())
            os << value[i].get<std::string>();
          else
            os << value[i].dump();
        }
        os << "]\n";
      } else if (value.is_string()) {
        os << pad << key << ": " << value.get<std::string>() << "\n";
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      os << pad << "-\n";
      render_text_node(item, os, indent + 1);
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string Report::render(const std::string& format) const {
  if (format == "json") return data.dump(2) + "\n";
  std::ostringstream os;
  render_text_node(data, os, 0);
  return os.str();
}

Report run_command(const Workspace& ws, const CommandOptions& opt) {
  Budget budget(opt.max_steps);
  Report rep;
  if (opt.command == "validate")
    rep = cmd_validate(ws, opt);
  else if (opt.command == "props")
    rep = cmd_props(ws, opt, budget);
  else if (opt.command == "pi1")
    rep = cmd_pi1(ws, opt, budget);
  else if (opt.command == "homology")
    rep = cmd_homology(ws, opt, budget);
  else if (opt.command == "lascar")
    rep = cmd_lascar(ws, opt);
  else if (opt.command == "main-theorem")
    rep = cmd_main_theorem(ws, opt);
  else if (opt.command == "quillen-a")
    rep = cmd_quillen_a(ws, opt, budget);
  else if (opt.command == "equiv")
    rep = cmd_equiv(ws, opt, budget);
  else if (opt.command == "amalgamate")
    rep = cmd_amalgamate(ws, opt, budget);
  else if (opt.command == "karoubi")
    rep = cmd_karoubi(ws, opt, budget);
  else if (opt.command == "face-poset")
    rep = cmd_face_poset(ws, opt, budget);
  else if (opt.command == "subdivide")
    rep = cmd_subdivide(ws, opt, budget);
  else
    throw CatError(ErrorCode::ValidationError, "unknown command '" + opt.command + "'");

  // Uniform envelope: command echo, budgets, and resource usage come first
  // so reports stay comparable across commands.
  Json wrapped;
  wrapped["command"] = opt.command;
  Json args;
  if (!opt.files.empty()) args["workspace"] = opt.files;
  if (!opt.category.empty()) args["category"] = opt.category;
  if (!opt.complex_name.empty()) args["complex"] = opt.complex_name;
  if (!opt.functor_name.empty()) args["functor"] = opt.functor_name;
  if (!opt.functor_back.empty()) args["back"] = opt.functor_back;
  if (!opt.transformations.empty()) args["nat"] = opt.transformations;
  if (!opt.basepoint.empty()) args["basepoint"] = opt.basepoint;
  if (!opt.at.empty()) args["at"] = opt.at;
  if (!opt.sub.empty()) args["sub"] = opt.sub;
  if (!opt.spans.empty()) args["span"] = opt.spans;
  if (!opt.props.empty()) args["prop"] = opt.props;
  if (opt.command == "quillen-a") args["side"] = opt.side;
  if (opt.command == "amalgamate") args["rounds"] = opt.rounds;
  if (opt.identify > 0) args["identify"] = opt.identify;
  if (opt.normal_closure) args["normal-closure"] = true;
  wrapped["arguments"] = std::move(args);
  wrapped["budgets"]["max_dim"] = opt.max_dim;
  wrapped["budgets"]["max_cosets"] = opt.max_cosets;
  wrapped["budgets"]["max_steps"] = opt.max_steps;
  wrapped["results"] = std::move(rep.data);
  wrapped["resources"]["steps_used"] = budget.used;
  rep.data = std::move(wrapped);
  return rep;
}

}  // namespace io
}  // namespace catlas
