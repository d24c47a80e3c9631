#include "catlas/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace catlas {

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

std::string word_to_string(const GroupPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += p.generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  IntMat m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r]) {
      std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
      m.at(r, g) += letter > 0 ? 1 : -1;
    }
  std::vector<BigInt> inv = p.generators.empty() ? std::vector<BigInt>{} : smith_invariants(std::move(m));
  HomologyGroup res;
  res.betti = static_cast<long>(p.generators.size()) - static_cast<long>(inv.size());
  for (const BigInt& d : inv)
    if (d > 1) res.torsion.push_back(d);
  return res;
}

// ---- Tietze simplification ------------------------------------------------

namespace {

// Canonical form for duplicate detection: lexicographic minimum over all
// rotations of the cyclic word and of its inverse.
Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  const Word inv = invert_word(w);
  Word best;
  for (const Word* v : {&w, &inv}) {
    for (std::size_t r = 0; r < v->size(); ++r) {
      Word rot(v->begin() + static_cast<std::ptrdiff_t>(r), v->end());
      rot.insert(rot.end(), v->begin(), v->begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

struct TietzeState {
  std::vector<std::string> gen_names;       // stable symbols
  std::vector<bool> alive;
  std::vector<Word> relators;               // cyclically reduced, deduped
  std::vector<std::pair<int, Word>> elims;  // (stable gen, its word) in order

  std::size_t live_gens() const {
    std::size_t n = 0;
    for (bool a : alive) n += a;
    return n;
  }
  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }

  void normalize() {
    std::set<Word> seen;
    std::vector<Word> keep;
    for (auto& r : relators) {
      Word w = cyclic_reduce(std::move(r));
      if (w.empty()) continue;
      if (seen.insert(canonical_cyclic(w)).second) keep.push_back(std::move(w));
    }
    std::sort(keep.begin(), keep.end());
    relators = std::move(keep);
  }

  void substitute(int gen, const Word& image) {
    for (auto& r : relators) {
      Word out;
      for (int letter : r) {
        if (letter == gen + 1)
          out.insert(out.end(), image.begin(), image.end());
        else if (letter == -(gen + 1)) {
          Word inv = invert_word(image);
          out.insert(out.end(), inv.begin(), inv.end());
        } else
          out.push_back(letter);
      }
      r = std::move(out);
    }
  }
};

}  // namespace

Word TietzeResult::rewrite(const Word& input_word) const {
  Word out;
  for (int letter : input_word) {
    const Word& img = gen_images[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = invert_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

TietzeResult tietze_simplify(const GroupPresentation& p, Budget& budget) {
  TietzeState st;
  st.gen_names = p.generators;
  st.alive.assign(p.generators.size(), true);
  st.relators = p.relators;
  st.normalize();

  struct Snapshot {
    std::size_t gens, length;
    std::vector<bool> alive;
    std::vector<Word> relators;
    std::size_t elim_count;
  };
  auto better = [](std::size_t g1, std::size_t l1, std::size_t g2, std::size_t l2) {
    return g1 < g2 || (g1 == g2 && l1 < l2);
  };
  Snapshot best{st.live_gens(), st.total_length(), st.alive, st.relators, 0};
  bool exhausted = false;

  for (;;) {
    if (!budget.tick(st.total_length() + 1)) {
      exhausted = true;
      break;
    }
    // Candidate eliminations: generator occurring exactly once in some
    // relator. Score by the net length change; deterministic tie-break.
    long best_delta = 0;
    std::size_t best_rel = kNone, best_gen = kNone;
    bool have = false;
    std::vector<long> occurrences(st.gen_names.size(), 0);
    for (const auto& r : st.relators)
      for (int letter : r) ++occurrences[static_cast<std::size_t>(std::abs(letter) - 1)];
    for (std::size_t ri = 0; ri < st.relators.size(); ++ri) {
      const Word& r = st.relators[ri];
      std::map<std::size_t, int> counts;
      for (int letter : r) counts[static_cast<std::size_t>(std::abs(letter) - 1)]++;
      for (const auto& [g, cnt] : counts) {
        if (cnt != 1 || !st.alive[g]) continue;
        long occ_elsewhere = occurrences[g] - 1;
        long delta = occ_elsewhere * (static_cast<long>(r.size()) - 2) - static_cast<long>(r.size());
        if (!have || delta < best_delta || (delta == best_delta && (g < best_gen || (g == best_gen && ri < best_rel)))) {
          have = true;
          best_delta = delta;
          best_rel = ri;
          best_gen = g;
        }
      }
    }
    if (!have) break;

    // Rotate the relator so the chosen generator leads, then solve for it.
    Word r = st.relators[best_rel];
    std::size_t pos = 0;
    while (static_cast<std::size_t>(std::abs(r[pos])) - 1 != best_gen) ++pos;
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    Word rest(r.begin() + 1, r.end());
    Word image = r[0] > 0 ? invert_word(rest) : rest;  // g = w

    st.relators.erase(st.relators.begin() + static_cast<std::ptrdiff_t>(best_rel));
    st.substitute(static_cast<int>(best_gen), image);
    st.alive[best_gen] = false;
    st.elims.emplace_back(static_cast<int>(best_gen), image);
    st.normalize();

    if (better(st.live_gens(), st.total_length(), best.gens, best.length))
      best = {st.live_gens(), st.total_length(), st.alive, st.relators, st.elims.size()};
  }

  // Expand eliminated generators to words over the surviving ones, walking
  // the elimination list backwards so later substitutions resolve first.
  std::vector<Word> expansion(st.gen_names.size());
  for (std::size_t g = 0; g < st.gen_names.size(); ++g)
    if (best.alive[g]) expansion[g] = {static_cast<int>(g) + 1};
  for (std::size_t k = best.elim_count; k-- > 0;) {
    auto& [gen, image] = st.elims[k];
    Word out;
    for (int letter : image) {
      const Word& e = expansion[static_cast<std::size_t>(std::abs(letter) - 1)];
      if (letter > 0)
        out.insert(out.end(), e.begin(), e.end());
      else {
        Word inv = invert_word(e);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    expansion[static_cast<std::size_t>(gen)] = free_reduce(std::move(out));
  }

  TietzeResult res;
  res.budget_exhausted = exhausted;
  std::vector<int> new_index(st.gen_names.size(), -1);
  for (std::size_t g = 0; g < st.gen_names.size(); ++g)
    if (best.alive[g]) {
      new_index[g] = static_cast<int>(res.presentation.generators.size());
      res.presentation.generators.push_back(st.gen_names[g]);
    }
  auto reindex = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
      int g = new_index[static_cast<std::size_t>(std::abs(letter) - 1)];
      out.push_back(letter > 0 ? g + 1 : -(g + 1));
    }
    return out;
  };
  for (const auto& r : best.relators) res.presentation.relators.push_back(reindex(r));
  res.gen_images.resize(st.gen_names.size());
  for (std::size_t g = 0; g < st.gen_names.size(); ++g) res.gen_images[g] = reindex(expansion[g]);
  return res;
}

// ---- pi1 -------------------------------------------------------------------

Index Pi1Presentation::generator_of(Index morphism) const {
  auto it = std::lower_bound(generator_morphism.begin(), generator_morphism.end(), morphism);
  if (it == generator_morphism.end() || *it != morphism) return kNone;
  return static_cast<Index>(it - generator_morphism.begin());
}

Pi1Presentation pi1_presentation(const FiniteCategory& c, Index basepoint) {
  if (basepoint >= c.object_count())
    throw CatError(ErrorCode::DanglingReference, "basepoint object out of range");
  Pi1Presentation out;
  out.basepoint = basepoint;

  // BFS over the undirected morphism graph; at each visited object the
  // incident non-identity morphisms are scanned in id order, so the tree is
  // reproducible.
  std::vector<bool> visited(c.object_count(), false);
  std::vector<std::pair<Index, bool>> parent_edge(c.object_count(), {kNone, false});  // (morphism, forward?)
  std::deque<Index> queue;
  visited[basepoint] = true;
  queue.push_back(basepoint);
  std::vector<bool> in_tree(c.morphism_count(), false);
  while (!queue.empty()) {
    Index o = queue.front();
    queue.pop_front();
    for (Index m : c.non_identity_morphisms()) {
      Index other = kNone;
      bool forward = false;
      if (c.src(m) == o && !visited[c.tgt(m)]) {
        other = c.tgt(m);
        forward = true;
      } else if (c.tgt(m) == o && !visited[c.src(m)]) {
        other = c.src(m);
      }
      if (other == kNone) continue;
      visited[other] = true;
      parent_edge[other] = {m, forward};
      in_tree[m] = true;
      queue.push_back(other);
    }
  }

  for (Index o = 0; o < c.object_count(); ++o)
    if (visited[o]) out.component_objects.push_back(o);

  for (Index m : c.non_identity_morphisms())
    if (visited[c.src(m)]) out.generator_morphism.push_back(m);
  for (std::size_t g = 0; g < out.generator_morphism.size(); ++g)
    out.presentation.generators.push_back(c.morphism_id(out.generator_morphism[g]));

  auto gen_letter = [&](Index m, bool positive) -> int {
    Index g = out.generator_of(m);
    return positive ? static_cast<int>(g) + 1 : -(static_cast<int>(g) + 1);
  };

  // Composable-pair relators: g . f = (gf), with identity composites giving
  // a two-letter relator.
  for (Index f : out.generator_morphism)
    for (Index g : c.mors_from(c.tgt(f))) {
      if (c.is_identity(g)) continue;
      Index gf = c.compose(g, f);
      Word r{gen_letter(g, true), gen_letter(f, true)};
      if (!c.is_identity(gf)) r.push_back(gen_letter(gf, false));
      out.presentation.relators.push_back(std::move(r));
    }
  for (Index m : c.non_identity_morphisms())
    if (in_tree[m]) {
      out.tree_edges.push_back(m);
      out.presentation.relators.push_back({gen_letter(m, true)});
    }

  // Tree path words basepoint -> object (as composable edge letters,
  // rightmost first).
  out.object_path.assign(c.object_count(), {});
  for (Index o : out.component_objects) {
    Word path;
    Index cur = o;
    while (cur != basepoint) {
      auto [m, forward] = parent_edge[cur];
      path.push_back(gen_letter(m, forward));
      cur = forward ? c.src(m) : c.tgt(m);
    }
    // collected target-to-basepoint; word composition order is already
    // rightmost-first, so this is the path basepoint -> o
    out.object_path[o] = std::move(path);
  }
  return out;
}

// ---- induced homomorphism --------------------------------------------------

namespace {

// letters of F(m) as a codomain generator word (empty when F(m) is an identity)
Word spell_image(const Pi1Presentation& cod, const Functor& fun, Index m, bool positive) {
  Index fm = fun.apply_mor(m);
  if (fun.cod->is_identity(fm)) return {};
  Index g = cod.generator_of(fm);
  if (g == kNone)
    throw CatError(ErrorCode::Internal,
                   "image morphism '" + fun.cod->morphism_id(fm) + "' missing from codomain presentation");
  return {positive ? static_cast<int>(g) + 1 : -(static_cast<int>(g) + 1)};
}

Word map_through(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (int letter : w) {
    const Word& img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = invert_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

}  // namespace

Word InducedHom::map_word(const Word& w) const { return map_through(gen_image, w); }

InducedHom induced_pi1_hom(const Functor& f, Index basepoint, const PathWord& path_to_image,
                           std::size_t verify_max_cosets) {
  const FiniteCategory& c = *f.dom;
  InducedHom hom;
  hom.dom = pi1_presentation(c, basepoint);

  // The optional path relocates the codomain basepoint along its steps.
  Index cod_base = f.apply_obj(basepoint);
  std::vector<std::pair<Index, bool>> steps;
  for (const auto& [id, forward] : path_to_image) {
    Index m = f.cod->morphism(id);
    Index from = forward ? f.cod->src(m) : f.cod->tgt(m);
    if (from != cod_base)
      throw CatError(ErrorCode::ShapeMismatch, "path-to-image step '" + id + "' does not continue the path");
    cod_base = forward ? f.cod->tgt(m) : f.cod->src(m);
    steps.emplace_back(m, forward);
  }
  hom.cod = pi1_presentation(*f.cod, cod_base);

  Word conj;  // the path as a codomain word, rightmost letter first
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    Index g = hom.cod.generator_of(it->first);
    if (g == kNone) throw CatError(ErrorCode::ShapeMismatch, "path-to-image uses an identity morphism");
    conj.push_back(it->second ? static_cast<int>(g) + 1 : -(static_cast<int>(g) + 1));
  }

  // A generator f: X -> Y denotes the based loop tree(Y)^-1 . f . tree(X);
  // its image is spelled edgewise at F(basepoint) and conjugated to the
  // relocated basepoint.
  std::vector<Word> fpath(c.object_count());
  for (Index o : hom.dom.component_objects) {
    Word spelled;
    for (int letter : hom.dom.object_path[o]) {
      Index m = hom.dom.generator_morphism[static_cast<std::size_t>(std::abs(letter) - 1)];
      Word part = spell_image(hom.cod, f, m, letter > 0);
      spelled.insert(spelled.end(), part.begin(), part.end());
    }
    fpath[o] = std::move(spelled);
  }

  for (std::size_t g = 0; g < hom.dom.generator_morphism.size(); ++g) {
    Index m = hom.dom.generator_morphism[g];
    Word w = invert_word(fpath[c.tgt(m)]);
    Word mid = spell_image(hom.cod, f, m, true);
    w.insert(w.end(), mid.begin(), mid.end());
    const Word& tail = fpath[c.src(m)];
    w.insert(w.end(), tail.begin(), tail.end());
    if (!conj.empty()) {
      Word res = conj;
      res.insert(res.end(), w.begin(), w.end());
      Word back = invert_word(conj);
      res.insert(res.end(), back.begin(), back.end());
      w = std::move(res);
    }
    hom.gen_image.push_back(free_reduce(std::move(w)));
  }

  // Relator images must die in the codomain group. Images are conjugates of
  // codomain relators by construction, so first check that syntactically;
  // fall back to evaluation in the enumerated group.
  std::set<Word> cod_canon;
  for (const Word& r : hom.cod.presentation.relators) cod_canon.insert(canonical_cyclic(cyclic_reduce(r)));
  CosetEnumeration en;
  bool enumerated = false;
  TietzeResult simplified;
  for (const Word& r : hom.dom.presentation.relators) {
    Word image = hom.map_word(r);
    if (image.empty()) continue;
    Word core = cyclic_reduce(image);
    if (core.empty() || cod_canon.count(canonical_cyclic(core))) continue;
    if (!enumerated) {
      Budget tietze_budget(2'000'000);
      simplified = tietze_simplify(hom.cod.presentation, tietze_budget);
      en = coset_enumeration(simplified.presentation, verify_max_cosets);
      enumerated = true;
    }
    if (!en.completed)
      throw CatError(ErrorCode::RelatorViolation,
                     "cannot verify relator image '" + word_to_string(hom.cod.presentation, image) +
                         "' within the enumeration budget");
    if (en.eval(simplified.rewrite(image)) != 0)
      throw CatError(ErrorCode::RelatorViolation,
                     "relator image '" + word_to_string(hom.cod.presentation, image) + "' is not trivial");
  }
  return hom;
}

}  // namespace catlas
