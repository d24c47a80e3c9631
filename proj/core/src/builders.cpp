#include "catlas/builders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace catlas {
namespace build {

namespace {

FiniteGroupTable table_from_mul(std::vector<std::string> names, std::vector<int> mul) {
  FiniteGroupTable t;
  t.elements = std::move(names);
  t.mul = std::move(mul);
  const std::size_t n = t.elements.size();
  t.identity = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = t.mul[e * n + a] == static_cast<int>(a) && t.mul[a * n + e] == static_cast<int>(a);
    if (ok) {
      t.identity = static_cast<int>(e);
      break;
    }
  }
  t.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.mul[a * n + b] == t.identity) {
        t.inverse[a] = static_cast<int>(b);
        break;
      }
  t.validate();
  return t;
}

}  // namespace

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw CatError(ErrorCode::ValidationError, "cyclic group order must be >= 1");
  std::vector<std::string> names;
  names.push_back("1");
  for (int i = 1; i < n; ++i) names.push_back("r" + std::to_string(i));
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return table_from_mul(std::move(names), std::move(mul));
}

FiniteGroupTable symmetric_group(int n) {
  if (n < 1 || n > 8) throw CatError(ErrorCode::ValidationError, "symmetric group degree out of range");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    bool is_id = true;
    for (int i = 0; i < n; ++i)
      if (q[static_cast<std::size_t>(i)] != i) is_id = false;
    if (is_id) {
      names.push_back("1");
      continue;
    }
    std::string s = "s";
    for (int i = 0; i < n; ++i) s += std::to_string(q[static_cast<std::size_t>(i)] + 1);
    names.push_back(s);
  }
  const std::size_t m = perms.size();
  std::vector<int> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // (a*b)(x) = a(b(x))
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) comp[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      auto it = std::find(perms.begin(), perms.end(), comp);
      mul[a * m + b] = static_cast<int>(it - perms.begin());
    }
  return table_from_mul(std::move(names), std::move(mul));
}

FiniteGroupTable klein_four() {
  std::vector<std::string> names{"1", "a", "b", "c"};
  // xor table on {0,1,2,3}
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[static_cast<std::size_t>(a) * 4 + b] = a ^ b;
  return table_from_mul(std::move(names), std::move(mul));
}

FiniteGroupTable product_group(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t n = a.order(), m = b.order();
  std::vector<std::string> names;
  names.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) names.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
  std::vector<int> mul(n * m * n * m);
  auto idx = [m](std::size_t i, std::size_t j) { return static_cast<int>(i * m + j); };
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          mul[static_cast<std::size_t>(idx(i1, j1)) * n * m + static_cast<std::size_t>(idx(i2, j2))] =
              idx(static_cast<std::size_t>(a.times(static_cast<int>(i1), static_cast<int>(i2))),
                  static_cast<std::size_t>(b.times(static_cast<int>(j1), static_cast<int>(j2))));
  return table_from_mul(std::move(names), std::move(mul));
}

CategoryPtr delooping(const FiniteGroupTable& g, const std::string& name) {
  RawCategory raw;
  raw.name = name;
  raw.objects = {"o"};
  auto mor_name = [&](int e) { return e == g.identity ? std::string("1_o") : g.elements[static_cast<std::size_t>(e)]; };
  for (std::size_t e = 0; e < g.order(); ++e) raw.morphisms.push_back({mor_name(static_cast<int>(e)), "o", "o"});
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      raw.compose.push_back(
          {mor_name(static_cast<int>(a)), mor_name(static_cast<int>(b)), mor_name(g.times(static_cast<int>(a), static_cast<int>(b)))});
  return validate_shared(raw);
}

CategoryPtr torsor_category(const FiniteGroupTable& g, int copies, const std::string& name) {
  if (copies < 1) throw CatError(ErrorCode::ValidationError, "torsor category needs at least one copy");
  RawCategory raw;
  raw.name = name;
  auto obj = [](int i) { return "T" + std::to_string(i + 1); };
  for (int i = 0; i < copies; ++i) raw.objects.push_back(obj(i));
  auto mor = [&](int i, int j, int e) -> std::string {
    if (i == j && e == g.identity) return "1_" + obj(i);
    return "t" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + g.elements[static_cast<std::size_t>(e)];
  };
  for (int i = 0; i < copies; ++i)
    for (int j = 0; j < copies; ++j)
      for (std::size_t e = 0; e < g.order(); ++e) raw.morphisms.push_back({mor(i, j, static_cast<int>(e)), obj(i), obj(j)});
  for (int i = 0; i < copies; ++i)
    for (int j = 0; j < copies; ++j)
      for (int k = 0; k < copies; ++k)
        for (std::size_t e1 = 0; e1 < g.order(); ++e1)
          for (std::size_t e2 = 0; e2 < g.order(); ++e2)
            raw.compose.push_back({mor(j, k, static_cast<int>(e2)), mor(i, j, static_cast<int>(e1)),
                                   mor(i, k, g.times(static_cast<int>(e2), static_cast<int>(e1)))});
  return validate_shared(raw);
}

CategoryPtr walking_arrow() {
  RawCategory raw;
  raw.name = "walking_arrow";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"ab", "a", "b"}};
  return validate_shared(raw);
}

CategoryPtr walking_span() {
  RawCategory raw;
  raw.name = "walking_span";
  raw.objects = {"a", "b", "c"};
  raw.morphisms = {{"ab", "a", "b"}, {"ac", "a", "c"}};
  return validate_shared(raw);
}

CategoryPtr walking_cospan() {
  RawCategory raw;
  raw.name = "walking_cospan";
  raw.objects = {"b", "c", "d"};
  raw.morphisms = {{"bd", "b", "d"}, {"cd", "c", "d"}};
  return validate_shared(raw);
}

CategoryPtr walking_idempotent() {
  RawCategory raw;
  raw.name = "walking_idempotent";
  raw.objects = {"o"};
  raw.morphisms = {{"e", "o", "o"}};
  raw.compose = {{"e", "e", "e"}};
  return validate_shared(raw);
}

CategoryPtr parallel_pair() {
  RawCategory raw;
  raw.name = "parallel_pair";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "a", "b"}};
  return validate_shared(raw);
}

CategoryPtr discrete(int n) {
  RawCategory raw;
  raw.name = "discrete" + std::to_string(n);
  for (int i = 1; i <= n; ++i) raw.objects.push_back("x" + std::to_string(i));
  return validate_shared(raw);
}

Poset chain_poset(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 1; i <= n; ++i) elems.push_back("p" + std::to_string(i));
  for (int i = 1; i < n; ++i) leq.emplace_back("p" + std::to_string(i), "p" + std::to_string(i + 1));
  return validate_poset("chain" + std::to_string(n), std::move(elems), std::move(leq));
}

Poset circle_poset() {
  return validate_poset("circle", {"a", "b", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
}

Poset boolean_lattice(int atoms) {
  if (atoms < 0 || atoms > 10) throw CatError(ErrorCode::ValidationError, "boolean lattice atom count out of range");
  std::vector<std::string> elems;
  auto name_of = [](unsigned mask) {
    std::string s = "s";
    for (int i = 0; i < 10; ++i)
      if (mask & (1u << i)) s += std::to_string(i + 1);
    return s;
  };
  const unsigned total = 1u << atoms;
  std::vector<std::pair<std::string, std::string>> leq;
  for (unsigned m = 0; m < total; ++m) elems.push_back(name_of(m));
  for (unsigned m = 0; m < total; ++m)
    for (unsigned mm = 0; mm < total; ++mm)
      if ((m & mm) == m) leq.emplace_back(name_of(m), name_of(mm));
  return validate_poset("bool" + std::to_string(atoms), std::move(elems), std::move(leq));
}

CategoryPtr fininj_category(int nmax) {
  if (nmax < 1 || nmax > 7) throw CatError(ErrorCode::ValidationError, "fininj size bound out of range");
  RawCategory raw;
  raw.name = "fininj" + std::to_string(nmax);
  auto obj = [](int n) { return "size" + std::to_string(n); };
  for (int n = 1; n <= nmax; ++n) raw.objects.push_back(obj(n));

  // injections [m] -> [n] as image tuples
  struct Inj {
    int m, n;
    std::vector<int> img;  // img[i] in 1..n
  };
  std::vector<Inj> injections;
  auto is_identity = [](const Inj& f) {
    if (f.m != f.n) return false;
    for (int i = 0; i < f.m; ++i)
      if (f.img[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  };
  auto name_of = [&](const Inj& f) -> std::string {
    if (is_identity(f)) return "1_" + obj(f.m);
    std::string s = "j" + std::to_string(f.m) + std::to_string(f.n) + "_";
    for (int v : f.img) s += std::to_string(v);
    return s;
  };
  for (int m = 1; m <= nmax; ++m)
    for (int n = m; n <= nmax; ++n) {
      std::vector<int> img(static_cast<std::size_t>(m));
      // enumerate injections by backtracking in lexicographic order
      std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
      std::function<void(int)> rec = [&](int i) {
        if (i == m) {
          injections.push_back({m, n, img});
          return;
        }
        for (int v = 1; v <= n; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = true;
          img[static_cast<std::size_t>(i)] = v;
          rec(i + 1);
          used[static_cast<std::size_t>(v)] = false;
        }
      };
      rec(0);
    }
  for (const auto& f : injections) raw.morphisms.push_back({name_of(f), obj(f.m), obj(f.n)});
  for (const auto& g : injections)
    for (const auto& f : injections) {
      if (f.n != g.m) continue;
      Inj comp{f.m, g.n, {}};
      comp.img.resize(static_cast<std::size_t>(f.m));
      for (int i = 0; i < f.m; ++i)
        comp.img[static_cast<std::size_t>(i)] = g.img[static_cast<std::size_t>(f.img[static_cast<std::size_t>(i)] - 1)];
      raw.compose.push_back({name_of(g), name_of(f), name_of(comp)});
    }
  return validate_shared(raw);
}

SimplicialComplex simplex_complex(int n) {
  std::vector<std::string> facet;
  for (int i = 0; i <= n; ++i) facet.push_back("v" + std::to_string(i));
  return validate_complex("simplex" + std::to_string(n), {facet});
}

SimplicialComplex boundary_complex(int n) {
  std::vector<std::string> all;
  for (int i = 0; i <= n; ++i) all.push_back("v" + std::to_string(i));
  std::vector<std::vector<std::string>> facets;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<std::string> f;
    for (int i = 0; i <= n; ++i)
      if (i != drop) f.push_back(all[static_cast<std::size_t>(i)]);
    facets.push_back(std::move(f));
  }
  return validate_complex("boundary" + std::to_string(n), std::move(facets));
}

SimplicialComplex point_complex() { return validate_complex("point", {{"v0"}}); }

}  // namespace build
}  // namespace catlas
