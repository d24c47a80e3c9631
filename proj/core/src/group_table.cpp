#include "catlas/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace catlas {

int FiniteGroupTable::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = times(x, a);
    ++n;
  }
  return n;
}

void FiniteGroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw CatError(ErrorCode::Internal, "group table is empty");
  if (mul.size() != n * n || inverse.size() != n) throw CatError(ErrorCode::Internal, "group table has wrong arity");
  for (std::size_t a = 0; a < n; ++a) {
    if (times(identity, static_cast<int>(a)) != static_cast<int>(a) ||
        times(static_cast<int>(a), identity) != static_cast<int>(a))
      throw CatError(ErrorCode::Internal, "identity law fails at " + elements[a]);
    if (times(static_cast<int>(a), inv(static_cast<int>(a))) != identity ||
        times(inv(static_cast<int>(a)), static_cast<int>(a)) != identity)
      throw CatError(ErrorCode::Internal, "inverse law fails at " + elements[a]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (times(times(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
            times(static_cast<int>(a), times(static_cast<int>(b), static_cast<int>(c))))
          throw CatError(ErrorCode::Internal, "associativity fails at (" + elements[a] + "," + elements[b] + "," +
                                                  elements[c] + ")");
}

FiniteGroupTable FiniteGroupTable::trivial() {
  FiniteGroupTable t;
  t.elements = {"1"};
  t.mul = {0};
  t.identity = 0;
  t.inverse = {0};
  return t;
}

std::vector<int> subgroup_closure(const FiniteGroupTable& g, const std::vector<int>& generators) {
  std::set<int> seen{g.identity};
  std::vector<int> frontier{g.identity};
  for (int x : generators)
    if (seen.insert(x).second) frontier.push_back(x);
  // products and inverses until closed
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(seen.begin(), seen.end());
    for (int a : cur) {
      if (seen.insert(g.inv(a)).second) grew = true;
      for (int b : cur)
        if (seen.insert(g.times(a, b)).second) grew = true;
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::pair<int, int>> normality_counterexample(const FiniteGroupTable& g,
                                                            const std::vector<int>& subgroup) {
  std::set<int> sub(subgroup.begin(), subgroup.end());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (int h : subgroup)
      if (!sub.count(g.times(g.times(static_cast<int>(a), h), g.inv(static_cast<int>(a)))))
        return std::make_pair(static_cast<int>(a), h);
  return std::nullopt;
}

std::vector<int> normal_closure(const FiniteGroupTable& g, const std::vector<int>& subgroup) {
  std::vector<int> gens = subgroup;
  for (;;) {
    std::vector<int> closed = subgroup_closure(g, gens);
    std::set<int> closed_set(closed.begin(), closed.end());
    bool grew = false;
    for (std::size_t a = 0; a < g.order(); ++a)
      for (int h : closed) {
        int c = g.times(g.times(static_cast<int>(a), h), g.inv(static_cast<int>(a)));
        if (closed_set.insert(c).second) grew = true;
      }
    if (!grew) return closed;
    gens.assign(closed_set.begin(), closed_set.end());
  }
}

QuotientGroup quotient_by_normal(const FiniteGroupTable& g, const std::vector<int>& subgroup) {
  if (auto w = normality_counterexample(g, subgroup))
    throw CatError(ErrorCode::NotNormal, "conjugation of " + g.elements[static_cast<std::size_t>(w->second)] + " by " +
                                             g.elements[static_cast<std::size_t>(w->first)] + " leaves the subgroup");
  const std::size_t n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(a));
    for (int h : subgroup) coset_of[static_cast<std::size_t>(g.times(static_cast<int>(a), h))] = idx;
  }
  QuotientGroup q;
  q.coset_of = std::move(coset_of);
  q.representative = reps;
  q.table.identity = q.coset_of[static_cast<std::size_t>(g.identity)];
  const std::size_t m = reps.size();
  q.table.elements.reserve(m);
  for (int r : reps) q.table.elements.push_back("[" + g.elements[static_cast<std::size_t>(r)] + "]");
  q.table.mul.assign(m * m, -1);
  q.table.inverse.assign(m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.table.mul[a * m + b] = q.coset_of[static_cast<std::size_t>(g.times(reps[a], reps[b]))];
  for (std::size_t a = 0; a < m; ++a) q.table.inverse[a] = q.coset_of[static_cast<std::size_t>(g.inv(reps[a]))];
  q.table.validate();
  return q;
}

std::vector<int> commutator_subgroup(const FiniteGroupTable& g) {
  std::vector<int> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      int c = g.times(g.times(static_cast<int>(a), static_cast<int>(b)),
                      g.times(g.inv(static_cast<int>(a)), g.inv(static_cast<int>(b))));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  // conjugates of commutators are commutators, so the closure is normal
  return subgroup_closure(g, comms);
}

HomologyGroup abelian_invariants(const FiniteGroupTable& g) {
  QuotientGroup q = quotient_by_normal(g, commutator_subgroup(g));
  const FiniteGroupTable& a = q.table;  // abelian now
  const std::size_t n = a.order();

  // Decompose the abelian group from element-order counts: for each prime
  // p, s_k = log_p #{x : x^(p^k) = 1} determines the p-type, and aligned
  // p-parts give the invariant factors.
  std::vector<long> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = a.element_order(static_cast<int>(x));

  std::vector<long> primes;
  long m = static_cast<long>(n);
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  std::vector<std::vector<long>> p_type;  // per prime: exponents, descending
  for (long p : primes) {
    std::vector<long> s;  // s[k] = log_p of the p^k-torsion count
    for (long k = 0;; ++k) {
      long pk = 1;
      for (long i = 0; i < k; ++i) pk *= p;
      long count = 0;  // x^(p^k) = 1 iff ord(x) divides p^k; count is p^(s_k)
      for (std::size_t x = 0; x < n; ++x)
        if (pk % orders[x] == 0) ++count;
      long log = 0;
      long c = count;
      while (c > 1) {
        c /= p;
        ++log;
      }
      s.push_back(log);
      if (k > 0 && s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k - 1)]) {
        s.pop_back();
        break;
      }
    }
    std::vector<long> lambda;  // partition, descending
    for (std::size_t k = 1; k < s.size(); ++k) {
      long parts_ge_k = s[k] - s[k - 1];
      // parts_ge_k = number of lambda_i >= k
      if (lambda.empty()) lambda.assign(static_cast<std::size_t>(parts_ge_k), 0);
      for (long i = 0; i < parts_ge_k; ++i) lambda[static_cast<std::size_t>(i)] = static_cast<long>(k);
    }
    p_type.push_back(lambda);
  }

  std::size_t slots = 0;
  for (const auto& lam : p_type) slots = std::max(slots, lam.size());
  HomologyGroup res;
  res.betti = 0;
  // invariant factor j (from the largest) multiplies the j-th largest
  // exponent of each prime
  std::vector<BigInt> factors(slots, 1);
  for (std::size_t pi = 0; pi < p_type.size(); ++pi) {
    const auto& lam = p_type[pi];
    for (std::size_t j = 0; j < lam.size(); ++j) {
      BigInt pw = 1;
      for (long e = 0; e < lam[j]; ++e) pw *= primes[pi];
      factors[j] *= pw;  // factors[0] is the largest
    }
  }
  std::reverse(factors.begin(), factors.end());  // divisibility order d1 | d2 | ...
  for (const BigInt& f : factors)
    if (f > 1) res.torsion.push_back(f);
  return res;
}

namespace {

std::vector<int> generating_set(const FiniteGroupTable& g) {
  // Greedy: repeatedly add the first element outside the current closure.
  std::vector<int> gens;
  std::vector<int> closure = subgroup_closure(g, gens);
  while (closure.size() < g.order()) {
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!std::binary_search(closure.begin(), closure.end(), static_cast<int>(x))) {
        gens.push_back(static_cast<int>(x));
        break;
      }
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

bool extend_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b, const std::vector<int>& gens,
                        std::size_t next, std::vector<int>& image, Budget& budget, bool& cut) {
  if (next == gens.size()) {
    // Images of generators are fixed: propagate to all elements by closure.
    std::vector<int> map(a.order(), -1);
    map[static_cast<std::size_t>(a.identity)] = b.identity;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < a.order(); ++x) {
        if (map[x] == -1) continue;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          int y = a.times(static_cast<int>(x), gens[gi]);
          int im = b.times(map[x], image[gi]);
          if (map[static_cast<std::size_t>(y)] == -1) {
            map[static_cast<std::size_t>(y)] = im;
            grew = true;
          } else if (map[static_cast<std::size_t>(y)] != im) {
            return false;
          }
        }
      }
    }
    for (int v : map)
      if (v == -1) return false;
    std::vector<bool> used(b.order(), false);
    for (int v : map) {
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t x = 0; x < a.order(); ++x)
      for (std::size_t y = 0; y < a.order(); ++y)
        if (map[static_cast<std::size_t>(a.times(static_cast<int>(x), static_cast<int>(y)))] !=
            b.times(map[x], map[y]))
          return false;
    image = map;  // widen to the full map for the caller
    return true;
  }
  int gen = gens[next];
  int want_order = a.element_order(gen);
  for (std::size_t cand = 0; cand < b.order(); ++cand) {
    if (!budget.tick()) {
      cut = true;
      return false;
    }
    if (b.element_order(static_cast<int>(cand)) != want_order) continue;
    image.push_back(static_cast<int>(cand));
    std::vector<int> saved = image;
    if (extend_isomorphism(a, b, gens, next + 1, image, budget, cut)) return true;
    if (cut) return false;
    image = std::move(saved);
    image.pop_back();
  }
  return false;
}

}  // namespace

IsomorphismSearch find_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b, Budget& budget) {
  IsomorphismSearch out;
  if (a.order() != b.order()) return out;
  std::multiset<int> oa, ob;
  for (std::size_t x = 0; x < a.order(); ++x) oa.insert(a.element_order(static_cast<int>(x)));
  for (std::size_t x = 0; x < b.order(); ++x) ob.insert(b.element_order(static_cast<int>(x)));
  if (oa != ob) return out;
  if (!(abelian_invariants(a) == abelian_invariants(b))) return out;

  std::vector<int> gens = generating_set(a);
  std::vector<int> image;
  bool cut = false;
  if (extend_isomorphism(a, b, gens, 0, image, budget, cut)) {
    out.map = image;
    return out;
  }
  out.exhausted = cut;
  return out;
}

// ---- Todd-Coxeter --------------------------------------------------------

std::size_t GroupPresentation::total_relator_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

namespace {

struct Enumerator {
  const std::size_t ngen;
  const std::size_t ncols;
  std::size_t max_cosets;
  std::vector<Word> relators;
  std::vector<std::vector<int>> act;  // per coset, ncols entries, -1 undefined
  std::vector<int> parent;            // union-find for coincidences
  std::size_t defined = 1;            // total definitions, merged ones included
  std::size_t live = 1;               // the cap applies to live cosets
  bool overflow = false;

  explicit Enumerator(std::size_t g, std::size_t cap) : ngen(g), ncols(2 * g), max_cosets(cap) {
    act.push_back(std::vector<int>(ncols, -1));
    parent.push_back(0);
  }

  static std::size_t col(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }
  static std::size_t inv_col(std::size_t c) { return c ^ 1u; }

  int rep(int c) {
    while (parent[static_cast<std::size_t>(c)] != c) {
      parent[static_cast<std::size_t>(c)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
      c = parent[static_cast<std::size_t>(c)];
    }
    return c;
  }

  bool alive(int c) { return rep(c) == c; }

  int define(int from, std::size_t column) {
    if (live >= max_cosets) {
      overflow = true;
      return -1;
    }
    int fresh = static_cast<int>(act.size());
    act.push_back(std::vector<int>(ncols, -1));
    parent.push_back(fresh);
    ++defined;
    ++live;
    act[static_cast<std::size_t>(from)][column] = fresh;
    act[static_cast<std::size_t>(fresh)][inv_col(column)] = from;
    return fresh;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    --live;
    queue.push_back(b);
  }

  // Entries may point at merged cosets between coincidence passes; every
  // read normalizes through rep(), so no information is lost. Each dead
  // coset's row is transferred to its representative exactly once.
  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int dead = queue[qi];
      for (std::size_t x = 0; x < ncols; ++x) {
        int v = act[static_cast<std::size_t>(dead)][x];
        if (v < 0) continue;
        act[static_cast<std::size_t>(dead)][x] = -1;
        int mu = rep(dead);
        int cur = act[static_cast<std::size_t>(mu)][x];
        if (cur < 0)
          act[static_cast<std::size_t>(mu)][x] = rep(v);
        else if (rep(cur) != rep(v))
          merge(rep(cur), rep(v), queue);
      }
    }
  }

  int step(int c, std::size_t column) {
    int v = act[static_cast<std::size_t>(rep(c))][column];
    return v < 0 ? -1 : rep(v);
  }

  void scan_and_fill(int start, const Word& w) {
    if (w.empty()) return;
    int f = rep(start);
    std::size_t i = 0;
    int b = rep(start);
    std::size_t j = w.size();  // letters w[i..j-1] remain
    for (;;) {
      while (i < j) {
        int nxt = step(f, col(w[i]));
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i == j) {
        if (f != rep(b)) coincidence(f, b);
        return;
      }
      while (j > i) {
        int nxt = step(b, inv_col(col(w[j - 1])));
        if (nxt < 0) break;
        b = nxt;
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // Both slots were just observed undefined on live representatives.
        std::size_t c = col(w[i]);
        act[static_cast<std::size_t>(f)][c] = b;
        act[static_cast<std::size_t>(b)][inv_col(c)] = f;
        return;
      }
      if (define(f, col(w[i])) < 0) return;  // overflow
    }
  }

  bool run() {
    for (int alpha = 0; alpha < static_cast<int>(act.size()); ++alpha) {
      if (!alive(alpha)) continue;
      for (const Word& w : relators) {
        scan_and_fill(alpha, w);
        if (overflow) return false;
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (std::size_t x = 0; x < ncols; ++x) {
        if (step(alpha, x) < 0) {
          if (define(alpha, x) < 0) return false;
        }
      }
    }
    return true;
  }
};

Word free_reduce_word(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

}  // namespace

int CosetEnumeration::eval(const Word& w) const {
  int c = 0;
  for (int letter : w) c = action[static_cast<std::size_t>(c)][Enumerator::col(letter)];
  return c;
}

CosetEnumeration coset_enumeration(const GroupPresentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw CatError(ErrorCode::ValidationError, "max_cosets must be >= 1");
  CosetEnumeration result;
  if (p.generators.empty()) {
    result.completed = true;
    result.cosets_defined = 1;
    result.table = FiniteGroupTable::trivial();
    result.action.push_back({});
    return result;
  }

  Enumerator en(p.generators.size(), max_cosets);
  for (const Word& r : p.relators) {
    Word w = free_reduce_word(r);
    if (!w.empty()) en.relators.push_back(std::move(w));
  }
  if (!en.run()) {
    result.completed = false;
    result.cosets_defined = en.defined;
    return result;
  }

  // Compact live cosets (ascending rep order).
  std::vector<int> live;
  std::vector<int> index(en.act.size(), -1);
  for (int c = 0; c < static_cast<int>(en.act.size()); ++c)
    if (en.alive(c)) {
      index[static_cast<std::size_t>(c)] = static_cast<int>(live.size());
      live.push_back(c);
    }
  const std::size_t n = live.size();
  result.action.assign(n, std::vector<int>(en.ncols, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < en.ncols; ++x) {
      int t = en.act[static_cast<std::size_t>(live[i])][x];
      if (t < 0) throw CatError(ErrorCode::Internal, "coset table incomplete after closure");
      result.action[i][x] = index[static_cast<std::size_t>(en.rep(t))];
    }

  // Representative words by BFS in column order: coset -> word over gens.
  std::vector<Word> words(n);
  std::vector<bool> seen(n, false);
  std::vector<int> order_bfs{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < order_bfs.size(); ++qi) {
    int c = order_bfs[static_cast<std::size_t>(qi)];
    for (std::size_t x = 0; x < en.ncols; ++x) {
      int t = result.action[static_cast<std::size_t>(c)][x];
      if (seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = true;
      words[static_cast<std::size_t>(t)] = words[static_cast<std::size_t>(c)];
      int letter = static_cast<int>(x / 2) + 1;
      words[static_cast<std::size_t>(t)].push_back(x % 2 == 0 ? letter : -letter);
      order_bfs.push_back(t);
    }
  }

  auto render = [&](const Word& w) -> std::string {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      int g = std::abs(w[i]) - 1;
      s += p.generators[static_cast<std::size_t>(g)];
      if (w[i] < 0) s += "^-1";
    }
    return s;
  };

  FiniteGroupTable& t = result.table;
  t.elements.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.elements[i] = render(words[i]);
  t.identity = 0;
  t.mul.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int c = static_cast<int>(a);
      for (int letter : words[b]) c = result.action[static_cast<std::size_t>(c)][Enumerator::col(letter)];
      t.mul[a * n + b] = c;
    }
  t.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.mul[a * n + b] == t.identity) {
        t.inverse[a] = static_cast<int>(b);
        break;
      }
  t.validate();
  result.completed = true;
  result.cosets_defined = en.defined;
  return result;
}

}  // namespace catlas
