#include <shiftcat/oracle.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shiftcat {

std::optional<std::size_t> WordTable::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words.begin());
}

WordTable words(const EdgeShift& shift, std::size_t k) {
  if (k == 0) throw Error(Errc::DepthTooSmall, "word table needs k >= 1");
  WordTable t{k, {}, {}, {}};
  for_each_word(shift, k, [&](const Word& w) { t.words.push_back(w); });
  t.preimages.resize(t.words.size());
  t.images.resize(t.words.size());
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    const Word& w = t.words[i];
    for (auto f : shift.in_edges(shift.edge(w.front()).src)) {
      Word p{f};
      p.insert(p.end(), w.begin(), w.end() - 1);
      t.preimages[i].push_back(*t.index_of(p));
    }
    for (auto e : shift.out_edges(shift.edge(w.back()).dst)) {
      Word q(w.begin() + 1, w.end());
      q.push_back(e);
      t.images[i].push_back(*t.index_of(q));
    }
    std::sort(t.preimages[i].begin(), t.preimages[i].end());
    std::sort(t.images[i].begin(), t.images[i].end());
  }
  return t;
}

bool check_family_invariance(const EdgeShift& shift, const WordTable& table, const WordFamily& family,
                             FamilyMode mode) {
  if (table.depth < 2) throw Error(Errc::DepthTooSmall, "family checks need depth >= 2");
  if (family.size() != table.words.size()) throw Error(Errc::IllegalWord, "family does not match the word table");
  if (mode == FamilyMode::TotallyInvariant) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!family[i]) continue;
      for (auto p : table.preimages[i])
        if (!family[p]) return false;
      if (std::none_of(table.images[i].begin(), table.images[i].end(), [&](std::size_t j) { return family[j]; }))
        return false;
    }
    return true;
  }
  for (std::size_t j = 1; j <= table.depth; ++j) {
    // Class key: the suffix after j edges and the end vertex.
    std::map<std::pair<Word, VertexId>, std::pair<bool, bool>> seen;  // (has member, has non-member)
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Word& w = table.words[i];
      auto& slot = seen[{Word(w.begin() + j, w.end()), shift.edge(w.back()).dst}];
      (family[i] ? slot.first : slot.second) = true;
    }
    for (const auto& [key, flags] : seen)
      if (flags.first && flags.second) return false;
  }
  return true;
}

WordFamily family_inside(const EdgeShift& shift, const WordTable& table, const VertexSet& within) {
  // A path of |V| further edges inside `within` exists iff an infinite one does.
  const std::size_t n = shift.vertex_count();
  std::vector<bool> alive(n);
  for (VertexId v = 0; v < n; ++v) alive[v] = within.contains(v);
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<bool> next(n, false);
    for (const auto& e : shift.edges())
      if (within.contains(e.src) && alive[e.dst]) next[e.src] = true;
    alive = std::move(next);
  }
  WordFamily fam(table.words.size(), false);
  for (std::size_t i = 0; i < table.words.size(); ++i) {
    const Word& w = table.words[i];
    bool ok = alive[shift.edge(w.back()).dst];
    for (auto e : w) ok = ok && within.contains(shift.edge(e).src) && within.contains(shift.edge(e).dst);
    fam[i] = ok;
  }
  return fam;
}

namespace {

bool family_less(const WordFamily& a, const WordFamily& b) {
  const auto ca = std::count(a.begin(), a.end(), true);
  const auto cb = std::count(b.begin(), b.end(), true);
  if (ca != cb) return ca < cb;
  // Lexicographic on member index lists: the first differing position
  // decides, with the family containing it first.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i];
  return false;
}

}  // namespace

std::vector<WordFamily> oracle_invariant_families(const EdgeShift& shift, const WordTable& table) {
  const std::size_t n = shift.vertex_count();
  if (n > 20) throw Error(Errc::TooLarge, "vertex-subset oracle is limited to 20 vertices");
  std::set<WordFamily> found;
  for (unsigned long long m = 0; m < (1ull << n); ++m) {
    auto fam = family_inside(shift, table, VertexSet::from_mask(n, m));
    if (check_family_invariance(shift, table, fam, FamilyMode::TotallyInvariant)) found.insert(std::move(fam));
  }
  std::vector<WordFamily> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

bool oracle_contained_in_union(const WordFamily& a, const WordFamily& b, const WordFamily& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i] && !c[i]) return false;
  return true;
}

std::vector<std::size_t> oracle_primes(const std::vector<WordFamily>& families) {
  const WordFamily none = families.empty() ? WordFamily{} : WordFamily(families.front().size(), false);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < families.size(); ++a) {
    if (std::none_of(families[a].begin(), families[a].end(), [](bool x) { return x; })) continue;
    bool prime = true;
    for (std::size_t b = 0; b < families.size() && prime; ++b)
      for (std::size_t c = 0; c < families.size() && prime; ++c)
        if (oracle_contained_in_union(families[a], families[b], families[c]) &&
            !oracle_contained_in_union(families[a], families[b], none) &&
            !oracle_contained_in_union(families[a], families[c], none))
          prime = false;
    if (prime) out.push_back(a);
  }
  return out;
}

std::vector<VertexSet> oracle_saturated_sources(const EdgeShift& shift, const WordTable& table) {
  const std::size_t w = table.words.size();
  std::vector<std::size_t> parent(w);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 1; j <= table.depth; ++j) {
    std::map<std::pair<Word, VertexId>, std::size_t> first;
    for (std::size_t i = 0; i < w; ++i) {
      const Word& word = table.words[i];
      auto [it, inserted] = first.try_emplace({Word(word.begin() + j, word.end()), shift.edge(word.back()).dst}, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < w; ++i) classes[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> cls;
  for (auto& [root, members] : classes) cls.push_back(std::move(members));
  if (cls.size() > 20) throw Error(Errc::TooLarge, "too many saturation classes");

  std::set<std::vector<std::size_t>> projections;
  for (unsigned long long m = 0; m < (1ull << cls.size()); ++m) {
    VertexSet src(shift.vertex_count());
    for (std::size_t c = 0; c < cls.size(); ++c)
      if (m >> c & 1)
        for (auto i : cls[c]) src.insert(shift.edge(table.words[i].front()).src);
    projections.insert(src.members());
  }
  std::vector<VertexSet> out;
  for (const auto& p : projections) out.push_back(VertexSet::from_members(shift.vertex_count(), p));
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

bool check_cover(const EdgeShift& shift, const Word& mu, std::size_t n, std::size_t k) {
  if (!is_path(shift, mu)) throw Error(Errc::IllegalWord, format_word(shift, mu) + " is not a path");
  const std::size_t depth = std::max<std::size_t>({k, mu.size(), 1});
  const WordTable table = words(shift, depth);
  std::vector<bool> reached(table.words.size(), false);
  for (std::size_t i = 0; i < table.words.size(); ++i)
    reached[i] = std::equal(mu.begin(), mu.end(), table.words[i].begin());
  std::vector<bool> covered = reached;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<bool> next(table.words.size(), false);
    for (std::size_t i = 0; i < table.words.size(); ++i)
      if (reached[i])
        for (auto t : table.images[i]) next[t] = true;
    reached = std::move(next);
    for (std::size_t i = 0; i < covered.size(); ++i) covered[i] = covered[i] || reached[i];
  }
  // Project onto depth-k prefixes.
  std::set<Word> prefixes;
  for (std::size_t i = 0; i < table.words.size(); ++i)
    if (covered[i]) prefixes.emplace(table.words[i].begin(), table.words[i].begin() + std::min(k, depth));
  return prefixes.size() == static_cast<std::size_t>(count_words(shift, std::min(k, depth)));
}

std::optional<std::size_t> oracle_covering_time(const EdgeShift& shift, std::size_t k) {
  const WordTable table = words(shift, std::max<std::size_t>(k, 1));
  const std::size_t w = table.words.size();
  std::vector<bool> reached(w, false);
  for (std::size_t i = 0; i < w; ++i) reached[i] = table.preimages[i].size() >= 2;
  if (std::none_of(reached.begin(), reached.end(), [](bool x) { return x; })) return std::nullopt;
  std::vector<bool> covered = reached;
  std::set<std::vector<bool>> history{reached};
  std::size_t m = 1;
  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    std::vector<bool> next(w, false);
    for (std::size_t i = 0; i < w; ++i)
      if (reached[i])
        for (auto t : table.images[i]) next[t] = true;
    reached = std::move(next);
    if (!history.insert(reached).second) return std::nullopt;
    for (std::size_t i = 0; i < w; ++i) covered[i] = covered[i] || reached[i];
    ++m;
  }
  return m;
}

bool oracle_strongly_transitive(const EdgeShift& shift, std::size_t k) {
  const WordTable table = words(shift, std::max<std::size_t>(k, 1));
  for (const auto& mu : table.words)
    if (!check_cover(shift, mu, table.words.size(), k)) return false;
  return true;
}

bool check_isolation(const EdgeShift& shift, const Word& cycle, std::size_t k) {
  if (cycle.empty() || !is_path(shift, cycle) || word_target(shift, cycle) != word_source(shift, cycle))
    throw Error(Errc::IllegalCycle, format_word(shift, cycle) + " is not a closed path");
  const std::size_t len = cycle.size();
  if (k < len * (shift.edge_count() + 1))
    throw Error(Errc::DepthTooSmall, "isolation check needs depth >= |c|(|E|+1)");
  const std::size_t reps = (k + len - 1) / len;
  const auto self = EventuallyPeriodicPoint::periodic(shift, cycle);

  std::vector<Word> rotations;
  for (std::size_t r = 0; r < len; ++r) {
    Word rot(cycle.begin() + r, cycle.end());
    rot.insert(rot.end(), cycle.begin(), cycle.begin() + r);
    rotations.push_back(std::move(rot));
  }

  Word prefix;
  for (std::size_t i = 0; i < reps; ++i) prefix.insert(prefix.end(), cycle.begin(), cycle.end());
  const std::size_t base = prefix.size();

  auto differs = [&](VertexId at) {
    for (const auto& r : rotations) {
      if (word_source(shift, r) != at) continue;
      const auto y = EventuallyPeriodicPoint::make(shift, prefix, r);
      const std::size_t horizon = prefix.size() + len;
      for (std::size_t i = 0; i < horizon; ++i)
        if (y.edge_at(i) != self.edge_at(i)) return true;
    }
    return false;
  };

  // Edge distance from each vertex back to the cycle; detours that cannot
  // return within the budget are cut.
  std::vector<std::size_t> back(shift.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  for (auto e : cycle) {
    const VertexId v = shift.edge(e).src;
    if (back[v] == kUnreachable) back[v] = 0, queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto e : shift.in_edges(queue[i])) {
      const VertexId u = shift.edge(e).src;
      if (back[u] == kUnreachable) back[u] = back[queue[i]] + 1, queue.push_back(u);
    }

  // Depth-first over the detour q, appended to c^reps.
  struct Frame {
    VertexId at;
    std::size_t next;
  };
  std::vector<Frame> stack{{word_source(shift, cycle), 0}};
  if (differs(word_source(shift, cycle))) return false;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& out = shift.out_edges(f.at);
    if (prefix.size() - base >= k || f.next == out.size()) {
      stack.pop_back();
      if (prefix.size() > base) prefix.pop_back();
      continue;
    }
    const EdgeId e = out[f.next++];
    prefix.push_back(e);
    const VertexId to = shift.edge(e).dst;
    if (back[to] == kUnreachable || back[to] > k - (prefix.size() - base)) {
      prefix.pop_back();
      continue;
    }
    if (differs(to)) return false;
    stack.push_back({to, 0});
  }
  return true;
}

std::size_t saturation_horizon(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t k) {
  return k + shift.vertex_count() * (x.prefix().size() + x.cycle().size());
}

std::vector<Word> oracle_saturation_slice(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t k,
                                          std::size_t horizon) {
  std::set<Word> out;
  out.insert(x.take(k));
  for (std::size_t n = 1; n <= horizon; ++n) {
    const VertexId meet = shift.edge(x.edge_at(n)).src;
    Word tail = x.take(n + k);
    tail.erase(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(n));
    for_each_word(shift, n, [&](const Word& w) {
      if (shift.edge(w.back()).dst != meet) return;
      Word y = w;
      y.insert(y.end(), tail.begin(), tail.end());
      y.resize(k);
      out.insert(std::move(y));
    });
  }
  return {out.begin(), out.end()};
}

namespace {

std::string count_detail(std::size_t fast, std::size_t slow) {
  return "efficient " + std::to_string(fast) + ", oracle " + std::to_string(slow);
}

std::string opt_string(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

std::vector<CrossCheck> cross_check(const EdgeShift& shift, std::size_t k) {
  if (k < 2) throw Error(Errc::DepthTooSmall, "cross check needs depth >= 2");
  std::vector<CrossCheck> out;
  const WordTable table = words(shift, k);
  const auto lattice = enumerate_invariant_sets(shift);

  std::vector<WordFamily> fast_families;
  for (const auto& e : lattice.elements) fast_families.push_back(family_inside(shift, table, e.vertices));
  const auto slow_families = oracle_invariant_families(shift, table);
  {
    std::set<WordFamily> a(fast_families.begin(), fast_families.end());
    std::set<WordFamily> b(slow_families.begin(), slow_families.end());
    bool each_invariant = std::all_of(fast_families.begin(), fast_families.end(), [&](const WordFamily& f) {
      return check_family_invariance(shift, table, f, FamilyMode::TotallyInvariant);
    });
    out.push_back({"invariant_sets", a == b && a.size() == lattice.size() && each_invariant,
                   count_detail(lattice.size(), slow_families.size())});
  }

  const auto ps = primes(shift, lattice);
  {
    std::set<WordFamily> fast;
    for (const auto& p : ps) fast.insert(fast_families[p.lattice_index]);
    std::set<WordFamily> slow;
    for (auto i : oracle_primes(slow_families)) slow.insert(slow_families[i]);
    out.push_back({"primes", fast == slow, count_detail(fast.size(), slow.size())});
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < lattice.size() && ok; ++i)
      for (std::size_t j = 0; j < lattice.size() && ok; ++j)
        for (std::size_t l = 0; l < lattice.size() && ok; ++l)
          ok = contained_in(shift, lattice.elements[i], lattice.elements[j].vertices, lattice.elements[l].vertices) ==
               oracle_contained_in_union(fast_families[i], fast_families[j], fast_families[l]);
    out.push_back({"union_containment", ok, std::to_string(lattice.size()) + " elements cubed"});
  }

  {
    const auto af = af_ideal_lattice(shift, k);
    std::vector<VertexSet> fast;
    for (const auto& e : af.elements) fast.push_back(e.survivors);
    const auto slow = oracle_saturated_sources(shift, table);
    const bool ok = fast == slow;
    out.push_back({"saturated_sets", ok, count_detail(fast.size(), slow.size())});
  }

  {
    const bool fast = is_strongly_transitive(shift);
    const bool slow = oracle_strongly_transitive(shift, std::min<std::size_t>(k, 3));
    out.push_back({"strong_transitivity", fast == slow,
                   std::string("efficient ") + (fast ? "true" : "false") + ", oracle " + (slow ? "true" : "false")});
  }

  {
    const auto fast = covering_time(shift);
    const auto slow = oracle_covering_time(shift, std::min<std::size_t>(k, 3));
    out.push_back({"covering_time", fast == slow, "efficient " + opt_string(fast) + ", oracle " + opt_string(slow)});
  }

  {
    bool ok = true;
    std::size_t n = 0;
    for (const auto& c : simple_cycles(shift)) {
      const std::size_t depth = std::max(k, c.size() * (shift.edge_count() + 1));
      ok = ok && isolated_periodic(shift, c) == check_isolation(shift, c, depth);
      ++n;
    }
    out.push_back({"isolation", ok, std::to_string(n) + " simple cycles"});
  }

  {
    // Per exactly when some cycle generating the prime is isolated on words.
    const auto cycles = simple_cycles(shift);
    bool ok = true;
    for (const auto& p : ps) {
      bool per = false;
      for (const auto& c : cycles) {
        if (!vertices_of(shift, c).subset_of(p.set.vertices)) continue;
        const auto closure = backward_closure(shift, vertices_of(shift, c));
        if (family_inside(shift, table, closure) != fast_families[p.lattice_index]) continue;
        per = per || check_isolation(shift, c, std::max(k, c.size() * (shift.edge_count() + 1)));
      }
      const bool free = is_topologically_free(shift, lattice, p.set);
      ok = ok && (per == (p.kind == PrimeKind::Per)) && (free == !per);
    }
    out.push_back({"prime_kinds", ok, std::to_string(ps.size()) + " primes"});
  }

  {
    bool ok = true;
    std::size_t n = 0;
    for (const auto& p : ps) {
      const std::size_t depth = std::max(std::min<std::size_t>(k, 4), p.witness.cycle().size());
      const auto fast = saturation_slice(shift, p.witness, depth);
      const auto slow = oracle_saturation_slice(shift, p.witness, depth, saturation_horizon(shift, p.witness, depth));
      ok = ok && fast.words == slow;
      ++n;
    }
    out.push_back({"saturation_slices", ok, std::to_string(n) + " witnesses"});
  }
  return out;
}

}  // namespace shiftcat
