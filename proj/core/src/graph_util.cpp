#include <shiftcat/graph_util.hpp>

#include <algorithm>
#include <deque>
#include <functional>

namespace shiftcat {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe, false) {
  for (auto v : members) bits_.at(v) = true;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe, const std::vector<std::size_t>& members) {
  VertexSet s(universe);
  for (auto v : members) s.bits_.at(v) = true;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, unsigned long long mask) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe && v < 64; ++v)
    if (mask >> v & 1ULL) s.bits_[v] = true;
  return s;
}

std::size_t VertexSet::size() const noexcept { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(v);
  return out;
}

unsigned long long VertexSet::mask() const {
  unsigned long long m = 0;
  for (std::size_t v = 0; v < bits_.size() && v < 64; ++v)
    if (bits_[v]) m |= 1ULL << v;
  return m;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v] && !other.contains(v)) return false;
  return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet r(std::max(universe(), other.universe()));
  for (std::size_t v = 0; v < r.universe(); ++v) r.bits_[v] = contains(v) || other.contains(v);
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet r(universe());
  for (std::size_t v = 0; v < r.universe(); ++v) r.bits_[v] = bits_[v] && other.contains(v);
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet r(universe());
  for (std::size_t v = 0; v < r.universe(); ++v) r.bits_[v] = bits_[v] && !other.contains(v);
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r(universe());
  for (std::size_t v = 0; v < r.universe(); ++v) r.bits_[v] = !bits_[v];
  return r;
}

bool VertexSet::operator<(const VertexSet& other) const { return members() < other.members(); }

bool size_then_lex_less(const VertexSet& a, const VertexSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

// ---------------------------------------------------------------------------
// Components

Components strongly_connected_components(const EdgeShift& shift) {
  const std::size_t n = shift.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  Components out;
  out.of_vertex.assign(n, kUnset);
  std::size_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& outs = shift.out_edges(f.v);
      if (f.next < outs.size()) {
        const VertexId w = shift.edge(outs[f.next++]).dst;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.of_vertex[w] = out.members.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
    }
  }
  out.nontrivial.assign(out.members.size(), false);
  for (const auto& e : shift.edges())
    if (out.of_vertex[e.src] == out.of_vertex[e.dst]) out.nontrivial[out.of_vertex[e.src]] = true;
  return out;
}

bool is_strongly_connected(const EdgeShift& shift) {
  return strongly_connected_components(shift).members.size() == 1;
}

VertexSet forward_reach(const EdgeShift& shift, const VertexSet& from, const VertexSet& within) {
  VertexSet seen(shift.vertex_count());
  std::deque<VertexId> queue;
  for (auto v : from.members())
    if (within.contains(v)) {
      seen.insert(v);
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (auto e : shift.out_edges(v)) {
      const VertexId w = shift.edge(e).dst;
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet forward_reach(const EdgeShift& shift, const VertexSet& from) {
  return forward_reach(shift, from, shift.all_vertices());
}

VertexSet backward_closure(const EdgeShift& shift, const VertexSet& seed) {
  VertexSet seen(shift.vertex_count());
  std::deque<VertexId> queue;
  for (auto v : seed.members()) {
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (auto e : shift.in_edges(v)) {
      const VertexId u = shift.edge(e).src;
      if (!seen.contains(u)) {
        seen.insert(u);
        queue.push_back(u);
      }
    }
  }
  return seen;
}

bool is_backward_closed(const EdgeShift& shift, const VertexSet& set) {
  for (const auto& e : shift.edges())
    if (set.contains(e.dst) && !set.contains(e.src)) return false;
  return true;
}

VertexSet trim_sinks(const EdgeShift& shift, const VertexSet& set) {
  VertexSet keep = set;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v : keep.members()) {
      const auto& outs = shift.out_edges(v);
      const bool has_exit = std::any_of(outs.begin(), outs.end(),
                                        [&](EdgeId e) { return keep.contains(shift.edge(e).dst); });
      if (!has_exit) {
        keep.erase(v);
        changed = true;
      }
    }
  }
  return keep;
}

VertexSet cyclic_vertices(const EdgeShift& shift) {
  const auto comps = strongly_connected_components(shift);
  VertexSet out(shift.vertex_count());
  for (VertexId v = 0; v < shift.vertex_count(); ++v)
    if (comps.nontrivial[comps.of_vertex[v]]) out.insert(v);
  return out;
}

std::vector<std::size_t> distances_from(const EdgeShift& shift, const VertexSet& sources) {
  std::vector<std::size_t> dist(shift.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  for (auto v : sources.members()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (auto e : shift.out_edges(v)) {
      const VertexId w = shift.edge(e).dst;
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Word shortest_cycle_through(const EdgeShift& shift, VertexId v, const VertexSet& within) {
  if (!within.contains(v)) return {};
  // BFS over vertices, remembering the edge used to reach each one; the first
  // edge back into v closes a shortest cycle.
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(shift.vertex_count(), kNone);
  std::vector<bool> seen(shift.vertex_count(), false);
  std::deque<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (auto e : shift.out_edges(u)) {
      const VertexId w = shift.edge(e).dst;
      if (!within.contains(w)) continue;
      if (w == v) {
        Word cycle{e};
        for (VertexId x = u; x != v; x = shift.edge(via[x]).src) cycle.push_back(via[x]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::vector<Word> simple_cycles(const EdgeShift& shift) {
  // Enumerate cycles whose smallest vertex is the start; forbid revisits.
  std::vector<Word> cycles;
  const std::size_t n = shift.vertex_count();
  std::vector<bool> on_path(n, false);
  Word path;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId v) {
    for (auto e : shift.out_edges(v)) {
      const VertexId w = shift.edge(e).dst;
      if (w < start) continue;
      if (w == start) {
        path.push_back(e);
        cycles.push_back(path);
        path.pop_back();
      } else if (!on_path[w]) {
        on_path[w] = true;
        path.push_back(e);
        dfs(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

VertexSet vertices_of(const EdgeShift& shift, const Word& w) {
  VertexSet out(shift.vertex_count());
  for (auto e : w) {
    out.insert(shift.edge(e).src);
    out.insert(shift.edge(e).dst);
  }
  return out;
}

}  // namespace shiftcat
