#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace shiftcat {

/// Fixed-universe subset of the vertices of one graph.
///
/// Comparison is lexicographic on the sorted member list, which is the
/// deterministic tie-break used for every ordered output in the library.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_members(std::size_t universe, const std::vector<std::size_t>& members);
  static VertexSet from_mask(std::size_t universe, unsigned long long mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(std::size_t v) const { return v < bits_.size() && bits_[v]; }
  void insert(std::size_t v) { bits_.at(v) = true; }
  void erase(std::size_t v) { bits_.at(v) = false; }

  std::vector<std::size_t> members() const;
  unsigned long long mask() const;

  bool subset_of(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;
  bool operator<(const VertexSet& other) const;

 private:
  std::vector<bool> bits_;
};

/// Order by cardinality, then lexicographically. A linear extension of inclusion.
bool size_then_lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace shiftcat
