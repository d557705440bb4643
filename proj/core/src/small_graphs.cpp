#include <shiftcat/oracle.hpp>

#include <algorithm>
#include <numeric>

namespace shiftcat {

namespace {

using Matrix = std::vector<std::size_t>;  // row-major n x n

bool essential(const Matrix& a, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t in = 0, out = 0;
    for (std::size_t u = 0; u < n; ++u) {
      out += a[v * n + u];
      in += a[u * n + v];
    }
    if (in == 0 || out == 0) return false;
  }
  return true;
}

/// The matrix is the lexicographically smallest relabelling of itself.
bool canonical(const Matrix& a, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix b(a.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i * n + j] = a[perm[i] * n + perm[j]];
    if (b < a) return false;
  }
  return true;
}

GraphPresentation to_presentation(const Matrix& a, std::size_t n) {
  GraphPresentation g;
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
  std::size_t id = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t c = 0; c < a[u * n + v]; ++c)
        g.edges.push_back({"e" + std::to_string(id++), g.vertices[u], g.vertices[v]});
  return g;
}

void fill(Matrix& a, std::size_t n, std::size_t pos, std::size_t budget, std::vector<GraphPresentation>& out) {
  if (pos == a.size()) {
    if (essential(a, n) && canonical(a, n)) out.push_back(to_presentation(a, n));
    return;
  }
  for (std::size_t c = 0; c <= budget; ++c) {
    a[pos] = c;
    fill(a, n, pos + 1, budget - c, out);
  }
  a[pos] = 0;
}

}  // namespace

std::vector<GraphPresentation> small_essential_graphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<GraphPresentation> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    Matrix a(n * n, 0);
    fill(a, n, 0, max_edges, out);
  }
  return out;
}

}  // namespace shiftcat
