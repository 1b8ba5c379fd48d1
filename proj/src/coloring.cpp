#include "chaintrace/coloring.hpp"

#include <string>

#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"

namespace chaintrace {

Coloring Coloring::from_rows(int k, const std::vector<std::vector<int>>& rows) {
  if (k < 2) throw Error(Errc::KTooSmall, "k = " + std::to_string(k) + " but k > 1 is required");
  const auto n = static_cast<std::size_t>(k) + 1;
  if (rows.size() != n) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  }
  std::vector<std::int8_t> values;
  values.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j].size() != n) {
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(j) + " has " + std::to_string(rows[j].size()) +
                                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int v = rows[j][i];
      if (v != 1 && v != -1) {
        throw Error(Errc::BadValue, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                        std::to_string(v) + " is not +1 or -1");
      }
      values.push_back(static_cast<std::int8_t>(v));
    }
  }
  return Coloring(k, std::move(values));
}

Coloring Coloring::from_function(int k, const std::function<int(GridPoint)>& f) {
  std::vector<std::vector<int>> rows(k + 1, std::vector<int>(k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= k; ++i) rows[j][i] = f({i, j});
  return from_rows(k, rows);
}

Coloring Coloring::constant(int k, int value) {
  return from_function(k, [value](GridPoint) { return value; });
}

std::vector<std::vector<int>> Coloring::rows() const {
  std::vector<std::vector<int>> out(k_ + 1, std::vector<int>(k_ + 1));
  for (int j = 0; j <= k_; ++j)
    for (int i = 0; i <= k_; ++i) out[j][i] = at(i, j);
  return out;
}

InlineVec<Face, 3> simplex_gates(const Coloring& c, const Simplex& s) {
  InlineVec<Face, 3> out;
  for (const Face& f : s.faces())
    if (c.is_gate(f)) out.push_back(f);
  return out;
}

Coloring sample_coloring(int k, const CircleMapCandidate& candidate) {
  return parallel::sample_coloring(k, candidate);
}

ColoringDiagnostics coloring_diagnostics(const Coloring& c) {
  const int k = c.k();
  ColoringDiagnostics d;
  d.symmetric = true;
  d.doubly_periodic = true;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j)
      if (c.at(i, j) != c.at(j, i)) d.symmetric = false;
    if (c.at(0, i) != c.at(k, i) || c.at(i, 0) != c.at(i, k)) d.doubly_periodic = false;
  }
  for (int i = 0; i < k; ++i)
    if (c.at(i, 0) != c.at(i + 1, 0)) d.gates.bottom.push_back(i);
  for (int j = 0; j < k; ++j)
    if (c.at(k, j) != c.at(k, j + 1)) d.gates.right.push_back(j);
  for (int i = k - 1; i >= 0; --i)
    if (c.at(i, k) != c.at(i + 1, k)) d.gates.top.push_back(i);
  for (int j = k - 1; j >= 0; --j)
    if (c.at(0, j) != c.at(0, j + 1)) d.gates.left.push_back(j);
  return d;
}

}  // namespace chaintrace
