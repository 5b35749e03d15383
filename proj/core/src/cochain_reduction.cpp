#include "internal/cochain_reduction.hpp"

#include <algorithm>
#include <limits>

#include "spinc/error.hpp"

namespace spinc::detail {

CochainReduction::CochainReduction(const Space& space, Ring ring) : ring_(ring) {
  const SimplicialComplex& x = *space.total();
  const int top = x.dim();
  const auto levels = static_cast<std::size_t>(std::max(top + 1, 0));
  cells_.resize(levels);
  cell_of_.resize(levels);
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    cell_of_[uk].assign(x.count(k), -1);
    for (std::size_t i = 0; i < x.count(k); ++i)
      if (!space.in_sub(k, i)) {
        cell_of_[uk][i] = static_cast<std::ptrdiff_t>(cells_[uk].size());
        cells_[uk].push_back(i);
      }
  }

  cols_.resize(levels);
  rows_.resize(levels);
  alive_.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    cols_[k].resize(cells_[k].size());
    alive_[k].assign(cells_[k].size(), true);
    if (k + 1 < levels) rows_[k].resize(cells_[k + 1].size());
  }
  for (int k = 0; k + 1 <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    for (std::size_t b = 0; b < cells_[uk + 1].size(); ++b) {
      const auto faces = x.face_indices(k + 1, cells_[uk + 1][b]);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto a = cell_of_[uk][faces[i]];
        if (a < 0) continue;
        Integer v = (i % 2 == 0) ? 1 : -1;
        normalize(v);
        cols_[uk][static_cast<std::size_t>(a)].emplace(b, v);
        rows_[uk][b].emplace(static_cast<std::size_t>(a), v);
      }
    }
  }

  reduce();

  critical_.resize(levels);
  critical_cells_.resize(levels);
  for (std::size_t k = 0; k < levels; ++k)
    for (std::size_t c = 0; c < cells_[k].size(); ++c)
      if (alive_[k][c]) {
        critical_cells_[k].push_back(c);
        critical_[k].push_back(cells_[k][c]);
      }
}

void CochainReduction::normalize(Integer& v) const {
  if (ring_ == Ring::Z2) v = mod_floor(v, 2);
}

void CochainReduction::reduce() {
  const int top = top_degree();
  // Pairs whose elimination creates at most `threshold` fill-in updates go
  // first; the threshold grows only when a whole pass finds nothing cheap.
  std::size_t threshold = 0;
  while (true) {
    bool changed = false;
    bool any_unit = false;
    for (int k = 0; k < top; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      for (std::size_t a = 0; a < cols_[uk].size(); ++a) {
        if (!alive_[uk][a] || cols_[uk][a].empty()) continue;
        const std::size_t col_size = cols_[uk][a].size();
        std::size_t best = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (const auto& [b, v] : cols_[uk][a]) {
          if (!is_unit(v)) continue;
          const std::size_t cost = (col_size - 1) * (rows_[uk][b].size() - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best = b;
          }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max()) continue;
        any_unit = true;
        if (best_cost <= threshold) {
          eliminate(k, a, best);
          changed = true;
        }
      }
    }
    if (!any_unit) break;
    if (!changed) threshold = threshold == 0 ? 1 : threshold * 2;
  }
}

void CochainReduction::eliminate(int k, std::size_t a, std::size_t b) {
  const auto uk = static_cast<std::size_t>(k);
  Elimination e{k, a, b, cols_[uk][a].at(b), {}, {}};
  for (const auto& [b2, v] : cols_[uk][a])
    if (b2 != b) e.column.emplace_back(b2, v);
  for (const auto& [a2, v] : rows_[uk][b])
    if (a2 != a) e.row.emplace_back(a2, v);

  // delta'(b2, a2) = delta(b2, a2) - delta(b2, a) u delta(b, a2), with u = u^-1.
  for (const auto& [b2, ca] : e.column)
    for (const auto& [a2, rb] : e.row) {
      Integer& entry = cols_[uk][a2][b2];
      entry -= ca * e.u * rb;
      normalize(entry);
      if (entry == 0) {
        cols_[uk][a2].erase(b2);
        rows_[uk][b2].erase(a2);
      } else {
        rows_[uk][b2][a2] = entry;
      }
    }

  for (const auto& [b2, v] : cols_[uk][a]) rows_[uk][b2].erase(a);
  cols_[uk][a].clear();
  for (const auto& [a2, v] : rows_[uk][b]) cols_[uk][a2].erase(b);
  rows_[uk][b].clear();

  if (k >= 1) {  // a leaves the target of the previous coboundary
    for (const auto& [a0, v] : rows_[uk - 1][a]) cols_[uk - 1][a0].erase(a);
    rows_[uk - 1][a].clear();
  }
  if (uk + 1 < rows_.size() && uk + 2 < cells_.size()) {  // b leaves the source of the next one
    for (const auto& [c, v] : cols_[uk + 1][b]) rows_[uk + 1][c].erase(b);
    cols_[uk + 1][b].clear();
  }

  alive_[uk][a] = false;
  alive_[uk + 1][b] = false;
  log_.push_back(std::move(e));
}

const std::vector<std::size_t>& CochainReduction::critical(int k) const {
  static const std::vector<std::size_t> none;
  if (k < 0 || k > top_degree()) return none;
  return critical_[static_cast<std::size_t>(k)];
}

IntMatrix CochainReduction::reduced_coboundary(int k) const {
  const auto& src = critical(k);
  const auto& dst = critical(k + 1);
  IntMatrix m(dst.size(), src.size());
  if (k < 0 || k + 1 > top_degree() || src.empty() || dst.empty()) return m;
  const auto uk = static_cast<std::size_t>(k);
  std::vector<std::ptrdiff_t> row_of(cells_[uk + 1].size(), -1);
  for (std::size_t r = 0; r < critical_cells_[uk + 1].size(); ++r)
    row_of[critical_cells_[uk + 1][r]] = static_cast<std::ptrdiff_t>(r);
  for (std::size_t c = 0; c < critical_cells_[uk].size(); ++c)
    for (const auto& [b, v] : cols_[uk][critical_cells_[uk][c]]) {
      const auto r = row_of[b];
      if (r < 0) fail(ErrorCode::Internal, "reduced coboundary reaches an eliminated cell");
      m(static_cast<std::size_t>(r), c) = v;
    }
  return m;
}

IntVector CochainReduction::project(int k, const IntVector& values) const {
  if (k < 0 || k > top_degree()) return {};
  const auto uk = static_cast<std::size_t>(k);
  IntVector x(cells_[uk].size());
  for (std::size_t c = 0; c < x.size(); ++c) x[c] = values[cells_[uk][c]];
  for (const auto& e : log_) {
    if (e.k + 1 == k) {
      if (x[e.b] != 0) {
        const Integer t = e.u * x[e.b];
        for (const auto& [b2, v] : e.column) {
          x[b2] -= v * t;
          normalize(x[b2]);
        }
      }
      x[e.b] = 0;
    } else if (e.k == k) {
      x[e.a] = 0;
    }
  }
  IntVector out;
  out.reserve(critical_cells_[uk].size());
  for (std::size_t c : critical_cells_[uk]) {
    Integer v = x[c];
    normalize(v);
    out.push_back(std::move(v));
  }
  return out;
}

IntVector CochainReduction::include(int k, const IntVector& critical_values) const {
  if (k < 0 || k > top_degree()) return {};
  const auto uk = static_cast<std::size_t>(k);
  if (critical_values.size() != critical_cells_[uk].size())
    fail(ErrorCode::Internal, "include: wrong number of critical values");
  IntVector y(cells_[uk].size());
  for (std::size_t r = 0; r < critical_values.size(); ++r) y[critical_cells_[uk][r]] = critical_values[r];
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    if (it->k != k) continue;
    Integer s = 0;
    for (const auto& [a2, v] : it->row) s += v * y[a2];
    y[it->a] = -it->u * s;
    normalize(y[it->a]);
  }
  IntVector full(cell_of_[uk].size());
  for (std::size_t c = 0; c < y.size(); ++c) full[cells_[uk][c]] = y[c];
  return full;
}

}  // namespace spinc::detail
