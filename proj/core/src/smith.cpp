#include "spinc/smith.hpp"

#include <algorithm>
#include <utility>

#include "spinc/error.hpp"

namespace spinc {
namespace {

// Row and column operations on D, mirrored on U / U^-1 and V / V^-1 so that
// D = U * M * V holds after every step.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& m)
      : D(m),
        U(IntMatrix::identity(m.rows())),
        Ui(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        Vi(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  // row(dst) += k * row(src)
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Ui.add_col_multiple(src, dst, -k);
  }
  // col(dst) += k * col(src)
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vi.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    Ui.negate_col(i);
  }

  IntMatrix D, U, Ui, V, Vi;
};

// Smallest nonzero |entry| in the block [t, rows) x [t, cols); row-major
// scan order gives the lexicographic tie-break.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& v = d(i, j);
      if (v == 0) continue;
      if (!found || abs(v) < best) {
        best = abs(v);
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithWorkspace w(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  IntVector factors;

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(w.D, t, pi, pj)) break;

    for (;;) {
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const Integer p = w.D(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (w.D(i, t) == 0) continue;
        w.add_row(i, t, -div_floor(w.D(i, t), p));
        if (w.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (w.D(t, j) == 0) continue;
        w.add_col(j, t, -div_floor(w.D(t, j), p));
        if (w.D(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_pivot(w.D, t, pi, pj);
        continue;
      }

      // Row t and column t are clear; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (w.D(i, j) != 0 && !mpz_divisible_p(w.D(i, j).get_mpz_t(), p.get_mpz_t())) {
            w.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
      pi = t;
      pj = t;
    }

    if (w.D(t, t) < 0) w.negate_row(t);
    factors.push_back(w.D(t, t));
  }

  return SmithDecomposition{std::move(w.U), std::move(w.D), std::move(w.V),
                            std::move(w.Ui), std::move(w.Vi), std::move(factors)};
}

SolveResult integer_solve(const SmithDecomposition& snf, const IntVector& b) {
  const std::size_t rows = snf.D.rows();
  const std::size_t cols = snf.D.cols();
  if (b.size() != rows) fail(ErrorCode::SpaceMismatch, "integer_solve: right-hand side has wrong length");

  const IntVector c = snf.U * b;
  IntVector y(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < snf.rank()) {
      const Integer& d = snf.invariant_factors[i];
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t()))
        return SolveResult{std::nullopt, Insolvability{i, c[i], d}};
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return SolveResult{std::nullopt, Insolvability{i, c[i], Integer(0)}};
    }
  }
  return SolveResult{snf.V * y, std::nullopt};
}

SolveResult integer_solve(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::SpaceMismatch, "integer_solve: right-hand side has wrong length");
  return integer_solve(smith_normal_form(m), b);
}

std::optional<IntVector> solve_Z(const IntMatrix& m, const IntVector& b) {
  return integer_solve(m, b).solution;
}

std::optional<F2Vector> solve_F2(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::SpaceMismatch, "solve_F2: right-hand side has wrong length");
  const std::size_t rows = m.rows(), cols = m.cols();
  // Augmented copy [m | b].
  std::vector<F2Vector> a(rows, F2Vector(cols + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
    a[i][cols] = b[i] & 1;
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j <= cols; ++j) a[i][j] ^= a[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols]) return std::nullopt;

  F2Vector x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

}  // namespace spinc
