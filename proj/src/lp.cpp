#include "coxdatum/lp.hpp"

#include <utility>
#include <vector>

#include "coxdatum/errors.hpp"

namespace coxdatum {

FeasibilityResult solve_feasibility(const Matrix& m, const Vec& b, const Field& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (b.size() != rows) throw Error(ErrorKind::Precondition, "rhs length mismatch");

  // Tableau layout: [ original | artificial | rhs ], objective row last.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<Vec> tab(rows + 1, Vec(width, field.zero()));
  std::vector<int> flip(rows, 1);
  std::vector<std::size_t> basis(rows);

  for (std::size_t i = 0; i < rows; ++i) {
    flip[i] = field.sign(b[i]) < 0 ? -1 : 1;
    const Scalar f = field.from_int(flip[i]);
    for (std::size_t j = 0; j < cols; ++j) tab[i][j] = m(i, j) * f;
    tab[i][cols + i] = field.one();
    tab[i][rhs] = b[i] * f;
    basis[i] = cols + i;
  }
  Vec& obj = tab[rows];
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= tab[i][j];
    obj[rhs] -= tab[i][rhs];
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const Scalar p = tab[pr][pc];
    for (Scalar& x : tab[pr]) x /= p;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == pr || field.is_zero(tab[i][pc])) continue;
      const Scalar factor = tab[i][pc];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[pr][j];
    }
    basis[pr] = pc;
  };

  const std::size_t iteration_cap = 50 * (rows + cols + 1) * (rows + cols + 1);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > iteration_cap) {
      if (field.mode() == Mode::Exact) throw Error(ErrorKind::Precondition, "simplex failed to terminate");
      return {};
    }
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (field.sign(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Scalar best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (field.sign(tab[i][enter]) <= 0) continue;
      Scalar ratio = tab[i][rhs] / tab[i][enter];
      if (leave == rows) {
        leave = i;
        best = std::move(ratio);
        continue;
      }
      const int cmp = field.sign(ratio - best);
      if (cmp < 0 || (cmp == 0 && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero, so some row qualifies.
    if (leave == rows) throw Error(ErrorKind::Precondition, "phase-one simplex unbounded");
    pivot(leave, enter);
  }

  // The objective row stores -(sum of artificials).
  const Scalar infeasibility = -obj[rhs];
  FeasibilityResult result;
  if (field.sign(infeasibility) == 0) {
    result.status = Feasibility::Feasible;
    result.solution.assign(cols, field.zero());
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols) result.solution[basis[i]] = tab[i][rhs];
    return result;
  }

  // Reduced cost of artificial i is 1 - y'_i, with y' the phase-one duals of
  // the sign-flipped system; undo the flip and negate to get the Farkas ray.
  result.status = Feasibility::Infeasible;
  result.farkas.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Scalar y_flipped = field.one() - obj[cols + i];
    result.farkas.push_back(-(y_flipped * field.from_int(flip[i])));
  }
  return result;
}

}  // namespace coxdatum
