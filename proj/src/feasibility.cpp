#include "polytc/feasibility.hpp"

#include <stdexcept>

namespace polytc {

std::optional<std::vector<mpq_class>> feasible_point(const RationalMatrix& a,
                                                     const std::vector<mpq_class>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("feasible_point: row count mismatch");
  const std::size_t vars = rows ? a.front().size() : 0;
  for (const auto& row : a) {
    if (row.size() != vars) throw std::invalid_argument("feasible_point: ragged matrix");
  }

  // Columns: [x (vars) | slack (rows) | artificial (rows)].
  const std::size_t slack0 = vars;
  const std::size_t art0 = vars + rows;
  const std::size_t cols = vars + 2 * rows;
  RationalMatrix tab(rows, std::vector<mpq_class>(cols));
  std::vector<mpq_class> rhs(rows);
  std::vector<std::size_t> basis(rows);
  std::vector<bool> art_row(rows, false);

  for (std::size_t i = 0; i < rows; ++i) {
    const int sign = b[i] > 0 ? 1 : -1;
    for (std::size_t j = 0; j < vars; ++j) tab[i][j] = sign * a[i][j];
    tab[i][slack0 + i] = -sign;
    rhs[i] = sign * b[i];
    if (b[i] > 0) {
      tab[i][art0 + i] = 1;
      basis[i] = art0 + i;
      art_row[i] = true;
    } else {
      basis[i] = slack0 + i;
    }
  }

  // Reduced costs of the phase-one objective sum(artificial).
  std::vector<mpq_class> cost(cols);
  mpq_class objective = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!art_row[i]) continue;
    for (std::size_t j = 0; j < art0; ++j) cost[j] -= tab[i][j];
    objective += rhs[i];
  }

  while (objective > 0) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      mpq_class ratio = rhs[i] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one

    const mpq_class pivot = tab[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) tab[leave][j] /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const mpq_class f = tab[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
      }
      rhs[i] -= f * rhs[leave];
    }
    if (cost[enter] != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
      }
      objective += f * rhs[leave];
    }
    basis[leave] = enter;
  }

  if (objective != 0) return std::nullopt;
  std::vector<mpq_class> x(vars);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) x[basis[i]] = rhs[i];
  }
  return x;
}

}  // namespace polytc
