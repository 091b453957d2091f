#include "imc/credal_row.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "imc/error.hpp"
#include "imc/format.hpp"
#include "imc/kernels.hpp"

namespace imc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RowValidation fail(std::string why) {
  RowValidation r;
  r.valid = false;
  r.violation = std::move(why);
  return r;
}

std::string check_mass(const MassFunction& p, std::size_t n) {
  if (p.size() != n) {
    return "mass function has " + std::to_string(p.size()) + " entries, expected " +
           std::to_string(n);
  }
  double sum = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    if (!std::isfinite(p[y])) return "mass entry " + std::to_string(y) + " is not finite";
    if (p[y] < 0.0) return "mass entry " + std::to_string(y) + " is negative";
    sum += p[y];
  }
  if (std::fabs(sum - 1.0) > kStochasticTolerance) {
    return "mass function sums to " + format_number(sum) + ", not 1";
  }
  return {};
}

RowValidation validate_intervals(const IntervalRow& row, std::size_t n) {
  const auto& l = row.lower;
  const auto& u = row.upper;
  if (l.size() != n || u.size() != n) {
    return fail("interval bounds must have " + std::to_string(n) + " entries");
  }
  double sum_l = 0.0;
  double sum_u = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    if (!std::isfinite(l[y]) || !std::isfinite(u[y])) {
      return fail("interval bound " + std::to_string(y) + " is not finite");
    }
    if (!(0.0 <= l[y] && l[y] <= u[y] && u[y] <= 1.0)) {
      return fail("interval bounds at " + std::to_string(y) + " violate 0 <= l <= u <= 1");
    }
    sum_l += l[y];
    sum_u += u[y];
  }
  if (sum_l > 1.0 + kStochasticTolerance) return fail("lower bounds sum above 1 (empty set)");
  if (sum_u < 1.0 - kStochasticTolerance) return fail("upper bounds sum below 1 (empty set)");

  RowValidation r;
  for (std::size_t y = 0; y < n; ++y) {
    if (l[y] + (sum_u - u[y]) < 1.0 - kStochasticTolerance) r.unreachable_lower.push_back(y);
    if (u[y] + (sum_l - l[y]) > 1.0 + kStochasticTolerance) r.unreachable_upper.push_back(y);
  }
  r.bounds_reachable = r.unreachable_lower.empty() && r.unreachable_upper.empty();
  return r;
}

std::size_t row_size_or_throw(const CredalRow& row, std::size_t n) {
  if (auto d = row.dimension(); d && *d != n) {
    throw InvalidRow("row dimension " + std::to_string(*d) + " does not match gamble size " +
                     std::to_string(n));
  }
  return n;
}

// Greedy natural extension: visit states by descending h (ties by index) and
// give each the most mass its upper bound allows while leaving enough for the
// lower bounds of the states still to come.
double interval_upper(const IntervalRow& row, std::span<const double> h) {
  const std::size_t n = h.size();
  std::vector<StateIndex> order(n);
  std::iota(order.begin(), order.end(), StateIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](StateIndex a, StateIndex b) { return h[a] > h[b]; });

  std::vector<double> owed_after(n, 0.0);
  for (std::size_t i = n; i-- > 1;) owed_after[i - 1] = owed_after[i] + row.lower[order[i]];

  double remaining = 1.0;
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const StateIndex y = order[i];
    double m = std::min(row.upper[y], remaining - owed_after[i]);
    m = std::max(m, row.lower[y]);
    value += m * h[y];
    remaining -= m;
  }
  return value;
}

double max_abs_diff(const MassFunction& a, const MassFunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

std::optional<std::size_t> CredalRow::dimension() const {
  return std::visit(
      Overloaded{
          [](const PreciseRow& r) -> std::optional<std::size_t> { return r.mass.size(); },
          [](const VertexListRow& r) -> std::optional<std::size_t> {
            if (r.vertices.empty()) return std::nullopt;
            return r.vertices.front().size();
          },
          [](const IntervalRow& r) -> std::optional<std::size_t> { return r.lower.size(); },
          [](const VacuousRow&) -> std::optional<std::size_t> { return std::nullopt; },
      },
      v_);
}

bool operator==(const CredalRow& a, const CredalRow& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const PreciseRow& r) { return r.mass == std::get<PreciseRow>(b.v_).mass; },
          [&](const VertexListRow& r) {
            return r.vertices == std::get<VertexListRow>(b.v_).vertices;
          },
          [&](const IntervalRow& r) {
            const auto& o = std::get<IntervalRow>(b.v_);
            return r.lower == o.lower && r.upper == o.upper;
          },
          [](const VacuousRow&) { return true; },
      },
      a.v_);
}

RowValidation validate_row(const CredalRow& row, std::size_t n) {
  return std::visit(Overloaded{
                        [&](const PreciseRow& r) {
                          auto why = check_mass(r.mass, n);
                          return why.empty() ? RowValidation{} : fail(std::move(why));
                        },
                        [&](const VertexListRow& r) {
                          if (r.vertices.empty()) return fail("vertex list is empty");
                          for (std::size_t i = 0; i < r.vertices.size(); ++i) {
                            auto why = check_mass(r.vertices[i], n);
                            if (!why.empty()) return fail("vertex " + std::to_string(i) + ": " + why);
                          }
                          return RowValidation{};
                        },
                        [&](const IntervalRow& r) { return validate_intervals(r, n); },
                        [](const VacuousRow&) { return RowValidation{}; },
                    },
                    row.variant());
}

void require_valid_row(const CredalRow& row, std::size_t n, const std::string& label) {
  auto v = validate_row(row, n);
  if (!v.valid) throw InvalidRow("row '" + label + "': " + v.violation);
}

double upper_row_expectation(const CredalRow& row, std::span<const double> h) {
  row_size_or_throw(row, h.size());
  return std::visit(Overloaded{
                        [&](const PreciseRow& r) { return kernels::dot(r.mass, h); },
                        [&](const VertexListRow& r) {
                          double best = -std::numeric_limits<double>::infinity();
                          for (const auto& v : r.vertices) best = std::max(best, kernels::dot(v, h));
                          return best;
                        },
                        [&](const IntervalRow& r) { return interval_upper(r, h); },
                        [&](const VacuousRow&) { return kernels::min_max(h).max; },
                    },
                    row.variant());
}

double upper_row_expectation(const CredalRow& row, const Gamble& h) {
  return upper_row_expectation(row, h.values());
}

double lower_row_expectation(const CredalRow& row, const Gamble& h) {
  return -upper_row_expectation(row, -h);
}

VertexListRow interval_row_vertices(const IntervalRow& row) {
  const std::size_t n = row.lower.size();
  if (n > kMaxIntervalVertexDimension) {
    throw SizeLimit("interval vertex enumeration limited to " +
                    std::to_string(kMaxIntervalVertexDimension) + " states, got " +
                    std::to_string(n));
  }
  auto check = validate_intervals(row, n);
  if (!check.valid) throw InvalidRow(check.violation);
  if (n == 0) throw InvalidRow("interval row has no states");

  VertexListRow out;
  MassFunction p(n);
  // Every vertex has at least n-1 coordinates at a bound; the remaining one
  // absorbs the residual mass.
  for (StateIndex free = 0; free < n; ++free) {
    const std::size_t others = n - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << others); ++mask) {
      double used = 0.0;
      std::size_t bit = 0;
      for (StateIndex y = 0; y < n; ++y) {
        if (y == free) continue;
        p[y] = ((mask >> bit) & 1U) ? row.upper[y] : row.lower[y];
        used += p[y];
        ++bit;
      }
      const double rest = 1.0 - used;
      if (rest < row.lower[free] - kStochasticTolerance ||
          rest > row.upper[free] + kStochasticTolerance) {
        continue;
      }
      p[free] = std::clamp(rest, row.lower[free], row.upper[free]);
      const bool seen = std::any_of(out.vertices.begin(), out.vertices.end(), [&](const auto& v) {
        return max_abs_diff(v, p) <= kStochasticTolerance;
      });
      if (!seen) out.vertices.push_back(p);
    }
  }
  return out;
}

std::vector<MassFunction> row_vertices(const CredalRow& row, std::size_t n) {
  return std::visit(Overloaded{
                        [](const PreciseRow& r) { return std::vector<MassFunction>{r.mass}; },
                        [](const VertexListRow& r) { return r.vertices; },
                        [](const IntervalRow& r) { return interval_row_vertices(r).vertices; },
                        [&](const VacuousRow&) {
                          std::vector<MassFunction> vs(n, MassFunction(n, 0.0));
                          for (std::size_t i = 0; i < n; ++i) vs[i][i] = 1.0;
                          return vs;
                        },
                    },
                    row.variant());
}

bool upper_mass_positive(const CredalRow& row, StateIndex j, std::size_t n) {
  return std::visit(Overloaded{
                        [&](const PreciseRow& r) { return r.mass.at(j) > 0.0; },
                        [&](const VertexListRow& r) {
                          return std::any_of(r.vertices.begin(), r.vertices.end(),
                                             [&](const auto& v) { return v.at(j) > 0.0; });
                        },
                        [&](const IntervalRow& r) {
                          // Attainable maximum of p(j) is min(u_j, 1 - sum of the other lower bounds).
                          double others = 0.0;
                          for (std::size_t z = 0; z < n; ++z) {
                            if (z != j) others += r.lower[z];
                          }
                          return std::min(r.upper.at(j), 1.0 - others) > kStochasticTolerance;
                        },
                        [](const VacuousRow&) { return true; },
                    },
                    row.variant());
}

bool lower_mass_positive(const CredalRow& row, const std::vector<bool>& set) {
  auto puts_mass_on_set = [&](const MassFunction& p) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (set[y] && p[y] > 0.0) return true;
    }
    return false;
  };
  return std::visit(Overloaded{
                        [&](const PreciseRow& r) { return puts_mass_on_set(r.mass); },
                        [&](const VertexListRow& r) {
                          return std::all_of(r.vertices.begin(), r.vertices.end(), puts_mass_on_set);
                        },
                        [&](const IntervalRow& r) {
                          // Lower probability of a set under probability intervals.
                          double in_lower = 0.0;
                          double out_upper = 0.0;
                          for (std::size_t y = 0; y < set.size(); ++y) {
                            if (set[y]) {
                              in_lower += r.lower[y];
                            } else {
                              out_upper += r.upper[y];
                            }
                          }
                          return std::max(in_lower, 1.0 - out_upper) > kStochasticTolerance;
                        },
                        [&](const VacuousRow&) {
                          return std::all_of(set.begin(), set.end(), [](bool b) { return b; });
                        },
                    },
                    row.variant());
}

}  // namespace imc
