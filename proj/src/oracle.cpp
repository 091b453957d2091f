#include "imc/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "imc/error.hpp"
#include "imc/kernels.hpp"

namespace imc {

namespace {

std::vector<std::vector<MassFunction>> vertex_sets(const UpperTransitionOperator& t) {
  std::vector<std::vector<MassFunction>> sets;
  sets.reserve(t.size());
  for (StateIndex x = 0; x < t.size(); ++x) {
    try {
      sets.push_back(row_vertices(t.row(x), t.size()));
    } catch (const SizeLimit&) {
      throw;
    } catch (const Error& e) {
      throw UnsupportedRow("row '" + t.space().label(x) + "': " + e.what());
    }
  }
  return sets;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t profile_count(const std::vector<std::vector<MassFunction>>& sets, std::size_t k) {
  std::uint64_t per_step = 1;
  for (const auto& s : sets) per_step = saturating_mul(per_step, s.size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total = saturating_mul(total, per_step);
  return total;
}

Gamble enumerate(const UpperTransitionOperator& t, const Gamble& f, std::size_t k, OracleMode mode,
                 bool maximize) {
  const std::size_t n = t.size();
  if (f.size() != n) throw DimensionMismatch("gamble size does not match operator");
  const auto sets = vertex_sets(t);
  const std::uint64_t profiles = profile_count(sets, k);
  if (profiles > kMaxStrategyProfiles) {
    throw SizeLimit("strategy enumeration needs " + std::to_string(profiles) +
                    " profiles, limit is " + std::to_string(kMaxStrategyProfiles));
  }

  const double sign = maximize ? 1.0 : -1.0;
  std::vector<double> best(n, -std::numeric_limits<double>::infinity());
  // choice[t * n + x]: vertex used from state x at step t.
  std::vector<std::size_t> choice(k * n, 0);
  std::vector<double> dist(n), next(n);
  const auto fv = f.values();

  for (std::uint64_t p = 0; p < profiles; ++p) {
    for (StateIndex x0 = 0; x0 < n; ++x0) {
      std::fill(dist.begin(), dist.end(), 0.0);
      dist[x0] = 1.0;
      double running = fv[x0];
      for (std::size_t step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (StateIndex x = 0; x < n; ++x) {
          if (dist[x] == 0.0) continue;
          kernels::axpy(dist[x], sets[x][choice[step * n + x]], next);
        }
        double total = 0.0;
        for (double v : next) total += v;
        if (std::fabs(total - 1.0) > kStochasticTolerance) {
          throw InvalidRow("propagated distribution sums to " + std::to_string(total));
        }
        dist.swap(next);
        if (mode == OracleMode::Average) running += kernels::dot(dist, fv);
      }
      const double value = mode == OracleMode::Average
                               ? running / static_cast<double>(k + 1)
                               : kernels::dot(dist, fv);
      best[x0] = std::max(best[x0], sign * value);
    }
    // Mixed-radix increment over (step, state) choices.
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (++choice[i] < sets[i % n].size()) break;
      choice[i] = 0;
    }
  }
  for (double& v : best) v *= sign;
  return Gamble(std::move(best));
}

}  // namespace

std::uint64_t strategy_profile_count(const UpperTransitionOperator& t, std::size_t k) {
  return profile_count(vertex_sets(t), k);
}

Gamble brute_force_upper(const UpperTransitionOperator& t, const Gamble& f, std::size_t k,
                         OracleMode mode) {
  return enumerate(t, f, k, mode, true);
}

Gamble brute_force_lower(const UpperTransitionOperator& t, const Gamble& f, std::size_t k,
                         OracleMode mode) {
  return enumerate(t, f, k, mode, false);
}

}  // namespace imc
