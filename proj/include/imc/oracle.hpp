#pragma once

#include <cstddef>
#include <cstdint>

#include "imc/gamble.hpp"
#include "imc/transition_operator.hpp"

namespace imc {

/// Brute-force reference for upper and lower expectations.
///
/// Enumerates every Markov strategy profile (one vertex of each row's credal
/// set per time step and state), propagates the distribution forward from each
/// initial state, and keeps the extreme expectation. Intended for desk-scale
/// models only.
enum class OracleMode { Instant, Average };

inline constexpr std::uint64_t kMaxStrategyProfiles = 10'000'000;

/// Number of profiles enumerated for horizon k, saturating at UINT64_MAX.
std::uint64_t strategy_profile_count(const UpperTransitionOperator& t, std::size_t k);

/// Per initial state, the maximum over profiles of E[f(X_k)] (instant) or of
/// E[(f(X_0) + ... + f(X_k)) / (k+1)] (average). Throws SizeLimit when the
/// profile count exceeds kMaxStrategyProfiles.
Gamble brute_force_upper(const UpperTransitionOperator& t, const Gamble& f, std::size_t k,
                         OracleMode mode);

/// Same enumeration, minimizing.
Gamble brute_force_lower(const UpperTransitionOperator& t, const Gamble& f, std::size_t k,
                         OracleMode mode);

}  // namespace imc
