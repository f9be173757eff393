#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "syz/binomial.hpp"

namespace syz {

// Auxiliary functions from the stability proofs of the faces, faces-and-dots and
// Brenner-recursion constructions, evaluated exactly from their binomial closed forms.

Rational eval_T(std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t r, std::int64_t l);
Rational eval_U(std::int64_t N, std::int64_t d, std::int64_t r, std::int64_t l);
Rational eval_V(std::int64_t d, std::int64_t dJ, std::int64_t N);
Rational eval_Q(std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t t);
Rational eval_P(std::int64_t n_prime, std::int64_t k_prime, std::int64_t N, std::int64_t d, std::int64_t dJ,
                std::int64_t i);
/// C(d+N, N) - C(d-1, N) - (N+1)/(N-1)! d^{N-1}, with 0^0 = 1.
Rational brenner2_gap(std::int64_t N, std::int64_t d);

enum class InequalityFunction { T, U, V, Q, P, Brenner2Gap };
enum class Sign { Negative, Zero, Positive };
/// What a sweep point must satisfy to not count as a violation.
enum class Requirement { Positive, NonNegative };

std::string_view to_string(InequalityFunction f);
std::string_view to_string(Sign s);
std::string_view to_string(Requirement r);
/// Accepts T, U, V, Q, P and brenner2 (case-insensitive).
InequalityFunction inequality_from_string(std::string_view name);
Requirement requirement_of(InequalityFunction f);

struct InequalityTrace {
  InequalityFunction function;
  std::vector<std::int64_t> arguments;  // in the evaluator's parameter order
  Rational value;
  Sign sign;
  bool in_proof_range;
};

/// Evaluates `function` at `arguments` and flags whether the point lies in the
/// range the corresponding proof step uses.
InequalityTrace trace(InequalityFunction function, const std::vector<std::int64_t>& arguments);

struct SweepRanges {
  std::int64_t N_min = 3;
  std::int64_t N_max = 5;
  std::int64_t d_min = 2;
  std::int64_t d_max = 10;
  std::size_t samples = 10000;  // P only: randomized points
  std::uint64_t seed = 1;
};

struct SweepSummary {
  InequalityFunction function;
  SweepRanges grid;
  Requirement requirement;
  std::size_t points = 0;
  std::optional<Rational> min;
  std::vector<std::int64_t> argmin;
  std::size_t violations = 0;
  std::vector<InequalityTrace> traces;
};

/// Evaluates `function` over its proof domain restricted to the (N, d) grid
/// (randomly sampled for P), in ascending parameter order.
SweepSummary sweep(InequalityFunction function, const SweepRanges& ranges, bool keep_traces = true);

/// The terms of the margin split used by the Brenner recursion, for a witness g of
/// degree dJ missing i variables with k multiples in a family of n members:
///   (d - dJ) n + dJ - d k = inner + P(n', k', N, d, dJ, i) + Q(N, d, dJ, i).
struct BrennerMarginSplit {
  std::int64_t n_prime;
  std::int64_t k_prime;
  Rational margin;
  Rational inner;
  Rational p;
  Rational q;
};

BrennerMarginSplit brenner_margin_split(std::int64_t N, std::int64_t d, std::int64_t n, std::int64_t dJ,
                                        std::int64_t i, std::int64_t k);

}  // namespace syz
