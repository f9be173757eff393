#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syz/binomial.hpp"
#include "syz/monomial.hpp"

namespace syz {

enum class Verdict {
  StableCertified,
  SemistableCertified,
  CriterionViolated,  // the sufficient criterion fails; says nothing about N >= 2 stability
  NotSemistable,      // only produced by the exact P^1 decider
};

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Slope bookkeeping for a syzygy bundle of n equal-degree generators.
struct SlopeData {
  std::int64_t n;
  std::int64_t d;

  std::int64_t rank() const { return n - 1; }
  std::int64_t c1() const { return -d * n; }
  Rational slope() const {
    Rational s(c1(), rank());
    s.canonicalize();
    return s;
  }
  /// a_{d,j} = -j d / (j - 1), for j >= 2.
  Rational a(std::int64_t j) const;
};

/// Exact margin (d - d_J) n + d_J - d k of the equal-degree criterion.
std::int64_t criterion_margin(std::int64_t d, std::int64_t n, std::int64_t gcd_degree, std::int64_t k);

struct GcdWitness {
  Monomial g;
  int gcd_degree = 0;
  std::int64_t k = 0;
  std::int64_t margin = 0;
};

struct StabilityCertificate {
  Verdict verdict = Verdict::StableCertified;
  int N = 0;
  int d = 0;
  std::int64_t n = 0;
  bool primary_check = false;
  bool rank_one = false;  // n = 2: line bundle, stable without evaluating witnesses
  std::string method;     // "maximal-subset" or "brute-force"
  std::vector<GcdWitness> witnesses;
  std::optional<GcdWitness> worst;

  std::optional<std::int64_t> min_margin() const {
    return worst ? std::optional<std::int64_t>(worst->margin) : std::nullopt;
  }
};

bool is_m_primary(const MonomialFamily& family);

/// Certifies `family` by evaluating every candidate gcd g of degree 1..d-1 whose
/// multiple-set J_g has at least two members and gcd exactly g.
/// Throws PreconditionError for n < 2 or a non-primary family.
StabilityCertificate check_family(const MonomialFamily& family);

/// Bound read from SYZ_ORACLE_MAX, default 16.
std::size_t default_oracle_bound();

/// Exponential oracle: every subset J with |J| >= 2 and deg gcd(J) >= 1.
/// Witnesses are the largest subset seen per distinct gcd.
StabilityCertificate brute_force_check(const MonomialFamily& family,
                                       std::size_t max_size = default_oracle_bound());

struct SplittingType {
  std::vector<std::int64_t> twists;
  std::int64_t sum() const;
  bool balanced() const;
};

/// Splitting type on P^1 from the consecutive-pair syzygies.
SplittingType splitting_type_p1(const MonomialFamily& family);

/// Exact P^1 decision: StableCertified, SemistableCertified or NotSemistable.
Verdict is_semistable_p1(const MonomialFamily& family);

/// No degree-e monomial divides more members than X_0^e, for 1 <= e <= d-1.
bool strategy_x0_holds(const MonomialFamily& family);

}  // namespace syz
