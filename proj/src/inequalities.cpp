#include "syz/inequalities.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "syz/errors.hpp"

namespace syz {

namespace {

Rational C(std::int64_t a, std::int64_t b) { return Rational(binomial(a, b)); }

Rational factorial(std::int64_t m) {
  BigInt f = 1;
  for (std::int64_t j = 2; j <= m; ++j) f *= j;
  return Rational(f);
}

Sign sign_of(const Rational& v) {
  const int s = sgn(v);
  return s < 0 ? Sign::Negative : (s == 0 ? Sign::Zero : Sign::Positive);
}

bool in_range(InequalityFunction f, const std::vector<std::int64_t>& a) {
  switch (f) {
    case InequalityFunction::T: {
      const auto [N, d, dJ, r, l] = std::tuple{a[0], a[1], a[2], a[3], a[4]};
      return N >= 3 && 1 <= r && r <= std::min(d - 1, N) && 0 < dJ && dJ <= l && l <= d - r - 1;
    }
    case InequalityFunction::U: {
      const auto [N, d, r, l] = std::tuple{a[0], a[1], a[2], a[3]};
      return N >= 3 && 1 <= r && r <= std::min(d - 1, N) && 0 <= l && l <= d - r - 1;
    }
    case InequalityFunction::V: {
      const auto [d, dJ, N] = std::tuple{a[0], a[1], a[2]};
      return N >= 3 && d > N + 1 && 1 <= dJ && dJ <= d - N;
    }
    case InequalityFunction::Q: {
      const auto [N, d, dJ, t] = std::tuple{a[0], a[1], a[2], a[3]};
      return N >= 3 && d > N + 1 && 1 <= dJ && dJ <= d - 1 && 0 <= t && t <= N && dJ >= N + 1 - t;
    }
    case InequalityFunction::P: {
      const auto [np, kp, N, d, dJ, i] = std::tuple{a[0], a[1], a[2], a[3], a[4], a[5]};
      return N >= 1 && 0 <= i && i <= N && 0 <= kp && kp <= np && binomial(d - dJ + N - i, N) >= kp;
    }
    case InequalityFunction::Brenner2Gap:
      return a[0] >= 1 && a[1] >= 0;
  }
  return false;
}

std::size_t arity(InequalityFunction f) {
  switch (f) {
    case InequalityFunction::T: return 5;
    case InequalityFunction::U: return 4;
    case InequalityFunction::V: return 3;
    case InequalityFunction::Q: return 4;
    case InequalityFunction::P: return 6;
    case InequalityFunction::Brenner2Gap: return 2;
  }
  return 0;
}

class Accumulator {
 public:
  Accumulator(InequalityFunction f, const SweepRanges& ranges, bool keep) : keep_(keep) {
    summary_.function = f;
    summary_.grid = ranges;
    summary_.requirement = requirement_of(f);
  }

  void visit(std::vector<std::int64_t> args) {
    auto t = trace(summary_.function, args);
    ++summary_.points;
    if (!summary_.min || t.value < *summary_.min) {
      summary_.min = t.value;
      summary_.argmin = args;
    }
    const bool bad = summary_.requirement == Requirement::Positive ? t.sign != Sign::Positive
                                                                   : t.sign == Sign::Negative;
    if (bad) ++summary_.violations;
    if (keep_) summary_.traces.push_back(std::move(t));
  }

  SweepSummary take() { return std::move(summary_); }

 private:
  SweepSummary summary_;
  bool keep_;
};

}  // namespace

Rational eval_T(std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t r, std::int64_t l) {
  return Rational(d - dJ) * (C(d + N, N) - C(d - r + N, N) + C(l + N - 1, N - 1)) + dJ -
         Rational(d) * (C(d - dJ + N, N) - C(d - dJ - r + N, N) + C(l - dJ + N - 1, N - 1)) -
         Rational(dJ) * C(l - dJ + N - 1, N - 2);
}

Rational eval_U(std::int64_t N, std::int64_t d, std::int64_t r, std::int64_t l) {
  return Rational(d - l - 1) * (C(d + N, N) - C(d - r + N, N) + C(l + N - 1, N - 1)) -
         Rational(d) * (C(d - l - 1 + N, N) - C(d - l - 1 - r + N, N));
}

Rational eval_V(std::int64_t d, std::int64_t dJ, std::int64_t N) {
  return Rational(d - dJ) * (C(d + N, N) - C(d - 1, N)) - Rational(d) * (C(d - dJ + N, N) - C(d - dJ, N));
}

Rational eval_Q(std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t t) {
  return Rational(d - dJ) * (C(d + N, N) - C(d - 1, N)) - Rational(d) * C(d - dJ + N, N) +
         Rational(d - N - 1 + t) * C(d - dJ + N - t, N);
}

Rational eval_P(std::int64_t n_prime, std::int64_t k_prime, std::int64_t N, std::int64_t d, std::int64_t dJ,
                std::int64_t i) {
  return Rational(i * (n_prime - k_prime)) + Rational(N + 1 - i) * (C(d - dJ + N - i, N) - k_prime + 1);
}

Rational brenner2_gap(std::int64_t N, std::int64_t d) {
  if (N < 1) throw PreconditionError("brenner2_gap needs N >= 1");
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d), static_cast<unsigned long>(N - 1));
  if (d < 0 && (N - 1) % 2 == 1) power = -power;
  Rational bound = Rational(N + 1) / factorial(N - 1) * Rational(power);
  bound.canonicalize();
  Rational gap = C(d + N, N) - C(d - 1, N) - bound;
  gap.canonicalize();
  return gap;
}

std::string_view to_string(InequalityFunction f) {
  switch (f) {
    case InequalityFunction::T: return "T";
    case InequalityFunction::U: return "U";
    case InequalityFunction::V: return "V";
    case InequalityFunction::Q: return "Q";
    case InequalityFunction::P: return "P";
    case InequalityFunction::Brenner2Gap: return "Brenner2Gap";
  }
  return "?";
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

std::string_view to_string(Requirement r) { return r == Requirement::Positive ? "positive" : "nonnegative"; }

InequalityFunction inequality_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "t") return InequalityFunction::T;
  if (s == "u") return InequalityFunction::U;
  if (s == "v") return InequalityFunction::V;
  if (s == "q") return InequalityFunction::Q;
  if (s == "p") return InequalityFunction::P;
  if (s == "brenner2" || s == "brenner2gap") return InequalityFunction::Brenner2Gap;
  throw PreconditionError("unknown inequality function '" + std::string(name) + "'");
}

Requirement requirement_of(InequalityFunction f) {
  switch (f) {
    case InequalityFunction::P:
    case InequalityFunction::Brenner2Gap: return Requirement::NonNegative;
    default: return Requirement::Positive;
  }
}

InequalityTrace trace(InequalityFunction function, const std::vector<std::int64_t>& a) {
  if (a.size() != arity(function)) {
    throw PreconditionError(std::string(to_string(function)) + " takes " + std::to_string(arity(function)) +
                            " arguments");
  }
  Rational value;
  switch (function) {
    case InequalityFunction::T: value = eval_T(a[0], a[1], a[2], a[3], a[4]); break;
    case InequalityFunction::U: value = eval_U(a[0], a[1], a[2], a[3]); break;
    case InequalityFunction::V: value = eval_V(a[0], a[1], a[2]); break;
    case InequalityFunction::Q: value = eval_Q(a[0], a[1], a[2], a[3]); break;
    case InequalityFunction::P: value = eval_P(a[0], a[1], a[2], a[3], a[4], a[5]); break;
    case InequalityFunction::Brenner2Gap: value = brenner2_gap(a[0], a[1]); break;
  }
  value.canonicalize();
  return {function, a, value, sign_of(value), in_range(function, a)};
}

SweepSummary sweep(InequalityFunction function, const SweepRanges& g, bool keep_traces) {
  Accumulator acc(function, g, keep_traces);
  const auto N_lo = std::max<std::int64_t>(g.N_min, function == InequalityFunction::Brenner2Gap ? 1 : 3);
  switch (function) {
    case InequalityFunction::T:
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = g.d_min; d <= g.d_max; ++d)
          for (std::int64_t r = 1; r <= std::min(d - 1, N); ++r)
            for (std::int64_t l = 0; l <= d - r - 1; ++l)
              for (std::int64_t dJ = 1; dJ <= l; ++dJ) acc.visit({N, d, dJ, r, l});
      break;
    case InequalityFunction::U:
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = g.d_min; d <= g.d_max; ++d)
          for (std::int64_t r = 1; r <= std::min(d - 1, N); ++r)
            for (std::int64_t l = 0; l <= d - r - 1; ++l) acc.visit({N, d, r, l});
      break;
    case InequalityFunction::V:
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = std::max(g.d_min, N + 2); d <= g.d_max; ++d)
          for (std::int64_t dJ = 1; dJ <= d - N; ++dJ) acc.visit({d, dJ, N});
      break;
    case InequalityFunction::Q:
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = std::max(g.d_min, N + 2); d <= g.d_max; ++d)
          for (std::int64_t dJ = 1; dJ <= d - 1; ++dJ)
            for (auto t = std::max<std::int64_t>(0, N + 1 - dJ); t <= N; ++t) acc.visit({N, d, dJ, t});
      break;
    case InequalityFunction::P: {
      std::vector<std::pair<std::int64_t, std::int64_t>> cells;
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = std::max(g.d_min, N + 2); d <= g.d_max; ++d) cells.emplace_back(N, d);
      if (cells.empty()) break;
      std::mt19937_64 rng(g.seed);
      auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
      };
      for (std::size_t s = 0; s < g.samples; ++s) {
        const auto [N, d] = cells[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(cells.size()) - 1))];
        const auto dJ = uniform(1, d - 1);
        const auto i = uniform(std::max<std::int64_t>(0, N + 1 - dJ), N);
        const auto n_max = to_int64(binomial(d - N - 1 + N, N));
        const auto cap = std::min(to_int64(binomial(d - dJ + N - i, N)), n_max);
        const auto k_prime = uniform(0, cap);
        const auto n_prime = uniform(k_prime, n_max);
        acc.visit({n_prime, k_prime, N, d, dJ, i});
      }
      break;
    }
    case InequalityFunction::Brenner2Gap:
      for (auto N = N_lo; N <= g.N_max; ++N)
        for (auto d = std::max<std::int64_t>(g.d_min, 0); d <= g.d_max; ++d) acc.visit({N, d});
      break;
  }
  return acc.take();
}

BrennerMarginSplit brenner_margin_split(std::int64_t N, std::int64_t d, std::int64_t n, std::int64_t dJ,
                                        std::int64_t i, std::int64_t k) {
  const std::int64_t faces = to_int64(binomial(d + N, N) - binomial(d - 1, N));
  const std::int64_t d_prime = d - N - 1;
  BrennerMarginSplit s;
  s.n_prime = n - faces;
  s.k_prime = k - to_int64(binomial(d - dJ + N, N) - binomial(d - dJ + N - i, N));
  const std::int64_t shifted = dJ - N - 1 + i;
  s.margin = Rational((d - dJ) * n + dJ - d * k);
  s.inner = Rational((d_prime - shifted) * s.n_prime + shifted - d_prime * s.k_prime);
  s.p = eval_P(s.n_prime, s.k_prime, N, d, dJ, i);
  s.q = eval_Q(N, d, dJ, i);
  return s;
}

}  // namespace syz
