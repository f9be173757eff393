#include "syz/criterion.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "syz/errors.hpp"

namespace syz {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("margin overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("margin overflow");
  return r;
}

void require_checkable(const MonomialFamily& family) {
  if (family.size() < 2) throw PreconditionError("criterion needs at least two generators");
  if (!is_m_primary(family)) throw PreconditionError("family does not generate an m-primary ideal");
}

StabilityCertificate start_certificate(const MonomialFamily& family, const char* method) {
  StabilityCertificate cert;
  cert.N = family.N();
  cert.d = family.d();
  cert.n = static_cast<std::int64_t>(family.size());
  cert.primary_check = true;
  cert.method = method;
  return cert;
}

// The witnesses are all proper subsets: an m-primary family has gcd 1.
void settle_verdict(StabilityCertificate& cert) {
  for (const auto& w : cert.witnesses) {
    if (!cert.worst || w.margin < cert.worst->margin) cert.worst = w;
  }
  if (!cert.worst || cert.worst->margin > 0) {
    cert.verdict = Verdict::StableCertified;
  } else if (cert.worst->margin == 0) {
    cert.verdict = Verdict::SemistableCertified;
  } else {
    cert.verdict = Verdict::CriterionViolated;
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StableCertified: return "StableCertified";
    case Verdict::SemistableCertified: return "SemistableCertified";
    case Verdict::CriterionViolated: return "CriterionViolated";
    case Verdict::NotSemistable: return "NotSemistable";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::StableCertified, Verdict::SemistableCertified, Verdict::CriterionViolated,
                 Verdict::NotSemistable}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

Rational SlopeData::a(std::int64_t j) const {
  if (j < 2) throw PreconditionError("a(d, j) needs j >= 2");
  Rational r(-j * d, j - 1);
  r.canonicalize();
  return r;
}

std::int64_t criterion_margin(std::int64_t d, std::int64_t n, std::int64_t gcd_degree, std::int64_t k) {
  return checked_add(checked_add(checked_mul(d - gcd_degree, n), gcd_degree), -checked_mul(d, k));
}

bool is_m_primary(const MonomialFamily& family) {
  for (std::size_t i = 0; i < family.num_vars(); ++i) {
    if (!family.contains(Monomial::pure_power(family.num_vars(), i, family.d()))) return false;
  }
  return true;
}

StabilityCertificate check_family(const MonomialFamily& family) {
  require_checkable(family);
  auto cert = start_certificate(family, "maximal-subset");
  if (family.size() == 2) {
    cert.rank_one = true;
    return cert;
  }
  const auto n = static_cast<std::int64_t>(family.size());
  std::vector<Monomial> multiples;
  for (int e = 1; e < family.d(); ++e) {
    for (const auto& g : enumerate_monomials(family.N(), e)) {
      multiples.clear();
      for (const auto& m : family) {
        if (divides(g, m)) multiples.push_back(m);
      }
      if (multiples.size() < 2 || gcd_of(multiples) != g) continue;
      const auto k = static_cast<std::int64_t>(multiples.size());
      cert.witnesses.push_back({g, e, k, criterion_margin(family.d(), n, e, k)});
    }
  }
  settle_verdict(cert);
  return cert;
}

std::size_t default_oracle_bound() {
  if (const char* env = std::getenv("SYZ_ORACLE_MAX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 16;
}

StabilityCertificate brute_force_check(const MonomialFamily& family, std::size_t max_size) {
  if (family.size() > max_size) {
    throw SizeError("brute-force oracle limited to " + std::to_string(max_size) + " members, got " +
                    std::to_string(family.size()));
  }
  if (family.size() > 62) throw SizeError("brute-force oracle cannot index more than 62 members");
  require_checkable(family);
  auto cert = start_certificate(family, "brute-force");
  if (family.size() == 2) {
    cert.rank_one = true;
    return cert;
  }

  const auto members = family.members();
  const std::size_t n = members.size();
  // Largest subset seen for each gcd; the margin only depends on (deg gcd, |J|).
  std::map<std::vector<int>, std::int64_t> largest;

  // DFS over subsets in index order, carrying the running gcd. Once the gcd is 1
  // every superset has d_J = 0 and is skipped, so the branch is cut.
  struct Frame {
    std::size_t next;
    Monomial g;
    std::int64_t k;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < n; ++i) stack.push_back({i + 1, members[i], 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (std::size_t j = f.next; j < n; ++j) {
      Monomial g = gcd(f.g, members[j]);
      if (g.degree() == 0) continue;
      const std::int64_t k = f.k + 1;
      auto key = std::vector<int>(g.exponents().begin(), g.exponents().end());
      auto [it, inserted] = largest.emplace(std::move(key), k);
      if (!inserted) it->second = std::max(it->second, k);
      stack.push_back({j + 1, std::move(g), k});
    }
  }

  const auto nn = static_cast<std::int64_t>(n);
  std::vector<GcdWitness> witnesses;
  for (const auto& [exps, k] : largest) {
    Monomial g(exps);
    witnesses.push_back({g, g.degree(), k, criterion_margin(family.d(), nn, g.degree(), k)});
  }
  std::sort(witnesses.begin(), witnesses.end(), [](const GcdWitness& a, const GcdWitness& b) {
    if (a.gcd_degree != b.gcd_degree) return a.gcd_degree < b.gcd_degree;
    return canonical_before(a.g, b.g);
  });
  cert.witnesses = std::move(witnesses);
  settle_verdict(cert);
  return cert;
}

std::int64_t SplittingType::sum() const {
  std::int64_t s = 0;
  for (auto t : twists) s += t;
  return s;
}

bool SplittingType::balanced() const {
  return std::adjacent_find(twists.begin(), twists.end(), std::not_equal_to<>()) == twists.end();
}

SplittingType splitting_type_p1(const MonomialFamily& family) {
  if (family.N() != 1) throw DimensionError("splitting type is only computed on P^1");
  if (family.size() < 2 || !is_m_primary(family)) {
    throw PreconditionError("splitting type needs an m-primary family of at least two members");
  }
  // Canonical order on two variables is already decreasing X_0-exponent.
  SplittingType st;
  const auto members = family.members();
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    st.twists.push_back(-lcm(members[i], members[i + 1]).degree());
  }
  std::sort(st.twists.begin(), st.twists.end(), std::greater<>());
  return st;
}

Verdict is_semistable_p1(const MonomialFamily& family) {
  const auto st = splitting_type_p1(family);
  if (!st.balanced()) return Verdict::NotSemistable;
  return family.size() == 2 ? Verdict::StableCertified : Verdict::SemistableCertified;
}

bool strategy_x0_holds(const MonomialFamily& family) {
  const auto members = family.members();
  for (int e = 1; e < family.d(); ++e) {
    const auto x0_count = count_multiples(Monomial::pure_power(family.num_vars(), 0, e), members);
    for (const auto& g : enumerate_monomials(family.N(), e)) {
      if (count_multiples(g, members) > x0_count) return false;
    }
  }
  return true;
}

}  // namespace syz
