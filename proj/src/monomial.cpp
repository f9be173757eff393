#include "syz/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "syz/errors.hpp"

namespace syz {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    std::ostringstream msg;
    msg << op << ": monomials in " << a.num_vars() << " and " << b.num_vars() << " variables";
    throw DimensionError(msg.str());
  }
}

// Fills exponents[pos..] with every composition of `remaining`, X_pos-exponent descending.
void compositions(std::vector<int>& exponents, std::size_t pos, int remaining,
                  std::vector<Monomial>& out) {
  if (pos + 1 == exponents.size()) {
    exponents[pos] = remaining;
    out.emplace_back(exponents);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    exponents[pos] = a;
    compositions(exponents, pos + 1, remaining - a, out);
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::vector<int>(exponents)) {}

Monomial Monomial::pure_power(std::size_t num_vars, std::size_t var, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

std::size_t Monomial::missing_variables() const {
  return static_cast<std::size_t>(std::count(exponents_.begin(), exponents_.end(), 0));
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_vars(*this, other, "product");
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lifted(std::size_t num_vars) const {
  if (num_vars < exponents_.size()) throw DimensionError("cannot lift into fewer variables");
  std::vector<int> e(exponents_);
  e.resize(num_vars, 0);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'X' << i;
    if (exponents_[i] > 1) os << '^' << exponents_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

int degree(const Monomial& m) { return m.degree(); }

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "gcd");
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "lcm");
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

bool divides(const Monomial& g, const Monomial& m) {
  require_same_vars(g, m, "divides");
  auto ge = g.exponents();
  auto me = m.exponents();
  for (std::size_t i = 0; i < ge.size(); ++i) {
    if (ge[i] > me[i]) return false;
  }
  return true;
}

bool canonical_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ae = a.exponents();
  auto be = b.exponents();
  return std::lexicographical_compare(be.begin(), be.end(), ae.begin(), ae.end());
}

MonomialFamily::MonomialFamily(int N, int d, std::vector<Monomial> members)
    : N_(N), d_(d), members_(std::move(members)) {
  if (N_ < 1) throw PreconditionError("family needs N >= 1");
  if (d_ < 1) throw PreconditionError("family needs d >= 1");
  for (const auto& m : members_) {
    if (m.num_vars() != num_vars()) {
      throw DimensionError("member " + m.to_string() + " has wrong number of variables");
    }
    if (m.degree() != d_) {
      throw PreconditionError("member " + m.to_string() + " does not have degree " +
                              std::to_string(d_));
    }
  }
  std::sort(members_.begin(), members_.end(), CanonicalOrder{});
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionError("family members must be pairwise distinct");
  }
}

bool MonomialFamily::contains(const Monomial& m) const {
  return std::binary_search(members_.begin(), members_.end(), m, CanonicalOrder{});
}

std::vector<Monomial> enumerate_monomials(int N, int e) {
  if (N < 1) throw PreconditionError("enumerate_monomials needs N >= 1");
  if (e < 0) throw PreconditionError("enumerate_monomials needs e >= 0");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(to_int64(binomial(e + N, N))));
  std::vector<int> exponents(static_cast<std::size_t>(N) + 1, 0);
  compositions(exponents, 0, e, out);
  return out;
}

MonomialFamily faces_family(int N, int d) {
  auto all = enumerate_monomials(N, d);
  std::erase_if(all, [](const Monomial& m) { return m.missing_variables() == 0; });
  return MonomialFamily(N, d, std::move(all));
}

MonomialFamily hypertetrahedron(int N, int d) { return MonomialFamily(N, d, enumerate_monomials(N, d)); }

MonomialFamily multiples_in_family(const Monomial& g, const MonomialFamily& family) {
  if (g.num_vars() != family.num_vars()) throw DimensionError("multiples_in_family: variable count");
  std::vector<Monomial> out;
  for (const auto& m : family) {
    if (divides(g, m)) out.push_back(m);
  }
  return MonomialFamily(family.N(), family.d(), std::move(out));
}

std::size_t count_multiples(const Monomial& g, std::span<const Monomial> members) {
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [&](const Monomial& m) { return divides(g, m); }));
}

Monomial gcd_of(std::span<const Monomial> members) {
  if (members.empty()) throw PreconditionError("gcd of an empty set");
  Monomial g = members.front();
  for (const auto& m : members.subspan(1)) g = gcd(g, m);
  return g;
}

}  // namespace syz
