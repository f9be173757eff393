#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "syz/binomial.hpp"

namespace syz {

/// A monomial X_0^{i_0} ... X_N^{i_N}, stored as its dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents);

  /// X_var^power in num_vars variables.
  static Monomial pure_power(std::size_t num_vars, std::size_t var, int power);
  /// The constant monomial 1 in num_vars variables.
  static Monomial one(std::size_t num_vars);

  std::size_t num_vars() const { return exponents_.size(); }
  int exponent(std::size_t var) const { return exponents_.at(var); }
  std::span<const int> exponents() const { return exponents_; }
  int degree() const { return degree_; }

  /// Variables that do not occur.
  std::size_t missing_variables() const;

  Monomial operator*(const Monomial& other) const;

  /// Same monomial in more variables (new trailing exponents are zero).
  Monomial lifted(std::size_t num_vars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

int degree(const Monomial& m);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& g, const Monomial& m);

/// Graded lex, X_0 > X_1 > ... > X_N, greatest first: true iff `a` comes before `b`.
bool canonical_before(const Monomial& a, const Monomial& b);

struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_before(a, b); }
};

/// A face of the degree-d hypertetrahedron: monomials in which X_index does not occur.
struct Face {
  std::size_t index = 0;
  bool contains(const Monomial& m) const { return m.exponent(index) == 0; }
};

/// A set of distinct degree-d monomials in N+1 variables, kept in canonical order.
class MonomialFamily {
 public:
  MonomialFamily(int N, int d, std::vector<Monomial> members);

  int N() const { return N_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(N_) + 1; }
  int d() const { return d_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::span<const Monomial> members() const { return members_; }
  const Monomial& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialFamily&, const MonomialFamily&) = default;

 private:
  int N_;
  int d_;
  std::vector<Monomial> members_;
};

/// All monomials of degree e in N+1 variables, canonical order.
std::vector<Monomial> enumerate_monomials(int N, int e);

/// F_{N,d}: degree-d monomials missing at least one variable.
MonomialFamily faces_family(int N, int d);

/// The full degree-d hypertetrahedron.
MonomialFamily hypertetrahedron(int N, int d);

/// Members of `family` divisible by g, canonical order.
MonomialFamily multiples_in_family(const Monomial& g, const MonomialFamily& family);

/// Number of members of `family` divisible by g.
std::size_t count_multiples(const Monomial& g, std::span<const Monomial> members);

/// gcd of a non-empty range of monomials.
Monomial gcd_of(std::span<const Monomial> members);

}  // namespace syz
