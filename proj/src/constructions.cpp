#include "syz/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "syz/errors.hpp"

namespace syz {

namespace {

std::int64_t binom(std::int64_t a, std::int64_t b) { return to_int64(binomial(a, b)); }

std::int64_t total_count(int N, int d) { return binom(d + N, N); }
std::int64_t faces_count(int N, int d) { return binom(d + N, N) - binom(d - 1, N); }

std::string triple(int N, int d, std::int64_t n) {
  std::ostringstream os;
  os << '(' << N << ',' << d << ',' << n << ')';
  return os.str();
}

[[noreturn]] void out_of_range(const char* what, int N, int d, std::int64_t n) {
  throw RoutingError(std::string(what) + ": " + triple(N, d, n) + " is outside its range");
}

Monomial all_variables(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 1)); }

// Monomials X_from * ... * X_to (inclusive), empty product when from > to.
Monomial variable_product(std::size_t num_vars, int from, int to) {
  std::vector<int> e(num_vars, 0);
  for (int j = from; j <= to; ++j) e[static_cast<std::size_t>(j)] = 1;
  return Monomial(std::move(e));
}

// ---- N = 2 search ---------------------------------------------------------

// Degree-d monomials in three variables with, for each, the candidate gcds
// (degree 1..d-1) dividing it. The criterion holds strictly iff every candidate
// g of degree e divides at most cap(e) members: a non-maximal g shares its
// multiple-set with a higher-degree gcd whose margin is smaller.
class CapSearch {
 public:
  CapSearch(int d, std::int64_t n, bool strict) : d_(d), n_(n) {
    all_ = enumerate_monomials(2, d);
    for (int e = 1; e < d; ++e) {
      for (auto& g : enumerate_monomials(2, e)) {
        const std::int64_t budget = (d - e) * n + e - (strict ? 1 : 0);
        gcds_.push_back(g);
        caps_.push_back(budget / d);
        degrees_.push_back(e);
      }
    }
    divisors_.resize(all_.size());
    for (std::size_t m = 0; m < all_.size(); ++m) {
      for (std::size_t g = 0; g < gcds_.size(); ++g) {
        if (divides(gcds_[g], all_[m])) divisors_[m].push_back(g);
      }
    }
    counts_.assign(gcds_.size(), 0);
  }

  std::optional<MonomialFamily> greedy() {
    reset();
    std::vector<std::size_t> chosen = pure_powers();
    for (auto m : chosen) add(m);
    std::vector<bool> used(all_.size(), false);
    for (auto m : chosen) used[m] = true;
    while (static_cast<std::int64_t>(chosen.size()) < n_) {
      std::optional<std::size_t> best;
      std::int64_t best_margin = 0;
      for (std::size_t m = 0; m < all_.size(); ++m) {
        if (used[m]) continue;
        add(m);
        const auto margin = worst_margin();
        remove(m);
        if (!best || margin > best_margin) {
          best = m;
          best_margin = margin;
        }
      }
      if (!best) return std::nullopt;
      used[*best] = true;
      chosen.push_back(*best);
      add(*best);
    }
    if (!within_caps()) return std::nullopt;
    return family_of(chosen);
  }

  std::optional<MonomialFamily> exhaustive() {
    reset();
    std::vector<std::size_t> chosen = pure_powers();
    for (auto m : chosen) add(m);
    if (!within_caps()) return std::nullopt;
    std::vector<std::size_t> pool;
    for (std::size_t m = 0; m < all_.size(); ++m) {
      if (std::find(chosen.begin(), chosen.end(), m) == chosen.end()) pool.push_back(m);
    }
    if (dfs(pool, 0, chosen)) return family_of(chosen);
    return std::nullopt;
  }

 private:
  void reset() { std::fill(counts_.begin(), counts_.end(), 0); }

  std::vector<std::size_t> pure_powers() const {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < all_.size(); ++m) {
      if (all_[m].missing_variables() == 2) out.push_back(m);
    }
    return out;
  }

  void add(std::size_t m) {
    for (auto g : divisors_[m]) ++counts_[g];
  }
  void remove(std::size_t m) {
    for (auto g : divisors_[m]) --counts_[g];
  }

  bool fits(std::size_t m) const {
    for (auto g : divisors_[m]) {
      if (counts_[g] + 1 > caps_[g]) return false;
    }
    return true;
  }

  bool within_caps() const {
    for (std::size_t g = 0; g < counts_.size(); ++g) {
      if (counts_[g] > caps_[g]) return false;
    }
    return true;
  }

  std::int64_t worst_margin() const {
    std::int64_t worst = std::numeric_limits<std::int64_t>::max();
    for (std::size_t g = 0; g < counts_.size(); ++g) {
      if (counts_[g] < 2) continue;
      worst = std::min(worst, criterion_margin(d_, n_, degrees_[g], counts_[g]));
    }
    return worst;
  }

  bool dfs(const std::vector<std::size_t>& pool, std::size_t from, std::vector<std::size_t>& chosen) {
    const auto need = n_ - static_cast<std::int64_t>(chosen.size());
    if (need == 0) return true;
    if (static_cast<std::int64_t>(pool.size() - from) < need) return false;
    for (std::size_t p = from; p < pool.size(); ++p) {
      if (static_cast<std::int64_t>(pool.size() - p) < need) break;
      const auto m = pool[p];
      if (!fits(m)) continue;
      add(m);
      chosen.push_back(m);
      if (dfs(pool, p + 1, chosen)) return true;
      chosen.pop_back();
      remove(m);
    }
    return false;
  }

  MonomialFamily family_of(const std::vector<std::size_t>& chosen) const {
    std::vector<Monomial> members;
    for (auto m : chosen) members.push_back(all_[m]);
    return MonomialFamily(2, d_, std::move(members));
  }

  int d_;
  std::int64_t n_;
  std::vector<Monomial> all_;
  std::vector<Monomial> gcds_;
  std::vector<std::int64_t> caps_;
  std::vector<int> degrees_;
  std::vector<std::vector<std::size_t>> divisors_;
  std::vector<std::int64_t> counts_;
};

std::mutex search_cache_mutex;
std::map<std::pair<int, std::int64_t>, MonomialFamily> search_cache;

}  // namespace

std::string_view to_string(RouteTag tag) {
  switch (tag) {
    case RouteTag::P1Family: return "P1Family";
    case RouteTag::FaceVertex: return "FaceVertex";
    case RouteTag::PropFaces: return "PropFaces";
    case RouteTag::FullSet: return "FullSet";
    case RouteTag::FacesAndDots: return "FacesAndDots";
    case RouteTag::BrennerRecursion: return "BrennerRecursion";
    case RouteTag::Case326: return "Case326";
    case RouteTag::N2Search: return "N2Search";
    case RouteTag::Search225: return "Search225";
  }
  return "?";
}

std::string ConstructionRoute::describe() const {
  std::ostringstream os;
  os << to_string(tag) << triple(N, d, n);
  if (faces) os << "[r=" << faces->r << ",l=" << faces->l << ",i=" << faces->i << ']';
  if (tag == RouteTag::FacesAndDots) os << "[dots=" << dots << ']';
  if (inner) os << " <- " << inner->describe();
  return os.str();
}

MonomialFamily gen_p1(int d, int n) {
  if (d < 1 || n < 2 || n > d + 1) out_of_range("gen_p1", 1, d, n);
  if (d % (n - 1) != 0) {
    throw NoFamilyExists("no semistable family of " + std::to_string(n) + " monomials of degree " +
                         std::to_string(d) + " on P^1: " + std::to_string(n - 1) + " does not divide " +
                         std::to_string(d));
  }
  const int e = d / (n - 1);
  std::vector<Monomial> members;
  for (int j = 0; j < n; ++j) members.push_back(Monomial{d - j * e, j * e});
  return MonomialFamily(1, d, std::move(members));
}

MonomialFamily gen_full(int N, int d) { return hypertetrahedron(N, d); }

Construction gen_face_vertex(int N, int d, std::int64_t n) {
  if (N < 3 || d < 1 || n < N + 1 || n > binom(d + N - 1, N - 1) + 1 || (N == 3 && d == 2 && n == 6)) {
    out_of_range("gen_face_vertex", N, d, n);
  }
  auto inner = dispatch(N - 1, d, n - 1);
  const auto vars = static_cast<std::size_t>(N) + 1;
  std::vector<Monomial> members;
  for (const auto& m : inner.family) members.push_back(m.lifted(vars));
  members.push_back(Monomial::pure_power(vars, static_cast<std::size_t>(N), d));

  ConstructionRoute route{RouteTag::FaceVertex, N, d, n, std::nullopt, 0,
                          std::make_shared<const ConstructionRoute>(std::move(inner.route))};
  return {std::move(route), MonomialFamily(N, d, std::move(members))};
}

std::pair<std::int64_t, std::int64_t> faces_case_range(int N, int d) {
  return {binom(d + N - 1, N - 1) + 1, std::min(faces_count(N, d), total_count(N, d) - 1)};
}

CaseDecomposition decompose_faces_case(int N, int d, std::int64_t n) {
  if (N < 3 || d < 2) out_of_range("decompose_faces_case", N, d, n);
  const auto [lo, hi] = faces_case_range(N, d);
  if (n <= lo || n > hi) out_of_range("decompose_faces_case", N, d, n);

  const std::int64_t total = total_count(N, d);
  std::optional<CaseDecomposition> found;
  int matches = 0;
  for (int r = 1; r <= std::min(d - 1, N); ++r) {
    const std::int64_t base = total - binom(d - r + N, N);  // |I'_r|
    for (int l = 0; l <= d - r - 1; ++l) {
      const std::int64_t below = base + binom(l + N - 1, N - 1);
      const std::int64_t top = base + binom(l + N, N - 1);
      const bool zero_allowed = (l == 0 && r >= 2);
      if ((n > below || (zero_allowed && n == below)) && n <= top) {
        ++matches;
        if (!found) found = CaseDecomposition{r, l, n - below};
      }
    }
  }
  if (matches != 1) {
    throw InternalConsistencyError("faces brackets matched " + std::to_string(matches) + " times at " +
                                   triple(N, d, n));
  }
  return *found;
}

MonomialFamily gen_prop_faces(int N, int d, std::int64_t n) {
  const auto c = decompose_faces_case(N, d, n);
  const auto vars = static_cast<std::size_t>(N) + 1;
  const auto sr = static_cast<std::size_t>(N - c.r);  // index of X_{N-r}
  const auto sN = static_cast<std::size_t>(N);

  std::vector<Monomial> members;
  // I'_r: monomials in faces N-r+1 .. N.
  for (auto& m : enumerate_monomials(N, d)) {
    for (int j = N - c.r + 1; j <= N; ++j) {
      if (m.exponent(static_cast<std::size_t>(j)) == 0) {
        members.push_back(m);
        break;
      }
    }
  }
  const Monomial middle = variable_product(vars, N - c.r + 1, N - 1);
  // I''_{r,l}: X_{N-r+1}..X_{N-1} X_N^{d-r-l+1} f, deg f = l, X_{N-r} absent from f.
  const Monomial upper = middle * Monomial::pure_power(vars, sN, d - c.r - c.l + 1);
  for (auto& f : enumerate_monomials(N, c.l)) {
    if (f.exponent(sr) == 0) members.push_back(upper * f);
  }
  // I'''_{r,l}: the first i of X_{N-r+1}..X_{N-1} X_N^{d-r-l} f, deg f = l+1, X_{N-r}, X_N absent.
  // Canonical order puts the largest X_0-degrees first.
  const Monomial lower = middle * Monomial::pure_power(vars, sN, d - c.r - c.l);
  std::int64_t taken = 0;
  for (auto& f : enumerate_monomials(N, c.l + 1)) {
    if (taken == c.i) break;
    if (f.exponent(sr) != 0 || f.exponent(sN) != 0) continue;
    members.push_back(lower * f);
    ++taken;
  }
  MonomialFamily family(N, d, std::move(members));
  if (static_cast<std::int64_t>(family.size()) != n) {
    throw InternalConsistencyError("faces construction produced " + std::to_string(family.size()) +
                                   " members at " + triple(N, d, n));
  }
  return family;
}

MonomialFamily gen_faces_and_dots(int N, int d, std::int64_t n) {
  if (N < 3 || d <= N + 1) out_of_range("gen_faces_and_dots", N, d, n);
  const auto faces = faces_count(N, d);
  if (n <= faces || n > faces + N + 1) out_of_range("gen_faces_and_dots", N, d, n);
  const auto vars = static_cast<std::size_t>(N) + 1;
  auto members = enumerate_monomials(N, d);
  std::erase_if(members, [](const Monomial& m) { return m.missing_variables() == 0; });
  const Monomial interior = all_variables(vars);
  for (std::int64_t k = 0; k < n - faces; ++k) {
    members.push_back(interior * Monomial::pure_power(vars, static_cast<std::size_t>(k), d - N - 1));
  }
  return MonomialFamily(N, d, std::move(members));
}

Construction gen_brenner(int N, int d, std::int64_t n) {
  if (N < 3 || d <= N + 1) out_of_range("gen_brenner", N, d, n);
  const auto faces = faces_count(N, d);
  if (n <= faces + N + 1 || n > total_count(N, d)) out_of_range("gen_brenner", N, d, n);
  auto inner = dispatch(N, d - N - 1, n - faces);
  auto members = enumerate_monomials(N, d);
  std::erase_if(members, [](const Monomial& m) { return m.missing_variables() == 0; });
  const Monomial interior = all_variables(static_cast<std::size_t>(N) + 1);
  for (const auto& f : inner.family) members.push_back(interior * f);

  ConstructionRoute route{RouteTag::BrennerRecursion, N, d, n, std::nullopt, 0,
                          std::make_shared<const ConstructionRoute>(std::move(inner.route))};
  return {std::move(route), MonomialFamily(N, d, std::move(members))};
}

MonomialFamily gen_case326() {
  return MonomialFamily(3, 2,
                        {Monomial{2, 0, 0, 0}, Monomial{0, 2, 0, 0}, Monomial{0, 0, 2, 0},
                         Monomial{0, 0, 0, 2}, Monomial{1, 1, 0, 0}, Monomial{0, 0, 1, 1}});
}

MonomialFamily gen_n2_search(int d, std::int64_t n) {
  if (d < 1 || n < 3 || n > total_count(2, d)) out_of_range("gen_n2_search", 2, d, n);
  {
    std::lock_guard lock(search_cache_mutex);
    if (auto it = search_cache.find({d, n}); it != search_cache.end()) return it->second;
  }
  CapSearch search(d, n, /*strict=*/true);
  auto found = search.greedy();
  if (!found) found = search.exhaustive();
  if (!found) {
    throw SearchExhausted("no family of " + std::to_string(n) + " degree-" + std::to_string(d) +
                          " monomials in three variables satisfies the criterion strictly");
  }
  if (check_family(*found).verdict != Verdict::StableCertified) {
    throw InternalConsistencyError("search result for " + triple(2, d, n) + " failed certification");
  }
  std::lock_guard lock(search_cache_mutex);
  search_cache.emplace(std::pair{d, n}, *found);
  return *found;
}

MonomialFamily gen_225_semistable() {
  const auto all = enumerate_monomials(2, 2);
  for (std::size_t skip = all.size(); skip-- > 0;) {
    // Dropping the last member first enumerates 5-subsets in lexicographic index order.
    std::vector<Monomial> members;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != skip) members.push_back(all[j]);
    }
    MonomialFamily family(2, 2, std::move(members));
    if (!is_m_primary(family)) continue;
    if (check_family(family).verdict == Verdict::SemistableCertified) return family;
  }
  throw SearchExhausted("no semistable 5-family of quadrics in three variables");
}

std::pair<std::int64_t, std::int64_t> admissible_n(int N, int d) {
  if (N < 1 || d < 1) throw RoutingError("need N >= 1 and d >= 1");
  if (N == 1) return {2, d + 1};
  return {N + 1, total_count(N, d)};
}

Verdict expected_verdict(int N, int d, std::int64_t n) {
  if (N == 1) return n == 2 ? Verdict::StableCertified : Verdict::SemistableCertified;
  if (N == 2 && d == 2 && n == 5) return Verdict::SemistableCertified;
  return Verdict::StableCertified;
}

Construction dispatch(int N, int d, std::int64_t n) {
  if (N < 1 || d < 1) out_of_range("dispatch", N, d, n);
  const auto [lo, hi] = admissible_n(N, d);
  if (n < lo || n > hi) out_of_range("dispatch", N, d, n);

  auto leaf = [&](RouteTag tag, MonomialFamily family) {
    return Construction{ConstructionRoute{tag, N, d, n, std::nullopt, 0, nullptr}, std::move(family)};
  };

  if (N == 1) return leaf(RouteTag::P1Family, gen_p1(d, static_cast<int>(n)));
  if (N == 2) {
    if (d == 2 && n == 5) return leaf(RouteTag::Search225, gen_225_semistable());
    return leaf(RouteTag::N2Search, gen_n2_search(d, n));
  }
  if (N == 3 && d == 2 && n == 6) return leaf(RouteTag::Case326, gen_case326());
  if (n <= binom(d + N - 1, N - 1) + 1) return gen_face_vertex(N, d, n);
  if (n == hi && d <= N + 1) return leaf(RouteTag::FullSet, gen_full(N, d));
  const auto faces = faces_count(N, d);
  if (n <= faces) {
    auto c = decompose_faces_case(N, d, n);
    auto built = leaf(RouteTag::PropFaces, gen_prop_faces(N, d, n));
    built.route.faces = c;
    return built;
  }
  if (n <= faces + N + 1) {
    auto built = leaf(RouteTag::FacesAndDots, gen_faces_and_dots(N, d, n));
    built.route.dots = n - faces;
    return built;
  }
  return gen_brenner(N, d, n);
}

}  // namespace syz
