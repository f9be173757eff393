#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "syz/criterion.hpp"
#include "syz/monomial.hpp"

namespace syz {

/// Locates n inside the (r, l) brackets of the faces construction:
///   n = |I'_r| + C(l+N-1, N-1) + i.
/// i >= 1, except that i = 0 is admitted at l = 0 for r >= 2 (the family
/// I'_r u I''_{r,0}); without it the points |I'_r| + 1 would be uncovered.
struct CaseDecomposition {
  int r = 0;
  int l = 0;
  std::int64_t i = 0;

  friend bool operator==(const CaseDecomposition&, const CaseDecomposition&) = default;
};

enum class RouteTag {
  P1Family,
  FaceVertex,
  PropFaces,
  FullSet,
  FacesAndDots,
  BrennerRecursion,
  Case326,
  N2Search,
  Search225,
};

std::string_view to_string(RouteTag tag);

struct ConstructionRoute {
  RouteTag tag = RouteTag::FullSet;
  int N = 0;
  int d = 0;
  std::int64_t n = 0;
  std::optional<CaseDecomposition> faces;  // PropFaces
  std::int64_t dots = 0;                   // FacesAndDots: interior monomials added
  std::shared_ptr<const ConstructionRoute> inner;  // FaceVertex, BrennerRecursion

  /// e.g. "FaceVertex(3,3,5) <- N2Search(2,3,4)".
  std::string describe() const;
};

struct Construction {
  ConstructionRoute route;
  MonomialFamily family;
};

/// {X_0^d, X_0^{(n-2)e} X_1^e, ..., X_1^d} with e = d/(n-1).
/// Throws NoFamilyExists when (n-1) does not divide d.
MonomialFamily gen_p1(int d, int n);

MonomialFamily gen_full(int N, int d);

/// A stable (n-1)-family in X_0..X_{N-1} from the dispatcher, plus X_N^d.
Construction gen_face_vertex(int N, int d, std::int64_t n);

/// Range of n handled by the faces construction: (C(d+N-1,N-1)+1, min(|F_{N,d}|, C(d+N,N)-1)].
std::pair<std::int64_t, std::int64_t> faces_case_range(int N, int d);

CaseDecomposition decompose_faces_case(int N, int d, std::int64_t n);

MonomialFamily gen_prop_faces(int N, int d, std::int64_t n);

/// F_{N,d} plus the first i interior monomials X_0...X_N * X_k^{d-N-1}, k = 0, 1, ...
MonomialFamily gen_faces_and_dots(int N, int d, std::int64_t n);

/// F_{N,d} u {X_0...X_N f : f in I'} with I' a stable family of degree d-N-1.
Construction gen_brenner(int N, int d, std::int64_t n);

MonomialFamily gen_case326();

/// Checker-validated search for a stable n-family of degree d in three variables:
/// greedy seed first, then exhaustive branch-and-bound. Throws SearchExhausted.
MonomialFamily gen_n2_search(int d, std::int64_t n);

/// The first (canonical order) SemistableCertified m-primary 5-subset of the
/// degree-2 monomials in three variables.
MonomialFamily gen_225_semistable();

/// Routes (N, d, n) to its construction. Throws RoutingError when out of range and
/// NoFamilyExists for the N = 1 divisibility obstruction.
Construction dispatch(int N, int d, std::int64_t n);

/// Smallest and largest n the dispatcher accepts for (N, d).
std::pair<std::int64_t, std::int64_t> admissible_n(int N, int d);

/// Verdict the dispatcher's family is expected to receive.
Verdict expected_verdict(int N, int d, std::int64_t n);

}  // namespace syz
