#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "w0sig/linalg.hpp"

namespace w0sig {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie algebra: Cartan type plus rank.
///
/// Valid ranks are A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2. The
/// low-rank coincidences B1=C1=A1, C2=B2 and D3=A3 are resolved by
/// normalize_alias() at the input boundary; the math core accepts C2 and D3
/// as given.
struct AlgebraId {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Throws InvalidInput naming the violated rank constraint.
void validate(const AlgebraId& id);

/// Builds and validates an AlgebraId.
AlgebraId make_algebra(Family family, int rank);

/// Parses tokens like "E7" or "a3". Case-insensitive family letter.
/// Does not normalize aliases; B1 and C1 are rejected here.
AlgebraId parse_algebra(std::string_view token);

/// Result of resolving a low-rank alias at the input boundary.
struct AliasResolution {
  AlgebraId algebra;
  /// Maps requested-algebra index i to the index in `algebra`.
  std::vector<int> index_map;
  std::optional<std::string> warning;

  /// Reorders Dynkin coefficients given in the requested algebra's numbering.
  IntVector map_weight(const IntVector& w) const;
};

/// Resolves B1/C1 -> A1, C2 -> B2 and D3 -> A3 (with a warning text), and is
/// the identity otherwise. Accepts the raw family/rank before validation.
AliasResolution normalize_alias(Family family, int rank);

/// Parses a token into family and rank without validating the rank.
std::pair<Family, int> parse_algebra_token(std::string_view token);

/// Comma-separated integers, e.g. "1,0,0,0,0,0,0".
IntVector parse_weight(std::string_view text);

/// Comma-separated exact rationals, e.g. "1/2,-1/2,0".
RationalVector parse_rational_vector(std::string_view text);

std::string format_weight(const IntVector& w);

/// Every algebra with rank between 1 and max_rank, normalized (no aliases).
std::vector<AlgebraId> algebras_up_to_rank(int max_rank);

}  // namespace w0sig
