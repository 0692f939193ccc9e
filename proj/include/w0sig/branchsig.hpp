#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "w0sig/multiset.hpp"
#include "w0sig/rootsys.hpp"

namespace w0sig {

/// Dimensions (p, q) of the +1 and -1 eigenspaces of w0 on the zero-weight
/// space.
struct Signature {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool pure() const { return p == 0 || q == 0; }
  bool mixed() const { return p > 0 && q > 0; }
  /// +1 or -1 for a pure nonzero signature, 0 otherwise.
  int sign() const {
    if (p > 0 && q == 0) return 1;
    if (q > 0 && p == 0) return -1;
    return 0;
  }
  std::int64_t total() const { return p + q; }
  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend Signature operator+(const Signature& a, const Signature& b) {
    return {checked_add(a.p, b.p), checked_add(a.q, b.q)};
  }
  friend Signature operator*(std::int64_t k, const Signature& s) {
    return {checked_mul(k, s.p), checked_mul(k, s.q)};
  }
};

/// (p,q) (x) (p',q') = (pp' + qq', pq' + qp').
Signature tensor_signature(const Signature& a, const Signature& b);

/// Signature of the (k+1)-dimensional irreducible sl2 module.
Signature sl2_signature(std::int64_t k);

/// (1,0) for the trivial character of the torus factor, (0,0) otherwise.
Signature abelian_signature(std::span<const std::int64_t> charges);

/// How the t filler columns of a restriction matrix are chosen. Both span the
/// same rational subspace; only Hermite is used by default.
enum class FillerBasis { Hermite, Alternate };

/// Branching data for the sl2^s x C^t subalgebra built on a set of strongly
/// orthogonal roots spanning the -1 eigenspace of w0.
struct RestrictionData {
  AlgebraId algebra;
  std::vector<EpsCoords> ortho_roots;
  int s = 0;
  int t = 0;
  /// Row k, column i < s: <varpi_k, alpha_i^vee>. Columns s..r-1 are fillers.
  IntMatrix matrix;
};

/// Positive strongly orthogonal roots spanning the -1 eigenspace of w0, in
/// e-coordinates. +/- pairs are expanded plus first, except the pair
/// e_{r-1} +/- e_r of D_r with r even, which is minus first.
std::vector<EpsCoords> orthogonal_root_set(const AlgebraId& id);

RestrictionData restriction_data(const RootSystem& rs, FillerBasis filler = FillerBasis::Hermite);

/// Maps each Dynkin row vector c to c * M. The first s entries of a key are
/// sl2 labels, the remaining t are torus charges.
WeightMultiset restrict_character(const WeightMultiset& character, const RestrictionData& rd);

struct BranchComponent {
  IntVector highest;  ///< sl2 labels followed by charges
  Multiplicity multiplicity = 0;
};

/// Decomposes a restricted character into irreducibles of sl2^s x C^t by
/// repeatedly removing the lexicographically largest remaining weight.
/// Throws MalformedCharacter if the input is not a genuine restriction.
std::vector<BranchComponent> peel_branch(const WeightMultiset& restricted, int s);

/// Signature of one irreducible summand of the restriction.
Signature component_signature(const IntVector& highest, int s);

/// Per-representation summary of the signature pipeline.
struct SignatureReport {
  Signature signature;
  std::int64_t dim = 0;
  Multiplicity zero_mult = 0;
  std::size_t components = 0;
};

SignatureReport analyze_signature(const RootSystem& rs, const RestrictionData& rd,
                                  const Weight& lambda);

/// Throws DomainError if lambda is not dominant.
Signature w0_signature(const RootSystem& rs, const Weight& lambda);
Signature w0_signature(const RootSystem& rs, const RestrictionData& rd, const Weight& lambda);

/// "resG2 = [[1,1],\n         [0,2]]" -- rows bracketed, continuation rows
/// aligned under the first.
std::string format_restriction_matrix(const std::string& name, const IntMatrix& m);

/// Parses a listing of "name = [[..],[..]]" blocks into matrices.
std::map<std::string, IntMatrix> parse_restriction_listing(std::string_view text);

}  // namespace w0sig
