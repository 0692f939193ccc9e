#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "w0sig/branchsig.hpp"
#include "w0sig/rootsys.hpp"

namespace w0sig {

/// Largest admissible k in k * p_i * varpi_i, or unbounded.
class MaxMultiple {
public:
  static MaxMultiple unbounded() { return MaxMultiple(); }
  static MaxMultiple finite(std::int64_t m) { return MaxMultiple(m); }

  bool is_unbounded() const { return !bound_.has_value(); }
  /// Finite bound; throws InternalError when unbounded.
  std::int64_t value() const {
    if (!bound_) throw InternalError("unbounded MaxMultiple has no value");
    return *bound_;
  }
  bool admits(std::int64_t k) const { return !bound_ || k <= *bound_; }
  std::string str() const { return bound_ ? std::to_string(*bound_) : "inf"; }

  friend bool operator==(const MaxMultiple&, const MaxMultiple&) = default;

private:
  MaxMultiple() = default;
  explicit MaxMultiple(std::int64_t m) : bound_(m) {}
  std::optional<std::int64_t> bound_;
};

/// One row of the classification table for node i (1-based).
struct ClassEntry {
  int index = 0;
  std::int64_t p = 1;
  MaxMultiple m = MaxMultiple::finite(0);
  /// Defined iff m >= 1.
  std::optional<int> sigma;
};

ClassEntry table_entry(const AlgebraId& id, int i);
std::vector<ClassEntry> table_entries(const AlgebraId& id);

enum class PredictionKind { NonRadical, Pure, Mixed };

struct Prediction {
  PredictionKind kind = PredictionKind::Mixed;
  int sign = 0;  ///< +1 or -1 when kind == Pure, else 0

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

std::string to_string(PredictionKind kind);

/// True iff lambda = k p_i varpi_i with 0 <= k <= m_i for some i.
bool in_pure_family(const AlgebraId& id, const Weight& lambda);

/// Classification of V_lambda from the table. Throws DomainError if lambda
/// is not dominant.
Prediction predict(const AlgebraId& id, const Weight& lambda);

/// Whether a computed signature has the shape the prediction asserts.
bool agrees(const Prediction& prediction, const Signature& signature);

/// Coefficient-sum bound covering all minimal generators of the monoid of
/// dominant radical weights (index of the root lattice).
std::int64_t hilbert_search_bound(const AlgebraId& id);

/// Coefficient-sum bound covering all minimal elements of the mixed ideal.
std::int64_t ideal_search_bound(const AlgebraId& id);

/// Minimal generators of the monoid of dominant radical weights, in
/// lexicographic order.
std::vector<Weight> hilbert_basis_M(const AlgebraId& id);

/// Minimal elements of the ideal {dominant radical lambda not in the pure
/// family}, in lexicographic order.
std::vector<Weight> ideal_basis(const AlgebraId& id);

/// Dominant radical weights with coefficient sum <= max_sum, ordered by sum
/// then lexicographically.
std::vector<Weight> dominant_radical_weights(const AlgebraId& id, std::int64_t max_sum);

/// Whether V_{lambda+mu} is mixed, for mixed lambda and dominant radical mu.
/// Throws DomainError if the preconditions do not hold.
bool ideal_property_check(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Number of orbits of the weights under diagram automorphisms.
std::size_t count_outer_orbits(const RootSystem& rs, const std::vector<Weight>& weights);

struct VerifyRow {
  Weight weight;
  std::int64_t dim = 0;
  Signature signature;
  Prediction prediction;
  bool agree = false;
};

/// Classification cross-check over every dominant radical weight with coefficient
/// sum <= max_sum and (if given) dimension <= max_dim. Rows come back in
/// enumeration order regardless of `threads`.
std::vector<VerifyRow> verify_classification(const RootSystem& rs, std::int64_t max_sum,
                                      std::optional<std::int64_t> max_dim,
                                      unsigned threads = 1);

}  // namespace w0sig
