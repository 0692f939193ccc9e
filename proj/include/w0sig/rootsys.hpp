#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "w0sig/algebra.hpp"
#include "w0sig/linalg.hpp"

namespace w0sig {

/// Dynkin coefficients c_1..c_r of a weight in the fundamental-weight basis.
using Weight = IntVector;
/// Coordinates in Bourbaki's ambient basis e_1..e_n.
using EpsCoords = RationalVector;
using WeightSet = std::unordered_set<Weight, VectorHash, VectorEqual>;

/// Reduced word for w0 as 0-based simple reflection indices, applied
/// left-to-right to a weight.
struct WeylWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
};

/// A root system in Bourbaki coordinates. Immutable after construction.
///
/// Roots are kept in three coordinate systems: ambient e-coordinates,
/// simple-root coordinates (integers) and Dynkin coordinates (integers).
/// The integer views are what the combinatorial algorithms use; the ambient
/// view is kept for conversion and cross checks.
class RootSystem {
public:
  explicit RootSystem(const AlgebraId& id);

  const AlgebraId& algebra() const { return id_; }
  int rank() const { return id_.rank; }
  int ambient_dim() const { return static_cast<int>(simple_roots_.rows()); }

  /// Columns are alpha_1..alpha_r in e-coordinates.
  const RationalMatrix& simple_roots() const { return simple_roots_; }
  /// Columns are varpi_1..varpi_r in e-coordinates.
  const RationalMatrix& fundamental_weights() const { return fundamental_weights_; }
  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan_matrix() const { return cartan_; }

  std::size_t num_positive_roots() const { return positive_roots_.size(); }
  /// Simple-root coordinates of the positive roots, sorted by height then lex.
  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  const std::vector<IntVector>& positive_roots_dynkin() const { return positive_roots_dynkin_; }
  /// Row vectors k with <lambda, alpha^vee> = k . lambda for Dynkin lambda.
  const std::vector<IntVector>& positive_coroots() const { return positive_coroots_; }
  std::vector<EpsCoords> positive_roots_eps() const;

  /// Gram matrix of the invariant form on fundamental weights, scaled by
  /// form_scale() so that it is integral.
  const IntMatrix& scaled_gram() const { return scaled_gram_; }
  std::int64_t form_scale() const { return form_scale_; }
  /// form_scale() * (lambda, mu) for Dynkin vectors.
  std::int64_t scaled_form(const Weight& a, const Weight& b) const;

  /// Dynkin coordinates of the highest root.
  const Weight& highest_root() const { return highest_root_; }
  Weight rho() const { return Weight::Ones(rank()); }

  /// Index of the root lattice in the weight lattice (det of the Cartan matrix).
  std::int64_t lattice_index() const { return lattice_index_; }

  /// Dynkin coordinates of alpha_i (column i of the Cartan matrix).
  Weight simple_root_dynkin(int i) const { return cartan_.col(i); }

  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  Weight reflect(const Weight& w, int i) const { return w - w[i] * cartan_.col(i); }

  const WeylWord& longest_word() const { return w0_; }
  /// Matrix of w0 acting on Dynkin column vectors.
  const IntMatrix& w0_matrix() const { return w0_matrix_; }

  /// Simple-root coordinates of a Dynkin vector (rational in general).
  RationalVector to_root_coords(const Weight& w) const;

private:
  AlgebraId id_;
  RationalMatrix simple_roots_;
  RationalMatrix fundamental_weights_;
  IntMatrix cartan_;
  std::vector<IntVector> positive_roots_;
  std::vector<IntVector> positive_roots_dynkin_;
  std::vector<IntVector> positive_coroots_;
  IntMatrix scaled_gram_;
  std::int64_t form_scale_ = 1;
  RationalMatrix cartan_inverse_;
  Weight highest_root_;
  std::int64_t lattice_index_ = 1;
  WeylWord w0_;
  IntMatrix w0_matrix_;
};

/// Throws InvalidInput on an invalid id.
RootSystem build_root_system(const AlgebraId& id);

/// Simple roots of the given algebra in Bourbaki e-coordinates (columns).
RationalMatrix bourbaki_simple_roots(const AlgebraId& id);

EpsCoords to_eps(const Weight& w, const RootSystem& rs);
/// Throws LatticeError if e is not in the weight lattice. For type A the
/// input is first projected onto the sum-zero hyperplane.
Weight from_eps(const EpsCoords& e, const RootSystem& rs);

/// <e, root^vee> = 2 (e, root) / (root, root) in the ambient Euclidean form.
/// Throws DomainError("invalid root") for a zero root.
Rational pairing(const EpsCoords& e, const EpsCoords& root);

struct DominantRepresentative {
  Weight weight;
  int parity = 1;  ///< sign of the Weyl element used
};

DominantRepresentative dominant_representative(const Weight& w, const RootSystem& rs);

const WeylWord& longest_element(const RootSystem& rs);
Weight apply_word(const WeylWord& word, const Weight& w, const RootSystem& rs);
Weight apply_w0(const WeylWord& word, const Weight& w, const RootSystem& rs);

bool is_dominant(const Weight& w);

/// Root-lattice membership from the standard congruences on Dynkin
/// coefficients.
bool is_radical(const Weight& w, const AlgebraId& id);

/// Least k >= 1 with k * varpi_i in the root lattice. `i` is 1-based.
std::int64_t min_radical_multiplier(const AlgebraId& id, int i);

/// Orbit of w under the Weyl group, by breadth-first search over simple
/// reflections.
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);

/// 0-based permutations pi of the nodes with cartan(pi i, pi j) = cartan(i, j),
/// identity first.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

/// Human readable congruence condition for the root lattice.
std::string radical_condition(const AlgebraId& id);

}  // namespace w0sig
