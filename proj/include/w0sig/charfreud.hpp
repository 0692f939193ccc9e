#pragma once

#include <utility>
#include <vector>

#include "w0sig/multiset.hpp"
#include "w0sig/rootsys.hpp"

namespace w0sig {

/// Weyl dimension formula, exact. Throws DomainError if lambda is not dominant.
std::int64_t weyl_dim(const Weight& lambda, const RootSystem& rs);

/// Dominant mu with lambda - mu a nonnegative integer combination of simple
/// roots, ordered by increasing depth below lambda (lambda first).
std::vector<Weight> dominant_weights_below(const Weight& lambda, const RootSystem& rs);

/// Multiplicities of the dominant weights of V_lambda, computed by the
/// Freudenthal recursion. Entries follow dominant_weights_below() order.
std::vector<std::pair<Weight, Multiplicity>> dominant_character(const Weight& lambda,
                                                                const RootSystem& rs);

/// Multiplicity of mu in V_lambda (zero when mu is not a weight).
Multiplicity freudenthal_mult(const Weight& lambda, const Weight& mu, const RootSystem& rs);

/// All weights of V_lambda with multiplicities.
WeightMultiset full_character(const Weight& lambda, const RootSystem& rs);

/// Character of a tensor product: pointwise convolution of multisets.
WeightMultiset tensor_character(const WeightMultiset& a, const WeightMultiset& b);

}  // namespace w0sig
