#include "w0sig/charfreud.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace w0sig {

namespace {

void require_dominant(const Weight& lambda, const RootSystem& rs, const char* what) {
  if (lambda.size() != rs.rank())
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(rs.rank()) +
                       " coefficients, got " + std::to_string(lambda.size()));
  if (!is_dominant(lambda))
    throw DomainError(std::string(what) + ": highest weight " + format_weight(lambda) + " is not dominant");
}

std::int64_t root_height(const IntVector& simple_coords) { return simple_coords.sum(); }

}  // namespace

std::int64_t weyl_dim(const Weight& lambda, const RootSystem& rs) {
  require_dominant(lambda, rs, "weyl_dim");
  const Weight shifted = lambda + rs.rho();
  // Factors are small, so track prime exponents and multiply out at the end;
  // a running rational product overflows long before the dimension does.
  std::map<std::int64_t, std::int64_t> exponent;
  const auto factor = [&exponent](std::int64_t n, std::int64_t sign) {
    for (std::int64_t d = 2; d * d <= n; ++d)
      for (; n % d == 0; n /= d) exponent[d] += sign;
    if (n > 1) exponent[n] += sign;
  };
  for (const auto& co : rs.positive_coroots()) {
    // <rho, alpha^vee> is the height of the coroot.
    factor(checked_dot(co, shifted), 1);
    factor(co.sum(), -1);
  }
  std::int64_t dim = 1;
  for (const auto& [prime, e] : exponent) {
    if (e < 0) throw InternalError("Weyl dimension formula produced a non-integer");
    for (std::int64_t k = 0; k < e; ++k) dim = checked_mul(dim, prime);
  }
  return dim;
}

std::vector<Weight> dominant_weights_below(const Weight& lambda, const RootSystem& rs) {
  require_dominant(lambda, rs, "dominant_weights_below");
  std::unordered_map<Weight, std::int64_t, VectorHash, VectorEqual> depth{{lambda, 0}};
  std::vector<Weight> queue{lambda};
  const auto& roots = rs.positive_roots();
  const auto& roots_dynkin = rs.positive_roots_dynkin();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Weight mu = queue[head];
    const std::int64_t d = depth.at(mu);
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = mu - roots_dynkin[a];
      if (!is_dominant(nu)) continue;
      if (depth.try_emplace(nu, d + root_height(roots[a])).second) queue.push_back(std::move(nu));
    }
  }
  std::sort(queue.begin(), queue.end(), [&](const Weight& a, const Weight& b) {
    const auto da = depth.at(a);
    const auto db = depth.at(b);
    if (da != db) return da < db;
    return lex_less(b, a);
  });
  return queue;
}

std::vector<std::pair<Weight, Multiplicity>> dominant_character(const Weight& lambda,
                                                                const RootSystem& rs) {
  const std::vector<Weight> dominant = dominant_weights_below(lambda, rs);
  std::unordered_map<Weight, Multiplicity, VectorHash, VectorEqual> mult;
  std::vector<std::pair<Weight, Multiplicity>> out;
  out.reserve(dominant.size());

  const Weight rho = rs.rho();
  const Weight top = lambda + rho;
  const std::int64_t top_norm = rs.scaled_form(top, top);
  const auto& roots = rs.positive_roots_dynkin();
  std::vector<Weight> roots_scaled;
  roots_scaled.reserve(roots.size());
  for (const auto& alpha : roots) roots_scaled.push_back(rs.scaled_gram() * alpha);

  for (const Weight& mu : dominant) {
    Multiplicity m = 1;
    if (mu != lambda) {
      const Weight shifted = mu + rho;
      const std::int64_t denom = checked_sub(top_norm, rs.scaled_form(shifted, shifted));
      if (denom <= 0) throw InternalError("Freudenthal denominator is not positive");
      std::int64_t num = 0;
      for (std::size_t a = 0; a < roots.size(); ++a) {
        const Weight& alpha = roots[a];
        const Weight& alpha_scaled = roots_scaled[a];
        Weight nu = mu + alpha;
        while (true) {
          const auto it = mult.find(dominant_representative(nu, rs).weight);
          if (it == mult.end()) break;
          const std::int64_t inner = checked_dot(nu, alpha_scaled);
          num = checked_add(num, checked_mul(2 * inner, it->second));
          nu += alpha;
        }
      }
      if (num % denom != 0) throw InternalError("Freudenthal recursion produced a non-integer");
      m = num / denom;
      if (m <= 0) throw InternalError("dominant weight below lambda with multiplicity " + std::to_string(m));
    }
    mult.emplace(mu, m);
    out.emplace_back(mu, m);
  }
  return out;
}

Multiplicity freudenthal_mult(const Weight& lambda, const Weight& mu, const RootSystem& rs) {
  require_dominant(lambda, rs, "freudenthal_mult");
  if (mu.size() != rs.rank()) throw InvalidInput("freudenthal_mult: weight has the wrong size");
  // mu must differ from lambda by an element of the root lattice.
  const RationalVector diff = rs.to_root_coords(lambda - mu);
  for (Eigen::Index i = 0; i < diff.size(); ++i)
    if (!diff[i].is_integer()) return 0;
  const Weight target = dominant_representative(mu, rs).weight;
  for (const auto& [w, m] : dominant_character(lambda, rs))
    if (w == target) return m;
  return 0;
}

WeightMultiset full_character(const Weight& lambda, const RootSystem& rs) {
  WeightMultiset out;
  for (const auto& [mu, m] : dominant_character(lambda, rs))
    for (const Weight& w : weyl_orbit(mu, rs)) out.add(w, m);
  return out;
}

WeightMultiset tensor_character(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) out.add(wa + wb, checked_mul(ma, mb));
  return out;
}

}  // namespace w0sig
