#include "w0sig/classify.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <thread>

#include "w0sig/charfreud.hpp"

namespace w0sig {

namespace {

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

ClassEntry entry(int i, std::int64_t p, MaxMultiple m, std::optional<int> sigma) {
  if (m.is_unbounded() || m.value() > 0) {
    if (!sigma) throw InternalError("sign missing for a node with m >= 1");
  } else {
    sigma.reset();
  }
  return {i, p, m, sigma};
}

const auto inf = MaxMultiple::unbounded;
MaxMultiple fin(std::int64_t m) { return MaxMultiple::finite(m); }

ClassEntry entry_a(int r, int i) {
  if (i == 1 || i == r) return entry(i, r + 1, inf(), parity_sign((r + 1) / 2));
  const std::int64_t p = (r + 1) / std::gcd(i, r + 1);
  return r == 3 ? entry(i, p, inf(), 1) : entry(i, p, fin(0), std::nullopt);
}

ClassEntry entry_b(int r, int i) {
  const int sigma = parity_sign(static_cast<std::int64_t>(r) * i - i / 2);
  if (i == r) return entry(i, 2, r <= 2 ? inf() : fin(1), sigma);
  if (i == 1) return entry(i, 1, inf(), sigma);
  if (i == 2) return entry(i, 1, fin(2), sigma);
  return entry(i, 1, fin(1), sigma);
}

ClassEntry entry_c(int r, int i) {
  if (i == 1) return entry(i, 2, inf(), -1);
  if (i == 2) return entry(i, 1, r == 2 ? inf() : fin(2), 1);
  if (i % 2 == 1) return i == 3 && r == 3 ? entry(i, 2, fin(1), -1) : entry(i, 2, fin(0), std::nullopt);
  return entry(i, 1, i == 4 && r == 4 ? fin(2) : fin(1), 1);
}

ClassEntry entry_d(int r, int i) {
  if (i == 1) return entry(i, 2, inf(), 1);
  if (r % 2 == 1) {
    if (i >= r - 1) return r == 3 ? entry(i, 4, inf(), 1) : entry(i, 4, fin(0), std::nullopt);
    return entry(i, i % 2 == 0 ? 1 : 2, fin(0), std::nullopt);
  }
  if (i >= r - 1) return entry(i, 2, r == 4 ? inf() : fin(1), parity_sign(r / 2));
  if (i == 2) return entry(i, 1, fin(2), -1);
  if (i % 2 == 1) return entry(i, 2, fin(0), std::nullopt);
  return entry(i, 1, fin(1), parity_sign(i / 2));
}

ClassEntry entry_e(int r, int i) {
  if (r == 6) return entry(i, (i == 2 || i == 4) ? 1 : 3, fin(0), std::nullopt);
  if (r == 7) {
    switch (i) {
      case 1: return entry(i, 1, fin(2), -1);
      case 2:
      case 5: return entry(i, 2, fin(0), std::nullopt);
      case 6: return entry(i, 1, fin(1), 1);
      case 7: return entry(i, 2, fin(1), -1);
      default: return entry(i, 1, fin(0), std::nullopt);
    }
  }
  if (i == 1) return entry(i, 1, fin(1), 1);
  if (i == 8) return entry(i, 1, fin(2), -1);
  return entry(i, 1, fin(0), std::nullopt);
}

ClassEntry entry_f(int i) {
  if (i == 1) return entry(i, 1, fin(2), -1);
  if (i == 4) return entry(i, 1, fin(2), 1);
  return entry(i, 1, fin(0), std::nullopt);
}

// Calls f(c) for every c in Z_{>=0}^r with sum exactly `total`, in
// lexicographically decreasing order.
template <typename F>
void for_each_composition(int r, std::int64_t total, F&& f) {
  Weight c = Weight::Zero(r);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == r - 1) {
      c[pos] = left;
      f(c);
      return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

// Minimal elements, under the componentwise order, of the weights with sum
// <= bound satisfying `member`. Scanning by increasing sum, a candidate is
// minimal iff no earlier minimal element lies below it.
template <typename Pred>
std::vector<Weight> minimal_elements(int r, std::int64_t bound, Pred&& member) {
  std::vector<Weight> basis;
  for (std::int64_t total = 1; total <= bound; ++total) {
    std::vector<Weight> found;
    for_each_composition(r, total, [&](const Weight& c) {
      if (!member(c)) return;
      for (const auto& b : basis)
        if ((b.array() <= c.array()).all()) return;
      found.push_back(c);
    });
    basis.insert(basis.end(), found.begin(), found.end());
  }
  std::sort(basis.begin(), basis.end(), LexLess{});
  return basis;
}

}  // namespace

ClassEntry table_entry(const AlgebraId& id, int i) {
  validate(id);
  if (i < 1 || i > id.rank) throw InvalidInput("node index out of range: " + std::to_string(i));
  switch (id.family) {
    case Family::A: return entry_a(id.rank, i);
    case Family::B: return entry_b(id.rank, i);
    case Family::C: return entry_c(id.rank, i);
    case Family::D: return entry_d(id.rank, i);
    case Family::E: return entry_e(id.rank, i);
    case Family::F: return entry_f(i);
    case Family::G: return entry(i, 1, fin(2), -1);
  }
  throw InternalError("unknown family");
}

std::vector<ClassEntry> table_entries(const AlgebraId& id) {
  std::vector<ClassEntry> out;
  for (int i = 1; i <= id.rank; ++i) out.push_back(table_entry(id, i));
  return out;
}

std::string to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::NonRadical: return "nonradical";
    case PredictionKind::Pure: return "pure";
    case PredictionKind::Mixed: return "mixed";
  }
  return "";
}

namespace {
// Sign of V_lambda if lambda is in the pure family, 0 otherwise.
int pure_family_sign(const AlgebraId& id, const Weight& lambda) {
  if (lambda.size() != id.rank) throw InvalidInput("weight has the wrong number of coefficients");
  int support = -1;
  for (int i = 0; i < id.rank; ++i) {
    if (lambda[i] == 0) continue;
    if (support >= 0) return 0;
    support = i;
  }
  if (support < 0) return 1;
  const ClassEntry e = table_entry(id, support + 1);
  const std::int64_t c = lambda[support];
  if (c < 0 || c % e.p != 0) return 0;
  const std::int64_t k = c / e.p;
  if (!e.m.admits(k)) return 0;
  return k % 2 == 0 ? 1 : *e.sigma;
}
}  // namespace

bool in_pure_family(const AlgebraId& id, const Weight& lambda) {
  return pure_family_sign(id, lambda) != 0;
}

Prediction predict(const AlgebraId& id, const Weight& lambda) {
  if (lambda.size() != id.rank) throw InvalidInput("weight has the wrong number of coefficients");
  if (!is_dominant(lambda)) throw DomainError("predict: " + format_weight(lambda) + " is not dominant");
  if (!is_radical(lambda, id)) return {PredictionKind::NonRadical, 0};
  const int sign = pure_family_sign(id, lambda);
  if (sign != 0) return {PredictionKind::Pure, sign};
  return {PredictionKind::Mixed, 0};
}

bool agrees(const Prediction& prediction, const Signature& signature) {
  switch (prediction.kind) {
    case PredictionKind::NonRadical: return signature == Signature{0, 0};
    case PredictionKind::Pure: return signature.sign() == prediction.sign;
    case PredictionKind::Mixed: return signature.mixed();
  }
  return false;
}

std::int64_t hilbert_search_bound(const AlgebraId& id) {
  // A generator with coefficient sum S gives a chain of S+1 partial sums in
  // the weight lattice modulo the root lattice; two of the first S collide
  // once S exceeds the index, exhibiting a proper summand.
  return RootSystem(id).lattice_index();
}

std::int64_t ideal_search_bound(const AlgebraId& id) {
  // A minimal element b of the ideal is h + k p_i varpi_i with h a monoid
  // generator and k <= m_i (k <= 1 when m_i is unbounded).
  std::int64_t extra = 0;
  for (const auto& e : table_entries(id)) {
    const std::int64_t k = e.m.is_unbounded() ? 1 : e.m.value();
    extra = std::max(extra, checked_mul(k, e.p));
  }
  return checked_add(hilbert_search_bound(id), extra);
}

std::vector<Weight> hilbert_basis_M(const AlgebraId& id) {
  validate(id);
  return minimal_elements(id.rank, hilbert_search_bound(id),
                          [&](const Weight& c) { return is_radical(c, id); });
}

std::vector<Weight> ideal_basis(const AlgebraId& id) {
  validate(id);
  return minimal_elements(id.rank, ideal_search_bound(id),
                          [&](const Weight& c) { return is_radical(c, id) && !in_pure_family(id, c); });
}

std::vector<Weight> dominant_radical_weights(const AlgebraId& id, std::int64_t max_sum) {
  validate(id);
  std::vector<Weight> out;
  for (std::int64_t total = 0; total <= max_sum; ++total) {
    std::vector<Weight> level;
    for_each_composition(id.rank, total, [&](const Weight& c) {
      if (is_radical(c, id)) level.push_back(c);
    });
    std::reverse(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool ideal_property_check(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const AlgebraId& id = rs.algebra();
  for (const Weight* w : {&lambda, &mu}) {
    if (!is_dominant(*w) || !is_radical(*w, id))
      throw DomainError("ideal_property_check: " + format_weight(*w) + " is not dominant radical");
  }
  const RestrictionData rd = restriction_data(rs);
  if (!w0_signature(rs, rd, lambda).mixed())
    throw DomainError("ideal_property_check: V_" + format_weight(lambda) + " is not mixed");
  return w0_signature(rs, rd, lambda + mu).mixed();
}

std::size_t count_outer_orbits(const RootSystem& rs, const std::vector<Weight>& weights) {
  const auto autos = diagram_automorphisms(rs);
  std::set<Weight, LexLess> canonical;
  for (const auto& w : weights) {
    Weight best = w;
    for (const auto& perm : autos) {
      Weight image(w.size());
      for (std::size_t i = 0; i < perm.size(); ++i) image[perm[i]] = w[static_cast<Eigen::Index>(i)];
      if (lex_less(image, best)) best = image;
    }
    canonical.insert(best);
  }
  return canonical.size();
}

std::vector<VerifyRow> verify_classification(const RootSystem& rs, std::int64_t max_sum,
                                      std::optional<std::int64_t> max_dim, unsigned threads) {
  const AlgebraId& id = rs.algebra();
  std::vector<VerifyRow> rows;
  for (auto& w : dominant_radical_weights(id, max_sum)) {
    std::int64_t dim = 0;
    try {
      dim = weyl_dim(w, rs);
    } catch (const OverflowError&) {
      // Too large for int64 is certainly above any dimension cap.
      if (max_dim) continue;
      throw;
    }
    if (max_dim && dim > *max_dim) continue;
    VerifyRow row;
    row.weight = std::move(w);
    row.dim = dim;
    rows.push_back(std::move(row));
  }
  const RestrictionData rd = restriction_data(rs);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < rows.size(); i += threads) {
        VerifyRow& row = rows[i];
        row.signature = w0_signature(rs, rd, row.weight);
        row.prediction = predict(id, row.weight);
        row.agree = agrees(row.prediction, row.signature);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace w0sig
