#include "w0sig/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace w0sig {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Ambient dimension of Bourbaki's model for each type.
int ambient_dimension(const AlgebraId& id) {
  switch (id.family) {
    case Family::A: return id.rank + 1;
    case Family::E: return 8;
    case Family::G: return 3;
    default: return id.rank;
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RationalMatrix bourbaki_simple_roots(const AlgebraId& id) {
  validate(id);
  const int r = id.rank;
  const int n = ambient_dimension(id);
  RationalMatrix s = RationalMatrix::Zero(n, r);
  const Rational half(1, 2);
  auto diff = [&](int col, int a, int b) {  // e_a - e_b, 0-based
    s(a, col) = 1;
    s(b, col) = -1;
  };
  switch (id.family) {
    case Family::A:
      for (int i = 0; i < r; ++i) diff(i, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) diff(i, i, i + 1);
      s(r - 1, r - 1) = 1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) diff(i, i, i + 1);
      s(r - 1, r - 1) = 2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < r; ++i) diff(i, i, i + 1);
      s(r - 2, r - 1) = 1;
      s(r - 1, r - 1) = 1;
      break;
    case Family::E:
      // alpha_1 = (e1 + e8 - e2 - ... - e7) / 2, alpha_2 = e1 + e2,
      // alpha_k = e_{k-1} - e_{k-2} for k >= 3.
      for (int j = 0; j < 8; ++j) s(j, 0) = (j == 0 || j == 7) ? half : -half;
      s(0, 1) = 1;
      s(1, 1) = 1;
      for (int k = 2; k < r; ++k) diff(k, k - 1, k - 2);
      break;
    case Family::F:
      diff(0, 1, 2);
      diff(1, 2, 3);
      s(3, 2) = 1;
      s(0, 3) = half;
      s(1, 3) = -half;
      s(2, 3) = -half;
      s(3, 3) = -half;
      break;
    case Family::G:
      diff(0, 0, 1);
      s(0, 1) = -2;
      s(1, 1) = 1;
      s(2, 1) = 1;
      break;
  }
  return s;
}

RootSystem::RootSystem(const AlgebraId& id) : id_(id) {
  validate(id_);
  const int r = id_.rank;
  simple_roots_ = bourbaki_simple_roots(id_);

  const RationalMatrix form = simple_roots_.transpose() * simple_roots_;
  cartan_.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_(i, j) = (Rational(2) * form(j, i) / form(i, i)).to_integer();

  cartan_inverse_ = exact_inverse(to_rational(cartan_));
  fundamental_weights_ = simple_roots_ * cartan_inverse_;
  lattice_index_ = integer_determinant(cartan_);

  const RationalMatrix gram = fundamental_weights_.transpose() * fundamental_weights_;
  std::int64_t scale = 1;
  for (Eigen::Index i = 0; i < gram.size(); ++i) scale = std::lcm(scale, gram(i).den());
  form_scale_ = scale;
  scaled_gram_ = to_integer(RationalMatrix(gram * Rational(scale)));

  // Closure from the simple roots, height by height. For a positive root beta
  // and simple alpha_i, beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0
  // where p is the length of the alpha_i-string below beta.
  std::unordered_set<IntVector, VectorHash, VectorEqual> known;
  std::vector<IntVector> layer;
  for (int i = 0; i < r; ++i) {
    IntVector e = IntVector::Zero(r);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      positive_roots_.push_back(beta);
      const IntVector dynkin = cartan_ * beta;
      for (int i = 0; i < r; ++i) {
        IntVector down = beta;
        std::int64_t p = 0;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - dynkin[i] <= 0) continue;
        IntVector up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    std::sort(next.begin(), next.end(), LexLess{});
    layer = std::move(next);
  }

  for (const auto& k : positive_roots_) {
    positive_roots_dynkin_.push_back(cartan_ * k);
    const Rational len = (to_rational(k).transpose() * form * to_rational(k))(0, 0);
    IntVector co(r);
    for (int i = 0; i < r; ++i) co[i] = (Rational(k[i]) * form(i, i) / len).to_integer();
    positive_coroots_.push_back(co);
  }
  highest_root_ = positive_roots_dynkin_.back();

  Weight w = rho();
  while (true) {
    int i = 0;
    while (i < r && w[i] <= 0) ++i;
    if (i == r) break;
    w = reflect(w, i);
    w0_.letters.push_back(i);
  }
  w0_matrix_.resize(r, r);
  for (int k = 0; k < r; ++k) w0_matrix_.col(k) = apply_word(w0_, Weight::Unit(r, k), *this);
}

std::vector<EpsCoords> RootSystem::positive_roots_eps() const {
  std::vector<EpsCoords> out;
  out.reserve(positive_roots_.size());
  for (const auto& k : positive_roots_) out.push_back(simple_roots_ * to_rational(k));
  return out;
}

std::int64_t RootSystem::scaled_form(const Weight& a, const Weight& b) const {
  return checked_dot(a, scaled_gram_ * b);
}

RationalVector RootSystem::to_root_coords(const Weight& w) const {
  return cartan_inverse_ * to_rational(w);
}

RootSystem build_root_system(const AlgebraId& id) { return RootSystem(id); }

EpsCoords to_eps(const Weight& w, const RootSystem& rs) {
  if (w.size() != rs.rank()) throw InvalidInput("weight has the wrong number of coefficients");
  return rs.fundamental_weights() * to_rational(w);
}

Weight from_eps(const EpsCoords& e_in, const RootSystem& rs) {
  if (e_in.size() != rs.ambient_dim())
    throw InvalidInput("expected " + std::to_string(rs.ambient_dim()) + " e-coordinates, got " +
                       std::to_string(e_in.size()));
  EpsCoords e = e_in;
  if (rs.algebra().family == Family::A) {
    Rational mean = e.sum() / Rational(static_cast<std::int64_t>(e.size()));
    for (Eigen::Index i = 0; i < e.size(); ++i) e[i] -= mean;
  }
  Weight w(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational c = pairing(e, rs.simple_roots().col(i));
    if (!c.is_integer())
      throw LatticeError("(" + format_vector(e_in) + ") is not in the weight lattice: pairing with coroot " +
                         std::to_string(i + 1) + " is " + c.str());
    w[i] = c.num();
  }
  if (to_eps(w, rs) != e)
    throw LatticeError("(" + format_vector(e_in) + ") does not lie in the span of the roots");
  return w;
}

Rational pairing(const EpsCoords& e, const EpsCoords& root) {
  const Rational len = dot(root, root);
  if (len == Rational(0)) throw DomainError("invalid root: zero vector");
  return Rational(2) * dot(e, root) / len;
}

bool is_dominant(const Weight& w) { return is_nonnegative(w); }

DominantRepresentative dominant_representative(const Weight& w, const RootSystem& rs) {
  DominantRepresentative out{w, 1};
  while (true) {
    int i = 0;
    while (i < rs.rank() && out.weight[i] >= 0) ++i;
    if (i == rs.rank()) return out;
    out.weight = rs.reflect(out.weight, i);
    out.parity = -out.parity;
  }
}

const WeylWord& longest_element(const RootSystem& rs) { return rs.longest_word(); }

Weight apply_word(const WeylWord& word, const Weight& w, const RootSystem& rs) {
  Weight out = w;
  for (int i : word.letters) out = rs.reflect(out, i);
  return out;
}

Weight apply_w0(const WeylWord& word, const Weight& w, const RootSystem& rs) {
  return apply_word(word, w, rs);
}

bool is_radical(const Weight& w, const AlgebraId& id) {
  const int r = id.rank;
  if (w.size() != r) throw InvalidInput("weight has the wrong number of coefficients");
  auto c = [&](int i) { return w[i - 1]; };  // 1-based
  switch (id.family) {
    case Family::A: {
      std::int64_t s = 0;
      for (int i = 1; i <= r; ++i) s += i * c(i);
      return mod(s, r + 1) == 0;
    }
    case Family::B:
      return mod(c(r), 2) == 0;
    case Family::C: {
      std::int64_t s = 0;
      for (int i = 1; i <= r; i += 2) s += c(i);
      return mod(s, 2) == 0;
    }
    case Family::D: {
      std::int64_t odd = 0;
      for (int i = 1; i <= r - 2; i += 2) odd += c(i);
      if (r % 2 == 0) return mod(odd + c(r - 1), 2) == 0 && mod(odd + c(r), 2) == 0;
      return mod(2 * odd + c(r - 1) - c(r), 4) == 0;
    }
    case Family::E:
      if (r == 6) return mod(c(1) - c(3) + c(5) - c(6), 3) == 0;
      if (r == 7) return mod(c(2) + c(5) + c(7), 2) == 0;
      return true;
    case Family::F:
    case Family::G:
      return true;
  }
  return false;
}

std::int64_t min_radical_multiplier(const AlgebraId& id, int i) {
  validate(id);
  if (i < 1 || i > id.rank) throw InvalidInput("node index out of range: " + std::to_string(i));
  Weight w = Weight::Zero(id.rank);
  for (std::int64_t k = 1;; ++k) {
    w[i - 1] = k;
    if (is_radical(w, id)) return k;
  }
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) {
  WeightSet seen{w};
  std::vector<Weight> out{w};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (out[head][i] == 0) continue;
      Weight next = rs.reflect(out[head], i);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
  const int r = rs.rank();
  const IntMatrix& a = rs.cartan_matrix();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(r), -1);
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  auto extend = [&](auto&& self, int i) -> void {
    if (i == r) {
      out.push_back(perm);
      return;
    }
    for (int j = 0; j < r; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = a(i, k) == a(j, perm[k]) && a(k, i) == a(perm[k], j);
      if (!ok) continue;
      used[j] = true;
      perm[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());  // identity is lexicographically first
  return out;
}

std::string radical_condition(const AlgebraId& id) {
  const int r = id.rank;
  switch (id.family) {
    case Family::A:
      return "sum_i i*c_i = 0 mod " + std::to_string(r + 1);
    case Family::B:
      return "c_" + std::to_string(r) + " = 0 mod 2";
    case Family::C: {
      std::string s;
      for (int i = 1; i <= r; i += 2) s += (s.empty() ? "" : " + ") + ("c_" + std::to_string(i));
      return s + " = 0 mod 2";
    }
    case Family::D: {
      std::string odd;
      for (int i = 1; i <= r - 2; i += 2) odd += (odd.empty() ? "" : " + ") + ("c_" + std::to_string(i));
      const std::string a = "c_" + std::to_string(r - 1);
      const std::string b = "c_" + std::to_string(r);
      if (r % 2 == 0)
        return odd + " + " + a + " = 0 mod 2; " + odd + " + " + b + " = 0 mod 2";
      return "2(" + odd + ") + " + a + " - " + b + " = 0 mod 4";
    }
    case Family::E:
      if (r == 6) return "c_1 - c_3 + c_5 - c_6 = 0 mod 3";
      if (r == 7) return "c_2 + c_5 + c_7 = 0 mod 2";
      return "none (root lattice = weight lattice)";
    case Family::F:
    case Family::G:
      return "none (root lattice = weight lattice)";
  }
  return "";
}

}  // namespace w0sig
