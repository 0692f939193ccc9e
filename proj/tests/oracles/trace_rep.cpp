#include "trace_rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "w0sig/rational.hpp"

namespace oracle {
namespace {

using w0sig::Rational;
using Word = std::vector<int>;             // basis indices, one per tensor slot
using Tensor = std::map<Word, std::int64_t>;

// Defining-representation data: basis size, lowering operators as lists of
// (from, to, coeff), and the w0 lift as a signed permutation.
struct Defining {
  int n = 0;
  std::vector<std::vector<std::tuple<int, int, int>>> lowering;
  std::vector<std::pair<int, int>> w0;  // basis i -> sign * basis j
  // Highest weight vector of the i-th fundamental module, as wedge indices.
  std::vector<std::vector<int>> fundamental_wedge;
  // Simple-root coordinates (times `scale`) of each fundamental weight.
  std::vector<std::vector<int>> fundamental_root_coords;
  int scale = 1;
};

Defining defining(const std::string& algebra) {
  Defining d;
  if (algebra == "A1") {
    d.n = 2;
    d.lowering = {{{0, 1, 1}}};
    // rotation in the (e1, e2) plane: e2 -> e1, e1 -> -e2
    d.w0 = {{1, -1}, {0, 1}};
    d.fundamental_wedge = {{0}};
    d.fundamental_root_coords = {{1}};
    d.scale = 2;
  } else if (algebra == "A2") {
    d.n = 3;
    d.lowering = {{{0, 1, 1}}, {{1, 2, 1}}};
    d.w0 = {{2, -1}, {1, 1}, {0, 1}};
    d.fundamental_wedge = {{0}, {0, 1}};
    d.fundamental_root_coords = {{2, 1}, {1, 2}};
    d.scale = 3;
  } else if (algebra == "C2") {
    // u0 = e1, u1 = e2, u2 = -e2, u3 = -e1 with w(u0,u3) = w(u1,u2) = 1.
    d.n = 4;
    d.lowering = {{{0, 1, 1}, {2, 3, -1}}, {{1, 2, 1}}};
    d.w0 = {{3, -1}, {2, -1}, {1, 1}, {0, 1}};
    d.fundamental_wedge = {{0}, {0, 1}};
    // varpi1 = a1 + a2/2, varpi2 = a1 + a2
    d.fundamental_root_coords = {{2, 1}, {2, 2}};
    d.scale = 2;
  } else {
    throw std::invalid_argument("no tensor model for " + algebra);
  }
  return d;
}

Tensor wedge(const std::vector<int>& idx) {
  Tensor t;
  std::vector<int> perm(idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    Word w;
    for (int p : perm) w.push_back(idx[static_cast<std::size_t>(p)]);
    t[w] += inversions % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  return out;
}

void prune(Tensor& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

Tensor lower(const Defining& d, int op, const Tensor& v) {
  Tensor out;
  for (const auto& [w, c] : v)
    for (std::size_t slot = 0; slot < w.size(); ++slot)
      for (const auto& [from, to, coeff] : d.lowering[static_cast<std::size_t>(op)])
        if (w[slot] == from) {
          Word next = w;
          next[slot] = to;
          out[next] += c * coeff;
        }
  prune(out);
  return out;
}

Tensor act_w0(const Defining& d, const Tensor& v) {
  Tensor out;
  for (const auto& [w, c] : v) {
    Word next = w;
    std::int64_t sign = 1;
    for (auto& letter : next) {
      const auto [target, s] = d.w0[static_cast<std::size_t>(letter)];
      letter = target;
      sign *= s;
    }
    out[next] += sign * c;
  }
  prune(out);
  return out;
}

// All words in the lowering operators using op j exactly counts[j] times.
void words(std::vector<int>& counts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  bool done = true;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    done = false;
    --counts[j];
    prefix.push_back(static_cast<int>(j));
    words(counts, prefix, out);
    prefix.pop_back();
    ++counts[j];
  }
  if (done) out.push_back(prefix);
}

}  // namespace

TraceResult zero_weight_trace(const std::string& algebra, const std::vector<std::int64_t>& lambda) {
  std::vector<std::int64_t> labels = lambda;
  std::string model = algebra;
  if (algebra == "B2") {
    model = "C2";
    std::swap(labels[0], labels[1]);
  }
  const Defining d = defining(model);
  if (labels.size() != d.fundamental_wedge.size()) throw std::invalid_argument("wrong label count");

  // Zero weight is reached iff lambda is an integral combination of simple roots.
  std::vector<int> counts(labels.size(), 0);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    std::int64_t scaled = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) scaled += labels[i] * d.fundamental_root_coords[i][j];
    if (scaled % d.scale != 0) return {};
    counts[j] = static_cast<int>(scaled / d.scale);
  }

  Tensor highest{{Word{}, 1}};
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::int64_t k = 0; k < labels[i]; ++k) highest = tensor_product(highest, wedge(d.fundamental_wedge[i]));

  std::vector<std::vector<int>> all;
  std::vector<int> prefix;
  words(counts, prefix, all);

  // Row-reduce the spanning vectors; rows end up with a unit pivot and zeros
  // at the other rows' pivots, so coordinates can be read off at pivots.
  std::vector<std::map<Word, Rational>> basis;
  std::vector<Word> pivots;
  auto reduce = [&](std::map<Word, Rational> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto it = v.find(pivots[b]);
      if (it == v.end()) continue;
      const Rational f = it->second;
      for (const auto& [w, c] : basis[b]) {
        v[w] -= f * c;
        if (v[w] == Rational(0)) v.erase(w);
      }
    }
    return v;
  };
  for (const auto& word : all) {
    Tensor t = highest;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = lower(d, *it, t);
    std::map<Word, Rational> v;
    for (const auto& [w, c] : t) v[w] = Rational(c);
    v = reduce(v);
    if (v.empty()) continue;
    const Word pivot = v.begin()->first;
    const Rational inv = Rational(1) / v.begin()->second;
    for (auto& [w, c] : v) c *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto it = basis[b].find(pivot);
      if (it == basis[b].end()) continue;
      const Rational f = it->second;
      for (const auto& [w, c] : v) {
        basis[b][w] -= f * c;
        if (basis[b][w] == Rational(0)) basis[b].erase(w);
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
  }

  Rational trace(0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Tensor integral;
    // Clear denominators, act, then rescale.
    std::int64_t den = 1;
    for (const auto& [w, c] : basis[b]) den = std::lcm(den, c.den());
    for (const auto& [w, c] : basis[b]) integral[w] = (c * Rational(den)).to_integer();
    const Tensor image = act_w0(d, integral);
    std::map<Word, Rational> img;
    for (const auto& [w, c] : image) img[w] = Rational(c, den);
    // The image lies in V^0; its b-th coordinate sits at the b-th pivot.
    const std::map<Word, Rational> rest = reduce(img);
    if (!rest.empty()) throw std::logic_error("w0 lift does not preserve the zero-weight space");
    auto it = img.find(pivots[b]);
    if (it != img.end()) trace += it->second;
  }
  return {static_cast<std::int64_t>(basis.size()), trace.to_integer()};
}

}  // namespace oracle
