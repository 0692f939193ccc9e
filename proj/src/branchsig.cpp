#include "w0sig/branchsig.hpp"

#include <cctype>
#include <sstream>

#include "w0sig/charfreud.hpp"

namespace w0sig {

Signature tensor_signature(const Signature& a, const Signature& b) {
  return {checked_add(checked_mul(a.p, b.p), checked_mul(a.q, b.q)),
          checked_add(checked_mul(a.p, b.q), checked_mul(a.q, b.p))};
}

Signature sl2_signature(std::int64_t k) {
  if (k < 0) throw DomainError("sl2 highest weight must be nonnegative, got " + std::to_string(k));
  if (k % 2 == 1) return {0, 0};
  return k % 4 == 0 ? Signature{1, 0} : Signature{0, 1};
}

Signature abelian_signature(std::span<const std::int64_t> charges) {
  for (std::int64_t c : charges)
    if (c != 0) return {0, 0};
  return {1, 0};
}

std::vector<EpsCoords> orthogonal_root_set(const AlgebraId& id) {
  validate(id);
  const int r = id.rank;
  const int n = id.family == Family::A ? r + 1 : id.family == Family::E ? 8 : id.family == Family::G ? 3 : r;
  std::vector<EpsCoords> out;
  const Rational half(1, 2);
  // Each term is (ambient index 1-based, coefficient).
  auto root = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    EpsCoords v = EpsCoords::Zero(n);
    for (const auto& [i, c] : terms) v[i - 1] += c;
    out.push_back(v);
  };
  auto plus_minus_pairs = [&](int count) {
    for (int i = 1; i <= count; ++i) {
      root({{2 * i - 1, 1}, {2 * i, 1}});
      root({{2 * i - 1, 1}, {2 * i, -1}});
    }
  };
  switch (id.family) {
    case Family::A:
      for (int i = 1; i <= (r + 1) / 2; ++i) root({{i, 1}, {r + 2 - i, -1}});
      break;
    case Family::B:
      plus_minus_pairs(r / 2);
      if (r % 2 == 1) root({{r, 1}});
      break;
    case Family::C:
      for (int i = 1; i <= r; ++i) root({{i, 2}});
      break;
    case Family::D:
      plus_minus_pairs(r / 2);
      // The reference listing numbers the two spin nodes the other way
      // round, which shows up as the last pair of D_{2n} in minus-plus order.
      if (r % 2 == 0) std::swap(out[r - 2], out[r - 1]);
      break;
    case Family::E:
      if (r == 6) {
        root({{1, -1}, {4, 1}});
        root({{2, -1}, {3, 1}});
        for (const Rational sign : {Rational(1), Rational(-1)})
          root({{1, sign * half}, {2, sign * half}, {3, sign * half}, {4, sign * half},
                {5, half}, {6, -half}, {7, -half}, {8, half}});
      } else {
        for (int i = 1; i <= (r == 7 ? 3 : 4); ++i) {
          root({{2 * i - 1, 1}, {2 * i, 1}});
          root({{2 * i - 1, -1}, {2 * i, 1}});
        }
        if (r == 7) root({{7, -1}, {8, 1}});
      }
      break;
    case Family::F:
      root({{1, 1}, {2, 1}});
      root({{1, 1}, {2, -1}});
      root({{3, 1}, {4, 1}});
      root({{3, 1}, {4, -1}});
      break;
    case Family::G:
      root({{1, 1}, {2, -1}});
      root({{1, -1}, {2, -1}, {3, 2}});
      break;
  }
  return out;
}

RestrictionData restriction_data(const RootSystem& rs, FillerBasis filler) {
  RestrictionData rd;
  rd.algebra = rs.algebra();
  rd.ortho_roots = orthogonal_root_set(rs.algebra());
  const int r = rs.rank();
  rd.s = static_cast<int>(rd.ortho_roots.size());
  rd.t = r - rd.s;
  rd.matrix = IntMatrix::Zero(r, r);
  for (int k = 0; k < r; ++k) {
    const EpsCoords varpi = rs.fundamental_weights().col(k);
    for (int i = 0; i < rd.s; ++i) rd.matrix(k, i) = pairing(varpi, rd.ortho_roots[i]).to_integer();
  }
  if (rd.t > 0) {
    // Functionals f with W0^T f = f vanish on the -1 eigenspace of w0; the
    // rows of I + W0 generate them.
    const IntMatrix generators = IntMatrix::Identity(r, r) + rs.w0_matrix();
    IntMatrix basis = hermite_rows(generators);
    if (basis.rows() != rd.t)
      throw InternalError("w0-fixed functionals have rank " + std::to_string(basis.rows()) +
                          ", expected " + std::to_string(rd.t));
    IntMatrix columns = basis.transpose();
    if (filler == FillerBasis::Alternate) {
      IntMatrix mix = IntMatrix::Zero(rd.t, rd.t);
      for (int i = 0; i < rd.t; ++i)
        for (int j = i; j < rd.t; ++j) mix(i, j) = i == j ? 2 : 1;
      columns = columns * mix;
    }
    rd.matrix.rightCols(rd.t) = columns;
  }
  if (integer_determinant(rd.matrix) == 0)
    throw InternalError("restriction matrix for " + rd.algebra.name() + " is singular");
  return rd;
}

WeightMultiset restrict_character(const WeightMultiset& character, const RestrictionData& rd) {
  WeightMultiset out;
  const IntMatrix mt = rd.matrix.transpose();
  for (const auto& [w, m] : character) {
    if (w.size() != rd.matrix.rows()) throw InvalidInput("weight size does not match restriction matrix");
    out.add(mt * w, m);
  }
  return out;
}

std::vector<BranchComponent> peel_branch(const WeightMultiset& restricted, int s) {
  std::map<IntVector, Multiplicity, LexGreater> remaining(restricted.begin(), restricted.end());
  std::vector<BranchComponent> out;
  while (!remaining.empty()) {
    const auto top_it = remaining.begin();
    const IntVector top = top_it->first;
    const Multiplicity m = top_it->second;
    if (m < 0) throw MalformedCharacter("negative multiplicity at " + format_vector(top));
    for (int j = 0; j < s; ++j)
      if (top[j] < 0) throw MalformedCharacter("maximal weight " + format_vector(top) + " has a negative sl2 label");

    // Walk the product of sl2 strings k, k-2, ..., -k in each factor.
    IntVector w = top;
    while (true) {
      const auto it = remaining.find(w);
      if (it == remaining.end() || it->second < m)
        throw MalformedCharacter("weight " + format_vector(w) + " missing while removing " + format_vector(top));
      it->second -= m;
      if (it->second == 0) remaining.erase(it);
      int j = 0;
      while (j < s) {
        if (w[j] > -top[j]) {
          w[j] -= 2;
          break;
        }
        w[j] = top[j];
        ++j;
      }
      if (j == s) break;
    }
    out.push_back({top, m});
  }
  return out;
}

Signature component_signature(const IntVector& highest, int s) {
  Signature sig{1, 0};
  for (int j = 0; j < s; ++j) sig = tensor_signature(sig, sl2_signature(highest[j]));
  const auto charges = std::span<const std::int64_t>(highest.data() + s, static_cast<std::size_t>(highest.size() - s));
  return tensor_signature(sig, abelian_signature(charges));
}

SignatureReport analyze_signature(const RootSystem& rs, const RestrictionData& rd, const Weight& lambda) {
  SignatureReport report;
  report.dim = weyl_dim(lambda, rs);
  const WeightMultiset character = full_character(lambda, rs);
  if (character.total() != report.dim)
    throw InternalError("character of " + format_weight(lambda) + " has total multiplicity " +
                        std::to_string(character.total()) + ", expected " + std::to_string(report.dim));
  report.zero_mult = character.at(Weight::Zero(rs.rank()));
  const auto components = peel_branch(restrict_character(character, rd), rd.s);
  report.components = components.size();
  for (const auto& c : components)
    report.signature = report.signature + c.multiplicity * component_signature(c.highest, rd.s);
  if (report.signature.total() != report.zero_mult)
    throw InternalError("signature " + report.signature.str() + " does not account for the " +
                        std::to_string(report.zero_mult) + "-dimensional zero-weight space");
  return report;
}

Signature w0_signature(const RootSystem& rs, const RestrictionData& rd, const Weight& lambda) {
  return analyze_signature(rs, rd, lambda).signature;
}

Signature w0_signature(const RootSystem& rs, const Weight& lambda) {
  return w0_signature(rs, restriction_data(rs), lambda);
}

std::string format_restriction_matrix(const std::string& name, const IntMatrix& m) {
  std::ostringstream os;
  const std::string indent(name.size() + 4, ' ');
  os << name << " = [";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ",\n" << indent;
    os << '[' << format_vector(IntVector(m.row(i).transpose())) << ']';
  }
  os << ']';
  return os.str();
}

std::map<std::string, IntMatrix> parse_restriction_listing(std::string_view text) {
  std::map<std::string, IntMatrix> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c)
      throw InvalidInput(std::string("restriction listing: expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string name(text.substr(start, pos - start));
    if (name.empty()) throw InvalidInput("restriction listing: expected a name at offset " + std::to_string(pos));
    expect('=');
    expect('[');
    std::vector<std::vector<std::int64_t>> rows;
    while (true) {
      expect('[');
      std::vector<std::int64_t> row;
      while (true) {
        skip_space();
        const std::size_t num_start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        row.push_back(std::stoll(std::string(text.substr(num_start, pos - num_start))));
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        expect(']');
        break;
      }
      rows.push_back(std::move(row));
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size()) throw InvalidInput("restriction listing: ragged matrix " + name);
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    out.emplace(name, std::move(m));
  }
  return out;
}

}  // namespace w0sig
