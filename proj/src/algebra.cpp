#include "w0sig/algebra.hpp"

#include <cctype>
#include <charconv>

namespace w0sig {

std::string AlgebraId::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void validate(const AlgebraId& id) {
  const int r = id.rank;
  switch (id.family) {
    case Family::A:
      if (r < 1) throw InvalidInput("type A requires rank >= 1, got " + std::to_string(r));
      return;
    case Family::B:
      if (r < 2) throw InvalidInput("type B requires rank >= 2, got " + std::to_string(r));
      return;
    case Family::C:
      if (r < 2) throw InvalidInput("type C requires rank >= 2, got " + std::to_string(r));
      return;
    case Family::D:
      if (r < 3) throw InvalidInput("type D requires rank >= 3, got " + std::to_string(r));
      return;
    case Family::E:
      if (r < 6 || r > 8) throw InvalidInput("type E requires rank 6, 7 or 8, got " + std::to_string(r));
      return;
    case Family::F:
      if (r != 4) throw InvalidInput("type F requires rank 4, got " + std::to_string(r));
      return;
    case Family::G:
      if (r != 2) throw InvalidInput("type G requires rank 2, got " + std::to_string(r));
      return;
  }
  throw InvalidInput("unknown Cartan type");
}

AlgebraId make_algebra(Family family, int rank) {
  AlgebraId id{family, rank};
  validate(id);
  return id;
}

std::pair<Family, int> parse_algebra_token(std::string_view token) {
  if (token.size() < 2) throw InvalidInput("bad algebra token '" + std::string(token) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
  if (f < 'A' || f > 'G') throw InvalidInput("bad algebra token '" + std::string(token) + "'");
  int rank = 0;
  const auto digits = token.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidInput("bad algebra token '" + std::string(token) + "'");
  return {static_cast<Family>(f), rank};
}

AlgebraId parse_algebra(std::string_view token) {
  const auto [family, rank] = parse_algebra_token(token);
  return make_algebra(family, rank);
}

IntVector AliasResolution::map_weight(const IntVector& w) const {
  if (w.size() != static_cast<Eigen::Index>(index_map.size()))
    throw InvalidInput("expected " + std::to_string(index_map.size()) + " coefficients, got " +
                       std::to_string(w.size()));
  IntVector out(w.size());
  for (std::size_t i = 0; i < index_map.size(); ++i) out[index_map[i]] = w[static_cast<Eigen::Index>(i)];
  return out;
}

AliasResolution normalize_alias(Family family, int rank) {
  const std::string requested = std::string(1, static_cast<char>(family)) + std::to_string(rank);
  auto alias = [&](AlgebraId target, std::vector<int> map) {
    return AliasResolution{target, std::move(map),
                           requested + " is isomorphic to " + target.name() +
                               "; coefficients were renumbered accordingly"};
  };
  if ((family == Family::B || family == Family::C) && rank == 1) return alias({Family::A, 1}, {0});
  // C2 short simple root is alpha_1, B2 short simple root is alpha_2.
  if (family == Family::C && rank == 2) return alias({Family::B, 2}, {1, 0});
  // D3 node 1 is the branch node, i.e. the middle node of A3.
  if (family == Family::D && rank == 3) return alias({Family::A, 3}, {1, 0, 2});
  const AlgebraId id = make_algebra(family, rank);
  std::vector<int> map(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) map[static_cast<std::size_t>(i)] = i;
  return {id, std::move(map), std::nullopt};
}

namespace {
std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace

IntVector parse_weight(std::string_view text) {
  const auto parts = split_commas(text);
  IntVector w(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto tok = trim(parts[i]);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidInput("bad weight coefficient '" + std::string(parts[i]) + "'");
    w[static_cast<Eigen::Index>(i)] = v;
  }
  return w;
}

RationalVector parse_rational_vector(std::string_view text) {
  const auto parts = split_commas(text);
  RationalVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = Rational::parse(trim(parts[i]));
  return v;
}

std::string format_weight(const IntVector& w) { return format_vector(w, ','); }

std::vector<AlgebraId> algebras_up_to_rank(int max_rank) {
  std::vector<AlgebraId> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace w0sig
