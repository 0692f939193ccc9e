#include "w0sig/linalg.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace w0sig {

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t d = parse_int(text.substr(slash + 1));
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

IntMatrix hermite_rows(IntMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (m(i, c) != 0 && (best < 0 || std::abs(m(i, c)) < std::abs(m(best, c)))) best = i;
      }
      if (best < 0) break;
      m.row(best).swap(m.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        const std::int64_t q = m(i, c) / m(r, c);
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(r, j)));
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) = -m.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      std::int64_t q = m(i, c) / m(r, c);
      if (m(i, c) - q * m(r, c) < 0) --q;
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(r, j)));
    }
    ++r;
  }
  return m.topRows(r);
}

std::int64_t integer_determinant(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::int64_t sign = 1;
  __int128 prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const __int128 v = (__int128(m(i, j)) * m(k, k) - __int128(m(i, k)) * m(k, j)) / prev;
        m(i, j) = narrow_checked(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {
template <typename V>
std::string join(const V& v, char sep) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}
}  // namespace

std::string format_vector(const IntVector& v, char sep) { return join(v, sep); }
std::string format_vector(const RationalVector& v, char sep) { return join(v, sep); }

}  // namespace w0sig
