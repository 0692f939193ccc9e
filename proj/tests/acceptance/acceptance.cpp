// Acceptance gate: one PASS/FAIL line per criterion. With no argument every
// criterion runs; with a number only that one does. Exit status is zero iff
// all requested criteria pass.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kostant.hpp"
#include "w0sig/branchsig.hpp"
#include "w0sig/charfreud.hpp"
#include "w0sig/classify.hpp"
#include "w0sig/rootsys.hpp"

using namespace w0sig;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& s) { details.push_back(s); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Weight from_json(const nlohmann::json& a) {
  Weight w(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) w[static_cast<Eigen::Index>(i)] = a[i].get<std::int64_t>();
  return w;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<Weight> dominant_up_to(int rank, std::int64_t max_sum) {
  std::vector<Weight> out{Weight::Zero(rank)};
  WeightSet seen(out.begin(), out.end());
  for (std::size_t h = 0; h < out.size(); ++h) {
    const Weight cur = out[h];
    if (cur.sum() == max_sum) continue;
    for (int i = 0; i < rank; ++i) {
      Weight next = cur;
      ++next[i];
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

// Criterion 1: explicitly computed pure representations.
Outcome pure_golden() {
  Outcome o;
  struct Expected {
    const char* algebra;
    std::int64_t dim, p, q;
  };
  // The values enumerated in the acceptance criterion, in listing order.
  const std::vector<Expected> listed = {
      {"E7", 1463, 0, 21}, {"E7", 1539, 27, 0}, {"E7", 133, 0, 7},   {"E7", 7371, 63, 0},
      {"E8", 248, 0, 8},   {"E8", 27000, 120, 0}, {"E8", 3875, 35, 0}, {"F4", 26, 2, 0},
      {"F4", 324, 12, 0},  {"F4", 52, 0, 4},    {"F4", 1053, 21, 0}, {"G2", 14, 0, 2},
      {"G2", 77, 5, 0},    {"G2", 7, 0, 1},     {"G2", 27, 3, 0},    {"C3", 84, 0, 4},
      {"C4", 594, 10, 0},
  };
  const auto t0 = Clock::now();
  const auto rows = nlohmann::json::parse(slurp(W0SIG_TEST_DATA "/pure_reps.json"));
  o.require(rows.size() == listed.size(), "fixture has " + std::to_string(rows.size()) + " rows");
  std::size_t k = 0;
  for (const auto& row : rows) {
    const AlgebraId id = parse_algebra(row.at("algebra").get<std::string>());
    const RootSystem rs(id);
    const Weight lambda = from_json(row.at("weight"));
    EpsCoords eps(static_cast<Eigen::Index>(row.at("eps").size()));
    for (std::size_t i = 0; i < row.at("eps").size(); ++i)
      eps[static_cast<Eigen::Index>(i)] = Rational(row.at("eps")[i].get<std::int64_t>());
    const std::string tag = id.name() + " " + format_weight(lambda);
    o.require(from_eps(eps, rs) == lambda, tag + " e-coordinates");
    const SignatureReport r = analyze_signature(rs, restriction_data(rs), lambda);
    o.require(r.dim == row.at("dim").get<std::int64_t>(), tag + " dim " + std::to_string(r.dim));
    o.require(r.signature == Signature{row.at("p").get<std::int64_t>(), row.at("q").get<std::int64_t>()},
              tag + " signature " + r.signature.str());
    if (k < listed.size()) {
      const Expected& e = listed[k];
      o.require(id.name() == e.algebra && r.dim == e.dim && r.signature == Signature{e.p, e.q},
                tag + " against the enumerated criterion values");
    }
    ++k;
  }
  const double secs = seconds_since(t0);
  o.require(secs < 300.0, "runtime");
  o.note(std::to_string(k) + " rows reproduced (the criterion enumerates 17 values under an \"18 rows\" heading)");
  o.note("runtime " + std::to_string(secs) + " s, limit 300 s");
  return o;
}

// Criterion 2: adjoint representation has signature (t, s).
Outcome adjoint_law() {
  Outcome o;
  const auto t0 = Clock::now();
  const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "C3", "C4",
                         "C5", "D4", "D5", "D6", "E6", "E7", "F4", "G2"};
  for (const char* name : names) {
    const AlgebraId id = parse_algebra(name);
    const RootSystem rs(id);
    const int r = id.rank;
    const std::int64_t t = id.family == Family::A ? r / 2
                           : (id.family == Family::D && r % 2 == 1) ? 1
                           : (id.family == Family::E && r == 6)     ? 2
                                                                    : 0;
    const Signature s = w0_signature(rs, rs.highest_root());
    o.require(s == Signature{t, r - t}, std::string(name) + " adjoint " + s.str());
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime");
  o.note("19 algebras, runtime " + std::to_string(secs) + " s, limit 120 s");
  return o;
}

// Criterion 3: prediction agrees with the computed signature.
Outcome prediction_cross_validation() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t total = 0, disagreements = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}) {
    const RootSystem rs(parse_algebra(name));
    const auto rows = verify_classification(rs, 6, 50000, worker_count());
    for (const VerifyRow& r : rows) {
      ++total;
      if (!r.agree) {
        ++disagreements;
        o.require(false, std::string(name) + " " + format_weight(r.weight) + " computed " + r.signature.str() +
                             " predicted " + to_string(r.prediction.kind));
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(total > 0, "no weights enumerated");
  o.require(secs < 900.0, "runtime");
  o.note(std::to_string(total) + " weights, " + std::to_string(disagreements) + " disagreements, runtime " +
         std::to_string(secs) + " s, limit 900 s");
  return o;
}

// Criterion 4: first s columns of the restriction matrices.
Outcome restriction_listing() {
  Outcome o;
  const auto listing = parse_restriction_listing(slurp(W0SIG_TEST_DATA "/restriction_matrices.txt"));
  o.require(listing.size() == 31, "listing has " + std::to_string(listing.size()) + " matrices");
  std::size_t full = 0;
  for (const auto& [name, expected] : listing) {
    const RestrictionData rd = restriction_data(RootSystem(parse_algebra(name.substr(3))));
    const bool shape = expected.rows() == rd.matrix.rows() && expected.cols() == rd.matrix.cols();
    o.require(shape && rd.matrix.leftCols(rd.s) == expected.leftCols(rd.s), name);
    if (shape && rd.matrix == expected) ++full;
  }
  o.note(std::to_string(listing.size()) + " matrices compared; " + std::to_string(full) +
         " also agree in the filler columns");
  return o;
}

// Criterion 5: basis and orbit counts.
Outcome basis_counts() {
  Outcome o;
  const std::vector<std::string> listed = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3",
                                           "C4", "C5", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
  // C2 is B2 after alias resolution, so the family of distinct algebras is
  // one shorter than the listing.
  std::set<AlgebraId> distinct;
  std::size_t literal_sum = 0;
  for (const std::string& name : listed) {
    const auto [family, rank] = parse_algebra_token(name);
    const AlgebraId id = normalize_alias(family, rank).algebra;
    literal_sum += ideal_basis(id).size();
    distinct.insert(id);
  }
  std::size_t basis_sum = 0;
  std::map<AlgebraId, std::vector<Weight>> both_tables;
  for (const AlgebraId& id : distinct) {
    const auto b = ideal_basis(id);
    basis_sum += b.size();
    both_tables[id] = b;
  }
  const auto rows = nlohmann::json::parse(slurp(W0SIG_TEST_DATA "/pure_reps.json"));
  for (const auto& row : rows)
    both_tables[parse_algebra(row.at("algebra").get<std::string>())].push_back(from_json(row.at("weight")));
  std::size_t orbits = 0, entries = 0;
  for (const auto& [id, ws] : both_tables) {
    orbits += count_outer_orbits(RootSystem(id), ws);
    entries += ws.size();
  }

  o.require(basis_sum == 149, "sum of ideal basis sizes is " + std::to_string(basis_sum) + ", expected 149");
  o.require(orbits == 138, "outer-automorphism orbits across both tables " + std::to_string(orbits) +
                               ", expected 138");
  o.note("ideal basis total " + std::to_string(basis_sum) + " over " + std::to_string(distinct.size()) +
         " distinct algebras (" + std::to_string(literal_sum) + " if C2 is counted again beside B2)");
  o.note("both tables together: " + std::to_string(entries) + " representations (" + std::to_string(rows.size()) +
         " pure + " + std::to_string(basis_sum) + " mixed), " + std::to_string(orbits) + " orbits");
  o.note("149 = 167 - 18 presumes 18 pure rows; the pure table has " + std::to_string(rows.size()) +
         ", giving 167 - " + std::to_string(rows.size()) + " = " + std::to_string(167 - rows.size()));
  return o;
}

// Criterion 6: oracle and property suites.
Outcome oracle_suites() {
  Outcome o;
  std::size_t kostant_checks = 0;
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    const RootSystem rs(parse_algebra(name));
    const auto data = oracle::small_root_data(name);
    for (const Weight& lambda : dominant_up_to(rs.rank(), 4)) {
      const oracle::Vec l(lambda.data(), lambda.data() + lambda.size());
      for (const auto& [mu, m] : dominant_character(lambda, rs)) {
        const oracle::Vec u(mu.data(), mu.data() + mu.size());
        o.require(m == oracle::kostant_multiplicity(data, l, u),
                  std::string(name) + " mult(" + format_weight(lambda) + ", " + format_weight(mu) + ")");
        ++kostant_checks;
      }
    }
  }
  o.note("Freudenthal vs Kostant: " + std::to_string(kostant_checks) + " multiplicities");

  std::size_t zero_checks = 0;
  for (const AlgebraId& id : algebras_up_to_rank(6)) {
    const RootSystem rs(id);
    const RestrictionData rd = restriction_data(rs);
    for (const Weight& lambda : dominant_up_to(rs.rank(), rs.rank() <= 3 ? 3 : 2)) {
      if (weyl_dim(lambda, rs) > 50000) continue;
      const SignatureReport r = analyze_signature(rs, rd, lambda);
      o.require(r.signature.total() == freudenthal_mult(lambda, Weight::Zero(rs.rank()), rs),
                id.name() + " " + format_weight(lambda) + " p+q");
      ++zero_checks;
    }
  }
  o.note("p+q = zero-weight multiplicity: " + std::to_string(zero_checks) + " signatures");

  std::size_t filler_checks = 0;
  for (const char* name : {"A2", "A3", "A4", "A5", "A6", "D5", "D7", "E6"}) {
    const RootSystem rs(parse_algebra(name));
    const RestrictionData h = restriction_data(rs, FillerBasis::Hermite);
    const RestrictionData a = restriction_data(rs, FillerBasis::Alternate);
    o.require(h.matrix != a.matrix, std::string(name) + " filler bases coincide");
    for (const Weight& lambda : dominant_up_to(rs.rank(), 2)) {
      if (!is_radical(lambda, rs.algebra()) || weyl_dim(lambda, rs) > 20000) continue;
      o.require(w0_signature(rs, h, lambda) == w0_signature(rs, a, lambda),
                std::string(name) + " " + format_weight(lambda) + " filler dependence");
      ++filler_checks;
    }
  }
  o.require(filler_checks >= 20, "only " + std::to_string(filler_checks) + " filler cases");
  o.note("filler independence: " + std::to_string(filler_checks) + " cases");

  std::mt19937 gen(1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const AlgebraId& id : algebras_up_to_rank(8)) {
    const RootSystem rs(id);
    const WeylWord& w0 = longest_element(rs);
    o.require(w0.length() == rs.num_positive_roots(), id.name() + " word length");
    for (int trial = 0; trial < 1000; ++trial) {
      Weight w(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) w[i] = coef(gen);
      if (apply_w0(w0, apply_w0(w0, w, rs), rs) != w) {
        o.require(false, id.name() + " w0 not an involution on " + format_weight(w));
        break;
      }
    }
    WeightSet negatives;
    for (const Weight& root : rs.positive_roots_dynkin()) negatives.insert(-root);
    for (const Weight& root : rs.positive_roots_dynkin())
      o.require(negatives.count(apply_w0(w0, root, rs)) == 1, id.name() + " w0 does not negate positive roots");
  }
  o.note("w0 involution and positive-root negation: all algebras up to rank 8");

  std::size_t ideal_checks = 0;
  std::mt19937 pick(2);
  for (const char* name : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    const RootSystem rs(parse_algebra(name));
    const auto basis = ideal_basis(rs.algebra());
    std::vector<Weight> mus;
    for (const Weight& m : dominant_radical_weights(rs.algebra(), 2))
      if (weyl_dim(m, rs) <= 2000) mus.push_back(m);
    std::uniform_int_distribution<std::size_t> pb(0, basis.size() - 1), pm(0, mus.size() - 1);
    std::size_t local = 0;
    for (int trial = 0; trial < 400 && local < 25; ++trial) {
      const Weight& lambda = basis[pb(pick)];
      const Weight& mu = mus[pm(pick)];
      if (weyl_dim(lambda + mu, rs) > 60000) continue;
      o.require(ideal_property_check(rs, lambda, mu),
                std::string(name) + " " + format_weight(lambda) + " + " + format_weight(mu) + " not mixed");
      ++local;
    }
    ideal_checks += local;
  }
  o.require(ideal_checks >= 200, "only " + std::to_string(ideal_checks) + " ideal pairs");
  o.note("ideal property: " + std::to_string(ideal_checks) + " sampled pairs");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "pure representation golden table (dimension and signature)", pure_golden},
      {2, "adjoint signature equals (t, s)", adjoint_law},
      {3, "prediction agrees with computation, coefficient sum <= 6, dim <= 50000", prediction_cross_validation},
      {4, "restriction matrix first columns match the listing", restriction_listing},
      {5, "ideal basis total 149 and 138 outer orbits", basis_counts},
      {6, "oracle and property suites", oracle_suites},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!wanted.empty() && wanted.count(c.number) == 0) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << '\n';
    for (const std::string& d : o.details) std::cout << "      " << d << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
