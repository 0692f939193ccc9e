#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "w0sig/branchsig.hpp"
#include "w0sig/charfreud.hpp"
#include "w0sig/classify.hpp"
#include "w0sig/errors.hpp"
#include "w0sig/rootsys.hpp"

namespace w0sig::cli {
namespace {

using nlohmann::json;

json weight_json(const IntVector& w) {
  json a = json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w[i]);
  return a;
}

json sign_json(int sign) { return sign == 0 ? json(nullptr) : json(sign); }

std::string sign_text(int sign) {
  if (sign == 0) return "none";
  return sign > 0 ? "+1" : "-1";
}

// Computed kind: (0,0) happens exactly for non-radical weights.
std::string signature_kind(const Signature& s) {
  if (s.total() == 0) return "nonradical";
  return s.mixed() ? "mixed" : "pure";
}

// B1 and C1 have no core root system, so their single coordinate is paired
// with the coroot by hand: alpha^vee = 2 e1 for B1 and e1 for C1.
IntVector rank_one_from_eps(Family family, const RationalVector& e) {
  if (e.size() != 1) throw InvalidInput("expected 1 e-coordinate, got " + std::to_string(e.size()));
  const Rational c = family == Family::B ? Rational(2) * e[0] : e[0];
  if (!c.is_integer()) throw LatticeError("e-coordinates " + format_vector(e) + " are not in the weight lattice");
  IntVector w(1);
  w[0] = c.to_integer();
  return w;
}

IntVector resolve_weight(const std::string& text, Family family, int rank, const AliasResolution& alias,
                         bool eps) {
  if (!eps) return alias.map_weight(parse_weight(text));
  const RationalVector e = parse_rational_vector(text);
  if (rank == 1 && (family == Family::B || family == Family::C)) return rank_one_from_eps(family, e);
  const RootSystem requested(make_algebra(family, rank));
  if (e.size() != requested.ambient_dim())
    throw InvalidInput("expected " + std::to_string(requested.ambient_dim()) + " e-coordinates, got " +
                       std::to_string(e.size()));
  return alias.map_weight(from_eps(e, requested));
}

class Reporter {
public:
  Reporter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void line(const std::string& s) { text_ << s << '\n'; }
  void set_json(json j) { json_ = std::move(j); }

  void flush() {
    std::ostringstream body;
    if (opts_.json)
      body << json_.dump(2) << '\n';
    else
      body << text_.str();
    if (opts_.out) {
      std::ofstream f(*opts_.out);
      if (!f) throw InvalidInput("cannot open output file " + *opts_.out);
      f << body.str();
    } else {
      out_ << body.str();
    }
  }

private:
  const Options& opts_;
  std::ostream& out_;
  std::ostringstream text_;
  json json_;
};

std::string head(const AlgebraId& id, const IntVector& w) {
  return "algebra=" + id.name() + " weight=" + format_weight(w);
}

int cmd_signature(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const RestrictionData rd = restriction_data(rs);
  const SignatureReport r = analyze_signature(rs, rd, *rq.weight);
  const Signature& s = r.signature;
  rep.line(head(rq.algebra, *rq.weight) + " dim=" + std::to_string(r.dim) +
           " zero_mult=" + std::to_string(r.zero_mult) + " signature=" + s.str() +
           " p=" + std::to_string(s.p) + " q=" + std::to_string(s.q) + " kind=" + signature_kind(s) +
           " sign=" + sign_text(s.sign()));
  rep.set_json({{"algebra", rq.algebra.name()},
                {"weight", weight_json(*rq.weight)},
                {"dim", r.dim},
                {"zero_mult", r.zero_mult},
                {"p", s.p},
                {"q", s.q},
                {"kind", signature_kind(s)},
                {"sign", sign_json(s.sign())}});
  return kOk;
}

int cmd_predict(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const Prediction pr = predict(rq.algebra, *rq.weight);
  const std::int64_t dim = weyl_dim(*rq.weight, rs);
  std::string text = head(rq.algebra, *rq.weight) + " dim=" + std::to_string(dim) +
                     " kind=" + to_string(pr.kind) + " sign=" + sign_text(pr.sign);
  json j = {{"algebra", rq.algebra.name()}, {"weight", weight_json(*rq.weight)}, {"dim", dim},
            {"kind", to_string(pr.kind)},   {"sign", sign_json(pr.sign)},       {"p", nullptr},
            {"q", nullptr}};
  int code = kOk;
  if (rq.options.check) {
    const Signature s = w0_signature(rs, *rq.weight);
    const bool ok = agrees(pr, s);
    text += " p=" + std::to_string(s.p) + " q=" + std::to_string(s.q) + " computed=" + signature_kind(s) +
            " agree=" + (ok ? "yes" : "no");
    j["p"] = s.p;
    j["q"] = s.q;
    j["computed"] = signature_kind(s);
    j["agree"] = ok;
    if (!ok) code = kDisagreement;
  }
  rep.line(text);
  rep.set_json(j);
  return code;
}

int cmd_dimension(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const std::int64_t dim = weyl_dim(*rq.weight, rs);
  rep.line(head(rq.algebra, *rq.weight) + " dim=" + std::to_string(dim));
  rep.set_json({{"algebra", rq.algebra.name()}, {"weight", weight_json(*rq.weight)}, {"dim", dim}});
  return kOk;
}

int cmd_character(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const auto dom = dominant_character(*rq.weight, rs);
  const std::int64_t dim = weyl_dim(*rq.weight, rs);
  rep.line(head(rq.algebra, *rq.weight) + " dim=" + std::to_string(dim) +
           " dominant_weights=" + std::to_string(dom.size()));
  json rows = json::array();
  for (const auto& [mu, m] : dom) {
    rep.line("mu=" + format_weight(mu) + " mult=" + std::to_string(m) +
             " orbit=" + std::to_string(weyl_orbit(mu, rs).size()));
    rows.push_back({{"mu", weight_json(mu)}, {"mult", m}});
  }
  rep.set_json({{"algebra", rq.algebra.name()},
                {"weight", weight_json(*rq.weight)},
                {"dim", dim},
                {"dominant_character", rows}});
  return kOk;
}

int cmd_basis(const CommandRequest& rq, Reporter& rep, bool ideal) {
  const RootSystem rs(rq.algebra);
  const std::vector<Weight> basis = ideal ? ideal_basis(rq.algebra) : hilbert_basis_M(rq.algebra);
  json rows = json::array();
  for (const Weight& w : basis) {
    const std::int64_t dim = weyl_dim(w, rs);
    rep.line(head(rq.algebra, w) + " dim=" + std::to_string(dim));
    rows.push_back({{"algebra", rq.algebra.name()}, {"weight", weight_json(w)}, {"dim", dim}});
  }
  rep.line("algebra=" + rq.algebra.name() + " count=" + std::to_string(basis.size()) +
           " orbits=" + std::to_string(count_outer_orbits(rs, basis)));
  rep.set_json(rows);
  return kOk;
}

int cmd_tables(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const RestrictionData rd = restriction_data(rs);
  json entries = json::array();
  for (const ClassEntry& e : table_entries(rq.algebra)) {
    std::string line = "algebra=" + rq.algebra.name() + " i=" + std::to_string(e.index) +
                       " p=" + std::to_string(e.p) + " m=" + e.m.str() +
                       " sigma=" + (e.sigma ? sign_text(*e.sigma) : "none");
    rep.line(line);
    json row = {{"i", e.index}, {"p", e.p}, {"m", e.m.str()}, {"sigma", nullptr}};
    if (!e.m.is_unbounded()) row["m"] = e.m.value();
    if (e.sigma) row["sigma"] = *e.sigma;
    entries.push_back(row);
  }
  const std::string cond = radical_condition(rq.algebra);
  rep.line("algebra=" + rq.algebra.name() + " radical_condition=\"" + cond + "\"");
  rep.line("algebra=" + rq.algebra.name() + " s=" + std::to_string(rd.s) + " t=" + std::to_string(rd.t));
  json roots = json::array();
  for (const EpsCoords& a : rd.ortho_roots) {
    rep.line("ortho_root=" + format_vector(a));
    json r = json::array();
    for (Eigen::Index i = 0; i < a.size(); ++i) r.push_back(a[i].str());
    roots.push_back(r);
  }
  rep.line(format_restriction_matrix("res" + rq.algebra.name(), rd.matrix));
  json m = json::array();
  for (Eigen::Index i = 0; i < rd.matrix.rows(); ++i) m.push_back(weight_json(rd.matrix.row(i).transpose()));
  rep.set_json({{"algebra", rq.algebra.name()},
                {"table", entries},
                {"radical_condition", cond},
                {"s", rd.s},
                {"t", rd.t},
                {"ortho_roots", roots},
                {"restriction_matrix", m}});
  return kOk;
}

int cmd_verify(const CommandRequest& rq, Reporter& rep) {
  const RootSystem rs(rq.algebra);
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = verify_classification(rs, *rq.options.max_sum, rq.options.max_dim, threads);
  json arr = json::array();
  std::size_t bad = 0;
  for (const VerifyRow& r : rows) {
    if (!r.agree) ++bad;
    rep.line(head(rq.algebra, r.weight) + " dim=" + std::to_string(r.dim) + " p=" + std::to_string(r.signature.p) +
             " q=" + std::to_string(r.signature.q) + " kind=" + signature_kind(r.signature) +
             " predicted=" + to_string(r.prediction.kind) + " predicted_sign=" + sign_text(r.prediction.sign) +
             " agree=" + (r.agree ? "yes" : "no"));
    arr.push_back({{"algebra", rq.algebra.name()},
                   {"weight", weight_json(r.weight)},
                   {"dim", r.dim},
                   {"p", r.signature.p},
                   {"q", r.signature.q},
                   {"kind", signature_kind(r.signature)},
                   {"sign", sign_json(r.signature.sign())},
                   {"predicted", to_string(r.prediction.kind)},
                   {"predicted_sign", sign_json(r.prediction.sign)},
                   {"agree", r.agree}});
  }
  rep.line("algebra=" + rq.algebra.name() + " checked=" + std::to_string(rows.size()) +
           " disagreements=" + std::to_string(bad));
  rep.set_json(arr);
  return bad == 0 ? kOk : kDisagreement;
}

}  // namespace

CommandRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"w0-signature of irreducible representations", "w0sig"};
  app.require_subcommand(1);

  std::string algebra_token;
  std::string weight_text;
  Options opts;
  std::int64_t max_sum = 0;
  std::int64_t max_dim = 0;

  struct Sub {
    Command command;
    const char* name;
    const char* help;
    bool weight;
  };
  const Sub subs[] = {
      {Command::Signature, "signature", "compute the w0-signature (p,q)", true},
      {Command::Predict, "predict", "classify from the table; --check also computes", true},
      {Command::Dimension, "dimension", "Weyl dimension", true},
      {Command::Character, "character", "dominant weight multiplicities", true},
      {Command::IdealBasis, "ideal-basis", "minimal generators of the mixed ideal", false},
      {Command::HilbertBasis, "hilbert-basis", "minimal generators of the radical monoid", false},
      {Command::Tables, "tables", "table row, radical condition and restriction matrix", false},
      {Command::Verify, "verify", "compare computed and predicted signatures", false},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("algebra", algebra_token, "e.g. E7, B3")->required();
    if (s.weight) {
      sub->add_option("weight", weight_text, "Dynkin coefficients, comma separated")->required();
      sub->add_flag("--eps", opts.eps, "weight is given in e-coordinates (rationals a/b allowed)");
    }
    if (s.command == Command::Predict) sub->add_flag("--check", opts.check, "also compute and compare");
    if (s.command == Command::Verify) {
      sub->add_option("--max-sum", max_sum, "largest coefficient sum")->required()->check(CLI::NonNegativeNumber);
      sub->add_option("--max-dim", max_dim, "skip representations above this dimension")
          ->check(CLI::PositiveNumber);
    }
    sub->add_flag("--json", opts.json, "JSON output");
    sub->add_option("--out", opts.out, "write the report to a file");
    registered.emplace_back(sub, &s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }

  CommandRequest rq;
  for (const auto& [sub, s] : registered) {
    if (!sub->parsed()) continue;
    rq.command = s->command;
    if (s->command == Command::Verify) {
      opts.max_sum = max_sum;
      if (sub->count("--max-dim") > 0) opts.max_dim = max_dim;
    }
    const auto [family, rank] = parse_algebra_token(algebra_token);
    const AliasResolution alias = normalize_alias(family, rank);
    rq.algebra = alias.algebra;
    if (alias.warning) rq.warnings.push_back(*alias.warning);
    if (s->weight) rq.weight = resolve_weight(weight_text, family, rank, alias, opts.eps);
  }
  rq.options = opts;
  return rq;
}

int run(const CommandRequest& rq, std::ostream& out, std::ostream& err) {
  for (const std::string& w : rq.warnings) err << "warning: " << w << '\n';
  Reporter rep(rq.options, out);
  int code = kOk;
  switch (rq.command) {
    case Command::Signature: code = cmd_signature(rq, rep); break;
    case Command::Predict: code = cmd_predict(rq, rep); break;
    case Command::Dimension: code = cmd_dimension(rq, rep); break;
    case Command::Character: code = cmd_character(rq, rep); break;
    case Command::IdealBasis: code = cmd_basis(rq, rep, true); break;
    case Command::HilbertBasis: code = cmd_basis(rq, rep, false); break;
    case Command::Tables: code = cmd_tables(rq, rep); break;
    case Command::Verify: code = cmd_verify(rq, rep); break;
  }
  rep.flush();
  return code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_request(args), out, err);
  } catch (const HelpRequested& e) {
    out << e.what();
    return kOk;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace w0sig::cli
