#include "jetdisc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "jetdisc/discriminant.hpp"
#include "jetdisc/errors.hpp"
#include "jetdisc/koszul.hpp"
#include "jetdisc/poly_io.hpp"
#include "jetdisc/resultant.hpp"
#include "jetdisc/sampling.hpp"
#include "jetdisc/split_bundle.hpp"
#include "jetdisc/taylor.hpp"

namespace jetdisc::cli {

namespace {

/// Thrown when a command's own verification fails (exit code 2).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split_list(text)) out.push_back(parse_scalar(s));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    Scalar v = parse_scalar(s);
    if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw ParseError("expected an integer, got '" + s + "'");
    out.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return out;
}

GroebnerOptions groebner_options(const RunConfig& rc) { return {rc.pair_limit, rc.timeout_seconds}; }

std::string format_or(const RunConfig& rc, const char* fallback) { return rc.format.empty() ? fallback : rc.format; }

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw ParseError("unsupported --format '" + fmt + "' for this command");
}

// ---------------------------------------------------------------- taylor

struct TaylorArgs {
  std::string f;
  std::string point;
  int order = 0;
  std::string vars;
};

int cmd_taylor(const RunConfig& rc, const TaylorArgs& a, std::ostream& out) {
  std::string fmt = format_or(rc, "text");
  require_format(fmt, {"text", "json"});
  Polynomial f = a.vars.empty() ? parse_polynomial(a.f) : parse_polynomial(a.f, VarSet(split_list(a.vars)));
  auto values = parse_scalar_list(a.point);
  if (a.order < 0) throw DomainError("--order must be non-negative");
  const VarSet& vars = f.vars();
  Point point;
  if (!f.is_constant() || !vars.empty()) {
    if (values.size() != vars.size())
      throw DomainError("point has " + std::to_string(values.size()) + " coordinates but the polynomial has " +
                        std::to_string(vars.size()) + " variables");
    for (std::size_t k = 0; k < vars.size(); ++k) point.emplace(vars.name(k), values[k]);
  }
  Polynomial result = taylor_fiber(f, point, a.order);
  if (fmt == "json") {
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [k, v] : point) pj[k] = v.get_str();
    out << nlohmann::json{{"f", to_json(f)}, {"point", pj}, {"order", a.order}, {"taylor", to_json(result)}}.dump()
        << '\n';
  } else {
    out << to_string(result) << '\n';
  }
  return kSuccess;
}

// ------------------------------------------------------------- incidence

int cmd_incidence(const RunConfig& rc, std::ostream& out) {
  std::string fmt = format_or(rc, "json");
  require_format(fmt, {"text", "json"});
  IncidenceIdeal ideal = incidence_generators(rc.config, make_chart(rc.config, rc.y_index, rc.x_index));
  if (fmt == "json") {
    out << to_json(ideal).dump() << '\n';
  } else {
    for (const auto& g : ideal.generators) out << to_string(g) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------- discriminant

struct SamplingTally {
  int agree = 0;
  int total = 0;
};

SamplingTally sample_discriminant(const RunConfig& rc, const DiscriminantResult& result) {
  const LinearSystemConfig& cfg = rc.config;
  SamplingTally tally;
  for (int s = 0; s < rc.samples; ++s) {
    SampleRng rng(rc.seed, static_cast<std::uint64_t>(s));
    FactoredForm form;
    while (true) {
      bool want_member = cfg.l < cfg.d && rng.uniform(0, 1) == 1;
      std::vector<int> mults;
      bool quad = false;
      if (want_member) {
        int m0 = rng.uniform(cfg.l + 1, cfg.d);
        mults = random_multiplicities(rng, cfg.d - m0, cfg.d);
        mults.insert(mults.begin(), m0);
      } else {
        quad = cfg.d >= 2 && rng.uniform(0, 1) == 1;
        mults = random_multiplicities(rng, cfg.d - (quad ? 2 : 0), cfg.l);
      }
      form = random_factored_form(rng, mults, quad);
      if (binary_form_coefficients(form.form)[static_cast<std::size_t>(result.y_index)] != 0) break;
    }
    bool expected = form.max_multiplicity() >= cfg.l + 1;
    bool member = discriminant_contains(result, coefficient_point(form.form, cfg, result.y_index));
    tally.total++;
    if (member == expected) tally.agree++;
  }
  return tally;
}

int cmd_discriminant(const RunConfig& rc, std::ostream& out) {
  std::string fmt = format_or(rc, "json");
  require_format(fmt, {"text", "json"});
  DiscriminantResult result = discriminant_ideal(rc.config, rc.y_index, groebner_options(rc));
  const LinearSystemConfig& cfg = rc.config;

  std::string verdict = "N/A";
  if (cfg.n == 1 && cfg.l == 1 && cfg.d >= 2) {
    bool match = result.principal &&
                 equal_up_to_unit(result.ideal.basis().front(), chart_classical_discriminant(cfg.d, rc.y_index));
    verdict = match ? "MATCH" : "MISMATCH";
  }
  SamplingTally tally;
  if (cfg.n == 1) tally = sample_discriminant(rc, result);

  if (fmt == "json") {
    nlohmann::json j = to_json(result);
    j["verdict"] = verdict;
    j["sampling"] = {{"agree", tally.agree}, {"total", tally.total}};
    out << j.dump() << '\n';
  } else {
    out << "discriminant n=" << cfg.n << " d=" << cfg.d << " l=" << cfg.l << " y-chart=" << rc.y_index << '\n';
    out << "principal: " << (result.principal ? "yes" : "no") << (result.unit ? " (unit ideal)" : "") << '\n';
    out << "generators:\n";
    for (const auto& g : result.ideal.basis()) out << "  " << to_string(g) << '\n';
    out << "verdict: " << verdict << '\n';
    if (cfg.n == 1) out << "sampling: " << tally.agree << '/' << tally.total << " agree\n";
  }
  if (verdict == "MISMATCH") throw VerificationFailure("discriminant does not match the classical discriminant");
  if (tally.agree != tally.total) throw VerificationFailure("discriminant membership disagrees with root multiplicities");
  return kSuccess;
}

// ---------------------------------------------------------- koszul-check

struct KoszulArgs {
  bool corrupt = false;
};

FreeComplex flip_one_sign(const FreeComplex& c) {
  std::vector<PolyMatrix> diffs = c.differentials();
  for (auto& d : diffs) {
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col)
        if (!d(r, col).is_zero()) {
          d.set(r, col, -d(r, col));
          return FreeComplex(c.vars(), c.ranks(), std::move(diffs), c.twists());
        }
  }
  return c;
}

int cmd_koszul_check(const RunConfig& rc, const KoszulArgs& a, std::ostream& out) {
  std::string fmt = format_or(rc, "text");
  require_format(fmt, {"text", "json"});
  IncidenceIdeal inc = incidence_generators(rc.config, make_chart(rc.config, rc.y_index, rc.x_index));
  FreeComplex complex = build_koszul({inc.vars(), inc.generators});
  if (a.corrupt) complex = flip_one_sign(complex);
  bool chain_ok = verify_chain(complex);

  const VarSet& vars = inc.vars();
  int off_exact = 0;
  for (int s = 0; s < rc.samples; ++s) {
    SampleRng rng(rc.seed, static_cast<std::uint64_t>(s));
    Point point;
    while (true) {
      point.clear();
      for (const auto& v : vars.names()) point.emplace(v, rng.scalar());
      bool off = std::any_of(inc.generators.begin(), inc.generators.end(),
                             [&](const Polynomial& g) { return evaluate(g, point) != 0; });
      if (off) break;
    }
    if (exactness_at_point(complex, point).exact()) ++off_exact;
  }
  int on_nonzero = 0;
  for (int s = 0; s < rc.samples; ++s) {
    SampleRng rng(rc.seed, static_cast<std::uint64_t>(s) + (1ull << 32));
    std::optional<Point> point;
    for (int attempt = 0; attempt < 100 && !point; ++attempt) {
      Point where;
      for (const auto& t : inc.affine_vars) where.emplace(t, rng.scalar());
      std::vector<Scalar> free_values;
      for (std::size_t k = 0; k < inc.coefficient_vars.size(); ++k) free_values.push_back(rng.scalar());
      point = section_vanishing_at(inc, where, free_values);
      if (point) point->insert(where.begin(), where.end());
    }
    if (!point) throw Error("could not construct a point on the incidence locus");
    if (exactness_at_point(complex, *point).homology.front() != 0) ++on_nonzero;
  }
  bool ok = chain_ok && off_exact == rc.samples && on_nonzero == rc.samples;
  if (fmt == "json") {
    out << nlohmann::json{{"chain", chain_ok},
                          {"off_locus_exact", off_exact},
                          {"on_locus_h0_nonzero", on_nonzero},
                          {"samples", rc.samples},
                          {"ok", ok}}
               .dump()
        << '\n';
  } else {
    out << "chain: " << (chain_ok ? "OK" : "FAIL");
    if (rc.samples > 0) {
      out << ", off-locus exact: " << off_exact << '/' << rc.samples
          << ", on-locus h0≠" << "0: " << (on_nonzero == rc.samples ? "OK" : "FAIL");
    }
    out << '\n';
  }
  if (!ok) throw VerificationFailure("Koszul complex check failed");
  return kSuccess;
}

// ---------------------------------------------------------- multiplicity

struct MultiplicityArgs {
  std::string f;
  std::string point;
};

int cmd_multiplicity(const RunConfig& rc, const MultiplicityArgs& a, std::ostream& out) {
  std::string fmt = format_or(rc, "text");
  require_format(fmt, {"text", "json"});
  Polynomial F = parse_polynomial(a.f, binary_form_vars());
  auto pt = parse_scalar_list(a.point);
  if (pt.size() != 2) throw DomainError("--point needs exactly two coordinates alpha,beta");
  int m = root_multiplicity(F, {pt[0], pt[1]});
  if (fmt == "json")
    out << nlohmann::json{{"f", to_json(F)}, {"multiplicity", m}}.dump() << '\n';
  else
    out << m << '\n';
  return kSuccess;
}

// -------------------------------------------------------- double-complex

struct DoubleComplexArgs {
  std::string splitting;
  int e_rank = 2;
};

int cmd_double_complex(const RunConfig& rc, const DoubleComplexArgs& a, std::ostream& out) {
  std::string fmt = format_or(rc, "csv");
  require_format(fmt, {"csv", "json", "text"});
  auto degrees = parse_int_list(a.splitting);
  if (degrees.empty()) throw DomainError("--splitting needs at least one degree");
  DoubleComplexTable table = double_complex_table(SplittingType(degrees), a.e_rank);
  if (fmt == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) rows.push_back({{"i", r.i}, {"j", r.j}, {"twist", r.twist}, {"dim", r.dim}});
    out << nlohmann::json{{"splitting", table.bundle.degrees()},
                          {"e_rank", table.e_rank},
                          {"rows", rows},
                          {"euler_sum", table.euler_sum},
                          {"closed_form", table.euler_closed_form}}
               .dump()
        << '\n';
  } else {
    out << to_csv(table);
  }
  if (table.euler_sum != table.euler_closed_form) throw VerificationFailure("Euler sums disagree");
  return kSuccess;
}

// -------------------------------------------------------------- selftest

int cmd_selftest(const RunConfig& rc, std::ostream& out) {
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };
  {
    Polynomial f = parse_polynomial("t^3 - t");
    report("taylor fiber of t^3 - t at 1", to_string(taylor_fiber(f, {{"t", 1}}, 2)) == "3*t^2 - 4*t + 1");
  }
  for (int d = 2; d <= 3; ++d) {
    auto r = discriminant_ideal({1, d, 1}, 0, groebner_options(rc));
    report("D_1(O(" + std::to_string(d) + ")) equals the classical discriminant",
           r.principal && equal_up_to_unit(r.ideal.basis().front(), chart_classical_discriminant(d, 0)));
  }
  {
    IncidenceIdeal inc = incidence_generators({1, 3, 1}, make_chart({1, 3, 1}, 0, 0));
    FreeComplex c = build_koszul({inc.vars(), inc.generators});
    report("incidence Koszul complex d^2 = 0", verify_chain(c));
    report("corrupted complex is rejected", !verify_chain(flip_one_sign(build_koszul(
                                                {VarSet{"x", "y", "z"},
                                                 {Polynomial::variable(VarSet{"x", "y", "z"}, "x"),
                                                  Polynomial::variable(VarSet{"x", "y", "z"}, "y"),
                                                  Polynomial::variable(VarSet{"x", "y", "z"}, "z")}}))));
  }
  {
    Polynomial F = parse_polynomial("x1^3 - 3*x0*x1^2 + 3*x0^2*x1 - x0^3", binary_form_vars());
    report("multiplicity of (x1 - x0)^3 at (1:1)", root_multiplicity(F, {1, 1}) == 3);
  }
  {
    auto t = double_complex_table(SplittingType({2, 2}), 2);
    report("double complex Euler sums agree", t.euler_sum == t.euler_closed_form && t.dim(2, 1) == 3);
  }
  if (!all) throw VerificationFailure("selftest failed");
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incidence schemes, discriminants and Koszul complexes of linear systems", "jetdisc"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--format", rc.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", rc.seed, "Seed for randomized checks");
  app.add_option("--pair-limit", rc.pair_limit, "Groebner critical-pair bound")->check(CLI::PositiveNumber);
  app.add_option("--timeout", rc.timeout_seconds, "Groebner time limit in seconds")->check(CLI::PositiveNumber);

  auto add_config = [&](CLI::App* sub, bool with_chart) {
    sub->add_option("--n", rc.config.n, "Projective dimension")->required();
    sub->add_option("--d", rc.config.d, "Line bundle degree")->required();
    sub->add_option("--l", rc.config.l, "Jet order")->required();
    if (with_chart) {
      sub->add_option_function<std::string>(
          "--chart",
          [&](const std::string& s) {
            auto v = parse_int_list(s);
            if (v.size() != 2) throw CLI::ValidationError("--chart", "expected y_index,x_index");
            rc.y_index = v[0];
            rc.x_index = v[1];
          },
          "Chart as y_index,x_index (default 0,0)");
    }
  };

  TaylorArgs taylor;
  auto* taylor_cmd = app.add_subcommand("taylor", "Truncated Taylor polynomial of f about a rational point");
  taylor_cmd->add_option("--f", taylor.f, "Polynomial text")->required();
  taylor_cmd->add_option("--point", taylor.point, "Comma-separated coordinates")->required();
  taylor_cmd->add_option("--order", taylor.order, "Truncation order")->required();
  taylor_cmd->add_option("--vars", taylor.vars, "Variable order (default: order of appearance)");

  auto* incidence_cmd = app.add_subcommand("incidence", "Chart generators of the incidence ideal");
  add_config(incidence_cmd, true);

  auto* disc_cmd = app.add_subcommand("discriminant", "Discriminant ideal by elimination");
  add_config(disc_cmd, false);
  disc_cmd->add_option("--y-chart", rc.y_index, "y-chart index (u_j = 1)");
  disc_cmd->add_option("--samples", rc.samples, "Membership samples (n = 1)")->check(CLI::NonNegativeNumber);

  KoszulArgs koszul;
  auto* koszul_cmd = app.add_subcommand("koszul-check", "Chain and pointwise exactness of the incidence complex");
  add_config(koszul_cmd, true);
  koszul_cmd->add_option("--samples", rc.samples, "Random points off and on the zero locus")
      ->check(CLI::NonNegativeNumber);
  koszul_cmd->add_flag("--corrupt", koszul.corrupt, "Flip one differential sign (mutation self-test)");

  MultiplicityArgs mult;
  auto* mult_cmd = app.add_subcommand("multiplicity", "Root multiplicity of a binary form at (alpha:beta)");
  mult_cmd->add_option("--f", mult.f, "Homogeneous form in x0, x1")->required();
  mult_cmd->add_option("--point", mult.point, "alpha,beta")->required();

  DoubleComplexArgs dc;
  auto* dc_cmd = app.add_subcommand("double-complex", "Dimension table of the discriminant double complex on P^1");
  dc_cmd->add_option("--splitting", dc.splitting, "Comma-separated degrees of F")->required();
  dc_cmd->add_option("--e-rank", dc.e_rank, "Rank of E")->check(CLI::PositiveNumber);

  auto* self_cmd = app.add_subcommand("selftest", "Quick end-to-end checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (taylor_cmd->parsed()) {
      rc.command = "taylor";
      return cmd_taylor(rc, taylor, out);
    }
    if (incidence_cmd->parsed()) {
      rc.command = "incidence";
      return cmd_incidence(rc, out);
    }
    if (disc_cmd->parsed()) {
      rc.command = "discriminant";
      return cmd_discriminant(rc, out);
    }
    if (koszul_cmd->parsed()) {
      rc.command = "koszul-check";
      return cmd_koszul_check(rc, koszul, out);
    }
    if (mult_cmd->parsed()) {
      rc.command = "multiplicity";
      return cmd_multiplicity(rc, mult, out);
    }
    if (dc_cmd->parsed()) {
      rc.command = "double-complex";
      return cmd_double_complex(rc, dc, out);
    }
    if (self_cmd->parsed()) {
      rc.command = "selftest";
      return cmd_selftest(rc, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kFailure;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command given\n";
  return kUsageError;
}

}  // namespace jetdisc::cli
