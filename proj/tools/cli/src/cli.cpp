#include "moment_forge/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moment_forge/errors.hpp"
#include "moment_forge/functionals.hpp"
#include "moment_forge/harness.hpp"
#include "moment_forge/io.hpp"
#include "moment_forge/monomial.hpp"
#include "moment_forge/report.hpp"
#include "moment_forge/selftest/acceptance.hpp"

namespace moment_forge::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kGrammar = R"(Polynomial grammar (explicit '*' between factors):
  expr     := ['+'|'-'] term (('+'|'-') term)*
  term     := factor ('*' factor)*
  factor   := base ('^' ['-'] integer)?
  base     := rational | 'i' | identifier | '(' expr ')'
  rational := integer ('/' positive-integer)?
'i' is the imaginary unit. Negative exponents are Laurent-only (torus).
Variables: --vars x,y   or ranges such as --vars w1..w2,z1..z2
)";

struct Config {
  std::string vars;
  std::string poly;
  std::string q;
  std::string functional = "gaussian";
  std::string output = "table";
  std::string lambda = "rotation";
  std::string pairs;
  std::string at;
  std::string only;
  int bound = kDefaultWindow;
  unsigned long prime = 0;
  std::uint64_t seed = 0;
  std::int64_t degree_cap = kDefaultDegreeCap;
  std::size_t fuzz = 100'000;
};

// Column-aligned text table; every cell is already exact text.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::string optional_text(const std::optional<int>& v, std::string_view none) {
  return v ? std::to_string(*v) : std::string(none);
}

// Per-run state shared by the command handlers.
struct Context {
  const Config& cfg;
  const std::vector<std::string>& argv;
  std::string command;
  std::ostream& out;
  std::ostream& err;

  bool json_output() const { return cfg.output == "json"; }

  std::vector<std::string> variables() const {
    if (cfg.vars.empty()) throw UsageError("--vars is required");
    return parse_variable_list(cfg.vars);
  }

  FunctionalKind functional() const {
    const auto kind = parse_functional(cfg.functional);
    if (!kind) throw UsageError("unknown functional '" + cfg.functional + "'");
    return *kind;
  }

  AnyPoly parse(const std::string& text, std::string_view flag, Ring ring,
                const std::vector<std::string>& vars) const {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    try {
      return parse_poly(PolySource{text, ring, vars});
    } catch (const ParseError& e) {
      throw ParseError(std::string(flag) + ": " + e.reason(), e.line(), e.column());
    }
  }

  MPoly parse_m(const std::string& text, std::string_view flag,
                const std::vector<std::string>& vars) const {
    return std::get<MPoly>(parse(text, flag, Ring::polynomial, vars));
  }

  void emit(json result) const {
    out << report_envelope(command, argv, std::move(result)).dump(2) << '\n';
  }
};

Ring ring_for(FunctionalKind kind) {
  return kind == FunctionalKind::torus_ct ? Ring::laurent : Ring::polynomial;
}

int cmd_moments(const Context& ctx) {
  const auto vars = ctx.variables();
  const FunctionalKind kind = ctx.functional();
  const AnyPoly p = ctx.parse(ctx.cfg.poly, "--poly", ring_for(kind), vars);
  const VanishingProfile profile = vanish_scan(p, kind, ctx.cfg.bound);
  if (ctx.json_output()) {
    ctx.emit(to_json(profile, vars));
    return kExitOk;
  }
  ctx.out << "functional: " << to_string(kind) << '\n'
          << "P = " << format_poly(p, vars) << '\n';
  Table table({"m", "L(P^m)"});
  for (int m = 1; m <= profile.bound; ++m) table.add({std::to_string(m), profile.value_at(m).to_string()});
  table.print(ctx.out);
  ctx.out << "first nonzero: " << optional_text(profile.first_nonzero, "none")
          << (profile.all_zero ? " (all zero for m = 1.." + std::to_string(profile.bound) + ")" : "")
          << '\n';
  return kExitOk;
}

int cmd_probe(const Context& ctx) {
  const auto vars = ctx.variables();
  const FunctionalKind kind = ctx.functional();
  const AnyPoly p = ctx.parse(ctx.cfg.poly, "--poly", ring_for(kind), vars);
  const AnyPoly q = ctx.parse(ctx.cfg.q, "--q", ring_for(kind), vars);
  const MZProbeReport report = mz_probe(p, q, kind, ctx.cfg.bound);
  const int code = report.counterexample_candidate() ? kExitProperty : kExitOk;
  if (ctx.json_output()) {
    ctx.emit(to_json(report, vars));
    return code;
  }
  ctx.out << "functional: " << to_string(kind) << '\n'
          << "P = " << format_poly(p, vars) << '\n'
          << "Q = " << format_poly(q, vars) << '\n';
  Table table({"m", "L(P^m)", "L(P^m Q)"});
  for (int m = 1; m <= report.profile.bound; ++m) {
    table.add({std::to_string(m), report.profile.value_at(m).to_string(),
               report.companion_at(m).to_string()});
  }
  table.print(ctx.out);
  ctx.out << "moments all zero in window: " << (report.profile.all_zero ? "yes" : "no") << '\n'
          << "companion eventually zero in window: "
          << (report.eventually_zero_up_to_bound ? "yes" : "no") << " (last nonzero: "
          << optional_text(report.last_nonzero, "none") << ")\n"
          << "counterexample candidate: " << (report.counterexample_candidate() ? "yes" : "no")
          << '\n';
  return code;
}

std::vector<std::string> z_names(const std::vector<std::string>& vars) {
  if (vars.size() % 2 != 0) throw UsageError("pairing needs an even number of variables (w..., z...)");
  return {vars.begin() + static_cast<long>(vars.size() / 2), vars.end()};
}

int cmd_pairing(const Context& ctx) {
  const auto vars = ctx.variables();
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  (void)z_names(vars);
  const GaussRat value = hermite_pairing(p);
  if (ctx.json_output()) {
    ctx.emit({{"poly", format_poly(p, vars)}, {"value", value.to_string()}});
  } else {
    ctx.out << "P = " << format_poly(p, vars) << '\n' << "F(P) = " << value.to_string() << '\n';
  }
  return kExitOk;
}

std::vector<GaussRat> parse_point(const std::string& text, std::size_t n) {
  std::vector<GaussRat> point;
  for (const std::string& part : split(text, ',')) point.push_back(GaussRat::parse(trim(part)));
  if (point.size() != n) {
    throw UsageError("--at needs " + std::to_string(n) + " value(s), got " + std::to_string(point.size()));
  }
  return point;
}

int cmd_en(const Context& ctx) {
  const auto vars = ctx.variables();
  const auto zs = z_names(vars);
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  const MPoly image = apply_en(p);
  json result{{"poly", format_poly(p, vars)}, {"en", format_poly(image, zs)}};
  int code = kExitOk;
  std::string at_text;
  if (!ctx.cfg.at.empty()) {
    const auto point = parse_point(ctx.cfg.at, zs.size());
    const GaussRat value = evaluate(image, point);
    const GaussRat shifted = hermite_pairing(shift(p, point));
    const bool agree = value == shifted;
    if (!agree) code = kExitProperty;
    json at = json::array();
    for (const GaussRat& a : point) at.push_back(a.to_string());
    result["at"] = at;
    result["value"] = value.to_string();
    result["shifted_pairing"] = shifted.to_string();
    result["shift_identity_holds"] = agree;
    at_text = "E(P)(a) = " + value.to_string() + "\nF(P(w, z + a)) = " + shifted.to_string() +
              "\nshift identity: " + (agree ? "holds" : "FAILS") + "\n";
  }
  if (ctx.json_output()) {
    ctx.emit(result);
  } else {
    ctx.out << "P = " << format_poly(p, vars) << '\n'
            << "E(P) = " << format_poly(image, zs) << '\n'
            << at_text;
  }
  return code;
}

int cmd_halfdisk(const Context& ctx) {
  const auto vars = ctx.variables();
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  const PiScalar value = halfdisk_integral(p);
  if (ctx.json_output()) {
    ctx.emit({{"poly", format_poly(p, vars)}, {"value", value.to_string()}});
  } else {
    ctx.out << "P = " << format_poly(p, vars) << '\n'
            << "half-disk integral = " << value.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_torus(const Context& ctx) {
  const auto vars = ctx.variables();
  const LaurentPoly f = std::get<LaurentPoly>(ctx.parse(ctx.cfg.poly, "--poly", Ring::laurent, vars));
  const GaussRat value = torus_ct(f);
  if (ctx.json_output()) {
    ctx.emit({{"poly", format_poly(f, vars)}, {"value", value.to_string()}});
  } else {
    ctx.out << "f = " << format_poly(f, vars) << '\n' << "CT(f) = " << value.to_string() << '\n';
  }
  return kExitOk;
}

std::vector<VariablePair> parse_pairs(const std::string& text, const std::vector<std::string>& vars) {
  if (text.empty()) return default_pairing(vars.size());
  auto index = [&](const std::string& name) {
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UsageError("--pairs: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars.begin());
  };
  std::vector<VariablePair> pairs;
  for (const std::string& item : split(text, ',')) {
    const auto sides = split(item, ':');
    if (sides.size() != 2) throw UsageError("--pairs: expected x:y, got '" + item + "'");
    pairs.emplace_back(index(trim(sides[0])), index(trim(sides[1])));
  }
  return pairs;
}

void print_reduction(std::ostream& out, const DoubleHomogReduction& r,
                     const std::vector<std::string>& vars) {
  const auto torus = torus_variable_names(r.pairs.size());
  for (std::size_t k = 0; k < r.pairs.size(); ++k) {
    out << "pair " << k + 1 << ": (" << vars[r.pairs[k].first] << ", " << vars[r.pairs[k].second]
        << "), degree " << r.degrees[k] << ", torus variable " << torus[k] << '\n';
  }
  out << "F_L = " << format_poly(r.angular, torus) << '\n'
      << r.radial_constant_formula() << '\n';
}

int cmd_reduce(const Context& ctx) {
  const auto vars = ctx.variables();
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  const DoubleHomogReduction r = double_homog_reduce(p, parse_pairs(ctx.cfg.pairs, vars), vars);
  if (ctx.json_output()) {
    json result = to_json(r, vars);
    result["poly"] = format_poly(p, vars);
    ctx.emit(result);
  } else {
    ctx.out << "P = " << format_poly(p, vars) << '\n';
    print_reduction(ctx.out, r, vars);
  }
  return kExitOk;
}

int cmd_crosscheck(const Context& ctx) {
  const auto vars = ctx.variables();
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  const CrosscheckReport report =
      gaussian_torus_crosscheck(p, parse_pairs(ctx.cfg.pairs, vars), ctx.cfg.bound, vars);
  const int code = report.all_hold ? kExitOk : kExitProperty;
  if (ctx.json_output()) {
    json result = to_json(report, vars);
    result["poly"] = format_poly(p, vars);
    ctx.emit(result);
    return code;
  }
  ctx.out << "P = " << format_poly(p, vars) << '\n';
  print_reduction(ctx.out, report.reduction, vars);
  Table table({"m", "E(P^m)", "CT(F_L^m)", "A_m", "check"});
  for (const CrosscheckRow& row : report.rows) {
    std::string check = row.vanishing_equivalent ? "zero-equiv" : "ZERO-MISMATCH";
    if (row.ratio_holds) check += *row.ratio_holds ? ", ratio" : ", RATIO-MISMATCH";
    table.add({std::to_string(row.m), row.gaussian.to_string(), row.torus.to_string(),
               row.constant ? row.constant->get_str() : "-", check});
  }
  table.print(ctx.out);
  ctx.out << "crosscheck: " << (report.all_hold ? "holds" : "FAILS") << " for m = 1.."
          << ctx.cfg.bound << '\n';
  return code;
}

int cmd_cert(const Context& ctx) {
  const auto vars = ctx.variables();
  const MPoly f = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  if (ctx.cfg.prime == 0) throw UsageError("-p is required");
  const CertResult c = frobenius_certificate(f, ctx.cfg.prime);
  const int code = c.status == CertStatus::failed ? kExitProperty : kExitOk;
  if (ctx.json_output()) {
    json result = to_json(c);
    result["poly"] = format_poly(f, vars);
    ctx.emit(result);
    return code;
  }
  const std::string p = std::to_string(c.prime);
  ctx.out << "Φ(F^" << p << ") = " << c.exact_value.to_string() << " ≡ " << c.residue << " (mod "
          << p << ")";
  switch (c.status) {
    case CertStatus::certified:
      ctx.out << ": certified nonvanishing\n";
      break;
    case CertStatus::inconclusive:
      ctx.out << ": inconclusive (" << p << " divides F(0))\n";
      break;
    case CertStatus::failed:
      ctx.out << ", but F(0) ≡ " << c.expected << ": congruence FAILS\n";
      break;
  }
  return code;
}

OnePS parse_lambda(const std::string& text, std::size_t n) {
  if (text == "rotation") return OnePS::rotation();
  if (text == "identity") return OnePS::identity(n);
  std::vector<LaurentPoly> entries;
  const auto rows = split(text, ';');
  for (const std::string& row : rows) {
    const auto cells = split(row, ',');
    if (cells.size() != rows.size()) throw UsageError("--lambda must be a square matrix \"a,b;c,d\"");
    for (const std::string& cell : cells) {
      try {
        entries.push_back(parse_laurent(cell, {"t"}));
      } catch (const ParseError& e) {
        throw ParseError("--lambda entry '" + trim(cell) + "': " + e.reason(), e.line(), e.column());
      }
    }
  }
  return OnePS(SquareMatrix<LaurentPoly>(rows.size(), std::move(entries)));
}

std::string membership_text(const std::optional<std::int64_t>& min, bool member) {
  return "min t-exponent " + (min ? std::to_string(*min) : std::string("none (P = 0)")) + ", " +
         (member ? "member" : "not a member") + " of t*C[t][x]";
}

int cmd_one_ps(const Context& ctx) {
  const auto vars = ctx.variables();
  if (std::find(vars.begin(), vars.end(), "t") != vars.end()) {
    throw UsageError("'t' is the 1-PS parameter and cannot be a variable here");
  }
  const MPoly p = ctx.parse_m(ctx.cfg.poly, "--poly", vars);
  const OnePS lambda = parse_lambda(ctx.cfg.lambda, vars.size());
  if (lambda.dimension() != vars.size()) {
    throw UsageError("--lambda is " + std::to_string(lambda.dimension()) + "x" +
                     std::to_string(lambda.dimension()) + " but there are " +
                     std::to_string(vars.size()) + " variables");
  }
  const OnePSReport r = one_ps_check(p, lambda);
  if (ctx.json_output()) {
    json result = to_json(r, vars);
    result["poly"] = format_poly(p, vars);
    ctx.emit(result);
    return kExitOk;
  }
  std::vector<std::string> names{"t"};
  names.insert(names.end(), vars.begin(), vars.end());
  ctx.out << "P = " << format_poly(p, vars) << '\n'
          << "P(lambda(t) x) = " << format_poly(r.substituted, names) << '\n'
          << "  " << membership_text(r.min_t_exponent, r.member) << '\n'
          << "P(lambda(1/t) x) = " << format_poly(r.substituted_inverse, names) << '\n'
          << "  " << membership_text(r.min_t_exponent_inverse, r.member_inverse) << '\n';
  return kExitOk;
}

int cmd_selftest(const Context& ctx) {
  selftest::SuiteOptions options;
  options.seed = ctx.cfg.seed;
  options.fuzz_inputs = ctx.cfg.fuzz;
  if (!ctx.cfg.only.empty()) {
    for (const std::string& part : split(ctx.cfg.only, ',')) {
      std::string id = trim(part);
      if (!id.empty() && (id[0] == 'C' || id[0] == 'c')) id.erase(0, 1);
      try {
        std::size_t used = 0;
        const int n = std::stoi(id, &used);
        if (used != id.size() || n < 1 || n > 11) throw std::invalid_argument(id);
        options.only.insert(n);
      } catch (const std::exception&) {
        throw UsageError("--only: expected criterion ids 1..11, got '" + part + "'");
      }
    }
  }
  const auto results = selftest::run_acceptance(options, [&](const selftest::CriterionResult& r) {
    if (!ctx.json_output()) ctx.out << selftest::format_result(r) << '\n' << std::flush;
    ctx.err << "C" << std::setw(2) << std::setfill('0') << r.id << std::setfill(' ') << " took "
            << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  });
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  const bool all = passed == static_cast<long>(results.size());
  if (ctx.json_output()) {
    json criteria = json::array();
    for (const auto& r : results) {
      criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    ctx.emit({{"seed", ctx.cfg.seed}, {"criteria", criteria}, {"all_passed", all}});
  } else {
    ctx.out << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? kExitOk : kExitProperty;
}

using Handler = int (*)(const Context&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  bool poly, q, functional, bound, prime, lambda, pairs, at, selftest;
};

// clang-format off
const Command kCommands[] = {
  {"moments",    "L(P^m) for m = 1..M",                        cmd_moments,    true,  false, true,  true,  false, false, false, false, false},
  {"probe",      "L(P^m) and L(P^m Q), eventual-vanishing check", cmd_probe,   true,  true,  true,  true,  false, false, false, false, false},
  {"pairing",    "Hermite pairing of P(w, z)",                 cmd_pairing,    true,  false, false, false, false, false, false, false, false},
  {"en",         "differential pairing E(P) in the z variables", cmd_en,       true,  false, false, false, false, false, false, true,  false},
  {"halfdisk",   "integral of P(x, y) over the upper half disk", cmd_halfdisk, true,  false, false, false, false, false, false, false, false},
  {"torus",      "constant term of a Laurent polynomial",      cmd_torus,      true,  false, false, false, false, false, false, false, false},
  {"reduce",     "torus reduction of a doubly homogeneous P",  cmd_reduce,     true,  false, false, false, false, false, true,  false, false},
  {"crosscheck", "E(P^m) against A_m CT(F_L^m), m = 1..M",     cmd_crosscheck, true,  false, false, true,  false, false, true,  false, false},
  {"cert",       "Frobenius congruence E(F^p) = F(0) mod p",   cmd_cert,       true,  false, false, false, true,  false, false, false, false},
  {"one-ps",     "t-exponents of P(lambda(t) x)",              cmd_one_ps,     true,  false, false, false, false, true,  false, false, false},
  {"selftest",   "run the acceptance suite",                   cmd_selftest,   false, false, false, false, false, false, false, false, true},
};
// clang-format on

void configure(CLI::App& app, Config& cfg) {
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.footer(std::string(kGrammar));
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--output", cfg.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--degree-cap", cfg.degree_cap, "total degree limit")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 30));
    if (c.poly) {
      sub->add_option("--vars", cfg.vars, "ordered variable names, e.g. x,y or w1..w2,z1..z2");
      sub->add_option("--poly", cfg.poly, "polynomial P (or F)");
    }
    if (c.q) sub->add_option("--q", cfg.q, "companion polynomial Q");
    if (c.functional) {
      sub->add_option("--functional", cfg.functional, "gaussian | pairing | halfdisk | torus");
    }
    if (c.bound) sub->add_option("-M,--bound", cfg.bound, "window bound M")->check(CLI::PositiveNumber);
    if (c.prime) sub->add_option("-p,--prime", cfg.prime, "odd prime p");
    if (c.lambda) {
      sub->add_option("--lambda", cfg.lambda, "rotation | identity | matrix \"a,b;c,d\" in t");
    }
    if (c.pairs) sub->add_option("--pairs", cfg.pairs, "variable pairs x1:y1,x2:y2 (default first/second half)");
    if (c.at) sub->add_option("--at", cfg.at, "evaluate E(P) at a1,...,an");
    if (c.selftest) {
      sub->add_option("--seed", cfg.seed, "RNG seed");
      sub->add_option("--fuzz", cfg.fuzz, "parser fuzz inputs");
      sub->add_option("--only", cfg.only, "comma-separated criterion ids");
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact moment functionals and Mathieu-Zhao probes", "moment-forge"};
  configure(app, cfg);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto* command = std::find_if(std::begin(kCommands), std::end(kCommands),
                                     [&](const Command& c) { return sub->get_name() == c.name; });
  const Context ctx{cfg, args, sub->get_name(), out, err};
  try {
    ScopedDegreeCap cap(cfg.degree_cap);
    return command->handler(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "error: limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace moment_forge::cli
