#include "brauerc_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "brauerc/algebra.hpp"
#include "brauerc/bicomb.hpp"
#include "brauerc/creps.hpp"
#include "brauerc/diagrams.hpp"
#include "brauerc/verify.hpp"
#include "brauerc/wreps.hpp"

namespace brauerc::cli {

namespace {

struct RunConfig {
  int r = 2;
  std::uint32_t characteristic = 5;
  std::string delta = "1";
  std::string placement = "auto";
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
};

// Attaches the flags every subcommand understands.
void common_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--r", c.r, "rank")->check(CLI::NonNegativeNumber);
  sub->add_option("--char", c.characteristic, "0 or a prime");
  sub->add_option("--delta", c.delta, "loop value, e.g. 1 or 5/2");
  sub->add_option("--placement", c.placement)->check(CLI::IsMember({"first", "second", "auto"}));
  sub->add_option("--seed", c.seed);
  sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "write the report here instead of stdout");
}

// Labels a ParseError with the argument it came from.
struct ArgError : std::runtime_error {
  ArgError(const std::string& arg, const ParseError& e)
      : std::runtime_error(arg + ":1:" + std::to_string(e.column ? e.column : 1) + ": " + e.what()) {}
};

template <class F>
auto parsing(const std::string& arg, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ArgError(arg, e);
  }
}

FieldSpec make_spec(const RunConfig& c) {
  if (c.characteristic != 0 && !is_prime(c.characteristic))
    throw MathError("--char must be 0 or a prime, got " + std::to_string(c.characteristic));
  return parsing("--delta", [&] { return FieldSpec::make(c.characteristic, c.delta); });
}

std::optional<SignPlacement> requested_placement(const RunConfig& c) {
  if (c.placement == "auto") return std::nullopt;
  return parse_placement(c.placement);
}

std::string emit_simple(const RunConfig& c, const std::vector<std::pair<std::string, std::string>>& fields,
                        const std::string& text) {
  const std::string fmt = c.format.empty() ? "text" : c.format;
  if (fmt == "text") return text;
  if (fmt == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : fields) j[k] = v;
    return j.dump(2) + "\n";
  }
  std::string head, row;
  for (const auto& [k, v] : fields) {
    head += (head.empty() ? "" : ",") + k;
    bool quote = v.find_first_of(",\"\n") != std::string::npos;
    std::string cell = v;
    if (quote) {
      cell.clear();
      for (char ch : v) cell += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      cell = "\"" + cell + "\"";
    }
    row += (&v == &fields.front().second ? "" : ",") + cell;
  }
  return head + "\n" + row + "\n";
}

void deliver(const RunConfig& c, const std::string& body, std::ostream& out) {
  if (c.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw MathError("cannot open " + c.out + " for writing");
  f << body;
}

struct DimArgs {
  std::string what;
  int l = 0;
  std::string lambda, index;
};

std::string cmd_dim(const RunConfig& c, const DimArgs& a) {
  long long d = 0;
  std::string subject;
  if (a.what == "algebra") {
    d = static_cast<long long>(enumerate_basis(c.r).size());
  } else if (a.what == "dangles") {
    if (a.l < 0 || a.l > c.r) throw MathError("--l must lie in 0..r");
    d = static_cast<long long>(enumerate_dangles(c.r, a.l).size());
    subject = "l=" + std::to_string(a.l);
  } else if (a.what == "perm-w" || a.what == "specht") {
    if (a.lambda.empty()) throw MathError("--what " + a.what + " needs --lambda");
    BiPartition lam = parsing("--lambda", [&] { return BiPartition::parse(a.lambda); });
    if (lam.size() != c.r) throw MathError("--lambda " + lam.to_string() + " is not a bi-partition of r");
    Field f = make_spec(c).field;
    SignPlacement pl = resolve_placement(requested_placement(c));
    d = a.what == "perm-w" ? static_cast<long long>(perm_module_W(lam, f, pl).module.dim())
                           : static_cast<long long>(specht_W(lam, f, pl).module.dim());
    subject = lam.to_string();
  } else {
    if (a.index.empty()) throw MathError("--what " + a.what + " needs --index");
    CellIndex idx = parsing("--index", [&] { return CellIndex::parse(a.index); });
    if (idx.l + idx.lam.size() != c.r) throw MathError("--index " + idx.to_string() + " does not belong to r");
    BrauerPtr b = brauer_c_algebra(c.r, make_spec(c));
    SignPlacement pl = resolve_placement(requested_placement(c));
    d = static_cast<long long>(a.what == "cell" ? cell_module(idx, b, pl).dim() : perm_module_B(idx, b, pl).dim());
    subject = idx.to_string();
  }
  std::vector<std::pair<std::string, std::string>> fields{{"what", a.what}, {"r", std::to_string(c.r)}};
  if (!subject.empty()) fields.emplace_back("of", subject);
  fields.emplace_back("dim", std::to_string(d));
  return emit_simple(c, fields, std::to_string(d) + "\n");
}

std::string cmd_mult(const RunConfig& c, const std::string& lhs, const std::string& rhs, bool rank_given) {
  int r = rank_given ? c.r : -1;
  CDiagram a = parsing("lhs", [&] { return CDiagram::parse(lhs, r); });
  CDiagram b = parsing("rhs", [&] { return CDiagram::parse(rhs, rank_given ? r : a.rank()); });
  if (a.rank() != b.rank()) throw MathError("diagrams have different ranks");
  FieldSpec spec = make_spec(c);
  DiagramProduct p = multiply(a, b);
  Scalar coef = spec.delta.pow(p.loops);
  std::string product = coef.to_string() + " \xC2\xB7 " + p.result.to_string();
  return emit_simple(c,
                     {{"lhs", a.to_string()},
                      {"rhs", b.to_string()},
                      {"coefficient", coef.to_string()},
                      {"diagram", p.result.to_string()},
                      {"loops", std::to_string(p.loops)}},
                     product + "\nloops " + std::to_string(p.loops) + "\n");
}

int cmd_verify(const RunConfig& c, const std::string& suite, bool allow, std::ostream& out) {
  SuiteConfig sc;
  sc.r = c.r;
  sc.spec = make_spec(c);
  sc.placement = requested_placement(c);
  sc.seed = c.seed;
  sc.allow_out_of_hypothesis = allow;
  SuiteResult res = run_suite(suite, sc);
  deliver(c, render(res, parse_format(c.format.empty() ? "json" : c.format)), out);
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the type-C Brauer algebra and the hyperoctahedral group", "brauerc"};
  app.require_subcommand(1);

  RunConfig dim_cfg, mult_cfg, verify_cfg;
  DimArgs dim_args;
  auto* dim = app.add_subcommand("dim", "dimension of a named object");
  common_flags(dim, dim_cfg);
  dim->add_option("--what", dim_args.what)
      ->required()
      ->check(CLI::IsMember({"algebra", "dangles", "perm-w", "specht", "cell", "perm-b"}));
  dim->add_option("--l", dim_args.l, "number of arcs per dangle");
  dim->add_option("--lambda", dim_args.lambda, "bi-partition such as \"2,1|1\"");
  dim->add_option("--index", dim_args.index, "cell index (l,lambda) such as \"(1,1|-)\"");

  std::string lhs, rhs;
  auto* mult = app.add_subcommand("mult", "product of two diagrams");
  common_flags(mult, mult_cfg);
  mult->add_option("lhs", lhs)->required();
  mult->add_option("rhs", rhs)->required();

  std::string suite;
  bool allow = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common_flags(verify, verify_cfg);
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_flag("--allow-out-of-hypothesis", allow);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dim) {
      deliver(dim_cfg, cmd_dim(dim_cfg, dim_args), out);
      return 0;
    }
    if (*mult) {
      deliver(mult_cfg, cmd_mult(mult_cfg, lhs, rhs, mult->count("--r") > 0), out);
      return 0;
    }
    return cmd_verify(verify_cfg, suite, allow, out);
  } catch (const HypothesisError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const ArgError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input:1:" << (e.column ? e.column : 1) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace brauerc::cli
