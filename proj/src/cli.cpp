#include "degen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/identities.hpp"
#include "degen/serialize.hpp"

namespace degen::cli {

namespace {

struct ComputeOptions {
  std::string family;
  std::string order = "1";
  int max_n = 10;
  std::string lambda = "symbolic";
  std::string x = "symbolic";
  std::optional<int> trunc;
  std::string format = "json";
  std::string output;
};

struct VerifyOptions {
  std::string identity = "all";
  std::string profile = "quick";
  std::optional<int> max_n;
  std::optional<int> order;
  std::optional<int> trunc;
  std::string format = "json";
  std::string output;
  bool no_timing = false;
};

struct ListOptions {
  std::string format = "text";
  std::string output;
};

int effective_trunc(std::optional<int> trunc, int max_n, int fallback) {
  if (trunc) {
    if (*trunc < max_n) {
      throw RangeError("--trunc " + std::to_string(*trunc) + " is below --max-n " + std::to_string(max_n));
    }
    return *trunc;
  }
  return std::max(fallback, max_n);
}

struct Row {
  std::vector<CaseIndex> indices;
  BiPoly value;
};

std::string compute(const ComputeOptions& opt) {
  FamilySpec spec{family_from_name(opt.family), Rational::parse(opt.order), parse_argument(opt.x),
                  parse_lambda(opt.lambda)};
  if (opt.max_n < 0) throw RangeError("--max-n must be nonnegative");
  int trunc = effective_trunc(opt.trunc, opt.max_n, 16);
  const FamilyInfo& info = family_info(spec.id);

  std::vector<Row> rows;
  if (info.kind == FamilyKind::Triangle) {
    for (int n = 0; n <= opt.max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        rows.push_back({{{"n", long{n}}, {"k", long{k}}}, triangular_number(spec.id, n, k, spec.lambda)});
      }
    }
  } else {
    EgfSeries series = build_egf(spec, trunc);
    for (int n = 0; n <= opt.max_n; ++n) rows.push_back({{{"n", long{n}}}, series.value(n)});
  }

  if (opt.format == "csv") {
    std::ostringstream os;
    os << (info.kind == FamilyKind::Triangle ? "n,k,value\n" : "n,value\n");
    for (const auto& row : rows) {
      for (const auto& index : row.indices) os << std::get<long>(index.value) << ',';
      os << row.value.str() << '\n';
    }
    return os.str();
  }
  Json out;
  out["family"] = std::string(info.name);
  out["symbol"] = std::string(info.symbol);
  out["order"] = info.kind == FamilyKind::Triangle ? Json(nullptr) : Json(spec.order.str());
  out["lambda"] = spec.lambda.str();
  out["x"] = spec.argument.str();
  out["max_n"] = opt.max_n;
  out["trunc"] = trunc;
  Json values = Json::array();
  for (const auto& row : rows) {
    Json indices = Json::object();
    for (const auto& index : row.indices) indices[index.key] = std::get<long>(index.value);
    values.push_back(Json{{"indices", std::move(indices)}, {"value", bipoly_to_json(row.value)}});
  }
  out["values"] = std::move(values);
  return out.dump(2) + "\n";
}

std::vector<VerificationReport> run_verify(const VerifyOptions& opt) {
  Profile profile = profile_from_name(opt.profile);
  ProfileRanges ranges = profile_ranges(profile);
  bool overridden = opt.max_n || opt.order || opt.trunc;
  int max_n = opt.max_n.value_or(ranges.max_n);
  int trunc = effective_trunc(opt.trunc, max_n, ranges.trunc);

  std::vector<IdentityId> ids;
  if (opt.identity == "all") {
    for (const auto& info : identity_catalog()) ids.push_back(info.id);
  } else {
    ids.push_back(identity_from_name(opt.identity));
  }

  std::vector<VerificationReport> reports;
  for (IdentityId id : ids) {
    int fallback_order = id == IdentityId::Thm4 ? ranges.thm4_max_order : ranges.max_order;
    VerificationReport report = verify(id, max_n, opt.order.value_or(fallback_order), trunc);
    report.profile = overridden ? "custom" : std::string(profile_name(profile));
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string render_reports(const std::vector<VerificationReport>& reports, const VerifyOptions& opt) {
  if (opt.format == "csv") return reports_to_csv(reports);
  if (opt.identity != "all") return report_to_json(reports.front(), !opt.no_timing).dump(2) + "\n";
  Json all = Json::array();
  for (const auto& r : reports) all.push_back(report_to_json(r, !opt.no_timing));
  return all.dump(2) + "\n";
}

std::string list_families(const ListOptions& opt) {
  const auto& catalog = family_catalog();
  auto kind = [](const FamilyInfo& f) { return f.kind == FamilyKind::Triangle ? "triangle" : "sequence"; };
  auto counterpart = [](const FamilyInfo& f) {
    return f.classical ? std::string(family_info(*f.classical).name) : std::string();
  };
  if (opt.format == "json") {
    Json out = Json::array();
    for (const auto& f : catalog) {
      out.push_back(Json{{"name", std::string(f.name)},
                         {"symbol", std::string(f.symbol)},
                         {"generating_function", std::string(f.generating_function)},
                         {"kind", kind(f)},
                         {"takes_order", f.takes_order},
                         {"lambda0_counterpart", f.classical ? Json(counterpart(f)) : Json(nullptr)}});
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (opt.format == "csv") {
    os << "name,symbol,kind,takes_order,lambda0_counterpart,generating_function\n";
    for (const auto& f : catalog) {
      os << f.name << ',' << f.symbol << ',' << kind(f) << ',' << (f.takes_order ? "yes" : "no") << ','
         << counterpart(f) << ",\"" << f.generating_function << "\"\n";
    }
    return os.str();
  }
  os << std::left << std::setw(26) << "NAME" << std::setw(20) << "SYMBOL" << std::setw(10) << "KIND"
     << "GENERATING FUNCTION\n";
  for (const auto& f : catalog) {
    os << std::left << std::setw(26) << f.name << std::setw(20) << f.symbol << std::setw(10) << kind(f)
       << f.generating_function;
    if (f.takes_order) os << "   [order a]";
    if (f.classical) os << "   (l -> 0: " << counterpart(f) << ")";
    os << '\n';
  }
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw RangeError("cannot open output file '" + path + "'");
  file << text;
}

}  // namespace

Argument parse_argument(const std::string& text) {
  if (text == "symbolic" || text == "x") return Argument::symbolic();
  if (text.size() > 2 && text[0] == 'x' && (text[1] == '+' || text[1] == '-')) {
    Rational c = Rational::parse(text.substr(2));
    return Argument::shifted(text[1] == '-' ? -c : c);
  }
  return Argument::numeric(Rational::parse(text));
}

LambdaMode parse_lambda(const std::string& text) {
  if (text == "symbolic" || text == "l") return LambdaMode::symbolic();
  if (text.size() > 2 && text.substr(text.size() - 2) == "*l") {
    return LambdaMode::scaled(Rational::parse(text.substr(0, text.size() - 2)));
  }
  return LambdaMode::numeric(Rational::parse(text));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate Bernoulli-type polynomial families and identity verification", "degen"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv"};

  ComputeOptions copt;
  auto* compute_cmd = app.add_subcommand("compute", "Tabulate a polynomial family or number triangle");
  compute_cmd->add_option("--family", copt.family, "Family name (see list-families)")->required();
  compute_cmd->add_option("--order", copt.order, "Order a or r as a rational literal");
  compute_cmd->add_option("--max-n", copt.max_n, "Largest index n");
  compute_cmd->add_option("--lambda", copt.lambda, "symbolic, a rational, or c*l");
  compute_cmd->add_option("--x", copt.x, "symbolic, a rational, or x+c / x-c");
  compute_cmd->add_option("--trunc", copt.trunc, "Series truncation order (>= max-n)");
  compute_cmd->add_option("--format", copt.format)->check(CLI::IsMember(formats));
  compute_cmd->add_option("--output", copt.output, "Write to a file instead of standard output");

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Verify identities as exact polynomial equalities");
  verify_cmd->add_option("--identity", vopt.identity, "Identity name or 'all'");
  verify_cmd->add_option("--profile", vopt.profile)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--max-n", vopt.max_n, "Largest index n");
  verify_cmd->add_option("--order", vopt.order, "Largest order k or r");
  verify_cmd->add_option("--trunc", vopt.trunc, "Series truncation order (>= max-n)");
  verify_cmd->add_option("--format", vopt.format)->check(CLI::IsMember(formats));
  verify_cmd->add_option("--output", vopt.output, "Write to a file instead of standard output");
  verify_cmd->add_flag("--no-timing", vopt.no_timing, "Write wall_time_ms as null for reproducible output");

  ListOptions lopt;
  auto* list_cmd = app.add_subcommand("list-families", "Print the family catalog");
  list_cmd->add_option("--format", lopt.format)->check(CLI::IsMember({"text", "json", "csv"}));
  list_cmd->add_option("--output", lopt.output, "Write to a file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*compute_cmd) {
      emit(compute(copt), copt.output, out);
      return kOk;
    }
    if (*verify_cmd) {
      auto reports = run_verify(vopt);
      emit(render_reports(reports, vopt), vopt.output, out);
      for (const auto& r : reports) {
        if (!r.all_passed()) {
          err << identity_info(r.identity).name << ": " << r.failures() << " of " << r.cases.size()
              << " cases failed\n";
        }
      }
      for (const auto& r : reports) {
        if (!r.all_passed()) return kVerificationFailed;
      }
      return kOk;
    }
    emit(list_families(lopt), lopt.output, out);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace degen::cli
