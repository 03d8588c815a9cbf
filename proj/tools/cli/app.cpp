#include "app.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "zetalab/errors.hpp"

namespace zetalab::cli {

namespace {

void add_common(CLI::App& cmd, Options& o, std::string& format) {
  cmd.add_option("--digits", o.digits, "Working precision in decimal digits")
      ->envname("ZETALAB_DIGITS")
      ->check(CLI::Range(PrecisionContext::kMinDigits, PrecisionContext::kMaxDigits));
  cmd.add_option("--format", format, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}, CLI::ignore_case));
}

void add_ranges(CLI::App& cmd, Options& o) {
  cmd.add_option("--k", o.k, "Single index k");
  cmd.add_option("--k-max", o.k_max, "Largest index k (range starts at 1)");
  cmd.add_option("--m", o.m, "Extra log power m");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of zeta-value integral identities", "zetalab"};
  app.require_subcommand(1);

  Options o;
  std::string format = "table";
  std::string target;
  std::string family;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", target, "Check to run")
      ->required()
      ->check(CLI::IsMember(kVerifyTargets));
  add_common(*verify, o, format);
  add_ranges(*verify, o);
  verify->add_option("--n", o.n, "Dimension n");
  verify->add_option("--r", o.r, "Power r inside log(1 - t^r)");
  verify->add_option("--seed", o.seed, "Monte Carlo seed and point selection seed");
  verify->add_option("--samples", o.samples, "Monte Carlo sample count");
  verify->add_flag("--errata", o.errata, "Append the errata table");
  verify->add_flag("--timings", o.timings, "Record wall-clock runtime_ms per check");

  auto* sequence = app.add_subcommand("sequence", "Emit a table of a sequence over k");
  sequence->add_option("family", family, "Sequence family")
      ->required()
      ->check(CLI::IsMember(kSequenceFamilies));
  add_common(*sequence, o, format);
  add_ranges(*sequence, o);
  sequence->add_flag("--errata", o.errata, "Append the errata table");

  auto* errata = app.add_subcommand("errata", "Emit the errata table");
  add_common(*errata, o, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "zetalab: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::map<std::string, Format> formats = {
      {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
  std::transform(format.begin(), format.end(), format.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  o.format = formats.at(format);

  try {
    const PrecisionContext ctx(o.digits);
    if (errata->parsed()) {
      const Table rows = errata_rows(ctx);
      write_rows(out, rows, o.format);
      return kExitPass;
    }
    std::optional<Table> errata_table;
    if (o.errata) errata_table = errata_rows(ctx);
    const Table* extra = errata_table ? &*errata_table : nullptr;
    if (verify->parsed()) {
      const auto reports = run_verify(target, o);
      write_reports(out, reports, o.format, extra);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const Report& r) { return r.status != Status::fail; });
      return ok ? kExitPass : kExitFail;
    }
    const auto result = run_sequence(family, o);
    write_rows(out, result.table, o.format, extra);
    return result.all_hold ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    err << "zetalab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "zetalab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "zetalab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "zetalab: check aborted: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace zetalab::cli
