// stirling-lab: exact computation of s-associated r-Stirling and r-Lah
// numbers, table export, enumeration cross-checks, and identity suites.
//
// Exit codes: 0 success, 1 verification or fixture mismatch, 2 invalid
// parameters or malformed input, 3 enumeration/series cap exceeded.

#include "CLI11.hpp"

#include "stirling/closedform.hpp"
#include "stirling/fps.hpp"
#include "stirling/oracle.hpp"
#include "stirling/table_io.hpp"
#include "stirling/triangles.hpp"
#include "stirling/verify.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace stirling;

Shape shape_for(Kind kind) {
  switch (kind) {
    case Kind::FirstKind:
      return Shape::Cycles;
    case Kind::SecondKind:
      return Shape::Subsets;
    case Kind::Lah:
      return Shape::Lists;
  }
  return Shape::Subsets;
}

// STIRLING_LAB_CACHE_CAP bounds the shared memo (entries); unset means
// unbounded. Returns false on a malformed value.
bool cache_cap_from_env(std::optional<std::size_t>& cap) {
  const char* raw = std::getenv("STIRLING_LAB_CACHE_CAP");
  if (raw == nullptr) return true;
  std::size_t parsed = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec != std::errc() || ptr != end || raw == end) return false;
  cap = parsed;
  return true;
}

struct ValueArgs {
  std::string kind = "s1";
  unsigned r = 0;
  unsigned s = 1;
  long long n = 0;
  long long k = 0;
  std::string method = "recurrence";
  int order = 20;
  unsigned oracle_cap = 0;  // 0 keeps the built-in defaults
};

int run_value(const TriangleStore& store, const ValueArgs& a) {
  const Kind kind = *kind_from_token(a.kind);
  const Params p(kind, a.r, a.s);
  Count result(0ULL);
  if (a.method == "recurrence") {
    result = store.value(p, {a.n, a.k});
  } else if (a.method == "explicit") {
    switch (kind) {
      case Kind::FirstKind:
        result = s1_explicit(a.s, a.r, a.n, a.k);
        break;
      case Kind::SecondKind:
        result = s2_explicit(a.s, a.r, a.n, a.k);
        break;
      case Kind::Lah:
        result = lah_r_explicit(a.s, a.r, a.n, a.k);
        break;
    }
  } else if (a.method == "oracle") {
    if (a.n >= 0 && a.k >= 0) {
      EnumerationCaps caps;
      if (a.oracle_cap > 0) caps = {a.oracle_cap, a.oracle_cap, a.oracle_cap};
      const StructureSpec spec{static_cast<unsigned>(a.n),
                               static_cast<unsigned>(a.k), a.r, a.s,
                               shape_for(kind)};
      result = enumerate_count(spec, caps);
    }
  } else {  // egf
    if (a.k >= a.r && a.n >= a.r) {
      const Series column =
          egf_column(p, static_cast<unsigned>(a.k - a.r), a.order);
      result = coefficient_count(column, static_cast<int>(a.n - a.r));
    }
  }
  std::cout << result.str() << "\n";
  return 0;
}

struct TableArgs {
  std::string kind = "s1";
  unsigned r = 0;
  unsigned s = 1;
  long long n_max = 12;
  std::string format = "csv";
  std::string out;
};

std::string table_provenance(Kind kind, unsigned r, unsigned s, long long n_max) {
  std::ostringstream text;
  text << s << "-associated " << r << "-";
  switch (kind) {
    case Kind::FirstKind:
      text << "Stirling numbers of the first kind";
      break;
    case Kind::SecondKind:
      text << "Stirling numbers of the second kind";
      break;
    case Kind::Lah:
      text << "Lah numbers";
      break;
  }
  text << " (r=" << r << ", s=" << s << "), rows 0.." << n_max;
  return text.str();
}

int run_table(const TriangleStore& store, const TableArgs& a) {
  const Kind kind = *kind_from_token(a.kind);
  const Params p(kind, a.r, a.s);
  const TableDocument doc =
      make_table(store, p, a.n_max, table_provenance(kind, a.r, a.s, a.n_max));
  std::string text;
  if (a.format == "csv") {
    text = to_csv(doc);
  } else if (a.format == "json") {
    text = to_json(doc);
  } else {
    text = to_markdown(doc);
  }
  if (a.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) {
    std::cerr << "stirling-lab: cannot open " << a.out << " for writing\n";
    return 2;
  }
  file << text;
  file.close();
  if (!file) {
    std::cerr << "stirling-lab: failed writing " << a.out << "\n";
    return 2;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  long long n_max = 12;
  long long k_max = 5;
  int order = 20;
  unsigned jobs = 1;
};

int run_verify(const TriangleStore& store, const VerifyArgs& a) {
  VerifyOptions opts;
  opts.n_max = a.n_max;
  opts.k_max = a.k_max;
  opts.order = a.order;
  opts.jobs = a.jobs;
  const auto results = run_suites(a.suite, store, opts);
  render_report(std::cout, results);
  bool ok = true;
  for (const auto& suite : results) ok = ok && suite.passed();
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_fixtures(const TriangleStore& store, const std::string& dir) {
  const FixtureOutcome outcome = check_fixtures(store, dir, std::cout);
  std::cout << "fixtures: " << outcome.files << " files, " << outcome.cells
            << " cells, " << outcome.mismatches.size() << " mismatches\n";
  return outcome.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact s-associated r-Stirling / r-Lah numbers: values, tables, "
      "enumeration cross-checks, identity suites"};
  app.require_subcommand(1);

  const std::vector<std::string> kind_tokens{"s1", "s2", "lah"};

  ValueArgs value_args;
  CLI::App* value_cmd =
      app.add_subcommand("value", "compute a single number exactly");
  value_cmd->add_option("--kind", value_args.kind, "family: s1, s2, or lah")
      ->required()
      ->check(CLI::IsMember(kind_tokens));
  value_cmd->add_option("--r", value_args.r, "distinguished elements (default 0)");
  value_cmd->add_option("--s", value_args.s, "minimum class size (default 1)");
  value_cmd->add_option("--n", value_args.n, "number of elements")->required();
  value_cmd->add_option("--k", value_args.k, "number of classes")->required();
  value_cmd
      ->add_option("--method", value_args.method,
                   "recurrence (default), explicit, oracle, or egf")
      ->check(CLI::IsMember({"recurrence", "explicit", "oracle", "egf"}));
  value_cmd
      ->add_option("--order", value_args.order,
                   "series truncation order for --method egf (default 20)")
      ->check(CLI::Range(0, 512));
  value_cmd
      ->add_option("--oracle-cap", value_args.oracle_cap,
                   "raise the n cap for --method oracle (default 11/11/10)")
      ->check(CLI::Range(1, 16));

  TableArgs table_args;
  CLI::App* table_cmd =
      app.add_subcommand("table", "emit all nonzero cells with n <= n-max");
  table_cmd->add_option("--kind", table_args.kind, "family: s1, s2, or lah")
      ->required()
      ->check(CLI::IsMember(kind_tokens));
  table_cmd->add_option("--r", table_args.r, "distinguished elements (default 0)");
  table_cmd->add_option("--s", table_args.s, "minimum class size (default 1)");
  table_cmd->add_option("--n-max", table_args.n_max, "last row (default 12, max 40)")
      ->check(CLI::Range(0, 40));
  table_cmd
      ->add_option("--format", table_args.format, "csv (default), json, or md")
      ->check(CLI::IsMember({"csv", "json", "md"}));
  table_cmd->add_option("--out", table_args.out,
                        "write to this file instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run identity and cross-check suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify_cmd->add_option("--suite", verify_args.suite, "suite name (default all)")
      ->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--n-max", verify_args.n_max, "grid height (default 12)")
      ->check(CLI::Range(0, 24));
  verify_cmd->add_option("--k-max", verify_args.k_max, "grid width (default 5)")
      ->check(CLI::Range(0, 12));
  verify_cmd
      ->add_option("--order", verify_args.order,
                   "series truncation order (default 20)")
      ->check(CLI::Range(0, 64));
  verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads (default 1)")
      ->check(CLI::Range(1, 64));

  std::string fixtures_dir = "data/fixtures";
  CLI::App* fixtures_cmd = app.add_subcommand(
      "fixtures", "recompute every cell of the golden tables and diff");
  fixtures_cmd->add_option("path", fixtures_dir,
                           "fixture directory (default data/fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<std::size_t> cache_cap;
  if (!cache_cap_from_env(cache_cap)) {
    std::cerr << "stirling-lab: STIRLING_LAB_CACHE_CAP must be a nonnegative "
                 "integer\n";
    return 2;
  }
  const TriangleStore store(cache_cap);

  try {
    if (value_cmd->parsed()) return run_value(store, value_args);
    if (table_cmd->parsed()) return run_table(store, table_args);
    if (verify_cmd->parsed()) return run_verify(store, verify_args);
    if (fixtures_cmd->parsed()) return run_fixtures(store, fixtures_dir);
  } catch (const CapExceeded& e) {
    std::cerr << "stirling-lab: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "stirling-lab: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "stirling-lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
