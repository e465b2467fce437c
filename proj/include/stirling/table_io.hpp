#pragma once

// Serializable triangle slices. A TableDocument is the canonical exchange
// format between the CLI, the golden fixtures and the tests: values are
// decimal strings end to end, so nothing is rounded on either side of a
// round-trip.

#include "stirling/exactnum.hpp"
#include "stirling/triangles.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stirling {

// A file or stream that does not follow the documented table schema.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableDocument {
  Kind kind = Kind::FirstKind;
  unsigned r = 0;
  unsigned s = 1;
  long long n_min = 0;
  long long n_max = 0;
  std::string provenance;
  struct Entry {
    long long n;
    long long k;
    std::string value;  // decimal
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // (n, k) lexicographic

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

std::string kind_token(Kind kind);                       // "s1" / "s2" / "lah"
std::optional<Kind> kind_from_token(std::string_view t);

// All nonzero cells with n <= n_max; n_min is the first row holding one
// (0 when the table is empty).
TableDocument make_table(const TriangleStore& store, const Params& p,
                         long long n_max, std::string provenance);

// CSV: provenance comment, params comment, `n,k,value` header, rows.
std::string to_csv(const TableDocument& doc);
// JSON object with kind/r/s/n_min/n_max/provenance and entries whose values
// are strings.
std::string to_json(const TableDocument& doc);
// Row/column grid with k across and n down; cells empty outside the domain.
std::string to_markdown(const TableDocument& doc);

// Parsers throw FormatError on malformed input. The CSV params comment is
// optional; when absent, kind/r/s fall back to `filename_hint` parsed as
// {kind}_r{r}_s{s}.csv and the row range is derived from the entries.
TableDocument parse_csv(const std::string& text, const std::string& filename_hint = "");
TableDocument parse_json(const std::string& text);

struct FixtureMismatch {
  std::string file;
  long long n;
  long long k;
  std::string expected;  // fixture value
  std::string actual;    // recomputed value
};

struct FixtureOutcome {
  unsigned files = 0;
  unsigned long long cells = 0;
  std::vector<FixtureMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Recompute every cell of every *.csv fixture under `dir` with the triangle
// engine and diff. Throws FormatError on a malformed fixture.
FixtureOutcome check_fixtures(const TriangleStore& store,
                              const std::filesystem::path& dir,
                              std::ostream& log);

}  // namespace stirling
