#include "stirling/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace stirling {

namespace {

bool all_digits(const std::string& v) {
  return !v.empty() && std::all_of(v.begin(), v.end(),
                                   [](unsigned char c) { return c >= '0' && c <= '9'; });
}

long long parse_ll(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw FormatError(std::string("bad ") + what);
    return v;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    throw FormatError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string kind_token(Kind kind) {
  switch (kind) {
    case Kind::FirstKind:
      return "s1";
    case Kind::SecondKind:
      return "s2";
    case Kind::Lah:
      return "lah";
  }
  return "?";
}

std::optional<Kind> kind_from_token(std::string_view t) {
  if (t == "s1") return Kind::FirstKind;
  if (t == "s2") return Kind::SecondKind;
  if (t == "lah") return Kind::Lah;
  return std::nullopt;
}

TableDocument make_table(const TriangleStore& store, const Params& p,
                         long long n_max, std::string provenance) {
  TableDocument doc;
  doc.kind = p.kind;
  doc.r = p.r;
  doc.s = p.s;
  doc.n_max = n_max;
  doc.provenance = std::move(provenance);
  for (long long n = 0; n <= n_max; ++n) {
    for (auto& [k, v] : store.row(p, n)) doc.entries.push_back({n, k, v.str()});
  }
  doc.n_min = doc.entries.empty() ? 0 : doc.entries.front().n;
  return doc;
}

std::string to_csv(const TableDocument& doc) {
  std::ostringstream out;
  out << "# " << doc.provenance << "\n";
  out << "# params: kind=" << kind_token(doc.kind) << " r=" << doc.r
      << " s=" << doc.s << " n_min=" << doc.n_min << " n_max=" << doc.n_max << "\n";
  out << "n,k,value\n";
  for (const auto& e : doc.entries) out << e.n << "," << e.k << "," << e.value << "\n";
  return out.str();
}

std::string to_json(const TableDocument& doc) {
  nlohmann::ordered_json j;
  j["kind"] = kind_token(doc.kind);
  j["r"] = doc.r;
  j["s"] = doc.s;
  j["n_min"] = doc.n_min;
  j["n_max"] = doc.n_max;
  j["provenance"] = doc.provenance;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.entries) {
    j["entries"].push_back({{"n", e.n}, {"k", e.k}, {"value", e.value}});
  }
  return j.dump(2) + "\n";
}

std::string to_markdown(const TableDocument& doc) {
  long long k_min = 0, k_max = -1;
  std::map<std::pair<long long, long long>, const std::string*> cells;
  for (const auto& e : doc.entries) {
    if (k_max < k_min) {
      k_min = k_max = e.k;
    } else {
      k_min = std::min(k_min, e.k);
      k_max = std::max(k_max, e.k);
    }
    cells[{e.n, e.k}] = &e.value;
  }
  std::ostringstream out;
  out << doc.provenance << "\n\n";
  out << "| n \\ k |";
  for (long long k = k_min; k <= k_max; ++k) out << " " << k << " |";
  out << "\n|---|";
  for (long long k = k_min; k <= k_max; ++k) out << "---|";
  out << "\n";
  for (long long n = doc.n_min; n <= doc.n_max; ++n) {
    out << "| " << n << " |";
    for (long long k = k_min; k <= k_max; ++k) {
      auto it = cells.find({n, k});
      out << " " << (it != cells.end() ? *it->second : "") << " |";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// {kind}_r{r}_s{s}.csv
bool params_from_filename(const std::string& name, TableDocument& doc) {
  const auto stem = name.substr(0, name.rfind('.'));
  const auto parts = split(stem, '_');
  if (parts.size() != 3) return false;
  const auto kind = kind_from_token(parts[0]);
  if (!kind || parts[1].size() < 2 || parts[1][0] != 'r' || parts[2].size() < 2 ||
      parts[2][0] != 's')
    return false;
  const std::string rtok = parts[1].substr(1), stok = parts[2].substr(1);
  if (!all_digits(rtok) || !all_digits(stok)) return false;
  doc.kind = *kind;
  doc.r = static_cast<unsigned>(parse_ll(rtok, "r"));
  doc.s = static_cast<unsigned>(parse_ll(stok, "s"));
  return true;
}

}  // namespace

TableDocument parse_csv(const std::string& text, const std::string& filename_hint) {
  std::istringstream in(text);
  std::string line;
  TableDocument doc;

  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw FormatError("missing provenance comment on line 1");
  doc.provenance = line.substr(2);

  bool have_params = false;
  if (!std::getline(in, line)) throw FormatError("truncated table");
  if (line.rfind("# params: ", 0) == 0) {
    for (const auto& tok : split(line.substr(10), ' ')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw FormatError("bad params token: " + tok);
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "kind") {
        const auto kind = kind_from_token(val);
        if (!kind) throw FormatError("unknown kind: " + val);
        doc.kind = *kind;
      } else if (key == "r") {
        doc.r = static_cast<unsigned>(parse_ll(val, "r"));
      } else if (key == "s") {
        doc.s = static_cast<unsigned>(parse_ll(val, "s"));
      } else if (key == "n_min") {
        doc.n_min = parse_ll(val, "n_min");
      } else if (key == "n_max") {
        doc.n_max = parse_ll(val, "n_max");
      } else {
        throw FormatError("unknown params key: " + key);
      }
    }
    have_params = true;
    if (!std::getline(in, line)) throw FormatError("truncated table");
  }
  if (!have_params && !params_from_filename(filename_hint, doc))
    throw FormatError("no params comment and no parsable filename");

  if (line != "n,k,value") throw FormatError("expected header n,k,value");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 3) throw FormatError("expected 3 columns: " + line);
    if (!all_digits(cols[2])) throw FormatError("non-numeric value: " + cols[2]);
    doc.entries.push_back({parse_ll(cols[0], "n"), parse_ll(cols[1], "k"), cols[2]});
  }
  if (!have_params) {
    doc.n_min = doc.entries.empty() ? 0 : doc.entries.front().n;
    doc.n_max = doc.entries.empty() ? 0 : doc.entries.back().n;
  }
  if (doc.s == 0) throw FormatError("association order s must be >= 1");
  return doc;
}

TableDocument parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad json: ") + e.what());
  }
  try {
    TableDocument doc;
    const auto kind = kind_from_token(j.at("kind").get<std::string>());
    if (!kind) throw FormatError("unknown kind");
    doc.kind = *kind;
    doc.r = j.at("r").get<unsigned>();
    doc.s = j.at("s").get<unsigned>();
    doc.n_min = j.at("n_min").get<long long>();
    doc.n_max = j.at("n_max").get<long long>();
    doc.provenance = j.at("provenance").get<std::string>();
    for (const auto& e : j.at("entries")) {
      if (!e.at("value").is_string())
        throw FormatError("entry values must be strings");
      const std::string value = e.at("value").get<std::string>();
      if (!all_digits(value)) throw FormatError("non-numeric value: " + value);
      doc.entries.push_back(
          {e.at("n").get<long long>(), e.at("k").get<long long>(), value});
    }
    if (doc.s == 0) throw FormatError("association order s must be >= 1");
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad table json: ") + e.what());
  }
}

FixtureOutcome check_fixtures(const TriangleStore& store,
                              const std::filesystem::path& dir, std::ostream& log) {
  if (!std::filesystem::is_directory(dir))
    throw FormatError("not a directory: " + dir.string());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  FixtureOutcome outcome;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const TableDocument doc = parse_csv(buf.str(), path.filename().string());

    const Params p(doc.kind, doc.r, doc.s);
    unsigned long long bad = 0;
    for (const auto& e : doc.entries) {
      const std::string actual = store.value(p, {e.n, e.k}).str();
      outcome.cells += 1;
      if (actual != e.value) {
        outcome.mismatches.push_back({path.filename().string(), e.n, e.k, e.value, actual});
        bad += 1;
      }
    }
    outcome.files += 1;
    log << path.filename().string() << ": " << doc.entries.size() << " cells, "
        << (bad == 0 ? "all match" : std::to_string(bad) + " MISMATCH") << "\n";
  }
  for (const auto& m : outcome.mismatches) {
    log << "  " << m.file << " (n=" << m.n << ", k=" << m.k << "): fixture "
        << m.expected << " != computed " << m.actual << "\n";
  }
  return outcome;
}

}  // namespace stirling
