#include "detmult/cli.hpp"

#include "detmult/schur.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace detmult::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  bool generic = false;
  bool pfaffian = false;
  int m = 0;
  int n = 0;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_flag("--generic", generic, "Maximal minors of a generic m x n matrix (m > n)");
    auto* p = cmd->add_flag("--pfaffian", pfaffian, "Sub-maximal pfaffians of a (2n+1) x (2n+1) skew matrix");
    g->excludes(p);
    cmd->add_option("-m", m, "Rows of the generic matrix");
    cmd->add_option("-n", n, "Columns (generic) or half-size (pfaffian)")->required();
  }

  Family resolve() const {
    if (generic == pfaffian) throw UsageError("choose exactly one of --generic or --pfaffian");
    if (generic) {
      if (n < 1 || m <= n) throw UsageError("the generic family requires m > n >= 1");
      return Family::generic(m, n);
    }
    if (n < 1) throw UsageError("the pfaffian family requires n >= 1");
    return Family::pfaffian(n);
  }
};

json family_parameters(const Family& family) {
  json p = json::object();
  p["family"] = std::string(to_string(family.tag()));
  if (const auto* g = std::get_if<GenericParams>(&family.params())) {
    p["m"] = g->m;
    p["n"] = g->n;
  } else {
    p["n"] = std::get<PfaffianParams>(family.params()).n;
  }
  return p;
}

std::string family_params_text(const Family& family) {
  if (const auto* g = std::get_if<GenericParams>(&family.params()))
    return "m=" + std::to_string(g->m) + ";n=" + std::to_string(g->n);
  return "n=" + std::to_string(std::get<PfaffianParams>(family.params()).n);
}

BigInteger family_slice(const Family& family, int d, unsigned jobs) {
  if (const auto* g = std::get_if<GenericParams>(&family.params())) return slice_length(*g, d, jobs);
  return pf_slice_length(std::get<PfaffianParams>(family.params()), d, jobs);
}

LengthClassification family_classification(const Family& family, int j, int d) {
  if (const auto* g = std::get_if<GenericParams>(&family.params())) return ext_length_classification(*g, j, d);
  return pf_length_classification(std::get<PfaffianParams>(family.params()), j, d);
}

std::vector<long> parse_weight(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed weight entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("malformed weight entry '" + item + "'");
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',') throw UsageError("malformed weight '" + text + "'");
  return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c]));
      if (c == 0) out << std::left; else out << std::right;
      out << cells[c];
    }
    out << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

void emit(const OutputRecord& record, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << record.to_json().dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(record.to_json(), "", flat);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : flat) out << k << "," << v << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [k, v] : flat) rows.push_back({k, v});
  print_table(out, {"key", "value"}, rows);
}

}  // namespace

json OutputRecord::to_json() const {
  json j = json::object();
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["parameters"] = parameters;
  j["results"] = results;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

OutputRecord OutputRecord::from_json(const json& j) {
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.results = j.at("results");
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<long long>();
  return r;
}

json report_to_json(const MultiplicityReport& report) {
  json j = json::object();
  j["family"] = std::string(to_string(report.family.tag()));
  j["ring_dimension"] = report.family.ring_dimension();
  j["ext_index"] = report.family.ext_index();
  j["local_cohomology_index"] = report.j_local_cohomology;
  j["first_nonzero_slice"] = report.family.first_nonzero_slice();
  json coeffs = json::array();
  for (const Rational& c : report.slice_polynomial.coefficients()) coeffs.push_back(to_string(c));
  j["slice_polynomial"] = coeffs;
  j["j_multiplicity"] = to_string(report.j_mult);
  j["epsilon_multiplicity"] = to_string(report.epsilon_mult);
  json oracles = json::object();
  for (const auto& [name, value] : report.oracles) oracles[name] = to_string(value);
  j["oracles"] = oracles;
  j["all_agree"] = report.all_agree;
  return j;
}

json verify_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      item["expected"] = c.expected;
      item["actual"] = c.actual;
    }
    checks.push_back(item);
  }
  json j = json::object();
  j["checks"] = checks;
  j["notes"] = report.notes;
  j["total"] = report.checks.size();
  j["failed"] = report.failures();
  j["passed"] = report.passed();
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const LengthSource* source) {
  CLI::App app{"Exact Ext lengths and multiplicities of determinantal and pfaffian thickenings", "detmult"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned jobs = 0;
  bool no_timing = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->envname("DETMULT_FORMAT");
  app.add_option("--jobs", jobs, "Concurrent workers for enumeration (0 = available parallelism)")
      ->envname("DETMULT_JOBS");
  app.add_flag("--no-timing", no_timing, "Omit timing_ms from the output");

  std::string weight_text;
  int schur_dim = 0;
  auto* schur_cmd = app.add_subcommand("schur-dim", "Dimension of a Schur module via the Weyl formula");
  schur_cmd->add_option("--weight", weight_text, "Comma-separated dominant weight, e.g. 2,1,0")->required();
  schur_cmd->add_option("--dim", schur_dim, "Dimension N of the vector space (default: weight length)");

  FamilyFlags ext_family;
  bool ext_slice = false;
  bool ext_cumulative = false;
  int ext_d = 0;
  int ext_D = 0;
  auto* ext_cmd = app.add_subcommand("ext-length", "Length of the finite-length Ext module and degree classification");
  ext_family.add_to(ext_cmd);
  auto* slice_flag = ext_cmd->add_flag("--slice", ext_slice, "Length for I^{d-1}/I^d");
  auto* cumulative_flag = ext_cmd->add_flag("--cumulative", ext_cumulative, "Length for S/I^D");
  slice_flag->excludes(cumulative_flag);
  ext_cmd->add_option("-d", ext_d, "Power d for --slice");
  ext_cmd->add_option("-D", ext_D, "Power D for --cumulative");

  FamilyFlags mult_family;
  auto* mult_cmd = app.add_subcommand("multiplicity", "J- and epsilon-multiplicities with every oracle");
  mult_family.add_to(mult_cmd);

  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle suites");
  verify_cmd->add_option("--generic-max-m", verify_options.generic_max_m, "Largest m for generic families")
      ->check(CLI::Range(2, 8));
  verify_cmd->add_option("--generic-max-n", verify_options.generic_max_n, "Largest n for generic families")
      ->check(CLI::Range(1, 4));
  verify_cmd->add_option("--pfaffian-max-n", verify_options.pfaffian_max_n, "Largest n for pfaffian families")
      ->check(CLI::Range(0, 3));
  verify_cmd->add_flag("--quick", verify_options.quick, "Only n <= 2 families with short ranges");

  FamilyFlags sweep_family;
  int sweep_from = 1;
  int sweep_to = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate slice and cumulative lengths over a range of d");
  sweep_family.add_to(sweep_cmd);
  sweep_cmd->add_option("--from", sweep_from, "First d (>= 1)");
  sweep_cmd->add_option("--to", sweep_to, "Last d; a value below --from gives an empty table")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  OutputRecord record;
  int status = kSuccess;
  try {
    if (schur_cmd->parsed()) {
      record.command = "schur-dim";
      std::vector<long> weight = parse_weight(weight_text);
      const int N = schur_dim == 0 ? static_cast<int>(weight.size()) : schur_dim;
      if (N < static_cast<int>(weight.size())) throw UsageError("weight is longer than --dim");
      weight.resize(static_cast<std::size_t>(N), 0);
      DominantWeight lambda = [&] {
        try {
          return DominantWeight(weight);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }();
      record.parameters = {{"weight", weight}, {"dim", N}};
      record.results = {{"dimension", to_string(weyl_dimension(lambda))}};
    } else if (ext_cmd->parsed()) {
      record.command = "ext-length";
      const Family family = ext_family.resolve();
      if (ext_slice == ext_cumulative) throw UsageError("choose exactly one of --slice or --cumulative");
      const int power = ext_slice ? ext_d : ext_D;
      if (power < 1) throw UsageError(ext_slice ? "--slice needs -d >= 1" : "--cumulative needs -D >= 1");
      record.parameters = family_parameters(family);
      record.parameters["mode"] = ext_slice ? "slice" : "cumulative";
      record.parameters[ext_slice ? "d" : "D"] = power;

      BigInteger length = 0;
      if (ext_slice) {
        length = family_slice(family, power, jobs);
      } else if (const auto* g = std::get_if<GenericParams>(&family.params())) {
        length = cumulative_length(*g, power, jobs);
      } else {
        length = pf_cumulative_length(std::get<PfaffianParams>(family.params()), power, jobs);
      }
      json degrees = json::array();
      for (int j = 0; j <= family.ring_dimension(); ++j)
        degrees.push_back({{"ext_index", j},
                           {"local_cohomology_index", family.ring_dimension() - j},
                           {"classification", std::string(to_string(family_classification(family, j, power)))}});
      record.results = {{"length", to_string(length)},
                        {"ext_index", family.ext_index()},
                        {"local_cohomology_index", family.local_cohomology_index()},
                        {"degrees", degrees}};
    } else if (mult_cmd->parsed()) {
      record.command = "multiplicity";
      const Family family = mult_family.resolve();
      record.parameters = family_parameters(family);
      if (source) {
        const SliceFunction slice = [&](int d) -> BigInteger {
          if (const auto* g = std::get_if<GenericParams>(&family.params())) return source->generic_slice(*g, d);
          return source->pfaffian_slice(std::get<PfaffianParams>(family.params()), d);
        };
        record.results = report_to_json(build_report(family, slice));
      } else {
        record.results = report_to_json(build_report(family, jobs));
      }
    } else if (verify_cmd->parsed()) {
      record.command = "verify";
      verify_options.jobs = jobs;
      record.parameters = {{"generic_max_m", verify_options.generic_max_m},
                           {"generic_max_n", verify_options.generic_max_n},
                           {"pfaffian_max_n", verify_options.pfaffian_max_n},
                           {"quick", verify_options.quick}};
      const VerifyReport report =
          run_verify(verify_options, source ? *source : LengthSource::standard(jobs));
      record.results = verify_to_json(report);
      if (!report.passed()) status = kVerificationFailed;
    } else if (sweep_cmd->parsed()) {
      record.command = "sweep";
      const Family family = sweep_family.resolve();
      if (sweep_from < 1) throw UsageError("--from must be >= 1");
      record.parameters = family_parameters(family);
      record.parameters["from"] = sweep_from;
      record.parameters["to"] = sweep_to;
      json rows = json::array();
      BigInteger cumulative = 0;
      for (int d = family.first_nonzero_slice(); d < sweep_from; ++d) cumulative += family_slice(family, d, jobs);
      for (int d = sweep_from; d <= sweep_to; ++d) {
        const BigInteger slice = family_slice(family, d, jobs);
        cumulative += slice;
        rows.push_back({{"d", d}, {"slice_length", to_string(slice)}, {"cumulative_length", to_string(cumulative)}});
      }
      record.results = {{"rows", rows}};
      if (format != "json") {
        const std::string fam(to_string(family.tag()));
        const std::string params = family_params_text(family);
        if (format == "csv") {
          out << "family,params,d,slice_length,cumulative_length\n";
          for (const auto& r : rows)
            out << fam << "," << params << "," << r["d"].get<int>() << "," << r["slice_length"].get<std::string>()
                << "," << r["cumulative_length"].get<std::string>() << "\n";
        } else {
          std::vector<std::vector<std::string>> table;
          for (const auto& r : rows)
            table.push_back({std::to_string(r["d"].get<int>()), r["slice_length"].get<std::string>(),
                             r["cumulative_length"].get<std::string>()});
          out << fam << " " << params << "\n";
          print_table(out, {"d", "slice_length", "cumulative_length"}, table);
        }
        return kSuccess;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kInternalError;
  }

  if (!no_timing)
    record.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  emit(record, format, out);
  return status;
}

}  // namespace detmult::cli
