// Command-line front end for the library: deterministic JSON/CSV reports.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adlv/affine_weyl.hpp"
#include "adlv/elcharts.hpp"
#include "adlv/group.hpp"
#include "adlv/orbits.hpp"
#include "adlv/verify.hpp"
#include "adlv/words.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// ---- input grammar ---------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<long long> parse_ints(const std::string& s) {
  std::vector<long long> out;
  for (const auto& tok : split(s, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw adlv::Error("cannot parse integer '" + tok + "'");
    }
  }
  return out;
}

// "a,b;c,d" -> copies separated by ';'
adlv::Cochar parse_cochar(const std::string& s) {
  adlv::Cochar out;
  for (const auto& copy : split(s, ';')) out.push_back(parse_ints(copy));
  return out;
}

// "1,0|0,1;1,0" -> per factor ('|'), per copy (';')
adlv::CocharTuple parse_cochar_tuple(const std::string& s) {
  adlv::CocharTuple out;
  for (const auto& fac : split(s, '|')) out.push_back(parse_cochar(fac));
  return out;
}

std::vector<adlv::Rat> parse_rats(const std::string& s) {
  std::vector<adlv::Rat> out;
  for (const auto& tok : split(s, ',')) out.push_back(adlv::parse_rat(tok));
  return out;
}

// "gl(3)" | "res(2,gl(3))", products joined by "x"
adlv::GroupDatum parse_group(const std::string& s) {
  std::vector<adlv::GroupFactor> factors;
  for (auto tok : split(s, 'x')) {
    std::transform(tok.begin(), tok.end(), tok.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    int n = 0, d = 1;
    if (sscanf(tok.c_str(), "res(%d,gl(%d))", &d, &n) == 2) {
      // parsed
    } else if (sscanf(tok.c_str(), "gl(%d)", &n) == 1) {
      d = 1;
    } else {
      throw adlv::Error("cannot parse group factor '" + tok + "'");
    }
    if (n < 1 || d < 1) throw adlv::Error("factor parameters must be positive");
    factors.push_back({n, d});
  }
  return adlv::GroupDatum(factors);
}

adlv::SigmaInvariants parse_invariants(const adlv::GroupDatum& g,
                                       const std::string& newton,
                                       const std::string& kappa) {
  auto nu_parts = split(newton, '|');
  auto kappa_parts = split(kappa, '|');
  if (nu_parts.size() != g.factors.size() || kappa_parts.size() != g.factors.size())
    throw adlv::Error("need one newton vector and one kappa per factor");
  adlv::SigmaInvariants inv;
  for (size_t j = 0; j < g.factors.size(); ++j) {
    adlv::FactorInvariants f;
    f.nu = parse_rats(nu_parts[j]);
    f.kappa = std::stoll(kappa_parts[j]);
    inv.factors.push_back(std::move(f));
  }
  adlv::check_invariants(g, inv);
  return inv;
}

// ---- serialization ---------------------------------------------------------

json rat_json(const adlv::Rat& r) {
  if (r.denominator() == 1) return json(r.numerator());
  return json(adlv::rat_to_string(r));
}

json rows_json(const std::vector<std::vector<long long>>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

json type_json(const adlv::TypeVector& t) { return rows_json(t.rows); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rows_compact(const std::vector<std::vector<long long>>& rows) {
  std::ostringstream s;
  for (size_t t = 0; t < rows.size(); ++t) {
    if (t) s << ";";
    for (size_t i = 0; i < rows[t].size(); ++i) s << (i ? "," : "") << rows[t][i];
  }
  return s.str();
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw adlv::Error("cannot open output file " + path);
    out << text;
  }
  void write_json(const json& report) const { write(report.dump(2) + "\n"); }
};

void emit_error(const std::string& kind, const std::string& message) {
  json diag = {{"error", kind}, {"message", message}, {"schema_version", kSchemaVersion}};
  std::cerr << diag.dump() << "\n";
}

// ---- commands --------------------------------------------------------------

int cmd_sweep_check(int n, int d, const std::string& alphabet_str, const Output& out) {
  auto multisets = parse_cochar(alphabet_str);
  if (static_cast<int>(multisets.size()) != d)
    throw adlv::Error("alphabet needs one letter multiset per component");
  adlv::Alphabet alphabet(d, n, multisets);

  unsigned long long size = 0;
  std::set<std::vector<long long>> image;
  bool dyck = true, closed = true;
  adlv::for_each_in_class(alphabet, [&](const adlv::MultiWord& w) {
    ++size;
    auto s = adlv::sweep_multi(w);
    image.insert(s.letters);
    if (!alphabet.contains(s)) closed = false;
    if (adlv::is_dyck(w) && !adlv::is_dyck(s)) dyck = false;
  });
  bool bijective = closed && image.size() == size;

  json report = {{"schema_version", kSchemaVersion},
                 {"command", "sweep-check"},
                 {"n", n},
                 {"d", d},
                 {"alphabet", rows_json(alphabet.multisets)},
                 {"class_size", size},
                 {"bijective", bijective},
                 {"dyck_preserving", dyck}};
  out.write_json(report);
  return (bijective && dyck) ? 0 : 2;
}

int cmd_chart(const std::string& input, const Output& out) {
  json in;
  if (input == "-") {
    std::cin >> in;
  } else {
    std::ifstream f(input);
    if (!f) throw adlv::Error("cannot open chart file " + input);
    f >> in;
  }
  int n = in.at("n").get<int>();
  std::vector<long long> m_vec = in.at("m_vec").get<std::vector<long long>>();
  auto minima = in.at("minima").get<std::vector<std::vector<long long>>>();
  adlv::FSpec spec(n, static_cast<int>(m_vec.size()), m_vec);
  adlv::ElChart chart(spec, minima);
  adlv::ElChart norm = chart.normalized();
  auto [type, walk] = adlv::chart_type(norm);

  json report = {{"schema_version", kSchemaVersion},
                 {"command", "chart"},
                 {"n", n},
                 {"d", spec.d},
                 {"m_vec", m_vec},
                 {"minima", rows_json(norm.minima)},
                 {"was_normalized", chart.is_normalized()},
                 {"type", type_json(type)},
                 {"cotype", type_json(adlv::chart_cotype(norm))},
                 {"zeta_of_type", type_json(adlv::zeta(type, spec))},
                 {"dim", adlv::cell_count_VA(norm)},
                 {"small", adlv::is_small(norm)}};
  out.write_json(report);
  return 0;
}

adlv::FSpec make_spec(int n, int d, long long m, const std::string& m_vec_str) {
  if (!m_vec_str.empty()) {
    auto mv = parse_ints(m_vec_str);
    return adlv::FSpec(n, static_cast<int>(mv.size()), mv);
  }
  if (d != 1) throw adlv::Error("for d > 1 pass --m-vec");
  return adlv::FSpec(n, 1, {m});
}

int cmd_enumerate(int n, int d, long long m, const std::string& m_vec_str,
                  const std::string& mu_str, const std::string& format,
                  const Output& out) {
  adlv::FSpec spec = make_spec(n, d, m, m_vec_str);
  std::optional<adlv::TypeVector> hodge;
  if (!mu_str.empty()) hodge = adlv::TypeVector(spec.n, spec.d, parse_cochar(mu_str));
  auto types = adlv::enumerate_P(spec, hodge);

  if (format == "csv") {
    std::ostringstream s;
    s << "type\n";
    for (const auto& t : types) s << csv_quote(rows_compact(t.rows)) << "\n";
    out.write(s.str());
    return 0;
  }
  json list = json::array();
  for (const auto& t : types) list.push_back(type_json(t));
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "enumerate"},
                 {"n", spec.n},
                 {"d", spec.d},
                 {"m_vec", spec.m_vec},
                 {"count", types.size()},
                 {"types", list}};
  out.write_json(report);
  return 0;
}

int cmd_cells(int n, int d, long long m, const std::string& m_vec_str,
              const std::string& mu_str, const std::string& format, const Output& out) {
  adlv::FSpec spec = make_spec(n, d, m, m_vec_str);
  adlv::TypeVector hodge(spec.n, spec.d, parse_cochar(mu_str));
  auto lambda = adlv::lambda_superbasic_floor(spec.m(), spec.n);
  auto table = adlv::cell_table(spec, hodge, lambda);

  adlv::GroupDatum g({{spec.n, spec.d}});
  adlv::SigmaInvariants inv{
      {{std::vector<adlv::Rat>(spec.n, adlv::Rat(spec.m(), 1LL * spec.n * spec.d)),
        spec.m()}}};
  long long dim = adlv::adlv_dimension(g, {hodge.rows}, inv);

  if (format == "csv") {
    std::ostringstream s;
    s << "type,cotype,dim,top\n";
    for (const auto& rec : table.records)
      s << csv_quote(rows_compact(rec.type.rows)) << ","
        << csv_quote(rows_compact(rec.cotype.rows)) << "," << rec.dim << ","
        << (rec.top ? "true" : "false") << "\n";
    out.write(s.str());
    return 0;
  }

  json records = json::array();
  for (const auto& rec : table.records)
    records.push_back({{"type", type_json(rec.type)},
                       {"cotype", type_json(rec.cotype)},
                       {"dim", rec.dim},
                       {"top", rec.top}});
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "cells"},
                 {"n", spec.n},
                 {"d", spec.d},
                 {"m_vec", spec.m_vec},
                 {"mu", rows_json(hodge.rows)},
                 {"lambda", lambda},
                 {"records", records},
                 {"poincare", table.poincare},
                 {"top_count", table.top_count},
                 {"max_dim", table.max_dim},
                 {"adlv_dimension", dim}};
  out.write_json(report);
  return table.max_dim == dim ? 0 : 2;
}

int cmd_lambda(const std::string& group, const std::string& newton,
               const std::string& kappa, const Output& out) {
  auto g = parse_group(group);
  auto inv = parse_invariants(g, newton, kappa);
  auto lambda = adlv::lambda_from_invariants(g, inv);
  bool window = adlv::check_lambda_window(lambda, g, inv);

  json factors = json::array();
  for (size_t j = 0; j < g.factors.size(); ++j) {
    json nu = json::array();
    for (const auto& x : inv.factors[j].nu) nu.push_back(rat_json(x));
    factors.push_back({{"n", g.factors[j].n},
                       {"d", g.factors[j].d},
                       {"newton", nu},
                       {"kappa", inv.factors[j].kappa},
                       {"lambda", lambda[j]},
                       {"defect", adlv::defect(adlv::GroupDatum({g.factors[j]}),
                                               adlv::SigmaInvariants{{inv.factors[j]}})}});
  }
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "lambda"},
                 {"factors", factors},
                 {"window_ok", window}};
  out.write_json(report);
  return window ? 0 : 2;
}

int cmd_straight(int n, const std::string& newton, const std::string& kappa,
                 const Output& out) {
  adlv::GroupDatum g({{n, 1}});
  auto inv = parse_invariants(g, newton, kappa);
  auto x = adlv::find_straight(n, inv.factors[0]);
  json nu = json::array();
  for (const auto& v : adlv::newton_of(x)) nu.push_back(rat_json(v));
  bool lambda_ok = adlv::verify_prop_lambda(n, inv.factors[0]);
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "straight"},
                 {"n", n},
                 {"translation", x.translation},
                 {"perm", x.perm},
                 {"length", adlv::length(x)},
                 {"newton", nu},
                 {"straight", adlv::is_straight(x)},
                 {"lambda_projection_ok", lambda_ok}};
  out.write_json(report);
  return lambda_ok ? 0 : 2;
}

int cmd_count(const std::string& group, const std::string& mu_str,
              const std::string& lambda_str, const std::string& kappa,
              unsigned long long max_witnesses, const Output& out) {
  auto g = parse_group(group);
  auto mu = parse_cochar_tuple(mu_str);
  adlv::IntVector lambda;
  for (const auto& part : split(lambda_str, '|')) lambda.push_back(parse_ints(part));
  std::vector<long long> kappas;
  for (const auto& part : split(kappa, '|')) kappas.push_back(std::stoll(part));
  auto res = adlv::orbit_intersection_count(g, mu, lambda, kappas, max_witnesses);

  json witnesses = json::array();
  for (const auto& w : res.witnesses) {
    json fac = json::array();
    for (const auto& c : w) fac.push_back(rows_json(c));
    witnesses.push_back(fac);
  }
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "count"},
                 {"count", res.count},
                 {"witnesses", witnesses},
                 {"overflow", res.overflow},
                 {"class_mismatch", res.class_mismatch}};
  out.write_json(report);
  return 0;
}

int cmd_verify_all(const Output& out) {
  auto results = adlv::run_all_criteria();
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
  }
  json report = {{"schema_version", kSchemaVersion},
                 {"command", "verify-all"},
                 {"criteria", list},
                 {"all_pass", all}};
  out.write_json(report);
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superbasic cell tables, sweep maps and orbit counts"};
  app.require_subcommand(1);

  Output out;
  std::string format = "json";
  app.add_option("--output", out.path, "Write the report to a file instead of stdout");
  app.add_option("--format", format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int n = 1, d = 1;
  long long m = 0;
  std::string m_vec_str, mu_str, alphabet_str, input, group, newton, kappa, lambda_str;
  unsigned long long max_witnesses = adlv::kDefaultWitnessCap;

  auto* sweep = app.add_subcommand("sweep-check", "Check sweep bijectivity on one class");
  sweep->add_option("--n", n)->required();
  sweep->add_option("--d", d);
  sweep->add_option("--alphabet", alphabet_str, "Letter multisets, ';' between components")
      ->required();

  auto* chart = app.add_subcommand("chart", "Type/cotype of a chart given as JSON");
  chart->add_option("--input", input, "Chart JSON file, '-' for stdin")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List all types (optionally one P_mu)");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--d", d);
  enumerate->add_option("--m", m);
  enumerate->add_option("--m-vec", m_vec_str);
  enumerate->add_option("--mu", mu_str);

  auto* cells = app.add_subcommand("cells", "Cell table of a superbasic datum");
  cells->add_option("--n", n)->required();
  cells->add_option("--d", d);
  cells->add_option("--m", m);
  cells->add_option("--m-vec", m_vec_str);
  cells->add_option("--mu", mu_str, "Hodge point, ';' between copies")->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "Lambda invariant of (newton, kappa)");
  lambda_cmd->add_option("--group", group)->required();
  lambda_cmd->add_option("--newton", newton, "'|' between factors")->required();
  lambda_cmd->add_option("--kappa", kappa, "'|' between factors")->required();

  auto* straight = app.add_subcommand("straight", "Straight element for split GL_n");
  straight->add_option("--n", n)->required();
  straight->add_option("--newton", newton)->required();
  straight->add_option("--kappa", kappa)->required();

  auto* count = app.add_subcommand("count", "Orbit intersection count");
  count->add_option("--group", group)->required();
  count->add_option("--mu", mu_str)->required();
  count->add_option("--lambda", lambda_str)->required();
  count->add_option("--kappa", kappa)->required();
  count->add_option("--max-witnesses", max_witnesses);

  auto* verify = app.add_subcommand("verify-all", "Run the full verification grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("usage", e.what());
    return 1;
  }

  try {
    if (sweep->parsed()) return cmd_sweep_check(n, d, alphabet_str, out);
    if (chart->parsed()) return cmd_chart(input, out);
    if (enumerate->parsed()) return cmd_enumerate(n, d, m, m_vec_str, mu_str, format, out);
    if (cells->parsed()) return cmd_cells(n, d, m, m_vec_str, mu_str, format, out);
    if (lambda_cmd->parsed()) return cmd_lambda(group, newton, kappa, out);
    if (straight->parsed()) return cmd_straight(n, newton, kappa, out);
    if (count->parsed())
      return cmd_count(group, mu_str, lambda_str, kappa, max_witnesses, out);
    if (verify->parsed()) return cmd_verify_all(out);
  } catch (const adlv::Error& e) {
    emit_error("validation", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 2;
  }
  return 1;
}
