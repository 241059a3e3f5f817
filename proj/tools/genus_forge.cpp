#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genus_forge/coadjoint.hpp"
#include "genus_forge/error.hpp"
#include "genus_forge/modular.hpp"
#include "genus_forge/polytope.hpp"
#include "genus_forge/selftest.hpp"
#include "genus_forge/serialize.hpp"
#include "genus_forge/symfunc.hpp"

namespace gf = genus_forge;
using gf::json;

namespace {

enum class Format { text, json, csv };

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  long precision = 15;
  Format format = Format::text;
  std::uint64_t seed = gf::kDefaultSeed;
  unsigned jobs = 1;
};

long default_precision() {
  const char* env = std::getenv("GENUS_FORGE_PREC");
  if (env == nullptr || *env == '\0') return 15;
  try {
    std::size_t used = 0;
    const long p = std::stol(env, &used);
    if (used == std::string(env).size() && p >= 1) return p;
  } catch (const std::exception&) {
  }
  throw gf::ValidationError(std::string("GENUS_FORGE_PREC must be a positive integer, got \"") + env + "\"");
}

void require_not_csv(const Config& cfg, const std::string& command) {
  if (cfg.format == Format::csv) throw gf::ValidationError("csv output is not available for " + command);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<std::string> series_coefficients(const gf::QSeries& s) {
  std::vector<std::string> out;
  for (long e = 0; e < s.limit(); ++e) out.push_back(s.coeff(e).poly_string());
  return out;
}

gf::FixedPointData load_fixed_points(const std::string& path) {
  return gf::fixed_points_from_json(gf::read_json_file(path));
}

void check_level(int N) {
  if (N < 2) throw gf::ValidationError("level N must be at least 2");
}

// ---- subcommands -----------------------------------------------------------

int cmd_eisenstein(const Config& cfg, int k, int N) {
  require_not_csv(cfg, "eisenstein");
  check_level(N);
  if (k < 1) throw gf::ValidationError("weight k must be at least 1");
  const gf::QSeries& g = gf::eisenstein_qexp(k, N, cfg.precision);
  if (cfg.format == Format::json)
    std::cout << gf::series_to_json(g).dump(2) << '\n';
  else
    std::cout << g << '\n';
  return kExitOk;
}

int cmd_qn(const Config& cfg, int N, long x_order) {
  require_not_csv(cfg, "qn");
  check_level(N);
  if (x_order < 1) throw gf::ValidationError("--x-order must be positive");
  const auto qn = gf::qn_expansion_via_product(N, x_order, cfg.precision);
  if (cfg.format == Format::json) {
    json coeffs = json::array();
    for (const auto& c : qn.coeffs) coeffs.push_back(gf::series_to_json(c));
    std::cout << json{{"level", N}, {"x_order", x_order}, {"q_precision", cfg.precision}, {"coeffs", coeffs}}.dump(2)
              << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < qn.coeffs.size(); ++k) std::cout << "a_" << k << " = " << qn.coeffs[k] << '\n';
  return kExitOk;
}

int cmd_genus(const Config& cfg, int N, int n, const std::string& file) {
  check_level(N);
  std::optional<gf::FixedPointData> fpd;
  if (!file.empty()) {
    fpd = load_fixed_points(file);
    n = fpd->n;
  }
  if (n < 1) throw gf::ValidationError("dimension n must be at least 1");
  const auto table = gf::f_lambda_table(N, n, cfg.precision);

  std::optional<gf::QSeries> by_localization, by_chern;
  if (fpd) {
    by_localization = gf::genus_qexp(*fpd, N, cfg.precision);
    const auto chern = gf::chern_numbers(*fpd);
    gf::QSeries sum = gf::zero_like(table.begin()->second);
    for (const auto& [lambda, f] : table) sum += f * gf::Cyclotomic(N, chern.at(lambda));
    by_chern = sum;
  }
  const bool agree = !fpd || *by_localization == *by_chern;

  switch (cfg.format) {
    case Format::csv:
      std::cout << "level,partition,coefficients\n";
      for (const auto& [lambda, f] : table)
        std::cout << N << ',' << csv_quote(lambda.to_string()) << ',' << csv_quote(join(series_coefficients(f), ";"))
                  << '\n';
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& [lambda, f] : table)
        rows.push_back({{"partition", lambda.parts()}, {"series", gf::series_to_json(f)}});
      json out{{"level", N}, {"n", n}, {"f", rows}};
      if (fpd) {
        out["genus"] = gf::series_to_json(*by_localization);
        out["routes_agree"] = agree;
      }
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& [lambda, f] : table) std::cout << "f" << lambda << " = " << f << '\n';
      if (fpd) {
        std::cout << "genus (localization) = " << *by_localization << '\n';
        std::cout << "genus (sum f*C)      = " << *by_chern << '\n';
      }
      break;
  }
  if (!agree) {
    std::cerr << "genus routes disagree\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_chiy(const Config& cfg, const std::string& file, std::optional<int> k0) {
  require_not_csv(cfg, "chiy");
  const auto fpd = load_fixed_points(file);
  const gf::UPoly via_counts = gf::chi_y_from_counts(fpd);
  const gf::UPoly via_genus = gf::genus_value(gf::chi_y_power_series(fpd.n), gf::chern_numbers(fpd), fpd.n);
  const bool agree = via_counts == via_genus;
  if (!k0 && fpd.asserted_index) k0 = fpd.asserted_index;
  std::optional<gf::DivisionResult> div;
  if (k0) div = gf::divides_chi_y(via_counts, *k0);

  if (cfg.format == Format::json) {
    json out{{"chi_y", via_counts.to_string()},
             {"chi_y_genus", via_genus.to_string()},
             {"routes_agree", agree},
             {"chi_minus_1", via_counts(gf::Rational(-1)).to_string()},
             {"signature", via_counts(gf::Rational(1)).to_string()}};
    if (div)
      out["divisibility"] = {{"k0", *k0}, {"divisible", div->divisible}, {"quotient", div->quotient.to_string()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "chi_y (fixed-point counts) = " << via_counts.to_string() << '\n'
              << "chi_y (genus)              = " << via_genus.to_string() << '\n'
              << "chi_{-1} = " << via_counts(gf::Rational(-1)) << ", signature = " << via_counts(gf::Rational(1))
              << '\n';
    if (div)
      std::cout << "k0 = " << *k0 << ": "
                << (div->divisible ? "divisible, quotient " + div->quotient.to_string()
                                   : "not divisible, remainder " + div->remainder.to_string())
                << '\n';
  }
  if (!agree) {
    std::cerr << "chi_y routes disagree\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_relations(const Config& cfg, const std::string& file, int N, int k_min, int k_max, bool verify) {
  check_level(N);
  if (k_min > k_max) throw gf::ValidationError("k_min must not exceed k_max");
  const auto fpd = load_fixed_points(file);
  const auto type = gf::action_type(fpd, N);
  std::vector<gf::Relation> relations;
  for (int k = k_min; k <= k_max; ++k) relations.push_back(gf::build_relation(fpd, N, k));

  // Verifications are independent; results are collected in k order.
  std::vector<std::optional<gf::RelationCheck>> checks(relations.size());
  if (verify) {
    std::vector<std::future<gf::RelationCheck>> pending;
    std::size_t next = 0;
    auto launch = [&] {
      const gf::Relation& rel = relations[next++];
      pending.push_back(std::async(std::launch::async, [&rel, p = cfg.precision] { return gf::verify_relation(rel, p); }));
    };
    std::size_t done = 0;
    while (done < relations.size()) {
      while (next < relations.size() && next - done < cfg.jobs) launch();
      checks[done] = pending[done].get();
      ++done;
    }
  }

  bool all_ok = true;
  for (const auto& c : checks)
    if (c && !c->ok) all_ok = false;

  switch (cfg.format) {
    case Format::csv:
      std::cout << "k,partition,coefficient\n";
      for (const auto& rel : relations)
        for (const auto& [I, c] : rel.terms) std::cout << rel.k << ',' << csv_quote(I.to_string()) << ',' << c << '\n';
      break;
    case Format::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < relations.size(); ++i) {
        json row = gf::relation_to_json(relations[i]);
        row["primitive"] = relations[i].primitive().to_string();
        if (checks[i]) {
          row["verified"] = checks[i]->ok;
          if (!checks[i]->ok) row["residual"] = gf::series_to_json(checks[i]->residual);
        }
        rows.push_back(std::move(row));
      }
      std::cout << json{{"N", N}, {"balanced", type.balanced}, {"relations", rows}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      if (!type.balanced) std::cout << "warning: action is not " << N << "-balanced\n";
      for (std::size_t i = 0; i < relations.size(); ++i) {
        std::cout << "k=" << relations[i].k << ": " << relations[i].primitive().to_string();
        if (checks[i]) std::cout << (checks[i]->ok ? "  [verified through q^" + std::to_string(cfg.precision - 1) + "]"
                                                   : "  [FAILED]");
        std::cout << '\n';
      }
      break;
  }
  for (std::size_t i = 0; i < relations.size(); ++i)
    if (checks[i] && !checks[i]->ok)
      std::cerr << "relation k=" << relations[i].k << " does not vanish: " << relations[i].to_string()
                << "\n  residual " << checks[i]->residual << '\n';
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_hilbert(const Config& cfg, const std::string& file, int N, std::optional<int> only_m) {
  check_level(N);
  const auto fpd = load_fixed_points(file);
  std::vector<gf::HilbertData> polys;
  for (int m = 0; m <= fpd.n; ++m)
    if (!only_m || *only_m == m) polys.push_back(gf::hilbert_polynomial(fpd, N, m));
  if (polys.empty()) throw gf::ValidationError("--m must lie in 0..n");

  switch (cfg.format) {
    case Format::csv:
      std::cout << "m,coefficients\n";
      for (const auto& h : polys) {
        std::vector<std::string> cs;
        for (const auto& c : h.polynomial.coeffs()) cs.push_back(c.to_string());
        std::cout << h.m << ',' << csv_quote(join(cs, ";")) << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& h : polys) rows.push_back({{"m", h.m}, {"polynomial", h.polynomial.to_string()}});
      std::cout << json{{"n", fpd.n}, {"N", N}, {"hilbert", rows}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& h : polys) std::cout << "H_" << h.m << "(x) = " << h.polynomial.to_string() << '\n';
      break;
  }
  return kExitOk;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gf::ValidationError("expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  return out;
}

int cmd_coadjoint(const Config& cfg, const std::string& file, const std::string& xi_text,
                  std::optional<int> crosscheck_k) {
  require_not_csv(cfg, "coadjoint");
  const gf::OrbitSpec orbit = gf::orbit_from_json(gf::read_json_file(file));
  std::vector<long> xi = parse_long_list(xi_text);
  if (static_cast<int>(xi.size()) != orbit.root_system().dim())
    throw gf::ValidationError("--xi needs " + std::to_string(orbit.root_system().dim()) + " entries");
  const gf::FixedPointData fpd = gf::orbit_fixed_points(orbit, xi);

  if (!crosscheck_k) {
    if (cfg.format == Format::json)
      std::cout << gf::fixed_points_to_json(fpd).dump(2) << '\n';
    else
      for (const auto& p : fpd.points) {
        std::vector<std::string> ws;
        for (long w : p.weights) ws.push_back(std::to_string(w));
        std::cout << p.label << ": (" << join(ws, ", ") << ")\n";
      }
    return kExitOk;
  }

  bool all_ok = true;
  json rows = json::array();
  for (const auto& I : gf::partitions_at_most(*crosscheck_k, orbit.n())) {
    const auto r = gf::crosscheck_qI(orbit, I, xi);
    all_ok = all_ok && r.ok;
    if (cfg.format == Format::json)
      rows.push_back({{"partition", I.parts()},
                      {"divided_difference", r.divided_difference_value.to_string()},
                      {"localization", r.localization_value.to_string()},
                      {"ok", r.ok}});
    else
      std::cout << "q" << I << ": divided difference " << r.divided_difference_value << ", localization "
                << r.localization_value << (r.ok ? "" : "  [MISMATCH]") << '\n';
  }
  if (cfg.format == Format::json) std::cout << json{{"orbit", orbit.root_system().name()}, {"crosscheck", rows}}.dump(2) << '\n';
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_polytope(const Config& cfg, const std::string& file, std::optional<int> k0) {
  require_not_csv(cfg, "polytope");
  const gf::PolytopeInput in = gf::polytope_from_json(gf::read_json_file(file));
  json out;
  std::ostringstream text;
  if (!in.f.empty()) {
    const auto h = gf::h_from_f(in.f);
    out["f"] = in.f;
    out["h"] = h;
    text << "h = (" << join([&] {
      std::vector<std::string> s;
      for (long v : h) s.push_back(std::to_string(v));
      return s;
    }(), ", ") << ")\n";
    if (k0) {
      const auto d = gf::h_divisibility(h, *k0);
      out["divisibility"] = {{"k0", *k0}, {"divisible", d.divisible}, {"quotient", d.quotient.to_string()}};
      text << "k0 = " << *k0 << ": "
           << (d.divisible ? "divisible, quotient " + d.quotient.to_string()
                           : "not divisible, remainder " + d.remainder.to_string())
           << '\n';
      const int n = static_cast<int>(h.size()) - 1;
      const auto pattern = gf::betti_pattern(n, *k0, h);
      out["betti_case"] = pattern.which;
      if (pattern.m) out["betti_m"] = *pattern.m;
      text << "Betti pattern: "
           << (pattern.which ? "case (" + std::to_string(pattern.which) + ")" +
                                   (pattern.m ? ", m = " + std::to_string(*pattern.m) : std::string{})
                             : "none (" + pattern.violation + ")")
           << '\n';
    }
  }
  if (!in.edges.empty()) {
    const long index = gf::combinatorial_index(in.edges);
    out["index"] = index;
    text << "combinatorial index = " << index << '\n';
  }
  if (cfg.format == Format::json)
    std::cout << out.dump(2) << '\n';
  else
    std::cout << text.str();
  return kExitOk;
}

int cmd_selftest(const Config& cfg) {
  require_not_csv(cfg, "selftest");
  const auto results = gf::run_selftest(cfg.seed);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& r : results) rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << json{{"seed", cfg.seed}, {"all_pass", all}, {"criteria", rows}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) std::cout << gf::format_result(r) << '\n';
    std::cout << std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }) << '/'
              << results.size() << " criteria pass (seed " << cfg.seed << ")\n";
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact elliptic genera of level N, Eisenstein series and localization data"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::optional<long> prec;
  std::string format = "text";
  app.add_option("--prec", prec, "q-precision: coefficients through q^(prec-1)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Parallel verifications")->check(CLI::Range(1u, 256u))->capture_default_str();

  int k = 0, N = 0, n = 0, k_min = 0, k_max = 0;
  long x_order = 8;
  std::string file, xi;
  bool verify = false;
  std::optional<int> k0, m, crosscheck;

  auto* eis = app.add_subcommand("eisenstein", "q-expansion of G_{k,N}");
  eis->add_option("k", k, "Weight")->required();
  eis->add_option("N", N, "Level")->required();

  auto* qn = app.add_subcommand("qn", "Coefficients of Q_N(x) from the product form");
  qn->add_option("N", N, "Level")->required();
  qn->add_option("--x-order", x_order, "Number of x coefficients")->capture_default_str();

  auto* genus = app.add_subcommand("genus", "f_lambda table of the level-N elliptic genus");
  genus->add_option("N", N, "Level")->required();
  genus->add_option("n", n, "Complex dimension (ignored with --file)");
  genus->add_option("--file", file, "Fixed-point JSON: also evaluate the genus")->check(CLI::ExistingFile);

  auto* chiy = app.add_subcommand("chiy", "chi_y genus of fixed-point data");
  chiy->add_option("file", file, "Fixed-point JSON")->required();
  chiy->add_option("--k0", k0, "Index to test divisibility against");

  auto* rel = app.add_subcommand("relations", "Relations among products of Eisenstein series");
  rel->add_option("file", file, "Fixed-point JSON")->required();
  rel->add_option("N", N, "Level")->required();
  rel->add_option("k_min", k_min)->required();
  rel->add_option("k_max", k_max)->required();
  rel->add_flag("--verify", verify, "Check each relation as a truncated q-series");

  auto* hil = app.add_subcommand("hilbert", "Hilbert polynomials H_m");
  hil->add_option("file", file, "Fixed-point JSON")->required();
  hil->add_option("N", N, "N with sum of weights = -N c_1(L)")->required();
  hil->add_option("--m", m, "Only this m");

  auto* coad = app.add_subcommand("coadjoint", "Fixed points of a coadjoint orbit");
  coad->add_option("file", file, "Orbit JSON")->required();
  coad->add_option("--xi", xi, "Circle direction, comma separated")->required();
  coad->add_option("--crosscheck", crosscheck, "Compare q_I for all |I| = this value");

  auto* poly = app.add_subcommand("polytope", "h-vector, index and Betti pattern");
  poly->add_option("file", file, "Polytope JSON")->required();
  poly->add_option("--k0", k0, "Index for the divisibility test");

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.precision = prec ? *prec : default_precision();
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (*eis) return cmd_eisenstein(cfg, k, N);
    if (*qn) return cmd_qn(cfg, N, x_order);
    if (*genus) {
      if (file.empty() && genus->count("n") == 0) throw gf::ValidationError("genus needs n or --file");
      return cmd_genus(cfg, N, n, file);
    }
    if (*chiy) return cmd_chiy(cfg, file, k0);
    if (*rel) return cmd_relations(cfg, file, N, k_min, k_max, verify);
    if (*hil) return cmd_hilbert(cfg, file, N, m);
    if (*coad) return cmd_coadjoint(cfg, file, xi, crosscheck);
    if (*poly) return cmd_polytope(cfg, file, k0);
    if (*self) return cmd_selftest(cfg);
  } catch (const gf::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
