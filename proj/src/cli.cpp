#include "gorlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gorlab/acceptance.hpp"
#include "gorlab/io.hpp"
#include "json.hpp"

namespace gorlab::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kResourceCap = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_family(const std::string& c) {
  return c == "segre" || c == "veronese" || c == "pfaffian" || c == "minors" || c == "hibi";
}

// Runs tasks on up to `jobs` threads and returns results in task order.
template <class R>
std::vector<R> run_parallel(std::size_t count, std::size_t jobs, const std::function<R(std::size_t)>& task) {
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) results[k] = task(k);
  };
  std::size_t threads = std::min(std::max<std::size_t>(jobs, 1), count);
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

std::string ints(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

json betti_to_json(const BettiDiagram& b) {
  json rows = json::object();
  for (const auto& [r, v] : b.rows()) rows[std::to_string(r)] = v;
  json entries = json::array();
  for (const auto& [k, v] : b.values()) entries.push_back({k.first, k.second, v});
  return {{"rows", rows}, {"entries", entries}};
}

BettiDiagram capped_betti(const SimplicialComplex& D, const Field& field, std::size_t cap) {
  if (D.num_vertices() > cap)
    throw CapError("Betti diagram: " + std::to_string(D.num_vertices()) + " vertices exceed the vertex cap of " +
                   std::to_string(cap));
  return hochster_betti(D, field, cap);
}

// ---------------------------------------------------------------- family commands

struct ReportOutcome {
  std::optional<FamilyReport> report;
  std::string error;
  bool cap = false;
};

int family_reports(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto params = cfg.family_params();
  auto outcomes = run_parallel<ReportOutcome>(params.size(), cfg.jobs, [&](std::size_t k) {
    ReportOutcome o;
    try {
      o.report = family_report(params[k]);
    } catch (const StageError& e) {
      o.error = e.what();
      o.cap = e.resource_cap();
    }
    return o;
  });
  std::vector<FamilyReport> reports;
  int code = kOk;
  for (const auto& o : outcomes) {
    if (!o.report) {
      err << "error: " << o.error << '\n';
      code = std::max(code, o.cap ? kResourceCap : kFailed);
      continue;
    }
    if (!o.report->all_ok()) code = std::max(code, kFailed);
    reports.push_back(*o.report);
  }
  if (cfg.format == "json")
    out << report_json(reports, cfg.timings);
  else if (cfg.format == "csv")
    out << report_csv(reports);
  else
    for (const auto& r : reports) out << report_text(r, cfg.timings);
  return code;
}

int family_ideal(const RunConfig& cfg, std::ostream& out) {
  for (const auto& p : cfg.family_params()) {
    FamilyInstance inst = family_instance(p);
    if (cfg.format == "json") {
      json gens = json::array();
      for (const auto& g : inst.ideal.generators()) gens.push_back(g.str(inst.ideal.table(), inst.order));
      out << json{{"label", inst.label}, {"order", inst.order.str(inst.ideal.table())}, {"generators", gens}}.dump(2)
          << '\n';
    } else {
      out << "# " << inst.label << '\n' << io::write_ideal(inst.ideal.table(), inst.ideal.generators(), inst.order);
    }
  }
  return kOk;
}

int family_complex(const RunConfig& cfg, std::ostream& out) {
  for (const auto& p : cfg.family_params()) {
    FamilyInstance inst = family_instance(p);
    MonomialIdeal in;
    try {
      in = family_initial_ideal(inst, cfg.pair_budget);
    } catch (const BudgetExceeded& e) {
      throw CapError(e.what());
    }
    SimplicialComplex D = complex_of(in, inst.ideal.table());
    if (cfg.format == "json") {
      json facets = json::array();
      for (Face f : D.facets()) facets.push_back(D.labels_of(f));
      out << json{{"label", inst.label}, {"vertices", D.vertices()}, {"facets", facets}}.dump(2) << '\n';
    } else {
      out << "# initial complex of " << inst.label << '\n' << io::write_complex(D);
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- groebner

TermOrder order_of(const io::IdealFile& f) {
  return f.order ? *f.order : TermOrder::grevlex_natural(f.table.size());
}

Field field_of(const RunConfig& cfg, const io::IdealFile& f, bool field_given) {
  return field_given ? Field::parse(cfg.field) : f.field;
}

int groebner_command(const RunConfig& cfg, bool field_given, std::ostream& out) {
  io::IdealFile file = io::parse_ideal(io::read_file(cfg.ideal));
  GroebnerOptions opts;
  opts.pair_budget = cfg.pair_budget;
  opts.field = field_of(cfg, file, field_given);
  file.field = opts.field;
  Ideal I = file.ideal();
  auto basis = [&](const TermOrder& ord) {
    try {
      return buchberger(I, ord, opts);
    } catch (const BudgetExceeded& e) {
      throw CapError(e.what());
    }
  };

  if (cfg.random_revlex > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<VarId> perm(I.table().size());
    std::iota(perm.begin(), perm.end(), VarId{0});
    json runs = json::array();
    std::size_t squarefree = 0;
    for (std::size_t k = 0; k < cfg.random_revlex; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      TermOrder ord = TermOrder::grevlex(perm);
      MonomialIdeal in = initial_ideal(basis(ord));
      squarefree += in.is_squarefree();
      runs.push_back({{"order", ord.str(I.table())},
                      {"squarefree", in.is_squarefree()},
                      {"initial_generators", in.size()}});
    }
    if (cfg.format == "json") {
      out << json{{"seed", cfg.seed}, {"runs", runs}, {"squarefree", squarefree}, {"samples", cfg.random_revlex}}.dump(2)
          << '\n';
    } else {
      for (const auto& r : runs)
        out << (r["squarefree"].get<bool>() ? "squarefree    " : "not squarefree") << "  " << r["order"].get<std::string>()
            << '\n';
      out << squarefree << " of " << cfg.random_revlex << " random revlex initial ideals are squarefree (seed "
          << cfg.seed << ")\n";
    }
    return kOk;
  }

  TermOrder ord = order_of(file);
  GroebnerBasis gb = basis(ord);
  json lts = json::array();
  int max_degree = 0;
  for (const auto& g : gb.elements) {
    lts.push_back(g.leading_monomial(ord).str(I.table()));
    max_degree = std::max(max_degree, g.degree());
  }
  json summary{{"num_generators", gb.elements.size()}, {"max_degree", max_degree}, {"leading_terms", lts}};
  if (cfg.format == "json") {
    json elems = json::array();
    for (const auto& g : gb.elements) elems.push_back(g.str(I.table(), ord));
    summary["basis"] = elems;
    summary["order"] = ord.str(I.table());
    summary["field"] = opts.field.name();
    out << summary.dump(2) << '\n';
  } else {
    out << io::write_ideal(I.table(), gb.elements, ord, opts.field) << "# summary: " << summary.dump() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- complex, betti

int complex_command(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex D = io::parse_complex(io::read_file(cfg.facets));
  Field field = Field::parse(cfg.field);
  const bool all = cfg.check == "all";
  json j{{"vertices", D.num_vertices()}, {"facets", D.facets().size()}, {"dimension", D.dimension()},
         {"pure", D.is_pure()}, {"f", f_vector(D)}, {"h", h_vector(D).h}, {"field", field.name()}};
  bool ok = true;
  std::optional<std::vector<Face>> shelling;
  if (all || cfg.check == "gorenstein") {
    auto g = is_gorenstein(D, field);
    j["gorenstein"] = g.gorenstein;
    j["gorenstein_witness"] = g.witness;
    ok = ok && g.gorenstein;
  }
  if (all || cfg.check == "homology") j["reduced_homology"] = reduced_homology(D, field);
  if (all || cfg.check == "shelling") {
    if (D.is_pure()) shelling = find_shelling(D);
    j["shelling"] = shelling.has_value();
    if (shelling) {
      json order = json::array();
      for (Face f : *shelling) order.push_back(D.labels_of(f));
      j["shelling_order"] = order;
      j["two_way"] = verify_two_way(D, *shelling);
    }
    ok = ok && shelling.has_value();
  }
  if (all || cfg.check == "sphere") {
    bool sphere = D.is_pure() && sphere_certificate(D, shelling, field).sphere;
    j["sphere"] = sphere;
    ok = ok && sphere;
  }
  if (cfg.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const char* key : {"vertices", "facets", "dimension", "pure", "gorenstein", "sphere", "shelling", "two_way"})
      if (j.contains(key)) out << key << ": " << j[key].dump() << '\n';
    out << "h: (" << ints(j["h"].get<std::vector<long long>>()) << ")\n";
    if (j.contains("reduced_homology")) out << "reduced homology ranks (from degree -1): " << j["reduced_homology"].dump() << '\n';
    if (j.contains("gorenstein_witness") && !j["gorenstein_witness"].get<std::string>().empty())
      out << "witness: " << j["gorenstein_witness"].get<std::string>() << '\n';
  }
  return ok ? kOk : kFailed;
}

int betti_command(const RunConfig& cfg, std::ostream& out) {
  Field field = Field::parse(cfg.field);
  SimplicialComplex D;
  std::string source;
  if (!cfg.facets.empty()) {
    D = io::parse_complex(io::read_file(cfg.facets));
    source = cfg.facets;
  } else {
    io::IdealFile file = io::parse_ideal(io::read_file(cfg.ideal));
    source = cfg.ideal;
    bool monomial = std::all_of(file.polynomials.begin(), file.polynomials.end(),
                                [](const Polynomial& p) { return p.size() == 1; });
    MonomialIdeal M;
    if (monomial) {
      std::vector<Monomial> gens;
      for (const auto& p : file.polynomials) gens.push_back(p.terms().front().monomial);
      M = MonomialIdeal(gens);
    } else {
      GroebnerOptions opts;
      opts.pair_budget = cfg.pair_budget;
      try {
        M = initial_ideal(buchberger(file.ideal(), order_of(file), opts));
      } catch (const BudgetExceeded& e) {
        throw CapError(e.what());
      }
    }
    D = complex_of(M, file.table);
  }
  BettiDiagram B = capped_betti(D, field, cfg.vertex_cap);
  if (cfg.format == "json") {
    json j = betti_to_json(B);
    j["source"] = source;
    j["field"] = field.name();
    out << j.dump(2) << '\n';
  } else {
    out << B.str();
  }
  return kOk;
}

int verify_all(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  json results = json::array();
  run_acceptance([&](const CriterionResult& r) {
    ok = ok && r.pass;
    if (cfg.format == "json")
      results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}});
    else
      out << format_result(r) << '\n' << std::flush;
  });
  if (cfg.format == "json") out << json{{"criteria", results}, {"pass", ok}}.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--field", cfg.field, "Coefficient field for homology and Betti numbers")
      ->check(CLI::IsMember({"q", "gf2", "gf32003"}))
      ->envname("GORLAB_FIELD");
  app->add_option("--pair-budget", cfg.pair_budget, "Maximum number of S-pair reductions")
      ->check(CLI::PositiveNumber)
      ->envname("GORLAB_PAIR_BUDGET");
  app->add_option("--vertex-cap", cfg.vertex_cap, "Largest complex for Betti diagrams")
      ->check(CLI::PositiveNumber)
      ->envname("GORLAB_VERTEX_CAP");
  app->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("GORLAB_FORMAT");
  app->add_option("--output,-o", cfg.output, "Write output to a file")->envname("GORLAB_OUTPUT");
  app->add_option("--jobs,-j", cfg.jobs, "Worker threads for independent reports")
      ->check(CLI::PositiveNumber)
      ->envname("GORLAB_JOBS");
  app->add_option("--seed", cfg.seed, "Seed for randomized options")->envname("GORLAB_SEED");
  app->add_flag("--timings", cfg.timings, "Include stage timings")->envname("GORLAB_TIMINGS");
}

void add_family_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("action", cfg.action, "report (default), ideal or complex")
      ->check(CLI::IsMember({"report", "ideal", "complex"}));
  app->add_option("--n", cfg.n, "Matrix or polygon size; a comma list gives several reports")
      ->delimiter(',')->allow_extra_args(false)
      ->envname("GORLAB_N");
}

int dispatch(const RunConfig& cfg, bool field_given, std::ostream& out, std::ostream& err) {
  if (cfg.verify_all) return verify_all(cfg, out);
  if (is_family(cfg.command)) {
    if (cfg.action == "ideal") return family_ideal(cfg, out);
    if (cfg.action == "complex") return family_complex(cfg, out);
    return family_reports(cfg, out, err);
  }
  if (cfg.command == "groebner") return groebner_command(cfg, field_given, out);
  if (cfg.command == "complex") return complex_command(cfg, out);
  if (cfg.command == "betti") return betti_command(cfg, out);
  throw UsageError("no command given; try --help");
}

}  // namespace

void RunConfig::validate() const {
  if (verify_all) return;
  if (command.empty()) throw UsageError("a subcommand is required");
  if (is_family(command)) {
    if (format == "csv" && action != "report") throw UsageError("csv output is only available for reports");
    if (command != "pfaffian" && !r.empty()) throw UsageError("--r only applies to pfaffian");
    if (command != "hibi" && (!flag.empty() || !poset.empty())) throw UsageError("--flag and --poset only apply to hibi");
    if (!flag.empty() && !poset.empty()) throw UsageError("give at most one of --flag and --poset");
    for (const auto& p : family_params()) {
      try {
        check_family_params(p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (command == "groebner" && ideal.empty()) throw UsageError("groebner needs --ideal");
  if (command == "complex" && facets.empty()) throw UsageError("complex needs --facets");
  if (command == "betti" && ideal.empty() == facets.empty()) throw UsageError("betti needs exactly one of --ideal and --facets");
  if (format == "csv" && !is_family(command)) throw UsageError("csv output is only available for family reports");
  if (random_revlex > 0 && command != "groebner") throw UsageError("--random-revlex only applies to groebner");
}

std::vector<FamilyParams> RunConfig::family_params() const {
  int default_n = command == "pfaffian" ? 6 : command == "hibi" ? 5 : command == "veronese" ? 4 : 3;
  std::vector<int> ns = n.empty() ? std::vector<int>{default_n} : n;
  std::vector<int> rs = r.empty() ? std::vector<int>{2} : r;
  std::vector<FamilyParams> out;
  for (int nv : ns)
    for (int rv : rs) {
      FamilyParams p;
      p.family = parse_family(command);
      p.n = nv;
      p.r = rv;
      p.m = m;
      p.flag = flag;
      p.poset_file = poset;
      p.field = Field::parse(field);
      p.pair_budget = pair_budget;
      p.vertex_cap = vertex_cap;
      p.timings = timings;
      out.push_back(p);
      if (command != "pfaffian") break;
    }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Squarefree Gorenstein initial ideals and their initial complexes", "gorlab"};
  app.require_subcommand(0, 1);
  add_common(&app, cfg);
  app.add_flag("--verify-all", cfg.verify_all, "Run every acceptance criterion");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub families[] = {
      {"segre", "Generic n x n matrix, ideal of 2-minors"},
      {"veronese", "Symmetric n x n matrix, ideal of 2-minors (n even)"},
      {"pfaffian", "Skew-symmetric n x n matrix, ideal of 2r-Pfaffians"},
      {"minors", "Generic n x n matrix, ideal of (n-1)-minors"},
      {"hibi", "Hibi ideal of a flag minor lattice or of J(P) for a poset file"},
  };
  for (const auto& f : families) {
    CLI::App* sub = app.add_subcommand(f.name, f.help);
    sub->fallthrough();
    add_family_options(sub, cfg);
    if (std::string(f.name) == "pfaffian")
      sub->add_option("--r", cfg.r, "Pfaffian size 2r; a comma list gives several reports")
          ->delimiter(',')->allow_extra_args(false)
          ->envname("GORLAB_R");
    if (std::string(f.name) == "hibi") {
      sub->add_option("--m", cfg.m, "Grassmannian rank")->check(CLI::PositiveNumber)->envname("GORLAB_M");
      sub->add_option("--flag", cfg.flag, "Flag ranks, e.g. 1,3")->delimiter(',')->allow_extra_args(false);
      sub->add_option("--poset", cfg.poset, "Poset file")->check(CLI::ExistingFile);
    }
  }
  CLI::App* gb = app.add_subcommand("groebner", "Reduced Groebner basis of an ideal file");
  gb->fallthrough();
  gb->add_option("--ideal", cfg.ideal, "Ideal file")->check(CLI::ExistingFile)->required();
  gb->add_option("--random-revlex", cfg.random_revlex, "Sample this many random revlex orders");
  CLI::App* cx = app.add_subcommand("complex", "Checks on a simplicial complex file");
  cx->fallthrough();
  cx->add_option("--facets", cfg.facets, "Complex file")->check(CLI::ExistingFile)->required();
  cx->add_option("--check", cfg.check, "Property to check")
      ->check(CLI::IsMember({"gorenstein", "sphere", "shelling", "homology", "all"}));
  CLI::App* bt = app.add_subcommand("betti", "Betti diagram of a squarefree monomial ideal by Hochster's formula");
  bt->fallthrough();
  bt->add_option("--ideal", cfg.ideal, "Ideal file; non-monomial ideals are replaced by their initial ideal")
      ->check(CLI::ExistingFile);
  bt->add_option("--facets", cfg.facets, "Complex file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
  bool field_given = app.count("--field") > 0 || std::getenv("GORLAB_FIELD") != nullptr;

  std::ostringstream buffer;
  int code;
  try {
    cfg.validate();
    code = dispatch(cfg, field_given, buffer, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapError& e) {
    err << "resource cap exceeded: " << e.what() << '\n';
    return kResourceCap;
  } catch (const io::ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kUsage;
    }
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gorlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gorlab::cli
