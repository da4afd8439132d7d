#include "gorlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <sstream>

#include "gorlab/catalog.hpp"
#include "gorlab/io.hpp"
#include "json.hpp"

namespace gorlab {

KntrickResult kntrick_check(const MonomialIdeal& J, const VariableTable& table, int dim_I, std::size_t deg_I) {
  if (!J.is_squarefree()) throw std::invalid_argument("kntrick_check needs a squarefree monomial ideal");
  SimplicialComplex D = complex_of(J, table);
  KntrickResult r;
  r.pure = D.is_pure();
  r.dimension = D.dimension() + 1;
  r.facets = D.facets().size();
  r.expected_dimension = dim_I;
  r.expected_degree = deg_I;
  r.ok = r.pure && r.dimension == dim_I && r.facets == deg_I;
  return r;
}

LeadingTermWitness leading_term_witnesses(const Ideal& I, const TermOrder& ord, const MonomialIdeal& predicted) {
  std::map<Monomial, std::size_t> lead;
  for (std::size_t k = 0; k < I.generators().size(); ++k) lead.emplace(I.generators()[k].leading_monomial(ord), k);
  LeadingTermWitness w;
  for (const auto& m : predicted.generators()) {
    auto it = lead.find(m);
    if (it == lead.end()) {
      w.unmatched = m;
      return w;
    }
    w.witness.push_back(it->second);
  }
  w.ok = true;
  return w;
}

BettiComparison betti_compare(const BettiDiagram& a, const BettiDiagram& b) {
  std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> all;
  for (auto [k, v] : a.values()) all[k].first = v;
  for (auto [k, v] : b.values()) all[k].second = v;
  for (auto [k, v] : all)
    if (v.first != v.second) return {false, k.first, k.second, v.first, v.second};
  return {};
}

StageError::StageError(std::string stage, const std::string& what, bool resource_cap)
    : std::runtime_error(stage + ": " + (resource_cap ? "resource cap exceeded: " : "") + what),
      stage_(std::move(stage)),
      resource_cap_(resource_cap) {}

std::string to_string(Family f) {
  switch (f) {
    case Family::Segre: return "segre";
    case Family::Veronese: return "veronese";
    case Family::Pfaffian: return "pfaffian";
    case Family::Minors: return "minors";
    case Family::Hibi: return "hibi";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::Segre, Family::Veronese, Family::Pfaffian, Family::Minors, Family::Hibi})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + s + "'");
}

bool FamilyReport::all_ok() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return s.ok; });
}

void check_family_params(const FamilyParams& p) {
  const int n = p.n, r = p.r;
  switch (p.family) {
    case Family::Segre:
      if (n < 2 || n > 6) throw std::invalid_argument("segre reports support 2 <= n <= 6");
      return;
    case Family::Veronese:
      if (n < 2 || n > 8 || n % 2) throw std::invalid_argument("veronese reports support even 2 <= n <= 8");
      return;
    case Family::Pfaffian:
      if (r < 2 || 2 * r > n || n > 9) throw std::invalid_argument("pfaffian reports support 2 <= r, 2r <= n <= 9");
      return;
    case Family::Minors:
      if (n < 3 || n > 5) throw std::invalid_argument("minors reports support 3 <= n <= 5");
      return;
    case Family::Hibi:
      if (!p.poset_file.empty() || !p.poset_text.empty()) return;
      for (int k : p.flag.empty() ? std::vector<int>{p.m} : p.flag)
        if (k < 1 || k >= n) throw std::invalid_argument("hibi flag ranks must lie in 1..n-1");
      return;
  }
}

namespace {

using catalog::Cell;

std::size_t to_size(const mpz_class& z) {
  if (!z.fits_ulong_p()) throw std::overflow_error("degree does not fit in 64 bits");
  return z.get_ui();
}

// Everything the pipeline needs to know about one family instance.
struct Setup {
  Setup(std::string l, Ideal i, TermOrder o) : label(std::move(l)), ideal(std::move(i)), order(std::move(o)) {}

  std::string label;
  Ideal ideal;
  TermOrder order;
  std::optional<MonomialIdeal> predicted;
  int dim = 0;
  std::size_t degree = 0;
  bool dim_known = true;
  std::optional<std::vector<long long>> expected_h;
  bool groebner = true;
  std::function<std::vector<Face>(const SimplicialComplex& core)> catalog_shelling;
  std::function<std::optional<SimplicialComplex>()> equatorial;
};

std::vector<long long> symmetric_h(std::vector<long long> half, std::size_t length) {
  std::vector<long long> h(length);
  for (std::size_t i = 0; i < length; ++i) h[i] = half[std::min(i, length - 1 - i)];
  return h;
}

catalog::DistributiveLattice hibi_lattice(const FamilyParams& p, std::string& label) {
  if (!p.poset_text.empty() || !p.poset_file.empty()) {
    std::string text = p.poset_text.empty() ? io::read_file(p.poset_file) : p.poset_text;
    label = "hibi poset" + (p.poset_file.empty() ? std::string() : " " + p.poset_file);
    return catalog::order_ideal_lattice(io::parse_poset(text));
  }
  std::vector<int> M = p.flag.empty() ? std::vector<int>{p.m} : p.flag;
  std::string ms;
  for (std::size_t k = 0; k < M.size(); ++k) ms += (k ? "," : "") + std::to_string(M[k]);
  label = "hibi flag({" + ms + "}," + std::to_string(p.n) + ")";
  return catalog::flag_minor_lattice(M, p.n);
}

Setup make_setup(const FamilyParams& p) {
  using namespace catalog;
  check_family_params(p);
  const int n = p.n;
  switch (p.family) {
    case Family::Segre: {
      Setup s{"segre n=" + std::to_string(n), generic_minor_ideal(2, n, n, false), segre_term_order(n)};
      s.predicted = segre_initial_generators(n);
      s.dim = 2 * n - 1;
      s.degree = static_cast<std::size_t>(binomial(2 * n - 2, n - 1));
      std::vector<long long> h;
      for (int i = 0; i < n; ++i) h.push_back(binomial(n - 1, i) * binomial(n - 1, i));
      s.expected_h = h;
      s.groebner = n <= 4;
      s.catalog_shelling = [n](const SimplicialComplex& core) { return segre_shelling_faces(n, core); };
      return s;
    }
    case Family::Veronese: {
      Setup s{"veronese n=" + std::to_string(n), generic_minor_ideal(2, n, n, true), veronese_term_order(n)};
      s.predicted = veronese_initial_generators(n);
      s.dim = n;
      s.degree = std::size_t{1} << (n - 1);
      std::vector<long long> h;
      for (int i = 0; 2 * i <= n; ++i) h.push_back(binomial(n, 2 * i));
      s.expected_h = h;
      s.groebner = n <= 6;
      s.catalog_shelling = [n](const SimplicialComplex& core) { return veronese_shelling_faces(n, core); };
      return s;
    }
    case Family::Pfaffian: {
      const int r = p.r;
      Setup s{"pfaffian r=" + std::to_string(r) + " n=" + std::to_string(n), pfaffian_ideal(2 * r, n),
              pfaff_term_order(n)};
      s.predicted = pfaff_initial_generators(r, n);
      auto inv = pfaff_invariants(r - 1, n);
      s.dim = static_cast<int>(inv.dim);
      s.degree = to_size(inv.degree);
      s.groebner = n <= 7;
      return s;
    }
    case Family::Minors: {
      Setup s{"minors n=" + std::to_string(n), generic_minor_ideal(n - 1, n, n, false), minors_term_order(n)};
      s.predicted = minors_cycle_ideal(n, n - 1);
      s.dim = n * n - 4;
      s.degree = static_cast<std::size_t>(n * n * (n * n - 1) / 12);
      std::vector<long long> half;
      for (int i = 0; i <= n - 2; ++i) half.push_back(binomial(i + 3, 3));
      s.expected_h = symmetric_h(half, 2 * n - 3);
      s.groebner = n <= 4;
      return s;
    }
    case Family::Hibi: {
      std::string label;
      auto L = std::make_shared<DistributiveLattice>(hibi_lattice(p, label));
      bool graded = join_irreducibles(*L).is_graded();
      Setup s{label, hibi_ideal(*L), graded ? rw_term_order(*L) : rank_height_order(*L)};
      s.dim_known = false;
      s.equatorial = [L, graded]() -> std::optional<SimplicialComplex> {
        if (!graded) return std::nullopt;
        return equatorial_complex(*L);
      };
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> sorted_labels(const SimplicialComplex& D, Face f) {
  auto v = D.labels_of(f);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

FamilyInstance family_instance(const FamilyParams& params) {
  Setup s = make_setup(params);
  return {s.label, s.ideal, s.order, s.predicted, s.groebner || !s.predicted, s.dim, s.degree};
}

MonomialIdeal family_initial_ideal(const FamilyInstance& inst, std::size_t pair_budget) {
  if (inst.groebner_route) {
    GroebnerOptions opts;
    opts.pair_budget = pair_budget;
    return initial_ideal(buchberger(inst.ideal, inst.order, opts));
  }
  auto w = leading_term_witnesses(inst.ideal, inst.order, *inst.predicted);
  if (!w.ok) throw std::runtime_error("predicted generator " + w.unmatched->str(inst.ideal.table()) + " is not a leading term");
  auto k = kntrick_check(*inst.predicted, inst.ideal.table(), inst.dim, inst.degree);
  if (!k.ok) throw std::runtime_error("predicted initial ideal fails the dimension/degree check");
  return *inst.predicted;
}

FamilyReport family_report(const FamilyParams& params) {
  FamilyReport rep;
  rep.params = params;
  using clock = std::chrono::steady_clock;
  auto stage = [&](const std::string& name, auto&& body) {
    auto t0 = clock::now();
    StageRecord rec{name, true, "", 0};
    try {
      body(rec);
    } catch (const StageError&) {
      throw;
    } catch (const BudgetExceeded& e) {
      throw StageError(name, e.what(), true);
    } catch (const std::exception& e) {
      throw StageError(name, e.what());
    }
    rec.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.stages.push_back(std::move(rec));
  };

  std::optional<Setup> s;
  stage("construct", [&](StageRecord& rec) {
    s = make_setup(params);
    rep.label = s->label;
    rep.ideal_generators = s->ideal.generators().size();
    rec.detail = std::to_string(rep.ideal_generators) + " generators in " + std::to_string(s->ideal.table().size()) +
                 " variables";
  });
  const VariableTable& table = s->ideal.table();

  MonomialIdeal in;
  stage("initial", [&](StageRecord& rec) {
    if (s->groebner || !s->predicted) {
      rep.route = "groebner";
      GroebnerOptions opts;
      opts.pair_budget = params.pair_budget;
      auto gb = buchberger(s->ideal, s->order, opts);
      in = initial_ideal(gb);
      rec.detail = std::to_string(gb.elements.size()) + " basis elements, " + std::to_string(gb.stats.pairs_reduced) +
                   " S-pair reductions";
    } else {
      rep.route = "witness";
      auto w = leading_term_witnesses(s->ideal, s->order, *s->predicted);
      if (!w.ok) {
        rec.ok = false;
        rec.detail = "no generator has leading term " + w.unmatched->str(table);
        in = *s->predicted;
        return;
      }
      auto k = kntrick_check(*s->predicted, table, s->dim, s->degree);
      rec.ok = k.ok;
      rec.detail = "every predicted generator is a generator's leading term; complex " +
                   std::string(k.pure ? "pure" : "not pure") + ", dim " + std::to_string(k.dimension) + " (expected " +
                   std::to_string(k.expected_dimension) + "), degree " + std::to_string(k.facets) + " (expected " +
                   std::to_string(k.expected_degree) + ")";
      in = *s->predicted;
    }
    for (const auto& g : in.generators()) rep.initial_generators.push_back(g.str(table));
  });

  if (s->predicted) {
    stage("predict", [&](StageRecord& rec) {
      rep.predicted_match = in == *s->predicted;
      rec.ok = rep.predicted_match;
      rec.detail = rep.predicted_match ? std::to_string(in.size()) + " generators match the prediction"
                                       : "initial ideal differs from the prediction";
    });
  }

  SimplicialComplex D, C;
  stage("complex", [&](StageRecord& rec) {
    if (!in.is_squarefree()) {
      rec.ok = false;
      rec.detail = "initial ideal is not squarefree";
      throw StageError("complex", "initial ideal is not squarefree");
    }
    D = complex_of(in, table);
    rep.pure = D.is_pure();
    rep.dim = D.dimension() + 1;
    rep.degree = D.facets().size();
    rec.ok = rep.pure && (!s->dim_known || (rep.dim == s->dim && rep.degree == s->degree));
    rec.detail = std::string(rep.pure ? "pure" : "not pure") + ", dim " + std::to_string(rep.dim) + ", degree " +
                 std::to_string(rep.degree);
    if (s->dim_known) rec.detail += " (expected " + std::to_string(s->dim) + ", " + std::to_string(s->degree) + ")";
  });

  stage("core", [&](StageRecord& rec) {
    rep.cone_points = sorted_labels(D, cone_points(D));
    C = core(D);
    for (Face f : C.facets()) rep.core_facets.push_back(sorted_labels(C, f));
    std::sort(rep.core_facets.begin(), rep.core_facets.end());
    rec.ok = join_with_simplex(C, rep.cone_points).same_as(D);
    rec.detail = std::to_string(rep.cone_points.size()) + " cone points, " + std::to_string(C.facets().size()) +
                 " core facets";
    if (s->equatorial) {
      if (auto eq = s->equatorial()) {
        rep.predicted_match = eq->same_as(C);
        rec.ok = rec.ok && rep.predicted_match;
        rec.detail += rep.predicted_match ? ", core = equatorial complex" : ", core differs from the equatorial complex";
      }
    }
  });

  stage("hvector", [&](StageRecord& rec) {
    HVector h = h_vector(D);
    rep.h = h.h;
    rep.core_h = h_vector(C).h;
    rep.a_invariant = h.a_invariant();
    rep.expected_h = s->expected_h;
    rec.ok = !s->expected_h || *s->expected_h == rep.h;
    rec.detail = "a-invariant " + std::to_string(rep.a_invariant);
    if (s->expected_h) rec.detail += rec.ok ? ", h matches the closed form" : ", h differs from the closed form";
  });

  std::optional<std::vector<Face>> order;
  stage("shelling", [&](StageRecord& rec) {
    if (s->catalog_shelling) {
      order = s->catalog_shelling(C);
      rep.shelling_source = "catalog";
    } else {
      order = find_shelling(C);
      rep.shelling_source = "search";
    }
    if (!order) {
      rec.ok = false;
      rec.detail = "no shelling found";
      return;
    }
    rep.two_way_shelling = verify_two_way(C, *order);
    rec.ok = rep.two_way_shelling;
    rec.detail = rep.shelling_source + " order, " + (rep.two_way_shelling ? "two-way shelling" : "not a two-way shelling");
  });

  stage("gorenstein", [&](StageRecord& rec) {
    auto g = is_gorenstein(D, params.field);
    rep.gorenstein = g.gorenstein;
    rep.gorenstein_witness = g.witness;
    rec.ok = g.gorenstein;
    rec.detail = std::to_string(g.faces_checked) + " links checked over " + params.field.name();
    if (!g.gorenstein) rec.detail += "; " + g.witness;
  });

  stage("sphere", [&](StageRecord& rec) {
    auto c = sphere_certificate(C, order, params.field);
    rep.sphere = c.sphere;
    rec.ok = c.sphere;
    rec.detail = std::string(c.shelling_found ? "shelling" : "no shelling") + ", " +
                 (c.pseudomanifold ? "pseudomanifold" : "not a pseudomanifold") + ", " +
                 (c.homology_sphere ? "sphere homology" : "not sphere homology");
  });

  stage("betti", [&](StageRecord& rec) {
    if (D.num_vertices() > params.vertex_cap) {
      rep.betti_note = "skipped: " + std::to_string(D.num_vertices()) + " vertices exceed the cap " +
                       std::to_string(params.vertex_cap);
      rec.detail = rep.betti_note;
      return;
    }
    rep.betti = hochster_betti(D, params.field, params.vertex_cap);
    auto deg = in.generator_degrees();
    bool ok = true;
    for (auto [j, c] : deg) ok = ok && rep.betti->at(0, static_cast<int>(j)) == c;
    for (auto [k, v] : rep.betti->values())
      if (k.first == 0) ok = ok && deg.count(static_cast<std::uint32_t>(k.second)) && deg.at(k.second) == v;
    rec.ok = ok;
    rep.betti_note = "Betti numbers of the Stanley-Reisner ideal; row r lists beta_{i,i+r}";
    rec.detail = ok ? "beta_0 agrees with the generator degrees" : "beta_0 disagrees with the generator degrees";
  });

  stage("beta0", [&](StageRecord& rec) {
    auto orig = minimal_generator_degrees(s->ideal);
    auto ini = in.generator_degrees();
    rep.beta0_match = orig == ini;
    rec.ok = rep.beta0_match;
    std::size_t a = 0, b = 0;
    for (auto [d, c] : orig) a += c;
    for (auto [d, c] : ini) b += c;
    rec.detail = std::to_string(a) + " minimal generators of the ideal, " + std::to_string(b) + " of the initial ideal";
  });

  return rep;
}

// ---------------------------------------------------------------- output

namespace {

nlohmann::json betti_json(const BettiDiagram& b) {
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [r, v] : b.rows()) rows[std::to_string(r)] = v;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : b.values()) entries.push_back({k.first, k.second, v});
  return {{"rows", rows}, {"entries", entries}};
}

nlohmann::json params_json(const FamilyParams& p) {
  nlohmann::json j{{"family", to_string(p.family)}, {"field", p.field.name()}};
  switch (p.family) {
    case Family::Pfaffian:
      j["r"] = p.r;
      j["n"] = p.n;
      break;
    case Family::Hibi:
      if (!p.poset_file.empty())
        j["poset"] = p.poset_file;
      else if (!p.flag.empty())
        j["flag"] = p.flag, j["n"] = p.n;
      else
        j["m"] = p.m, j["n"] = p.n;
      break;
    default:
      j["n"] = p.n;
  }
  return j;
}

nlohmann::json report_to_json(const FamilyReport& r, bool timings) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : r.stages) {
    nlohmann::json js{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}};
    if (timings) js["seconds"] = s.seconds;
    stages.push_back(js);
  }
  nlohmann::json j{
      {"family", to_string(r.params.family)},
      {"params", params_json(r.params)},
      {"label", r.label},
      {"route", r.route},
      {"ideal_generators", r.ideal_generators},
      {"predicted_match", r.predicted_match},
      {"initial_generators", r.initial_generators},
      {"dim", r.dim},
      {"degree", r.degree},
      {"pure", r.pure},
      {"cone_points", r.cone_points},
      {"core_facets", r.core_facets},
      {"h", r.h},
      {"core_h", r.core_h},
      {"a_invariant", r.a_invariant},
      {"two_way_shelling", r.two_way_shelling},
      {"shelling_source", r.shelling_source},
      {"gorenstein", r.gorenstein},
      {"gorenstein_witness", r.gorenstein_witness},
      {"sphere", r.sphere},
      {"betti", r.betti ? betti_json(*r.betti) : nlohmann::json()},
      {"betti_note", r.betti_note},
      {"beta0_match", r.beta0_match},
      {"stages", stages},
      {"ok", r.all_ok()},
  };
  j["expected_h"] = r.expected_h ? nlohmann::json(*r.expected_h) : nlohmann::json();
  return j;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
  return os.str();
}

}  // namespace

std::string report_json(const std::vector<FamilyReport>& reports, bool timings) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r, timings));
  return (reports.size() == 1 ? arr[0] : arr).dump(2) + "\n";
}

std::string report_text(const FamilyReport& r, bool timings) {
  std::ostringstream os;
  os << r.label << " (" << r.route << " route)\n";
  for (const auto& s : r.stages) {
    os << "  " << (s.ok ? "ok  " : "FAIL") << "  " << s.name << ": " << s.detail;
    if (timings) os << " [" << s.seconds << " s]";
    os << '\n';
  }
  os << "  cone points: " << join(r.cone_points, " ") << '\n';
  os << "  h: (" << join(r.h, ",") << ")  core h: (" << join(r.core_h, ",") << ")\n";
  if (r.betti) {
    os << "  Betti diagram of the initial ideal:\n";
    std::istringstream is(r.betti->str());
    std::string line;
    while (std::getline(is, line)) os << "    " << line << '\n';
  } else if (!r.betti_note.empty()) {
    os << "  Betti diagram " << r.betti_note << '\n';
  }
  os << "  result: " << (r.all_ok() ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

std::string report_csv(const std::vector<FamilyReport>& reports) {
  std::ostringstream os;
  os << "label,route,predicted_match,dim,degree,pure,cone_points,core_facets,h,a_invariant,two_way_shelling,"
        "gorenstein,sphere,beta0_match,ok\n";
  for (const auto& r : reports) {
    os << '"' << r.label << "\"," << r.route << ',' << r.predicted_match << ',' << r.dim << ',' << r.degree << ','
       << r.pure << ',' << r.cone_points.size() << ',' << r.core_facets.size() << ',' << join(r.h, ";") << ','
       << r.a_invariant << ',' << r.two_way_shelling << ',' << r.gorenstein << ',' << r.sphere << ','
       << r.beta0_match << ',' << r.all_ok() << '\n';
  }
  return os.str();
}

}  // namespace gorlab
