#include "gorlab/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "linalg.hpp"

namespace gorlab {

namespace {

bool size_mask_less(Face a, Face b) {
  int sa = face_size(a), sb = face_size(b);
  return sa != sb ? sa < sb : a < b;
}

std::vector<Face> maximal_only(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // larger faces first so containment checks only look backwards
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return face_size(a) > face_size(b); });
  std::vector<Face> out;
  for (Face f : faces) {
    bool contained = false;
    for (Face g : out)
      if (is_subface(f, g)) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), size_mask_less);
  return out;
}

void for_each_subset(Face f, auto&& fn) {
  Face s = f;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & f;
  }
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------- complexes

SimplicialComplex::SimplicialComplex() : facets_{0} {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (vertices_.size() > kMaxVertices)
    throw std::invalid_argument("complex has " + std::to_string(vertices_.size()) + " vertices; limit is 64");
  if (facets_.empty()) throw std::invalid_argument("complex needs at least one facet");
  std::unordered_set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex label");
  std::sort(facets_.begin(), facets_.end(), size_mask_less);
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  Face all = vertices_.size() == 64 ? ~Face{0} : ((Face{1} << vertices_.size()) - 1);
  Face covered = 0;
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    if (facets_[a] & ~all) throw std::invalid_argument("facet uses an unknown vertex");
    covered |= facets_[a];
    for (std::size_t b = a + 1; b < facets_.size(); ++b)
      if (is_subface(facets_[a], facets_[b])) throw std::invalid_argument("facets do not form an antichain");
  }
  if (covered != all) throw std::invalid_argument("some vertex lies in no facet");
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<std::string> vertices, std::vector<Face> faces) {
  if (faces.empty()) throw std::invalid_argument("complex needs at least one face");
  std::vector<Face> maxi = maximal_only(std::move(faces));
  Face used = 0;
  for (Face f : maxi) used |= f;
  std::vector<int> newidx(vertices.size(), -1);
  std::vector<std::string> kept;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (used >> v & 1) {
      newidx[v] = static_cast<int>(kept.size());
      kept.push_back(vertices[v]);
    }
  std::vector<Face> remapped;
  for (Face f : maxi) {
    Face g = 0;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (f >> v & 1) g |= Face{1} << newidx[v];
    remapped.push_back(g);
  }
  return SimplicialComplex(std::move(kept), std::move(remapped));
}

SimplicialComplex SimplicialComplex::from_label_sets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> idx;
  std::vector<Face> fs;
  for (const auto& F : facets) {
    Face f = 0;
    for (const auto& l : F) {
      auto it = idx.find(l);
      if (it == idx.end()) {
        if (vertices.size() == kMaxVertices) throw std::invalid_argument("complex exceeds 64 vertices");
        it = idx.emplace(l, vertices.size()).first;
        vertices.push_back(l);
      }
      f |= Face{1} << it->second;
    }
    fs.push_back(f);
  }
  return generated_by(std::move(vertices), std::move(fs));
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> vertices) {
  Face all = vertices.size() == 64 ? ~Face{0} : ((Face{1} << vertices.size()) - 1);
  return SimplicialComplex(std::move(vertices), {all});
}

Face SimplicialComplex::vertex_set() const {
  return vertices_.size() == 64 ? ~Face{0} : ((Face{1} << vertices_.size()) - 1);
}

std::optional<std::size_t> SimplicialComplex::vertex_index(const std::string& label) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == label) return v;
  return std::nullopt;
}

Face SimplicialComplex::face_of(const std::vector<std::string>& labels) const {
  Face f = 0;
  for (const auto& l : labels) {
    auto v = vertex_index(l);
    if (!v) throw std::out_of_range("unknown vertex " + l);
    f |= Face{1} << *v;
  }
  return f;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (Face f : facets_)
    if (face_size(f) != face_size(facets_.front())) return false;
  return true;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return is_subface(f, g); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
  std::unordered_set<Face> seen;
  for (Face f : facets_) for_each_subset(f, [&](Face s) { seen.insert(s); });
  std::vector<std::vector<Face>> out(dimension() + 2);
  for (Face f : seen) out[face_size(f)].push_back(f);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (auto& v : faces_by_size()) out.insert(out.end(), v.begin(), v.end());
  return out;
}

SimplicialComplex SimplicialComplex::restriction(Face W) const {
  std::vector<Face> fs;
  for (Face f : facets_) fs.push_back(f & W);
  return generated_by(vertices_, std::move(fs));
}

SimplicialComplex SimplicialComplex::link(Face F) const {
  std::vector<Face> fs;
  for (Face f : facets_)
    if (is_subface(F, f)) fs.push_back(f & ~F);
  if (fs.empty()) throw std::invalid_argument("link of a non-face " + face_str(F));
  return generated_by(vertices_, std::move(fs));
}

std::vector<std::string> SimplicialComplex::labels_of(Face f) const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (f >> v & 1) out.push_back(vertices_[v]);
  return out;
}

std::string SimplicialComplex::face_str(Face f) const {
  std::string s = "{";
  bool first = true;
  for (const auto& l : labels_of(f)) {
    if (!first) s += ' ';
    first = false;
    s += l;
  }
  return s + "}";
}

std::set<std::set<std::string>> SimplicialComplex::facet_label_sets() const {
  std::set<std::set<std::string>> out;
  for (Face f : facets_) {
    auto ls = labels_of(f);
    out.emplace(ls.begin(), ls.end());
  }
  return out;
}

// ---------------------------------------------------------------- Stanley-Reisner

SimplicialComplex complex_of(const MonomialIdeal& M, const VariableTable& table, std::size_t node_cap) {
  if (!M.is_squarefree()) throw std::invalid_argument("complex_of: monomial ideal is not squarefree");
  std::vector<int> vertex_of(table.size(), -1);
  std::vector<bool> is_nonvertex(table.size(), false);
  for (const auto& g : M.generators()) {
    if (g.is_one()) throw std::invalid_argument("complex_of: the unit ideal has the void complex");
    if (g.degree() == 1) is_nonvertex[g.factors().front().var] = true;
  }
  std::vector<std::string> labels;
  for (VarId v = 0; v < table.size(); ++v)
    if (!is_nonvertex[v]) {
      vertex_of[v] = static_cast<int>(labels.size());
      labels.push_back(table.name(v));
    }
  if (labels.size() > kMaxVertices)
    throw std::invalid_argument("complex_of: " + std::to_string(labels.size()) + " vertices exceed the 64-vertex limit");
  const std::size_t V = labels.size();
  if (V == 0) return SimplicialComplex();

  std::vector<Face> edges;
  for (const auto& g : M.generators()) {
    if (g.degree() < 2) continue;
    Face e = 0;
    for (const auto& f : g.factors()) {
      if (f.var >= table.size()) throw std::out_of_range("complex_of: unregistered variable #" + std::to_string(f.var));
      e |= Face{1} << vertex_of[f.var];
    }
    edges.push_back(e);
  }
  std::vector<std::vector<Face>> edges_at(V);
  for (Face e : edges)
    for (std::size_t v = 0; v < V; ++v)
      if (e >> v & 1) edges_at[v].push_back(e);

  std::vector<Face> facets;
  std::size_t nodes = 0;
  // Blocker of u is feasible if some edge through u avoids every excluded vertex other than u.
  auto blockable = [&](std::size_t u, Face X) {
    for (Face e : edges_at[u])
      if ((e & ~(Face{1} << u) & X) == 0) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t v, Face S, Face X) -> void {
    if (++nodes > node_cap)
      throw std::runtime_error("complex_of: facet search exceeded " + std::to_string(node_cap) + " nodes");
    if (v == V) {
      facets.push_back(S);
      return;
    }
    Face bit = Face{1} << v;
    Face S2 = S | bit;
    bool can_include = true;
    for (Face e : edges_at[v])
      if (is_subface(e, S2)) {
        can_include = false;
        break;
      }
    if (can_include) self(self, v + 1, S2, X);
    Face X2 = X | bit;
    if (!blockable(v, X)) return;
    for (std::size_t u = 0; u < v; ++u)
      if ((X >> u & 1) && !blockable(u, X2)) return;
    self(self, v + 1, S, X2);
  };
  rec(rec, 0, 0, 0);
  return SimplicialComplex(std::move(labels), std::move(facets));
}

Face cone_points(const SimplicialComplex& D) {
  Face c = D.vertex_set();
  for (Face f : D.facets()) c &= f;
  return c;
}

SimplicialComplex core(const SimplicialComplex& D) {
  Face c = cone_points(D);
  std::vector<Face> fs;
  for (Face f : D.facets()) fs.push_back(f & ~c);
  return SimplicialComplex::generated_by(D.vertices(), std::move(fs));
}

SimplicialComplex join_with_simplex(const SimplicialComplex& base, const std::vector<std::string>& cone) {
  std::vector<std::vector<std::string>> facets;
  for (Face f : base.facets()) {
    auto ls = base.labels_of(f);
    ls.insert(ls.end(), cone.begin(), cone.end());
    facets.push_back(std::move(ls));
  }
  return SimplicialComplex::from_label_sets(facets);
}

// ---------------------------------------------------------------- f and h

std::vector<std::size_t> f_vector(const SimplicialComplex& D) {
  Face c = cone_points(D);
  int nc = face_size(c);
  std::vector<std::size_t> core_f;
  {
    std::unordered_set<Face> seen;
    for (Face f : D.facets()) for_each_subset(f & ~c, [&](Face s) { seen.insert(s); });
    for (Face s : seen) {
      std::size_t k = face_size(s);
      if (core_f.size() <= k) core_f.resize(k + 1, 0);
      ++core_f[k];
    }
  }
  std::vector<std::size_t> f(core_f.size() + nc, 0);
  for (std::size_t a = 0; a < core_f.size(); ++a)
    for (int b = 0; b <= nc; ++b) f[a + b] += core_f[a] * static_cast<std::size_t>(binomial(nc, b));
  return f;
}

HVector h_from_f(const std::vector<std::size_t>& f) {
  HVector hv;
  hv.d = static_cast<int>(f.size()) - 1;
  const int d = hv.d;
  hv.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) {
      long long term = binomial(d - i, k - i) * static_cast<long long>(f[i]);
      s += ((k - i) % 2 ? -term : term);
    }
    hv.h[k] = s;
  }
  while (hv.h.size() > 1 && hv.h.back() == 0) hv.h.pop_back();
  return hv;
}

HVector h_vector(const SimplicialComplex& D) { return h_from_f(f_vector(D)); }

bool HVector::symmetric() const {
  // symmetry h_i = h_{s-i} of the trimmed vector
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

// ---------------------------------------------------------------- homology

namespace {

// Reduced homology from faces grouped by size (index 0 holds ∅ if nonvoid).
std::vector<std::size_t> homology_from_faces(const std::vector<std::vector<Face>>& by_size, const Field& field) {
  const int top = static_cast<int>(by_size.size()) - 1;  // max face size
  // rank of boundary from size k faces to size k-1 faces
  std::vector<std::size_t> rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) continue;
    std::unordered_map<Face, std::uint32_t> index;
    for (std::size_t a = 0; a < by_size[k - 1].size(); ++a) index.emplace(by_size[k - 1][a], static_cast<std::uint32_t>(a));
    std::vector<detail::SparseRow> rows;
    rows.reserve(by_size[k].size());
    for (Face f : by_size[k]) {
      detail::SparseRow row;
      int pos = 0;
      for (Face rest = f; rest; rest &= rest - 1) {
        Face bit = rest & (~rest + 1);
        row.push_back({index.at(f & ~bit), pos % 2 ? -1 : 1});
        ++pos;
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    rank[k] = detail::matrix_rank(rows, field);
  }
  std::vector<std::size_t> h(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    std::size_t n = by_size[k].size();
    std::size_t r = rank[k] + (k + 1 <= top ? rank[k + 1] : 0);
    h[k] = n - r;
  }
  return h;  // h[k] = H̃_{k-1}
}

bool sphere_pattern(const std::vector<std::size_t>& h, int dim, int* bad_index) {
  // h[k] = H̃_{k-1}; sphere of dimension dim: H̃_dim = 1, others 0
  for (int k = 0; k < static_cast<int>(h.size()); ++k) {
    std::size_t want = (k - 1 == dim) ? 1 : 0;
    if (h[k] != want) {
      if (bad_index) *bad_index = k - 1;
      return false;
    }
  }
  if (static_cast<int>(h.size()) <= dim + 1) {
    if (bad_index) *bad_index = dim;
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> reduced_homology(const SimplicialComplex& D, const Field& field) {
  return homology_from_faces(D.faces_by_size(), field);
}

GorensteinResult is_gorenstein(const SimplicialComplex& D, const Field& field) {
  SimplicialComplex C = core(D);
  GorensteinResult res;
  for (Face F : C.faces()) {
    ++res.faces_checked;
    std::vector<Face> lf;
    for (Face g : C.facets())
      if (is_subface(F, g)) lf.push_back(g & ~F);
    lf = maximal_only(std::move(lf));
    std::unordered_set<Face> seen;
    for (Face g : lf) for_each_subset(g, [&](Face s) { seen.insert(s); });
    int top = 0;
    for (Face g : lf) top = std::max(top, face_size(g));
    std::vector<std::vector<Face>> by_size(top + 1);
    for (Face s : seen) by_size[face_size(s)].push_back(s);
    for (auto& v : by_size) std::sort(v.begin(), v.end());
    auto h = homology_from_faces(by_size, field);
    int bad = 0;
    if (!sphere_pattern(h, top - 1, &bad)) {
      res.gorenstein = false;
      res.failing_face = F;
      res.failing_index = bad;
      res.witness = "link of " + C.face_str(F) + " has H~_" + std::to_string(bad) + " of rank " +
                    std::to_string(bad + 1 < static_cast<int>(h.size()) ? h[bad + 1] : 0);
      return res;
    }
  }
  res.gorenstein = true;
  res.witness = std::to_string(res.faces_checked) + " links of the core have sphere homology";
  return res;
}

// ---------------------------------------------------------------- shellings

std::vector<long long> ShellingCertificate::h_vector() const {
  std::vector<long long> h;
  for (Face r : restrictions) {
    std::size_t k = face_size(r);
    if (h.size() <= k) h.resize(k + 1, 0);
    ++h[k];
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

namespace {

// Restriction set of `f` against earlier facets, or nullopt if the shelling condition fails.
std::optional<Face> restriction_of(Face f, const std::vector<Face>& earlier, int d) {
  Face r = 0;
  for (Face g : earlier)
    if (face_size(f & g) == d - 1) r |= f & ~g;
  if (r == 0) return std::nullopt;
  for (Face g : earlier)
    if (is_subface(r, g)) return std::nullopt;
  return r;
}

}  // namespace

ShellingCheck verify_shelling(const SimplicialComplex& D, const std::vector<Face>& order) {
  if (!D.is_pure()) throw std::invalid_argument("verify_shelling: complex is not pure");
  {
    std::vector<Face> a = order, b = D.facets();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
  }
  const int d = face_size(D.facets().front());
  ShellingCheck out;
  std::vector<Face> earlier;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0) {
      out.certificate.restrictions.push_back(0);
    } else {
      auto r = restriction_of(order[k], earlier, d);
      if (!r) {
        out.ok = false;
        out.failed_at = k;
        out.reason = "facet " + std::to_string(k) + " " + D.face_str(order[k]) +
                     " meets the earlier facets in a complex that is not pure of codimension one";
        return out;
      }
      out.certificate.restrictions.push_back(*r);
    }
    out.certificate.order.push_back(order[k]);
    earlier.push_back(order[k]);
  }
  out.ok = true;
  return out;
}

bool verify_two_way(const SimplicialComplex& D, const std::vector<Face>& order) {
  std::vector<Face> rev(order.rbegin(), order.rend());
  return verify_shelling(D, order).ok && verify_shelling(D, rev).ok;
}

bool pseudomanifold_check(const SimplicialComplex& D) {
  if (!D.is_pure()) throw std::invalid_argument("pseudomanifold_check: complex is not pure");
  if (face_size(D.facets().front()) == 0) return true;
  std::unordered_map<Face, int> count;
  for (Face f : D.facets())
    for (Face rest = f; rest; rest &= rest - 1) ++count[f & ~(rest & (~rest + 1))];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& D, std::size_t node_budget) {
  if (!D.is_pure()) return std::nullopt;
  const auto& F = D.facets();
  const int d = face_size(F.front());
  std::vector<Face> order;
  std::vector<bool> used(F.size(), false);
  std::size_t nodes = 0;
  auto rec = [&](auto&& self) -> bool {
    if (order.size() == F.size()) return true;
    if (++nodes > node_budget) return false;
    for (std::size_t k = 0; k < F.size(); ++k) {
      if (used[k]) continue;
      if (!order.empty() && !restriction_of(F[k], order, d)) continue;
      used[k] = true;
      order.push_back(F[k]);
      if (self(self)) return true;
      order.pop_back();
      used[k] = false;
      if (nodes > node_budget) return false;
      if (order.empty()) return false;  // the first facet can be fixed
    }
    return false;
  };
  if (rec(rec)) return order;
  return std::nullopt;
}

SphereCertificate sphere_certificate(const SimplicialComplex& D, const std::optional<std::vector<Face>>& order,
                                     const Field& field) {
  if (!D.is_pure()) throw std::invalid_argument("sphere_certificate: complex is not pure");
  SphereCertificate cert;
  if (order) {
    if (verify_shelling(D, *order).ok) {
      cert.shelling_found = true;
      cert.shelling = *order;
    }
  } else if (auto s = find_shelling(D)) {
    cert.shelling_found = true;
    cert.shelling = *s;
  }
  cert.pseudomanifold = pseudomanifold_check(D);
  cert.homology_sphere = sphere_pattern(reduced_homology(D, field), D.dimension(), nullptr);
  cert.sphere = cert.shelling_found && cert.pseudomanifold;
  if (cert.sphere && !cert.homology_sphere)
    throw std::logic_error("sphere certificate contradicts homology; shelling or pseudomanifold check is wrong");
  return cert;
}

// ---------------------------------------------------------------- Betti numbers

void BettiDiagram::add(int i, int j, std::size_t value) {
  if (value) values_[{i, j}] += value;
}

std::size_t BettiDiagram::at(int i, int j) const {
  auto it = values_.find({i, j});
  return it == values_.end() ? 0 : it->second;
}

int BettiDiagram::max_homological_degree() const {
  int m = -1;
  for (const auto& [k, v] : values_) m = std::max(m, k.first);
  return m;
}

std::map<int, std::vector<std::size_t>> BettiDiagram::rows() const {
  std::map<int, std::vector<std::size_t>> out;
  int width = max_homological_degree() + 1;
  for (const auto& [k, v] : values_) {
    auto& row = out[k.second - k.first];
    row.resize(width, 0);
    row[k.first] = v;
  }
  return out;
}

std::string BettiDiagram::str() const {
  std::ostringstream os;
  int width = max_homological_degree() + 1;
  os << "      i:";
  for (int i = 0; i < width; ++i) os << ' ' << std::string(i < 10 ? 4 : 3, ' ') << i;
  os << "\n";
  for (const auto& [r, row] : rows()) {
    os << "j-i=" << (r < 10 ? " " : "") << r << ":";
    for (auto v : row) {
      std::string s = std::to_string(v);
      os << ' ' << std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

BettiDiagram hochster_betti(const SimplicialComplex& D, const Field& field, std::size_t vertex_cap) {
  if (D.num_vertices() > vertex_cap)
    throw std::invalid_argument("hochster_betti: " + std::to_string(D.num_vertices()) + " vertices exceed the cap of " +
                                std::to_string(vertex_cap));
  // Subsets meeting a cone point induce cones, which are acyclic; sum over core vertices only.
  SimplicialComplex C = core(D);
  auto by_size = C.faces_by_size();
  const std::size_t n = C.num_vertices();
  BettiDiagram B;
  for (Face W = 1; W < (Face{1} << n); ++W) {
    std::vector<std::vector<Face>> sub(by_size.size());
    int top = 0;
    for (std::size_t k = 0; k < by_size.size(); ++k)
      for (Face f : by_size[k])
        if (is_subface(f, W)) {
          sub[k].push_back(f);
          top = static_cast<int>(k);
        }
    sub.resize(top + 1);
    auto h = homology_from_faces(sub, field);
    int j = face_size(W);
    for (int k = 0; k < static_cast<int>(h.size()); ++k) {
      int i = j - (k - 1) - 2;
      if (i >= 0) B.add(i, j, h[k]);
    }
  }
  return B;
}

// ---------------------------------------------------------------- cyclic polytopes

SimplicialComplex cyclic_polytope_facets(int n, int d) {
  if (d < 2 || n <= d) throw std::invalid_argument("cyclic polytope needs n > d >= 2");
  if (n > static_cast<int>(kMaxVertices)) throw std::invalid_argument("cyclic polytope: too many vertices");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Face> facets;
  for (const auto& S : subsets_of_size(n, d)) {
    Face f = 0;
    for (int s : S) f |= Face{1} << (s - 1);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      if (f >> (i - 1) & 1) continue;
      for (int j = i + 1; j <= n && ok; ++j) {
        if (f >> (j - 1) & 1) continue;
        int between = 0;
        for (int k = i + 1; k < j; ++k) between += static_cast<int>(f >> (k - 1) & 1);
        if (between % 2) ok = false;
      }
    }
    if (ok) facets.push_back(f);
  }
  return SimplicialComplex(std::move(labels), std::move(facets));
}

bool minimal_multiplicity_check(long long h, long long d, long long e) {
  if (h < 1 || d < 1) throw std::invalid_argument("minimal_multiplicity_check needs h, d >= 1");
  return e == binomial(h + d - 1, d - 1);
}

}  // namespace gorlab
