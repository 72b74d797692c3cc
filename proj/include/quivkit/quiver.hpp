#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quivkit/field.hpp"
#include "quivkit/matrix.hpp"

namespace quivkit {

struct Arrow {
  std::string label;
  std::size_t src;
  std::size_t tgt;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    require(seen.size() == vertices_.size(), ErrorKind::vertex, "duplicate vertex label");
  }

  std::size_t add_vertex(const std::string& label) {
    require(!has_vertex(label), ErrorKind::vertex, "duplicate vertex '" + label + "'");
    vertices_.push_back(label);
    return vertices_.size() - 1;
  }
  void add_arrow(const std::string& label, std::size_t src, std::size_t tgt) {
    require(src < vertices_.size() && tgt < vertices_.size(), ErrorKind::vertex, "arrow '" + label + "' has unknown endpoint");
    require(find_arrow(label) == npos, ErrorKind::vertex, "duplicate arrow label '" + label + "'");
    arrows_.push_back(Arrow{label, src, tgt});
  }
  void add_arrow(const std::string& label, const std::string& src, const std::string& tgt) {
    add_arrow(label, vertex_index(src), vertex_index(tgt));
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool has_vertex(const std::string& label) const {
    return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
  }
  std::size_t vertex_index(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) fail(ErrorKind::vertex, "unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t find_arrow(const std::string& label) const {
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].label == label) return k;
    return npos;
  }
  const Arrow& arrow(const std::string& label) const {
    auto k = find_arrow(label);
    if (k == npos) fail(ErrorKind::path, "unknown arrow '" + label + "'");
    return arrows_[k];
  }

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path is a list of arrow labels composed right to left: the last label is
// applied first. The empty path stands for the trivial path at the relation's
// vertex.
struct RelationTerm {
  mpq_class coeff;
  std::vector<std::string> path;
};

struct Relation {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<RelationTerm> terms;
};

using RelationSet = std::vector<Relation>;

// Source and target of a nonempty path; throws PathError if not composable.
inline std::pair<std::size_t, std::size_t> path_endpoints(const Quiver& Q, const std::vector<std::string>& path) {
  require(!path.empty(), ErrorKind::path, "empty path has no intrinsic endpoints");
  std::size_t cur = Q.arrow(path.back()).src;
  const std::size_t start = cur;
  for (std::size_t k = path.size(); k-- > 0;) {
    const Arrow& a = Q.arrow(path[k]);
    require(a.src == cur, ErrorKind::path, "path breaks at arrow '" + a.label + "'");
    cur = a.tgt;
  }
  return {start, cur};
}

inline Relation make_relation(const Quiver& Q, std::vector<RelationTerm> terms, std::size_t vertex_hint = Quiver::npos) {
  Relation r;
  bool fixed = false;
  for (const auto& t : terms) {
    if (t.path.empty()) continue;
    auto [s, e] = path_endpoints(Q, t.path);
    if (!fixed) {
      r.src = s;
      r.tgt = e;
      fixed = true;
    }
    require(r.src == s && r.tgt == e, ErrorKind::path, "relation terms have different endpoints");
  }
  bool has_trivial = std::any_of(terms.begin(), terms.end(), [](const auto& t) { return t.path.empty(); });
  if (!fixed) {
    require(vertex_hint != Quiver::npos, ErrorKind::path, "relation without arrows needs a vertex");
    r.src = r.tgt = vertex_hint;
  }
  if (has_trivial) require(r.src == r.tgt, ErrorKind::path, "trivial path in a relation between distinct vertices");
  r.terms = std::move(terms);
  return r;
}

enum class DeriveKind { double_, framed, gf, cb };

inline std::string framing_label(const std::string& v) { return v + "'"; }

inline Quiver double_quiver(const Quiver& Q) {
  Quiver D(Q.vertices());
  for (const auto& a : Q.arrows()) D.add_arrow(a.label, a.src, a.tgt);
  for (const auto& a : Q.arrows()) D.add_arrow(a.label + "*", a.tgt, a.src);
  return D;
}

inline Quiver framed_quiver(const Quiver& Q) {
  Quiver D(Q.vertices());
  for (const auto& v : Q.vertices()) D.add_vertex(framing_label(v));
  for (const auto& a : Q.arrows()) D.add_arrow(a.label, a.src, a.tgt);
  for (std::size_t i = 0; i < Q.num_vertices(); ++i) D.add_arrow("d_" + Q.vertices()[i], i, Q.num_vertices() + i);
  return D;
}

// Generalized framing: p(i) arrows i -> i' and q(i) arrows i' -> i for every
// vertex listed in p.
inline Quiver gf_quiver(const Quiver& Q, const std::map<std::string, int>& p, const std::map<std::string, int>& q) {
  for (const auto& [v, n] : p) {
    require(Q.has_vertex(v), ErrorKind::vertex, "p refers to unknown vertex '" + v + "'");
    require(n > 0, ErrorKind::vertex, "p(" + v + ") must be positive");
  }
  for (const auto& [v, n] : q) {
    require(Q.has_vertex(v) && p.count(v) > 0, ErrorKind::vertex, "q refers to vertex '" + v + "' outside the framed set");
    require(n >= 0, ErrorKind::vertex, "q(" + v + ") must be nonnegative");
  }
  Quiver D(Q.vertices());
  std::vector<std::string> framed;
  for (const auto& v : Q.vertices())
    if (p.count(v) > 0) framed.push_back(v);
  for (const auto& v : framed) D.add_vertex(framing_label(v));
  for (const auto& a : Q.arrows()) D.add_arrow(a.label, a.src, a.tgt);
  for (const auto& v : framed) {
    int np = p.at(v);
    int nq = q.count(v) > 0 ? q.at(v) : 0;
    for (int k = 1; k <= np; ++k) D.add_arrow("a_" + std::to_string(k) + "@" + v, v, framing_label(v));
    for (int k = 1; k <= nq; ++k) D.add_arrow("b_" + std::to_string(k) + "@" + v, framing_label(v), v);
  }
  return D;
}

inline const std::string& infinity_vertex() {
  static const std::string s = "inf";
  return s;
}

// Collapse the framing vertices of a GF quiver into a single vertex "inf".
// An arrow x: i -> f (f framing, dim w_f) becomes arrows x#1..x#w_f into inf,
// one per row of X_x; y: f -> i becomes y#1..y#w_f, one per column.
inline Quiver collapse_framing(const Quiver& G, const std::set<std::string>& framing, const std::map<std::string, std::size_t>& w) {
  Quiver C;
  for (const auto& v : G.vertices())
    if (framing.count(v) == 0) C.add_vertex(v);
  C.add_vertex(infinity_vertex());
  auto is_fr = [&](std::size_t k) { return framing.count(G.vertices()[k]) > 0; };
  auto wdim = [&](std::size_t k) {
    auto it = w.find(G.vertices()[k]);
    require(it != w.end(), ErrorKind::vertex, "no framing dimension for '" + G.vertices()[k] + "'");
    return it->second;
  };
  for (const auto& a : G.arrows()) {
    bool fs = is_fr(a.src), ft = is_fr(a.tgt);
    const std::string& s = G.vertices()[a.src];
    const std::string& t = G.vertices()[a.tgt];
    if (fs && ft) fail(ErrorKind::vertex, "arrow '" + a.label + "' joins two framing vertices");
    if (!fs && !ft) {
      C.add_arrow(a.label, s, t);
    } else if (ft) {
      for (std::size_t l = 1; l <= wdim(a.tgt); ++l) C.add_arrow(a.label + "#" + std::to_string(l), s, infinity_vertex());
    } else {
      for (std::size_t l = 1; l <= wdim(a.src); ++l) C.add_arrow(a.label + "#" + std::to_string(l), infinity_vertex(), t);
    }
  }
  return C;
}

inline Quiver cb_quiver(const Quiver& Q, const std::map<std::string, std::size_t>& w, const std::map<std::string, int>& p,
                        const std::map<std::string, int>& q) {
  for (const auto& [v, n] : w) require(Q.has_vertex(v), ErrorKind::vertex, "w refers to unknown vertex '" + v + "'");
  for (const auto& [v, n] : p) require(w.count(v) > 0, ErrorKind::vertex, "w is not defined at framed vertex '" + v + "'");
  Quiver G = gf_quiver(Q, p, q);
  std::set<std::string> framing;
  std::map<std::string, std::size_t> wf;
  for (const auto& [v, n] : p) {
    framing.insert(framing_label(v));
    wf[framing_label(v)] = w.at(v);
  }
  return collapse_framing(G, framing, wf);
}

inline Matrix<RationalField> cartan_matrix(const Quiver& Q) {
  RationalField K;
  const std::size_t n = Q.num_vertices();
  Matrix<RationalField> C = Matrix<RationalField>::scalar(K, n, K.from_int(2));
  for (const auto& a : Q.arrows()) {
    // the arrow and its opposite both count in the doubled adjacency
    C.set(a.tgt, a.src, C.at(a.tgt, a.src) - 1);
    C.set(a.src, a.tgt, C.at(a.src, a.tgt) - 1);
  }
  return C;
}

inline std::vector<long long> cartan_apply(const Matrix<RationalField>& C, const std::vector<long long>& u) {
  std::vector<long long> out(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) out[i] += C.at(i, j).get_num().get_si() * u[j];
  return out;
}

inline long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

struct RootsResult {
  std::vector<std::vector<long long>> roots;
  bool regular = true;
};

inline RootsResult roots_and_regularity(const Quiver& Q, const std::vector<long long>& v, const std::vector<GaussianRational>& lambda,
                                        const std::vector<mpq_class>& theta) {
  const std::size_t n = Q.num_vertices();
  require(v.size() == n && lambda.size() == n && theta.size() == n, ErrorKind::shape, "parameters must be indexed by the vertices");
  auto C = cartan_matrix(Q);
  RootsResult out;
  std::vector<long long> u(n, 0);
  auto visit = [&]() {
    if (std::all_of(u.begin(), u.end(), [](long long x) { return x == 0; })) return;
    if (dot(cartan_apply(C, u), u) > 2) return;
    out.roots.push_back(u);
    mpq_class re = 0, im = 0, th = 0;
    for (std::size_t i = 0; i < n; ++i) {
      re += lambda[i].re * static_cast<long>(u[i]);
      im += lambda[i].im * static_cast<long>(u[i]);
      th += theta[i] * static_cast<long>(u[i]);
    }
    if (re == 0 && im == 0 && th == 0) out.regular = false;
  };
  // odometer over the box 0 <= u <= v
  while (true) {
    visit();
    std::size_t k = 0;
    while (k < n && u[k] == v[k]) u[k++] = 0;
    if (k == n) break;
    ++u[k];
  }
  return out;
}

inline long long nakajima_dim(const Quiver& Q, const std::vector<long long>& v, const std::vector<long long>& w) {
  require(v.size() == Q.num_vertices() && w.size() == Q.num_vertices(), ErrorKind::shape, "dimension vectors must match the vertices");
  if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; })) fail(ErrorKind::w_zero, "framing vector w is zero");
  return 2 * dot(w, v) - dot(cartan_apply(cartan_matrix(Q), v), v);
}

// The quiver on which moment_relations live: double of the framed quiver.
inline Quiver framed_double(const Quiver& Q) { return double_quiver(framed_quiver(Q)); }

// mu_k = sum_{a: -> k} a a* - sum_{a: k ->} a* a + d_k* d_k - lambda_k e_k
inline RelationSet moment_relations(const Quiver& Q, const std::vector<mpq_class>& lambda = {}) {
  require(lambda.empty() || lambda.size() == Q.num_vertices(), ErrorKind::shape, "lambda must be indexed by the vertices");
  Quiver D = framed_double(Q);
  RelationSet out;
  for (std::size_t k = 0; k < Q.num_vertices(); ++k) {
    std::vector<RelationTerm> terms;
    for (const auto& a : Q.arrows()) {
      if (a.tgt == k) terms.push_back({1, {a.label, a.label + "*"}});
      if (a.src == k) terms.push_back({-1, {a.label + "*", a.label}});
    }
    const std::string d = "d_" + Q.vertices()[k];
    terms.push_back({1, {d + "*", d}});
    if (!lambda.empty() && lambda[k] != 0) terms.push_back({-lambda[k], {}});
    out.push_back(make_relation(D, std::move(terms), k));
  }
  return out;
}

inline Quiver jordan_quiver() {
  Quiver Q({"0"});
  Q.add_arrow("B", 0, 0);
  return Q;
}

inline Quiver a_n_quiver(std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  Quiver Q(vs);
  for (std::size_t i = 0; i + 1 < n; ++i) Q.add_arrow("x" + std::to_string(i), i, i + 1);
  return Q;
}

}  // namespace quivkit
