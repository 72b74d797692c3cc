#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "quivkit/matrix.hpp"
#include "quivkit/quiver.hpp"

namespace quivkit {

// A representation of a quiver: one space per vertex (given by its
// dimension) and one matrix per arrow, of shape dim(tgt) x dim(src).
template <Field F>
class Representation {
 public:
  Representation(Quiver quiver, F field, std::vector<std::size_t> dims, std::vector<Matrix<F>> maps)
      : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
    require(dims_.size() == quiver_.num_vertices(), ErrorKind::shape, "one dimension per vertex required");
    require(maps_.size() == quiver_.arrows().size(), ErrorKind::shape, "one matrix per arrow required");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
      const Arrow& a = quiver_.arrows()[k];
      if (!(maps_[k].field() == field_)) fail(ErrorKind::field_mismatch, "map of '" + a.label + "' lives over " + maps_[k].field().tag());
      require(maps_[k].rows() == dims_[a.tgt] && maps_[k].cols() == dims_[a.src], ErrorKind::shape,
              "map of '" + a.label + "' has shape " + maps_[k].shape() + ", expected " + std::to_string(dims_[a.tgt]) + "x" +
                  std::to_string(dims_[a.src]));
    }
  }

  // Zero representation with the given dimensions.
  static Representation zero(const Quiver& Q, const F& field, const std::vector<std::size_t>& dims) {
    std::vector<Matrix<F>> maps;
    for (const auto& a : Q.arrows()) maps.emplace_back(field, dims.at(a.tgt), dims.at(a.src));
    return Representation(Q, field, dims, std::move(maps));
  }

  const Quiver& quiver() const { return quiver_; }
  const F& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(const std::string& vertex) const { return dims_[quiver_.vertex_index(vertex)]; }
  const std::vector<Matrix<F>>& maps() const { return maps_; }
  const Matrix<F>& map(const std::string& label) const {
    auto k = quiver_.find_arrow(label);
    if (k == Quiver::npos) fail(ErrorKind::path, "unknown arrow '" + label + "'");
    return maps_[k];
  }
  void set_map(const std::string& label, Matrix<F> m) {
    auto k = quiver_.find_arrow(label);
    if (k == Quiver::npos) fail(ErrorKind::path, "unknown arrow '" + label + "'");
    const Arrow& a = quiver_.arrows()[k];
    require(m.rows() == dims_[a.tgt] && m.cols() == dims_[a.src], ErrorKind::shape, "map of '" + label + "' has wrong shape");
    maps_[k] = std::move(m);
  }

  // Composite map of a path (last label applied first).
  Matrix<F> evaluate(const std::vector<std::string>& path, std::size_t vertex) const {
    if (path.empty()) return Matrix<F>::identity(field_, dims_[vertex]);
    Matrix<F> acc = map(path.back());
    for (std::size_t k = path.size() - 1; k-- > 0;) {
      const Matrix<F>& m = map(path[k]);
      if (m.cols() != acc.rows() || quiver_.arrow(path[k]).src != quiver_.arrow(path[k + 1]).tgt)
        fail(ErrorKind::path, "path breaks at arrow '" + path[k] + "'");
      acc = m * acc;
    }
    return acc;
  }

  bool operator==(const Representation& o) const {
    return quiver_ == o.quiver_ && field_ == o.field_ && dims_ == o.dims_ && maps_ == o.maps_;
  }

 private:
  Quiver quiver_;
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<F>> maps_;
};

template <Field F>
std::vector<Matrix<F>> check_relations(const Representation<F>& rep, const RelationSet& rels) {
  const F& K = rep.field();
  std::vector<Matrix<F>> out;
  for (const auto& rel : rels) {
    require(rel.src < rep.dims().size() && rel.tgt < rep.dims().size(), ErrorKind::path, "relation endpoint outside the quiver");
    Matrix<F> res(K, rep.dims()[rel.tgt], rep.dims()[rel.src]);
    for (const auto& t : rel.terms) {
      Matrix<F> m = rep.evaluate(t.path, rel.src);
      if (m.rows() != res.rows() || m.cols() != res.cols()) fail(ErrorKind::path, "relation term has the wrong endpoints");
      res = res + m.scale(K.from_rational(t.coeff));
    }
    out.push_back(std::move(res));
  }
  return out;
}

template <Field F>
bool all_zero(const std::vector<Matrix<F>>& ms) {
  for (const auto& m : ms)
    if (!m.is_zero()) return false;
  return true;
}

// Crawley-Boevey translation: collapse the framing vertices into one vertex
// "inf" of dimension 1, splitting maps into rows/columns along the standard
// basis of each framing space.
template <Field F>
Representation<F> translate_cb(const Representation<F>& rep, const std::set<std::string>& framing) {
  const Quiver& G = rep.quiver();
  std::map<std::string, std::size_t> w;
  for (const auto& f : framing) w[f] = rep.dim(f);
  Quiver C = collapse_framing(G, framing, w);
  std::vector<std::size_t> dims;
  for (const auto& v : C.vertices()) dims.push_back(v == infinity_vertex() ? 1 : rep.dim(v));
  std::vector<Matrix<F>> maps;
  for (std::size_t k = 0; k < G.arrows().size(); ++k) {
    const Arrow& a = G.arrows()[k];
    const Matrix<F>& X = rep.maps()[k];
    bool fs = framing.count(G.vertices()[a.src]) > 0, ft = framing.count(G.vertices()[a.tgt]) > 0;
    if (!fs && !ft) maps.push_back(X);
    else if (ft)
      for (std::size_t l = 0; l < X.rows(); ++l) maps.push_back(X.row(l));  // phi_l o X
    else
      for (std::size_t l = 0; l < X.cols(); ++l) maps.push_back(X.col(l));  // X o psi_l
  }
  return Representation<F>(C, rep.field(), dims, std::move(maps));
}

// Inverse of translate_cb: stack rows (resp. columns) back into the maps of
// the GF quiver G, whose framing dimensions are given.
template <Field F>
Representation<F> reassemble_cb(const Representation<F>& cb, const Quiver& G, const std::set<std::string>& framing,
                                 const std::map<std::string, std::size_t>& w) {
  const F& K = cb.field();
  std::vector<std::size_t> dims;
  for (const auto& v : G.vertices()) dims.push_back(framing.count(v) > 0 ? w.at(v) : cb.dim(v));
  std::vector<Matrix<F>> maps;
  for (const auto& a : G.arrows()) {
    bool fs = framing.count(G.vertices()[a.src]) > 0, ft = framing.count(G.vertices()[a.tgt]) > 0;
    if (!fs && !ft) {
      maps.push_back(cb.map(a.label));
      continue;
    }
    Matrix<F> X(K, dims[a.tgt], dims[a.src]);
    if (ft)
      for (std::size_t l = 0; l < X.rows(); ++l) X.set_block(l, 0, cb.map(a.label + "#" + std::to_string(l + 1)));
    else
      for (std::size_t l = 0; l < X.cols(); ++l) X.set_block(0, l, cb.map(a.label + "#" + std::to_string(l + 1)));
    maps.push_back(std::move(X));
  }
  return Representation<F>(G, K, dims, std::move(maps));
}

}  // namespace quivkit
