#pragma once

// JSON encoding of every datum. Scalars are strings ("3", "-1/2", "x+1");
// integers are accepted on input. Matrices carry the tag of their field.

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quivkit/quivkit.hpp"

namespace quivkit {

using json = nlohmann::json;
using AnyField = std::variant<RationalField, PrimeField, ExtensionField<RationalField>>;

inline AnyField field_from_tag(const std::string& tag) {
  if (tag == "Q") return RationalField{};
  if (tag.rfind("Fp:", 0) == 0) {
    const std::string digits = tag.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
      fail(ErrorKind::parse, "bad prime in field tag '" + tag + "'");
    return PrimeField(std::stoull(digits));
  }
  if (tag.rfind("ext:", 0) == 0) {
    RationalField Q;
    return make_number_field(Poly<RationalField>::parse(Q, tag.substr(4)));
  }
  fail(ErrorKind::parse, "unknown field tag '" + tag + "'");
}

// Tag of the first matrix found in a depth-first walk (keys in sorted order).
inline std::optional<std::string> find_field_tag(const json& j) {
  if (j.is_object()) {
    if (j.contains("entries") && j.contains("field") && j["field"].is_string()) return j["field"].get<std::string>();
    for (const auto& [k, v] : j.items())
      if (auto t = find_field_tag(v)) return t;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (auto t = find_field_tag(v)) return t;
  }
  return std::nullopt;
}

inline AnyField detect_field(const json& j) { return field_from_tag(find_field_tag(j).value_or("Q")); }

namespace io {

inline const json& at(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::parse, "missing key '" + key + "'");
  return j.at(key);
}

inline long long get_int(const json& j, const std::string& key) {
  const json& v = at(j, key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    mpq_class q = parse_rational(v.get<std::string>());
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail(ErrorKind::parse, "'" + key + "' must be an integer");
    return q.get_num().get_si();
  }
  fail(ErrorKind::parse, "'" + key + "' must be an integer");
}

inline std::size_t get_size(const json& j, const std::string& key) {
  long long v = get_int(j, key);
  if (v < 0) fail(ErrorKind::parse, "'" + key + "' must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline const json& get_array(const json& j, const std::string& key) {
  const json& v = at(j, key);
  if (!v.is_array()) fail(ErrorKind::parse, "'" + key + "' must be an array");
  return v;
}

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::parse, "scalar entries must be strings or integers");
}

inline mpq_class get_rational(const json& v) { return parse_rational(scalar_text(v)); }

inline std::vector<mpq_class> rational_list(const json& v) {
  if (!v.is_array()) fail(ErrorKind::parse, "expected an array of rationals");
  std::vector<mpq_class> out;
  for (const auto& x : v) out.push_back(get_rational(x));
  return out;
}

inline std::vector<long long> int_list(const json& v) {
  if (!v.is_array()) fail(ErrorKind::parse, "expected an array of integers");
  std::vector<long long> out;
  for (const auto& x : v) {
    mpq_class q = get_rational(x);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail(ErrorKind::parse, "expected an integer");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

inline std::vector<std::size_t> size_list(const json& v) {
  std::vector<std::size_t> out;
  for (auto x : int_list(v)) {
    if (x < 0) fail(ErrorKind::parse, "dimensions must be nonnegative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace io

template <Field F>
json to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", m.field().tag()}, {"entries", rows}};
}

template <Field F>
Matrix<F> matrix_from_json(const json& j, const F& K) {
  if (!j.is_object()) fail(ErrorKind::parse, "a matrix must be an object");
  const std::size_t rows = io::get_size(j, "rows"), cols = io::get_size(j, "cols");
  if (j.contains("field")) {
    if (!j["field"].is_string()) fail(ErrorKind::parse, "field tag must be a string");
    if (j["field"].get<std::string>() != K.tag())
      fail(ErrorKind::field_mismatch, "matrix over " + j["field"].get<std::string>() + " mixed with " + K.tag());
  }
  const json& e = io::get_array(j, "entries");
  if (e.size() != rows) fail(ErrorKind::parse, "entries has " + std::to_string(e.size()) + " rows, expected " + std::to_string(rows));
  Matrix<F> m(K, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) fail(ErrorKind::parse, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, K.parse(io::scalar_text(e[i][c])));
  }
  return m;
}

template <Field F>
std::vector<Matrix<F>> matrix_list(const json& v, const F& K) {
  if (!v.is_array()) fail(ErrorKind::parse, "expected an array of matrices");
  std::vector<Matrix<F>> out;
  for (const auto& x : v) out.push_back(matrix_from_json(x, K));
  return out;
}

template <Field F>
json to_json(const std::vector<Matrix<F>>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

// quivers and relations

inline json to_json(const Quiver& Q) {
  json arrows = json::array();
  for (const auto& a : Q.arrows())
    arrows.push_back(json{{"label", a.label}, {"src", Q.vertices()[a.src]}, {"tgt", Q.vertices()[a.tgt]}});
  return json{{"vertices", Q.vertices()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
  Quiver Q;
  for (const auto& v : io::get_array(j, "vertices")) {
    if (!v.is_string()) fail(ErrorKind::parse, "vertex labels must be strings");
    Q.add_vertex(v.get<std::string>());
  }
  for (const auto& a : io::get_array(j, "arrows")) {
    auto str = [&](const char* k) {
      const json& v = io::at(a, k);
      if (!v.is_string()) fail(ErrorKind::parse, std::string("arrow ") + k + " must be a string");
      return v.get<std::string>();
    };
    Q.add_arrow(str("label"), str("src"), str("tgt"));
  }
  return Q;
}

inline json to_json(const Quiver& Q, const RelationSet& rels) {
  json out = json::array();
  for (const auto& r : rels) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(json{{"coeff", rational_to_string(t.coeff)}, {"path", t.path}});
    out.push_back(json{{"src", Q.vertices()[r.src]}, {"tgt", Q.vertices()[r.tgt]}, {"terms", terms}});
  }
  return out;
}

// representations

template <Field F>
json to_json(const Representation<F>& rep) {
  json maps = json::object();
  for (std::size_t k = 0; k < rep.maps().size(); ++k) maps[rep.quiver().arrows()[k].label] = to_json(rep.maps()[k]);
  return json{{"quiver", to_json(rep.quiver())}, {"dims", rep.dims()}, {"maps", maps}};
}

template <Field F>
Representation<F> representation_from_json(const json& j, const F& K) {
  Quiver Q = quiver_from_json(io::at(j, "quiver"));
  auto dims = io::size_list(io::at(j, "dims"));
  const json& maps = io::at(j, "maps");
  if (!maps.is_object()) fail(ErrorKind::parse, "'maps' must be an object keyed by arrow label");
  std::vector<Matrix<F>> ms;
  for (const auto& a : Q.arrows()) {
    if (!maps.contains(a.label)) fail(ErrorKind::parse, "no matrix for arrow '" + a.label + "'");
    ms.push_back(matrix_from_json(maps.at(a.label), K));
  }
  if (maps.size() != Q.arrows().size()) fail(ErrorKind::parse, "'maps' names arrows outside the quiver");
  return Representation<F>(Q, K, dims, ms);
}

template <Field F>
json to_json(const Subrep<F>& s, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    out.push_back(json{{"vertex", i < labels.size() ? labels[i] : std::to_string(i)}, {"basis", to_json(s.basis[i])}});
  return out;
}

// ADHM data

template <Field F>
json to_json(const AdhmP2<F>& d) {
  return json{{"r", d.r}, {"c", d.c}, {"B1", to_json(d.B1)}, {"B2", to_json(d.B2)}, {"i", to_json(d.i)}, {"j", to_json(d.j)}};
}

template <Field F>
AdhmP2<F> p2_from_json(const json& j, const F& K) {
  AdhmP2<F> d{io::get_size(j, "r"), io::get_size(j, "c"), matrix_from_json(io::at(j, "B1"), K), matrix_from_json(io::at(j, "B2"), K),
              matrix_from_json(io::at(j, "i"), K), matrix_from_json(io::at(j, "j"), K)};
  d.validate();
  return d;
}

template <Field F>
json to_json(const HirzRank1<F>& d) {
  return json{{"n", d.n}, {"c", d.c}, {"A1", to_json(d.A1)}, {"A2", to_json(d.A2)}, {"C", to_json(d.C)}, {"e", to_json(d.e)}};
}

template <Field F>
HirzRank1<F> hirz_from_json(const json& j, const F& K) {
  HirzRank1<F> d{io::get_size(j, "n"), io::get_size(j, "c"), matrix_from_json(io::at(j, "A1"), K), matrix_from_json(io::at(j, "A2"), K),
                 matrix_list(io::at(j, "C"), K), matrix_from_json(io::at(j, "e"), K)};
  d.validate();
  return d;
}

template <Field F>
json to_json(const BlowupDatum<F>& d) {
  const F& K = d.field();
  json pts = json::array();
  for (const auto& [x, y] : d.points) pts.push_back(json::array({K.to_string(x), K.to_string(y)}));
  return json{{"r", d.r}, {"a", d.a}, {"c", d.c}, {"points", pts}, {"A", to_json(d.A)}, {"C0", to_json(d.C0)}, {"C1", to_json(d.C1)},
              {"B", to_json(d.B)}, {"Bp", to_json(d.Bp)}, {"e", to_json(d.e)}, {"f", to_json(d.f)}};
}

template <Field F>
BlowupDatum<F> blowup_from_json(const json& j, const F& K) {
  BlowupDatum<F> d{io::get_size(j, "r"), io::int_list(io::at(j, "a")), io::get_int(j, "c"), {}, matrix_from_json(io::at(j, "A"), K),
                   matrix_from_json(io::at(j, "C0"), K), matrix_from_json(io::at(j, "C1"), K), matrix_list(io::at(j, "B"), K),
                   matrix_list(io::at(j, "Bp"), K), matrix_from_json(io::at(j, "e"), K), matrix_from_json(io::at(j, "f"), K)};
  for (const auto& p : io::get_array(j, "points")) {
    if (!p.is_array() || p.size() != 2) fail(ErrorKind::parse, "points are pairs [x, y]");
    d.points.emplace_back(K.parse(io::scalar_text(p[0])), K.parse(io::scalar_text(p[1])));
  }
  d.validate();
  return d;
}

template <Field F>
json to_json(const BlowupGroupElement<F>& g) {
  return json{{"h", to_json(g.h)}, {"g", to_json(g.g)}};
}

template <Field F>
BlowupGroupElement<F> blowup_group_from_json(const json& j, const F& K) {
  return BlowupGroupElement<F>{matrix_list(io::at(j, "h"), K), matrix_list(io::at(j, "g"), K)};
}

// minimal case

template <Field F>
json to_json(const MinimalPoint<F>& p) {
  return json{{"n", p.n}, {"r", p.r}, {"a", p.a}, {"b", to_json(p.b)}, {"theta", to_json(p.theta)}};
}

template <Field F>
MinimalPoint<F> minimal_from_json(const json& j, const F& K) {
  MinimalPoint<F> p{io::get_size(j, "n"), io::get_size(j, "r"), io::get_size(j, "a"), matrix_list(io::at(j, "b"), K),
                    matrix_from_json(io::at(j, "theta"), K)};
  p.validate();
  return p;
}

template <Field F>
json to_json(const MonadPoint<F>& p) {
  return json{{"n", p.n},
              {"r", p.r},
              {"a", p.a},
              {"beta10", to_json(p.beta10)},
              {"beta11", to_json(p.beta11)},
              {"beta2", to_json(p.beta2)},
              {"xi", to_json(p.xi)}};
}

template <Field F>
MonadPoint<F> monad_from_json(const json& j, const F& K) {
  MonadPoint<F> p{io::get_size(j, "n"),
                  io::get_size(j, "r"),
                  io::get_size(j, "a"),
                  matrix_from_json(io::at(j, "beta10"), K),
                  matrix_from_json(io::at(j, "beta11"), K),
                  matrix_list(io::at(j, "beta2"), K),
                  matrix_from_json(io::at(j, "xi"), K)};
  p.validate();
  return p;
}

template <Field F>
json to_json(const GkElement<F>& g) {
  return json{{"psi11", to_json(g.psi11)}, {"psi12", to_json(g.psi12)}, {"psi22", to_json(g.psi22)}, {"chi", to_json(g.chi)}};
}

template <Field F>
json to_json(const Fingerprint<F>& fp) {
  return json{{"pivots", fp.pivots}, {"basis", to_json(fp.basis)}, {"b", to_json(fp.b)}};
}

inline json to_json(const MinimalInvariants& v) {
  return json{{"n", v.n},       {"r", v.r},   {"a", v.a},
              {"c", v.c},       {"C_m", v.C_m}, {"nonempty", v.nonempty},
              {"k", json::array({v.k1, v.k2, v.k3, v.k4})}, {"dim", v.moduli_dim}};
}

// flags

template <Field F>
json to_json(const FlagRep<F>& r) {
  json B = json::array();
  for (const auto& row : r.B) B.push_back(to_json(row));
  return json{{"d", r.d}, {"n", r.n}, {"u", r.u}, {"v", r.v}, {"e", to_json(r.e)}, {"f", to_json(r.f)}, {"A", to_json(r.A)}, {"B", B}};
}

template <Field F>
FlagRep<F> flag_from_json(const json& j, const F& K) {
  FlagRep<F> r{io::get_size(j, "d"), io::get_size(j, "n"), io::get_size(j, "u"), io::size_list(io::at(j, "v")),
               matrix_from_json(io::at(j, "e"), K), matrix_list(io::at(j, "f"), K), matrix_list(io::at(j, "A"), K), {}};
  for (const auto& row : io::get_array(j, "B")) r.B.push_back(matrix_list(row, K));
  r.validate();
  return r;
}

template <Field F>
FlagTangent<F> tangent_from_json(const json& j, const F& K) {
  return FlagTangent<F>{matrix_from_json(io::at(j, "de"), K), matrix_from_json(io::at(j, "df"), K)};
}

}  // namespace quivkit
