#pragma once

// Command-line front end. run_command is reentrant: all state lives in the
// call, so batch can run several commands at once.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "quivkit/io.hpp"

namespace quivkit {

namespace cli {

struct Outcome {
  int exit = 0;
  json report;
  bool raw = false;  // report is a datum: always printed as JSON
};

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::shape:
    case ErrorKind::field_mismatch:
    case ErrorKind::vertex:
    case ErrorKind::path:
    case ErrorKind::group_shape:
    case ErrorKind::unsupported:
    case ErrorKind::needs_finite_field:
    case ErrorKind::too_large:
    case ErrorKind::internal: return 2;
    default: return 1;
  }
}

struct Options {
  std::string in;
  std::string data;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool timing = false;
  long long n = -1, r = -1, a = -1, d = -1, u = -1;
  long long c = 0;
  bool c_given = false;
  std::vector<long long> v;
  std::vector<long long> avec;
  std::uint64_t prime = 0;
  std::string kind;
  bool require_stable = false;
};

inline json load_input(const Options& o, std::istream& in) {
  std::string text;
  if (!o.data.empty()) {
    text = o.data;
  } else if (o.in == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!o.in.empty()) {
    std::ifstream f(o.in);
    if (!f) fail(ErrorKind::parse, "cannot read '" + o.in + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    fail(ErrorKind::parse, "no input: use --in PATH, --in - or --data JSON");
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
}

template <class Fn>
Outcome with_field(const json& input, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), detect_field(input));
}

inline const char* zero_flag(bool z) { return z ? "zero" : "nonzero"; }

// built-in quivers by name, or a full quiver object
inline Quiver quiver_arg(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "jordan") return jordan_quiver();
    if (s.size() > 1 && s[0] == 'A' && s.find_first_not_of("0123456789", 1) == std::string::npos) return a_n_quiver(std::stoul(s.substr(1)));
    fail(ErrorKind::parse, "unknown quiver name '" + s + "'");
  }
  return quiver_from_json(j);
}

inline Quiver input_quiver(const json& input) {
  if (input.is_object() && input.contains("vertices")) return quiver_from_json(input);
  return quiver_arg(io::at(input, "quiver"));
}

inline std::map<std::string, int> int_map(const json& j, const char* key) {
  std::map<std::string, int> out;
  if (!j.contains(key)) return out;
  for (const auto& [k, v] : j.at(key).items()) {
    if (!v.is_number_integer()) fail(ErrorKind::parse, std::string(key) + " values must be integers");
    out[k] = v.get<int>();
  }
  return out;
}

// ---- validate ----

inline Outcome validate_p2(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto d = p2_from_json(input, K);
    bool mz = moment_residual(d).is_zero();
    auto cl = stability_closure(d);
    json rep{{"moment", zero_flag(mz)}, {"stable", cl.stable}, {"closure_dim", cl.closure_dim},
             {"costable", costability_closure(d).stable}};
    if (!mz) rep["moment_residual"] = to_json(moment_residual(d));
    if (d.r == 1 && mz && cl.stable) rep["j_zero"] = rank1_hilbert_check(d);
    return Outcome{mz && cl.stable ? 0 : 1, rep};
  });
}

inline Outcome validate_hirz1(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto d = hirz_from_json(input, K);
    json res = json::array();
    bool p1 = true;
    for (const auto& r : check_P1(d)) {
      res.push_back(json{{"relation", r.name}, {"value", zero_flag(r.value.is_zero())}});
      p1 = p1 && r.value.is_zero();
    }
    bool p2 = check_P2(d);
    json rep{{"P1", p1}, {"P1_residuals", res}, {"P2", p2}};
    bool ok = p1 && p2;
    if (p2) {
      auto p3 = check_P3(d);
      rep["P3"] = p3.holds;
      if (!p3.holds) rep["P3_violation"] = json{{"root", p3.root}, {"dimension", p3.dimension}};
      ok = ok && p3.holds;
    }
    if (ok && d.A2.is_invertible()) {
      auto p = chart_to_p2(d);
      rep["chart"] = json{{"moment", zero_flag(moment_residual(p).is_zero())}, {"stable", stability_closure(p).stable}};
    }
    return Outcome{ok ? 0 : 1, rep};
  });
}

inline Outcome validate_blowup(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto d = blowup_from_json(input, K);
    auto D = d.dims();
    auto res = blowup_residual(d);
    json rep{{"k", D.k}, {"l", D.l}, {"dim_K", D.dimK}, {"residual", zero_flag(res.is_zero())}};
    if (!res.is_zero()) rep["residual_matrix"] = to_json(res);
    return Outcome{res.is_zero() ? 0 : 1, rep};
  });
}

// ---- minimal ----

inline Outcome minimal_invariants_cmd(const Options& o) {
  if (o.n < 0 || o.r < 0 || o.a < 0 || !o.c_given) fail(ErrorKind::parse, "minimal invariants needs --n, --r, --a and --c");
  auto v = minimal_invariants(o.n, o.r, o.a, o.c);
  return Outcome{v.nonempty ? 0 : 1, to_json(v)};
}

inline Outcome minimal_embed(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto mp = embed_j(minimal_from_json(input, K));
    return Outcome{0, to_json(mp), true};
  });
}

inline Outcome minimal_normalize(const json& input) {
  return with_field(input, [&](const auto& K) { return Outcome{0, to_json(normalize(monad_from_json(input, K))), true}; });
}

inline Outcome minimal_fingerprint(const json& input) {
  return with_field(input, [&](const auto& K) { return Outcome{0, to_json(fingerprint(minimal_from_json(input, K)))}; });
}

// ---- flag ----

inline Outcome flag_stable(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto r = flag_from_json(input, K);
    bool st = stable_thetaplus(r);
    json rep{{"stable", st}};
    if (!st) {
      bool e_inj = r.e.rank() == r.v[0];
      std::string w = "e not injective";
      if (e_inj)
        for (std::size_t p = 1; p < r.d; ++p)
          if (r.A[p - 1].rank() != r.v[p]) {
            w = "A_" + std::to_string(p) + " not injective";
            break;
          }
      rep["witness"] = w;
      json dims = json::array();
      for (const auto& m : flag_kernel_chain(r)) dims.push_back(m.cols());
      rep["destabilizing_dims"] = dims;
    }
    return Outcome{st ? 0 : 1, rep};
  });
}

inline Outcome flag_extract(const json& input, bool require_stable) {
  return with_field(input, [&](const auto& K) {
    auto fl = extract_flag(flag_from_json(input, K), require_stable);
    json dims = json::array();
    for (const auto& m : fl) dims.push_back(m.cols());
    return Outcome{0, json{{"flag", to_json(fl)}, {"dims", dims}}};
  });
}

inline Outcome flag_from_minimal(const json& input) {
  return with_field(input, [&](const auto& K) { return Outcome{0, to_json(minimal_to_flagrep(minimal_from_json(input, K))), true}; });
}

inline Outcome flag_omega(const json& input) {
  return with_field(input, [&](const auto& K) {
    auto t1 = tangent_from_json(io::at(input, "t1"), K);
    auto t2 = tangent_from_json(io::at(input, "t2"), K);
    return Outcome{0, json{{"omega", K.to_string(symplectic_eval(t1, t2))}}};
  });
}

// ---- quiver ----

inline Outcome quiver_derive(const json& input, const std::string& kind_opt) {
  std::string kind = kind_opt;
  if (kind.empty()) {
    const json& k = io::at(input, "kind");
    if (!k.is_string()) fail(ErrorKind::parse, "'kind' must be a string");
    kind = k.get<std::string>();
  }
  if (kind == "flag") {
    auto [Q, rels] = build_flag_algebra(io::get_size(input, "d"), io::get_size(input, "n"));
    return Outcome{0, json{{"quiver", to_json(Q)}, {"relations", to_json(Q, rels)}}};
  }
  Quiver Q = input_quiver(input);
  if (kind == "double") return Outcome{0, json{{"quiver", to_json(double_quiver(Q))}}};
  if (kind == "framed") return Outcome{0, json{{"quiver", to_json(framed_quiver(Q))}}};
  if (kind == "framed-double") return Outcome{0, json{{"quiver", to_json(framed_double(Q))}}};
  if (kind == "gf") return Outcome{0, json{{"quiver", to_json(gf_quiver(Q, int_map(input, "p"), int_map(input, "q")))}}};
  if (kind == "cb") {
    std::map<std::string, std::size_t> w;
    for (const auto& [k, v] : int_map(input, "w")) {
      if (v < 0) fail(ErrorKind::parse, "w must be nonnegative");
      w[k] = static_cast<std::size_t>(v);
    }
    return Outcome{0, json{{"quiver", to_json(cb_quiver(Q, w, int_map(input, "p"), int_map(input, "q")))}}};
  }
  if (kind == "moment") {
    std::vector<mpq_class> lambda;
    if (input.contains("lambda")) lambda = io::rational_list(input.at("lambda"));
    Quiver D = framed_double(Q);
    return Outcome{0, json{{"quiver", to_json(D)}, {"relations", to_json(D, moment_relations(Q, lambda))}}};
  }
  fail(ErrorKind::parse, "unknown derivation '" + kind + "' (double, framed, framed-double, gf, cb, moment, flag)");
}

inline Outcome quiver_cartan(const json& input) {
  Quiver Q = input_quiver(input);
  return Outcome{0, json{{"vertices", Q.vertices()}, {"cartan", to_json(cartan_matrix(Q))}}};
}

inline Outcome quiver_dim(const json& input) {
  Quiver Q = input_quiver(input);
  return Outcome{0, json{{"dim", nakajima_dim(Q, io::int_list(io::at(input, "v")), io::int_list(io::at(input, "w")))}}};
}

inline Outcome quiver_regular(const json& input) {
  Quiver Q = input_quiver(input);
  auto v = io::int_list(io::at(input, "v"));
  std::vector<GaussianRational> lambda;
  for (const auto& x : io::get_array(input, "lambda")) {
    if (x.is_array()) {
      if (x.size() != 2) fail(ErrorKind::parse, "complex lambda entries are [re, im]");
      lambda.push_back(GaussianRational{io::get_rational(x[0]), io::get_rational(x[1])});
    } else {
      lambda.push_back(GaussianRational{io::get_rational(x), 0});
    }
  }
  std::vector<mpq_class> theta(Q.num_vertices(), 0);
  if (input.contains("theta")) theta = io::rational_list(input.at("theta"));
  auto res = roots_and_regularity(Q, v, lambda, theta);
  return Outcome{res.regular ? 0 : 1, json{{"roots", res.roots}, {"regular", res.regular}}};
}

// ---- stability ----

template <Field F>
json stability_json(const StabilityResult<F>& res, const std::vector<std::string>& labels) {
  json rep{{"verdict", to_string(res.verdict)}, {"method", res.method}, {"reason", res.reason}};
  rep["witness"] = res.witness ? to_json(*res.witness, labels) : json(nullptr);
  return rep;
}

inline int verdict_exit(Verdict v) { return v == Verdict::unstable ? 1 : 0; }

inline std::set<std::string> framing_arg(const json& input) {
  std::set<std::string> fr;
  if (!input.contains("framing")) return fr;
  for (const auto& f : input.at("framing")) {
    if (!f.is_string()) fail(ErrorKind::parse, "framing vertices are labels");
    fr.insert(f.get<std::string>());
  }
  return fr;
}

inline Outcome stability_cmd(const json& input, bool brute) {
  return with_field(input, [&](const auto& K) -> Outcome {
    using F = std::decay_t<decltype(K)>;
    auto rep = representation_from_json(io::at(input, "representation"), K);
    auto theta = io::rational_list(io::at(input, "theta"));
    auto framing = framing_arg(input);
    if (!brute && !framing.empty()) {
      auto res = is_semistable_framed(rep, framing, theta, standard_criteria<F>());
      auto labels = translate_cb(rep, framing).quiver().vertices();
      return Outcome{verdict_exit(res.verdict), stability_json(res, labels)};
    }
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (framing.empty()) {
        auto res = brute_force_semistable(rep, theta);
        return Outcome{verdict_exit(res.verdict), stability_json(res, rep.quiver().vertices())};
      }
      auto cb = translate_cb(rep, framing);
      auto res = brute_force_semistable(cb, extended_theta(cb, theta));
      auto gf = brute_force_gf_side(rep, framing, theta);
      json out = stability_json(res, cb.quiver().vertices());
      out["gf_side"] = stability_json(gf, rep.quiver().vertices());
      out["agree"] = gf.verdict == res.verdict;
      return Outcome{verdict_exit(res.verdict), out};
    } else {
      fail(ErrorKind::needs_finite_field, "enumeration needs a prime field");
    }
  });
}

// ---- sample ----

template <Field F>
Outcome sample_with(const F& K, const Options& o) {
  Rng rng(o.seed);
  auto need = [](long long x, const char* name) {
    if (x < 0) fail(ErrorKind::parse, std::string("sample needs --") + name);
    return static_cast<std::size_t>(x);
  };
  if (o.kind == "p2") return Outcome{0, to_json(sample_p2(K, need(o.r, "r"), need(o.c_given ? o.c : -1, "c"), rng)), true};
  if (o.kind == "hirz1") return Outcome{0, to_json(sample_hirz1(K, need(o.n, "n"), need(o.c_given ? o.c : -1, "c"), rng)), true};
  if (o.kind == "minimal") {
    const std::size_t n = need(o.n, "n"), r = need(o.r, "r"), a = need(o.a, "a");
    auto inv = minimal_invariants(o.n, o.r, o.a, o.c_given ? o.c : o.n * o.a * (1 - o.a) / 2);
    if (!inv.nonempty)
      return Outcome{1, json{{"error", "empty"},
                             {"message", "moduli space is empty: c + na(a-1)/2 = " + std::to_string(inv.k1) + " < 0"},
                             {"invariants", to_json(inv)}}};
    if (inv.c != inv.C_m)
      return Outcome{0, json{{"point", nullptr}, {"invariants", to_json(inv)}, {"message", "nonempty, but c exceeds the minimal value C_m"}}};
    return Outcome{0, to_json(sample_minimal(K, n, r, a, rng)), true};
  }
  if (o.kind == "flag") {
    std::vector<std::size_t> v;
    for (auto x : o.v) v.push_back(need(x, "v"));
    const std::size_t d = o.d < 0 ? v.size() : need(o.d, "d");
    return Outcome{0, to_json(sample_flag(K, d, need(o.n, "n"), need(o.u, "u"), v, rng)), true};
  }
  if (o.kind == "blowup") {
    if (!o.c_given) fail(ErrorKind::parse, "sample blowup needs --c");
    return Outcome{0, to_json(sample_blowup(K, need(o.r, "r"), o.avec, o.c, rng)), true};
  }
  fail(ErrorKind::parse, "unknown sample kind '" + o.kind + "' (p2, hirz1, minimal, flag, blowup)");
}

inline Outcome sample_cmd(const Options& o) {
  if (o.prime != 0) return sample_with(PrimeField(o.prime), o);
  return sample_with(RationalField{}, o);
}

inline void print(const Outcome& res, const Options& o, std::ostream& out) {
  if (o.format == "table" && !res.raw && res.report.is_object()) {
    for (const auto& [k, v] : res.report.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return;
  }
  out << res.report.dump(2) << "\n";
}

}  // namespace cli

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

namespace cli {

inline std::size_t thread_count() {
  const char* env = std::getenv("QUIVKIT_THREADS");
  if (env == nullptr) return 1;
  try {
    long n = std::stol(env);
    return n < 1 ? 1 : static_cast<std::size_t>(n);
  } catch (...) {
    return 1;
  }
}

inline std::vector<std::string> split_words(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

// Manifest: {"entries": [{"command": "validate p2", "input": "d.json",
// "args": [...], "expect": 0}]}; paths are relative to the manifest.
inline Outcome batch_cmd(const Options& o, std::istream& in) {
  json manifest = load_input(o, in);
  const json& entries = manifest.is_array() ? manifest : io::get_array(manifest, "entries");
  std::filesystem::path base = o.in.empty() || o.in == "-" ? std::filesystem::current_path() : std::filesystem::path(o.in).parent_path();
  struct Slot {
    int exit = 0;
    int expect = 0;
    std::string command, out, err;
  };
  std::vector<Slot> slots(entries.size());
  std::vector<std::vector<std::string>> argvs(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& e = entries[k];
    const json& c = io::at(e, "command");
    if (!c.is_string()) fail(ErrorKind::parse, "entry command must be a string");
    slots[k].command = c.get<std::string>();
    argvs[k] = split_words(slots[k].command);
    if (e.contains("input")) {
      std::filesystem::path p = e.at("input").get<std::string>();
      argvs[k].push_back("--in");
      argvs[k].push_back((p.is_absolute() ? p : base / p).string());
    }
    if (e.contains("args"))
      for (const auto& a : e.at("args")) argvs[k].push_back(a.is_string() ? a.get<std::string>() : a.dump());
    if (e.contains("expect")) slots[k].expect = e.at("expect").get<int>();
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < slots.size();) {
      std::istringstream none;
      std::ostringstream so, se;
      slots[k].exit = run_command(argvs[k], none, so, se);
      slots[k].out = so.str();
      slots[k].err = se.str();
    }
  };
  std::vector<std::thread> pool;
  const std::size_t nt = std::min(thread_count(), std::max<std::size_t>(slots.size(), 1));
  for (std::size_t t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json list = json::array();
  std::size_t passed = 0;
  bool malformed = false;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Slot& s = slots[k];
    bool pass = s.exit == s.expect;
    passed += pass ? 1 : 0;
    if (!pass && s.exit == 2) malformed = true;
    json report;
    try {
      report = json::parse(s.out);
    } catch (const json::exception&) {
      report = s.out;
    }
    json entry{{"index", k}, {"command", s.command}, {"exit", s.exit}, {"expect", s.expect}, {"pass", pass}, {"report", report}};
    if (!s.err.empty()) entry["error"] = s.err;
    list.push_back(entry);
  }
  json rep{{"total", slots.size()}, {"passed", passed}, {"failed", slots.size() - passed}, {"entries", list}};
  int code = passed == slots.size() ? 0 : (malformed ? 2 : 1);
  return Outcome{code, rep};
}

}  // namespace cli

inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace cli;
  Options o;
  CLI::App app{"quivkit: exact ADHM data, quiver stability and minimal-case normal forms", "quivkit"};
  app.require_subcommand(1);
  std::string verb;

  auto io_opts = [&](CLI::App* sc) {
    sc->add_option("--in", o.in, "input JSON file, or - for stdin");
    sc->add_option("--data", o.data, "inline input JSON");
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sc->add_flag("--timing", o.timing, "report wall time in the output");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sc = parent->add_subcommand(name, help);
    io_opts(sc);
    sc->callback([&verb, parent, name]() { verb = parent->get_name() + " " + name; });
    return sc;
  };

  auto* validate = app.add_subcommand("validate", "check an ADHM datum")->require_subcommand(1);
  leaf(validate, "p2", "P^2 datum: moment equation and stability");
  leaf(validate, "hirz1", "rank-one Hirzebruch datum: (P1)-(P3)");
  leaf(validate, "blowup", "blowup datum: quadratic equation");

  auto* minimal = app.add_subcommand("minimal", "minimal-case monads")->require_subcommand(1);
  auto* inv = leaf(minimal, "invariants", "k-vector, C_m, nonemptiness and moduli dimension");
  inv->add_option("--n", o.n)->required();
  inv->add_option("--r", o.r)->required();
  inv->add_option("--a", o.a)->required();
  inv->add_option("--c", o.c)->required();
  leaf(minimal, "embed", "immersion j of a MinimalPoint");
  leaf(minimal, "normalize", "normal form of a MonadPoint");
  leaf(minimal, "fingerprint", "canonical GL(a,r)-orbit representative");

  auto* flag = app.add_subcommand("flag", "representations of F_{d,n}")->require_subcommand(1);
  leaf(flag, "stable", "theta+ stability");
  leaf(flag, "extract", "flag of subspaces")->add_flag("--require-stable", o.require_stable);
  leaf(flag, "from-minimal", "FlagRep of a MinimalPoint");
  leaf(flag, "omega", "symplectic form on tangent vectors");

  auto* quiver = app.add_subcommand("quiver", "quiver combinatorics")->require_subcommand(1);
  leaf(quiver, "derive", "double, framed, GF, CB, moment and flag quivers")->add_option("--kind", o.kind);
  leaf(quiver, "cartan", "Cartan matrix");
  leaf(quiver, "dim", "quiver variety dimension");
  leaf(quiver, "regular", "roots in the box and v-regularity");

  auto* stab = app.add_subcommand("stability", "slope stability")->require_subcommand(1);
  leaf(stab, "check", "criteria first, enumeration otherwise");
  leaf(stab, "brute", "exhaustive enumeration on both sides");

  auto* sample = app.add_subcommand("sample", "seeded random data");
  sample->add_option("kind", o.kind, "p2, hirz1, minimal, flag or blowup")->required();
  sample->add_option("--n", o.n);
  sample->add_option("--r", o.r);
  sample->add_option("--a", o.avec, "a (minimal) or a_1 .. a_n (blowup)");
  sample->add_option("--c", o.c);
  sample->add_option("--d", o.d);
  sample->add_option("--u", o.u);
  sample->add_option("--v", o.v);
  sample->add_option("--prime", o.prime, "sample over F_p instead of Q");
  sample->add_option("--seed", o.seed);
  sample->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  sample->add_flag("--timing", o.timing);
  sample->callback([&]() { verb = "sample"; });

  auto* batch = app.add_subcommand("batch", "run a manifest of commands");
  io_opts(batch);
  batch->callback([&]() { verb = "batch"; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }
  o.c_given = sample->count("--c") > 0 || inv->count("--c") > 0;
  if (verb == "sample" && o.avec.size() == 1) o.a = o.avec[0];

  auto t0 = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (verb == "minimal invariants") res = minimal_invariants_cmd(o);
    else if (verb == "sample") res = sample_cmd(o);
    else if (verb == "batch") res = batch_cmd(o, in);
    else {
      json input = load_input(o, in);
      if (verb == "validate p2") res = validate_p2(input);
      else if (verb == "validate hirz1") res = validate_hirz1(input);
      else if (verb == "validate blowup") res = validate_blowup(input);
      else if (verb == "minimal embed") res = minimal_embed(input);
      else if (verb == "minimal normalize") res = minimal_normalize(input);
      else if (verb == "minimal fingerprint") res = minimal_fingerprint(input);
      else if (verb == "flag stable") res = flag_stable(input);
      else if (verb == "flag extract") res = flag_extract(input, o.require_stable);
      else if (verb == "flag from-minimal") res = flag_from_minimal(input);
      else if (verb == "flag omega") res = flag_omega(input);
      else if (verb == "quiver derive") res = quiver_derive(input, o.kind);
      else if (verb == "quiver cartan") res = quiver_cartan(input);
      else if (verb == "quiver dim") res = quiver_dim(input);
      else if (verb == "quiver regular") res = quiver_regular(input);
      else if (verb == "stability check") res = stability_cmd(input, false);
      else if (verb == "stability brute") res = stability_cmd(input, true);
      else {
        err << "unknown command\n" << app.help();
        return 2;
      }
    }
  } catch (const Error& e) {
    res = Outcome{exit_code(e.kind()), json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}};
    err << e.what() << "\n";
  } catch (const json::exception& e) {
    res = Outcome{2, json{{"error", "ParseError"}, {"message", e.what()}}};
    err << e.what() << "\n";
  }
  if (o.timing && res.report.is_object()) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    res.report["timing_us"] = us;
  }
  print(res, o, out);
  return res.exit;
}

}  // namespace quivkit
