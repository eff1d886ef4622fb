#include "affhecke/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "affhecke/acceptance.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/io.hpp"

namespace affhecke {

namespace {

struct Options {
  std::string datum = "sl2";
  std::string format;
  int bound = 3;
  std::string out_path;
  std::string a, b, elt, mu, m, h;
  std::string side = "hecke", op = "bs", sign = "sgn", scale = "minus_v";
  int s = 1;
  std::vector<int> values;
};

std::string format_or(const Options& o, const std::string& fallback) {
  if (o.format.empty()) return fallback;
  if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
  return o.format;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required option ") + flag);
}

void json_only(const Options& o) {
  if (format_or(o, "json") != "json") throw InputError("this command only produces JSON");
}

Json module_json(const std::string& side, const GroupAlgebraElt& g) { return {{"side", side}, {"terms", ga_to_json(g)}}; }

std::shared_ptr<const RootDatum> datum_of(const Options& o) { return load_datum(o.datum); }

int simple_index(const Options& o, const RootDatum& d) {
  if (o.s < 1 || o.s > d.semisimple_rank())
    throw InputError("--s must lie in 1.." + std::to_string(d.semisimple_rank()));
  return o.s - 1;
}

Partition partition_of(const std::vector<int>& values) {
  std::vector<int> parts = values;
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in affine Weyl groups, affine Hecke algebras and Springer combinatorics",
               "affhecke"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--datum", o.datum, "preset (sl2, pgl2, gl2, sl3, c2) or path to a datum JSON file");
  app.add_option("--format", o.format, "json or csv");
  app.add_option("--bound", o.bound, "norm or length bound for sweeps");
  app.add_option("--out", o.out_path, "write the result to this file");

  std::ostringstream result;
  std::function<void()> action;
  auto set = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&action, f] { action = f; }); };

  auto* datum = app.add_subcommand("datum", "root data")->require_subcommand(1);
  set(datum->add_subcommand("validate", "validate a datum and print its summary"), [&] {
    json_only(o);
    const WeylGroup W(datum_of(o));
    result << datum_report(W).dump(2) << "\n";
  });

  auto* wext = app.add_subcommand("wext", "extended affine Weyl group")->require_subcommand(1);
  auto* wlen = wext->add_subcommand("length", "Iwahori-Matsumoto length");
  wlen->add_option("--elt", o.elt, "element (JSON or word)")->required();
  set(wlen, [&] {
    json_only(o);
    const AffineWeylGroup G(datum_of(o));
    result << G.length(parse_affine_arg(G, o.elt)) << "\n";
  });
  auto* wword = wext->add_subcommand("word", "reduced word omega * s_1 ... s_k");
  wword->add_option("--elt", o.elt, "element (JSON or word)")->required();
  set(wword, [&] {
    json_only(o);
    const AffineWeylGroup G(datum_of(o));
    const AffineElt x = parse_affine_arg(G, o.elt);
    const auto rw = G.reduced_word(x);
    Json names = Json::array();
    for (int g : rw.word) names.push_back(G.generators()[static_cast<std::size_t>(g)].name);
    result << Json{{"omega", affine_to_json(G, rw.omega)}, {"word", names}, {"length", G.length(x)}}.dump() << "\n";
  });
  auto* wmul = wext->add_subcommand("mul", "product of two elements");
  wmul->add_option("--a", o.a)->required();
  wmul->add_option("--b", o.b)->required();
  set(wmul, [&] {
    json_only(o);
    const AffineWeylGroup G(datum_of(o));
    result << affine_to_json(G, G.mul(parse_affine_arg(G, o.a), parse_affine_arg(G, o.b))).dump() << "\n";
  });

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra")->require_subcommand(1);
  auto hecke_cmd = [&](const char* name, const char* help, std::function<Json(const HeckeAlgebra&)> f) {
    auto* sub = hecke->add_subcommand(name, help);
    set(sub, [&, f] {
      json_only(o);
      const HeckeAlgebra H(datum_of(o));
      result << f(H).dump() << "\n";
    });
    return sub;
  };
  auto* hmul = hecke_cmd("mul", "product", [&](const HeckeAlgebra& H) {
    return hecke_to_json(H.group(), H.mul(parse_hecke_arg(H, o.a), parse_hecke_arg(H, o.b)));
  });
  hmul->add_option("--a", o.a)->required();
  hmul->add_option("--b", o.b)->required();
  auto* htheta = hecke_cmd("theta", "Bernstein element theta_mu", [&](const HeckeAlgebra& H) {
    return hecke_to_json(H.group(), H.theta(weight_from_json(Json::parse(o.mu), H.datum().rank())));
  });
  htheta->add_option("--mu", o.mu, "coweight, e.g. [1,0]")->required();
  auto* hkl = hecke_cmd("kl", "Kazhdan-Lusztig basis element b_x", [&](const HeckeAlgebra& H) {
    return hecke_to_json(H.group(), H.kl_b(parse_affine_arg(H.group(), o.elt)));
  });
  hkl->add_option("--elt", o.elt)->required();
  auto* hcenter = hecke_cmd("center", "central element z_mu", [&](const HeckeAlgebra& H) {
    return hecke_to_json(H.group(), H.z_center(weight_from_json(Json::parse(o.mu), H.datum().rank())));
  });
  hcenter->add_option("--mu", o.mu, "dominant coweight")->required();
  auto* hbern = hecke_cmd("bernstein", "Bernstein normal form sum c delta_w theta_mu", [&](const HeckeAlgebra& H) {
    return bernstein_to_json(H.group(), H.to_bernstein(parse_hecke_arg(H, o.a)));
  });
  hbern->add_option("--a", o.a)->required();
  auto* hbar = hecke_cmd("bar", "bar involution", [&](const HeckeAlgebra& H) {
    return hecke_to_json(H.group(), H.bar(parse_hecke_arg(H, o.a)));
  });
  hbar->add_option("--a", o.a)->required();

  auto* mod = app.add_subcommand("mod", "antispherical and K-theory modules")->require_subcommand(1);
  auto* mact = mod->add_subcommand("act", "act on a module element");
  mact->add_option("--side", o.side, "hecke or ktheory");
  mact->add_option("--op", o.op, "bs, qs or h");
  mact->add_option("--sign", o.sign, "sgn or triv (for --op h)");
  mact->add_option("--scale", o.scale, "raw or minus_v (for --op qs)");
  mact->add_option("--s", o.s, "simple reflection, 1-based");
  mact->add_option("--m", o.m, "module element")->required();
  mact->add_option("--hecke", o.h, "Hecke element (for --op h)");
  set(mact, [&] {
    json_only(o);
    const auto d = datum_of(o);
    if (o.side != "hecke" && o.side != "ktheory") throw InputError("--side must be hecke or ktheory");
    const Side side = o.side == "hecke" ? Side::Hecke : Side::KTheory;
    const GroupAlgebraElt m = parse_module_arg(o.m, d->rank());
    GroupAlgebraElt r;
    if (o.op == "bs") {
      if (side != Side::Hecke) throw InputError("--op bs acts on the hecke side");
      r = dl_action_bs(ReflectionDatum::hecke_side(*d), simple_index(o, *d), m);
    } else if (o.op == "qs") {
      if (side != Side::KTheory) throw InputError("--op qs acts on the ktheory side");
      if (o.scale != "raw" && o.scale != "minus_v") throw InputError("--scale must be raw or minus_v");
      r = ktheory_action_qs(ReflectionDatum::ktheory_side(*d), simple_index(o, *d), m,
                            o.scale == "raw" ? QsScale::Raw : QsScale::MinusV);
    } else if (o.op == "h") {
      if (side != Side::Hecke) throw InputError("--op h acts on the hecke side");
      if (o.sign != "sgn" && o.sign != "triv") throw InputError("--sign must be sgn or triv");
      require(o.h, "--hecke");
      const HeckeAlgebra H(d);
      r = induced_action(H, parse_hecke_arg(H, o.h), m, o.sign == "sgn" ? SignChar::Sgn : SignChar::Triv);
    } else {
      throw InputError("--op must be bs, qs or h");
    }
    result << module_json(o.side, r).dump() << "\n";
  });
  set(mod->add_subcommand("intertwine", "sweep the four theta -> e^{lambda +- rho} conventions"), [&] {
    const auto d = datum_of(o);
    const auto rep = intertwiner_check(*d, lattice_box(d->rank(), o.bound));
    if (format_or(o, "json") == "csv") {
      result << "convention,rho_sign,alpha_sign,checks,failures,passed\n";
      for (const auto& r : rep.results)
        result << to_string(r.convention) << "," << r.convention.rho_sign << "," << r.convention.alpha_sign << ","
               << r.checks << "," << r.failures << "," << (r.passed() ? "true" : "false") << "\n";
      return;
    }
    Json conv = Json::array(), passing = Json::array();
    for (const auto& r : rep.results)
      conv.push_back({{"convention", to_string(r.convention)},
                      {"rho_sign", r.convention.rho_sign},
                      {"alpha_sign", r.convention.alpha_sign},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"passed", r.passed()}});
    for (const auto& c : rep.passing()) passing.push_back(to_string(c));
    result << Json{{"datum", rep.datum}, {"bound", o.bound}, {"conventions", conv}, {"passing", passing}}.dump(2)
           << "\n";
  });

  auto* springer = app.add_subcommand("springer", "nilpotent orbits of gl_n")->require_subcommand(1);
  auto* stable = springer->add_subcommand("table", "orbit and Springer fiber dimensions for all partitions of n");
  stable->add_option("n", o.values, "n")->required()->expected(1);
  set(stable, [&] {
    const int n = o.values.at(0);
    const auto rows = springer_table(n);
    const bool divides = codim_divides_nilcone(n);
    if (format_or(o, "csv") == "csv") {
      result << "partition,dim_orbit,codim,fiber_dim,n_components\n";
      for (const auto& r : rows)
        result << "\"" << r.partition.to_string() << "\"," << r.dim_orbit << "," << r.codim << "," << r.fiber_dim << ","
               << r.n_components << "\n";
      err << "codimensions divide dim N = " << nilcone_dim(n) << ": " << (divides ? "yes" : "no") << "\n";
      return;
    }
    Json table = Json::array();
    for (const auto& r : rows)
      table.push_back({{"partition", r.partition.parts()},
                       {"dim_orbit", r.dim_orbit},
                       {"codim", r.codim},
                       {"fiber_dim", r.fiber_dim},
                       {"n_components", r.n_components}});
    result << Json{{"n", n}, {"rows", table}, {"codim_divides_nilcone", divides}}.dump(2) << "\n";
  });
  auto* srs = springer->add_subcommand("rs", "Robinson-Schensted tableaux of a permutation");
  srs->add_option("w", o.values, "permutation in one-line notation")->required();
  set(srs, [&] {
    json_only(o);
    const auto [p, q] = rs(o.values);
    result << Json{{"P", tableau_to_json(p)}, {"Q", tableau_to_json(q)}}.dump() << "\n";
  });
  auto* ssyt = springer->add_subcommand("syt", "number of standard tableaux of a shape");
  ssyt->add_option("parts", o.values, "partition parts")->required();
  set(ssyt, [&] {
    json_only(o);
    result << syt_count(partition_of(o.values)) << "\n";
  });

  auto* chr = app.add_subcommand("char", "Weyl character of a dominant weight");
  chr->add_option("--weight", o.mu, "dominant weight in X, e.g. [1,0]")->required();
  set(chr, [&] {
    json_only(o);
    const WeylGroup W(datum_of(o));
    result << ga_to_json(weyl_character(W, weight_from_json(Json::parse(o.mu), W.datum().rank()))).dump() << "\n";
  });

  bool selftest_failed = false;
  set(app.add_subcommand("selftest", "run the acceptance suite"), [&] {
    const auto results = run_acceptance([&](const CriterionResult& r) { out << format_result(r) << std::endl; });
    for (const auto& r : results) selftest_failed = selftest_failed || !r.passed;
  });

  try {
    app.parse(argc, argv);
    if (!action) throw InputError("no command given");
    action();
  } catch (const CLI::ParseError& e) {
    // --help and --version are successes; every other parse failure is bad input.
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return 1;
    }
    f << result.str();
  } else {
    out << result.str();
  }
  return selftest_failed ? 2 : 0;
}

}  // namespace affhecke
