#include "affhecke/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> p = {
      {"sl2", R"({
  "name": "sl2",
  "rank": 1,
  "simple_roots": [[2]],
  "simple_coroots": [[1]],
  "rho_weight": [1],
  "convention": "X is the character lattice of SL2 (coordinate = multiple of the fundamental weight); the Hecke algebra is built on X^vee = Z alpha^vee"
})"},
      {"pgl2", R"({
  "name": "pgl2",
  "rank": 1,
  "simple_roots": [[1]],
  "simple_coroots": [[2]],
  "convention": "X is the character lattice of PGL2 (X = Z alpha); X^vee = Z varpi with alpha^vee = 2 varpi; no integral rho weight exists"
})"},
      {"gl2", R"({
  "name": "gl2",
  "rank": 2,
  "simple_roots": [[1, -1]],
  "simple_coroots": [[1, -1]],
  "rho_weight": [1, 0],
  "convention": "X = X^vee = Z e1 + Z e2 for GL2 (self-dual); the Hecke algebra is built on X^vee"
})"},
      {"sl3", R"({
  "name": "sl3",
  "rank": 2,
  "simple_roots": [[2, -1], [-1, 2]],
  "simple_coroots": [[1, 0], [0, 1]],
  "rho_weight": [1, 1],
  "convention": "X is the character lattice of SL3 in the fundamental-weight basis; X^vee = coroot lattice in the simple-coroot basis"
})"},
      {"c2", R"({
  "name": "c2",
  "rank": 2,
  "simple_roots": [[1, -1], [0, 2]],
  "simple_coroots": [[1, -1], [0, 1]],
  "rho_weight": [2, 1],
  "convention": "X is the character lattice of Sp4 (type C2) in the standard basis e1, e2; X^vee is its dual with the dual basis"
})"},
  };
  return p;
}

Json bigint_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Removes one of the prefixes, returning true if one matched.
bool strip_prefix(std::string& s, std::initializer_list<const char*> prefixes) {
  for (const char* p : prefixes)
    if (starts_with(s, p)) {
      s = s.substr(std::string(p).size());
      return true;
    }
  return false;
}

std::string strip_braces(const std::string& s) {
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') return trim(s.substr(1, s.size() - 2));
  return s;
}

bool is_varpi(const std::string& s) { return s == "varpi" || s == "ϖ" || s == "omega"; }

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"sl2", "pgl2", "gl2", "sl3", "c2"};
  return names;
}

const std::string& preset_json(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw InputError("unknown preset '" + name + "'");
  return it->second;
}

std::shared_ptr<const RootDatum> datum_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("root datum must be a JSON object");
    if (!j.contains("rank") || !j.contains("simple_roots") || !j.contains("simple_coroots"))
      throw InputError("root datum needs rank, simple_roots and simple_coroots");
    const int rank = j.at("rank").get<int>();
    auto roots = j.at("simple_roots").get<std::vector<Weight>>();
    auto coroots = j.at("simple_coroots").get<std::vector<Weight>>();
    std::optional<Weight> rho;
    if (j.contains("rho_weight") && !j.at("rho_weight").is_null()) rho = j.at("rho_weight").get<Weight>();
    const std::string name = j.value("name", std::string("custom"));
    const std::string convention = j.value("convention", std::string());
    return RootDatum::create(name, rank, std::move(roots), std::move(coroots), std::move(rho), convention);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("root datum: ") + e.what());
  }
}

Json datum_to_json(const RootDatum& d) {
  Json j;
  j["name"] = d.name();
  j["rank"] = d.rank();
  j["simple_roots"] = d.simple_roots();
  j["simple_coroots"] = d.simple_coroots();
  if (d.rho_weight()) j["rho_weight"] = *d.rho_weight();
  if (!d.convention().empty()) j["convention"] = d.convention();
  return j;
}

std::shared_ptr<const RootDatum> load_datum(const std::string& path_or_preset) {
  if (presets().count(path_or_preset)) return datum_from_json(parse_json_text(preset_json(path_or_preset)));
  std::ifstream in(path_or_preset);
  if (!in) throw InputError("'" + path_or_preset + "' is neither a preset nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return datum_from_json(parse_json_text(ss.str()));
}

Json datum_report(const WeylGroup& W) {
  const auto& d = W.datum();
  Json j = datum_to_json(d);
  j["cartan"] = d.cartan();
  j["weyl_group_order"] = W.order();
  j["num_roots"] = d.roots().size();
  Json pos = Json::array();
  for (std::size_t k : d.positive_roots()) pos.push_back(d.roots()[k]);
  j["positive_roots"] = pos;
  Json high = Json::array();
  for (std::size_t k : d.highest_roots()) high.push_back(d.roots()[k]);
  j["highest_roots"] = high;
  j["components"] = d.components();
  j["valid"] = true;
  return j;
}

Weight weight_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InputError("expected a lattice vector, got " + j.dump());
  Weight w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("lattice vector entries must be integers: " + j.dump());
    w.push_back(x.get<std::int64_t>());
  }
  if (w.size() != static_cast<std::size_t>(rank))
    throw InputError("lattice vector " + j.dump() + " should have length " + std::to_string(rank));
  return w;
}

Json lp_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = bigint_to_json(c);
  return j;
}

LaurentPoly lp_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return LaurentPoly(bigint_from_json(j));
  if (!j.is_object()) throw InputError("Laurent polynomial must be an object {exponent: coefficient}");
  std::vector<std::pair<int, BigInt>> terms;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t pos = 0;
      e = std::stoi(k, &pos);
      if (pos != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw InputError("bad exponent '" + k + "' in Laurent polynomial");
    }
    terms.emplace_back(e, bigint_from_json(v));
  }
  return LaurentPoly::from_terms(terms);
}

Json ga_to_json(const GroupAlgebraElt& g) {
  Json j = Json::array();
  for (const auto& [w, c] : g.terms()) j.push_back({{"vector", w}, {"coeff", lp_to_json(c)}});
  return j;
}

GroupAlgebraElt ga_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InputError("module element must be a list of {vector, coeff}");
  GroupAlgebraElt g;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("vector")) throw InputError("module term needs a 'vector' field");
    g.add_term(weight_from_json(t.at("vector"), rank), t.contains("coeff") ? lp_from_json(t.at("coeff")) : LaurentPoly(1));
  }
  return g;
}

Json affine_to_json(const AffineWeylGroup& G, const AffineElt& a) {
  std::vector<int> w;
  for (int i : G.finite().word(a.finite)) w.push_back(i + 1);
  return {{"t", a.translation}, {"w", w}};
}

AffineElt affine_from_json(const AffineWeylGroup& G, const Json& j) {
  if (!j.is_object()) throw InputError("affine element must be an object {\"t\": [...], \"w\": [...]}");
  const int rank = G.datum().rank();
  Weight t = j.contains("t") ? weight_from_json(j.at("t"), rank) : Weight(static_cast<std::size_t>(rank), 0);
  std::vector<int> word;
  if (j.contains("w")) {
    if (!j.at("w").is_array()) throw InputError("'w' must be a list of simple indices");
    for (const auto& x : j.at("w")) {
      if (!x.is_number_integer()) throw InputError("'w' entries must be integers");
      const int i = x.get<int>();
      if (i < 1 || i > G.datum().semisimple_rank())
        throw InputError("simple index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(G.datum().semisimple_rank()));
      word.push_back(i - 1);
    }
  }
  return AffineElt{std::move(t), G.finite().from_word(word)};
}

Json hecke_to_json(const AffineWeylGroup& G, const HeckeElt& h) {
  std::vector<const HeckeElt::Map::value_type*> items;
  for (const auto& kv : h.terms()) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [&](auto* a, auto* b) { return G.output_less(a->first, b->first); });
  Json j = Json::array();
  for (auto* kv : items) j.push_back({{"elt", affine_to_json(G, kv->first)}, {"coeff", lp_to_json(kv->second)}});
  return j;
}

HeckeElt hecke_from_json(const AffineWeylGroup& G, const Json& j) {
  if (j.is_object()) return HeckeElt::delta(affine_from_json(G, j));
  if (!j.is_array()) throw InputError("Hecke element must be a list of {elt, coeff}");
  HeckeElt h;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("elt")) throw InputError("Hecke term needs an 'elt' field");
    h.add_term(affine_from_json(G, t.at("elt")), t.contains("coeff") ? lp_from_json(t.at("coeff")) : LaurentPoly(1));
  }
  return h;
}

Json bernstein_to_json(const AffineWeylGroup& G, const BernsteinElt& b) {
  const auto& W = G.finite();
  std::vector<const BernsteinElt::Map::value_type*> items;
  for (const auto& kv : b.terms()) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [&](auto* a, auto* c) {
    const auto& [wa, ma] = a->first;
    const auto& [wc, mc] = c->first;
    if (W.length(wa) != W.length(wc)) return W.length(wa) < W.length(wc);
    if (W.word(wa) != W.word(wc)) return W.word(wa) < W.word(wc);
    return ma < mc;
  });
  Json j = Json::array();
  for (auto* kv : items) {
    std::vector<int> w;
    for (int i : W.word(kv->first.first)) w.push_back(i + 1);
    j.push_back({{"w", w}, {"mu", kv->first.second}, {"coeff", lp_to_json(kv->second)}});
  }
  return j;
}

Json tableau_to_json(const Tableau& t) { return t.rows; }

AffineElt parse_affine_arg(const AffineWeylGroup& G, const std::string& text) {
  std::string s = trim(text);
  if (s.find('"') != std::string::npos) return affine_from_json(G, parse_json_text(s));
  s = strip_braces(s);
  if (s.empty() || s == "id" || s == "e" || s == "1") return G.identity();
  for (char& c : s)
    if (c == '.' || c == '*' || c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  AffineElt x = G.identity();
  while (in >> tok) {
    if (is_varpi(tok)) {
      x = G.mul(x, G.omega_generator());
      continue;
    }
    if (tok == "id") continue;
    const auto& gens = G.generators();
    auto it = std::find_if(gens.begin(), gens.end(), [&](const SimpleAffineReflection& g) { return g.name == tok; });
    // "s" names the first finite generator in every rank, "s0" the first affine one.
    if (it == gens.end() && tok == "s" && G.datum().semisimple_rank() > 0) it = gens.begin();
    if (it == gens.end() && tok == "s0")
      it = std::find_if(gens.begin(), gens.end(),
                        [](const SimpleAffineReflection& g) { return g.kind == SimpleAffineReflection::Kind::Affine; });
    if (it == gens.end()) throw InputError("unknown generator '" + tok + "'");
    x = G.mul(x, it->elt);
  }
  return x;
}

HeckeElt parse_hecke_arg(const HeckeAlgebra& H, const std::string& text) {
  const auto& G = H.group();
  std::string s = trim(text);
  if (s.empty()) throw InputError("empty Hecke element");
  if (s.front() == '[' || s.front() == '{') return hecke_from_json(G, parse_json_text(s));
  if (strip_prefix(s, {"δ_", "delta_", "d_"})) return H.delta(parse_affine_arg(G, s));
  if (strip_prefix(s, {"b_"})) return H.kl_b(parse_affine_arg(G, s));
  if (strip_prefix(s, {"θ_", "theta_"})) {
    s = strip_braces(s);
    return H.theta(weight_from_json(parse_json_text(s), G.datum().rank()));
  }
  if (s == "δ" || s == "delta") throw InputError("delta needs a subscript, e.g. δ_s");
  return H.delta(parse_affine_arg(G, s));
}

GroupAlgebraElt parse_module_arg(const std::string& text, int rank) {
  std::string s = trim(text);
  if (s.empty()) throw InputError("empty module element");
  if (strip_prefix(s, {"θ_", "theta_", "e^", "e_", "x^"})) {
    s = strip_braces(s);
    if (!s.empty() && s.front() != '[') s = "[" + s + "]";
    return GroupAlgebraElt::monomial(weight_from_json(parse_json_text(s), rank));
  }
  Json j = parse_json_text(s);
  if (j.is_object() && j.contains("terms")) return ga_from_json(j.at("terms"), rank);
  if (j.is_object()) return ga_from_json(Json::array({j}), rank);
  return ga_from_json(j, rank);
}

}  // namespace affhecke
