#include "coxdatum/io.hpp"

#include <fstream>
#include <sstream>

#include "coxdatum/errors.hpp"

namespace coxdatum {

namespace {

std::string side_label(Side side) { return std::to_string(side_number(side)); }

Matrix matrix_from_json(const json& j, const Field& field, const char* what) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, std::string(what) + " must be a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " rows must be arrays");
    rows.push_back(vec_from_json(row, field));
    if (rows.back().size() != rows.front().size()) {
      throw Error(ErrorKind::Parse, std::string(what) + " rows have different lengths");
    }
  }
  return Matrix::from_rows(rows);
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

std::string sign_label(VectorSign s) { return std::string(to_string(s)); }

VectorSign sign_from_label(const std::string& s) {
  if (s == "positive") return VectorSign::Positive;
  if (s == "negative") return VectorSign::Negative;
  if (s == "zero") return VectorSign::Zero;
  if (s == "mixed") return VectorSign::Mixed;
  throw Error(ErrorKind::Parse, "unknown sign '" + s + "'");
}

json witness_to_json(const CoxeterDatum& d, const Witness& w) {
  return {{"word", word_to_json(d, w.word)}, {"simple", d.label(w.simple)}};
}

Witness witness_from_json(const CoxeterDatum& d, const json& j) {
  return {word_from_json(d, j.at("word")), d.index_of(j.at("simple").get<std::string>())};
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

}  // namespace

json to_json(const Scalar& x) {
  if (x.is_exact()) return x.to_string();
  return x.to_double();
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const Scalar& x : v) out.push_back(to_json(x));
  return out;
}

Scalar scalar_from_json(const json& j, const Field& field) {
  if (field.mode() == Mode::Exact) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return field.from_int(j.get<long>());
    throw Error(ErrorKind::Parse, "exact mode expects rationals as \"p/q\" strings, got " + j.dump());
  }
  if (j.is_number()) return field.from_double(j.get<double>());
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    try {
      std::size_t used = 0;
      const double x = std::stod(text, &used);
      if (used == text.size()) return field.from_double(x);
    } catch (const std::exception&) {
    }
    return field.from_double(parse_rational(text).get_d());
  }
  throw Error(ErrorKind::Parse, "expected a number, got " + j.dump());
}

Vec vec_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of scalars");
  Vec out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, field));
  return out;
}

CoxeterDatum parse_datum(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "datum must be a JSON object");
  const std::string mode = doc.value("mode", std::string("exact"));
  Field field = Field::exact();
  if (mode == "float") {
    double eps = Field::kDefaultEpsilon;
    if (doc.contains("epsilon")) {
      if (!doc["epsilon"].is_number() || doc["epsilon"].get<double>() <= 0) {
        throw Error(ErrorKind::Parse, "epsilon must be a positive number");
      }
      eps = doc["epsilon"].get<double>();
    }
    field = Field::floating(eps);
  } else if (mode != "exact") {
    throw Error(ErrorKind::Parse, "mode must be \"exact\" or \"float\"");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw Error(ErrorKind::Parse, "missing generators array");
  }
  std::vector<std::string> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error(ErrorKind::Parse, "generator labels must be strings");
    gens.push_back(g.get<std::string>());
  }
  if (!doc.contains("pairing")) throw Error(ErrorKind::Parse, "missing pairing matrix");
  Matrix a = matrix_from_json(doc["pairing"], field, "pairing");
  std::optional<ConcreteRealization> real;
  if (doc.contains("realization") && !doc["realization"].is_null()) {
    const json& r = doc["realization"];
    ConcreteRealization cr;
    cr.p1 = matrix_from_json(r.at("P1"), field, "P1");
    cr.p2 = matrix_from_json(r.at("P2"), field, "P2");
    cr.form = matrix_from_json(r.at("B"), field, "B");
    real = std::move(cr);
  }
  return CoxeterDatum(std::move(gens), std::move(a), field, std::move(real));
}

CoxeterDatum parse_datum(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_datum(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad datum: ") + e.what());
  }
}

CoxeterDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_datum(std::string_view(text));
}

CoxeterDatum with_epsilon(const CoxeterDatum& d, double epsilon) {
  if (d.field().mode() == Mode::Exact) return d;
  const Field field = Field::floating(epsilon);
  CoxeterDatum out(d.generators(), d.pairing(), field, d.realization());
  return d.is_validated() ? validated(std::move(out)) : out;
}

json coxeter_to_json(const CoxeterMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (Bond b : row) {
      if (is_infinite(b)) {
        r.push_back("inf");
      } else {
        r.push_back(b);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const CoxeterDatum& d) {
  json out;
  out["mode"] = d.field().mode() == Mode::Exact ? "exact" : "float";
  if (d.field().mode() == Mode::Float) out["epsilon"] = d.field().epsilon();
  out["generators"] = d.generators();
  out["pairing"] = matrix_to_json(d.pairing());
  if (const auto& r = d.realization()) {
    out["realization"] = {{"P1", matrix_to_json(r->p1)}, {"P2", matrix_to_json(r->p2)}, {"B", matrix_to_json(r->form)}};
  }
  return out;
}

json word_to_json(const CoxeterDatum& d, const GroupWord& w) { return word_labels(d, w); }

GroupWord word_from_json(const CoxeterDatum& d, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "a word is an array of generator labels");
  return word_from_labels(d, j.get<std::vector<std::string>>());
}

json to_json(const CoxeterDatum& d, const ValidationReport& report) {
  json out;
  out["valid"] = report.valid;
  out["generators"] = d.generators();
  out["mode"] = d.field().mode() == Mode::Exact ? "exact" : "float";
  out["coxeter"] = coxeter_to_json(report.coxeter);
  json violations = json::array();
  for (const auto& v : report.violations) {
    json e{{"condition", v.condition}, {"message", v.message}, {"warning", v.warning}};
    e["s"] = v.s >= 0 ? json(d.label(static_cast<std::size_t>(v.s))) : json(nullptr);
    e["t"] = v.t >= 0 ? json(d.label(static_cast<std::size_t>(v.t))) : json(nullptr);
    violations.push_back(std::move(e));
  }
  out["violations"] = std::move(violations);
  auto c5 = [](const std::optional<C5Result>& r) -> json {
    if (!r) return nullptr;
    json j;
    switch (r->verdict) {
      case C5Verdict::Certified: j["verdict"] = "Certified"; j["functional"] = to_json(r->functional); break;
      case C5Verdict::Violated: j["verdict"] = "Violated"; j["combination"] = to_json(r->combination); break;
      case C5Verdict::Undetermined: j["verdict"] = "Undetermined"; break;
    }
    return j;
  };
  out["c5"] = {{"side1", c5(report.c5_side1)}, {"side2", c5(report.c5_side2)}};
  out["spans_both"] = report.spans_both;
  return out;
}

json to_json(const CoxeterDatum& d, const Root& root) {
  json out;
  out["side"] = side_number(root.side);
  out["depth"] = root.depth;
  out["level"] = root.level;
  out["coeffs"] = to_json(root.coeffs);
  out["ray"] = to_json(root.ray.direction());
  out["witness"] = witness_to_json(d, root.witness);
  json alts = json::array();
  for (const auto& w : root.alternates) alts.push_back(witness_to_json(d, w));
  out["alternates"] = std::move(alts);
  out["sign"] = sign_label(root.sign);
  if (root.ambiguous) out["ambiguous"] = true;
  return out;
}

Root root_from_json(const CoxeterDatum& d, const json& j) {
  Root r;
  r.side = side_from_number(j.at("side").get<int>());
  r.depth = j.at("depth").get<long>();
  r.level = j.at("level").get<long>();
  r.coeffs = vec_from_json(j.at("coeffs"), d.field());
  r.witness = witness_from_json(d, j.at("witness"));
  for (const auto& a : j.value("alternates", json::array())) r.alternates.push_back(witness_from_json(d, a));
  r.ray = RayId(r.coeffs, d.field());
  r.sign = sign_from_label(j.at("sign").get<std::string>());
  r.ambiguous = j.value("ambiguous", false);
  return r;
}

json to_json(const CoxeterDatum& d, const RootTable& table) {
  json out;
  out["side"] = side_number(table.side);
  out["max_depth"] = table.max_depth;
  out["mode"] = d.field().mode() == Mode::Exact ? "exact" : "float";
  json roots = json::array();
  for (const auto& r : table.roots) roots.push_back(to_json(d, r));
  out["roots"] = std::move(roots);
  return out;
}

RootTable table_from_json(const CoxeterDatum& d, const json& j) {
  RootTable t;
  t.side = side_from_number(j.at("side").get<int>());
  t.max_depth = j.at("max_depth").get<long>();
  for (const auto& r : j.at("roots")) {
    Root root = root_from_json(d, r);
    t.by_key.emplace(vector_key(root.coeffs, d.field()), t.roots.size());
    t.roots.push_back(std::move(root));
  }
  for (std::size_t i = 0; i < t.roots.size(); ++i) t.by_ray[t.roots[i].ray.key()].push_back(i);
  return t;
}

json to_json(const CoxeterDatum& d, const RootTable& table, const std::vector<ScalarChain>& chains) {
  json out = to_json(d, table);
  json cs = json::array();
  for (const auto& c : chains) {
    json members = json::array();
    for (const auto& m : c.members) {
      json e{{"coeffs", to_json(table.roots[m.root_index].coeffs)},
             {"scale", to_json(m.scale)},
             {"witness", witness_to_json(d, m.witness)}};
      e["self_map"] = m.self_map ? word_to_json(d, *m.self_map) : json(nullptr);
      members.push_back(std::move(e));
    }
    cs.push_back({{"ray", to_json(c.ray.direction())},
                  {"base", to_json(table.roots[c.base_index].coeffs)},
                  {"members", std::move(members)}});
  }
  out["scalar_chains"] = std::move(cs);
  return out;
}

std::string csv_scalar(const Scalar& x) { return x.to_string(); }

std::string csv_vector(const Vec& v) {
  std::vector<std::string> parts;
  for (const Scalar& x : v) parts.push_back(csv_scalar(x));
  return join(parts, ';');
}

std::string table_to_csv(const CoxeterDatum& d, const RootTable& table) {
  std::ostringstream out;
  out << "side,depth,level,coeffs,ray,witness_word,witness_simple,sign\n";
  for (const auto& r : table.roots) {
    out << side_label(r.side) << ',' << r.depth << ',' << r.level << ',' << csv_vector(r.coeffs) << ','
        << csv_vector(r.ray.direction()) << ',' << join(word_labels(d, r.witness.word), ';') << ','
        << d.label(r.witness.simple) << ',' << to_string(r.sign) << '\n';
  }
  return out.str();
}

json to_json(const CoxeterDatum& d, const ComparisonReport& report, const RootTable& table) {
  json out;
  out["violations"] = report.violations();
  out["support_match"] = report.support_match;
  json coeffs = json::array();
  for (const auto& r : report.coefficients) {
    json e{{"root", to_json(table.roots[r.root_index].coeffs)},
           {"generator", d.label(r.generator)},
           {"x", to_json(r.x)},
           {"x_prime", to_json(r.x_prime)},
           {"x_classical", to_json(r.x_classical)},
           {"product", to_json(r.product)},
           {"slack", to_json(r.slack)},
           {"inequality", r.inequality},
           {"sign_classical", r.sign_classical},
           {"sign_paired", r.sign_paired},
           {"at_least_one", r.at_least_one},
           {"brink", r.brink},
           {"one_iff_one", r.one_iff_one}};
    e["quantized"] = r.quantized ? json(*r.quantized) : json(nullptr);
    e["nearest_candidate"] = r.nearest_candidate ? to_json(*r.nearest_candidate) : json(nullptr);
    e["ok"] = r.ok();
    coeffs.push_back(std::move(e));
  }
  out["coefficients"] = std::move(coeffs);
  json pairs = json::array();
  for (const auto& p : report.pairings) {
    json e{{"first", to_json(table.roots[p.first].coeffs)},
           {"second", to_json(table.roots[p.second].coeffs)},
           {"left_12", to_json(p.left_12)},
           {"left_21", to_json(p.left_21)},
           {"lhs", to_json(p.lhs)},
           {"rhs", to_json(p.rhs)},
           {"inequality", p.inequality},
           {"equality", p.equality},
           {"sign_symmetric", p.sign_symmetric}};
    e["sign_classical"] = p.sign_classical ? json(*p.sign_classical) : json(nullptr);
    e["ok"] = p.ok();
    pairs.push_back(std::move(e));
  }
  out["pairings"] = std::move(pairs);
  return out;
}

std::string report_to_csv(const CoxeterDatum& d, const ComparisonReport& report, const RootTable& table) {
  std::ostringstream out;
  out << "kind,root,other,generator,x,x_prime,x_classical,lhs,rhs,ok\n";
  for (const auto& r : report.coefficients) {
    out << "coefficient," << csv_vector(table.roots[r.root_index].coeffs) << ",," << d.label(r.generator) << ','
        << csv_scalar(r.x) << ',' << csv_scalar(r.x_prime) << ',' << csv_scalar(r.x_classical) << ','
        << csv_scalar(r.product) << ',' << csv_scalar(r.x_classical * r.x_classical) << ','
        << (r.ok() ? "true" : "false") << '\n';
  }
  for (const auto& p : report.pairings) {
    out << "pairing," << csv_vector(table.roots[p.first].coeffs) << ',' << csv_vector(table.roots[p.second].coeffs)
        << ",,,,," << csv_scalar(p.lhs) << ',' << csv_scalar(p.rhs) << ',' << (p.ok() ? "true" : "false") << '\n';
  }
  return out.str();
}

json to_json(const CoxeterDatum& d, const ConeVerdict& verdict) {
  json out;
  out["status"] = std::string(to_string(verdict.status));
  out["witness"] = word_to_json(d, verdict.witness);
  out["budget"] = verdict.budget;
  if (verdict.ambiguous) out["ambiguous"] = true;
  json steps = json::array();
  for (const auto& s : verdict.trace) steps.push_back({{"s", d.label(s.generator)}, {"f_values", to_json(s.values)}});
  out["steps"] = std::move(steps);
  return out;
}

ConeVerdict verdict_from_json(const CoxeterDatum& d, const json& j) {
  ConeVerdict v;
  const std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (ConeStatus s : {ConeStatus::InTitsCone, ConeStatus::InPSharp, ConeStatus::InDualCone,
                       ConeStatus::NotDeterminedUpTo, ConeStatus::RejectedWitness}) {
    if (to_string(s) == status) {
      v.status = s;
      known = true;
    }
  }
  if (!known) throw Error(ErrorKind::Parse, "unknown verdict status '" + status + "'");
  v.witness = word_from_json(d, j.at("witness"));
  v.budget = j.value("budget", 0L);
  v.ambiguous = j.value("ambiguous", false);
  for (const auto& s : j.value("steps", json::array())) {
    v.trace.push_back({d.index_of(s.at("s").get<std::string>()), vec_from_json(s.at("f_values"), d.field())});
  }
  return v;
}

json to_json(const CoxeterDatum& d, const Refutation& refutation) {
  json out;
  out["status"] = std::string(to_string(refutation.status));
  out["rejected_side"] = side_number(refutation.rejected);
  out["witness"] = word_to_json(d, refutation.witness);
  out["epsilon"] = to_json(refutation.epsilon);
  out["bound"] = refutation.bound;
  json steps = json::array();
  for (const auto& s : refutation.steps) {
    steps.push_back({{"s", d.label(s.generator)}, {"coeffs", to_json(s.x)}, {"z", to_json(s.z)}, {"z_moved", s.z_moved}});
  }
  out["steps"] = std::move(steps);
  return out;
}

json to_json(const CoxeterDatum& d, const Rank2DualCones& cones) {
  auto planar = [](const PlanarCone& c) {
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back(to_json(r));
    return json{{"zero_cone", c.rays.empty()}, {"extreme_rays", std::move(rays)}};
  };
  return {{"pair", {d.label(cones.r), d.label(cones.s)}},
          {"bond", cones.pair.bond(0, 1)},
          {"side1", planar(cones.side1)},
          {"side2", planar(cones.side2)}};
}

}  // namespace coxdatum
