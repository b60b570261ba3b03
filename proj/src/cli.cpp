#include "hocolim/cli.hpp"

#include "hocolim/hofrac.hpp"
#include "hocolim/nerve.hpp"
#include "hocolim/oracle.hpp"
#include "hocolim/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cli {

using chq::ChainComplex;
using chq::ChainMap;
using chq::Matrix;
using nlohmann::json;

namespace {

// ---------- JSON -> objects ----------

Matrix parse_matrix(const json& rows, std::size_t expect_rows, std::size_t expect_cols,
                    const std::string& where) {
  if (!rows.is_array()) throw ParseError(where + ": matrix must be an array of rows");
  if (rows.size() != expect_rows)
    throw ParseError(where + ": expected " + std::to_string(expect_rows) + " rows");
  Matrix m(expect_rows, expect_cols);
  for (std::size_t i = 0; i < expect_rows; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != expect_cols)
      throw ParseError(where + ": expected " + std::to_string(expect_cols) + " columns");
    for (std::size_t j = 0; j < expect_cols; ++j) {
      const auto& cell = row[j];
      if (cell.is_number_integer())
        m(i, j) = ratlin::Rational(cell.get<long long>());
      else if (cell.is_string())
        m(i, j) = ratlin::parse_rational(cell.get<std::string>());
      else
        throw ParseError(where + ": matrix entries are integers or \"p/q\" strings");
    }
  }
  return m;
}

fincat::FinCategory parse_category(const json& j, const std::string& name) {
  const std::string where = "category " + name;
  if (!j.is_object()) throw ParseError(where + ": not an object");
  const std::size_t objects = j.at("objects").get<std::size_t>();
  std::vector<fincat::MorphismData> morphisms;
  for (const auto& m : j.at("morphisms")) {
    const std::size_t id = m.at("id").get<std::size_t>();
    if (id != morphisms.size())
      throw ParseError(where + ": morphism ids must be dense and in order");
    morphisms.push_back({m.at("src").get<std::size_t>(), m.at("dst").get<std::size_t>()});
  }
  std::vector<std::size_t> identity = j.at("identity").get<std::vector<std::size_t>>();
  std::vector<std::array<std::size_t, 3>> entries;
  if (j.contains("compose"))
    for (const auto& e : j.at("compose")) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError(where + ": compose entries are [g, f, gf] triples");
      entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                         e[2].get<std::size_t>()});
    }
  try {
    fincat::FinCategory cat(objects, std::move(morphisms), std::move(identity), entries);
    if (const auto err = cat.validate()) throw ValidationError(where + ": " + *err);
    return cat;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

ChainComplex parse_complex(const json& j, const std::string& name) {
  const std::string where = "complex " + name;
  if (!j.is_object()) throw ParseError(where + ": not an object");
  const int lo = j.at("lo").get<int>();
  const int hi = j.at("hi").get<int>();
  if (hi < lo) return ChainComplex::zero();
  std::vector<std::size_t> dims(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [key, value] : j.at("dims").items()) {
    const int n = std::stoi(key);
    if (n < lo || n > hi) throw ParseError(where + ": dims entry outside [lo, hi]");
    dims[static_cast<std::size_t>(n - lo)] = value.get<std::size_t>();
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n)
    diffs.push_back(Matrix::zero(dims[static_cast<std::size_t>(n - 1 - lo)],
                                 dims[static_cast<std::size_t>(n - lo)]));
  if (j.contains("d"))
    for (const auto& [key, value] : j.at("d").items()) {
      const int n = std::stoi(key);
      if (n <= lo || n > hi) {
        if (value.is_array() && value.empty()) continue;
        throw ParseError(where + ": differential at degree " + key + " outside (lo, hi]");
      }
      diffs[static_cast<std::size_t>(n - lo - 1)] =
          parse_matrix(value, dims[static_cast<std::size_t>(n - 1 - lo)],
                       dims[static_cast<std::size_t>(n - lo)], where + " d[" + key + "]");
    }
  try {
    return ChainComplex(lo, std::move(dims), std::move(diffs));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

ChainMap parse_map(const json& j, const std::string& name, const Workspace& ws) {
  const std::string where = "map " + name;
  const std::string src_name = j.at("src").get<std::string>();
  const std::string dst_name = j.at("dst").get<std::string>();
  const auto src = ws.complexes.find(src_name);
  const auto dst = ws.complexes.find(dst_name);
  if (src == ws.complexes.end())
    throw ValidationError(where + ": unknown source complex " + src_name);
  if (dst == ws.complexes.end())
    throw ValidationError(where + ": unknown target complex " + dst_name);
  std::map<int, Matrix> comps;
  if (j.contains("f"))
    for (const auto& [key, value] : j.at("f").items()) {
      const int n = std::stoi(key);
      comps[n] = parse_matrix(value, dst->second.dim(n), src->second.dim(n),
                              where + " f[" + key + "]");
    }
  try {
    return ChainMap(src->second, dst->second, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

fincat::Functor parse_functor(const json& j, const std::string& name, const Workspace& ws) {
  const std::string where = "functor " + name;
  const std::string source = j.at("source").get<std::string>();
  const std::string target = j.at("target").get<std::string>();
  const auto src = ws.categories.find(source);
  const auto dst = ws.categories.find(target);
  if (src == ws.categories.end()) throw ValidationError(where + ": unknown category " + source);
  if (dst == ws.categories.end()) throw ValidationError(where + ": unknown category " + target);
  try {
    fincat::Functor u(src->second, dst->second, j.at("objects").get<std::vector<std::size_t>>(),
                      j.at("morphisms").get<std::vector<std::size_t>>());
    if (const auto err = u.validate()) throw ValidationError(where + ": " + *err);
    return u;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

reedy::Diagram parse_diagram(const json& j, const std::string& name, const Workspace& ws) {
  const std::string where = "diagram " + name;
  const std::string shape_name = j.at("shape").get<std::string>();
  const auto shape = ws.categories.find(shape_name);
  if (shape == ws.categories.end())
    throw ValidationError(where + ": unknown shape category " + shape_name);
  reedy::Diagram out;
  out.shape = shape->second;
  out.at_object.resize(out.shape.object_count());
  std::vector<bool> have_object(out.shape.object_count(), false);
  for (const auto& [key, value] : j.at("objects").items()) {
    const std::size_t o = static_cast<std::size_t>(std::stoul(key));
    if (o >= out.shape.object_count()) throw ValidationError(where + ": object index out of range");
    const auto complex = ws.complexes.find(value.get<std::string>());
    if (complex == ws.complexes.end())
      throw ValidationError(where + ": unknown complex " + value.get<std::string>());
    out.at_object[o] = complex->second;
    have_object[o] = true;
  }
  for (std::size_t o = 0; o < out.shape.object_count(); ++o)
    if (!have_object[o]) throw ValidationError(where + ": missing complex for object " +
                                               std::to_string(o));
  out.at_morphism.resize(out.shape.morphism_count());
  std::vector<bool> have_map(out.shape.morphism_count(), false);
  for (std::size_t o = 0; o < out.shape.object_count(); ++o) {
    out.at_morphism[out.shape.identity(o)] = ChainMap::identity(out.at_object[o]);
    have_map[out.shape.identity(o)] = true;
  }
  if (j.contains("morphisms"))
    for (const auto& [key, value] : j.at("morphisms").items()) {
      const std::size_t m = static_cast<std::size_t>(std::stoul(key));
      if (m >= out.shape.morphism_count())
        throw ValidationError(where + ": morphism index out of range");
      const auto map = ws.maps.find(value.get<std::string>());
      if (map == ws.maps.end())
        throw ValidationError(where + ": unknown map " + value.get<std::string>());
      out.at_morphism[m] = map->second;
      have_map[m] = true;
    }
  for (std::size_t m = 0; m < out.shape.morphism_count(); ++m)
    if (!have_map[m])
      throw ValidationError(where + ": missing map for morphism " + std::to_string(m));
  if (const auto err = out.validate()) throw ValidationError(where + ": " + *err);
  return out;
}

// ---------- objects -> JSON ----------

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratlin::rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json complex_to_json(const ChainComplex& c) {
  json out;
  if (c.is_zero()) {
    out["lo"] = 0;
    out["hi"] = -1;
    out["dims"] = json::object();
    out["d"] = json::object();
    return out;
  }
  out["lo"] = c.lo();
  out["hi"] = c.hi();
  json dims = json::object(), diffs = json::object();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (c.dim(n) > 0) dims[std::to_string(n)] = c.dim(n);
    if (n > c.lo()) diffs[std::to_string(n)] = matrix_to_json(c.d(n));
  }
  out["dims"] = std::move(dims);
  out["d"] = std::move(diffs);
  return out;
}

json map_to_json(const ChainMap& f, const std::string& src_name, const std::string& dst_name) {
  json out;
  out["src"] = src_name;
  out["dst"] = dst_name;
  json comps = json::object();
  const int lo = std::min(f.src().is_zero() ? 0 : f.src().lo(),
                          f.dst().is_zero() ? 0 : f.dst().lo());
  const int hi = std::max(f.src().is_zero() ? -1 : f.src().hi(),
                          f.dst().is_zero() ? -1 : f.dst().hi());
  for (int n = lo; n <= hi; ++n)
    if (f.src().dim(n) > 0 && f.dst().dim(n) > 0) comps[std::to_string(n)] = matrix_to_json(f.f(n));
  out["f"] = std::move(comps);
  return out;
}

json betti_to_json(const chq::BettiProfile& p) {
  json out = json::array();
  for (int n = p.lo(); n <= p.hi(); ++n) out.push_back({{"degree", n}, {"betti", p.at(n)}});
  return out;
}

// ---------- workspace ----------

void merge_document(const json& doc, Workspace& ws) {
  if (!doc.is_object()) throw ParseError("input file must contain a JSON object");
  auto check_fresh = [&](const std::string& name) {
    if (ws.categories.count(name) || ws.functors.count(name) || ws.complexes.count(name) ||
        ws.maps.count(name) || ws.diagrams.count(name))
      throw ValidationError("duplicate name " + name);
  };
  if (doc.contains("categories"))
    for (const auto& [name, value] : doc.at("categories").items()) {
      check_fresh(name);
      ws.categories.emplace(name, parse_category(value, name));
    }
  if (doc.contains("complexes"))
    for (const auto& [name, value] : doc.at("complexes").items()) {
      check_fresh(name);
      ws.complexes.emplace(name, parse_complex(value, name));
    }
  if (doc.contains("functors"))
    for (const auto& [name, value] : doc.at("functors").items()) {
      check_fresh(name);
      ws.functors.emplace(name, parse_functor(value, name, ws));
    }
  if (doc.contains("maps"))
    for (const auto& [name, value] : doc.at("maps").items()) {
      check_fresh(name);
      ws.maps.emplace(name, parse_map(value, name, ws));
    }
  if (doc.contains("diagrams"))
    for (const auto& [name, value] : doc.at("diagrams").items()) {
      check_fresh(name);
      ws.diagrams.emplace(name, parse_diagram(value, name, ws));
    }
}

}  // namespace

Workspace load_files(const std::vector<std::string>& paths) {
  Workspace ws;
  std::vector<json> documents;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    documents.push_back(std::move(doc));
  }
  for (const auto& doc : documents) merge_document(doc, ws);
  return ws;
}

Workspace load_text(const std::string& json_text) {
  Workspace ws;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("inline json: ") + e.what());
  }
  merge_document(doc, ws);
  return ws;
}

namespace {

template <typename MapT>
const typename MapT::mapped_type& named(const MapT& table, const std::string& name,
                                        const std::string& kind) {
  const auto it = table.find(name);
  if (it == table.end()) throw ValidationError("unknown " + kind + " " + name);
  return it->second;
}

std::size_t env_max_dim() {
  if (const char* value = std::getenv("HOCOLIM_MAX_DIM")) {
    const long parsed = std::strtol(value, nullptr, 10);
    if (parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return 4;
}

struct Options {
  bool json_output = false;
  std::vector<std::string> files;
  std::string command;
  std::vector<std::string> names;
  std::string functor_name;
  bool oracle_check = false;
  std::size_t acyclic_up_to = 0;
  std::uint64_t seed = 0;
  bool quick = false;
  std::size_t object_index = 0;
};

int run_command(const Options& opt, std::ostream& out) {
  json report;
  const bool js = opt.json_output;
  Workspace ws = load_files(opt.files);

  if (opt.command == "validate") {
    // Loading already ran every validator; report the inventory.
    if (js) {
      report["categories"] = ws.categories.size();
      report["functors"] = ws.functors.size();
      report["complexes"] = ws.complexes.size();
      report["maps"] = ws.maps.size();
      report["diagrams"] = ws.diagrams.size();
      report["ok"] = true;
      out << report.dump(2) << "\n";
    } else {
      out << "ok: " << ws.categories.size() << " categories, " << ws.functors.size()
          << " functors, " << ws.complexes.size() << " complexes, " << ws.maps.size()
          << " maps, " << ws.diagrams.size() << " diagrams\n";
    }
    return kExitOk;
  }

  if (opt.command == "is-direct") {
    const auto& cat = named(ws.categories, opt.names[0], "category");
    const auto degrees = fincat::is_direct(cat);
    if (js) {
      report["direct"] = degrees.has_value();
      if (degrees) report["degrees"] = degrees->degrees;
      out << report.dump(2) << "\n";
    } else if (degrees) {
      out << "direct; degrees:";
      for (std::size_t d : degrees->degrees) out << " " << d;
      out << "\n";
    } else {
      out << "not direct (the nonidentity-arrow relation has a cycle or an endomorphism)\n";
    }
    return kExitOk;
  }

  if (opt.command == "homology") {
    const auto& c = named(ws.complexes, opt.names[0], "complex");
    const auto profile = chq::homology(c);
    if (js)
      out << betti_to_json(profile).dump(2) << "\n";
    else
      out << profile.to_string() << "\n";
    return kExitOk;
  }

  if (opt.command == "factorize") {
    const auto& f = named(ws.maps, opt.names[0], "map");
    const auto fact = chq::factorize(f);
    const bool monic = chq::is_monic(fact.into);
    const bool qiso = chq::is_quasi_iso(fact.retract);
    const bool composes = chq::compose(fact.retract, fact.into) == f;
    if (js) {
      report["mid"] = complex_to_json(fact.mid);
      report["into"] = map_to_json(fact.into, opt.names[0] + ":src", opt.names[0] + ":mid");
      report["retract"] = map_to_json(fact.retract, opt.names[0] + ":mid", opt.names[0] + ":dst");
      report["into_monic"] = monic;
      report["retract_quasi_iso"] = qiso;
      report["composite_equals_map"] = composes;
      out << report.dump(2) << "\n";
    } else {
      out << "mid dims: " << fact.mid.dims_to_string() << "\n";
      out << "into monic: " << (monic ? "yes" : "no")
          << ", retract quasi-iso: " << (qiso ? "yes" : "no")
          << ", retract.into = map: " << (composes ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "homotopic") {
    const auto& f = named(ws.maps, opt.names[0], "map");
    const auto& g = named(ws.maps, opt.names[1], "map");
    const auto h = chq::solve_homotopy(f, g);
    if (js) {
      report["homotopic"] = h.has_value();
      out << report.dump(2) << "\n";
    } else {
      out << (h ? "homotopic" : "not homotopic") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "frac-eq") {
    const auto f1 = hofrac::make_fraction(named(ws.maps, opt.names[0], "map"),
                                          named(ws.maps, opt.names[1], "map"));
    const auto f2 = hofrac::make_fraction(named(ws.maps, opt.names[2], "map"),
                                          named(ws.maps, opt.names[3], "map"));
    const bool equal = hofrac::fractions_equal(f1, f2);
    if (js) {
      report["equal"] = equal;
      out << report.dump(2) << "\n";
    } else {
      out << (equal ? "equal in the homotopy category" : "not equal") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "cofinal") {
    const auto& u = named(ws.functors, opt.names[0], "functor");
    const auto right = nerve::is_right_cofinal(u);
    const std::size_t depth = opt.acyclic_up_to > 0 ? opt.acyclic_up_to : env_max_dim();
    const bool acyclic = nerve::is_acyclic_cofinal_up_to(u, depth);
    if (js) {
      report["right_cofinal"] = right.ok;
      report["acyclic_up_to"] = depth;
      report["acyclic"] = acyclic;
      json table = json::array();
      for (std::size_t d2 = 0; d2 < u.target().object_count(); ++d2)
        table.push_back({{"object", d2},
                         {"nonempty", static_cast<bool>(right.nonempty[d2])},
                         {"connected", static_cast<bool>(right.connected[d2])}});
      report["per_object"] = std::move(table);
      out << report.dump(2) << "\n";
    } else {
      out << "object  nonempty  connected\n";
      for (std::size_t d2 = 0; d2 < u.target().object_count(); ++d2)
        out << d2 << "       " << (right.nonempty[d2] ? "yes" : "no") << "       "
            << (right.connected[d2] ? "yes" : "no") << "\n";
      out << "right cofinal: " << (right.ok ? "yes" : "no") << "; acyclic up to " << depth << ": "
          << (acyclic ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "latching") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    const auto lat = reedy::latching_object(x, opt.object_index);
    const bool monic = chq::is_monic(lat.map_into);
    if (js) {
      report["object"] = complex_to_json(lat.object);
      report["latching_map_monic"] = monic;
      report["homology"] = betti_to_json(chq::homology(lat.object));
      out << report.dump(2) << "\n";
    } else {
      out << "latching object dims: " << lat.object.dims_to_string() << "\n";
      out << "homology: " << chq::homology(lat.object).to_string() << "\n";
      out << "latching map monic: " << (monic ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "reedy-check") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    const auto verdict = reedy::is_reedy_cofibrant(x);
    if (js) {
      report["reedy_cofibrant"] = verdict.ok;
      if (verdict.witness) report["witness"] = *verdict.witness;
      out << report.dump(2) << "\n";
    } else if (verdict.ok) {
      out << "Reedy cofibrant\n";
    } else {
      out << "not Reedy cofibrant; first failure at object " << *verdict.witness << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "reedy-replace") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    const auto rep = reedy::reedy_replace(x);
    if (js) {
      json objects = json::object();
      for (std::size_t o = 0; o < rep.diagram.at_object.size(); ++o)
        objects[std::to_string(o)] = complex_to_json(rep.diagram.at(o));
      report["objects"] = std::move(objects);
      report["pointwise_quasi_iso"] = rep.to_original.is_pointwise_quasi_iso();
      report["reedy_cofibrant"] = reedy::is_reedy_cofibrant(rep.diagram).ok;
      out << report.dump(2) << "\n";
    } else {
      for (std::size_t o = 0; o < rep.diagram.at_object.size(); ++o)
        out << "object " << o << " dims: " << rep.diagram.at(o).dims_to_string() << "\n";
      out << "pointwise quasi-iso: "
          << (rep.to_original.is_pointwise_quasi_iso() ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "colim") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    const auto col = reedy::colim_direct(x);
    if (js) {
      report["object"] = complex_to_json(col.object);
      report["homology"] = betti_to_json(chq::homology(col.object));
      out << report.dump(2) << "\n";
    } else {
      out << "colim dims: " << col.object.dims_to_string() << "\n";
      out << "homology: " << chq::homology(col.object).to_string() << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "hocolim") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    if (!opt.functor_name.empty()) {
      const auto& u = named(ws.functors, opt.functor_name, "functor");
      const auto rel = reedy::hocolim_relative(u, x);
      if (js) {
        json per_object = json::array();
        for (std::size_t o = 0; o < rel.at_object.size(); ++o)
          per_object.push_back({{"object", o},
                                {"dims", rel.at(o).dims_to_string()},
                                {"homology", betti_to_json(chq::homology(rel.at(o)))}});
        report["relative"] = std::move(per_object);
        out << report.dump(2) << "\n";
      } else {
        for (std::size_t o = 0; o < rel.at_object.size(); ++o)
          out << "object " << o << ": " << chq::homology(rel.at(o)).to_string() << "\n";
      }
      return kExitOk;
    }
    const auto profile = chq::homology(reedy::hocolim_absolute(x));
    bool oracle_agrees = true;
    chq::BettiProfile oracle_profile;
    if (opt.oracle_check) {
      oracle_profile = oracle::bar_hocolim_betti(x);
      oracle_agrees = profile == oracle_profile;
    }
    if (js) {
      report["homology"] = betti_to_json(profile);
      if (opt.oracle_check) {
        report["oracle"] = betti_to_json(oracle_profile);
        report["oracle_agreement"] = oracle_agrees;
      }
      out << report.dump(2) << "\n";
    } else {
      out << profile.to_string() << "\n";
      if (opt.oracle_check) {
        out << "oracle-agreement: " << (oracle_agrees ? "true" : "false") << "\n";
        if (!oracle_agrees) out << "oracle: " << oracle_profile.to_string() << "\n";
      }
    }
    return oracle_agrees ? kExitOk : kExitOracleMismatch;
  }

  if (opt.command == "oracle-hocolim") {
    const auto& x = named(ws.diagrams, opt.names[0], "diagram");
    const auto profile = oracle::bar_hocolim_betti(x);
    if (js) {
      report["homology"] = betti_to_json(profile);
      out << report.dump(2) << "\n";
    } else {
      out << profile.to_string() << "\n";
    }
    return kExitOk;
  }

  if (opt.command == "base-change") {
    const auto& u = named(ws.functors, opt.names[0], "functor");
    const auto& x = named(ws.diagrams, opt.names[1], "diagram");
    const auto rep = reedy::base_change_check(u, x, opt.object_index);
    const bool ok = rep.comparison_quasi_iso && rep.betti_equal;
    if (js) {
      report["over_side"] = betti_to_json(rep.over_side);
      report["component_side"] = betti_to_json(rep.component_side);
      report["comparison_quasi_iso"] = rep.comparison_quasi_iso;
      report["betti_equal"] = rep.betti_equal;
      out << report.dump(2) << "\n";
    } else {
      out << "hocolim over slice: " << rep.over_side.to_string() << "\n";
      out << "component of relative hocolim: " << rep.component_side.to_string() << "\n";
      out << "canonical comparison quasi-iso: " << (rep.comparison_quasi_iso ? "yes" : "no")
          << "\n";
    }
    return ok ? kExitOk : kExitOracleMismatch;
  }

  throw ParseError("unknown command " + opt.command);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executable homotopy colimits for bounded rational chain complexes"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "emit JSON reports");

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("files", opt.files, "workspace JSON files")->check(CLI::ExistingFile);
  };

  std::vector<std::string> names(4);
  auto* validate = app.add_subcommand("validate", "load and validate the workspace");
  add_files(validate);
  auto* is_direct = app.add_subcommand("is-direct", "direct-category test with degrees");
  is_direct->add_option("category", names[0], "category name")->required();
  add_files(is_direct);
  auto* homology = app.add_subcommand("homology", "Betti numbers of a complex");
  homology->add_option("complex", names[0], "complex name")->required();
  add_files(homology);
  auto* factorize = app.add_subcommand("factorize", "mapping-cylinder factorization of a map");
  factorize->add_option("map", names[0], "map name")->required();
  add_files(factorize);
  auto* homotopic = app.add_subcommand("homotopic", "decide chain homotopy of two maps");
  homotopic->add_option("f", names[0], "first map")->required();
  homotopic->add_option("g", names[1], "second map")->required();
  add_files(homotopic);
  auto* fraceq = app.add_subcommand("frac-eq", "decide equality of two left fractions");
  fraceq->add_option("f1", names[0], "first numerator")->required();
  fraceq->add_option("s1", names[1], "first denominator")->required();
  fraceq->add_option("f2", names[2], "second numerator")->required();
  fraceq->add_option("s2", names[3], "second denominator")->required();
  add_files(fraceq);
  auto* cofinal = app.add_subcommand("cofinal", "right-cofinality report for a functor");
  cofinal->add_option("functor", names[0], "functor name")->required();
  cofinal->add_option("--acyclic-up-to", opt.acyclic_up_to, "homology degrees to certify");
  add_files(cofinal);
  auto* latching = app.add_subcommand("latching", "latching object of a diagram at an object");
  latching->add_option("diagram", names[0], "diagram name")->required();
  latching->add_option("object", opt.object_index, "object index")->required();
  add_files(latching);
  auto* reedy_check = app.add_subcommand("reedy-check", "Reedy cofibrancy with first witness");
  reedy_check->add_option("diagram", names[0], "diagram name")->required();
  add_files(reedy_check);
  auto* reedy_replace = app.add_subcommand("reedy-replace", "Reedy cofibrant replacement");
  reedy_replace->add_option("diagram", names[0], "diagram name")->required();
  add_files(reedy_replace);
  auto* colim = app.add_subcommand("colim", "colimit of a Reedy cofibrant diagram");
  colim->add_option("diagram", names[0], "diagram name")->required();
  add_files(colim);
  auto* hocolim = app.add_subcommand("hocolim", "homotopy colimit via Reedy replacement");
  hocolim->add_option("diagram", names[0], "diagram name")->required();
  hocolim->add_option("--functor", opt.functor_name, "relative hocolim along this functor");
  hocolim->add_flag("--oracle-check", opt.oracle_check, "compare with the bar oracle");
  add_files(hocolim);
  auto* oracle_cmd = app.add_subcommand("oracle-hocolim", "bar-construction hocolim homology");
  oracle_cmd->add_option("diagram", names[0], "diagram name")->required();
  add_files(oracle_cmd);
  auto* base_change = app.add_subcommand("base-change", "base-change check at an object");
  base_change->add_option("functor", names[0], "functor name")->required();
  base_change->add_option("diagram", names[1], "diagram name")->required();
  base_change->add_option("object", opt.object_index, "target object index")->required();
  add_files(base_change);
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->add_option("--seed", opt.seed, "random seed")->default_val(20250811ULL);
  selftest_cmd->add_flag("--quick", opt.quick, "reduced instance counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help and friends
    err << e.what() << "\n";
    return kExitParse;
  }

  opt.names = names;
  for (auto* sub : app.get_subcommands()) opt.command = sub->get_name();

  try {
    if (opt.command == "selftest") {
      const auto results = selftest::run_acceptance(opt.seed, opt.quick);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
            << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
      }
      return all ? kExitOk : 1;
    }
    return run_command(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
