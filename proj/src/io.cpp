#include "destab/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "destab/errors.hpp"

namespace destab {

namespace {

std::string approx_note() { return "non-authoritative decimal rendering"; }

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

long long json_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + " must be an integer (floating point is not accepted)");
  return j.get<long long>();
}

}  // namespace

Json json_or_path_load(const std::string& text_or_path) {
  std::string text = text_or_path;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool inline_json = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  if (!inline_json) {
    std::ifstream in(text_or_path);
    if (!in) throw InputError("cannot open file '" + text_or_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + text_or_path + "': " + e.what());
  }
}

HomogeneousIdeal load_ideal(const Json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw InputError("an ideal needs \"variables\" and \"generators\"");
  std::vector<std::string> vars;
  for (const Json& v : j.at("variables")) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  std::vector<Polynomial> gens;
  for (const Json& g : j.at("generators")) {
    if (!g.is_string()) throw InputError("generators must be polynomial strings");
    gens.push_back(parse_polynomial(g.get<std::string>(), vars));
  }
  return HomogeneousIdeal(std::move(vars), std::move(gens));
}

WeightVector load_weights(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("weights")) throw InputError("weight object needs a \"weights\" array");
    arr = &j.at("weights");
  }
  if (!arr->is_array() || arr->empty())
    throw InputError("weights must be a nonempty integer array");
  WeightVector a;
  for (const Json& v : *arr) a.push_back(json_int(v, "weight entry"));
  return a;
}

StateInput load_state(const Json& j) {
  if (!j.is_object() || !j.contains("characters"))
    throw InputError("a state needs a \"characters\" array");
  std::vector<std::vector<long long>> chars;
  for (const Json& row : j.at("characters")) {
    if (!row.is_array()) throw InputError("characters must be integer arrays");
    std::vector<long long> chi;
    for (const Json& v : row) chi.push_back(json_int(v, "character entry"));
    chars.push_back(std::move(chi));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const Json& v : j.at("labels")) {
      if (!v.is_string()) throw InputError("labels must be strings");
      labels.push_back(v.get<std::string>());
    }
  }
  StateInput out;
  out.state = make_state(std::move(chars), std::move(labels));
  if (j.contains("degree")) {
    out.degree = json_int(j.at("degree"), "degree");
  } else {
    long long sum = 0;
    for (long long c : out.state.characters.front()) sum += c;
    out.degree = sum;
  }
  return out;
}

ExactMatrix load_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a matrix needs a nonempty row array");
  std::vector<RationalVec> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    RationalVec r;
    for (const Json& v : row) {
      if (v.is_number_integer()) {
        r.push_back(rat_of(v.get<long long>()));
      } else if (v.is_string()) {
        r.push_back(rat_parse(v.get<std::string>()));
      } else {
        throw InputError("matrix entries must be integers or \"p/q\" strings");
      }
    }
    rows.push_back(std::move(r));
  }
  return ExactMatrix::from_rows(rows);
}

Json ideal_json(const HomogeneousIdeal& I) {
  Json j;
  j["variables"] = I.variables();
  Json gens = Json::array();
  for (const Polynomial& g : I.generators())
    gens.push_back(polynomial_str(g, I.variables()));
  j["generators"] = std::move(gens);
  return j;
}

Json apartment_json(const ApartmentPoint& point) {
  Json j;
  j["canonical"] = point.canonical;
  return j;
}

Json normalized_json(const NormalizedValue& value, bool approx) {
  Json j;
  j["numerator"] = rat_str(value.numerator);
  j["normsq"] = rat_str(value.normsq);
  j["display"] = value.str();
  if (approx) {
    Json a;
    a["value"] = double_str(value.approx());
    a["note"] = approx_note();
    j["approx"] = std::move(a);
  }
  return j;
}

Json weight_report_json(const WeightReport& report, bool approx) {
  Json j;
  j["mu"] = rat_str(report.mu);
  if (report.nu) {
    j["nu"] = normalized_json(*report.nu, approx);
  } else {
    j["nu"] = nullptr;
    j["central"] = true;
  }
  j["argmax"] = report.argmax;
  if (approx) {
    Json a;
    a["mu"] = rat_approx(report.mu);
    a["note"] = approx_note();
    j["approx"] = std::move(a);
  }
  return j;
}

Json min_norm_json(const MinNormResult& result, bool approx) {
  Json j;
  Json q = Json::array();
  for (const Rational& v : result.q) q.push_back(rat_str(v));
  j["q"] = std::move(q);
  j["normsq"] = rat_str(result.normsq);
  j["support"] = result.support;
  Json comb = Json::array();
  for (const Rational& v : result.combination) comb.push_back(rat_str(v));
  j["combination"] = std::move(comb);
  if (approx) {
    Json a;
    Json qa = Json::array();
    for (const Rational& v : result.q) qa.push_back(rat_approx(v));
    a["q"] = std::move(qa);
    a["normsq"] = rat_approx(result.normsq);
    a["note"] = approx_note();
    j["approx"] = std::move(a);
  }
  return j;
}

Json destabilizer_json(const DestabilizerReport& report, bool approx) {
  Json j;
  j["status"] = report.status == StabilityStatus::Stable ? "Stable" : "Unstable";
  if (report.direction) {
    j["direction"] = report.direction->canonical;
  } else {
    j["direction"] = nullptr;
  }
  if (report.nu_min) {
    j["nu_min"] = normalized_json(*report.nu_min, approx);
  } else {
    j["nu_min"] = nullptr;
  }
  j["certificate"] = min_norm_json(report.certificate, approx);
  j["scope"] = report.scope;
  return j;
}

Json building_point_json(const BuildingPoint& point, bool approx) {
  Json j;
  Json flag = Json::array();
  for (const Subspace& s : point.flag.subspaces) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < s.basis.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < s.basis.cols(); ++c) row.push_back(rat_str(s.basis.at(i, c)));
      basis.push_back(std::move(row));
    }
    flag.push_back(Json{{"basis", std::move(basis)}});
  }
  j["flag"] = std::move(flag);
  Json gaps = Json::array();
  for (const Rational& g : point.gaps) gaps.push_back(rat_str(g));
  j["gaps"] = std::move(gaps);
  if (approx) {
    Json a;
    Json ga = Json::array();
    for (const Rational& g : point.gaps) ga.push_back(rat_approx(g));
    a["gaps"] = std::move(ga);
    a["note"] = approx_note();
    j["approx"] = std::move(a);
  }
  return j;
}

Json almost_trivial_json(const AlmostTrivialReport& report) {
  Json j;
  j["verdict"] = report.verdict == AlmostTrivialVerdict::Possible ? "Possible" : "Fails";
  j["c"] = report.c;
  j["dim"] = report.dim;
  j["meets"] = report.meets;
  j["min_coords"] = report.min_coords;
  return j;
}

Json df_json(const DFReport& report, bool approx) {
  Json j;
  j["n"] = report.n;
  j["a0"] = rat_str(report.a0);
  j["a1"] = rat_str(report.a1);
  j["b0"] = rat_str(report.b0);
  j["b1"] = rat_str(report.b1);
  j["df"] = rat_str(report.df);
  if (approx) {
    Json a;
    a["df"] = rat_approx(report.df);
    a["note"] = approx_note();
    j["approx"] = std::move(a);
  }
  return j;
}

Json sweep_json(const SweepReport& report, bool approx) {
  Json j;
  Json exps = Json::array();
  for (const SweepExponentReport& er : report.exponents) {
    Json e;
    e["exponent"] = er.exponent;
    e["coordinates"] = er.coordinates;
    e["coordinate_names"] = er.coordinate_names;
    Json dirs = Json::array();
    for (const SweepDirection& d : er.directions) {
      Json dj;
      dj["weights"] = d.weights;
      dj["canonical"] = d.canonical;
      dj["verdict"] = d.verdict == AlmostTrivialVerdict::Possible ? "Possible" : "Fails";
      dj["screened"] = d.screened;
      dj["df"] = rat_str(d.df);
      if (approx) dj["df_approx"] = rat_approx(d.df);
      dj["central_fiber"] = d.central_fiber;
      dirs.push_back(std::move(dj));
    }
    e["directions"] = std::move(dirs);
    if (er.min_df) {
      e["min_df"] = rat_str(*er.min_df);
      e["min_df_direction"] = *er.min_df_direction;
      if (approx) e["min_df_approx"] = rat_approx(*er.min_df);
    } else {
      e["min_df"] = nullptr;
      e["min_df_direction"] = nullptr;
    }
    if (er.hilbert_point_kempf) {
      e["hilbert_point_kempf"] = destabilizer_json(*er.hilbert_point_kempf, approx);
    } else {
      e["hilbert_point_kempf"] = nullptr;
      e["hilbert_point_note"] = er.hilbert_point_note;
    }
    exps.push_back(std::move(e));
  }
  j["exponents"] = std::move(exps);
  j["status"] = report.status;
  return j;
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& v : j) {
    if (v.is_object() || v.is_array()) return false;
  }
  return true;
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !scalar_array(value))) {
        out += indent + key + ":\n";
        render_table(value, indent + "  ", out);
      } else if (value.is_array()) {
        out += indent + key + ": [";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out += ", ";
          out += scalar_str(value[i]);
        }
        out += "]\n";
      } else {
        out += indent + key + ": " + scalar_str(value) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += indent + "- [" + std::to_string(i) + "]\n";
      render_table(j[i], indent + "  ", out);
    }
  } else {
    out += indent + scalar_str(j) + "\n";
  }
}

}  // namespace

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "table") {
    std::string out;
    render_table(j, "", out);
    return out;
  }
  throw InputError("unknown format '" + format + "' (accepted: json, table)");
}

}  // namespace destab
