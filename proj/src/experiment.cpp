#include "gsw/experiment.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

using nlohmann::json;

// %.17g prints doubles losslessly, so reruns of a seeded experiment produce
// byte-identical tables.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json require(const json& j, const char* key) {
  if (!j.contains(key))
    throw input_error(std::string("spec: missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error("spec: " + what + " must be an array");
  std::vector<std::vector<int>> out;
  for (const json& row : j) {
    if (!row.is_array()) throw input_error("spec: " + what + " rows must be arrays");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer())
        throw input_error("spec: " + what + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Word> to_words(const std::vector<std::vector<int>>& rows,
                           int num_generators) {
  std::vector<Word> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(Word::from_signed(row, num_generators));
  return out;
}

PermGeneratorMap map_from_images(const std::vector<std::vector<int>>& images,
                                 int num_generators, const std::string& what) {
  if (static_cast<int>(images.size()) != num_generators)
    throw input_error("spec: " + what + " needs one image per generator");
  std::vector<Permutation> perms;
  perms.reserve(images.size());
  for (const auto& img : images) perms.emplace_back(img);
  return PermGeneratorMap(std::move(perms));
}

}  // namespace

ExperimentSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("spec: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("spec: top level must be an object");

  ExperimentSpec spec;
  spec.version = j.value("version", 1);
  if (spec.version != 1)
    throw input_error("spec: unsupported version " + std::to_string(spec.version));
  spec.generators = require(j, "generators").get<int>();
  if (spec.generators < 1) throw input_error("spec: need at least one generator");
  spec.relators = int_matrix(require(j, "relators"), "relators");
  to_words(spec.relators, spec.generators);  // validate letters early
  spec.metric = parse_metric(j.value("metric", "hamming"));
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.output_csv = j.value("output_csv", "");

  const bool has_actions = j.contains("actions");
  const bool has_challenge = j.contains("challenge");
  if (has_actions == has_challenge)
    throw input_error("spec: provide exactly one of 'actions' or 'challenge'");

  if (has_actions) {
    const json& arr = j.at("actions");
    if (!arr.is_array() || arr.empty())
      throw input_error("spec: 'actions' must be a nonempty array");
    for (const json& a : arr) {
      ActionSpec as;
      as.family = a.value("family", "");
      if (as.family == "z2-torus") {
        if (spec.generators != 2)
          throw input_error("spec: z2-torus needs exactly two generators");
        for (const json& v : require(a, "sizes")) as.sizes.push_back(v.get<int>());
        if (as.sizes.empty()) throw input_error("spec: z2-torus needs sizes");
      } else if (as.family == "random-transitive") {
        as.extra_generators = a.value("extra_generators", 1);
        if (spec.generators != as.extra_generators + 1)
          throw input_error(
              "spec: random-transitive generator count must match 'generators'");
        for (const json& v : require(a, "degrees")) as.degrees.push_back(v.get<int>());
        if (as.degrees.empty()) throw input_error("spec: random-transitive needs degrees");
      } else if (as.family.empty()) {
        as.degree = require(a, "degree").get<int>();
        as.images = int_matrix(require(a, "images"), "action images");
        if (static_cast<int>(as.images.size()) != spec.generators)
          throw input_error("spec: action needs one image per generator");
        for (const auto& img : as.images)
          if (static_cast<int>(img.size()) != as.degree)
            throw input_error("spec: action image length must equal the degree");
      } else {
        throw input_error("spec: unknown action family '" + as.family + "'");
      }
      spec.actions.push_back(std::move(as));
    }
  } else {
    const json& arr = j.at("challenge");
    if (!arr.is_array() || arr.empty())
      throw input_error("spec: 'challenge' must be a nonempty array");
    for (const json& a : arr) {
      ChallengeItemSpec cs;
      cs.degree = require(a, "degree").get<int>();
      cs.source_degree = a.value("source_degree", 0);
      cs.images = int_matrix(require(a, "images"), "challenge images");
      if (static_cast<int>(cs.images.size()) != spec.generators)
        throw input_error("spec: challenge item needs one image per generator");
      for (const auto& img : cs.images)
        if (static_cast<int>(img.size()) != cs.degree)
          throw input_error("spec: challenge image length must equal the degree");
      spec.challenge.push_back(std::move(cs));
    }
  }

  if (j.contains("pipeline")) {
    const json& p = j.at("pipeline");
    if (!p.is_object()) throw input_error("spec: 'pipeline' must be an object");
    PipelineOptions& o = spec.pipeline;
    o.defects = p.value("defects", o.defects);
    o.projection = p.value("projection", o.projection);
    o.oracle = p.value("oracle", o.oracle);
    o.sofic_check = p.value("sofic_check", o.sofic_check);
    o.kernel_max_len = p.value("kernel_max_len", o.kernel_max_len);
    o.kernel_count = p.value("kernel_count", o.kernel_count);
    o.max_target_degree = p.value("max_target_degree", o.max_target_degree);
    o.kazhdan_block_cap = p.value("kazhdan_block_cap", o.kazhdan_block_cap);
    o.seed = spec.seed;
    if (p.contains("non_kernel_words"))
      o.non_kernel_words =
          to_words(int_matrix(p.at("non_kernel_words"), "non_kernel_words"),
                   spec.generators);
    if (p.contains("solution")) {
      std::vector<PermGeneratorMap> sols;
      for (const json& s : p.at("solution"))
        sols.push_back(map_from_images(int_matrix(require(s, "images"), "solution images"),
                                       spec.generators, "solution"));
      o.solution = std::move(sols);
    }
    if (p.contains("trend")) {
      const json& t = p.at("trend");
      o.trend.threshold_zero = t.value("threshold_zero", o.trend.threshold_zero);
      o.trend.threshold_one = t.value("threshold_one", o.trend.threshold_one);
      o.trend.monotone_slack = t.value("monotone_slack", o.trend.monotone_slack);
    }
  } else {
    spec.pipeline.seed = spec.seed;
  }
  return spec;
}

json to_json(const ExperimentSpec& spec) {
  json j;
  j["version"] = spec.version;
  j["generators"] = spec.generators;
  j["relators"] = spec.relators;
  j["metric"] = metric_name(spec.metric);
  j["seed"] = spec.seed;
  if (!spec.output_csv.empty()) j["output_csv"] = spec.output_csv;

  if (!spec.actions.empty()) {
    json arr = json::array();
    for (const ActionSpec& a : spec.actions) {
      json e;
      if (a.family == "z2-torus") {
        e["family"] = a.family;
        e["sizes"] = a.sizes;
      } else if (a.family == "random-transitive") {
        e["family"] = a.family;
        e["degrees"] = a.degrees;
        e["extra_generators"] = a.extra_generators;
      } else {
        e["degree"] = a.degree;
        e["images"] = a.images;
      }
      arr.push_back(std::move(e));
    }
    j["actions"] = std::move(arr);
  } else {
    json arr = json::array();
    for (const ChallengeItemSpec& c : spec.challenge) {
      json e;
      e["degree"] = c.degree;
      if (c.source_degree > 0) e["source_degree"] = c.source_degree;
      e["images"] = c.images;
      arr.push_back(std::move(e));
    }
    j["challenge"] = std::move(arr);
  }

  const PipelineOptions& o = spec.pipeline;
  json p;
  p["defects"] = o.defects;
  p["projection"] = o.projection;
  p["oracle"] = o.oracle;
  p["sofic_check"] = o.sofic_check;
  p["kernel_max_len"] = o.kernel_max_len;
  p["kernel_count"] = o.kernel_count;
  p["max_target_degree"] = o.max_target_degree;
  p["kazhdan_block_cap"] = o.kazhdan_block_cap;
  if (!o.non_kernel_words.empty()) {
    json words = json::array();
    for (const Word& w : o.non_kernel_words) words.push_back(w.signed_codes());
    p["non_kernel_words"] = std::move(words);
  }
  if (o.solution) {
    json sols = json::array();
    for (const PermGeneratorMap& m : *o.solution) {
      json imgs = json::array();
      for (int s = 0; s < m.alphabet_size(); ++s) imgs.push_back(m.image(s).images());
      sols.push_back(json{{"images", std::move(imgs)}});
    }
    p["solution"] = std::move(sols);
  }
  p["trend"] = json{{"threshold_zero", o.trend.threshold_zero},
                    {"threshold_one", o.trend.threshold_one},
                    {"monotone_slack", o.trend.monotone_slack}};
  j["pipeline"] = std::move(p);
  return j;
}

std::vector<PermAction> expand_actions(const ExperimentSpec& spec) {
  Rng rng(spec.seed);
  std::vector<PermAction> out;
  for (const ActionSpec& a : spec.actions) {
    if (a.family == "z2-torus") {
      for (int m : a.sizes) out.push_back(z2_torus_action(m));
    } else if (a.family == "random-transitive") {
      for (int d : a.degrees)
        out.push_back(random_transitive_action(rng, d, a.extra_generators));
    } else {
      std::vector<Permutation> imgs;
      for (const auto& img : a.images) imgs.emplace_back(img);
      out.emplace_back(a.degree, std::move(imgs));
    }
  }
  return out;
}

std::string report_csv(const PipelineReport& report) {
  std::string out =
      "index,degree,source_degree,transitive_source,max_restriction_defect,"
      "max_inclusion_defect,max_word_defect,max_bound_ratio,residual,"
      "residual_floor,min_orbit_margin,solution_source,solution_degree,"
      "solution_distance,solution_residual,eps_actual,eps_chain,kazhdan_hat,"
      "morphism_gap_bound,contradiction_margin,note\n";
  for (const PipelineIndexReport& ir : report.items) {
    double max_r = 0, max_i = 0;
    for (double d : ir.restriction_defects) max_r = std::max(max_r, d);
    for (double d : ir.almost_equivariance) max_i = std::max(max_i, d);
    out += std::to_string(ir.index);
    out += ',' + std::to_string(ir.degree);
    out += ',' + std::to_string(ir.source_degree);
    out += ',';
    out += ir.projection_done ? (ir.transitive_source ? "1" : "0") : "";
    out += ',' + fmt(max_r);
    out += ',' + fmt(max_i);
    out += ',' + fmt(ir.max_defect);
    out += ',' + fmt(ir.max_bound_ratio);
    out += ',';
    if (ir.projection_done)
      out += fmt(ir.residual) + ',' + fmt(ir.residual_floor) + ',' +
             std::to_string(ir.min_orbit_margin);
    else
      out += ",,";
    out += ',' + ir.solution_source;
    out += ',';
    if (ir.solution_checked)
      out += std::to_string(ir.solution_degree) + ',' + fmt(ir.solution_distance);
    else
      out += ",";
    out += ',';
    if (ir.kazhdan_done)
      out += fmt(ir.solution_residual) + ',' + fmt(ir.eps_actual) + ',' +
             fmt(ir.eps_chain) + ',' +
             (ir.kazhdan_infinite ? std::string("inf") : fmt(ir.kazhdan_hat)) + ',' +
             fmt(ir.morphism_gap_bound) + ',' + fmt(ir.contradiction_margin);
    else
      out += ",,,,,";
    out += ',' + csv_quote(ir.note);
    out += '\n';
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  const std::vector<Word> relators = to_words(spec.relators, spec.generators);

  ExperimentResult res;
  if (!spec.actions.empty()) {
    std::vector<PermAction> family = expand_actions(spec);
    for (const PermAction& a : family)
      if (a.num_generators() != spec.generators)
        throw input_error("spec: action generator count does not match 'generators'");
    res.report = run_pipeline(family, relators, spec.metric, spec.pipeline);
  } else {
    std::vector<GeneratorMap> maps;
    std::vector<int> claimed;
    for (const ChallengeItemSpec& c : spec.challenge) {
      maps.emplace_back(map_from_images(c.images, spec.generators, "challenge item"));
      claimed.push_back(c.source_degree);
    }
    res.report = run_pipeline(challenge_from_maps(std::move(maps), relators, claimed),
                              spec.metric, spec.pipeline);
  }

  res.csv = report_csv(res.report);
  if (!spec.output_csv.empty()) {
    std::ofstream f(spec.output_csv, std::ios::binary);
    f << res.csv;
    if (!f) throw input_error("cannot write CSV to " + spec.output_csv);
  }
  const bool clean =
      res.report.violations.empty() && (!res.report.sofic || res.report.sofic->pass);
  res.exit_code = clean ? 0 : 1;
  return res;
}

}  // namespace gsw
