#include "puiseux/report.hpp"

#include <algorithm>

namespace puiseux {

namespace {

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string line;
      for (const auto& e : j) {
        if (!line.empty()) line += ", ";
        line += e.is_string() ? e.get<std::string>() : e.dump();
      }
      out += prefix + ": [" + line + "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

Json rat_list(const std::vector<Rat>& values) {
  Json a = Json::array();
  for (const Rat& v : values) a.push_back(v.str());
  return a;
}

Json to_json(const MemberResult& r) {
  Json j;
  j["verdict"] = std::string(membership_name(r.verdict));
  j["method"] = r.method;
  if (r.verdict == Membership::kUnknown) {
    j["reason"] = {{"code", r.reason.code},
                   {"generator_depth", r.reason.generator_depth},
                   {"node_budget", r.reason.node_budget},
                   {"detail", r.reason.detail}};
  }
  return j;
}

Json to_json(const AtomicityVerdict& v) {
  Json j;
  j["kind"] = std::string(atomicity_name(v.kind));
  j["atoms"] = rat_list(v.atoms_shown);
  j["truncated"] = v.truncated;
  j["rule"] = v.rule;
  return j;
}

Json to_json(const Factorization& z) {
  Json parts = Json::array();
  for (const auto& p : z.parts) parts.push_back({{"atom", p.atom.str()}, {"multiplicity", p.multiplicity}});
  Json j;
  j["parts"] = parts;
  j["length"] = z.length;
  return j;
}

Json to_json(const FactorizationSet& s) {
  Json j;
  j["complete"] = s.complete;
  j["count"] = s.items.size();
  j["atoms_used"] = rat_list(s.atoms_used);
  Json items = Json::array();
  for (const auto& z : s.items) items.push_back(to_json(z));
  j["factorizations"] = items;
  return j;
}

Json to_json(const LengthSet& s) {
  Json j;
  j["complete"] = s.complete;
  j["lengths"] = Json(std::vector<std::int64_t>(s.lengths.begin(), s.lengths.end()));
  return j;
}

Json to_json(const GroupDescription& g) {
  Json j;
  switch (g.kind) {
    case GroupKind::kCyclicScaled:
      j["kind"] = "CyclicScaled";
      j["q"] = g.q.str();
      break;
    case GroupKind::kLocalizedScaled: {
      j["kind"] = "LocalizedScaled";
      j["n"] = g.n.get_str();
      Json primes = Json::object();
      for (const auto& [p, e] : g.exponents) primes[p.get_str()] = e.str();
      j["primes"] = primes;
      j["other_primes"] = g.other_primes.str();
      break;
    }
    case GroupKind::kUnknown:
      j["kind"] = "Unknown";
      j["reason"] = g.reason;
      break;
  }
  j["description"] = g.str();
  return j;
}

Json to_json(const GpDensityResult& r) {
  Json j;
  j["kind"] = std::string(gp_density_name(r.kind));
  j["rule"] = r.rule;
  if (r.kind == GpDensityKind::kNowhereDenseFG) j["step"] = r.step.str();
  if (r.kind == GpDensityKind::kDenseNotFG) j["witnesses"] = rat_list(r.witnesses);
  return j;
}

Json to_json(const ConductorResult& r) {
  Json j;
  j["kind"] = std::string(conductor_name(r.kind));
  j["rule"] = r.rule;
  if (r.kind == ConductorKind::kTail) {
    j["sigma"] = r.sigma.str();
    j["minimum"] = r.minimum.str();
  }
  if (r.kind == ConductorKind::kUnknown) j["reason"] = r.reason;
  return j;
}

Json to_json(const DensityVerdict& v) {
  Json j;
  j["class"] = std::string(density_class_name(v.cls));
  j["rule"] = v.rule;
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.decreasing_witness.empty()) j["witness"] = rat_list(v.decreasing_witness);
  if (v.lattice_step) j["lattice_step"] = v.lattice_step->str();
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["interval"] = rat_list({r.lo, r.hi});
  j["epsilon"] = r.epsilon.str();
  j["result"] = std::string(probe_outcome_name(r.result));
  j["max_gap"] = rat_list({r.gap_lo, r.gap_hi});
  j["elements_found"] = r.elements_found;
  j["truncation"] = {{"generator_depth", r.generator_depth},
                     {"max_coefficient", r.max_coefficient.get_str()},
                     {"complete", r.complete}};
  return j;
}

Json to_json(const IsolationReport& r) {
  Json j;
  j["generator_depth"] = r.generator_depth;
  j["truncated"] = r.truncated;
  Json items = Json::array();
  for (const auto& e : r.entries) items.push_back({{"element", e.element.str()}, {"radius", e.radius.str()}});
  j["isolation"] = items;
  return j;
}

Json to_json(const DenseAtomsOutput& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries) {
    entries.push_back({{"k", e.k},
                       {"target", e.target.str()},
                       {"prime", e.prime},
                       {"exponent", e.exponent},
                       {"numerator", e.numerator.get_str()},
                       {"atom", e.atom.str()},
                       {"error", e.error.str()}});
  }
  Json j;
  j["spec"] = Json::parse(to_json_text(d.spec));
  j["entries"] = entries;
  return j;
}

Json to_json(const CantorOutput& c) {
  Json j;
  j["spec"] = Json::parse(to_json_text(c.spec));
  j["generators"] = rat_list(c.generators);
  return j;
}

std::string to_text(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace puiseux
