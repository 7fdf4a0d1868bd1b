#include "cohsys/json_io.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cohsys {

namespace {

Json bound(const AlphaInterval::Bound& b) { return b ? Json(to_string(*b)) : Json(nullptr); }

}  // namespace

Json to_json(const AlphaInterval& interval) {
  Json j;
  j["text"] = interval.to_string();
  j["empty"] = interval.is_empty();
  if (!interval.is_empty()) {
    j["lower"] = bound(interval.lower());
    j["lower_open"] = interval.lower_open();
    j["upper"] = bound(interval.upper());
    j["upper_open"] = interval.upper_open();
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["n"] = v.n;
  j["d"] = v.d;
  j["k"] = v.k;
  j["beta"] = v.beta;
  j["status"] = std::string(to_string(v.status));
  j["rule"] = v.rule;
  j["stable_interval"] = to_json(v.stable_interval);
  j["necessary_region"] = to_json(v.necessary_region);
  j["sufficient_region"] = to_json(v.sufficient_region);
  j["lower_endpoint_bounds"] = v.lower_endpoint_bounds ? to_json(*v.lower_endpoint_bounds) : Json(nullptr);
  j["semistable_notes"] = Json::array();
  for (const auto& note : v.semistable_notes) {
    j["semistable_notes"].push_back({{"interval", to_json(note.interval)}, {"text", note.text}});
  }
  j["notes"] = v.notes;
  return j;
}

Json to_json(const StabilityReport& r) {
  Json j;
  j["alpha"] = to_string(r.alpha);
  j["stable"] = r.stable;
  j["semistable"] = r.semistable;
  j["total_slope"] = to_string(r.total_slope);
  if (r.witness) {
    const SubsystemWitness& w = *r.witness;
    j["witness"] = {{"rank", w.rank},
                    {"degree", w.degree},
                    {"dimension", w.dimension},
                    {"alpha_slope", to_string(w.alpha_slope)},
                    {"subspace_basis", w.subspace_basis},
                    {"extension_degree", w.extension_degree}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const CrossCheckReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["agree"] = r.all_agree();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"agree", c.agree}});
  }
  j["flags"] = r.flags;
  return j;
}

Json to_json(const SystemInstance& inst) {
  Json j;
  j["q"] = inst.field.modulus();
  j["splitting"] = std::vector<int>(inst.type.degrees().begin(), inst.type.degrees().end());
  j["sections"] = Json::array();
  for (const Section& s : inst.sections) {
    Json comps = Json::array();
    for (const BinaryForm& f : s) comps.push_back(f.is_zero() ? std::vector<Residue>{} : f.coefficients());
    j["sections"].push_back(std::move(comps));
  }
  return j;
}

SystemInstance instance_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    const auto q = j.at("q").get<std::int64_t>();
    if (q < 2 || q > PrimeField::kMaxModulus) throw std::invalid_argument("q out of range: " + std::to_string(q));
    SystemInstance inst{PrimeField(static_cast<std::uint32_t>(q)), SplittingType(j.at("splitting").get<std::vector<int>>()), {}};
    const auto given = j.at("splitting").get<std::vector<int>>();
    if (!std::is_sorted(given.begin(), given.end(), std::greater<>())) {
      throw std::invalid_argument("splitting must be listed in descending order");
    }
    for (const Json& js : j.at("sections")) {
      if (!js.is_array() || js.size() != static_cast<std::size_t>(inst.n())) {
        throw std::invalid_argument("each section needs " + std::to_string(inst.n()) + " components");
      }
      Section s;
      for (std::size_t i = 0; i < js.size(); ++i) {
        const auto coeffs = js[i].get<std::vector<std::int64_t>>();
        const int a = inst.type[i];
        if (coeffs.empty()) {
          s.push_back(a < 0 ? BinaryForm() : BinaryForm::zero(a));
        } else if (a < 0 || coeffs.size() != static_cast<std::size_t>(a) + 1) {
          throw std::invalid_argument("component " + std::to_string(i) + " needs " +
                                      std::to_string(std::max(a + 1, 0)) + " coefficients");
        } else {
          s.push_back(BinaryForm::from_integers(inst.field, a, coeffs));
        }
      }
      inst.sections.push_back(std::move(s));
    }
    validate(inst);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
}

}  // namespace cohsys
