#include "json_io.hpp"

#include "pbraid/error.hpp"

#include <string>

namespace pbraid::cli {

nlohmann::json to_json(const RingElement &e) {
  auto terms = nlohmann::json::array();
  for (const auto &[key, c] : sorted_terms(e))
    terms.push_back({{"key", key}, {"coeff", c}});
  return {{"strands", e.strands()}, {"terms", std::move(terms)}};
}

RingElement ring_from_json(const nlohmann::json &j) {
  const int strands = j.at("strands").get<int>();
  std::vector<std::pair<NormalForm, std::int64_t>> terms;
  for (const auto &t : j.at("terms"))
    terms.emplace_back(deserialize(t.at("key").get<std::string>(), strands),
                       t.at("coeff").get<std::int64_t>());
  return RingElement::from_terms(strands, std::move(terms));
}

nlohmann::json to_json(const LinkingProfile &p) {
  auto out = nlohmann::json::array();
  for (const auto &[entry, weight] : p.entries)
    out.push_back({{"components", entry.component_count},
                   {"doubled_linkings", entry.doubled_linkings},
                   {"weight", std::to_string(weight.numerator()) + "/" +
                                  std::to_string(weight.denominator())}});
  return out;
}

LinkingProfile profile_from_json(const nlohmann::json &j) {
  LinkingProfile p;
  for (const auto &e : j) {
    const auto text = e.at("weight").get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos)
      throw ParseError("malformed weight '" + text + "'");
    Weight w(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    ProfileEntry entry{e.at("components").get<int>(),
                       e.at("doubled_linkings").get<std::vector<long>>()};
    p.entries[entry] += w;
  }
  return p;
}

} // namespace pbraid::cli
