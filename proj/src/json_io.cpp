#include "x0eis/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "x0eis/version.hpp"

namespace x0eis {

using nlohmann::json;

std::string qexp_to_json(const QExpansion& s) {
  json j;
  j["schema"] = kSchemaVersion;
  j["level"] = s.level;
  j["truncation"] = s.truncation;
  long disc = 1;
  for (const QuadExt& c : s.coeffs)
    if (c.irr != 0) {
      disc = c.disc;
      break;
    }
  j["disc"] = disc;
  json arr = json::array();
  for (const QuadExt& c : s.coeffs)
    arr.push_back({rat_num(c.rat).get_str(), rat_den(c.rat).get_str(),
                   rat_num(c.irr).get_str(), rat_den(c.irr).get_str()});
  j["coeffs"] = std::move(arr);
  return j.dump();
}

QExpansion qexp_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw std::invalid_argument("qexp_from_json: unsupported schema version");
  QExpansion s = make_qexp(j.at("level").get<std::int64_t>(),
                           j.at("truncation").get<std::int64_t>());
  const long disc = j.at("disc").get<long>();
  const json& arr = j.at("coeffs");
  if (arr.size() != s.coeffs.size())
    throw std::invalid_argument("qexp_from_json: coefficient count mismatch");
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const json& c = arr[i];
    Rational rat = make_rational(BigInt(c.at(0).get<std::string>()),
                                 BigInt(c.at(1).get<std::string>()));
    Rational irr = make_rational(BigInt(c.at(2).get<std::string>()),
                                 BigInt(c.at(3).get<std::string>()));
    s.coeffs[i] = QuadExt(rat, irr, irr == 0 ? 1 : disc);
  }
  return s;
}

} // namespace x0eis
