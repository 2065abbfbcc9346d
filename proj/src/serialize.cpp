#include "asmdpp/serialize.hpp"

#include "asmdpp/errors.hpp"

namespace asmdpp {

nlohmann::json poly_to_json(const MPoly& p) {
  nlohmann::json j;
  j["vars"] = p.vars();
  j["terms"] = nlohmann::json::array();
  for (const auto& [exps, coeff] : p.terms())
    j["terms"].push_back({{"coeff", coeff.get_str()}, {"exps", exps}});
  return j;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

MPoly poly_from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  MPoly p;
  for (const auto& t : j.at("terms")) {
    std::vector<int> exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != vars.size()) throw ParseError("exponent vector length mismatch");
    MPoly term(rat_from_string(t.at("coeff").get<std::string>()));
    for (size_t k = 0; k < vars.size(); ++k)
      if (exps[k] != 0) term *= MPoly::var(vars[k], exps[k]);
    p += term;
  }
  return p;
}

}  // namespace asmdpp
