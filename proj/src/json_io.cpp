#include "bruhat/json_io.hpp"

#include "bruhat/error.hpp"

namespace bruhat::io {

json point_to_json(const charts::MomentumAnglePoint& p) {
  return json{{"n", p.n()}, {"x", p.x}, {"phi", p.phi}};
}

charts::MomentumAnglePoint point_from_json(const json& j) {
  charts::MomentumAnglePoint p;
  try {
    const int n = j.at("n").get<int>();
    p.x = j.at("x").get<std::vector<double>>();
    p.phi = j.contains("phi") ? j.at("phi").get<std::vector<double>>() : std::vector<double>(p.x.size(), 0.0);
    if (n < 1 || static_cast<int>(p.x.size()) != n || static_cast<int>(p.phi.size()) != n) {
      throw Error(ErrorCode::ParseError, "point arrays must have length n >= 1");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  charts::validate(p);
  return p;
}

json invariants_to_json(const invariants::ElementaryReport& e, const invariants::InvolutionReport& inv) {
  return json{{"n", e.n},
              {"constants", e.constants},
              {"max_bracket_s", inv.max_bracket_s},
              {"max_bracket_b", inv.max_bracket_b},
              {"spread", e.spread},
              {"pairing_constants", e.pairing_constants},
              {"binomial_hypothesis", e.binomial_hypothesis}};
}

json pattern_to_json(const gt::GTPattern& p) { return json(p.rows); }

json chain_to_json(const lenard::ChainReport& r) {
  return json{{"seed", r.seed},
              {"K", r.K},
              {"residuals", r.residuals},
              {"ratios", r.ratios},
              {"rank", r.rank},
              {"involution_max", r.involution_max},
              {"reference_cosine", r.reference_cosine},
              {"reference_scale", r.reference_scale}};
}

}  // namespace bruhat::io
