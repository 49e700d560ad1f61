#include "bqs/json_io.hpp"

#include "bqs/errors.hpp"
#include "bqs/paths.hpp"
#include "bqs/text.hpp"

namespace bqs {

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : f) {
    terms.push_back(Json{{"coeff", to_string(coeff)}, {"exp", exps}});
  }
  return Json{{"p", f.alphabet().p}, {"n", f.alphabet().n}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& doc) {
  try {
    const Alphabet alphabet{doc.at("p").get<int>(), doc.at("n").get<int>()};
    validate_alphabet(alphabet);
    Polynomial f(alphabet);
    for (const auto& term : doc.at("terms")) {
      auto exps = term.at("exp").get<ExponentVector>();
      if (exps.size() != alphabet.size()) {
        throw DimensionError("exponent array of length " + std::to_string(exps.size()) +
                             ", expected " + std::to_string(alphabet.size()));
      }
      const Json& c = term.at("coeff");
      const Rational coeff =
          c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
      f.add_term(exps, coeff);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial document: ") + e.what(), 0);
  }
}

Json to_json(const ReductionRecord& record) {
  Json used = Json::array();
  for (const auto& [coeff, index] : record.used) {
    used.push_back(Json{{"coeff", to_string(coeff)}, {"index", index.entries()}});
  }
  return Json{{"remainder", to_json(record.remainder)},
              {"remainder_text", to_string(record.remainder)},
              {"used", std::move(used)}};
}

Json to_json(const FExpansion& expansion) {
  Json out = Json::array();
  for (const auto& t : expansion) {
    out.push_back(Json{{"coeff", to_string(t.coefficient)}, {"comp", t.composition.vector().entries()}});
  }
  return out;
}

Json to_json(const GCombination& combination) {
  Json out = Json::array();
  for (const auto& t : combination) {
    out.push_back(Json{{"sign", t.sign},
                       {"multiplier", t.multiplier.exponents()},
                       {"comp", t.composition.vector().entries()}});
  }
  return out;
}

Json to_json(const HilbertTable& table) {
  Json rows = Json::array();
  for (const auto& [deg, dim] : table.entries) rows.push_back(Json{{"deg", deg}, {"dim", dim}});
  return Json{{"n", table.n}, {"p", table.p}, {"rows", std::move(rows)}, {"total", table.total}};
}

Json to_json(const GroebnerReport& report) {
  return Json{{"passed", report.passed},
              {"partial", report.partial},
              {"basis_size", report.basis_size},
              {"pairs_checked", report.pairs_checked},
              {"generators_checked", report.generators_checked},
              {"counterexample", report.counterexample}};
}

}  // namespace bqs
