#include "hsh/serialization.hpp"

#include <string>

namespace hsh {

nlohmann::ordered_json to_json(const MultiIndex& idx) {
  return nlohmann::ordered_json{{"N", idx.dimension()},
                        {"l", idx.chain()},
                        {"branch", idx.branch() == Branch::plus ? "+" : "-"}};
}

MultiIndex multi_index_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw InvalidMultiIndex("multi-index must be a JSON object");
  if (!j.contains("N") || !j["N"].is_number_integer()) {
    throw InvalidMultiIndex("multi-index needs an integer \"N\"");
  }
  if (!j.contains("l") || !j["l"].is_array()) {
    throw InvalidMultiIndex("multi-index needs an array \"l\"");
  }
  std::vector<int> chain;
  for (const auto& entry : j["l"]) {
    if (!entry.is_number_integer()) throw InvalidMultiIndex("\"l\" entries must be integers");
    chain.push_back(entry.get<int>());
  }
  if (j["N"].get<long long>() != static_cast<long long>(chain.size())) {
    throw InvalidMultiIndex("\"N\" = " + j["N"].dump() + " but \"l\" has " +
                            std::to_string(chain.size()) + " entries");
  }
  Branch branch = Branch::plus;
  if (j.contains("branch")) {
    const auto& b = j["branch"];
    if (b == "+") {
      branch = Branch::plus;
    } else if (b == "-") {
      branch = Branch::minus;
    } else {
      throw InvalidMultiIndex("\"branch\" must be \"+\" or \"-\"");
    }
  }
  return MultiIndex(std::move(chain), branch);
}

MultiIndex parse_multi_index(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw InvalidMultiIndex(std::string("malformed multi-index JSON: ") + e.what());
  }
  return multi_index_from_json(j);
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  return nlohmann::ordered_json{{"index", to_json(report.index)},
                        {"lambda", report.lambda},
                        {"eigen_residual_max", report.eigen_residual_max},
                        {"norm_relerr", report.norm_relerr},
                        {"ortho_max", report.ortho_max},
                        {"passed", report.passed}};
}

}  // namespace hsh
