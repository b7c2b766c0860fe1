#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torfan/fan.hpp"
#include "torfan/perturbation.hpp"
#include "torfan/polytope.hpp"
#include "torfan/rational.hpp"

namespace torfan::cli {

struct BundleOption {
  std::optional<BigInt> k;
  std::vector<BigInt> degrees;  // explicit n-array when k is absent
};

struct BlowupOption {
  IndexSet face;  // 0-based
  BigRational epsilon;
};

struct FanDocument {
  // As written in the document, before any bundle or blow-up is applied.
  Fan fan;
  MomentPolytope polytope;
  std::optional<std::vector<double>> twist;
  std::optional<BundleOption> bundle;
  std::optional<BlowupOption> blowup;
};

// Fan and polytope named by the shorthands "P^m", "P1xP1" and "C^n".
std::pair<Fan, MomentPolytope> named_base(std::string_view name);

// ParseError for malformed JSON (with line and column), ValidationError for
// well-formed documents describing an invalid fan.
FanDocument parse_fan_document(std::string_view text);
nlohmann::json fan_document_json(const FanDocument& doc);
std::string serialize_fan_document(const FanDocument& doc);

struct FamilyDocument {
  MatrixFamily family;
  std::optional<std::vector<double>> ray;
};

FamilyDocument parse_family_document(std::string_view text);

// True when the text is a matrix family rather than a fan document.
bool is_family_document(std::string_view text);

}  // namespace torfan::cli
