#include "horadam/variants.hpp"

#include "horadam/error.hpp"

namespace horadam {
namespace {

std::string form_name(CForm f) { return f == CForm::statement ? "statement" : "proof"; }
std::string form_name(DenominatorForm f) {
  return f == DenominatorForm::printed ? "printed" : "corrected";
}
std::string form_name(C1SquaredForm f) {
  return f == C1SquaredForm::with_c1sq ? "with_c1sq" : "without_c1sq";
}
std::string form_name(HForm f) { return f == HForm::printed ? "printed" : "corrected"; }

std::string form_of(const VariantSet& set, char constant) {
  switch (constant) {
    case 'C': return form_name(set.C);
    case 'D': return form_name(set.D);
    case 'G': return form_name(set.G);
    case 'H': return form_name(set.H);
    case 'J': return form_name(set.J);
    case 'N': return form_name(set.N);
    default: return {};
  }
}

}  // namespace

const std::vector<std::string>& known_variant_tags() {
  static const std::vector<std::string> tags = {
      "statement_C",  "proof_C",         "printed_D",   "corrected_D",
      "with_c1sq_G",  "without_c1sq_G",  "printed_H",   "corrected_H",
      "printed_J",    "corrected_J",     "with_c1sq_N", "without_c1sq_N",
  };
  return tags;
}

VariantChoice parse_variant(std::string_view tag) {
  for (const auto& known : known_variant_tags()) {
    if (known == tag) {
      return VariantChoice{known.back(), known.substr(0, known.size() - 2)};
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown variant '" + std::string(tag) + "'");
}

VariantSet apply_variant(VariantSet base, const VariantChoice& choice) {
  const std::string& f = choice.form;
  switch (choice.constant) {
    case 'C': base.C = f == "proof" ? CForm::proof : CForm::statement; break;
    case 'D': base.D = f == "printed" ? DenominatorForm::printed : DenominatorForm::corrected; break;
    case 'J': base.J = f == "printed" ? DenominatorForm::printed : DenominatorForm::corrected; break;
    case 'G':
      base.G = f == "with_c1sq" ? C1SquaredForm::with_c1sq : C1SquaredForm::without_c1sq;
      break;
    case 'N':
      base.N = f == "with_c1sq" ? C1SquaredForm::with_c1sq : C1SquaredForm::without_c1sq;
      break;
    case 'H': base.H = f == "printed" ? HForm::printed : HForm::corrected; break;
    default: throw Error(ErrorCode::invalid_argument, "unknown variant constant");
  }
  return base;
}

std::string ambiguous_constants(int d, bool alternating) {
  if (!alternating) {
    if (d == 3) return "CD";
    if (d == 4) return "G";
    return {};
  }
  if (d == 2) return "H";
  if (d == 3) return "J";
  if (d == 4) return "N";
  return {};
}

std::string variant_tag(const VariantSet& set, int d, bool alternating) {
  const std::string letters = ambiguous_constants(d, alternating);
  if (letters.empty()) return "none";
  std::string out;
  for (char c : letters) {
    if (!out.empty()) out += '+';
    out += form_of(set, c) + "_" + c;
  }
  return out;
}

}  // namespace horadam
