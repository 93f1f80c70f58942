#pragma once

// Alternative published forms of the named corollary constants.
//
// Several constants appear in more than one form (statement vs. proof, or a
// printed form that disagrees with a re-expansion of the theorem). Every form
// is kept evaluable; the defaults are the forms whose error vanishes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace horadam {

enum class CForm { statement, proof };            // C, plain d = 3
enum class DenominatorForm { printed, corrected };  // D (plain d = 3), J (alternating d = 3)
enum class C1SquaredForm { with_c1sq, without_c1sq };  // G (plain d = 4), N (alternating d = 4)
enum class HForm { printed, corrected };           // H, alternating d = 2

struct VariantSet {
  CForm C = CForm::statement;
  DenominatorForm D = DenominatorForm::corrected;
  C1SquaredForm G = C1SquaredForm::without_c1sq;
  HForm H = HForm::corrected;
  DenominatorForm J = DenominatorForm::corrected;
  C1SquaredForm N = C1SquaredForm::without_c1sq;

  friend bool operator==(const VariantSet&, const VariantSet&) = default;
};

/// One choice for one constant, e.g. "proof_C" or "with_c1sq_N".
struct VariantChoice {
  char constant = 'C';
  std::string form;

  std::string tag() const { return form + "_" + constant; }
};

/// Throws invalid_argument for names outside the known set.
VariantChoice parse_variant(std::string_view tag);
/// Returns `base` with the one constant replaced.
VariantSet apply_variant(VariantSet base, const VariantChoice& choice);
/// The forms that the estimate for (d, alternating) actually depends on,
/// joined with '+'; "none" when no ambiguous constant is involved.
std::string variant_tag(const VariantSet& set, int d, bool alternating);
/// Every accepted tag, in a fixed order.
const std::vector<std::string>& known_variant_tags();
/// The constant letters an estimate for (d, alternating) depends on.
std::string ambiguous_constants(int d, bool alternating);

}  // namespace horadam
