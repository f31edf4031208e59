#pragma once

// Diagonal forms and their fold into reflexive functions; the image
// hierarchy a subject holds of the group.

#include <optional>
#include <string>
#include <vector>

#include "erg/group.hpp"
#include "erg/pad.hpp"
#include "erg/symbolic.hpp"

namespace erg {

/// A bracketed polynomial raised to the images one stratum up. A node with
/// an empty exponent is a bare leaf.
struct DiagonalForm {
  PolynomialExpr base;
  std::vector<DiagonalForm> exponent;
};

DiagonalForm build_diagonal(const StratificationTree& t);
inline DiagonalForm build_diagonal(const PolynomialExpr& p) { return build_diagonal(stratify(p)); }

/// The exponent W of a non-leaf form: its images folded and combined with the
/// operator of the base (product for a variable base). Throws erg::Error for
/// a bare leaf.
SymbolicAlt fold_exponent(const DiagonalForm& d, int width = kDefaultWidth);

/// Folds P^W to P + ~W bottom-up. A bare leaf folds to its own variable.
SymbolicAlt fold(const DiagonalForm& d, int width = kDefaultWidth);

/// fold(build_diagonal(p)).
SymbolicAlt reflexive_function(const PolynomialExpr& p, int width = kDefaultWidth);

/// One level of a subject's reflexion.
struct ImageNode {
  std::string label;  // "Subject", "W", "Image 1", "Image 1.2", ...
  SymbolicAlt value;
  /// Root only: the lowest state the subject can settle on. `value` is then
  /// the highest one.
  std::optional<SymbolicAlt> lower;
  /// Decoded when `value` is constant and of width 3.
  std::optional<pad::Emotion> emotion;
  std::vector<ImageNode> children;
};

/// Image tree of `viewpoint`. Influences are substituted everywhere except
/// for the viewpoint itself; subjects without an influence stay symbolic.
/// The root carries the viewpoint's decision bounds: the reflexive function
/// with the viewpoint fixed to top (`value`) and to bottom (`lower`).
/// Throws erg::Error if the viewpoint is not in the group.
ImageNode annotate_images(const DiagonalForm& d, const Assignment& influences,
                          const Subject& viewpoint, int width = kDefaultWidth);

/// Indented, one node per line: "label: value[ Emotion]".
std::string render_images(const ImageNode& root);

}  // namespace erg
