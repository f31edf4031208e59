#include "erg/reflexion.hpp"

#include <algorithm>

#include "erg/error.hpp"

namespace erg {

DiagonalForm build_diagonal(const StratificationTree& t) {
  DiagonalForm d{t.stratum, {}};
  for (const auto& c : t.children) d.exponent.push_back(build_diagonal(c));
  return d;
}

SymbolicAlt fold_exponent(const DiagonalForm& d, int width) {
  if (d.exponent.empty()) throw Error("bare leaf [" + d.base.to_string() + "] has no exponent");
  SymbolicAlt w = fold(d.exponent.front(), width);
  const bool sum = d.base.kind() == PolynomialExpr::Kind::Sum;
  for (std::size_t i = 1; i < d.exponent.size(); ++i) {
    SymbolicAlt image = fold(d.exponent[i], width);
    w = sum ? join(w, image) : meet(w, image);
  }
  return w;
}

SymbolicAlt fold(const DiagonalForm& d, int width) {
  SymbolicAlt base = SymbolicAlt::from_polynomial(d.base, width);
  if (d.exponent.empty()) return base;
  return join(base, complement(fold_exponent(d, width)));
}

SymbolicAlt reflexive_function(const PolynomialExpr& p, int width) {
  return fold(build_diagonal(p), width);
}

namespace {

ImageNode make_node(std::string label, SymbolicAlt value) {
  ImageNode n{std::move(label), std::move(value), std::nullopt, std::nullopt, {}};
  if (auto k = n.value.constant_value(); k && k->width() == 3) n.emotion = pad::decode(*k);
  return n;
}

void add_images(ImageNode& parent, const std::string& prefix, const DiagonalForm& d,
                const Assignment& subs, int width) {
  for (std::size_t i = 0; i < d.exponent.size(); ++i) {
    const auto& child = d.exponent[i];
    const std::string label = prefix + std::to_string(i + 1);
    ImageNode node = make_node(label, fold(child, width).substitute(subs));
    add_images(node, label + ".", child, subs, width);
    parent.children.push_back(std::move(node));
  }
}

std::string node_text(const SymbolicAlt& value, const std::optional<pad::Emotion>& emotion) {
  std::string out = value.to_string();
  if (emotion) out += " " + std::string(pad::name(*emotion));
  return out;
}

void render(const ImageNode& n, int depth, std::string& out) {
  out.append(2 * static_cast<std::size_t>(depth), ' ');
  out += n.label + ": " + node_text(n.value, n.emotion);
  if (n.lower) out += "  (interval [" + n.lower->to_string() + ", " + n.value.to_string() + "])";
  out += '\n';
  for (const auto& c : n.children) render(c, depth + 1, out);
}

}  // namespace

ImageNode annotate_images(const DiagonalForm& d, const Assignment& influences,
                          const Subject& viewpoint, int width) {
  const auto& group = d.base.subjects();
  if (!std::binary_search(group.begin(), group.end(), viewpoint)) {
    throw Error("viewpoint '" + viewpoint.id() + "' is not a member of the group");
  }
  Assignment subs;
  for (const auto& [s, v] : influences) {
    if (s != viewpoint && std::binary_search(group.begin(), group.end(), s)) subs.emplace(s, v);
  }
  const SymbolicAlt phi = fold(d, width).substitute(subs);
  ImageNode root = make_node("Subject", phi.substitute({{viewpoint, Alternative::top(width)}}));
  root.lower = phi.substitute({{viewpoint, Alternative::bottom(width)}});
  if (!d.exponent.empty()) {
    ImageNode w = make_node("W", fold_exponent(d, width).substitute(subs));
    add_images(w, "Image ", d, subs, width);
    root.children.push_back(std::move(w));
  }
  return root;
}

std::string render_images(const ImageNode& root) {
  std::string out;
  render(root, 0, out);
  return out;
}

}  // namespace erg
