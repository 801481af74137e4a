#include "orbitlab/named.hpp"

namespace orbitlab::named {

namespace {

const Scalar kI = Scalar::i();

// 1/sqrt8 = sqrt2/4
Scalar inv_sqrt8() { return Scalar::radical(Scalar::kSqrt2, Rational(1, 4)); }

Mat2 scaled(const Mat2& m, const Scalar& s) { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }

Mat2 x_block() { return scaled({0, 1, -1, 0}, inv_sqrt8()); }
Mat2 y_block() { return scaled({0, kI, kI, 0}, inv_sqrt8()); }

LieAlgebraElement pair(const Mat2& first, const Mat2& second) { return LieAlgebraElement({first, second}); }

// Direction of V: orthogonal to H under the Killing form.
LieAlgebraElement v_direction() {
  return pair({Scalar(2) * kI, 0, 0, Scalar(-2) * kI}, {kI, 0, 0, -kI});
}

}  // namespace

RepSpace example_space() { return RepSpace({2, 1}); }

RepVector paper_point() {
  const Scalar c = Scalar::radical(Scalar::kSqrt2, Rational(1, 2));  // 1/sqrt2
  RepVector p(example_space());
  p.add(Monomial{{2, 1}}, c);
  p.add(Monomial{{0, 0}}, c);
  return p;
}

RepVector real_form_point() {
  const Scalar c = Scalar::radical(Scalar::kSqrt2, Rational(1, 2));
  RepVector v(RepSpace({2}));
  v.add(Monomial{{2}}, c);
  v.add(Monomial{{0}}, c);
  return v;
}

LieAlgebraElement H() { return pair({kI, 0, 0, -kI}, {Scalar(-2) * kI, 0, 0, Scalar(2) * kI}); }

GroupElement sigma() { return GroupElement({Mat2{0, 1, -1, 0}, Mat2{0, kI, kI, 0}}); }

GroupElement tau() { return GroupElement({Mat2{1, 0, 0, 1}, Mat2{-1, 0, 0, -1}}); }

std::optional<LieAlgebraElement> lie_element(const std::string& name) {
  const Mat2 zero{};
  const Scalar two_sqrt2 = Scalar::radical(Scalar::kSqrt2, 2);
  if (name == "X1") return pair(x_block(), zero);
  if (name == "X2") return pair(zero, x_block());
  if (name == "Y1") return pair(y_block(), zero);
  if (name == "Y2") return pair(zero, y_block());
  if (name == "H") return H();
  // 1/(2 sqrt10) = sqrt10/20
  if (name == "V") return Scalar::radical(Scalar::kSqrt10, Rational(1, 20)) * v_direction();
  // (2 sqrt2 / sqrt5) V = V direction / 5
  if (name == "V1") return Scalar(Rational(1, 5)) * v_direction();
  if (name == "F1") return Scalar(2) * pair(x_block(), zero);
  if (name == "G1") return Scalar(2) * pair(y_block(), zero);
  if (name == "F2") return two_sqrt2 * pair(zero, x_block());
  if (name == "G2") return two_sqrt2 * pair(zero, y_block());
  return std::nullopt;
}

std::optional<GroupElement> group_element(const std::string& name) {
  if (name == "sigma") return sigma();
  if (name == "tau") return tau();
  if (name == "identity") return GroupElement::identity(2);
  return std::nullopt;
}

std::vector<std::pair<std::string, LieAlgebraElement>> killing_basis() {
  std::vector<std::pair<std::string, LieAlgebraElement>> out;
  for (const char* name : {"X1", "Y1", "X2", "Y2", "V"}) out.emplace_back(name, *lie_element(name));
  return out;
}

std::vector<std::pair<std::string, LieAlgebraElement>> paper_frame() {
  std::vector<std::pair<std::string, LieAlgebraElement>> out;
  for (const char* name : {"V1", "F1", "G1", "F2", "G2"}) out.emplace_back(name, *lie_element(name));
  return out;
}

std::vector<std::string> lie_element_names() {
  return {"X1", "X2", "Y1", "Y2", "H", "V", "V1", "F1", "F2", "G1", "G2"};
}

}  // namespace orbitlab::named
