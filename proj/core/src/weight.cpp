#include "diraceig/weight.hpp"

namespace diraceig {

namespace {

void require_same_basis(const BasisTag& a, const BasisTag& b) {
  if (!(a == b)) throw BasisMismatch("vectors expressed in different bases");
}

}  // namespace

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  require_same_basis(a.basis, b.basis);
  WeightVec r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  require_same_basis(a.basis, b.basis);
  WeightVec r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= b.coords[k];
  return r;
}

WeightVec operator-(const WeightVec& a) {
  WeightVec r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

WeightVec operator*(const Rational& c, const WeightVec& v) {
  WeightVec r = v;
  for (auto& x : r.coords) x *= c;
  return r;
}

Rational inner(const InnerForm& form, const WeightVec& a, const WeightVec& b) {
  require_same_basis(form.basis, a.basis);
  require_same_basis(form.basis, b.basis);
  const std::size_t n = a.coords.size();
  if (form.gram.size() != n || b.coords.size() != n)
    throw BasisMismatch("form and vector dimensions disagree");
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j].is_zero()) continue;
      row += form.gram[i][j] * b.coords[j];
    }
    total += a.coords[i] * row;
  }
  return total;
}

Rational norm_sq(const InnerForm& form, const WeightVec& v) { return inner(form, v, v); }

}  // namespace diraceig
