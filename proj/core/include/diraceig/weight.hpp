#pragma once

#include "diraceig/errors.hpp"
#include "diraceig/rational.hpp"

#include <vector>

namespace diraceig {

enum class BasisKind { orthogonal, simple_root };

/// Ambient coordinate convention a vector is expressed in.
struct BasisTag {
  BasisKind kind = BasisKind::orthogonal;
  int ambient_dim = 0;
  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

/// Exact coordinate vector in a declared basis. Vectors in different bases
/// never combine arithmetically (BasisMismatch).
struct WeightVec {
  std::vector<Rational> coords;
  BasisTag basis;

  static WeightVec zero(BasisTag tag) {
    return WeightVec{std::vector<Rational>(static_cast<std::size_t>(tag.ambient_dim)), tag};
  }

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a);
WeightVec operator*(const Rational& c, const WeightVec& v);

/// Symmetric bilinear form given by its Gram matrix over the ambient basis.
struct InnerForm {
  std::vector<std::vector<Rational>> gram;
  BasisTag basis;
};

/// Exact value of the form; all three tags must agree.
Rational inner(const InnerForm& form, const WeightVec& a, const WeightVec& b);
Rational norm_sq(const InnerForm& form, const WeightVec& v);

}  // namespace diraceig
