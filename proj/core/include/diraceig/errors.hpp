#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diraceig {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vectors, forms or systems expressed in different bases were combined.
class BasisMismatch : public Error {
public:
  using Error::Error;
};

/// Requested family/rank outside the supported range.
class UnsupportedSystem : public Error {
public:
  using Error::Error;
};

/// A Weyl orbit grew past the configured cap; the orbit route is infeasible here.
class OrbitCapExceeded : public Error {
public:
  explicit OrbitCapExceeded(std::size_t cap)
      : Error("Weyl orbit exceeds the cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// The word is not reduced: an inversion root came out negative or repeated.
class NonReducedWord : public Error {
public:
  using Error::Error;
};

/// Marked-node recipe applied at a node whose highest-root coefficient does not fit.
class NodeNotOrderTwo : public Error {
public:
  using Error::Error;
};

/// The space carries no spin structure and the computation was not forced.
class NoSpinStructure : public Error {
public:
  using Error::Error;
};

/// Degenerate symmetric pair (no noncompact roots, K = G).
class InvalidPair : public Error {
public:
  using Error::Error;
};

/// Selector does not name a catalog entry or constructible space.
class UnknownSpace : public Error {
public:
  using Error::Error;
};

}  // namespace diraceig
