#pragma once

#include "diraceig/dirac.hpp"

#include <string>

namespace diraceig {

/// {"space","n","lambda_sq","lambda_approx","terms":{"distance","lambda_sum",
/// "dim"},"lambda_set_size","method"} with every exact field a "p/q" string.
/// lambda_approx is a truncated decimal string with `digits` places. "formal"
/// appears (true) only for forced computations on non-spin pairs.
std::string result_to_json(const SymmetricPair& p, const DiracResult& r, int digits,
                           bool formal = false);

/// Catalog dump; expected values appear as "p/q" strings for constants and as
/// {"num":[...],"den":[...]} polynomial-coefficient descriptors in m otherwise.
std::string catalog_to_json();

}  // namespace diraceig
