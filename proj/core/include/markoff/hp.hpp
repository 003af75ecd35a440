#pragma once

/**
 * @file hp.hpp
 * @brief 50-digit evaluation path for certification near the degenerate
 *        parameter, where double margins collapse.  The multiprecision
 *        backend stays out of this header: values come back as decimal
 *        strings, and descent results narrow to double for reporting while
 *        every comparison inside the descent runs at 50 digits.
 */

#include <complex>
#include <string>

#include "markoff/markoff_map.hpp"

namespace markoff {

/// phi at one region, evaluated at 50 significant digits and rendered as
/// "re+imi" with full precision.
std::string hp_region_value(const MuParams& mu, const MarkoffTriple& base,
                            const Slope& slope);

/// Dominant root of X^3 - 3X^2 + a, polished to 50 digits by Newton steps
/// starting from the double-precision root.
std::string hp_dominant_root(std::complex<double> a);

/// Trace reduction with all region values and comparisons at 50 digits.
ReductionOutcome hp_trace_reduce(const MuParams& mu, const MarkoffTriple& base,
                                 const Triangle& start, int depth_cap = 10000);

}  // namespace markoff
