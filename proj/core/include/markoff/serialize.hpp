#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and text encodings: map snapshots, reduction traces,
 *        verification reports, systole bounds, and complex-literal parsing
 *        for the command line.  All encodings are deterministic: identical
 *        values produce identical bytes.
 */

#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "markoff/charvar.hpp"
#include "markoff/markoff_map.hpp"
#include "markoff/systole.hpp"
#include "markoff/verify.hpp"

namespace markoff {

/// [re, im]
nlohmann::json complex_json(std::complex<double> v);

/// "a", "a+bi", "a-bi", "bi", "i" literals (whitespace-free).
/// Throws std::invalid_argument on anything else.
std::complex<double> parse_complex(const std::string& text);

/// Plain-text rendering: "a", "a+bi" or "a-bi" with %.15g components.
std::string format_complex(std::complex<double> v);

nlohmann::json to_json(const MuParams& mu);
nlohmann::json to_json(const MarkoffTriple& t);
nlohmann::json to_json(const Triangle& t);

/// {"mu": [...], "base": [...], "regions": {"p/q": [re, im]}} over every
/// region the map has evaluated so far.
nlohmann::json map_snapshot(const MarkoffMap& map);

/// Reduction result with the visited vertices as an ordered list.
nlohmann::json to_json(const ReductionOutcome& r);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SystoleBound& b);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const NonFuchsianTorusReport& r);

}  // namespace markoff
