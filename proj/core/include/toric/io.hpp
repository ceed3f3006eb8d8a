#pragma once

// JSON documents for pairs and certificates. Rationals travel as reduced
// "p/q" strings; JSON numbers are rejected wherever a rational is expected.
// Keys are emitted in a fixed order so output is byte-for-byte stable.

#include <cstdint>
#include <string>
#include <string_view>

#include "toric/complement.hpp"
#include "toric/toric_pair.hpp"

namespace toric {

/// {"name"?, "dim", "rays": [[int...]...], "coeffs": ["p/q"...]}.
/// Throws InputError on malformed JSON or on any validation failure.
ToricPair parse_pair(std::string_view text);
/// Same document shape without running validate.
ToricPair parse_pair_unchecked(std::string_view text);
std::string emit_pair(const ToricPair& pair);

/// Certificate with the pair inlined under "pair". `verified` records
/// whether the writer ran verify_certificate successfully; documents marked
/// verified are re-verified on load unless `reverify` is false.
std::string emit_certificate(const ComplementCertificate& cert, bool verified);
ComplementCertificate parse_certificate(std::string_view text, bool reverify = true);

/// Deterministic random valid pair: primitive distinct rays with entries in
/// [-2, 2] (until the origin is interior) and coefficients k/q with
/// 1 <= k <= q <= denominator_bound. Throws Error "generation" after a
/// bounded number of retries.
ToricPair random_pair(std::size_t dim, std::size_t ray_count,
                      unsigned denominator_bound, std::uint64_t seed);

}  // namespace toric
