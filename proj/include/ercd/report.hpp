#pragma once

#include "ercd/verify.hpp"

namespace ercd {

/// JSON rendering of one suite report:
///   {suite, engine_version, mass_mode, checks: [...], summary: {...}}
/// Deterministic byte-for-byte: key order and formatting are fixed.
std::string emitJson(const VerificationReport& r);

/// JSON array of several suite reports, same determinism guarantee.
std::string emitJson(const std::vector<VerificationReport>& rs);

/// Line-oriented rendering: one check per line
///   <status>  <id>  [<paper ref>](  -- <witness>)?
/// followed by a single summary line.  Witness newlines collapse to "; ".
std::string emitText(const VerificationReport& r);
std::string emitText(const std::vector<VerificationReport>& rs);

/// Golden dump of a matrix catalog (cd16, ercd64, a32): every element with
/// its label in the canonical matrix format.
std::string dumpCatalog(const std::string& name);

/// Golden dump of a generator set: the four translations, the six rotations
/// and boosts and the wave equation in the canonical operator format.
std::string dumpSet(const std::string& name);

}  // namespace ercd
