#pragma once

#include <cstdint>
#include <ostream>

#include "tropmono/point.hpp"

namespace tropmono::io {

// Runs the per-instance property suite and writes one JSON line per property:
// {"property": "...", "status": "pass|fail", "detail": ...}.  Returns the
// number of failures.  Deterministic for a fixed instance and seed.
int run_verify(const GeneratorSet& V, std::uint64_t seed, std::ostream& out);

}  // namespace tropmono::io
