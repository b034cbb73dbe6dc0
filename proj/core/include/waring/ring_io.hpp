#ifndef WARING_RING_IO_HPP
#define WARING_RING_IO_HPP

#include <string>

#include "waring/ring.hpp"

namespace waring {

// Ring-spec document: a JSON object with fields `moduli` (array of integers),
// `mult` (r x r array of coordinate arrays), `one` (coordinate array) and an
// optional `label`. Throws ValidationError on malformed input.
FiniteRingSpec parse_ring_spec(const std::string& text);
FiniteRingSpec load_ring_spec(const std::string& path);
std::string serialize_ring_spec(const FiniteRingSpec& spec);

// Validated constructor from a document.
Ring make_from_spec(const std::string& text, const RingOptions& opt = {});

}  // namespace waring

#endif
