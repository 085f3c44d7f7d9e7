#pragma once

// Random sampling of words, automorphisms and groupoid elements for property
// sweeps. Deterministic for a given engine state.

#include <random>

#include "dnb/automorphism.hpp"
#include "dnb/groupoid.hpp"
#include "dnb/word.hpp"

namespace dnb::sample {

using Engine = std::mt19937_64;

// A reduced word of exactly `length` letters (e when the basis is empty).
Word reduced_word(const BasisPtr& basis, std::size_t length, Engine& rng);

// A reduced word of length uniform in [0, max_length].
Word word(const BasisPtr& basis, std::size_t max_length, Engine& rng);

// A product of `moves` elementary Nielsen automorphisms
// (x -> x y^±1, x -> y^±1 x, x -> x^-1), each with its known inverse.
GroupAut nielsen_automorphism(const BasisPtr& basis, std::size_t moves, Engine& rng);

// A normalized pure automorphism with a Nielsen psi and random g-vector.
PureAut pure_automorphism(const SurfacePtr& surface, Engine& rng, std::size_t moves = 3,
                          std::size_t max_length = 3);

const Basepoint& basepoint(const Surface& surface, Engine& rng);

GroupoidElement element(const Surface& surface, Engine& rng, std::size_t max_length = 4);

// An element whose source is `source`.
GroupoidElement element_from(const Surface& surface, const Basepoint& source, Engine& rng,
                             std::size_t max_length = 4);

}  // namespace dnb::sample
