#include "dnb/random.hpp"

namespace dnb::sample {

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, Engine& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Word reduced_word(const BasisPtr& basis, std::size_t length, Engine& rng) {
  const std::size_t rank = basis->rank();
  if (rank == 0) {
    return Word(basis);
  }
  // Letters are encoded as 2*generator + (inverse ? 1 : 0).
  std::vector<Syllable> raw;
  std::size_t previous = 2 * rank;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t letter;
    do {
      letter = uniform(0, 2 * rank - 1, rng);
    } while (previous < 2 * rank && letter == (previous ^ 1U));
    previous = letter;
    raw.push_back({static_cast<std::uint32_t>(letter / 2), letter % 2 ? -1 : 1});
  }
  return Word(basis, raw);
}

Word word(const BasisPtr& basis, std::size_t max_length, Engine& rng) {
  return reduced_word(basis, uniform(0, max_length, rng), rng);
}

GroupAut nielsen_automorphism(const BasisPtr& basis, std::size_t moves, Engine& rng) {
  const std::size_t rank = basis->rank();
  GroupAut result = GroupAut::identity(basis);
  if (rank == 0) {
    return result;
  }
  for (std::size_t step = 0; step < moves; ++step) {
    std::vector<Word> images;
    std::vector<Word> inverse_images;
    for (std::size_t i = 0; i < rank; ++i) {
      images.push_back(Word::generator(basis, i));
    }
    inverse_images = images;
    const std::size_t x = uniform(0, rank - 1, rng);
    const std::size_t kind = rank == 1 ? 0 : uniform(0, 2, rng);
    if (kind == 0) {
      images[x] = inverse(images[x]);
      inverse_images[x] = images[x];
    } else {
      std::size_t y = uniform(0, rank - 2, rng);
      if (y >= x) {
        ++y;
      }
      const int e = uniform(0, 1, rng) ? 1 : -1;
      const Word gx = Word::generator(basis, x);
      const Word gy = Word::generator(basis, y, e);
      if (kind == 1) {
        images[x] = gx * gy;
        inverse_images[x] = gx * inverse(gy);
      } else {
        images[x] = gy * gx;
        inverse_images[x] = inverse(gy) * gx;
      }
    }
    result = compose(verify_automorphism(basis, images, inverse_images).value(), result);
  }
  return result;
}

PureAut pure_automorphism(const SurfacePtr& surface, Engine& rng, std::size_t moves,
                          std::size_t max_length) {
  GroupAut psi = nielsen_automorphism(surface->basis(), moves, rng);
  std::vector<Word> gvec;
  for (std::size_t p = 0; p < surface->basepoint_count(); ++p) {
    gvec.push_back(word(surface->basis(), max_length, rng));
  }
  return PureAut::from_pair(surface, std::move(psi), std::move(gvec));
}

const Basepoint& basepoint(const Surface& surface, Engine& rng) {
  return surface.basepoints()[uniform(0, surface.basepoint_count() - 1, rng)];
}

GroupoidElement element(const Surface& surface, Engine& rng, std::size_t max_length) {
  return element_from(surface, basepoint(surface, rng), rng, max_length);
}

GroupoidElement element_from(const Surface& surface, const Basepoint& source, Engine& rng,
                             std::size_t max_length) {
  return GroupoidElement(surface, source, word(surface.basis(), max_length, rng),
                         basepoint(surface, rng));
}

}  // namespace dnb::sample
