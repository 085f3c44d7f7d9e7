#include "dnb/surface.hpp"

#include <algorithm>

#include "dnb/error.hpp"

namespace dnb {

std::strong_ordering Basepoint::operator<=>(const Basepoint& other) const {
  if (auto c = component <=> other.component; c != 0) {
    return c;
  }
  if (position < other.position) {
    return std::strong_ordering::less;
  }
  if (other.position < position) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::optional<std::string> validate(const SurfaceSpec& spec) {
  if (spec.boundary == 0) {
    return "surface must be bounded";
  }
  if (spec.basepoints.size() != spec.boundary) {
    return "expected basepoints for " + std::to_string(spec.boundary) +
           " boundary components, got " + std::to_string(spec.basepoints.size());
  }
  for (std::size_t i = 0; i < spec.basepoints.size(); ++i) {
    const auto& positions = spec.basepoints[i];
    const std::string where = "boundary component " + std::to_string(i);
    if (positions.empty()) {
      return where + " has no basepoint";
    }
    for (std::size_t k = 0; k < positions.size(); ++k) {
      if (positions[k] < 0 || positions[k] >= 1) {
        return where + ": position " + to_string(positions[k]) + " outside [0,1)";
      }
      if (k > 0 && !(positions[k - 1] < positions[k])) {
        return where + ": positions not strictly increasing at " + to_string(positions[k]);
      }
    }
  }
  const auto& base = spec.basepoints.front();
  if (std::find(base.begin(), base.end(), Rational(0)) == base.end()) {
    return "base basepoint absent";
  }
  return std::nullopt;
}

std::vector<std::string> standard_basis(const SurfaceSpec& spec) {
  std::vector<std::string> names;
  for (unsigned j = 1; j <= spec.genus; ++j) {
    names.push_back("t" + std::to_string(j));
    names.push_back("u" + std::to_string(j));
  }
  for (unsigned i = 1; i < spec.boundary; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  return names;
}

Surface::Surface(SurfaceSpec spec) : spec_(std::move(spec)) {
  if (auto diagnostic = validate(spec_)) {
    throw PreconditionError(*diagnostic);
  }
  basis_ = make_basis(standard_basis(spec_));

  Word relation_tail(basis_);
  for (unsigned i = 1; i < spec_.boundary; ++i) {
    relation_tail = relation_tail * Word::generator(basis_, s_index(i));
  }
  for (unsigned j = 1; j <= spec_.genus; ++j) {
    Word t = Word::generator(basis_, t_index(j));
    Word u = Word::generator(basis_, u_index(j));
    relation_tail = relation_tail * t * u * inverse(t) * inverse(u);
  }
  boundary_words_.push_back(inverse(relation_tail));
  for (unsigned i = 1; i < spec_.boundary; ++i) {
    boundary_words_.push_back(Word::generator(basis_, s_index(i)));
  }

  offsets_.push_back(0);
  for (std::size_t i = 0; i < spec_.basepoints.size(); ++i) {
    for (const Rational& position : spec_.basepoints[i]) {
      basepoints_.push_back({i, position});
    }
    offsets_.push_back(basepoints_.size());
  }
}

const Word& Surface::boundary_word(std::size_t component) const {
  if (component >= boundary_words_.size()) {
    throw PreconditionError("boundary component " + std::to_string(component) +
                            " out of range");
  }
  return boundary_words_[component];
}

std::optional<std::size_t> Surface::index_of(const Basepoint& p) const {
  if (p.component >= spec_.boundary) {
    return std::nullopt;
  }
  auto first = basepoints_.begin() + static_cast<std::ptrdiff_t>(offsets_[p.component]);
  auto last = basepoints_.begin() + static_cast<std::ptrdiff_t>(offsets_[p.component + 1]);
  auto it = std::lower_bound(first, last, p);
  if (it == last || !(*it == p)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - basepoints_.begin());
}

std::size_t Surface::require_index(const Basepoint& p) const {
  auto index = index_of(p);
  if (!index) {
    throw PreconditionError("unknown basepoint " + to_string(p));
  }
  return *index;
}

SurfacePtr make_surface(SurfaceSpec spec) {
  return std::make_shared<const Surface>(std::move(spec));
}

Word boundary_word(const Surface& surface, std::size_t component) {
  return surface.boundary_word(component);
}

std::string to_string(const Basepoint& p) {
  return "(" + std::to_string(p.component) + "," + to_string(p.position) + ")";
}

}  // namespace dnb
