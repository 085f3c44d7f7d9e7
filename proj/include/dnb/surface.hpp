#pragma once

// Bounded orientable surfaces with marked boundary basepoints, and the free
// basis of the fundamental group at the base basepoint x0 = (0, 0).

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dnb/numeric.hpp"
#include "dnb/word.hpp"

namespace dnb {

struct SurfaceSpec {
  unsigned genus = 0;
  unsigned boundary = 1;
  // basepoints[i] lists the positions on boundary component i, each an exact
  // rational in [0, 1), strictly increasing.
  std::vector<std::vector<Rational>> basepoints;

  bool operator==(const SurfaceSpec&) const = default;
};

struct Basepoint {
  std::size_t component = 0;
  Rational position;

  bool operator==(const Basepoint&) const = default;
  std::strong_ordering operator<=>(const Basepoint& other) const;
};

// Empty when `spec` is valid; otherwise names the first violated invariant.
std::optional<std::string> validate(const SurfaceSpec& spec);

// Generator names t1, u1, ..., tg, ug, s1, ..., s(b-1).
std::vector<std::string> standard_basis(const SurfaceSpec& spec);

// A validated surface. Boundary words follow the relation
//   s0 * s1 * ... * s(b-1) * [t1,u1] * ... * [tg,ug] = e,  [t,u] = t u t^-1 u^-1.
class Surface {
 public:
  // Throws PreconditionError with the validation diagnostic.
  explicit Surface(SurfaceSpec spec);

  const SurfaceSpec& spec() const noexcept { return spec_; }
  const BasisPtr& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_->rank(); }
  unsigned genus() const noexcept { return spec_.genus; }
  unsigned boundary_count() const noexcept { return spec_.boundary; }

  const Word& boundary_word(std::size_t component) const;

  // Basis indices of t_j, u_j (1-based j) and s_i (i >= 1).
  std::size_t t_index(std::size_t j) const { return 2 * (j - 1); }
  std::size_t u_index(std::size_t j) const { return 2 * (j - 1) + 1; }
  std::size_t s_index(std::size_t i) const { return 2 * spec_.genus + i - 1; }

  // All basepoints, component-major and by increasing position. Index 0 is x0.
  const std::vector<Basepoint>& basepoints() const noexcept { return basepoints_; }
  std::size_t basepoint_count() const noexcept { return basepoints_.size(); }
  std::optional<std::size_t> index_of(const Basepoint& p) const;
  // Throws PreconditionError for an unknown basepoint.
  std::size_t require_index(const Basepoint& p) const;
  bool contains(const Basepoint& p) const { return index_of(p).has_value(); }

  // Flat indices of the basepoints of one component.
  std::size_t component_begin(std::size_t component) const { return offsets_.at(component); }
  std::size_t component_end(std::size_t component) const { return offsets_.at(component + 1); }

  bool operator==(const Surface& other) const { return spec_ == other.spec_; }

 private:
  SurfaceSpec spec_;
  BasisPtr basis_;
  std::vector<Word> boundary_words_;
  std::vector<Basepoint> basepoints_;
  std::vector<std::size_t> offsets_;
};

using SurfacePtr = std::shared_ptr<const Surface>;

SurfacePtr make_surface(SurfaceSpec spec);

// Boundary word s_i of `surface` (s0 is derived from the surface relation).
Word boundary_word(const Surface& surface, std::size_t component);

std::string to_string(const Basepoint& p);

}  // namespace dnb
