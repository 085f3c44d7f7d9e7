#pragma once

// Automorphisms of the free group at x0 and pure automorphisms of the
// fundamental groupoid.
//
// A pure automorphism is a pair (psi, g) with psi in Aut(G) and one word
// g(p) per basepoint, acting by
//   (p, w, q)  |->  (p, g(p)^-1 psi(w) g(q), q).
// Pairs related by (psi, g) ~ (c^-1 psi(.) c, (c^-1 g(p))) act identically;
// the stored representative has g(x0) = e, so equality is syntactic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnb/error.hpp"
#include "dnb/groupoid.hpp"
#include "dnb/surface.hpp"
#include "dnb/word.hpp"

namespace dnb {

// An automorphism of a free group, carried together with a certified inverse.
class GroupAut {
 public:
  static GroupAut identity(BasisPtr basis);

  // w |-> g w g^-1
  static GroupAut conjugation_by(const Word& g);

  // The inner automorphism Inn_g, w |-> g^-1 w g.
  static GroupAut inner(const Word& g) { return conjugation_by(dnb::inverse(g)); }

  const BasisPtr& basis() const noexcept { return basis_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::vector<Word>& inverse_images() const noexcept { return inverse_images_; }

  Word operator()(const Word& w) const { return apply(w); }
  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;

  GroupAut inverse() const;

  // Compares images only; the inverse is determined by them.
  bool operator==(const GroupAut& other) const { return images_ == other.images_; }

 private:
  GroupAut(BasisPtr basis, std::vector<Word> images, std::vector<Word> inverse_images)
      : basis_(std::move(basis)),
        images_(std::move(images)),
        inverse_images_(std::move(inverse_images)) {}

  friend Checked<GroupAut> verify_automorphism(const BasisPtr&, std::vector<Word>,
                                               std::vector<Word>);
  friend GroupAut compose(const GroupAut&, const GroupAut&);

  BasisPtr basis_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

// Certifies that `inverse_images` inverts `images` on both sides. Both
// vectors are indexed by generator. The diagnostic names the first generator
// where a composite is not the identity.
Checked<GroupAut> verify_automorphism(const BasisPtr& basis, std::vector<Word> images,
                                      std::vector<Word> inverse_images);

// outer after inner.
GroupAut compose(const GroupAut& outer, const GroupAut& inner);

// The first failing arc reported by is_boundary_constant.
struct ArcViolation {
  std::size_t component = 0;
  Rational from;
  Rational to;
  std::string reason;
};

struct BoundaryConstancy {
  bool holds = true;
  std::optional<ArcViolation> violation;

  explicit operator bool() const noexcept { return holds; }
};

class PureAut {
 public:
  static PureAut identity(SurfacePtr surface);

  // Normalizes an arbitrary pair; `gvec` is indexed like surface->basepoints().
  static PureAut from_pair(SurfacePtr surface, GroupAut psi, std::vector<Word> gvec);

  const SurfacePtr& surface() const noexcept { return surface_; }
  const GroupAut& psi() const noexcept { return psi_; }
  const std::vector<Word>& gvec() const noexcept { return gvec_; }
  const Word& g(const Basepoint& p) const { return gvec_[surface_->require_index(p)]; }

  GroupoidElement apply(const GroupoidElement& x) const;
  GroupoidElement operator()(const GroupoidElement& x) const { return apply(x); }

  PureAut inverse() const;

  bool operator==(const PureAut& other) const;

 private:
  PureAut(SurfacePtr surface, GroupAut psi, std::vector<Word> gvec)
      : surface_(std::move(surface)), psi_(std::move(psi)), gvec_(std::move(gvec)) {}

  SurfacePtr surface_;
  GroupAut psi_;
  std::vector<Word> gvec_;
};

// Throws PreconditionError if a basepoint of the surface has no entry.
PureAut make_pure_aut(SurfacePtr surface, GroupAut psi,
                      const std::map<Basepoint, Word>& gvec);

GroupoidElement apply(const PureAut& aut, const GroupoidElement& x);

// outer after inner: (psi', g') o (psi, g) = (psi' psi, (psi'(g(p)) g'(p))).
PureAut compose(const PureAut& outer, const PureAut& inner);

PureAut inverse(const PureAut& aut);

bool equals(const PureAut& a, const PureAut& b);

// True iff every boundary arc (consecutive, wrapping and full loop) is fixed.
// Equivalently: g is constant on each component, and psi(s_i) = g_i s_i g_i^-1
// for the component constants g_i (g_0 = e).
BoundaryConstancy is_boundary_constant(const PureAut& aut);

// The pair (Inn_g, (g^-1, g^-1, ...)) in normal form; always the identity.
PureAut kernel_element(SurfacePtr surface, const Word& g);

// `γ₁(0,1/2)` style label.
std::string arc_label(const ArcViolation& v);

}  // namespace dnb
