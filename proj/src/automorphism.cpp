#include "dnb/automorphism.hpp"

namespace dnb {

namespace {

bool same_surface(const SurfacePtr& a, const SurfacePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_surface(const PureAut& a, const PureAut& b) {
  if (!same_surface(a.surface(), b.surface())) {
    throw MismatchError("automorphisms of different surfaces");
  }
}

Word substitute(const std::vector<Word>& images, const BasisPtr& basis, const Word& w) {
  if (!same_basis(basis, w.basis())) {
    throw MismatchError("word over a foreign basis");
  }
  Word out(basis);
  for (const Syllable& s : w.syllables()) {
    out = out * power(images[s.generator], s.exponent);
  }
  return out;
}

std::string subscript(std::size_t n) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(n)) {
    out += digits[c - '0'];
  }
  return out;
}

}  // namespace

GroupAut GroupAut::identity(BasisPtr basis) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    images.push_back(Word::generator(basis, i));
  }
  std::vector<Word> inverse_images = images;
  return GroupAut(std::move(basis), std::move(images), std::move(inverse_images));
}

GroupAut GroupAut::conjugation_by(const Word& g) {
  const BasisPtr& basis = g.basis();
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    Word x = Word::generator(basis, i);
    images.push_back(conjugate(g, x));
    inverse_images.push_back(conjugate(dnb::inverse(g), x));
  }
  return GroupAut(basis, std::move(images), std::move(inverse_images));
}

Word GroupAut::apply(const Word& w) const { return substitute(images_, basis_, w); }

Word GroupAut::apply_inverse(const Word& w) const {
  return substitute(inverse_images_, basis_, w);
}

GroupAut GroupAut::inverse() const { return GroupAut(basis_, inverse_images_, images_); }

Checked<GroupAut> verify_automorphism(const BasisPtr& basis, std::vector<Word> images,
                                      std::vector<Word> inverse_images) {
  if (images.size() != basis->rank() || inverse_images.size() != basis->rank()) {
    return Checked<GroupAut>::failure("images must be given for every generator");
  }
  for (const auto* table : {&images, &inverse_images}) {
    for (const Word& w : *table) {
      if (!same_basis(w.basis(), basis)) {
        return Checked<GroupAut>::failure("image over a foreign basis");
      }
    }
  }
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    Word x = Word::generator(basis, i);
    Word there_and_back = substitute(inverse_images, basis, images[i]);
    if (!(there_and_back == x)) {
      return Checked<GroupAut>::failure("generator " + basis->name(i) +
                                        ": psi_inv(psi(" + basis->name(i) +
                                        ")) = " + to_string(there_and_back));
    }
  }
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    Word x = Word::generator(basis, i);
    Word back_and_there = substitute(images, basis, inverse_images[i]);
    if (!(back_and_there == x)) {
      return Checked<GroupAut>::failure("generator " + basis->name(i) +
                                        ": psi(psi_inv(" + basis->name(i) +
                                        ")) = " + to_string(back_and_there));
    }
  }
  return GroupAut(basis, std::move(images), std::move(inverse_images));
}

GroupAut compose(const GroupAut& outer, const GroupAut& inner) {
  if (!same_basis(outer.basis(), inner.basis())) {
    throw MismatchError("automorphisms over different bases");
  }
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  for (std::size_t i = 0; i < inner.basis()->rank(); ++i) {
    images.push_back(outer.apply(inner.images()[i]));
    inverse_images.push_back(inner.apply_inverse(outer.inverse_images()[i]));
  }
  return GroupAut(inner.basis(), std::move(images), std::move(inverse_images));
}

PureAut PureAut::identity(SurfacePtr surface) {
  GroupAut psi = GroupAut::identity(surface->basis());
  std::vector<Word> gvec(surface->basepoint_count(), Word(surface->basis()));
  return PureAut(std::move(surface), std::move(psi), std::move(gvec));
}

PureAut PureAut::from_pair(SurfacePtr surface, GroupAut psi, std::vector<Word> gvec) {
  if (!same_basis(psi.basis(), surface->basis())) {
    throw MismatchError("psi is over a foreign basis");
  }
  if (gvec.size() != surface->basepoint_count()) {
    throw PreconditionError("g-vector has " + std::to_string(gvec.size()) +
                            " entries, surface has " +
                            std::to_string(surface->basepoint_count()) + " basepoints");
  }
  for (const Word& w : gvec) {
    if (!same_basis(w.basis(), surface->basis())) {
      throw MismatchError("g-vector entry over a foreign basis");
    }
  }
  const Word c = gvec.front();
  if (!c.is_identity()) {
    psi = compose(GroupAut::inner(c), psi);
    const Word c_inv = dnb::inverse(c);
    for (Word& w : gvec) {
      w = c_inv * w;
    }
  }
  return PureAut(std::move(surface), std::move(psi), std::move(gvec));
}

GroupoidElement PureAut::apply(const GroupoidElement& x) const {
  const std::size_t p = surface_->require_index(x.source());
  const std::size_t q = surface_->require_index(x.target());
  return with_word(x, dnb::inverse(gvec_[p]) * psi_.apply(x.word()) * gvec_[q]);
}

PureAut PureAut::inverse() const {
  // (psi, g)^-1 = (psi^-1, (psi^-1(g(p))^-1)).
  GroupAut psi_inv = psi_.inverse();
  std::vector<Word> gvec;
  gvec.reserve(gvec_.size());
  for (const Word& w : gvec_) {
    gvec.push_back(dnb::inverse(psi_inv.apply(w)));
  }
  return from_pair(surface_, std::move(psi_inv), std::move(gvec));
}

bool PureAut::operator==(const PureAut& other) const {
  return same_surface(surface_, other.surface_) && psi_ == other.psi_ &&
         gvec_ == other.gvec_;
}

PureAut make_pure_aut(SurfacePtr surface, GroupAut psi,
                      const std::map<Basepoint, Word>& gvec) {
  std::vector<Word> flat;
  flat.reserve(surface->basepoint_count());
  for (const Basepoint& p : surface->basepoints()) {
    auto it = gvec.find(p);
    if (it == gvec.end()) {
      throw PreconditionError("g-vector has no entry for basepoint " + to_string(p));
    }
    flat.push_back(it->second);
  }
  return PureAut::from_pair(std::move(surface), std::move(psi), std::move(flat));
}

GroupoidElement apply(const PureAut& aut, const GroupoidElement& x) { return aut.apply(x); }

PureAut compose(const PureAut& outer, const PureAut& inner) {
  require_same_surface(outer, inner);
  std::vector<Word> gvec;
  gvec.reserve(inner.gvec().size());
  for (std::size_t p = 0; p < inner.gvec().size(); ++p) {
    gvec.push_back(outer.psi().apply(inner.gvec()[p]) * outer.gvec()[p]);
  }
  return PureAut::from_pair(inner.surface(), compose(outer.psi(), inner.psi()),
                            std::move(gvec));
}

PureAut inverse(const PureAut& aut) { return aut.inverse(); }

bool equals(const PureAut& a, const PureAut& b) {
  require_same_surface(a, b);
  return a == b;
}

BoundaryConstancy is_boundary_constant(const PureAut& aut) {
  const Surface& surface = *aut.surface();
  for (std::size_t i = 0; i < surface.boundary_count(); ++i) {
    const std::size_t first = surface.component_begin(i);
    const std::size_t last = surface.component_end(i);
    const std::size_t n = last - first;

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      arcs.emplace_back(first + k, first + k + 1);
    }
    arcs.emplace_back(last - 1, first);
    for (std::size_t k = 0; k < n; ++k) {
      arcs.emplace_back(first + k, first + k);
    }

    for (const auto& [a, b] : arcs) {
      const Basepoint& from = surface.basepoints()[a];
      const Basepoint& to = surface.basepoints()[b];
      GroupoidElement arc = boundary_arc(surface, i, from.position, to.position);
      if (aut.apply(arc) == arc) {
        continue;
      }
      std::string reason;
      if (!(aut.gvec()[a] == aut.gvec()[b])) {
        reason = "g-vector not constant on component " + std::to_string(i) + ": g" +
                 to_string(from) + " = " + to_string(aut.gvec()[a]) + ", g" +
                 to_string(to) + " = " + to_string(aut.gvec()[b]);
      } else {
        const Word& gi = aut.gvec()[a];
        reason = "psi(s" + std::to_string(i) + ") = " +
                 to_string(aut.psi().apply(surface.boundary_word(i))) + " differs from g s" +
                 std::to_string(i) + " g^-1 = " +
                 to_string(conjugate(gi, surface.boundary_word(i)));
      }
      return {false, ArcViolation{i, from.position, to.position, std::move(reason)}};
    }
  }
  return {true, std::nullopt};
}

PureAut kernel_element(SurfacePtr surface, const Word& g) {
  std::vector<Word> gvec(surface->basepoint_count(), dnb::inverse(g));
  return PureAut::from_pair(std::move(surface), GroupAut::inner(g), std::move(gvec));
}

std::string arc_label(const ArcViolation& v) {
  return "γ" + subscript(v.component) + "(" + to_string(v.from) + "," + to_string(v.to) + ")";
}

}  // namespace dnb
