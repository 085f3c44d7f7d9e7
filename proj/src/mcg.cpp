#include "dnb/mcg.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace dnb {

namespace {

struct Match {
  std::size_t target;
  int sign;
  Word conjugator;
};

bool assign(std::size_t i, const std::vector<std::vector<Match>>& options,
            std::vector<bool>& used, std::vector<const Match*>& chosen) {
  if (i == options.size()) {
    return true;
  }
  for (const Match& m : options[i]) {
    if (used[m.target]) {
      continue;
    }
    used[m.target] = true;
    chosen[i] = &m;
    if (assign(i + 1, options, used, chosen)) {
      return true;
    }
    used[m.target] = false;
  }
  return false;
}

void require_component(const Surface& surface, std::size_t component) {
  if (component >= surface.boundary_count()) {
    throw PreconditionError("boundary component " + std::to_string(component) +
                            " out of range");
  }
}

}  // namespace

PureAut boundary_twist(SurfacePtr surface, std::size_t component, const Integer& k) {
  require_component(*surface, component);
  const Word twist = power(surface->boundary_word(component), k);
  std::vector<Word> gvec(surface->basepoint_count(), Word(surface->basis()));
  if (component == 0) {
    for (std::size_t p = surface->component_end(0); p < gvec.size(); ++p) {
      gvec[p] = twist;
    }
    GroupAut psi = GroupAut::conjugation_by(twist);
    return PureAut::from_pair(std::move(surface), std::move(psi), std::move(gvec));
  }
  for (std::size_t p = surface->component_begin(component);
       p < surface->component_end(component); ++p) {
    gvec[p] = twist;
  }
  GroupAut psi = GroupAut::identity(surface->basis());
  return PureAut::from_pair(std::move(surface), std::move(psi), std::move(gvec));
}

bool ZieschangCertificate::is_identity_permutation() const {
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (permutation[i] != i) {
      return false;
    }
  }
  return true;
}

bool verify_certificate(const ZieschangCertificate& cert, const GroupAut& psi,
                        const Surface& surface) {
  const std::size_t b = surface.boundary_count();
  if (cert.permutation.size() != b || cert.conjugators.size() != b ||
      (cert.sign != 1 && cert.sign != -1)) {
    return false;
  }
  std::vector<bool> seen(b, false);
  for (std::size_t i = 0; i < b; ++i) {
    const std::size_t r = cert.permutation[i];
    if (r >= b || seen[r]) {
      return false;
    }
    seen[r] = true;
    Word expected = conjugate(cert.conjugators[i], power(surface.boundary_word(r), cert.sign));
    if (!(psi.apply(surface.boundary_word(i)) == expected)) {
      return false;
    }
  }
  return true;
}

Checked<ZieschangCertificate> zieschang_check(const GroupAut& psi, const Surface& surface) {
  using Result = Checked<ZieschangCertificate>;
  if (!same_basis(psi.basis(), surface.basis())) {
    throw MismatchError("psi is over a foreign basis");
  }
  const std::size_t b = surface.boundary_count();
  std::vector<std::vector<Match>> matches(b);
  for (std::size_t i = 0; i < b; ++i) {
    const Word image = psi.apply(surface.boundary_word(i));
    for (std::size_t j = 0; j < b; ++j) {
      for (int sign : {1, -1}) {
        if (auto l = is_conjugate(image, power(surface.boundary_word(j), sign))) {
          matches[i].push_back({j, sign, *l});
        }
      }
    }
    if (matches[i].empty()) {
      return Result::failure("psi(s" + std::to_string(i) + ") = " + to_string(image) +
                             " is not conjugate to any s_j^±1");
    }
  }

  // The sign is read off component 0 and enforced everywhere else.
  std::vector<int> signs;
  for (const Match& m : matches[0]) {
    if (std::find(signs.begin(), signs.end(), m.sign) == signs.end()) {
      signs.push_back(m.sign);
    }
  }
  std::string failure;
  for (int sign : signs) {
    std::vector<std::vector<Match>> options(b);
    std::optional<std::size_t> inconsistent;
    for (std::size_t i = 0; i < b; ++i) {
      for (const Match& m : matches[i]) {
        if (m.sign == sign) {
          options[i].push_back(m);
        }
      }
      if (options[i].empty() && !inconsistent) {
        inconsistent = i;
      }
    }
    if (inconsistent) {
      if (failure.empty()) {
        failure = "sign inconsistency: ε=" + std::string(sign > 0 ? "+1" : "-1") +
                  " from s0, but psi(s" + std::to_string(*inconsistent) +
                  ") only matches with the opposite sign";
      }
      continue;
    }
    std::vector<bool> used(b, false);
    std::vector<const Match*> chosen(b, nullptr);
    if (!assign(0, options, used, chosen)) {
      if (failure.empty()) {
        failure = "no bijective assignment of boundary components with ε=" +
                  std::string(sign > 0 ? "+1" : "-1");
      }
      continue;
    }
    ZieschangCertificate cert;
    cert.sign = sign;
    for (const Match* m : chosen) {
      cert.permutation.push_back(m->target);
      cert.conjugators.push_back(m->conjugator);
    }
    return cert;
  }
  return Result::failure(failure);
}

Checked<std::vector<Word>> conjugacy_class_action(const PureAut& aut) {
  const Surface& surface = *aut.surface();
  std::vector<Word> witnesses;
  for (std::size_t i = 0; i < surface.boundary_count(); ++i) {
    const Word& s = surface.boundary_word(i);
    auto h = is_conjugate(aut.psi().apply(s), s);
    if (!h) {
      return Checked<std::vector<Word>>::failure(
          "psi(s" + std::to_string(i) + ") is not conjugate to s" + std::to_string(i));
    }
    witnesses.push_back(*h);
  }
  return witnesses;
}

Word canonical_conjugator(const GroupAut& psi, const Surface& surface, std::size_t component) {
  if (component == 0) {
    throw PreconditionError("component 0 has no canonical conjugator");
  }
  require_component(surface, component);
  const Word& s = surface.boundary_word(component);
  auto h = is_conjugate(psi.apply(s), s);
  if (!h) {
    throw PreconditionError("psi(s" + std::to_string(component) +
                            ") is not conjugate to s" + std::to_string(component));
  }
  // s_i is a single letter, so the shortest element of h <s_i> is h with any
  // trailing s_i syllable removed.
  const auto& syllables = h->syllables();
  if (!syllables.empty() && syllables.back().generator == surface.s_index(component)) {
    return *h * Word::generator(surface.basis(), surface.s_index(component),
                                -syllables.back().exponent);
  }
  return *h;
}

TwistFactorization twist_factorization(const PureAut& aut) {
  BoundaryConstancy bc = is_boundary_constant(aut);
  if (!bc) {
    throw PreconditionError("not boundary-constant: arc " + arc_label(*bc.violation) +
                            " moved");
  }
  const Surface& surface = *aut.surface();
  TwistFactorization f{aut.psi(), {}};
  for (std::size_t i = 1; i < surface.boundary_count(); ++i) {
    Word c = canonical_conjugator(aut.psi(), surface, i);
    const Word& g = aut.gvec()[surface.component_begin(i)];
    auto k = power_of(inverse(c) * g, surface.boundary_word(i));
    if (!k) {
      // Two conjugators of the primitive s_i differ by a power of s_i.
      throw std::logic_error("conjugators of s" + std::to_string(i) +
                             " differ by a non-power");
    }
    f.twists.push_back({i, std::move(c), std::move(*k)});
  }
  return f;
}

PureAut from_twist_data(SurfacePtr surface, const GroupAut& psi,
                        const std::vector<Word>& conjugators,
                        const std::vector<Integer>& exponents) {
  const std::size_t b = surface->boundary_count();
  if (conjugators.size() + 1 != b || exponents.size() + 1 != b) {
    throw PreconditionError("twist data needs one entry per component 1.." +
                            std::to_string(b - 1));
  }
  if (!same_basis(psi.basis(), surface->basis())) {
    throw MismatchError("psi is over a foreign basis");
  }
  const Word& s0 = surface->boundary_word(0);
  if (!(psi.apply(s0) == s0)) {
    throw PreconditionError("psi(s0) = " + to_string(psi.apply(s0)) + " differs from s0");
  }
  std::vector<Word> gvec(surface->basepoint_count(), Word(surface->basis()));
  for (std::size_t i = 1; i < b; ++i) {
    const Word& s = surface->boundary_word(i);
    const Word& c = conjugators[i - 1];
    if (!(psi.apply(s) == conjugate(c, s))) {
      throw PreconditionError("psi(s" + std::to_string(i) + ") = " +
                              to_string(psi.apply(s)) + " is not c s" + std::to_string(i) +
                              " c^-1 for c = " + to_string(c));
    }
    const Word g = c * power(s, exponents[i - 1]);
    for (std::size_t p = surface->component_begin(i); p < surface->component_end(i); ++p) {
      gvec[p] = g;
    }
  }
  return PureAut::from_pair(std::move(surface), psi, std::move(gvec));
}

PureAut reconstruct(const SurfacePtr& surface, const TwistFactorization& f) {
  std::vector<Word> conjugators(surface->boundary_count() - 1, Word(surface->basis()));
  std::vector<Integer> zeros(surface->boundary_count() - 1, 0);
  for (const ComponentTwist& t : f.twists) {
    conjugators.at(t.component - 1) = t.conjugator;
  }
  PureAut result = from_twist_data(surface, f.psi_part, conjugators, zeros);
  for (const ComponentTwist& t : f.twists) {
    result = compose(result, boundary_twist(surface, t.component, t.exponent));
  }
  return result;
}

}  // namespace dnb
