#pragma once

// Boundary Dehn twists, the Zieschang geometricity condition and the
// factorization of a boundary-constant automorphism into a base part and
// boundary twists.

#include <vector>

#include "dnb/automorphism.hpp"
#include "dnb/error.hpp"

namespace dnb {

// Twist about the curve parallel to boundary component i, raised to k.
// For i >= 1: psi = id and g = s_i^k on component i. For i = 0 the twist is
// pushed off the base component: psi = conjugation by s0^k and g = s0^k on
// every other component.
PureAut boundary_twist(SurfacePtr surface, std::size_t component, const Integer& k);

// psi(s_i) = conjugators[i] * s_{permutation[i]}^sign * conjugators[i]^-1.
struct ZieschangCertificate {
  std::vector<std::size_t> permutation;
  int sign = 1;
  std::vector<Word> conjugators;

  bool is_identity_permutation() const;
};

// Re-checks a certificate by direct multiplication.
bool verify_certificate(const ZieschangCertificate& cert, const GroupAut& psi,
                        const Surface& surface);

Checked<ZieschangCertificate> zieschang_check(const GroupAut& psi, const Surface& surface);

// h_i with psi(s_i) = h_i s_i h_i^-1 for every component, in component order.
Checked<std::vector<Word>> conjugacy_class_action(const PureAut& aut);

// Among the solutions x of psi(s_i) = x s_i x^-1 (the coset h <s_i>), the one
// of minimal length. Requires i >= 1 and that a solution exists.
Word canonical_conjugator(const GroupAut& psi, const Surface& surface, std::size_t component);

struct ComponentTwist {
  std::size_t component = 0;
  Word conjugator;
  Integer exponent;
};

// For a boundary-constant aut with component constants g_i:
//   g_i = c_i * s_i^(k_i), psi(s_i) = c_i s_i c_i^-1, i = 1..b-1,
// with c_i canonical. Component 0 carries no exponent.
struct TwistFactorization {
  GroupAut psi_part;
  std::vector<ComponentTwist> twists;
};

// Throws PreconditionError unless `aut` is boundary-constant.
TwistFactorization twist_factorization(const PureAut& aut);

// Builds (psi, g) with g = c_i s_i^(k_i) on component i >= 1 and e on
// component 0. `conjugators` and `exponents` have one entry per component
// 1..b-1. Throws PreconditionError when psi(s0) != s0 or some psi(s_i) is not
// c_i s_i c_i^-1.
PureAut from_twist_data(SurfacePtr surface, const GroupAut& psi,
                        const std::vector<Word>& conjugators,
                        const std::vector<Integer>& exponents);

// The base part (psi, c) composed with all twists T_i^(k_i).
PureAut reconstruct(const SurfacePtr& surface, const TwistFactorization& f);

}  // namespace dnb
