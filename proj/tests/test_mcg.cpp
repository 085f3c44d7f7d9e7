#include "doctest.h"
#include "dnb/mcg.hpp"
#include "dnb/random.hpp"

using namespace dnb;

namespace {

SurfacePtr surface(unsigned g, unsigned b, std::vector<std::vector<Rational>> points = {}) {
  if (points.empty()) {
    points.assign(b, {Rational(0)});
  }
  return make_surface({g, b, std::move(points)});
}

SurfacePtr torus2() {
  static const SurfacePtr s = surface(1, 2, {{Rational(0)}, {Rational(0), Rational(1, 2)}});
  return s;
}

SurfacePtr torus3() {
  static const SurfacePtr s =
      surface(1, 3, {{Rational(0)}, {Rational(0), Rational(1, 4), Rational(1, 2)}, {Rational(0), Rational(2, 3)}});
  return s;
}

Word word(const SurfacePtr& s, const char* text) { return parse_word(s->basis(), text); }

GroupAut group_aut(const SurfacePtr& s, std::vector<const char*> images,
                   std::vector<const char*> inverse_images) {
  std::vector<Word> a;
  std::vector<Word> b;
  for (auto* t : images) a.push_back(word(s, t));
  for (auto* t : inverse_images) b.push_back(word(s, t));
  return verify_automorphism(s->basis(), a, b).value();
}

}  // namespace

TEST_CASE("boundary twists") {
  const SurfacePtr annulus = surface(0, 2, {{Rational(0)}, {Rational(0), Rational(1, 2)}});
  CHECK(boundary_twist(annulus, 1, 0) == PureAut::identity(annulus));
  const PureAut t = boundary_twist(annulus, 1, 1);
  CHECK(t.psi() == GroupAut::identity(annulus->basis()));
  CHECK(t.gvec()[0].is_identity());
  CHECK(t.gvec()[1] == word(annulus, "s1"));
  CHECK(t.gvec()[2] == word(annulus, "s1"));

  const SurfacePtr s = torus2();
  const PureAut t0 = boundary_twist(s, 0, 2);
  CHECK(is_boundary_constant(t0));
  CHECK(t0.psi().apply(s->boundary_word(0)) == s->boundary_word(0));
  CHECK(t0.gvec()[1] == power(s->boundary_word(0), 2));
  CHECK_THROWS_AS(boundary_twist(s, 2, 1), PreconditionError);

  // The star arc into component 1 picks up s1^k.
  const GroupoidElement star(*s, {0, Rational(0)}, Word(s->basis()), {1, Rational(1, 2)});
  CHECK(boundary_twist(s, 1, 3).apply(star).word() == word(s, "s1^3"));
}

TEST_CASE("twists form a free abelian subgroup") {
  for (const SurfacePtr& s : {torus2(), torus3(), surface(2, 1), surface(0, 3)}) {
    const PureAut id = PureAut::identity(s);
    for (std::size_t i = 0; i < s->boundary_count(); ++i) {
      for (int j = -3; j <= 3; ++j) {
        const PureAut tj = boundary_twist(s, i, j);
        CHECK((tj == id) == (j == 0));
        CHECK(is_boundary_constant(tj));
        auto cert = zieschang_check(tj.psi(), *s);
        REQUIRE(cert);
        CHECK(cert.value().sign == 1);
        CHECK(cert.value().is_identity_permutation());
        for (int k = -3; k <= 3; ++k) {
          CHECK(compose(tj, boundary_twist(s, i, k)) == boundary_twist(s, i, j + k));
          for (std::size_t i2 = 0; i2 < s->boundary_count(); ++i2) {
            CHECK(compose(tj, boundary_twist(s, i2, k)) == compose(boundary_twist(s, i2, k), tj));
          }
        }
      }
    }
  }
  // The disk has nothing to twist.
  const SurfacePtr disk = surface(0, 1);
  CHECK(boundary_twist(disk, 0, 5) == PureAut::identity(disk));
}

TEST_CASE("zieschang: identity and inner automorphisms") {
  const SurfacePtr s = torus2();
  auto id = zieschang_check(GroupAut::identity(s->basis()), *s);
  REQUIRE(id);
  CHECK(id.value().sign == 1);
  CHECK(id.value().is_identity_permutation());
  for (const Word& l : id.value().conjugators) {
    CHECK(l.is_identity());
  }
  const Word t1 = word(s, "t1");
  auto inner = zieschang_check(GroupAut::conjugation_by(t1), *s);
  REQUIRE(inner);
  CHECK(inner.value().sign == 1);
  CHECK(inner.value().is_identity_permutation());
  CHECK(inner.value().conjugators == std::vector<Word>{t1, t1});

  sample::Engine rng(73);
  for (int n = 0; n < 20; ++n) {
    const GroupAut psi = GroupAut::conjugation_by(sample::word(s->basis(), 6, rng));
    auto cert = zieschang_check(psi, *s);
    REQUIRE(cert);
    CHECK(verify_certificate(cert.value(), psi, *s));
  }
}

TEST_CASE("zieschang: rejection") {
  const SurfacePtr s = surface(1, 2);
  const GroupAut flip = group_aut(s, {"t1", "u1", "s1^-1"}, {"t1", "u1", "s1^-1"});
  CHECK(flip.apply(s->boundary_word(0)) == word(s, "u1 t1 u1^-1 t1^-1 s1"));
  auto verdict = zieschang_check(flip, *s);
  REQUIRE_FALSE(verdict);
  CHECK_FALSE(verdict.diagnostic().empty());

  // t1 -> t1 u1 preserves [t1,u1] and passes; u1 -> u1 s1 fixes s1 but
  // moves s0 out of every boundary class.
  const GroupAut twist = group_aut(s, {"t1 u1", "u1", "s1"}, {"t1 u1^-1", "u1", "s1"});
  CHECK(zieschang_check(twist, *s));
  const GroupAut slide = group_aut(s, {"t1", "u1 s1", "s1"}, {"t1", "u1 s1^-1", "s1"});
  auto slid = zieschang_check(slide, *s);
  REQUIRE_FALSE(slid);
  CHECK(slid.diagnostic().find("s0") != std::string::npos);
}

TEST_CASE("zieschang: permutations and reversed orientation") {
  // A half twist exchanging s1 and s2 on the pair of pants.
  const SurfacePtr pants = surface(0, 3);
  const GroupAut swap = group_aut(pants, {"s1 s2 s1^-1", "s1"}, {"s2", "s2^-1 s1 s2"});
  auto cert = zieschang_check(swap, *pants);
  REQUIRE(cert);
  CHECK(cert.value().sign == 1);
  CHECK(cert.value().permutation == std::vector<std::size_t>{0, 2, 1});
  CHECK_FALSE(cert.value().is_identity_permutation());
  CHECK(verify_certificate(cert.value(), swap, *pants));

  // The annulus flip reverses orientation: epsilon = -1.
  const SurfacePtr annulus = surface(0, 2);
  const GroupAut flip = group_aut(annulus, {"s1^-1"}, {"s1^-1"});
  auto reversed = zieschang_check(flip, *annulus);
  REQUIRE(reversed);
  CHECK(reversed.value().sign == -1);
  CHECK(reversed.value().is_identity_permutation());

  // A tampered certificate does not verify.
  ZieschangCertificate bad = cert.value();
  bad.conjugators[1] = bad.conjugators[1] * word(pants, "s1");
  CHECK_FALSE(verify_certificate(bad, swap, *pants));
}

TEST_CASE("conjugacy class action") {
  const SurfacePtr s = torus2();
  auto id = conjugacy_class_action(PureAut::identity(s));
  REQUIRE(id);
  for (const Word& h : id.value()) {
    CHECK(h.is_identity());
  }
  auto tw = conjugacy_class_action(boundary_twist(s, 1, 3));
  REQUIRE(tw);
  CHECK(conjugate(tw.value()[1], word(s, "s1")) == word(s, "s1"));

  const Word u1 = word(s, "u1");
  const PureAut by_u1 = PureAut::from_pair(s, GroupAut::conjugation_by(u1),
                                           std::vector<Word>(3, Word(s->basis())));
  auto hs = conjugacy_class_action(by_u1);
  REQUIRE(hs);
  for (std::size_t i = 0; i < s->boundary_count(); ++i) {
    const Word& si = s->boundary_word(i);
    CHECK(by_u1.psi().apply(si) == conjugate(hs.value()[i], si));
    // h_i = u1 up to the centralizer of s_i.
    CHECK(power_of(inverse(u1) * hs.value()[i], centralizer_generator(si)).has_value());
  }

  const GroupAut flip = group_aut(s, {"t1", "u1", "s1^-1"}, {"t1", "u1", "s1^-1"});
  CHECK_FALSE(conjugacy_class_action(PureAut::from_pair(s, flip, std::vector<Word>(3, Word(s->basis())))));
}

TEST_CASE("canonical conjugator is the shortest in its coset") {
  const SurfacePtr s = torus3();
  sample::Engine rng(79);
  for (int n = 0; n < 100; ++n) {
    const Word h = sample::word(s->basis(), 6, rng);
    const GroupAut psi = GroupAut::conjugation_by(h);
    for (std::size_t i = 1; i < s->boundary_count(); ++i) {
      const Word c = canonical_conjugator(psi, *s, i);
      CHECK(psi.apply(s->boundary_word(i)) == conjugate(c, s->boundary_word(i)));
      // Coset members h s_i^m; the shortest is unique.
      Word best = h;
      for (int m = -8; m <= 8; ++m) {
        const Word candidate = h * power(s->boundary_word(i), m);
        if (candidate.length() < best.length()) {
          best = candidate;
        }
      }
      CHECK(c == best);
    }
  }
  CHECK_THROWS_AS(canonical_conjugator(GroupAut::identity(s->basis()), *s, 0), PreconditionError);
}

TEST_CASE("twist factorization examples") {
  const SurfacePtr s = torus2();
  auto f = twist_factorization(boundary_twist(s, 1, 4));
  REQUIRE(f.twists.size() == 1);
  CHECK(f.twists[0].component == 1);
  CHECK(f.twists[0].conjugator.is_identity());
  CHECK(f.twists[0].exponent == 4);

  f = twist_factorization(PureAut::identity(s));
  CHECK(f.twists[0].conjugator.is_identity());
  CHECK(f.twists[0].exponent == 0);

  // psi must fix s0; conjugation by t1 does not.
  const Word t1 = word(s, "t1");
  CHECK_THROWS_AS(from_twist_data(s, GroupAut::conjugation_by(t1), {t1}, {Integer(-2)}),
                  PreconditionError);

  // The coherent inner version: conjugation by s0.
  const Word s0 = s->boundary_word(0);
  const Word c = word(s, "u1 t1 u1^-1 t1^-1");  // s0 with its trailing s1 syllable dropped
  const PureAut built = from_twist_data(s, GroupAut::conjugation_by(s0), {c}, {Integer(-2)});
  CHECK(is_boundary_constant(built));
  f = twist_factorization(built);
  CHECK(f.twists[0].conjugator == c);
  CHECK(f.twists[0].exponent == -2);
  CHECK(reconstruct(s, f) == built);

  CHECK(from_twist_data(s, GroupAut::identity(s->basis()), {Word(s->basis())}, {Integer(0)}) ==
        PureAut::identity(s));
  CHECK(from_twist_data(s, GroupAut::identity(s->basis()), {Word(s->basis())}, {Integer(5)}) ==
        boundary_twist(s, 1, 5));
  CHECK_THROWS_AS(from_twist_data(s, GroupAut::identity(s->basis()), {t1}, {Integer(0)}),
                  PreconditionError);
  CHECK_THROWS_AS(from_twist_data(s, GroupAut::identity(s->basis()), {}, {}), PreconditionError);

  const PureAut moved = PureAut::from_pair(s, GroupAut::identity(s->basis()),
                                           {Word(s->basis()), word(s, "s1"), Word(s->basis())});
  CHECK_THROWS_AS(twist_factorization(moved), PreconditionError);
}

TEST_CASE("factorization round trips") {
  const SurfacePtr s = torus3();
  sample::Engine rng(83);
  for (int n = 0; n < 60; ++n) {
    const Word base = power(s->boundary_word(0), n % 5 - 2);
    std::vector<Word> cs;
    std::vector<Integer> ks;
    for (std::size_t i = 1; i < s->boundary_count(); ++i) {
      cs.push_back(canonical_conjugator(GroupAut::conjugation_by(base), *s, i));
      ks.emplace_back(static_cast<int>(rng() % 9) - 4);
    }
    PureAut built = from_twist_data(s, GroupAut::conjugation_by(base), cs, ks);
    // Compose with twists about component 0 and random kernel elements too.
    built = compose(built, boundary_twist(s, 0, n % 3 - 1));
    built = compose(kernel_element(s, sample::word(s->basis(), 4, rng)), built);
    REQUIRE(is_boundary_constant(built));
    const TwistFactorization f = twist_factorization(built);
    CHECK(reconstruct(s, f) == built);
    const auto again = twist_factorization(reconstruct(s, f));
    for (std::size_t i = 0; i < f.twists.size(); ++i) {
      CHECK(again.twists[i].exponent == f.twists[i].exponent);
      CHECK(again.twists[i].conjugator == f.twists[i].conjugator);
    }
    // Twist exponents add under composition with T_i^m.
    const PureAut more = compose(built, boundary_twist(s, 2, 3));
    CHECK(twist_factorization(more).twists[1].exponent == f.twists[1].exponent + 3);
  }
}
