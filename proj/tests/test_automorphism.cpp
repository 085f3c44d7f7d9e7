#include "doctest.h"
#include "dnb/automorphism.hpp"
#include "dnb/mcg.hpp"
#include "dnb/random.hpp"

using namespace dnb;

namespace {

SurfacePtr torus2() {
  static const SurfacePtr s = make_surface({1, 2, {{Rational(0)}, {Rational(0), Rational(1, 2)}}});
  return s;
}

Word w(const char* text) { return parse_word(torus2()->basis(), text); }

// Images given as text, generators in basis order.
GroupAut aut(std::vector<const char*> images, std::vector<const char*> inverse_images) {
  std::vector<Word> a;
  std::vector<Word> b;
  for (auto* t : images) a.push_back(w(t));
  for (auto* t : inverse_images) b.push_back(w(t));
  return verify_automorphism(torus2()->basis(), a, b).value();
}

// Raw (unnormalized) action of (psi, g).
GroupoidElement raw_apply(const Surface& s, const GroupAut& psi, const std::vector<Word>& g,
                          const GroupoidElement& x) {
  const Word& gp = g[s.require_index(x.source())];
  const Word& gq = g[s.require_index(x.target())];
  return with_word(x, inverse(gp) * psi.apply(x.word()) * gq);
}

// Basis loops, star arcs and boundary arcs.
std::vector<GroupoidElement> generating_set(const Surface& s) {
  std::vector<GroupoidElement> out;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    out.push_back(embed_loop(s, Word::generator(s.basis(), i)));
  }
  for (const Basepoint& p : s.basepoints()) {
    out.emplace_back(s, s.basepoints()[0], Word(s.basis()), p);
  }
  for (std::size_t i = 0; i < s.boundary_count(); ++i) {
    const auto& ps = s.spec().basepoints[i];
    for (std::size_t k = 0; k < ps.size(); ++k) {
      out.push_back(boundary_arc(s, i, ps[k], ps[(k + 1) % ps.size()]));
      out.push_back(boundary_arc(s, i, ps[k], ps[k]));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("verify_automorphism") {
  auto id = verify_automorphism(torus2()->basis(), {w("t1"), w("u1"), w("s1")},
                                {w("t1"), w("u1"), w("s1")});
  REQUIRE(id);
  CHECK(id.value() == GroupAut::identity(torus2()->basis()));

  auto nielsen = verify_automorphism(torus2()->basis(), {w("t1 u1"), w("u1"), w("s1")},
                                     {w("t1 u1^-1"), w("u1"), w("s1")});
  CHECK(nielsen.ok());
  CHECK(nielsen.value().apply(w("t1")) == w("t1 u1"));
  CHECK(nielsen.value().apply_inverse(w("t1 u1")) == w("t1"));

  auto bad = verify_automorphism(torus2()->basis(), {w("t1 u1"), w("u1"), w("s1")},
                                 {w("u1^-1 t1"), w("u1"), w("s1")});
  REQUIRE_FALSE(bad);
  CHECK(bad.diagnostic().find("generator t1") != std::string::npos);
  CHECK_THROWS_AS(bad.value(), PreconditionError);

  // A non-injective endomorphism cannot be certified.
  CHECK_FALSE(verify_automorphism(torus2()->basis(), {w("t1"), w("t1"), w("s1")},
                                  {w("t1"), w("u1"), w("s1")}));
  CHECK_FALSE(verify_automorphism(torus2()->basis(), {w("t1")}, {w("t1")}));
}

TEST_CASE("group automorphism algebra") {
  const GroupAut n = aut({"t1 u1", "u1", "s1"}, {"t1 u1^-1", "u1", "s1"});
  const GroupAut c = GroupAut::conjugation_by(w("s1 t1"));
  CHECK(c.apply(w("u1")) == w("s1 t1 u1 t1^-1 s1^-1"));
  CHECK(GroupAut::inner(w("t1")).apply(w("u1")) == w("t1^-1 u1 t1"));
  CHECK(compose(n, n.inverse()) == GroupAut::identity(torus2()->basis()));
  const GroupAut nc = compose(n, c);
  sample::Engine rng(41);
  for (int k = 0; k < 50; ++k) {
    const Word x = sample::word(torus2()->basis(), 6, rng);
    CHECK(nc.apply(x) == n.apply(c.apply(x)));
    CHECK(nc.apply_inverse(nc.apply(x)) == x);
  }
}

TEST_CASE("normalization") {
  const SurfacePtr s = torus2();
  const GroupAut n = aut({"t1 u1", "u1", "s1"}, {"t1 u1^-1", "u1", "s1"});
  const std::vector<Word> all_e(3, Word(s->basis()));
  const PureAut plain = PureAut::from_pair(s, n, all_e);
  CHECK(plain.psi() == n);
  CHECK(plain.gvec() == all_e);

  // Constant g = c normalizes to (w -> c^-1 w c, all e): not the identity.
  const Word c = w("t1 s1");
  const PureAut shifted = PureAut::from_pair(s, GroupAut::identity(s->basis()), {c, c, c});
  CHECK(shifted.psi() == GroupAut::inner(c));
  CHECK(shifted.gvec() == all_e);
  CHECK_FALSE(shifted == PureAut::identity(s));
  // The kernel pair (Inn_c, all c^-1) is.
  const Word ci = inverse(c);
  CHECK(PureAut::from_pair(s, GroupAut::inner(c), {ci, ci, ci}) == PureAut::identity(s));

  CHECK_THROWS_AS(make_pure_aut(s, n, {{Basepoint{0, Rational(0)}, c}}), PreconditionError);
  const std::map<Basepoint, Word> by_point{{{0, Rational(0)}, c},
                                           {{1, Rational(0)}, w("u1")},
                                           {{1, Rational(1, 2)}, w("e")}};
  const PureAut from_map = make_pure_aut(s, n, by_point);
  CHECK(from_map == PureAut::from_pair(s, n, {c, w("u1"), w("e")}));
  CHECK(from_map.g({0, Rational(0)}).is_identity());
}

TEST_CASE("normalized and raw forms act identically") {
  sample::Engine rng(43);
  const SurfacePtr s = torus2();
  for (int n = 0; n < 40; ++n) {
    const GroupAut psi = sample::nielsen_automorphism(s->basis(), 3, rng);
    std::vector<Word> g;
    for (std::size_t p = 0; p < s->basepoint_count(); ++p) {
      g.push_back(sample::word(s->basis(), 3, rng));
    }
    const PureAut f = PureAut::from_pair(s, psi, g);
    CHECK(f.gvec().front().is_identity());
    for (const auto& x : generating_set(*s)) {
      CHECK(f.apply(x) == raw_apply(*s, psi, g, x));
    }
    for (int k = 0; k < 50; ++k) {
      const auto x = sample::element(*s, rng);
      CHECK(f.apply(x) == raw_apply(*s, psi, g, x));
    }
    // Equality of a normalized aut with its own raw form.
    std::map<Basepoint, Word> raw;
    for (std::size_t p = 0; p < s->basepoint_count(); ++p) {
      raw.emplace(s->basepoints()[p], g[p]);
    }
    CHECK(equals(f, make_pure_aut(s, psi, raw)));
  }
}

TEST_CASE("apply") {
  const SurfacePtr s = torus2();
  sample::Engine rng(47);
  const PureAut id = PureAut::identity(s);
  const PureAut kernel = kernel_element(s, w("t1"));
  for (int n = 0; n < 50; ++n) {
    const auto x = sample::element(*s, rng);
    CHECK(id.apply(x) == x);
    CHECK(apply(kernel, x) == x);
  }
  CHECK(kernel(embed_loop(*s, w("t1"))) == embed_loop(*s, w("t1")));
}

TEST_CASE("composition law") {
  const SurfacePtr s = torus2();
  const PureAut id = PureAut::identity(s);
  sample::Engine rng(53);
  CHECK(compose(boundary_twist(s, 1, 2), boundary_twist(s, 1, 3)) == boundary_twist(s, 1, 5));
  for (int n = 0; n < 30; ++n) {
    const PureAut f = sample::pure_automorphism(s, rng);
    const PureAut h = sample::pure_automorphism(s, rng);
    CHECK(compose(id, f) == f);
    CHECK(compose(f, id) == f);
    const PureAut fh = compose(f, h);
    for (int k = 0; k < 50; ++k) {
      const auto x = sample::element(*s, rng);
      CHECK(fh.apply(x) == f.apply(h.apply(x)));
    }
    const PureAut g = sample::pure_automorphism(s, rng);
    CHECK(compose(compose(f, h), g) == compose(f, compose(h, g)));
  }
}

TEST_CASE("inverse") {
  const SurfacePtr s = torus2();
  const PureAut id = PureAut::identity(s);
  CHECK(inverse(id) == id);
  for (int k = -4; k <= 4; ++k) {
    CHECK(inverse(boundary_twist(s, 1, k)) == boundary_twist(s, 1, -k));
    CHECK(boundary_twist(s, 0, k).inverse() == boundary_twist(s, 0, -k));
  }
  sample::Engine rng(59);
  for (int n = 0; n < 30; ++n) {
    const PureAut f = sample::pure_automorphism(s, rng);
    CHECK(compose(f, inverse(f)) == id);
    CHECK(compose(inverse(f), f) == id);
  }
}

TEST_CASE("equality") {
  const SurfacePtr s = torus2();
  CHECK(equals(kernel_element(s, w("u1")), PureAut::identity(s)));
  CHECK_FALSE(equals(boundary_twist(s, 1, 1), PureAut::identity(s)));
  // Structurally equal surfaces compare equal; different ones never do.
  const SurfacePtr twin = make_surface(s->spec());
  CHECK(PureAut::identity(twin) == PureAut::identity(s));
}

TEST_CASE("boundary constancy") {
  const SurfacePtr s = torus2();
  for (std::size_t i = 0; i < 2; ++i) {
    for (int k = -3; k <= 3; ++k) {
      CHECK(is_boundary_constant(boundary_twist(s, i, k)).holds);
    }
  }
  CHECK(is_boundary_constant(PureAut::identity(s)));

  const GroupAut id = GroupAut::identity(s->basis());
  const PureAut mismatched = PureAut::from_pair(s, id, {w("e"), w("s1"), w("e")});
  const BoundaryConstancy verdict = is_boundary_constant(mismatched);
  REQUIRE_FALSE(verdict);
  REQUIRE(verdict.violation);
  CHECK(verdict.violation->component == 1);
  CHECK(verdict.violation->from == 0);
  CHECK(verdict.violation->to == Rational(1, 2));
  CHECK(arc_label(*verdict.violation) == "γ₁(0,1/2)");

  // Conjugation by s0^m with g = s0^m off component 0 is boundary-constant.
  const Word s0 = s->boundary_word(0);
  for (int m = -2; m <= 2; ++m) {
    const Word c = power(s0, m);
    CHECK(is_boundary_constant(
        PureAut::from_pair(s, GroupAut::conjugation_by(c), {w("e"), c, c})));
  }
  // Conjugation by t1 moves s0, so the full loop at x0 is not fixed even
  // though psi(s1) = g1 s1 g1^-1 on component 1.
  const PureAut by_t1 = PureAut::from_pair(s, GroupAut::conjugation_by(w("t1")),
                                           {w("e"), w("t1"), w("t1")});
  const BoundaryConstancy t1_verdict = is_boundary_constant(by_t1);
  REQUIRE_FALSE(t1_verdict);
  CHECK(t1_verdict.violation->component == 0);
  CHECK(by_t1.psi().apply(w("s1")) == conjugate(by_t1.gvec()[1], w("s1")));
}

TEST_CASE("boundary constancy equals fixing every arc") {
  const SurfacePtr s = make_surface(
      {1, 3, {{Rational(0), Rational(1, 2)}, {Rational(0)}, {Rational(0), Rational(1, 3), Rational(2, 3)}}});
  sample::Engine rng(61);
  std::size_t passing = 0;
  for (int n = 0; n < 300; ++n) {
    PureAut f = sample::pure_automorphism(s, rng, 2, 2);
    if (n % 3 == 0) {
      std::vector<Integer> ks;
      std::vector<Word> cs;
      const Word base = power(s->boundary_word(0), n % 5 - 2);
      for (std::size_t i = 1; i < s->boundary_count(); ++i) {
        ks.emplace_back(n % 7 - 3);
        cs.push_back(base);
      }
      f = from_twist_data(s, GroupAut::conjugation_by(base), cs, ks);
    }
    bool fixes_all = true;
    for (std::size_t i = 0; i < s->boundary_count(); ++i) {
      const auto& ps = s->spec().basepoints[i];
      for (const Rational& a : ps) {
        for (const Rational& b : ps) {
          const auto arc = boundary_arc(*s, i, a, b);
          fixes_all = fixes_all && f.apply(arc) == arc;
        }
      }
    }
    const bool bc = static_cast<bool>(is_boundary_constant(f));
    passing += bc;
    CHECK(bc == fixes_all);
  }
  CHECK(passing >= 100);
}

TEST_CASE("kernel elements") {
  const SurfacePtr s = torus2();
  CHECK(kernel_element(s, w("e")) == PureAut::identity(s));
  CHECK(kernel_element(s, w("t1")) == PureAut::identity(s));
  CHECK(kernel_element(s, w("s1 u1^-1")) == PureAut::identity(s));
  sample::Engine rng(67);
  for (int n = 0; n < 20; ++n) {
    CHECK(kernel_element(s, sample::word(s->basis(), 8, rng)) == PureAut::identity(s));
  }
}

TEST_CASE("purity and functoriality") {
  sample::Engine rng(71);
  const SurfacePtr s = torus2();
  for (int n = 0; n < 1000; ++n) {
    const PureAut f = sample::pure_automorphism(s, rng);
    const auto a = sample::element(*s, rng);
    const auto b = sample::element_from(*s, a.target(), rng);
    const auto fa = f.apply(a);
    CHECK(fa.source() == a.source());
    CHECK(fa.target() == a.target());
    CHECK(f.apply(compose(a, b)) == compose(fa, f.apply(b)));
  }
}
