#include "doctest.h"
#include "dnb/error.hpp"
#include "dnb/surface.hpp"

using namespace dnb;

namespace {

SurfaceSpec spec(unsigned g, unsigned b) {
  return {g, b, std::vector<std::vector<Rational>>(b, {Rational(0)})};
}

std::vector<std::string> names(unsigned g, unsigned b) { return standard_basis(spec(g, b)); }

}  // namespace

TEST_CASE("standard basis") {
  CHECK(names(1, 2) == std::vector<std::string>{"t1", "u1", "s1"});
  CHECK(names(0, 2) == std::vector<std::string>{"s1"});
  CHECK(names(2, 1) == std::vector<std::string>{"t1", "u1", "t2", "u2"});
  CHECK(names(0, 1).empty());
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned b = 1; b <= 4; ++b) {
      CHECK(names(g, b).size() == 2 * g + b - 1);
    }
  }
}

TEST_CASE("boundary words") {
  const Surface torus2(spec(1, 2));
  CHECK(torus2.boundary_word(1) == parse_word(torus2.basis(), "s1"));
  CHECK(to_string(torus2.boundary_word(0)) == "u1 t1 u1^-1 t1^-1 s1^-1");
  const Surface annulus(spec(0, 2));
  CHECK(to_string(annulus.boundary_word(0)) == "s1^-1");
  CHECK_THROWS(torus2.boundary_word(2));
  CHECK(boundary_word(torus2, 0) == torus2.boundary_word(0));
}

TEST_CASE("surface relation holds and boundary words are primitive") {
  for (unsigned g = 0; g <= 3; ++g) {
    for (unsigned b = 1; b <= 4; ++b) {
      const Surface s(spec(g, b));
      const BasisPtr& basis = s.basis();
      Word product(basis);
      for (unsigned i = 0; i < b; ++i) {
        product = product * s.boundary_word(i);
      }
      for (unsigned j = 1; j <= g; ++j) {
        const Word t = Word::generator(basis, s.t_index(j));
        const Word u = Word::generator(basis, s.u_index(j));
        product = product * t * u * inverse(t) * inverse(u);
      }
      CHECK(product.is_identity());
      if (g == 0 && b == 1) {
        CHECK(s.boundary_word(0).is_identity());
        continue;
      }
      CHECK_FALSE(s.boundary_word(0).is_identity());
      for (unsigned i = 0; i < b; ++i) {
        CHECK(primitive_root(s.boundary_word(i)).exponent == 1);
      }
    }
  }
}

TEST_CASE("validation diagnostics") {
  SurfaceSpec ok{1, 2, {{Rational(0)}, {Rational(0), Rational(1, 2)}}};
  CHECK_FALSE(validate(ok));

  SurfaceSpec no_base{1, 2, {{Rational(1, 3)}, {Rational(0)}}};
  REQUIRE(validate(no_base));
  CHECK(validate(no_base)->find("base basepoint absent") != std::string::npos);

  SurfaceSpec closed{1, 0, {}};
  REQUIRE(validate(closed));
  CHECK(validate(closed)->find("surface must be bounded") != std::string::npos);

  SurfaceSpec empty_component{0, 2, {{Rational(0)}, {}}};
  CHECK(validate(empty_component));
  SurfaceSpec out_of_range{0, 2, {{Rational(0)}, {Rational(1)}}};
  CHECK(validate(out_of_range));
  SurfaceSpec negative{0, 2, {{Rational(0)}, {Rational(-1, 2)}}};
  CHECK(validate(negative));
  SurfaceSpec unsorted{0, 2, {{Rational(0)}, {Rational(1, 2), Rational(1, 3)}}};
  CHECK(validate(unsorted));
  SurfaceSpec duplicate{0, 2, {{Rational(0)}, {Rational(1, 2), Rational(1, 2)}}};
  CHECK(validate(duplicate));
  SurfaceSpec wrong_count{0, 2, {{Rational(0)}}};
  CHECK(validate(wrong_count));

  CHECK_THROWS_AS(make_surface(closed), PreconditionError);
  // The disk is degenerate but allowed.
  CHECK_FALSE(validate(spec(0, 1)));
}

TEST_CASE("basepoint indexing") {
  const Surface s({1, 3, {{Rational(0), Rational(1, 3)}, {Rational(0)}, {Rational(1, 4), Rational(1, 2)}}});
  CHECK(s.basepoint_count() == 5);
  CHECK(s.basepoints()[0] == Basepoint{0, Rational(0)});
  CHECK(s.index_of({2, Rational(1, 2)}) == std::size_t{4});
  CHECK_FALSE(s.index_of({2, Rational(0)}));
  CHECK_THROWS_AS(s.require_index({1, Rational(1, 2)}), PreconditionError);
  CHECK(s.component_begin(2) == 3);
  CHECK(s.component_end(2) == 5);
  CHECK(to_string(Basepoint{2, Rational(1, 4)}) == "(2,1/4)");
  CHECK(to_string(Basepoint{0, Rational(0)}) == "(0,0)");
  CHECK(Basepoint{0, Rational(1, 2)} < Basepoint{1, Rational(0)});
  CHECK(Basepoint{1, Rational(1, 3)} < Basepoint{1, Rational(1, 2)});
}
