#pragma once

// Elements of the fundamental groupoid with one object per surface
// basepoint, in star normal form.
//
// The star element iota(i, a) runs from x0 to x(i, a) along the arc to
// x(i, 0) followed by the boundary arc from position 0 to a. An element
// (p, w, q) denotes iota(p)^-1 * w * iota(q): a path from p to q. Paths
// compose left to right.

#include <string>
#include <string_view>

#include "dnb/surface.hpp"
#include "dnb/word.hpp"

namespace dnb {

class GroupoidElement {
 public:
  // Throws PreconditionError if an endpoint is not a basepoint of `surface`
  // and MismatchError if `word` is over a different basis.
  GroupoidElement(const Surface& surface, Basepoint source, Word word, Basepoint target);

  static GroupoidElement identity(const Surface& surface, Basepoint at);

  const Basepoint& source() const noexcept { return source_; }
  const Word& word() const noexcept { return word_; }
  const Basepoint& target() const noexcept { return target_; }

  bool is_identity() const { return source_ == target_ && word_.is_identity(); }

  bool operator==(const GroupoidElement&) const = default;

 private:
  struct Unchecked {};
  GroupoidElement(Basepoint source, Word word, Basepoint target, Unchecked)
      : source_(std::move(source)), word_(std::move(word)), target_(std::move(target)) {}

  friend GroupoidElement compose(const GroupoidElement&, const GroupoidElement&);
  friend GroupoidElement inverse(const GroupoidElement&);
  friend GroupoidElement with_word(const GroupoidElement&, Word);

  Basepoint source_;
  Word word_;
  Basepoint target_;
};

// a then b. Throws MismatchError unless a.target() == b.source().
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement inverse(const GroupoidElement& a);

// Same endpoints, different word (over the same basis).
GroupoidElement with_word(const GroupoidElement& x, Word word);

// The class of the boundary arc on component i running forward from
// position alpha to position beta. It passes position 0 (and so picks up the
// boundary word s_i) exactly when alpha >= beta; alpha == beta is the full
// loop.
GroupoidElement boundary_arc(const Surface& surface, std::size_t component,
                             const Rational& alpha, const Rational& beta);

// The loop w at x0.
GroupoidElement embed_loop(const Surface& surface, const Word& w);

// `(<i>,<alpha>) <word> (<j>,<beta>)`
std::string to_string(const GroupoidElement& x);
GroupoidElement parse_groupoid_element(const Surface& surface, std::string_view text);

}  // namespace dnb
