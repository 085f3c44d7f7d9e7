#pragma once

// Reduced words in a free group over a named, ordered basis.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnb/numeric.hpp"

namespace dnb {

// An ordered set of generator names. Names are unique, non-empty, contain no
// whitespace or '^', and are never the reserved identity token `e`.
class Basis {
 public:
  explicit Basis(std::vector<std::string> names);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const Basis& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

BasisPtr make_basis(std::vector<std::string> names);

bool same_basis(const BasisPtr& a, const BasisPtr& b);

struct Syllable {
  std::uint32_t generator;
  Integer exponent;

  bool operator==(const Syllable&) const = default;
};

// An immutable freely reduced word: adjacent syllables have distinct
// generators and no exponent is zero. The empty word is the identity.
class Word {
 public:
  // The identity over `basis`.
  explicit Word(BasisPtr basis);

  // Reduces `raw`; zero exponents are dropped.
  Word(BasisPtr basis, std::span<const Syllable> raw);

  static Word generator(BasisPtr basis, std::size_t index, Integer exponent = 1);

  const BasisPtr& basis() const noexcept { return basis_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  // Number of letters, i.e. the sum of |exponent|.
  Integer length() const;

  bool operator==(const Word& other) const;

 private:
  struct Reduced {};
  Word(BasisPtr basis, std::vector<Syllable> syllables, Reduced)
      : basis_(std::move(basis)), syllables_(std::move(syllables)) {}

  friend Word operator*(const Word&, const Word&);
  friend Word inverse(const Word&);

  BasisPtr basis_;
  std::vector<Syllable> syllables_;
};

// Reduces a sequence of (name, exponent) pairs. Throws ParseError for a name
// outside the basis.
Word reduce(const BasisPtr& basis,
            std::span<const std::pair<std::string, Integer>> raw);

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& a);
Word power(const Word& w, const Integer& n);

// a * b * a^-1
Word conjugate(const Word& a, const Word& b);

// w = conjugator * core * conjugator^-1 with `core` cyclically reduced.
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

CyclicDecomposition cyclic_reduce(const Word& w);

// Returns l with w = l * v * l^-1, or nothing if w and v are not conjugate.
// The witness is cw * r * cv^-1, where cw and cv are the conjugators of the
// cyclic decompositions of w and v (first and last syllables merged) and r
// is the suffix of v's core remaining after the minimal syllable rotation
// carrying it onto w's core (e at rotation 0).
std::optional<Word> is_conjugate(const Word& w, const Word& v);

struct PrimitiveRoot {
  Word root;
  Integer exponent;  // >= 1
};

// w = root^exponent with the exponent maximal. Throws PreconditionError on
// the identity.
PrimitiveRoot primitive_root(const Word& w);

// k with w = s^k, if any. Throws PreconditionError when s is the identity.
std::optional<Integer> power_of(const Word& w, const Word& s);

// Generator of the (cyclic) centralizer of a nontrivial w.
Word centralizer_generator(const Word& w);

// Text format: whitespace-separated `NAME` or `NAME^INT` tokens; `e` is the
// identity. Throws ParseError.
Word parse_word(const BasisPtr& basis, std::string_view text);
std::string to_string(const Word& w);

}  // namespace dnb
