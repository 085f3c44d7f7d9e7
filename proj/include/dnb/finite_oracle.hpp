#pragma once

// Brute-force check of the pure automorphism group of a connected groupoid
// over a small finite vertex group: enumerate automorphisms from the
// groupoid axioms alone, and compare against the quotient description
// (Aut(G) x G^m) / {(Inn_g, (g^-1, ..., g^-1))}.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace dnb::oracle {

class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses. When
  // `generators` is empty a generating set is chosen greedily.
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
              std::vector<std::size_t> generators = {});

  // Z2, Z3, Z4, Z2xZ2, S3.
  static FiniteGroup builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  // First line n, then n rows of n indices, then an optional generator line.
  static FiniteGroup parse(std::istream& in, std::string name = "file");

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
};

// Connected groupoid on `objects` objects with every hom-set a copy of the
// group. Element (i, g, j) has index (i * objects + j) * |G| + g and the
// composition (i, a, j)(j, b, k) = (i, ab, k).
struct FiniteGroupoid {
  FiniteGroup group;
  std::size_t objects = 1;

  std::size_t size() const { return objects * objects * group.order(); }
  std::size_t index(std::size_t i, std::size_t g, std::size_t j) const {
    return (i * objects + j) * group.order() + g;
  }
};

inline constexpr std::size_t kMaxGroupOrder = 8;
inline constexpr std::size_t kMaxObjects = 3;

// An automorphism as the image index of every groupoid element.
using GroupoidMap = std::vector<std::size_t>;

// Object-fixing automorphisms found by trying every image of the vertex
// group generators and the star elements and checking the full composition
// table. Throws PreconditionError beyond the tractability bound.
std::vector<GroupoidMap> enumerate_paut(const FiniteGroupoid& gpd);

// Aut(G) by exhaustive search over permutations fixing the identity.
std::vector<std::vector<std::size_t>> automorphism_group(const FiniteGroup& group);

// |Aut(G)| * |G|^m / |G|.
std::uint64_t quotient_count(const FiniteGroupoid& gpd);

struct Lemma31Report {
  std::uint64_t enumerated = 0;
  std::uint64_t predicted = 0;
  std::uint64_t pair_images = 0;     // distinct maps produced by the pair description
  bool surjective = false;           // every enumerated map comes from a pair
  bool kernel_exact = false;         // pairs acting trivially are exactly the kernel set
  std::uint64_t kernel_size = 0;

  bool ok() const {
    return enumerated == predicted && pair_images == predicted && surjective && kernel_exact;
  }
};

Lemma31Report verify_lemma31(const FiniteGroupoid& gpd);

}  // namespace dnb::oracle
