#include "dnb/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dnb/error.hpp"

namespace dnb {

namespace {

// Words with multi-syllable cyclic cores are materialized when raised to a
// power; refuse anything that would not fit in memory.
constexpr std::size_t kMaxSyllables = std::size_t{1} << 24;

bool valid_name(std::string_view name) {
  if (name.empty() || name == "e") {
    return false;
  }
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '^';
  });
}

// Appends one syllable to an already reduced sequence, cancelling and
// merging against the tail.
void push_reduced(std::vector<Syllable>& out, const Syllable& s) {
  if (s.exponent == 0) {
    return;
  }
  if (!out.empty() && out.back().generator == s.generator) {
    out.back().exponent += s.exponent;
    if (out.back().exponent == 0) {
      out.pop_back();
    }
    return;
  }
  out.push_back(s);
}

void require_same_basis(const Word& a, const Word& b) {
  if (!same_basis(a.basis(), b.basis())) {
    throw MismatchError("words over different bases");
  }
}

int sign(const Integer& n) { return n < 0 ? -1 : 1; }

Word from_range(const BasisPtr& basis, std::vector<Syllable>::const_iterator first,
                std::vector<Syllable>::const_iterator last) {
  std::vector<Syllable> part(first, last);
  return Word(basis, part);
}

// Cyclic decomposition whose core additionally has distinct first and last
// generators (or a single syllable). Cyclic words then correspond exactly to
// syllable sequences up to rotation.
CyclicDecomposition merged_cyclic_reduce(const Word& w) {
  CyclicDecomposition d = cyclic_reduce(w);
  const auto& s = d.core.syllables();
  if (s.size() < 2 || s.front().generator != s.back().generator) {
    return d;
  }
  // core = x^a M x^b with a, b of equal sign; x^-b (x^(a+b) M) x^b = core.
  std::vector<Syllable> merged;
  merged.reserve(s.size() - 1);
  merged.push_back({s.front().generator, s.front().exponent + s.back().exponent});
  merged.insert(merged.end(), s.begin() + 1, s.end() - 1);
  Word tail = Word::generator(w.basis(), s.back().generator, s.back().exponent);
  return {Word(w.basis(), merged), d.conjugator * inverse(tail)};
}

bool rotation_matches(const std::vector<Syllable>& target,
                      const std::vector<Syllable>& source, std::size_t k) {
  const std::size_t n = source.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(target[i] == source[(i + k) % n])) {
      return false;
    }
  }
  return true;
}

}  // namespace

Basis::Basis(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) {
      throw PreconditionError("invalid generator name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate generator name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Basis::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

BasisPtr make_basis(std::vector<std::string> names) {
  return std::make_shared<const Basis>(std::move(names));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  return a == b || (a && b && *a == *b);
}

Word::Word(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) {
    throw PreconditionError("word without a basis");
  }
}

Word::Word(BasisPtr basis, std::span<const Syllable> raw) : Word(std::move(basis)) {
  syllables_.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.generator >= basis_->rank()) {
      throw PreconditionError("generator index out of range");
    }
    push_reduced(syllables_, s);
  }
}

Word Word::generator(BasisPtr basis, std::size_t index, Integer exponent) {
  Syllable s{static_cast<std::uint32_t>(index), std::move(exponent)};
  return Word(std::move(basis), std::span<const Syllable>(&s, 1));
}

Integer Word::length() const {
  Integer total = 0;
  for (const Syllable& s : syllables_) {
    total += boost::multiprecision::abs(s.exponent);
  }
  return total;
}

bool Word::operator==(const Word& other) const {
  return syllables_ == other.syllables_ && same_basis(basis_, other.basis_);
}

Word reduce(const BasisPtr& basis,
            std::span<const std::pair<std::string, Integer>> raw) {
  std::vector<Syllable> syllables;
  syllables.reserve(raw.size());
  for (const auto& [name, exponent] : raw) {
    auto index = basis->find(name);
    if (!index) {
      throw ParseError("unknown generator '" + name + "'");
    }
    syllables.push_back({static_cast<std::uint32_t>(*index), exponent});
  }
  return Word(basis, syllables);
}

Word operator*(const Word& a, const Word& b) {
  require_same_basis(a, b);
  std::vector<Syllable> out = a.syllables_;
  out.reserve(a.syllables_.size() + b.syllables_.size());
  for (const Syllable& s : b.syllables_) {
    push_reduced(out, s);
  }
  return Word(a.basis_, std::move(out), Word::Reduced{});
}

Word inverse(const Word& a) {
  std::vector<Syllable> out;
  out.reserve(a.syllables_.size());
  for (auto it = a.syllables_.rbegin(); it != a.syllables_.rend(); ++it) {
    out.push_back({it->generator, -it->exponent});
  }
  return Word(a.basis_, std::move(out), Word::Reduced{});
}

Word power(const Word& w, const Integer& n) {
  if (n == 0 || w.is_identity()) {
    return Word(w.basis());
  }
  if (n < 0) {
    return power(inverse(w), -n);
  }
  CyclicDecomposition d = merged_cyclic_reduce(w);
  const auto& core = d.core.syllables();
  if (core.size() == 1) {
    Word lifted = Word::generator(w.basis(), core.front().generator,
                                  core.front().exponent * n);
    return conjugate(d.conjugator, lifted);
  }
  if (n > kMaxSyllables / core.size()) {
    throw std::length_error("word power too large to materialize");
  }
  const auto count = static_cast<std::size_t>(n);
  std::vector<Syllable> repeated;
  repeated.reserve(core.size() * count);
  for (std::size_t i = 0; i < count; ++i) {
    repeated.insert(repeated.end(), core.begin(), core.end());
  }
  return conjugate(d.conjugator, Word(w.basis(), repeated));
}

Word conjugate(const Word& a, const Word& b) { return a * b * inverse(a); }

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto& s = w.syllables();
  const BasisPtr& basis = w.basis();
  if (s.size() < 2) {
    return {w, Word(basis)};
  }
  // Peel cancelling letters off both ends; a and b track the (possibly
  // partially consumed) exponents of syllables i and j.
  std::vector<Syllable> peeled;
  std::size_t i = 0;
  std::size_t j = s.size() - 1;
  Integer a = s[i].exponent;
  Integer b = s[j].exponent;
  while (i < j && s[i].generator == s[j].generator && sign(a) != sign(b)) {
    Integer m = std::min(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
    Integer step = sign(a) * m;
    peeled.push_back({s[i].generator, step});
    a -= step;
    b += step;
    if (a == 0 && b == 0) {
      ++i;
      --j;
      if (i <= j) {
        a = s[i].exponent;
        b = s[j].exponent;
      }
    } else if (a == 0) {
      ++i;
      a = (i == j) ? b : s[i].exponent;
    } else if (b == 0) {
      --j;
      b = (i == j) ? a : s[j].exponent;
    }
  }
  std::vector<Syllable> core;
  if (i == j) {
    core.push_back({s[i].generator, a});
  } else if (i < j) {
    core.push_back({s[i].generator, a});
    core.insert(core.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                s.begin() + static_cast<std::ptrdiff_t>(j));
    core.push_back({s[j].generator, b});
  }
  return {Word(basis, core), Word(basis, peeled)};
}

std::optional<Word> is_conjugate(const Word& w, const Word& v) {
  require_same_basis(w, v);
  CyclicDecomposition dw = merged_cyclic_reduce(w);
  CyclicDecomposition dv = merged_cyclic_reduce(v);
  const auto& cw = dw.core.syllables();
  const auto& cv = dv.core.syllables();
  if (cw.size() != cv.size()) {
    return std::nullopt;
  }
  if (cw.empty()) {
    return Word(w.basis());
  }
  for (std::size_t k = 0; k < cv.size(); ++k) {
    if (!rotation_matches(cw, cv, k)) {
      continue;
    }
    // cv = A B with |A| = k, cw = B A = B cv B^-1.
    Word rotation = k == 0 ? Word(w.basis()) : from_range(w.basis(), cv.begin() + static_cast<std::ptrdiff_t>(k), cv.end());
    return dw.conjugator * rotation * inverse(dv.conjugator);
  }
  return std::nullopt;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.is_identity()) {
    throw PreconditionError("primitive root of the identity");
  }
  CyclicDecomposition d = merged_cyclic_reduce(w);
  const auto& core = d.core.syllables();
  if (core.size() == 1) {
    Word letter = Word::generator(w.basis(), core.front().generator,
                                  sign(core.front().exponent));
    return {conjugate(d.conjugator, letter), boost::multiprecision::abs(core.front().exponent)};
  }
  const std::size_t n = core.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0 || !rotation_matches(core, core, period % n)) {
      continue;
    }
    Word root = from_range(w.basis(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(period));
    return {conjugate(d.conjugator, root), Integer(n / period)};
  }
  throw std::logic_error("unreachable: a core is periodic with its own length");
}

std::optional<Integer> power_of(const Word& w, const Word& s) {
  require_same_basis(w, s);
  if (s.is_identity()) {
    throw PreconditionError("power_of with identity base");
  }
  if (w.is_identity()) {
    return Integer(0);
  }
  PrimitiveRoot rs = primitive_root(s);
  PrimitiveRoot rw = primitive_root(w);
  if (rw.exponent % rs.exponent != 0) {
    return std::nullopt;
  }
  Integer k = rw.exponent / rs.exponent;
  if (rw.root == rs.root) {
    return k;
  }
  if (rw.root == inverse(rs.root)) {
    return Integer(-k);
  }
  return std::nullopt;
}

Word centralizer_generator(const Word& w) { return primitive_root(w).root; }

Word parse_word(const BasisPtr& basis, std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    auto caret = token.find('^');
    std::string name = token.substr(0, caret);
    Integer exponent = 1;
    if (caret != std::string::npos) {
      exponent = parse_integer(std::string_view(token).substr(caret + 1));
    }
    if (name == "e") {
      continue;
    }
    auto index = basis->find(name);
    if (!index) {
      throw ParseError("unknown generator '" + name + "'");
    }
    raw.push_back({static_cast<std::uint32_t>(*index), exponent});
  }
  if (!any) {
    throw ParseError("empty word (write e for the identity)");
  }
  return Word(basis, raw);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) {
    return "e";
  }
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += w.basis()->name(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += s.exponent.str();
    }
  }
  return out;
}

}  // namespace dnb
