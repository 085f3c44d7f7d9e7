#include "dnb/groupoid.hpp"

#include <cctype>

#include "dnb/error.hpp"

namespace dnb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Basepoint parse_basepoint(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    throw ParseError("malformed basepoint '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("malformed basepoint '" + std::string(text) + "'");
  }
  Integer component = parse_integer(trim(inner.substr(0, comma)));
  if (component < 0) {
    throw ParseError("negative component in '" + std::string(text) + "'");
  }
  return {static_cast<std::size_t>(component), parse_rational(trim(inner.substr(comma + 1)))};
}

}  // namespace

GroupoidElement::GroupoidElement(const Surface& surface, Basepoint source, Word word,
                                 Basepoint target)
    : source_(std::move(source)), word_(std::move(word)), target_(std::move(target)) {
  surface.require_index(source_);
  surface.require_index(target_);
  if (!same_basis(word_.basis(), surface.basis())) {
    throw MismatchError("groupoid word over a foreign basis");
  }
}

GroupoidElement GroupoidElement::identity(const Surface& surface, Basepoint at) {
  Basepoint copy = at;
  return GroupoidElement(surface, std::move(at), Word(surface.basis()), std::move(copy));
}

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (!(a.target_ == b.source_)) {
    throw MismatchError("cannot compose: target " + to_string(a.target_) +
                        " differs from source " + to_string(b.source_));
  }
  return GroupoidElement(a.source_, a.word_ * b.word_, b.target_,
                         GroupoidElement::Unchecked{});
}

GroupoidElement inverse(const GroupoidElement& a) {
  return GroupoidElement(a.target_, inverse(a.word_), a.source_,
                         GroupoidElement::Unchecked{});
}

GroupoidElement with_word(const GroupoidElement& x, Word word) {
  if (!same_basis(word.basis(), x.word_.basis())) {
    throw MismatchError("groupoid word over a foreign basis");
  }
  return GroupoidElement(x.source_, std::move(word), x.target_,
                         GroupoidElement::Unchecked{});
}

GroupoidElement boundary_arc(const Surface& surface, std::size_t component,
                             const Rational& alpha, const Rational& beta) {
  Basepoint from{component, alpha};
  Basepoint to{component, beta};
  // iota(from) * arc * iota(to)^-1 collapses to e, or to s_i when the arc
  // runs through position 0.
  Word word = alpha >= beta ? surface.boundary_word(component) : Word(surface.basis());
  return GroupoidElement(surface, std::move(from), std::move(word), std::move(to));
}

GroupoidElement embed_loop(const Surface& surface, const Word& w) {
  Basepoint x0{0, Rational(0)};
  return GroupoidElement(surface, x0, w, x0);
}

std::string to_string(const GroupoidElement& x) {
  return to_string(x.source()) + " " + to_string(x.word()) + " " + to_string(x.target());
}

GroupoidElement parse_groupoid_element(const Surface& surface, std::string_view text) {
  auto first_close = text.find(')');
  auto last_open = text.rfind('(');
  if (first_close == std::string_view::npos || last_open == std::string_view::npos ||
      last_open <= first_close) {
    throw ParseError("malformed groupoid element '" + std::string(text) + "'");
  }
  Basepoint source = parse_basepoint(trim(text.substr(0, first_close + 1)));
  Basepoint target = parse_basepoint(trim(text.substr(last_open)));
  Word word = parse_word(surface.basis(),
                         text.substr(first_close + 1, last_open - first_close - 1));
  return GroupoidElement(surface, std::move(source), std::move(word), std::move(target));
}

}  // namespace dnb
