#include "dnb/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

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

bool valid_block_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '*' || c == '+';
  });
}

std::size_t parse_count(std::string_view text, std::size_t line, const char* what) {
  try {
    Integer value = parse_integer(text);
    if (value < 0 || value > 1000000) {
      throw ParseError(std::string(what) + " out of range", line);
    }
    return static_cast<std::size_t>(value);
  } catch (const ParseError& e) {
    if (e.line() != 0) {
      throw;
    }
    throw ParseError(e.what(), line);
  }
}

template <typename F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() != 0) {
      throw;
    }
    throw ParseError(e.what(), line);
  }
}

}  // namespace

RawSession parse_session(std::string_view text) {
  RawSession raw;
  enum class Section { None, Surface, Automorphism } section = Section::None;
  bool seen_surface = false;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> boundary;
  std::map<std::size_t, std::vector<Rational>> basepoints;
  std::set<std::string> surface_keys;
  std::set<std::string> names;
  std::set<std::string> block_keys;

  std::istringstream in{std::string(text)};
  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view line = buffer;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("unterminated block header", line_no);
      }
      std::string_view header = trim(line.substr(1, line.size() - 2));
      if (header == "surface") {
        if (seen_surface) {
          throw ParseError("duplicate [surface] block", line_no);
        }
        seen_surface = true;
        section = Section::Surface;
        continue;
      }
      constexpr std::string_view kPrefix = "automorphism";
      if (header.substr(0, kPrefix.size()) == kPrefix && header.size() > kPrefix.size() &&
          std::isspace(static_cast<unsigned char>(header[kPrefix.size()]))) {
        std::string name(trim(header.substr(kPrefix.size())));
        if (!valid_block_name(name)) {
          throw ParseError("invalid automorphism name '" + name + "'", line_no);
        }
        if (!names.insert(name).second) {
          throw ParseError("duplicate automorphism '" + name + "'", line_no);
        }
        raw.automorphisms.push_back({name, line_no, {}});
        block_keys.clear();
        section = Section::Automorphism;
        continue;
      }
      throw ParseError("unknown block [" + std::string(header) + "]", line_no);
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ParseError("empty key", line_no);
    }
    switch (section) {
      case Section::None:
        throw ParseError("entry outside of any block", line_no);
      case Section::Surface: {
        if (!surface_keys.insert(key).second) {
          throw ParseError("duplicate key '" + key + "'", line_no);
        }
        if (key == "genus") {
          genus = parse_count(value, line_no, "genus");
        } else if (key == "boundary") {
          boundary = parse_count(value, line_no, "boundary");
        } else if (key.rfind("basepoints.", 0) == 0) {
          std::size_t component = parse_count(std::string_view(key).substr(11), line_no,
                                               "component index");
          std::vector<Rational> positions;
          std::string_view rest = value;
          while (true) {
            auto comma = rest.find(',');
            std::string_view item = trim(rest.substr(0, comma));
            positions.push_back(at_line(line_no, [&] { return parse_rational(item); }));
            if (comma == std::string_view::npos) {
              break;
            }
            rest = rest.substr(comma + 1);
          }
          basepoints[component] = std::move(positions);
        } else {
          throw ParseError("unknown surface key '" + key + "'", line_no);
        }
        break;
      }
      case Section::Automorphism:
        if (!block_keys.insert(key).second) {
          throw ParseError("duplicate key '" + key + "'", line_no);
        }
        raw.automorphisms.back().entries.push_back({key, value, line_no});
        break;
    }
  }
  if (!seen_surface) {
    throw ParseError("missing [surface] block");
  }
  if (!genus || !boundary) {
    throw ParseError("[surface] block needs both 'genus' and 'boundary'");
  }
  raw.spec.genus = static_cast<unsigned>(*genus);
  raw.spec.boundary = static_cast<unsigned>(*boundary);
  std::size_t components = *boundary;
  if (!basepoints.empty()) {
    components = std::max(components, basepoints.rbegin()->first + 1);
  }
  raw.spec.basepoints.assign(components, {Rational(0)});
  for (auto& [component, positions] : basepoints) {
    raw.spec.basepoints[component] = std::move(positions);
  }
  return raw;
}

bool SessionCheck::ok() const {
  return surface != nullptr &&
         std::all_of(automorphisms.begin(), automorphisms.end(),
                     [](const CheckedAutomorphism& a) { return a.aut.has_value(); });
}

SessionCheck check_session(const RawSession& raw) {
  SessionCheck result;
  if (auto diagnostic = validate(raw.spec)) {
    result.surface_diagnostic = *diagnostic;
    return result;
  }
  result.surface = make_surface(raw.spec);
  const Surface& surface = *result.surface;
  const BasisPtr& basis = surface.basis();

  for (const RawAutomorphism& block : raw.automorphisms) {
    CheckedAutomorphism checked{block.name, std::nullopt, {}};
    std::vector<Word> images;
    for (std::size_t i = 0; i < basis->rank(); ++i) {
      images.push_back(Word::generator(basis, i));
    }
    std::vector<Word> inverse_images = images;
    std::vector<Word> gvec(surface.basepoint_count(), Word(basis));

    for (const SessionEntry& entry : block.entries) {
      const std::string& key = entry.key;
      std::vector<Word>* table = nullptr;
      std::string generator;
      if (key.rfind("psi.", 0) == 0) {
        table = &images;
        generator = key.substr(4);
      } else if (key.rfind("psi_inv.", 0) == 0) {
        table = &inverse_images;
        generator = key.substr(8);
      }
      if (table != nullptr) {
        auto index = basis->find(generator);
        if (!index) {
          throw ParseError("unknown generator '" + generator + "'", entry.line);
        }
        (*table)[*index] = at_line(entry.line, [&] { return parse_word(basis, entry.value); });
        continue;
      }
      if (key.rfind("g.", 0) == 0) {
        std::string_view rest = std::string_view(key).substr(2);
        auto dot = rest.find('.');
        if (dot == std::string_view::npos) {
          throw ParseError("expected g.<component>.<position>", entry.line);
        }
        std::size_t component = parse_count(rest.substr(0, dot), entry.line, "component index");
        Rational position = at_line(entry.line, [&] { return parse_rational(rest.substr(dot + 1)); });
        Word w = at_line(entry.line, [&] { return parse_word(basis, entry.value); });
        Basepoint p{component, position};
        auto index = surface.index_of(p);
        if (!index) {
          if (checked.diagnostic.empty()) {
            checked.diagnostic = "line " + std::to_string(entry.line) + ": unknown basepoint " +
                                 to_string(p);
          }
          continue;
        }
        gvec[*index] = std::move(w);
        continue;
      }
      throw ParseError("unknown automorphism key '" + key + "'", entry.line);
    }
    if (checked.diagnostic.empty()) {
      auto psi = verify_automorphism(basis, std::move(images), std::move(inverse_images));
      if (psi) {
        checked.aut = PureAut::from_pair(result.surface, std::move(psi).value(), std::move(gvec));
      } else {
        checked.diagnostic = psi.diagnostic();
      }
    }
    result.automorphisms.push_back(std::move(checked));
  }
  return result;
}

const PureAut& Session::find(const std::string& name) const {
  for (const auto& [n, aut] : automorphisms) {
    if (n == name) {
      return aut;
    }
  }
  throw PreconditionError("no automorphism named '" + name + "'");
}

Session load_session(std::string_view text) {
  SessionCheck check = check_session(parse_session(text));
  if (!check.surface) {
    throw SessionFailure("surface: " + check.surface_diagnostic);
  }
  Session session{check.surface, {}};
  for (auto& a : check.automorphisms) {
    if (!a.aut) {
      throw SessionFailure("automorphism " + a.name + ": " + a.diagnostic);
    }
    session.automorphisms.emplace_back(a.name, std::move(*a.aut));
  }
  return session;
}

std::string format_surface_block(const Surface& surface) {
  std::ostringstream out;
  out << "[surface]\n";
  out << "genus = " << surface.genus() << "\n";
  out << "boundary = " << surface.boundary_count() << "\n";
  for (std::size_t i = 0; i < surface.boundary_count(); ++i) {
    out << "basepoints." << i << " = ";
    const auto& positions = surface.spec().basepoints[i];
    for (std::size_t k = 0; k < positions.size(); ++k) {
      out << (k ? ", " : "") << to_string(positions[k]);
    }
    out << "\n";
  }
  return out.str();
}

std::string format_automorphism_block(const std::string& name, const PureAut& aut) {
  const Surface& surface = *aut.surface();
  const BasisPtr& basis = surface.basis();
  std::ostringstream out;
  out << "[automorphism " << name << "]\n";
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    out << "psi." << basis->name(i) << " = " << to_string(aut.psi().images()[i]) << "\n";
  }
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    out << "psi_inv." << basis->name(i) << " = " << to_string(aut.psi().inverse_images()[i])
        << "\n";
  }
  for (std::size_t p = 0; p < surface.basepoint_count(); ++p) {
    const Basepoint& bp = surface.basepoints()[p];
    out << "g." << bp.component << "." << to_string(bp.position) << " = "
        << to_string(aut.gvec()[p]) << "\n";
  }
  return out.str();
}

std::string format_session(const std::string& name, const PureAut& aut) {
  return format_surface_block(*aut.surface()) + "\n" + format_automorphism_block(name, aut);
}

}  // namespace dnb
