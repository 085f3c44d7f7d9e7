#pragma once

// Line-oriented session files:
//
//   # comment
//   [surface]
//   genus = 1
//   boundary = 2
//   basepoints.0 = 0
//   basepoints.1 = 0, 1/2
//
//   [automorphism twist]
//   psi.t1 = t1
//   psi_inv.t1 = t1
//   g.1.0 = s1
//   g.1.1/2 = s1
//
// Omitted basepoints.<i> default to `0`, omitted psi / psi_inv entries to the
// generator itself, and omitted g entries to e.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnb/automorphism.hpp"
#include "dnb/error.hpp"
#include "dnb/surface.hpp"

namespace dnb {

// The session parsed but did not validate or certify.
class SessionFailure : public Error {
 public:
  using Error::Error;
};

struct SessionEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct RawAutomorphism {
  std::string name;
  std::size_t line = 0;
  std::vector<SessionEntry> entries;
};

struct RawSession {
  SurfaceSpec spec;
  std::vector<RawAutomorphism> automorphisms;
};

// Syntax only. Throws ParseError with a line number.
RawSession parse_session(std::string_view text);

struct CheckedAutomorphism {
  std::string name;
  std::optional<PureAut> aut;
  std::string diagnostic;
};

struct SessionCheck {
  SurfacePtr surface;  // null when the surface block does not validate
  std::string surface_diagnostic;
  std::vector<CheckedAutomorphism> automorphisms;

  bool ok() const;
};

// Validates the surface and certifies every automorphism. Word syntax errors
// throw ParseError; semantic failures are reported in the result.
SessionCheck check_session(const RawSession& raw);

struct Session {
  SurfacePtr surface;
  std::vector<std::pair<std::string, PureAut>> automorphisms;

  // Throws PreconditionError for an unknown name.
  const PureAut& find(const std::string& name) const;
};

// Throws ParseError or SessionFailure.
Session load_session(std::string_view text);

std::string format_surface_block(const Surface& surface);
std::string format_automorphism_block(const std::string& name, const PureAut& aut);
std::string format_session(const std::string& name, const PureAut& aut);

}  // namespace dnb
