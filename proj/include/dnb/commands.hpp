#pragma once

// The CLI commands, taking file contents rather than paths so they can be
// driven from tests. Each returns the process exit code: 0 success, 1 domain
// failure, 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace dnb::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

int check(std::string_view text, std::ostream& out, std::ostream& err);

// `name` may be omitted when the file has exactly one automorphism.
int bc(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
       std::ostream& err);
int zieschang(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
              std::ostream& err);
int factor(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
           std::ostream& err);

// Prints outer o inner (inner acts first) as a full session.
int compose(std::string_view text, const std::string& outer, const std::string& inner,
            std::ostream& out, std::ostream& err);

// Prints the twist T_i^k on the file's surface as a full session.
int twist(std::string_view text, std::size_t component, const std::string& exponent,
          std::ostream& out, std::ostream& err);

// `group` is a builtin name, or `table_text` holds a Cayley table.
int lemma31(const std::string& group, std::size_t objects,
            const std::optional<std::string>& table_text, std::ostream& out, std::ostream& err);

int selftest(std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace dnb::cli
