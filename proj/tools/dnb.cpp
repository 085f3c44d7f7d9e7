#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dnb/acceptance.hpp"
#include "dnb/commands.hpp"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::string> as_optional(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure and boundary-constant automorphisms of surface groupoids"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string name2;
  std::size_t component = 0;
  std::string exponent;
  std::string group;
  std::size_t objects = 2;
  std::string table;
  std::uint64_t seed = dnb::acceptance::kDefaultSeed;

  auto* check = app.add_subcommand("check", "validate a session file");
  check->add_option("file", file, "session file")->required();

  auto* bc = app.add_subcommand("bc", "boundary-constancy verdict");
  bc->add_option("file", file, "session file")->required();
  bc->add_option("name", name, "automorphism name (optional if the file has one)");

  auto* zieschang = app.add_subcommand("zieschang", "Zieschang certificate for psi");
  zieschang->add_option("file", file, "session file")->required();
  zieschang->add_option("name", name, "automorphism name (optional if the file has one)");

  auto* factor = app.add_subcommand("factor", "factor a boundary-constant automorphism into twists");
  factor->add_option("file", file, "session file")->required();
  factor->add_option("name", name, "automorphism name (optional if the file has one)");

  auto* compose = app.add_subcommand("compose", "print outer o inner as a session");
  compose->add_option("file", file, "session file")->required();
  compose->add_option("outer", name, "applied second")->required();
  compose->add_option("inner", name2, "applied first")->required();

  auto* twist = app.add_subcommand("twist", "print the boundary twist T_i^k as a session");
  twist->add_option("file", file, "session file (its surface block is used)")->required();
  twist->add_option("component", component, "boundary component i")->required();
  twist->add_option("k", exponent, "exponent")->required();

  auto* lemma31 = app.add_subcommand("lemma31", "finite groupoid brute-force comparison");
  lemma31->add_option("group", group, "Z2, Z3, Z4, Z2xZ2, S3, or a label for --table")->required();
  lemma31->add_option("objects", objects, "number of objects")->required();
  lemma31->add_option("--table", table, "Cayley table file");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dnb::cli::kUsage;
  }

  auto read_file = [&](const std::string& path) -> std::optional<std::string> {
    auto text = slurp(path);
    if (!text) {
      std::cerr << "cannot read " << path << "\n";
    }
    return text;
  };

  if (*selftest) {
    return dnb::cli::selftest(seed, std::cout, std::cerr);
  }
  if (*lemma31) {
    std::optional<std::string> table_text;
    if (!table.empty()) {
      table_text = read_file(table);
      if (!table_text) {
        return dnb::cli::kUsage;
      }
    }
    return dnb::cli::lemma31(group, objects, table_text, std::cout, std::cerr);
  }

  const auto text = read_file(file);
  if (!text) {
    return dnb::cli::kUsage;
  }
  if (*check) {
    return dnb::cli::check(*text, std::cout, std::cerr);
  }
  if (*bc) {
    return dnb::cli::bc(*text, as_optional(name), std::cout, std::cerr);
  }
  if (*zieschang) {
    return dnb::cli::zieschang(*text, as_optional(name), std::cout, std::cerr);
  }
  if (*factor) {
    return dnb::cli::factor(*text, as_optional(name), std::cout, std::cerr);
  }
  if (*compose) {
    return dnb::cli::compose(*text, name, name2, std::cout, std::cerr);
  }
  return dnb::cli::twist(*text, component, exponent, std::cout, std::cerr);
}
