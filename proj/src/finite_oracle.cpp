#include "dnb/finite_oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "dnb/error.hpp"

namespace dnb::oracle {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return t;
}

void require_tractable(const FiniteGroupoid& gpd) {
  if (gpd.group.order() > kMaxGroupOrder || gpd.objects > kMaxObjects || gpd.objects == 0) {
    throw PreconditionError("groupoid outside the tractability bound (|G| <= " +
                            std::to_string(kMaxGroupOrder) + ", 1 <= objects <= " +
                            std::to_string(kMaxObjects) + ")");
  }
}

// Composition and inversion on element indices, derived from the group
// table. kNone marks non-composable pairs.
struct GroupoidTable {
  std::size_t size = 0;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::size_t> product;  // size * size
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> identity;  // per object

  explicit GroupoidTable(const FiniteGroupoid& gpd) : size(gpd.size()) {
    const FiniteGroup& g = gpd.group;
    const std::size_t m = gpd.objects;
    source.resize(size);
    target.resize(size);
    inverse.resize(size);
    product.assign(size * size, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t a = 0; a < g.order(); ++a) {
          const std::size_t x = gpd.index(i, a, j);
          source[x] = i;
          target[x] = j;
          inverse[x] = gpd.index(j, g.inverse(a), i);
          for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t b = 0; b < g.order(); ++b) {
              product[x * size + gpd.index(j, b, k)] = gpd.index(i, g.multiply(a, b), k);
            }
          }
        }
      }
      identity.push_back(gpd.index(i, g.identity(), i));
    }
  }

  std::size_t compose(std::size_t a, std::size_t b) const { return product[a * size + b]; }
};

// Extends generator images to a map on every element by following products
// from each identity. Returns false if the extension is inconsistent on the
// way; the caller still checks the full table.
bool extend(const GroupoidTable& t, const std::vector<std::size_t>& gens,
            const std::vector<std::size_t>& images, GroupoidMap& out) {
  out.assign(t.size, kNone);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    edges.emplace_back(gens[k], images[k]);
    edges.emplace_back(t.inverse[gens[k]], t.inverse[images[k]]);
  }
  std::deque<std::size_t> queue;
  for (std::size_t id : t.identity) {
    out[id] = id;
    queue.push_back(id);
  }
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& [gen, image] : edges) {
      const std::size_t ab = t.compose(a, gen);
      if (ab == kNone) {
        continue;
      }
      const std::size_t fab = t.compose(out[a], image);
      if (fab == kNone) {
        return false;
      }
      if (out[ab] == kNone) {
        out[ab] = fab;
        queue.push_back(ab);
      } else if (out[ab] != fab) {
        return false;
      }
    }
  }
  return std::find(out.begin(), out.end(), kNone) == out.end();
}

bool is_pure_automorphism(const GroupoidTable& t, const GroupoidMap& f) {
  std::vector<bool> hit(t.size, false);
  for (std::size_t a = 0; a < t.size; ++a) {
    if (t.source[f[a]] != t.source[a] || t.target[f[a]] != t.target[a] || hit[f[a]]) {
      return false;
    }
    hit[f[a]] = true;
    if (f[t.inverse[a]] != t.inverse[f[a]]) {
      return false;
    }
  }
  for (std::size_t id : t.identity) {
    if (f[id] != id) {
      return false;
    }
  }
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      const std::size_t ab = t.compose(a, b);
      if (ab != kNone && f[ab] != t.compose(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
                         std::vector<std::size_t> generators)
    : name_(std::move(name)), order_(table.size()), generators_(std::move(generators)) {
  if (order_ == 0) {
    throw PreconditionError("group table is empty");
  }
  table_.reserve(order_ * order_);
  for (const auto& row : table) {
    if (row.size() != order_) {
      throw PreconditionError("group table is not square");
    }
    for (std::size_t x : row) {
      if (x >= order_) {
        throw PreconditionError("group table entry " + std::to_string(x) + " out of range");
      }
      table_.push_back(x);
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    found = true;
    for (std::size_t x = 0; x < order_; ++x) {
      if (multiply(e, x) != x || multiply(x, e) != x) {
        found = false;
        break;
      }
    }
    if (found) {
      identity_ = e;
    }
  }
  if (!found) {
    throw PreconditionError("group table has no identity");
  }
  inverse_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
      }
    }
    if (inverse_[a] == order_) {
      throw PreconditionError("element " + std::to_string(a) + " has no inverse");
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      for (std::size_t c = 0; c < order_; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw PreconditionError("group table is not associative");
        }
      }
    }
  }

  auto closure = [this](const std::vector<std::size_t>& gens) {
    std::vector<bool> in(order_, false);
    std::deque<std::size_t> queue{identity_};
    in[identity_] = true;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t g : gens) {
        std::size_t ag = multiply(a, g);
        if (!in[ag]) {
          in[ag] = true;
          queue.push_back(ag);
        }
      }
    }
    return in;
  };
  for (std::size_t g : generators_) {
    if (g >= order_) {
      throw PreconditionError("generator " + std::to_string(g) + " out of range");
    }
  }
  if (generators_.empty()) {
    std::vector<bool> in = closure(generators_);
    for (std::size_t x = 0; x < order_; ++x) {
      if (!in[x]) {
        generators_.push_back(x);
        in = closure(generators_);
      }
    }
  }
  const std::vector<bool> in = closure(generators_);
  if (std::find(in.begin(), in.end(), false) != in.end()) {
    throw PreconditionError("designated generators do not generate the group");
  }
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  if (name == "Z2" || name == "Z3" || name == "Z4") {
    return FiniteGroup(name, cyclic_table(static_cast<std::size_t>(name[1] - '0')), {1});
  }
  if (name == "Z2xZ2") {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        t[a][b] = a ^ b;
      }
    }
    return FiniteGroup(name, t, {1, 2});
  }
  if (name == "S3") {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto find = [&](const std::array<std::size_t, 3>& q) {
      return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<std::size_t, 3> ab{};
        for (std::size_t x = 0; x < 3; ++x) {
          ab[x] = perms[a][perms[b][x]];
        }
        t[a][b] = find(ab);
      }
    }
    return FiniteGroup(name, t, {find({1, 0, 2}), find({1, 2, 0})});
  }
  throw PreconditionError("unknown built-in group '" + name + "'");
}

std::vector<std::string> FiniteGroup::builtin_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "S3"};
}

FiniteGroup FiniteGroup::parse(std::istream& in, std::string name) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      lines.push_back(line);
    }
  }
  auto read_row = [](const std::string& text, std::size_t line_no) {
    std::istringstream row(text);
    std::vector<std::size_t> values;
    std::string token;
    while (row >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a nonnegative integer, got '" + token + "'", line_no);
      }
      values.push_back(std::stoul(token));
    }
    return values;
  };
  if (lines.empty()) {
    throw ParseError("empty Cayley table");
  }
  auto header = read_row(lines[0], 1);
  if (header.size() != 1 || header[0] == 0) {
    throw ParseError("first line must be the group order", 1);
  }
  const std::size_t n = header[0];
  if (lines.size() < n + 1 || lines.size() > n + 2) {
    throw ParseError("expected " + std::to_string(n) + " table rows and an optional generator line");
  }
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = read_row(lines[r + 1], r + 2);
    if (row.size() != n) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       r + 2);
    }
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> gens;
  if (lines.size() == n + 2) {
    gens = read_row(lines[n + 1], n + 2);
  }
  try {
    return FiniteGroup(std::move(name), std::move(table), std::move(gens));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::vector<GroupoidMap> enumerate_paut(const FiniteGroupoid& gpd) {
  require_tractable(gpd);
  const GroupoidTable t(gpd);
  const FiniteGroup& g = gpd.group;
  const std::size_t n = g.order();

  // Generators: loops at object 0, then the star elements (0, e, j).
  std::vector<std::size_t> gens;
  std::vector<std::size_t> slot_target;
  for (std::size_t x : g.generators()) {
    gens.push_back(gpd.index(0, x, 0));
    slot_target.push_back(0);
  }
  for (std::size_t j = 1; j < gpd.objects; ++j) {
    gens.push_back(gpd.index(0, g.identity(), j));
    slot_target.push_back(j);
  }

  std::vector<GroupoidMap> found;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<std::size_t> images(gens.size());
  GroupoidMap f;
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      images[k] = gpd.index(0, choice[k], slot_target[k]);
    }
    if (extend(t, gens, images, f) && is_pure_automorphism(t, f)) {
      found.push_back(f);
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) {
      break;
    }
  }
  return found;
}

std::vector<std::vector<std::size_t>> automorphism_group(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != group.identity()) {
      others.push_back(x);
    }
  }
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> perm = others;
  do {
    std::vector<std::size_t> sigma(n);
    sigma[group.identity()] = group.identity();
    for (std::size_t k = 0; k < others.size(); ++k) {
      sigma[others[k]] = perm[k];
    }
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (sigma[group.multiply(a, b)] != group.multiply(sigma[a], sigma[b])) {
          hom = false;
          break;
        }
      }
    }
    if (hom) {
      result.push_back(std::move(sigma));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::uint64_t quotient_count(const FiniteGroupoid& gpd) {
  require_tractable(gpd);
  const std::uint64_t n = gpd.group.order();
  const std::uint64_t aut = automorphism_group(gpd.group).size();
  return aut * ipow(n, gpd.objects) / n;
}

Lemma31Report verify_lemma31(const FiniteGroupoid& gpd) {
  require_tractable(gpd);
  const FiniteGroup& g = gpd.group;
  const std::size_t n = g.order();
  const std::size_t m = gpd.objects;

  Lemma31Report report;
  const std::vector<GroupoidMap> enumerated = enumerate_paut(gpd);
  report.enumerated = enumerated.size();
  report.predicted = quotient_count(gpd);

  const auto auts = automorphism_group(g);
  GroupoidMap identity_map(gpd.size());
  std::iota(identity_map.begin(), identity_map.end(), std::size_t{0});

  using Pair = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  std::set<GroupoidMap> images;
  std::set<Pair> trivial_pairs;
  std::vector<std::size_t> gvec(m, 0);
  for (const auto& psi : auts) {
    std::fill(gvec.begin(), gvec.end(), 0);
    while (true) {
      // (i, a, j) |-> (i, g_i^-1 psi(a) g_j, j)
      GroupoidMap f(gpd.size());
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t a = 0; a < n; ++a) {
            const std::size_t b = g.multiply(g.multiply(g.inverse(gvec[i]), psi[a]), gvec[j]);
            f[gpd.index(i, a, j)] = gpd.index(i, b, j);
          }
        }
      }
      if (f == identity_map) {
        trivial_pairs.emplace(psi, gvec);
      }
      images.insert(std::move(f));
      std::size_t k = 0;
      while (k < m && ++gvec[k] == n) {
        gvec[k] = 0;
        ++k;
      }
      if (k == m) {
        break;
      }
    }
  }
  report.pair_images = images.size();
  report.surjective = std::all_of(enumerated.begin(), enumerated.end(),
                                  [&](const GroupoidMap& f) { return images.count(f) > 0; });

  // Kernel set {(Inn_h, (h^-1, ..., h^-1))} with Inn_h(a) = h^-1 a h.
  std::set<Pair> kernel;
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<std::size_t> inn(n);
    for (std::size_t a = 0; a < n; ++a) {
      inn[a] = g.multiply(g.multiply(g.inverse(h), a), h);
    }
    kernel.emplace(std::move(inn), std::vector<std::size_t>(m, g.inverse(h)));
  }
  report.kernel_size = trivial_pairs.size();
  report.kernel_exact = kernel.size() == n && trivial_pairs == kernel;
  return report;
}

}  // namespace dnb::oracle
