#include "dnb/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dnb/acceptance.hpp"
#include "dnb/finite_oracle.hpp"
#include "dnb/mcg.hpp"
#include "dnb/session.hpp"

namespace dnb::cli {

namespace {

// Maps library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SessionFailure& e) {
    err << e.what() << "\n";
    return kFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

const PureAut& select(const Session& session, const std::optional<std::string>& name) {
  if (name) {
    return session.find(*name);
  }
  if (session.automorphisms.size() != 1) {
    throw PreconditionError("automorphism name required (file has " +
                            std::to_string(session.automorphisms.size()) + ")");
  }
  return session.automorphisms.front().second;
}

std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

}  // namespace

int check(std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SessionCheck result = check_session(parse_session(text));
    if (!result.surface) {
      err << "surface: " << result.surface_diagnostic << "\n";
      return kFailure;
    }
    const Surface& s = *result.surface;
    out << "surface: ok (genus " << s.genus() << ", " << s.boundary_count()
        << " boundary components, " << s.basepoint_count() << " basepoints)\n";
    for (const auto& a : result.automorphisms) {
      if (a.aut) {
        out << "automorphism " << a.name << ": ok\n";
      } else {
        err << "automorphism " << a.name << ": " << a.diagnostic << "\n";
      }
    }
    return result.ok() ? kOk : kFailure;
  });
}

int bc(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
       std::ostream& err) {
  return guarded(err, [&] {
    const Session session = load_session(text);
    const BoundaryConstancy verdict = is_boundary_constant(select(session, name));
    if (verdict) {
      out << "boundary-constant: yes\n";
      return kOk;
    }
    out << "boundary-constant: no; arc " << arc_label(*verdict.violation) << " moved\n";
    out << "reason: " << verdict.violation->reason << "\n";
    return kFailure;
  });
}

int zieschang(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Session session = load_session(text);
    const GroupAut& psi = select(session, name).psi();
    auto cert = zieschang_check(psi, *session.surface);
    if (!cert) {
      out << "zieschang: fails: " << cert.diagnostic() << "\n";
      return kFailure;
    }
    const ZieschangCertificate& c = cert.value();
    out << "ε=" << sign_text(c.sign) << ", r=";
    if (c.is_identity_permutation()) {
      out << "id";
    } else {
      out << "(";
      for (std::size_t i = 0; i < c.permutation.size(); ++i) {
        out << (i ? " " : "") << c.permutation[i];
      }
      out << ")";
    }
    out << "\n";
    for (std::size_t i = 0; i < c.conjugators.size(); ++i) {
      out << "l" << i << " = " << to_string(c.conjugators[i]) << "\n";
    }
    return kOk;
  });
}

int factor(std::string_view text, const std::optional<std::string>& name, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    const Session session = load_session(text);
    const PureAut& aut = select(session, name);
    const BoundaryConstancy verdict = is_boundary_constant(aut);
    if (!verdict) {
      out << "not boundary-constant: arc " << arc_label(*verdict.violation) << " moved\n";
      return kFailure;
    }
    const TwistFactorization f = twist_factorization(aut);
    const BasisPtr& basis = session.surface->basis();
    out << "psi:\n";
    for (std::size_t i = 0; i < basis->rank(); ++i) {
      out << "  " << basis->name(i) << " -> " << to_string(f.psi_part.images()[i]) << "\n";
    }
    for (const ComponentTwist& t : f.twists) {
      out << t.component << ": c=" << to_string(t.conjugator) << " k=" << to_string(t.exponent)
          << "\n";
    }
    return kOk;
  });
}

int compose(std::string_view text, const std::string& outer, const std::string& inner,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Session session = load_session(text);
    out << format_session("composite", dnb::compose(session.find(outer), session.find(inner)));
    return kOk;
  });
}

int twist(std::string_view text, std::size_t component, const std::string& exponent,
          std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    // Only the surface block matters here.
    SessionCheck result = check_session(parse_session(text));
    if (!result.surface) {
      err << "surface: " << result.surface_diagnostic << "\n";
      return kFailure;
    }
    if (component >= result.surface->boundary_count()) {
      err << "error: component " << component << " out of range (surface has "
          << result.surface->boundary_count() << ")\n";
      return kUsage;
    }
    const Integer k = parse_integer(exponent);
    out << format_session("twist", boundary_twist(result.surface, component, k));
    return kOk;
  });
}

int lemma31(const std::string& group, std::size_t objects,
            const std::optional<std::string>& table_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    oracle::FiniteGroup g = [&] {
      if (table_text) {
        std::istringstream in(*table_text);
        return oracle::FiniteGroup::parse(in, group);
      }
      const auto names = oracle::FiniteGroup::builtin_names();
      if (std::find(names.begin(), names.end(), group) == names.end()) {
        std::string known;
        for (const auto& n : names) {
          known += (known.empty() ? "" : ", ") + n;
        }
        throw PreconditionError("unknown group '" + group + "' (builtin: " + known + ")");
      }
      return oracle::FiniteGroup::builtin(group);
    }();
    const std::size_t order = g.order();
    const oracle::Lemma31Report r = oracle::verify_lemma31({std::move(g), objects});
    out << "enumerated " << r.enumerated << (r.enumerated == r.predicted ? " = " : " != ")
        << "predicted " << r.predicted << "\n";
    out << "pair images " << r.pair_images << ", every map a pair: "
        << (r.surjective ? "yes" : "no") << "\n";
    out << "kernel size " << r.kernel_size << " (|G| = " << order
        << "), exact: " << (r.kernel_exact ? "yes" : "no") << "\n";
    return r.ok() ? kOk : kFailure;
  });
}

int selftest(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = acceptance::run_all(out, seed);
    const auto passed = std::count_if(results.begin(), results.end(),
                                      [](const acceptance::CriterionResult& r) { return r.passed; });
    out << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<std::ptrdiff_t>(results.size()) ? kOk : kFailure;
  });
}

}  // namespace dnb::cli
