#include "spectre/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectre/arnold_bounds.hpp"
#include "spectre/errors.hpp"
#include "spectre/local_algebra.hpp"
#include "spectre/newton.hpp"
#include "spectre/picard_lefschetz.hpp"
#include "spectre/quasihomogeneous.hpp"
#include "spectre/singularities.hpp"

namespace spectre::cli {

namespace {

using nlohmann::json;

struct Shared {
  bool json = false;
  std::string vars;
  std::string interval = "open";
  bool assume_nondegenerate = false;
};

/// Thrown for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<std::vector<std::string>> variable_names(const Shared& shared) {
  if (shared.vars.empty() || all_digits(shared.vars)) return std::nullopt;
  return split_list(shared.vars);
}

std::optional<int> variable_count(const Shared& shared) {
  if (shared.vars.empty()) return std::nullopt;
  if (all_digits(shared.vars)) return std::stoi(shared.vars);
  return static_cast<int>(split_list(shared.vars).size());
}

IntervalKind interval_kind(const Shared& shared) {
  if (shared.interval == "open") return IntervalKind::Open;
  if (shared.interval == "halfopen") return IntervalKind::HalfOpenRight;
  throw UsageError("--interval must be 'open' or 'halfopen'");
}

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    if (!all_digits(item) || item.size() > 6) throw UsageError("--bp expects integers, e.g. 2,3");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("--bp expects a non-empty exponent list");
  return out;
}

MilnorOptions milnor_options() {
  MilnorOptions opts;
  if (const char* cap = std::getenv("SPECTRE_MAX_STAIRCASE")) {
    const std::string s(cap);
    if (!all_digits(s)) throw UsageError("SPECTRE_MAX_STAIRCASE must be a positive integer");
    opts.max_staircase = std::stoul(s);
  }
  return opts;
}

std::string fractions_text(const EigenvalueSet& e) {
  std::string out;
  for (const auto& [fraction, m] : e.entries()) {
    if (!out.empty()) out += ' ';
    out += fraction.to_string();
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "(none)" : out;
}

json fractions_json(const EigenvalueSet& e) {
  json arr = json::array();
  for (const auto& [fraction, m] : e.entries())
    arr.push_back({{"fraction", fraction.to_string()}, {"mult", m}});
  return arr;
}

/// Spectrum of a quasi-homogeneous isolated polynomial germ.
SpectralSet qh_polynomial_spectrum(const Poly& f) {
  const WeightVector w = detect_weights(f);
  const MilnorData md = milnor_number(f, milnor_options());
  if (!md.isolated())
    throw Error(ErrorKind::NotIsolated, f.to_string() + " has a non-isolated singularity");
  SpectralSet s = qh_spectrum(w);
  if (s.mu() != *md.mu)
    throw Error(ErrorKind::NotIsolated,
                "weights predict mu = " + std::to_string(s.mu()) + " but the Milnor algebra has dimension " +
                    std::to_string(*md.mu));
  return s;
}

struct GermInput {
  std::string poly;
  std::string bp;
  std::string sing;
};

void add_germ_options(CLI::App* cmd, GermInput& in, bool positional) {
  if (positional) cmd->add_option("polynomial", in.poly, "Quasi-homogeneous polynomial germ");
  cmd->add_option("--bp", in.bp, "Brieskorn-Pham exponents, e.g. 2,3");
  cmd->add_option("--sing", in.sing, "Named simple germ: A<k>, D<k>, E6, E7, E8");
}

SpectralSet resolve_germ(const GermInput& in, const Shared& shared, std::optional<int> ambient) {
  const int given = static_cast<int>(!in.poly.empty()) + static_cast<int>(!in.bp.empty()) +
                    static_cast<int>(!in.sing.empty());
  if (given != 1) throw UsageError("give exactly one of a polynomial, --bp or --sing");
  if (!in.bp.empty()) {
    SpectralSet s = bp_spectrum(parse_exponents(in.bp));
    if (ambient && *ambient != s.num_vars())
      throw UsageError("--bp germ has " + std::to_string(s.num_vars()) + " variables, expected " +
                       std::to_string(*ambient));
    return s;
  }
  if (!in.sing.empty()) {
    const Poly eq = builtin_equation(in.sing);
    const int vars = ambient ? *ambient : variable_count(shared).value_or(static_cast<int>(eq.num_vars()));
    return builtin_singularity(in.sing, vars);
  }
  SpectralSet s = qh_polynomial_spectrum(parse_polynomial(in.poly, variable_names(shared)));
  if (ambient && *ambient != s.num_vars())
    throw UsageError("polynomial germ must have " + std::to_string(*ambient) + " variables");
  return s;
}

// "4A1" means four copies of A1.
std::vector<SpectralSet> resolve_configuration(const std::vector<std::string>& items, int ambient) {
  std::vector<SpectralSet> germs;
  for (const auto& raw : items) {
    for (const auto& item : split_list(raw)) {
      std::size_t i = 0;
      while (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i]))) ++i;
      const int count = i == 0 ? 1 : std::stoi(item.substr(0, i));
      const SpectralSet s = builtin_singularity(item.substr(i), ambient);
      for (int c = 0; c < count; ++c) germs.push_back(s);
    }
  }
  return germs;
}

std::string copies_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("unbounded");
}

json copies_json(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json("unbounded");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of isolated hypersurface singularities and spectral bounds"};
  app.require_subcommand(1, 1);
  Shared shared;
  app.add_flag("--json", shared.json, "Emit JSON instead of text");
  app.add_option("--vars", shared.vars,
                 "Comma-separated variable names, or the ambient variable count for named germs");
  app.add_option("--interval", shared.interval, "Interval kind: open or halfopen")
      ->check(CLI::IsMember({"open", "halfopen"}));
  app.add_flag("--assume-nondegenerate", shared.assume_nondegenerate,
               "Acknowledge that the input is Newton-nondegenerate");

  std::string poly_text;
  std::string order_name = "negdegrevlex";
  auto* mu_cmd = app.add_subcommand("mu", "Milnor number and a monomial basis of the Milnor algebra");
  mu_cmd->add_option("polynomial", poly_text, "Polynomial germ")->required();
  mu_cmd->add_option("--order", order_name, "Local order: negdegrevlex or negdeglex")
      ->check(CLI::IsMember({"negdegrevlex", "negdeglex"}));

  GermInput spectrum_in;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of a quasi-homogeneous germ");
  add_germ_options(spectrum_cmd, spectrum_in, true);

  int n = 3;
  int d = 3;
  auto* arnold_cmd = app.add_subcommand("arnold", "Arnold number A_n(d)");
  arnold_cmd->add_option("-n", n, "Dimension of the ambient projective space")->required();
  arnold_cmd->add_option("-d", d, "Degree")->required();

  GermInput bound_in;
  auto* bound_cmd = app.add_subcommand("bound", "Maximal number of copies of a germ on a hypersurface");
  bound_cmd->add_option("-n", n, "Dimension of the ambient projective space")->required();
  bound_cmd->add_option("-d", d, "Degree")->required();
  add_germ_options(bound_cmd, bound_in, false);

  std::vector<std::string> config_items;
  auto* check_cmd = app.add_subcommand("check", "Test a configuration of singularities against the spectral bound");
  check_cmd->add_option("-n", n, "Dimension of the ambient projective space")->required();
  check_cmd->add_option("-d", d, "Degree")->required();
  check_cmd->add_option("--sing", config_items, "Germs, e.g. A5 A1 or 4A1")->required();

  auto* lct_cmd = app.add_subcommand("lct", "Log canonical threshold from the Newton polyhedron");
  lct_cmd->add_option("polynomial", poly_text, "Convenient polynomial germ")->required();

  auto* newton_cmd = app.add_subcommand("newton-spectrum", "Spectrum of a Newton-nondegenerate germ");
  newton_cmd->add_option("polynomial", poly_text, "Convenient polynomial germ")->required();

  GermInput mono_in;
  std::size_t chain = 0;
  auto* mono_cmd = app.add_subcommand("monodromy", "Monodromy eigenvalues and order");
  add_germ_options(mono_cmd, mono_in, true);
  mono_cmd->add_option("--chain", chain, "Picard-Lefschetz monodromy of the A_k chain");

  auto* classical_cmd = app.add_subcommand("classical", "Basset, Miyaoka-Yau and plane-curve bounds");
  classical_cmd->add_option("-d", d, "Degree")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const IntervalKind kind = interval_kind(shared);

    if (mu_cmd->parsed()) {
      MilnorOptions opts = milnor_options();
      opts.order = order_name == "negdeglex" ? LocalOrder::Kind::NegDegLex : LocalOrder::Kind::NegDegRevLex;
      const Poly f = parse_polynomial(poly_text, variable_names(shared));
      const MilnorData md = milnor_number(f, opts);
      if (shared.json) {
        json j;
        j["mu"] = md.mu ? json(*md.mu) : json("infinite");
        j["variables"] = f.variables();
        j["basis"] = json::array();
        for (const auto& m : md.basis) j["basis"].push_back(monomial_to_string(m, f.variables()));
        out << j.dump() << "\n";
      } else {
        out << (md.mu ? std::to_string(*md.mu) : std::string("infinite")) << "\n";
      }
      return 0;
    }

    if (spectrum_cmd->parsed()) {
      const SpectralSet s = resolve_germ(spectrum_in, shared, std::nullopt);
      if (shared.json) out << to_json(s) << "\n";
      else out << render_table(s);
      return 0;
    }

    if (arnold_cmd->parsed()) {
      const std::uint64_t a = arnold_number(n, d);
      if (shared.json) {
        json j{{"n", n}, {"d", d}, {"arnold", a}};
        if (n == 3) j["closed_form"] = arnold_closed_form_3(d).to_string();
        out << j.dump() << "\n";
      } else {
        out << a << "\n";
      }
      return 0;
    }

    if (bound_cmd->parsed()) {
      const BoundProblem problem(n, d, kind);
      const SpectralSet g = resolve_germ(bound_in, shared, n);
      const auto copies = max_copies(g, problem);
      const IntervalKind other_kind =
          kind == IntervalKind::Open ? IntervalKind::HalfOpenRight : IntervalKind::Open;
      const auto other = max_copies(g, BoundProblem(n, d, other_kind));
      const std::string other_name = other_kind == IntervalKind::Open ? "open" : "halfopen";
      if (shared.json) {
        json j{{"n", n}, {"d", d}, {"interval", shared.interval}, {"max_copies", copies_json(copies)}};
        j["max_copies_" + other_name] = copies_json(other);
        out << j.dump() << "\n";
      } else {
        out << copies_text(copies) << "\n";
        if (other != copies) out << other_name << " intervals: " << copies_text(other) << "\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const BoundProblem problem(n, d, kind);
      const BoundReport report = check_configuration(resolve_configuration(config_items, n), problem);
      if (shared.json) {
        out << to_json(report) << "\n";
      } else {
        out << "feasible: " << (report.feasible ? "true" : "false") << "\n";
        out << (report.feasible ? "tightest alpha: " : "witness alpha: ") << report.worst_alpha
            << " (config " << report.config_count << ", fermat " << report.fermat_count << ")\n";
      }
      return 0;
    }

    if (lct_cmd->parsed()) {
      const Poly f = parse_polynomial(poly_text, variable_names(shared));
      const Rat value = lct(newton_polyhedron(support(f)));
      if (shared.json) out << json{{"lct", value.to_string()}}.dump() << "\n";
      else out << value << "\n";
      return 0;
    }

    if (newton_cmd->parsed()) {
      if (!shared.assume_nondegenerate) {
        err << "newton-spectrum: nondegeneracy is not verified; pass --assume-nondegenerate to proceed\n";
        return 2;
      }
      const Poly f = parse_polynomial(poly_text, variable_names(shared));
      try {
        const SpectralSet s = nondegenerate_spectrum(f, milnor_options());
        if (shared.json) out << to_json(s) << "\n";
        else out << render_table(s);
      } catch (const BasisIncompatible& e) {
        err << "error: " << e.what() << "\nraw Newton weights:\n" << render_table(e.raw());
        return 1;
      }
      return 0;
    }

    if (mono_cmd->parsed()) {
      json j;
      std::optional<EigenvalueSet> eig;
      if (chain > 0) {
        if (!mono_in.poly.empty() || !mono_in.bp.empty() || !mono_in.sing.empty())
          throw UsageError("--chain cannot be combined with a germ");
        const IntMatrix t = total_monodromy(ak_chain(chain));
        eig = matrix_eigenvalues(t);
        const auto order = matrix_order(t, 1000000);
        if (shared.json) {
          json rows = json::array();
          for (std::size_t i = 0; i < t.size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t(i, k).get_si());
            rows.push_back(row);
          }
          j["matrix"] = rows;
          j["matrix_order"] = order ? json(*order) : json("not finite within cap");
        } else {
          out << "total monodromy:\n" << t.to_string();
          out << "matrix order: " << (order ? std::to_string(*order) : std::string("not finite within cap")) << "\n";
        }
      } else {
        eig = eigenvalues(resolve_germ(mono_in, shared, std::nullopt));
      }
      if (!eig) throw Error(ErrorKind::DomainError, "an eigenvalue is not a root of unity");
      const auto charpoly = characteristic_polynomial(*eig);
      const std::uint64_t order = monodromy_order(*eig);
      if (shared.json) {
        j["eigenvalue_fractions"] = fractions_json(*eig);
        if (const auto* p = std::get_if<IntPoly>(&charpoly)) j["characteristic_polynomial"] = p->to_string();
        else j["characteristic_polynomial"] = "galois-unstable";
        j["semisimple_order"] = order;
        out << j.dump() << "\n";
      } else {
        out << "eigenvalue fractions: " << fractions_text(*eig) << "\n";
        if (const auto* p = std::get_if<IntPoly>(&charpoly))
          out << "characteristic polynomial: " << p->to_string() << "\n";
        else
          out << "characteristic polynomial: not defined over Z (fractions not Galois-stable)\n";
        out << "order of semisimple part: " << order << "\n";
      }
      return 0;
    }

    if (classical_cmd->parsed()) {
      const ClassicalBounds b = classical_bounds(d);
      if (shared.json) {
        json j{{"d", d}};
        j["basset"] = b.basset ? json(*b.basset) : json(nullptr);
        j["miyaoka_yau"] = b.miyaoka_yau ? json(b.miyaoka_yau->to_string()) : json(nullptr);
        j["plane_curve"] = b.plane_curve ? json(*b.plane_curve) : json(nullptr);
        j["domain_errors"] = b.domain_errors;
        out << j.dump() << "\n";
      } else {
        out << "basset: " << (b.basset ? std::to_string(*b.basset) : std::string("n/a")) << "\n";
        out << "miyaoka-yau: " << (b.miyaoka_yau ? b.miyaoka_yau->to_string() : std::string("n/a")) << "\n";
        out << "plane curve: " << (b.plane_curve ? std::to_string(*b.plane_curve) : std::string("n/a")) << "\n";
        for (const auto& e : b.domain_errors) err << "note: " << e << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Syntax:
      case ErrorKind::NegativeExponent:
      case ErrorKind::UnknownVariable:
      case ErrorKind::UnknownSingularity:
      case ErrorKind::InvalidArgument:
        return 2;
      default:
        return 1;
    }
  }
  err << "no command given\n";
  return 2;
}

}  // namespace spectre::cli
