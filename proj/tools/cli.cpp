#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twistcoh/twistcoh.hpp"

namespace twistcoh::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string mode = "auto";
  std::optional<double> eps;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InvalidArgument("cannot write '" + path + "'");
}

Presentation load_presentation(const std::string& path) {
  try {
    return parse_presentation(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Picks the numeric mode for a run. --eps is only meaningful in approx mode; explicit
// exact modes must agree with what the literals need.
NumericMode resolve_mode(const Options& opt, std::span<const std::string> specs) {
  if (opt.eps && opt.mode != "approx") throw ModeMismatch("--eps is only valid with --mode approx");
  if (opt.mode == "approx") return NumericMode::approx(opt.eps.value_or(kDefaultTolerance));
  NumericMode inferred;
  try {
    inferred = infer_exact_mode(specs);
  } catch (const ModeMismatch& e) {
    throw ModeMismatch(std::string(e.what()) + " (use --mode approx)");
  }
  if (opt.mode == "rational" && inferred.field != Field::Rational)
    throw ModeMismatch("radical literal given in rational mode");
  if (opt.mode == "quadratic" && inferred.field != Field::Quadratic)
    throw ModeMismatch("quadratic mode needs a literal mentioning sqrt(d)");
  return inferred;
}

std::vector<std::string> gather_character_specs(const std::vector<std::string>& inline_specs,
                                                const std::string& char_file) {
  std::vector<std::string> specs = inline_specs;
  if (!char_file.empty()) {
    for (std::string& line : character_lines(read_file(char_file))) specs.push_back(std::move(line));
  }
  return specs;
}

std::vector<Character> parse_characters(const std::vector<std::string>& specs, const Presentation& p,
                                        const NumericMode& mode) {
  std::vector<Character> out;
  if (specs.empty()) out.push_back(Character::trivial(p.generators.size(), mode));
  for (const std::string& s : specs) out.push_back(parse_character(s, p, mode));
  return out;
}

// `u=1 v=-1/2 t=0`; unmentioned generators get 0.
Vector parse_cocycle_values(std::string_view spec, const Presentation& p, const NumericMode& mode) {
  if (spec.starts_with("mu:")) spec.remove_prefix(3);
  Vector values(p.generators.size(), Scalar::zero(mode));
  std::vector<bool> seen(p.generators.size(), false);
  std::istringstream in{std::string(spec)};
  std::string token;
  while (in >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in cocycle, got '" + token + "'");
    const std::string name = token.substr(0, eq);
    const std::size_t g = p.index_of(name);
    if (g == p.generators.size()) throw ParseError("unknown generator '" + name + "' in cocycle");
    if (seen[g]) throw ParseError("generator '" + name + "' assigned twice in cocycle");
    seen[g] = true;
    values[g] = parse_scalar(token.substr(eq + 1), mode);
  }
  return values;
}

std::string format_values(const Vector& v, const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + p.generators[i] + "=" + v[i].to_string();
  return out;
}

json scalars_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& x : v) out.push_back(x.to_string());
  return out;
}

// First basis cocycle giving an indecomposable representation.
std::optional<RepCertificate> witness(const Presentation& p, const Character& rho, const CohomologyReport& report) {
  if (report.h1_dim == 0) return std::nullopt;
  for (const Cocycle& mu : report.z1_basis) {
    RepCertificate cert = build_representation(p, rho, mu);
    if (cert.indecomposable) return cert;
  }
  return std::nullopt;
}

json report_json(const Presentation& p, const Character& rho, const CohomologyReport& report, bool with_certificate) {
  json basis = json::array();
  for (const Cocycle& mu : report.z1_basis) basis.push_back(scalars_json(mu.values()));
  json out = {
      {"character", format_character(rho, p)},
      {"mode", mode_to_json(rho.mode())},
      {"z1_dim", report.z1_dim},
      {"b1_dim", report.b1_dim},
      {"h1_dim", report.h1_dim},
      {"basis", basis},
      {"warnings", report.warnings},
  };
  if (with_certificate) {
    const auto cert = witness(p, rho, report);
    out["certificate"] = cert ? to_json(*cert) : json(nullptr);
  }
  return out;
}

void print_report(std::ostream& out, const Presentation& p, const Character& rho, const CohomologyReport& report) {
  out << format_character(rho, p) << "\n";
  out << "mode: " << rho.mode().describe() << "\n";
  out << "z1_dim: " << report.z1_dim << "\n";
  out << "b1_dim: " << report.b1_dim << "\n";
  out << "h1_dim: " << report.h1_dim << "\n";
  out << "basis:\n";
  for (const Cocycle& mu : report.z1_basis) out << "  mu: " << format_values(mu.values(), p) << "\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
}

std::string verdict(const RepCertificate& cert) {
  std::string out = std::string("verified: ") + (cert.verified ? "true" : "false") +
                    ", indecomposable: " + (cert.indecomposable ? "true" : "false");
  if (cert.fixed_line) out += ", fixed_line_c: " + cert.fixed_line->to_string();
  return out;
}

void add_mode_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mode", opt.mode, "Numeric mode")
      ->check(CLI::IsMember({"auto", "rational", "quadratic", "approx"}))
      ->capture_default_str();
  cmd->add_option("--eps", opt.eps, "Zero-test tolerance (approx mode only)");
}

void add_format_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

int exit_code_for(const std::exception_ptr& ep, std::ostream& err) {
  try {
    std::rethrow_exception(ep);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InadmissibleCharacter& e) {
    err << "inadmissible character: " << e.what() << "\n";
    return kInadmissible;
  } catch (const ModeMismatch& e) {
    err << "mode mismatch: " << e.what() << "\n";
    return kModeMismatch;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted first cohomology of finitely presented groups"};
  app.name("twistcoh");
  app.require_subcommand(1);

  Options opt;
  std::function<void()> action;

  // h1
  std::string pres_path;
  std::vector<std::string> char_specs;
  std::string char_file;
  auto* h1 = app.add_subcommand("h1", "Dimensions of Z^1, B^1 and H^1 for one or more characters");
  h1->add_option("presentation", pres_path, "Presentation file")->required();
  h1->add_option("--char", char_specs, "Character, e.g. 't=3/2+1/2*sqrt(5)'");
  h1->add_option("--char-file", char_file, "File with one 'char:' line per character");
  add_mode_options(h1, opt);
  add_format_option(h1, opt);
  h1->callback([&] {
    action = [&] {
      const Presentation p = load_presentation(pres_path);
      const auto specs = gather_character_specs(char_specs, char_file);
      const NumericMode mode = resolve_mode(opt, specs);
      json all = json::array();
      bool first = true;
      for (const Character& rho : parse_characters(specs, p, mode)) {
        const CohomologyReport report = twisted_h1_dimension(p, rho);
        if (opt.format == "json") {
          all.push_back(report_json(p, rho, report, true));
        } else {
          if (!first) out << "\n";
          print_report(out, p, rho, report);
        }
        first = false;
      }
      if (opt.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    };
  });

  // certificate
  std::string cocycle_spec;
  std::string cert_out;
  auto* certificate = app.add_subcommand("certificate", "Emit a 2x2 representation certificate");
  certificate->add_option("presentation", pres_path, "Presentation file")->required();
  certificate->add_option("--char", char_specs, "Character")->expected(0, 1);
  certificate->add_option("--char-file", char_file, "File whose single 'char:' line is used");
  certificate->add_option("--cocycle", cocycle_spec, "Cocycle values, e.g. 'u=1 v=-1'; default: a witness");
  certificate->add_option("-o,--output", cert_out, "Write the certificate JSON here");
  add_mode_options(certificate, opt);
  add_format_option(certificate, opt);
  certificate->callback([&] {
    action = [&] {
      const Presentation p = load_presentation(pres_path);
      auto specs = gather_character_specs(char_specs, char_file);
      if (specs.size() > 1) throw InvalidArgument("certificate takes exactly one character");
      std::vector<std::string> all_literals = specs;
      if (!cocycle_spec.empty()) all_literals.push_back(cocycle_spec);
      const NumericMode mode = resolve_mode(opt, all_literals);
      const Character rho = parse_characters(specs, p, mode).front();

      std::optional<RepCertificate> cert;
      if (!cocycle_spec.empty()) {
        cert = build_representation(p, rho, Cocycle(parse_cocycle_values(cocycle_spec, p, mode), rho));
      } else {
        const CohomologyReport report = twisted_h1_dimension(p, rho);
        cert = witness(p, rho, report);
        if (!cert) {
          // Only coboundaries exist: certify the standard one (zero for trivial rho).
          Vector mu = report.coboundary_generator.value_or(Vector(p.generators.size(), Scalar::zero(mode)));
          cert = build_representation(p, rho, Cocycle(std::move(mu), rho));
        }
      }
      const std::string text = to_json(*cert).dump(2) + "\n";
      if (!cert_out.empty()) write_file(cert_out, text);
      if (opt.format == "json" && cert_out.empty())
        out << text;
      else
        out << verdict(*cert) << "\n";
      if (!cert->verified) throw VerificationFailure("emitted certificate does not verify");
    };
  });

  // verify
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a presentation");
  verify->add_option("presentation", pres_path, "Presentation file")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON")->required();
  verify->callback([&] {
    action = [&] {
      const Presentation p = load_presentation(pres_path);
      RepCertificate cert;
      try {
        cert = certificate_from_json(json::parse(read_file(cert_path)));
      } catch (const json::exception& e) {
        throw VerificationFailure("unreadable certificate: " + std::string(e.what()));
      } catch (const Error& e) {
        throw VerificationFailure("unreadable certificate: " + std::string(e.what()));
      }
      const bool claimed_indecomposable = cert.indecomposable;
      const CertificateCheck check = check_certificate(cert, p);
      cert.verified = check.ok;
      cert.fixed_line = check.ok ? is_decomposable(cert) : std::nullopt;
      cert.indecomposable = check.ok && !cert.fixed_line;
      out << verdict(cert) << "\n";
      for (const std::string& f : check.failures) err << "  " << f << "\n";
      if (!check.ok) throw VerificationFailure("certificate rejected");
      if (claimed_indecomposable != cert.indecomposable)
        throw VerificationFailure("recorded decomposability flag is wrong");
    };
  });

  // family
  auto* family = app.add_subcommand("family", "Write presentations of built-in families");
  family->require_subcommand(1);
  std::string prefix;
  auto add_prefix = [&](CLI::App* cmd) {
    cmd->add_option("--prefix", prefix, "Write PREFIX.pres, PREFIX.char (and PREFIX.conj) instead of stdout");
  };
  struct FamilyOutput {
    Presentation presentation;
    std::vector<std::string> characters;
    std::optional<ConjugationData> conjugation;
  };
  auto emit = [&](const FamilyOutput& f) {
    if (prefix.empty()) {
      out << to_text(f.presentation);
      return;
    }
    write_file(prefix + ".pres", to_text(f.presentation));
    std::string chars;
    for (const std::string& c : f.characters) chars += c + "\n";
    write_file(prefix + ".char", chars);
    out << "wrote " << prefix << ".pres\nwrote " << prefix << ".char\n";
    if (f.conjugation) {
      write_file(prefix + ".conj", to_text(*f.conjugation));
      out << "wrote " << prefix << ".conj\n";
    }
  };
  auto trivial_line = [](const Presentation& p) {
    return format_character(Character::trivial(p.generators.size(), NumericMode::rational()), p);
  };

  std::vector<long> torus_entries;
  std::string torus_y;
  auto* torus = family->add_subcommand("mapping-torus", "Z^2 x|_A Z for A = [[a, b], [c, d]] in SL2(Z)");
  torus->add_option("entries", torus_entries, "a b c d")->required()->expected(4);
  torus->add_option("--y", torus_y, "Value of the character on t; default: the positive eigenvalues of A");
  add_mode_options(torus, opt);
  add_prefix(torus);
  torus->callback([&] {
    action = [&] {
      const IntMatrix a{{torus_entries[0], torus_entries[1]}, {torus_entries[2], torus_entries[3]}};
      FamilyOutput f{mapping_torus_presentation(a), {}, mapping_torus_conjugation_data(a)};
      std::vector<Scalar> ys;
      if (!torus_y.empty()) {
        const std::vector<std::string> lit{"t=" + torus_y};
        ys.push_back(parse_scalar(torus_y, resolve_mode(opt, lit)));
      } else {
        for (const Scalar& y : mapping_torus_eigenvalues(a))
          if (!y.is_one()) ys.push_back(y);
      }
      for (const Scalar& y : ys) {
        if (!y.is_positive()) throw InvalidArgument("y must be positive");
        f.characters.push_back(format_character(mapping_torus_character(a, y), f.presentation));
      }
      if (f.characters.empty()) f.characters.push_back(trivial_line(f.presentation));
      emit(f);
    };
  });

  int genus = 0;
  auto* surface = family->add_subcommand("surface", "Closed orientable surface group of genus g");
  surface->add_option("genus", genus, "g >= 1")->required();
  add_prefix(surface);
  surface->callback([&] {
    action = [&] {
      FamilyOutput f{surface_presentation(genus), {}, std::nullopt};
      f.characters.push_back(trivial_line(f.presentation));
      emit(f);
    };
  });

  long rank_arg = 0;
  auto add_rank_family = [&](const char* name, const char* help, Presentation (*make)(std::size_t)) {
    auto* cmd = family->add_subcommand(name, help);
    cmd->add_option("rank", rank_arg, "rank >= 1")->required();
    add_prefix(cmd);
    cmd->callback([&, make] {
      action = [&, make] {
        if (rank_arg < 1) throw InvalidArgument("rank must be >= 1");
        FamilyOutput f{make(static_cast<std::size_t>(rank_arg)), {}, std::nullopt};
        f.characters.push_back(trivial_line(f.presentation));
        emit(f);
      };
    });
  };
  add_rank_family("free", "Free group of rank m", &free_group);
  add_rank_family("abelian", "Free abelian group Z^n", &free_abelian);

  auto* heis = family->add_subcommand("heisenberg", "Integer Heisenberg group");
  add_prefix(heis);
  heis->callback([&] {
    action = [&] {
      FamilyOutput f{heisenberg(), {}, heisenberg_conjugation_data()};
      f.characters.push_back(trivial_line(f.presentation));
      emit(f);
    };
  });

  // enumerate
  std::string conj_path;
  std::vector<std::string> outer_names;
  auto* enumerate = app.add_subcommand("enumerate", "List characters with non-vanishing H^1");
  enumerate->add_option("presentation", pres_path, "Presentation file")->required();
  enumerate->add_option("conjugation", conj_path, "Conjugation data file")->required();
  enumerate->add_option("--outer", outer_names, "Generators playing a_1 .. a_m, in order")->required();
  add_mode_options(enumerate, opt);
  add_format_option(enumerate, opt);
  enumerate->callback([&] {
    action = [&] {
      const Presentation p = load_presentation(pres_path);
      const ConjugationData data = parse_conjugation_data(read_file(conj_path));
      if (opt.eps && opt.mode != "approx") throw ModeMismatch("--eps is only valid with --mode approx");
      std::vector<std::size_t> outer;
      for (const std::string& name : outer_names) {
        const std::size_t g = p.index_of(name);
        if (g == p.generators.size()) throw InvalidArgument("unknown generator '" + name + "' in --outer");
        outer.push_back(g);
      }
      const Enumeration result = enumerate_nonvanishing(p, data, outer, opt.eps.value_or(kDefaultTolerance));
      if (opt.format == "json") {
        json list = json::array();
        for (const NonVanishing& nv : result.nonvanishing)
          list.push_back(report_json(p, nv.character, nv.report, false));
        const json doc = {{"bound", result.bound},
                          {"candidates", result.candidates},
                          {"nonvanishing", list},
                          {"warnings", result.warnings}};
        out << doc.dump(2) << "\n";
        return;
      }
      out << "bound: " << result.bound << "\n";
      out << "candidates: " << result.candidates << "\n";
      out << "nonvanishing: " << result.nonvanishing.size() << "\n";
      for (const NonVanishing& nv : result.nonvanishing)
        out << format_character(nv.character, p) << "  h1_dim: " << nv.report.h1_dim << "\n";
      for (const std::string& w : result.warnings) out << "warning: " << w << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (action) action();
    return kOk;
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

}  // namespace twistcoh::cli
