#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "casimir/casimir_ops.hpp"
#include "casimir/errors.hpp"
#include "casimir/pair_basis.hpp"
#include "casimir/projectors.hpp"
#include "casimir/verify.hpp"
#include "casimir/vogel.hpp"

namespace casimir {

namespace {

Family parse_family(const std::string& s) {
  if (s == "so") return Family::Orthogonal;
  if (s == "sp") return Family::Symplectic;
  throw UsageError("family must be 'so' or 'sp', got '" + s + "'");
}

int max_n_cap() {
  const char* v = std::getenv("CASIMIR_MAX_N");
  if (!v) return kDefaultMaxN;
  try {
    int cap = std::stoi(v);
    if (cap < 2) throw UsageError("CASIMIR_MAX_N must be >= 2");
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad CASIMIR_MAX_N: ") + v);
  }
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& content) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + path);
  f << content;
}

ProjectorSystem build_system(const AlgebraSpec& spec) {
  CasimirBundle b = make_bundle(spec);
  return spec.m == 8 ? so8_system(b) : projectors_generic(b);
}

std::string dims_output(const AlgebraSpec& spec, const std::string& format) {
  ProjectorSystem sys = build_system(spec);
  std::vector<long long> dims = dimensions(sys);
  std::ostringstream os;
  if (format == "structured") {
    for (std::size_t i = 0; i < sys.items.size(); ++i)
      os << "label=" << sys.items[i].label << " dim=" << dims[i] << '\n';
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
    os << '\n';
  }
  return os.str();
}

std::string vogel_output(const AlgebraSpec& spec, const std::string& format) {
  VogelPoint p = vogel_point(spec);
  std::ostringstream os;
  os << "alpha=" << rat_str(p.alpha) << " beta=" << rat_str(p.beta)
     << " gamma=" << rat_str(p.gamma) << " t=" << rat_str(p.t) << '\n';
  UniversalDecomposition dec;
  try {
    dec = universal_decomposition(p);
  } catch (const DegenerateVogelPoint& e) {
    os << "degenerate-point: " << e.what() << '\n';
    return os.str();
  }
  auto corr = correspondence(spec);
  auto proj_of = [&](const std::string& piece) {
    for (const auto& [proj, pc] : corr)
      if (pc == piece) return proj;
    return std::string("-");
  };
  for (const UniversalPiece& piece : dec.pieces) {
    if (format == "structured") os << "piece=";
    os << piece.label << " dim=" << rat_str(piece.dim) << " c2=" << rat_str(piece.c2)
       << " c_hat=" << rat_str(piece.c_hat) << " proj=" << proj_of(piece.label) << '\n';
  }
  return os.str();
}

std::string manifest_line(const ProjectorItem& item) {
  std::ostringstream os;
  os << "PROJ label=" << item.label << " eigenvalue="
     << (item.eigenvalue ? rat_frac_str(*item.eigenvalue) : std::string("none"))
     << " dim=" << item.expected_dim << " primitive=" << (item.primitive ? 1 : 0) << '\n';
  return os.str();
}

std::string export_output(const AlgebraSpec& spec, const std::string& name) {
  std::ostringstream os;
  auto plain = [&](const SparseOperator& op) { write_sparse(os, op); };
  if (name == "c_f") {
    plain(casimir_defining(spec));
  } else if (name == "c_ad") {
    plain(casimir_adjoint(spec));
  } else if (name == "c_plus" || name == "c_minus") {
    auto [cp, cm] = casimir_split(spec, casimir_adjoint(spec));
    plain(name == "c_plus" ? cp : cm);
  } else if (name == "I" || name == "P" || name == "K") {
    InvariantOps ops = invariant_ops(spec);
    plain(name == "I" ? ops.I : name == "P" ? ops.P : ops.K);
  } else if (name == "A4") {
    plain(antisymmetrizer(spec.n, 4));
  } else if (name == "E4") {
    if (spec.m != 8) throw UnknownOperator("E4 is defined on V_8^4: requires so(8)");
    plain(epsilon_operator(4));
  } else if (name.rfind("proj", 0) == 0 || name.rfind("so8:", 0) == 0) {
    bool so8 = name.rfind("so8:", 0) == 0;
    if (so8 && spec.m != 8) throw UnknownOperator("operator " + name + " requires so(8)");
    CasimirBundle b = make_bundle(spec);
    ProjectorSystem sys = so8 ? so8_system(b) : projectors_generic(b);
    std::string label = so8 ? name.substr(4) : name;
    for (const ProjectorItem& item : sys.items)
      if (item.label == label) {
        os << manifest_line(item);
        write_sparse(os, b.to_v4(item.op));
        return os.str();
      }
    throw UnknownOperator("no projector named " + name);
  } else {
    throw UnknownOperator("unknown operator " + name);
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact split-Casimir projector engine for so(N) and sp(N)"};
  app.require_subcommand(1);

  std::string family_s, level_s = "fast", format_s = "text", out_path, op_name;
  int n = 0;

  auto add_spec_opts = [&](CLI::App* cmd, bool with_family) {
    if (with_family)
      cmd->add_option("--family", family_s, "algebra family: so or sp")->required();
    cmd->add_option("--n", n, "dimension of the defining space")->required();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  add_spec_opts(verify_cmd, true);
  verify_cmd->add_option("--level", level_s, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--format", format_s, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* dims_cmd = app.add_subcommand("dims", "print invariant-subspace dimensions");
  add_spec_opts(dims_cmd, true);
  dims_cmd->add_option("--format", format_s)->check(CLI::IsMember({"text", "structured"}));

  CLI::App* vogel_cmd = app.add_subcommand("vogel", "print Vogel point and universal data");
  add_spec_opts(vogel_cmd, true);
  vogel_cmd->add_option("--format", format_s)->check(CLI::IsMember({"text", "structured"}));

  CLI::App* export_cmd = app.add_subcommand("export", "write one operator in the sparse format");
  add_spec_opts(export_cmd, true);
  export_cmd->add_option("--op", op_name, "operator name")->required();

  CLI::App* duality_cmd = app.add_subcommand("duality", "so(n) <-> sp(n) duality check");
  add_spec_opts(duality_cmd, false);
  duality_cmd->add_option("--format", format_s)->check(CLI::IsMember({"text", "structured"}));

  std::vector<std::string> argv_strings;
  argv_strings.push_back("casimir");
  argv_strings.insert(argv_strings.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_strings.size());
  for (const std::string& s : argv_strings) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(duality_cmd)) {
      VerificationRecord rec = run_duality_check(n);
      write_output(out_path, out, format_s == "structured" ? to_structured(rec) : to_text(rec));
      return rec.all_passed() ? 0 : 1;
    }

    AlgebraSpec spec = make_spec(parse_family(family_s), n, max_n_cap());
    if (app.got_subcommand(verify_cmd)) {
      VerificationRecord rec =
          run_suite(spec, level_s == "full" ? SuiteLevel::Full : SuiteLevel::Fast);
      write_output(out_path, out, format_s == "structured" ? to_structured(rec) : to_text(rec));
      return rec.all_passed() ? 0 : 1;
    }
    if (app.got_subcommand(dims_cmd)) {
      write_output(out_path, out, dims_output(spec, format_s));
      return 0;
    }
    if (app.got_subcommand(vogel_cmd)) {
      write_output(out_path, out, vogel_output(spec, format_s));
      return 0;
    }
    if (app.got_subcommand(export_cmd)) {
      write_output(out_path, out, export_output(spec, op_name));
      return 0;
    }
    err << "usage error: no command\n";
    return 2;
  } catch (const NonIntegerTrace& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const IdentityViolation& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const NeedsSo8Refinement& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace casimir
