#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conecheck/betti.hpp"
#include "conecheck/covers.hpp"
#include "conecheck/ledger.hpp"
#include "conecheck/sweep.hpp"

namespace {

using namespace conecheck;

constexpr int kExitCheckFailed = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadFile = 65;

std::string format_base(const BaseDivisorClass& b) {
  std::string out;
  auto term = [&](const Int& c, const char* sym) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const Int mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += sym;
  };
  term(b.coeff_E, "E");
  term(b.coeff_q, "q");
  term(b.coeff_K, "K");
  return out.empty() ? "0" : out;
}

std::string format_surface(const SurfaceDivisorClass& d) {
  std::string out;
  if (d.gamma0_coeff != 0) {
    if (d.gamma0_coeff == 1) out = "Gamma0";
    else if (d.gamma0_coeff == -1) out = "-Gamma0";
    else out = d.gamma0_coeff.get_str() + "*Gamma0";
  }
  if (!(d.fiber_part == BaseDivisorClass::zero())) {
    if (!out.empty()) out += " + ";
    out += "(" + format_base(d.fiber_part) + ")f";
  }
  return out.empty() ? "0" : out;
}

struct Range {
  Int lo, hi;
};

std::optional<Range> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return std::nullopt;
  const std::string a = text.substr(0, pos);
  const std::string b = text.substr(pos + 2);
  try {
    Range r{Int(a), Int(b)};
    if (r.lo > r.hi) return std::nullopt;
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Resolves --e / --e-offset into an absolute e. Exactly one must be given.
std::optional<Int> resolve_e(const std::optional<long>& e_abs,
                             const std::optional<long>& e_offset,
                             const Int& gamma) {
  if (e_abs.has_value() == e_offset.has_value()) return std::nullopt;
  if (e_abs) return Int(*e_abs);
  return 4 * gamma + 5 + Int(*e_offset);
}

void print_report(const VerificationReport& report, const std::string& format,
                  std::ostream& os) {
  if (format == "json") {
    os << report.to_json().dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    os << "name,pass,lhs,rhs,assumed\n";
    for (const auto& c : report.checks)
      os << c.name << "," << (c.pass ? "true" : "false") << "," << c.lhs << ","
         << c.rhs << "," << (c.assumed ? "true" : "false") << "\n";
    return;
  }
  os << "## Verification at (gamma, e) = (" << report.gamma << ", " << report.e
     << ")\n\n"
     << "d = " << report.d << ", g = " << report.g << ", r = " << report.r
     << "\n"
     << "dim = " << report.dim_family << ", tangent = " << report.dim_tangent
     << ", sigma = " << report.superabundance << "\n\n"
     << "| check | pass | lhs | rhs | assumed |\n"
     << "|---|---|---|---|---|\n";
  for (const auto& c : report.checks)
    os << "| " << c.name << " | " << (c.pass ? "yes" : "NO") << " | " << c.lhs
       << " | " << c.rhs << " | " << (c.assumed ? "yes" : "") << " |\n";
}

void print_ledger(const DimensionLedger& ledger, const std::string& title,
                  const std::string& format, std::ostream& os) {
  if (format == "json") return;  // handled by caller
  if (format == "csv") {
    os << "label,value,provenance,assumed\n";
    for (const auto& t : ledger.terms)
      os << "\"" << t.label << "\"," << t.value << ",\"" << t.provenance
         << "\"," << (t.assumed ? "true" : "false") << "\n";
    os << "total," << ledger.total() << ",,\n";
    return;
  }
  os << "## " << title << "\n\n| term | value | provenance |\n|---|---|---|\n";
  for (const auto& t : ledger.terms)
    os << "| " << t.label << " | " << t.value << " | " << t.provenance
       << (t.assumed ? " (assumed)" : "") << " |\n";
  os << "| **total** | " << ledger.total() << " | |\n";
}

void print_sweep(const std::vector<SweepRow>& rows, const std::string& format,
                 std::ostream& os) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json item;
      item["gamma"] = row.gamma.get_str();
      item["e"] = row.e.get_str();
      item["d"] = row.d.get_str();
      item["g"] = row.g.get_str();
      item["r"] = row.r.get_str();
      if (row.skipped) {
        item["skipped"] = true;
      } else {
        item["dim"] = row.dim.get_str();
        item["tangent"] = row.tangent.get_str();
        item["sigma"] = row.sigma.get_str();
        item["pass"] = row.pass;
      }
      arr.push_back(std::move(item));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  const bool markdown = format == "markdown";
  if (markdown) {
    os << "| gamma | e | d | g | r | dim | tangent | sigma | pass |\n"
       << "|---|---|---|---|---|---|---|---|---|\n";
  } else {
    os << "gamma,e,d,g,r,dim,tangent,sigma,pass\n";
  }
  for (const auto& row : rows) {
    const char* sep = markdown ? " | " : ",";
    if (markdown) os << "| ";
    os << row.gamma << sep << row.e << sep << row.d << sep << row.g << sep
       << row.r << sep;
    if (row.skipped) {
      os << sep << sep << sep << "skipped";
    } else {
      os << row.dim << sep << row.tangent << sep << row.sigma << sep
         << (row.pass ? "true" : "false");
    }
    os << (markdown ? " |\n" : "\n");
  }
}

int cmd_verify(const Int& gamma, const Int& e, bool with_betti,
               const std::string& format) {
  try {
    const VerificationReport report = verify_main_theorem(gamma, e, with_betti);
    print_report(report, format, std::cout);
    return report.all_pass() ? 0 : kExitCheckFailed;
  } catch (const HypothesisError& err) {
    std::cerr << "hypothesis error: " << err.what() << "\n";
    return kExitHypothesis;
  }
}

int cmd_sweep(const std::string& gamma_range, const std::string& e_range,
              const std::string& e_offset_range, bool serial,
              const std::string& format) {
  const auto gammas = parse_range(gamma_range);
  if (!gammas) {
    std::cerr << "malformed --gamma range '" << gamma_range << "'\n";
    return kExitUsage;
  }
  const bool offset = !e_offset_range.empty();
  if (offset == !e_range.empty()) {
    std::cerr << "exactly one of --e / --e-offset is required\n";
    return kExitUsage;
  }
  const auto es = parse_range(offset ? e_offset_range : e_range);
  if (!es) {
    std::cerr << "malformed e range\n";
    return kExitUsage;
  }
  const auto cells = make_grid(gammas->lo, gammas->hi, es->lo, es->hi, offset);
  if (cells.empty()) {
    std::cerr << "empty sweep grid\n";
    return kExitUsage;
  }
  const auto rows = serial ? run_sweep_serial(cells) : run_sweep_parallel(cells);
  print_sweep(rows, format, std::cout);
  for (const auto& row : rows)
    if (!row.skipped && !row.pass) return kExitCheckFailed;
  return 0;
}

int cmd_betti(const std::optional<long>& rational_normal,
              const std::string& file, long m, const std::string& format) {
  std::optional<BettiTable> input;
  if (rational_normal.has_value() == !file.empty()) {
    std::cerr << "exactly one of --rational-normal / --file is required\n";
    return kExitUsage;
  }
  try {
    if (rational_normal) {
      input = rational_normal_betti(Int(*rational_normal));
    } else {
      std::ifstream in(file);
      if (!in.good()) {
        std::cerr << "cannot open " << file << "\n";
        return kExitBadFile;
      }
      input = BettiTable::from_json(nlohmann::json::parse(in));
    }
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "invalid table file: " << err.what() << "\n";
    return kExitBadFile;
  } catch (const std::exception& err) {
    std::cerr << "invalid table: " << err.what() << "\n";
    return kExitBadFile;
  }

  const RationalPoly chi_in = hilbert_polynomial(*input);
  if (chi_in.degree() != 1 || chi_in.coeff(1).get_den() != 1 ||
      chi_in.coeff(0).get_den() != 1) {
    std::cerr << "input table is not a curve table (chi = " << chi_in.str()
              << ")\n";
    return kExitBadFile;
  }
  const Int deg_in(chi_in.coeff(1).get_num());
  const Int genus_in = 1 - Int(chi_in.coeff(0).get_num());

  const BettiTable output = cg_transform(*input, Int(m));
  const RationalPoly chi_out = hilbert_polynomial(output);
  const Int deg_out = Int(m) * deg_in + 1;
  const Int genus_out = binomial(Int(m), 2) * deg_in + Int(m) * genus_in;
  const RationalPoly chi_expected({Rat(1 - genus_out), Rat(deg_out)});
  const bool chi_ok = chi_out == chi_expected;
  const bool separation = degree_separation_check(output, Int(m));

  if (format == "json") {
    nlohmann::json doc;
    doc["input"] = input->to_json();
    doc["transformed"] = output.to_json();
    doc["hilbert_input"] = chi_in.str();
    doc["hilbert_transformed"] = chi_out.str();
    doc["expected"] = {{"d", deg_out.get_str()}, {"g", genus_out.get_str()}};
    doc["hilbert_consistent"] = chi_ok;
    doc["degree_separation"] = separation;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "input ambient " << input->ambient() << ", chi = "
              << chi_in.str() << "\n"
              << "input table: " << input->to_json()["steps"].dump() << "\n"
              << "transformed ambient " << output.ambient() << ", chi = "
              << chi_out.str() << "\n"
              << "transformed table: " << output.to_json()["steps"].dump()
              << "\n"
              << "expected (d, g) = (" << deg_out << ", " << genus_out << ")\n"
              << "hilbert consistent: " << (chi_ok ? "true" : "false") << "\n"
              << "degree separation: " << (separation ? "true" : "false")
              << "\n";
  }
  return chi_ok ? 0 : kExitCheckFailed;
}

int cmd_ledger(const Int& gamma, const Int& e, const std::string& format) {
  try {
    const DimensionLedger fam = family_dimension(gamma, e);
    const DimensionLedger tan = tangent_dimension(gamma, e);
    if (format == "json") {
      nlohmann::json doc;
      doc["gamma"] = gamma.get_str();
      doc["e"] = e.get_str();
      doc["family"] = fam.to_json();
      doc["tangent"] = tan.to_json();
      std::cout << doc.dump(2) << "\n";
    } else {
      print_ledger(fam, "Family dimension", format, std::cout);
      std::cout << "\n";
      print_ledger(tan, "Tangent-space dimension", format, std::cout);
    }
    return 0;
  } catch (const HypothesisError& err) {
    std::cerr << "hypothesis error: " << err.what() << "\n";
    return kExitHypothesis;
  }
}

int cmd_covers(const Int& gamma, const Int& e, const Int& m,
               const std::string& format) {
  try {
    const BaseCurve curve(gamma, e);
    const CoverData cover(curve, m);
    const auto ram = ramification_class(cover);
    const auto half = branch_half_class(cover);
    nlohmann::json doc;
    doc["gamma"] = gamma.get_str();
    doc["e"] = e.get_str();
    doc["m"] = m.get_str();
    doc["ramification_class"] = format_surface(ram);
    doc["ramification_degree"] = ramification_degree(cover).get_str();
    doc["branch_half_class"] = format_base(half);
    doc["branch_half_degree"] = degree_base(half, curve).get_str();
    doc["riemann_hurwitz"] = riemann_hurwitz_check(cover);
    if (m == 3) {
      for (const bool twisted : {true, false}) {
        nlohmann::json arr = nlohmann::json::array();
        Int sum = 0;
        for (const auto& b : pushforward_summands(cover, twisted)) {
          arr.push_back({{"class", format_base(b)},
                         {"degree", degree_base(b, curve).get_str()}});
          sum += degree_base(b, curve);
        }
        doc[twisted ? "pushforward_twisted" : "pushforward_untwisted"] = {
            {"summands", arr}, {"determinant_degree", sum.get_str()}};
      }
    }
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "ramification class: " << format_surface(ram) << "\n"
                << "ramification degree: " << ramification_degree(cover) << "\n"
                << "branch half class: " << format_base(half) << " (degree "
                << degree_base(half, curve) << ")\n"
                << "riemann-hurwitz: "
                << (riemann_hurwitz_check(cover) ? "true" : "false") << "\n";
      if (m == 3) {
        for (const bool twisted : {true, false}) {
          std::cout << (twisted ? "pushforward (twisted): "
                                : "pushforward (untwisted): ");
          Int sum = 0;
          for (const auto& b : pushforward_summands(cover, twisted)) {
            std::cout << "[" << format_base(b) << "] ";
            sum += degree_base(b, curve);
          }
          std::cout << "det degree " << sum << "\n";
        }
      }
    }
    return 0;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitHypothesis;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact numerical verification for curves on cones"};
  app.require_subcommand(1);

  std::string format = "json";

  long gamma_arg = 0;
  std::optional<long> e_arg, e_offset_arg;
  bool with_betti = false;
  auto* verify = app.add_subcommand("verify", "run the full check battery");
  verify->add_option("--gamma", gamma_arg, "genus of the base curve")
      ->required();
  verify->add_option("--e", e_arg, "degree of the base curve");
  verify->add_option("--e-offset", e_offset_arg, "e as offset from 4*gamma+5");
  verify->add_flag("--with-betti", with_betti,
                   "include the genus-0 resolution-transform companion check");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

  std::string gamma_range, e_range, e_offset_range;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "verify a grid of (gamma, e) cells");
  sweep->add_option("--gamma", gamma_range, "gamma range A..B")->required();
  sweep->add_option("--e", e_range, "absolute e range A..B");
  sweep->add_option("--e-offset", e_offset_range,
                    "e range as offsets from 4*gamma+5");
  sweep->add_flag("--serial", serial, "use the serial reference path");
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

  std::optional<long> rational_normal;
  std::string betti_file;
  long m_arg = 3;
  auto* betti = app.add_subcommand("betti", "resolution transform and certification");
  betti->add_option("--rational-normal", rational_normal,
                    "use the degree-e rational normal curve table");
  betti->add_option("--file", betti_file, "read the input table from JSON");
  betti->add_option("--m", m_arg, "cover multiplicity")->check(CLI::Range(2LL, 1000LL));
  betti->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

  long lg = 0;
  std::optional<long> le, le_offset;
  auto* ledger = app.add_subcommand("ledger", "print the itemized dimension ledgers");
  ledger->add_option("--gamma", lg)->required();
  ledger->add_option("--e", le);
  ledger->add_option("--e-offset", le_offset);
  ledger->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

  long cg = 0, cm = 3;
  std::optional<long> ce, ce_offset;
  auto* covers = app.add_subcommand("covers", "ramification, branch and pushforward data");
  covers->add_option("--gamma", cg)->required();
  covers->add_option("--e", ce);
  covers->add_option("--e-offset", ce_offset);
  covers->add_option("--m", cm);
  covers->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    const auto e = resolve_e(e_arg, e_offset_arg, Int(gamma_arg));
    if (!e) {
      std::cerr << "exactly one of --e / --e-offset is required\n";
      return kExitUsage;
    }
    return cmd_verify(Int(gamma_arg), *e, with_betti, format);
  }
  if (sweep->parsed())
    return cmd_sweep(gamma_range, e_range, e_offset_range, serial, format);
  if (betti->parsed())
    return cmd_betti(rational_normal, betti_file, m_arg, format);
  if (ledger->parsed()) {
    const auto e = resolve_e(le, le_offset, Int(lg));
    if (!e) {
      std::cerr << "exactly one of --e / --e-offset is required\n";
      return kExitUsage;
    }
    return cmd_ledger(Int(lg), *e, format);
  }
  if (covers->parsed()) {
    const auto e = resolve_e(ce, ce_offset, Int(cg));
    if (!e) {
      std::cerr << "exactly one of --e / --e-offset is required\n";
      return kExitUsage;
    }
    return cmd_covers(Int(cg), *e, Int(cm), format);
  }
  return kExitUsage;
}
