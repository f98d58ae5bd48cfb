// Command-line front end: normal forms, bases, dimensions, products, the lattice
// embedding and the verification suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fva/basis.hpp"
#include "fva/errors.hpp"
#include "fva/expr_parser.hpp"
#include "fva/fock.hpp"
#include "fva/rewrite.hpp"
#include "fva/suites.hpp"

namespace {

using fva::Scalar;
using nlohmann::ordered_json;

enum ExitCode { kOk = 0, kParse = 1, kValidation = 2, kSuiteFailed = 3 };

bool machine = false;

ordered_json word_json(const fva::Signature& sig, const fva::Word& w) {
  ordered_json letters = ordered_json::array();
  for (const auto& l : w) letters.push_back({{"gen", sig.name(l.gen)}, {"mode", l.mode}});
  return letters;
}

void print_free(const fva::Signature& sig, const fva::FreeElement& x) {
  if (!machine) {
    std::cout << fva::to_string(sig, x) << "\n";
    return;
  }
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : fva::canonical_terms(sig, x))
    terms.push_back({{"coeff", fva::to_string(c)}, {"word", word_json(sig, w)}});
  std::cout << ordered_json{{"text", fva::to_string(sig, x)}, {"terms", terms}}.dump() << "\n";
}

void print_fock(const fva::Signature& sig, const fva::FockElement& x) {
  if (!machine) {
    std::cout << fva::to_string(sig, x) << "\n";
    return;
  }
  ordered_json terms = ordered_json::array();
  for (const auto& [s, c] : x) {
    ordered_json heis = ordered_json::array();
    for (const auto& l : s.heis) heis.push_back({{"gen", sig.name(l.gen)}, {"level", l.level}});
    terms.push_back({{"coeff", fva::to_string(c)}, {"heis", heis}, {"charge", s.charge.coeffs()}});
  }
  std::cout << ordered_json{{"text", fva::to_string(sig, x)}, {"terms", terms}}.dump() << "\n";
}

int print_report(const fva::SuiteReport& r) {
  std::cout << (machine ? r.render_machine() : r.render_text());
  return r.passed() ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free and lattice vertex algebra calculator"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string sig_path;
  std::string expr;
  std::string expr2;
  std::string weight;
  std::string range;
  std::int64_t deg2 = 0;
  std::int64_t mode = 0;
  std::int64_t k_max = 4;
  std::int64_t d_max = 6;
  std::int64_t length = 3;
  std::string lattice_path;

  auto* nf = app.add_subcommand("normal-form", "Normal form of an element");
  nf->add_option("sig", sig_path, "Signature file")->required();
  nf->add_option("expr", expr, "Element")->required();

  auto* basis = app.add_subcommand("basis", "Basis words of a homogeneous component");
  basis->add_option("sig", sig_path)->required();
  basis->add_option("weight", weight)->required();
  basis->add_option("deg2", deg2, "Doubled degree")->required();

  auto* dim = app.add_subcommand("dim", "Dimensions over a range of doubled degrees");
  dim->add_option("sig", sig_path)->required();
  dim->add_option("weight", weight)->required();
  dim->add_option("range", range, "Doubled degrees, e.g. 4..12")->required();

  auto* product = app.add_subcommand("product", "Normal form of u [n] v");
  product->add_option("sig", sig_path)->required();
  product->add_option("u", expr)->required();
  product->add_option("n", mode)->required();
  product->add_option("v", expr2)->required();

  auto* embed = app.add_subcommand("embed", "Image in the lattice vertex algebra");
  embed->add_option("sig", sig_path)->required();
  embed->add_option("expr", expr)->required();

  auto* dong = app.add_subcommand("dong", "Quantitative Dong lemma against brute force");
  dong->add_option("sig", sig_path)->required();
  dong->add_option("k_max", k_max);

  auto* locfun = app.add_subcommand("locfun", "Locality function by exhaustive search");
  locfun->add_option("sig", sig_path)->required();
  locfun->add_option("l", length)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* v_dong = verify->add_subcommand("dong");
  v_dong->add_option("sig", sig_path)->required();
  v_dong->add_option("--k-max", k_max);
  auto* v_locfun = verify->add_subcommand("locfun");
  v_locfun->add_option("sig", sig_path)->required();
  v_locfun->add_option("l", length)->required();
  auto* v_pres = verify->add_subcommand("presentation");
  v_pres->add_option("lattice", lattice_path, "Lattice file with basis and gram")->required();
  auto* v_bozfer = verify->add_subcommand("bozfer");
  v_bozfer->add_option("--k-max", k_max);
  v_bozfer->add_option("--d-max", d_max);
  auto* v_vir = verify->add_subcommand("virasoro");
  v_vir->add_option("lattice", lattice_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  machine = format == "machine";

  try {
    if (*nf) {
      const auto sig = fva::load_signature_file(sig_path);
      print_free(sig, fva::normal_form(sig, fva::parse_element(sig, expr)).result);
    } else if (*basis) {
      const auto sig = fva::load_signature_file(sig_path);
      const auto w = fva::parse_weight(sig, weight);
      if (!w.is_nonnegative()) throw fva::ValidationError("weights of the free algebra are nonnegative");
      for (const auto& word : fva::enumerate_basis(sig, w, deg2)) {
        const std::string part = fva::to_string(sig, fva::eta(sig, word));
        if (machine) {
          std::cout << ordered_json{{"word", fva::to_string(sig, word)}, {"partition", part}}.dump() << "\n";
        } else {
          std::cout << fva::to_string(sig, word) << "  " << part << "\n";
        }
      }
    } else if (*dim) {
      const auto sig = fva::load_signature_file(sig_path);
      const auto w = fva::parse_weight(sig, weight);
      if (!w.is_nonnegative()) throw fva::ValidationError("weights of the free algebra are nonnegative");
      const auto [lo, hi] = fva::parse_range(range);
      for (std::int64_t d = lo; d <= hi; ++d) {
        const std::size_t n = fva::dim_component(sig, w, d);
        if (machine) {
          std::cout << ordered_json{{"deg2", d}, {"dim", n}}.dump() << "\n";
        } else {
          std::cout << d << " " << n << "\n";
        }
      }
    } else if (*product) {
      const auto sig = fva::load_signature_file(sig_path);
      const auto u = fva::parse_element(sig, expr);
      const auto v = fva::parse_element(sig, expr2);
      print_free(sig, fva::normal_form(sig, fva::product_free(sig, u, mode, v)).result);
    } else if (*embed) {
      const auto sig = fva::load_signature_file(sig_path);
      print_fock(sig, fva::phi_embed(sig, fva::parse_element(sig, expr)));
    } else if (*dong || *v_dong) {
      return print_report(fva::verify_dong(fva::load_signature_file(sig_path), k_max));
    } else if (*locfun || *v_locfun) {
      return print_report(fva::verify_locfun(fva::load_signature_file(sig_path), length));
    } else if (*v_pres) {
      return print_report(fva::verify_presentation(fva::load_lattice_file(lattice_path)));
    } else if (*v_bozfer) {
      return print_report(fva::verify_bozfer(k_max, d_max));
    } else if (*v_vir) {
      return print_report(fva::verify_virasoro(fva::load_lattice_file(lattice_path)));
    }
  } catch (const fva::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fva::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
