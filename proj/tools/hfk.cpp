// Command-line front end: validate | invariants | tensor | dual | family | check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfk/hfk.hpp"

namespace {

constexpr int exit_invalid = 2;

hfk::KnotComplexFamily load(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw hfk::error(hfk::errc::invalid_argument, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return hfk::parse_family(buf.str());
}

std::vector<std::int64_t> parse_exponents(const std::string& s)
{
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw hfk::error(hfk::errc::invalid_argument, "bad exponent '" + item + "'");
    }
  }
  return out;
}

hfk::KnotComplexFamily construct(const std::string& name, const std::vector<std::string>& params, std::uint64_t seed)
{
  auto num = [&](std::size_t i) -> std::int64_t {
    if (i >= params.size()) throw hfk::error(hfk::errc::invalid_argument, name + " needs more parameters");
    return std::stoll(params[i]);
  };
  if (name == "unknot") return hfk::unknot();
  if (name == "trefoil") return hfk::trefoil();
  if (name == "figure-eight") return hfk::figure_eight();
  if (name == "torus") return hfk::torus_knot(num(0), num(1));
  if (name == "staircase") {
    if (params.empty()) throw hfk::error(hfk::errc::invalid_argument, "staircase needs exponents");
    return hfk::staircase(hfk::AlexanderData{parse_exponents(params[0])});
  }
  if (name == "cable") {
    if (params.size() < 3) throw hfk::error(hfk::errc::invalid_argument, "cable needs EXPONENTS P Q");
    return hfk::cable_staircase(hfk::AlexanderData{parse_exponents(params[0])}, num(1), num(2));
  }
  if (name == "unknot-lens") return hfk::unknot_in_lens_space(num(0), num(1), params.size() > 2 ? num(2) : 0);
  if (name == "floer-simple-lens") return hfk::floer_simple_lens(num(0), num(1), num(2));
  if (name == "random") return hfk::random_family(seed);
  throw hfk::error(hfk::errc::invalid_argument, "unknown family '" + name + "'");
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Knot Floer concordance invariants"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  std::vector<std::string> files;
  std::int64_t window = 1;
  std::uint64_t seed = 1;
  std::size_t fuzz = 0;

  auto* validate = app.add_subcommand("validate", "check a family file and list violations");
  validate->add_option("file", files)->required()->expected(1);

  auto* invariants = app.add_subcommand("invariants", "V/H tables, nu+, r, d, tau and the genus bound");
  invariants->add_option("file", files)->required()->expected(1);
  invariants->add_option("--window", window, "pad of the s-window beyond [min A, max A]")->check(CLI::NonNegativeNumber);

  auto* tensor = app.add_subcommand("tensor", "connected sum of two families");
  tensor->add_option("files", files)->required()->expected(2);

  auto* dual = app.add_subcommand("dual", "orientation reversal of a family");
  dual->add_option("file", files)->required()->expected(1);

  std::string family_name;
  std::vector<std::string> family_params;
  auto* family = app.add_subcommand("family", "print a constructed family");
  family->add_option("name", family_name, "unknot | trefoil | figure-eight | torus P Q | staircase A0,A1,.. | "
                                          "cable A0,.. P Q | unknot-lens P Q [BOXES] | floer-simple-lens P Q K | random")
      ->required();
  family->add_option("params", family_params);
  family->add_option("--seed", seed);

  std::string theorem;
  std::string alexander;
  std::int64_t p = 0, q = 0;
  auto* check = app.add_subcommand("check", "verify a theorem on concrete or fuzzed inputs");
  check->add_option("theorem", theorem)->required()->check(CLI::IsMember(hfk::theorem_ids()));
  check->add_option("files", files);
  check->add_option("--fuzz", fuzz, "number of seeded random pairs");
  check->add_option("--seed", seed);
  check->add_option("--window", window)->check(CLI::NonNegativeNumber);
  check->add_option("--p", p);
  check->add_option("--q", q);
  check->add_option("--alexander", alexander, "base exponents for cabling, e.g. 1,0,-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_invalid;
  }

  try {
    const hfk::Format fmt = hfk::parse_format(format);
    if (*validate) {
      try {
        load(files[0]);
      } catch (const hfk::validation_failure& e) {
        std::cout << e.report().to_string();
        return exit_invalid;
      }
      std::cout << "ok\n";
      return 0;
    }
    if (*invariants) {
      std::cout << hfk::render_report(hfk::genus_report(load(files[0]), window), fmt);
      return 0;
    }
    if (*tensor) {
      std::cout << hfk::serialize_family(hfk::tensor_family(load(files[0]), load(files[1])));
      return 0;
    }
    if (*dual) {
      std::cout << hfk::serialize_family(hfk::dual_family(load(files[0])));
      return 0;
    }
    if (*family) {
      std::cout << hfk::serialize_family(construct(family_name, family_params, seed));
      return 0;
    }

    hfk::TheoremCheckResult result;
    auto need = [&](std::size_t n) {
      if (files.size() < n)
        throw hfk::error(hfk::errc::invalid_argument, theorem + " needs " + std::to_string(n) + " input file(s)");
    };
    if (fuzz > 0) {
      result = hfk::check_fuzz(theorem, fuzz, seed);
    } else if (theorem == "v-subadd") {
      need(2);
      result = hfk::check_v_subadditivity(load(files[0]), load(files[1]), window);
    } else if (theorem == "nu-subadd") {
      need(2);
      result = hfk::check_nu_subadditivity(load(files[0]), load(files[1]));
    } else if (theorem == "d-additivity") {
      need(2);
      result = hfk::check_d_additivity(load(files[0]), load(files[1]));
    } else if (theorem == "additivity") {
      need(1);
      std::vector<hfk::KnotComplexFamily> partners;
      for (std::size_t i = 1; i < files.size(); ++i) partners.push_back(load(files[i]));
      if (partners.empty()) partners = hfk::standard_corpus();
      result = hfk::check_additivity(load(files[0]), partners);
    } else if (theorem == "tlt-symmetry") {
      need(1);
      result = hfk::check_tlt_symmetry(load(files[0]));
    } else if (theorem == "middle-dual") {
      need(1);
      result = hfk::check_middle_dual(load(files[0]));
    } else if (theorem == "genus-additivity") {
      need(2);
      result = hfk::check_genus_additivity(load(files[0]), load(files[1]));
    } else if (theorem == "cabling") {
      if (p <= 0 || q <= 0) throw hfk::error(hfk::errc::invalid_argument, "cabling needs --p and --q");
      hfk::AlexanderData base;
      std::string name;
      if (!alexander.empty()) {
        base = hfk::AlexanderData{parse_exponents(alexander)};
        name = hfk::exponents_name(base);
      } else {
        need(1);
        hfk::KnotComplexFamily f = load(files[0]);
        auto recovered = hfk::recover_staircase(f);
        if (!recovered)
          throw hfk::error(hfk::errc::invalid_argument, f.name + " is not a staircase complex; pass --alexander");
        base = *recovered;
        name = f.name;
      }
      result = hfk::check_cabling(base, name, p, q);
    }
    std::cout << hfk::render_result(result, fmt);
    return result.exit_code();
  } catch (const hfk::validation_failure& e) {
    std::cerr << "invalid input:\n" << e.report().to_string();
    return exit_invalid;
  } catch (const hfk::error& e) {
    std::cerr << e.what() << "\n";
    return exit_invalid;
  }
}
