#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "splitoct/cli.hpp"

namespace splitoct::cli {

namespace {

Vec3 parse_vec3(const std::string& text, const char* flag) {
  const std::string message = std::string(flag) + " expects three comma-separated numbers";
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw ValidationError(message);
    }
    if (used != item.size()) throw ValidationError(message);
  }
  if (values.size() != 3) throw ValidationError(message);
  return {values[0], values[1], values[2]};
}

std::pair<int, int> parse_entry(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--corrupt-entry expects I,J");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ValidationError("--corrupt-entry expects I,J");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octonion and split-octonion algebra checks and the Dirac-operator form of Maxwell's equations"};
  app.require_subcommand(1);

  RunConfig config;
  std::string algebra = "split";
  std::string format = "text";
  std::string k_text = "0,0,1";
  std::string eps_text = "1,0,0";
  std::string corrupt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "octonion or split")->check(CLI::IsMember({"octonion", "split"}));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed, "random seed");
  };
  auto add_corruption = [&](CLI::App* sub) {
    // Negative-control hook, intentionally undocumented in --help.
    sub->add_option("--corrupt-entry", corrupt)->group("");
  };

  using Command = std::function<CommandOutput(const RunConfig&)>;
  Command selected;

  auto* table = app.add_subcommand("table", "print the multiplication table and audit its structure");
  add_common(table);
  add_corruption(table);
  table->callback([&] { selected = cmd_table; });

  auto* identities = app.add_subcommand("identities", "exact alternativity, Moufang and norm checks");
  add_common(identities);
  add_corruption(identities);
  identities->add_option("--trials", config.trials, "random triples")->check(CLI::PositiveNumber);
  identities->add_flag("--expect-associativity", config.expect_associativity, "also demand full associativity");
  identities->callback([&] { selected = cmd_identities; });

  auto* expand = app.add_subcommand("expand", "symbolic expansion of dF against the vector-calculus form");
  add_common(expand);
  add_corruption(expand);
  expand->add_flag("--with-S", config.with_S, "add S e7 to F");
  expand->add_flag("--with-F0", config.with_F0, "add a real part F0 to F");
  expand->callback([&] { selected = cmd_expand; });

  auto* planewave = app.add_subcommand("planewave", "numeric residuals of dF on an electromagnetic plane wave");
  add_common(planewave);
  planewave->add_option("--points", config.points, "sample points")->check(CLI::PositiveNumber);
  planewave->add_option("--k", k_text, "wave vector kx,ky,kz");
  planewave->add_option("--eps", eps_text, "polarization ex,ey,ez");
  planewave->add_option("--tolerance", config.tolerance, "split residual tolerance")->check(CLI::PositiveNumber);
  planewave->add_option("--discrimination-floor", config.discrimination_floor, "minimum octonion q_vec residual")
      ->check(CLI::PositiveNumber);
  planewave->add_option("--lo", config.domain_lo, "lower domain bound");
  planewave->add_option("--hi", config.domain_hi, "upper domain bound");
  planewave->add_flag("--zero-field", config.zero_field, "use F = 0 as a control");
  planewave->add_flag("--finite-difference", config.finite_difference, "debug: 4th-order central differences");
  planewave->callback([&] { selected = cmd_planewave; });

  auto* derivations = app.add_subcommand("derivations", "dimension and basis of the derivation algebra");
  add_common(derivations);
  derivations->callback([&] { selected = cmd_derivations; });

  std::vector<const char*> argv{"splitoct"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    config.algebra = parse_algebra_kind(algebra);
    config.format = format == "json" ? Format::Json : Format::Text;
    config.k = parse_vec3(k_text, "--k");
    config.eps = parse_vec3(eps_text, "--eps");
    if (!corrupt.empty()) config.corrupt_entry = parse_entry(corrupt);
    config.validate();

    const CommandOutput result = selected(config);
    const std::string rendered =
        config.format == Format::Json ? to_json(result.report).dump(2) + "\n" : result.text;
    out << rendered << std::flush;
    return result.report.exit_code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace splitoct::cli
