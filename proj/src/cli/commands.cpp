#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "splitoct/cli.hpp"
#include "splitoct/derivations.hpp"
#include "splitoct/identities.hpp"
#include "splitoct/symbolic.hpp"

namespace splitoct::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kZeroDivisorAttempts = 20000;

std::string entry_string(const BasisProduct& p) {
  return std::string(p.sign > 0 ? "+" : "-") + basis_name(p.index);
}

StructureTable table_for(const RunConfig& config) {
  const StructureTable& base = StructureTable::of(config.algebra);
  if (!config.corrupt_entry) return base;
  return base.with_flipped_sign(config.corrupt_entry->first, config.corrupt_entry->second);
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json base_config(const RunConfig& config) {
  json j = {{"algebra", to_string(config.algebra)}, {"seed", config.seed}};
  if (config.corrupt_entry) j["corrupt_entry"] = {config.corrupt_entry->first, config.corrupt_entry->second};
  return j;
}

Report new_report(const std::string& command, const RunConfig& config) {
  Report r;
  r.command = command;
  r.algebra = std::string(to_string(config.algebra));
  r.config = base_config(config);
  return r;
}

std::string status_word(bool passed) { return passed ? "PASS" : "FAIL"; }

void append_checks(std::ostringstream& text, const Report& r) {
  for (const auto& c : r.checks) {
    text << "[" << status_word(c.passed) << "] " << c.name;
    if (!c.detail.empty()) text << ": " << c.detail;
    text << '\n';
  }
}

json residual_json(const ResidualReport& r) {
  json j = {{"scalar", r.scalar},   {"q_vec", r.q_vec},
            {"e7q_vec", r.e7q_vec}, {"e7_part", r.e7_part},
            {"points_evaluated", r.points_evaluated}, {"seed", r.seed}};
  if (r.richardson_gap > 0) j["richardson_gap"] = r.richardson_gap;
  return j;
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

}  // namespace

void RunConfig::validate() const {
  if (points < 1) throw ValidationError("--points must be at least 1");
  if (trials < 1) throw ValidationError("--trials must be at least 1");
  if (!(tolerance > 0)) throw ValidationError("--tolerance must be positive");
  if (!(discrimination_floor > 0)) throw ValidationError("--discrimination-floor must be positive");
  if (!(domain_lo < domain_hi)) throw ValidationError("domain bounds must satisfy lo < hi");
  if (corrupt_entry) {
    const auto [i, j] = *corrupt_entry;
    if (i < 1 || i > 7 || j < 1 || j > 7) throw ValidationError("corrupted entry indices must be in 1..7");
  }
}

nlohmann::json decomposition_to_json(const MaxwellDecomposition& d) {
  json out = json::object();
  const auto parts = components(d);
  for (std::size_t i = 0; i < 8; ++i) {
    json terms = json::array();
    for (const auto& [atom, k] : parts[i].terms()) {
      terms.push_back({{"sign", sgn(k) > 0 ? "+" : "-"},
                       {"magnitude", Rational(abs(k)).get_str()},
                       {"var", to_string(atom.var)},
                       {"field", to_string(atom.field)}});
    }
    out[component_names()[i]] = std::move(terms);
  }
  return out;
}

// --- table ------------------------------------------------------------------

CommandOutput cmd_table(const RunConfig& config) {
  const StructureTable table = table_for(config);
  Report r = new_report("table", config);

  json rows = json::array();
  std::ostringstream text;
  text << (config.algebra == AlgebraKind::Octonion ? "Octonion" : "Split-octonion") << " multiplication table (row * column)\n";
  if (config.corrupt_entry) text << "(negative control: one entry has a flipped sign)\n";
  text << "     |";
  for (int j = 1; j <= 7; ++j) text << std::setw(5) << basis_name(j);
  text << "\n-----+" << std::string(35, '-') << '\n';
  for (int i = 1; i <= 7; ++i) {
    json row = json::array();
    text << std::setw(4) << basis_name(i) << " |";
    for (int j = 1; j <= 7; ++j) {
      const std::string cell = entry_string(table(i, j));
      row.push_back(cell);
      text << std::setw(5) << cell;
    }
    text << '\n';
    rows.push_back(std::move(row));
  }
  r.extra["table"] = std::move(rows);

  const TableCheck check = check_table_structure(table);
  auto detail_for = [&](const std::string& prefix) {
    std::string d;
    for (const auto& f : check.failures) {
      if (f.find(prefix) == std::string::npos) continue;
      if (!d.empty()) d += "; ";
      d += f;
    }
    return d;
  };
  r.checks.push_back({"antisymmetry", check.antisymmetry, detail_for("not the negative")});
  r.checks.push_back({"closure", check.closure, detail_for("third imaginary unit")});
  r.checks.push_back({"diagonal_signs", check.diagonal_signs, detail_for("expected")});

  std::string diag;
  for (int i = 1; i <= 7; ++i) diag += basis_name(i) + "^2=" + entry_string(table(i, i)).substr(0, 1) + "1 ";
  diag.pop_back();
  r.extra["diagonal"] = diag;
  text << "diagonal: " << diag << "\n";
  append_checks(text, r);
  return {std::move(r), text.str()};
}

// --- identities -------------------------------------------------------------

CommandOutput cmd_identities(const RunConfig& config) {
  const StructureTable table = table_for(config);
  Report r = new_report("identities", config);
  r.config["trials"] = config.trials;
  r.config["expect_associativity"] = config.expect_associativity;

  const IdentityReport report = check_identities(table, config.trials, config.seed);
  for (const auto& res : report.results) {
    std::string detail = std::to_string(res.trials - res.failures) + "/" + std::to_string(res.trials) + " exact";
    if (!res.passed) detail += "; first failure: " + res.witness;
    r.checks.push_back({res.name, res.passed, detail});
  }

  const auto e = [](int k) { return RationalOctonion::basis(k); };
  const RationalOctonion witness = associator(table, e(1), e(2), e(3));
  const std::string witness_text = "(e1 e2) e3 - e1 (e2 e3) = " + to_string(witness);
  r.checks.push_back({"nonassociativity_witness", !witness.is_zero_element(), witness_text});
  r.extra["associator_e1_e2_e3"] = to_string(witness);

  if (config.expect_associativity) {
    const IdentityResult assoc = check_associativity(table, config.trials, config.seed);
    std::string detail = std::to_string(assoc.failures) + "/" + std::to_string(assoc.trials) + " random triples are non-associative";
    if (!assoc.passed) detail += "; witness " + witness_text;
    r.checks.push_back({"associativity", assoc.passed, detail});
  }

  if (!config.corrupt_entry) {
    const auto zd = find_zero_divisor(config.algebra, kZeroDivisorAttempts, config.seed);
    if (config.algebra == AlgebraKind::SplitOctonion) {
      r.checks.push_back({"zero_divisors", zd.has_value(),
                          zd ? "x = " + to_string(zd->first) + ", y = " + to_string(zd->second) + ", N(x) = 0, xy = 0"
                             : "no zero divisor found among a + b*e7"});
    } else {
      r.checks.push_back({"zero_divisors", !zd.has_value(),
                          zd ? "unexpected zero divisor x = " + to_string(zd->first)
                             : "none among a + b*e7 (division algebra)"});
    }
  }

  std::ostringstream text;
  text << "Identity suite for the " << to_string(config.algebra) << " algebra, " << config.trials
       << " random triples, seed " << config.seed << " (exact rational arithmetic)\n";
  append_checks(text, r);
  return {std::move(r), text.str()};
}

// --- expand -----------------------------------------------------------------

CommandOutput cmd_expand(const RunConfig& config) {
  Report r = new_report("expand", config);
  r.config["with_S"] = config.with_S;
  r.config["with_F0"] = config.with_F0;

  const StructureTable table = table_for(config);
  const MaxwellDecomposition actual = apply_dirac(table, maxwell_field(config.with_S, config.with_F0));
  const MaxwellDecomposition expected = expected_decomposition(config.algebra, config.with_S, config.with_F0);
  const ExpansionVerdict verdict = compare(actual, expected);

  const auto a = components(actual);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::string& name = component_names()[i];
    auto it = std::find_if(verdict.mismatches.begin(), verdict.mismatches.end(),
                           [&](const ComponentMismatch& m) { return m.component == name; });
    if (it == verdict.mismatches.end())
      r.checks.push_back({name, true, to_string(a[i])});
    else
      r.checks.push_back({name, false, "product gives " + it->actual + ", expected " + it->expected});
  }
  r.extra["product"] = decomposition_to_json(actual);
  r.extra["expected"] = decomposition_to_json(expected);

  std::vector<std::string> notes;
  if (config.algebra == AlgebraKind::Octonion)
    notes.push_back("upper sign: q_vec = curl E - d_t B, so dF = 0 does NOT give Faraday's law");
  if (config.with_S) notes.push_back("sources: rho = d_t S, j = grad S");
  if (config.with_F0) notes.push_back("F0 terms (grad F0 in q_vec, d_t F0 in e7_part) are a derived extension, not a displayed expansion");
  r.extra["notes"] = notes;

  std::ostringstream text;
  text << "dF with d = e1 d_x + e2 d_y + e4 d_z + e7 d_t, " << to_string(config.algebra) << " algebra";
  if (config.with_S) text << ", with S";
  if (config.with_F0) text << ", with F0";
  text << "\n\nalgebra product:\n" << render(actual) << "\nvector calculus:\n" << render(expected) << '\n';
  if (config.algebra == AlgebraKind::SplitOctonion && verdict.equal) {
    if (config.with_S)
      text << "dF = 0  <=>  div E = d_t S,  curl E + d_t B = 0,  div B = 0,  -curl B + d_t E = grad S\n";
    else if (!config.with_F0)
      text << "dF = 0  <=>  div E = 0,  curl E = -d_t B,  div B = 0,  curl B = d_t E\n";
  }
  for (const auto& n : notes) text << "note: " << n << '\n';
  text << "verdict: " << (verdict.equal ? "exact match" : "MISMATCH") << '\n';
  for (const auto& c : r.checks)
    if (!c.passed) text << "[FAIL] " << c.name << ": " << c.detail << '\n';
  return {std::move(r), text.str()};
}

// --- planewave --------------------------------------------------------------

CommandOutput cmd_planewave(const RunConfig& config) {
  Report r = new_report("planewave", config);
  r.algebra = "both";
  r.config.erase("algebra");
  r.config["points"] = config.points;
  r.config["tolerance"] = config.tolerance;
  r.config["discrimination_floor"] = config.discrimination_floor;
  r.config["domain"] = {config.domain_lo, config.domain_hi};
  r.config["zero_field"] = config.zero_field;
  r.config["finite_difference"] = config.finite_difference;
  if (!config.zero_field) {
    r.config["k"] = vec_json(config.k);
    r.config["eps"] = vec_json(config.eps);
  }

  const AnalyticField field = config.zero_field ? AnalyticField::zero() : plane_wave_em(config.k, config.eps);
  const auto pts = sample_points(config.points, config.seed, config.domain_lo, config.domain_hi);
  EvaluationOptions options;
  if (config.finite_difference) options.mode = DerivativeMode::FiniteDifference;

  ResidualReport split = evaluate_dF(AlgebraKind::SplitOctonion, field, pts, options);
  ResidualReport octo = evaluate_dF(AlgebraKind::Octonion, field, pts, options);
  split.seed = octo.seed = config.seed;
  r.residuals = json{{"split", residual_json(split)}, {"octonion", residual_json(octo)}};

  r.checks.push_back({"split_annihilation", split.max_group() <= config.tolerance,
                      "max group residual " + sci(split.max_group()) + " <= " + sci(config.tolerance)});

  if (config.zero_field) {
    r.checks.push_back({"zero_field_residuals", split.max_group() == 0 && octo.max_group() == 0,
                        "split " + sci(split.max_group()) + ", octonion " + sci(octo.max_group())});
  } else {
    r.checks.push_back({"octonion_discrimination", octo.q_vec >= config.discrimination_floor,
                        "octonion q_vec residual " + sci(octo.q_vec) + " >= " + sci(config.discrimination_floor)});
    // Pointwise: the octonion q_vec must be exactly -2 d_t B where split is ~0.
    double worst = 0;
    const auto& table = StructureTable::of(AlgebraKind::Octonion);
    const std::array<FieldName, 3> b = {FieldName::Bx, FieldName::By, FieldName::Bz};
    for (const auto& p : pts) {
      const auto d = dirac_at(table, field, p, options);
      for (std::size_t i = 0; i < 3; ++i)
        worst = std::max(worst, std::abs(std::abs(d.q_vec[i]) - 2 * std::abs(field.derivative(b[i], Var::t, p))));
    }
    r.checks.push_back({"octonion_q_vec_is_2_dtB", worst <= config.tolerance,
                        "max | |q_vec| - 2|d_t B| | = " + sci(worst)});
  }

  std::ostringstream text;
  text << "Plane-wave residuals over " << config.points << " points in [" << config.domain_lo << ", " << config.domain_hi
       << "]^4, seed " << config.seed << (config.finite_difference ? " (finite differences)" : "") << "\n";
  auto row = [&](const char* name, const ResidualReport& rep) {
    text << "  " << std::left << std::setw(9) << name << std::right << " scalar " << sci(rep.scalar) << "  q_vec "
         << sci(rep.q_vec) << "  e7q_vec " << sci(rep.e7q_vec) << "  e7_part " << sci(rep.e7_part) << '\n';
  };
  row("split", split);
  row("octonion", octo);
  append_checks(text, r);
  return {std::move(r), text.str()};
}

// --- derivations ------------------------------------------------------------

CommandOutput cmd_derivations(const RunConfig& config) {
  Report r = new_report("derivations", config);
  const auto& table = StructureTable::of(config.algebra);
  const DerivationSystem system = build_derivation_system(table);
  const auto basis = derivation_basis(config.algebra);
  r.dimension = basis.size();
  r.extra["system"] = {{"equations", system.equations_considered},
                       {"nonzero_rows", system.matrix.rows()},
                       {"unknowns", system.matrix.cols()}};

  r.checks.push_back({"dimension_is_14", basis.size() == 14, "null-space dimension " + std::to_string(basis.size())});

  std::size_t failing = 0;
  json basis_json = json::array();
  for (const auto& d : basis) {
    if (!is_derivation(table, d)) ++failing;
    json m = json::array();
    for (int i = 0; i < 7; ++i) {
      json row = json::array();
      for (int j = 0; j < 7; ++j) row.push_back(d(i, j).get_str());
      m.push_back(std::move(row));
    }
    basis_json.push_back(std::move(m));
  }
  r.extra["basis"] = std::move(basis_json);
  r.checks.push_back({"basis_are_derivations", failing == 0,
                      std::to_string(basis.size() - failing) + "/" + std::to_string(basis.size()) + " satisfy the Leibniz rule"});

  const Verdict identity = is_automorphism(table, LinearMap7::identity());
  r.checks.push_back({"identity_is_automorphism", identity.holds, identity.reason});
  const Verdict swapped = is_automorphism(table, LinearMap7::swap(1, 2));
  r.checks.push_back({"swap_e1_e2_rejected", !swapped.holds, swapped.reason});
  const auto signed_perms = signed_permutation_automorphisms(config.algebra);
  r.extra["signed_permutation_automorphisms"] = signed_perms.size();
  r.extra["automorphisms"] = {{"identity", identity.holds}, {"swap_e1_e2", swapped.holds}};

  std::ostringstream text;
  text << "Derivations of the " << to_string(config.algebra) << " algebra\n"
       << "Leibniz system: " << system.matrix.rows() << " nonzero equations in " << system.matrix.cols()
       << " unknowns\n"
       << "dimension: " << basis.size() << '\n';
  for (std::size_t n = 0; n < basis.size(); ++n) {
    text << "  D" << n + 1 << ":";
    bool first = true;
    for (int k = 1; k <= 7; ++k) {
      const RationalOctonion img = basis[n].image(k);
      if (img.is_zero_element()) continue;
      text << (first ? " " : ", ") << basis_name(k) << " -> " << to_string(img);
      first = false;
    }
    text << '\n';
  }
  text << "signed-permutation automorphisms found: " << signed_perms.size() << '\n';
  append_checks(text, r);
  return {std::move(r), text.str()};
}

}  // namespace splitoct::cli
