#include "codimlab/exponent.hpp"
#include "codimlab/io.hpp"
#include "codimlab/symrep.hpp"
#include "codimlab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace codimlab;
using Json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// ceiling.
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

CodimOptions make_codim_options(std::size_t threads) {
  CodimOptions opts;
  opts.threads = threads;
  if (const char* env = std::getenv("CODIMLAB_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) {
      opts.max_coordinates = static_cast<std::size_t>(v);
      opts.max_monomials = static_cast<std::size_t>(v);
    }
  }
  return opts;
}

int cmd_check(const std::string& path) {
  auto file = load_algebra_file(path);
  std::cout << "algebra " << file.name << ": dim " << file.algebra.dim()
            << ", valid structure constants\n";
  if (file.grading) std::cout << "grading: homogeneous\n";
  auto action = resolve_action(file);
  if (action.comultiplication) {
    auto issues = verify_module_algebra(file.algebra, action);
    if (!issues.empty()) {
      for (const auto& i : issues) std::cerr << "action: " << i << "\n";
      return kExitVerification;
    }
    std::cout << "action: module-algebra axiom holds (" << action.h_dim << " operators)\n";
  } else if (action.origin != ActionOrigin::Trivial) {
    std::cout << "action: " << action.h_dim << " operators (no comultiplication data)\n";
  }
  return 0;
}

int cmd_codim(const std::string& path, const std::string& mode, std::size_t max_n,
              const std::string& format, std::size_t threads) {
  auto file = load_algebra_file(path);
  auto opts = make_codim_options(threads);
  std::vector<CodimReport> reports;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CodimReport report;
    if (mode == "ord") {
      report = codim_ordinary(file.algebra, n, opts);
    } else if (mode == "gr") {
      if (!file.grading) throw std::runtime_error("fixture has no grading block");
      report = codim_graded(file.algebra, *file.grading, n, opts);
    } else if (mode == "hopf") {
      report = codim_hopf(file.algebra, resolve_action(file), n, opts);
    } else if (mode == "g") {
      if (!file.group_action) throw std::runtime_error("fixture has no group action block");
      report = codim_hopf(file.algebra, resolve_action(file), n, opts);
      report.mode = CodimMode::GAction;
    } else {
      throw std::runtime_error("unknown mode: " + mode);
    }
    reports.push_back(report);
  }
  if (format == "csv") {
    std::cout << "mode,n,value,monomials,millis\n";
    for (const auto& r : reports)
      std::cout << codim_mode_name(r.mode) << ',' << r.n << ',' << r.value << ','
                << r.monomials << ',' << r.millis << '\n';
  } else if (format == "json") {
    Json out = Json::array();
    for (const auto& r : reports) {
      Json row;
      row["mode"] = codim_mode_name(r.mode);
      row["n"] = r.n;
      row["value"] = r.value;
      row["monomials"] = r.monomials;
      row["millis"] = r.millis;
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    throw std::runtime_error("unknown format: " + format);
  }
  return 0;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& row : s.basis()) {
    Json jrow = Json::array();
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) jrow.push_back(rational_text(row.at(j)));
    rows.push_back(std::move(jrow));
  }
  return rows;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  std::vector<RowVec> rows;
  for (const auto& jrow : j) {
    RowVec row(ambient);
    for (std::size_t c = 0; c < jrow.size(); ++c) {
      Rational v = parse_rational(jrow[c].get<std::string>());
      if (v != 0) row.set(c, v);
    }
    rows.push_back(std::move(row));
  }
  return Subspace::span(ambient, rows);
}

int cmd_exponent(const std::string& path, const std::string& certificate_path) {
  auto file = load_algebra_file(path);
  auto action = resolve_action(file);
  Json out;
  out["algebra"] = file.name;
  if (!certificate_path.empty()) {
    std::ifstream in(certificate_path);
    if (!in) throw std::runtime_error("cannot open certificate: " + certificate_path);
    Json cj = Json::parse(in);
    ExponentCertificate cert;
    for (const auto& pair : cj.at("pairs"))
      cert.pairs.emplace_back(subspace_from_json(pair.at("I"), file.algebra.dim()),
                              subspace_from_json(pair.at("J"), file.algebra.dim()));
    for (const auto& t : cj.at("complements"))
      cert.complements.push_back(subspace_from_json(t, file.algebra.dim()));
    for (const auto& q : cj.at("powers")) cert.powers.push_back(q.get<std::size_t>());
    auto result = check_certificate(file.algebra, action, cert);
    if (std::holds_alternative<std::size_t>(result)) {
      out["method"] = "certificate";
      out["d"] = std::get<std::size_t>(result);
      out["accepted"] = true;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    out["accepted"] = false;
    out["rejections"] = std::get<std::vector<std::string>>(result);
    std::cout << out.dump(2) << "\n";
    return kExitVerification;
  }
  auto report = pi_exponent(file.algebra, action);
  out["d"] = report.d;
  out["method"] = report.method == ExponentMethod::Semisimple ? "semisimple" : "search";
  out["exactness"] = report.exactness == Exactness::Exact ? "exact" : "lower_bound";
  if (!report.diagnostics.empty()) out["diagnostics"] = report.diagnostics;
  if (report.certificate) {
    Json cj;
    Json pairs = Json::array();
    for (const auto& [outer, inner] : report.certificate->pairs) {
      Json pj;
      pj["I"] = subspace_to_json(outer);
      pj["J"] = subspace_to_json(inner);
      pairs.push_back(std::move(pj));
    }
    cj["pairs"] = std::move(pairs);
    Json comps = Json::array();
    for (const auto& t : report.certificate->complements) comps.push_back(subspace_to_json(t));
    cj["complements"] = std::move(comps);
    cj["powers"] = report.certificate->powers;
    if (!report.certificate->chain_indices.empty())
      cj["chain_indices"] = report.certificate->chain_indices;
    out["certificate"] = std::move(cj);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_cocharacter(const std::string& path, std::size_t n, std::size_t threads) {
  auto file = load_algebra_file(path);
  auto action = resolve_action(file);
  auto report = cocharacter(file.algebra, action, n, make_codim_options(threads));
  std::cout << "partition,multiplicity\n";
  for (const auto& [lambda, m] : report.multiplicities)
    std::cout << lambda.dashed() << ',' << m << '\n';
  return 0;
}

int cmd_identity(const std::string& algebra_path, const std::string& poly_path) {
  auto file = load_algebra_file(algebra_path);
  auto action = resolve_action(file);
  auto poly = resolve_polynomial(load_polynomial_file(poly_path), action);
  auto check = is_identity(file.algebra, action, poly);
  Json out;
  out["algebra"] = file.name;
  out["is_identity"] = check.holds;
  if (!check.holds) {
    Json witness = Json::array();
    for (std::size_t idx : check.witness) witness.push_back(file.algebra.basis_names()[idx]);
    out["witness"] = std::move(witness);
    Json value = Json::array();
    for (std::size_t c = 0; c < file.algebra.dim(); ++c)
      value.push_back(rational_text(check.witness_value.at(c)));
    out["value"] = std::move(value);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& fixtures, const std::string& filter, std::size_t threads) {
  VerifyOptions opts;
  opts.threads = threads;
  opts.filter = filter;
  opts.codim = make_codim_options(threads);
  auto results = run_builtin_suite(fixtures, opts);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << "  ("
              << static_cast<long long>(r.millis) << " ms)";
    if (!r.pass) std::cout << "  " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  if (results.empty()) {
    std::cerr << "no criteria matched the filter\n";
    return kExitInput;
  }
  return all_pass ? 0 : kExitVerification;
}

std::string default_fixtures_dir(const char* argv0) {
  if (const char* env = std::getenv("CODIMLAB_FIXTURES")) return env;
  namespace fs = std::filesystem;
  if (fs::exists("fixtures") && fs::is_directory("fixtures")) return "fixtures";
  // Next to the binary: <prefix>/bin/codimlab -> <prefix>/fixtures.
  std::error_code ec;
  fs::path self = fs::canonical(argv0, ec);
  if (!ec) {
    for (fs::path base : {self.parent_path(), self.parent_path().parent_path()}) {
      if (fs::exists(base / "fixtures")) return (base / "fixtures").string();
    }
  }
  return "fixtures";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codimension laboratory for Lie algebras with gradings and Hopf actions"};
  app.require_subcommand(1);
  std::size_t threads = 1;
  app.add_option("--threads", threads, "worker threads for the codimension engines");

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("algebra", check_path)->required();

  std::string codim_path, codim_mode = "ord", codim_format = "csv";
  std::size_t codim_n = 4;
  auto* codim = app.add_subcommand("codim", "codimension sequence");
  codim->add_option("algebra", codim_path)->required();
  codim->add_option("--mode", codim_mode, "ord | gr | g | hopf");
  codim->add_option("--n", codim_n, "compute c_1 .. c_n");
  codim->add_option("--format", codim_format, "csv | json");

  std::string exp_path, exp_cert;
  auto* expcmd = app.add_subcommand("exponent", "PI-exponent report");
  expcmd->add_option("algebra", exp_path)->required();
  expcmd->add_option("--certificate", exp_cert, "verify this certificate file instead");

  std::string cochar_path;
  std::size_t cochar_n = 3;
  auto* cochar = app.add_subcommand("cocharacter", "cocharacter multiplicities (CSV)");
  cochar->add_option("algebra", cochar_path)->required();
  cochar->add_option("--n", cochar_n)->required();

  std::string id_algebra, id_poly;
  auto* identity = app.add_subcommand("identity", "identity-ideal membership");
  identity->add_option("algebra", id_algebra)->required();
  identity->add_option("polynomial", id_poly)->required();

  std::string verify_suite = "builtin", verify_filter, verify_fixtures;
  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_option("--suite", verify_suite, "only 'builtin' is available");
  verify->add_option("--filter", verify_filter, "run criteria whose name contains this");
  verify->add_option("--fixtures", verify_fixtures, "fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(check_path);
    if (*codim) return cmd_codim(codim_path, codim_mode, codim_n, codim_format, threads);
    if (*expcmd) return cmd_exponent(exp_path, exp_cert);
    if (*cochar) return cmd_cocharacter(cochar_path, cochar_n, threads);
    if (*identity) return cmd_identity(id_algebra, id_poly);
    if (*verify) {
      if (verify_suite != "builtin") {
        std::cerr << "unknown suite: " << verify_suite << "\n";
        return kExitInput;
      }
      std::string dir =
          verify_fixtures.empty() ? default_fixtures_dir(argv[0]) : verify_fixtures;
      return cmd_verify(dir, verify_filter, threads);
    }
  } catch (const ResourceCeiling& e) {
    std::cerr << "resource ceiling: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
