#include "codimlab/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace codimlab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& text, std::size_t byte, const std::string& msg) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(msg, line, column);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte ? e.byte - 1 : 0, e.what());
  }
}

[[noreturn]] void semantic_error(const std::string& msg) { throw ParseError(msg, 0, 0); }

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) semantic_error(what + ": expected " +
                                                        std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      semantic_error(what + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational v = parse_rational(row[c].get<std::string>());
      if (v != 0) m.set(i, c, v);
    }
  }
  return m;
}

Json emit_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_text(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupSpec parse_group(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "abelian") {
    std::vector<long long> invariants;
    for (const auto& v : j.at("invariants")) invariants.push_back(v.get<long long>());
    return GroupSpec::abelian(std::move(invariants));
  }
  if (kind != "table") semantic_error("group kind must be 'table' or 'abelian'");
  std::vector<std::string> names;
  for (const auto& v : j.at("names")) names.push_back(v.get<std::string>());
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : j.at("table")) {
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(v.get<std::size_t>());
    table.push_back(std::move(r));
  }
  std::vector<bool> g0;
  if (j.contains("g0"))
    for (const auto& v : j.at("g0")) g0.push_back(v.get<bool>());
  try {
    return GroupSpec::from_table(std::move(names), std::move(table), std::move(g0));
  } catch (const std::invalid_argument& e) {
    semantic_error(e.what());
  }
}

Json emit_group(const GroupSpec& g) {
  Json out;
  if (g.kind == GroupSpec::Kind::Abelian) {
    out["kind"] = "abelian";
    out["invariants"] = g.invariants;
    return out;
  }
  out["kind"] = "table";
  out["names"] = g.names;
  out["table"] = g.table;
  bool all_in = std::all_of(g.in_g0.begin(), g.in_g0.end(), [](bool b) { return b; });
  if (!all_in) {
    Json flags = Json::array();
    for (bool b : g.in_g0) flags.push_back(b);
    out["g0"] = std::move(flags);
  }
  return out;
}

GroupElem parse_degree(const GroupSpec& group, const Json& j) {
  if (group.kind == GroupSpec::Kind::Table) {
    auto e = group.parse(j.get<std::string>());
    if (!e) semantic_error("unknown group element: " + j.get<std::string>());
    return *e;
  }
  std::vector<long long> v;
  for (const auto& x : j) v.push_back(x.get<long long>());
  if (v.size() != group.invariants.size())
    semantic_error("degree vector length differs from the abelian invariants");
  return group.normalize(v);
}

Json emit_degree(const GroupSpec& group, const GroupElem& e) {
  if (group.kind == GroupSpec::Kind::Table) return group.format(e);
  return std::get<std::vector<long long>>(e);
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  Json j = parse_json(text);
  AlgebraFile file;
  try {
    file.name = j.at("name").get<std::string>();
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> basis;
    for (const auto& v : j.at("basis")) basis.push_back(v.get<std::string>());
    if (basis.size() != dim) semantic_error("basis name count differs from dim");
    std::vector<std::vector<RowVec>> c(dim, std::vector<RowVec>(dim, RowVec(dim)));
    for (const auto& triple : j.at("brackets")) {
      if (!triple.is_array() || triple.size() != 4)
        semantic_error("bracket entries must be [i, j, k, coeff]");
      std::size_t bi = triple[0].get<std::size_t>();
      std::size_t bj = triple[1].get<std::size_t>();
      std::size_t bk = triple[2].get<std::size_t>();
      if (bi >= dim || bj >= dim || bk >= dim)
        semantic_error("bracket index out of range");
      Rational coeff = parse_rational(triple[3].get<std::string>());
      c[bi][bj].set(bk, c[bi][bj].at(bk) + coeff);
      c[bj][bi].set(bk, c[bj][bi].at(bk) - coeff);
    }
    file.algebra = LieAlgebra(std::move(basis), std::move(c));
    auto violations = file.algebra.validate();
    if (!violations.empty())
      semantic_error("algebra is not a Lie algebra: " + violations.front().describe());
    if (j.contains("grading")) {
      const Json& gj = j.at("grading");
      Grading grading;
      grading.group = parse_group(gj.at("group"));
      for (const auto& deg : gj.at("degrees"))
        grading.degrees.push_back(parse_degree(grading.group, deg));
      if (grading.degrees.size() != dim)
        semantic_error("grading must assign one degree per basis vector");
      check_homogeneous(file.algebra, grading);
      file.grading = std::move(grading);
    }
    if (j.contains("action")) {
      const Json& aj = j.at("action");
      std::string kind = aj.at("kind").get<std::string>();
      if (kind == "group_action") {
        AlgebraFile::GroupActionBlock block{parse_group(aj.at("group")), {}};
        for (const auto& [name, matrix] : aj.at("generators").items())
          block.generators.emplace_back(name, parse_matrix(matrix, dim, dim,
                                                           "generator " + name));
        file.group_action = std::move(block);
      } else if (kind == "hopf") {
        AlgebraFile::HopfBlock block;
        for (const auto& v : aj.at("names")) block.names.push_back(v.get<std::string>());
        const std::size_t m = block.names.size();
        for (const auto& op : aj.at("operators"))
          block.operators.push_back(parse_matrix(op, dim, dim, "operator"));
        if (block.operators.size() != m)
          semantic_error("operator count differs from the H-basis size");
        if (aj.contains("comultiplication")) {
          std::vector<Matrix> mu;
          for (const auto& t : aj.at("comultiplication"))
            mu.push_back(parse_matrix(t, m, m, "comultiplication"));
          if (mu.size() != m) semantic_error("comultiplication tensor has wrong size");
          block.comultiplication = std::move(mu);
        }
        if (aj.contains("counit")) {
          std::vector<Rational> eps;
          for (const auto& v : aj.at("counit"))
            eps.push_back(parse_rational(v.get<std::string>()));
          if (eps.size() != m) semantic_error("counit has wrong size");
          block.counit = std::move(eps);
        }
        file.hopf = std::move(block);
      } else {
        semantic_error("action kind must be 'group_action' or 'hopf'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    semantic_error(e.what());
  }
  // Action blocks must satisfy their axioms up front.
  ActionSpec spec = resolve_action(file);
  if (spec.comultiplication) {
    auto issues = verify_module_algebra(file.algebra, spec);
    if (!issues.empty()) semantic_error(issues.front());
  }
  return file;
}

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_algebra_file(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line, e.column);
  }
}

std::string emit_algebra_file(const AlgebraFile& file) {
  Json j;
  j["name"] = file.name;
  const std::size_t dim = file.algebra.dim();
  j["dim"] = dim;
  j["basis"] = file.algebra.basis_names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jj = i + 1; jj < dim; ++jj)
      file.algebra.bracket_basis(i, jj).for_each([&](std::size_t k, const Rational& v) {
        brackets.push_back(Json::array({i, jj, k, rational_text(v)}));
      });
  j["brackets"] = std::move(brackets);
  if (file.grading) {
    Json gj;
    gj["group"] = emit_group(file.grading->group);
    Json degrees = Json::array();
    for (const auto& d : file.grading->degrees)
      degrees.push_back(emit_degree(file.grading->group, d));
    gj["degrees"] = std::move(degrees);
    j["grading"] = std::move(gj);
  }
  if (file.group_action) {
    Json aj;
    aj["kind"] = "group_action";
    aj["group"] = emit_group(file.group_action->group);
    Json gens;
    for (const auto& [name, matrix] : file.group_action->generators)
      gens[name] = emit_matrix(matrix);
    aj["generators"] = std::move(gens);
    j["action"] = std::move(aj);
  } else if (file.hopf) {
    Json aj;
    aj["kind"] = "hopf";
    aj["names"] = file.hopf->names;
    Json ops = Json::array();
    for (const auto& op : file.hopf->operators) ops.push_back(emit_matrix(op));
    aj["operators"] = std::move(ops);
    if (file.hopf->comultiplication) {
      Json mus = Json::array();
      for (const auto& mu : *file.hopf->comultiplication) mus.push_back(emit_matrix(mu));
      aj["comultiplication"] = std::move(mus);
    }
    if (file.hopf->counit) {
      Json eps = Json::array();
      for (const auto& v : *file.hopf->counit) eps.push_back(rational_text(v));
      aj["counit"] = std::move(eps);
    }
    j["action"] = std::move(aj);
  }
  return j.dump(2) + "\n";
}

ActionSpec resolve_action(const AlgebraFile& file) {
  if (file.group_action) {
    std::map<std::string, Matrix> gens(file.group_action->generators.begin(),
                                       file.group_action->generators.end());
    return from_group_action(file.algebra, file.group_action->group, gens);
  }
  if (file.hopf) {
    ActionSpec spec;
    spec.h_dim = file.hopf->names.size();
    spec.operators = file.hopf->operators;
    spec.operator_names = file.hopf->names;
    spec.comultiplication = file.hopf->comultiplication;
    spec.counit = file.hopf->counit;
    spec.origin = ActionOrigin::Custom;
    spec.compute_effective_basis();
    if (spec.effective.size() != spec.h_dim)
      semantic_error("hopf operators must be linearly independent");
    return spec;
  }
  if (file.grading) return from_grading(file.algebra, *file.grading);
  return trivial_action(file.algebra.dim());
}

ActionSpec grading_action(const AlgebraFile& file) {
  if (!file.grading) semantic_error("this command needs a grading block");
  return from_grading(file.algebra, *file.grading);
}

PolynomialFile parse_polynomial_file(const std::string& text) {
  Json j = parse_json(text);
  PolynomialFile file;
  try {
    file.n = j.at("n").get<std::size_t>();
    for (const auto& tj : j.at("terms")) {
      PolynomialFile::Term term;
      term.coeff = parse_rational(tj.at("coeff").get<std::string>());
      for (const auto& v : tj.at("perm")) term.perm.push_back(v.get<std::size_t>());
      for (const auto& v : tj.at("labels"))
        term.labels.push_back(v.is_string() ? v.get<std::string>()
                                            : std::to_string(v.get<std::size_t>()));
      if (term.perm.size() != file.n || term.labels.size() != file.n)
        semantic_error("term perm/label lengths must equal n");
      std::vector<bool> seen(file.n, false);
      for (std::size_t v : term.perm) {
        if (v < 1 || v > file.n || seen[v - 1])
          semantic_error("term perm must be a permutation of 1..n");
        seen[v - 1] = true;
      }
      file.terms.push_back(std::move(term));
    }
  } catch (const nlohmann::json::exception& e) {
    semantic_error(e.what());
  }
  return file;
}

PolynomialFile load_polynomial_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_polynomial_file(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line, e.column);
  }
}

MultilinearHPolynomial resolve_polynomial(const PolynomialFile& file, const ActionSpec& action) {
  MultilinearHPolynomial poly;
  poly.degree = file.n;
  for (const auto& term : file.terms) {
    HTerm out;
    out.coeff = term.coeff;
    for (std::size_t v : term.perm) out.perm.push_back(v - 1);
    for (const auto& label : term.labels) {
      auto idx = action.operator_index(label);
      if (!idx) {
        // Fall back to a decimal index.
        try {
          std::size_t parsed = std::stoul(label);
          if (parsed >= action.h_dim) semantic_error("label index out of range: " + label);
          idx = parsed;
        } catch (const std::invalid_argument&) {
          semantic_error("unresolvable label: " + label);
        }
      }
      out.labels.push_back(*idx);
    }
    poly.terms.push_back(std::move(out));
  }
  return poly;
}

}  // namespace codimlab
