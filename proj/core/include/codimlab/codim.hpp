#pragma once

#include "codimlab/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace codimlab {

struct CodimOptions {
  std::size_t threads = 1;
  // Guard rails: a hard error, never silent truncation.
  std::size_t max_coordinates = std::size_t(1) << 24;
  std::size_t max_monomials = 10'000'000;
};

struct ResourceCeiling : std::runtime_error {
  ResourceCeiling(const std::string& what, std::size_t limit, std::size_t requested)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ", requested " +
                           std::to_string(requested) + ")"),
        limit(limit),
        requested(requested) {}
  std::size_t limit;
  std::size_t requested;
};

enum class CodimMode { Ordinary, Graded, GAction, Hopf };

struct CodimReport {
  CodimMode mode = CodimMode::Ordinary;
  std::size_t n = 0;
  std::size_t value = 0;
  std::size_t monomials = 0;  // evaluation vectors streamed
  double millis = 0.0;
};

const char* codim_mode_name(CodimMode mode);

// Span of all monomial evaluations [x^{γ_{l_1}}_{σ(1)}, ..., x^{γ_{l_n}}_{σ(n)}]
// with labels over an effective basis of ζ(H); this is the image of V_n^H in
// Hom(L^{⊗n}, L).  monomials_out reports the number of streamed vectors.
Subspace hopf_image(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                    const CodimOptions& opts = {}, std::size_t* monomials_out = nullptr);

// Rank of the span of all n! m^n monomial evaluation vectors.
CodimReport codim_hopf(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                       const CodimOptions& opts = {});

CodimReport codim_ordinary(const LieAlgebra& l, std::size_t n, const CodimOptions& opts = {});

// Graded codimension via the composition decomposition: the sum over
// compositions (n_1, ..., n_m) of n of multinomial(n; n_1..n_m) times the rank
// of the block with that multiset of component labels.
CodimReport codim_graded(const LieAlgebra& l, const Grading& g, std::size_t n,
                         const CodimOptions& opts = {});

CodimReport codim_gaction(const LieAlgebra& l, const GroupSpec& g,
                          const std::map<std::string, Matrix>& generator_matrices,
                          std::size_t n, const CodimOptions& opts = {});

// Alternating sum of graded codimensions of the subalgebras L_{G0} over the
// abelian subgroups generated by subsets of the support; must equal
// codim_graded for finite groups.
std::size_t inclusion_exclusion_graded(const LieAlgebra& l, const Grading& g, std::size_t n,
                                       const CodimOptions& opts = {});

// Audits c_n <= c_n^H <= m^n c_n and c_n^H <= d^{n+1} across reports computed
// for the same algebra; returns human-readable violations (must be empty).
std::vector<std::string> bounds_audit(const std::vector<CodimReport>& reports,
                                      std::size_t dim_l, std::size_t effective_m);

}  // namespace codimlab
