#ifndef SEPVAR_COHOMOLOGY_HPP
#define SEPVAR_COHOMOLOGY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/linalg.hpp"
#include "sepvar/multipoly.hpp"
#include "sepvar/qseries.hpp"

namespace sepvar {

/// D_i x = {t_i, x} for the three non-central spectral coefficients
/// t2_2, t3_2, t3_3 (i = 1, 2, 3).
struct VectorField {
  int index = 0;
  std::size_t hamiltonian = 0;  // index into t_names()
  int degree = 0;
  std::vector<MultiPoly> on_generators;
};

const std::array<VectorField, 3>& vector_fields();
int d_degree(int i);
/// Leibniz extension of the generator action.
MultiPoly apply_D(int i, const MultiPoly& x);

/// Generators g with D_i D_j g != D_j D_i g, as (i, j, g).
std::vector<std::array<std::size_t, 3>> commutator_failures();
/// (i, t index) with D_i t != 0.
std::vector<std::pair<int, std::size_t>> annihilation_failures();

// ---------------------------------------------------------------------------
// Characters

struct CharacterLedger {
  QSeries chi_q;                     // exact Laurent polynomial
  QSeries chi_q_from_series;         // same, via the truncated ch(A0) series
  std::int64_t chi_1 = 0;
  bool printed_quotient_is_polynomial = false;  // the displayed division read literally
  std::vector<int> differential_degrees;  // dsigma_1, dsigma~_1, dsigma_2, ...
  std::array<QSeries, 4> wedge_v;    // ch(Lambda^k V), k = 0..3
  std::array<QSeries, 4> w;          // ch(W^k)
  QSeries alternating_residual;      // chi_q - (1 - W1 + W2 - W3)
  QSeries top_character;             // q^8 (ch W^3 + 1)
};

/// Displayed Laurent polynomials.
QSeries printed_chi_q();
QSeries printed_wedge_v(int k);
QSeries printed_top_character();

CharacterLedger euler_characteristics(int qseries_order = kDefaultQSeriesOrder);

// ---------------------------------------------------------------------------
// Top cohomology

/// Span of sum_i D_i(A0 in degree k - d(i)) in A0-coordinates of degree k.
struct ExactSubspace {
  int degree = 0;
  std::vector<Monomial> basis;  // enumerate_a0(degree)
  QMatrix m;                    // one column per generating element
  EchelonBasis span{0};

  std::size_t rank() const { return span.rank(); }
  bool contains(const std::vector<Rational>& coords) const { return span.contains(coords); }
};

ExactSubspace compute_exact_subspace(int k);

struct CohomologyDegree {
  int degree = 0;
  std::size_t a0_dim = 0;
  std::size_t rank = 0;
  std::size_t h_dim = 0;
  std::vector<Monomial> representatives;
  bool cross_check_ok = false;  // D-products of lower representatives span the same space
};

struct CohomologyClassSet {
  std::vector<CohomologyDegree> degrees;
  QSeries character;
  std::size_t total = 0;
};

CohomologyClassSet top_cohomology(int max_degree = 16);

/// Whether x (homogeneous of degree k) is nonzero in A0 modulo the exact
/// subspace.
bool is_nontrivial(const MultiPoly& x, int k);

// ---------------------------------------------------------------------------
// Representative table

using RatioTags = std::array<std::pair<int, int>, 3>;

/// Numerator degree minus 7, with deg z = 3 and deg w = 4.
int ratio_degree(const RatioTags& tags);
std::string ratio_label(const RatioTags& tags);

struct TableEntry {
  std::string label;
  int stated_degree = 0;
  std::optional<RatioTags> tags;  // absent for h_0 = 1
  bool flagged = false;
  std::string note;
  int numerator_degree = 0;
  bool polynomial = false;
  bool degree_ok = false;
  bool nontrivial = false;
};

struct Degree10Candidate {
  RatioTags tags;
  std::vector<Rational> class_coords;  // coordinates modulo exact forms
};

struct RepresentativeReport {
  std::vector<TableEntry> entries;
  std::vector<int> degrees_not_spanned;  // degrees where the listed entries miss part of H_k
  std::vector<Monomial> degree10_complement;
  std::vector<Degree10Candidate> degree10_candidates;  // nontrivial simple-denominator forms
  std::optional<std::array<RatioTags, 2>> degree10_replacement;
  bool ok() const;
};

/// Parsed table of simple-denominator representatives as displayed.
std::vector<TableEntry> printed_representative_table();
RepresentativeReport verify_representative_table(const CohomologyClassSet& classes);

// ---------------------------------------------------------------------------
// Degree 8

struct Degree8Report {
  std::array<std::string, 4> candidate_names;
  std::array<bool, 4> candidate_in_span{};
  std::array<std::vector<Rational>, 4> candidate_combination;  // over the five functions
  std::array<RatioTags, 5> five;
  std::array<bool, 5> five_polynomial{};
  std::array<bool, 5> five_exact{};
  bool h8_polynomial = false;
  bool h8_nontrivial = false;
  std::array<std::string, 4> monomial_names;
  std::array<bool, 4> monomial_nontrivial{};
  bool ok() const;
};

Degree8Report degree8_analysis();

}  // namespace sepvar

#endif  // SEPVAR_COHOMOLOGY_HPP
