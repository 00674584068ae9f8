#pragma once

#include "markedbrauer/category.hpp"
#include "markedbrauer/exact.hpp"

#include <Eigen/Sparse>

#include <optional>
#include <string>
#include <vector>

namespace markedbrauer {

using RationalMatrix = DenseMatrix<Rational>;
using SparseRationalMatrix = Eigen::SparseMatrix<Rational, Eigen::RowMajor>;

enum class FormParity { Even, Odd };

/// Superspace of dimension m|n with a homogeneous nondegenerate form.
/// Even form: v1..vm (even) orthonormal, then odd w1..wp, w1*..wp* with
/// (wi, wj*) = delta_ij, p = n/2. Odd form (m = n): v1..vn even, v1*..vn* odd,
/// (vi, vj*) = (vj*, vi) = delta_ij.
struct SuperSpace {
  int m = 0, n = 0;
  FormParity parity = FormParity::Even;
  std::vector<int> degrees;
  std::vector<std::string> labels;
  RationalMatrix gram;
  /// Column j holds the coordinates of v_j^*, so (v_i, v_j^*) = delta_ij.
  RationalMatrix dual;

  int dim() const { return m + n; }
  int form_degree() const { return parity == FormParity::Odd ? 1 : 0; }
  /// eps = (-1)^{form degree}, delta = m - n.
  Params params() const;
  /// Number of basis words of length r; throws on overflow.
  std::size_t tensor_dim(int r) const;
  /// Z2 degree of every basis word of length r, indexed as in tensor_dim.
  std::vector<int> word_degrees(int r) const;
  /// Basis word of length r at a row index, first slot most significant.
  std::vector<int> word(std::size_t index, int r) const;
};

SuperSpace build_superspace(int m, int n, FormParity parity);

/// A matrix from V^{(x)r} to V^{(x)s}, acting on row vectors from the right.
struct SuperMatrix {
  int r = 0, s = 0;
  std::optional<int> degree;  ///< nullopt when inhomogeneous
  SparseRationalMatrix entries;

  bool operator==(const SuperMatrix& o) const;
};

/// Size limit on (m+n)^{r+s}. Default 4096.
struct SizeCap {
  std::size_t max_entries = 4096;
  /// Reads MARKEDBRAUER_SIZE_CAP when set.
  static SizeCap from_environment();
  void check(const SuperSpace& V, int r, int s) const;
};

SuperMatrix identity_matrix(const SuperSpace& V, int r);
/// Matrix product in stacking order: the row-vector map of "a then b".
SuperMatrix product(const SuperMatrix& a, const SuperMatrix& b);
/// (v (x) w)(f (x) g) = (-1)^{deg f deg w} (v)f (x) (w)g.
SuperMatrix graded_tensor(const SuperMatrix& f, const SuperMatrix& g, const SuperSpace& V);
/// Every nonzero entry joins words whose degrees differ by the matrix degree.
bool respects_grading(const SuperMatrix& a, const SuperSpace& V);

struct StructureMaps {
  SuperMatrix id, swap, eval, coeval;
};
/// F(I), F(X), F(Cup) = the form, F(Cap) = the coevaluation vector.
StructureMaps structure_maps(const SuperSpace& V);

SuperMatrix functor_eval_word(const GeneratorWord& w, const SuperSpace& V);
/// Evaluates factor_standard words term by term with delta = m - n.
SuperMatrix functor_eval(const Element& x, const SuperSpace& V, const SizeCap& cap = {});

struct GElement {
  RationalMatrix matrix;  ///< A v_j = sum_i matrix(i, j) v_i
  int degree = 0;
};

/// Basis of g(V, b): even solutions first, then odd.
std::vector<GElement> g_basis(const SuperSpace& V);
/// (Ax, y) + (-1)^{deg A deg x} (x, Ay) = 0 on all basis pairs.
bool preserves_form(const GElement& a, const SuperSpace& V);
/// Signed Leibniz action on V^{(x)r}.
SuperMatrix action_on_tensor(const GElement& a, int r, const SuperSpace& V);

/// dim of {M : P_r(A) M = M P_s(A) for all A in g_basis}.
std::size_t hom_space_dim(const SuperSpace& V, int r, int s, const SizeCap& cap = {});
/// Rank of {F(D)} over the standard basis of B_{r,s}.
std::size_t functor_rank(const SuperSpace& V, int r, int s, const SizeCap& cap = {});

struct SchurWeylReport {
  int r = 0, s = 0;
  BigInt dim_b;
  std::size_t rank = 0, hom_dim = 0;
  bool injective = false, surjective = false;
  bool faithful_hypothesis = false, full_hypothesis = false;
  /// No theorem whose hypothesis holds is contradicted.
  bool consistent = false;
};

SchurWeylReport schur_weyl_report(const SuperSpace& V, int r, int s, const SizeCap& cap = {});

}  // namespace markedbrauer
