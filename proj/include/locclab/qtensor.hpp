#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace locclab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Relative tolerance used by every numeric predicate unless overridden.
inline constexpr double kDefaultTol = 1e-9;

/// Dense amplitude vector of an n-qudit pure state with per-site dimensions.
/// Indexing is site-major with site 0 most significant: the basis ket
/// |j0,j1,...,j_{n-1}> lives at ((j0*d1 + j1)*d2 + j2)*...
/// States may be unnormalized; amplitudes must be finite and not all zero.
struct PureState {
  std::vector<int> dims;
  Vec amps;

  PureState() = default;
  PureState(std::vector<int> dims_, Vec amps_);

  int sites() const { return static_cast<int>(dims.size()); }
  Eigen::Index total_dim() const;
  double norm() const { return amps.norm(); }
  PureState normalized() const;

  /// Flat index of a basis ket given one digit per site.
  Eigen::Index index_of(const std::vector<int>& digits) const;
};

/// Tensor product of per-site square matrices, stored factor-wise.
struct LocalOperator {
  std::vector<Mat> factors;

  LocalOperator() = default;
  explicit LocalOperator(std::vector<Mat> f) : factors(std::move(f)) {}

  static LocalOperator identity(const std::vector<int>& dims);

  int sites() const { return static_cast<int>(factors.size()); }
  LocalOperator dagger() const;
  /// Factor-wise product (*this applied after rhs).
  LocalOperator compose(const LocalOperator& rhs) const;
  /// Full Kronecker product; only sensible for small total dimension.
  Mat dense() const;
  /// True when every factor is proportional to the identity.
  bool is_trivial(double tol = kDefaultTol) const;
};

/// (factors_0 x factors_1 x ...)|s>, computed by factor-wise contraction.
PureState apply_local(const LocalOperator& op, const PureState& s);

/// Apply a single-site matrix, identity elsewhere.
PureState apply_site(const Mat& m, int site, const PureState& s);

/// <a|b> with conjugation on a.
cplx inner(const PureState& a, const PureState& b);

/// Single-site reduced density matrix Tr_{rest}(|s><s|).
Mat reduced_density(const PureState& s, int site);

/// True iff every single-site reduction has smallest eigenvalue
/// above tol times its largest one.
bool is_fully_entangled(const PureState& s, double tol = kDefaultTol);

/// Proportionality test: returns c with ||a - c*b|| <= tol*||a|| when such c
/// exists. The candidate is seeded from the largest-magnitude entry and
/// refined by least squares. Two zero objects are proportional with c = 1;
/// zero against nonzero is not.
std::optional<cplx> proportional_factor(const Vec& a, const Vec& b,
                                        double tol = kDefaultTol);
std::optional<cplx> proportional_factor(const Mat& a, const Mat& b,
                                        double tol = kDefaultTol);
std::optional<cplx> proportional(const PureState& a, const PureState& b,
                                 double tol = kDefaultTol);

Mat kron(const std::vector<Mat>& factors);
Mat kron2(const Mat& a, const Mat& b);

struct HermEig {
  RVec values;  // ascending
  Mat vectors;  // orthonormal columns
};

/// Eigendecomposition of a Hermitian matrix (input is Hermitized first).
HermEig herm_eig(const Mat& h);

RVec singular_values(const Mat& m);

bool is_hermitian(const Mat& m, double tol = kDefaultTol);
bool is_positive_definite(const Mat& h, double tol = kDefaultTol);
bool is_unitary(const Mat& m, double tol = kDefaultTol);

/// Principal square root / inverse square root of a positive matrix.
Mat herm_sqrt(const Mat& h);
Mat herm_inv_sqrt(const Mat& h);

/// Sign of a permutation given as an image list (0-based).
int perm_sign(const std::vector<int>& perm);

/// Site permutation: slot k of the result takes the value that slot perm[k]
/// carried, i.e. |i_0,...> -> |i_{perm(0)},...> on basis kets.
PureState permute_sites(const PureState& s, const std::vector<int>& perm);

// --- seeded randomness -----------------------------------------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double gauss();
  double uniform();             // [0,1)
  double uniform(double a, double b);
  cplx cgauss();
  int uniform_int(int lo, int hi);  // inclusive
};

Mat random_gl(int d, Rng& rng);
Mat random_unitary(int d, Rng& rng);
/// Random invertible matrix with determinant normalized to 1 via the
/// principal d-th root.
Mat random_sl(int d, Rng& rng);
/// Random positive-definite matrix with moderate condition number.
Mat random_pd(int d, Rng& rng);

/// Principal d-th root normalization m / det(m)^{1/d}.
Mat sl_normalize(const Mat& m);

}  // namespace locclab
