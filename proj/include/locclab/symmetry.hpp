#pragma once

#include <variant>

#include "locclab/qtensor.hpp"

namespace locclab {

// 2x2 building blocks used by the qubit stabilizer families:
// scale(z) = diag(z, 1/z), shear(x, y) = [[1, y], [0, x]].
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat scale_diag(cplx z);
Mat shear(cplx x, cplx y);

enum class FamilyKind { Finite, Ghz, W, TensorPower, FourQubit };

enum class FourQubitCase { GabcdA, GabcdB, Labc2, La2b2 };

/// A parameterized stabilizer family. Ghz(n): tensor products of
/// scale_diag(z_i) * X^m with unit parameter product. W(n): (1/x) tensor of
/// shear(x, y_i) with zero parameter sum. TensorPower(n, d): S^{(x)n} over
/// unit-determinant S. FourQubit: the three explicit 4-qubit non-compact
/// families plus the tensor-power case.
struct SymmetryFamily {
  FamilyKind kind = FamilyKind::Finite;
  int n = 0;
  int d = 2;
  FourQubitCase fq = FourQubitCase::GabcdA;
  std::vector<LocalOperator> elements;  // Finite only

  static SymmetryFamily finite(std::vector<LocalOperator> els);
  static SymmetryFamily ghz_family(int n);
  static SymmetryFamily w_family(int n);
  static SymmetryFamily tensor_power(int n, int d);
  static SymmetryFamily four_qubit(FourQubitCase c);

  std::vector<int> site_dims() const;
  std::string label() const;
};

/// A symmetry together with its per-site conjugation factors.
struct QcSolution {
  LocalOperator symmetry;
  std::vector<cplx> factors;        // factor at each satisfied site, else 0
  std::vector<int> sites_satisfied; // 0-based
  bool nontrivial = false;
  bool parameter_freedom = false;   // representative of a continuous set
};

/// Factor c with op|s> = c|s> within tol, if any.
std::optional<cplx> verify_symmetry(const LocalOperator& op, const PureState& s,
                                    double tol = kDefaultTol);

/// Real positive c with S^dag H S = c H within tol, for positive-definite H.
std::optional<double> quasi_commute(const Mat& S, const Mat& H,
                                    double tol = kDefaultTol);

/// Representatives of family elements whose per-site conjugation preserves
/// H_i (up to a factor) on every required site. Only nontrivial solutions
/// are returned; the list may have several structurally distinct branches.
std::vector<QcSolution> solve_quasi_commuting(const SymmetryFamily& family,
                                              const std::vector<Mat>& H,
                                              const std::vector<int>& required_sites,
                                              double tol = kDefaultTol);

/// Pseudorandom family element with the parameter constraints enforced.
LocalOperator sample_family(const SymmetryFamily& family, Rng& rng);

// --- closed-form per-site conjugation solution sets -------------------------

/// Solution set of a one-parameter site factor: either a finite set of
/// admissible values or a full circle of a fixed modulus.
struct SiteValueSet {
  bool circle = false;
  double modulus = 1.0;         // circle radius
  std::vector<cplx> values;     // finite branch
  bool empty() const { return !circle && values.empty(); }
  bool contains(cplx z, double tol) const;
};

/// Admissible z for scale_diag(z) (times an optional trailing X) to preserve
/// H up to a factor. with_x selects the off-diagonal variant; order_sx puts
/// the X in front (S = X * scale) instead of behind (S = scale * X).
SiteValueSet scale_site_solutions(const Mat& H, bool with_x, bool x_in_front,
                                  double tol);

/// Admissible z for pauli_y * scale_diag(z) against H.
SiteValueSet ydiag_site_solutions(const Mat& H, double tol);

/// Admissible y for shear(1, y) (unipotent) against H: always the single
/// point 0; exposed for symmetry with the pauli_z-twisted variant 2b/a.
cplx shear_twist_value(const Mat& H);

// --- structure predicates for tensor-power quasi-commutation ---------------

/// True when S is (up to a scalar) a unitary of block form phase + U(2)
/// with respect to the first basis vector.
bool is_block_phase_u2(const Mat& S, double tol = 1e-8);

/// True when S is (up to a scalar) a diagonal unitary.
bool is_diag_unitary(const Mat& S, double tol = 1e-8);

/// Joint commutant dimension of a list of Hermitian matrices, together with
/// a nontrivial commuting unitary when one exists (dimension > 1).
struct CommutantProbe {
  int dimension = 0;
  std::optional<Mat> nontrivial_unitary;
};
CommutantProbe joint_commutant(const std::vector<Mat>& mats, double tol = 1e-9,
                               Rng* rng = nullptr);

}  // namespace locclab
