#pragma once

#include "locclab/qtensor.hpp"

namespace locclab {

/// Totally antisymmetric state of n n-level systems, normalized.
/// Nonzero amplitudes sit on permutation kets with sign given by parity.
PureState antisymmetric(int n);

/// Levi-Civita symbol for a 0-based index tuple: +1/-1 on even/odd
/// permutations of (0,...,n-1), 0 on repeated indices.
int levi_civita(const std::vector<int>& idx);

/// (|0...0> + |1...1> + ... + |d-1...d-1>)/sqrt(d) on n sites.
PureState ghz(int n, int d = 2);

/// Symmetric single-excitation n-qubit state.
PureState w_state(int n);

/// Parameters of the diagonal two-site deformations of the antisymmetric
/// 3-qutrit state: diag(sqrt a1, sqrt b1, 1) x diag(sqrt a2, sqrt b2, 1) x 1.
struct DiagonalFamilyParams {
  double alpha1 = 1.0;
  double beta1 = 1.0;
  double alpha2 = 1.0;
  double beta2 = 1.0;
};

/// Normalized diag(sqrt a1, sqrt b1, 1) x diag(sqrt a2, sqrt b2, 1) x 1 |A3>.
PureState m_a3_state(const DiagonalFamilyParams& p);

enum class MA3Type { TypeI, TypeII, TypeIII, NotInM };

/// Classify the deformation parameters against the three canonical families,
/// after normalizing over local-unitary and site-relabeling freedom (the slot
/// ordering of the constraint lists is not intrinsic).
MA3Type classify_m_a3(const DiagonalFamilyParams& p, double tol = kDefaultTol);

const char* to_string(MA3Type t);

/// Diagonal 3x3 complex matrix from entries.
Mat diag3(cplx a, cplx b, cplx c);

/// Parse a state descriptor: "A3", "An:k", "GHZ:n", "GHZ:n:d", "W:n",
/// "MA3:a1,b1,a2,b2". Throws on unknown syntax.
PureState named_state(const std::string& descriptor);

}  // namespace locclab
