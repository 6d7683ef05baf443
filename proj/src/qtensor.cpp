#include "locclab/qtensor.hpp"

#include <cmath>
#include <numeric>

namespace locclab {

namespace {

Eigen::Index checked_total(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("state needs at least one site");
  Eigen::Index t = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("site dimension must be positive");
    t *= d;
  }
  return t;
}

}  // namespace

PureState::PureState(std::vector<int> dims_, Vec amps_)
    : dims(std::move(dims_)), amps(std::move(amps_)) {
  const Eigen::Index t = checked_total(dims);
  if (amps.size() != t)
    throw std::invalid_argument("amplitude length does not match site dimensions");
  if (!amps.allFinite()) throw std::invalid_argument("non-finite amplitude");
  if (amps.norm() == 0.0) throw std::invalid_argument("all-zero amplitude vector");
}

Eigen::Index PureState::total_dim() const { return checked_total(dims); }

PureState PureState::normalized() const {
  PureState out = *this;
  out.amps /= amps.norm();
  return out;
}

Eigen::Index PureState::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims.size())
    throw std::invalid_argument("digit count does not match site count");
  Eigen::Index idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims[k])
      throw std::invalid_argument("digit out of range");
    idx = idx * dims[k] + digits[k];
  }
  return idx;
}

LocalOperator LocalOperator::identity(const std::vector<int>& dims) {
  std::vector<Mat> f;
  f.reserve(dims.size());
  for (int d : dims) f.push_back(Mat::Identity(d, d));
  return LocalOperator(std::move(f));
}

LocalOperator LocalOperator::dagger() const {
  std::vector<Mat> f;
  f.reserve(factors.size());
  for (const Mat& m : factors) f.push_back(m.adjoint());
  return LocalOperator(std::move(f));
}

LocalOperator LocalOperator::compose(const LocalOperator& rhs) const {
  if (factors.size() != rhs.factors.size())
    throw std::invalid_argument("factor count mismatch in compose");
  std::vector<Mat> f;
  f.reserve(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k)
    f.push_back(factors[k] * rhs.factors[k]);
  return LocalOperator(std::move(f));
}

Mat LocalOperator::dense() const { return kron(factors); }

bool LocalOperator::is_trivial(double tol) const {
  for (const Mat& m : factors) {
    if (m.rows() != m.cols()) return false;
    Mat id = Mat::Identity(m.rows(), m.cols());
    if (!proportional_factor(m, id, tol)) return false;
  }
  return true;
}

PureState apply_site(const Mat& m, int site, const PureState& s) {
  const int n = s.sites();
  if (site < 0 || site >= n) throw std::invalid_argument("site out of range");
  const int d = s.dims[site];
  if (m.cols() != d)
    throw std::invalid_argument("factor dimension does not match site");
  if (m.rows() != d)
    throw std::invalid_argument("rectangular factors are not supported");

  Eigen::Index left = 1, right = 1;
  for (int k = 0; k < site; ++k) left *= s.dims[k];
  for (int k = site + 1; k < n; ++k) right *= s.dims[k];

  Vec out = Vec::Zero(s.amps.size());
  Vec in_block(d), out_block(d);
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      const Eigen::Index base = l * d * right + r;
      for (int i = 0; i < d; ++i) in_block(i) = s.amps(base + i * right);
      out_block.noalias() = m * in_block;
      for (int i = 0; i < d; ++i) out(base + i * right) = out_block(i);
    }
  }
  PureState res;
  res.dims = s.dims;
  res.amps = std::move(out);
  return res;
}

PureState apply_local(const LocalOperator& op, const PureState& s) {
  if (op.sites() != s.sites())
    throw std::invalid_argument("operator/state site count mismatch");
  PureState cur = s;
  for (int k = 0; k < op.sites(); ++k) {
    if (op.factors[k].rows() != s.dims[k] || op.factors[k].cols() != s.dims[k])
      throw std::invalid_argument("factor dimension does not match site");
    cur = apply_site(op.factors[k], k, cur);
  }
  return cur;
}

cplx inner(const PureState& a, const PureState& b) {
  if (a.dims != b.dims) throw std::invalid_argument("dimension mismatch in inner");
  return a.amps.dot(b.amps);
}

Mat reduced_density(const PureState& s, int site) {
  const int n = s.sites();
  if (site < 0 || site >= n) throw std::invalid_argument("site out of range");
  const int d = s.dims[site];
  Eigen::Index left = 1, right = 1;
  for (int k = 0; k < site; ++k) left *= s.dims[k];
  for (int k = site + 1; k < n; ++k) right *= s.dims[k];

  Mat rho = Mat::Zero(d, d);
  for (Eigen::Index l = 0; l < left; ++l)
    for (Eigen::Index r = 0; r < right; ++r) {
      const Eigen::Index base = l * d * right + r;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          rho(i, j) += s.amps(base + i * right) * std::conj(s.amps(base + j * right));
    }
  return rho;
}

bool is_fully_entangled(const PureState& s, double tol) {
  for (int k = 0; k < s.sites(); ++k) {
    HermEig e = herm_eig(reduced_density(s, k));
    const double lo = e.values(0), hi = e.values(e.values.size() - 1);
    if (!(lo > tol * hi)) return false;
  }
  return true;
}

std::optional<cplx> proportional_factor(const Vec& a, const Vec& b, double tol) {
  if (a.size() != b.size())
    throw std::invalid_argument("shape mismatch in proportionality test");
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 && nb == 0.0) return cplx(1.0, 0.0);
  if (na == 0.0 || nb == 0.0) return std::nullopt;

  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double w = std::abs(a(i)) + std::abs(b(i));
    if (w > best) {
      best = w;
      imax = i;
    }
  }
  if (std::abs(b(imax)) < 1e-300) return std::nullopt;
  cplx c = a(imax) / b(imax);
  const cplx denom = b.squaredNorm();
  if (std::abs(denom) > 0) c = b.dot(a) / denom;  // least-squares refinement
  const double resid = (a - c * b).norm();
  if (resid <= tol * na) return c;
  return std::nullopt;
}

std::optional<cplx> proportional_factor(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch in proportionality test");
  Vec va = Eigen::Map<const Vec>(a.data(), a.size());
  Vec vb = Eigen::Map<const Vec>(b.data(), b.size());
  return proportional_factor(va, vb, tol);
}

std::optional<cplx> proportional(const PureState& a, const PureState& b, double tol) {
  if (a.dims != b.dims) throw std::invalid_argument("dimension mismatch");
  return proportional_factor(a.amps, b.amps, tol);
}

Mat kron2(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron(const std::vector<Mat>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron of empty list");
  Mat out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron2(out, factors[k]);
  return out;
}

HermEig herm_eig(const Mat& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eig needs a square matrix");
  Mat sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

RVec singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

bool is_positive_definite(const Mat& h, double tol) {
  if (!is_hermitian(h, std::max(tol, 1e-10))) return false;
  HermEig e = herm_eig(h);
  const double hi = e.values(e.values.size() - 1);
  return e.values(0) > tol * std::max(1.0, hi);
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Mat id = Mat::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).norm() <= tol * std::sqrt(double(m.rows()));
}

Mat herm_sqrt(const Mat& h) {
  HermEig e = herm_eig(h);
  if (e.values(0) < -1e-12 * std::abs(e.values(e.values.size() - 1)))
    throw std::invalid_argument("matrix square root of a non-positive matrix");
  RVec s = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * s.asDiagonal() * e.vectors.adjoint();
}

Mat herm_inv_sqrt(const Mat& h) {
  HermEig e = herm_eig(h);
  if (e.values(0) <= 0.0)
    throw std::invalid_argument("inverse square root of a non-positive matrix");
  RVec s = e.values.cwiseSqrt().cwiseInverse();
  return e.vectors * s.asDiagonal() * e.vectors.adjoint();
}

int perm_sign(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      if (j < 0 || j >= n) throw std::invalid_argument("not a permutation");
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

PureState permute_sites(const PureState& s, const std::vector<int>& perm) {
  const int n = s.sites();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<int> inv(n, -1);
  for (int k = 0; k < n; ++k) {
    if (perm[k] < 0 || perm[k] >= n || inv[perm[k]] != -1)
      throw std::invalid_argument("not a permutation");
    inv[perm[k]] = k;
    if (s.dims[perm[k]] != s.dims[k])
      throw std::invalid_argument("permutation mixes unequal site dimensions");
  }
  PureState out;
  out.dims = s.dims;
  out.amps = Vec::Zero(s.amps.size());
  std::vector<int> digits(n, 0), src(n, 0);
  for (Eigen::Index idx = 0; idx < s.amps.size(); ++idx) {
    // decode idx into output digits
    Eigen::Index rem = idx;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rem % s.dims[k]);
      rem /= s.dims[k];
    }
    for (int k = 0; k < n; ++k) src[inv[k]] = digits[k];
    out.amps(idx) = s.amps(s.index_of(src));
  }
  return out;
}

double Rng::gauss() {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(eng);
}

double Rng::uniform() {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return d(eng);
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

cplx Rng::cgauss() { return cplx(gauss(), gauss()); }

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(eng);
}

Mat random_gl(int d, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = rng.cgauss();
    RVec sv = singular_values(m);
    if (sv(sv.size() - 1) > 1e-3 * sv(0)) return m;
  }
  throw std::runtime_error("failed to draw a well-conditioned invertible matrix");
}

Mat random_unitary(int d, Rng& rng) {
  Mat m = random_gl(d, rng);
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase convention so Q is unique given M
  for (int i = 0; i < d; ++i) {
    cplx di = r(i, i);
    q.col(i) *= di / std::abs(di);
  }
  return q;
}

Mat sl_normalize(const Mat& m) {
  const cplx det = m.determinant();
  if (std::abs(det) < 1e-300) throw std::invalid_argument("singular matrix");
  const int d = static_cast<int>(m.rows());
  const cplx root = std::pow(det, 1.0 / static_cast<double>(d));
  return m / root;
}

Mat random_sl(int d, Rng& rng) { return sl_normalize(random_gl(d, rng)); }

Mat random_pd(int d, Rng& rng) {
  Mat m = random_gl(d, rng);
  Mat p = m.adjoint() * m;
  p += 0.05 * p.norm() / d * Mat::Identity(d, d);
  return (p + Mat(p.adjoint())) / 2.0;
}

}  // namespace locclab
