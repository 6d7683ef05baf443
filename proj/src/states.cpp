#include "locclab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace locclab {

int levi_civita(const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  for (int i = 0; i < n; ++i) {
    if (idx[i] < 0 || idx[i] >= n) return 0;
    for (int j = i + 1; j < n; ++j)
      if (idx[i] == idx[j]) return 0;
  }
  return perm_sign(idx);
}

PureState antisymmetric(int n) {
  if (n < 2) throw std::invalid_argument("antisymmetric state needs n >= 2");
  std::vector<int> dims(n, n);
  Eigen::Index total = 1;
  for (int k = 0; k < n; ++k) total *= n;
  Vec amps = Vec::Zero(total);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double a = 1.0 / std::sqrt(fact);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PureState s;
  s.dims = dims;
  do {
    Eigen::Index idx = 0;
    for (int k = 0; k < n; ++k) idx = idx * n + perm[k];
    amps(idx) = perm_sign(perm) * a;
  } while (std::next_permutation(perm.begin(), perm.end()));
  s.amps = std::move(amps);
  return s;
}

PureState ghz(int n, int d) {
  if (n < 2) throw std::invalid_argument("ghz needs n >= 2");
  if (d < 2) throw std::invalid_argument("ghz needs d >= 2");
  std::vector<int> dims(n, d);
  Eigen::Index total = 1;
  for (int k = 0; k < n; ++k) total *= d;
  Vec amps = Vec::Zero(total);
  for (int j = 0; j < d; ++j) {
    Eigen::Index idx = 0;
    for (int k = 0; k < n; ++k) idx = idx * d + j;
    amps(idx) = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return PureState(std::move(dims), std::move(amps));
}

PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w state needs n >= 2");
  std::vector<int> dims(n, 2);
  Vec amps = Vec::Zero(Eigen::Index(1) << n);
  for (int k = 0; k < n; ++k)
    amps(Eigen::Index(1) << (n - 1 - k)) = 1.0 / std::sqrt(static_cast<double>(n));
  return PureState(std::move(dims), std::move(amps));
}

Mat diag3(cplx a, cplx b, cplx c) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

PureState m_a3_state(const DiagonalFamilyParams& p) {
  if (!(p.alpha1 > 0 && p.beta1 > 0 && p.alpha2 > 0 && p.beta2 > 0))
    throw std::invalid_argument("family parameters must be strictly positive");
  LocalOperator op({diag3(std::sqrt(p.alpha1), std::sqrt(p.beta1), 1.0),
                    diag3(std::sqrt(p.alpha2), std::sqrt(p.beta2), 1.0),
                    Mat::Identity(3, 3)});
  return apply_local(op, antisymmetric(3)).normalized();
}

namespace {

struct ParamPair {
  // the state diag(u0,u1,u2) x diag(v0,v1,v2) x 1 |A3>, entries positive
  std::array<double, 3> u, v;

  void canonicalize() {
    const double cu = u[2], cv = v[2];
    for (double& x : u) x /= cu;
    for (double& x : v) x /= cv;
  }
  bool close(const ParamPair& o, double tol) const {
    for (int i = 0; i < 3; ++i)
      if (std::abs(u[i] - o.u[i]) > tol * std::max(1.0, std::abs(o.u[i])) ||
          std::abs(v[i] - o.v[i]) > tol * std::max(1.0, std::abs(o.v[i])))
        return false;
    return true;
  }
};

bool neq(double a, double b, double tol) {
  return std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Orbit of the parameter pair under the transformations that preserve the
// "two diagonal factors, identity on the last site" shape: simultaneous
// basis permutations, swap of the two deformed sites, and the moves that
// trade the identity site against one of the deformed sites using the
// tensor-power symmetry of the seed.
std::vector<ParamPair> orbit(const ParamPair& start, double tol) {
  std::vector<ParamPair> seen;
  std::vector<ParamPair> queue;
  auto push = [&](ParamPair p) {
    p.canonicalize();
    for (const auto& q : seen)
      if (q.close(p, 10 * tol)) return;
    seen.push_back(p);
    queue.push_back(p);
  };
  push(start);

  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  while (!queue.empty()) {
    ParamPair p = queue.back();
    queue.pop_back();
    // swap deformed sites
    push(ParamPair{p.v, p.u});
    // identity-site exchanges: (u,v) -> (u/v, 1/v) and (1/u, v/u)
    ParamPair a, b;
    for (int i = 0; i < 3; ++i) {
      a.u[i] = p.u[i] / p.v[i];
      a.v[i] = 1.0 / p.v[i];
      b.u[i] = 1.0 / p.u[i];
      b.v[i] = p.v[i] / p.u[i];
    }
    push(a);
    push(b);
    // simultaneous slot permutations
    for (const auto& pr : perms) {
      ParamPair q;
      for (int i = 0; i < 3; ++i) {
        q.u[i] = p.u[pr[i]];
        q.v[i] = p.v[pr[i]];
      }
      push(q);
    }
  }
  return seen;
}

}  // namespace

MA3Type classify_m_a3(const DiagonalFamilyParams& p, double tol) {
  if (!(p.alpha1 > 0 && p.beta1 > 0 && p.alpha2 > 0 && p.beta2 > 0))
    throw std::invalid_argument("family parameters must be strictly positive");
  ParamPair start{{p.alpha1, p.beta1, 1.0}, {p.alpha2, p.beta2, 1.0}};
  auto reps = orbit(start, tol);

  bool type2 = false, type3 = false;
  for (const auto& r : reps) {
    const double a1 = r.u[0], b1 = r.u[1], a2 = r.v[0], b2 = r.v[1];
    const bool ones = !neq(a1, 1, tol) && !neq(b1, 1, tol) && !neq(a2, 1, tol) &&
                      !neq(b2, 1, tol);
    if (ones) return MA3Type::TypeI;
    if (!neq(b1, 1, tol) && !neq(b2, 1, tol) && neq(a1, a2, tol) &&
        neq(a1, 1, tol) && neq(a2, 1, tol))
      type2 = true;
    if (neq(a1, b1, tol) && neq(b1, b2, tol) && neq(b2, a2, tol) &&
        neq(a1, a2, tol) && neq(a1 / b1, a2 / b2, tol) && neq(a1, 1, tol) &&
        neq(a2, 1, tol) && neq(b1, 1, tol) && neq(b2, 1, tol))
      type3 = true;
  }
  if (type2) return MA3Type::TypeII;
  if (type3) return MA3Type::TypeIII;
  return MA3Type::NotInM;
}

const char* to_string(MA3Type t) {
  switch (t) {
    case MA3Type::TypeI: return "type-i";
    case MA3Type::TypeII: return "type-ii";
    case MA3Type::TypeIII: return "type-iii";
    default: return "not-in-M";
  }
}

PureState named_state(const std::string& descriptor) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
  };
  auto parts = split(descriptor, ':');
  if (parts.empty()) throw std::invalid_argument("empty state descriptor");
  const std::string& head = parts[0];
  if (head == "A3" && parts.size() == 1) return antisymmetric(3);
  if (head == "An" && parts.size() == 2) return antisymmetric(std::stoi(parts[1]));
  if (head == "GHZ" && (parts.size() == 2 || parts.size() == 3))
    return ghz(std::stoi(parts[1]), parts.size() == 3 ? std::stoi(parts[2]) : 2);
  if (head == "W" && parts.size() == 2) return w_state(std::stoi(parts[1]));
  if (head == "MA3" && parts.size() == 2) {
    auto nums = split(parts[1], ',');
    if (nums.size() != 4)
      throw std::invalid_argument("MA3 descriptor needs four parameters");
    DiagonalFamilyParams p{std::stod(nums[0]), std::stod(nums[1]),
                           std::stod(nums[2]), std::stod(nums[3])};
    return m_a3_state(p);
  }
  throw std::invalid_argument("unrecognized state descriptor: " + descriptor);
}

}  // namespace locclab
