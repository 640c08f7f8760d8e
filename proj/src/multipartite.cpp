#include "qwitness/multipartite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwitness/linalg.hpp"

namespace qwitness {

namespace {

void check_party_count(int d, int n) {
  if (d < 2) throw std::invalid_argument("stabilizers: dimension must be >= 2");
  if (n < 2) throw std::invalid_argument("stabilizers: parties must be >= 2");
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim = checked_tensor_dim(dim, d);
  if (static_cast<std::size_t>(dim) > max_dim())
    throw std::length_error("stabilizers: d^n = " + std::to_string(dim) +
                            " exceeds the cap of " + std::to_string(max_dim()));
}

// Tensor product with the given factors at their 1-based sites and the
// identity elsewhere.
ComplexMatrix site_product(int d, int n,
                           const std::vector<std::pair<int, ComplexMatrix>>& factors) {
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int site = 1; site <= n; ++site) {
    const ComplexMatrix* factor = &id;
    for (const auto& [s, m] : factors)
      if (s == site) factor = &m;
    out = tensor(out, *factor);
  }
  return out;
}

}  // namespace

ComplexMatrix ghz_stabilizer(int d, int n, int k) {
  check_party_count(d, n);
  if (k < 1 || k > n)
    throw std::invalid_argument("ghz_stabilizer: site index out of range");
  if (k == 1) {
    std::vector<std::pair<int, ComplexMatrix>> factors;
    const ComplexMatrix x = pauli_x(d);
    for (int site = 1; site <= n; ++site) factors.emplace_back(site, x);
    return site_product(d, n, factors);
  }
  const ComplexMatrix z = pauli_z(d);
  return site_product(d, n, {{k - 1, z}, {k, z.adjoint()}});
}

StabilizerSet ghz_stabilizers(int d, int n) {
  StabilizerSet set{d, n, StabilizerKind::GHZ, {}};
  set.ops.reserve(n);
  for (int k = 1; k <= n; ++k) set.ops.push_back(ghz_stabilizer(d, n, k));
  return set;
}

ComplexMatrix cluster_stabilizer(int d, int n, int k) {
  check_party_count(d, n);
  if (k < 1 || k > n)
    throw std::invalid_argument("cluster_stabilizer: site index out of range");
  const ComplexMatrix z = pauli_z(d);
  const ComplexMatrix xd = pauli_x(d).adjoint();
  if (k == 1) return site_product(d, n, {{1, xd}, {2, z}});
  // T_n mirrors T_1: Z_{n-1} X_n^dag (the chain has no site n+1).
  if (k == n) return site_product(d, n, {{n - 1, z}, {n, xd}});
  return site_product(d, n, {{k - 1, z}, {k, xd}, {k + 1, z}});
}

StabilizerSet cluster_stabilizers(int d, int n) {
  StabilizerSet set{d, n, StabilizerKind::Cluster, {}};
  set.ops.reserve(n);
  for (int k = 1; k <= n; ++k) set.ops.push_back(cluster_stabilizer(d, n, k));
  return set;
}

namespace {

// <S + S^dag> via two complex traces; the pair must be conjugate for a valid
// state, which is asserted rather than assumed.
double symmetrized_expectation(const QuditState& rho, const ComplexMatrix& s) {
  const Complex e = rho.expectation(s);
  const Complex e_dag = rho.expectation(s.adjoint().eval());
  if (std::abs(e_dag - std::conj(e)) > 1e-9)
    throw std::runtime_error("stabilizer expectation: <S^dag> deviates from conj(<S>) by " +
                             std::to_string(std::abs(e_dag - std::conj(e))));
  return (e + e_dag).real();
}

PairTest pair_test(const QuditState& rho, const ComplexMatrix& first,
                   const ComplexMatrix& second, double m_value) {
  const double w1 = symmetrized_expectation(rho, first);
  const double w2 = symmetrized_expectation(rho, second);
  const double value = 0.5 * std::abs(w1 + w2);
  return {value, value > m_value + EPS_DECIDE};
}

void check_pair_inputs(const QuditState& rho, int m) {
  if (rho.parties() < 2)
    throw std::invalid_argument("pair test: state must have at least two parties");
  if (m < 2 || m > rho.parties())
    throw std::invalid_argument("pair test: site index m must lie in 2..n");
}

}  // namespace

PairTest ghz_pair_test(const QuditState& rho, int m, double m_value) {
  check_pair_inputs(rho, m);
  const int d = rho.d();
  const int n = rho.parties();
  return pair_test(rho, ghz_stabilizer(d, n, 1), ghz_stabilizer(d, n, m), m_value);
}

PairTest cluster_pair_test(const QuditState& rho, int m, double m_value) {
  check_pair_inputs(rho, m);
  const int d = rho.d();
  const int n = rho.parties();
  return pair_test(rho, cluster_stabilizer(d, n, m - 1), cluster_stabilizer(d, n, m),
                   m_value);
}

std::string stabilizer_kind_name(StabilizerKind kind) {
  return kind == StabilizerKind::GHZ ? "ghz" : "cluster";
}

StabilizerKind parse_stabilizer_kind(const std::string& name) {
  if (name == "ghz") return StabilizerKind::GHZ;
  if (name == "cluster") return StabilizerKind::Cluster;
  throw std::invalid_argument("unknown stabilizer kind '" + name + "' (ghz|cluster)");
}

}  // namespace qwitness
