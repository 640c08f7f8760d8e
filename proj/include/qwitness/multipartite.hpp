#pragma once

#include <string>
#include <vector>

#include "qwitness/common.hpp"
#include "qwitness/qudit_ops.hpp"

namespace qwitness {

enum class StabilizerKind { GHZ, Cluster };

struct StabilizerSet {
  int d;
  int n;
  StabilizerKind kind;
  std::vector<ComplexMatrix> ops; // n unitaries of side d^n
};

// GHZ stabilizers, 1-based site indices:
//   k = 1:   X^(x)n
//   k >= 2:  Z at site k-1, Z^dag at site k.
ComplexMatrix ghz_stabilizer(int d, int n, int k);
StabilizerSet ghz_stabilizers(int d, int n);

// Chain-cluster stabilizers:
//   T_1 = X_1^dag Z_2
//   T_m = Z_{m-1} X_m^dag Z_{m+1}   (2 <= m <= n-1)
//   T_n = Z_{n-1} X_n^dag           (mirror of T_1)
ComplexMatrix cluster_stabilizer(int d, int n, int k);
StabilizerSet cluster_stabilizers(int d, int n);

struct PairTest {
  double value;  // (1/2) |<S_1+S_1^dag> + <S_m+S_m^dag>|
  bool violates; // value > m_value + EPS_DECIDE => not fully separable
};

// m is a 1-based site index in 2..n.
PairTest ghz_pair_test(const QuditState& rho, int m, double m_value);

// Uses the consecutive cluster stabilizers T_{m-1}, T_m.
PairTest cluster_pair_test(const QuditState& rho, int m, double m_value);

std::string stabilizer_kind_name(StabilizerKind kind);
StabilizerKind parse_stabilizer_kind(const std::string& name);

}  // namespace qwitness
