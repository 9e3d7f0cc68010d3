// Membership in the affine semigroup I(A) and the shifted cones F_0, F_d,
// exponent classification, the exceptional set E(A), and holonomic rank.
#pragma once

#include <optional>
#include <vector>

#include "gkz/curve.hpp"

namespace gkz {

// Witness for membership in a shifted cone: matrix * v = alpha + r * shift.
struct ShiftWitness {
  NVector v;
  long long r = 0;
};

enum class Scenario { InI, E0Only, EdOnly, EBoth, J };

const char* scenario_name(Scenario s);

struct Classification {
  Scenario tag;
  std::optional<NVector> witness_I;        // A * u = alpha
  std::optional<ShiftWitness> witness_F0;  // C * v = alpha + r*(1, 0), minimal r
  std::optional<ShiftWitness> witness_Fd;  // B * v = alpha + r*(1, d), minimal r
};

// u in N^n with sum u_i = count and sum w_i u_i = weight, if any.
std::optional<NVector> find_composition(const std::vector<long long>& weights, long long count,
                                        long long weight);

std::optional<NVector> in_I(const CurveMatrix& A, Exponent alpha);
std::optional<ShiftWitness> in_F0(const CurveMatrix& A, Exponent alpha);
std::optional<ShiftWitness> in_Fd(const CurveMatrix& A, Exponent alpha);

Classification classify(const CurveMatrix& A, Exponent alpha);

// E(A) = (F0 \ I) intersect (Fd \ I), enumerated level by level in a1.
// Stops at the first level whose full window (k1*n, km*n) lies in I; levels
// are capped at d^2 (BoundExceeded beyond that).
std::vector<Exponent> e_set(const CurveMatrix& A);

bool is_cohen_macaulay(const CurveMatrix& A);

// d+1 when alpha is in E(A), d otherwise.
int holonomic_rank(const CurveMatrix& A, Exponent alpha);

// Dimension of the space of rational solutions: 2 (EBoth), 1 (InI or one-sided
// E scenarios), 0 (J).
int rational_dim(const CurveMatrix& A, Exponent alpha);

}  // namespace gkz
