#pragma once

/**
 * @file combinatorics.hpp
 * @brief Idempotent labels (kappa functions), box partitions, sign
 * sequences and backdrops.
 */

#include <map>
#include <string>
#include <vector>

namespace kht {

/// Weakly increasing map [1,l] -> [0,k]; value h is the number of black
/// strands left of red strand h.
struct Kappa {
  int l = 0;
  int k = 0;
  std::vector<int> v;  // v[h-1] = kappa(h)

  int operator()(int h) const { return v.at(h - 1); }
  bool valid() const;
  bool in_image(int j) const;
  /// Violating idempotents (a black strand left of every red) have zero rings.
  bool violating() const { return l > 0 && v[0] > 0; }
  /// At most one black strand in each gap and none on the far left.
  bool basic() const;
  std::string str() const;

  friend bool operator==(const Kappa& a, const Kappa& b) { return a.l == b.l && a.k == b.k && a.v == b.v; }
  friend bool operator<(const Kappa& a, const Kappa& b) { return a.v < b.v; }
  /// Pointwise order.
  bool leq(const Kappa& o) const;
};

std::vector<Kappa> enumerate_kappas(int l, int k);

/// kappa_i^{+}: raise the last place with value i-1; kappa_i^{-}: lower the
/// first place with value i.  Throws std::domain_error if undefined.
Kappa kappa_shift(const Kappa& kappa, int i, int dir);

int grading_offset(const Kappa& kappa);

/// Parts lambda_1 <= ... <= lambda_k, each at most l-k.
using BoxPartition = std::vector<int>;

std::vector<BoxPartition> enumerate_partitions(int l, int k);

/// '+' at positions j + lambda_j, '-' elsewhere.
std::string sign_sequence(const BoxPartition& p, int l, int k);
BoxPartition partition_of_signs(const std::string& signs);

/// Idempotent at the bottom of every B_S: black j immediately right of
/// red j + lambda_j.
Kappa bottom_kappa(const BoxPartition& p, int l);

struct Backdrop {
  int l = 0;
  BoxPartition partition;
  std::vector<int> labels;  // labels[j-1]: label of row j from the top
  std::vector<int> tie;     // order among rows sharing a label

  bool valid() const;
  /// Rank (0-based) of row j in the top order, sorted by (label, tie).
  std::vector<int> top_rank() const;
  std::string str() const;
};

Kappa kappa_of_backdrop(const Backdrop& b);

/// All backdrops, keyed by partition, including every tie order.
std::map<BoxPartition, std::vector<Backdrop>> enumerate_backdrops(int l, int k);

long long binomial(int n, int r);
long long factorial(int n);

}  // namespace kht
