#include "khtensor/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace kht {

std::vector<MultiPoly> ideal_generators(const Kappa& kappa) {
  const int k = kappa.k, l = kappa.l;
  std::vector<MultiPoly> gens;
  auto push = [&](int p, int j) {
    MultiPoly h = complete_symmetric(p, j, k);
    if (h.is_zero()) return;
    if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
  };
  // In j variables the h_p with p >= a are generated by h_a, ..., h_{a+j-1}
  // (Newton-type recurrence with elementary symmetric coefficients).
  for (int q = 1; q <= l; ++q) {
    const int j = kappa(q);
    const int a = std::max(q - j, 0);
    for (int p = a; p < std::max(a + j, a + 1); ++p) push(p, j);
  }
  for (int p = l - k + 1; p <= l; ++p) push(p, k);
  return gens;
}

QuotientRing::QuotientRing(const Kappa& kappa) : kappa_(kappa), offset_(grading_offset(kappa)) {
  const int k = kappa.k;
  const auto gens = ideal_generators(kappa);
  for (int d = 0;; ++d) {
    const auto monos = monomials_of_degree(k, d);
    const int n = static_cast<int>(monos.size());
    std::map<Exponent, int> col;
    for (int c = 0; c < n; ++c) col[monos[c]] = c;

    Echelon span(n);
    for (const auto& g : gens) {
      const int dg = g.degree();
      if (dg > d) continue;
      for (const auto& m : monomials_of_degree(k, d - dg)) {
        Vec row(n);
        for (const auto& [e, c] : g.terms()) {
          Exponent t = e;
          for (int v = 0; v < k; ++v) t[v] += m[v];
          row[col.at(t)] += c;
        }
        span.add(row);
        if (span.rank() == n) break;
      }
      if (span.rank() == n) break;
    }
    if (span.rank() == n) break;  // generated in degree one, so zero from here on

    Matrix ech(span.rank(), n);
    for (int r = 0; r < span.rank(); ++r)
      for (int c = 0; c < n; ++c) ech(r, c) = span.rows()[r][c];
    const auto pivots = rref(ech);
    std::vector<int> pivot_row(n, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);

    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
      if (pivot_row[c] < 0) free_cols.push_back(c);
    const int base = dim();
    for (int c : free_cols) {
      basis_.push_back(monos[c]);
      degree_.push_back(d);
    }
    top_degree_ = d;
    // Normal forms are stored relative to this degree's block and padded
    // when the final dimension is known.
    for (int c = 0; c < n; ++c) {
      Vec nf(free_cols.size());
      if (pivot_row[c] < 0) {
        nf[std::find(free_cols.begin(), free_cols.end(), c) - free_cols.begin()] = Scalar(1);
      } else {
        for (size_t f = 0; f < free_cols.size(); ++f) nf[f] = -ech(pivot_row[c], free_cols[f]);
      }
      Vec full(base);
      full.insert(full.end(), nf.begin(), nf.end());
      normal_form_[monos[c]] = std::move(full);
    }
  }
  for (auto& [e, v] : normal_form_) v.resize(basis_.size());
}

std::vector<int> QuotientRing::graded_dims() const {
  std::vector<int> dims(top_degree_ + 1, 0);
  for (int d : degree_) ++dims[d];
  return dims;
}

Vec QuotientRing::reduce(const MultiPoly& f) const {
  Vec out(dim());
  for (const auto& [e, c] : f.terms()) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (d > top_degree_) continue;
    axpy(out, c, normal_form_.at(e));
  }
  return out;
}

}  // namespace kht
