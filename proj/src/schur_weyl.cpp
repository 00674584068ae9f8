#include "markedbrauer/errors.hpp"
#include "markedbrauer/superrep.hpp"

#include <algorithm>
#include <map>

namespace markedbrauer {

std::size_t hom_space_dim(const SuperSpace& V, int r, int s, const SizeCap& cap) {
  cap.check(V, r, s);
  const std::size_t nr = V.tensor_dim(r), ns = V.tensor_dim(s);
  // unknown M(u, w') sits at u * ns + w'
  std::vector<SparseRow<Rational>> rows;
  for (const auto& a : g_basis(V)) {
    SuperMatrix pr = action_on_tensor(a, r, V);
    Eigen::SparseMatrix<Rational, Eigen::ColMajor> ps = action_on_tensor(a, s, V).entries;
    for (std::size_t w = 0; w < nr; ++w) {
      for (std::size_t w2 = 0; w2 < ns; ++w2) {
        std::map<Eigen::Index, Rational> row;
        for (SparseRationalMatrix::InnerIterator it(pr.entries, static_cast<Eigen::Index>(w)); it; ++it)
          row[it.col() * static_cast<Eigen::Index>(ns) + static_cast<Eigen::Index>(w2)] += it.value();
        for (decltype(ps)::InnerIterator it(ps, static_cast<Eigen::Index>(w2)); it; ++it)
          row[static_cast<Eigen::Index>(w * ns) + it.row()] -= it.value();
        SparseRow<Rational> sr;
        for (auto& [k, v] : row)
          if (v != 0) sr.emplace_back(k, std::move(v));
        if (!sr.empty()) rows.push_back(std::move(sr));
      }
    }
  }
  // short rows first keeps the pivot rows sparse
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  SparseEchelon<Rational> ech;
  for (auto& row : rows) ech.add_row(std::move(row));
  return nr * ns - ech.rank();
}

std::size_t functor_rank(const SuperSpace& V, int r, int s, const SizeCap& cap) {
  cap.check(V, r, s);
  const auto ns = static_cast<Eigen::Index>(V.tensor_dim(s));
  SparseEchelon<Rational> ech;
  for (const auto& d : enumerate_basis(r, s)) {
    SuperMatrix f = functor_eval(Element(d, V.params()), V, cap);
    SparseRow<Rational> row;
    for (int i = 0; i < f.entries.outerSize(); ++i)
      for (SparseRationalMatrix::InnerIterator it(f.entries, i); it; ++it)
        if (it.value() != 0) row.emplace_back(it.row() * ns + it.col(), it.value());
    ech.add_row(std::move(row));
  }
  return ech.rank();
}

SchurWeylReport schur_weyl_report(const SuperSpace& V, int r, int s, const SizeCap& cap) {
  SchurWeylReport rep;
  rep.r = r;
  rep.s = s;
  rep.dim_b = basis_dimension(r, s);
  rep.rank = functor_rank(V, r, s, cap);
  rep.hom_dim = hom_space_dim(V, r, s, cap);
  rep.injective = BigInt(rep.rank) == rep.dim_b;
  rep.surjective = rep.rank == rep.hom_dim;
  const int m = V.m, n = V.n, k = r + s;
  if (V.parity == FormParity::Even) {
    rep.faithful_hypothesis = 2 * k <= 2 * m + n;
    rep.full_hypothesis = 2 * k < m * (n + 1);
  } else {
    rep.faithful_hypothesis = k <= m + n;
    rep.full_hypothesis = k <= m + n;
  }
  rep.consistent = (!rep.faithful_hypothesis || rep.injective) && (!rep.full_hypothesis || rep.surjective);
  return rep;
}

}  // namespace markedbrauer
