#include "markedbrauer/errors.hpp"
#include "markedbrauer/superrep.hpp"

namespace markedbrauer {

namespace {

SuperMatrix from_triplets(int r, int s, int degree, Eigen::Index rows, Eigen::Index cols,
                          const std::vector<Eigen::Triplet<Rational>>& trip) {
  SuperMatrix out{r, s, degree, SparseRationalMatrix(rows, cols)};
  out.entries.setFromTriplets(trip.begin(), trip.end());
  out.entries.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  return out;
}

}  // namespace

StructureMaps structure_maps(const SuperSpace& V) {
  const int N = V.dim();
  const Eigen::Index NN = N * N;
  std::vector<Eigen::Triplet<Rational>> swap, eval, coeval;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      swap.emplace_back(i * N + j, j * N + i, (V.degrees[i] * V.degrees[j]) % 2 ? -1 : 1);
      if (V.gram(i, j) != 0) eval.emplace_back(i * N + j, 0, V.gram(i, j));
      // sum_i (-1)^{deg v_i} v_i (x) v_i^*
      if (V.dual(j, i) != 0)
        coeval.emplace_back(0, i * N + j, V.degrees[i] ? Rational(-V.dual(j, i)) : V.dual(j, i));
    }
  }
  const int b = V.form_degree();
  return {identity_matrix(V, 1), from_triplets(2, 2, 0, NN, NN, swap),
          from_triplets(2, 0, b, NN, 1, eval), from_triplets(0, 2, b, 1, NN, coeval)};
}

SuperMatrix functor_eval_word(const GeneratorWord& w, const SuperSpace& V) {
  check_word(w);
  if (w.empty()) return identity_matrix(V, 0);
  const StructureMaps maps = structure_maps(V);
  auto image = [&](Generator g) -> const SuperMatrix& {
    switch (g) {
      case Generator::I: return maps.id;
      case Generator::X: return maps.swap;
      case Generator::Cup: return maps.eval;
      case Generator::Cap: return maps.coeval;
    }
    return maps.id;
  };
  std::optional<SuperMatrix> out;
  for (const auto& layer : w) {
    SuperMatrix m = identity_matrix(V, 0);
    for (auto g : layer) m = graded_tensor(m, image(g), V);
    out = out ? product(*out, m) : m;
  }
  return *out;
}

SuperMatrix functor_eval(const Element& x, const SuperSpace& V, const SizeCap& cap) {
  const Params& p = x.params();
  if (p.eps != V.params().eps)
    throw DomainError("element has eps=" + std::to_string(p.eps) + " but the form gives eps=" +
                      std::to_string(V.params().eps));
  if (!p.symbolic_delta() && p.delta_value != V.m - V.n)
    throw DomainError("element has delta=" + std::to_string(p.delta_value) +
                      " but the superdimension is " + std::to_string(V.m - V.n));
  cap.check(V, x.r(), x.s());
  const auto rows = static_cast<Eigen::Index>(V.tensor_dim(x.r()));
  const auto cols = static_cast<Eigen::Index>(V.tensor_dim(x.s()));
  SuperMatrix out{x.r(), x.s(), x.degree(), SparseRationalMatrix(rows, cols)};
  for (const auto& [d, c] : x.terms()) {
    Rational v = scalar_eval(c, V.m - V.n, p);
    SuperMatrix fd = functor_eval_word(factor_standard(d), V);
    out.entries += v * fd.entries;
  }
  out.entries.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  return out;
}

}  // namespace markedbrauer
