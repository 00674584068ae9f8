#include "markedbrauer/errors.hpp"
#include "markedbrauer/superrep.hpp"

#include <cstdlib>
#include <limits>

namespace markedbrauer {

Params SuperSpace::params() const {
  return Params::specialized(m - n, parity == FormParity::Odd ? -1 : 1);
}

std::size_t SuperSpace::tensor_dim(int r) const {
  std::size_t out = 1;
  for (int i = 0; i < r; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(dim()))
      throw DomainError("tensor power too large");
    out *= static_cast<std::size_t>(dim());
  }
  return out;
}

std::vector<int> SuperSpace::word_degrees(int r) const {
  std::vector<int> out{0};
  for (int k = 0; k < r; ++k) {
    std::vector<int> next;
    next.reserve(out.size() * degrees.size());
    for (int d : out)
      for (int e : degrees) next.push_back((d + e) % 2);
    out = std::move(next);
  }
  return out;
}

std::vector<int> SuperSpace::word(std::size_t index, int r) const {
  std::vector<int> w(static_cast<std::size_t>(r));
  for (int k = r - 1; k >= 0; --k) {
    w[k] = static_cast<int>(index % static_cast<std::size_t>(dim()));
    index /= static_cast<std::size_t>(dim());
  }
  return w;
}

SuperSpace build_superspace(int m, int n, FormParity parity) {
  if (m < 0 || n < 0) throw DomainError("superspace dimensions must be nonnegative");
  if (m + n == 0) throw DomainError("superspace must be nonzero");
  SuperSpace V;
  V.m = m;
  V.n = n;
  V.parity = parity;
  const int N = m + n;
  V.gram = RationalMatrix::Zero(N, N);
  if (parity == FormParity::Even) {
    if (n % 2) throw DomainError("an even nondegenerate form needs n even, got n=" + std::to_string(n));
    const int p = n / 2;
    for (int i = 0; i < m; ++i) {
      V.degrees.push_back(0);
      V.labels.push_back("v" + std::to_string(i + 1));
      V.gram(i, i) = 1;
    }
    for (int i = 0; i < p; ++i) {
      V.degrees.push_back(1);
      V.labels.push_back("w" + std::to_string(i + 1));
    }
    for (int i = 0; i < p; ++i) {
      V.degrees.push_back(1);
      V.labels.push_back("w" + std::to_string(i + 1) + "*");
      V.gram(m + i, m + p + i) = 1;
      V.gram(m + p + i, m + i) = -1;
    }
  } else {
    if (m != n) throw DomainError("an odd nondegenerate form needs m = n");
    for (int i = 0; i < n; ++i) {
      V.degrees.push_back(0);
      V.labels.push_back("v" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
      V.degrees.push_back(1);
      V.labels.push_back("v" + std::to_string(i + 1) + "*");
      V.gram(i, n + i) = 1;
      V.gram(n + i, i) = 1;
    }
  }
  if (!exact_inverse(V.gram, V.dual)) throw DomainError("form is degenerate");
  return V;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
  if (r != o.r || s != o.s || entries.rows() != o.entries.rows() || entries.cols() != o.entries.cols())
    return false;
  SparseRationalMatrix diff = entries - o.entries;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseRationalMatrix::InnerIterator it(diff, k); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

SizeCap SizeCap::from_environment() {
  SizeCap cap;
  if (const char* env = std::getenv("MARKEDBRAUER_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw DomainError(std::string("MARKEDBRAUER_SIZE_CAP must be a positive integer, got '") + env + "'");
    cap.max_entries = static_cast<std::size_t>(v);
  }
  return cap;
}

void SizeCap::check(const SuperSpace& V, int r, int s) const {
  std::size_t needed = 1;
  for (int i = 0; i < r + s; ++i) {
    needed *= static_cast<std::size_t>(V.dim());
    if (needed > max_entries) {
      // report the true size when it fits, else the partial product
      std::size_t full = needed;
      for (int j = i + 1; j < r + s && full <= std::numeric_limits<std::size_t>::max() / 64; ++j)
        full *= static_cast<std::size_t>(V.dim());
      throw SizeCapExceeded(full, max_entries);
    }
  }
}

namespace {

void prune_zeros(SparseRationalMatrix& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
}

}  // namespace

SuperMatrix identity_matrix(const SuperSpace& V, int r) {
  const auto n = static_cast<Eigen::Index>(V.tensor_dim(r));
  SuperMatrix out{r, r, 0, SparseRationalMatrix(n, n)};
  out.entries.setIdentity();
  return out;
}

SuperMatrix product(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.s != b.r) throw DomainError("matrix product: arity mismatch");
  SuperMatrix out{a.r, b.s, std::nullopt, SparseRationalMatrix(a.entries * b.entries)};
  if (a.degree && b.degree) out.degree = (*a.degree + *b.degree) % 2;
  prune_zeros(out.entries);
  return out;
}

SuperMatrix graded_tensor(const SuperMatrix& f, const SuperMatrix& g, const SuperSpace& V) {
  if (!f.degree) throw DomainError("graded tensor needs a homogeneous left factor");
  const auto gdeg = V.word_degrees(g.r);
  const Eigen::Index rb = g.entries.rows(), cb = g.entries.cols();
  std::vector<Eigen::Triplet<Rational>> trip;
  trip.reserve(static_cast<std::size_t>(f.entries.nonZeros() * g.entries.nonZeros()));
  for (int i = 0; i < f.entries.outerSize(); ++i) {
    for (SparseRationalMatrix::InnerIterator a(f.entries, i); a; ++a) {
      for (int j = 0; j < g.entries.outerSize(); ++j) {
        const bool flip = (*f.degree * gdeg[j]) % 2 == 1;
        for (SparseRationalMatrix::InnerIterator b(g.entries, j); b; ++b) {
          Rational v = a.value() * b.value();
          trip.emplace_back(a.row() * rb + b.row(), a.col() * cb + b.col(), flip ? Rational(-v) : v);
        }
      }
    }
  }
  SuperMatrix out{f.r + g.r, f.s + g.s, std::nullopt,
                  SparseRationalMatrix(f.entries.rows() * rb, f.entries.cols() * cb)};
  out.entries.setFromTriplets(trip.begin(), trip.end());
  if (g.degree) out.degree = (*f.degree + *g.degree) % 2;
  return out;
}

bool respects_grading(const SuperMatrix& a, const SuperSpace& V) {
  const auto rd = V.word_degrees(a.r), cd = V.word_degrees(a.s);
  for (int i = 0; i < a.entries.outerSize(); ++i)
    for (SparseRationalMatrix::InnerIterator it(a.entries, i); it; ++it) {
      if (it.value() == 0) continue;
      if (!a.degree || (rd[it.row()] + cd[it.col()]) % 2 != *a.degree) return false;
    }
  return true;
}

std::vector<GElement> g_basis(const SuperSpace& V) {
  const int N = V.dim();
  std::vector<GElement> out;
  for (int d = 0; d < 2; ++d) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if ((V.degrees[i] + V.degrees[j] + d) % 2 == 0) idx.emplace_back(i, j);
    RationalMatrix sys = RationalMatrix::Zero(N * N, static_cast<Eigen::Index>(idx.size()));
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        const Eigen::Index row = a * N + b;
        const int sign = (d * V.degrees[a]) % 2 ? -1 : 1;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          auto [i, j] = idx[k];
          if (j == a) sys(row, k) += V.gram(i, b);
          if (j == b) sys(row, k) += sign * V.gram(a, i);
        }
      }
    }
    RationalMatrix ns = nullspace(sys);
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
      GElement g{RationalMatrix::Zero(N, N), d};
      for (std::size_t k = 0; k < idx.size(); ++k) g.matrix(idx[k].first, idx[k].second) = ns(k, c);
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool preserves_form(const GElement& a, const SuperSpace& V) {
  const int N = V.dim();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (a.matrix(i, j) != 0 && (V.degrees[i] + V.degrees[j] + a.degree) % 2) return false;
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      Rational lhs = 0;
      for (int i = 0; i < N; ++i) {
        lhs += a.matrix(i, x) * V.gram(i, y);
        Rational t = a.matrix(i, y) * V.gram(x, i);
        lhs += (a.degree * V.degrees[x]) % 2 ? Rational(-t) : t;
      }
      if (lhs != 0) return false;
    }
  }
  return true;
}

SuperMatrix action_on_tensor(const GElement& a, int r, const SuperSpace& V) {
  const int N = V.dim();
  const std::size_t n = V.tensor_dim(r);
  std::vector<std::vector<std::pair<int, Rational>>> col(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      if (a.matrix(i, j) != 0) col[j].emplace_back(i, a.matrix(i, j));
  std::vector<std::size_t> place(static_cast<std::size_t>(r));
  for (int k = r - 1, p = 1; k >= 0; --k, p *= N) place[k] = static_cast<std::size_t>(p);

  std::vector<Eigen::Triplet<Rational>> trip;
  for (std::size_t w = 0; w < n; ++w) {
    auto word = V.word(w, r);
    int before = 0;
    for (int k = 0; k < r; ++k) {
      const bool flip = (a.degree * before) % 2 == 1;
      for (const auto& [i, v] : col[word[k]]) {
        std::size_t w2 = w + place[k] * static_cast<std::size_t>(i) - place[k] * static_cast<std::size_t>(word[k]);
        trip.emplace_back(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(w2), flip ? Rational(-v) : v);
      }
      before += V.degrees[word[k]];
    }
  }
  SuperMatrix out{r, r, a.degree, SparseRationalMatrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  out.entries.setFromTriplets(trip.begin(), trip.end());
  prune_zeros(out.entries);
  return out;
}

}  // namespace markedbrauer
