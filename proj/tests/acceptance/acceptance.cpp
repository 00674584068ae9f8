// Runs acceptance criteria 1-11 and prints one PASS/FAIL line per criterion.
// All checks are exact; the tolerance is zero everywhere.

#include "markedbrauer/algebra.hpp"
#include "markedbrauer/category.hpp"
#include "markedbrauer/partitions.hpp"
#include "markedbrauer/superrep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace markedbrauer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures with a short description of the first few.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (++failed_ <= 3) notes_ << (failed_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checked_ << " checks";
    if (failed_) s << ", " << failed_ << " failed: " << notes_.str();
    return {failed_ == 0, s.str()};
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::ostringstream notes_;
};

const Params kEven = Params::symbolic();
const Params kOdd = Params::odd();

BigInt double_factorial(int n) {
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

// 1. dim B_{r,s} = (r+s-1)!! by enumeration and closed form.
Outcome dimension_law() {
  Tally t;
  for (int r = 0; r <= 12; ++r)
    for (int s = 0; r + s <= 12; ++s) {
      const BigInt expected = (r + s) % 2 ? BigInt(0) : double_factorial(r + s - 1);
      const std::string at = "r=" + std::to_string(r) + " s=" + std::to_string(s);
      t.expect(basis_dimension(r, s) == expected, "closed form at " + at);
      t.expect(BigInt(enumerate_basis(r, s).size()) == expected, "enumeration at " + at);
    }
  return t.done("r+s <= 12");
}

// 2. The sixteen relations, with negative controls.
Outcome category_presentation() {
  Tally t;
  for (const Params& p : {kEven, kOdd}) {
    Report rep = verify_category_presentation(p);
    t.expect(rep.entries.size() == 16, "relation count " + p.to_string());
    for (const auto& e : rep.entries) t.expect(e.pass, e.name + " " + p.to_string());
  }
  for (CancellationConvention bad : {CancellationConvention{1, 1}, CancellationConvention{0, 0}}) {
    Report rep = verify_category_presentation(kOdd, bad);
    t.expect(!rep.all_pass(), "perturbed convention (" + std::to_string(bad.toward_exponent) + "," +
                                  std::to_string(bad.away_exponent) + ") still satisfies every relation");
  }
  return t.done("both eps, 2 negative controls");
}

// 3. All relation instances of B_r for r <= 5.
Outcome algebra_presentation() {
  Tally t;
  std::size_t instances = 0;
  for (const Params& p : {kEven, kOdd})
    for (int r = 2; r <= 5; ++r) {
      Report rep = verify_algebra_presentation(r, p);
      instances += rep.entries.size();
      for (const auto& e : rep.entries) t.expect(e.pass, e.name + " r=" + std::to_string(r));
    }
  return t.done(std::to_string(instances) + " relation instances");
}

// 4. Associativity and the super-interchange law.
Outcome associativity_interchange() {
  Tally t;
  for (const Params& p : {kEven, kOdd}) {
    std::vector<std::vector<std::vector<Diagram>>> basis(4, std::vector<std::vector<Diagram>>(4));
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) basis[a][b] = enumerate_basis(a, b);
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (int u = 0; u <= 3; ++u) {
          for (int v = 0; v <= 3; ++v) {
            for (const auto& a : basis[r][s]) {
              Element x(a, p);
              for (const auto& b : basis[s][u]) {
                Element xy = compose(x, Element(b, p));
                for (const auto& c : basis[u][v]) {
                  Element z(c, p);
                  t.expect(compose(xy, z) == compose(x, compose(Element(b, p), z)),
                           "exhaustive " + a.to_string() + b.to_string() + c.to_string());
                }
              }
            }
          }
        }
  }
  std::mt19937 rng(20261015);
  std::map<std::pair<int, int>, std::vector<Diagram>> cache;
  auto pick = [&](int r, int s) -> const Diagram& {
    auto& b = cache[{r, s}];
    if (b.empty()) b = enumerate_basis(r, s);
    return b[rng() % b.size()];
  };
  auto random_element = [&](int r, int s, const Params& p) {
    Element x(r, s, p);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) x.add(pick(r, s), Scalar(static_cast<long long>(rng() % 7) - 3));
    return x;
  };
  int triples = 0;
  for (const Params& p : {kEven, kOdd}) {
    while (triples < (p == kEven ? 5000 : 10000)) {
      int r = rng() % 5, s = rng() % 5, u = rng() % 5, v = rng() % 5;
      if ((r + s) % 2 || (s + u) % 2 || (u + v) % 2) continue;
      Element x = random_element(r, s, p), y = random_element(s, u, p), z = random_element(u, v, p);
      t.expect(compose(compose(x, y), z) == compose(x, compose(y, z)), "random triple");
      ++triples;
    }
  }
  int quadruples = 0;
  while (quadruples < 2000) {
    int a = rng() % 4, b = rng() % 4, c = rng() % 4, d = rng() % 4, e = rng() % 4, f = rng() % 4;
    if ((a + b) % 2 || (b + c) % 2 || (d + e) % 2 || (e + f) % 2) continue;
    Element x1(pick(a, b), kOdd), y1(pick(b, c), kOdd), x2(pick(d, e), kOdd), y2(pick(e, f), kOdd);
    const int k = *x2.degree() * *y1.degree();
    t.expect(compose(tensor(x1, x2), tensor(y1, y2)) ==
                 eps_pow(k, kOdd) * tensor(compose(x1, y1), compose(x2, y2)),
             "interchange");
    ++quadruples;
  }
  return t.done("exhaustive r,s,t,u <= 3, " + std::to_string(triples) + " random triples up to 4, " +
                std::to_string(quadruples) + " interchange quadruples");
}

// 5. Canonical factorization.
Outcome canonical_factorization() {
  Tally t;
  std::size_t diagrams = 0;
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 8; ++r)
      for (int s = 0; r + s <= 8; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          ++diagrams;
          t.expect(evaluate_word(factor_standard(d), p) == Element(d, p), d.to_string());
        }
  return t.done(std::to_string(diagrams) + " diagrams over both eps");
}

// 6. Transpose, bends and the anti-involutions.
Outcome transpose_involutions() {
  Tally t;
  std::mt19937 rng(6);
  for (const Params& p : {kEven, kOdd}) {
    const Scalar eps = eps_pow(1, p);
    t.expect(transpose(generator(Generator::I, p)) == generator(Generator::I, p), "I' = I");
    t.expect(transpose(generator(Generator::X, p)) == eps * generator(Generator::X, p), "X' = eps X");
    t.expect(transpose(generator(Generator::Cup, p)) == eps * generator(Generator::Cap, p), "U' = eps N");
    t.expect(transpose(generator(Generator::Cap, p)) == generator(Generator::Cup, p), "N' = U");
    for (int trial = 0; trial < 2000; ++trial) {
      int r = rng() % 5, s = rng() % 5, u = rng() % 5;
      if ((r + s) % 2 || (s + u) % 2) continue;
      auto b1 = enumerate_basis(r, s), b2 = enumerate_basis(s, u);
      Element x(b1[rng() % b1.size()], p), y(b2[rng() % b2.size()], p);
      const int k = *x.degree() * *y.degree();
      t.expect(transpose(compose(x, y)) == eps_pow(k, p) * compose(transpose(y), transpose(x)),
               "anti-homomorphism");
    }
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          Element x(d, p);
          for (int b = 0; b <= s; ++b) {
            t.expect(bend(bend(x, b, Corner::BottomRightUp), b, Corner::TopRightDown) == x, "right round trip");
            t.expect(bend(bend(x, b, Corner::BottomLeftUp), b, Corner::TopLeftDown) == x, "left round trip");
          }
          for (int a = 0; a <= r; ++a) {
            t.expect(bend(bend(x, a, Corner::TopRightDown), a, Corner::BottomRightUp) == x, "right round trip");
            t.expect(bend(bend(x, a, Corner::TopLeftDown), a, Corner::BottomLeftUp) == x, "left round trip");
          }
        }
    for (int r = 2; r <= 5; ++r)
      for (int i = 1; i < r; ++i) {
        const std::string at = " r=" + std::to_string(r) + " i=" + std::to_string(i);
        t.expect(anti_involution(algebra_e(r, i, p), AntiInvolution::Prime) == algebra_e(r, r - i, p), "e'" + at);
        t.expect(anti_involution(algebra_s(r, i, p), AntiInvolution::Prime) == eps * algebra_s(r, r - i, p),
                 "s'" + at);
        t.expect(anti_involution(algebra_e(r, i, p), AntiInvolution::Bullet) == eps * algebra_e(r, i, p),
                 "e bullet" + at);
        t.expect(anti_involution(algebra_s(r, i, p), AntiInvolution::Bullet) == eps * algebra_s(r, i, p),
                 "s bullet" + at);
      }
  }
  return t.done("generator images, random anti-homomorphism pairs, bends a,b <= 3, involutions r <= 5");
}

// 7. Inflation per layer, the graded involution and the dimension identity.
Outcome inflation() {
  Tally t;
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 4; ++r)
      for (int layer = r; layer >= 0; layer -= 2) {
        const std::string at = " r=" + std::to_string(r) + " t=" + std::to_string(layer) + " " + p.to_string();
        t.expect(verify_inflation_layer(r, layer, p).all_pass(), "multiplicative" + at);
        t.expect(graded_involution_layer_check(r, layer, p).all_pass(), "graded involution" + at);
      }
  for (int r = 0; r <= 6; ++r) {
    BigInt total = 0;
    for (int layer = r; layer >= 0; layer -= 2) {
      BigInt e = partial_matching_count(r, layer);
      BigInt fact = 1;
      for (int i = 2; i <= layer; ++i) fact *= i;
      total += e * e * fact;
    }
    t.expect(total == double_factorial(2 * r - 1), "dimension identity r=" + std::to_string(r));
  }
  return t.done("r <= 4 every layer both eps, dimension identity r <= 6");
}

// Brute-force p-regular partition count: filter all weakly decreasing sequences.
int brute_regular(int n, int p, int max_part) {
  if (n == 0) return 1;
  int total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part)
    for (int mult = 1; mult * part <= n && (p == 0 || mult < p); ++mult)
      total += brute_regular(n - mult * part, p, part - 1);
  return total;
}

// 8. Simple module counts.
Outcome simple_counts() {
  Tally t;
  t.expect(count_simples(2, 0, false).count == 3, "r=2 p=0 delta!=0");
  t.expect(count_simples(2, 0, true).count == 2, "r=2 p=0 delta=0");
  t.expect(count_simples(3, 0, true).count == 4, "r=3 p=0 delta=0");
  t.expect(count_simples(4, 0, false).count == 8, "r=4 p=0 delta!=0");
  for (bool zero : {false, true}) {
    const int expected = brute_regular(5, 3, 5) + brute_regular(3, 3, 3) + brute_regular(1, 3, 1);
    t.expect(count_simples(5, 3, zero).count == expected, "r=5 p=3 against brute force");
  }
  for (int r = 0; r <= 10; ++r)
    for (int p : {0, 3, 5, 7})
      for (bool zero : {false, true}) {
        int expected = 0;
        for (int w = r; w >= 0; w -= 2)
          if (!(w == 0 && zero && r % 2 == 0)) expected += brute_regular(w, p, w);
        t.expect(count_simples(r, p, zero).count == expected, "ladder r=" + std::to_string(r));
      }
  return t.done("spot values and ladder r <= 10");
}

// 9. Schur-Weyl comparisons at desk scale.
Outcome schur_weyl() {
  Tally t;
  auto p2 = build_superspace(2, 2, FormParity::Odd);
  auto rep = schur_weyl_report(p2, 2, 2);
  t.expect(rep.rank == 3 && rep.dim_b == 3, "p(2) rank(2,2) = 3");
  t.expect(rep.hom_dim == 3, "p(2) Hom(2,2) = 3");
  t.expect(rep.injective && rep.surjective, "p(2) (2,2) bijective");
  t.expect(rep.faithful_hypothesis && rep.full_hypothesis && rep.consistent, "p(2) hypotheses");
  t.expect(hom_space_dim(p2, 0, 3) == 0, "p(2) Hom(0,3) = 0");
  t.expect(hom_space_dim(p2, 1, 2) == 0, "p(2) Hom(1,2) = 0");
  auto o32 = build_superspace(3, 2, FormParity::Even);
  auto rep32 = schur_weyl_report(o32, 2, 2);
  t.expect(rep32.rank == 3 && rep32.injective, "osp(3|2) rank(2,2) = 3");
  t.expect(rep32.faithful_hypothesis && rep32.consistent, "osp(3|2) faithful bound 4 <= 4");
  auto o22 = build_superspace(2, 2, FormParity::Even);
  auto rep22 = schur_weyl_report(o22, 1, 1);
  t.expect(rep22.surjective && rep22.full_hypothesis && rep22.consistent, "osp(2|2) full at (1,1)");
  return t.done("p(2), osp(3|2), osp(2|2)");
}

// 10. Lie superalgebra dimensions.
Outcome g_dimensions() {
  Tally t;
  struct Case {
    const char* name;
    int m, n;
    FormParity parity;
    std::size_t dim;
  };
  for (auto c : {Case{"p(1)", 1, 1, FormParity::Odd, 2}, Case{"p(2)", 2, 2, FormParity::Odd, 8},
                 Case{"p(3)", 3, 3, FormParity::Odd, 18}, Case{"so(3)", 3, 0, FormParity::Even, 3},
                 Case{"sp(2)", 0, 2, FormParity::Even, 3}, Case{"osp(2|2)", 2, 2, FormParity::Even, 8}}) {
    auto V = build_superspace(c.m, c.n, c.parity);
    auto g = g_basis(V);
    t.expect(g.size() == c.dim, std::string(c.name) + " has dim " + std::to_string(g.size()));
    for (const auto& a : g) t.expect(preserves_form(a, V), std::string(c.name) + " basis element");
  }
  return t.done("p(1), p(2), p(3), so(3), sp(2), osp(2|2)");
}

// 11. Functoriality and grading.
Outcome functoriality() {
  Tally t;
  for (auto V : {build_superspace(2, 2, FormParity::Odd), build_superspace(3, 2, FormParity::Even)}) {
    const Params p = V.params();
    auto check_pairs = [&](int r, int s, int u) {
      for (const auto& a : enumerate_basis(r, s))
        for (const auto& b : enumerate_basis(s, u)) {
          Element x(a, p), y(b, p);
          t.expect(functor_eval(compose(x, y), V) == product(functor_eval(x, V), functor_eval(y, V)),
                   "F(xy) at " + a.to_string() + b.to_string());
        }
    };
    check_pairs(2, 2, 2);
    check_pairs(1, 3, 1);
    for (int r = 0; r <= 4; ++r)
      for (int s = 0; r + s <= 4; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          auto M = functor_eval(Element(d, p), V);
          t.expect(respects_grading(M, V) && M.degree == degree(d, p), "grading of F" + d.to_string());
        }
  }
  return t.done("B_{2,2} pairs and B_{1,3} x B_{3,1} on p(2) and osp(3|2), grading r+s <= 4");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "dimension law", 5, dimension_law},
      {2, "category presentation", 1, category_presentation},
      {3, "algebra presentation", 10, algebra_presentation},
      {4, "associativity and interchange", 60, associativity_interchange},
      {5, "canonical factorization", 30, canonical_factorization},
      {6, "transpose and involutions", 60, transpose_involutions},
      {7, "inflation", 120, inflation},
      {8, "simple counts", 1, simple_counts},
      {9, "Schur-Weyl comparisons", 120, schur_weyl},
      {10, "Lie superalgebra dimensions", 30, g_dimensions},
      {11, "functoriality", 120, functoriality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %2d %-30s %s  (%.2f s, budget %.0f s) %s%s\n", c.id, c.name, pass ? "PASS" : "FAIL",
                secs, c.budget_seconds, o.detail.c_str(), in_time ? "" : " [over budget]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
