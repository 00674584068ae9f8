#include "markedbrauer/algebra.hpp"

#include "markedbrauer/errors.hpp"

#include <functional>
#include <numeric>

namespace markedbrauer {

namespace {

void check_index(int r, int i) {
  if (i < 1 || i >= r)
    throw DomainError("generator index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(r - 1));
}

}  // namespace

Element algebra_e(int r, int i, const Params& p) {
  check_index(r, i);
  auto layer = [&](Generator g) {
    return tensor(tensor(identity(i - 1, p), generator(g, p)), identity(r - i - 1, p));
  };
  return compose(layer(Generator::Cup), layer(Generator::Cap));
}

Element algebra_s(int r, int i, const Params& p) {
  check_index(r, i);
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[i]);
  return Element(permutation_diagram(perm), p);
}

Report verify_algebra_presentation(int r, const Params& p) {
  Report rep;
  rep.title = "algebra presentation B_" + std::to_string(r) + " (" + p.to_string() + ")";
  if (r < 2) return rep;
  std::vector<Element> e, s;
  for (int i = 1; i < r; ++i) {
    e.push_back(algebra_e(r, i, p));
    s.push_back(algebra_s(r, i, p));
  }
  auto E = [&](int i) { return e[i - 1]; };
  auto S = [&](int i) { return s[i - 1]; };
  auto M = [](std::initializer_list<Element> xs) {
    auto it = xs.begin();
    Element acc = *it;
    for (++it; it != xs.end(); ++it) acc = compose(acc, *it);
    return acc;
  };
  const Scalar eps = eps_pow(1, p);
  const Element one = identity(r, p);
  auto name = [](std::string f, int i, int j = 0) {
    auto sub = [](std::string s, const std::string& key, int v) {
      for (std::size_t pos; (pos = s.find(key)) != std::string::npos;)
        s.replace(pos, key.size(), std::to_string(v));
      return s;
    };
    f = sub(f, "{i+1}", i + 1);
    f = sub(f, "{i}", i);
    return sub(f, "{j}", j);
  };
  auto check = [&](const std::string& n, const Element& a, const Element& b) {
    bool ok = a == b;
    rep.add(n, ok, ok ? "" : "lhs = " + a.to_string() + ", rhs = " + b.to_string());
  };

  for (int i = 1; i < r; ++i) {
    check(name("s{i}^2 = 1", i), M({S(i), S(i)}), one);
    check(name("e{i} s{i} = eps e{i}", i), M({E(i), S(i)}), eps * E(i));
    check(name("e{i}^2 = delta e{i}", i), M({E(i), E(i)}), delta_scalar(p) * E(i));
    check(name("s{i} e{i} = e{i}", i), M({S(i), E(i)}), E(i));
  }
  for (int i = 1; i < r; ++i) {
    for (int j = 1; j < r; ++j) {
      if (j == i || j == i + 1 || j == i - 1) continue;
      check(name("s{i} s{j} = s{j} s{i}", i, j), M({S(i), S(j)}), M({S(j), S(i)}));
      check(name("s{i} e{j} = e{j} s{i}", i, j), M({S(i), E(j)}), M({E(j), S(i)}));
      check(name("e{i} e{j} = e{j} e{i}", i, j), M({E(i), E(j)}), M({E(j), E(i)}));
    }
  }
  for (int i = 1; i + 1 < r; ++i) {
    check(name("s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", i), M({S(i), S(i + 1), S(i)}),
          M({S(i + 1), S(i), S(i + 1)}));
    check(name("s{i} e{i+1} e{i} = eps s{i+1} e{i}", i), M({S(i), E(i + 1), E(i)}),
          eps * M({S(i + 1), E(i)}));
    check(name("e{i} e{i+1} e{i} = eps e{i}", i), M({E(i), E(i + 1), E(i)}), eps * E(i));
    check(name("e{i+1} e{i} e{i+1} = eps e{i+1}", i), M({E(i + 1), E(i), E(i + 1)}),
          eps * E(i + 1));
    check(name("e{i+1} e{i} s{i+1} = eps e{i+1} s{i}", i), M({E(i + 1), E(i), S(i + 1)}),
          eps * M({E(i + 1), S(i)}));
  }
  return rep;
}

Element anti_involution(const Element& x, AntiInvolution which) {
  if (x.r() != x.s()) throw DomainError("anti-involutions act on square elements only");
  Element xt = transpose(x);
  if (which == AntiInvolution::Prime) return xt;
  Element w = w_element(x.r(), x.params());
  return compose(compose(w, xt), w);
}

int through_count(const Diagram& d) { return d.through_count(); }

Element filtration_project(const Element& x, int t) {
  if (x.r() != x.s()) throw DomainError("filtration is defined on B_r = B_{r,r}");
  if (t < 0 || t > x.r() || (x.r() - t) % 2)
    throw DomainError("layer t=" + std::to_string(t) + " invalid for r=" + std::to_string(x.r()));
  Element out(x.r(), x.s(), x.params());
  for (const auto& [d, c] : x.terms())
    if (d.through_count() == t) out.add(d, c);
  return out;
}

}  // namespace markedbrauer
