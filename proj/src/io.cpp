#include "markedbrauer/io.hpp"

#include "markedbrauer/errors.hpp"

#include <limits>

namespace markedbrauer {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

namespace {

BigInt bigint_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(where, "expected an integer");
}

int vertex_from_name(const Json& j, int r, int s, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "vertex names are strings such as \"t1\" or \"b2\"");
  const std::string name = j.get<std::string>();
  if (name.size() < 2 || (name[0] != 't' && name[0] != 'b'))
    throw ParseError(where, "bad vertex name '" + name + "'");
  long long idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || idx > 1000000)
      throw ParseError(where, "bad vertex name '" + name + "'");
    idx = idx * 10 + (name[i] - '0');
  }
  const int limit = name[0] == 't' ? r : s;
  if (idx < 1 || idx > limit)
    throw ParseError(where, "vertex '" + name + "' out of range (r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ")");
  return name[0] == 't' ? static_cast<int>(idx - 1) : r + static_cast<int>(idx - 1);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key, "expected an integer");
  long long x = v.get<long long>();
  if (x < 0 || x > 1000) throw ParseError(where + "." + key, "out of range");
  return static_cast<int>(x);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed structured text");
  }
}

}  // namespace

Json scalar_to_json(const Scalar& c) {
  Json out = Json::array();
  for (const auto& v : c.coefficients()) out.push_back(bigint_to_json(v));
  return out;
}

Json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) return bigint_to_json(BigInt(numerator(q)));
  return q.str();
}

Json element_to_json(const Element& x) {
  const Params& p = x.params();
  Json out;
  out["r"] = x.r();
  out["s"] = x.s();
  out["eps"] = p.eps;
  if (p.eps == 1 && !p.symbolic_delta()) out["delta"] = p.delta_value;
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) {
    Json pairs = Json::array();
    for (auto [a, b] : d.pairs()) pairs.push_back({vertex_name(a, d.r()), vertex_name(b, d.r())});
    terms.push_back({{"coeff", scalar_to_json(c)}, {"pairs", pairs}});
  }
  out["terms"] = terms;
  return out;
}

Element element_from_json(const Json& j) {
  const int r = int_field(j, "r", "$");
  const int s = int_field(j, "s", "$");
  const Json& e = field(j, "eps", "$");
  if (!e.is_number_integer() || (e.get<long long>() != 1 && e.get<long long>() != -1))
    throw ParseError("$.eps", "eps must be 1 or -1");
  Params p = e.get<int>() == 1 ? Params::symbolic() : Params::odd();
  if (auto it = j.find("delta"); it != j.end()) {
    if (it->is_string() && it->get<std::string>() == "symbolic") {
      if (p.eps == -1) throw ParseError("$.delta", "delta must be 0 when eps = -1");
    } else if (it->is_number_integer()) {
      long long d = it->get<long long>();
      if (p.eps == -1 && d != 0) throw ParseError("$.delta", "delta must be 0 when eps = -1");
      p = Params::specialized(d, p.eps);
    } else {
      throw ParseError("$.delta", "expected \"symbolic\" or an integer");
    }
  }
  Element out(r, s, p);
  const Json& terms = field(j, "terms", "$");
  if (!terms.is_array()) throw ParseError("$.terms", "expected a list");
  if ((r + s) % 2 && !terms.empty())
    throw ParseError("$.terms", "r + s is odd, so there are no diagrams");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "$.terms[" + std::to_string(t) + "]";
    const Json& coeff = field(terms[t], "coeff", where);
    if (!coeff.is_array()) throw ParseError(where + ".coeff", "expected an integer list");
    std::vector<BigInt> cs;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      cs.push_back(bigint_from_json(coeff[k], where + ".coeff[" + std::to_string(k) + "]"));
    Scalar c(std::move(cs));
    if (!c.is_constant() && !p.symbolic_delta()) {
      // specialize at the fixed delta
      c = Scalar(BigInt(numerator(c.evaluate(BigInt(p.delta_value)))));
    }
    const Json& pairs = field(terms[t], "pairs", where);
    if (!pairs.is_array()) throw ParseError(where + ".pairs", "expected a list of pairs");
    std::vector<int> partner(static_cast<std::size_t>(r + s), -1);
    std::vector<VertexPair> vp;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string pw = where + ".pairs[" + std::to_string(k) + "]";
      if (!pairs[k].is_array() || pairs[k].size() != 2) throw ParseError(pw, "a pair is a 2-list of vertex names");
      int a = vertex_from_name(pairs[k][0], r, s, pw + "[0]");
      int b = vertex_from_name(pairs[k][1], r, s, pw + "[1]");
      if (a == b) throw ParseError(pw, "vertex paired with itself");
      for (int v : {a, b})
        if (partner[v] != -1) throw ParseError(pw, "vertex '" + vertex_name(v, r) + "' repeated");
      partner[a] = b;
      partner[b] = a;
      vp.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (int v = 0; v < r + s; ++v)
      if (partner[v] == -1) throw ParseError(where + ".pairs", "vertex '" + vertex_name(v, r) + "' is unmatched");
    out.add(Diagram(r, s, std::move(vp)), c);
  }
  return out;
}

std::string serialize(const Element& x) { return element_to_json(x).dump(); }

Element parse_element(const std::string& text) { return element_from_json(parse_text(text)); }

Json word_to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const auto& layer : w) {
    Json l = Json::array();
    for (auto g : layer) {
      switch (g) {
        case Generator::I: l.push_back("I"); break;
        case Generator::X: l.push_back("X"); break;
        case Generator::Cup: l.push_back("U"); break;
        case Generator::Cap: l.push_back("N"); break;
      }
    }
    out.push_back(l);
  }
  return out;
}

GeneratorWord word_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("$", "a word is a list of layers");
  GeneratorWord w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "$[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw ParseError(where, "a layer is a list of symbols");
    GeneratorLayer layer;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const Json& sym = j[i][k];
      const std::string sw = where + "[" + std::to_string(k) + "]";
      if (!sym.is_string()) throw ParseError(sw, "expected one of I, X, U, N");
      const std::string v = sym.get<std::string>();
      if (v == "I") layer.push_back(Generator::I);
      else if (v == "X") layer.push_back(Generator::X);
      else if (v == "U") layer.push_back(Generator::Cup);
      else if (v == "N") layer.push_back(Generator::Cap);
      else throw ParseError(sw, "unknown symbol '" + v + "'");
    }
    w.push_back(std::move(layer));
  }
  return w;
}

GeneratorWord parse_word(const std::string& text) { return word_from_json(parse_text(text)); }

Json report_to_json(const Report& rep) {
  Json out;
  out["title"] = rep.title;
  out["pass"] = rep.all_pass();
  out["checked"] = rep.entries.size();
  out["failed"] = rep.failures();
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j{{"name", e.name}, {"pass", e.pass}};
    if (!e.detail.empty()) j["detail"] = e.detail;
    entries.push_back(j);
  }
  out["entries"] = entries;
  return out;
}

Json supermatrix_to_json(const SuperMatrix& m, const SuperSpace& V) {
  auto word_json = [&](std::size_t idx, int len) {
    Json w = Json::array();
    for (int i : V.word(idx, len)) w.push_back(V.labels[i]);
    return w;
  };
  Json out;
  out["r"] = m.r;
  out["s"] = m.s;
  if (m.degree) out["degree"] = *m.degree;
  else out["degree"] = nullptr;
  out["rows"] = m.entries.rows();
  out["cols"] = m.entries.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.entries.outerSize(); ++i)
    for (SparseRationalMatrix::InnerIterator it(m.entries, i); it; ++it)
      if (it.value() != 0)
        entries.push_back({{"row", word_json(static_cast<std::size_t>(it.row()), m.r)},
                           {"col", word_json(static_cast<std::size_t>(it.col()), m.s)},
                           {"value", rational_to_json(it.value())}});
  out["entries"] = entries;
  return out;
}

Json gelement_to_json(const GElement& g, const SuperSpace& V) {
  Json out;
  out["degree"] = g.degree;
  Json entries = Json::array();
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j)
      if (g.matrix(i, j) != 0)
        entries.push_back({{"row", V.labels[i]}, {"col", V.labels[j]}, {"value", rational_to_json(g.matrix(i, j))}});
  out["entries"] = entries;
  return out;
}

Json superspace_to_json(const SuperSpace& V) {
  Json out;
  out["m"] = V.m;
  out["n"] = V.n;
  out["parity"] = V.parity == FormParity::Odd ? "odd" : "even";
  out["basis"] = V.labels;
  out["degrees"] = V.degrees;
  Json gram = Json::array();
  for (int i = 0; i < V.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < V.dim(); ++j) row.push_back(rational_to_json(V.gram(i, j)));
    gram.push_back(row);
  }
  out["gram"] = gram;
  return out;
}

Json schur_weyl_to_json(const SchurWeylReport& rep) {
  Json out;
  out["r"] = rep.r;
  out["s"] = rep.s;
  out["dim_B"] = bigint_to_json(rep.dim_b);
  out["functor_rank"] = rep.rank;
  out["hom_dim"] = rep.hom_dim;
  out["injective"] = rep.injective;
  out["surjective"] = rep.surjective;
  out["faithful_hypothesis"] = rep.faithful_hypothesis;
  out["full_hypothesis"] = rep.full_hypothesis;
  out["consistent"] = rep.consistent;
  return out;
}

Json partition_to_json(const Partition& p) { return Json(p); }

Json inflation_triple_to_json(const InflationTriple& t) {
  auto graph = [](const PartialMatching& m) {
    Json g = Json::array();
    for (auto [a, b] : m.edges) g.push_back({a + 1, b + 1});
    return g;
  };
  Json sigma = Json::array();
  for (int v : t.sigma) sigma.push_back(v + 1);
  return {{"e", graph(t.e)}, {"f", graph(t.f)}, {"sigma", sigma}};
}

}  // namespace markedbrauer
