#include "cli.hpp"

#include "markedbrauer/errors.hpp"
#include "markedbrauer/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace markedbrauer::cli {

namespace {

struct Options {
  int eps = 1;
  std::string delta;
  int r = 0, s = 0, m = 0, n = 0, p = 0;
  int t = -1;
  std::string parity = "even";
  std::vector<std::string> in;
  std::string out;
};

Params make_params(const Options& o) {
  Params p = o.eps == 1 ? Params::symbolic() : Params::odd();
  if (o.delta.empty() || o.delta == "symbolic") {
    if (o.eps == -1 && o.delta == "symbolic") throw DomainError("delta must be zero when eps = -1");
    return p;
  }
  if (o.delta == "zero") return Params::specialized(0, o.eps);
  long long d = 0;
  try {
    std::size_t used = 0;
    d = std::stoll(o.delta, &used);
    if (used != o.delta.size()) throw std::invalid_argument(o.delta);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--delta", "expected symbolic, zero or an integer, got '" + o.delta + "'");
  }
  p = Params::specialized(d, o.eps);
  p.validate();
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Element read_element(const std::string& path) { return parse_element(read_file(path)); }

SuperSpace make_space(const Options& o) {
  return build_superspace(o.m, o.n, o.parity == "odd" ? FormParity::Odd : FormParity::Even);
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << j.dump() << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainError("cannot write '" + o.out + "'");
  f << j.dump() << "\n";
}

void need_inputs(const Options& o, std::size_t k, const std::string& cmd) {
  if (o.in.size() != k)
    throw CLI::ValidationError("--in", cmd + " takes exactly " + std::to_string(k) + " --in file(s)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the marked Brauer category", "markedbrauer"};
  app.require_subcommand(1);
  Options o;

  auto add_eps = [&](CLI::App* c) {
    c->add_option("--eps", o.eps, "sign parameter")->check(CLI::IsMember({1, -1}));
    c->add_option("--delta", o.delta, "symbolic, zero or an integer");
  };
  auto add_rs = [&](CLI::App* c, bool need_s) {
    c->add_option("--r", o.r, "top vertices")->required()->check(CLI::Range(0, 64));
    if (need_s) c->add_option("--s", o.s, "bottom vertices")->required()->check(CLI::Range(0, 64));
  };
  auto add_space = [&](CLI::App* c) {
    c->add_option("--m", o.m, "even dimension")->required()->check(CLI::Range(0, 64));
    c->add_option("--n", o.n, "odd dimension")->required()->check(CLI::Range(0, 64));
    c->add_option("--parity", o.parity, "parity of the form")->check(CLI::IsMember({"even", "odd"}));
  };
  auto add_io = [&](CLI::App* c, std::size_t inputs) {
    if (inputs) c->add_option("--in", o.in, "Element file")->required();
    c->add_option("--out", o.out, "write the result here instead of stdout");
  };

  auto* dim = app.add_subcommand("dim", "dimension of B_{r,s}");
  add_rs(dim, true);
  add_io(dim, 0);
  auto* basis = app.add_subcommand("basis", "standard diagrams of B_{r,s} with their words");
  add_rs(basis, true);
  add_eps(basis);
  add_io(basis, 0);
  auto* comp = app.add_subcommand("compose", "first --in stacked above second --in");
  add_io(comp, 2);
  auto* tens = app.add_subcommand("tensor", "tensor product of two elements");
  add_io(tens, 2);
  auto* trans = app.add_subcommand("transpose", "transpose of an element");
  add_io(trans, 1);
  auto* ccat = app.add_subcommand("check-category", "verify the relations of the category");
  add_eps(ccat);
  add_io(ccat, 0);
  auto* calg = app.add_subcommand("check-algebra", "verify the relations of B_r");
  add_rs(calg, false);
  add_eps(calg);
  add_io(calg, 0);
  auto* infl = app.add_subcommand("inflation", "layer-by-layer inflation checks for B_r");
  add_rs(infl, false);
  add_eps(infl);
  infl->add_option("--t", o.t, "single layer (default: all)");
  add_io(infl, 0);
  auto* simp = app.add_subcommand("simples", "count simple modules of B_r");
  add_rs(simp, false);
  simp->add_option("--p", o.p, "characteristic, 0 or an odd prime");
  simp->add_option("--delta", o.delta, "symbolic, zero or an integer");
  add_io(simp, 0);
  auto* repg = app.add_subcommand("rep-g", "basis of the Lie superalgebra preserving the form");
  add_space(repg);
  add_io(repg, 0);
  auto* repf = app.add_subcommand("rep-functor", "matrix of F on an element");
  add_space(repf);
  add_io(repf, 1);
  auto* repsw = app.add_subcommand("rep-schur-weyl", "rank and Hom dimension comparison");
  add_space(repsw);
  add_rs(repsw, true);
  add_io(repsw, 0);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (dim->parsed()) {
      emit(Json{{"dim", bigint_to_json(basis_dimension(o.r, o.s))}}, o, out);
      return 0;
    }
    if (basis->parsed()) {
      Params p = make_params(o);
      Json diagrams = Json::array();
      for (const auto& d : enumerate_basis(o.r, o.s)) {
        Json pairs = Json::array();
        for (auto [a, b] : d.pairs()) pairs.push_back({vertex_name(a, d.r()), vertex_name(b, d.r())});
        diagrams.push_back({{"pairs", pairs}, {"degree", degree(d, p)}, {"word", word_to_json(factor_standard(d))}});
      }
      emit(Json{{"r", o.r}, {"s", o.s}, {"dim", diagrams.size()}, {"diagrams", diagrams}}, o, out);
      return 0;
    }
    if (comp->parsed()) {
      need_inputs(o, 2, "compose");
      emit(element_to_json(compose(read_element(o.in[0]), read_element(o.in[1]))), o, out);
      return 0;
    }
    if (tens->parsed()) {
      need_inputs(o, 2, "tensor");
      emit(element_to_json(tensor(read_element(o.in[0]), read_element(o.in[1]))), o, out);
      return 0;
    }
    if (trans->parsed()) {
      need_inputs(o, 1, "transpose");
      emit(element_to_json(transpose(read_element(o.in[0]))), o, out);
      return 0;
    }
    if (ccat->parsed()) {
      Report rep = verify_category_presentation(make_params(o));
      emit(report_to_json(rep), o, out);
      return rep.all_pass() ? 0 : 1;
    }
    if (calg->parsed()) {
      Report rep = verify_algebra_presentation(o.r, make_params(o));
      emit(report_to_json(rep), o, out);
      return rep.all_pass() ? 0 : 1;
    }
    if (infl->parsed()) {
      Params p = make_params(o);
      Json layers = Json::array();
      bool ok = true;
      for (int t = o.r; t >= 0; t -= 2) {
        if (o.t >= 0 && t != o.t) continue;
        Report mult = verify_inflation_layer(o.r, t, p);
        Report inv = graded_involution_layer_check(o.r, t, p);
        ok = ok && mult.all_pass() && inv.all_pass();
        long long e = enumerate_partial_matchings(o.r, t).size();
        long long fact = 1;
        for (int i = 2; i <= t; ++i) fact *= i;
        layers.push_back({{"t", t},
                          {"E_size", e},
                          {"layer_dim", e * e * fact},
                          {"multiplication", report_to_json(mult)},
                          {"graded_involution", report_to_json(inv)}});
      }
      if (o.t >= 0 && layers.empty())
        throw DomainError("layer t=" + std::to_string(o.t) + " invalid for r=" + std::to_string(o.r));
      emit(Json{{"r", o.r}, {"pass", ok}, {"layers", layers}}, o, out);
      return ok ? 0 : 1;
    }
    if (simp->parsed()) {
      bool zero = false;
      if (o.delta == "zero") zero = true;
      else if (!o.delta.empty() && o.delta != "symbolic") zero = make_params(o).delta_value == 0;
      SimpleCount c = count_simples(o.r, o.p, zero);
      Json weights = Json::array();
      for (const auto& w : c.weights) {
        Json parts = Json::array();
        for (const auto& l : w.partitions) parts.push_back(partition_to_json(l));
        weights.push_back({{"weight", w.weight}, {"partitions", parts}});
      }
      emit(Json{{"count", c.count}, {"r", o.r}, {"p", o.p}, {"delta_is_zero", zero}, {"weights", weights}}, o, out);
      return 0;
    }
    if (repg->parsed()) {
      SuperSpace V = make_space(o);
      auto g = g_basis(V);
      Json basis_json = Json::array();
      int even = 0;
      for (const auto& a : g) {
        if (a.degree == 0) ++even;
        basis_json.push_back(gelement_to_json(a, V));
      }
      emit(Json{{"space", superspace_to_json(V)},
                {"dim", g.size()},
                {"dim_even", even},
                {"dim_odd", static_cast<int>(g.size()) - even},
                {"basis", basis_json}},
           o, out);
      return 0;
    }
    if (repf->parsed()) {
      need_inputs(o, 1, "rep-functor");
      SuperSpace V = make_space(o);
      Element x = read_element(o.in[0]);
      emit(supermatrix_to_json(functor_eval(x, V, SizeCap::from_environment()), V), o, out);
      return 0;
    }
    if (repsw->parsed()) {
      SuperSpace V = make_space(o);
      SchurWeylReport rep = schur_weyl_report(V, o.r, o.s, SizeCap::from_environment());
      emit(schur_weyl_to_json(rep), o, out);
      return rep.consistent ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace markedbrauer::cli
