#include "bqs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "bqs/errors.hpp"
#include "bqs/fundamental.hpp"
#include "bqs/groebner.hpp"
#include "bqs/hilbert.hpp"
#include "bqs/json_io.hpp"
#include "bqs/oracle.hpp"
#include "bqs/paths.hpp"
#include "bqs/text.hpp"
#include "bqs/trees.hpp"

namespace bqs {

namespace {

// Bad literals on the command line are usage errors, not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int p = 2;
  int n = 0;
  std::string vec;
  std::string comp;
  std::string a;
  std::string b;
  std::string expr;
  std::string poly_file;
  std::string out_file;
  std::string tree;
  std::string path;
  bool json = false;
  bool oracle = false;
  bool as_f = false;
  int composition_degree = 3;
  int multiplier_degree = 2;
};

PVector vector_arg(const std::string& text, int p, const char* flag) {
  try {
    return parse_vector_literal(text, p);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

PComposition composition_arg(const std::string& text, int p, const char* flag) {
  PVector v = vector_arg(text, p, flag);
  if (!is_p_composition(v)) {
    throw UsageError(std::string("--") + flag + ": (" + text + ") is not a " + std::to_string(p) +
                     "-composition");
  }
  return PComposition(std::move(v));
}

Polynomial polynomial_arg(const Options& o) {
  if (o.expr.empty() == o.poly_file.empty()) {
    throw UsageError("exactly one of --expr and --poly is required");
  }
  try {
    if (!o.expr.empty()) return parse_polynomial(o.expr, Alphabet{o.p, o.n});
    std::ifstream in(o.poly_file);
    if (!in) throw UsageError("cannot read " + o.poly_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      Json doc;
      try {
        doc = Json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
      }
      Polynomial f = polynomial_from_json(doc);
      if (f.alphabet() != Alphabet{o.p, o.n}) {
        throw DimensionError("polynomial file is over p=" + std::to_string(f.alphabet().p) +
                             ", n=" + std::to_string(f.alphabet().n));
      }
      return f;
    }
    return parse_polynomial(text, Alphabet{o.p, o.n});
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::string text_of(const FExpansion& expansion) {
  if (expansion.empty()) return "0\n";
  std::string out;
  for (const auto& t : expansion) {
    out += to_string(t.coefficient) + " F(" + to_string(t.composition.vector()) + ")\n";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_f(const Options& o) {
  const Polynomial f = fundamental(composition_arg(o.comp, o.p, "comp"), Alphabet{o.p, o.n});
  return o.json ? dump(to_json(f)) : to_string(f) + "\n";
}

std::string cmd_g(const Options& o) {
  const PVector v = vector_arg(o.vec, o.p, "vec");
  GFamily family(Alphabet{o.p, o.n});
  const Polynomial& g = family.element(v);
  if (o.json) {
    Json doc = to_json(g);
    doc["f_combination"] = to_json(family.combination(v));
    return dump(doc);
  }
  if (!o.as_f) return to_string(g) + "\n";
  std::string out;
  for (const auto& t : family.combination(v)) {
    out += std::string(t.sign < 0 ? "-" : "+") + " " +
           (t.multiplier.is_one() ? std::string("1") : to_string(Polynomial(t.multiplier))) + " F(" +
           to_string(t.composition.vector()) + ")\n";
  }
  return out;
}

std::string cmd_nf(const Options& o) { return dump(to_json(normal_form(polynomial_arg(o)))); }

std::string cmd_dim(const Options& o) {
  std::uint64_t dim = 0;
  if (o.oracle) {
    for (const auto& [deg, d] : oracle_quotient_dim(o.n, o.p, o.n)) dim += d;
  } else {
    dim = enumerate_p_dyck(o.n, o.p).size();
  }
  if (!o.json) return std::to_string(dim) + "\n";
  return dump(Json{{"n", o.n},
                   {"p", o.p},
                   {"method", o.oracle ? "oracle" : "enumeration"},
                   {"dim", std::to_string(dim)},
                   {"formula", to_string(quotient_dim_formula(o.n, o.p))}});
}

std::string cmd_hilbert(const Options& o) {
  return dump(to_json(o.oracle ? hilbert_by_oracle(o.n, o.p) : hilbert_by_enumeration(o.n, o.p)));
}

std::string cmd_basis(const Options& o) {
  const Alphabet alphabet{o.p, o.n};
  const auto vectors = enumerate_p_dyck(o.n, o.p);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& v : vectors) rows.push_back(v.entries());
    return dump(rows);
  }
  std::string out;
  for (const auto& v : vectors) out += to_string(Polynomial(v.monomial(alphabet))) + "\n";
  return out;
}

std::string cmd_minimal(const Options& o) {
  const auto basis = minimal_groebner_basis(o.n, o.p);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& b : basis) {
      rows.push_back(Json{{"index", b.index.entries()}, {"polynomial", to_json(b.polynomial)}});
    }
    return dump(rows);
  }
  std::string out;
  for (const auto& b : basis) {
    out += "G(" + to_string(b.index) + ") = " + to_string(b.polynomial) + "\n";
  }
  return out;
}

std::string cmd_verify(const Options& o, int& status) {
  GroebnerCheckOptions options;
  options.composition_degree = o.composition_degree;
  options.multiplier_degree = o.multiplier_degree;
  const GroebnerReport report = verify_groebner(o.n, o.p, options);
  status = report.passed ? 0 : 1;
  if (o.json) return dump(to_json(report));
  std::string out = report.passed ? "passed" : (report.partial ? "incomplete" : "failed");
  out += " basis=" + std::to_string(report.basis_size) +
         " pairs=" + std::to_string(report.pairs_checked) +
         " generators=" + std::to_string(report.generators_checked) + "\n";
  if (!report.counterexample.empty()) out += report.counterexample + "\n";
  return out;
}

std::string cmd_trees(const Options& o) {
  auto line = [&](const PAryTree& t) {
    const LatticePath path = tree_to_path(t, o.p);
    return to_string(t) + " " + to_string(path) + " " + to_string(tree_to_dyck_vector(t, o.p));
  };
  if (!o.tree.empty()) {
    PAryTree t;
    try {
      t = parse_tree(o.tree);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--tree: ") + e.what());
    }
    return line(t) + "\n";
  }
  if (!o.path.empty()) {
    LatticePath path{o.p, {}};
    for (char c : o.path) {
      if (c == 'H') path.steps.push_back(Step::Horizontal);
      else if (c == 'V') path.steps.push_back(Step::Vertical);
      else throw UsageError("--path: expected only H and V");
    }
    return to_string(path_to_tree(path, o.p)) + "\n";
  }
  if (o.n < 0) throw UsageError("--n is required");
  const auto trees = enumerate_trees(o.n, o.p);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& t : trees) {
      rows.push_back(Json{{"tree", to_string(t)},
                          {"path", to_string(tree_to_path(t, o.p))},
                          {"dyck", tree_to_dyck_vector(t, o.p).entries()}});
    }
    return dump(rows);
  }
  std::string out;
  for (const auto& t : trees) out += line(t) + "\n";
  return out;
}

std::string cmd_expand(const Options& o) {
  const FExpansion e = expand_in_f_basis(polynomial_arg(o));
  return o.json ? dump(to_json(e)) : text_of(e);
}

std::string cmd_product(const Options& o) {
  const FExpansion e = product_in_f_basis(composition_arg(o.a, o.p, "a"),
                                          composition_arg(o.b, o.p, "b"), o.n);
  return o.json ? dump(to_json(e)) : text_of(e);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for p-quasisymmetric ideals and their quotients", "bqs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool need_n) {
    sub->add_option("--p", o.p, "number of alphabets")->check(CLI::Range(1, 64));
    auto* n = sub->add_option("--n", o.n, "variables per alphabet")->check(CLI::Range(0, 64));
    if (need_n) n->required();
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out_file, "write the result to FILE");
  };
  auto poly_input = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "polynomial in text form");
    sub->add_option("--poly", o.poly_file, "file holding a polynomial (text or JSON)");
  };

  auto* f = app.add_subcommand("f", "fundamental polynomial F_c");
  common(f, true);
  f->add_option("--comp", o.comp, "composition, flat comma list")->required();

  auto* g = app.add_subcommand("g", "G_v");
  common(g, true);
  g->add_option("--vec", o.vec, "transdiagonal vector, flat comma list")->required();
  g->add_flag("--as-f", o.as_f, "print G_v as a signed sum of monomial * F_c");

  auto* nf = app.add_subcommand("nf", "normal form modulo the ideal (JSON)");
  common(nf, true);
  poly_input(nf);

  auto* dim = app.add_subcommand("dim", "dimension of the quotient");
  common(dim, true);
  dim->add_flag("--oracle", o.oracle, "use the linear-algebra oracle");

  auto* hilbert = app.add_subcommand("hilbert", "multigraded Hilbert table (JSON)");
  common(hilbert, true);
  hilbert->add_flag("--oracle", o.oracle, "use the linear-algebra oracle");

  auto* basis = app.add_subcommand("basis", "p-Dyck monomial basis of the quotient");
  common(basis, true);

  auto* minimal = app.add_subcommand("minimal", "minimal Groebner basis");
  common(minimal, true);

  auto* verify = app.add_subcommand("verify-groebner", "check the Groebner property");
  common(verify, true);
  verify->add_option("--composition-degree", o.composition_degree)->check(CLI::Range(1, 16));
  verify->add_option("--multiplier-degree", o.multiplier_degree)->check(CLI::Range(0, 16));

  auto* trees = app.add_subcommand("trees", "trees, paths and p-Dyck vectors");
  o.n = -1;
  common(trees, false);
  trees->add_option("--tree", o.tree, "convert one tree");
  trees->add_option("--path", o.path, "convert one path (H/V string)");

  auto* expand = app.add_subcommand("expand", "expand a quasisymmetric polynomial in the F basis");
  common(expand, true);
  poly_input(expand);

  auto* product = app.add_subcommand("product", "F_a * F_b in the F basis");
  common(product, false);
  product->add_option("--a", o.a)->required();
  product->add_option("--b", o.b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "bqs: " << e.what() << "\n";
    return 2;
  }
  if (product->parsed() && o.n < 0) o.n = 0;

  std::string result;
  int status = 0;
  try {
    if (f->parsed()) result = cmd_f(o);
    else if (g->parsed()) result = cmd_g(o);
    else if (nf->parsed()) result = cmd_nf(o);
    else if (dim->parsed()) result = cmd_dim(o);
    else if (hilbert->parsed()) result = cmd_hilbert(o);
    else if (basis->parsed()) result = cmd_basis(o);
    else if (minimal->parsed()) result = cmd_minimal(o);
    else if (verify->parsed()) result = cmd_verify(o, status);
    else if (trees->parsed()) result = cmd_trees(o);
    else if (expand->parsed()) result = cmd_expand(o);
    else if (product->parsed()) result = cmd_product(o);
  } catch (const UsageError& e) {
    err << "bqs: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "bqs: " << e.what() << "\n";
    return 1;
  }

  if (status != 0) err << "bqs: the Groebner check did not pass\n";
  if (o.out_file.empty()) {
    out << result;
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "bqs: cannot write " << o.out_file << "\n";
      return 1;
    }
    file << result;
  }
  return status;
}

}  // namespace bqs
