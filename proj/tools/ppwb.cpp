#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ppwb/dimer.hpp"
#include "ppwb/error.hpp"
#include "ppwb/gogmagog.hpp"
#include "ppwb/lgv.hpp"
#include "ppwb/qseries.hpp"
#include "ppwb/schur.hpp"
#include "ppwb/symmetry.hpp"
#include "ppwb/trace.hpp"
#include "ppwb/verify.hpp"

using namespace ppwb;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInternal = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

int max_cells() {
  const char* env = std::getenv("PPWB_MAX_CELLS");
  if (!env || !*env) return 40;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("PPWB_MAX_CELLS is not an integer: ") + env);
  }
}

BoxDims parse_box(const std::string& text) {
  std::vector<int> v;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--box expects a,b,c with integers, got '" + text + "'");
    }
  }
  if (v.size() != 3) throw UsageError("--box expects three values a,b,c, got '" + text + "'");
  return BoxDims(v[0], v[1], v[2]);
}

// Box for a class when given by --a/--c instead of --box.
BoxDims class_box(int cls, const std::string& box, int a, int c) {
  if (!box.empty()) return parse_box(box);
  if (a < 0) throw UsageError("give --box or --a");
  switch (cls) {
    case 3:
    case 4:
      return BoxDims(a, a, a);
    case 8:
    case 9:
    case 10:
      return BoxDims(2 * a, 2 * a, 2 * a);
    case 2:
    case 7:
      if (c < 0) throw UsageError("class " + std::to_string(cls) + " needs --c with --a");
      return BoxDims(a, a, c);
    case 6:
      if (c < 0) throw UsageError("class 6 needs --c with --a");
      return BoxDims(a, a, 2 * c);
  }
  throw UsageError("class " + std::to_string(cls) + " needs --box");
}

void guard(const SymmetryClass& cls, const BoxDims& box) {
  const int vars = class_search_variables(cls, box);
  const int limit = max_cells();
  if (vars > limit)
    throw UsageError("brute force on " + to_string(box) + " branches over " + std::to_string(vars) +
                     " cells, above PPWB_MAX_CELLS=" + std::to_string(limit));
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct CountArgs {
  int cls = 1;
  std::string box;
  int a = -1;
  int c = -1;
  std::string method = "formula";
};

int cmd_count(const CountArgs& o) {
  const SymmetryClass cls(o.cls);
  const BoxDims box = class_box(o.cls, o.box, o.a, o.c);
  if ((o.method == "lgv" || o.method == "kasteleyn") && o.cls != 1)
    throw UsageError("method " + o.method + " is only available for class 1");
  if (!cls.admits(box)) throw UsageError("class " + std::to_string(o.cls) + " is not defined for box " + to_string(box));
  BigInt n;
  if (o.method == "formula") {
    n = o.cls == 1 ? box_count(box) : class_count_formula(cls, box);
  } else if (o.method == "brute") {
    guard(cls, box);
    n = BigInt(static_cast<unsigned long>(o.cls == 1 ? count_box(box) : count_class(cls, box)));
  } else {
    n = o.method == "lgv" ? box_det_count(box) : kasteleyn_count(build_hex_graph(box).graph);
    const BigInt f = box_count(box);
    if (n != f) throw InternalError(o.method + " gives " + n.get_str() + " but the product formula gives " + f.get_str());
  }
  std::cout << n.get_str() << '\n';
  return kOk;
}

struct GfArgs {
  int cls = 1;
  std::string box;
  int a = -1;
  int c = -1;
  std::string weight = "size";
  std::string method = "formula";
  std::string at_q;
};

int cmd_gf(const GfArgs& o) {
  if (o.cls < 1 || o.cls > 4) throw UsageError("generating functions are available for classes 1-4");
  const SymmetryClass cls(o.cls);
  const BoxDims box = class_box(o.cls, o.box, o.a, o.c);
  const Weight w = parse_weight(o.weight);
  if (!cls.admits(box)) throw UsageError("class " + std::to_string(o.cls) + " is not defined for box " + to_string(box));
  QPolynomial p;
  if (o.method == "brute") {
    guard(cls, box);
    p = class_gf(cls, box, w);
  } else if (o.cls == 1) {
    if (w != Weight::Size) throw UsageError("class 1 only has the size weight");
    p = box_gf(box);
  } else {
    p = class_gf_formula(cls, box, w);
  }
  if (o.at_q.empty()) {
    std::cout << p.to_string() << '\n';
  } else {
    BigInt q;
    if (q.set_str(o.at_q, 10) != 0) throw UsageError("--at-q expects an integer, got '" + o.at_q + "'");
    std::cout << p.evaluate(q).get_str() << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, bool json) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  const VerifyReport r = run_suite(suite);
  std::cout << (json ? report_json(r) + "\n" : report_text(r));
  return r.pass ? kOk : kFailure;
}

struct BijectionArgs {
  std::string name;
  std::string input;
  std::string box;
  bool roundtrip = false;
};

PlanePartition read_pp(const std::string& path) {
  try {
    return parse_plane_partition(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("invalid plane partition: ") + e.what());
  }
}

BoxDims bijection_box(const BijectionArgs& o, const PlanePartition& pp) {
  if (!o.box.empty()) {
    BoxDims box = parse_box(o.box);
    if (!pp.fits(box)) throw UsageError("plane partition does not fit box " + to_string(box));
    return box;
  }
  const PlanePartition t = pp.trimmed();
  return BoxDims(std::max(t.rows(), 1), std::max(t.cols(), 1), t.max_entry());
}

int mismatch(const std::string& what) {
  std::cerr << "round-trip mismatch: " << what << '\n';
  return kFailure;
}

int cmd_bijection(const BijectionArgs& o) {
  if (o.name == "asm-mt") {
    IntMatrix m;
    try {
      m = parse_int_rows(read_input(o.input));
    } catch (const ParseError& e) {
      throw UsageError(std::string("parse error: ") + e.what());
    }
    if (!validate_asm(m)) throw UsageError("input is not an alternating sign matrix");
    const Triangle2D t = asm_to_mt(m);
    std::cout << format_triangle(t);
    if (o.roundtrip) {
      if (mt_to_asm(t) != m) return mismatch("monotone triangle maps back to a different matrix");
      std::cout << "roundtrip ok\n";
    }
    return kOk;
  }
  const PlanePartition pp = read_pp(o.input);
  if (o.name == "stanley") {
    const WeightMatrix w = stanley_map(pp);
    std::cout << format_weight_matrix(w);
    std::cout << "sum m = " << matrix_total(w) << '\n';
    std::cout << "sum (i+j-1) m = " << matrix_weight(w) << '\n';
    if (o.roundtrip) {
      if (!(stanley_unmap(w) == pp)) return mismatch("weight matrix maps back to a different plane partition");
      std::cout << "roundtrip ok\n";
    }
    return kOk;
  }
  const BoxDims box = bijection_box(o, pp);
  if (o.name == "pp-paths") {
    const PathFamily f = pp_to_paths(pp, box);
    std::cout << format_path_family(f);
    if (o.roundtrip) {
      if (!(paths_to_pp(parse_path_family(format_path_family(f)), box) == pp))
        return mismatch("paths map back to a different plane partition");
      std::cout << "roundtrip ok\n";
    }
  } else if (o.name == "pp-tiling") {
    const HexTiling t = pp_to_tiling(pp, box);
    std::cout << format_tiling(t);
    if (o.roundtrip) {
      if (!(tiling_to_pp(parse_tiling(format_tiling(t), box)) == pp))
        return mismatch("tiling maps back to a different plane partition");
      std::cout << "roundtrip ok\n";
    }
  } else if (o.name == "pp-ssyt") {
    const SemistandardTableau t = pp_box_to_ssyt(pp, box);
    std::cout << format_tableau(t);
    if (o.roundtrip) {
      if (!(ssyt_to_pp_box(t, box) == pp)) return mismatch("tableau maps back to a different plane partition");
      std::cout << "roundtrip ok\n";
    }
  } else {
    throw UsageError("unknown bijection '" + o.name + "'");
  }
  return kOk;
}

struct ConjectureArgs {
  int m = 0;
  int n = 1;
  int k = 1;
  bool json = false;
  std::string convention = "both";
};

void print_table(const std::string& title, const StatTable& t) {
  std::cout << title << " (total " << table_total(t).get_str() << ")\n";
  for (const auto& [key, c] : t) std::cout << "  " << key.first << ' ' << key.second << ": " << c.get_str() << '\n';
}

int cmd_conjecture(const ConjectureArgs& o) {
  try {
    check_params(o.m, o.n, o.k);
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  }
  const int cells = o.k * (2 * o.n - o.k + 1) / 2;
  if (cells > max_cells())
    throw UsageError("trapezoids with " + std::to_string(cells) + " cells exceed PPWB_MAX_CELLS=" +
                     std::to_string(max_cells()));
  const auto t = conjecture_tables(o.m, o.n, o.k, parse_overlap(o.convention));
  if (o.json) {
    std::cout << conjecture_json(t) << '\n';
  } else {
    print_table("magog (maxima in first row, minima in last row)", t.magog);
    print_table("gog (minima in first column, maxima in last column)", t.gog);
    std::cout << (t.equal() ? "EQUAL" : "NOT-EQUAL") << '\n';
  }
  return t.equal() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact plane partition counting and bijection toolkit"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count plane partitions in a symmetry class");
  c->add_option("--class", count.cls, "Symmetry class 1-10")->check(CLI::Range(1, 10));
  c->add_option("--box", count.box, "Box as a,b,c");
  c->add_option("--a", count.a, "Side a (cube side is 2a for classes 8-10)");
  c->add_option("--c", count.c, "Height c (classes 2, 6, 7)");
  c->add_option("--method", count.method)->check(CLI::IsMember({"formula", "brute", "lgv", "kasteleyn"}));

  GfArgs gf;
  auto* g = app.add_subcommand("gf", "Print a generating function");
  g->add_option("--class", gf.cls, "Symmetry class 1-4")->check(CLI::Range(1, 10));
  g->add_option("--box", gf.box, "Box as a,b,c");
  g->add_option("--a", gf.a);
  g->add_option("--c", gf.c);
  g->add_option("--weight", gf.weight)->check(CLI::IsMember({"size", "half", "orbit"}));
  g->add_option("--method", gf.method)->check(CLI::IsMember({"formula", "brute"}));
  g->add_option("--at-q", gf.at_q, "Evaluate at this integer");

  std::string suite = "all";
  bool verify_json = false;
  auto* v = app.add_subcommand("verify", "Run cross-verification suites");
  v->add_option("--suite", suite, "box, classes, trace, schur, dimer, gogmagog or all");
  v->add_flag("--json", verify_json);

  BijectionArgs bij;
  auto* b = app.add_subcommand("bijection", "Apply a bijection to an input file");
  b->add_option("name", bij.name, "pp-paths, pp-tiling, pp-ssyt, stanley or asm-mt")->required();
  b->add_option("--input", bij.input, "Input file, - for stdin");
  b->add_option("--box", bij.box, "Box as a,b,c");
  b->add_flag("--roundtrip", bij.roundtrip);

  ConjectureArgs conj;
  auto* k = app.add_subcommand("conjecture", "Compare refined Gog and Magog statistics");
  k->add_option("--m", conj.m)->required();
  k->add_option("--n", conj.n)->required();
  k->add_option("--k", conj.k)->required();
  k->add_flag("--json", conj.json);
  k->add_option("--convention", conj.convention)->check(CLI::IsMember({"both", "max-only", "min-only"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c) return cmd_count(count);
    if (*g) return cmd_gf(gf);
    if (*v) return cmd_verify(suite, verify_json);
    if (*b) return cmd_bijection(bij);
    if (*k) return cmd_conjecture(conj);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidDims& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
