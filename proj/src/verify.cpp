#include "ppwb/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "ppwb/dimer.hpp"
#include "ppwb/error.hpp"
#include "ppwb/gogmagog.hpp"
#include "ppwb/lgv.hpp"
#include "ppwb/qseries.hpp"
#include "ppwb/schur.hpp"
#include "ppwb/symmetry.hpp"
#include "ppwb/trace.hpp"

namespace ppwb {

namespace {

using Checks = std::vector<Check>;

void add(Checks& out, std::string id, const std::string& expected, const std::string& actual) {
  out.push_back({std::move(id), expected == actual ? "pass" : "fail", expected, actual});
}

void add(Checks& out, std::string id, const BigInt& expected, const BigInt& actual) {
  add(out, std::move(id), expected.get_str(), actual.get_str());
}

void add_info(Checks& out, std::string id, const std::string& expected, const std::string& actual) {
  out.push_back({std::move(id), "info", expected, actual});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string box_id(const BoxDims& box) { return to_string(box); }

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::vector<BoxDims> small_boxes(int side) {
  std::vector<BoxDims> out;
  for (int a = 1; a <= side; ++a)
    for (int b = 1; b <= side; ++b)
      for (int c = 1; c <= side; ++c) out.emplace_back(a, b, c);
  return out;
}

QPolynomial brute_box_gf(const BoxDims& box) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(box.volume()) + 1);
  for_each_in_box(box, [&](const PlanePartition& pp) { coeffs[size(pp)] += 1; });
  return QPolynomial(std::move(coeffs));
}

// Unrestricted counts by four methods.
Checks box_methods() {
  Checks out;
  auto boxes = small_boxes(3);
  boxes.emplace_back(2, 3, 4);
  for (const auto& box : boxes) {
    const std::string id = "box/count/" + box_id(box);
    const BigInt formula = box_count(box);
    add(out, id + "/brute", formula, big(count_box(box)));
    add(out, id + "/lgv", formula, box_det_count(box));
    add(out, id + "/kasteleyn", formula, kasteleyn_count(build_hex_graph(box).graph));
  }
  return out;
}

Checks box_gf_checks() {
  Checks out;
  for (const auto& box : small_boxes(3))
    add(out, "box/gf/" + box_id(box), box_gf(box).to_string(), brute_box_gf(box).to_string());
  return out;
}

Checks all_pp_checks() {
  Checks out;
  const int n = 10;
  std::vector<BigInt> hist(n + 1);
  hist[0] = 1;
  for_each_up_to_size(n, [&](const PlanePartition& pp) { hist[size(pp)] += 1; });
  add(out, "box/all-pp/" + std::to_string(n), all_pp_series(n).to_string(), QPolynomial(hist).to_string());
  return out;
}

std::string class_id(int cls, const BoxDims& box) {
  return "classes/" + std::string(cls < 10 ? "0" : "") + std::to_string(cls) + "/" + box_id(box);
}

void class_count_check(Checks& out, int cls, const BoxDims& box) {
  const SymmetryClass c(cls);
  if (!c.admits(box)) return;
  if (cls == 5 && box.a % 2 && box.b % 2 && box.c % 2) {
    add(out, class_id(cls, box) + "/empty", "0", std::to_string(count_class(c, box)));
    return;
  }
  add(out, class_id(cls, box) + "/count", class_count_formula(c, box), big(count_class(c, box)));
}

void class_gf_check(Checks& out, int cls, const BoxDims& box, Weight w) {
  const SymmetryClass c(cls);
  add(out, class_id(cls, box) + "/gf-" + to_string(w), class_gf_formula(c, box, w).to_string(),
      class_gf(c, box, w).to_string());
}

Checks class_checks() {
  Checks out;
  for (int a = 1; a <= 3; ++a)
    for (int c = 1; c <= 3; ++c) {
      class_gf_check(out, 2, BoxDims(a, a, c), Weight::Size);
      class_gf_check(out, 2, BoxDims(a, a, c), Weight::HalfSize);
    }
  for (int a = 1; a <= 3; ++a) {
    const BoxDims cube(a, a, a);
    class_gf_check(out, 3, cube, Weight::Size);
    class_gf_check(out, 4, cube, Weight::Orbit);
    // The half-size weight only agrees with the product at q = 1.
    add(out, class_id(4, cube) + "/count-half", class_gf_formula(SymmetryClass(4), cube, Weight::HalfSize).at_one(),
        class_gf(SymmetryClass(4), cube, Weight::HalfSize).at_one());
  }
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c) class_count_check(out, 5, BoxDims(a, b, c));
  for (int a = 1; a <= 4; ++a)
    for (int c = 1; c <= 3; ++c) class_count_check(out, 6, BoxDims(a, a, 2 * c));
  for (int a = 1; a <= 6; ++a)
    for (int c = 2; c <= 6; c += 2) class_count_check(out, 7, BoxDims(a, a, c));
  for (int a = 1; a <= 2; ++a) {
    class_count_check(out, 8, BoxDims(2 * a, 2 * a, 2 * a));
    class_count_check(out, 9, BoxDims(2 * a, 2 * a, 2 * a));
  }
  for (int a = 1; a <= 3; ++a) class_count_check(out, 10, BoxDims(2 * a, 2 * a, 2 * a));
  return out;
}

Checks c9c10_checks() {
  Checks out;
  for (int a = 1; a <= 3; ++a) {
    const BigInt t = tsscpp_count(a);
    add(out, "classes/09-vs-10/a=" + std::to_string(a), t * t, cssc_count(a));
  }
  return out;
}

Checks trace_checks() {
  Checks out;
  const int n = 8;
  const auto product = trace_gf_product(n);
  const auto brute = trace_gf_bruteforce(n);
  for (int d = 0; d <= n; ++d) {
    std::ostringstream e, a;
    for (int k = 0; k <= d; ++k) {
      e << (k ? "," : "") << product.coefficient(k, d).get_str();
      a << (k ? "," : "") << brute.coefficient(k, d).get_str();
    }
    add(out, "trace/series/q^" + std::to_string(d), e.str(), a.str());
  }
  long bad_size = 0, bad_trace = 0, bad_back = 0, total = 0;
  std::set<WeightMatrix> images;
  for_each_up_to_size(n, [&](const PlanePartition& pp) {
    ++total;
    const WeightMatrix m = stanley_map(pp);
    if (matrix_weight(m) != size(pp)) ++bad_size;
    if (matrix_total(m) != trace(pp)) ++bad_trace;
    if (!(stanley_unmap(m) == pp)) ++bad_back;
    images.insert(m);
  });
  add(out, "trace/stanley/size-transport", "0", std::to_string(bad_size));
  add(out, "trace/stanley/trace-transport", "0", std::to_string(bad_trace));
  add(out, "trace/stanley/roundtrip", "0", std::to_string(bad_back));
  add(out, "trace/stanley/injective", std::to_string(total), std::to_string(images.size()));
  return out;
}

Checks gansner_checks() {
  Checks out;
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  for (const auto& parts : shapes) {
    std::string name;
    for (int p : parts) name += std::to_string(p);
    const auto r = gansner_check(Partition(parts), 6);
    add(out, "trace/gansner/" + name, r.product.to_string(), r.enumerated.to_string());
  }
  return out;
}

Checks schur_checks() {
  Checks out;
  for (int p1 = 1; p1 <= 3; ++p1)
    for (int p2 = 0; p2 <= p1; ++p2)
      for (int p3 = 0; p3 <= p2; ++p3) {
        std::vector<int> parts{p1};
        if (p2) parts.push_back(p2);
        if (p3) parts.push_back(p3);
        const Partition shape(parts);
        std::string name;
        for (int p : parts) name += std::to_string(p);
        for (int n = shape.length(); n <= 4; ++n) {
          const std::string id = "schur/" + name + "/n=" + std::to_string(n);
          add(out, id + "/bialternant", schur_sum(shape, n).principal_specialization().to_string(),
              schur_principal_bialternant(shape, n).to_string());
          add(out, id + "/dimension", count_ssyt(shape, n), weyl_dimension(shape, n));
        }
      }
  for (const auto& box : small_boxes(3))
    add(out, "schur/box/" + box_id(box), "true", yes_no(verify_mmschur(box)));
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int b1 = 1; b1 <= 2; ++b1) {
      for (int m = 1; m <= 4; ++m)
        add(out, "schur/square/" + std::to_string(a1) + "," + std::to_string(b1) + "/m=" + std::to_string(m), "true",
            yes_no(verify_s2(a1, b1, m)));
      for (int c1 = 1; c1 <= 2; ++c1) {
        const auto r = verify_sc_sum(a1, b1, c1);
        const std::string id =
            "schur/sc-sum/" + std::to_string(a1) + "," + std::to_string(b1) + "," + std::to_string(c1);
        add(out, id + "/tableaux", r.formula, r.tableau_sum);
        add(out, id + "/enumerated", r.formula, r.enumerated);
      }
    }
  return out;
}

Checks dimer_checks() {
  Checks out;
  add(out, "dimer/grid/2x3", "3", kasteleyn_count(grid_graph(2, 3)).get_str());
  add(out, "dimer/grid/4x4", "36", kasteleyn_count(grid_graph(4, 4)).get_str());
  for (const auto& box : small_boxes(3)) {
    const std::string id = "dimer/" + box_id(box);
    const HexGraph hg = build_hex_graph(box);
    const BigInt formula = box_count(box);
    add(out, id + "/kasteleyn", formula, kasteleyn_count(hg.graph));
    add(out, id + "/matchings", formula, BigInt(static_cast<unsigned long>(enumerate_matchings(hg.graph).size())));
    long bad = 0, faces = 0;
    for (int len : bounded_face_lengths(hg.graph))
      if (len != 6) ++faces;
    std::set<std::set<Lozenge>> seen;
    for_each_in_box(box, [&](const PlanePartition& pp) {
      const HexTiling t = pp_to_tiling(pp, box);
      seen.insert(t.lozenges);
      if (!tiles_hexagon(t) || !(tiling_to_pp(t) == pp)) ++bad;
      if (!(matching_to_tiling(tiling_to_matching(t, hg), hg, box) == t)) ++bad;
    });
    add(out, id + "/roundtrip", "0", std::to_string(bad));
    add(out, id + "/distinct-tilings", formula, BigInt(static_cast<unsigned long>(seen.size())));
    add(out, id + "/non-hexagonal-faces", "0", std::to_string(faces));
  }
  return out;
}

Checks asm_checks() {
  Checks out;
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_asm(n);
    const std::string id = "gogmagog/asm/n=" + std::to_string(n);
    add(out, id + "/count", tsscpp_count(n), BigInt(static_cast<unsigned long>(all.size())));
    long bad = 0;
    for (const auto& m : all)
      if (!validate_asm(m) || mt_to_asm(asm_to_mt(m)) != m) ++bad;
    for_each_monotone_triangle(n, [&](const Triangle2D& t) {
      if (asm_to_mt(mt_to_asm(t)) != t) ++bad;
    });
    add(out, id + "/roundtrip", "0", std::to_string(bad));
  }
  return out;
}

std::string params_id(int m, int n, int k) {
  return "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
}

Checks gogmagog_checks(std::vector<std::string>* tables) {
  Checks out;
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k)
        add(out, "gogmagog/totals/" + params_id(m, n, k), count_magog(m, n, k), count_gog(m, n, k));
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        const auto t = conjecture_tables(m, n, k, OverlapConvention::Both);
        add(out, "gogmagog/tables/" + params_id(m, n, k), "true", yes_no(t.equal()));
        if (tables) tables->push_back(conjecture_json(t));
      }
  for (auto conv : {OverlapConvention::MaxOnly, OverlapConvention::MinOnly})
    for (int n = 1; n <= 4; ++n) {
      const auto t = conjecture_tables(0, n, 1, conv);
      add_info(out, "gogmagog/overlap/" + to_string(conv) + "/" + params_id(0, n, 1), "true", yes_no(t.equal()));
    }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto t = conjecture_tables(m, n, 1, OverlapConvention::Both);
      long bad = 0, asym = 0;
      auto at = [&](int s, int u) {
        auto it = t.magog.find({s, u});
        return it == t.magog.end() ? BigInt(0) : it->second;
      };
      for (int s = 0; s <= n + 1; ++s)
        for (int u = 0; u <= n + 1; ++u) {
          if (at(s, u) != k1_count(m, n, s, u)) ++bad;
          if (at(s, u) != at(u, s)) ++asym;
        }
      const std::string id = "gogmagog/k1/m=" + std::to_string(m) + ",n=" + std::to_string(n);
      add(out, id + "/formula", "0", std::to_string(bad));
      add(out, id + "/symmetry", "0", std::to_string(asym));
    }
  return out;
}

Checks tsscpp_magog_checks() {
  Checks out;
  for (int n = 1; n <= 3; ++n) {
    const auto r = tsscpp_magog_check(n);
    add(out, "gogmagog/tsscpp/n=" + std::to_string(n), r.tsscpp, r.magog);
  }
  return out;
}

void append(Checks& to, Checks from) {
  for (auto& c : from) to.push_back(std::move(c));
}

}  // namespace

std::vector<Check> criterion_checks(int criterion) {
  switch (criterion) {
    case 1:
      return box_methods();
    case 2:
      return box_gf_checks();
    case 3:
      return all_pp_checks();
    case 4:
      return class_checks();
    case 5:
      return c9c10_checks();
    case 6:
      return trace_checks();
    case 7:
      return gansner_checks();
    case 8:
      return schur_checks();
    case 9:
      return asm_checks();
    case 10:
      return gogmagog_checks(nullptr);
    case 11:
      return tsscpp_magog_checks();
  }
  throw InvalidArgument("no checks for criterion " + std::to_string(criterion));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"box", "classes", "trace", "schur", "dimer", "gogmagog"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

VerifyReport run_suite(const std::string& name) {
  if (!is_suite(name)) throw InvalidArgument("unknown suite '" + name + "'");
  VerifyReport r;
  r.suite = name;
  const bool all = name == "all";
  if (all || name == "box") {
    append(r.checks, box_methods());
    append(r.checks, box_gf_checks());
    append(r.checks, all_pp_checks());
  }
  if (all || name == "classes") {
    append(r.checks, class_checks());
    append(r.checks, c9c10_checks());
  }
  if (all || name == "trace") {
    append(r.checks, trace_checks());
    append(r.checks, gansner_checks());
  }
  if (all || name == "schur") append(r.checks, schur_checks());
  if (all || name == "dimer") append(r.checks, dimer_checks());
  if (all || name == "gogmagog") {
    append(r.checks, asm_checks());
    append(r.checks, gogmagog_checks(&r.tables));
    append(r.checks, tsscpp_magog_checks());
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& x, const Check& y) { return x.id < y.id; });
  r.pass = std::none_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.status == "fail"; });
  return r;
}

std::string report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"id", c.id}, {"status", c.status}, {"expected", c.expected}, {"actual", c.actual}});
  j["pass"] = r.pass;
  if (!r.tables.empty()) {
    j["tables"] = nlohmann::json::array();
    for (const auto& t : r.tables) j["tables"].push_back(nlohmann::json::parse(t));
  }
  return j.dump(2);
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, info = 0;
  for (const auto& c : r.checks) {
    if (c.status == "pass") {
      ++passed;
      continue;
    }
    (c.status == "fail" ? failed : info) += 1;
    out << (c.status == "fail" ? "FAIL " : "INFO ") << c.id << ": expected " << c.expected << ", got " << c.actual
        << '\n';
  }
  out << "suite " << r.suite << ": " << passed << " passed, " << failed << " failed";
  if (info) out << ", " << info << " informational";
  out << " -> " << (r.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace ppwb
