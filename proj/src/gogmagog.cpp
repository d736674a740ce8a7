#include "ppwb/gogmagog.hpp"

#include <json.hpp>
#include <sstream>

#include "ppwb/error.hpp"
#include "ppwb/symmetry.hpp"

namespace ppwb {

namespace {

bool alternates(const std::vector<int>& line) {
  int expect = 1;
  bool any = false;
  for (int v : line) {
    if (v == 0) continue;
    if (v != expect) return false;
    expect = -expect;
    any = true;
  }
  return any && expect == -1;
}

}  // namespace

bool validate_asm(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  for (const auto& row : m) {
    if (row.size() != n) return false;
    for (int v : row)
      if (v < -1 || v > 1) return false;
    if (!alternates(row)) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> col;
    for (std::size_t i = 0; i < n; ++i) col.push_back(m[i][j]);
    if (!alternates(col)) return false;
  }
  return true;
}

bool is_monotone_triangle(const Triangle2D& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(t[r].size()) != n - r) return false;
    for (int c = 0; c < n - r; ++c) {
      if (r == 0 && t[r][c] != c + 1) return false;
      if (c > 0 && t[r][c] <= t[r][c - 1]) return false;
      if (r > 0 && (t[r][c] < t[r - 1][c] || t[r][c] > t[r - 1][c + 1])) return false;
    }
  }
  return true;
}

Triangle2D asm_to_mt(const IntMatrix& m) {
  if (!validate_asm(m)) throw InvalidArgument("not an alternating sign matrix");
  const int n = static_cast<int>(m.size());
  Triangle2D t(n);
  std::vector<int> partial(n, 0);
  for (int r = n - 1; r >= 0; --r) {
    for (int j = 0; j < n; ++j) partial[j] += m[r][j];
    for (int j = 0; j < n; ++j)
      if (partial[j] == 1) t[r].push_back(j + 1);
  }
  return t;
}

IntMatrix mt_to_asm(const Triangle2D& t) {
  if (!is_monotone_triangle(t)) throw InvalidArgument("not a monotone triangle");
  const int n = static_cast<int>(t.size());
  IntMatrix ones(n + 1, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int v : t[r]) ones[r][v - 1] = 1;
  IntMatrix m(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) m[r][j] = ones[r][j] - ones[r + 1][j];
  return m;
}

void for_each_monotone_triangle(int n, const std::function<void(const Triangle2D&)>& visit) {
  if (n < 1) throw InvalidParams("n must be positive");
  Triangle2D t(n);
  for (int c = 1; c <= n; ++c) t[0].push_back(c);
  for (int r = 1; r < n; ++r) t[r].assign(n - r, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == n) {
      visit(t);
      return;
    }
    if (c == n - r) {
      rec(r + 1, 0);
      return;
    }
    int lo = t[r - 1][c];
    if (c > 0) lo = std::max(lo, t[r][c - 1] + 1);
    for (int v = lo; v <= t[r - 1][c + 1]; ++v) {
      t[r][c] = v;
      rec(r, c + 1);
    }
  };
  rec(1, 0);
}

std::vector<IntMatrix> enumerate_asm(int n) {
  std::vector<IntMatrix> out;
  for_each_monotone_triangle(n, [&](const Triangle2D& t) { out.push_back(mt_to_asm(t)); });
  return out;
}

void check_params(int m, int n, int k) {
  if (m < 0 || n < 1 || k < 1 || k > n)
    throw InvalidParams("need m >= 0 and 1 <= k <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")");
}

void for_each_magog(int m, int n, int k, const std::function<void(const MagogTrapezoid&)>& visit) {
  check_params(m, n, k);
  MagogTrapezoid t{m, n, k, {}};
  for (int r = 0; r < k; ++r) t.rows.emplace_back(n - r, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == k) {
      visit(t);
      return;
    }
    if (c == n - r) {
      rec(r + 1, 0);
      return;
    }
    const int lo = c > 0 ? t.rows[r][c - 1] : 1;
    const int hi = r == 0 ? m + c + 1 : t.rows[r - 1][c];
    for (int v = lo; v <= hi; ++v) {
      t.rows[r][c] = v;
      rec(r, c + 1);
    }
  };
  rec(0, 0);
}

void for_each_gog(int m, int n, int k, const std::function<void(const GogTrapezoid&)>& visit) {
  check_params(m, n, k);
  GogTrapezoid g{m, n, k, {}};
  for (int r = 0; r < n; ++r) g.rows.emplace_back(std::min(k, n - r), 0);
  // Columns are filled right to left, each top to bottom.
  std::function<void(int, int)> rec = [&](int c, int r) {
    if (c < 0) {
      visit(g);
      return;
    }
    if (r == n - c) {
      rec(c - 1, 0);
      return;
    }
    int lo = r > 0 ? g.rows[r - 1][c] : 1;
    int hi;
    if (c == k - 1) {
      hi = m + k + r;
    } else {
      hi = r + 1 < n - c ? g.rows[r][c + 1] - 1 : m + n;
      if (r > 0) hi = std::min(hi, g.rows[r - 1][c + 1]);
    }
    lo = std::max(lo, 1);
    for (int v = lo; v <= hi; ++v) {
      g.rows[r][c] = v;
      rec(c, r + 1);
    }
  };
  rec(k - 1, 0);
}

std::vector<MagogTrapezoid> enumerate_magog(int m, int n, int k) {
  std::vector<MagogTrapezoid> out;
  for_each_magog(m, n, k, [&](const MagogTrapezoid& t) { out.push_back(t); });
  return out;
}

std::vector<GogTrapezoid> enumerate_gog(int m, int n, int k) {
  std::vector<GogTrapezoid> out;
  for_each_gog(m, n, k, [&](const GogTrapezoid& g) { out.push_back(g); });
  return out;
}

BigInt count_magog(int m, int n, int k) {
  BigInt c = 0;
  for_each_magog(m, n, k, [&](const MagogTrapezoid&) { c += 1; });
  return c;
}

BigInt count_gog(int m, int n, int k) {
  BigInt c = 0;
  for_each_gog(m, n, k, [&](const GogTrapezoid&) { c += 1; });
  return c;
}

OverlapConvention parse_overlap(const std::string& s) {
  if (s == "both") return OverlapConvention::Both;
  if (s == "max-only") return OverlapConvention::MaxOnly;
  if (s == "min-only") return OverlapConvention::MinOnly;
  throw InvalidArgument("unknown overlap convention '" + s + "' (expected both, max-only or min-only)");
}

std::string to_string(OverlapConvention c) {
  switch (c) {
    case OverlapConvention::Both:
      return "both";
    case OverlapConvention::MaxOnly:
      return "max-only";
    case OverlapConvention::MinOnly:
      return "min-only";
  }
  return "";
}

namespace {

// One counted entry in the maxima line and/or the minima line.
void tally(Stats& s, bool is_max, bool is_min, bool same_line, OverlapConvention c) {
  if (same_line && is_max && is_min) {
    if (c != OverlapConvention::MinOnly) ++s.maxima;
    if (c != OverlapConvention::MaxOnly) ++s.minima;
    return;
  }
  if (is_max) ++s.maxima;
  if (is_min) ++s.minima;
}

}  // namespace

Stats magog_stats(const MagogTrapezoid& t, OverlapConvention c) {
  Stats s;
  const auto& first = t.rows.front();
  const auto& last = t.rows.back();
  if (t.k == 1) {
    for (int i = 0; i < static_cast<int>(first.size()); ++i)
      tally(s, first[i] == t.m + i + 1, first[i] == 1, true, c);
    return s;
  }
  for (int i = 0; i < static_cast<int>(first.size()); ++i)
    if (first[i] == t.m + i + 1) ++s.maxima;
  for (int v : last)
    if (v == 1) ++s.minima;
  return s;
}

Stats gog_stats(const GogTrapezoid& g, OverlapConvention c) {
  Stats s;
  const int right = g.k - 1;
  for (int r = 0; r < g.n; ++r) {
    const bool in_right = static_cast<int>(g.rows[r].size()) > right;
    const bool is_max = in_right && g.rows[r][right] == g.m + g.k + r;
    const bool is_min = g.rows[r][0] == 1;
    if (g.k == 1) {
      tally(s, is_max, is_min, true, c);
    } else {
      if (is_max) ++s.maxima;
      if (is_min) ++s.minima;
    }
  }
  return s;
}

ConjectureTables conjecture_tables(int m, int n, int k, OverlapConvention c) {
  check_params(m, n, k);
  ConjectureTables t;
  t.m = m;
  t.n = n;
  t.k = k;
  t.convention = c;
  for_each_magog(m, n, k, [&](const MagogTrapezoid& x) {
    const Stats s = magog_stats(x, c);
    t.magog[{s.maxima, s.minima}] += 1;
  });
  for_each_gog(m, n, k, [&](const GogTrapezoid& g) {
    const Stats s = gog_stats(g, c);
    t.gog[{s.minima, s.maxima}] += 1;
    t.gog_unswapped[{s.maxima, s.minima}] += 1;
  });
  return t;
}

BigInt table_total(const StatTable& t) {
  BigInt s = 0;
  for (const auto& [key, c] : t) s += c;
  return s;
}

std::string conjecture_json(const ConjectureTables& t) {
  auto rows = [](const StatTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, c] : table) arr.push_back({key.first, key.second, c.get_str()});
    return arr;
  };
  nlohmann::json j;
  j["params"] = {{"m", t.m}, {"n", t.n}, {"k", t.k}};
  j["magog"] = rows(t.magog);
  j["gog"] = rows(t.gog);
  j["equal"] = t.equal();
  j["convention"] = to_string(t.convention);
  j["unswapped_equal"] = t.unswapped_equal();
  return j.dump();
}

BigInt k1_count(int m, int n, int s, int t) {
  const long x = static_cast<long>(m) + 2L * n - s - t - 2;
  return binomial(x, m + n - 2) - binomial(x, m + n - 1);
}

TsscppMagog tsscpp_magog_check(int n) {
  TsscppMagog r;
  r.tsscpp = count_class(SymmetryClass(10), BoxDims(2 * n, 2 * n, 2 * n));
  r.magog = count_magog(0, n, n);
  return r;
}

std::string format_triangle(const Triangle2D& t) {
  std::ostringstream out;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const IntMatrix& m) { return format_triangle(m); }

IntMatrix parse_int_rows(const std::string& text) {
  IntMatrix rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ppwb
