#include "ppwb/dimer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "ppwb/error.hpp"
#include "ppwb/matrix.hpp"

namespace ppwb {

Triangle Lozenge::down() const {
  switch (type) {
    case LozengeType::A:
      return {p, r, false};
    case LozengeType::B:
      return {p - 1, r, false};
    case LozengeType::C:
      return {p, r - 1, false};
  }
  return {};
}

char lozenge_char(LozengeType t) { return t == LozengeType::A ? 'A' : t == LozengeType::B ? 'B' : 'C'; }

HexTiling pp_to_tiling(const PlanePartition& pp, const BoxDims& box) {
  if (!pp.fits(box)) throw InvalidArgument("plane partition does not fit the box " + to_string(box));
  const int a = box.a;
  const int b = box.b;
  const int c = box.c;
  // Heights with walls: row 0 and column 0 are full, row a+1 and column b+1 empty.
  auto h = [&](int i, int j) {
    if (i == 0 || j == 0) return c;
    if (i > a || j > b) return 0;
    return pp.at(i - 1, j - 1);
  };
  HexTiling t{box, {}};
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) t.lozenges.insert({i - j, j - 1 - h(i, j), LozengeType::B});
  // Faces facing +x at x = x0 over column y in [j-1, j].
  for (int x0 = 0; x0 <= a; ++x0)
    for (int j = 1; j <= b; ++j)
      for (int z0 = h(x0 + 1, j); z0 < h(x0, j); ++z0) {
        const int y0 = j - 1;
        t.lozenges.insert({x0 - y0 - 1, y0 - z0, LozengeType::C});
      }
  // Faces facing +y at y = y0 over row x in [i-1, i].
  for (int y0 = 0; y0 <= b; ++y0)
    for (int i = 1; i <= a; ++i)
      for (int z0 = h(i, y0 + 1); z0 < h(i, y0); ++z0) {
        const int x0 = i - 1;
        t.lozenges.insert({x0 - y0, y0 - z0 - 1, LozengeType::A});
      }
  return t;
}

std::set<Triangle> hexagon_region(const BoxDims& box) {
  std::set<Triangle> region;
  for (const auto& l : pp_to_tiling(PlanePartition::zero(box.a, box.b), box).lozenges) {
    region.insert({l.p, l.r, true});
    region.insert(l.down());
  }
  return region;
}

bool tiles_hexagon(const HexTiling& t) {
  std::set<Triangle> covered;
  for (const auto& l : t.lozenges) {
    if (!covered.insert({l.p, l.r, true}).second) return false;
    if (!covered.insert(l.down()).second) return false;
  }
  return covered == hexagon_region(t.box);
}

PlanePartition tiling_to_pp(const HexTiling& t) {
  const BoxDims& box = t.box;
  if (!tiles_hexagon(t)) throw InvalidArgument("lozenges do not tile the hexagon for box " + to_string(box));
  // Top faces along a diagonal i - j = d come in order of increasing r.
  std::map<int, std::vector<int>> tops;
  for (const auto& l : t.lozenges)
    if (l.type == LozengeType::B) tops[l.p].push_back(l.r);
  std::vector<std::vector<int>> rows(box.a, std::vector<int>(box.b, 0));
  for (int d = 1 - box.b; d <= box.a - 1; ++d) {
    auto& rs = tops[d];
    std::sort(rs.begin(), rs.end());
    int i = std::max(1, 1 + d);
    int j = i - d;
    std::size_t n = 0;
    for (; i <= box.a && j <= box.b; ++i, ++j, ++n) {
      if (n >= rs.size()) throw InvalidArgument("missing top face on diagonal " + std::to_string(d));
      const int height = j - 1 - rs[n];
      if (height < 0 || height > box.c)
        throw InvalidArgument("top face height out of range on diagonal " + std::to_string(d));
      rows[i - 1][j - 1] = height;
    }
    if (n != rs.size()) throw InvalidArgument("extra top face on diagonal " + std::to_string(d));
  }
  PlanePartition pp;
  try {
    pp = PlanePartition(rows);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("tiling is not a stepped surface: ") + e.what());
  }
  if (!(pp_to_tiling(pp, box) == t)) throw InvalidArgument("lozenge orientations are not coherent");
  return pp;
}

namespace {

PlanarBipartiteGraph::Vertex place(double u, double v) { return {u + v / 2.0, v * std::sqrt(3.0) / 2.0}; }

bool row_major(const Triangle& x, const Triangle& y) { return std::tie(x.r, x.p) < std::tie(y.r, y.p); }

}  // namespace

HexGraph build_hex_graph(const BoxDims& box) {
  const auto region = hexagon_region(box);
  std::vector<Triangle> ups;
  std::vector<Triangle> downs;
  for (const auto& tr : region) (tr.up ? ups : downs).push_back(tr);
  std::sort(ups.begin(), ups.end(), row_major);
  std::sort(downs.begin(), downs.end(), row_major);

  HexGraph hg;
  auto& g = hg.graph;
  g.whites = static_cast<int>(ups.size());
  g.blacks = static_cast<int>(downs.size());
  std::map<Triangle, int> id;
  for (const auto& tr : ups) {
    id[tr] = static_cast<int>(hg.triangles.size());
    hg.triangles.push_back(tr);
    g.vertices.push_back(place(tr.p + 1.0 / 3, tr.r + 1.0 / 3));
  }
  for (const auto& tr : downs) {
    id[tr] = static_cast<int>(hg.triangles.size());
    hg.triangles.push_back(tr);
    g.vertices.push_back(place(tr.p + 2.0 / 3, tr.r + 2.0 / 3));
  }
  for (const auto& tr : ups) {
    for (LozengeType type : {LozengeType::A, LozengeType::B, LozengeType::C}) {
      Lozenge l{tr.p, tr.r, type};
      auto it = id.find(l.down());
      if (it == id.end()) continue;
      g.edges.push_back({id[tr], it->second});
      hg.edge_lozenges.push_back(l);
    }
  }
  return hg;
}

PlanarBipartiteGraph grid_graph(int rows, int cols) {
  PlanarBipartiteGraph g;
  std::vector<int> id(static_cast<std::size_t>(rows) * cols);
  std::vector<std::pair<int, int>> cells;
  for (int parity = 0; parity < 2; ++parity)
    for (int y = 0; y < rows; ++y)
      for (int x = 0; x < cols; ++x)
        if ((x + y) % 2 == parity) {
          id[y * cols + x] = static_cast<int>(g.vertices.size());
          g.vertices.push_back({static_cast<double>(x), static_cast<double>(y)});
          (parity == 0 ? g.whites : g.blacks) += 1;
        }
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) {
      if ((x + y) % 2 != 0) continue;
      const int w = id[y * cols + x];
      const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
      for (const auto& n : nb)
        if (n[0] >= 0 && n[0] < cols && n[1] >= 0 && n[1] < rows) g.edges.push_back({w, id[n[1] * cols + n[0]]});
    }
  return g;
}

namespace {

struct Face {
  std::vector<int> edges;  // edge id per traversed side
  double area = 0;
  int component = 0;
};

struct FaceStructure {
  std::vector<Face> bounded;
};

FaceStructure trace_faces(const PlanarBipartiteGraph& g) {
  const int n = g.vertex_count();
  struct Half {
    int to;
    int edge;
    double angle;
  };
  std::vector<std::vector<Half>> adj(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    const auto& pu = g.vertices[u];
    const auto& pv = g.vertices[v];
    adj[u].push_back({v, e, std::atan2(pv.y - pu.y, pv.x - pu.x)});
    adj[v].push_back({u, e, std::atan2(pu.y - pv.y, pu.x - pv.x)});
  }
  for (auto& list : adj)
    std::sort(list.begin(), list.end(), [](const Half& x, const Half& y) { return x.angle < y.angle; });

  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [u, v] : g.edges) comp[find(u)] = find(v);

  // Half-edge (v, k) is the k-th entry of adj[v], directed away from v.
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(adj[v].size(), 0);
  std::vector<Face> faces;
  for (int v0 = 0; v0 < n; ++v0) {
    for (std::size_t k0 = 0; k0 < adj[v0].size(); ++k0) {
      if (seen[v0][k0]) continue;
      Face f;
      f.component = find(v0);
      int v = v0;
      std::size_t k = k0;
      while (!seen[v][k]) {
        seen[v][k] = 1;
        const Half& h = adj[v][k];
        f.edges.push_back(h.edge);
        const auto& a = g.vertices[v];
        const auto& b = g.vertices[h.to];
        f.area += a.x * b.y - b.x * a.y;
        // At the far end, continue with the neighbour just clockwise of v.
        const auto& around = adj[h.to];
        std::size_t back = 0;
        while (around[back].to != v || around[back].edge != h.edge) ++back;
        k = (back + around.size() - 1) % around.size();
        v = h.to;
      }
      f.area /= 2;
      faces.push_back(std::move(f));
    }
  }

  int vertices_used = 0;
  std::set<int> components;
  for (int v = 0; v < n; ++v)
    if (!adj[v].empty()) {
      ++vertices_used;
      components.insert(find(v));
    }
  const long euler = static_cast<long>(vertices_used) - static_cast<long>(g.edges.size()) + static_cast<long>(faces.size());
  if (euler != 2L * static_cast<long>(components.size()))
    throw NotSignable("embedding is not planar (Euler characteristic mismatch)");

  // The outer face of each component is the one with the smallest signed area.
  std::map<int, std::size_t> outer;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto it = outer.find(faces[i].component);
    if (it == outer.end() || faces[i].area < faces[it->second].area) outer[faces[i].component] = i;
  }
  FaceStructure fs;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (outer[faces[i].component] != i) fs.bounded.push_back(std::move(faces[i]));
  return fs;
}

// Solves A x = rhs over GF(2); free variables are 0.
std::vector<char> solve_gf2(std::vector<std::vector<char>> rows, std::vector<char> rhs, int vars) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(rhs[piv], rhs[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || !rows[i][col]) continue;
      for (int j = 0; j < vars; ++j) rows[i][j] ^= rows[rank][j];
      rhs[i] ^= rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rhs[i]) throw NotSignable("face sign conditions are inconsistent");
  std::vector<char> x(vars, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

std::vector<int> bounded_face_lengths(const PlanarBipartiteGraph& g) {
  std::vector<int> out;
  for (const auto& f : trace_faces(g).bounded) out.push_back(static_cast<int>(f.edges.size()));
  return out;
}

BigInt kasteleyn_count(const PlanarBipartiteGraph& g) {
  if (g.whites != g.blacks) return 0;
  const auto fs = trace_faces(g);
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::vector<char>> rows;
  std::vector<char> rhs;
  for (const auto& f : fs.bounded) {
    std::vector<char> row(m, 0);
    for (int e : f.edges) row[e] ^= 1;
    rows.push_back(std::move(row));
    // A face of length l needs (l/2 + 1) mod 2 negative edges.
    rhs.push_back(static_cast<char>((f.edges.size() / 2 + 1) % 2));
  }
  const auto sign = solve_gf2(std::move(rows), std::move(rhs), m);
  Matrix<BigInt> k(g.whites, std::vector<BigInt>(g.blacks, BigInt(0)));
  for (int e = 0; e < m; ++e) {
    auto [w, b] = g.edges[e];
    k[w][b - g.whites] = sign[e] ? -1 : 1;
  }
  return abs(BigInt(bareiss_determinant(std::move(k))));
}

void for_each_matching(const PlanarBipartiteGraph& g, const std::function<void(const Matching&)>& visit) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    incident[g.edges[e].first].push_back(e);
    incident[g.edges[e].second].push_back(e);
  }
  std::vector<char> covered(n, 0);
  Matching current;
  std::function<void(int)> rec = [&](int from) {
    int v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      Matching sorted = current;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    for (int e : incident[v]) {
      const int u = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      if (covered[u]) continue;
      covered[u] = covered[v] = 1;
      current.push_back(e);
      rec(v + 1);
      current.pop_back();
      covered[u] = covered[v] = 0;
    }
  };
  rec(0);
}

std::vector<Matching> enumerate_matchings(const PlanarBipartiteGraph& g) {
  std::vector<Matching> out;
  for_each_matching(g, [&](const Matching& m) { out.push_back(m); });
  return out;
}

Matching tiling_to_matching(const HexTiling& t, const HexGraph& hg) {
  std::map<Lozenge, int> edge_of;
  for (int e = 0; e < static_cast<int>(hg.edge_lozenges.size()); ++e) edge_of[hg.edge_lozenges[e]] = e;
  Matching m;
  for (const auto& l : t.lozenges) {
    auto it = edge_of.find(l);
    if (it == edge_of.end())
      throw InvalidArgument("lozenge (" + std::to_string(l.p) + "," + std::to_string(l.r) + "," + lozenge_char(l.type) +
                            ") is not an edge of the graph");
    m.push_back(it->second);
  }
  std::sort(m.begin(), m.end());
  return m;
}

HexTiling matching_to_tiling(const Matching& m, const HexGraph& hg, const BoxDims& box) {
  const auto& g = hg.graph;
  std::vector<int> hits(g.vertex_count(), 0);
  HexTiling t{box, {}};
  for (int e : m) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw InvalidArgument("edge id out of range");
    ++hits[g.edges[e].first];
    ++hits[g.edges[e].second];
    t.lozenges.insert(hg.edge_lozenges[e]);
  }
  for (int h : hits)
    if (h != 1) throw InvalidArgument("edges do not form a perfect matching");
  return t;
}

std::string format_tiling(const HexTiling& t) {
  std::ostringstream out;
  for (const auto& l : t.lozenges) out << l.p << ' ' << l.r << ' ' << lozenge_char(l.type) << '\n';
  return out.str();
}

HexTiling parse_tiling(const std::string& text, const BoxDims& box) {
  HexTiling t{box, {}};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Lozenge l;
    std::string o;
    std::string extra;
    if (!(ls >> l.p >> l.r >> o) || (ls >> extra) || o.size() != 1 || o.find_first_of("ABC") != 0)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x y o' with o in {A,B,C}");
    l.type = o[0] == 'A' ? LozengeType::A : o[0] == 'B' ? LozengeType::B : LozengeType::C;
    if (!t.lozenges.insert(l).second) throw ParseError("line " + std::to_string(lineno) + ": duplicate lozenge");
  }
  return t;
}

}  // namespace ppwb
