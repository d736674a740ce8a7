#include "ppwb/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ppwb/error.hpp"

namespace ppwb {

bool is_downward_closed(const std::set<Cube>& cells) {
  for (const Cube& x : cells) {
    for (int d = 0; d < 3; ++d) {
      if (x[d] < 1) return false;
      if (x[d] == 1) continue;
      Cube y = x;
      --y[d];
      if (!cells.count(y)) return false;
    }
  }
  return true;
}

CubeSet::CubeSet(std::set<Cube> cells) : cells_(std::move(cells)) {
  if (!is_downward_closed(cells_)) throw InvalidArgument("cube set is not downward closed");
}

bool CubeSet::fits(const BoxDims& box) const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](const Cube& x) { return x[0] <= box.a && x[1] <= box.b && x[2] <= box.c; });
}

CubeSet to_cubes(const PlanePartition& pp) {
  std::set<Cube> cells;
  for (int i = 0; i < pp.rows(); ++i)
    for (int j = 0; j < pp.cols(); ++j)
      for (int k = 1; k <= pp.at(i, j); ++k) cells.insert({i + 1, j + 1, k});
  return CubeSet(std::move(cells));
}

PlanePartition from_cubes(const CubeSet& s) {
  int rows = 0;
  int cols = 0;
  for (const Cube& x : s.cells()) {
    rows = std::max(rows, x[0]);
    cols = std::max(cols, x[1]);
  }
  std::vector<int> grid(static_cast<std::size_t>(rows) * cols, 0);
  for (const Cube& x : s.cells()) {
    int& h = grid[static_cast<std::size_t>(x[0] - 1) * cols + (x[1] - 1)];
    h = std::max(h, x[2]);
  }
  return PlanePartition::from_valid_grid(rows, cols, std::move(grid));
}

PlanePartition reflect(const PlanePartition& pp) {
  std::vector<int> grid(static_cast<std::size_t>(pp.rows()) * pp.cols());
  for (int i = 0; i < pp.cols(); ++i)
    for (int j = 0; j < pp.rows(); ++j) grid[static_cast<std::size_t>(i) * pp.rows() + j] = pp.at(j, i);
  return PlanePartition::from_valid_grid(pp.cols(), pp.rows(), std::move(grid));
}

CubeSet rotate(const CubeSet& s) {
  std::set<Cube> out;
  for (const Cube& x : s.cells()) out.insert({x[1], x[2], x[0]});
  return CubeSet(std::move(out));
}

CubeSet complement(const CubeSet& s, const BoxDims& box) {
  if (!s.fits(box)) throw InvalidArgument("cube set does not fit the box " + to_string(box));
  std::set<Cube> out;
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j)
      for (int k = 1; k <= box.c; ++k)
        if (!s.contains({i, j, k})) out.insert({box.a + 1 - i, box.b + 1 - j, box.c + 1 - k});
  return CubeSet(std::move(out));
}

SymmetryClass::SymmetryClass(int id) : id_(id) {
  if (id < 1 || id > 10) throw InvalidArgument("symmetry class must be in 1..10");
}

bool SymmetryClass::uses_reflection() const { return id_ == 2 || id_ == 4 || id_ == 7 || id_ == 10; }
bool SymmetryClass::uses_rotation() const {
  return id_ == 3 || id_ == 4 || id_ == 8 || id_ == 9 || id_ == 10;
}
bool SymmetryClass::uses_complement() const { return id_ == 5 || id_ == 7 || id_ == 9 || id_ == 10; }
bool SymmetryClass::uses_transpose_complement() const { return id_ == 6 || id_ == 8; }

bool SymmetryClass::admits(const BoxDims& box) const {
  if (uses_rotation()) return box.a == box.b && box.b == box.c;
  if (uses_reflection() || uses_transpose_complement()) return box.a == box.b;
  return true;
}

std::string SymmetryClass::name() const {
  static const char* names[] = {"",
                                "unrestricted",
                                "symmetric",
                                "cyclically symmetric",
                                "totally symmetric",
                                "self-complementary",
                                "transpose-complementary",
                                "symmetric self-complementary",
                                "cyclically symmetric transpose-complementary",
                                "cyclically symmetric self-complementary",
                                "totally symmetric self-complementary"};
  return names[id_];
}

long weight_of(const PlanePartition& pp, Weight w) {
  switch (w) {
    case Weight::Size:
      return size(pp);
    case Weight::HalfSize:
      return half_size(pp);
    case Weight::Orbit: {
      long n = 0;
      for (int i = 0; i < pp.rows(); ++i)
        for (int j = i; j < pp.cols(); ++j) n += std::max(0, pp.at(i, j) - j);
      return n;
    }
  }
  return 0;
}

Weight parse_weight(const std::string& s) {
  if (s == "size") return Weight::Size;
  if (s == "half" || s == "half_size") return Weight::HalfSize;
  if (s == "orbit") return Weight::Orbit;
  throw InvalidArgument("unknown weight '" + s + "' (expected size, half or orbit)");
}

std::string to_string(Weight w) {
  switch (w) {
    case Weight::Size:
      return "size";
    case Weight::HalfSize:
      return "half";
    case Weight::Orbit:
      return "orbit";
  }
  return "";
}

bool is_in_class(const PlanePartition& pp, const BoxDims& box, SymmetryClass cls) {
  if (!pp.fits(box) || !cls.admits(box)) return false;
  const CubeSet s = to_cubes(pp);
  if (cls.uses_reflection() && !(reflect(pp) == pp)) return false;
  if (cls.uses_rotation() && !(rotate(s) == s)) return false;
  if (cls.uses_complement() && !(complement(s, box) == s)) return false;
  if (cls.uses_transpose_complement() && !(reflect(from_cubes(complement(s, box))) == pp)) return false;
  return true;
}

namespace {

struct Generator {
  std::function<Cube(const Cube&)> map;
  bool flips;  // x in S  <=>  g(x) not in S
};

std::vector<Generator> generators(SymmetryClass cls, const BoxDims& box) {
  const int a = box.a;
  const int b = box.b;
  const int c = box.c;
  std::vector<Generator> gens;
  if (cls.uses_reflection()) gens.push_back({[](const Cube& x) { return Cube{x[1], x[0], x[2]}; }, false});
  if (cls.uses_rotation()) gens.push_back({[](const Cube& x) { return Cube{x[1], x[2], x[0]}; }, false});
  if (cls.uses_complement())
    gens.push_back({[=](const Cube& x) { return Cube{a + 1 - x[0], b + 1 - x[1], c + 1 - x[2]}; }, true});
  if (cls.uses_transpose_complement())
    gens.push_back({[=](const Cube& x) { return Cube{b + 1 - x[1], a + 1 - x[0], c + 1 - x[2]}; }, true});
  return gens;
}

// Boolean variable per unit cube of the box. Cubes linked by the symmetry
// group share one decision (up to a flip); downward closure is propagated.
class CubeSolver {
 public:
  CubeSolver(SymmetryClass cls, const BoxDims& box) : box_(box), n_(static_cast<int>(box.volume())) {
    parent_.resize(n_);
    parity_.assign(n_, 0);
    std::iota(parent_.begin(), parent_.end(), 0);
    for (int x = 0; x < n_; ++x)
      for (const auto& g : generators(cls, box)) unite(x, index(g.map(cube(x))), g.flips ? 1 : 0);
    members_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      auto [root, par] = find(x);
      members_[root].push_back({x, par});
    }
    for (int x = 0; x < n_; ++x)
      if (!members_[x].empty()) ++components_;
    value_.assign(n_, -1);
  }

  bool feasible() const { return !contradiction_; }
  int components() const { return contradiction_ ? 0 : components_; }

  void run(const PlanePartitionVisitor& visit) {
    if (contradiction_) return;
    visit_ = &visit;
    search(0);
  }

 private:
  int index(const Cube& x) const { return ((x[0] - 1) * box_.b + (x[1] - 1)) * box_.c + (x[2] - 1); }
  Cube cube(int id) const {
    return {id / (box_.b * box_.c) + 1, (id / box_.c) % box_.b + 1, id % box_.c + 1};
  }

  std::pair<int, int> find(int x) {
    int par = 0;
    int r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Path compression with parity relative to the root.
    int cur = x;
    int cur_par = par;
    while (parent_[cur] != cur) {
      int next = parent_[cur];
      int next_par = cur_par ^ parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cur_par;
      cur = next;
      cur_par = next_par;
    }
    return {r, par};
  }

  void unite(int x, int y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) {
      if ((px ^ py) != rel) contradiction_ = true;
      return;
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ rel;
  }

  // Assigns x (and its whole orbit); false on conflict.
  bool assign(int x, int v) {
    if (value_[x] >= 0) return value_[x] == v;
    auto [root, par] = find(x);
    const int root_value = v ^ par;
    for (const auto& [y, py] : members_[root]) {
      value_[y] = root_value ^ py;
      trail_.push_back(y);
    }
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t t = from; t < trail_.size(); ++t) {
      const int x = trail_[t];
      const Cube q = cube(x);
      const int v = value_[x];
      for (int d = 0; d < 3; ++d) {
        Cube y = q;
        y[d] += v == 1 ? -1 : 1;
        const int lim = d == 0 ? box_.a : d == 1 ? box_.b : box_.c;
        if (y[d] < 1 || y[d] > lim) continue;
        if (!assign(index(y), v)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void search(int pos) {
    while (pos < n_ && value_[pos] >= 0) ++pos;
    if (pos == n_) {
      emit();
      return;
    }
    for (int v : {1, 0}) {
      const std::size_t mark = trail_.size();
      if (assign(pos, v) && propagate(mark)) search(pos + 1);
      undo(mark);
    }
  }

  void emit() {
    std::vector<int> grid(static_cast<std::size_t>(box_.a) * box_.b, 0);
    for (int x = 0; x < n_; ++x)
      if (value_[x] == 1) ++grid[x / box_.c];
    (*visit_)(PlanePartition::from_valid_grid(box_.a, box_.b, std::move(grid)));
  }

  BoxDims box_;
  int n_;
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<std::vector<std::pair<int, int>>> members_;
  int components_ = 0;
  bool contradiction_ = false;
  std::vector<int> value_;
  std::vector<int> trail_;
  const PlanePartitionVisitor* visit_ = nullptr;
};

}  // namespace

void for_each_in_class(SymmetryClass cls, const BoxDims& box, const PlanePartitionVisitor& visit) {
  if (!cls.admits(box)) return;
  if (box.c == 0) {
    // The empty pile is its own image under every operation.
    visit(PlanePartition::zero(box.a, box.b));
    return;
  }
  CubeSolver(cls, box).run(visit);
}

std::vector<PlanePartition> enumerate_class(SymmetryClass cls, const BoxDims& box) {
  std::vector<PlanePartition> out;
  for_each_in_class(cls, box, [&](const PlanePartition& pp) { out.push_back(pp); });
  return out;
}

std::uint64_t count_class(SymmetryClass cls, const BoxDims& box) {
  std::uint64_t n = 0;
  for_each_in_class(cls, box, [&](const PlanePartition&) { ++n; });
  return n;
}

int class_search_variables(SymmetryClass cls, const BoxDims& box) {
  if (!cls.admits(box) || box.c == 0) return 0;
  return CubeSolver(cls, box).components();
}

QPolynomial class_gf(SymmetryClass cls, const BoxDims& box, Weight weight) {
  std::vector<BigInt> coeffs;
  for_each_in_class(cls, box, [&](const PlanePartition& pp) {
    const long w = weight_of(pp, weight);
    if (static_cast<long>(coeffs.size()) <= w) coeffs.resize(w + 1);
    coeffs[w] += 1;
  });
  return QPolynomial(std::move(coeffs));
}

}  // namespace ppwb
