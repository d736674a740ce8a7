#include "ppwb/lgv.hpp"

#include <set>
#include <sstream>

#include "ppwb/error.hpp"
#include "ppwb/matrix.hpp"

namespace ppwb {

LatticePoint LatticePath::end() const {
  LatticePoint p = start;
  for (Step s : steps) (s == Step::Right ? p.x : p.y) += 1;
  return p;
}

std::vector<LatticePoint> LatticePath::points() const {
  std::vector<LatticePoint> out{start};
  LatticePoint p = start;
  for (Step s : steps) {
    (s == Step::Right ? p.x : p.y) += 1;
    out.push_back(p);
  }
  return out;
}

bool PathFamily::is_nonintersecting() const {
  std::set<LatticePoint> seen;
  for (const auto& path : paths)
    for (const auto& p : path.points())
      if (!seen.insert(p).second) return false;
  return true;
}

BigInt path_count(const LatticePoint& a, const LatticePoint& e) {
  const int dx = e.x - a.x;
  const int dy = e.y - a.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

BigInt lgv_determinant(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends) {
  if (starts.size() != ends.size()) throw DimensionMismatch("start and end sequences differ in length");
  const std::size_t n = starts.size();
  Matrix<BigInt> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = path_count(starts[j], ends[i]);
  return bareiss_determinant(std::move(m));
}

BigInt box_det_count(const BoxDims& box) {
  Matrix<BigInt> m(box.b, std::vector<BigInt>(box.b));
  for (int i = 1; i <= box.b; ++i)
    for (int j = 1; j <= box.b; ++j) m[i - 1][j - 1] = binomial(box.a + box.c, box.a - i + j);
  return bareiss_determinant(std::move(m));
}

std::vector<LatticePoint> box_starts(const BoxDims& box) {
  std::vector<LatticePoint> out;
  for (int i = 1; i <= box.b; ++i) out.push_back({-i, i});
  return out;
}

std::vector<LatticePoint> box_ends(const BoxDims& box) {
  std::vector<LatticePoint> out;
  for (int i = 1; i <= box.b; ++i) out.push_back({box.a - i, box.c + i});
  return out;
}

PathFamily pp_to_paths(const PlanePartition& pp, const BoxDims& box) {
  if (!pp.fits(box)) throw InvalidArgument("plane partition does not fit the box " + to_string(box));
  PathFamily family;
  for (int j = 1; j <= box.b; ++j) {
    const int col = box.b - j;  // 0-based column b+1-j
    LatticePath path{{-j, j}, {}};
    int rights = 0;
    for (int k = 1; k <= box.c; ++k) {
      int tall = 0;
      while (tall < box.a && pp.at(tall, col) >= k) ++tall;
      for (; rights < box.a - tall; ++rights) path.steps.push_back(Step::Right);
      path.steps.push_back(Step::Up);
    }
    for (; rights < box.a; ++rights) path.steps.push_back(Step::Right);
    family.paths.push_back(std::move(path));
  }
  return family;
}

PlanePartition paths_to_pp(const PathFamily& family, const BoxDims& box) {
  if (static_cast<int>(family.paths.size()) != box.b)
    throw InvalidArgument("expected " + std::to_string(box.b) + " paths");
  const auto starts = box_starts(box);
  const auto ends = box_ends(box);
  for (int j = 0; j < box.b; ++j) {
    const auto& path = family.paths[j];
    if (!(path.start == starts[j]) || !(path.end() == ends[j]))
      throw InvalidArgument("path " + std::to_string(j + 1) + " has the wrong endpoints");
  }
  if (!family.is_nonintersecting()) throw InvalidArgument("paths intersect");
  std::vector<std::vector<int>> rows(box.a, std::vector<int>(box.b, 0));
  for (int j = 1; j <= box.b; ++j) {
    const int col = box.b - j;
    int rights = 0;
    int k = 0;
    for (Step s : family.paths[j - 1].steps) {
      if (s == Step::Right) {
        ++rights;
        continue;
      }
      ++k;
      // Rows 0..a-rights-1 reach height k in this column.
      for (int i = 0; i < box.a - rights; ++i) rows[i][col] = k;
    }
  }
  return PlanePartition(rows);
}

namespace {

class FamilySearch {
 public:
  FamilySearch(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
               const std::function<void(const PathFamily&)>& visit)
      : starts_(starts), ends_(ends), visit_(visit) {}

  void run() {
    family_.paths.resize(starts_.size());
    next_path(0);
  }

 private:
  void next_path(std::size_t idx) {
    if (idx == starts_.size()) {
      visit_(family_);
      return;
    }
    const LatticePoint a = starts_[idx];
    if (used_.count(a)) return;
    family_.paths[idx] = {a, {}};
    used_.insert(a);
    extend(idx, a);
    used_.erase(a);
  }

  void extend(std::size_t idx, LatticePoint p) {
    const LatticePoint e = ends_[idx];
    if (p == e) {
      next_path(idx + 1);
      return;
    }
    auto& steps = family_.paths[idx].steps;
    for (Step s : {Step::Right, Step::Up}) {
      LatticePoint q = p;
      (s == Step::Right ? q.x : q.y) += 1;
      if (q.x > e.x || q.y > e.y || used_.count(q)) continue;
      used_.insert(q);
      steps.push_back(s);
      extend(idx, q);
      steps.pop_back();
      used_.erase(q);
    }
  }

  const std::vector<LatticePoint>& starts_;
  const std::vector<LatticePoint>& ends_;
  const std::function<void(const PathFamily&)>& visit_;
  PathFamily family_;
  std::set<LatticePoint> used_;
};

}  // namespace

void for_each_nonintersecting_family(const std::vector<LatticePoint>& starts,
                                     const std::vector<LatticePoint>& ends,
                                     const std::function<void(const PathFamily&)>& visit) {
  if (starts.size() != ends.size()) throw DimensionMismatch("start and end sequences differ in length");
  FamilySearch(starts, ends, visit).run();
}

BigInt count_box_families(const BoxDims& box) {
  BigInt n = 0;
  for_each_nonintersecting_family(box_starts(box), box_ends(box), [&](const PathFamily&) { n += 1; });
  return n;
}

std::string format_path_family(const PathFamily& family) {
  std::ostringstream out;
  for (const auto& path : family.paths) {
    out << path.start.x << ' ' << path.start.y << ' ';
    if (path.steps.empty()) out << '-';
    for (Step s : path.steps) out << (s == Step::Right ? 'R' : 'U');
    out << '\n';
  }
  return out.str();
}

PathFamily parse_path_family(const std::string& text) {
  PathFamily family;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    LatticePath path;
    std::string steps;
    if (!(ls >> path.start.x >> path.start.y >> steps))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x y STEPS'");
    if (steps != "-") {
      for (char ch : steps) {
        if (ch == 'R') path.steps.push_back(Step::Right);
        else if (ch == 'U') path.steps.push_back(Step::Up);
        else throw ParseError("line " + std::to_string(lineno) + ": step '" + std::string(1, ch) + "' is not R or U");
      }
    }
    family.paths.push_back(std::move(path));
  }
  return family;
}

}  // namespace ppwb
