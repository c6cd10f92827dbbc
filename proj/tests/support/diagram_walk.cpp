#include "diagram_walk.hpp"

#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace oracle {

namespace {

constexpr int NW = 0, NE = 1, SW = 2, SE = 3;

Tangle join(int a, int b, int c, int d) {
  Tangle t{};
  t.partner[a] = b;
  t.partner[b] = a;
  t.partner[c] = d;
  t.partner[d] = c;
  return t;
}

// A crossing between endpoints x and y exchanges where the strands end.
Tangle cross(const Tangle& t, int x, int y) {
  Tangle out = t;
  const int px = t.partner[x];
  const int py = t.partner[y];
  if (px == y) return out;
  out.partner[x] = py;
  out.partner[py] = x;
  out.partner[y] = px;
  out.partner[px] = y;
  return out;
}

}  // namespace

Tangle build_tangle(std::int64_t p, std::int64_t q) {
  if (p == 0 && std::llabs(q) == 1) return join(NW, SW, NE, SE);
  if (q == 0 && std::llabs(p) == 1) return join(NW, NE, SW, SE);
  if (p == 0 || q == 0) throw std::invalid_argument("not a reduced fraction");
  if (std::llabs(p) > std::llabs(q)) {
    const std::int64_t step = (p > 0) == (q > 0) ? q : -q;
    return cross(build_tangle(p - step, q), SW, SE);
  }
  const std::int64_t step = (p > 0) == (q > 0) ? p : -p;
  return cross(build_tangle(p, q - step), NE, SE);
}

int walk_components(std::int64_t e, const std::vector<std::array<std::int64_t, 2>>& fibers) {
  std::vector<Tangle> pieces{build_tangle(1, e)};
  for (const auto& f : fibers) pieces.push_back(build_tangle(f[0], f[1]));
  const std::size_t k = pieces.size();
  auto outside = [&](std::size_t piece, int end) -> std::pair<std::size_t, int> {
    switch (end) {
      case NE:
        return {(piece + 1) % k, NW};
      case SE:
        return {(piece + 1) % k, SW};
      case NW:
        return {(piece + k - 1) % k, NE};
      default:
        return {(piece + k - 1) % k, SE};
    }
  };
  std::vector<std::array<bool, 4>> seen(k, {false, false, false, false});
  int components = 0;
  for (std::size_t start = 0; start < k; ++start) {
    for (int end = 0; end < 4; ++end) {
      if (seen[start][end]) continue;
      ++components;
      std::size_t piece = start;
      int at = end;
      while (!seen[piece][at]) {
        seen[piece][at] = true;
        const int other = pieces[piece].partner[at];
        seen[piece][other] = true;
        std::tie(piece, at) = outside(piece, other);
      }
    }
  }
  return components;
}

}  // namespace oracle
