#include "dslice/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

bool side_is_admissible(const SetPartition& p, const LinkData& data, const std::vector<int>& s) {
  for (const auto& cls : p)
    if (cls.size() == 1 && !data.slice[cls[0]]) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      std::int64_t total = 0;
      for (std::size_t i : p[a])
        for (std::size_t j : p[b]) total += s[i] * s[j] * data.lk[i][j];
      if (total != 0) return false;
    }
  }
  return true;
}

std::vector<std::size_t> class_of(const SetPartition& p, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t c = 0; c < p.size(); ++c)
    for (std::size_t i : p[c]) out[i] = c;
  return out;
}

bool incidence_is_tree(const SetPartition& a, const SetPartition& b, std::size_t n) {
  const auto ca = class_of(a, n);
  const auto cb = class_of(b, n);
  std::vector<std::size_t> parent(a.size() + b.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t merges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = find(ca[i]);
    const std::size_t y = find(a.size() + cb[i]);
    if (x == y) return false;
    parent[x] = y;
    ++merges;
  }
  return merges + 1 == a.size() + b.size();
}

}  // namespace

void LinkData::validate() const {
  if (lk.size() != n || slice.size() != n) throw PreconditionError("link data sizes do not match n");
  for (std::size_t i = 0; i < n; ++i) {
    if (lk[i].size() != n) throw PreconditionError("lk must be n×n");
    if (lk[i][i] != 0) throw PreconditionError("lk must have zero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (lk[i][j] != lk[j][i]) throw PreconditionError("lk must be symmetric");
  }
}

std::vector<SetPartition> set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<std::size_t> growth(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t classes) {
    if (i == n) {
      SetPartition p(classes);
      for (std::size_t k = 0; k < n; ++k) p[growth[k]].push_back(k);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 0; c <= classes && c <= i; ++c) {
      growth[i] = c;
      rec(i + 1, std::max(classes, c + 1));
    }
  };
  if (n == 0) return {SetPartition{}};
  rec(0, 0);
  return out;
}

std::vector<PartitionPair> admissible_partitions(const LinkData& data, const std::vector<int>& orientation) {
  data.validate();
  if (orientation.size() != data.n) throw PreconditionError("orientation needs one sign per component");
  for (int s : orientation)
    if (s != 1 && s != -1) throw PreconditionError("orientation entries must be +1 or -1");

  std::vector<SetPartition> sides;
  for (auto& p : set_partitions(data.n)) {
    std::sort(p.begin(), p.end());
    if (side_is_admissible(p, data, orientation)) sides.push_back(std::move(p));
  }
  std::sort(sides.begin(), sides.end());

  std::vector<PartitionPair> out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i; j < sides.size(); ++j) {
      if (sides[i].size() + sides[j].size() != data.n + 1) continue;
      if (!incidence_is_tree(sides[i], sides[j], data.n)) continue;
      out.push_back({sides[i], sides[j]});
    }
  }
  return out;
}

std::vector<std::vector<int>> weak_ds_orientation_filter(const LinkData& data) {
  data.validate();
  if (data.n < 2) throw PreconditionError("orientation filter needs at least two components");
  std::vector<std::vector<int>> out;
  const std::size_t free = data.n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    std::vector<int> s(data.n, 1);
    for (std::size_t k = 0; k < free; ++k)
      if (mask & (std::size_t{1} << (free - 1 - k))) s[k + 1] = -1;
    if (!admissible_partitions(data, s).empty()) out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const SetPartition& p) {
  std::string out = "{";
  for (std::size_t c = 0; c < p.size(); ++c) {
    out += c ? ", {" : "{";
    for (std::size_t k = 0; k < p[c].size(); ++k) out += (k ? "," : "") + std::to_string(p[c][k] + 1);
    out += "}";
  }
  return out + "}";
}

}  // namespace dslice
