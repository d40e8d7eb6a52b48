#include "pseudoassoc/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace pseudoassoc {

std::size_t GradedPoset::cover_count() const {
  std::size_t n = 0;
  for (const auto& a : above) n += a.size();
  return n;
}

std::size_t GradedPoset::top() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (rank[i] == 0) return i;
  throw std::logic_error("poset has no top element");
}

std::vector<std::size_t> GradedPoset::face_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(dimension, 0)) + 1, 0);
  for (auto r : rank) {
    auto dim = dimension - r;
    if (dim < 0) throw std::logic_error("face rank exceeds poset dimension");
    ++out[static_cast<std::size_t>(dim)];
  }
  return out;
}

std::vector<std::size_t> GradedPoset::fvector() const {
  auto counts = face_counts();
  counts.pop_back();
  return counts;
}

void GradedPoset::finalize() {
  below.assign(size(), {});
  for (std::size_t i = 0; i < size(); ++i) {
    std::sort(above[i].begin(), above[i].end());
    for (auto j : above[i]) below[j].push_back(i);
  }
  for (auto& b : below) std::sort(b.begin(), b.end());
  if (compact.size() != size()) compact.assign(size(), true);
}

GradedPoset poset_product(const GradedPoset& p, const GradedPoset& q) {
  GradedPoset out;
  out.dimension = p.dimension + q.dimension;
  auto n = p.size() * q.size();
  out.rank.resize(n);
  out.above.resize(n);
  out.compact.resize(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      auto k = product_index(q, i, j);
      out.rank[k] = p.rank[i] + q.rank[j];
      out.compact[k] = p.compact[i] && q.compact[j];
      for (auto a : p.above[i]) out.above[k].push_back(product_index(q, a, j));
      for (auto b : q.above[j]) out.above[k].push_back(product_index(q, i, b));
    }
  }
  out.finalize();
  return out;
}

GradedPoset simplex_poset(std::size_t k) {
  if (k == 0 || k > 20) throw std::invalid_argument("simplex_poset needs 1 <= k <= 20");
  GradedPoset out;
  out.dimension = static_cast<int>(k) - 1;
  std::size_t full = (std::size_t{1} << k) - 1;
  // element index = subset mask (facets containing the face), full set excluded
  out.rank.resize(full);
  out.above.resize(full);
  for (std::size_t s = 0; s < full; ++s) {
    out.rank[s] = std::popcount(s);
    for (std::size_t b = s; b; b &= b - 1) out.above[s].push_back(s & ~(b & (~b + 1)));
  }
  out.finalize();
  return out;
}

GradedPoset ray_poset() {
  GradedPoset out;
  out.dimension = 1;
  out.rank = {0, 1};
  out.above = {{}, {0}};
  out.compact = {false, true};
  out.finalize();
  return out;
}

GradedPoset point_poset() {
  GradedPoset out;
  out.dimension = 0;
  out.rank = {0};
  out.above = {{}};
  out.finalize();
  return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Profile {
  std::vector<Bits> down;  // down-set of each element, itself included
  std::vector<std::vector<std::size_t>> signature;
};

Profile profile(const GradedPoset& p, bool respect_compact) {
  Profile out;
  auto n = p.size();
  out.down.assign(n, Bits(n));
  std::vector<Bits> up(n, Bits(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p.rank[a] > p.rank[b]; });
  for (auto x : order) {
    out.down[x].set(x);
    for (auto c : p.below[x]) out.down[x] |= out.down[c];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto x = *it;
    up[x].set(x);
    for (auto c : p.above[x]) up[x] |= up[c];
  }
  auto ranks = static_cast<std::size_t>(*std::max_element(p.rank.begin(), p.rank.end())) + 1;
  out.signature.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto& sig = out.signature[x];
    sig = {static_cast<std::size_t>(p.rank[x]), p.above[x].size(), p.below[x].size(),
           respect_compact && p.compact[x] ? 1u : 0u};
    std::vector<std::size_t> down_by_rank(ranks, 0), up_by_rank(ranks, 0);
    for (auto y = out.down[x].find_first(); y != Bits::npos; y = out.down[x].find_next(y))
      ++down_by_rank[static_cast<std::size_t>(p.rank[y])];
    for (auto y = up[x].find_first(); y != Bits::npos; y = up[x].find_next(y))
      ++up_by_rank[static_cast<std::size_t>(p.rank[y])];
    sig.insert(sig.end(), down_by_rank.begin(), down_by_rank.end());
    sig.insert(sig.end(), up_by_rank.begin(), up_by_rank.end());
  }
  return out;
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const GradedPoset& a, const GradedPoset& b,
                                                         const IsoOptions& options) {
  if (a.size() != b.size() || a.dimension != b.dimension || a.cover_count() != b.cover_count())
    return std::nullopt;
  if (a.size() == 0) return std::vector<std::size_t>{};
  auto pa = profile(a, options.respect_compact);
  auto pb = profile(b, options.respect_compact);
  {
    auto sa = pa.signature, sb = pb.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto n = a.size();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_signature;
  for (std::size_t y = 0; y < n; ++y) by_signature[pb.signature[y]].push_back(y);

  // rank-ascending order: every element but the top has an assigned cover above it
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a.rank[x] < a.rank[y]; });

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, unset);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> facets_a;  // assigned rank-1 elements, in order

  auto candidates = [&](std::size_t x) {
    std::vector<std::size_t> out;
    const auto& sig = pa.signature[x];
    const std::vector<std::size_t>* pool = nullptr;
    std::vector<std::size_t> local;
    if (!a.above[x].empty()) {
      local = b.below[image[a.above[x].front()]];
      pool = &local;
    } else {
      auto it = by_signature.find(sig);
      if (it == by_signature.end()) return out;
      pool = &it->second;
    }
    for (auto y : *pool)
      if (!used[y] && pb.signature[y] == sig) out.push_back(y);
    return out;
  };

  auto consistent = [&](std::size_t x, std::size_t y) {
    for (auto u : a.above[x])
      if (image[u] != unset && !contains(b.above[y], image[u])) return false;
    for (auto d : a.below[x])
      if (image[d] != unset && !contains(b.below[y], image[d])) return false;
    if (a.rank[x] == 1) {
      for (auto f : facets_a) {
        if ((pa.down[x] & pa.down[f]).count() != (pb.down[y] & pb.down[image[f]]).count())
          return false;
      }
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> cand(n);
  std::vector<std::size_t> cursor(n, 0);
  std::size_t depth = 0, steps = 0;
  cand[0] = candidates(order[0]);
  while (true) {
    auto x = order[depth];
    bool placed = false;
    while (cursor[depth] < cand[depth].size()) {
      auto y = cand[depth][cursor[depth]++];
      if (options.step_limit && ++steps > options.step_limit) return std::nullopt;
      if (used[y] || !consistent(x, y)) continue;
      image[x] = y;
      used[y] = true;
      if (a.rank[x] == 1) facets_a.push_back(x);
      placed = true;
      break;
    }
    if (placed) {
      if (depth + 1 == n) return image;
      ++depth;
      cand[depth] = candidates(order[depth]);
      cursor[depth] = 0;
      continue;
    }
    // exhausted this level: undo the previous assignment
    if (depth == 0) return std::nullopt;
    --depth;
    auto px = order[depth];
    used[image[px]] = false;
    image[px] = unset;
    if (a.rank[px] == 1) facets_a.pop_back();
  }
}

std::string check_isomorphism(const GradedPoset& a, const GradedPoset& b,
                              const std::vector<std::size_t>& map, bool respect_compact) {
  if (a.size() != b.size()) return "sizes differ (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")";
  if (map.size() != a.size()) return "map has wrong length";
  std::vector<bool> hit(b.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto y = map[x];
    if (y >= b.size()) return "image out of range at element " + std::to_string(x);
    if (hit[y]) return "map is not injective (element " + std::to_string(y) + " hit twice)";
    hit[y] = true;
    if (a.rank[x] != b.rank[y]) return "rank differs at element " + std::to_string(x);
    if (respect_compact && a.compact[x] != b.compact[y])
      return "compactness differs at element " + std::to_string(x);
    if (a.above[x].size() != b.above[y].size())
      return "cover count differs at element " + std::to_string(x);
    for (auto u : a.above[x])
      if (!contains(b.above[y], map[u]))
        return "cover " + std::to_string(x) + " < " + std::to_string(u) + " not preserved";
  }
  return {};
}

}  // namespace pseudoassoc
