#include "monogen/dualization.hpp"

#include <algorithm>
#include <stdexcept>

namespace monogen {

namespace {

constexpr unsigned long long kDirectScanVolume = 256;
constexpr int kDepthCap = 200;

bool dominated_by_any(const VecSet& family, const IntVec& x) {
  for (const IntVec& a : family)
    if (dominates(a, x)) return true;
  return false;
}

bool dominates_any(const VecSet& family, const IntVec& x) {
  for (const IntVec& b : family)
    if (dominates(x, b)) return true;
  return false;
}

bool covered(const VecSet& maximal, const VecSet& minimal, const IntVec& x) {
  return dominated_by_any(maximal, x) || dominates_any(minimal, x);
}

// Search over the per-coordinate candidate grid {0} u {a_j+1}; every minimal
// uncovered point lies on it.
std::optional<IntVec> grid_search_low(const IntVec& c, const VecSet& a, const VecSet& b) {
  const std::size_t n = c.size();
  std::vector<std::vector<Int>> grid(n);
  for (std::size_t j = 0; j < n; ++j) {
    grid[j].push_back(0);
    for (const IntVec& m : a)
      if (m[j] < c[j]) grid[j].push_back(m[j] + 1);
    std::sort(grid[j].begin(), grid[j].end());
    grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
  }
  std::vector<std::size_t> pos(n, 0);
  IntVec x(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) x[j] = grid[j][pos[j]];
    if (!covered(a, b, x)) return x;
    std::size_t j = n;
    while (j-- > 0) {
      if (++pos[j] < grid[j].size()) break;
      pos[j] = 0;
      if (j == 0) return std::nullopt;
    }
  }
}

// Dual grid {c_j} u {b_j - 1}; every maximal uncovered point lies on it.
std::optional<IntVec> grid_search_high(const IntVec& c, const VecSet& a, const VecSet& b) {
  const std::size_t n = c.size();
  std::vector<std::vector<Int>> grid(n);
  for (std::size_t j = 0; j < n; ++j) {
    grid[j].push_back(c[j]);
    for (const IntVec& m : b)
      if (m[j] > 0) grid[j].push_back(m[j] - 1);
    std::sort(grid[j].begin(), grid[j].end());
    grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
  }
  std::vector<std::size_t> pos(n, 0);
  IntVec x(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) x[j] = grid[j][pos[j]];
    if (!covered(a, b, x)) return x;
    std::size_t j = n;
    while (j-- > 0) {
      if (++pos[j] < grid[j].size()) break;
      pos[j] = 0;
      if (j == 0) return std::nullopt;
    }
  }
}

std::optional<IntVec> search(const IntVec& c, VecSet a, VecSet b, int depth) {
  const std::size_t n = c.size();

  // reduce to antichains; dominated covers are redundant
  {
    Antichain amax(Orientation::MaximalKept), bmin(Orientation::MinimalKept);
    for (const IntVec& m : a) amax.insert(m);
    for (const IntVec& m : b) bmin.insert(m);
    a = amax.members();
    b = bmin.members();
  }

  for (const IntVec& m : a)
    if (m == c) return std::nullopt;  // whole box under m
  IntVec origin = zero_vec(n);
  for (const IntVec& m : b)
    if (m == origin) return std::nullopt;  // whole box above m

  if (a.empty()) return origin;
  if (b.empty()) return std::optional<IntVec>(c);

  bool small = true;
  {
    Int vol = 1;
    for (const Int& cj : c) {
      vol *= cj + 1;
      if (mpz_cmp_ui(vol.get_mpz_t(), kDirectScanVolume) > 0) { small = false; break; }
    }
  }
  if (small) {
    dual_stats().base_cases++;
    IntVec x = origin;
    do {
      if (!covered(a, b, x)) return x;
    } while (next_point(x, c));
    return std::nullopt;
  }
  if (a.size() <= 1 || depth >= kDepthCap) {
    if (depth >= kDepthCap) dual_stats().depth_cap_hits++;
    dual_stats().base_cases++;
    return grid_search_low(c, a, b);
  }
  if (b.size() <= 1) {
    dual_stats().base_cases++;
    return grid_search_high(c, a, b);
  }

  // split on the coordinate/threshold with the most balanced element counts
  std::size_t best_j = n;
  Int best_z;
  long best_bal = -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] < 1) continue;
    std::vector<Int> vals;
    vals.reserve(a.size() + b.size());
    for (const IntVec& m : a) vals.push_back(std::clamp(m[j], Int(0), Int(c[j] - 1)));
    for (const IntVec& m : b) vals.push_back(std::clamp(Int(m[j] - 1), Int(0), Int(c[j] - 1)));
    std::sort(vals.begin(), vals.end());
    Int z = vals[vals.size() / 2];
    if (z == c[j]) z -= 1;
    long left = 0;
    for (const Int& v : vals)
      if (v <= z) ++left;
    long bal = std::min(left, static_cast<long>(vals.size()) - left);
    if (bal > best_bal || (bal == best_bal && j < best_j)) {
      best_bal = bal;
      best_j = j;
      best_z = z;
    }
  }
  if (best_j == n) return std::nullopt;  // degenerate single-point box, already scanned
  dual_stats().splits++;

  const std::size_t j = best_j;
  const Int& z = best_z;

  // lower part: x_j <= z
  {
    IntVec cl = c;
    cl[j] = z;
    VecSet al, bl;
    for (IntVec m : a) {
      m[j] = std::min(m[j], z);
      al.insert(std::move(m));
    }
    for (const IntVec& m : b)
      if (m[j] <= z) bl.insert(m);
    if (auto w = search(cl, std::move(al), std::move(bl), depth + 1)) return w;
  }
  // upper part: x_j >= z + 1, translated down by z + 1
  {
    const Int shift = z + 1;
    IntVec cu = c;
    cu[j] = c[j] - shift;
    VecSet au, bu;
    for (const IntVec& m : a) {
      if (m[j] < shift) continue;  // covers nothing above the split
      IntVec m2 = m;
      m2[j] -= shift;
      au.insert(std::move(m2));
    }
    for (IntVec m : b) {
      m[j] = std::max(Int(m[j] - shift), Int(0));
      bu.insert(std::move(m));
    }
    if (auto w = search(cu, std::move(au), std::move(bu), depth + 1)) {
      (*w)[j] += shift;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

DualStats& dual_stats() {
  static DualStats stats;
  return stats;
}

bool is_in_IA(const IntBox& box, const Antichain& a, const IntVec& x) {
  if (!box.contains(x)) return false;
  for (const IntVec& m : a)
    if (dominates(m, x)) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    IntVec y = unit_step(x, j, -1);
    bool dominated = false;
    for (const IntVec& m : a)
      if (dominates(m, y)) { dominated = true; break; }
    if (!dominated) return false;
  }
  // the origin is only minimal-non-dominated when A is empty; with nonempty A
  // the loop above enforces minimality for nonzero x
  if (std::all_of(x.begin(), x.end(), [](const Int& v) { return sgn(v) == 0; }))
    return a.empty();
  return true;
}

VecSet brute_IA(const IntBox& box, const Antichain& a, unsigned long long cap) {
  const std::size_t n = box.dim();
  std::vector<std::vector<Int>> grid(n);
  unsigned long long points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    grid[j].push_back(0);
    for (const IntVec& m : a)
      if (m[j] < box.c[j]) grid[j].push_back(m[j] + 1);
    std::sort(grid[j].begin(), grid[j].end());
    grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
    points *= grid[j].size();
    if (points > cap) throw std::length_error("brute_IA: candidate grid exceeds capacity");
  }
  VecSet out;
  std::vector<std::size_t> pos(n, 0);
  IntVec x(n);
  for (unsigned long long i = 0; i < points; ++i) {
    unsigned long long rem = i;
    for (std::size_t j = n; j-- > 0;) {
      pos[j] = rem % grid[j].size();
      rem /= grid[j].size();
    }
    for (std::size_t j = 0; j < n; ++j) x[j] = grid[j][pos[j]];
    if (is_in_IA(box, a, x)) out.insert(x);
  }
  return out;
}

std::optional<IntVec> find_uncovered(const IntBox& box, const VecSet& maximal,
                                     const VecSet& minimal) {
  if (box.dim() == 0) {
    // the empty-dimension box has the single point (); covered iff any family
    // member exists
    if (!maximal.empty() || !minimal.empty()) return std::nullopt;
    return IntVec{};
  }
  return search(box.c, maximal, minimal, 0);
}

IntVec minimalize_against(const IntBox& box, const Antichain& a, IntVec x) {
  auto non_dominated = [&](const IntVec& y) {
    for (const IntVec& m : a)
      if (dominates(m, y)) return false;
    return true;
  };
  for (std::size_t j = 0; j < x.size(); ++j) {
    Int lo = 0, hi = x[j];
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      IntVec y = x;
      y[j] = mid;
      if (non_dominated(y))
        hi = mid;
      else
        lo = mid + 1;
    }
    x[j] = hi;
  }
  return x;
}

DualOutcome dual_step(const DualInstance& inst, bool validate) {
  if (validate) {
    for (const IntVec& m : inst.a)
      if (!inst.box.contains(m))
        throw std::invalid_argument("dual_step: A member outside the box");
    for (const IntVec& m : inst.b)
      if (!is_in_IA(inst.box, inst.a, m))
        throw std::invalid_argument("dual_step: B member not in I(A)");
  }
  auto gap = find_uncovered(inst.box, inst.a.members(), inst.b);
  if (!gap) return {};
  IntVec w = minimalize_against(inst.box, inst.a, std::move(*gap));
  if (!is_in_IA(inst.box, inst.a, w) || inst.b.count(w))
    throw std::logic_error("dual_step: witness post-check failed");
  return {std::move(w)};
}

}  // namespace monogen
