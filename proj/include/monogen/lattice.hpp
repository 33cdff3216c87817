#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "monogen/rational.hpp"

namespace monogen {

// Point of the integer lattice Z_+^n.
using IntVec = std::vector<Int>;

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

using VecSet = std::set<IntVec, LexLess>;

void check_same_dim(const IntVec& x, const IntVec& y);

// x >= y componentwise.
bool dominates(const IntVec& x, const IntVec& y);
IntVec meet(const IntVec& x, const IntVec& y);
IntVec join(const IntVec& x, const IntVec& y);

std::string vec_to_string(const IntVec& x);

inline IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec unit_step(const IntVec& x, std::size_t j, int delta) {
  IntVec y = x;
  y[j] += delta;
  return y;
}

// The box C = {x : 0 <= x <= c}.
struct IntBox {
  IntVec c;

  IntBox() = default;
  explicit IntBox(IntVec upper);

  std::size_t dim() const { return c.size(); }
  bool contains(const IntVec& x) const;
  // Number of lattice points, assuming it fits; throws past `cap`.
  unsigned long long volume(unsigned long long cap) const;
};

enum class Orientation { MaximalKept, MinimalKept };

// Set of pairwise incomparable vectors.  Insertion keeps either the maximal
// or the minimal elements of everything seen, per orientation.  Iteration is
// in lexicographic order of entries.
class Antichain {
 public:
  explicit Antichain(Orientation o) : orient_(o) {}

  Orientation orientation() const { return orient_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const IntVec& x) const { return members_.count(x) > 0; }

  // Returns true if x survived (was not absorbed by an existing member).
  bool insert(const IntVec& x);

  // True iff some member dominates x (maximal-kept) / is dominated by x
  // (minimal-kept), i.e. x is absorbed.
  bool covers(const IntVec& x) const;

  const VecSet& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  Orientation orient_;
  VecSet members_;
};

// Odometer step through the box [0,c] in row-major order; returns false after
// wrapping past c.
bool next_point(IntVec& x, const IntVec& c);

// Point with the given row-major rank (volume must fit the index type).
IntVec decode_index(unsigned long long idx, const IntVec& c);

}  // namespace monogen
