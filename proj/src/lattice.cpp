#include "monogen/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monogen {

void check_same_dim(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
}

bool dominates(const IntVec& x, const IntVec& y) {
  check_same_dim(x, y);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] < y[j]) return false;
  return true;
}

IntVec meet(const IntVec& x, const IntVec& y) {
  check_same_dim(x, y);
  IntVec z(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) z[j] = std::min(x[j], y[j]);
  return z;
}

IntVec join(const IntVec& x, const IntVec& y) {
  check_same_dim(x, y);
  IntVec z(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) z[j] = std::max(x[j], y[j]);
  return z;
}

std::string vec_to_string(const IntVec& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) os << ",";
    os << x[j].get_str();
  }
  os << ")";
  return os.str();
}

IntBox::IntBox(IntVec upper) : c(std::move(upper)) {
  for (const Int& v : c)
    if (v < 0) throw std::invalid_argument("IntBox: negative upper corner");
}

bool IntBox::contains(const IntVec& x) const {
  if (x.size() != c.size()) return false;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (x[j] < 0 || x[j] > c[j]) return false;
  return true;
}

unsigned long long IntBox::volume(unsigned long long cap) const {
  Int v = 1;
  for (const Int& cj : c) {
    v *= cj + 1;
    if (mpz_cmp_ui(v.get_mpz_t(), cap) > 0)
      throw std::length_error("box volume exceeds capacity limit");
  }
  return v.get_ui();
}

bool Antichain::covers(const IntVec& x) const {
  for (const IntVec& m : members_) {
    if (orient_ == Orientation::MaximalKept ? dominates(m, x) : dominates(x, m))
      return true;
  }
  return false;
}

bool Antichain::insert(const IntVec& x) {
  if (covers(x)) return false;
  for (auto it = members_.begin(); it != members_.end();) {
    bool absorbed = orient_ == Orientation::MaximalKept ? dominates(x, *it)
                                                        : dominates(*it, x);
    it = absorbed ? members_.erase(it) : std::next(it);
  }
  members_.insert(x);
  return true;
}

bool next_point(IntVec& x, const IntVec& c) {
  for (std::size_t j = c.size(); j-- > 0;) {
    if (x[j] < c[j]) {
      ++x[j];
      return true;
    }
    x[j] = 0;
  }
  return false;
}

IntVec decode_index(unsigned long long idx, const IntVec& c) {
  IntVec x(c.size());
  for (std::size_t j = c.size(); j-- > 0;) {
    unsigned long long w = mpz_get_ui(Int(c[j] + 1).get_mpz_t());
    x[j] = static_cast<unsigned long>(idx % w);
    idx /= w;
  }
  return x;
}

}  // namespace monogen
