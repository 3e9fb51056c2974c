#include "treeauto/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treeauto/errors.hpp"

namespace treeauto {

TreeWord TreeWord::prefix(int n) const {
  return TreeWord(std::vector<int>(letters_.begin(), letters_.begin() + n));
}

TreeWord TreeWord::concat(const TreeWord& tail) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return TreeWord(std::move(out));
}

std::string TreeWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw Error("permutation image list is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 0 || x >= degree)
        throw Error("cycle letter " + std::to_string(x) + " out of range");
      if (used[static_cast<std::size_t>(x)])
        throw Error("repeated letter " + std::to_string(x) + " in cycles");
      used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] =
          cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

Perm Perm::compose(const Perm& rhs) const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x)
    images[static_cast<std::size_t>(x)] = (*this)(rhs(x));
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x)
    images[static_cast<std::size_t>((*this)(x))] = x;
  return Perm(std::move(images));
}

Perm Perm::power(long long n) const {
  Perm base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n)
                               : static_cast<unsigned long long>(n);
  Perm out = identity(degree());
  while (e) {
    if (e & 1) out = out.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return out;
}

std::vector<std::vector<int>> Perm::cycles(bool include_trivial) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cycle;
    int y = x;
    do {
      seen[static_cast<std::size_t>(y)] = true;
      cycle.push_back(y);
      y = (*this)(y);
    } while (y != x);
    if (include_trivial || cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

int Perm::cycle_length_of(int x) const {
  int len = 1;
  for (int y = (*this)(x); y != x; y = (*this)(y)) ++len;
  return len;
}

std::uint64_t Perm::order_saturated(std::uint64_t cap) const {
  std::uint64_t ord = 1;
  for (const auto& cycle : cycles(false)) {
    std::uint64_t len = cycle.size();
    std::uint64_t g = std::gcd(ord, len);
    if (ord / g > cap / len) return cap + 1;
    ord = ord / g * len;
    if (ord > cap) return cap + 1;
  }
  return ord;
}

std::string Perm::cycle_str() const {
  auto nontrivial = cycles(false);
  if (nontrivial.empty()) return "id";
  std::string out;
  for (const auto& cycle : nontrivial) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

GroupWord GroupWord::state(int s) {
  GroupWord w;
  w.factors_.push_back({s, 1});
  return w;
}

void GroupWord::append(Factor f) {
  if (!factors_.empty() && factors_.back().state == f.state &&
      factors_.back().sign == -f.sign) {
    factors_.pop_back();
    return;
  }
  factors_.push_back(f);
}

void GroupWord::append(const GroupWord& w) {
  for (const Factor& f : w.factors_) append(f);
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.factors_.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    out.factors_.push_back({it->state, -it->sign});
  return out;
}

GroupWord GroupWord::pow(int n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  int e = n < 0 ? -n : n;
  GroupWord out;
  for (int i = 0; i < e; ++i) out.append(base);
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.append(b);
  return out;
}

std::size_t WordHash::operator()(const GroupWord& w) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const Factor& f : w.factors()) {
    mix(static_cast<std::uint64_t>(f.state) * 2 +
        static_cast<std::uint64_t>(f.sign < 0));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace treeauto
