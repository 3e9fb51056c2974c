#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace treeauto {

// Letters are 0..size-1; the regular rooted tree of that degree has the
// finite letter words as vertices.
struct Alphabet {
  int size = 2;
};

// A vertex of the tree: a finite word of letters, the empty word being the
// root. Prints as '.'-separated letters ("1.0").
class TreeWord {
 public:
  TreeWord() = default;
  explicit TreeWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  int level() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }
  void push_back(int x) { letters_.push_back(x); }

  TreeWord prefix(int n) const;
  TreeWord concat(const TreeWord& tail) const;
  std::string str() const;

  bool operator==(const TreeWord&) const = default;

 private:
  std::vector<int> letters_;
};

// Permutation of {0..degree-1}, stored as the image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates bijection
  static Perm identity(int degree);
  // Disjoint-cycle input; a letter repeated anywhere is an error.
  static Perm from_cycles(int degree,
                          const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Perm compose(const Perm& rhs) const;  // apply rhs first
  Perm inverse() const;
  Perm power(long long n) const;

  // Complete decomposition, cycles ordered by least element and each cycle
  // started at its least element.
  std::vector<std::vector<int>> cycles(bool include_trivial) const;
  int cycle_length_of(int x) const;
  std::uint64_t order_saturated(std::uint64_t cap) const;
  std::string cycle_str() const;  // "(0 3 1 2)", identity prints "id"

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

// One letter of a group word: a presentation state, possibly inverted.
struct Factor {
  int state = 0;
  int sign = 1;  // +1 or -1

  bool operator==(const Factor&) const = default;
};

// Freely reduced word over the states of a presentation. Products apply the
// rightmost factor first: (g*h)(v) = g(h(v)).
class GroupWord {
 public:
  GroupWord() = default;
  static GroupWord state(int s);

  void append(Factor f);  // cancels against the current last factor
  void append(const GroupWord& w);
  GroupWord inverse() const;
  GroupWord pow(int n) const;

  bool empty() const { return factors_.empty(); }
  int size() const { return static_cast<int>(factors_.size()); }
  const std::vector<Factor>& factors() const { return factors_; }

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Factor> factors_;
};

GroupWord operator*(const GroupWord& a, const GroupWord& b);

struct WordHash {
  std::size_t operator()(const GroupWord& w) const;
};

inline GroupWord conjugate(const GroupWord& h, const GroupWord& g) {
  // h g h^-1
  return h * g * h.inverse();
}
inline GroupWord commutator(const GroupWord& g, const GroupWord& h) {
  // [g,h] = g h g^-1 h^-1
  return g * h * g.inverse() * h.inverse();
}

}  // namespace treeauto
