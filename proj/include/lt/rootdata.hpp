#pragma once

// Root data, duality, Weyl groups with lengths, and Levi subsystems.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lt/lattice.hpp"

namespace lt {

/// Small dense integer matrix for Weyl-group and Frobenius actions.
class SmallMatrix {
 public:
  SmallMatrix() = default;
  SmallMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
  SmallMatrix(int rows, int cols, std::vector<int64_t> a);

  static SmallMatrix identity(int n);
  static SmallMatrix from_int_matrix(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int64_t>& data() const { return a_; }

  int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  SmallMatrix transpose() const;
  std::vector<int64_t> apply(const std::vector<int64_t>& x) const;
  IntMatrix to_int_matrix() const;
  bool is_identity() const;

  friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b);
  friend SmallMatrix operator*(int64_t s, const SmallMatrix& a);
  friend SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b);
  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
  friend auto operator<=>(const SmallMatrix& a, const SmallMatrix& b) {
    return std::lexicographical_compare_three_way(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

using Vec = std::vector<int64_t>;

int64_t dot(const Vec& a, const Vec& b);

struct WeylGroup;

/// Root datum on X* = Z^r, X_* = Z^r with the standard dot product as pairing.
class RootDatum {
 public:
  RootDatum() = default;
  /// Validates the datum; simple_indices must index a simple system of roots.
  RootDatum(std::string name, int rank, std::vector<Vec> roots, std::vector<Vec> coroots, std::vector<int> simple);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const std::vector<Vec>& roots() const { return roots_; }
  const std::vector<Vec>& coroots() const { return coroots_; }
  const std::vector<int>& simple() const { return simple_; }

  bool is_positive(int root_index) const { return positive_[root_index]; }
  int num_positive_roots() const;
  int root_index(const Vec& root) const;  // -1 if absent
  int coroot_index(const Vec& coroot) const;

  /// Reflection s_alpha acting on cocharacters: x -> x - <alpha, x> alpha^vee.
  SmallMatrix reflection(int root_index) const;

  /// Weyl group, computed on first use (|W| <= 10^4 or GroupTooLarge).
  const WeylGroup& weyl() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_ && a.simple_ == b.simple_;
  }

 private:
  std::string name_;
  int rank_ = 0;
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  std::vector<int> simple_;
  std::vector<bool> positive_;
  std::shared_ptr<struct WeylCache> cache_;
};

/// Finite Weyl group stored as an explicit element list.
/// Elements are sorted by (length, matrix) and act on X_* by their matrices;
/// on X* they act by the inverse transpose.
struct WeylGroup {
  static constexpr std::size_t kMaxOrder = 10000;

  std::vector<SmallMatrix> elements;
  std::vector<int> lengths;
  std::vector<int> inverses;
  std::map<std::vector<int64_t>, int> index_of;
  std::vector<int> simple_reflections;  // element indices
  int identity = 0;

  std::size_t order() const { return elements.size(); }
  int find(const SmallMatrix& m) const;  // -1 if absent
  int multiply(int a, int b) const;
  /// Matrix of w on X* (inverse transpose).
  SmallMatrix character_action(int w) const { return elements[inverses[w]].transpose(); }
  int longest_length() const;
};

/// Subgroup of a Weyl group as a sorted list of element indices.
struct Subgroup {
  std::vector<int> members;

  std::size_t order() const { return members.size(); }
  bool contains(int w) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Closure of a generating set inside W.
Subgroup generate_subgroup(const WeylGroup& W, const std::vector<int>& generators);

/// Standard data: "GL", "SL", "PGL", "Sp" (n = 2 means Sp(4)), "Torus".
RootDatum build_standard(const std::string& family, int n);
/// Parses names like "GL(2)", "GL2", "SL(3)", "Torus(2)", "T2", "Sp(4)".
RootDatum datum_from_name(const std::string& name);
RootDatum dual(const RootDatum& rd);
RootDatum product(const RootDatum& a, const RootDatum& b);

struct Levi {
  RootDatum datum;
  Subgroup weyl;  // inside the ambient Weyl group
  std::vector<int> root_indices;
};

Levi levi_from_roots(const RootDatum& rd, const std::vector<int>& subset);

}  // namespace lt
