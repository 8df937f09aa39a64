#pragma once

// Geometric semisimple classes as canonical W-orbits of torsion points, rational
// pair classes of (w, theta), and the maps kappa and rho_ss between them.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lt/dualmorph.hpp"
#include "lt/finitetorus.hpp"

namespace lt {

struct GeomClass {
  QmodZVec point;  // lexicographically least in its W-orbit
  int witness_w = 0;

  std::string label() const { return "\xCE\xB8\xCC\x83=" + point.to_string(); }
  friend bool operator==(const GeomClass& a, const GeomClass& b) { return a.point == b.point; }
  friend auto operator<=>(const GeomClass& a, const GeomClass& b) { return a.point <=> b.point; }
};

/// A pair (w, theta) with theta a character of T^{F_w}; ordered by (w index, theta).
struct PairKey {
  int w = 0;
  QmodZVec theta;

  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend std::strong_ordering operator<=>(const PairKey& a, const PairKey& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.theta <=> b.theta;
  }
};

/// A root datum with Frobenius data, plus the tori and class lists built on it.
class GroupContext {
 public:
  GroupContext(RootDatum rd, FrobeniusData fr);
  static std::shared_ptr<const GroupContext> make(const RootDatum& rd, const FrobeniusData& fr);
  static std::shared_ptr<const GroupContext> split(const RootDatum& rd, int64_t q);

  const RootDatum& datum() const { return rd_; }
  const FrobeniusData& frobenius() const { return fr_; }
  const WeylGroup& weyl() const { return rd_.weyl(); }
  int64_t q() const { return fr_.q; }
  int nu() const { return rd_.num_positive_roots(); }

  std::shared_ptr<const FiniteTorus> torus(int w) const { return tori_[w]; }

  /// x acting on X* (Q/Z): x^{-T} y.
  QmodZVec act(int x, const QmodZVec& y) const;
  /// x w sigma x^{-1} sigma^{-1}
  int twisted_conjugate(int x, int w) const;

  QmodZVec canonical_point(const QmodZVec& y) const;
  PairKey canonical_pair(const PairKey& pr) const;
  /// #{x in W : x.(w, theta) = (w, theta)}
  int64_t stabilizer_order(const PairKey& pr) const;
  /// #{x in W : x.a = b}
  int64_t transporter_count(const PairKey& a, const PairKey& b) const;

  const std::vector<GeomClass>& classes() const;
  /// -1 if the point is not the canonical point of an enumerated class.
  int class_index(const QmodZVec& canonical) const;
  const std::vector<PairKey>& pair_classes() const;

  std::string pair_label(const PairKey& pr) const;
  bool same_as(const GroupContext& o) const;

 private:
  RootDatum rd_;
  FrobeniusData fr_;
  SmallMatrix sigma_inv_;
  std::vector<IntMatrix> char_action_;
  std::vector<std::shared_ptr<const FiniteTorus>> tori_;

  mutable std::once_flag classes_once_, pairs_once_;
  mutable std::vector<GeomClass> classes_;
  mutable std::map<QmodZVec, int> class_index_;
  mutable std::vector<PairKey> pairs_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

GeomClass kappa(const GroupContext& ctx, int w, const QmodZVec& theta);
const std::vector<GeomClass>& enumerate_classes(const GroupContext& ctx);
/// Class of A^T c' on the source side.
GeomClass rho_ss(const DualMorphism& m, const GroupContext& source, const QmodZVec& class_point_prime);

}  // namespace lt
