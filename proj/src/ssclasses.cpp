#include "lt/ssclasses.hpp"

#include <algorithm>
#include <set>

#include "lt/error.hpp"

namespace lt {

GroupContext::GroupContext(RootDatum rd, FrobeniusData fr) : rd_(std::move(rd)), fr_(std::move(fr)) {
  require(fr_.sigma.rows() == rd_.rank(), Errc::ShapeMismatch, "Frobenius data has the wrong rank");
  sigma_inv_ = SmallMatrix::identity(rd_.rank());
  while (!(sigma_inv_ * fr_.sigma).is_identity()) sigma_inv_ = sigma_inv_ * fr_.sigma;
  const auto& W = rd_.weyl();
  for (std::size_t w = 0; w < W.order(); ++w) {
    char_action_.push_back(W.character_action(static_cast<int>(w)).to_int_matrix());
    tori_.push_back(std::make_shared<const FiniteTorus>(rd_, fr_, static_cast<int>(w)));
  }
}

ContextPtr GroupContext::make(const RootDatum& rd, const FrobeniusData& fr) {
  return std::make_shared<const GroupContext>(rd, fr);
}

ContextPtr GroupContext::split(const RootDatum& rd, int64_t q) {
  return make(rd, FrobeniusData::split(q, rd.rank()));
}

QmodZVec GroupContext::act(int x, const QmodZVec& y) const { return y.transformed(char_action_[x]); }

int GroupContext::twisted_conjugate(int x, int w) const {
  const auto& W = weyl();
  const SmallMatrix m = W.elements[x] * W.elements[w] * fr_.sigma * W.elements[W.inverses[x]] * sigma_inv_;
  const int r = W.find(m);
  require(r >= 0, Errc::InvalidArgument, "sigma does not normalize the Weyl group");
  return r;
}

QmodZVec GroupContext::canonical_point(const QmodZVec& y) const {
  QmodZVec best = y;
  for (std::size_t x = 0; x < weyl().order(); ++x) {
    QmodZVec z = act(static_cast<int>(x), y);
    if (z < best) best = std::move(z);
  }
  return best;
}

PairKey GroupContext::canonical_pair(const PairKey& pr) const {
  PairKey best = pr;
  for (std::size_t x = 0; x < weyl().order(); ++x) {
    PairKey c{twisted_conjugate(static_cast<int>(x), pr.w), act(static_cast<int>(x), pr.theta)};
    if (c < best) best = std::move(c);
  }
  return best;
}

int64_t GroupContext::transporter_count(const PairKey& a, const PairKey& b) const {
  int64_t n = 0;
  for (std::size_t x = 0; x < weyl().order(); ++x)
    if (twisted_conjugate(static_cast<int>(x), a.w) == b.w && act(static_cast<int>(x), a.theta) == b.theta) ++n;
  return n;
}

int64_t GroupContext::stabilizer_order(const PairKey& pr) const { return transporter_count(pr, pr); }

const std::vector<GeomClass>& GroupContext::classes() const {
  std::call_once(classes_once_, [this] {
    std::set<QmodZVec> points;
    for (const auto& t : tori_)
      for (int64_t k = 0; k < t->order(); ++k) points.insert(canonical_point(t->character(k)));
    for (const auto& pt : points) {
      int witness = -1;
      for (std::size_t w = 0; w < tori_.size() && witness < 0; ++w)
        if (tori_[w]->is_character(pt)) witness = static_cast<int>(w);
      require(witness >= 0, Errc::InvalidArgument, "class without a witness");
      class_index_.emplace(pt, static_cast<int>(classes_.size()));
      classes_.push_back(GeomClass{pt, witness});
    }
  });
  return classes_;
}

int GroupContext::class_index(const QmodZVec& canonical) const {
  classes();
  auto it = class_index_.find(canonical);
  return it == class_index_.end() ? -1 : it->second;
}

const std::vector<PairKey>& GroupContext::pair_classes() const {
  std::call_once(pairs_once_, [this] {
    std::set<PairKey> keys;
    for (std::size_t w = 0; w < tori_.size(); ++w)
      for (int64_t k = 0; k < tori_[w]->order(); ++k)
        keys.insert(canonical_pair(PairKey{static_cast<int>(w), tori_[w]->character(k)}));
    pairs_.assign(keys.begin(), keys.end());
  });
  return pairs_;
}

std::string GroupContext::pair_label(const PairKey& pr) const {
  return "w=" + weyl().elements[pr.w].to_string() + ";\xCE\xB8=" + pr.theta.to_string();
}

bool GroupContext::same_as(const GroupContext& o) const {
  return this == &o || (rd_ == o.rd_ && fr_.q == o.fr_.q && fr_.sigma == o.fr_.sigma);
}

GeomClass kappa(const GroupContext& ctx, int w, const QmodZVec& theta) {
  require(ctx.torus(w)->is_character(theta), Errc::InvalidArgument,
          "theta = " + theta.to_string() + " is not a character of T^{F_w}");
  const QmodZVec pt = ctx.canonical_point(theta);
  const int i = ctx.class_index(pt);
  require(i >= 0, Errc::InvalidArgument, "class not enumerated");
  return ctx.classes()[i];
}

const std::vector<GeomClass>& enumerate_classes(const GroupContext& ctx) { return ctx.classes(); }

GeomClass rho_ss(const DualMorphism& m, const GroupContext& source, const QmodZVec& class_point_prime) {
  require(m.source == source.datum(), Errc::DatumMismatch, "morphism source does not match the context");
  const QmodZVec pt = source.canonical_point(class_point_prime.transformed(m.A.transpose()));
  const int i = source.class_index(pt);
  require(i >= 0, Errc::InvalidArgument, "image point " + pt.to_string() + " is not an F-stable class");
  return source.classes()[i];
}

}  // namespace lt
