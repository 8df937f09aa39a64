#pragma once

// Brute-force oracle: GL2, SL2, PGL2 (and the tori GL1, T2) over small fields,
// conjugacy classes, class-function algebra, Harish-Chandra induction and
// validated Deligne-Lusztig tables.

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lt/dlengine.hpp"
#include "lt/finitefield.hpp"

namespace lt {

class MatGroup {
 public:
  static constexpr int64_t kMaxOrder = 10000;

  /// name in {GL2, SL2, PGL2, GL1, T2}; q in {2, 3, 4, 5, 7}.
  MatGroup(const std::string& name, int64_t q);

  using Mat = std::array<FiniteField::Elt, 4>;  // a b / c d, entries in F_q inside K = F_{q^2}

  const std::string& name() const { return name_; }
  int64_t q() const { return q_; }
  const FiniteField& field() const { return *K_; }
  const RootDatum& datum() const { return rd_; }
  ContextPtr context() const { return ctx_; }

  std::size_t order() const { return elems_.size(); }
  const Mat& element(int i) const { return elems_[i]; }
  int index(const Mat& m) const;  // -1 if absent
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int identity() const { return identity_; }

  std::size_t num_classes() const { return reps_.size(); }
  int class_of(int i) const { return class_of_[i]; }
  int class_rep(int c) const { return reps_[c]; }
  int64_t class_size(int c) const { return sizes_[c]; }
  std::string class_label(int c) const;
  int class_by_label(const std::string& label) const;  // -1 if absent
  std::vector<int> central_elements() const;

  bool in_borel(int i) const { return elems_[i][2] == 0; }

  /// Concrete element for x in T^{F_w}; an injective homomorphism into G^F.
  int torus_element(int w, int64_t x) const { return torus_embed_[w][x]; }
  /// Abstract x in T^{F_w} for a concrete element of the torus image, -1 otherwise.
  int64_t torus_abstract(int w, int g) const;

  std::string matrix_string(const Mat& m) const;
  /// Trace of an element; only meaningful for GL2 and SL2.
  FiniteField::Elt trace(int i) const;

 private:
  Mat mul(const Mat& x, const Mat& y) const;
  Mat normalize(Mat m) const;
  int64_t code(const Mat& m) const;

  std::string name_;
  int64_t q_;
  const FiniteField* K_;
  RootDatum rd_;
  ContextPtr ctx_;
  std::vector<Mat> elems_;
  std::unordered_map<int64_t, int> index_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<int> class_of_, reps_;
  std::vector<int64_t> sizes_;
  std::map<std::string, int> class_by_label_;
  std::vector<std::vector<int>> torus_embed_;
  std::vector<std::unordered_map<int, int64_t>> torus_abstract_;
};

struct ClassFunction {
  const MatGroup* group = nullptr;
  std::vector<Cyclo> values;  // per class

  static ClassFunction zero(const MatGroup& g);
  static ClassFunction delta(const MatGroup& g);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const Cyclo& c, const ClassFunction& a);

/// (1/|G|) sum_x f(x) conj(g(x))
Cyclo inner_cf(const ClassFunction& f, const ClassFunction& g);

/// Class multiplication coefficients a[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k}.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(const MatGroup& g);
  /// (f * g)(z) = sum_h f(z h^{-1}) g(h)
  ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) const;

 private:
  const MatGroup* g_;
  std::vector<int64_t> a_;
};

/// Ind_{B^F}^{G^F} of theta on the split torus, inflated over U.
ClassFunction hc_induction(const MatGroup& g, const QmodZVec& theta);

/// psi(trace x) with psi = psi_k composed with Tr_{F_q / F_p}; GL2 only.
ClassFunction trace_function(const MatGroup& g, int64_t psi_k = 1);

struct DLRow {
  ClassFunction values;
  bool ingested = false;
};

/// Deligne-Lusztig characters for every rational pair class of the group.
class DLTable {
 public:
  /// Split rows by Harish-Chandra induction; other rows from
  /// <data_dir>/<name>_q<q>.json. All four checks run before returning.
  static DLTable load(const MatGroup& g, const std::string& data_dir);
  /// Parses a table from JSON text and validates it.
  static DLTable from_json(const MatGroup& g, const std::string& text);

  const ClassFunction& character(const PairKey& canonical) const;
  const std::map<PairKey, DLRow>& rows() const { return rows_; }
  const MatGroup& group() const { return *g_; }

 private:
  void validate() const;
  const MatGroup* g_ = nullptr;
  std::map<PairKey, DLRow> rows_;
};

std::string default_data_dir();

ClassFunction realize(const DLTable& table, const UniformFunction& u);

/// Character values as JSON {group, q, pairs: [...]} for a set of rows.
std::string dl_table_json(const MatGroup& g, const std::map<PairKey, ClassFunction>& rows);

}  // namespace lt
