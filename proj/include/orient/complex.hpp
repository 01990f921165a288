#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fault.hpp"
#include "linalg.hpp"

namespace orient {

// Augmented directed complex with a chosen basis, truncated at max_degree.
// differential(q) is the matrix of C_{q+1} -> C_q (rows: degree q basis).
class BasedComplex {
 public:
  BasedComplex() : BasedComplex(0, {{}}, {}, {}) {}

  BasedComplex(int max_degree, std::vector<std::vector<std::string>> basis, std::vector<IntMatrix> differential,
               Vec augmentation, bool truncated = false)
      : max_degree_(max_degree),
        basis_(std::move(basis)),
        diff_(std::move(differential)),
        aug_(std::move(augmentation)),
        truncated_(truncated) {
    if (max_degree_ < 0) throw StructuralError("max_degree must be non-negative");
    if (basis_.size() != static_cast<std::size_t>(max_degree_) + 1)
      throw StructuralError("basis has " + std::to_string(basis_.size()) + " degrees, expected " +
                            std::to_string(max_degree_ + 1));
    if (diff_.size() != static_cast<std::size_t>(max_degree_))
      throw StructuralError("expected " + std::to_string(max_degree_) + " differential matrices, got " +
                            std::to_string(diff_.size()));
    for (int q = 0; q < max_degree_; ++q) {
      const auto& d = diff_[q];
      if (d.rows() != rank(q) || d.cols() != rank(q + 1))
        throw StructuralError("differential at q=" + std::to_string(q) + " has shape " + std::to_string(d.rows()) +
                              "x" + std::to_string(d.cols()) + ", expected " + std::to_string(rank(q)) + "x" +
                              std::to_string(rank(q + 1)));
    }
    if (aug_.size() != rank(0)) throw StructuralError("augmentation length does not match degree 0 basis");
    index_.resize(basis_.size());
    for (std::size_t q = 0; q < basis_.size(); ++q)
      for (std::size_t i = 0; i < basis_[q].size(); ++i)
        if (!index_[q].emplace(basis_[q][i], i).second)
          throw StructuralError("duplicate basis label '" + basis_[q][i] + "' in degree " + std::to_string(q));
  }

  int max_degree() const { return max_degree_; }
  bool truncated() const { return truncated_; }

  std::size_t rank(int q) const {
    if (q < 0 || q > max_degree_) return 0;
    return basis_[q].size();
  }

  const std::vector<std::string>& basis(int q) const {
    static const std::vector<std::string> empty;
    if (q < 0 || q > max_degree_) return empty;
    return basis_[q];
  }
  const std::vector<std::vector<std::string>>& bases() const { return basis_; }

  // Matrix of C_{q+1} -> C_q; zero of the right shape outside the stored range.
  IntMatrix differential(int q) const {
    if (q >= 0 && q < max_degree_) return diff_[q];
    return IntMatrix(rank(q), rank(q + 1));
  }
  const std::vector<IntMatrix>& differentials() const { return diff_; }

  // Image of the i-th basis element of degree q (q >= 1) in degree q-1.
  Vec boundary(int q, std::size_t i) const { return diff_[q - 1].column(i); }

  const Vec& augmentation() const { return aug_; }

  std::optional<std::size_t> find(int q, std::string_view label) const {
    if (q < 0 || q > max_degree_) return std::nullopt;
    auto it = index_[q].find(std::string(label));
    if (it == index_[q].end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(int q, std::string_view label) const {
    auto i = find(q, label);
    if (!i) throw StructuralError("no basis element '" + std::string(label) + "' in degree " + std::to_string(q));
    return *i;
  }

  std::size_t total_rank() const {
    std::size_t n = 0;
    for (const auto& b : basis_) n += b.size();
    return n;
  }

  friend bool operator==(const BasedComplex& a, const BasedComplex& b) {
    return a.max_degree_ == b.max_degree_ && a.basis_ == b.basis_ && a.diff_ == b.diff_ && a.aug_ == b.aug_ &&
           a.truncated_ == b.truncated_;
  }

 private:
  int max_degree_;
  std::vector<std::vector<std::string>> basis_;
  std::vector<IntMatrix> diff_;
  Vec aug_;
  bool truncated_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

using ComplexPtr = std::shared_ptr<const BasedComplex>;

inline ComplexPtr share(BasedComplex c) { return std::make_shared<const BasedComplex>(std::move(c)); }

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

// Law checks only; shape problems are rejected when the complex is built.
inline ValidationReport validate_complex(const BasedComplex& c) {
  ValidationReport rep;
  for (int q = 0; q + 1 < c.max_degree(); ++q)
    if (!(c.differential(q) * c.differential(q + 1)).is_zero()) rep.add("dd-nonzero at q=" + std::to_string(q));
  if (c.max_degree() >= 1) {
    const IntMatrix d0 = c.differential(0);
    for (std::size_t j = 0; j < d0.cols(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < d0.rows(); ++i) s += c.augmentation()[i] * d0(i, j);
      if (s != 0) {
        rep.add("augmentation-boundary-nonzero at " + c.basis(1)[j]);
      }
    }
  }
  for (std::size_t i = 0; i < c.rank(0); ++i)
    if (c.augmentation()[i] != 1) rep.add("augmentation-not-unital at " + c.basis(0)[i]);
  return rep;
}

inline BasedComplex truncate(const BasedComplex& c, int max_degree) {
  if (max_degree >= c.max_degree()) return c;
  std::vector<std::vector<std::string>> basis(c.bases().begin(), c.bases().begin() + max_degree + 1);
  std::vector<IntMatrix> diff(c.differentials().begin(), c.differentials().begin() + max_degree);
  return BasedComplex(max_degree, std::move(basis), std::move(diff), c.augmentation(), true);
}

inline const std::string kBottom = "bot";
inline const std::string kTop = "top";

// Suspension: poles in degree 0, C shifted up by one, d(g) = eps(g)(top - bot) on old vertices.
inline BasedComplex suspend(const BasedComplex& c) {
  const int n = c.max_degree() + 1;
  std::vector<std::vector<std::string>> basis(n + 1);
  basis[0] = {kBottom, kTop};
  for (int q = 1; q <= n; ++q) basis[q] = c.basis(q - 1);
  std::vector<IntMatrix> diff;
  IntMatrix d0(2, c.rank(0));
  const bool drop = fault::is(fault::Kind::drop_suspension_augmentation);
  for (std::size_t j = 0; j < c.rank(0); ++j) {
    const Int e = drop ? 1 : c.augmentation()[j];
    d0(0, j) = -e;
    d0(1, j) = e;
  }
  diff.push_back(d0);
  for (int q = 1; q < n; ++q) diff.push_back(c.differential(q - 1));
  return BasedComplex(n, std::move(basis), std::move(diff), Vec{1, 1}, c.truncated());
}

inline std::string pair_label(const std::string& a, const std::string& b) { return a + "|" + b; }

// Tensor product with basis ordered by (degree of left factor, left index, right index).
inline BasedComplex tensor(const BasedComplex& c, const BasedComplex& d) {
  const int n = c.max_degree() + d.max_degree();
  // position[q][i] = offset of the block with left degree i inside degree q.
  std::vector<std::vector<std::size_t>> offset(n + 1);
  std::vector<std::vector<std::string>> basis(n + 1);
  for (int q = 0; q <= n; ++q) {
    offset[q].assign(q + 1, 0);
    for (int i = 0; i <= q; ++i) {
      offset[q][i] = basis[q].size();
      for (const auto& a : c.basis(i))
        for (const auto& b : d.basis(q - i)) basis[q].push_back(pair_label(a, b));
    }
  }
  auto index = [&](int q, int i, std::size_t a, std::size_t b) { return offset[q][i] + a * d.rank(q - i) + b; };
  const bool drop_sign = fault::is(fault::Kind::drop_tensor_sign);
  std::vector<IntMatrix> diff;
  for (int q = 0; q < n; ++q) {
    IntMatrix m(basis[q].size(), basis[q + 1].size());
    for (int i = 0; i <= q + 1; ++i) {
      const int j = q + 1 - i;
      if (c.rank(i) == 0 || d.rank(j) == 0) continue;
      const IntMatrix dc = c.differential(i - 1);
      const IntMatrix dd = d.differential(j - 1);
      const Int sign = (drop_sign || i % 2 == 0) ? 1 : -1;
      for (std::size_t a = 0; a < c.rank(i); ++a)
        for (std::size_t b = 0; b < d.rank(j); ++b) {
          const std::size_t col = index(q + 1, i, a, b);
          if (i >= 1)
            for (std::size_t a2 = 0; a2 < c.rank(i - 1); ++a2)
              if (dc(a2, a) != 0) m(index(q, i - 1, a2, b), col) += dc(a2, a);
          if (j >= 1)
            for (std::size_t b2 = 0; b2 < d.rank(j - 1); ++b2)
              if (dd(b2, b) != 0) m(index(q, i, a, b2), col) += sign * dd(b2, b);
        }
    }
    diff.push_back(std::move(m));
  }
  Vec aug;
  for (std::size_t a = 0; a < c.rank(0); ++a)
    for (std::size_t b = 0; b < d.rank(0); ++b) aug.push_back(c.augmentation()[a] * d.augmentation()[b]);
  return BasedComplex(n, std::move(basis), std::move(diff), std::move(aug), c.truncated() || d.truncated());
}

inline BasedComplex total_dual(const BasedComplex& c) {
  std::vector<IntMatrix> diff;
  for (const auto& m : c.differentials()) diff.push_back(m.negated());
  return BasedComplex(c.max_degree(), c.bases(), std::move(diff), c.augmentation(), c.truncated());
}

inline const std::string kLeftTag = "L/";
inline const std::string kRightTag = "R/";

inline BasedComplex direct_sum(const BasedComplex& c, const BasedComplex& d) {
  const int n = std::max(c.max_degree(), d.max_degree());
  std::vector<std::vector<std::string>> basis(n + 1);
  for (int q = 0; q <= n; ++q) {
    for (const auto& a : c.basis(q)) basis[q].push_back(kLeftTag + a);
    for (const auto& b : d.basis(q)) basis[q].push_back(kRightTag + b);
  }
  std::vector<IntMatrix> diff;
  for (int q = 0; q < n; ++q) {
    IntMatrix m(basis[q].size(), basis[q + 1].size());
    const IntMatrix dc = c.differential(q), dd = d.differential(q);
    for (std::size_t i = 0; i < dc.rows(); ++i)
      for (std::size_t j = 0; j < dc.cols(); ++j) m(i, j) = dc(i, j);
    for (std::size_t i = 0; i < dd.rows(); ++i)
      for (std::size_t j = 0; j < dd.cols(); ++j) m(c.rank(q) + i, c.rank(q + 1) + j) = dd(i, j);
    diff.push_back(std::move(m));
  }
  Vec aug = c.augmentation();
  aug.insert(aug.end(), d.augmentation().begin(), d.augmentation().end());
  return BasedComplex(n, std::move(basis), std::move(diff), std::move(aug), c.truncated() || d.truncated());
}

// Direct sum with the vertex d0 of D identified with the vertex c0 of C.
inline BasedComplex wedge_at_point(const BasedComplex& c, std::string_view c0, const BasedComplex& d,
                                   std::string_view d0) {
  const std::size_t ci = c.index_of(0, c0);
  const std::size_t di = d.index_of(0, d0);
  const int n = std::max(c.max_degree(), d.max_degree());
  std::vector<std::vector<std::string>> basis(n + 1);
  // Row of each degree 0 vertex of D inside the wedge.
  std::vector<std::size_t> drow(d.rank(0));
  for (const auto& a : c.basis(0)) basis[0].push_back(kLeftTag + a);
  for (std::size_t j = 0; j < d.rank(0); ++j) {
    if (j == di) {
      drow[j] = ci;
      continue;
    }
    drow[j] = basis[0].size();
    basis[0].push_back(kRightTag + d.basis(0)[j]);
  }
  for (int q = 1; q <= n; ++q) {
    for (const auto& a : c.basis(q)) basis[q].push_back(kLeftTag + a);
    for (const auto& b : d.basis(q)) basis[q].push_back(kRightTag + b);
  }
  std::vector<IntMatrix> diff;
  for (int q = 0; q < n; ++q) {
    IntMatrix m(basis[q].size(), basis[q + 1].size());
    const IntMatrix dc = c.differential(q), dd = d.differential(q);
    for (std::size_t i = 0; i < dc.rows(); ++i)
      for (std::size_t j = 0; j < dc.cols(); ++j) m(i, j) = dc(i, j);
    for (std::size_t i = 0; i < dd.rows(); ++i) {
      const std::size_t row = q == 0 ? drow[i] : c.rank(q) + i;
      for (std::size_t j = 0; j < dd.cols(); ++j) m(row, c.rank(q + 1) + j) += dd(i, j);
    }
    diff.push_back(std::move(m));
  }
  Vec aug = c.augmentation();
  for (std::size_t j = 0; j < d.rank(0); ++j)
    if (j != di) aug.push_back(d.augmentation()[j]);
  return BasedComplex(n, std::move(basis), std::move(diff), std::move(aug), c.truncated() || d.truncated());
}

// Morphism of based complexes: matrices[q] maps S_q -> T_q for q = 0..S.max_degree().
class AdcMorphism {
 public:
  AdcMorphism() = default;
  AdcMorphism(ComplexPtr source, ComplexPtr target, std::vector<IntMatrix> matrices)
      : src_(std::move(source)), tgt_(std::move(target)), mats_(std::move(matrices)) {
    if (mats_.size() != static_cast<std::size_t>(src_->max_degree()) + 1)
      throw StructuralError("morphism needs one matrix per source degree");
    for (int q = 0; q <= src_->max_degree(); ++q)
      if (mats_[q].rows() != tgt_->rank(q) || mats_[q].cols() != src_->rank(q))
        throw StructuralError("morphism matrix at q=" + std::to_string(q) + " has the wrong shape");
  }

  static AdcMorphism zero(ComplexPtr source, ComplexPtr target) {
    std::vector<IntMatrix> mats;
    for (int q = 0; q <= source->max_degree(); ++q) mats.emplace_back(target->rank(q), source->rank(q));
    return AdcMorphism(std::move(source), std::move(target), std::move(mats));
  }

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return tgt_; }
  const IntMatrix& matrix(int q) const { return mats_[q]; }
  IntMatrix& matrix(int q) { return mats_[q]; }
  const std::vector<IntMatrix>& matrices() const { return mats_; }
  Vec image(int q, std::size_t i) const { return mats_[q].column(i); }

  // Flat encoding of all entries; equal encodings mean equal morphisms between fixed complexes.
  std::vector<Int> encoding() const {
    std::vector<Int> e;
    for (const auto& m : mats_) e.insert(e.end(), m.data().begin(), m.data().end());
    return e;
  }

  friend bool operator==(const AdcMorphism& a, const AdcMorphism& b) { return a.mats_ == b.mats_; }

 private:
  ComplexPtr src_, tgt_;
  std::vector<IntMatrix> mats_;
};

struct EncodingHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline AdcMorphism identity_morphism(const ComplexPtr& c) {
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= c->max_degree(); ++q) mats.push_back(IntMatrix::identity(c->rank(q)));
  return AdcMorphism(c, c, std::move(mats));
}

// g after f.
inline AdcMorphism compose(const AdcMorphism& g, const AdcMorphism& f) {
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= f.source()->max_degree(); ++q) {
    if (q <= g.source()->max_degree())
      mats.push_back(g.matrix(q) * f.matrix(q));
    else
      mats.emplace_back(g.target()->rank(q), f.source()->rank(q));
  }
  return AdcMorphism(f.source(), g.target(), std::move(mats));
}

inline ValidationReport validate_morphism(const AdcMorphism& f) {
  ValidationReport rep;
  const auto& s = *f.source();
  const auto& t = *f.target();
  for (int q = 0; q <= s.max_degree(); ++q)
    if (!f.matrix(q).is_nonnegative()) rep.add("negative-coefficient at q=" + std::to_string(q));
  for (int q = 0; q < s.max_degree(); ++q)
    if (!(t.differential(q) * f.matrix(q + 1) == f.matrix(q) * s.differential(q)))
      rep.add("chain-law at q=" + std::to_string(q));
  for (std::size_t j = 0; j < s.rank(0); ++j) {
    Int e = 0;
    for (std::size_t i = 0; i < t.rank(0); ++i) e += t.augmentation()[i] * f.matrix(0)(i, j);
    if (e != s.augmentation()[j]) rep.add("augmentation-law at " + s.basis(0)[j]);
  }
  return rep;
}

// Suspension of a morphism between suspensions of the given complexes.
inline AdcMorphism suspend(const AdcMorphism& f, ComplexPtr suspended_source, ComplexPtr suspended_target) {
  std::vector<IntMatrix> mats;
  mats.push_back(IntMatrix::identity(2));
  for (const auto& m : f.matrices()) mats.push_back(m);
  return AdcMorphism(std::move(suspended_source), std::move(suspended_target), std::move(mats));
}

inline AdcMorphism suspend(const AdcMorphism& f) {
  return suspend(f, share(suspend(*f.source())), share(suspend(*f.target())));
}

// Inclusions of the two summands into wedge_at_point(c, c0, d, d0).
inline std::pair<AdcMorphism, AdcMorphism> wedge_inclusions(const ComplexPtr& c, std::string_view c0,
                                                            const ComplexPtr& d, std::string_view d0,
                                                            const ComplexPtr& wedge) {
  const std::size_t ci = c->index_of(0, c0);
  const std::size_t di = d->index_of(0, d0);
  std::vector<IntMatrix> left, right;
  for (int q = 0; q <= c->max_degree(); ++q) {
    IntMatrix m(wedge->rank(q), c->rank(q));
    for (std::size_t i = 0; i < c->rank(q); ++i) m(i, i) = 1;
    left.push_back(std::move(m));
  }
  for (int q = 0; q <= d->max_degree(); ++q) {
    IntMatrix m(wedge->rank(q), d->rank(q));
    for (std::size_t i = 0; i < d->rank(q); ++i) {
      std::size_t row;
      if (q == 0)
        row = i == di ? ci : wedge->index_of(0, kRightTag + d->basis(0)[i]);
      else
        row = c->rank(q) + i;
      m(row, i) = 1;
    }
    right.push_back(std::move(m));
  }
  return {AdcMorphism(c, wedge, std::move(left)), AdcMorphism(d, wedge, std::move(right))};
}

}  // namespace orient
