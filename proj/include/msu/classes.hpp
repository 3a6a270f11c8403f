#pragma once

#include "msu/embedding.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace msu {

template <typename Scalar>
using SpaceFamily = std::vector<MetricSpace<Scalar>>;

using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// R(i, j) = member i embeds isometrically into member j.
struct EmbedQuasiOrder {
  BoolMatrix relation;

  std::size_t size() const { return std::size_t(relation.rows()); }
  bool operator()(std::size_t i, std::size_t j) const { return relation(Eigen::Index(i), Eigen::Index(j)); }
};

/// Classes of mutual embeddability, the partial order they inherit, and its
/// maximal classes. Each class lists member indices in ascending order; classes
/// are ordered by their smallest member.
struct QuotientPoset {
  std::vector<std::vector<std::size_t>> classes;
  BoolMatrix order;  ///< order(a, b): class a embeds into class b
  std::vector<std::size_t> maximal;
};

inline bool is_reflexive(const BoolMatrix& r) {
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    if (!r(i, i)) return false;
  return true;
}

inline bool is_transitive(const BoolMatrix& r) {
  const Eigen::Index n = r.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (r(i, j))
        for (Eigen::Index k = 0; k < n; ++k)
          if (r(j, k) && !r(i, k)) return false;
  return true;
}

template <typename Scalar>
EmbedQuasiOrder embed_quasiorder(const SpaceFamily<Scalar>& fam, const EmbeddingOptions& opts = {}) {
  const auto n = Eigen::Index(fam.size());
  EmbedQuasiOrder qo{BoolMatrix::Constant(n, n, false)};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      EmbeddingOptions one = opts;
      one.limit = 1;
      qo.relation(i, j) = i == j || !find_embeddings(fam[std::size_t(i)], fam[std::size_t(j)], one).empty();
    }
  if (!is_transitive(qo.relation)) fail(ErrorCode::Internal, "embeddability relation is not transitive");
  return qo;
}

/// Quotient by mutual embeddability.
inline QuotientPoset quotient_poset(const EmbedQuasiOrder& qo) {
  const auto& r = qo.relation;
  if (r.rows() != r.cols()) fail(ErrorCode::InvalidInput, "relation is not square");
  if (!is_reflexive(r) || !is_transitive(r)) fail(ErrorCode::NotTransitive, "relation is not a quasi-order");
  const std::size_t n = qo.size();
  QuotientPoset poset;
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != n) continue;
    const std::size_t c = poset.classes.size();
    poset.classes.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (qo(i, j) && qo(j, i)) {
        class_of[j] = c;
        poset.classes.back().push_back(j);
      }
  }
  const auto m = Eigen::Index(poset.classes.size());
  poset.order = BoolMatrix::Constant(m, m, false);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) poset.order(a, b) = qo(poset.classes[std::size_t(a)][0], poset.classes[std::size_t(b)][0]);
  for (Eigen::Index a = 0; a < m; ++a) {
    bool maximal = true;
    for (Eigen::Index b = 0; b < m && maximal; ++b)
      if (a != b && poset.order(a, b)) maximal = false;
    if (maximal) poset.maximal.push_back(std::size_t(a));
  }
  return poset;
}

struct MinimalSubclass {
  std::vector<std::size_t> members;  ///< input indices, one per maximal class
  QuotientPoset poset;
};

/// One representative (smallest input index) of each maximal class.
template <typename Scalar>
MinimalSubclass minimal_universal_subclass(const SpaceFamily<Scalar>& fam, const EmbeddingOptions& opts = {}) {
  if (fam.empty()) fail(ErrorCode::EmptyFamily, "family is empty");
  MinimalSubclass out;
  out.poset = quotient_poset(embed_quasiorder(fam, opts));
  for (auto c : out.poset.maximal) out.members.push_back(out.poset.classes[c].front());
  return out;
}

/// Every member embeds into y. The first failing member index is returned
/// through `failing` when given.
template <typename Scalar>
bool is_universal_space(const SpaceFamily<Scalar>& fam, const MetricSpace<Scalar>& y, double tol = kDefaultTolerance,
                        std::optional<std::size_t>* failing = nullptr) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!embeds(fam[i], y, tol)) {
      if (failing) *failing = i;
      return false;
    }
  return true;
}

struct MinimalityReport {
  bool minimal_universal = false;
  std::optional<std::size_t> failing_member;  ///< a member that does not embed
  std::optional<std::size_t> failing_point;   ///< a point whose removal keeps universality
};

/// Universal, and every point is needed: for each y some member fails to embed
/// into Y minus y.
template <typename Scalar>
MinimalityReport is_minimal_universal_space(const SpaceFamily<Scalar>& fam, const MetricSpace<Scalar>& y,
                                            double tol = kDefaultTolerance) {
  MinimalityReport report;
  std::optional<std::size_t> member;
  if (!is_universal_space(fam, y, tol, &member)) {
    report.failing_member = member;
    return report;
  }
  for (std::size_t p = 0; p < y.size(); ++p)
    if (is_universal_space(fam, y.without_point(p), tol)) {
      report.failing_point = p;
      return report;
    }
  report.minimal_universal = true;
  return report;
}

struct NonexistenceReport {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Whether the family contains two non-isometric members that are both
/// universal for the family. Never true for families of finite spaces.
template <typename Scalar>
NonexistenceReport nonexistence_condition_i(const SpaceFamily<Scalar>& fam, double tol = kDefaultTolerance) {
  std::vector<std::size_t> universal;
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (is_universal_space(fam, fam[i], tol)) universal.push_back(i);
  NonexistenceReport report;
  for (std::size_t a = 0; a < universal.size(); ++a)
    for (std::size_t b = a + 1; b < universal.size(); ++b)
      if (!is_isometric(fam[universal[a]], fam[universal[b]], tol)) {
        report.holds = true;
        report.witness = std::pair{universal[a], universal[b]};
        return report;
      }
  return report;
}

}  // namespace msu
