#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <pdbl/context.hpp>

namespace pdbl {

/// A binary relation on a carrier {0..n-1}, one successor mask per element.
class BinaryRelation {
public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n) : n_(n), rows_(n) {
    if (n > 64) throw std::invalid_argument("relation carrier larger than 64 is not supported");
  }
  BinaryRelation(std::size_t n, std::vector<IndexSet> rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.size() != n_) throw std::invalid_argument("relation row count mismatch");
    for (auto r : rows_)
      if (!r.subset_of(IndexSet::full(n_))) throw std::invalid_argument("relation entry out of range");
  }

  static BinaryRelation identity(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t i = 0; i < n; ++i) r.add(i, i);
    return r;
  }
  static BinaryRelation complete(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t i = 0; i < n; ++i) r.rows_[i] = IndexSet::full(n);
    return r;
  }

  std::size_t size() const { return n_; }
  bool related(std::size_t i, std::size_t j) const { return successors(i).contains(j); }
  /// E(i) = { j : i E j }.
  IndexSet successors(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("relation index out of range");
    return rows_[i];
  }
  void add(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("relation index out of range");
    rows_[i].insert(j);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j : rows_[i].members()) out.emplace_back(i, j);
    return out;
  }

  bool reflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!rows_[i].contains(i)) return false;
    return true;
  }
  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j : rows_[i].members())
        if (!rows_[j].contains(i)) return false;
    return true;
  }
  bool transitive() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j : rows_[i].members())
        if (!rows_[j].subset_of(rows_[i])) return false;
    return true;
  }
  bool equivalence() const { return reflexive() && symmetric() && transitive(); }

  friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) = default;

private:
  std::size_t n_ = 0;
  std::vector<IndexSet> rows_;
};

struct RelationProperties {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
};

inline RelationProperties relation_properties(const BinaryRelation& rel) {
  return {rel.reflexive(), rel.symmetric(), rel.transitive()};
}

/// A generalised approximation space (W, E); Pawlakian when E is an
/// equivalence, which is detected at construction.
class ApproximationSpace {
public:
  explicit ApproximationSpace(BinaryRelation rel)
      : rel_(std::move(rel)), pawlakian_(rel_.equivalence()) {}

  std::size_t size() const { return rel_.size(); }
  const BinaryRelation& relation() const { return rel_; }
  bool pawlakian() const { return pawlakian_; }

private:
  BinaryRelation rel_;
  bool pawlakian_;
};

/// lower(A) = { x : E(x) <= A }
inline IndexSet lower_approx(const BinaryRelation& rel, IndexSet a) {
  if (!a.subset_of(IndexSet::full(rel.size()))) throw std::out_of_range("set out of range");
  IndexSet out;
  for (std::size_t x = 0; x < rel.size(); ++x)
    if (rel.successors(x).subset_of(a)) out.insert(x);
  return out;
}

/// upper(A) = { x : E(x) meets A }
inline IndexSet upper_approx(const BinaryRelation& rel, IndexSet a) {
  if (!a.subset_of(IndexSet::full(rel.size()))) throw std::out_of_range("set out of range");
  IndexSet out;
  for (std::size_t x = 0; x < rel.size(); ++x)
    if (rel.successors(x).intersects(a)) out.insert(x);
  return out;
}

inline IndexSet lower_approx(const ApproximationSpace& s, IndexSet a) {
  return lower_approx(s.relation(), a);
}
inline IndexSet upper_approx(const ApproximationSpace& s, IndexSet a) {
  return upper_approx(s.relation(), a);
}

/// A Kripke context ((G,R),(M,S),I): a formal context together with relations
/// on each sort.
class KripkeContext {
public:
  KripkeContext() = default;
  KripkeContext(FormalContext base, BinaryRelation obj_rel, BinaryRelation attr_rel)
      : base_(std::move(base)), obj_rel_(std::move(obj_rel)), attr_rel_(std::move(attr_rel)) {
    if (obj_rel_.size() != base_.object_count())
      throw std::invalid_argument("object relation carrier does not match |G|");
    if (attr_rel_.size() != base_.attribute_count())
      throw std::invalid_argument("attribute relation carrier does not match |M|");
  }
  /// A plain context viewed as a Kripke context with empty relations.
  explicit KripkeContext(FormalContext base)
      : base_(std::move(base)),
        obj_rel_(base_.object_count()),
        attr_rel_(base_.attribute_count()) {}

  const FormalContext& base() const { return base_; }
  const BinaryRelation& object_relation() const { return obj_rel_; }
  const BinaryRelation& attribute_relation() const { return attr_rel_; }

  bool reflexive() const { return obj_rel_.reflexive() && attr_rel_.reflexive(); }
  bool symmetric() const { return obj_rel_.symmetric() && attr_rel_.symmetric(); }
  bool transitive() const { return obj_rel_.transitive() && attr_rel_.transitive(); }
  bool pawlakian() const { return obj_rel_.equivalence() && attr_rel_.equivalence(); }

  friend bool operator==(const KripkeContext& a, const KripkeContext& b) {
    return a.base_ == b.base_ && a.obj_rel_ == b.obj_rel_ && a.attr_rel_ == b.attr_rel_;
  }

private:
  FormalContext base_;
  BinaryRelation obj_rel_;
  BinaryRelation attr_rel_;
};

inline void require_over_base(const KripkeContext& kc, const Semiconcept& x) {
  if (!(x.context() == kc.base()))
    throw std::invalid_argument("semiconcept does not live over this Kripke context");
}

/// f_R((A,B)) = (lower_R(A), lower_R(A)'), always a left semiconcept.
inline Semiconcept f_R(const KripkeContext& kc, const Semiconcept& x) {
  require_over_base(kc, x);
  return make_left(kc.base(), lower_approx(kc.object_relation(), x.extent()));
}

/// f_S((A,B)) = (lower_S(B)', lower_S(B)), always a right semiconcept.
inline Semiconcept f_S(const KripkeContext& kc, const Semiconcept& x) {
  require_over_base(kc, x);
  return make_right(kc.base(), lower_approx(kc.attribute_relation(), x.intent()));
}

/// Dual of f_R in closed form: (upper_R(A), upper_R(A)'). Coincides with
/// neg(f_R(neg x)); the equality is property-tested rather than used here.
inline Semiconcept f_R_dual(const KripkeContext& kc, const Semiconcept& x) {
  require_over_base(kc, x);
  return make_left(kc.base(), upper_approx(kc.object_relation(), x.extent()));
}

inline Semiconcept f_S_dual(const KripkeContext& kc, const Semiconcept& x) {
  require_over_base(kc, x);
  return make_right(kc.base(), upper_approx(kc.attribute_relation(), x.intent()));
}

/// KC_SD: the Kripke context induced by row/column indistinguishability,
/// g1 E1 g2 iff I(g1) = I(g2), m1 E2 m2 iff I^-1(m1) = I^-1(m2). Both
/// relations are equivalences by construction.
inline KripkeContext induced_sd(const FormalContext& ctx) {
  BinaryRelation e1(ctx.object_count());
  for (std::size_t g1 = 0; g1 < ctx.object_count(); ++g1)
    for (std::size_t g2 = 0; g2 < ctx.object_count(); ++g2)
      if (ctx.row(g1) == ctx.row(g2)) e1.add(g1, g2);
  BinaryRelation e2(ctx.attribute_count());
  for (std::size_t m1 = 0; m1 < ctx.attribute_count(); ++m1)
    for (std::size_t m2 = 0; m2 < ctx.attribute_count(); ++m2)
      if (ctx.column(m1) == ctx.column(m2)) e2.add(m1, m2);
  return KripkeContext(ctx, std::move(e1), std::move(e2));
}

inline void require_pawlakian(const KripkeContext& kc) {
  if (!kc.pawlakian())
    throw std::invalid_argument("operation requires equivalence relations on both sorts");
}

/// Both components are unions of equivalence classes.
inline bool is_definable(const KripkeContext& kc, const Semiconcept& x) {
  require_pawlakian(kc);
  require_over_base(kc, x);
  return lower_approx(kc.object_relation(), x.extent()) == x.extent() &&
         lower_approx(kc.attribute_relation(), x.intent()) == x.intent();
}

/// Lower approximation of a semiconcept. Concepts approximate to themselves;
/// a left non-concept goes through the object space; a right non-concept
/// through the attribute space, where the lower approximation takes the
/// UPPER approximation of the intent (intents order contravariantly).
inline Semiconcept approx_lower(const KripkeContext& kc, const Semiconcept& x) {
  require_pawlakian(kc);
  require_over_base(kc, x);
  if (is_concept(x)) return x;
  if (x.kind() == SemiconceptKind::Left)
    return make_left(kc.base(), lower_approx(kc.object_relation(), x.extent()));
  return make_right(kc.base(), upper_approx(kc.attribute_relation(), x.intent()));
}

inline Semiconcept approx_upper(const KripkeContext& kc, const Semiconcept& x) {
  require_pawlakian(kc);
  require_over_base(kc, x);
  if (is_concept(x)) return x;
  if (x.kind() == SemiconceptKind::Left)
    return make_left(kc.base(), upper_approx(kc.object_relation(), x.extent()));
  return make_right(kc.base(), lower_approx(kc.attribute_relation(), x.intent()));
}

struct ConceptApproximation {
  Semiconcept lower;
  Semiconcept upper;
};

/// Concept approximation of an object set under KC_SD: the generated concept
/// when A is feasible (A'' = A), otherwise the closures of its rough
/// approximations.
inline ConceptApproximation saquer_approx_objects(const FormalContext& ctx, ObjectSet a) {
  auto sd = induced_sd(ctx);
  if (prime_attributes(ctx, prime_objects(ctx, a)) == a) {
    auto c = make_left(ctx, a);
    return {c, c};
  }
  auto lo = lower_approx(sd.object_relation(), a);
  auto hi = upper_approx(sd.object_relation(), a);
  return {make_right(ctx, prime_objects(ctx, lo)), make_right(ctx, prime_objects(ctx, hi))};
}

/// Dual clause for attribute sets: lower uses the upper rough approximation
/// of B and vice versa.
inline ConceptApproximation saquer_approx_attributes(const FormalContext& ctx, AttributeSet b) {
  auto sd = induced_sd(ctx);
  if (prime_objects(ctx, prime_attributes(ctx, b)) == b) {
    auto c = make_right(ctx, b);
    return {c, c};
  }
  auto hi = upper_approx(sd.attribute_relation(), b);
  auto lo = lower_approx(sd.attribute_relation(), b);
  return {make_left(ctx, prime_attributes(ctx, hi)), make_left(ctx, prime_attributes(ctx, lo))};
}

/// Concept approximation of an arbitrary pair (A, B): the meet (resp. join)
/// of the per-component concept approximations. Reproduces the published
/// one-sided-feasible case exactly; the doubly-infeasible case extends that
/// pattern symmetrically and is documented as experimental.
inline ConceptApproximation saquer_approx_pair(const FormalContext& ctx, ObjectSet a,
                                               AttributeSet b) {
  bool a_feasible = prime_attributes(ctx, prime_objects(ctx, a)) == a;
  bool b_feasible = prime_objects(ctx, prime_attributes(ctx, b)) == b;
  if (a_feasible && b_feasible && prime_objects(ctx, a) == b) {
    auto c = make_left(ctx, a);
    return {c, c};
  }
  auto ca = saquer_approx_objects(ctx, a);
  auto cb = saquer_approx_attributes(ctx, b);
  return {meet(ca.lower, cb.lower), join(ca.upper, cb.upper)};
}

}  // namespace pdbl
