#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdbl {

/// A set of row/column indices of a formal context, stored as a 64-bit mask.
/// Contexts are therefore limited to 64 objects and 64 attributes, which is
/// far beyond what brute-force enumeration can visit anyway.
class IndexSet {
public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet full(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr IndexSet& insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; return *this; }
  constexpr IndexSet& remove(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); return *this; }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  /// Complement relative to a carrier of size n.
  constexpr IndexSet complement(std::size_t n) const { return IndexSet(~bits_ & full(n).bits_); }

  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

private:
  std::uint64_t bits_ = 0;
};

using ObjectSet = IndexSet;
using AttributeSet = IndexSet;

/// A formal context (G, M, I): objects, attributes and a boolean incidence
/// matrix. Immutable after construction; copies share the payload, so passing
/// contexts by value is cheap. Equality is structural.
class FormalContext {
public:
  FormalContext() : data_(empty_data()) {}

  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence) {
    auto d = std::make_shared<Data>();
    if (objects.size() > 64 || attributes.size() > 64)
      throw std::invalid_argument("context larger than 64x64 is not supported");
    check_unique(objects, "object");
    check_unique(attributes, "attribute");
    if (incidence.size() != objects.size())
      throw std::invalid_argument("incidence row count does not match object count");
    d->objects = std::move(objects);
    d->attributes = std::move(attributes);
    d->rows.assign(d->objects.size(), IndexSet{});
    d->cols.assign(d->attributes.size(), IndexSet{});
    for (std::size_t g = 0; g < d->objects.size(); ++g) {
      if (incidence[g].size() != d->attributes.size())
        throw std::invalid_argument("incidence row " + std::to_string(g) + " has wrong length");
      for (std::size_t m = 0; m < d->attributes.size(); ++m)
        if (incidence[g][m]) {
          d->rows[g].insert(m);
          d->cols[m].insert(g);
        }
    }
    data_ = std::move(d);
  }

  std::size_t object_count() const { return data_->objects.size(); }
  std::size_t attribute_count() const { return data_->attributes.size(); }
  const std::vector<std::string>& object_names() const { return data_->objects; }
  const std::vector<std::string>& attribute_names() const { return data_->attributes; }
  const std::string& object_name(std::size_t g) const { return data_->objects.at(g); }
  const std::string& attribute_name(std::size_t m) const { return data_->attributes.at(m); }

  bool incidence(std::size_t g, std::size_t m) const { return row(g).contains(m); }
  /// Attributes of object g as a mask.
  AttributeSet row(std::size_t g) const {
    if (g >= object_count()) throw std::out_of_range("object index out of range");
    return data_->rows[g];
  }
  /// Objects carrying attribute m as a mask.
  ObjectSet column(std::size_t m) const {
    if (m >= attribute_count()) throw std::out_of_range("attribute index out of range");
    return data_->cols[m];
  }

  ObjectSet all_objects() const { return IndexSet::full(object_count()); }
  AttributeSet all_attributes() const { return IndexSet::full(attribute_count()); }

  /// Index lookup by label; throws if absent.
  std::size_t object_index(const std::string& name) const {
    return find_in(data_->objects, name, "object");
  }
  std::size_t attribute_index(const std::string& name) const {
    return find_in(data_->attributes, name, "attribute");
  }
  bool has_object(const std::string& name) const {
    return std::find(data_->objects.begin(), data_->objects.end(), name) != data_->objects.end();
  }
  bool has_attribute(const std::string& name) const {
    return std::find(data_->attributes.begin(), data_->attributes.end(), name) != data_->attributes.end();
  }

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->objects == b.data_->objects && a.data_->attributes == b.data_->attributes &&
           a.data_->rows == b.data_->rows;
  }

private:
  struct Data {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<IndexSet> rows;  // rows[g] = attributes of g
    std::vector<IndexSet> cols;  // cols[m] = objects having m
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto d = std::make_shared<Data>();
    return d;
  }
  static void check_unique(const std::vector<std::string>& names, const char* what) {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument(std::string("duplicate ") + what + " label");
  }
  static std::size_t find_in(const std::vector<std::string>& v, const std::string& name,
                             const char* what) {
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) throw std::out_of_range(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<std::size_t>(it - v.begin());
  }

  std::shared_ptr<const Data> data_;
};

/// A' = attributes common to all objects in A. prime of the empty set is the
/// full opposite sort (vacuous universal).
inline AttributeSet prime_objects(const FormalContext& ctx, ObjectSet a) {
  if (!a.subset_of(ctx.all_objects())) throw std::out_of_range("object set out of range");
  AttributeSet result = ctx.all_attributes();
  for (std::size_t g : a.members()) result = result & ctx.row(g);
  return result;
}

/// B' = objects carrying every attribute in B.
inline ObjectSet prime_attributes(const FormalContext& ctx, AttributeSet b) {
  if (!b.subset_of(ctx.all_attributes())) throw std::out_of_range("attribute set out of range");
  ObjectSet result = ctx.all_objects();
  for (std::size_t m : b.members()) result = result & ctx.column(m);
  return result;
}

enum class SemiconceptKind { Left, Right, Both };

/// A semiconcept (A, B) of a context: A' = B (Left), B' = A (Right), or both
/// (a concept). Instances are only created through make_left / make_right /
/// the algebra operations, so the defining equation always holds and `kind`
/// is exact, never an approximation.
class Semiconcept {
public:
  const FormalContext& context() const { return ctx_; }
  ObjectSet extent() const { return extent_; }
  AttributeSet intent() const { return intent_; }
  SemiconceptKind kind() const { return kind_; }

  /// x is meet-idempotent (x meet x = x) iff extent' = intent.
  bool left_idempotent() const { return kind_ != SemiconceptKind::Right; }
  /// x is join-idempotent (x join x = x) iff intent' = extent.
  bool right_idempotent() const { return kind_ != SemiconceptKind::Left; }

  friend bool operator==(const Semiconcept& a, const Semiconcept& b) {
    return a.extent_ == b.extent_ && a.intent_ == b.intent_ && a.ctx_ == b.ctx_;
  }
  /// Orders by (extent, intent) bit patterns; used for deterministic listings.
  friend bool operator<(const Semiconcept& a, const Semiconcept& b) {
    if (a.extent_ != b.extent_) return a.extent_ < b.extent_;
    return a.intent_ < b.intent_;
  }

private:
  friend Semiconcept make_left(const FormalContext&, ObjectSet);
  friend Semiconcept make_right(const FormalContext&, AttributeSet);
  friend Semiconcept top(const FormalContext&);
  friend Semiconcept bottom(const FormalContext&);

  Semiconcept(FormalContext ctx, ObjectSet e, AttributeSet i, SemiconceptKind k)
      : ctx_(std::move(ctx)), extent_(e), intent_(i), kind_(k) {}

  FormalContext ctx_;
  ObjectSet extent_;
  AttributeSet intent_;
  SemiconceptKind kind_;
};

/// (A, A'); promoted to Both when A'' = A.
inline Semiconcept make_left(const FormalContext& ctx, ObjectSet a) {
  AttributeSet b = prime_objects(ctx, a);
  auto kind = prime_attributes(ctx, b) == a ? SemiconceptKind::Both : SemiconceptKind::Left;
  return Semiconcept(ctx, a, b, kind);
}

/// (B', B); promoted to Both when B'' = B.
inline Semiconcept make_right(const FormalContext& ctx, AttributeSet b) {
  ObjectSet a = prime_attributes(ctx, b);
  auto kind = prime_objects(ctx, a) == b ? SemiconceptKind::Both : SemiconceptKind::Right;
  return Semiconcept(ctx, a, b, kind);
}

/// top = (G, {}); a Right semiconcept, and a concept only when G' is empty.
inline Semiconcept top(const FormalContext& ctx) {
  auto kind = prime_objects(ctx, ctx.all_objects()).empty() ? SemiconceptKind::Both
                                                            : SemiconceptKind::Right;
  return Semiconcept(ctx, ctx.all_objects(), AttributeSet{}, kind);
}

/// bottom = ({}, M).
inline Semiconcept bottom(const FormalContext& ctx) {
  auto kind = prime_attributes(ctx, ctx.all_attributes()).empty() ? SemiconceptKind::Both
                                                                  : SemiconceptKind::Left;
  return Semiconcept(ctx, ObjectSet{}, ctx.all_attributes(), kind);
}

inline void require_same_context(const Semiconcept& x, const Semiconcept& y) {
  if (!(x.context() == y.context()))
    throw std::invalid_argument("semiconcepts belong to different contexts");
}

inline Semiconcept meet(const Semiconcept& x, const Semiconcept& y) {
  require_same_context(x, y);
  return make_left(x.context(), x.extent() & y.extent());
}

inline Semiconcept join(const Semiconcept& x, const Semiconcept& y) {
  require_same_context(x, y);
  return make_right(x.context(), x.intent() & y.intent());
}

inline Semiconcept negation(const Semiconcept& x) {
  return make_left(x.context(), x.extent().complement(x.context().object_count()));
}

inline Semiconcept opposition(const Semiconcept& x) {
  return make_right(x.context(), x.intent().complement(x.context().attribute_count()));
}

inline Semiconcept vee(const Semiconcept& x, const Semiconcept& y) {
  return negation(meet(negation(x), negation(y)));
}

inline Semiconcept wedge(const Semiconcept& x, const Semiconcept& y) {
  return opposition(join(opposition(x), opposition(y)));
}

/// The quasi-order of the double Boolean algebra, by its defining equations
/// x meet y = x meet x and x join y = y join y. Coincides with componentwise
/// containment (extent(x) <= extent(y), intent(y) <= intent(x)); the test
/// suite checks that equivalence rather than assuming it.
inline bool leq(const Semiconcept& x, const Semiconcept& y) {
  require_same_context(x, y);
  return meet(x, y) == meet(x, x) && join(x, y) == join(y, y);
}

inline bool is_concept(const Semiconcept& x) { return x.kind() == SemiconceptKind::Both; }

/// All semiconcepts: { (A, A') : A <= G } united with { (B', B) : B <= M },
/// deduplicated (the overlap is exactly the set of concepts) and sorted by
/// (extent, intent) bits. Refuses carriers above `bound` per sort.
inline std::vector<Semiconcept> enumerate_semiconcepts(const FormalContext& ctx,
                                                       std::size_t bound = 12) {
  if (ctx.object_count() > bound || ctx.attribute_count() > bound)
    throw std::length_error("context exceeds enumeration bound " + std::to_string(bound));
  std::vector<Semiconcept> out;
  out.reserve((std::size_t{1} << ctx.object_count()) + (std::size_t{1} << ctx.attribute_count()));
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << ctx.object_count()); ++a)
    out.push_back(make_left(ctx, ObjectSet(a)));
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << ctx.attribute_count()); ++b)
    out.push_back(make_right(ctx, AttributeSet(b)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Concepts only, i.e. enumerate_semiconcepts filtered to closed pairs.
inline std::vector<Semiconcept> enumerate_concepts(const FormalContext& ctx,
                                                   std::size_t bound = 12) {
  auto all = enumerate_semiconcepts(ctx, bound);
  std::erase_if(all, [](const Semiconcept& x) { return !is_concept(x); });
  return all;
}

/// No two objects share a row and no two attributes share a column.
inline bool is_clarified(const FormalContext& ctx) {
  for (std::size_t g1 = 0; g1 < ctx.object_count(); ++g1)
    for (std::size_t g2 = g1 + 1; g2 < ctx.object_count(); ++g2)
      if (ctx.row(g1) == ctx.row(g2)) return false;
  for (std::size_t m1 = 0; m1 < ctx.attribute_count(); ++m1)
    for (std::size_t m2 = m1 + 1; m2 < ctx.attribute_count(); ++m2)
      if (ctx.column(m1) == ctx.column(m2)) return false;
  return true;
}

}  // namespace pdbl
