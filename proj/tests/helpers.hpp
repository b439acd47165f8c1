#pragma once

// Shared fixtures and independent brute-force oracles. Everything here is
// deliberately written against plain bool matrices, not against the library's
// bitset path, so it can serve as a second opinion in tests.

#include <pdbl/context.hpp>
#include <pdbl/kripke.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

using BoolMatrix = std::vector<std::vector<bool>>;

// A'' oracle helpers over a plain matrix.
inline std::set<std::size_t> naive_prime_objects(const BoolMatrix& inc, std::size_t n_attrs,
                                                 const std::set<std::size_t>& a) {
  std::set<std::size_t> out;
  for (std::size_t m = 0; m < n_attrs; ++m) {
    bool all = true;
    for (std::size_t g : a)
      if (!inc[g][m]) { all = false; break; }
    if (all) out.insert(m);
  }
  return out;
}

inline std::set<std::size_t> naive_prime_attributes(const BoolMatrix& inc, std::size_t n_objs,
                                                    const std::set<std::size_t>& b) {
  std::set<std::size_t> out;
  for (std::size_t g = 0; g < n_objs; ++g) {
    bool all = true;
    for (std::size_t m : b)
      if (!inc[g][m]) { all = false; break; }
    if (all) out.insert(g);
  }
  return out;
}

inline std::set<std::size_t> to_std_set(pdbl::IndexSet s) {
  std::set<std::size_t> out;
  for (auto i : s.members()) out.insert(i);
  return out;
}

inline pdbl::IndexSet from_std_set(const std::set<std::size_t>& s) {
  pdbl::IndexSet out;
  for (auto i : s) out.insert(i);
  return out;
}

// The five-animal context of the paper's running example:
// objects Leech, Bream, Frog, Dog, Cat; attributes a (needs water),
// b (lives in water), c (lives on land), g (can move).
inline pdbl::FormalContext animals_context() {
  return pdbl::FormalContext({"Leech", "Bream", "Frog", "Dog", "Cat"}, {"a", "b", "c", "g"},
                             {
                                 {true, true, false, true},   // Leech
                                 {true, true, false, true},   // Bream
                                 {true, true, true, true},    // Frog
                                 {true, false, true, true},   // Dog
                                 {true, false, true, true},   // Cat
                             });
}

// The zink instrument family context (14 historical instruments, 13 traits).
inline pdbl::FormalContext zink_context() {
  const std::vector<std::string> objects = {"1558", "1559", "1560", "1561", "1562", "1563", "1564",
                                            "4030", "1565", "1566", "1567", "1569", "1571", "4031"};
  const std::vector<std::string> attributes = {
      "Elfenbein Korpus",        "Leder Uberzug",          "Pergament Uberzug",
      "Messingschallstueck",     "aufgesetztes Mundstueck", "eingedrehtes Mundstueck",
      "gerade Form",             "gebogene Form",          "es1(Stimmgroesse)",
      "d1(Stimmgroesse)",        "a(Stimmgroesse)",        "g(Stimmgroesse)",
      "b(Stimmgroesse)"};
  auto row = [](std::initializer_list<int> marked) {
    std::vector<bool> r(13, false);
    for (int m : marked) r[static_cast<std::size_t>(m)] = true;
    return r;
  };
  BoolMatrix inc = {
      row({3, 4, 6, 11}),   // 1558: Messingschallstueck, aufgesetzt, gerade, g
      row({5, 6, 10}),      // 1559: eingedreht, gerade, a
      row({5, 6, 10}),      // 1560
      row({5, 6, 11}),      // 1561: eingedreht, gerade, g
      row({5, 6, 11}),      // 1562
      row({1, 4, 7, 8}),    // 1563: Leder, aufgesetzt, gebogen, es1
      row({1, 4, 7, 8}),    // 1564
      row({1, 4, 7, 8}),    // 4030
      row({1, 4, 7, 9}),    // 1565: ... d1
      row({1, 4, 7, 12}),   // 1566: ... b
      row({1, 4, 7, 12}),   // 1567
      row({1, 4, 7, 12}),   // 1569
      row({0, 4, 7, 12}),   // 1571: Elfenbein instead of Leder
      row({1, 4, 7, 12}),   // 4031
  };
  return pdbl::FormalContext(objects, attributes, inc);
}

inline pdbl::ObjectSet objects_by_name(const pdbl::FormalContext& ctx,
                                       std::initializer_list<const char*> names) {
  pdbl::ObjectSet s;
  for (auto* n : names) s.insert(ctx.object_index(n));
  return s;
}

inline pdbl::AttributeSet attributes_by_name(const pdbl::FormalContext& ctx,
                                             std::initializer_list<const char*> names) {
  pdbl::AttributeSet s;
  for (auto* n : names) s.insert(ctx.attribute_index(n));
  return s;
}

inline pdbl::FormalContext random_context(std::mt19937& rng, std::size_t max_objects = 5,
                                          std::size_t max_attributes = 5) {
  std::uniform_int_distribution<std::size_t> gdist(1, max_objects), mdist(1, max_attributes);
  std::bernoulli_distribution bit(0.5);
  std::size_t ng = gdist(rng), nm = mdist(rng);
  BoolMatrix inc(ng, std::vector<bool>(nm));
  for (auto& r : inc)
    for (std::size_t m = 0; m < nm; ++m) r[m] = bit(rng);
  std::vector<std::string> objs, attrs;
  for (std::size_t g = 0; g < ng; ++g) objs.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < nm; ++m) attrs.push_back("m" + std::to_string(m));
  return pdbl::FormalContext(objs, attrs, inc);
}

// Random semiconcept: a one-sided generator applied to a random subset.
inline pdbl::Semiconcept random_semiconcept(std::mt19937& rng, const pdbl::FormalContext& ctx) {
  std::bernoulli_distribution side(0.5);
  if (side(rng)) {
    std::uniform_int_distribution<std::uint64_t> mask(0, pdbl::IndexSet::full(ctx.object_count()).bits());
    return pdbl::make_left(ctx, pdbl::ObjectSet(mask(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> mask(0, pdbl::IndexSet::full(ctx.attribute_count()).bits());
  return pdbl::make_right(ctx, pdbl::AttributeSet(mask(rng)));
}

inline pdbl::BinaryRelation random_relation(std::mt19937& rng, std::size_t n) {
  pdbl::BinaryRelation rel(n);
  std::bernoulli_distribution bit(0.4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) rel.add(i, j);
  return rel;
}

inline pdbl::BinaryRelation reflexive_transitive_closure(pdbl::BinaryRelation rel) {
  const std::size_t n = rel.size();
  for (std::size_t i = 0; i < n; ++i) rel.add(i, i);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : rel.successors(i).members())
        for (std::size_t k : rel.successors(j).members())
          if (!rel.related(i, k)) { rel.add(i, k); changed = true; }
  }
  return rel;
}

// Random equivalence via a random block assignment.
inline pdbl::BinaryRelation random_equivalence(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> block(0, n == 0 ? 0 : n - 1);
  std::vector<std::size_t> cls(n);
  for (auto& c : cls) c = block(rng);
  pdbl::BinaryRelation rel(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cls[i] == cls[j]) rel.add(i, j);
  return rel;
}

enum class RelationFlavor { Any, ReflexiveTransitive, Equivalence };

inline pdbl::KripkeContext random_kripke_context(std::mt19937& rng, RelationFlavor flavor,
                                                 std::size_t max_objects = 4,
                                                 std::size_t max_attributes = 4) {
  auto base = random_context(rng, max_objects, max_attributes);
  auto mk = [&](std::size_t n) {
    switch (flavor) {
      case RelationFlavor::Any: return random_relation(rng, n);
      case RelationFlavor::ReflexiveTransitive:
        return reflexive_transitive_closure(random_relation(rng, n));
      case RelationFlavor::Equivalence: return random_equivalence(rng, n);
    }
    return pdbl::BinaryRelation(n);
  };
  return pdbl::KripkeContext(base, mk(base.object_count()), mk(base.attribute_count()));
}

}  // namespace testutil
