#include "jtl/module.hpp"

#include <algorithm>
#include <set>

#include "jtl/hom.hpp"

namespace jtl {

namespace {

std::string idx3(Elem a, Elem b, Elem c) {
  std::string s = "(" + std::to_string(a);
  if (b >= 0) s += "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  return s + ")";
}

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& t) {
  std::vector<Elem> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

ModulePtr validate_module(const RingPtr& ring, const ModuleData& data) {
  const int n = ring->size();
  const int m = data.size;
  if (m < 1) throw ShapeError("module size must be positive");
  if (!data.ring.empty() && data.ring != ring->name())
    throw ShapeError("module references ring '" + data.ring +
                     "' but was validated against '" + ring->name() + "'");
  if (static_cast<int>(data.add.size()) != m)
    throw ShapeError("module add table must have " + std::to_string(m) +
                     " rows");
  for (const auto& row : data.add) {
    if (static_cast<int>(row.size()) != m)
      throw ShapeError("module add table rows must have " + std::to_string(m) +
                       " entries");
    for (Elem e : row)
      if (e < 0 || e >= m) throw ShapeError("module add entry out of range");
  }
  if (static_cast<int>(data.act.size()) != n)
    throw ShapeError("module act table must have one row per ring element");
  for (const auto& row : data.act) {
    if (static_cast<int>(row.size()) != m)
      throw ShapeError("module act table rows must have " + std::to_string(m) +
                       " entries");
    for (Elem e : row)
      if (e < 0 || e >= m) throw ShapeError("module act entry out of range");
  }

  const auto& add = data.add;
  const auto& act = data.act;

  for (Elem x = 0; x < m; ++x)
    if (add[0][static_cast<std::size_t>(x)] != x)
      throw AxiomViolation("module-additive-identity", {0, x, -1},
                           idx3(0, x, -1));
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (add[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] !=
          add[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
        throw AxiomViolation("module-additive-commutativity", {x, y, -1},
                             idx3(x, y, -1));
  std::vector<Elem> neg(static_cast<std::size_t>(m), -1);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y)
      if (add[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == 0) {
        neg[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (neg[static_cast<std::size_t>(x)] < 0)
      throw AxiomViolation("module-additive-inverse", {x, -1, -1},
                           "no negative for " + std::to_string(x));
  }
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) {
        std::size_t sx = static_cast<std::size_t>(x);
        std::size_t sy = static_cast<std::size_t>(y);
        std::size_t sz = static_cast<std::size_t>(z);
        if (add[static_cast<std::size_t>(add[sx][sy])][sz] !=
            add[sx][static_cast<std::size_t>(add[sy][sz])])
          throw AxiomViolation("module-additive-associativity", {x, y, z},
                               idx3(x, y, z));
      }

  for (Elem x = 0; x < m; ++x)
    if (act[static_cast<std::size_t>(ring->one())]
           [static_cast<std::size_t>(x)] != x)
      throw AxiomViolation("unitality", {x, -1, -1},
                           "1*" + std::to_string(x) + " != " +
                               std::to_string(x));
  for (Elem r = 0; r < n; ++r)
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y) {
        std::size_t sr = static_cast<std::size_t>(r);
        std::size_t sx = static_cast<std::size_t>(x);
        std::size_t sy = static_cast<std::size_t>(y);
        if (act[sr][static_cast<std::size_t>(add[sx][sy])] !=
            add[static_cast<std::size_t>(act[sr][sx])]
               [static_cast<std::size_t>(act[sr][sy])])
          throw AxiomViolation("action-distributes-over-module-addition",
                               {r, x, y}, idx3(r, x, y));
      }
  for (Elem r = 0; r < n; ++r)
    for (Elem s = 0; s < n; ++s)
      for (Elem x = 0; x < m; ++x) {
        std::size_t sr = static_cast<std::size_t>(r);
        std::size_t ss = static_cast<std::size_t>(s);
        std::size_t sx = static_cast<std::size_t>(x);
        if (act[static_cast<std::size_t>(ring->add(r, s))][sx] !=
            add[static_cast<std::size_t>(act[sr][sx])]
               [static_cast<std::size_t>(act[ss][sx])])
          throw AxiomViolation("action-distributes-over-ring-addition",
                               {r, s, x}, idx3(r, s, x));
        if (act[static_cast<std::size_t>(ring->mul(r, s))][sx] !=
            act[sr][static_cast<std::size_t>(act[ss][sx])])
          throw AxiomViolation("action-associativity", {r, s, x},
                               idx3(r, s, x));
      }

  auto mod = std::shared_ptr<FiniteModule>(new FiniteModule());
  mod->ring_ = ring;
  mod->name_ = data.name;
  mod->size_ = m;
  mod->add_ = flatten(data.add);
  mod->act_ = flatten(data.act);
  mod->neg_ = std::move(neg);
  return mod;
}

ModulePtr regular_module(const RingPtr& ring) {
  const int n = ring->size();
  ModuleData d;
  d.name = "_" + ring->name();
  d.size = n;
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.act.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ring->add(i, j);
      d.act[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ring->mul(i, j);
    }
  return validate_module(ring, d);
}

bool is_submodule_set(const FiniteModule& m, const ElementSet& s) {
  if (s.universe() != m.size() || !s.contains(0)) return false;
  auto elems = s.elements();
  for (int x : elems)
    for (int y : elems)
      if (!s.contains(m.add(x, y))) return false;
  for (Elem r = 0; r < m.ring()->size(); ++r)
    for (int x : elems)
      if (!s.contains(m.act(r, x))) return false;
  return true;
}

QuotientModule module_quotient_full(const ModulePtr& m,
                                    const ElementSet& submodule) {
  if (!is_submodule_set(*m, submodule))
    throw NotSubmodule("module_quotient: not a submodule: " +
                       submodule.to_string());
  const int sz = m->size();
  std::vector<Elem> rep(static_cast<std::size_t>(sz));
  for (Elem x = 0; x < sz; ++x) {
    Elem best = x;
    for (int u : submodule.elements()) best = std::min(best, m->add(x, u));
    rep[static_cast<std::size_t>(x)] = best;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < sz; ++x)
    if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
  std::vector<Elem> class_of(static_cast<std::size_t>(sz));
  for (Elem x = 0; x < sz; ++x) {
    auto it = std::lower_bound(reps.begin(), reps.end(),
                               rep[static_cast<std::size_t>(x)]);
    class_of[static_cast<std::size_t>(x)] =
        static_cast<Elem>(it - reps.begin());
  }

  const int q = static_cast<int>(reps.size());
  const int n = m->ring()->size();
  ModuleData d;
  d.name = m->name() + "/" + submodule.to_string();
  d.size = q;
  d.add.assign(static_cast<std::size_t>(q), std::vector<Elem>(q));
  d.act.assign(static_cast<std::size_t>(n), std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          class_of[static_cast<std::size_t>(
              m->add(reps[static_cast<std::size_t>(i)],
                     reps[static_cast<std::size_t>(j)]))];
  for (Elem r = 0; r < n; ++r)
    for (int i = 0; i < q; ++i)
      d.act[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
          class_of[static_cast<std::size_t>(
              m->act(r, reps[static_cast<std::size_t>(i)]))];

  QuotientModule out;
  out.module = validate_module(m->ring(), d);
  out.class_of = std::move(class_of);
  out.rep_of = std::move(reps);
  return out;
}

ModulePtr module_quotient(const ModulePtr& m, const ElementSet& submodule) {
  return module_quotient_full(m, submodule).module;
}

Elem direct_sum_encode(const std::vector<int>& sizes,
                       const std::vector<Elem>& tuple) {
  Elem index = 0;
  for (std::size_t i = sizes.size(); i-- > 0;)
    index = index * sizes[i] + tuple[i];
  return index;
}

std::vector<Elem> direct_sum_decode(const std::vector<int>& sizes,
                                    Elem index) {
  std::vector<Elem> out(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out[i] = index % sizes[i];
    index /= sizes[i];
  }
  return out;
}

ModulePtr direct_sum(const std::vector<ModulePtr>& mods) {
  if (mods.empty()) throw ShapeError("direct_sum: empty summand list");
  const RingPtr& ring = mods.front()->ring();
  for (const auto& mod : mods)
    if (!mod->ring()->same_structure(*ring))
      throw ShapeError("direct_sum: summands over different rings");

  std::vector<int> sizes;
  long long total = 1;
  std::string name;
  for (const auto& mod : mods) {
    sizes.push_back(mod->size());
    total *= mod->size();
    if (!name.empty()) name += "(+)";
    name += mod->name();
  }
  const int sz = static_cast<int>(total);
  const int n = ring->size();

  ModuleData d;
  d.name = name;
  d.size = sz;
  d.add.assign(static_cast<std::size_t>(sz), std::vector<Elem>(sz));
  d.act.assign(static_cast<std::size_t>(n), std::vector<Elem>(sz));
  for (Elem x = 0; x < sz; ++x) {
    auto tx = direct_sum_decode(sizes, x);
    for (Elem y = 0; y < sz; ++y) {
      auto ty = direct_sum_decode(sizes, y);
      std::vector<Elem> t(mods.size());
      for (std::size_t i = 0; i < mods.size(); ++i)
        t[i] = mods[i]->add(tx[i], ty[i]);
      d.add[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          direct_sum_encode(sizes, t);
    }
    for (Elem r = 0; r < n; ++r) {
      std::vector<Elem> t(mods.size());
      for (std::size_t i = 0; i < mods.size(); ++i)
        t[i] = mods[i]->act(r, tx[i]);
      d.act[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] =
          direct_sum_encode(sizes, t);
    }
  }
  return validate_module(ring, d);
}

ModulePtr submodule_as_module(const ModulePtr& m, const ElementSet& members,
                              const std::string& name) {
  if (!is_submodule_set(*m, members))
    throw NotSubmodule("submodule_as_module: not a submodule: " +
                       members.to_string());
  auto elems = members.elements();
  const int q = static_cast<int>(elems.size());
  const int n = m->ring()->size();
  std::vector<Elem> index_of(static_cast<std::size_t>(m->size()), -1);
  for (int i = 0; i < q; ++i)
    index_of[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;

  ModuleData d;
  d.name = name.empty() ? m->name() + "|" + members.to_string() : name;
  d.size = q;
  d.add.assign(static_cast<std::size_t>(q), std::vector<Elem>(q));
  d.act.assign(static_cast<std::size_t>(n), std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index_of[static_cast<std::size_t>(
              m->add(elems[static_cast<std::size_t>(i)],
                     elems[static_cast<std::size_t>(j)]))];
  for (Elem r = 0; r < n; ++r)
    for (int i = 0; i < q; ++i)
      d.act[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
          index_of[static_cast<std::size_t>(
              m->act(r, elems[static_cast<std::size_t>(i)]))];
  return validate_module(m->ring(), d);
}

ElementSet submodule_generated(const FiniteModule& m,
                               const std::vector<Elem>& gens) {
  ElementSet span(m.size());
  span.insert(0);
  for (Elem g : gens) span.insert(g);
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = span.elements();
    for (int x : elems) {
      for (int y : elems) {
        Elem z = m.add(x, y);
        if (!span.contains(z)) {
          span.insert(z);
          changed = true;
        }
      }
      Elem nx = m.neg(x);
      if (!span.contains(nx)) {
        span.insert(nx);
        changed = true;
      }
      for (Elem r = 0; r < m.ring()->size(); ++r) {
        Elem z = m.act(r, x);
        if (!span.contains(z)) {
          span.insert(z);
          changed = true;
        }
      }
    }
  }
  return span;
}

ElementSet cyclic_submodule(const FiniteModule& m, Elem x) {
  ElementSet out(m.size());
  for (Elem r = 0; r < m.ring()->size(); ++r) out.insert(m.act(r, x));
  if (!is_submodule_set(m, out))
    throw InternalCheck("cyclic_submodule: Rm is not a submodule");
  return out;
}

namespace {

ElementSet sum_of_sets(const FiniteModule& m, const ElementSet& a,
                       const ElementSet& b) {
  ElementSet out(m.size());
  for (int x : a.elements())
    for (int y : b.elements()) out.insert(m.add(x, y));
  return out;
}

}  // namespace

std::vector<ElementSet> all_submodules(const FiniteModule& m,
                                       const Limits& limits) {
  if (m.size() > limits.max_module_size)
    throw BudgetExceeded("all_submodules: module size " +
                         std::to_string(m.size()) + " exceeds cap " +
                         std::to_string(limits.max_module_size));
  std::set<ElementSet> found;
  for (Elem x = 0; x < m.size(); ++x) found.insert(cyclic_submodule(m, x));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        ElementSet s = sum_of_sets(m, snapshot[i], snapshot[j]);
        if (found.insert(s).second) {
          changed = true;
          if (static_cast<int>(found.size()) > limits.max_submodules)
            throw BudgetExceeded("all_submodules: more than " +
                                 std::to_string(limits.max_submodules) +
                                 " submodules");
        }
      }
  }
  return {found.begin(), found.end()};
}

std::vector<ElementSet> maximal_submodules(const FiniteModule& m,
                                           const Limits& limits) {
  auto subs = all_submodules(m, limits);
  const ElementSet whole = ElementSet::full(m.size());
  std::vector<ElementSet> out;
  for (const auto& a : subs) {
    if (a == whole) continue;
    bool maximal = true;
    for (const auto& b : subs)
      if (b != whole && b != a && a.is_subset_of(b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<ElementSet> minimal_submodules(const FiniteModule& m,
                                           const Limits& limits) {
  auto subs = all_submodules(m, limits);
  std::vector<ElementSet> out;
  for (const auto& a : subs) {
    if (a.only_zero()) continue;
    bool minimal = true;
    for (const auto& b : subs)
      if (!b.only_zero() && b != a && b.is_subset_of(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

ElementSet radical(const FiniteModule& m, const Limits& limits) {
  auto maxes = maximal_submodules(m, limits);
  if (maxes.empty()) return ElementSet::full(m.size());
  ElementSet out = ElementSet::full(m.size());
  for (const auto& s : maxes) out = out.intersect(s);
  return out;
}

ModuleClass simple_modules(const RingPtr& ring, const Limits& limits) {
  auto reg = regular_module(ring);
  ModuleClass out;
  for (const auto& mu : maximal_left_ideals(*ring, limits)) {
    ModulePtr q = module_quotient(reg, mu);
    bool dup = false;
    for (const auto& prev : out)
      if (is_isomorphic(prev, q, limits)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(q);
  }
  return out;
}

ElementSet left_annihilator_of(const FiniteModule& m, const ElementSet& s) {
  ElementSet out(m.ring()->size());
  for (Elem r = 0; r < m.ring()->size(); ++r) {
    bool kills = true;
    for (int x : s.elements())
      if (m.act(r, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.insert(r);
  }
  return out;
}

bool is_faithful(const FiniteModule& m) {
  return left_annihilator_of(m, ElementSet::full(m.size())).only_zero();
}

bool is_torsionfree_elementwise(const FiniteModule& m) {
  for (Elem x = 1; x < m.size(); ++x) {
    ElementSet single(m.size());
    single.insert(x);
    if (!left_annihilator_of(m, single).only_zero()) return false;
  }
  return true;
}

std::vector<Elem> minimal_generators(const FiniteModule& m) {
  std::vector<Elem> gens;
  ElementSet span = submodule_generated(m, {});
  while (span.count() < m.size()) {
    Elem next = -1;
    for (Elem x = 0; x < m.size(); ++x)
      if (!span.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    span = submodule_generated(m, gens);
  }
  return gens;
}

ModuleBasic classify_module_basic(const FiniteModule& m,
                                  const Limits& limits) {
  ModuleBasic out;
  auto subs = all_submodules(m, limits);
  out.simple = subs.size() == 2;
  ElementSet socle(m.size());
  socle.insert(0);
  for (const auto& s : minimal_submodules(m, limits))
    socle = sum_of_sets(m, socle, s);
  out.semisimple = socle == ElementSet::full(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    if (cyclic_submodule(m, x).count() == m.size()) {
      out.cyclic = true;
      break;
    }
  out.finitely_generated = true;
  return out;
}

SummandCheck is_direct_summand(const FiniteModule& m, const ElementSet& n,
                               const Limits& limits) {
  if (!is_submodule_set(m, n))
    throw NotSubmodule("is_direct_summand: not a submodule: " + n.to_string());
  const ElementSet whole = ElementSet::full(m.size());
  for (const auto& c : all_submodules(m, limits)) {
    if (!n.intersect(c).only_zero()) continue;
    if (sum_of_sets(m, n, c) == whole) return {true, c};
  }
  return {false, std::nullopt};
}

}  // namespace jtl
