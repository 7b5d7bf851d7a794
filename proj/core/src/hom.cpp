#include "jtl/hom.hpp"

#include <algorithm>

namespace jtl {

namespace {

// Returns the violated axiom name and witness, or nullopt when `image` is a
// homomorphism.
std::optional<std::pair<std::string, std::array<int, 3>>> check_hom(
    const FiniteModule& m, const FiniteModule& n,
    const std::vector<Elem>& image) {
  if (image[0] != 0) return {{"homomorphism-zero", {0, -1, -1}}};
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (image[static_cast<std::size_t>(m.add(x, y))] !=
          n.add(image[static_cast<std::size_t>(x)],
                image[static_cast<std::size_t>(y)]))
        return {{"homomorphism-additivity", {x, y, -1}}};
  for (Elem r = 0; r < m.ring()->size(); ++r)
    for (Elem x = 0; x < m.size(); ++x)
      if (image[static_cast<std::size_t>(m.act(r, x))] !=
          n.act(r, image[static_cast<std::size_t>(x)]))
        return {{"homomorphism-linearity", {r, x, -1}}};
  return std::nullopt;
}

}  // namespace

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target,
                     std::vector<Elem> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(image)) {
  if (!source_->ring()->same_structure(*target_->ring()))
    throw ShapeError("ModuleHom: source and target over different rings");
  if (static_cast<int>(image_.size()) != source_->size())
    throw ShapeError("ModuleHom: image table length mismatch");
  for (Elem v : image_)
    if (v < 0 || v >= target_->size())
      throw ShapeError("ModuleHom: image entry out of range");
  if (auto bad = check_hom(*source_, *target_, image_))
    throw AxiomViolation(bad->first, bad->second, "not a homomorphism");
}

ModuleHom::ModuleHom(unchecked_t, ModulePtr source, ModulePtr target,
                     std::vector<Elem> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(image)) {}

bool ModuleHom::is_zero() const {
  return std::all_of(image_.begin(), image_.end(),
                     [](Elem v) { return v == 0; });
}

bool ModuleHom::is_injective() const {
  std::vector<bool> seen(static_cast<std::size_t>(target_->size()), false);
  for (Elem v : image_) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool ModuleHom::is_surjective() const {
  std::vector<bool> seen(static_cast<std::size_t>(target_->size()), false);
  int hit = 0;
  for (Elem v : image_)
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++hit;
    }
  return hit == target_->size();
}

std::vector<ModuleHom> hom_set(const ModulePtr& m, const ModulePtr& n,
                               const Limits& limits) {
  if (!m->ring()->same_structure(*n->ring()))
    throw ShapeError("hom_set: modules over different rings");
  if (m->size() > limits.max_module_size || n->size() > limits.max_module_size)
    throw BudgetExceeded("hom_set: module size exceeds cap " +
                         std::to_string(limits.max_module_size));

  const std::vector<Elem> gens = minimal_generators(*m);
  const int k = static_cast<int>(gens.size());
  if (k > limits.max_generators)
    throw BudgetExceeded("hom_set: " + std::to_string(k) +
                         " generators exceed cap " +
                         std::to_string(limits.max_generators));
  long candidates = 1;
  for (int i = 0; i < k; ++i) {
    candidates *= n->size();
    if (candidates > limits.max_hom_candidates)
      throw BudgetExceeded("hom_set: |N|^k exceeds cap " +
                           std::to_string(limits.max_hom_candidates));
  }

  // Express every element of M as an R-combination of the generators by a
  // deterministic closure (first expression found wins).
  std::vector<std::vector<Elem>> expr(static_cast<std::size_t>(m->size()));
  std::vector<bool> known(static_cast<std::size_t>(m->size()), false);
  expr[0].assign(static_cast<std::size_t>(k), 0);
  known[0] = true;
  for (int i = 0; i < k; ++i) {
    std::size_t g = static_cast<std::size_t>(gens[static_cast<std::size_t>(i)]);
    if (!known[g]) {
      expr[g].assign(static_cast<std::size_t>(k), 0);
      expr[g][static_cast<std::size_t>(i)] = m->ring()->one();
      known[g] = true;
    }
  }
  const FiniteRing& ring = *m->ring();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < m->size(); ++x) {
      if (!known[static_cast<std::size_t>(x)]) continue;
      for (Elem r = 0; r < ring.size(); ++r) {
        Elem y = m->act(r, x);
        if (known[static_cast<std::size_t>(y)]) continue;
        std::vector<Elem> e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
          e[static_cast<std::size_t>(i)] =
              ring.mul(r, expr[static_cast<std::size_t>(x)]
                              [static_cast<std::size_t>(i)]);
        expr[static_cast<std::size_t>(y)] = std::move(e);
        known[static_cast<std::size_t>(y)] = true;
        grew = true;
      }
      for (Elem z = 0; z < m->size(); ++z) {
        if (!known[static_cast<std::size_t>(z)]) continue;
        Elem y = m->add(x, z);
        if (known[static_cast<std::size_t>(y)]) continue;
        std::vector<Elem> e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
          e[static_cast<std::size_t>(i)] =
              ring.add(expr[static_cast<std::size_t>(x)]
                           [static_cast<std::size_t>(i)],
                       expr[static_cast<std::size_t>(z)]
                           [static_cast<std::size_t>(i)]);
        expr[static_cast<std::size_t>(y)] = std::move(e);
        known[static_cast<std::size_t>(y)] = true;
        grew = true;
      }
    }
  }
  for (bool b : known)
    if (!b) throw InternalCheck("hom_set: generators do not span the module");

  // Admissible images per generator: l_R(gi) . t = 0.
  std::vector<std::vector<Elem>> targets(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    ElementSet single(m->size());
    single.insert(gens[static_cast<std::size_t>(i)]);
    ElementSet ann = left_annihilator_of(*m, single);
    for (Elem t = 0; t < n->size(); ++t) {
      bool ok = true;
      for (int r : ann.elements())
        if (n->act(r, t) != 0) {
          ok = false;
          break;
        }
      if (ok) targets[static_cast<std::size_t>(i)].push_back(t);
    }
  }

  std::vector<ModuleHom> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  std::vector<Elem> img(static_cast<std::size_t>(m->size()));
  while (true) {
    // materialize the candidate through the expressions; t = 0 is always
    // admissible, so every target list is nonempty
    for (Elem x = 0; x < m->size(); ++x) {
      Elem acc = 0;
      for (int i = 0; i < k; ++i) {
        Elem coeff =
            expr[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
        Elem t = targets[static_cast<std::size_t>(i)]
                        [pick[static_cast<std::size_t>(i)]];
        acc = n->add(acc, n->act(coeff, t));
      }
      img[static_cast<std::size_t>(x)] = acc;
    }
    if (!check_hom(*m, *n, img))
      out.emplace_back(ModuleHom::unchecked_t{}, m, n, img);

    // odometer
    int pos = 0;
    while (pos < k) {
      std::size_t sp = static_cast<std::size_t>(pos);
      if (++pick[sp] < targets[sp].size()) break;
      pick[sp] = 0;
      ++pos;
    }
    if (pos >= k) break;
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleHom> dual(const ModulePtr& m, const Limits& limits) {
  return hom_set(m, regular_module(m->ring()), limits);
}

ElementSet kernel(const ModuleHom& f) {
  ElementSet out(f.source()->size());
  for (Elem x = 0; x < f.source()->size(); ++x)
    if (f(x) == 0) out.insert(x);
  if (!is_submodule_set(*f.source(), out))
    throw InternalCheck("kernel: not a submodule");
  return out;
}

ElementSet image(const ModuleHom& f) {
  ElementSet out(f.target()->size());
  for (Elem x = 0; x < f.source()->size(); ++x) out.insert(f(x));
  if (!is_submodule_set(*f.target(), out))
    throw InternalCheck("image: not a submodule");
  return out;
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
  if (!f.target()->same_structure(*g.source()))
    throw CompositionMismatch("compose: target of f differs from source of g");
  std::vector<Elem> img(static_cast<std::size_t>(f.source()->size()));
  for (Elem x = 0; x < f.source()->size(); ++x)
    img[static_cast<std::size_t>(x)] = g(f(x));
  return ModuleHom(f.source(), g.target(), std::move(img));
}

bool is_isomorphic(const ModulePtr& m, const ModulePtr& n,
                   const Limits& limits) {
  if (m->size() != n->size()) return false;
  for (const ModuleHom& h : hom_set(m, n, limits))
    if (h.is_bijective()) return true;
  return false;
}

ProjectivityCheck is_projective(const ModulePtr& m, const Limits& limits) {
  ProjectivityCheck out;
  out.generators = minimal_generators(*m);
  const int k = static_cast<int>(out.generators.size());
  std::vector<ModuleHom> duals = dual(m, limits);

  long candidates = 1;
  for (int i = 0; i < k; ++i) {
    candidates *= static_cast<long>(duals.size());
    if (candidates > limits.max_hom_candidates)
      throw BudgetExceeded("is_projective: |M*|^k exceeds cap " +
                           std::to_string(limits.max_hom_candidates));
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    bool works = true;
    for (Elem x = 0; x < m->size() && works; ++x) {
      Elem acc = 0;
      for (int i = 0; i < k; ++i) {
        const ModuleHom& q = duals[pick[static_cast<std::size_t>(i)]];
        acc = m->add(acc, m->act(q(x), out.generators[static_cast<std::size_t>(i)]));
      }
      if (acc != x) works = false;
    }
    if (works) {
      out.projective = true;
      for (int i = 0; i < k; ++i)
        out.dual_basis.push_back(duals[pick[static_cast<std::size_t>(i)]]);
      return out;
    }
    int pos = 0;
    while (pos < k) {
      std::size_t sp = static_cast<std::size_t>(pos);
      if (++pick[sp] < duals.size()) break;
      pick[sp] = 0;
      ++pos;
    }
    if (pos >= k) break;
  }
  return out;
}

std::optional<Elem> baer_extension_exists(const FiniteRing& r,
                                          const ElementSet& left_ideal,
                                          const ModuleHom& f) {
  if (!is_left_ideal(r, left_ideal))
    throw ShapeError("baer_extension_exists: not a left ideal");
  auto elems = left_ideal.elements();
  if (f.source()->size() != static_cast<int>(elems.size()))
    throw ShapeError("baer_extension_exists: hom source does not match ideal");
  for (Elem c = 0; c < r.size(); ++c) {
    bool works = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (f(static_cast<Elem>(i)) != r.mul(elems[i], c)) {
        works = false;
        break;
      }
    if (works) return c;
  }
  return std::nullopt;
}

}  // namespace jtl
