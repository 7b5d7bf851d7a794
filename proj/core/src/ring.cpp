#include "jtl/ring.hpp"

#include <algorithm>
#include <set>

namespace jtl {

AxiomViolation::AxiomViolation(std::string axiom_name,
                               std::array<int, 3> witness_elems,
                               const std::string& detail)
    : Error("axiom violation: " + axiom_name + " " + detail),
      axiom(std::move(axiom_name)),
      witness(witness_elems) {}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::string s = "(" + std::to_string(a);
  if (b >= 0) s += "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  return s + ")";
}

void check_table_shape(const std::vector<std::vector<Elem>>& t, int n,
                       const std::string& what) {
  if (static_cast<int>(t.size()) != n)
    throw ShapeError(what + " table must have " + std::to_string(n) + " rows");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw ShapeError(what + " table rows must have " + std::to_string(n) +
                       " entries");
    for (Elem e : row)
      if (e < 0 || e >= n)
        throw ShapeError(what + " table entry out of range: " +
                         std::to_string(e));
  }
}

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& t) {
  std::vector<Elem> out;
  out.reserve(t.size() * t.size());
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

RingPtr validate_ring(const RingData& data) {
  const int n = data.size;
  if (n < 1) throw ShapeError("ring size must be positive");
  check_table_shape(data.add, n, "add");
  check_table_shape(data.mul, n, "mul");
  if (data.one < 0 || data.one >= n)
    throw ShapeError("one index out of range");

  const auto& add = data.add;
  const auto& mul = data.mul;

  for (Elem i = 0; i < n; ++i)
    if (add[0][static_cast<std::size_t>(i)] != i)
      throw AxiomViolation("additive-identity", {0, i, -1},
                           "0+" + std::to_string(i) + " != " +
                               std::to_string(i));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          add[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw AxiomViolation("additive-commutativity", {i, j, -1},
                             triple(i, j, -1));

  std::vector<Elem> neg(static_cast<std::size_t>(n), -1);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j)
      if (add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) {
        neg[static_cast<std::size_t>(i)] = j;
        break;
      }
    if (neg[static_cast<std::size_t>(i)] < 0)
      throw AxiomViolation("additive-inverse", {i, -1, -1},
                           "no negative for " + std::to_string(i));
  }

  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Elem k = 0; k < n; ++k) {
        std::size_t si = static_cast<std::size_t>(i);
        std::size_t sj = static_cast<std::size_t>(j);
        std::size_t sk = static_cast<std::size_t>(k);
        if (add[static_cast<std::size_t>(add[si][sj])][sk] !=
            add[si][static_cast<std::size_t>(add[sj][sk])])
          throw AxiomViolation("additive-associativity", {i, j, k},
                               triple(i, j, k));
      }

  for (Elem i = 0; i < n; ++i) {
    std::size_t so = static_cast<std::size_t>(data.one);
    std::size_t si = static_cast<std::size_t>(i);
    if (mul[so][si] != i || mul[si][so] != i)
      throw AxiomViolation("unitality", {i, -1, -1},
                           "1*" + std::to_string(i) + " or " +
                               std::to_string(i) + "*1 != " +
                               std::to_string(i));
  }

  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Elem k = 0; k < n; ++k) {
        std::size_t si = static_cast<std::size_t>(i);
        std::size_t sj = static_cast<std::size_t>(j);
        std::size_t sk = static_cast<std::size_t>(k);
        if (mul[static_cast<std::size_t>(mul[si][sj])][sk] !=
            mul[si][static_cast<std::size_t>(mul[sj][sk])])
          throw AxiomViolation("multiplicative-associativity", {i, j, k},
                               triple(i, j, k));
        if (mul[si][static_cast<std::size_t>(add[sj][sk])] !=
            add[static_cast<std::size_t>(mul[si][sj])]
               [static_cast<std::size_t>(mul[si][sk])])
          throw AxiomViolation("left-distributivity", {i, j, k},
                               triple(i, j, k));
        if (mul[static_cast<std::size_t>(add[si][sj])][sk] !=
            add[static_cast<std::size_t>(mul[si][sk])]
               [static_cast<std::size_t>(mul[sj][sk])])
          throw AxiomViolation("right-distributivity", {i, j, k},
                               triple(i, j, k));
      }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->name_ = data.name;
  ring->size_ = n;
  ring->one_ = data.one;
  ring->add_ = flatten(data.add);
  ring->mul_ = flatten(data.mul);
  ring->neg_ = std::move(neg);
  return ring;
}

RingPtr ring_zmod(int n) {
  if (n < 1) throw ShapeError("ring_zmod: n must be positive");
  RingData d;
  d.name = "Z" + std::to_string(n);
  d.size = n;
  d.one = n == 1 ? 0 : 1;
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i + j) % n;
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i * j) % n;
    }
  return validate_ring(d);
}

RingPtr ring_product(const FiniteRing& a, const FiniteRing& b) {
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  auto enc = [&](Elem x, Elem y) { return x + na * y; };
  RingData d;
  d.name = a.name() + "x" + b.name();
  d.size = n;
  d.one = enc(a.one(), b.one());
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem xi = i % na, yi = i / na, xj = j % na, yj = j / na;
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          enc(a.add(xi, xj), b.add(yi, yj));
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          enc(a.mul(xi, xj), b.mul(yi, yj));
    }
  return validate_ring(d);
}

namespace {

// Mixed-radix encode/decode for tuples of base-ring elements, first
// coordinate least significant.
std::vector<Elem> radix_decode(Elem index, int base, int len) {
  std::vector<Elem> out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = index % base;
    index /= base;
  }
  return out;
}

Elem radix_encode(const std::vector<Elem>& digits, int base) {
  Elem index = 0;
  for (std::size_t i = digits.size(); i-- > 0;)
    index = index * base + digits[i];
  return index;
}

}  // namespace

RingPtr ring_matrix(const FiniteRing& base, int k) {
  if (k < 1) throw ShapeError("ring_matrix: k must be positive");
  const int nb = base.size();
  long long total = 1;
  for (int i = 0; i < k * k; ++i) total *= nb;
  const int n = static_cast<int>(total);

  auto at = [&](const std::vector<Elem>& m, int r, int c) {
    return m[static_cast<std::size_t>(r) * k + c];
  };
  RingData d;
  d.name = "M" + std::to_string(k) + "(" + base.name() + ")";
  d.size = n;
  std::vector<Elem> id(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i) * k + i] = base.one();
  d.one = radix_encode(id, nb);
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    auto mi = radix_decode(i, nb, k * k);
    for (int j = 0; j < n; ++j) {
      auto mj = radix_decode(j, nb, k * k);
      std::vector<Elem> sum(static_cast<std::size_t>(k) * k);
      std::vector<Elem> prod(static_cast<std::size_t>(k) * k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
          sum[static_cast<std::size_t>(r) * k + c] =
              base.add(at(mi, r, c), at(mj, r, c));
          Elem acc = 0;
          for (int t = 0; t < k; ++t)
            acc = base.add(acc, base.mul(at(mi, r, t), at(mj, t, c)));
          prod[static_cast<std::size_t>(r) * k + c] = acc;
        }
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(sum, nb);
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(prod, nb);
    }
  }
  return validate_ring(d);
}

RingPtr ring_upper_triangular(const FiniteRing& base, int k) {
  if (k < 1) throw ShapeError("ring_upper_triangular: k must be positive");
  const int nb = base.size();
  const int slots = k * (k + 1) / 2;
  long long total = 1;
  for (int i = 0; i < slots; ++i) total *= nb;
  const int n = static_cast<int>(total);

  // slot order: (0,0),(0,1),...,(0,k-1),(1,1),...
  std::vector<std::pair<int, int>> pos;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) pos.emplace_back(r, c);
  auto slot_of = [&](int r, int c) {
    for (std::size_t s = 0; s < pos.size(); ++s)
      if (pos[s].first == r && pos[s].second == c) return static_cast<int>(s);
    return -1;
  };

  RingData d;
  d.name = "T" + std::to_string(k) + "(" + base.name() + ")";
  d.size = n;
  std::vector<Elem> id(static_cast<std::size_t>(slots), 0);
  for (int i = 0; i < k; ++i)
    id[static_cast<std::size_t>(slot_of(i, i))] = base.one();
  d.one = radix_encode(id, nb);
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    auto mi = radix_decode(i, nb, slots);
    for (int j = 0; j < n; ++j) {
      auto mj = radix_decode(j, nb, slots);
      std::vector<Elem> sum(static_cast<std::size_t>(slots));
      std::vector<Elem> prod(static_cast<std::size_t>(slots));
      for (int s = 0; s < slots; ++s)
        sum[static_cast<std::size_t>(s)] =
            base.add(mi[static_cast<std::size_t>(s)],
                     mj[static_cast<std::size_t>(s)]);
      for (auto [r, c] : pos) {
        Elem acc = 0;
        for (int t = r; t <= c; ++t)
          acc = base.add(
              acc, base.mul(mi[static_cast<std::size_t>(slot_of(r, t))],
                            mj[static_cast<std::size_t>(slot_of(t, c))]));
        prod[static_cast<std::size_t>(slot_of(r, c))] = acc;
      }
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(sum, nb);
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(prod, nb);
    }
  }
  return validate_ring(d);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, constant term first,
// normalized to drop leading zeros.
std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_trim(out);
}

// Remainder of a by monic b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  a = poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    int lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::size_t idx = shift + i;
      a[idx] = ((a[idx] - lead * b[i]) % p + p * p) % p;
    }
    a = poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

RingPtr ring_gf(int p, int k, const std::vector<int>& irreducible) {
  if (!is_prime(p)) throw ShapeError("ring_gf: p must be prime");
  if (k < 1) throw ShapeError("ring_gf: k must be positive");
  if (static_cast<int>(irreducible.size()) != k + 1)
    throw ShapeError("ring_gf: polynomial must have k+1 coefficients");
  if (irreducible.back() != 1)
    throw ShapeError("ring_gf: polynomial must be monic");
  for (int c : irreducible)
    if (c < 0 || c >= p) throw ShapeError("ring_gf: coefficient out of range");

  // trial division by every monic polynomial of degree 1..k/2
  for (int deg = 1; deg <= k / 2; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> div(static_cast<std::size_t>(deg) + 1, 0);
      long long rem = idx;
      for (int i = 0; i < deg; ++i) {
        div[static_cast<std::size_t>(i)] = static_cast<int>(rem % p);
        rem /= p;
      }
      div[static_cast<std::size_t>(deg)] = 1;
      if (poly_mod(irreducible, div, p).empty())
        throw ReduciblePolynomial("ring_gf: polynomial has a monic factor of degree " +
                                  std::to_string(deg));
    }
  }

  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  const int n = static_cast<int>(total);
  RingData d;
  d.name = "F" + std::to_string(n);
  d.size = n;
  d.one = 1;
  if (n == 1) d.one = 0;
  d.add.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  d.mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    auto pi = radix_decode(i, p, k);
    for (int j = 0; j < n; ++j) {
      auto pj = radix_decode(j, p, k);
      std::vector<Elem> sum(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t)
        sum[static_cast<std::size_t>(t)] =
            (pi[static_cast<std::size_t>(t)] + pj[static_cast<std::size_t>(t)]) % p;
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(sum, p);
      std::vector<int> prod = poly_mod(
          poly_mul(std::vector<int>(pi.begin(), pi.end()),
                   std::vector<int>(pj.begin(), pj.end()), p),
          irreducible, p);
      prod.resize(static_cast<std::size_t>(k), 0);
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          radix_encode(std::vector<Elem>(prod.begin(), prod.end()), p);
    }
  }
  return validate_ring(d);
}

QuotientRing ring_quotient_full(const FiniteRing& r, const ElementSet& ideal) {
  if (ideal.universe() != r.size() || !is_two_sided_ideal(r, ideal))
    throw NotTwoSidedIdeal("ring_quotient: not a two-sided ideal: " +
                           ideal.to_string());
  const int n = r.size();
  std::vector<Elem> rep(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (int i : ideal.elements()) best = std::min(best, r.add(x, i));
    rep[static_cast<std::size_t>(x)] = best;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
  std::vector<Elem> class_of(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    auto it = std::lower_bound(reps.begin(), reps.end(),
                               rep[static_cast<std::size_t>(x)]);
    class_of[static_cast<std::size_t>(x)] =
        static_cast<Elem>(it - reps.begin());
  }

  const int m = static_cast<int>(reps.size());
  RingData d;
  d.name = r.name() + "/" + ideal.to_string();
  d.size = m;
  d.one = class_of[static_cast<std::size_t>(r.one())];
  d.add.assign(static_cast<std::size_t>(m), std::vector<Elem>(m));
  d.mul.assign(static_cast<std::size_t>(m), std::vector<Elem>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elem a = reps[static_cast<std::size_t>(i)];
      Elem b = reps[static_cast<std::size_t>(j)];
      d.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          class_of[static_cast<std::size_t>(r.add(a, b))];
      d.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          class_of[static_cast<std::size_t>(r.mul(a, b))];
    }
  QuotientRing out;
  out.ring = validate_ring(d);
  out.class_of = std::move(class_of);
  out.rep_of = std::move(reps);
  return out;
}

RingPtr ring_quotient(const FiniteRing& r, const ElementSet& ideal) {
  return ring_quotient_full(r, ideal).ring;
}

ElementClasses element_classes(const FiniteRing& r) {
  const int n = r.size();
  ElementClasses out{ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Elem x = 0; x < n; ++x) {
    // one-sided inverse suffices in a finite ring
    for (Elem y = 0; y < n; ++y)
      if (r.mul(x, y) == r.one()) {
        out.units.insert(x);
        break;
      }
    if (r.mul(x, x) == x) out.idempotents.insert(x);
    Elem pow = x;
    for (int i = 0; i < n; ++i) {
      if (pow == 0) {
        out.nilpotents.insert(x);
        break;
      }
      pow = r.mul(pow, x);
    }
  }
  return out;
}

ElementSet jacobson_radical(const FiniteRing& r) {
  const int n = r.size();
  ElementSet units = element_classes(r).units;
  ElementSet rad(n);
  for (Elem x = 0; x < n; ++x) {
    bool quasi = true;
    for (Elem a = 0; a < n && quasi; ++a)
      if (!units.contains(r.sub(r.one(), r.mul(a, x)))) quasi = false;
    if (quasi) rad.insert(x);
  }
  if (!is_two_sided_ideal(r, rad))
    throw InternalCheck("jacobson_radical: result is not a two-sided ideal");
  return rad;
}

bool is_left_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.size() || !s.contains(0)) return false;
  auto elems = s.elements();
  for (int a : elems)
    for (int b : elems)
      if (!s.contains(r.add(a, b))) return false;
  for (Elem x = 0; x < r.size(); ++x)
    for (int a : elems)
      if (!s.contains(r.mul(x, a))) return false;
  return true;
}

bool is_right_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.size() || !s.contains(0)) return false;
  auto elems = s.elements();
  for (int a : elems)
    for (int b : elems)
      if (!s.contains(r.add(a, b))) return false;
  for (Elem x = 0; x < r.size(); ++x)
    for (int a : elems)
      if (!s.contains(r.mul(a, x))) return false;
  return true;
}

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
  return is_left_ideal(r, s) && is_right_ideal(r, s);
}

namespace {

ElementSet sum_of_sets(const FiniteRing& r, const ElementSet& a,
                       const ElementSet& b) {
  ElementSet out(r.size());
  for (int x : a.elements())
    for (int y : b.elements()) out.insert(r.add(x, y));
  return out;
}

}  // namespace

std::vector<ElementSet> left_ideals(const FiniteRing& r, const Limits& limits) {
  if (r.size() > limits.max_ring_size)
    throw BudgetExceeded("left_ideals: ring size " + std::to_string(r.size()) +
                         " exceeds cap " +
                         std::to_string(limits.max_ring_size));
  const int n = r.size();
  std::set<ElementSet> found;
  for (Elem a = 0; a < n; ++a) {
    ElementSet ra(n);
    for (Elem x = 0; x < n; ++x) ra.insert(r.mul(x, a));
    found.insert(ra);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        ElementSet s = sum_of_sets(r, snapshot[i], snapshot[j]);
        if (found.insert(s).second) {
          changed = true;
          if (static_cast<int>(found.size()) > limits.max_ideals)
            throw BudgetExceeded("left_ideals: more than " +
                                 std::to_string(limits.max_ideals) +
                                 " ideals");
        }
      }
  }
  return {found.begin(), found.end()};
}

std::vector<ElementSet> maximal_left_ideals(const FiniteRing& r,
                                            const Limits& limits) {
  auto ideals = left_ideals(r, limits);
  const ElementSet whole = ElementSet::full(r.size());
  std::vector<ElementSet> out;
  for (const auto& i : ideals) {
    if (i == whole) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (j != whole && j != i && i.is_subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> minimal_left_ideals(const FiniteRing& r,
                                            const Limits& limits) {
  auto ideals = left_ideals(r, limits);
  std::vector<ElementSet> out;
  for (const auto& i : ideals) {
    if (i.only_zero()) continue;
    bool minimal = true;
    for (const auto& j : ideals)
      if (!j.only_zero() && j != i && j.is_subset_of(i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

ElementSet right_annihilator(const FiniteRing& r, const ElementSet& s) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool kills = true;
    for (int a : s.elements())
      if (r.mul(a, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  if (!is_right_ideal(r, out))
    throw InternalCheck("right_annihilator: result is not a right ideal");
  return out;
}

ElementSet left_annihilator(const FiniteRing& r, const ElementSet& s) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool kills = true;
    for (int a : s.elements())
      if (r.mul(x, a) != 0) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  if (!is_left_ideal(r, out))
    throw InternalCheck("left_annihilator: result is not a left ideal");
  return out;
}

ElementSet left_quotient_set(const FiniteRing& r, const ElementSet& a,
                             const ElementSet& b) {
  ElementSet out(r.size());
  for (Elem t = 0; t < r.size(); ++t) {
    bool in = true;
    for (int x : b.elements())
      if (!a.contains(r.mul(t, x))) {
        in = false;
        break;
      }
    if (in) out.insert(t);
  }
  if (is_left_ideal(r, a) && !is_left_ideal(r, out))
    throw InternalCheck("left_quotient_set: result is not a left ideal");
  return out;
}

std::optional<std::vector<Elem>> division_product_idempotents(
    const FiniteRing& r) {
  const int n = r.size();
  std::vector<Elem> central;
  for (Elem e = 0; e < n; ++e) {
    if (r.mul(e, e) != e) continue;
    bool cent = true;
    for (Elem x = 0; x < n && cent; ++x)
      if (r.mul(e, x) != r.mul(x, e)) cent = false;
    if (cent) central.push_back(e);
  }
  // atoms of the boolean algebra of central idempotents (e <= f iff ef = e)
  std::vector<Elem> atoms;
  for (Elem e : central) {
    if (e == 0) continue;
    bool atom = true;
    for (Elem f : central)
      if (f != 0 && f != e && r.mul(f, e) == f) {
        atom = false;
        break;
      }
    if (atom) atoms.push_back(e);
  }
  Elem total = 0;
  for (Elem e : atoms) total = r.add(total, e);
  if (total != r.one()) return std::nullopt;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (r.mul(atoms[i], atoms[j]) != 0 || r.mul(atoms[j], atoms[i]) != 0)
        return std::nullopt;
  // each factor eR must be a division ring with unit e
  for (Elem e : atoms) {
    std::vector<Elem> factor;
    for (Elem x = 0; x < n; ++x) {
      Elem ex = r.mul(e, x);
      if (std::find(factor.begin(), factor.end(), ex) == factor.end())
        factor.push_back(ex);
    }
    for (Elem x : factor) {
      if (x == 0) continue;
      bool invertible = false;
      for (Elem y : factor)
        if (r.mul(x, y) == e) {
          invertible = true;
          break;
        }
      if (!invertible) return std::nullopt;
    }
  }
  return atoms;
}

}  // namespace jtl
