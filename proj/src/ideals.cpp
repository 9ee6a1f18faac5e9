#include "bck/ideals.hpp"

#include <algorithm>

namespace bck {

namespace {

void require_same_universe(const CayleyAlgebra& x, const ElementSet& s) {
  if (s.universe() != x.order())
    throw DomainError("set universe does not match the algebra order");
}

void require_ideal(const CayleyAlgebra& x, const ElementSet& s) {
  if (!is_ideal(x, s)) throw DomainError("set is not an ideal");
}

void require_subset_scan(int order, const Caps& caps) {
  if (order > 64) throw CapacityError("subset scan needs order <= 64");
  if (order > caps.max_subset_order)
    throw CapacityError("subset scan exceeds max_subset_order = " +
                        std::to_string(caps.max_subset_order));
}

}  // namespace

bool is_ideal(const CayleyAlgebra& x, const ElementSet& s) {
  require_same_universe(x, s);
  if (!s.contains(0)) return false;
  const int n = x.order();
  for (int a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (int y = 0; y < n; ++y)
      if (s.contains(x.op(y, a)) && !s.contains(y)) return false;
  }
  return true;
}

std::vector<ElementSet> all_ideals(const CayleyAlgebra& x, const Caps& caps) {
  const int n = x.order();
  require_subset_scan(n, caps);
  std::vector<ElementSet> out;
  const uint64_t top = (uint64_t{1} << n) - 1;
  for (uint64_t m = 1; m <= top; m += 2) {
    ElementSet s(n, m);
    if (is_ideal(x, s)) out.push_back(s);
    if (m == top) break;
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
  return out;
}

namespace {

// Fixpoint of the ideal closure rule starting from the given seed.
ElementSet ideal_closure(const CayleyAlgebra& x, ElementSet s) {
  const int n = x.order();
  s.add(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int y = 0; y < n; ++y) {
      if (s.contains(y)) continue;
      for (int a : s.elements())
        if (s.contains(x.op(y, a))) {
          s.add(y);
          grew = true;
          break;
        }
    }
  }
  return s;
}

}  // namespace

ElementSet generated_ideal(const CayleyAlgebra& x, const ElementSet& gens) {
  require_same_universe(x, gens);
  ElementSet out = ideal_closure(x, gens);
  internal_check(is_ideal(x, out), "generated set is an ideal");
  return out;
}

ElementSet generated_ideal_over(const CayleyAlgebra& x, const ElementSet& base,
                                const ElementSet& gens) {
  require_same_universe(x, gens);
  require_ideal(x, base);
  ElementSet out = ideal_closure(x, base | gens);
  internal_check(is_ideal(x, out), "generated set is an ideal");
  return out;
}

std::optional<CommutativeIdealViolation> commutative_ideal_violation(
    const CayleyAlgebra& x, const ElementSet& ideal) {
  require_ideal(x, ideal);
  const int n = x.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!ideal.contains(x.op(a, b))) continue;
      int v = x.op(a, x.op(b, x.op(b, a)));
      if (!ideal.contains(v)) return CommutativeIdealViolation{a, b, v};
    }
  return std::nullopt;
}

bool is_commutative_ideal(const CayleyAlgebra& x, const ElementSet& ideal) {
  return !commutative_ideal_violation(x, ideal).has_value();
}

bool is_prime_ideal(const CayleyAlgebra& x, const ElementSet& ideal) {
  require_ideal(x, ideal);
  const int n = x.order();
  if (ideal.size() == n) return false;  // prime ideals are proper
  std::vector<ElementSet> principal;
  principal.reserve(n);
  for (int a = 0; a < n; ++a)
    principal.push_back(generated_ideal(x, ElementSet::singleton(n, a)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((principal[a] & principal[b]).subset_of(ideal) &&
          !ideal.contains(a) && !ideal.contains(b))
        return false;
  return true;
}

bool is_maximal_ideal(const CayleyAlgebra& x, const ElementSet& ideal) {
  require_ideal(x, ideal);
  const int n = x.order();
  if (ideal.size() == n) return false;  // maximal ideals are proper
  for (int a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    if (generated_ideal_over(x, ideal, ElementSet::singleton(n, a)).size() != n)
      return false;
  }
  return true;
}

IdealFlags ideal_flags(const CayleyAlgebra& x, const ElementSet& ideal) {
  IdealFlags f;
  f.prime = is_prime_ideal(x, ideal);
  f.maximal = is_maximal_ideal(x, ideal);
  f.commutative = is_commutative_ideal(x, ideal);
  return f;
}

std::string CongruenceRelation::to_string() const {
  std::string out = "classes ";
  for (const auto& cls : classes) {
    out += "{";
    for (size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cls[i]);
    }
    out += "}";
  }
  return out;
}

CongruenceRelation congruence_from_class_of(std::vector<int> raw_class_of) {
  const int n = static_cast<int>(raw_class_of.size());
  CongruenceRelation rel;
  rel.order = n;
  rel.class_of.assign(n, -1);
  // renumber classes by minimal representative, ascending
  std::vector<int> rename(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int c = raw_class_of[v];
    if (rename[c] < 0) {
      rename[c] = next++;
      rel.classes.emplace_back();
    }
    rel.class_of[v] = rename[c];
    rel.classes[rename[c]].push_back(v);
  }
  return rel;
}

CongruenceRelation congruence_of(const CayleyAlgebra& x, const ElementSet& ideal) {
  require_ideal(x, ideal);
  const int n = x.order();
  auto related = [&](int a, int b) {
    return ideal.contains(x.op(a, b)) && ideal.contains(x.op(b, a));
  };
  // transitivity holds because the set is an ideal; verify anyway
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (related(a, b) && related(b, c))
          internal_check(related(a, c), "ideal relation is transitive");

  std::vector<int> class_of(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (class_of[a] >= 0) continue;
    class_of[a] = next;
    for (int b = a + 1; b < n; ++b)
      if (class_of[b] < 0 && related(a, b)) class_of[b] = next;
    ++next;
  }
  CongruenceRelation rel = congruence_from_class_of(std::move(class_of));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rel.same(a, b))
        for (int c = 0; c < n; ++c)
          internal_check(rel.same(x.op(a, c), x.op(b, c)) &&
                             rel.same(x.op(c, a), x.op(c, b)),
                         "ideal relation is compatible with *");
  ElementSet zero_class(n);
  for (int v : rel.classes[0]) zero_class.add(v);
  internal_check(zero_class == ideal, "class of 0 recovers the ideal");
  return rel;
}

std::vector<CongruenceRelation> all_congruences(const CayleyAlgebra& x) {
  const int n = x.order();
  if (n > 10)
    throw CapacityError("congruence enumeration is limited to order <= 10");
  std::vector<CongruenceRelation> out;
  // restricted growth strings enumerate set partitions canonically
  std::vector<int> rgs(n, 0);
  while (true) {
    bool compatible = true;
    for (int a = 0; a < n && compatible; ++a)
      for (int b = 0; b < n && compatible; ++b) {
        if (rgs[a] != rgs[b]) continue;
        for (int c = 0; c < n && compatible; ++c)
          if (rgs[x.op(a, c)] != rgs[x.op(b, c)] ||
              rgs[x.op(c, a)] != rgs[x.op(c, b)])
            compatible = false;
      }
    if (compatible) out.push_back(congruence_from_class_of(rgs));
    // advance to the next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      }
    if (i == 0) break;
  }
  return out;
}

Quotient quotient(const CayleyAlgebra& x, const ElementSet& ideal) {
  CongruenceRelation rel = congruence_of(x, ideal);
  const int q = rel.size();
  RawTable raw;
  raw.order = q;
  raw.table.assign(q * q, 0);
  for (int c = 0; c < q; ++c)
    for (int d = 0; d < q; ++d) {
      int value = rel.class_of[x.op(rel.classes[c][0], rel.classes[d][0])];
      raw.at(c, d) = value;
      for (int a : rel.classes[c])  // representative independence
        for (int b : rel.classes[d])
          internal_check(rel.class_of[x.op(a, b)] == value,
                         "quotient table is well-defined");
    }
  if (!x.name().empty()) raw.name = x.name() + "/" + ideal.to_string();
  auto alg = CayleyAlgebra::try_certify(std::move(raw));
  internal_check(alg.has_value(), "quotient certifies");
  if (is_commutative_ideal(x, ideal))
    internal_check(classify(*alg).commutative,
                   "commutative ideal yields a commutative quotient");
  return Quotient{std::move(*alg), UnaryMap{rel.class_of}, std::move(rel)};
}

RadicalReport radical_and_simplicity(const CayleyAlgebra& x, const Caps& caps) {
  const int n = x.order();
  RadicalReport rep;
  auto ideals = all_ideals(x, caps);
  for (const auto& ideal : ideals)
    if (is_maximal_ideal(x, ideal)) rep.maximal_ideals.push_back(ideal);
  rep.radical = ElementSet::full(n);
  for (const auto& m : rep.maximal_ideals) rep.radical = rep.radical & m;
  if (n > 1) rep.simple = ideals.size() == 2;
  rep.semisimple = rep.radical == ElementSet::zero_only(n);
  return rep;
}

}  // namespace bck
