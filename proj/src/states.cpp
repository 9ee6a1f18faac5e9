#include "bck/states.hpp"

#include <algorithm>

#include "bck/errors.hpp"

namespace bck {

namespace {

void require_endomap(const CayleyAlgebra& x, const UnaryMap& m) {
  if (m.domain() != x.order())
    throw DomainError("map domain (" + std::to_string(m.domain()) +
                      ") does not match algebra order (" +
                      std::to_string(x.order()) + ")");
  for (int v : m.values)
    if (v < 0 || v >= x.order())
      throw DomainError("map value " + std::to_string(v) + " is out of range");
}

std::optional<StateViolation> morphism_violation(const CayleyAlgebra& x,
                                                 const UnaryMap& m) {
  if (auto h = hom_violation(x, x, m)) {
    return StateViolation{StateKind::state_morphism, "hom",
                          h->x, h->y, h->lhs, h->rhs};
  }
  for (int a = 0; a < x.order(); ++a) {
    if (m(m(a)) != m(a))
      return StateViolation{StateKind::state_morphism, "idempotent",
                            a, -1, m(m(a)), m(a)};
  }
  return std::nullopt;
}

std::optional<StateViolation> state_axiom_violation(const CayleyAlgebra& x,
                                                    const UnaryMap& m,
                                                    StateKind kind) {
  const bool right = kind == StateKind::right_state;
  for (int a = 0; a < x.order(); ++a) {
    for (int b = 0; b < x.order(); ++b) {
      if (x.op(a, b) == 0 && x.op(m(a), m(b)) != 0)
        return StateViolation{kind, "S0", a, b, x.op(m(a), m(b)), 0};
      const int inner = right ? x.op(b, x.op(b, a)) : x.op(a, x.op(a, b));
      const int lhs = m(x.op(a, b));
      const int rhs = x.op(m(a), m(inner));
      if (lhs != rhs) return StateViolation{kind, "S1", a, b, lhs, rhs};
      const int d = x.op(m(a), m(b));
      if (m(d) != d) return StateViolation{kind, "S2", a, b, m(d), d};
    }
  }
  return std::nullopt;
}

// Prop-3.2-style consequences, valid for every certified kind. Plain bool
// tables keep this order-agnostic (no 64-element set limit).
void verify_derived_state_laws(const CayleyAlgebra& x, const UnaryMap& m) {
  const int n = x.order();
  internal_check(m(0) == 0, "state operator must fix 0");
  for (int a = 0; a < n; ++a)
    internal_check(m(m(a)) == m(a), "state operator must be idempotent");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      internal_check(x.leq(x.op(m(a), m(b)), m(x.op(a, b))),
                     "mu(x)*mu(y) <= mu(x*y)");
  if (n <= 24) {  // n-fold subadditivity, reduction length 2 and 3
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          internal_check(
              x.leq(x.op(x.op(m(a), m(b)), m(c)), m(x.op(x.op(a, b), c))),
              "2-fold state subadditivity");
          for (int d = 0; d < n; ++d)
            internal_check(x.leq(x.op(x.op(x.op(m(a), m(b)), m(c)), m(d)),
                                 m(x.op(x.op(x.op(a, b), c), d))),
                           "3-fold state subadditivity");
        }
  }

  std::vector<char> ker(n, 0), im(n, 0);
  for (int a = 0; a < n; ++a) {
    if (m(a) == 0) ker[a] = 1;
    im[m(a)] = 1;
  }
  internal_check(ker[0] == 1, "kernel must contain 0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      internal_check(!(ker[x.op(b, a)] && ker[a]) || ker[b],
                     "kernel must be an ideal");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      internal_check(!(im[a] && im[b]) || im[x.op(a, b)],
                     "image must be a subalgebra");
  for (int a = 1; a < n; ++a)
    internal_check(!(ker[a] && im[a]), "kernel and image must meet only in 0");
}

void verify_right_state_laws(const CayleyAlgebra& x, const UnaryMap& m) {
  internal_check(!state_axiom_violation(x, m, StateKind::left_state),
                 "a right state operator must be a left state operator");
  for (int a = 0; a < x.order(); ++a)
    for (int b = 0; b < x.order(); ++b)
      if (x.leq(b, a))
        internal_check(m(x.op(a, b)) == x.op(m(a), m(b)),
                       "right state must split subtraction of comparable pairs");
  if (x.order() <= 64) {
    ElementSet ker(x.order());
    for (int a = 0; a < x.order(); ++a)
      if (m(a) == 0) ker.add(a);
    internal_check(is_commutative_ideal(x, ker),
                   "right-state kernel must be a commutative ideal");
  }
}

ElementSet set_of(const CayleyAlgebra& x, const std::vector<char>& member) {
  ElementSet s(x.order());
  for (int a = 0; a < x.order(); ++a)
    if (member[a]) s.add(a);
  return s;
}

ElementSet kernel_set(const StateAlgebra& sa) {
  ElementSet s(sa.order());
  for (int a = 0; a < sa.order(); ++a)
    if (sa(a) == 0) s.add(a);
  return s;
}

ElementSet image_set(const StateAlgebra& sa) {
  ElementSet s(sa.order());
  for (int a = 0; a < sa.order(); ++a) s.add(sa(a));
  return s;
}

// Least state ideal containing `seed`, by intersecting the full lattice.
// Used as the independent oracle behind both generation formulas.
ElementSet intersection_oracle(const std::vector<ElementSet>& state_ideals,
                               const ElementSet& seed) {
  ElementSet acc = ElementSet::full(seed.universe());
  for (const ElementSet& s : state_ideals)
    if (seed.subset_of(s)) acc = acc & s;
  return acc;
}

ElementSet adjoin_formula(const StateAlgebra& sa, const ElementSet& ideal,
                          int a) {
  const CayleyAlgebra& x = sa.algebra();
  const int n = x.order();
  ElementSet result(n);
  for (int v = 0; v < n; ++v) {
    bool in = false;
    for (int k = 0; k <= n && !in; ++k) {
      const int base = x.op_iter(v, a, k);
      for (int l = 0; l <= n && !in; ++l)
        if (ideal.contains(x.op_iter(base, sa(a), l))) in = true;
    }
    if (in) result.add(v);
  }
  return result;
}

}  // namespace

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::left_state: return "left_state";
    case StateKind::right_state: return "right_state";
    case StateKind::state_morphism: return "state_morphism";
  }
  return "?";
}

std::string StateViolation::to_string() const {
  std::string s = bck::to_string(kind) + " fails " + axiom + " at (" +
                  std::to_string(x);
  if (y >= 0) s += "," + std::to_string(y);
  s += "): " + std::to_string(lhs) + " != " + std::to_string(rhs);
  return s;
}

StateAlgebra::StateAlgebra(CayleyAlgebra algebra, UnaryMap mu, unsigned kinds)
    : algebra_(std::move(algebra)), mu_(std::move(mu)), kinds_(kinds) {
  require_endomap(algebra_, mu_);
  internal_check(kinds_ != 0, "state algebra must carry a certification");
  for (StateKind k : {StateKind::left_state, StateKind::right_state,
                      StateKind::state_morphism})
    if (has(k))
      internal_check(!state_violation(algebra_, mu_, k),
                     "claimed certification (" + bck::to_string(k) +
                         ") does not hold");
}

StateKind StateAlgebra::kind() const {
  if (has(StateKind::state_morphism)) return StateKind::state_morphism;
  if (has(StateKind::right_state)) return StateKind::right_state;
  return StateKind::left_state;
}

std::optional<StateViolation> state_violation(const CayleyAlgebra& x,
                                              const UnaryMap& m,
                                              StateKind kind) {
  require_endomap(x, m);
  if (kind == StateKind::state_morphism) return morphism_violation(x, m);
  return state_axiom_violation(x, m, kind);
}

std::optional<StateAlgebra> try_certify_state(const CayleyAlgebra& x,
                                              const UnaryMap& m, StateKind kind,
                                              StateViolation* violation) {
  if (auto v = state_violation(x, m, kind)) {
    if (violation) *violation = *v;
    return std::nullopt;
  }
  unsigned kinds = 1u << static_cast<int>(kind);
  if (kind != StateKind::left_state) {
    // Implied certification: right states and idempotent endomorphisms are
    // left states. Failure here is a checker bug, not an input error.
    internal_check(!state_axiom_violation(x, m, StateKind::left_state),
                   "implied left-state certification failed");
    kinds |= 1u << static_cast<int>(StateKind::left_state);
  }
  verify_derived_state_laws(x, m);
  if (kind == StateKind::right_state) verify_right_state_laws(x, m);
  return StateAlgebra(x, m, kinds);
}

StateAlgebra certify_state(const CayleyAlgebra& x, const UnaryMap& m,
                           StateKind kind) {
  StateViolation v;
  if (auto sa = try_certify_state(x, m, kind, &v)) return *sa;
  throw DomainError(v.to_string());
}

std::vector<StateAlgebra> enumerate_state_operators(const CayleyAlgebra& x,
                                                    StateKind kind,
                                                    const Caps& caps) {
  const int n = x.order();
  long long candidates = 1;
  for (int i = 0; i < n; ++i) {
    candidates *= n;
    if (candidates > caps.max_map_candidates)
      throw CapacityError("operator search space " + std::to_string(n) + "^" +
                          std::to_string(n) + " exceeds max_map_candidates");
  }

  std::vector<StateAlgebra> result;
  std::vector<int> values(n, 0);  // values[0] = 0 is forced by S1 at (0,0)

  auto s0_consistent = [&](int i) {
    for (int j = 0; j <= i; ++j) {
      if (x.op(i, j) == 0 && x.op(values[i], values[j]) != 0) return false;
      if (x.op(j, i) == 0 && x.op(values[j], values[i]) != 0) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (auto sa = try_certify_state(x, UnaryMap(values), kind))
        result.push_back(std::move(*sa));
      return;
    }
    for (int v = 0; v < n; ++v) {
      values[i] = v;
      if (s0_consistent(i)) self(self, i + 1);
    }
    values[i] = 0;
  };
  if (n > 0) dfs(dfs, 1);
  return result;
}

StateAlgebra right_translation_morphism(const CayleyAlgebra& x, int t) {
  if (t < 0 || t >= x.order())
    throw DomainError("element " + std::to_string(t) + " is out of range");
  std::vector<int> values(x.order());
  for (int a = 0; a < x.order(); ++a) {
    if (x.op(a, t) != x.op(x.op(a, t), t))
      throw DomainError("right translation by " + std::to_string(t) +
                        " requires a*t = (a*t)*t; fails at a = " +
                        std::to_string(a));
    values[a] = x.op(a, t);
  }
  auto sa = try_certify_state(x, UnaryMap(values), StateKind::state_morphism);
  internal_check(sa.has_value(),
                 "right translation must be a state-morphism operator");
  return *sa;
}

KernelImage kernel_image(const StateAlgebra& sa) {
  const CayleyAlgebra& x = sa.algebra();
  const int n = x.order();
  KernelImage ki{kernel_set(sa), image_set(sa)};

  internal_check(is_ideal(x, ki.kernel), "Ker(mu) must be an ideal");
  internal_check(subalgebra_closure(x, ki.image) == ki.image,
                 "Im(mu) must be a subalgebra");
  internal_check((ki.kernel & ki.image) == ElementSet::zero_only(n),
                 "Ker(mu) and Im(mu) must meet only in 0");

  if (sa.has(StateKind::state_morphism)) {
    std::vector<char> left(n, 0), right(n, 0);
    for (int a = 0; a < n; ++a) {
      left[x.op(a, sa(a))] = 1;
      right[x.op(sa(a), a)] = 1;
    }
    internal_check(set_of(x, left) == ki.kernel,
                   "Ker(mu) must equal {x*mu(x)}");
    internal_check(set_of(x, right).subset_of(ki.kernel),
                   "{mu(x)*x} must lie inside Ker(mu)");
    internal_check(generated_ideal(x, ki.kernel | ki.image) ==
                       ElementSet::full(n),
                   "Ker(mu) and Im(mu) must generate everything");
  }
  return ki;
}

bool is_state_ideal(const StateAlgebra& sa, const ElementSet& s) {
  if (!is_ideal(sa.algebra(), s)) return false;
  for (int a : s.elements())
    if (!s.contains(sa(a))) return false;
  return true;
}

std::vector<ElementSet> all_state_ideals(const StateAlgebra& sa,
                                         const Caps& caps) {
  std::vector<ElementSet> result;
  for (const ElementSet& ideal : all_ideals(sa.algebra(), caps)) {
    bool invariant = true;
    for (int a : ideal.elements())
      if (!ideal.contains(sa(a))) { invariant = false; break; }
    if (invariant) result.push_back(ideal);
  }
  internal_check(std::find(result.begin(), result.end(), kernel_set(sa)) !=
                     result.end(),
                 "Ker(mu) must be a state ideal");
  return result;
}

StateIdealCertificate certify_state_ideal(const StateAlgebra& sa,
                                          const ElementSet& s) {
  if (!is_ideal(sa.algebra(), s))
    throw DomainError("set " + s.to_string() + " is not an ideal");
  for (int a : s.elements())
    if (!s.contains(sa(a)))
      throw DomainError("set " + s.to_string() +
                        " is not mu-invariant: mu(" + std::to_string(a) +
                        ") = " + std::to_string(sa(a)) + " escapes");
  return StateIdealCertificate{s, std::nullopt};
}

ElementSet generated_state_ideal_adjoin(const StateAlgebra& sa,
                                        const StateIdealCertificate& ideal,
                                        int a, const Caps& caps) {
  const CayleyAlgebra& x = sa.algebra();
  if (a < 0 || a >= x.order())
    throw DomainError("element " + std::to_string(a) + " is out of range");
  ElementSet result = adjoin_formula(sa, ideal.members, a);

  ElementSet seed = ideal.members;
  seed.add(a);
  internal_check(result == intersection_oracle(all_state_ideals(sa, caps), seed),
                 "adjoin formula must match the least state ideal");
  return result;
}

ElementSet generated_state_ideal_morphism(const StateAlgebra& sa,
                                          const ElementSet& ideal,
                                          const Caps& caps) {
  const CayleyAlgebra& x = sa.algebra();
  if (!sa.has(StateKind::state_morphism))
    throw DomainError("generation by mu-image reductions needs a state-morphism operator");
  if (!is_ideal(x, ideal))
    throw DomainError("set " + ideal.to_string() + " is not an ideal");

  ElementSet images(x.order());
  for (int t : ideal.elements()) images.add(sa(t));
  ElementSet result = generated_ideal_over(x, ideal, images);

  internal_check(result == intersection_oracle(all_state_ideals(sa, caps), ideal),
                 "mu-image reduction formula must match the least state ideal");
  return result;
}

std::vector<ElementSet> maximal_state_ideals(const StateAlgebra& sa,
                                             const Caps& caps) {
  const int n = sa.order();
  const std::vector<ElementSet> ideals = all_state_ideals(sa, caps);
  const ElementSet full = ElementSet::full(n);

  std::vector<ElementSet> result;
  for (const ElementSet& ideal : ideals) {
    if (ideal == full) continue;
    bool maximal = true;
    for (int a = 0; a < n && maximal; ++a)
      if (!ideal.contains(a) && adjoin_formula(sa, ideal, a) != full)
        maximal = false;
    if (maximal) result.push_back(ideal);
  }

  // A maximal state ideal absorbing an intersection absorbs a factor.
  for (const ElementSet& m : result)
    for (const ElementSet& i : ideals)
      for (const ElementSet& j : ideals)
        if ((i & j).subset_of(m))
          internal_check(i.subset_of(m) || j.subset_of(m),
                         "maximal state ideal must be prime for intersections");
  return result;
}

std::vector<CongruenceRelation> state_congruences(const StateAlgebra& sa,
                                                  const Caps& caps) {
  const CayleyAlgebra& x = sa.algebra();
  std::vector<CongruenceRelation> result;
  for (CongruenceRelation& theta : all_congruences(x)) {
    bool compatible = true;
    for (int a = 0; a < x.order() && compatible; ++a)
      for (int b = 0; b < x.order() && compatible; ++b)
        if (theta.same(a, b) && !theta.same(sa(a), sa(b))) compatible = false;
    if (compatible) result.push_back(std::move(theta));
  }

  // The ideal <-> congruence correspondence restricts to a bijection.
  const std::vector<ElementSet> ideals = all_state_ideals(sa, caps);
  internal_check(ideals.size() == result.size(),
                 "state congruences must be in bijection with state ideals");
  for (const ElementSet& ideal : ideals) {
    CongruenceRelation theta = congruence_of(x, ideal);
    internal_check(std::find(result.begin(), result.end(), theta) !=
                       result.end(),
                   "theta_I must be a state congruence");
  }
  for (const CongruenceRelation& theta : result) {
    ElementSet zero_class(x.order());
    for (int a : theta.classes[0]) zero_class.add(a);
    internal_check(is_state_ideal(sa, zero_class),
                   "[0] of a state congruence must be a state ideal");
    internal_check(congruence_of(x, zero_class) == theta,
                   "theta_{[0]} must recover the congruence");
  }
  return result;
}

IrreducibilityReport subdirectly_irreducible(const StateAlgebra& sa,
                                             const Caps& caps) {
  if (sa.algebra().trivial())
    throw DomainError("subdirect irreducibility is not applicable to the trivial algebra");
  const ElementSet zero = ElementSet::zero_only(sa.order());
  ElementSet meet = ElementSet::full(sa.order());
  for (const ElementSet& ideal : all_state_ideals(sa, caps))
    if (!(ideal == zero)) meet = meet & ideal;

  IrreducibilityReport report;
  report.verdict = !(meet == zero);
  if (report.verdict) {
    // The intersection of state ideals is a state ideal, so when nonzero it
    // is itself the least nonzero one.
    internal_check(is_state_ideal(sa, meet),
                   "least candidate must be a state ideal");
    report.least_nonzero = meet;
  }
  return report;
}

namespace {

// Least nonzero ideal exists, on a plain algebra (identity operator view).
bool plainly_subdirectly_irreducible(const CayleyAlgebra& x, const Caps& caps) {
  if (x.trivial()) return false;
  const ElementSet zero = ElementSet::zero_only(x.order());
  ElementSet meet = ElementSet::full(x.order());
  for (const ElementSet& ideal : all_ideals(x, caps))
    if (!(ideal == zero)) meet = meet & ideal;
  return !(meet == zero);
}

}  // namespace

IrrCharacterization check_irr_characterization(const StateAlgebra& sa,
                                               const Caps& caps) {
  const CayleyAlgebra& x = sa.algebra();
  if (x.trivial())
    throw DomainError("subdirect irreducibility is not applicable to the trivial algebra");
  const KernelImage ki = kernel_image(sa);
  const ElementSet zero = ElementSet::zero_only(x.order());

  IrrCharacterization report;
  if (ki.kernel == zero) {
    report.condition_i = plainly_subdirectly_irreducible(
        induced_subalgebra(x, ki.image).algebra, caps);
  } else {
    bool meets = true;
    for (int a : ki.image.elements())
      if (a != 0 && (ki.kernel & generated_ideal(x, ElementSet::singleton(x.order(), a))) == zero)
        meets = false;
    report.condition_ii =
        plainly_subdirectly_irreducible(induced_subalgebra(x, ki.kernel).algebra,
                                        caps) &&
        meets;
  }
  report.verdict = subdirectly_irreducible(sa, caps).verdict;
  internal_check(report.verdict == (report.condition_i || report.condition_ii),
                 "irreducibility must match its two-condition characterization");
  return report;
}

StateAlgebra two_class_morphism(const CayleyAlgebra& x, const ElementSet& ideal,
                                int a) {
  if (!is_ideal(x, ideal))
    throw DomainError("two-class operator: set " + ideal.to_string() +
                      " is not an ideal");
  if (!is_maximal_ideal(x, ideal))
    throw DomainError("two-class operator: ideal " + ideal.to_string() +
                      " is not maximal");
  if (quotient(x, ideal).algebra.order() != 2)
    throw DomainError("two-class operator: quotient by " + ideal.to_string() +
                      " has more than two classes");
  if (a < 0 || a >= x.order())
    throw DomainError("two-class operator: element " + std::to_string(a) +
                      " is out of range");
  if (ideal.contains(a))
    throw DomainError("two-class operator: element " + std::to_string(a) +
                      " lies inside the ideal");

  auto build = [&](int outside) {
    std::vector<int> values(x.order());
    for (int v = 0; v < x.order(); ++v)
      values[v] = ideal.contains(v) ? 0 : outside;
    auto sa = try_certify_state(x, UnaryMap(values), StateKind::state_morphism);
    internal_check(sa.has_value(),
                   "two-class map must be a state-morphism operator");
    return *sa;
  };

  StateAlgebra result = build(a);
  // Distinct outside representatives give distinct operators with the same
  // kernel, so kernels do not determine morphisms.
  for (int b = 0; b < x.order(); ++b) {
    if (ideal.contains(b)) continue;
    StateAlgebra other = build(b);
    internal_check(kernel_set(other) == ideal,
                   "two-class kernel must be the defining ideal");
    if (b != a)
      internal_check(!(other.mu() == result.mu()),
                     "distinct representatives must give distinct operators");
  }
  return result;
}

SimpleSemisimpleReport simple_semisimple_state(const StateAlgebra& sa,
                                               const Caps& caps) {
  const CayleyAlgebra& x = sa.algebra();
  const int n = x.order();
  const std::vector<ElementSet> ideals = all_state_ideals(sa, caps);

  SimpleSemisimpleReport report;
  report.simple = ideals.size() == 2;
  report.maximal_state_ideals = maximal_state_ideals(sa, caps);
  report.maxs_intersection = ElementSet::full(n);
  for (const ElementSet& m : report.maximal_state_ideals)
    report.maxs_intersection = report.maxs_intersection & m;
  report.semisimple = report.maxs_intersection == ElementSet::zero_only(n);

  if (sa.has(StateKind::state_morphism)) {
    const KernelImage ki = kernel_image(sa);
    const RadicalReport on_x = radical_and_simplicity(x, caps);
    const RadicalReport on_image = radical_and_simplicity(
        induced_subalgebra(x, ki.image).algebra, caps);

    const bool kernel_maximal =
        std::find(on_x.maximal_ideals.begin(), on_x.maximal_ideals.end(),
                  ki.kernel) != on_x.maximal_ideals.end();
    internal_check(on_image.simple.value_or(false) == kernel_maximal,
                   "image simple iff kernel maximal");
    internal_check(on_image.semisimple == on_x.radical.subset_of(ki.kernel),
                   "image semisimple iff radical inside kernel");
    internal_check(report.simple == on_x.simple.value_or(false),
                   "(X, mu) simple iff X simple");
    if (on_image.semisimple)
      internal_check(report.maxs_intersection.subset_of(ki.kernel),
                     "semisimple image forces MaxS intersection inside kernel");

    const AlgebraFlags flags = classify(x);
    if (!x.trivial() && flags.bounded && sa(flags.greatest) == flags.greatest &&
        report.semisimple)
      internal_check(sa.mu() == UnaryMap::identity(n),
                     "bounded semisimple unit-fixing operator must be the identity");
  }
  return report;
}

}  // namespace bck
