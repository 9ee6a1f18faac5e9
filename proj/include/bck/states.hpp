#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bck/core.hpp"
#include "bck/ideals.hpp"

namespace bck {

// The three operator classes. A right state operator is always a left state
// operator, and an idempotent endomorphism is always a left state operator;
// the converses fail, so the classes are tracked independently.
enum class StateKind { left_state, right_state, state_morphism };

std::string to_string(StateKind kind);

// First failed axiom instance found by the lexicographic (x, y) scan,
// checking S0, then S1, then S2 per pair (homomorphism then idempotence for
// the morphism kind; idempotence witnesses use y = -1).
struct StateViolation {
  StateKind kind = StateKind::left_state;
  std::string axiom;  // "S0" | "S1" | "S2" | "hom" | "idempotent"
  int x = -1, y = -1;
  int lhs = -1, rhs = -1;
  std::string to_string() const;
};

// An operator together with the algebra it lives on. `kinds` records every
// certification the value carries (a right state is recorded as a left state
// too, and so is a morphism); `kind()` reports the strongest one.
class StateAlgebra {
 public:
  StateAlgebra(CayleyAlgebra algebra, UnaryMap mu, unsigned kinds);

  const CayleyAlgebra& algebra() const { return algebra_; }
  const UnaryMap& mu() const { return mu_; }
  int order() const { return algebra_.order(); }
  int operator()(int x) const { return mu_(x); }

  bool has(StateKind kind) const { return (kinds_ >> static_cast<int>(kind)) & 1u; }
  StateKind kind() const;  // strongest certified class
  unsigned kinds() const { return kinds_; }

 private:
  CayleyAlgebra algebra_;
  UnaryMap mu_;
  unsigned kinds_ = 0;
};

// Exhaustive axiom scan for the requested kind; nullopt means certified.
std::optional<StateViolation> state_violation(const CayleyAlgebra& x,
                                              const UnaryMap& m, StateKind kind);

// Certification wrappers. After the requested axioms pass, the implied
// certifications are added (right => left, morphism => left) and the
// standard derived laws are re-verified as internal checks: mu(0) = 0,
// mu o mu = mu, mu(x)*mu(y) <= mu(x*y) (with its n-fold form), kernel is an
// ideal, image is a subalgebra, kernel and image meet only in 0; a right
// state additionally has a commutative kernel and splits subtraction of
// comparable pairs.
StateAlgebra certify_state(const CayleyAlgebra& x, const UnaryMap& m,
                           StateKind kind);
std::optional<StateAlgebra> try_certify_state(const CayleyAlgebra& x,
                                              const UnaryMap& m, StateKind kind,
                                              StateViolation* violation = nullptr);

// All operators of the requested kind, in lexicographic order of the value
// arrays. The scan fixes mu(0) = 0 (forced by S1 at x = y = 0) and prunes
// partial assignments violating S0 before the full per-candidate check.
std::vector<StateAlgebra> enumerate_state_operators(const CayleyAlgebra& x,
                                                    StateKind kind,
                                                    const Caps& caps = {});

// alpha_t(a) = a*t, an idempotent endomorphism whenever a*t = a*(t,t-fold)
// -- automatic on positive implicative algebras. The precondition is checked
// with the failing element reported; the certification itself must succeed
// and is an internal check.
StateAlgebra right_translation_morphism(const CayleyAlgebra& x, int t);

struct KernelImage {
  ElementSet kernel;  // mu^{-1}(0)
  ElementSet image;   // mu(X)
};

// Kernel and image, with the structural facts re-verified: Ker is an ideal,
// Im is a subalgebra, Ker n Im = {0}. For a morphism additionally
// Ker = {x*mu(x)}, {mu(x)*x} subseteq Ker, and <Ker u Im> = X. (The textbook
// claim that {mu(x)*x} equals Ker is false -- alpha_1 on the 4-chain has
// {mu(x)*x} = {0} but Ker = {0,1} -- so only the true inclusion is asserted.)
KernelImage kernel_image(const StateAlgebra& sa);

bool is_state_ideal(const StateAlgebra& sa, const ElementSet& s);

// Filter of all_ideals by mu-invariance; Ker membership is asserted.
std::vector<ElementSet> all_state_ideals(const StateAlgebra& sa,
                                         const Caps& caps = {});

// A set that passed the state-ideal check, with the maximality verdict
// cached once computed.
struct StateIdealCertificate {
  ElementSet members;
  std::optional<bool> maximal_state;
};
StateIdealCertificate certify_state_ideal(const StateAlgebra& sa,
                                          const ElementSet& s);

// Least state ideal containing I u {a}, via the closed formula
//   { x : (x*a^n)*mu(a)^m in I for some n, m <= carrier size }
// (iterated subtraction is non-increasing, so powers stabilize within the
// carrier size). Asserted equal to the intersection of all state ideals
// containing I and a.
ElementSet generated_state_ideal_adjoin(const StateAlgebra& sa,
                                        const StateIdealCertificate& ideal,
                                        int a, const Caps& caps = {});

// Least state ideal containing the ideal I when mu is a morphism: reduction
// chains by mu-images of I-elements must land in I. Asserted equal to the
// intersection oracle.
ElementSet generated_state_ideal_morphism(const StateAlgebra& sa,
                                          const ElementSet& ideal,
                                          const Caps& caps = {});

// Proper state ideals whose adjoin-generation hits X for every outside
// element. The prime-intersection law is asserted: a maximal state ideal
// absorbing an intersection of two state ideals absorbs one of them.
std::vector<ElementSet> maximal_state_ideals(const StateAlgebra& sa,
                                             const Caps& caps = {});

// Congruences compatible with both the operation and mu. The bijection with
// state ideals is asserted: I -> theta_I lands in the list injectively and
// onto, with [0] the inverse.
std::vector<CongruenceRelation> state_congruences(const StateAlgebra& sa,
                                                  const Caps& caps = {});

struct IrreducibilityReport {
  bool verdict = false;
  std::optional<ElementSet> least_nonzero;  // set when verdict holds
};

// Subdirect irreducibility: the nonzero state ideals have a least element.
// Not applicable to the trivial algebra (DomainError).
IrreducibilityReport subdirectly_irreducible(const StateAlgebra& sa,
                                             const Caps& caps = {});

struct IrrCharacterization {
  bool verdict = false;      // subdirectly_irreducible
  bool condition_i = false;  // Ker = {0} and the image algebra is s.i.
  bool condition_ii = false; // Ker != {0}, s.i. as an algebra, and
                             // Ker meets <a> nontrivially for nonzero a in Im
};

// Evaluates both characterizing conditions ("subdirectly irreducible as a
// plain algebra" = least nonzero ideal exists, computed on the induced
// subalgebra) and asserts the disjunction matches the direct verdict.
IrrCharacterization check_irr_characterization(const StateAlgebra& sa,
                                               const Caps& caps = {});

// mu_a: 0 on I, a outside, for a maximal ideal I with a two-class quotient
// and a outside I. Preconditions are reported by failed clause; distinct
// outside choices are asserted to give distinct morphisms sharing kernel I.
StateAlgebra two_class_morphism(const CayleyAlgebra& x, const ElementSet& ideal,
                                int a);

struct SimpleSemisimpleReport {
  bool simple = false;           // exactly two state ideals
  bool semisimple = false;       // intersection of maximal state ideals = {0}
  std::vector<ElementSet> maximal_state_ideals;
  ElementSet maxs_intersection;  // everything if no maximal state ideal
};

// Simplicity flags of (X, mu). For a morphism operator the structural
// equivalences are asserted: image simple iff Ker maximal, image semisimple
// iff Rad(X) inside Ker, (X, mu) simple iff X simple, semisimple image
// forces the MaxS intersection inside Ker, and a bounded nontrivial algebra
// with mu(1) = 1 and (X, mu) semisimple forces mu = identity.
SimpleSemisimpleReport simple_semisimple_state(const StateAlgebra& sa,
                                               const Caps& caps = {});

}  // namespace bck
