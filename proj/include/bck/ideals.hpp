#pragma once

#include <optional>
#include <vector>

#include "bck/core.hpp"

namespace bck {

// An ideal contains 0 and is closed under the rule: y*x in I and x in I
// imply y in I. Ideals are automatically downward closed.
bool is_ideal(const CayleyAlgebra& x, const ElementSet& s);

// All ideals, ordered by (size, mask). Subset scan, cap-gated.
std::vector<ElementSet> all_ideals(const CayleyAlgebra& x, const Caps& caps = {});

// Least ideal containing the generators (fixpoint closure). The suite
// cross-checks this against the reduction-sequence description: y lies in
// the result iff some chain (..(y*a1)*..)*ak with ai in gens (or 0) ends at 0.
ElementSet generated_ideal(const CayleyAlgebra& x, const ElementSet& gens);

// Least ideal containing base (an ideal) and gens; reduction chains over
// gens now only need to land inside base.
ElementSet generated_ideal_over(const CayleyAlgebra& x, const ElementSet& base,
                                const ElementSet& gens);

// Commutative ideal: x*y in I implies x*(y*(y*x)) in I. The first failing
// pair is reported with the evaluated element.
struct CommutativeIdealViolation {
  int x = -1, y = -1;
  int value = -1;  // x*(y*(y*x)), which escaped the ideal
};
std::optional<CommutativeIdealViolation> commutative_ideal_violation(
    const CayleyAlgebra& x, const ElementSet& ideal);
bool is_commutative_ideal(const CayleyAlgebra& x, const ElementSet& ideal);

// Prime: proper, and <a> n <b> inside I forces a in I or b in I.
bool is_prime_ideal(const CayleyAlgebra& x, const ElementSet& ideal);

// Maximal: proper, and adjoining any outside element generates everything.
bool is_maximal_ideal(const CayleyAlgebra& x, const ElementSet& ideal);

struct IdealFlags {
  bool prime = false;
  bool maximal = false;
  bool commutative = false;
};
IdealFlags ideal_flags(const CayleyAlgebra& x, const ElementSet& ideal);

// Equivalence classes in canonical form: classes are numbered by their
// minimal representative in ascending order, so the class of 0 is class 0.
struct CongruenceRelation {
  int order = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  bool same(int x, int y) const { return class_of[x] == class_of[y]; }
  int size() const { return static_cast<int>(classes.size()); }
  std::string to_string() const;  // classes {0,1}{2}{3}
  bool operator==(const CongruenceRelation&) const = default;
};

CongruenceRelation congruence_from_class_of(std::vector<int> class_of);

// theta_I: x ~ y iff x*y and y*x both lie in I. Transitivity, compatibility
// with * and [0] = I are re-verified as internal checks.
CongruenceRelation congruence_of(const CayleyAlgebra& x, const ElementSet& ideal);

// All operation-compatible equivalences, via set-partition enumeration
// (independent of the ideal route). Hard-capped at order 10.
std::vector<CongruenceRelation> all_congruences(const CayleyAlgebra& x);

// Quotient along theta_I. Class indices follow CongruenceRelation order, so
// the image of 0 is element 0; well-definedness of the table is re-verified
// exhaustively, and a commutative ideal must yield a commutative quotient.
struct Quotient {
  CayleyAlgebra algebra;
  UnaryMap projection;  // element -> class index
  CongruenceRelation relation;
};
Quotient quotient(const CayleyAlgebra& x, const ElementSet& ideal);

struct RadicalReport {
  std::vector<ElementSet> maximal_ideals;
  ElementSet radical;          // intersection of maximal ideals (everything if none)
  std::optional<bool> simple;  // nullopt for the trivial algebra
  bool semisimple = false;     // radical == {0}
};
RadicalReport radical_and_simplicity(const CayleyAlgebra& x, const Caps& caps = {});

}  // namespace bck
