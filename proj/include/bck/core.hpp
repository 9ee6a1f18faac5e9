#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bck/caps.hpp"
#include "bck/errors.hpp"

namespace bck {

// Subset of a dense carrier {0, ..., universe-1}. Bitmask semantics; the
// universe is capped at 64 so every set fits one machine word.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe, uint64_t bits = 0);
  static ElementSet singleton(int universe, int x);
  static ElementSet zero_only(int universe) { return singleton(universe, 0); }
  static ElementSet full(int universe);

  int universe() const { return universe_; }
  uint64_t mask() const { return bits_; }
  bool contains(int x) const { return (bits_ >> x) & 1u; }
  void add(int x);
  void remove(int x);
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool subset_of(const ElementSet& other) const;
  std::vector<int> elements() const;
  std::string to_string() const;  // "{0,1,2}"

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator|(const ElementSet& a, const ElementSet& b);
  bool operator==(const ElementSet&) const = default;

 private:
  int universe_ = 0;
  uint64_t bits_ = 0;
};

// Total map {0,...,n-1} -> codomain; endomaps have codomain == domain.
struct UnaryMap {
  std::vector<int> values;

  UnaryMap() = default;
  explicit UnaryMap(std::vector<int> v) : values(std::move(v)) {}
  static UnaryMap identity(int n);
  static UnaryMap constant(int n, int value);

  int domain() const { return static_cast<int>(values.size()); }
  int operator()(int x) const { return values[x]; }
  bool operator==(const UnaryMap&) const = default;
};

// Unchecked binary operation table over {0,...,order-1}, row-major:
// table[x*order + y] = x*y.
struct RawTable {
  int order = 0;
  std::vector<int> table;
  std::string name;

  int at(int x, int y) const { return table[x * order + y]; }
  int& at(int x, int y) { return table[x * order + y]; }
};

struct AxiomViolation {
  std::string axiom;       // "BCK1".."BCK4"
  int x = -1, y = -1, z = -1;  // unused instance slots stay -1
  std::string to_string() const;
};

struct BckReport {
  bool ok = false;
  std::vector<AxiomViolation> violations;
};

// Validates shape (throws FormatError on wrong arity or entries out of
// range), then checks the four defining axioms exhaustively:
//   BCK1  ((x*y)*(x*z))*(z*y) = 0
//   BCK2  x*0 = x
//   BCK3  x*y = 0 and y*x = 0 imply x = y
//   BCK4  0*x = 0
BckReport check_bck(const RawTable& raw);

// A table that passed certification. All downstream operations require one,
// so "certified" is a type-level invariant. The induced order is
// x <= y  iff  x*y = 0.
class CayleyAlgebra {
 public:
  // Throws DomainError naming the first violated axiom instance. After the
  // defining axioms pass, the standard derived laws and the order axioms are
  // re-verified as internal checks.
  static CayleyAlgebra certify(RawTable raw);
  static std::optional<CayleyAlgebra> try_certify(RawTable raw,
                                                  BckReport* report = nullptr);

  int order() const { return raw_.order; }
  int op(int x, int y) const { return raw_.table[x * raw_.order + y]; }
  bool leq(int x, int y) const { return op(x, y) == 0; }
  int op_iter(int x, int y, int k) const;  // x * y^k (k-fold right subtraction)
  bool trivial() const { return raw_.order == 1; }
  const std::string& name() const { return raw_.name; }
  void rename(std::string name) { raw_.name = std::move(name); }
  const RawTable& raw() const { return raw_; }

  // Table equality; names are ignored.
  bool same_table(const CayleyAlgebra& other) const {
    return raw_.order == other.raw_.order && raw_.table == other.raw_.table;
  }

 private:
  struct Trusted {};
  CayleyAlgebra(RawTable raw, Trusted) : raw_(std::move(raw)) {}

  RawTable raw_;

  // Products of certified tables are certified by construction (the axioms
  // are quasi-identities, preserved under finite direct products), so the
  // factory below may skip the O(n^3) re-check at large orders.
  friend CayleyAlgebra direct_product(const CayleyAlgebra&,
                                      const CayleyAlgebra&, const Caps&);
};

struct AlgebraFlags {
  bool commutative = false;           // x*(x*y) = y*(y*x)
  bool positive_implicative = false;  // (x*y)*z = (x*z)*(y*z)
  bool bounded = false;               // greatest element exists
  bool linear = false;                // the order is total
  bool lattice = false;               // the order has all binary meets/joins
  int greatest = -1;                  // element index when bounded
};

AlgebraFlags classify(const CayleyAlgebra& x);
std::string flags_to_string(const AlgebraFlags& f);

// f(x*y) = f(x)*f(y) checked over all pairs in lexicographic order; the
// first failing pair is reported with both evaluated sides.
struct HomViolation {
  int x = -1, y = -1;
  int lhs = -1, rhs = -1;  // f(x*y) vs f(x)*f(y)
};

std::optional<HomViolation> hom_violation(const CayleyAlgebra& dom,
                                          const CayleyAlgebra& cod,
                                          const UnaryMap& f);
bool is_homomorphism(const CayleyAlgebra& dom, const CayleyAlgebra& cod,
                     const UnaryMap& f);

// Searches the 0-fixing bijections; returns a witness when one exists.
// Backtracking over images, capped (factorial blowup) via CapacityError.
std::optional<UnaryMap> isomorphism(const CayleyAlgebra& a,
                                    const CayleyAlgebra& b);
bool isomorphic(const CayleyAlgebra& a, const CayleyAlgebra& b);

// Least subuniverse containing the seed (0 is always adjoined).
ElementSet subalgebra_closure(const CayleyAlgebra& x, const ElementSet& seed);

// All subuniverses, ordered by (size, mask). Subset scan, cap-gated.
std::vector<ElementSet> all_subalgebras(const CayleyAlgebra& x,
                                        const Caps& caps = {});

// The algebra induced on a subuniverse, relabelled along ascending members;
// carrier[i] is the parent element behind index i (0 stays 0).
struct SubAlgebra {
  CayleyAlgebra algebra;
  std::vector<int> carrier;
};
SubAlgebra induced_subalgebra(const CayleyAlgebra& x, const ElementSet& members);

// Componentwise product on the row-major pairing (a,b) -> a*|Y|+b.
CayleyAlgebra direct_product(const CayleyAlgebra& x, const CayleyAlgebra& y,
                             const Caps& caps = {});

// All comparable pairs (x,y) with x <= y, lexicographic. Reflexivity,
// antisymmetry and transitivity re-verified as internal checks.
std::vector<std::pair<int, int>> partial_order(const CayleyAlgebra& x);

}  // namespace bck
