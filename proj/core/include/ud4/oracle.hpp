#pragma once

// Brute-force ground truth for small q: quotient enumeration, conjugacy
// classes by orbits, induced characters and exact inner products.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ud4/characters.hpp"
#include "ud4/cyclotomic.hpp"
#include "ud4/group.hpp"

namespace ud4 {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleCap = 1u << 20;

/// U/M_level with elements indexed by their normal-form digits (base q, in
/// product order). Elements are generated on demand, not stored.
class GroupTable {
 public:
  /// Throws OracleError if q^(level-1) exceeds cap.
  GroupTable(const UGroup& G, int level, std::uint64_t cap = kDefaultOracleCap);

  const UGroup& group() const { return G_; }
  int level() const { return level_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t index(const UElement& x) const;
  UElement element(std::uint64_t idx) const;
  UElement mul(const UElement& x, const UElement& y) const { return G_.mul_mod(x, y, level_); }
  UElement inv(const UElement& x) const { return G_.inv_mod(x, level_); }
  /// h^{-1} x h in the quotient.
  UElement conj(const UElement& x, const UElement& h) const;

 private:
  const UGroup& G_;
  int level_;
  int length_;
  std::uint64_t size_;
};

struct OracleClassPartition {
  std::vector<std::uint32_t> class_of;       // element index -> class id
  std::vector<std::uint64_t> size;           // class id -> size
  std::vector<std::uint64_t> representative;  // class id -> smallest element index
  std::size_t count() const { return size.size(); }
};

/// Conjugacy classes by orbit closure under conjugation by every x_i(s), s != 0.
OracleClassPartition orbit_classes(const GroupTable& tbl);

/// A subgroup K of U/M_level with a linear character lambda, induced over a
/// covering set X of right cosets, optionally tensored with a linear
/// character and transported by a graph automorphism:
///   chi(h) = psi(g^{-1} h),  psi = lin * Ind(lambda).
struct Construction {
  std::string description;
  int level = 13;
  std::vector<UElement> generators;                   // of K
  std::function<std::optional<CycInt>(const UElement&)> lambda;  // nullopt off K
  std::vector<int> transversal_roots;                 // X = product of these root subgroups
  std::array<Fq, 4> lin{};                            // b1, b2, b3, b4 of the tensor factor
  GraphAuto transport = GraphAuto::identity();
};

/// The induction construction for any enumerated label.
Construction construction_for(const UGroup& G, const CharLabel& label);

class InducedCharacter {
 public:
  /// Enumerates K from its generators, checks that lambda is a homomorphism
  /// on K and that X covers every right coset of K equally often. Throws
  /// OracleError when |K| or |X| exceeds the cap or a check fails.
  InducedCharacter(const UGroup& G, Construction c, std::uint64_t cap = kDefaultOracleCap);

  const Construction& construction() const { return c_; }
  std::uint64_t subgroup_order() const { return k_order_; }
  std::uint64_t coset_multiplicity() const { return mult_; }

  CycInt value(const UElement& h) const;

 private:
  const UGroup& G_;
  Construction c_;
  std::vector<UElement> xs_;  // elements of X
  std::uint64_t k_order_ = 0;
  std::uint64_t mult_ = 0;
};

/// Values at the given elements of lambda induced from K up to U/M_level.
std::vector<CycInt> induce_linear(const UGroup& G, const Construction& c, const std::vector<UElement>& at);

/// (1/order) sum_C size_C chi(g_C) conj(psi(g_C)).
CycRational inner_product(const std::vector<CycInt>& chi, const std::vector<CycInt>& psi,
                          const std::vector<mpz_class>& sizes, const mpz_class& order);

}  // namespace ud4

namespace ud4 {

struct OracleReport {
  std::uint64_t group_order = 0;
  std::size_t oracle_classes = 0;
  std::size_t listed_classes = 0;
  bool classes_ok = false;        // counts, sizes, centralizers and distinctness agree
  std::uint64_t cells_checked = 0;  // (character, representative) pairs compared with the induced value
  std::uint64_t class_function_checks = 0;
  bool characters_ok = false;     // formulas agree with the induced characters
  bool irreducible_ok = false;    // <chi, chi> = 1 for every label
  std::vector<std::string> problems;  // first few failures, human readable
  bool ok() const { return classes_ok && characters_ok && irreducible_ok; }
};

/// Full brute-force certification of the class list and every character
/// formula against U itself. Needs q^12 <= cap.
OracleReport certify_with_oracle(const UGroup& G, std::uint64_t cap = kDefaultOracleCap);

}  // namespace ud4
