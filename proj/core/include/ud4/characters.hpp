#pragma once

// Irreducible characters of U(q): labels and exact values.
//
// Family names: F12, F11, F8910 (p > 2), F8910q3 and F8910q3/2 (p = 2),
// F89q3, F89q2, F810q3, F810q2, F910q3, F910q2, F8q3, F8q2, F9q3, F9q2,
// F10q3, F10q2, F567, F56, F57, F67, F5, F6, F7, Flin.
// Parameters are named as in the classes module (a8, b3, ...); a parameter of
// the general formula that a label does not carry is zero. The p = 2 family
// F8910q3/2 additionally carries a567, d124 in {0, 1} and d3.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ud4/classes.hpp"
#include "ud4/cyclotomic.hpp"
#include "ud4/group.hpp"

namespace ud4 {

class CharError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an element is not of a shape the value formulas handle.
class ShapeError : public CharError {
 public:
  using CharError::CharError;
};

struct CharLabel {
  std::string family;
  ParamList params;
  std::uint64_t degree = 1;
  bool half_degree = false;  // degree q^3/2 (p = 2 only)

  /// "F11[a11=1,b5=0,b6=2,b7=0,b3=1]"
  std::string to_string() const;
  bool operator==(const CharLabel& o) const { return family == o.family && params == o.params; }
};

struct CharFamily {
  std::string name;
  std::vector<std::string> params;
  std::string count_formula;
  std::function<mpz_class(const mpz_class&)> count;
  int degree_exp = 0;       // degree q^degree_exp
  bool half_degree = false;  // ... divided by 2
};

/// Families in table order for characteristic p.
std::vector<CharFamily> char_families(std::uint32_t p);

std::vector<CharLabel> enumerate_chars(const FieldCtx& F);

/// Parses "F11[a11=1,b5=0,b6=2,b7=0,b3=1]" and checks that the parameters form
/// one of the enumerated labels.
CharLabel parse_label(const FieldCtx& F, const std::string& text);

/// Throws CharError unless the label is one of the enumerated labels.
void validate_label(const FieldCtx& F, const CharLabel& label);

std::uint64_t degree(const CharLabel& label);

/// Label of g.chi, where (g.chi)(x) = chi(g^{-1} x); parameter subscripts move
/// by g. Requires p > 2, and excludes F567 for p = 3.
CharLabel transport_char(const FieldCtx& F, const GraphAuto& g, const CharLabel& label);

/// Symbolic description of the exponential sum a value used, if any.
struct SumNote {
  std::string kind;  // "gauss", "kloosterman", "quad_linear"
  std::vector<Fq> args;
};

/// Exact character values. Holds a cache of exponential sums, so an evaluator
/// is not safe for concurrent use; create one per thread.
class CharEvaluator {
 public:
  explicit CharEvaluator(const UGroup& G);

  const UGroup& group() const { return G_; }

  /// Throws ShapeError if x is not covered by the formulas.
  CycInt value(const CharLabel& label, const UElement& x, SumNote* note = nullptr);

 private:
  std::optional<CycInt> direct(const CharLabel& label, const UElement& x, SumNote* note);
  std::optional<CycInt> f567(const CharLabel& l, const UElement& x);
  std::optional<CycInt> f89q3(const CharLabel& l, const UElement& x);
  std::optional<CycInt> f89q2(const CharLabel& l, const UElement& x);
  std::optional<CycInt> f8910(const CharLabel& l, const UElement& x, SumNote* note);
  std::optional<CycInt> f8910_p2_full(const CharLabel& l, const UElement& x);
  std::optional<CycInt> f8910_p2_half(const CharLabel& l, const UElement& x);
  std::optional<CycInt> f11(const CharLabel& l, const UElement& x, SumNote* note);
  std::optional<CycInt> f12(const CharLabel& l, const UElement& x, SumNote* note);

  CycInt phi(Fq v) const { return CycInt::zeta_pow(F_.p(), F_.trace(v)); }
  CycInt scaled_phi(std::uint64_t m, Fq v) const;
  /// Conjugates x by x_1(s1) x_2(s2) x_4(s4) chosen to clear t5, t6, t7 when
  /// t3 != 0 and t1 = t2 = t4 = 0.
  std::optional<UElement> clear_567(const UElement& x) const;

  const UGroup& G_;
  const FieldCtx& F_;
  ExpSums sums_;
};

}  // namespace ud4
