#pragma once

// The Sylow p-subgroup U(q) of D4(q) as 12-coordinate normal forms.
//
// An element is x_3(t_3) x_1(t_1) x_2(t_2) x_4(t_4) x_5(t_5) ... x_12(t_12);
// UElement stores t_1..t_12 by root index. "Position" refers to the slot in
// that product order: root 3 is position 0, roots 1, 2, 4 are positions 1..3
// and root j >= 5 is position j - 1.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ud4/ffield.hpp"

namespace ud4 {

inline constexpr int kNumRoots = 12;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Root {
  std::array<int, 4> coeffs;  // over the simple roots alpha_1..alpha_4
  int height;
};

/// [x_i(t), x_j(u)] = x_k(sign * t * u)
struct CommEntry {
  int k;
  int sign;
};

/// Graph automorphism acting on root subscripts; perm[i] is the image of i.
struct GraphAuto {
  std::string name;
  std::array<int, kNumRoots + 1> perm;  // perm[0] unused

  static GraphAuto identity();
  static GraphAuto tau();
  static GraphAuto tau2();
  static GraphAuto sigma12();
  static GraphAuto sigma14();
  static GraphAuto sigma24();
  static std::vector<GraphAuto> all();

  int operator()(int i) const { return perm[i]; }
  GraphAuto inverse() const;
  bool operator==(const GraphAuto& o) const { return perm == o.perm; }
};

class RootData {
 public:
  static const RootData& get();

  const Root& root(int i) const { return roots_[i - 1]; }
  /// Commutator of x_i and x_j in that order, if alpha_i + alpha_j is a root.
  std::optional<CommEntry> comm(int i, int j) const {
    const CommEntry& e = comm_[i - 1][j - 1];
    if (e.k == 0) return std::nullopt;
    return e;
  }
  /// Index of the root alpha_i + alpha_j, or 0.
  int root_sum(int i, int j) const;

  static constexpr std::array<int, kNumRoots> kOrder = {3, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  static constexpr int position(int i) { return i == 3 ? 0 : (i <= 2 ? i : i - 1); }
  static constexpr int root_at(int pos) { return kOrder[pos]; }

  /// Throws GroupError unless g maps the commutator table onto itself, signs included.
  void validate(const GraphAuto& g) const;

 private:
  RootData();

  std::array<Root, kNumRoots> roots_;
  std::array<std::array<CommEntry, kNumRoots>, kNumRoots> comm_{};
};

struct UElement {
  const FieldCtx* ctx = nullptr;
  std::array<Fq, kNumRoots> coord{};  // coord[i-1] = t_i

  Fq t(int i) const { return coord[i - 1]; }
  Fq& t(int i) { return coord[i - 1]; }
  bool is_identity() const {
    for (auto c : coord) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  bool operator==(const UElement& o) const { return coord == o.coord; }
};

class UGroup {
 public:
  explicit UGroup(FieldPtr F);

  const FieldCtx& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }

  UElement identity() const;
  UElement root_elem(int i, Fq t) const;
  /// Element with the given t_1..t_12 (normal form coordinates).
  UElement from_coords(const std::array<Fq, kNumRoots>& t) const;

  UElement mul(const UElement& x, const UElement& y) const { return mul_mod(x, y, 13); }
  UElement inv(const UElement& x) const { return inv_mod(x, 13); }
  /// h^{-1} x h
  UElement conj(const UElement& x, const UElement& h) const;
  /// x^{-1} y^{-1} x y
  UElement commutator(const UElement& x, const UElement& y) const;
  UElement apply_auto(const GraphAuto& g, const UElement& x) const;

  /// Products in the quotient U/M_i (M_13 is trivial, so i = 13 is U itself);
  /// inputs must already be truncated to U/M_i.
  UElement mul_mod(const UElement& x, const UElement& y, int i) const;
  UElement inv_mod(const UElement& x, int i) const;

  /// Sets every coordinate lying in M_i to zero.
  static UElement truncate(const UElement& x, int i);
  /// Number of normal-form positions that survive in U/M_i.
  static int quotient_length(int i);
  static bool in_Mi(const UElement& x, int i);

  /// Right-multiplies the normal form c by x_r(u) in U/M_i.
  void mul_root(UElement& c, int r, Fq u, int i = 13) const;

  /// Product syntax "x3(2)*x1(1)*x12(4)", field elements by enumeration index;
  /// the identity prints as "1".
  std::string format(const UElement& x) const;
  UElement parse(const std::string& s) const;

 private:
  void check(const UElement& x) const;
  void collect(UElement& c, int pos, Fq u, int cutoff) const;

  FieldPtr F_;
  const RootData& R_;
};

}  // namespace ud4
