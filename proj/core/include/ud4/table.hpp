#pragma once

// The character table of U(q) for one q: assembly, exact verification, export.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ud4/characters.hpp"
#include "ud4/classes.hpp"
#include "ud4/cyclotomic.hpp"
#include "ud4/group.hpp"

namespace ud4 {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  /// Tables with at most this many cells are evaluated up front and stored.
  std::uint64_t dense_cell_limit = 12'000'000;
};

struct FamilyBlock {
  std::string name;
  std::size_t start = 0;
  std::size_t count = 0;
};

/// Rows are characters in family order, columns are class representatives in
/// family order with parameters in enumeration order. Large tables are lazy:
/// cells are evaluated on access. Not safe for concurrent access.
class CharTable {
 public:
  static CharTable build(FieldPtr F, const TableOptions& opts = {});

  const FieldCtx& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  const UGroup& group() const { return *G_; }
  const std::vector<CharLabel>& rows() const { return rows_; }
  const std::vector<ClassRep>& cols() const { return cols_; }
  bool is_dense() const { return dense_; }
  std::size_t identity_column() const { return identity_col_; }

  CycInt value(std::size_t i, std::size_t j) const;
  /// The exponential sum behind a cell, if its formula uses one.
  std::optional<SumNote> note(std::size_t i, std::size_t j) const;
  std::vector<CycInt> row(std::size_t i) const;
  std::vector<CycInt> column(std::size_t j) const;

  std::vector<FamilyBlock> row_families() const;
  std::vector<FamilyBlock> column_families() const;

  /// Same field, labels, representatives and values.
  bool operator==(const CharTable& o) const;

  /// Dense table from explicit data; used by the JSON reader.
  static CharTable from_values(FieldPtr F, std::vector<CharLabel> rows, std::vector<ClassRep> cols,
                               const std::vector<std::vector<CycInt>>& values,
                               std::unordered_map<std::uint64_t, SumNote> notes = {});

 private:
  CharTable() = default;
  void store(std::size_t i, std::size_t j, const CycInt& v);
  CycInt eval(std::size_t i, std::size_t j, SumNote* note) const;

  FieldPtr F_;
  std::shared_ptr<UGroup> G_;
  std::shared_ptr<CharEvaluator> ev_;
  std::vector<CharLabel> rows_;
  std::vector<ClassRep> cols_;
  std::size_t identity_col_ = 0;
  bool dense_ = false;
  std::vector<std::int64_t> cells_;  // row-major, CycInt::dim(p) coefficients per cell
  std::unordered_map<std::uint64_t, SumNote> notes_;  // key i * cols + j
};

struct CountReport {
  bool square = false;
  bool class_sizes_ok = false;  // sum |C| = q^12
  bool degrees_ok = false;      // sum deg^2 = q^12
  bool identity_column_ok = false;
  std::size_t rows = 0, cols = 0;
  mpz_class sum_class_sizes, sum_degree_squares, group_order;
  bool ok() const { return square && class_sizes_ok && degrees_ok && identity_column_ok; }
};
CountReport count_checks(const CharTable& t);

struct OrthoMode {
  bool full = true;
  std::uint64_t pairs = 10000;  // sampled: minimum number of row pairs and of column pairs
  std::uint64_t seed = 0x5eed0d4ULL;
  static OrthoMode Full() { return {}; }
  static OrthoMode Sampled(std::uint64_t n) { return {false, n, 0x5eed0d4ULL}; }
};

struct OrthoFailure {
  std::string kind;  // "row" or "column"
  std::size_t i = 0, j = 0;
  std::string lhs, rhs;
};

struct OrthoReport {
  bool ok = true;
  std::uint64_t row_pairs = 0, column_pairs = 0;
  std::optional<OrthoFailure> failure;
};

/// Rows: sum_C |C| chi_i(g_C) conj(chi_j(g_C)) = delta_ij q^12.
/// Columns: sum_chi chi(g_C) conj(chi(g_D)) = delta_CD |C_U(g_C)|.
OrthoReport verify_orthogonality(const CharTable& t, const OrthoMode& mode);

struct EquivarianceReport {
  bool ok = true;
  std::uint64_t cells = 0;
  std::size_t excluded_rows = 0, excluded_cols = 0;
  std::string failure;
};
/// value(chi, C) = value(g.chi, g.C) on every cell whose row and column
/// families are stable under g (p > 2).
EquivarianceReport verify_equivariance(const CharTable& t, const GraphAuto& g);

enum class ExportFormat { Json, Csv, Latex };
enum class ValueMode { Exact, Float };

ExportFormat parse_format(const std::string& s);
ValueMode parse_value_mode(const std::string& s);

void export_table(const CharTable& t, std::ostream& out, ExportFormat format, ValueMode mode);
/// Reads an exact-mode JSON export.
CharTable import_json(std::istream& in);

/// "re+imi" with at most 7 decimals, e.g. 1+2z over F_3 -> "0+1.7320508i".
std::string format_float(const CycInt& v);
/// Symbolic form of a sum note, e.g. "G(2)", "K(1,0)", "Q(1,1)".
std::string note_symbol(const SumNote& n);

}  // namespace ud4
