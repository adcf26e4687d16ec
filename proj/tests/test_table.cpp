#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "json.hpp"
#include "ud4/table.hpp"

using namespace ud4;

namespace {

const CharTable& table_q2() {
  static const CharTable t = CharTable::build(FieldCtx::make(2, 1));
  return t;
}
const CharTable& table_q3() {
  static const CharTable t = CharTable::build(FieldCtx::make(3, 1));
  return t;
}

std::vector<std::vector<CycInt>> all_rows(const CharTable& t) {
  std::vector<std::vector<CycInt>> v;
  for (std::size_t i = 0; i < t.rows().size(); ++i) v.push_back(t.row(i));
  return v;
}

std::string to_key(const std::vector<CycInt>& row) {
  std::string s;
  for (const auto& c : row) s += c.to_string() + ";";
  return s;
}

}  // namespace

TEST(Table, SquareWithExactCounts) {
  for (const CharTable* t : {&table_q2(), &table_q3()}) {
    const CountReport c = count_checks(*t);
    EXPECT_TRUE(c.square);
    EXPECT_EQ(c.rows, c.cols);
    EXPECT_TRUE(c.class_sizes_ok);
    EXPECT_TRUE(c.degrees_ok);
    EXPECT_TRUE(c.identity_column_ok);
    EXPECT_EQ(c.sum_degree_squares, c.group_order);
  }
  EXPECT_EQ(count_checks(table_q3()).group_order, 531441);
}

TEST(Table, IdentityColumnHoldsDegrees) {
  const CharTable& t = table_q3();
  const std::size_t j = t.identity_column();
  EXPECT_TRUE(t.cols()[j].rep.is_identity());
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    EXPECT_EQ(t.value(i, j), CycInt::integer(3, static_cast<i128>(t.rows()[i].degree)));
}

TEST(Table, FullOrthogonality) {
  for (const CharTable* t : {&table_q2(), &table_q3()}) {
    const OrthoReport r = verify_orthogonality(*t, OrthoMode::Full());
    EXPECT_TRUE(r.ok) << (r.failure ? r.failure->kind + " " + r.failure->lhs + " vs " + r.failure->rhs : "");
    const std::uint64_t n = t->rows().size();
    EXPECT_EQ(r.row_pairs, n * (n + 1) / 2);
    EXPECT_EQ(r.column_pairs, n * (n + 1) / 2);
  }
}

TEST(Table, SampledOrthogonalityIsDeterministic) {
  const OrthoReport a = verify_orthogonality(table_q3(), OrthoMode::Sampled(10000));
  const OrthoReport b = verify_orthogonality(table_q3(), OrthoMode::Sampled(10000));
  EXPECT_TRUE(a.ok);
  EXPECT_GE(a.row_pairs, 10000u);
  EXPECT_GE(a.column_pairs, 10000u);
  EXPECT_EQ(a.row_pairs, b.row_pairs);
}

TEST(Table, CorruptedValueIsCaught) {
  const CharTable& t = table_q2();
  auto values = all_rows(t);
  values[5][7] = values[5][7] + CycInt::one(2);
  const CharTable bad = CharTable::from_values(t.field_ptr(), t.rows(), t.cols(), values);
  const OrthoReport r = verify_orthogonality(bad, OrthoMode::Full());
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_NE(r.failure->lhs, r.failure->rhs);
}

TEST(Table, RowsAndColumnsAreDistinct) {
  for (const CharTable* t : {&table_q2(), &table_q3()}) {
    std::set<std::string> rows, cols;
    for (const auto& r : all_rows(*t)) rows.insert(to_key(r));
    for (std::size_t j = 0; j < t->cols().size(); ++j) cols.insert(to_key(t->column(j)));
    EXPECT_EQ(rows.size(), t->rows().size());
    EXPECT_EQ(cols.size(), t->cols().size());
  }
}

TEST(Table, TauEquivarianceAtQ3) {
  const EquivarianceReport r = verify_equivariance(table_q3(), GraphAuto::tau());
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_GT(r.cells, 400000u);
  EXPECT_THROW(verify_equivariance(table_q2(), GraphAuto::tau()), std::exception);
}

TEST(Table, LinearRowIsRootsOfUnity) {
  const CharTable& t = table_q3();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (t.rows()[i].family != "Flin") continue;
    for (const auto& v : t.row(i)) EXPECT_EQ(v * v.conj(), CycInt::one(3));
  }
}

TEST(Export, JsonRoundTrip) {
  for (const CharTable* t : {&table_q2(), &table_q3()}) {
    std::stringstream ss;
    export_table(*t, ss, ExportFormat::Json, ValueMode::Exact);
    const CharTable back = import_json(ss);
    EXPECT_TRUE(back == *t);
  }
}

TEST(Export, JsonIsAnnotated) {
  std::stringstream ss;
  export_table(table_q3(), ss, ExportFormat::Json, ValueMode::Exact);
  const auto doc = nlohmann::json::parse(ss.str());
  EXPECT_EQ(doc["q"], 3);
  EXPECT_EQ(doc["value_mode"], "exact");
  EXPECT_EQ(doc["rows"].size(), table_q3().rows().size());
  std::set<std::string> kinds;
  for (const auto& a : doc["annotations"]) kinds.insert(a["sum"].get<std::string>());
  EXPECT_TRUE(kinds.count("gauss"));
  EXPECT_TRUE(kinds.count("kloosterman"));
}

TEST(Export, FloatMode) {
  std::stringstream ss;
  export_table(table_q3(), ss, ExportFormat::Json, ValueMode::Float);
  const std::string s = ss.str();
  EXPECT_NE(s.find("\"float\""), std::string::npos);
  const CharTable& t = table_q3();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (t.rows()[i].family != "F8910") continue;
    const std::string cell = format_float(t.value(i, 1));
    EXPECT_NE(s.find(cell), std::string::npos) << cell;
    break;
  }
  std::stringstream again(s);
  EXPECT_THROW(import_json(again), std::exception);
  EXPECT_EQ(format_float(CycInt(3, {1, 2})), "0+1.7320508i");
  EXPECT_EQ(format_float(CycInt::integer(2, -4)), "-4+0i");
}

TEST(Export, CsvAndLatex) {
  std::stringstream csv, tex;
  export_table(table_q2(), csv, ExportFormat::Csv, ValueMode::Exact);
  export_table(table_q2(), tex, ExportFormat::Latex, ValueMode::Float);
  std::size_t lines = 0;
  for (std::string line; std::getline(csv, line);) lines += !line.empty() && line[0] != '#';
  EXPECT_GT(lines, table_q2().rows().size());
  EXPECT_NE(tex.str().find("\\begin{longtable}"), std::string::npos);
  EXPECT_NE(tex.str().find("$C_{12}$"), std::string::npos);
  EXPECT_NE(tex.str().find("\\mathcal{F}_{12}"), std::string::npos);
}

TEST(Export, ParseOptions) {
  EXPECT_EQ(parse_format("csv"), ExportFormat::Csv);
  EXPECT_EQ(parse_value_mode("float"), ValueMode::Float);
  EXPECT_THROW(parse_format("xml"), TableError);
  EXPECT_THROW(parse_value_mode("approx"), TableError);
}
