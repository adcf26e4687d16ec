#include "ud4/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include "json.hpp"
#include <ostream>
#include <random>
#include <set>

namespace ud4 {

namespace {

using json = nlohmann::json;

i128 to_i128(const mpz_class& v) { return parse_i128(v.get_str()); }

mpz_class pow_q(std::uint32_t q, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, k);
  return r;
}

std::vector<FamilyBlock> blocks(const std::vector<std::string>& names) {
  std::vector<FamilyBlock> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (out.empty() || out.back().name != names[i]) out.push_back({names[i], i, 0});
    ++out.back().count;
  }
  return out;
}

// Sparse vector of cyclotomic values in the full basis zeta^0..zeta^{L-1}.
struct SparseVec {
  std::vector<std::uint32_t> idx;
  std::vector<std::int64_t> coef;  // L per entry
};

std::size_t full_len(std::uint32_t p) { return p == 2 ? 1 : p; }

SparseVec sparse(const std::vector<CycInt>& values) {
  SparseVec s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const CycInt& v = values[k];
    if (v.is_zero()) continue;
    s.idx.push_back(static_cast<std::uint32_t>(k));
    for (auto c : v.coeffs()) s.coef.push_back(static_cast<std::int64_t>(c));
    if (v.p() != 2) s.coef.push_back(0);
  }
  return s;
}

// sum_k w_k a_k conj(b_k) in the basis zeta^0..zeta^{p-2}.
CycBig weighted_inner(const SparseVec& a, const SparseVec& b, const std::vector<i128>* weights, std::uint32_t p) {
  const std::size_t L = full_len(p);
  std::vector<i128> acc(L, 0);
  std::size_t x = 0, y = 0;
  while (x < a.idx.size() && y < b.idx.size()) {
    if (a.idx[x] < b.idx[y]) {
      ++x;
    } else if (a.idx[x] > b.idx[y]) {
      ++y;
    } else {
      const i128 w = weights ? (*weights)[a.idx[x]] : 1;
      const std::int64_t* ca = &a.coef[x * L];
      const std::int64_t* cb = &b.coef[y * L];
      for (std::size_t k = 0; k < L; ++k) {
        if (ca[k] == 0) continue;
        for (std::size_t l = 0; l < L; ++l) {
          if (cb[l] == 0) continue;
          acc[(k + L - l) % L] += w * ca[k] * cb[l];
        }
      }
      ++x;
      ++y;
    }
  }
  std::vector<mpz_class> c(CycBig::dim(p));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = to_mpz(p == 2 ? acc[0] : acc[k] - acc[L - 1]);
  return CycBig(p, std::move(c));
}

std::vector<std::size_t> sample_indices(const std::vector<FamilyBlock>& fams, std::size_t n, std::size_t k,
                                        std::mt19937_64& rng) {
  std::set<std::size_t> chosen;
  for (const auto& f : fams) {
    if (chosen.size() >= k) break;
    chosen.insert(f.start);
    if (chosen.size() < k && f.count > 1) chosen.insert(f.start + 1 + rng() % (f.count - 1));
  }
  while (chosen.size() < std::min(k, n)) chosen.insert(rng() % n);
  return {chosen.begin(), chosen.end()};
}

std::string fnum(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string coeff_list(const CycInt& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.coeffs().size(); ++k) {
    if (k) s += sep;
    s += to_string(v.coeffs()[k]);
  }
  return s;
}

json cell_json(const CycInt& v, ValueMode mode) {
  if (mode == ValueMode::Float) return format_float(v);
  json arr = json::array();
  for (auto c : v.coeffs()) arr.push_back(static_cast<std::int64_t>(c));
  return arr;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_family(const std::string& name) {
  if (name == "Flin") return "\\mathcal{F}_{\\mathrm{lin}}";
  std::string body;
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
    if (!body.empty()) body += ",";
    if (name[i] == '1' && i + 1 < name.size() && name[i + 1] >= '0' && name[i + 1] <= '2') {
      body += name.substr(i, 2);
      i += 2;
    } else {
      body += name[i++];
    }
  }
  const std::string suffix = name.substr(i);
  if (suffix == "q3") body += ",q^3";
  if (suffix == "q2") body += ",q^2";
  if (suffix == "q3/2") body += ",q^3/2";
  return "\\mathcal{F}_{" + body + "}";
}

/// C_11 -> C_{11}; braced labels pass through.
std::string latex_class(const std::string& label) {
  const auto u = label.rfind('_');
  if (u == std::string::npos || u + 2 >= label.size() || label[u + 1] == '{') return label;
  return label.substr(0, u + 1) + "{" + label.substr(u + 1) + "}";
}

std::string latex_value(const CycInt& v, ValueMode mode) {
  if (mode == ValueMode::Float) return format_float(v);
  std::string s = v.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'z') {
      out += "\\zeta";
      if (i + 1 < s.size() && s[i + 1] == '^') {
        std::size_t j = i + 2;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        out += "^{" + s.substr(i + 2, j - i - 2) + "}";
        i = j - 1;
      }
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string latex_rep(const std::string& rep) {
  if (rep == "1") return "1";
  std::string out;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i] == '*') continue;
    if (rep[i] == 'x') {
      std::size_t j = i + 1;
      while (j < rep.size() && std::isdigit(static_cast<unsigned char>(rep[j]))) ++j;
      out += "x_{" + rep.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += rep[i];
    }
  }
  return out;
}

}  // namespace

CharTable CharTable::build(FieldPtr F, const TableOptions& opts) {
  CharTable t;
  t.F_ = std::move(F);
  t.G_ = std::make_shared<UGroup>(t.F_);
  t.ev_ = std::make_shared<CharEvaluator>(*t.G_);
  t.rows_ = enumerate_chars(*t.F_);
  t.cols_ = enumerate_class_reps(*t.G_);
  const auto id = std::find_if(t.cols_.begin(), t.cols_.end(), [](const ClassRep& r) { return r.rep.is_identity(); });
  if (id == t.cols_.end()) throw TableError("no representative of the identity class");
  t.identity_col_ = static_cast<std::size_t>(id - t.cols_.begin());

  const std::uint64_t cells = static_cast<std::uint64_t>(t.rows_.size()) * t.cols_.size();
  if (cells <= opts.dense_cell_limit) {
    const std::size_t dim = CycInt::dim(t.F_->p());
    t.cells_.assign(cells * dim, 0);
    for (std::size_t i = 0; i < t.rows_.size(); ++i) {
      for (std::size_t j = 0; j < t.cols_.size(); ++j) {
        SumNote note;
        t.store(i, j, t.eval(i, j, &note));
        if (!note.kind.empty()) t.notes_.emplace(i * t.cols_.size() + j, std::move(note));
      }
    }
    t.dense_ = true;
  }
  return t;
}

CharTable CharTable::from_values(FieldPtr F, std::vector<CharLabel> rows, std::vector<ClassRep> cols,
                                 const std::vector<std::vector<CycInt>>& values,
                                 std::unordered_map<std::uint64_t, SumNote> notes) {
  CharTable t;
  t.F_ = std::move(F);
  t.G_ = std::make_shared<UGroup>(t.F_);
  t.ev_ = std::make_shared<CharEvaluator>(*t.G_);
  t.rows_ = std::move(rows);
  t.cols_ = std::move(cols);
  if (values.size() != t.rows_.size()) throw TableError("value matrix has the wrong number of rows");
  const std::size_t dim = CycInt::dim(t.F_->p());
  t.cells_.assign(t.rows_.size() * t.cols_.size() * dim, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != t.cols_.size()) throw TableError("value matrix has the wrong number of columns");
    for (std::size_t j = 0; j < values[i].size(); ++j) t.store(i, j, values[i][j]);
  }
  const auto id = std::find_if(t.cols_.begin(), t.cols_.end(), [](const ClassRep& r) { return r.rep.is_identity(); });
  t.identity_col_ = id == t.cols_.end() ? 0 : static_cast<std::size_t>(id - t.cols_.begin());
  t.notes_ = std::move(notes);
  t.dense_ = true;
  return t;
}

void CharTable::store(std::size_t i, std::size_t j, const CycInt& v) {
  if (v.p() != F_->p()) throw TableError("cell value over the wrong cyclotomic field");
  const std::size_t dim = CycInt::dim(F_->p());
  std::int64_t* dst = &cells_[(i * cols_.size() + j) * dim];
  for (std::size_t k = 0; k < dim; ++k) {
    const i128 c = v.coeffs()[k];
    if (c > INT64_MAX || c < INT64_MIN) throw TableError("cell value does not fit in 64 bits");
    dst[k] = static_cast<std::int64_t>(c);
  }
}

CycInt CharTable::eval(std::size_t i, std::size_t j, SumNote* note) const {
  try {
    return ev_->value(rows_[i], cols_[j].rep, note);
  } catch (const ShapeError& e) {
    throw TableError(std::string(e.what()) + " (row " + std::to_string(i) + ", column " + std::to_string(j) + ")");
  }
}

CycInt CharTable::value(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= cols_.size()) throw TableError("cell index out of range");
  if (!dense_) return eval(i, j, nullptr);
  const std::size_t dim = CycInt::dim(F_->p());
  const std::int64_t* src = &cells_[(i * cols_.size() + j) * dim];
  std::vector<i128> c(src, src + dim);
  return CycInt(F_->p(), std::move(c));
}

std::optional<SumNote> CharTable::note(std::size_t i, std::size_t j) const {
  if (dense_) {
    auto it = notes_.find(i * cols_.size() + j);
    if (it == notes_.end()) return std::nullopt;
    return it->second;
  }
  SumNote n;
  eval(i, j, &n);
  if (n.kind.empty()) return std::nullopt;
  return n;
}

std::vector<CycInt> CharTable::row(std::size_t i) const {
  std::vector<CycInt> out;
  out.reserve(cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) out.push_back(value(i, j));
  return out;
}

std::vector<CycInt> CharTable::column(std::size_t j) const {
  std::vector<CycInt> out;
  out.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(value(i, j));
  return out;
}

std::vector<FamilyBlock> CharTable::row_families() const {
  std::vector<std::string> names;
  for (const auto& r : rows_) names.push_back(r.family);
  return blocks(names);
}

std::vector<FamilyBlock> CharTable::column_families() const {
  std::vector<std::string> names;
  for (const auto& c : cols_) names.push_back(c.family);
  return blocks(names);
}

bool CharTable::operator==(const CharTable& o) const {
  if (F_->p() != o.F_->p() || F_->a() != o.F_->a() || F_->defining_poly() != o.F_->defining_poly()) return false;
  if (!(rows_ == o.rows_) || cols_.size() != o.cols_.size()) return false;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    const ClassRep& a = cols_[j];
    const ClassRep& b = o.cols_[j];
    if (a.family != b.family || a.params != b.params || !(a.rep == b.rep) || a.class_size != b.class_size ||
        a.centralizer_order != b.centralizer_order) {
      return false;
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!(value(i, j) == o.value(i, j))) return false;
    }
  }
  return true;
}

CountReport count_checks(const CharTable& t) {
  CountReport r;
  const std::uint32_t q = t.field().q();
  r.rows = t.rows().size();
  r.cols = t.cols().size();
  r.square = r.rows == r.cols;
  r.group_order = pow_q(q, 12);
  for (const auto& c : t.cols()) r.sum_class_sizes += c.class_size;
  for (const auto& l : t.rows()) r.sum_degree_squares += mpz_class(l.degree) * mpz_class(l.degree);
  r.class_sizes_ok = r.sum_class_sizes == r.group_order;
  r.degrees_ok = r.sum_degree_squares == r.group_order;
  r.identity_column_ok = true;
  for (std::size_t i = 0; i < r.rows; ++i) {
    if (!(t.value(i, t.identity_column()) == CycInt::integer(t.field().p(), static_cast<i128>(t.rows()[i].degree)))) {
      r.identity_column_ok = false;
      break;
    }
  }
  return r;
}

OrthoReport verify_orthogonality(const CharTable& t, const OrthoMode& mode) {
  OrthoReport rep;
  const std::uint32_t p = t.field().p();
  const std::size_t n_rows = t.rows().size();
  const std::size_t n_cols = t.cols().size();
  const mpz_class order = pow_q(t.field().q(), 12);

  std::vector<std::size_t> rsel, csel;
  if (mode.full) {
    for (std::size_t i = 0; i < n_rows; ++i) rsel.push_back(i);
    for (std::size_t j = 0; j < n_cols; ++j) csel.push_back(j);
  } else {
    std::size_t k = 1;
    while (k * (k + 1) / 2 < mode.pairs) ++k;
    std::mt19937_64 rng(mode.seed);
    rsel = sample_indices(t.row_families(), n_rows, k, rng);
    csel = sample_indices(t.column_families(), n_cols, k, rng);
  }

  std::vector<i128> sizes;
  for (const auto& c : t.cols()) sizes.push_back(to_i128(c.class_size));

  auto fail = [&](const std::string& kind, std::size_t i, std::size_t j, const CycBig& lhs, const mpz_class& rhs) {
    rep.ok = false;
    rep.failure = OrthoFailure{kind, i, j, lhs.to_string(), rhs.get_str()};
  };

  std::vector<SparseVec> rv;
  rv.reserve(rsel.size());
  for (auto i : rsel) rv.push_back(sparse(t.row(i)));
  for (std::size_t x = 0; x < rsel.size() && rep.ok; ++x) {
    for (std::size_t y = x; y < rsel.size(); ++y) {
      const CycBig s = weighted_inner(rv[x], rv[y], &sizes, p);
      const mpz_class expect = x == y ? order : mpz_class(0);
      ++rep.row_pairs;
      if (!(s == CycBig::integer(p, expect))) {
        fail("row", rsel[x], rsel[y], s, expect);
        break;
      }
    }
  }
  if (!rep.ok) return rep;

  std::vector<SparseVec> cv;
  cv.reserve(csel.size());
  for (auto j : csel) cv.push_back(sparse(t.column(j)));
  for (std::size_t x = 0; x < csel.size() && rep.ok; ++x) {
    for (std::size_t y = x; y < csel.size(); ++y) {
      const CycBig s = weighted_inner(cv[x], cv[y], nullptr, p);
      const mpz_class expect = x == y ? t.cols()[csel[x]].centralizer_order : mpz_class(0);
      ++rep.column_pairs;
      if (!(s == CycBig::integer(p, expect))) {
        fail("column", csel[x], csel[y], s, expect);
        break;
      }
    }
  }
  return rep;
}

EquivarianceReport verify_equivariance(const CharTable& t, const GraphAuto& g) {
  EquivarianceReport rep;
  const FieldCtx& F = t.field();
  if (F.p() == 2) throw TableError("graph automorphisms do not act on the families for p = 2");

  std::map<std::string, std::size_t> row_index, col_index;
  for (std::size_t i = 0; i < t.rows().size(); ++i) row_index[t.rows()[i].to_string()] = i;
  auto col_key = [](const ClassRep& c) {
    std::string k = c.family;
    for (const auto& [n, v] : c.params) k += "," + n + "=" + std::to_string(v.v);
    return k;
  };
  for (std::size_t j = 0; j < t.cols().size(); ++j) col_index[col_key(t.cols()[j])] = j;

  std::vector<std::optional<std::size_t>> col_map(t.cols().size());
  for (std::size_t j = 0; j < t.cols().size(); ++j) {
    try {
      const ClassRep img = transport_class(t.group(), g, t.cols()[j]);
      auto it = col_index.find(col_key(img));
      if (it == col_index.end()) {
        rep.ok = false;
        rep.failure = "image of column " + col_key(t.cols()[j]) + " is not a listed representative";
        return rep;
      }
      col_map[j] = it->second;
    } catch (const ClassError&) {
      ++rep.excluded_cols;
    }
  }

  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    std::size_t i2;
    try {
      const CharLabel img = transport_char(F, g, t.rows()[i]);
      auto it = row_index.find(img.to_string());
      if (it == row_index.end()) {
        rep.ok = false;
        rep.failure = "image of " + t.rows()[i].to_string() + " is not a listed character";
        return rep;
      }
      i2 = it->second;
    } catch (const CharError&) {
      ++rep.excluded_rows;
      continue;
    }
    for (std::size_t j = 0; j < t.cols().size(); ++j) {
      if (!col_map[j]) continue;
      const CycInt a = t.value(i, j);
      const CycInt b = t.value(i2, *col_map[j]);
      ++rep.cells;
      if (!(a == b)) {
        rep.ok = false;
        rep.failure = t.rows()[i].to_string() + " at " + t.group().format(t.cols()[j].rep) + " is " + a.to_string() +
                      " but the image cell is " + b.to_string();
        return rep;
      }
    }
  }
  return rep;
}

ExportFormat parse_format(const std::string& s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  if (s == "latex" || s == "tex") return ExportFormat::Latex;
  throw TableError("unknown export format '" + s + "' (json, csv, latex)");
}

ValueMode parse_value_mode(const std::string& s) {
  if (s == "exact") return ValueMode::Exact;
  if (s == "float") return ValueMode::Float;
  throw TableError("unknown value mode '" + s + "' (exact, float)");
}

std::string format_float(const CycInt& v) {
  const auto z = v.to_complex();
  const std::string re = fnum(z.real());
  const std::string im = fnum(z.imag());
  if (im[0] == '-') return re + im + "i";
  return re + "+" + im + "i";
}

std::string note_symbol(const SumNote& n) {
  std::string s = n.kind == "gauss" ? "G" : n.kind == "kloosterman" ? "K" : "Q";
  s += "(";
  for (std::size_t k = 0; k < n.args.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(n.args[k].v);
  }
  return s + ")";
}

namespace {

json note_json(std::size_t i, std::size_t j, const SumNote& n) {
  json args = json::array();
  for (auto a : n.args) args.push_back(a.v);
  return {{"row", i}, {"col", j}, {"sum", n.kind}, {"args", args}, {"symbol", note_symbol(n)}};
}

void export_json(const CharTable& t, std::ostream& out, ValueMode mode) {
  const FieldCtx& F = t.field();
  json head = {{"format", "ud4-character-table"},
               {"version", 1},
               {"p", F.p()},
               {"a", F.a()},
               {"q", F.q()},
               {"poly", F.defining_poly()},
               {"value_mode", mode == ValueMode::Exact ? "exact" : "float"},
               {"basis", "coefficients of z^0..z^(p-2), z = exp(2 pi i / p)"},
               {"sums",
                {{"G(c)", "sum_{t in F_q} phi(c t^2)"},
                 {"K(A,B)", "sum_{s in F_q^x} phi(A s + B / s)"},
                 {"Q(alpha,beta)", "sum_{s in F_q} phi(alpha s^2 + beta s)"}}}};
  json rf = json::array(), cf = json::array();
  for (const auto& b : t.row_families()) rf.push_back({{"name", b.name}, {"start", b.start}, {"count", b.count}});
  for (const auto& b : t.column_families()) cf.push_back({{"name", b.name}, {"start", b.start}, {"count", b.count}});
  head["row_families"] = rf;
  head["column_families"] = cf;

  std::string h = head.dump();
  h.pop_back();  // reopen the object
  out << h;

  out << ",\"rows\":[";
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    const auto& l = t.rows()[i];
    if (i) out << ",";
    out << json{{"label", l.to_string()}, {"family", l.family}, {"degree", l.degree}}.dump();
  }
  out << "],\"columns\":[";
  for (std::size_t j = 0; j < t.cols().size(); ++j) {
    const auto& c = t.cols()[j];
    json params = json::array();
    for (const auto& [n, v] : c.params) params.push_back({n, v.v});
    if (j) out << ",";
    out << json{{"family", c.family},
                {"params", params},
                {"rep", t.group().format(c.rep)},
                {"class_size", c.class_size.get_str()},
                {"centralizer", c.centralizer_order.get_str()}}
               .dump();
  }
  out << "],\"values\":[";
  json notes = json::array();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < t.cols().size(); ++j) {
      if (j) out << ",";
      out << cell_json(t.value(i, j), mode).dump();
      if (auto n = t.note(i, j)) notes.push_back(note_json(i, j, *n));
    }
    out << "]";
  }
  out << "],\"annotations\":" << notes.dump() << "}\n";
}

void export_csv(const CharTable& t, std::ostream& out, ValueMode mode) {
  const FieldCtx& F = t.field();
  out << "# " << F.describe() << ", values "
      << (mode == ValueMode::Exact ? "as ';'-separated coefficients of z^0..z^(p-2)" : "as complex floats") << "\n";
  out << "character,degree";
  for (const auto& c : t.cols()) out << "," << csv_quote(t.group().format(c.rep));
  out << "\n";
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    out << csv_quote(t.rows()[i].to_string()) << "," << t.rows()[i].degree;
    for (std::size_t j = 0; j < t.cols().size(); ++j) {
      const CycInt v = t.value(i, j);
      out << "," << (mode == ValueMode::Exact ? coeff_list(v, ';') : format_float(v));
      if (auto n = t.note(i, j)) {
        std::string args;
        for (std::size_t k = 0; k < n->args.size(); ++k) args += (k ? ";" : "") + std::to_string(n->args[k].v);
        notes.push_back(std::to_string(i) + "," + std::to_string(j) + "," + n->kind + "," + args + "," +
                        note_symbol(*n));
      }
    }
    out << "\n";
  }
  if (!notes.empty()) {
    out << "\nrow,column,sum,args,symbol\n";
    for (const auto& n : notes) out << n << "\n";
  }
}

void export_latex(const CharTable& t, std::ostream& out, ValueMode mode) {
  const FieldCtx& F = t.field();
  const std::size_t n = t.cols().size();
  out << "% Character table of U(" << F.q() << "), " << F.describe() << "\n";
  out << "% G(c), K(A,B), Q(a,b): quadratic Gauss, Kloosterman and quadratic-linear sums\n";
  out << "\\begin{longtable}{ll*{" << n << "}{c}}\n";
  out << " & ";
  for (const auto& b : t.column_families()) out << " & \\multicolumn{" << b.count << "}{c}{$" << latex_class(b.name) << "$}";
  out << " \\\\\n$\\chi$ & $\\chi(1)$";
  for (const auto& c : t.cols()) out << " & $" << latex_rep(t.group().format(c.rep)) << "$";
  out << " \\\\\n\\hline\n\\endhead\n";
  for (const auto& b : t.row_families()) {
    out << "\\hline\n\\multicolumn{" << n + 2 << "}{l}{$" << latex_family(b.name) << "$} \\\\\n";
    for (std::size_t i = b.start; i < b.start + b.count; ++i) {
      const auto& l = t.rows()[i];
      std::string params;
      for (const auto& [nm, v] : l.params) params += (params.empty() ? "" : ",") + nm + "=" + std::to_string(v.v);
      out << "$" << params << "$ & $" << l.degree << "$";
      for (std::size_t j = 0; j < n; ++j) {
        out << " & $" << latex_value(t.value(i, j), mode);
        if (auto note = t.note(i, j)) out << "\\;[" << note_symbol(*note) << "]";
        out << "$";
      }
      out << " \\\\\n";
    }
  }
  out << "\\end{longtable}\n";
}

}  // namespace

void export_table(const CharTable& t, std::ostream& out, ExportFormat format, ValueMode mode) {
  switch (format) {
    case ExportFormat::Json:
      export_json(t, out, mode);
      break;
    case ExportFormat::Csv:
      export_csv(t, out, mode);
      break;
    case ExportFormat::Latex:
      export_latex(t, out, mode);
      break;
  }
}

CharTable import_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw TableError(std::string("malformed table JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "ud4-character-table") throw TableError("not a character table document");
    if (doc.at("value_mode") != "exact") throw TableError("only exact-mode tables can be read back");
    const auto p = doc.at("p").get<std::uint32_t>();
    const auto a = doc.at("a").get<std::uint32_t>();
    const FieldPtr F = FieldCtx::make(p, a, doc.at("poly").get<std::vector<std::uint32_t>>());
    const UGroup G(F);

    std::vector<CharLabel> rows;
    for (const auto& r : doc.at("rows")) rows.push_back(parse_label(*F, r.at("label").get<std::string>()));
    std::vector<ClassRep> cols;
    for (const auto& c : doc.at("columns")) {
      ClassRep rep;
      rep.family = c.at("family").get<std::string>();
      for (const auto& pv : c.at("params")) rep.params.emplace_back(pv.at(0).get<std::string>(), Fq{pv.at(1).get<std::uint32_t>()});
      rep.rep = G.parse(c.at("rep").get<std::string>());
      rep.class_size = mpz_class(c.at("class_size").get<std::string>());
      rep.centralizer_order = mpz_class(c.at("centralizer").get<std::string>());
      cols.push_back(std::move(rep));
    }
    std::vector<std::vector<CycInt>> values;
    for (const auto& r : doc.at("values")) {
      std::vector<CycInt> row;
      for (const auto& cell : r) {
        std::vector<i128> c;
        for (const auto& x : cell) c.push_back(x.get<std::int64_t>());
        row.emplace_back(p, std::move(c));
      }
      values.push_back(std::move(row));
    }
    std::unordered_map<std::uint64_t, SumNote> notes;
    for (const auto& n : doc.at("annotations")) {
      SumNote s;
      s.kind = n.at("sum").get<std::string>();
      for (const auto& x : n.at("args")) s.args.push_back(Fq{x.get<std::uint32_t>()});
      notes.emplace(n.at("row").get<std::uint64_t>() * cols.size() + n.at("col").get<std::uint64_t>(), std::move(s));
    }
    return CharTable::from_values(F, std::move(rows), std::move(cols), values, std::move(notes));
  } catch (const json::exception& e) {
    throw TableError(std::string("malformed table JSON: ") + e.what());
  }
}

}  // namespace ud4
