#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <scrollbetti/errors.hpp>
#include <scrollbetti/integers.hpp>

namespace scrollbetti {

// Serialize an exact integer as a JSON number when it fits in 64 bits and as
// a decimal string otherwise, so tables stay loss-free at any size.
inline nlohmann::json json_int(const Int& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

inline Int int_from_json(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Int(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("not a decimal integer string: \"" + v.get<std::string>() + "\"");
    }
  }
  throw Error("expected a JSON integer or decimal string, got " + v.dump());
}

// A finitely supported table of exact integers beta_{i,j} with column index
// 0 <= i < columns and arbitrary row index j. Tables with equal column count
// form an abelian group under entrywise addition; the row shift T[l], which
// moves every row j to j+l, and scaling by a nonnegative integer are the
// other two operations needed to assemble resolution data from closed-form
// pieces.
//
// Canonical form: zero entries are never stored, so two tables are equal as
// functions exactly when their stored maps are equal. Entries are signed;
// differences of tables are meaningful intermediate values even though every
// Betti table of an actual module is entrywise nonnegative.
class BettiTable {
 public:
  // Key order (j, i) keeps iteration row-major, which rendering relies on.
  using Key = std::pair<long, int>;
  using Map = std::map<Key, Int>;

  explicit BettiTable(int columns) : columns_(columns) {
    if (columns < 1)
      throw ColumnMismatch("a table needs at least one column, got " +
                           std::to_string(columns));
  }

  int columns() const { return columns_; }

  Int entry(int i, long j) const {
    check_column(i);
    auto it = entries_.find({j, i});
    return it == entries_.end() ? Int(0) : it->second;
  }

  void set(int i, long j, Int v) {
    check_column(i);
    if (v == 0)
      entries_.erase({j, i});
    else
      entries_[{j, i}] = std::move(v);
  }

  void add(int i, long j, const Int& v) {
    check_column(i);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({j, i}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  bool nonnegative() const {
    for (const auto& [key, v] : entries_)
      if (v < 0) return false;
    return true;
  }

  // Lowest / highest row with a nonzero entry; nullopt for the zero table.
  std::optional<long> min_row() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first.first;
  }
  std::optional<long> max_row() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first.first;
  }

  // Row j as a dense vector of length columns().
  std::vector<Int> row(long j) const {
    std::vector<Int> out(static_cast<std::size_t>(columns_), Int(0));
    for (auto it = entries_.lower_bound({j, 0});
         it != entries_.end() && it->first.first == j; ++it)
      out[static_cast<std::size_t>(it->first.second)] = it->second;
    return out;
  }

  // Distinct rows with a nonzero entry, ascending.
  std::vector<long> rows_present() const {
    std::vector<long> out;
    for (const auto& [key, v] : entries_)
      if (out.empty() || out.back() != key.first) out.push_back(key.first);
    return out;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

  BettiTable& operator+=(const BettiTable& o) {
    require_same_columns(o);
    for (const auto& [key, v] : o.entries_) add(key.second, key.first, v);
    return *this;
  }
  BettiTable& operator-=(const BettiTable& o) {
    require_same_columns(o);
    for (const auto& [key, v] : o.entries_) add(key.second, key.first, Int(-v));
    return *this;
  }
  friend BettiTable operator+(BettiTable a, const BettiTable& b) { return a += b; }
  friend BettiTable operator-(BettiTable a, const BettiTable& b) { return a -= b; }
  friend BettiTable operator-(const BettiTable& a) {
    BettiTable out(a.columns_);
    for (const auto& [key, v] : a.entries_) out.entries_.emplace(key, -v);
    return out;
  }

  // T[l]: every row j moved to j + l. (T[l])[m] == T[l+m] and shifting
  // commutes with addition.
  BettiTable shifted(long l) const {
    BettiTable out(columns_);
    for (const auto& [key, v] : entries_)
      out.entries_.emplace(Key{key.first + l, key.second}, v);
    return out;
  }

  // n-fold repetition n*T for n >= 0; n == 0 gives the zero table.
  BettiTable scaled(unsigned long n) const {
    BettiTable out(columns_);
    if (n == 0) return out;
    for (const auto& [key, v] : entries_) out.entries_.emplace(key, Int(v * n));
    return out;
  }

  // The same table viewed with a different column count. Widening embeds the
  // table into a larger group; narrowing is allowed only when no nonzero
  // entry would be cut off.
  BettiTable with_columns(int columns) const {
    BettiTable out(columns);
    for (const auto& [key, v] : entries_) {
      if (key.second >= columns)
        throw ColumnMismatch("cannot narrow to " + std::to_string(columns) +
                             " columns: nonzero entry in column " +
                             std::to_string(key.second));
      out.entries_.emplace(key, v);
    }
    return out;
  }

  // Fixed-width grid, rows printed from the highest nonzero row down to the
  // lowest (interior all-zero rows included, rows outside the support span
  // suppressed). The zero table prints only the header.
  std::string to_ascii() const;

  // {"columns": c, "rows": [{"j": j, "entries": [..c values..]}, ...]} with
  // rows sorted by j descending and zero rows omitted.
  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    auto present = rows_present();
    for (auto it = present.rbegin(); it != present.rend(); ++it) {
      nlohmann::json entries = nlohmann::json::array();
      for (const Int& v : row(*it)) entries.push_back(json_int(v));
      rows.push_back({{"j", *it}, {"entries", std::move(entries)}});
    }
    return {{"columns", columns_}, {"rows", std::move(rows)}};
  }

  static BettiTable from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("columns") || !j.contains("rows"))
      throw Error("table json must be an object with \"columns\" and \"rows\"");
    if (!j["columns"].is_number_integer())
      throw Error("table \"columns\" must be an integer");
    BettiTable out(j["columns"].get<int>());
    if (!j["rows"].is_array()) throw Error("table \"rows\" must be an array");
    std::vector<bool> seen;
    std::vector<long> seen_rows;
    for (const auto& row : j["rows"]) {
      if (!row.is_object() || !row.contains("j") || !row.contains("entries"))
        throw Error("each table row needs \"j\" and \"entries\"");
      long jj = row["j"].get<long>();
      for (long prev : seen_rows)
        if (prev == jj) throw Error("duplicate row j=" + std::to_string(jj));
      seen_rows.push_back(jj);
      const auto& entries = row["entries"];
      if (!entries.is_array() ||
          entries.size() != static_cast<std::size_t>(out.columns_))
        throw Error("row j=" + std::to_string(jj) + " must have exactly " +
                    std::to_string(out.columns_) + " entries");
      for (int i = 0; i < out.columns_; ++i)
        out.set(i, jj, int_from_json(entries[static_cast<std::size_t>(i)]));
    }
    return out;
  }

  // Header "j,b0,...,b{c-1}", then one line per nonzero row, j descending.
  std::string to_csv() const {
    std::ostringstream out;
    out << "j";
    for (int i = 0; i < columns_; ++i) out << ",b" << i;
    out << "\n";
    auto present = rows_present();
    for (auto it = present.rbegin(); it != present.rend(); ++it) {
      out << *it;
      for (const Int& v : row(*it)) out << "," << v.get_str();
      out << "\n";
    }
    return out.str();
  }

 private:
  void check_column(int i) const {
    if (i < 0 || i >= columns_)
      throw ColumnMismatch("column index " + std::to_string(i) +
                           " outside [0, " + std::to_string(columns_ - 1) + "]");
  }
  void require_same_columns(const BettiTable& o) const {
    if (columns_ != o.columns_)
      throw ColumnMismatch("tables have " + std::to_string(columns_) + " and " +
                           std::to_string(o.columns_) +
                           " columns; group operations need equal counts");
  }

  int columns_;
  Map entries_;
};

namespace detail {
// Number of display columns of a UTF-8 string: continuation bytes do not
// count. Good enough for the labels printed here (Greek letters are width 1).
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}
}  // namespace detail

inline std::string BettiTable::to_ascii() const {
  std::vector<long> rows;
  if (auto lo = min_row())
    for (long j = *max_row(); j >= *lo; --j) rows.push_back(j);

  std::vector<std::string> labels;
  labels.reserve(rows.size());
  for (long j : rows) labels.push_back("β_{i," + std::to_string(j) + "}");

  std::size_t label_w = 1;  // header cell "i"
  for (const auto& s : labels)
    label_w = std::max(label_w, detail::display_width(s));

  std::size_t cell_w = 1;
  for (int i = 0; i < columns_; ++i)
    cell_w = std::max(cell_w, std::to_string(i).size());
  for (long j : rows)
    for (const Int& v : row(j)) cell_w = std::max(cell_w, v.get_str().size());

  auto pad_left = [](const std::string& s, std::size_t w) {
    std::size_t d = detail::display_width(s);
    return std::string(w > d ? w - d : 0, ' ') + s;
  };
  auto pad_right = [](const std::string& s, std::size_t w) {
    std::size_t d = detail::display_width(s);
    return s + std::string(w > d ? w - d : 0, ' ');
  };

  std::ostringstream out;
  out << pad_right("i", label_w);
  for (int i = 0; i < columns_; ++i)
    out << "  " << pad_left(std::to_string(i), cell_w);
  out << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out << pad_right(labels[k], label_w);
    for (const Int& v : row(rows[k])) out << "  " << pad_left(v.get_str(), cell_w);
    out << "\n";
  }
  return out.str();
}

}  // namespace scrollbetti
