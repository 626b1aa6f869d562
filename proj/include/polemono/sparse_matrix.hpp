#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/rational.hpp"

namespace polemono {

// Sparse rational matrix in triplet form. Builders append entries in any
// order; finalize() sorts, merges duplicates and drops zeros, which also
// fixes a canonical entry order for dump().
class SparseMatrix {
 public:
  struct Entry {
    long row;
    long col;
    Rational value;
  };

  SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const { return static_cast<long>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  void add(long row, long col, Rational value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
      throw InternalError("matrix entry (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    if (value == 0) return;
    entries_.push_back(Entry{row, col, std::move(value)});
    finalized_ = false;
  }

  void finalize() {
    if (finalized_) return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
        merged.back().value += e.value;
        if (merged.back().value == 0) merged.pop_back();
      } else {
        merged.push_back(std::move(e));
      }
    }
    entries_ = std::move(merged);
    finalized_ = true;
  }

  bool finalized() const { return finalized_; }

  // Debug dump: header "rows cols nnz", then one "row col num/den" line per
  // entry in canonical order.
  void dump(std::ostream& os) const {
    SparseMatrix copy = *this;
    copy.finalize();
    os << copy.rows_ << " " << copy.cols_ << " " << copy.nnz() << "\n";
    for (const auto& e : copy.entries_)
      os << e.row << " " << e.col << " " << e.value.get_num().get_str() << "/"
         << e.value.get_den().get_str() << "\n";
  }

  static SparseMatrix load(std::istream& is) {
    long rows, cols, nnz;
    if (!(is >> rows >> cols >> nnz)) throw IoError("bad matrix header");
    SparseMatrix m(rows, cols);
    for (long i = 0; i < nnz; ++i) {
      long r, c;
      std::string frac;
      if (!(is >> r >> c >> frac)) throw IoError("bad matrix entry");
      auto slash = frac.find('/');
      Integer num(slash == std::string::npos ? frac : frac.substr(0, slash), 10);
      Integer den(slash == std::string::npos ? std::string("1") : frac.substr(slash + 1), 10);
      if (den == 0) throw IoError("zero denominator in matrix entry");
      m.add(r, c, make_rational(num, den));
    }
    m.finalize();
    return m;
  }

 private:
  long rows_;
  long cols_;
  std::vector<Entry> entries_;
  bool finalized_ = true;  // empty matrix is trivially canonical
};

}  // namespace polemono
