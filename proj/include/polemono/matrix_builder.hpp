#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/monomial.hpp"
#include "polemono/polynomial.hpp"
#include "polemono/sparse_matrix.hpp"

namespace polemono {

// Optional matrix dump hook (--dump-matrices). Files use the triplet text
// format of SparseMatrix::dump.
struct DumpSink {
  std::string dir;

  void write(const std::string& name, const SparseMatrix& m) const {
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / (name + ".mtx"));
    if (!out) throw IoError("cannot write matrix dump for " + name);
    m.dump(out);
  }
};

inline void maybe_dump(const DumpSink* sink, const std::string& name, const SparseMatrix& m) {
  if (sink && !sink->dir.empty()) sink->write(name, m);
}

// Assembles block matrices whose blocks are multiplication operators
// S_j -> S_{j+deg h} in the fixed monomial bases, or partial derivatives
// S_j -> S_{j-1}. Blocks of negative degree are legal and simply empty,
// which is how out-of-range pieces of the graded maps disappear.
class BlockMatrixBuilder {
 public:
  int add_row_block(int degree) {
    row_deg_.push_back(degree);
    row_off_.push_back(rows_);
    rows_ += graded_dim(degree);
    return static_cast<int>(row_deg_.size()) - 1;
  }

  int add_col_block(int degree) {
    col_deg_.push_back(degree);
    col_off_.push_back(cols_);
    cols_ += graded_dim(degree);
    return static_cast<int>(col_deg_.size()) - 1;
  }

  // Block (rb, cb) += sign * (multiplication by h).
  void mult(int rb, int cb, const HomogPoly& h, int sign) {
    if (h.is_zero()) return;
    const int jc = col_deg_[static_cast<size_t>(cb)];
    if (jc < 0) return;
    const int jr = row_deg_[static_cast<size_t>(rb)];
    if (jr != jc + h.degree())
      throw InternalError("multiplication block degree mismatch");
    const long roff = row_off_[static_cast<size_t>(rb)];
    const long coff = col_off_[static_cast<size_t>(cb)];
    long col = 0;
    for (int ex = jc; ex >= 0; --ex)
      for (int ey = jc - ex; ey >= 0; --ey, ++col) {
        const Monomial m{ex, ey, jc - ex - ey};
        for (const auto& [n, c] : h.terms())
          entries_.push_back({roff + graded_index(m * n), coff + col,
                              sign > 0 ? c : Rational(-c)});
      }
  }

  // Block (rb, cb) += sign * (d/d var).
  void derivative(int rb, int cb, int var, int sign) {
    const int jc = col_deg_[static_cast<size_t>(cb)];
    if (jc < 1) return;
    const int jr = row_deg_[static_cast<size_t>(rb)];
    if (jr != jc - 1) throw InternalError("derivative block degree mismatch");
    const long roff = row_off_[static_cast<size_t>(rb)];
    const long coff = col_off_[static_cast<size_t>(cb)];
    long col = 0;
    for (int ex = jc; ex >= 0; --ex)
      for (int ey = jc - ex; ey >= 0; --ey, ++col) {
        const Monomial m{ex, ey, jc - ex - ey};
        const int e = m.exponent(var);
        if (e == 0) continue;
        Monomial n = m;
        (var == 0 ? n.ex : var == 1 ? n.ey : n.ez) = e - 1;
        entries_.push_back({roff + graded_index(n), coff + col, Rational(sign * e)});
      }
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long row_offset(int rb) const { return row_off_[static_cast<size_t>(rb)]; }
  long col_offset(int cb) const { return col_off_[static_cast<size_t>(cb)]; }

  SparseMatrix build() {
    SparseMatrix m(rows_, cols_);
    for (auto& e : entries_) m.add(e.row, e.col, std::move(e.value));
    m.finalize();
    entries_.clear();
    return m;
  }

 private:
  struct Raw {
    long row;
    long col;
    Rational value;
  };
  std::vector<int> row_deg_, col_deg_;
  std::vector<long> row_off_, col_off_;
  long rows_ = 0, cols_ = 0;
  std::vector<Raw> entries_;
};

}  // namespace polemono
