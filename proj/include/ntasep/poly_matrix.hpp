#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ntasep/laurent.hpp"
#include "ntasep/lattice.hpp"

namespace ntasep {

// Sparse matrix over the Laurent ring, rows and columns labeled by
// configurations. Absent entries are exactly zero.
class PolyMatrix {
 public:
  PolyMatrix(std::vector<Word> rows, std::vector<Word> cols, std::size_t vars)
      : rows_(std::move(rows)), cols_(std::move(cols)), vars_(vars),
        data_(rows_.size()) {}

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return cols_.size(); }
  std::size_t vars() const { return vars_; }
  const std::vector<Word>& row_words() const { return rows_; }
  const std::vector<Word>& col_words() const { return cols_; }
  const std::map<int, LaurentPoly>& row(std::size_t r) const { return data_[r]; }

  const LaurentPoly* entry(std::size_t r, std::size_t c) const {
    check_rc(r, c);
    auto it = data_[r].find(static_cast<int>(c));
    return it == data_[r].end() ? nullptr : &it->second;
  }

  LaurentPoly entry_or_zero(std::size_t r, std::size_t c) const {
    const LaurentPoly* p = entry(r, c);
    return p ? *p : LaurentPoly::zero(vars_);
  }

  void set_entry(std::size_t r, std::size_t c, LaurentPoly p) {
    check_rc(r, c);
    if (p.is_zero())
      data_[r].erase(static_cast<int>(c));
    else
      data_[r][static_cast<int>(c)] = std::move(p);
  }

  void add_entry(std::size_t r, std::size_t c, const LaurentPoly& p) {
    check_rc(r, c);
    auto it = data_[r].find(static_cast<int>(c));
    if (it == data_[r].end()) {
      if (!p.is_zero()) data_[r].emplace(static_cast<int>(c), p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) data_[r].erase(it);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  // Exact symbolic matrix-vector product.
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const {
    if (v.size() != cols_.size())
      throw std::invalid_argument("apply: dimension mismatch");
    std::vector<LaurentPoly> out(rows_.size(), LaurentPoly::zero(vars_));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, p] : data_[r])
        out[r] += p * v[static_cast<std::size_t>(c)];
    return out;
  }

  friend PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_cols() != b.n_rows())
      throw std::invalid_argument("matmul: dimension mismatch");
    if (a.vars() != b.vars())
      throw std::invalid_argument("matmul: variable-count mismatch");
    PolyMatrix out(a.rows_, b.cols_, a.vars_);
    for (std::size_t r = 0; r < a.n_rows(); ++r)
      for (const auto& [k, pa] : a.data_[r])
        for (const auto& [c, pb] : b.data_[static_cast<std::size_t>(k)])
          out.add_entry(r, static_cast<std::size_t>(c), pa * pb);
    return out;
  }

  std::vector<LaurentPoly> column_sums() const {
    std::vector<LaurentPoly> out(cols_.size(), LaurentPoly::zero(vars_));
    for (const auto& r : data_)
      for (const auto& [c, p] : r) out[static_cast<std::size_t>(c)] += p;
    return out;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vars_ == b.vars_ &&
           a.data_ == b.data_;
  }

 private:
  void check_rc(std::size_t r, std::size_t c) const {
    if (r >= rows_.size() || c >= cols_.size())
      throw std::out_of_range("matrix index out of range");
  }

  std::vector<Word> rows_, cols_;
  std::size_t vars_;
  std::vector<std::map<int, LaurentPoly>> data_;
};

}  // namespace ntasep
