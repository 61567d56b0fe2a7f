#include "polytc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace polytc {

Gf2Vector Gf2Vector::unit(std::size_t size, std::size_t index) {
  Gf2Vector v(size);
  v.set(index);
  return v;
}

Gf2Vector Gf2Vector::from_string(const std::string& bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i);
    else if (bits[i] != '0') throw std::invalid_argument("bit string must be 0/1");
  }
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("Gf2Vector index");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) words_[i / 64] |= bit;
  else words_[i / 64] &= ~bit;
}

bool Gf2Vector::is_zero() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t Gf2Vector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (std::uint64_t w = words_[k]; w; w &= w - 1) out.push_back(k * 64 + std::countr_zero(w));
  }
  return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) throw std::invalid_argument("Gf2Vector size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("Gf2Vector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

std::string Gf2Vector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged GF(2) matrix");
    m.set_row(r, Gf2Vector::from_string(rows[r]));
  }
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix index");
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value) data_[r * stride_ + c / 64] |= bit;
  else data_[r * stride_ + c / 64] &= ~bit;
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
  Gf2Vector v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  auto src = v.words();
  std::copy(src.begin(), src.end(), row_words(r).begin());
}

void Gf2Matrix::append_row(const Gf2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  Gf2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto w = row_words(r);
    auto xw = x.words();
    for (std::size_t k = 0; k < stride_; ++k) acc ^= w[k] & xw[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) s += row(r).to_string() + "\n";
  return s;
}

RowEchelon row_reduce(const Gf2Matrix& m) {
  RowEchelon out{m, 0, {}};
  Gf2Matrix& a = out.reduced;
  const std::size_t stride = (a.cols() + 63) / 64;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      auto rp = a.row_words(p);
      auto rr = a.row_words(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    auto pivot = a.row_words(r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || !a.get(i, c)) continue;
      auto target = a.row_words(i);
      for (std::size_t k = c / 64; k < stride; ++k) target[k] ^= pivot[k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Gf2Matrix& m) { return row_reduce(m).rank; }

std::vector<Gf2Vector> nullspace(const Gf2Matrix& m) {
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Gf2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < ech.rank; ++i) {
      if (ech.reduced.get(i, f)) v.set(ech.pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Gf2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) aug.set(r, c);
    }
    if (b.get(r)) aug.set(r, m.cols());
  }
  auto ech = row_reduce(aug);
  if (ech.rank > 0 && ech.pivots[ech.rank - 1] == m.cols()) return std::nullopt;
  Gf2Vector x(m.cols());
  for (std::size_t i = 0; i < ech.rank; ++i) {
    if (ech.reduced.get(i, m.cols())) x.set(ech.pivots[i]);
  }
  return x;
}

}  // namespace polytc
