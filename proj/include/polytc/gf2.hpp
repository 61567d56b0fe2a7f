#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polytc {

/// A vector over GF(2), packed 64 entries per word.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  static Gf2Vector unit(std::size_t size, std::size_t index);
  /// From a string of '0'/'1' characters.
  static Gf2Vector from_string(const std::string& bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool is_zero() const;
  std::size_t count() const;
  /// Indices of the nonzero entries, ascending.
  std::vector<std::size_t> support() const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  /// Inner product.
  bool dot(const Gf2Vector& other) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const Gf2Vector&) const = default;
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A dense row-major matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  Gf2Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Gf2Vector& v);
  /// Appends a row (length must equal cols()).
  void append_row(const Gf2Vector& v);

  Gf2Vector multiply(const Gf2Vector& x) const;
  Gf2Matrix transposed() const;

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  bool operator==(const Gf2Matrix&) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RowEchelon {
  Gf2Matrix reduced;
  std::size_t rank = 0;
  /// Pivot column of each of the first `rank` rows, increasing.
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are chosen column by column from the
/// left, taking the first row at or below the current one with a 1.
RowEchelon row_reduce(const Gf2Matrix& m);
std::size_t rank(const Gf2Matrix& m);
/// Basis of {x : M x = 0}, one vector per free column in increasing order.
std::vector<Gf2Vector> nullspace(const Gf2Matrix& m);
/// Some x with M x = b (free variables set to zero), or nullopt.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

}  // namespace polytc
