#pragma once

#include "conefj/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace conefj {

using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix
{
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    QVector col(std::size_t c) const;

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// M v
QVector matvec(const QMatrix& m, std::span<const Rational> v);

/// v^T M, i.e. the row vector lambda . M
QVector vecmat(std::span<const Rational> v, const QMatrix& m);

QVector add(std::span<const Rational> a, std::span<const Rational> b);
QVector sub(std::span<const Rational> a, std::span<const Rational> b);
QVector scale(const Rational& s, std::span<const Rational> v);
QVector negate(std::span<const Rational> v);
QVector zeros(std::size_t n);
QVector unit(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Positive multiple of v with coprime integer entries (zero stays zero).
QVector primitive(std::span<const Rational> v);

/// Comma-separated list of rationals, e.g. "-1,1/2".
QVector parse_vector(std::string_view text);
std::vector<std::string> to_strings(std::span<const Rational> v);
std::string to_string(std::span<const Rational> v);

}  // namespace conefj
