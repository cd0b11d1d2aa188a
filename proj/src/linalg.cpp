#include "conefj/linalg.hpp"

#include "conefj/errors.hpp"

namespace conefj {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    require_same(entries_.size(), rows * cols, "matrix entries");
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols)
{
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same(rows[r].size(), cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const
{
    return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::col(std::size_t c) const
{
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    require_same(a.size(), b.size(), "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector matvec(const QMatrix& m, std::span<const Rational> v)
{
    require_same(m.cols(), v.size(), "matvec");
    QVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

QVector vecmat(std::span<const Rational> v, const QMatrix& m)
{
    require_same(m.rows(), v.size(), "vecmat");
    QVector out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Rational s = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) s += v[r] * m(r, c);
        out[c] = s;
    }
    return out;
}

QVector add(std::span<const Rational> a, std::span<const Rational> b)
{
    require_same(a.size(), b.size(), "add");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector sub(std::span<const Rational> a, std::span<const Rational> b)
{
    require_same(a.size(), b.size(), "sub");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVector scale(const Rational& s, std::span<const Rational> v)
{
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

QVector negate(std::span<const Rational> v)
{
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

QVector zeros(std::size_t n) { return QVector(n); }

QVector unit(std::size_t n, std::size_t i)
{
    QVector e(n);
    e.at(i) = 1;
    return e;
}

bool is_zero(std::span<const Rational> v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVector primitive(std::span<const Rational> v)
{
    mpz_class den_lcm = 1;
    for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    QVector out(v.size());
    if (num_gcd == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class n = v[i].get_num() * (den_lcm / v[i].get_den());
        out[i] = Rational(mpz_class(n / num_gcd));
    }
    return out;
}

QVector parse_vector(std::string_view text)
{
    QVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> to_strings(std::span<const Rational> v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string to_string(std::span<const Rational> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace conefj
