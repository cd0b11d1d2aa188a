#pragma once

#include "conefj/cone.hpp"
#include "conefj/linalg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace conefj::testing {

/// Small seeded source of rationals, vectors and cones for property tests.
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return rng_() % 2 == 0; }

    /// Rational in [lo, hi] with denominator 1..4.
    Rational rational(long lo, long hi)
    {
        long den = integer(1, 4);
        Rational q(integer(lo * den, hi * den), den);
        q.canonicalize();
        return q;
    }

    QVector vector(std::size_t dim, long lo = -5, long hi = 5)
    {
        QVector v;
        v.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v.push_back(rational(lo, hi));
        return v;
    }

    QVector nonzero_vector(std::size_t dim, long lo = -5, long hi = 5)
    {
        for (;;) {
            QVector v = vector(dim, lo, hi);
            if (!is_zero(v))
                return v;
        }
    }

    /// cone(up to max_gens random generators) in Q^dim; may be {0}.
    PolyhedralCone cone(std::size_t dim, std::size_t max_gens = 6)
    {
        std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_gens)));
        std::vector<QVector> gens;
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(vector(dim));
        return PolyhedralCone(dim, std::move(gens));
    }

    /// Nonnegative combination of the cone's generators.
    QVector point_in(const PolyhedralCone& c)
    {
        QVector x = zeros(c.dim());
        for (const QVector& g : c.generators())
            x = add(x, scale(Rational(integer(0, 3)), g));
        return x;
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

inline QVector qv(std::initializer_list<const char*> entries)
{
    QVector v;
    for (const char* e : entries)
        v.emplace_back(e);
    for (Rational& q : v)
        q.canonicalize();
    return v;
}

inline PolyhedralCone halfplane()
{
    return PolyhedralCone(2, {qv({"1", "0"}), qv({"-1", "0"}), qv({"0", "1"})});
}

}  // namespace conefj::testing
