#pragma once

#include "conefj/linalg.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace conefj {

/**
 * Finitely generated convex cone cone(generators) = { sum b_i g_i : b_i >= 0 }
 * in Q^dim, vertex at the origin. Zero generators are dropped; an empty
 * generator list is the trivial cone {0}.
 *
 * The generators of the polar cone are computed on first use and shared by
 * copies. The cache is filled at most once and is safe to fill concurrently.
 */
class PolyhedralCone
{
  public:
    explicit PolyhedralCone(std::size_t dim, std::vector<QVector> generators = {});

    static PolyhedralCone zero(std::size_t dim);
    static PolyhedralCone orthant(std::size_t dim);
    static PolyhedralCone whole_space(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<QVector>& generators() const noexcept { return generators_; }
    bool is_trivial() const noexcept { return generators_.empty(); }

    /// Generators of {l : l . g >= 0 for all generators g}.
    const std::vector<QVector>& dual_generators() const;

  private:
    struct DualCache
    {
        std::once_flag once;
        std::vector<QVector> generators;
    };

    std::size_t dim_;
    std::vector<QVector> generators_;
    std::shared_ptr<DualCache> dual_;
};

/// Coefficients are nonnegative, sum to one, and recombine `points` to the target.
struct CaratheodoryDecomposition
{
    std::vector<QVector> points;
    std::vector<Rational> coefficients;
};

/// Strict separator of a pointed cone; `degenerate` marks the trivial cone
/// {0}, for which every direction qualifies and -e_1 is returned.
struct StrictSeparator
{
    QVector eta;
    bool degenerate = false;
};

PolyhedralCone dual_cone(const PolyhedralCone& c);

bool contains(const PolyhedralCone& c, std::span<const Rational> x);

/// x in int(c): d . x > 0 for every dual generator (whole space: always).
bool contains_interior(const PolyhedralCone& c, std::span<const Rational> x);

bool is_pointed(const PolyhedralCone& c);

/// lambda in c* with lambda . x < 0; throws NotOutside when x is in c.
QVector separate_from_cone(const PolyhedralCone& c, std::span<const Rational> x);

/// eta with eta . g < 0 for all generators g; throws NotPointed.
StrictSeparator strict_separator(const PolyhedralCone& k);

/// C x K in dimension c.dim() + k.dim().
PolyhedralCone product(const PolyhedralCone& c, const PolyhedralCone& k);

/// Throws NotInHull when target is outside conv(points).
CaratheodoryDecomposition caratheodory(std::span<const QVector> points, std::span<const Rational> target);

/// Mutual generator membership: cone(a) == cone(b) as sets.
bool same_cone(const PolyhedralCone& a, const PolyhedralCone& b);

}  // namespace conefj
