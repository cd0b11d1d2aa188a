#include "conefj/double_description.hpp"

#include "conefj/errors.hpp"

#include <algorithm>

namespace conefj {

namespace {

using ZeroSet = std::vector<bool>;

ZeroSet zero_set(const QVector& ray, const std::vector<QVector>& processed)
{
    ZeroSet z(processed.size());
    for (std::size_t k = 0; k < processed.size(); ++k) z[k] = dot(processed[k], ray) == 0;
    return z;
}

bool includes(const ZeroSet& super, const ZeroSet& sub)
{
    for (std::size_t k = 0; k < sub.size(); ++k)
        if (sub[k] && !super[k]) return false;
    return true;
}

void normalize_unique(std::vector<QVector>& rays)
{
    std::vector<QVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) {
        if (is_zero(r)) continue;
        QVector p = primitive(r);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    rays = std::move(out);
}

}  // namespace

std::vector<QVector> generators_from_inequalities(std::span<const QVector> rows, std::size_t dim)
{
    std::vector<QVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit(dim, i));
    std::vector<QVector> rays;
    std::vector<QVector> processed;

    for (const auto& a : rows) {
        if (a.size() != dim) throw DimensionMismatch("inequality row has wrong dimension");
        if (is_zero(a)) continue;

        auto pivot_it = std::find_if(lineality.begin(), lineality.end(),
                                     [&](const QVector& l) { return dot(a, l) != 0; });
        if (pivot_it != lineality.end()) {
            // The constraint cuts the lineality space: l becomes a ray, the
            // rest of the lineality space and the old rays are projected onto a^perp.
            QVector l = *pivot_it;
            lineality.erase(pivot_it);
            Rational al = dot(a, l);
            if (al < 0) {
                l = negate(l);
                al = -al;
            }
            for (auto& v : lineality) v = sub(v, scale(dot(a, v) / al, l));
            for (auto& r : rays) r = sub(r, scale(dot(a, r) / al, l));
            rays.push_back(l);
            normalize_unique(lineality);
            normalize_unique(rays);
        } else {
            std::vector<QVector> pos, zero, neg;
            for (auto& r : rays) {
                const int s = sgn(dot(a, r));
                (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
            }
            std::vector<ZeroSet> zsets;
            zsets.reserve(rays.size());
            for (const auto& r : rays) zsets.push_back(zero_set(r, processed));

            std::vector<QVector> next = pos;
            next.insert(next.end(), zero.begin(), zero.end());
            for (std::size_t pi = 0; pi < rays.size(); ++pi) {
                const Rational ap = dot(a, rays[pi]);
                if (ap <= 0) continue;
                for (std::size_t ni = 0; ni < rays.size(); ++ni) {
                    const Rational an = dot(a, rays[ni]);
                    if (an >= 0) continue;
                    // Combinatorial adjacency: no third ray is tight on every
                    // constraint where both p and n are tight.
                    ZeroSet common(processed.size());
                    for (std::size_t k = 0; k < processed.size(); ++k)
                        common[k] = zsets[pi][k] && zsets[ni][k];
                    bool adjacent = true;
                    for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                        if (o != pi && o != ni && includes(zsets[o], common)) adjacent = false;
                    if (!adjacent) continue;
                    next.push_back(sub(scale(ap, rays[ni]), scale(an, rays[pi])));
                }
            }
            rays = std::move(next);
            normalize_unique(rays);
        }
        processed.push_back(a);
    }

    std::vector<QVector> out;
    for (const auto& l : lineality) {
        out.push_back(l);
        out.push_back(negate(l));
    }
    out.insert(out.end(), rays.begin(), rays.end());
    return out;
}

}  // namespace conefj
