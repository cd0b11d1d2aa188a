#pragma once

#include "conefj/linalg.hpp"

#include <span>
#include <vector>

namespace conefj {

/**
 * Converts the H-representation {x in Q^dim : a . x >= 0 for every a in rows}
 * into generators. Lineality directions are emitted as +/- pairs first,
 * followed by the extreme rays of the pointed part. Every output vector is
 * primitive (coprime integer entries).
 */
std::vector<QVector> generators_from_inequalities(std::span<const QVector> rows, std::size_t dim);

}  // namespace conefj
