#include "conefj/lp.hpp"

#include "conefj/errors.hpp"

#include <limits>
#include <string>

namespace conefj {

const char* to_string(LpStatus status)
{
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// x_j = offset_j + sum(sign * y_col) over the listed standard columns, y >= 0.
struct VarMap
{
    Rational offset;
    std::vector<std::pair<std::size_t, int>> cols;
};

struct StandardForm
{
    std::size_t structural = 0;
    std::vector<VarMap> vars;
    std::vector<QVector> rows;  // over structural columns
    QVector rhs;
    std::vector<bool> is_eq;
    QVector cost;
};

void validate(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars();
    auto check_block = [n](const QMatrix& m, const QVector& rhs, const char* name) {
        if (m.rows() > 0 && m.cols() != n)
            throw MalformedProgram(std::string(name) + " matrix has " + std::to_string(m.cols()) +
                                   " columns, expected " + std::to_string(n));
        if (rhs.size() != m.rows())
            throw MalformedProgram(std::string(name) + " right-hand side has " +
                                   std::to_string(rhs.size()) + " entries for " +
                                   std::to_string(m.rows()) + " rows");
    };
    check_block(lp.eq, lp.eq_rhs, "equality");
    check_block(lp.le, lp.le_rhs, "inequality");
    if (!lp.lower.empty() && lp.lower.size() != n)
        throw MalformedProgram("lower bound vector has wrong length");
    if (!lp.upper.empty() && lp.upper.size() != n)
        throw MalformedProgram("upper bound vector has wrong length");
}

StandardForm standardize(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars();
    StandardForm sf;
    sf.vars.resize(n);
    std::vector<std::pair<std::size_t, Rational>> range_rows;  // (var, u - l)

    for (std::size_t j = 0; j < n; ++j) {
        const auto lo = lp.lower.empty() ? std::nullopt : lp.lower[j];
        const auto hi = lp.upper.empty() ? std::nullopt : lp.upper[j];
        auto& vm = sf.vars[j];
        if (lo) {
            vm.offset = *lo;
            vm.cols.emplace_back(sf.structural++, +1);
            if (hi) range_rows.emplace_back(j, *hi - *lo);
        } else if (hi) {
            vm.offset = *hi;
            vm.cols.emplace_back(sf.structural++, -1);
        } else {
            vm.offset = 0;
            vm.cols.emplace_back(sf.structural++, +1);
            vm.cols.emplace_back(sf.structural++, -1);
        }
    }

    auto push_row = [&](std::span<const Rational> coeffs, Rational rhs, bool eq) {
        QVector row(sf.structural);
        for (std::size_t j = 0; j < n; ++j) {
            if (coeffs[j] == 0) continue;
            rhs -= coeffs[j] * sf.vars[j].offset;
            for (auto [c, s] : sf.vars[j].cols) row[c] += s * coeffs[j];
        }
        sf.rows.push_back(std::move(row));
        sf.rhs.push_back(std::move(rhs));
        sf.is_eq.push_back(eq);
    };

    for (std::size_t r = 0; r < lp.eq.rows(); ++r) push_row(lp.eq.row(r), lp.eq_rhs[r], true);
    for (std::size_t r = 0; r < lp.le.rows(); ++r) push_row(lp.le.row(r), lp.le_rhs[r], false);
    for (auto& [j, width] : range_rows) push_row(unit(n, j), width + sf.vars[j].offset, false);

    sf.cost.assign(sf.structural, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (auto [c, s] : sf.vars[j].cols) sf.cost[c] += s * lp.objective[j];
    return sf;
}

class Tableau
{
  public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return t_[r * (n_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, n_); }
    const Rational& rhs(std::size_t r) const { return at(r, n_); }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::vector<std::size_t>& basis() { return basis_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void pivot(std::size_t pr, std::size_t pc)
    {
        const Rational inv = 1 / at(pr, pc);
        for (std::size_t c = 0; c <= n_; ++c) at(pr, c) *= inv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == pr) continue;
            const Rational factor = at(r, pc);
            if (factor == 0) continue;
            for (std::size_t c = 0; c <= n_; ++c)
                if (at(pr, c) != 0) at(r, c) -= factor * at(pr, c);
        }
        basis_[pr] = pc;
    }

    void drop_row(std::size_t r)
    {
        auto first = t_.begin() + static_cast<std::ptrdiff_t>(r * (n_ + 1));
        t_.erase(first, first + static_cast<std::ptrdiff_t>(n_ + 1));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

  private:
    std::size_t m_;
    std::size_t n_;
    std::vector<Rational> t_;
    std::vector<std::size_t> basis_;
};

enum class Outcome { Optimal, Unbounded };

// Primal simplex maximizing cost . y over the columns flagged in `allowed`.
Outcome run_simplex(Tableau& tab, const QVector& cost, const std::vector<bool>& allowed)
{
    std::vector<bool> in_basis(tab.cols());
    for (;;) {
        std::fill(in_basis.begin(), in_basis.end(), false);
        for (auto b : tab.basis()) in_basis[b] = true;

        std::size_t enter = npos;
        for (std::size_t j = 0; j < tab.cols() && enter == npos; ++j) {
            if (!allowed[j] || in_basis[j]) continue;
            Rational reduced = cost[j];
            for (std::size_t i = 0; i < tab.rows(); ++i)
                if (tab.at(i, j) != 0) reduced -= cost[tab.basis()[i]] * tab.at(i, j);
            if (reduced > 0) enter = j;
        }
        if (enter == npos) return Outcome::Optimal;

        std::size_t leave = npos;
        Rational best;
        for (std::size_t i = 0; i < tab.rows(); ++i) {
            if (tab.at(i, enter) <= 0) continue;
            Rational ratio = tab.rhs(i) / tab.at(i, enter);
            if (leave == npos || ratio < best ||
                (ratio == best && tab.basis()[i] < tab.basis()[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave == npos) return Outcome::Unbounded;
        tab.pivot(leave, enter);
    }
}

}  // namespace

LPResult solve_lp(const LinearProgram& lp)
{
    validate(lp);
    const StandardForm sf = standardize(lp);
    const std::size_t m = sf.rows.size();

    // Column layout: structural | slacks (one per <= row) | artificials.
    std::size_t slack_count = 0;
    for (bool eq : sf.is_eq)
        if (!eq) ++slack_count;
    std::vector<std::size_t> slack_of(m, npos);
    std::vector<bool> needs_artificial(m, false);
    {
        std::size_t next = sf.structural;
        for (std::size_t i = 0; i < m; ++i) {
            if (!sf.is_eq[i]) slack_of[i] = next++;
            needs_artificial[i] = sf.is_eq[i] || sf.rhs[i] < 0;
        }
    }
    std::size_t artificial_count = 0;
    for (bool a : needs_artificial)
        if (a) ++artificial_count;
    const std::size_t first_artificial = sf.structural + slack_count;
    const std::size_t total = first_artificial + artificial_count;

    Tableau tab(m, total);
    {
        std::size_t next_art = first_artificial;
        for (std::size_t i = 0; i < m; ++i) {
            const int flip = sf.rhs[i] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < sf.structural; ++j) tab.at(i, j) = flip * sf.rows[i][j];
            if (slack_of[i] != npos) tab.at(i, slack_of[i]) = flip;
            tab.rhs(i) = flip * sf.rhs[i];
            if (needs_artificial[i]) {
                tab.at(i, next_art) = 1;
                tab.basis()[i] = next_art++;
            } else {
                tab.basis()[i] = slack_of[i];
            }
        }
    }

    if (artificial_count > 0) {
        QVector phase1(total);
        for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = -1;
        run_simplex(tab, phase1, std::vector<bool>(total, true));
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < tab.rows(); ++i)
            if (tab.basis()[i] >= first_artificial) infeasibility += tab.rhs(i);
        if (infeasibility != 0) return LPResult{LpStatus::Infeasible, std::nullopt, std::nullopt};

        // Pivot zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = tab.rows(); i-- > 0;) {
            if (tab.basis()[i] < first_artificial) continue;
            std::size_t col = npos;
            for (std::size_t j = 0; j < first_artificial && col == npos; ++j)
                if (tab.at(i, j) != 0) col = j;
            if (col == npos)
                tab.drop_row(i);
            else
                tab.pivot(i, col);
        }
    }

    QVector phase2(total);
    for (std::size_t j = 0; j < sf.structural; ++j) phase2[j] = sf.cost[j];
    std::vector<bool> allowed(total, false);
    for (std::size_t j = 0; j < first_artificial; ++j) allowed[j] = true;
    if (run_simplex(tab, phase2, allowed) == Outcome::Unbounded)
        return LPResult{LpStatus::Unbounded, std::nullopt, std::nullopt};

    QVector y(total);
    for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
    QVector x(lp.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = sf.vars[j].offset;
        for (auto [c, s] : sf.vars[j].cols) x[j] += s * y[c];
    }
    Rational value = dot(lp.objective, x);
    return LPResult{LpStatus::Optimal, std::move(x), std::move(value)};
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> x)
{
    if (x.size() != lp.num_vars()) return false;
    for (std::size_t r = 0; r < lp.eq.rows(); ++r)
        if (dot(lp.eq.row(r), x) != lp.eq_rhs[r]) return false;
    for (std::size_t r = 0; r < lp.le.rows(); ++r)
        if (dot(lp.le.row(r), x) > lp.le_rhs[r]) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!lp.lower.empty() && lp.lower[j] && x[j] < *lp.lower[j]) return false;
        if (!lp.upper.empty() && lp.upper[j] && x[j] > *lp.upper[j]) return false;
    }
    return true;
}

LpBuilder::LpBuilder(std::size_t num_vars)
    : n_(num_vars), objective_(num_vars), lower_(num_vars), upper_(num_vars)
{
}

LpBuilder& LpBuilder::maximize(QVector objective)
{
    if (objective.size() != n_) throw MalformedProgram("objective has wrong length");
    objective_ = std::move(objective);
    return *this;
}

LpBuilder& LpBuilder::bound(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper)
{
    lower_.at(var) = std::move(lower);
    upper_.at(var) = std::move(upper);
    return *this;
}

LpBuilder& LpBuilder::box_all(const Rational& lower, const Rational& upper)
{
    for (std::size_t j = 0; j < n_; ++j) bound(j, lower, upper);
    return *this;
}

LpBuilder& LpBuilder::nonnegative_all()
{
    for (std::size_t j = 0; j < n_; ++j) bound(j, Rational(0), std::nullopt);
    return *this;
}

LpBuilder& LpBuilder::add_eq(QVector row, Rational rhs)
{
    if (row.size() != n_) throw MalformedProgram("equality row has wrong length");
    eq_rows_.push_back(std::move(row));
    eq_rhs_.push_back(std::move(rhs));
    return *this;
}

LpBuilder& LpBuilder::add_le(QVector row, Rational rhs)
{
    if (row.size() != n_) throw MalformedProgram("inequality row has wrong length");
    le_rows_.push_back(std::move(row));
    le_rhs_.push_back(std::move(rhs));
    return *this;
}

LpBuilder& LpBuilder::add_ge(QVector row, Rational rhs)
{
    return add_le(negate(row), -rhs);
}

LinearProgram LpBuilder::build() const
{
    LinearProgram lp;
    lp.objective = objective_;
    lp.eq = QMatrix::from_rows(eq_rows_, n_);
    lp.eq_rhs = eq_rhs_;
    lp.le = QMatrix::from_rows(le_rows_, n_);
    lp.le_rhs = le_rhs_;
    lp.lower = lower_;
    lp.upper = upper_;
    return lp;
}

std::optional<MarginPoint> strict_cone_point(std::span<const QVector> rows, std::size_t dim)
{
    for (const auto& r : rows)
        if (r.size() != dim)
            throw DimensionMismatch("strict_cone_point: row of dimension " + std::to_string(r.size()) +
                                    ", expected " + std::to_string(dim));
    if (rows.empty()) return MarginPoint{zeros(dim), std::nullopt};

    // Variables (z_1..z_dim, t); maximize t subject to row . z - t >= 0.
    LpBuilder b(dim + 1);
    b.maximize(unit(dim + 1, dim));
    for (std::size_t i = 0; i < dim; ++i) b.bound(i, Rational(-1), Rational(1));
    for (const auto& r : rows) {
        QVector row(r);
        row.push_back(-1);
        b.add_ge(std::move(row), 0);
    }
    LPResult res = solve_lp(b.build());
    if (res.status != LpStatus::Optimal || *res.objective_value <= 0) return std::nullopt;
    QVector z(res.solution->begin(), res.solution->begin() + static_cast<std::ptrdiff_t>(dim));
    return MarginPoint{std::move(z), std::move(*res.objective_value)};
}

}  // namespace conefj
