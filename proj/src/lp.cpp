#include "bmg/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace bmg {

int LpModel::add_variable(std::string name, bool is_free) {
    names_.push_back(std::move(name));
    free_.push_back(is_free);
    return static_cast<int>(names_.size()) - 1;
}

void LpModel::check_expr(const LinExpr& expr) const {
    for (const auto& [v, c] : expr) {
        if (v < 0 || v >= num_variables())
            throw std::invalid_argument("expression references undeclared variable index " +
                                        std::to_string(v));
        (void)c;
    }
}

void LpModel::set_objective(Sense sense, LinExpr coeffs) {
    check_expr(coeffs);
    sense_ = sense;
    objective_ = std::move(coeffs);
}

void LpModel::add_constraint(LinExpr coeffs, Rel rel, Rational rhs) {
    check_expr(coeffs);
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

Rational LpModel::evaluate(const LinExpr& expr, const std::vector<Rational>& point) {
    Rational acc = 0;
    for (const auto& [v, c] : expr)
        acc += c * point.at(v);
    return acc;
}

namespace {

// min cost.w  s.t.  A w = rhs, w >= 0
struct StdForm {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> a;  // rows x cols
    std::vector<Rational> rhs;
    std::vector<Rational> cost;
};

struct StdResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> w;   // size cols
    std::vector<Rational> pi;  // simplex multipliers, size rows
};

// Solves B^T pi = c_b by Gaussian elimination. B is rows x rows.
std::vector<Rational> solve_transposed(const std::vector<std::vector<Rational>>& b_cols,
                                       const std::vector<Rational>& c_b) {
    const int n = static_cast<int>(c_b.size());
    // Augmented system: row i of B^T is column i of B.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = b_cols[i][j];  // b_cols[i] is the i-th basis column
        m[i][n] = c_b[i];
    }
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0)
            throw std::logic_error("singular basis in multiplier extraction");
        std::swap(m[p], m[row]);
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (int j = col; j <= n; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    std::vector<Rational> pi(n);
    for (int i = 0; i < n; ++i)
        pi[i] = m[i][n] / m[i][i];
    return pi;
}

// Two-phase primal simplex with Bland's rule on a dense tableau.
StdResult simplex_solve(const StdForm& f) {
    const int rows = f.rows;
    const int real_cols = f.cols;
    const int total_cols = real_cols + rows;  // + artificials

    // Tableau holds B^-1 [A | I] and B^-1 rhs; rows normalized to rhs >= 0.
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(total_cols));
    std::vector<Rational> b(rows);
    for (int i = 0; i < rows; ++i) {
        bool neg = f.rhs[i] < 0;
        for (int j = 0; j < real_cols; ++j)
            t[i][j] = neg ? -f.a[i][j] : f.a[i][j];
        t[i][real_cols + i] = 1;
        b[i] = neg ? -f.rhs[i] : f.rhs[i];
    }
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i)
        basis[i] = real_cols + i;

    auto pivot = [&](int row, int col) {
        Rational p = t[row][col];
        for (int j = 0; j < total_cols; ++j)
            if (t[row][j] != 0) t[row][j] /= p;
        b[row] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rational f2 = t[i][col];
            for (int j = 0; j < total_cols; ++j)
                if (t[row][j] != 0) t[i][j] -= f2 * t[row][j];
            b[i] -= f2 * b[row];
        }
        basis[row] = col;
    };

    // Runs Bland-rule iterations for the given cost vector over eligible
    // columns. Returns false if unbounded.
    auto run = [&](const std::vector<Rational>& cost, int eligible_cols) -> bool {
        for (;;) {
            std::vector<Rational> cb(rows);
            for (int i = 0; i < rows; ++i)
                cb[i] = cost[basis[i]];
            int entering = -1;
            for (int j = 0; j < eligible_cols && entering < 0; ++j) {
                Rational red = cost[j];
                for (int i = 0; i < rows; ++i)
                    if (t[i][j] != 0) red -= cb[i] * t[i][j];
                if (red < 0)
                    entering = j;
            }
            if (entering < 0)
                return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                if (t[i][entering] <= 0) continue;
                Rational ratio = b[i] / t[i][entering];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, entering);
        }
    };

    // Phase 1.
    std::vector<Rational> cost1(total_cols, Rational(0));
    for (int j = real_cols; j < total_cols; ++j)
        cost1[j] = 1;
    bool bounded = run(cost1, total_cols);
    assert(bounded);
    (void)bounded;
    Rational art_sum = 0;
    for (int i = 0; i < rows; ++i)
        if (basis[i] >= real_cols) art_sum += b[i];
    if (art_sum != 0)
        return {LpStatus::Infeasible, Rational(0), {}, {}};

    // Degenerate artificials: pivot them out. Rows stay independent because
    // every real system here carries a distinct surplus column per row.
    for (int i = 0; i < rows; ++i) {
        if (basis[i] < real_cols) continue;
        int col = -1;
        for (int j = 0; j < real_cols; ++j)
            if (t[i][j] != 0) { col = j; break; }
        if (col < 0)
            throw std::logic_error("linearly dependent row in standard form");
        pivot(i, col);
    }

    // Phase 2, artificials ineligible.
    std::vector<Rational> cost2(total_cols, Rational(0));
    for (int j = 0; j < real_cols; ++j)
        cost2[j] = f.cost[j];
    if (!run(cost2, real_cols))
        return {LpStatus::Unbounded, Rational(0), {}, {}};

    StdResult res;
    res.status = LpStatus::Optimal;
    res.w.assign(real_cols, Rational(0));
    for (int i = 0; i < rows; ++i)
        res.w[basis[i]] = b[i];
    res.value = 0;
    for (int j = 0; j < real_cols; ++j)
        if (res.w[j] != 0) res.value += f.cost[j] * res.w[j];

    // Multipliers from the original basis columns: B^T pi = c_B.
    std::vector<std::vector<Rational>> b_cols(rows, std::vector<Rational>(rows));
    std::vector<Rational> cb(rows);
    for (int i = 0; i < rows; ++i) {
        cb[i] = cost2[basis[i]];
        for (int r = 0; r < rows; ++r)
            b_cols[i][r] = f.a[r][basis[i]];
    }
    res.pi = solve_transposed(b_cols, cb);
    return res;
}

// The model in canonical max form: max c.z  s.t.  A z <= b, z >= 0,
// with free variables split as z+ - z-.
struct CanonForm {
    int n = 0;  // split columns
    int m = 0;  // rows
    std::vector<std::vector<Rational>> a;  // m x n
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<int> plus_col;   // per model variable
    std::vector<int> minus_col;  // -1 when not free
    bool negated_objective = false;
};

CanonForm canonicalize(const LpModel& model) {
    CanonForm cf;
    const int nv = model.num_variables();
    cf.plus_col.assign(nv, -1);
    cf.minus_col.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        cf.plus_col[v] = cf.n++;
        if (model.is_free(v))
            cf.minus_col[v] = cf.n++;
    }
    cf.c.assign(cf.n, Rational(0));
    cf.negated_objective = model.sense() == Sense::Minimize;
    for (const auto& [v, coef] : model.objective()) {
        Rational c = cf.negated_objective ? -coef : coef;
        cf.c[cf.plus_col[v]] += c;
        if (cf.minus_col[v] >= 0)
            cf.c[cf.minus_col[v]] -= c;
    }
    auto add_row = [&](const LinExpr& coeffs, const Rational& rhs, bool negate) {
        std::vector<Rational> row(cf.n, Rational(0));
        for (const auto& [v, coef] : coeffs) {
            Rational c = negate ? -coef : coef;
            row[cf.plus_col[v]] += c;
            if (cf.minus_col[v] >= 0)
                row[cf.minus_col[v]] -= c;
        }
        cf.a.push_back(std::move(row));
        cf.b.push_back(negate ? -rhs : rhs);
        ++cf.m;
    };
    for (const auto& con : model.constraints()) {
        switch (con.rel) {
            case Rel::Le: add_row(con.coeffs, con.rhs, false); break;
            case Rel::Ge: add_row(con.coeffs, con.rhs, true); break;
            case Rel::Eq:
                add_row(con.coeffs, con.rhs, false);
                add_row(con.coeffs, con.rhs, true);
                break;
        }
    }
    return cf;
}

// Dual of the canonical form: min b.y  s.t.  A^T y >= c, y >= 0,
// written with surplus columns as A^T y - s = c.
StdForm dual_std_form(const CanonForm& cf) {
    StdForm f;
    f.rows = cf.n;
    f.cols = cf.m + cf.n;
    f.a.assign(f.rows, std::vector<Rational>(f.cols, Rational(0)));
    f.rhs.resize(f.rows);
    f.cost.assign(f.cols, Rational(0));
    for (int i = 0; i < cf.n; ++i) {
        for (int j = 0; j < cf.m; ++j)
            f.a[i][j] = cf.a[j][i];
        f.a[i][cf.m + i] = -1;
        f.rhs[i] = cf.c[i];
    }
    for (int j = 0; j < cf.m; ++j)
        f.cost[j] = cf.b[j];
    return f;
}

// Gale's alternative for A z <= b, z >= 0: the system is infeasible iff
// there is y >= 0 with A^T y >= 0 and b.y <= -1 (after scaling).
bool canon_is_infeasible(const CanonForm& cf) {
    StdForm f;
    f.rows = cf.n + 1;
    f.cols = cf.m + f.rows;
    f.a.assign(f.rows, std::vector<Rational>(f.cols, Rational(0)));
    f.rhs.assign(f.rows, Rational(0));
    f.cost.assign(f.cols, Rational(0));
    for (int i = 0; i < cf.n; ++i) {
        for (int j = 0; j < cf.m; ++j)
            f.a[i][j] = cf.a[j][i];
        f.a[i][cf.m + i] = -1;
    }
    for (int j = 0; j < cf.m; ++j)
        f.a[cf.n][j] = -cf.b[j];
    f.a[cf.n][cf.m + cf.n] = -1;
    f.rhs[cf.n] = 1;
    StdResult r = simplex_solve(f);
    return r.status == LpStatus::Optimal;
}

}  // namespace

LpOutcome solve(const LpModel& model) {
    CanonForm cf = canonicalize(model);
    StdForm dual = dual_std_form(cf);
    StdResult dr = simplex_solve(dual);

    LpOutcome out;
    if (dr.status == LpStatus::Unbounded) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    if (dr.status == LpStatus::Infeasible) {
        out.status = canon_is_infeasible(cf) ? LpStatus::Infeasible : LpStatus::Unbounded;
        return out;
    }

    // The dual's multipliers are an optimal basic solution of the primal.
    out.status = LpStatus::Optimal;
    out.point.assign(model.num_variables(), Rational(0));
    for (int v = 0; v < model.num_variables(); ++v) {
        out.point[v] = dr.pi[cf.plus_col[v]];
        if (cf.minus_col[v] >= 0)
            out.point[v] -= dr.pi[cf.minus_col[v]];
    }
    out.value = LpModel::evaluate(model.objective(), out.point);

    // Exactness audit: the returned point must satisfy every constraint and
    // attain the dual value.
    Rational canon_value = cf.negated_objective ? -out.value : out.value;
    if (canon_value != dr.value)
        throw std::logic_error("simplex extraction mismatch");
    for (const auto& con : model.constraints()) {
        Rational lhs = LpModel::evaluate(con.coeffs, out.point);
        bool ok = con.rel == Rel::Le ? lhs <= con.rhs
                : con.rel == Rel::Ge ? lhs >= con.rhs
                                     : lhs == con.rhs;
        if (!ok)
            throw std::logic_error("simplex extraction produced an infeasible point");
    }
    for (int v = 0; v < model.num_variables(); ++v)
        if (!model.is_free(v) && out.point[v] < 0)
            throw std::logic_error("simplex extraction produced an infeasible point");
    return out;
}

LpOutcome solve_over_optimal_face(const LpModel& model, const LinExpr& probe) {
    LpOutcome base = solve(model);
    if (base.status != LpStatus::Optimal)
        throw std::logic_error("max_over_optimal_face requires an optimal model");
    LpModel face = model;
    face.add_constraint(model.objective(), Rel::Eq, base.value);
    face.set_objective(Sense::Maximize, probe);
    LpOutcome out = solve(face);
    if (out.status != LpStatus::Optimal)
        throw std::logic_error("probe unbounded or infeasible over the optimal face");
    return out;
}

Rational max_over_optimal_face(const LpModel& model, const LinExpr& probe) {
    return solve_over_optimal_face(model, probe).value;
}

int affine_rank(const std::vector<LinExpr>& equalities, int num_vars) {
    std::vector<std::vector<Rational>> m;
    m.reserve(equalities.size());
    for (const auto& e : equalities) {
        std::vector<Rational> row(num_vars, Rational(0));
        for (const auto& [v, c] : e) {
            if (v < 0 || v >= num_vars)
                throw std::invalid_argument("equality references variable out of range");
            row[v] = c;
        }
        m.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < num_vars && rank < static_cast<int>(m.size()); ++col) {
        int p = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (int j = col; j < num_vars; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace bmg
