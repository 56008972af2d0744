#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bmg/lp.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace bmg;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }

}  // namespace

TEST_CASE("one variable, one bound") {
    LpModel m;
    int x = m.add_variable("x");
    m.set_objective(Sense::Maximize, {{x, 1}});
    m.add_constraint({{x, 1}}, Rel::Le, 3);
    LpOutcome out = solve(m);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == 3);
    CHECK(out.point == std::vector<Rational>{3});
}

TEST_CASE("minimization with a covering constraint") {
    LpModel m;
    int x = m.add_variable("x");
    int y = m.add_variable("y");
    m.set_objective(Sense::Minimize, {{x, 2}, {y, 3}});
    m.add_constraint({{x, 1}, {y, 1}}, Rel::Ge, 2);
    LpOutcome out = solve(m);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == 4);  // all weight on the cheaper variable
    CHECK(out.point == std::vector<Rational>{2, 0});
}

TEST_CASE("infeasible and unbounded statuses") {
    LpModel inf;
    int x = inf.add_variable("x");
    inf.set_objective(Sense::Maximize, {{x, 1}});
    inf.add_constraint({{x, 1}}, Rel::Le, -1);
    CHECK(solve(inf).status == LpStatus::Infeasible);

    LpModel unb;
    int y = unb.add_variable("y", /*is_free=*/true);
    unb.set_objective(Sense::Maximize, {{y, 1}});
    unb.add_constraint({{y, 1}}, Rel::Ge, 0);
    CHECK(solve(unb).status == LpStatus::Unbounded);
}

TEST_CASE("free variables and equality constraints") {
    LpModel m;
    int x = m.add_variable("x", true);
    int y = m.add_variable("y", true);
    m.set_objective(Sense::Maximize, {{y, 1}});
    m.add_constraint({{x, 1}, {y, 1}}, Rel::Eq, 1);
    m.add_constraint({{x, 1}, {y, -1}}, Rel::Eq, 0);
    LpOutcome out = solve(m);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == q(1, 2));
    CHECK(out.point == std::vector<Rational>{q(1, 2), q(1, 2)});
}

TEST_CASE("fractional optimum stays exact") {
    // max x + y s.t. 3x + y <= 2, x + 3y <= 2: optimum at (1/2, 1/2).
    LpModel m;
    int x = m.add_variable("x");
    int y = m.add_variable("y");
    m.set_objective(Sense::Maximize, {{x, 1}, {y, 1}});
    m.add_constraint({{x, 3}, {y, 1}}, Rel::Le, 2);
    m.add_constraint({{x, 1}, {y, 3}}, Rel::Le, 2);
    LpOutcome out = solve(m);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == 1);
    CHECK(out.point == std::vector<Rational>{q(1, 2), q(1, 2)});
}

TEST_CASE("probing the optimal face") {
    // max x + y over the unit simplex: the optimal face is the segment
    // between (1,0) and (0,1).
    LpModel m;
    int x = m.add_variable("x");
    int y = m.add_variable("y");
    m.set_objective(Sense::Maximize, {{x, 1}, {y, 1}});
    m.add_constraint({{x, 1}, {y, 1}}, Rel::Le, 1);
    REQUIRE(solve(m).value == 1);
    CHECK(max_over_optimal_face(m, {{x, 1}}) == 1);
    CHECK(max_over_optimal_face(m, {{x, -1}}) == 0);
    LpOutcome face = solve_over_optimal_face(m, {{y, 1}});
    CHECK(face.value == 1);
    CHECK(face.point == std::vector<Rational>{0, 1});
}

TEST_CASE("affine rank") {
    LinExpr e1{{0, 1}, {1, 1}};
    LinExpr e2{{0, 2}, {1, 2}};
    LinExpr e3{{0, 1}, {1, -1}};
    CHECK(affine_rank({e1}, 2) == 1);
    CHECK(affine_rank({e1, e2}, 2) == 1);
    CHECK(affine_rank({e1, e2, e3}, 2) == 2);
    CHECK(affine_rank({}, 2) == 0);
}

TEST_CASE("strong duality on a covering pair") {
    // Primal: min 2x_a + 2x_b s.t. x_a + x_b >= 5 -> 10.
    // Dual:   max 5y s.t. y <= 2 -> 10.
    LpModel p;
    int a = p.add_variable("a");
    int b = p.add_variable("b");
    p.set_objective(Sense::Minimize, {{a, 2}, {b, 2}});
    p.add_constraint({{a, 1}, {b, 1}}, Rel::Ge, 5);
    LpModel d;
    int y = d.add_variable("y");
    d.set_objective(Sense::Maximize, {{y, 5}});
    d.add_constraint({{y, 1}}, Rel::Le, 2);
    CHECK(solve(p).value == solve(d).value);
}

TEST_CASE("deterministic resolves") {
    LpModel m;
    int x = m.add_variable("x");
    int y = m.add_variable("y");
    int z = m.add_variable("z");
    m.set_objective(Sense::Maximize, {{x, 1}, {y, 1}, {z, 1}});
    m.add_constraint({{x, 1}, {y, 1}}, Rel::Le, 1);
    m.add_constraint({{y, 1}, {z, 1}}, Rel::Le, 1);
    LpOutcome first = solve(m);
    for (int i = 0; i < 5; ++i) {
        LpOutcome again = solve(m);
        CHECK(again.value == first.value);
        CHECK(again.point == first.point);
    }
}

namespace {

// Brute-force oracle: enumerate all basic points of {Ax <= b, 0 <= x <= box}
// by solving every n x n subsystem of tight constraints exactly.
struct DenseLp {
    std::vector<std::vector<Rational>> rows;  // A
    std::vector<Rational> rhs;                // b
    std::vector<Rational> obj;
};

bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (int c2 = col; c2 < n; ++c2)
                a[r][c2] -= f * a[col][c2];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (int i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return true;
}

std::optional<Rational> vertex_enumeration_max(const DenseLp& lp, int n) {
    // Collect every constraint as a row (Ax <= b form), including bounds.
    std::vector<std::vector<Rational>> rows = lp.rows;
    std::vector<Rational> rhs = lp.rhs;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> low(n, 0), high(n, 0);
        low[i] = -1;
        high[i] = 1;
        rows.push_back(low);
        rhs.push_back(0);  // -x_i <= 0
        rows.push_back(high);
        rhs.push_back(10);  // x_i <= 10
    }
    const int m = static_cast<int>(rows.size());
    std::optional<Rational> best;
    std::vector<int> idx(n);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            std::vector<std::vector<Rational>> a(n);
            std::vector<Rational> b(n);
            for (int i = 0; i < n; ++i) {
                a[i] = rows[idx[i]];
                b[i] = rhs[idx[i]];
            }
            std::vector<Rational> x;
            if (!solve_square(a, b, x)) return;
            for (int r = 0; r < m; ++r) {
                Rational lhs = 0;
                for (int c = 0; c < n; ++c)
                    lhs += rows[r][c] * x[c];
                if (lhs > rhs[r]) return;
            }
            Rational v = 0;
            for (int c = 0; c < n; ++c)
                v += lp.obj[c] * x[c];
            if (!best || v > *best) best = v;
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("random boxed LPs agree with vertex enumeration") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3), rhs_d(-2, 6);
    const int n = 3;
    for (int trial = 0; trial < 30; ++trial) {
        DenseLp lp;
        int m_rows = 4;
        for (int r = 0; r < m_rows; ++r) {
            std::vector<Rational> row(n);
            for (int c = 0; c < n; ++c)
                row[c] = coeff(rng);
            lp.rows.push_back(row);
            lp.rhs.push_back(rhs_d(rng));
        }
        lp.obj.resize(n);
        for (int c = 0; c < n; ++c)
            lp.obj[c] = coeff(rng);

        LpModel model;
        for (int c = 0; c < n; ++c)
            model.add_variable("x" + std::to_string(c));
        LinExpr obj;
        for (int c = 0; c < n; ++c)
            obj[c] = lp.obj[c];
        model.set_objective(Sense::Maximize, obj);
        for (int r = 0; r < m_rows; ++r) {
            LinExpr e;
            for (int c = 0; c < n; ++c)
                if (lp.rows[r][c] != 0) e[c] = lp.rows[r][c];
            model.add_constraint(std::move(e), Rel::Le, lp.rhs[r]);
        }
        for (int c = 0; c < n; ++c)
            model.add_constraint({{c, 1}}, Rel::Le, 10);

        auto expect = vertex_enumeration_max(lp, n);
        LpOutcome got = solve(model);
        if (!expect) {
            CHECK(got.status == LpStatus::Infeasible);
        } else {
            REQUIRE(got.status == LpStatus::Optimal);
            CHECK(got.value == *expect);
        }
    }
}
