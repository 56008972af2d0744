#pragma once

#include "bmg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bmg {

/// Sparse linear expression over variable indices.
using LinExpr = std::map<int, Rational>;

enum class Sense { Maximize, Minimize };
enum class Rel { Le, Eq, Ge };

/// A rational linear program. Variables are either nonnegative or free;
/// free variables are split internally, which does not change optima.
class LpModel {
public:
    int add_variable(std::string name, bool is_free = false);
    void set_objective(Sense sense, LinExpr coeffs);
    void add_constraint(LinExpr coeffs, Rel rel, Rational rhs);

    int num_variables() const { return static_cast<int>(names_.size()); }
    const std::string& variable_name(int v) const { return names_.at(v); }
    bool is_free(int v) const { return free_.at(v); }
    Sense sense() const { return sense_; }
    const LinExpr& objective() const { return objective_; }

    struct Constraint {
        LinExpr coeffs;
        Rel rel;
        Rational rhs;
    };
    const std::vector<Constraint>& constraints() const { return constraints_; }

    /// Exact value of an expression at a point.
    static Rational evaluate(const LinExpr& expr, const std::vector<Rational>& point);

private:
    void check_expr(const LinExpr& expr) const;

    std::vector<std::string> names_;
    std::vector<bool> free_;
    Sense sense_ = Sense::Maximize;
    LinExpr objective_;
    std::vector<Constraint> constraints_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status;
    Rational value;               // meaningful when Optimal
    std::vector<Rational> point;  // variable index -> value, when Optimal
};

/// Exact simplex solve (Bland's rule, dense rational tableau). The model is
/// solved through its dual, so cost scales with the number of variables
/// rather than the number of constraints; all the allocation programs here
/// have few variables and thousands of coalition rows. Deterministic.
LpOutcome solve(const LpModel& model);

/// Maximum of `probe` over the optimal face of `model`. The caller must have
/// verified that the model is solvable; throws std::logic_error if the model
/// is not optimal or the probe is unbounded over the face.
Rational max_over_optimal_face(const LpModel& model, const LinExpr& probe);

/// Same, but also returns the face point attaining the maximum.
LpOutcome solve_over_optimal_face(const LpModel& model, const LinExpr& probe);

/// Rank over the rationals of a system of linear forms on `num_vars` variables.
int affine_rank(const std::vector<LinExpr>& equalities, int num_vars);

}  // namespace bmg
