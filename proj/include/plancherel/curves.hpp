#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace plancherel {

struct CurvePoint {
    double u, v;    // position in the open quadrant
    double du, dv;  // derivatives w.r.t. the curve parameter
};

// One piece of a southeast-directed curve. Built-in kinds are constructed in
// interior-time parametrization (t = (ln u - ln v)/2 + const); ExplicitPiece
// may carry any admissible parametrization.
class CurvePiece {
public:
    virtual ~CurvePiece() = default;

    double t_begin() const { return t_begin_; }
    double t_end() const { return t_end_; }

    virtual CurvePoint at(double t) const = 0;

    // sup over [a,b] of |v'|/v (death factor), u'*v (birth rate), u*v.
    virtual double sup_death_factor(double a, double b) const = 0;
    virtual double sup_birth_rate(double a, double b) const = 0;
    virtual double sup_theta(double a, double b) const = 0;

    // First t in the domain with u(t) >= p, and last t with v(t) >= q
    // (u nondecreasing, v nonincreasing). nullopt when never attained.
    virtual std::optional<double> first_u_at_least(double p) const = 0;
    virtual std::optional<double> last_v_at_least(double q) const = 0;

    virtual bool interior_parametrized() const { return true; }
    virtual std::shared_ptr<const CurvePiece> shifted(double dt) const = 0;
    virtual std::shared_ptr<const CurvePiece> reversed() const = 0;
    virtual std::string descriptor() const = 0;

protected:
    CurvePiece(double t_begin, double t_end) : t_begin_(t_begin), t_end_(t_end) {}
    double t_begin_, t_end_;
};

using PiecePtr = std::shared_ptr<const CurvePiece>;

// Piecewise-C^1 southeast path (u(t), v(t)) in the open quadrant with
// u' >= 0 >= v', never both zero. Immutable and shareable.
class AdmissibleCurve {
public:
    // uv = theta parametrized by interior time, u = sqrt(theta) e^t; whole line.
    static AdmissibleCurve hyperbola(double theta);
    // u + v = c in interior time, anchored so u = v = c/2 at t = 0; whole line.
    static AdmissibleCurve diagonal_line(double c);
    // u = u0 with v descending from v_hi to v_lo; starts at t = 0 (pure death).
    static AdmissibleCurve vertical_line(double u0, double v_hi, double v_lo);
    // v = v0 with u ascending from u_lo to u_hi; starts at t = 0 (pure birth).
    static AdmissibleCurve horizontal_line(double v0, double u_lo, double u_hi);
    // Consecutive segments joined in order; endpoints must match.
    static AdmissibleCurve piecewise(const std::vector<AdmissibleCurve>& parts);
    static AdmissibleCurve explicit_piece(
        std::function<CurvePoint(double)> eval, double t_begin, double t_end,
        std::function<double(double, double)> sup_death,
        std::function<double(double, double)> sup_birth, std::string label = "explicit");

    // Mini-language: "hyperbola:theta=4", "line:u+v=2", "vline:u=2,v=[3,0.1]",
    // "hline:v=1,u=[0.1,3]", "piecewise:[...;...]".
    static AdmissibleCurve parse(const std::string& descriptor);

    double t_begin() const;
    double t_end() const;
    CurvePoint at(double t) const;
    double theta_at(double t) const;  // u(t) v(t)

    AdmissibleCurve reversed() const;  // u^(t) = v(-t), v^(t) = u(-t)
    // Reparametrize by interior time, with the given current-parameter point
    // mapped to time 0.
    AdmissibleCurve interior_time(double anchor_t) const;

    // Admissibility check on a sample grid; throws on violation.
    void validate(int grid_points = 10000) const;

    double sup_death_factor(double a, double b) const;
    double sup_birth_rate(double a, double b) const;
    double sup_theta(double a, double b) const;

    std::optional<double> first_u_at_least(double p) const;
    std::optional<double> last_v_at_least(double q) const;
    // Next piece boundary strictly beyond t (t_end if none).
    double next_boundary_after(double t) const;

    std::string descriptor() const;
    const std::vector<PiecePtr>& pieces() const { return pieces_; }

private:
    explicit AdmissibleCurve(std::vector<PiecePtr> pieces);
    const CurvePiece& piece_at(double t) const;
    std::vector<PiecePtr> pieces_;  // time-ordered, contiguous
};

inline constexpr double kCurveJoinTolerance = 1e-12;

}  // namespace plancherel
