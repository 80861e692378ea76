#include "plancherel/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plancherel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_to(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

class HyperbolaPiece final : public CurvePiece {
public:
    HyperbolaPiece(double theta, double t_ref, double a, double b)
        : CurvePiece(a, b), theta_(theta), t_ref_(t_ref), root_(std::sqrt(theta)) {}

    CurvePoint at(double t) const override {
        const double u = root_ * std::exp(t - t_ref_);
        const double v = theta_ / u;
        return {u, v, u, -v};  // du = u, dv = -v in interior time
    }
    double sup_death_factor(double, double) const override { return 1.0; }
    double sup_birth_rate(double, double) const override { return theta_; }
    double sup_theta(double, double) const override { return theta_; }
    std::optional<double> first_u_at_least(double p) const override {
        const double t = t_ref_ + std::log(p / root_);
        if (t <= t_begin_) return t_begin_;
        if (t > t_end_) return std::nullopt;
        return t;
    }
    std::optional<double> last_v_at_least(double q) const override {
        const double t = t_ref_ - std::log(q / root_);  // v(t) = root e^{-(t-ref)}
        if (t >= t_end_) return t_end_;
        if (t < t_begin_) return std::nullopt;
        return t;
    }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<HyperbolaPiece>(theta_, t_ref_ + dt, t_begin_ + dt, t_end_ + dt);
    }
    PiecePtr reversed() const override {
        // u^(t) = v(-t) = root e^{t + ref}: a hyperbola piece with ref -> -ref.
        return std::make_shared<HyperbolaPiece>(theta_, -t_ref_, -t_end_, -t_begin_);
    }
    std::string descriptor() const override {
        std::ostringstream os;
        os << "hyperbola:theta=" << theta_;
        return os.str();
    }

private:
    double theta_, t_ref_, root_;
};

class DiagonalLinePiece final : public CurvePiece {
public:
    DiagonalLinePiece(double c, double t_ref, double a, double b)
        : CurvePiece(a, b), c_(c), t_ref_(t_ref) {}

    CurvePoint at(double t) const override {
        const double tau = t - t_ref_;
        const double u = c_ / (1.0 + std::exp(-2.0 * tau));
        const double v = c_ / (1.0 + std::exp(2.0 * tau));
        const double uv = u * v;
        return {u, v, 2.0 * uv / c_, -2.0 * uv / c_};
    }
    double sup_death_factor(double /*a*/, double b) const override {
        // |v'|/v = 2u/c, increasing in t.
        return 2.0 * at(b).u / c_;
    }
    double sup_birth_rate(double a, double b) const override {
        // u'v = 2uv^2/c, unimodal with max at tau = -log(2)/2.
        const double t_star = t_ref_ - 0.5 * std::log(2.0);
        double best = std::max(rate_at(a), rate_at(b));
        if (a < t_star && t_star < b) best = std::max(best, rate_at(t_star));
        return best;
    }
    double sup_theta(double a, double b) const override {
        // theta = uv maximal at tau = 0.
        double best = std::max(theta_at(a), theta_at(b));
        if (a < t_ref_ && t_ref_ < b) best = std::max(best, theta_at(t_ref_));
        return best;
    }
    std::optional<double> first_u_at_least(double p) const override {
        if (p >= c_) return std::nullopt;  // u < c along the whole line
        // u = c/(1+e^{-2 tau}) = p  =>  tau = -log(c/p - 1)/2
        const double t = t_ref_ - 0.5 * std::log(c_ / p - 1.0);
        if (t <= t_begin_) return t_begin_;
        if (t > t_end_) return std::nullopt;
        return t;
    }
    std::optional<double> last_v_at_least(double q) const override {
        if (q >= c_) return std::nullopt;
        const double t = t_ref_ + 0.5 * std::log(c_ / q - 1.0);
        if (t >= t_end_) return t_end_;
        if (t < t_begin_) return std::nullopt;
        return t;
    }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<DiagonalLinePiece>(c_, t_ref_ + dt, t_begin_ + dt, t_end_ + dt);
    }
    PiecePtr reversed() const override {
        // Swapping axes maps the line to itself with reflected time.
        return std::make_shared<DiagonalLinePiece>(c_, -t_ref_, -t_end_, -t_begin_);
    }
    std::string descriptor() const override {
        std::ostringstream os;
        os << "line:u+v=" << c_;
        return os.str();
    }

private:
    double rate_at(double t) const {
        const auto p = at(t);
        return p.du * p.v;
    }
    double theta_at(double t) const {
        const auto p = at(t);
        return p.u * p.v;
    }
    double c_, t_ref_;
};

class VerticalPiece final : public CurvePiece {
public:
    VerticalPiece(double u0, double v_ref, double t_ref, double a, double b)
        : CurvePiece(a, b), u0_(u0), v_ref_(v_ref), t_ref_(t_ref) {}

    CurvePoint at(double t) const override {
        const double v = v_ref_ * std::exp(-2.0 * (t - t_ref_));
        return {u0_, v, 0.0, -2.0 * v};
    }
    double sup_death_factor(double, double) const override { return 2.0; }
    double sup_birth_rate(double, double) const override { return 0.0; }
    double sup_theta(double a, double) const override { return u0_ * at(a).v; }
    std::optional<double> first_u_at_least(double p) const override {
        if (u0_ >= p) return t_begin_;
        return std::nullopt;
    }
    std::optional<double> last_v_at_least(double q) const override {
        const double t = t_ref_ - 0.5 * std::log(q / v_ref_);
        if (t >= t_end_) return t_end_;
        if (t < t_begin_) return std::nullopt;
        return t;
    }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<VerticalPiece>(u0_, v_ref_, t_ref_ + dt, t_begin_ + dt, t_end_ + dt);
    }
    PiecePtr reversed() const override;
    std::string descriptor() const override {
        std::ostringstream os;
        os << "vline:u=" << u0_ << ",v=[" << at(t_begin_).v << "," << at(t_end_).v << "]";
        return os.str();
    }

    double u0_, v_ref_, t_ref_;
};

class HorizontalPiece final : public CurvePiece {
public:
    HorizontalPiece(double v0, double u_ref, double t_ref, double a, double b)
        : CurvePiece(a, b), v0_(v0), u_ref_(u_ref), t_ref_(t_ref) {}

    CurvePoint at(double t) const override {
        const double u = u_ref_ * std::exp(2.0 * (t - t_ref_));
        return {u, v0_, 2.0 * u, 0.0};
    }
    double sup_death_factor(double, double) const override { return 0.0; }
    double sup_birth_rate(double, double b) const override { return 2.0 * at(b).u * v0_; }
    double sup_theta(double, double b) const override { return at(b).u * v0_; }
    std::optional<double> first_u_at_least(double p) const override {
        const double t = t_ref_ + 0.5 * std::log(p / u_ref_);
        if (t <= t_begin_) return t_begin_;
        if (t > t_end_) return std::nullopt;
        return t;
    }
    std::optional<double> last_v_at_least(double q) const override {
        if (v0_ >= q) return t_end_;
        return std::nullopt;
    }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<HorizontalPiece>(v0_, u_ref_, t_ref_ + dt, t_begin_ + dt, t_end_ + dt);
    }
    PiecePtr reversed() const override {
        return std::make_shared<VerticalPiece>(v0_, u_ref_, -t_ref_, -t_end_, -t_begin_);
    }
    std::string descriptor() const override {
        std::ostringstream os;
        os << "hline:v=" << v0_ << ",u=[" << at(t_begin_).u << "," << at(t_end_).u << "]";
        return os.str();
    }

    double v0_, u_ref_, t_ref_;
};

PiecePtr VerticalPiece::reversed() const {
    return std::make_shared<HorizontalPiece>(u0_, v_ref_, -t_ref_, -t_end_, -t_begin_);
}

class ExplicitCurvePiece final : public CurvePiece {
public:
    // at(t) evaluates the user callable at s(t) = sign*t + shift; an axis
    // swap realizes time reversal (u^(t) = v(-t)).
    ExplicitCurvePiece(std::function<CurvePoint(double)> eval, double a, double b,
                       std::function<double(double, double)> sup_death,
                       std::function<double(double, double)> sup_birth, std::string label,
                       bool reversed_axes = false, double time_sign = 1.0, double shift = 0.0)
        : CurvePiece(a, b),
          eval_(std::move(eval)),
          sup_death_(std::move(sup_death)),
          sup_birth_(std::move(sup_birth)),
          label_(std::move(label)),
          swap_(reversed_axes),
          sign_(time_sign),
          shift_(shift) {}

    CurvePoint at(double t) const override {
        CurvePoint p = eval_(sign_ * t + shift_);
        p.du *= sign_;
        p.dv *= sign_;
        if (swap_) {
            std::swap(p.u, p.v);
            std::swap(p.du, p.dv);
        }
        return p;
    }
    double sup_death_factor(double a, double b) const override {
        if (!swap_) {
            const auto [lo, hi] = map(a, b);
            return sup_death_(lo, hi);
        }
        // After an axis swap the supplied bounds no longer apply; fall back to
        // a sampled bound with a safety factor.
        return sampled_sup(a, b, [](const CurvePoint& p) { return -p.dv / p.v; });
    }
    double sup_birth_rate(double a, double b) const override {
        if (!swap_) {
            const auto [lo, hi] = map(a, b);
            return sup_birth_(lo, hi);
        }
        return sampled_sup(a, b, [](const CurvePoint& p) { return p.du * p.v; });
    }
    double sup_theta(double a, double b) const override {
        return sampled_sup(a, b, [](const CurvePoint& p) { return p.u * p.v; });
    }
    std::optional<double> first_u_at_least(double p) const override {
        return bisect([this, p](double t) { return at(t).u >= p; }, true);
    }
    std::optional<double> last_v_at_least(double q) const override {
        return bisect([this, q](double t) { return at(t).v >= q; }, false);
    }
    bool interior_parametrized() const override { return false; }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<ExplicitCurvePiece>(eval_, t_begin_ + dt, t_end_ + dt, sup_death_,
                                                    sup_birth_, label_, swap_, sign_,
                                                    shift_ - sign_ * dt);
    }
    PiecePtr reversed() const override {
        return std::make_shared<ExplicitCurvePiece>(eval_, -t_end_, -t_begin_, sup_death_,
                                                    sup_birth_, label_, !swap_, -sign_, shift_);
    }
    std::string descriptor() const override { return label_; }

private:
    std::pair<double, double> map(double a, double b) const {
        double x = sign_ * a + shift_, y = sign_ * b + shift_;
        if (x > y) std::swap(x, y);
        return {x, y};
    }
    template <class F>
    double sampled_sup(double a, double b, F f) const {
        constexpr int kSamples = 512;
        double best = 0.0;
        for (int i = 0; i <= kSamples; ++i) {
            const double t = a + (b - a) * i / kSamples;
            best = std::max(best, f(at(t)));
        }
        return best * 1.25;  // safety margin over the sampled maximum
    }
    template <class Pred>
    std::optional<double> bisect(Pred holds, bool find_first) const {
        // find_first: least t with holds(t) (holds monotone false->true);
        // otherwise greatest t with holds(t) (true->false).
        double lo = t_begin_, hi = t_end_;
        if (find_first) {
            if (holds(lo)) return lo;
            if (!holds(hi)) return std::nullopt;
        } else {
            if (holds(hi)) return hi;
            if (!holds(lo)) return std::nullopt;
        }
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            const bool h = holds(mid);
            if (h == find_first) hi = mid;
            else lo = mid;
        }
        return find_first ? hi : lo;
    }

    std::function<CurvePoint(double)> eval_;
    std::function<double(double, double)> sup_death_, sup_birth_;
    std::string label_;
    bool swap_;
    double sign_, shift_;
};

// Interior-time wrapper around a custom-parametrized piece: new time
// T = (ln u - ln v)/2 - offset, inverted by bisection (T is increasing).
class InteriorWrapPiece final : public CurvePiece {
public:
    InteriorWrapPiece(PiecePtr base, double offset)
        : CurvePiece(time_of(*base, base->t_begin()) - offset,
                     time_of(*base, base->t_end()) - offset),
          base_(std::move(base)),
          offset_(offset) {}

    CurvePoint at(double t) const override {
        const double s = param_of(t);
        CurvePoint p = base_->at(s);
        // dT/ds = (u'/u - v'/v)/2; chain rule rescales the derivatives.
        const double rate = 0.5 * (p.du / p.u - p.dv / p.v);
        p.du /= rate;
        p.dv /= rate;
        return p;
    }
    double sup_death_factor(double a, double b) const override {
        return sampled_sup(a, b, [](const CurvePoint& p) { return -p.dv / p.v; });
    }
    double sup_birth_rate(double a, double b) const override {
        return sampled_sup(a, b, [](const CurvePoint& p) { return p.du * p.v; });
    }
    double sup_theta(double a, double b) const override {
        return sampled_sup(a, b, [](const CurvePoint& p) { return p.u * p.v; });
    }
    std::optional<double> first_u_at_least(double p) const override {
        auto s = base_->first_u_at_least(p);
        if (!s) return std::nullopt;
        return time_of(*base_, *s) - offset_;
    }
    std::optional<double> last_v_at_least(double q) const override {
        auto s = base_->last_v_at_least(q);
        if (!s) return std::nullopt;
        return time_of(*base_, *s) - offset_;
    }
    PiecePtr shifted(double dt) const override {
        return std::make_shared<InteriorWrapPiece>(base_, offset_ - dt);
    }
    PiecePtr reversed() const override {
        return std::make_shared<InteriorWrapPiece>(base_->reversed(), -offset_);
    }
    std::string descriptor() const override { return base_->descriptor(); }

private:
    static double time_of(const CurvePiece& piece, double s) {
        const auto p = piece.at(s);
        return 0.5 * (std::log(p.u) - std::log(p.v));
    }
    double param_of(double t) const {
        const double target = t + offset_;
        double lo = base_->t_begin(), hi = base_->t_end();
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            (time_of(*base_, mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    template <class F>
    double sampled_sup(double a, double b, F f) const {
        constexpr int kSamples = 512;
        double best = 0.0;
        for (int i = 0; i <= kSamples; ++i) {
            const double t = a + (b - a) * i / kSamples;
            best = std::max(best, f(at(t)));
        }
        return best * 1.25;
    }

    PiecePtr base_;
    double offset_;
};

}  // namespace

AdmissibleCurve::AdmissibleCurve(std::vector<PiecePtr> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("curve needs at least one piece");
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (std::abs(pieces_[i]->t_begin() - pieces_[i - 1]->t_end()) > 1e-9)
            throw std::invalid_argument("curve pieces must be contiguous in time");
        const auto a = pieces_[i - 1]->at(pieces_[i - 1]->t_end());
        const auto b = pieces_[i]->at(pieces_[i]->t_begin());
        const double scale = std::max({std::abs(a.u), std::abs(a.v), 1.0});
        if (std::abs(a.u - b.u) > kCurveJoinTolerance * scale ||
            std::abs(a.v - b.v) > kCurveJoinTolerance * scale)
            throw std::invalid_argument("curve pieces must join continuously");
    }
}

AdmissibleCurve AdmissibleCurve::hyperbola(double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("hyperbola needs theta > 0");
    return AdmissibleCurve({std::make_shared<HyperbolaPiece>(theta, 0.0, -kInf, kInf)});
}

AdmissibleCurve AdmissibleCurve::diagonal_line(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("line needs u+v = c > 0");
    return AdmissibleCurve({std::make_shared<DiagonalLinePiece>(c, 0.0, -kInf, kInf)});
}

AdmissibleCurve AdmissibleCurve::vertical_line(double u0, double v_hi, double v_lo) {
    if (!(u0 > 0.0) || !(v_hi > v_lo) || !(v_lo > 0.0))
        throw std::invalid_argument("vline needs u0 > 0 and v_hi > v_lo > 0");
    // Interior time runs for log(v_hi/v_lo)/2 along the descent.
    const double len = 0.5 * std::log(v_hi / v_lo);
    return AdmissibleCurve({std::make_shared<VerticalPiece>(u0, v_hi, 0.0, 0.0, len)});
}

AdmissibleCurve AdmissibleCurve::horizontal_line(double v0, double u_lo, double u_hi) {
    if (!(v0 > 0.0) || !(u_hi > u_lo) || !(u_lo > 0.0))
        throw std::invalid_argument("hline needs v0 > 0 and u_hi > u_lo > 0");
    const double len = 0.5 * std::log(u_hi / u_lo);
    return AdmissibleCurve({std::make_shared<HorizontalPiece>(v0, u_lo, 0.0, 0.0, len)});
}

AdmissibleCurve AdmissibleCurve::piecewise(const std::vector<AdmissibleCurve>& parts) {
    if (parts.empty()) throw std::invalid_argument("piecewise curve needs parts");
    std::vector<PiecePtr> pieces;
    double t_cursor = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && (!std::isfinite(t_cursor) || !std::isfinite(parts[i].t_begin())))
            throw std::invalid_argument("piecewise parts after the first must have finite extent");
        for (const auto& piece : parts[i].pieces_) {
            const double shift = i == 0 ? 0.0 : t_cursor - parts[i].t_begin();
            pieces.push_back(piece->shifted(shift));
        }
        t_cursor = pieces.back()->t_end();
    }
    return AdmissibleCurve(std::move(pieces));
}

AdmissibleCurve AdmissibleCurve::explicit_piece(std::function<CurvePoint(double)> eval,
                                                double t_begin, double t_end,
                                                std::function<double(double, double)> sup_death,
                                                std::function<double(double, double)> sup_birth,
                                                std::string label) {
    return AdmissibleCurve({std::make_shared<ExplicitCurvePiece>(
        std::move(eval), t_begin, t_end, std::move(sup_death), std::move(sup_birth),
        std::move(label))});
}

double AdmissibleCurve::t_begin() const { return pieces_.front()->t_begin(); }
double AdmissibleCurve::t_end() const { return pieces_.back()->t_end(); }

const CurvePiece& AdmissibleCurve::piece_at(double t) const {
    if (t < t_begin() - 1e-12 || t > t_end() + 1e-12)
        throw std::out_of_range("time outside curve domain");
    for (const auto& piece : pieces_) {
        if (t <= piece->t_end()) return *piece;
    }
    return *pieces_.back();
}

CurvePoint AdmissibleCurve::at(double t) const { return piece_at(t).at(t); }

double AdmissibleCurve::theta_at(double t) const {
    const auto p = at(t);
    return p.u * p.v;
}

AdmissibleCurve AdmissibleCurve::reversed() const {
    std::vector<PiecePtr> pieces;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it)
        pieces.push_back((*it)->reversed());
    return AdmissibleCurve(std::move(pieces));
}

AdmissibleCurve AdmissibleCurve::interior_time(double anchor_t) const {
    const auto p = at(anchor_t);
    const double anchor_interior = 0.5 * (std::log(p.u) - std::log(p.v));
    std::vector<PiecePtr> pieces;
    for (const auto& piece : pieces_) {
        if (piece->interior_parametrized()) {
            // Already interior: current time differs from (ln u - ln v)/2 by a
            // constant, so a shift suffices.
            const double probe = clamp_to(anchor_t, piece->t_begin(), piece->t_end());
            const auto q = piece->at(probe);
            const double offset = 0.5 * (std::log(q.u) - std::log(q.v)) - probe;
            pieces.push_back(piece->shifted(offset - anchor_interior));
        } else {
            pieces.push_back(std::make_shared<InteriorWrapPiece>(piece, anchor_interior));
        }
    }
    return AdmissibleCurve(std::move(pieces));
}

void AdmissibleCurve::validate(int grid_points) const {
    const double lo = std::max(t_begin(), -50.0);
    const double hi = std::min(t_end(), 50.0);
    for (int i = 0; i <= grid_points; ++i) {
        const double t = lo + (hi - lo) * i / grid_points;
        const auto p = at(t);
        if (!(p.u > 0.0) || !(p.v > 0.0))
            throw std::invalid_argument("curve leaves the open quadrant");
        if (p.du < -1e-12 * p.u || p.dv > 1e-12 * p.v)
            throw std::invalid_argument("curve is not directed southeast");
        // Scale-free test that u' and v' never vanish together: the interior
        // time rate u'/u - v'/v must stay positive.
        if (p.du / p.u - p.dv / p.v < 1e-12)
            throw std::invalid_argument("curve derivatives vanish simultaneously");
    }
}

namespace {
template <class F>
double window_sup(const std::vector<PiecePtr>& pieces, double a, double b, F per_piece) {
    double best = 0.0;
    for (const auto& piece : pieces) {
        const double lo = std::max(a, piece->t_begin());
        const double hi = std::min(b, piece->t_end());
        if (lo <= hi) best = std::max(best, per_piece(*piece, lo, hi));
    }
    return best;
}
}  // namespace

double AdmissibleCurve::sup_death_factor(double a, double b) const {
    return window_sup(pieces_, a, b, [](const CurvePiece& p, double lo, double hi) {
        return p.sup_death_factor(lo, hi);
    });
}

double AdmissibleCurve::sup_birth_rate(double a, double b) const {
    return window_sup(pieces_, a, b, [](const CurvePiece& p, double lo, double hi) {
        return p.sup_birth_rate(lo, hi);
    });
}

double AdmissibleCurve::sup_theta(double a, double b) const {
    return window_sup(pieces_, a, b, [](const CurvePiece& p, double lo, double hi) {
        return p.sup_theta(lo, hi);
    });
}

std::optional<double> AdmissibleCurve::first_u_at_least(double p) const {
    for (const auto& piece : pieces_) {
        if (auto t = piece->first_u_at_least(p)) return t;
    }
    return std::nullopt;
}

std::optional<double> AdmissibleCurve::last_v_at_least(double q) const {
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        if (auto t = (*it)->last_v_at_least(q)) return t;
    }
    return std::nullopt;
}

double AdmissibleCurve::next_boundary_after(double t) const {
    for (const auto& piece : pieces_) {
        if (piece->t_end() > t) return piece->t_end();
    }
    return t_end();
}

std::string AdmissibleCurve::descriptor() const {
    if (pieces_.size() == 1) return pieces_.front()->descriptor();
    std::string out = "piecewise:[";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += ';';
        out += pieces_[i]->descriptor();
    }
    out += ']';
    return out;
}

namespace {

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
    }
}

// "key=a" or "key=[a,b]" fields from a comma-separated list.
std::pair<double, double> parse_range(const std::string& text, const std::string& what) {
    if (text.size() < 5 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument(what + " must be a [hi,lo] range");
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument(what + " must be a [hi,lo] range");
    return {parse_number(text.substr(1, comma - 1), what),
            parse_number(text.substr(comma + 1, text.size() - comma - 2), what)};
}

std::string field(const std::string& args, const std::string& key) {
    // Fields are comma separated, but ranges contain commas inside brackets.
    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t end = pos;
        int depth = 0;
        while (end < args.size() && (depth > 0 || args[end] != ',')) {
            if (args[end] == '[') ++depth;
            if (args[end] == ']') --depth;
            ++end;
        }
        const std::string item = args.substr(pos, end - pos);
        const auto eq = item.find('=');
        if (eq != std::string::npos && item.substr(0, eq) == key) return item.substr(eq + 1);
        pos = end + 1;
    }
    throw std::invalid_argument("curve descriptor missing field '" + key + "'");
}

}  // namespace

AdmissibleCurve AdmissibleCurve::parse(const std::string& descriptor) {
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("curve descriptor needs 'kind:params'");
    const std::string kind = descriptor.substr(0, colon);
    const std::string args = descriptor.substr(colon + 1);
    if (kind == "hyperbola") return hyperbola(parse_number(field(args, "theta"), "theta"));
    if (kind == "line") {
        // line:u+v=2
        const auto eq = args.find('=');
        if (eq == std::string::npos || args.substr(0, eq) != "u+v")
            throw std::invalid_argument("line descriptor must be line:u+v=<c>");
        return diagonal_line(parse_number(args.substr(eq + 1), "c"));
    }
    if (kind == "vline") {
        const double u0 = parse_number(field(args, "u"), "u");
        const auto [hi, lo] = parse_range(field(args, "v"), "v range");
        return vertical_line(u0, hi, lo);
    }
    if (kind == "hline") {
        const double v0 = parse_number(field(args, "v"), "v");
        const auto [lo, hi] = parse_range(field(args, "u"), "u range");
        return horizontal_line(v0, lo, hi);
    }
    if (kind == "piecewise") {
        if (args.size() < 2 || args.front() != '[' || args.back() != ']')
            throw std::invalid_argument("piecewise descriptor must be piecewise:[a;b;...]");
        std::vector<AdmissibleCurve> parts;
        const std::string inner = args.substr(1, args.size() - 2);
        std::size_t pos = 0;
        while (pos < inner.size()) {
            std::size_t end = pos;
            int depth = 0;
            while (end < inner.size() && (depth > 0 || inner[end] != ';')) {
                if (inner[end] == '[') ++depth;
                if (inner[end] == ']') --depth;
                ++end;
            }
            parts.push_back(parse(inner.substr(pos, end - pos)));
            pos = end + 1;
        }
        return piecewise(parts);
    }
    throw std::invalid_argument("unknown curve kind '" + kind + "'");
}

}  // namespace plancherel
