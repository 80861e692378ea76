#include "plancherel/young.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plancherel {

namespace {

// log(k) and log(k!) tables; sizes cover every diagram this project touches
// (columns + rows of a few thousand). Falls back to lgamma beyond.
constexpr std::size_t kLogTableSize = 1 << 15;

const std::vector<double>& log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogTableSize, 0.0);
        for (std::size_t k = 1; k < kLogTableSize; ++k) t[k] = std::log(static_cast<double>(k));
        return t;
    }();
    return table;
}

const std::vector<double>& log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogTableSize, 0.0);
        for (std::size_t k = 1; k < kLogTableSize; ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
        return t;
    }();
    return table;
}

double log_int(std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("log of nonpositive integer");
    if (static_cast<std::size_t>(k) < kLogTableSize) return log_table()[static_cast<std::size_t>(k)];
    return std::log(static_cast<double>(k));
}

double log_factorial(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("factorial of negative integer");
    if (static_cast<std::size_t>(k) < kLogTableSize) return log_factorial_table()[static_cast<std::size_t>(k)];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

std::vector<std::int64_t> shifted_rows(const YoungDiagram& lambda, int n_rows) {
    // l_i = lambda_i + N - i with 1-based i, here produced 0-based:
    // l[k] = lambda.row(k) + (N - 1 - k).
    std::vector<std::int64_t> l(static_cast<std::size_t>(n_rows));
    for (int k = 0; k < n_rows; ++k)
        l[static_cast<std::size_t>(k)] = lambda.row(k) + (n_rows - 1 - k);
    return l;
}

// Hook lengths of every cell.
std::vector<std::int64_t> hook_lengths(const YoungDiagram& lambda) {
    std::vector<std::int64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    const auto conj = lambda.conjugate_rows();
    for (int i = 0; i < lambda.length(); ++i) {
        for (std::int64_t j = 0; j < lambda.row(i); ++j) {
            hooks.push_back((lambda.row(i) - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1);
        }
    }
    return hooks;
}

void factorize_into(std::int64_t value, std::vector<int>& exponents, int sign) {
    for (std::int64_t p = 2; p * p <= value; ++p) {
        while (value % p == 0) {
            exponents[static_cast<std::size_t>(p)] += sign;
            value /= p;
        }
    }
    if (value > 1) exponents[static_cast<std::size_t>(value)] += sign;
}

// Exact dim via the hook length formula, assembled from the prime
// factorization of n! / prod(hooks) so only small multiplications occur.
BigInt exact_dim(const YoungDiagram& lambda) {
    const std::int64_t n = lambda.size();
    std::int64_t max_hook = 1;
    const auto hooks = hook_lengths(lambda);
    for (auto h : hooks) max_hook = std::max(max_hook, h);
    std::vector<int> exponents(static_cast<std::size_t>(std::max(n, max_hook)) + 1, 0);
    for (std::int64_t k = 2; k <= n; ++k) factorize_into(k, exponents, +1);
    for (auto h : hooks) factorize_into(h, exponents, -1);
    BigInt out{1};
    for (std::size_t p = 2; p < exponents.size(); ++p) {
        for (int e = 0; e < exponents[p]; ++e) out.mul_small(static_cast<std::uint32_t>(p));
        if (exponents[p] < 0)
            throw std::logic_error("hook length formula produced a non-integer");
    }
    return out;
}

BigInt exact_dim_or_throw(const YoungDiagram& lambda) {
    auto d = dim(lambda);
    if (!d.exact) throw std::invalid_argument("diagram too large for exact arithmetic");
    return *std::move(d.exact);
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0)
            throw std::invalid_argument("diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("diagram rows must be weakly decreasing");
        size_ += rows_[i];
    }
}

std::vector<int> YoungDiagram::removable_rows() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i) {
        if (row(i) > row(i + 1)) out.push_back(i);
    }
    return out;
}

std::vector<int> YoungDiagram::addable_rows() const {
    std::vector<int> out;
    out.push_back(0);
    for (int i = 1; i <= length(); ++i) {
        if (row(i - 1) > row(i)) out.push_back(i);
    }
    return out;
}

YoungDiagram YoungDiagram::with_box_removed(int r) const {
    if (r < 0 || r >= length() || row(r) <= row(r + 1))
        throw std::invalid_argument("not a removable corner");
    auto rows = rows_;
    rows[static_cast<std::size_t>(r)] -= 1;
    return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::with_box_added(int r) const {
    if (r < 0 || r > length() || (r > 0 && row(r - 1) <= row(r)))
        throw std::invalid_argument("not an addable corner");
    auto rows = rows_;
    if (r == length()) rows.push_back(1);
    else rows[static_cast<std::size_t>(r)] += 1;
    return YoungDiagram(std::move(rows));
}

std::vector<std::int64_t> YoungDiagram::conjugate_rows() const {
    std::vector<std::int64_t> conj(static_cast<std::size_t>(row(0)), 0);
    for (int i = 0; i < length(); ++i) {
        for (std::int64_t j = 0; j < row(i); ++j) conj[static_cast<std::size_t>(j)] = i + 1;
    }
    return conj;
}

std::string YoungDiagram::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << row(i);
    }
    os << ')';
    return os.str();
}

PointConfiguration point_config(const YoungDiagram& lambda) {
    PointConfiguration out;
    // L(lambda) = {lambda_i - i + 1/2, i = 1, 2, ...}; rows beyond length give
    // Z'_- minus finitely many holes.
    const int len = lambda.length();
    for (int i = 0; i < len; ++i) {
        const std::int64_t coord = lambda.row(i) - (i + 1);  // x = coord + 1/2
        if (coord >= 0) out.particles.push_back(HalfInt::plus_half(coord));
    }
    // Hole at x = -k + 1/2 (k >= 1) iff no row produces that value for i <= len
    // and k <= len (for i > len the value -i + 1/2 is always present).
    for (std::int64_t k = 1; k <= len; ++k) {
        const std::int64_t coord = -k;  // candidate x = -k + 1/2
        bool present = false;
        for (int i = 0; i < len; ++i) {
            if (lambda.row(i) - (i + 1) == coord) { present = true; break; }
        }
        if (!present) out.holes.push_back(HalfInt::plus_half(coord));
    }
    return out;
}

YoungDiagram diagram_of(const PointConfiguration& config) {
    if (config.particles.size() != config.holes.size())
        throw std::invalid_argument("point configuration must have equally many particles and holes");
    for (std::size_t i = 0; i < config.particles.size(); ++i) {
        if (!config.particles[i].positive())
            throw std::invalid_argument("particles must lie in Z'_+");
        if (config.holes[i].positive())
            throw std::invalid_argument("holes must lie in Z'_-");
        if (i > 0 && !(config.particles[i] < config.particles[i - 1]))
            throw std::invalid_argument("particles must be strictly descending");
        if (i > 0 && !(config.holes[i] < config.holes[i - 1]))
            throw std::invalid_argument("holes must be strictly descending");
    }
    // L = particles united with Z'_- minus holes, listed descending as x_1 > x_2 > ...;
    // then lambda_i = x_i + i - 1/2.
    std::vector<std::int64_t> rows;
    std::size_t hole_idx = 0;
    std::int64_t i = 0;  // 1-based row index, incremented as points are consumed
    for (auto p : config.particles) {
        ++i;
        rows.push_back(p.minus_half() + i);  // x + i - 1/2
    }
    // Negative part: walk x = -1/2, -3/2, ... skipping holes until rows hit zero.
    std::int64_t coord = -1;  // x = coord + 1/2
    while (true) {
        const HalfInt x = HalfInt::plus_half(coord);
        if (hole_idx < config.holes.size() && config.holes[hole_idx] == x) {
            ++hole_idx;
        } else {
            ++i;
            const std::int64_t row_len = x.minus_half() + i;
            if (row_len < 0)
                throw std::invalid_argument("point configuration is not a valid diagram encoding");
            if (row_len == 0 && hole_idx == config.holes.size()) break;
            rows.push_back(row_len);
        }
        --coord;
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    YoungDiagram out{std::move(rows)};
    return out;
}

bool contains_point(const YoungDiagram& lambda, HalfInt x) {
    const std::int64_t coord = x.minus_half();  // x = coord + 1/2
    const int len = lambda.length();
    for (int i = 0; i < len; ++i) {
        const std::int64_t diff = lambda.row(i) - (i + 1);
        if (diff == coord) return true;
        if (diff < coord) break;  // values strictly decrease in i
    }
    // Rows beyond the last contribute -i + 1/2 for every i > len.
    return coord < 0 && -coord > len;
}

DimensionValue dim(const YoungDiagram& lambda) {
    DimensionValue out;
    const std::int64_t n = lambda.size();
    const int N = lambda.length();
    const auto l = shifted_rows(lambda, N);
    double log_value = log_factorial(n);
    for (auto li : l) log_value -= log_factorial(li);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j)
            log_value += log_int(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]);
    }
    out.log_value = n == 0 ? 0.0 : log_value;
    if (n <= kExactDimThreshold) out.exact = exact_dim(lambda);
    return out;
}

double log_dim(const YoungDiagram& lambda) { return dim(lambda).log_value; }

namespace {

// p_down / p_up as products of shifted-row ratios; vanishes automatically on
// non-corners. 0-based removable row r:
//   p_down = (l_r / n) * prod_{j != r} (l_r - 1 - l_j) / (l_r - l_j)
//   p_up   = (1 / (l_r + 1)) * prod_{j != r} (l_r + 1 - l_j) / (l_r - l_j)
double down_probability(const YoungDiagram& lambda, int r) {
    const int N = lambda.length();
    const auto l = shifted_rows(lambda, N);
    double p = static_cast<double>(l[static_cast<std::size_t>(r)]) / static_cast<double>(lambda.size());
    for (int j = 0; j < N; ++j) {
        if (j == r) continue;
        p *= static_cast<double>(l[static_cast<std::size_t>(r)] - 1 - l[static_cast<std::size_t>(j)]) /
             static_cast<double>(l[static_cast<std::size_t>(r)] - l[static_cast<std::size_t>(j)]);
    }
    return p;
}

double up_probability(const YoungDiagram& lambda, int r) {
    const int N = lambda.length() + 1;  // room for a new bottom row
    const auto l = shifted_rows(lambda, N);
    double p = 1.0 / static_cast<double>(l[static_cast<std::size_t>(r)] + 1);
    for (int j = 0; j < N; ++j) {
        if (j == r) continue;
        p *= static_cast<double>(l[static_cast<std::size_t>(r)] + 1 - l[static_cast<std::size_t>(j)]) /
             static_cast<double>(l[static_cast<std::size_t>(r)] - l[static_cast<std::size_t>(j)]);
    }
    return p;
}

// Locates the row where two diagrams of adjacent size differ, or -1 if they
// differ in more than one box.
int differing_row(const YoungDiagram& large, const YoungDiagram& small) {
    int row = -1;
    for (int i = 0; i < large.length(); ++i) {
        const std::int64_t diff = large.row(i) - small.row(i);
        if (diff == 0) continue;
        if (diff != 1 || row >= 0) return -1;
        row = i;
    }
    return row;
}

}  // namespace

double p_down(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (mu.size() != lambda.size() - 1)
        throw std::invalid_argument("p_down requires |mu| = |lambda| - 1");
    const int r = differing_row(lambda, mu);
    if (r < 0) return 0.0;
    return down_probability(lambda, r);
}

double p_up(const YoungDiagram& lambda, const YoungDiagram& nu) {
    if (nu.size() != lambda.size() + 1)
        throw std::invalid_argument("p_up requires |nu| = |lambda| + 1");
    const int r = differing_row(nu, lambda);
    if (r < 0) return 0.0;
    return up_probability(lambda, r);
}

Rational p_down_exact(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (mu.size() != lambda.size() - 1)
        throw std::invalid_argument("p_down requires |mu| = |lambda| - 1");
    if (differing_row(lambda, mu) < 0) return Rational{0};
    return Rational(exact_dim_or_throw(mu), exact_dim_or_throw(lambda));
}

Rational p_up_exact(const YoungDiagram& lambda, const YoungDiagram& nu) {
    if (nu.size() != lambda.size() + 1)
        throw std::invalid_argument("p_up requires |nu| = |lambda| + 1");
    if (differing_row(nu, lambda) < 0) return Rational{0};
    BigInt den = exact_dim_or_throw(lambda);
    den.mul_small(static_cast<std::uint32_t>(lambda.size() + 1));
    return Rational(exact_dim_or_throw(nu), std::move(den));
}

std::vector<std::pair<int, double>> down_distribution(const YoungDiagram& lambda) {
    std::vector<std::pair<int, double>> out;
    for (int r : lambda.removable_rows()) out.emplace_back(r, down_probability(lambda, r));
    return out;
}

std::vector<std::pair<int, double>> up_distribution(const YoungDiagram& lambda) {
    std::vector<std::pair<int, double>> out;
    for (int r : lambda.addable_rows()) out.emplace_back(r, up_probability(lambda, r));
    return out;
}

double plancherel_weight(std::int64_t n, const YoungDiagram& lambda) {
    if (lambda.size() != n)
        throw std::invalid_argument("plancherel_weight requires |lambda| = n");
    return std::exp(2.0 * log_dim(lambda) - log_factorial(n));
}

double log_poissonized_weight(double theta, const YoungDiagram& lambda) {
    if (!(theta > 0.0)) throw std::invalid_argument("poissonized weight requires theta > 0");
    const std::int64_t n = lambda.size();
    return -theta + static_cast<double>(n) * std::log(theta) +
           2.0 * (log_dim(lambda) - log_factorial(n));
}

double poissonized_weight(double theta, const YoungDiagram& lambda) {
    return std::exp(log_poissonized_weight(theta, lambda));
}

std::vector<YoungDiagram> enumerate_diagrams(int n, int cap) {
    if (n < 0) throw std::invalid_argument("cannot enumerate diagrams of negative size");
    if (n > cap) throw std::invalid_argument("enumeration size exceeds cap");
    std::vector<YoungDiagram> out;
    std::vector<std::int64_t> rows;
    auto rec = [&](auto&& self, int remaining, std::int64_t max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(rows);
            return;
        }
        for (std::int64_t part = std::min<std::int64_t>(max_part, remaining); part >= 1; --part) {
            rows.push_back(part);
            self(self, remaining - static_cast<int>(part), part);
            rows.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace plancherel
