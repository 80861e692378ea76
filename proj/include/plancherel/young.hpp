#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plancherel/bigint.hpp"
#include "plancherel/halfint.hpp"

namespace plancherel {

// Young diagram / partition: weakly decreasing positive row lengths.
// Canonical form stores no trailing zeros; the empty diagram has no rows.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<std::int64_t> rows);  // validates, strips zeros

    std::int64_t size() const { return size_; }
    int length() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    std::int64_t row(int i) const {  // 0-based; 0 beyond the last row
        return i < length() ? rows_[static_cast<std::size_t>(i)] : 0;
    }
    std::span<const std::int64_t> rows() const { return rows_; }

    // Rows at which a box can be removed/added, top to bottom (0-based; an
    // addable row may equal length(), meaning a new row of length 1).
    std::vector<int> removable_rows() const;
    std::vector<int> addable_rows() const;
    YoungDiagram with_box_removed(int row) const;
    YoungDiagram with_box_added(int row) const;
    std::vector<std::int64_t> conjugate_rows() const;

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ < b.rows_;
    }
    std::string str() const;  // "(3,1,1)" / "()" for logs and diagnostics

private:
    std::vector<std::int64_t> rows_;
    std::int64_t size_ = 0;
};

// Particle picture: the subset L(lambda) = {lambda_i - i + 1/2} of Z', stored
// as its finite symmetric difference with Z'_- (particles above 0, holes
// below). Both lists are descending and of equal cardinality.
struct PointConfiguration {
    std::vector<HalfInt> particles;
    std::vector<HalfInt> holes;
};

PointConfiguration point_config(const YoungDiagram& lambda);
YoungDiagram diagram_of(const PointConfiguration& config);  // validates invariants
bool contains_point(const YoungDiagram& lambda, HalfInt x);  // x in L(lambda)

// dim(lambda) = number of standard tableaux; exact below the threshold where
// arbitrary-precision integers stay cheap, always in log space.
inline constexpr std::int64_t kExactDimThreshold = 40;

struct DimensionValue {
    double log_value = 0.0;
    std::optional<BigInt> exact;
};

DimensionValue dim(const YoungDiagram& lambda);
double log_dim(const YoungDiagram& lambda);

// Transition probabilities of the up/down chains. Zero when the diagrams are
// not adjacent; throws when sizes do not differ by exactly one.
double p_down(const YoungDiagram& lambda, const YoungDiagram& mu);
double p_up(const YoungDiagram& lambda, const YoungDiagram& nu);
Rational p_down_exact(const YoungDiagram& lambda, const YoungDiagram& mu);
Rational p_up_exact(const YoungDiagram& lambda, const YoungDiagram& nu);

// Full one-step distributions, corners enumerated top row to bottom.
std::vector<std::pair<int, double>> down_distribution(const YoungDiagram& lambda);
std::vector<std::pair<int, double>> up_distribution(const YoungDiagram& lambda);

double plancherel_weight(std::int64_t n, const YoungDiagram& lambda);
double poissonized_weight(double theta, const YoungDiagram& lambda);
double log_poissonized_weight(double theta, const YoungDiagram& lambda);

// All partitions of n, first row descending; cap guards accidental blowups.
std::vector<YoungDiagram> enumerate_diagrams(int n, int cap = 30);

}  // namespace plancherel

template <>
struct std::hash<plancherel::YoungDiagram> {
    std::size_t operator()(const plancherel::YoungDiagram& d) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto r : d.rows()) h = h * 1000003u + static_cast<std::size_t>(r);
        return h;
    }
};
