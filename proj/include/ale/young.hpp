#pragma once

/// @file young.hpp
/// @brief Young tableaux (partitions), arm/leg statistics, and enumeration of
/// tableau tuples labelling torus fixed points.
///
/// Box coordinate convention: s = (i, j), both 1-based, where i indexes the
/// COLUMN and j the position along it, lambda_i is the i-th column length and
/// lambda'_j the j-th row length. So A(s) = lambda_i - j and
/// L(s) = lambda'_j - i. Most tableau libraries use the transposed
/// convention; all factor formulas here assume this one.

#include <vector>

#include "ale/errors.hpp"

namespace ale {

class Partition {
public:
    Partition() = default; // empty partition
    explicit Partition(std::vector<int> columnLengths);

    const std::vector<int>& column_lengths() const { return cols_; }
    bool empty() const { return cols_.empty(); }
    int weight() const { return weight_; }
    int num_columns() const { return static_cast<int>(cols_.size()); }

    // lambda_i (1-based); 0 outside.
    int col(int i) const { return (i >= 1 && i <= num_columns()) ? cols_[i - 1] : 0; }
    // lambda'_j (1-based): number of columns of length >= j.
    int row(int j) const;

    bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= col(i); }
    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.cols_ == b.cols_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.cols_ < b.cols_; }

    std::string str() const;

private:
    std::vector<int> cols_;
    int weight_ = 0;
};

// Arm/leg of box s measured in Y itself; s must lie in Y.
int arm(const Partition& Y, int i, int j);
int leg(const Partition& Y, int i, int j);

// Foreign values: s = (i,j) need not lie in the measuring tableau, so these
// may be negative (and are used verbatim in the vertex factors).
int arm_in(const Partition& measuring, int i, int j);
int leg_in(const Partition& measuring, int i, int j);

struct BoxStats {
    int arm;        // A_Y(s), own
    int leg;        // L_{Yother}(s), possibly foreign and negative
    int armColength; // A'(s) = j - 1
    int legColength; // L'(s) = i - 1
};

// Own arm in Y (s must be in Y), leg measured in Yother.
BoxStats box_stats(const Partition& Y, const Partition& Yother, int i, int j);

// All partitions of n, each once, ordered lexicographically on column lengths.
std::vector<Partition> enumerate_partitions(int n);

// A tuple of k tableaux (one per fixed point of X_k).
using YoungTuple = std::vector<Partition>;

int tuple_weight(const YoungTuple& t);

// All k-tuples with total weight n, deterministic order.
std::vector<YoungTuple> enumerate_young_tuples(int k, int n);

// Number of k-tuples of total weight n, via the product generating function
// prod_m (1 - q^m)^{-k}; independent of the enumeration path.
std::vector<long long> tuple_counts(int k, int maxN);

} // namespace ale
