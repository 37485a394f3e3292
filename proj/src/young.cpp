#include "ale/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ale {

Partition::Partition(std::vector<int> columnLengths) : cols_(std::move(columnLengths)) {
    for (size_t i = 0; i < cols_.size(); ++i) {
        if (cols_[i] < 1) throw Error("partition parts must be >= 1");
        if (i > 0 && cols_[i] > cols_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(cols_.begin(), cols_.end(), 0);
}

int Partition::row(int j) const {
    if (j < 1) return 0;
    int count = 0;
    for (int c : cols_) {
        if (c >= j) ++count;
        else break;
    }
    return count;
}

Partition Partition::conjugate() const {
    if (cols_.empty()) return Partition();
    std::vector<int> rows(cols_[0]);
    for (int j = 1; j <= cols_[0]; ++j) rows[j - 1] = row(j);
    return Partition(std::move(rows));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
    os << ")";
    return os.str();
}

int arm(const Partition& Y, int i, int j) {
    if (!Y.contains(i, j)) throw BoxOutsideTableau("arm at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return Y.col(i) - j;
}

int leg(const Partition& Y, int i, int j) {
    if (!Y.contains(i, j)) throw BoxOutsideTableau("leg at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return Y.row(j) - i;
}

int arm_in(const Partition& measuring, int i, int j) { return measuring.col(i) - j; }

int leg_in(const Partition& measuring, int i, int j) { return measuring.row(j) - i; }

BoxStats box_stats(const Partition& Y, const Partition& Yother, int i, int j) {
    return BoxStats{arm(Y, i, j), leg_in(Yother, i, j), j - 1, i - 1};
}

namespace {

void enum_rec(int remaining, int maxPart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        acc.push_back(p);
        enum_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enum_rec(n, n == 0 ? 1 : n, acc, out);
    // Recursion emits largest-first; lexicographic order on column vectors.
    std::sort(out.begin(), out.end());
    return out;
}

int tuple_weight(const YoungTuple& t) {
    int w = 0;
    for (const auto& p : t) w += p.weight();
    return w;
}

std::vector<YoungTuple> enumerate_young_tuples(int k, int n) {
    if (k < 1) throw Error("enumerate_young_tuples: k < 1");
    if (n < 0) throw Error("enumerate_young_tuples: n < 0");
    std::vector<YoungTuple> out;
    YoungTuple acc;
    // Compositions of n into k parts, each part expanded into its partitions.
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == k - 1) {
            for (const auto& p : enumerate_partitions(remaining)) {
                acc.push_back(p);
                out.push_back(acc);
                acc.pop_back();
            }
            return;
        }
        for (int m = 0; m <= remaining; ++m)
            for (const auto& p : enumerate_partitions(m)) {
                acc.push_back(p);
                rec(slot + 1, remaining - m);
                acc.pop_back();
            }
    };
    rec(0, n);
    return out;
}

std::vector<long long> tuple_counts(int k, int maxN) {
    // Coefficients of prod_{m>=1} (1-q^m)^{-k} up to q^maxN.
    std::vector<long long> c(maxN + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= maxN; ++m)
        for (int copy = 0; copy < k; ++copy)
            for (int n = m; n <= maxN; ++n) c[n] += c[n - m];
    return c;
}

} // namespace ale
