#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "liquidpower/bignum.hpp"

namespace liquidpower::detail {

/// In-forest probability tables on a complete digraph of n voters:
/// P(m, p) is the probability that m given voters delegate among themselves
/// forming an in-forest whose roots each take an action of probability p.
///
///   P(m, p) = sum_{m1=0}^{m-1} C(m-1, m1) P(m1, pd/(n-1)) P(m2, p)
///             * (p + pd * m2 / (n-1)),  m2 = m - 1 - m1,
///
/// with P(0, p) = 1, P(1, p) = p. The inner table at p = pd/(n-1) is
/// self-referential and is built first; outer tables reuse it.
template <typename T>
class ForestTable {
public:
    ForestTable(int n, T pd) : n_(n), pd_(std::move(pd)) {
        if (n_ < 1) throw std::invalid_argument("ForestTable: need at least one voter");
        inner_.assign(n_, T(0));
        inner_[0] = T(1);
        if (n_ >= 2) {
            const T inner_p = pd_ / (n_ - 1);
            fill(inner_, inner_p);
        }
    }

    int voters() const { return n_; }
    const T& pd() const { return pd_; }

    /// P(m, pd/(n-1)) for m = 0..n-1: forests whose roots delegate to a
    /// fixed voter outside the set.
    const std::vector<T>& follower_table() const { return inner_; }

    /// P(m, p) for m = 0..n-1.
    std::vector<T> table(const T& p) const {
        std::vector<T> out(n_, T(0));
        out[0] = T(1);
        if (n_ >= 2) fill(out, p);
        return out;
    }

private:
    void fill(std::vector<T>& out, const T& p) const {
        const T step = pd_ / (n_ - 1);
        out[1] = p;
        for (int m = 2; m < n_; ++m) {
            T total(0);
            for (int m1 = 0; m1 < m; ++m1) {
                const int m2 = m - 1 - m1;
                total += binom(m - 1, m1) * inner_[m1] * out[m2] * (p + step * m2);
            }
            out[m] = total;
        }
    }

    T binom(int m, int k) const {
        if (static_cast<int>(binom_rows_.size()) <= m) {
            auto& rows = const_cast<std::vector<std::vector<T>>&>(binom_rows_);
            if (rows.empty()) rows.push_back({T(1)});
            while (static_cast<int>(rows.size()) <= m) {
                const auto& prev = rows.back();
                std::vector<T> row(prev.size() + 1, T(1));
                for (std::size_t j = 1; j + 1 < row.size(); ++j)
                    row[j] = prev[j - 1] + prev[j];
                rows.push_back(std::move(row));
            }
        }
        return binom_rows_[m][k];
    }

    int n_;
    T pd_;
    std::vector<T> inner_;
    std::vector<std::vector<T>> binom_rows_;
};

/// Probability that n0 voters all delegate within their own group, trapping
/// every chain in a cycle: (pd * (n0 - 1) / (n - 1))^n0; empty product for
/// n0 = 0, and 0 for n0 = 1 (one voter cannot close a cycle).
template <typename T>
T cycle_group_probability(int n0, int n, const T& pd) {
    if (n0 == 0) return T(1);
    T base = pd * (n0 - 1) / (n - 1);
    T result(1);
    for (int i = 0; i < n0; ++i) result *= base;
    return result;
}

} // namespace liquidpower::detail
