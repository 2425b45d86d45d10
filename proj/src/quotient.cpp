#include "klr/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klr {

GeneratorSubset GeneratorSubset::of(int n, std::vector<int> indices) {
    if (n < 1) throw DomainError("group degree must be at least 1");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int j : indices) {
        if (j < 1 || j > n - 1) {
            throw DomainError("generator index " + std::to_string(j) + " out of range 1.." +
                              std::to_string(n - 1));
        }
    }
    return GeneratorSubset(n, std::move(indices));
}

GeneratorSubset GeneratorSubset::full(int n) {
    std::vector<int> all(n >= 1 ? static_cast<std::size_t>(n - 1) : 0);
    std::iota(all.begin(), all.end(), 1);
    return of(n, std::move(all));
}

bool GeneratorSubset::contains(int j) const {
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

std::string GeneratorSubset::to_string() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t idx = 0; idx < indices_.size(); ++idx) {
        if (idx > 0) out << ",";
        out << indices_[idx];
    }
    out << "}";
    return out.str();
}

ParabolicInterval::ParabolicInterval(int n_, int k_, int i_) : n(n_), k(k_), i(i_) {
    if (n < 2) throw DomainError("interval quotients need degree at least 2");
    if (!(1 <= k && k <= i && i <= n - 1)) {
        throw DomainError("interval requires 1 <= k <= i <= n-1, got k=" + std::to_string(k) +
                          ", i=" + std::to_string(i) + ", n=" + std::to_string(n));
    }
}

GeneratorSubset ParabolicInterval::to_subset() const {
    std::vector<int> kept;
    for (int j = 1; j <= n - 1; ++j) {
        if (j < k || j > i) kept.push_back(j);
    }
    return GeneratorSubset::of(n, std::move(kept));
}

std::string ParabolicInterval::to_string() const {
    return std::to_string(k) + ".." + std::to_string(i);
}

bool is_minimal_rep(const Permutation& u, const GeneratorSubset& J) {
    if (u.degree() != J.degree()) {
        throw DegreeMismatchError("permutation degree " + std::to_string(u.degree()) +
                                  " does not match subset degree " +
                                  std::to_string(J.degree()));
    }
    const Permutation inv = u.inverse();
    for (int j : J.indices()) {
        if (inv.at(j) > inv.at(j + 1)) return false;  // value j appears after j+1
    }
    return true;
}

bool is_minimal_rep(const Permutation& u, const ParabolicInterval& interval) {
    return is_minimal_rep(u, interval.to_subset());
}

std::vector<Permutation> enumerate_quotient(int n, const GeneratorSubset& J) {
    if (n != J.degree()) {
        throw DegreeMismatchError("enumeration degree " + std::to_string(n) +
                                  " does not match subset degree " +
                                  std::to_string(J.degree()));
    }
    if (n > 10) throw DomainError("quotient enumeration is limited to n <= 10");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation u = Permutation::from_one_line(line);
        if (is_minimal_rep(u, J)) out.push_back(std::move(u));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;  // next_permutation visits one-line words in lexicographic order
}

std::vector<Permutation> enumerate_quotient(int n, const ParabolicInterval& interval) {
    return enumerate_quotient(n, interval.to_subset());
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    const int n = u.degree();
    if (n != v.degree()) {
        throw DegreeMismatchError("cannot compare permutations of degrees " +
                                  std::to_string(n) + " and " + std::to_string(v.degree()));
    }
    // cu[j] = |{r <= t : u(r) < j}| maintained incrementally over t.
    std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> cv(static_cast<std::size_t>(n) + 2, 0);
    for (int t = 1; t <= n; ++t) {
        for (int j = u.at(t) + 1; j <= n; ++j) ++cu[static_cast<std::size_t>(j)];
        for (int j = v.at(t) + 1; j <= n; ++j) ++cv[static_cast<std::size_t>(j)];
        for (int j = 2; j <= n; ++j) {
            if (cu[static_cast<std::size_t>(j)] < cv[static_cast<std::size_t>(j)]) return false;
        }
    }
    return true;
}

bool bruhat_leq_quotient(const Permutation& u, const Permutation& v,
                         const ParabolicInterval& interval) {
    const GeneratorSubset J = interval.to_subset();
    if (!is_minimal_rep(u, J)) {
        throw QuotientMembershipError("u = " + u.to_string() +
                                      " is not a minimal representative for J = S \\ {s_" +
                                      interval.to_string() + "}");
    }
    if (!is_minimal_rep(v, J)) {
        throw QuotientMembershipError("v = " + v.to_string() +
                                      " is not a minimal representative for J = S \\ {s_" +
                                      interval.to_string() + "}");
    }
    const int n = interval.n;
    const Permutation pu = u.inverse();
    const Permutation pv = v.inverse();
    // b_stat(u, v, t, j) = #{positions of values <= t that are < j}, u minus v.
    // Incremental over the value threshold t, checking only t in k..i.
    std::vector<int> mu(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> mv(static_cast<std::size_t>(n) + 2, 0);
    for (int t = 1; t <= interval.i; ++t) {
        for (int j = pu.at(t) + 1; j <= n; ++j) ++mu[static_cast<std::size_t>(j)];
        for (int j = pv.at(t) + 1; j <= n; ++j) ++mv[static_cast<std::size_t>(j)];
        if (t < interval.k) continue;
        for (int j = 2; j <= n; ++j) {
            if (mu[static_cast<std::size_t>(j)] < mv[static_cast<std::size_t>(j)]) return false;
        }
    }
    return true;
}

long long interval_quotient_size(const ParabolicInterval& interval) {
    auto factorial = [](int m) {
        long long f = 1;
        for (int x = 2; x <= m; ++x) f *= x;
        return f;
    };
    return factorial(interval.n) / (factorial(interval.k) * factorial(interval.n - interval.i));
}

}  // namespace klr
