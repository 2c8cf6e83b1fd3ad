#include "specpos/grassmann.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace specpos {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > ~std::uint64_t{0}) fail(ErrorCode::InvalidInput, "count overflows 64 bits");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > ~std::uint64_t{0} - b) fail(ErrorCode::InvalidInput, "count overflows 64 bits");
    return a + b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t acc = 1;
    for (int i = 0; i < exp; ++i) acc = checked_mul(acc, base);
    return acc;
}

}  // namespace

std::uint64_t gaussian_binomial(int n, int m, std::uint64_t q) {
    if (m < 0 || m > n) return 0;
    // [n, m]_q = [n-1, m-1]_q + q^m [n-1, m]_q, rows computed bottom up.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1;
    for (int nn = 1; nn <= n; ++nn) {
        for (int mm = std::min(m, nn); mm >= 1; --mm) {
            std::uint64_t keep = (mm <= nn - 1) ? checked_mul(checked_pow(q, mm), row[mm]) : 0;
            row[mm] = checked_add(row[mm - 1], keep);
        }
    }
    return row[m];
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: acc * (n-k+i) is divisible by i
        acc = checked_mul(acc, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
    }
    return acc;
}

std::vector<std::vector<int>> k_subsets(int n_max, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n_max + 1) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n_max - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

PluckerPoint plucker(const ProjSubspace& s, int k) {
    if (s.dim() != k - 1)
        fail(ErrorCode::WrongDimension, "subspace has dimension " + std::to_string(s.dim()) +
                                            ", expected " + std::to_string(k - 1));
    const Matrix& b = s.basis();
    const auto subsets = k_subsets(s.ambient(), k);
    std::vector<FieldElement> coords;
    coords.reserve(subsets.size());
    for (const auto& cols : subsets) {
        Matrix minor(s.field(), static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = b.at(i, static_cast<std::size_t>(cols[j]));
        coords.push_back(determinant(minor));
    }
    // Scale so the first nonzero coordinate is 1.
    for (const FieldElement& c : coords) {
        if (c.is_zero()) continue;
        const FieldElement inv = c.inverse();
        for (FieldElement& x : coords) x = x * inv;
        break;
    }
    return PluckerPoint{k, s.ambient(), std::move(coords)};
}

bool check_plucker_relations(const PluckerPoint& p) {
    const int k = p.k, n = p.n;
    if (k <= 1) return true;
    const auto indexed = k_subsets(n, k);
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < indexed.size(); ++i) position[indexed[i]] = i;
    if (p.coords.size() != indexed.size())
        fail(ErrorCode::InvalidInput, "coordinate vector has the wrong length");

    const FieldDescriptor& f = p.field();
    const auto smaller = k_subsets(n, k - 1);
    const auto larger = k_subsets(n, k + 1);
    for (const auto& s : smaller) {
        for (const auto& t : larger) {
            FieldElement sum = FieldElement::zero(f);
            for (std::size_t pos = 0; pos < t.size(); ++pos) {
                const int j = t[pos];
                if (std::binary_search(s.begin(), s.end(), j)) continue;  // repeated index
                std::vector<int> s_plus = s;
                const auto it = std::upper_bound(s_plus.begin(), s_plus.end(), j);
                const int bubbles = static_cast<int>(s_plus.end() - it);
                s_plus.insert(it, j);
                std::vector<int> t_minus = t;
                t_minus.erase(t_minus.begin() + static_cast<std::ptrdiff_t>(pos));
                const bool negative = ((pos + static_cast<std::size_t>(bubbles)) % 2) != 0;
                FieldElement term = p.coords[position.at(s_plus)] * p.coords[position.at(t_minus)];
                sum = negative ? sum - term : sum + term;
            }
            if (!sum.is_zero()) return false;
        }
    }
    return true;
}

bool schubert_sigma1_contains(const ProjSubspace& l, const ProjSubspace& lam) {
    const int n = l.ambient();
    if (lam.ambient() != n || !(l.field() == lam.field()))
        fail(ErrorCode::MixedAmbient, "incidence test across ambient spaces");
    const int k = lam.dim() + 1;
    if (l.dim() != n - k)
        fail(ErrorCode::DimensionMismatch, "incidence divisor needs a plane of complementary dimension");
    const bool hit = meets(l, lam);
#ifndef NDEBUG
    // Second route: the two bases stack to a square matrix, and incidence is
    // exactly the vanishing of its determinant.
    assert(determinant(l.basis().stacked_on(lam.basis())).is_zero() == hit);
#endif
    return hit;
}

SubspaceEnumerator::SubspaceEnumerator(const FieldDescriptor& field, int n, int m)
    : field_(field), n_(n), m_(m) {
    if (!field.is_prime())
        fail(ErrorCode::RationalFieldUnsupported, "subspace enumeration needs a finite field");
    if (m < 0 || m > n) fail(ErrorCode::InvalidInput, "subspace dimension out of range");
    const std::uint64_t q = field.modulus();
    patterns_ = k_subsets(n, m + 1);
    total_ = 0;
    pattern_counts_.reserve(patterns_.size());
    for (const auto& pat : patterns_) {
        int free_cells = 0;
        for (std::size_t i = 0; i < pat.size(); ++i)
            for (int c = pat[i] + 1; c <= n; ++c)
                if (!std::binary_search(pat.begin(), pat.end(), c)) ++free_cells;
        const std::uint64_t cnt = checked_pow(q, free_cells);
        pattern_counts_.push_back(cnt);
        total_ = checked_add(total_, cnt);
    }
}

ProjSubspace SubspaceEnumerator::at(std::uint64_t index) const {
    if (index >= total_) fail(ErrorCode::InvalidInput, "enumeration index out of range");
    std::size_t pi = 0;
    while (index >= pattern_counts_[pi]) index -= pattern_counts_[pi++];

    const auto& pat = patterns_[pi];
    const std::uint64_t q = field_.modulus();
    const std::size_t rows = pat.size();
    Matrix basis(field_, rows, static_cast<std::size_t>(n_) + 1);

    // Free cells in row-major order; the last cell varies fastest.
    std::vector<std::pair<std::size_t, int>> cells;
    for (std::size_t i = 0; i < rows; ++i) {
        basis.at(i, static_cast<std::size_t>(pat[i])) = FieldElement::one(field_);
        for (int c = pat[i] + 1; c <= n_; ++c)
            if (!std::binary_search(pat.begin(), pat.end(), c)) cells.emplace_back(i, c);
    }
    for (std::size_t ci = cells.size(); ci-- > 0;) {
        const std::uint64_t digit = index % q;
        index /= q;
        if (digit != 0)
            basis.at(cells[ci].first, static_cast<std::size_t>(cells[ci].second)) =
                FieldElement::from_integer(field_, static_cast<long long>(digit));
    }
    return ProjSubspace::from_canonical_rows(n_, std::move(basis));
}

std::optional<ProjSubspace> SubspaceEnumerator::next() {
    if (cursor_ >= total_) return std::nullopt;
    return at(cursor_++);
}

std::vector<ProjSubspace> enumerate_subspaces(const FieldDescriptor& field, int n, int m,
                                              std::uint64_t budget) {
    SubspaceEnumerator en(field, n, m);
    if (en.total_count() > budget)
        fail(ErrorCode::BudgetExceeded,
             "enumeration would produce " + std::to_string(en.total_count()) +
                 " subspaces (budget " + std::to_string(budget) + ")",
             en.total_count());
    std::vector<ProjSubspace> out;
    out.reserve(en.total_count());
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

std::vector<ProjSubspace> rational_points(const ProjSubspace& s) {
    if (!s.field().is_prime())
        fail(ErrorCode::RationalFieldUnsupported, "point enumeration needs a finite field");
    std::vector<ProjSubspace> out;
    if (s.is_empty()) return out;
    if (s.dim() == 0) {
        out.push_back(s);
        return out;
    }
    SubspaceEnumerator coeffs(s.field(), s.dim(), 0);
    out.reserve(coeffs.total_count());
    while (auto c = coeffs.next())
        out.push_back(ProjSubspace::point(s.ambient(), mat_mul(c->basis(), s.basis())));
    return out;
}

std::vector<std::vector<int>> monomial_index_tuples(int vars, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Non-decreasing index tuples of length r, lexicographic.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < vars; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

FieldElement evaluate_form(const std::vector<FieldElement>& coefficients, int r,
                           const PluckerPoint& point) {
    const auto tuples = monomial_index_tuples(static_cast<int>(point.coords.size()), r);
    if (tuples.size() != coefficients.size())
        fail(ErrorCode::InvalidInput, "coefficient vector does not match the monomial basis");
    FieldElement acc = FieldElement::zero(point.field());
    for (std::size_t m = 0; m < tuples.size(); ++m) {
        if (coefficients[m].is_zero()) continue;
        FieldElement term = coefficients[m];
        for (int idx : tuples[m]) term = term * point.coords[static_cast<std::size_t>(idx)];
        acc = acc + term;
    }
    return acc;
}

CbReport cayley_bacharach_test(const GrassmannPointSet& gamma, int r, std::uint64_t budget) {
    if (r < 1) fail(ErrorCode::InvalidInput, "degree r must be >= 1");
    const std::size_t d = gamma.points.size();
    const std::uint64_t n_coords = binomial(gamma.n + 1, gamma.k);
    for (const PluckerPoint& p : gamma.points) {
        if (p.k != gamma.k || p.n != gamma.n || !(p.field() == gamma.field) ||
            p.coords.size() != n_coords)
            fail(ErrorCode::InvalidInput, "point set is not homogeneous");
    }
    const std::uint64_t monomials = binomial(static_cast<int>(n_coords) + r - 1, r);
    if (monomials > budget)
        fail(ErrorCode::BudgetExceeded,
             "section space has " + std::to_string(monomials) + " monomials (budget " +
                 std::to_string(budget) + ")",
             monomials);
    if (d == 0) return CbReport{r, true, std::nullopt, std::nullopt};
    const auto tuples = monomial_index_tuples(static_cast<int>(n_coords), r);

    Matrix eval(gamma.field, d, monomials);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < tuples.size(); ++m) {
            FieldElement v = FieldElement::one(gamma.field);
            for (int idx : tuples[m]) v = v * gamma.points[i].coords[static_cast<std::size_t>(idx)];
            eval.at(i, m) = v;
        }

    for (std::size_t j = 0; j < d; ++j) {
        Matrix others(gamma.field, d - 1, monomials);
        std::size_t r_out = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == j) continue;
            for (std::size_t m = 0; m < monomials; ++m) others.at(r_out, m) = eval.at(i, m);
            ++r_out;
        }
        const std::size_t rank_others = rank(others);
        const std::size_t rank_with_j = rank(others.stacked_on(eval.row(j)));
        if (rank_with_j == rank_others) continue;  // functional at j is dependent

        // A form vanishing on the others but not at j certifies the failure.
        const Matrix kernel = nullspace(others);
        for (std::size_t v = 0; v < kernel.rows(); ++v) {
            FieldElement dot = FieldElement::zero(gamma.field);
            for (std::size_t m = 0; m < monomials; ++m)
                dot = dot + kernel.at(v, m) * eval.at(j, m);
            if (!dot.is_zero()) {
                std::vector<FieldElement> form;
                form.reserve(monomials);
                for (std::size_t m = 0; m < monomials; ++m) form.push_back(kernel.at(v, m));
                return CbReport{r, false, j, std::move(form)};
            }
        }
        fail(ErrorCode::InvalidInput, "internal: rank test and kernel scan disagree");
    }
    return CbReport{r, true, std::nullopt, std::nullopt};
}

}  // namespace specpos
