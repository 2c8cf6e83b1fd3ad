#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specpos/subspace.hpp"

namespace specpos {

/// Default ceiling for enumeration-style operations (subspaces, monomials).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Number of m-dimensional linear subspaces of an n-dimensional vector space
/// over GF(q). Throws InvalidInput if the exact count exceeds 2^64 - 1.
std::uint64_t gaussian_binomial(int n, int m, std::uint64_t q);

std::uint64_t binomial(int n, int k);

/// Sorted k-subsets of {0, ..., n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n_max, int k);

/// A point of the Grassmannian of (k-1)-planes in P^n, as its vector of
/// Pluecker coordinates: the k x k minors of a spanning basis, indexed by the
/// sorted k-subsets of {0..n} in lexicographic order and scaled so the first
/// nonzero coordinate is 1.
struct PluckerPoint {
    int k;
    int n;
    std::vector<FieldElement> coords;

    const FieldDescriptor& field() const { return coords.front().field(); }
    bool operator==(const PluckerPoint& rhs) const = default;
};

/// Pluecker embedding of a (k-1)-dimensional subspace. WrongDimension if
/// dim(s) != k-1. Canonical on canonical bases: distinct subspaces give
/// distinct normalized coordinate vectors.
PluckerPoint plucker(const ProjSubspace& s, int k);

/// True iff every quadratic exchange relation among the coordinates
/// vanishes, i.e. the vector lies on the Grassmannian. Validates external
/// inputs that merely claim to be Pluecker vectors.
bool check_plucker_relations(const PluckerPoint& p);

/// Membership of [lam] in the incidence divisor of l: true iff lam meets l.
/// Requires dim(l) = n-k and dim(lam) = k-1; with assertions enabled the
/// rank route is cross-checked against the vanishing of the stacked
/// (n+1)x(n+1) determinant.
bool schubert_sigma1_contains(const ProjSubspace& l, const ProjSubspace& lam);

/// Streams every m-dimensional subspace of P^n over a prime field exactly
/// once, as canonical RREF bases, ordered by pivot-column pattern and then by
/// the free entries (row-major, counting up from all zeros). The stream is
/// chunkable: [0, total_count()) splits into independent ranges via at().
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(const FieldDescriptor& field, int n, int m);

    std::uint64_t total_count() const { return total_; }

    /// Subspace at a given position of the stream (unranking).
    ProjSubspace at(std::uint64_t index) const;

    std::optional<ProjSubspace> next();
    void reset() { cursor_ = 0; }

  private:
    FieldDescriptor field_;
    int n_;
    int m_;
    std::vector<std::vector<int>> patterns_;
    std::vector<std::uint64_t> pattern_counts_;
    std::uint64_t total_;
    std::uint64_t cursor_ = 0;
};

/// Materialized enumeration; BudgetExceeded (carrying the exact count) if
/// the Gaussian-binomial count is over budget.
std::vector<ProjSubspace> enumerate_subspaces(const FieldDescriptor& field, int n, int m,
                                              std::uint64_t budget = kDefaultBudget);

/// The rational points of a subspace over a prime field, canonical order.
std::vector<ProjSubspace> rational_points(const ProjSubspace& s);

struct GrassmannPointSet {
    int k;
    int n;
    FieldDescriptor field;
    std::vector<PluckerPoint> points;  // duplicates allowed
};

struct CbReport {
    int r;
    bool holds;
    /// Present iff !holds: the first index whose point is missed.
    std::optional<std::size_t> failing_index;
    /// Present iff !holds: coefficients of a degree-r form in the Pluecker
    /// coordinates vanishing on every other point but not at failing_index.
    /// Indexed by the degree-r monomials in "non-decreasing index tuple"
    /// lexicographic order.
    std::optional<std::vector<FieldElement>> separating_form;
};

/// Degree-r monomial exponent tuples over `vars` variables: each entry is a
/// non-decreasing tuple of variable indices of length r, lex order.
std::vector<std::vector<int>> monomial_index_tuples(int vars, int r);

/// Decides whether every degree-r hypersurface section through all but one
/// point of the set also passes through the remaining point. The section
/// space is all degree-r polynomials in the ambient Pluecker coordinates.
CbReport cayley_bacharach_test(const GrassmannPointSet& gamma, int r,
                               std::uint64_t budget = kDefaultBudget);

/// Evaluates a separating form (as returned in CbReport) at a point.
FieldElement evaluate_form(const std::vector<FieldElement>& coefficients, int r,
                           const PluckerPoint& point);

}  // namespace specpos
