#include "specpos/subspace.hpp"

namespace specpos {

namespace {

void require_same_ambient(const ProjSubspace& a, const ProjSubspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        fail(ErrorCode::MixedAmbient, "subspaces live in different ambient spaces or fields");
}

}  // namespace

ProjSubspace ProjSubspace::empty(const FieldDescriptor& field, int ambient_n) {
    if (ambient_n < 1) fail(ErrorCode::InvalidInput, "ambient dimension must be >= 1");
    return ProjSubspace(ambient_n, Matrix(field, 0, static_cast<std::size_t>(ambient_n) + 1));
}

ProjSubspace ProjSubspace::from_spanning_rows(int ambient_n, const Matrix& rows) {
    if (ambient_n < 1) fail(ErrorCode::InvalidInput, "ambient dimension must be >= 1");
    if (rows.cols() != static_cast<std::size_t>(ambient_n) + 1)
        fail(ErrorCode::InvalidInput, "spanning rows need ambient_n + 1 columns");
    RrefResult r = rref(rows);
    Matrix basis(rows.field(), r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.matrix.at(i, j);
    return ProjSubspace(ambient_n, std::move(basis));
}

ProjSubspace ProjSubspace::from_canonical_rows(int ambient_n, Matrix rows) {
    if (rows.cols() != static_cast<std::size_t>(ambient_n) + 1)
        fail(ErrorCode::InvalidInput, "canonical rows need ambient_n + 1 columns");
    return ProjSubspace(ambient_n, std::move(rows));
}

ProjSubspace ProjSubspace::point(int ambient_n, const Matrix& coords) {
    if (coords.rows() != 1) fail(ErrorCode::InvalidInput, "a point needs exactly one coordinate row");
    ProjSubspace p = from_spanning_rows(ambient_n, coords);
    if (p.dim() != 0) fail(ErrorCode::InvalidInput, "zero coordinate vector does not define a point");
    return p;
}

bool ProjSubspace::contains(const ProjSubspace& other) const {
    require_same_ambient(*this, other);
    if (other.is_empty()) return true;
    if (other.dim() > dim()) return false;
    return rank(basis_.stacked_on(other.basis_)) == basis_.rows();
}

ProjSubspace span_of(std::span<const ProjSubspace> parts) {
    if (parts.empty()) fail(ErrorCode::InvalidInput, "span of an empty list needs an explicit ambient");
    return span_all(parts.front().field(), parts.front().ambient(), parts);
}

ProjSubspace span_all(const FieldDescriptor& field, int ambient_n,
                      std::span<const ProjSubspace> parts) {
    std::size_t total_rows = 0;
    for (const ProjSubspace& p : parts) {
        if (p.ambient() != ambient_n || !(p.field() == field))
            fail(ErrorCode::MixedAmbient, "span over mismatched ambient spaces");
        total_rows += p.basis().rows();
    }
    Matrix stacked(field, total_rows, static_cast<std::size_t>(ambient_n) + 1);
    std::size_t r = 0;
    for (const ProjSubspace& p : parts)
        for (std::size_t i = 0; i < p.basis().rows(); ++i, ++r)
            for (std::size_t j = 0; j < stacked.cols(); ++j) stacked.at(r, j) = p.basis().at(i, j);
    return ProjSubspace::from_spanning_rows(ambient_n, stacked);
}

ProjSubspace span_of(const ProjSubspace& a, const ProjSubspace& b) {
    const ProjSubspace parts[] = {a, b};
    return span_of(std::span<const ProjSubspace>(parts, 2));
}

ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b) {
    require_same_ambient(a, b);
    const Matrix dual_a = nullspace(a.basis());
    const Matrix dual_b = nullspace(b.basis());
    return ProjSubspace::from_spanning_rows(a.ambient(), nullspace(dual_a.stacked_on(dual_b)));
}

bool meets(const ProjSubspace& a, const ProjSubspace& b) {
    require_same_ambient(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    // dim(a meet b) >= 0  <=>  the stacked bases fail to have full row rank.
    return rows_dependent(a.basis().stacked_on(b.basis()));
}

int projection_target_dim(const ProjSubspace& center) {
    return center.ambient() - center.dim() - 1;
}

namespace {

/// Columns of the ambient space that are not pivots of the center's basis,
/// ascending; these carry the coordinates of the projection target.
std::vector<std::size_t> non_pivot_columns(const ProjSubspace& center) {
    const Matrix& cb = center.basis();
    std::vector<bool> is_pivot(cb.cols(), false);
    for (std::size_t i = 0; i < cb.rows(); ++i) {
        std::size_t c = 0;
        while (c < cb.cols() && cb.at(i, c).is_zero()) ++c;
        is_pivot[c] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cb.cols(); ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

}  // namespace

ProjSubspace project_from(const ProjSubspace& center, const ProjSubspace& x) {
    require_same_ambient(center, x);
    if (center.is_empty()) fail(ErrorCode::InvalidInput, "projection center must be nonempty");
    if (center.contains(x))
        fail(ErrorCode::CenterContainsX, "projection undefined: subspace lies inside the center");

    const Matrix& cb = center.basis();
    const std::vector<std::size_t> keep = non_pivot_columns(center);
    const int target_n = projection_target_dim(center);

    // Reduce each basis row of x by the center's rows, then read off the
    // non-pivot coordinates.
    Matrix images(x.field(), x.basis().rows(), keep.size());
    for (std::size_t i = 0; i < x.basis().rows(); ++i) {
        Matrix v = x.basis().row(i);
        for (std::size_t ci = 0; ci < cb.rows(); ++ci) {
            std::size_t p = 0;
            while (p < cb.cols() && cb.at(ci, p).is_zero()) ++p;
            const FieldElement coeff = v.at(0, p);
            if (coeff.is_zero()) continue;
            for (std::size_t j = 0; j < cb.cols(); ++j) v.at(0, j) = v.at(0, j) - coeff * cb.at(ci, j);
        }
        for (std::size_t j = 0; j < keep.size(); ++j) images.at(i, j) = v.at(0, keep[j]);
    }
    return ProjSubspace::from_spanning_rows(target_n, images);
}

ProjSubspace preimage_closure(const ProjSubspace& center, const ProjSubspace& r) {
    if (center.is_empty()) fail(ErrorCode::InvalidInput, "projection center must be nonempty");
    if (!(center.field() == r.field()))
        fail(ErrorCode::AmbientMismatch, "preimage over a different field");
    if (r.ambient() != projection_target_dim(center))
        fail(ErrorCode::AmbientMismatch, "subspace does not live in the projection target of this center");
    if (r.is_empty()) return center;

    const std::vector<std::size_t> keep = non_pivot_columns(center);
    Matrix lifted(center.field(), center.basis().rows() + r.basis().rows(), center.basis().cols());
    for (std::size_t i = 0; i < center.basis().rows(); ++i)
        for (std::size_t j = 0; j < center.basis().cols(); ++j)
            lifted.at(i, j) = center.basis().at(i, j);
    for (std::size_t i = 0; i < r.basis().rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            lifted.at(center.basis().rows() + i, keep[j]) = r.basis().at(i, j);
    return ProjSubspace::from_spanning_rows(center.ambient(), lifted);
}

}  // namespace specpos
