#pragma once

#include <span>
#include <vector>

#include "specpos/matrix.hpp"

namespace specpos {

/// A linear subspace of P^n, stored as the unique RREF spanning basis of its
/// affine cone: dim+1 independent rows with n+1 columns. dim = -1 encodes the
/// empty subspace (0 rows). Because the stored basis is canonical, subspace
/// equality is entrywise basis equality.
class ProjSubspace {
  public:
    static ProjSubspace empty(const FieldDescriptor& field, int ambient_n);

    /// Canonicalizes arbitrary spanning rows (rref, drop zero rows).
    static ProjSubspace from_spanning_rows(int ambient_n, const Matrix& rows);

    /// Trusts the caller that `rows` is already a zero-row-free RREF; used by
    /// enumeration, which emits canonical bases by construction.
    static ProjSubspace from_canonical_rows(int ambient_n, Matrix rows);

    /// Single projective point from a coordinate row; the row must be nonzero.
    static ProjSubspace point(int ambient_n, const Matrix& coords);

    int ambient() const { return ambient_n_; }
    int dim() const { return static_cast<int>(basis_.rows()) - 1; }
    bool is_empty() const { return basis_.rows() == 0; }
    const Matrix& basis() const { return basis_; }
    const FieldDescriptor& field() const { return basis_.field(); }

    bool contains(const ProjSubspace& other) const;

    bool operator==(const ProjSubspace& rhs) const {
        return ambient_n_ == rhs.ambient_n_ && basis_ == rhs.basis_;
    }
    bool operator!=(const ProjSubspace& rhs) const { return !(*this == rhs); }

  private:
    ProjSubspace(int ambient_n, Matrix basis) : ambient_n_(ambient_n), basis_(std::move(basis)) {}

    int ambient_n_;
    Matrix basis_;
};

/// Smallest subspace containing every part; empty input gives the empty
/// subspace (the ambient/field must then be supplied by the caller).
ProjSubspace span_of(std::span<const ProjSubspace> parts);
ProjSubspace span_of(const ProjSubspace& a, const ProjSubspace& b);
ProjSubspace span_all(const FieldDescriptor& field, int ambient_n,
                      std::span<const ProjSubspace> parts);

/// The meet, computed through the kernels of the two dual systems (not via
/// the modular law, which stays available as an independent cross-check).
ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b);

/// True iff the intersection is nonempty. Equivalent to
/// intersect(a, b).dim() >= 0 but decided by a single rank computation on the
/// stacked bases.
bool meets(const ProjSubspace& a, const ProjSubspace& b);

/// Dimension of the projection target P^(n - dim(center) - 1).
int projection_target_dim(const ProjSubspace& center);

/// Linear projection away from `center`, in fixed coordinates: the center's
/// RREF basis is extended by the standard unit vectors at its non-pivot
/// columns (in increasing column order), and the image keeps exactly those
/// unit-vector coordinates. Requires x not contained in the center.
ProjSubspace project_from(const ProjSubspace& center, const ProjSubspace& x);

/// Closure of the preimage of r under the projection from `center`: the span
/// of the center and the lift of r back into the ambient coordinates. The
/// empty r maps to the center itself.
ProjSubspace preimage_closure(const ProjSubspace& center, const ProjSubspace& r);

}  // namespace specpos
