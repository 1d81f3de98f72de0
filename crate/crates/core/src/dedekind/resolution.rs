//! Hom, Ext¹ and Tor₁ of finitely presented ℤ-modules computed directly
//! from presentation matrices, without using invariant factors.

use num::{Integer, Zero};

use super::module::{classify, FgZModule};
use crate::exactlin::{integer_kernel, lattice_basis, snf, IntMatrix};

/// `I_k ⊗ B`: relations of `N^k` when `N = coker B`.
fn power_relations(b: &IntMatrix, k: usize) -> IntMatrix {
    IntMatrix::identity(k).kron(b)
}

/// Coordinates of the columns of `vectors` in the lattice basis `basis`
/// (full column rank, every vector in its span).
fn lattice_coords(basis: &IntMatrix, vectors: &IntMatrix) -> IntMatrix {
    let s = snf(basis);
    let r = basis.cols();
    let uv = s.u.mul(vectors);
    let scaled = IntMatrix::from_fn(r, vectors.cols(), |i, j| {
        let (q, rem) = uv.get(i, j).div_rem(s.d.get(i, i));
        assert!(rem.is_zero(), "vector outside the lattice");
        q
    });
    s.v.mul(&scaled)
}

/// Kernel and cokernel modules of the map `N^k → N^l` induced by the
/// integer matrix `c` (l × k), `N = coker b`.
fn induced_kernel_cokernel(c: &IntMatrix, b: &IntMatrix) -> (FgZModule, FgZModule) {
    let h = b.rows();
    let (l, k) = (c.rows(), c.cols());
    let cx = c.kron(&IntMatrix::identity(h));
    let rel_k = power_relations(b, k);
    let rel_l = power_relations(b, l);
    let neg_rel_l = IntMatrix::from_fn(rel_l.rows(), rel_l.cols(), |i, j| -rel_l.get(i, j));

    // preimage of im(rel_l): x with cx·x + rel_l·y = 0 for some y
    let joint = integer_kernel(&cx.hstack(&neg_rel_l));
    let top: Vec<usize> = (0..k * h).collect();
    let preimage = lattice_basis(&joint.select_rows(&top).hstack(&rel_k));
    let kernel = classify(&lattice_coords(&preimage, &lattice_basis(&rel_k)));

    let cokernel = classify(&cx.hstack(&rel_l));
    (kernel, cokernel)
}

// A presentation matrix is first replaced by a basis of its column span, so
// that it becomes injective and gives a projective resolution.

/// `Hom(M, N)` for `M = coker a`, `N = coker b`.
pub fn hom_via_resolution(a: &IntMatrix, b: &IntMatrix) -> FgZModule {
    induced_kernel_cokernel(&lattice_basis(a).transpose(), b).0
}

/// `Ext¹(M, N)` for `M = coker a`, `N = coker b`.
pub fn ext_via_resolution(a: &IntMatrix, b: &IntMatrix) -> FgZModule {
    induced_kernel_cokernel(&lattice_basis(a).transpose(), b).1
}

/// `Tor₁(M, N)` for `M = coker a`, `N = coker b`.
pub fn tor_via_resolution(a: &IntMatrix, b: &IntMatrix) -> FgZModule {
    induced_kernel_cokernel(&lattice_basis(a), b).0
}
