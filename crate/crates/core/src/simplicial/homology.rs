//! Homology of the normalized chain complex on nondegenerate simplices.

use crate::arith::{AbGroup, IntMat, Subquotient};

use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// Coefficient choice for the homology engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    /// ℤ/p for a prime (any modulus ≥ 2 is accepted; the engine is exact).
    Mod(i128),
}

/// A homology group together with its reliability tag: the top degree of a
/// D-truncated complex can be corrupted by missing (D+1)-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub group: AbGroup,
    pub reliable: bool,
}

/// Boundary matrix ∂ₙ : Cₙ -> Cₙ₋₁ of the normalized chain complex:
/// degenerate faces contribute zero.
pub fn boundary_matrix(x: &TruncatedSSet, n: usize) -> IntMat {
    let rows = if n == 0 { 0 } else { x.cell_count(n - 1) };
    let cols = x.cell_count(n);
    let mut m = IntMat::zero(rows, cols);
    if n == 0 {
        return m;
    }
    for idx in 0..cols {
        let r = SimplexRef::nondegenerate(CellId { dim: n, idx });
        for i in 0..=n {
            let f = x.face(&r, i);
            if f.is_nondegenerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m[(f.target.idx, idx)] += sign;
            }
        }
    }
    m
}

/// Hₙ(X; coefficients), with a reliability tag (degrees ≥ dim bound depend
/// on truncated data).
pub fn homology(x: &TruncatedSSet, n: usize, coefficients: Coefficients) -> HomologyResult {
    let reliable = n < x.dim_bound();
    let modulus = match coefficients {
        Coefficients::Integers => 0,
        Coefficients::Mod(p) => {
            assert!(p >= 2);
            p
        }
    };
    let c_n = x.cell_count(n);
    let ambient = vec![modulus; c_n];
    let d_n = boundary_matrix(x, n);
    let d_next = if n + 1 <= x.dim_bound() {
        boundary_matrix(x, n + 1)
    } else {
        IntMat::zero(c_n, 0)
    };
    let lower_moduli = vec![modulus; if n == 0 { 0 } else { x.cell_count(n - 1) }];
    let q = Subquotient::new(ambient, Some((&d_n, &lower_moduli)), &d_next);
    HomologyResult {
        group: q.group().clone(),
        reliable,
    }
}

/// All homology groups in degrees `0..=max_degree`.
pub fn homology_range(
    x: &TruncatedSSet,
    max_degree: usize,
    coefficients: Coefficients,
) -> Vec<HomologyResult> {
    (0..=max_degree)
        .map(|n| homology(x, n, coefficients))
        .collect()
}

/// The subquotient presentation of Hₙ(X; ℤ), for induced-map computations.
pub fn homology_subquotient(x: &TruncatedSSet, n: usize) -> Subquotient {
    let c_n = x.cell_count(n);
    let d_n = boundary_matrix(x, n);
    let d_next = if n + 1 <= x.dim_bound() {
        boundary_matrix(x, n + 1)
    } else {
        IntMat::zero(c_n, 0)
    };
    let lower = vec![0i128; if n == 0 { 0 } else { x.cell_count(n - 1) }];
    Subquotient::new(vec![0; c_n], Some((&d_n, &lower)), &d_next)
}

/// The chain-level matrix of a simplicial map in degree `n` (normalized:
/// cells mapping to degenerate simplices go to zero).
pub fn chain_map_matrix(f: &super::map::SSetMap, n: usize) -> IntMat {
    let rows = f.target.cell_count(n);
    let cols = f.source.cell_count(n);
    let mut m = IntMat::zero(rows, cols);
    for idx in 0..cols {
        let img = f.image_of_cell(CellId { dim: n, idx });
        if img.is_nondegenerate() {
            m[(img.target.idx, idx)] += 1;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructors::boundary;

    fn z() -> AbGroup {
        AbGroup::free(1)
    }

    #[test]
    fn spheres_and_disks() {
        // H₁(∂Δ²) = ℤ.
        let (s1, _) = boundary(2, 2).unwrap();
        assert_eq!(homology(&s1, 1, Coefficients::Integers).group, z());
        assert_eq!(homology(&s1, 0, Coefficients::Integers).group, z());

        // Δ³ is contractible.
        let d3 = TruncatedSSet::standard_simplex(3, 3).unwrap();
        for n in 1..=2 {
            assert!(homology(&d3, n, Coefficients::Integers).group.is_trivial());
        }

        // H₂(∂Δ³) = ℤ.
        let (s2, _) = boundary(3, 3).unwrap();
        assert_eq!(homology(&s2, 2, Coefficients::Integers).group, z());
        assert!(homology(&s2, 1, Coefficients::Integers).group.is_trivial());
    }

    #[test]
    fn mod_p_counts() {
        let (s1, _) = boundary(2, 2).unwrap();
        assert_eq!(
            homology(&s1, 1, Coefficients::Mod(2)).group,
            AbGroup::cyclic(2)
        );
    }

    #[test]
    fn reliability_tags() {
        let (s1, _) = boundary(2, 2).unwrap();
        assert!(homology(&s1, 1, Coefficients::Integers).reliable);
        assert!(!homology(&s1, 2, Coefficients::Integers).reliable);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let d3 = TruncatedSSet::standard_simplex(3, 3).unwrap();
        for n in 2..=3 {
            let a = boundary_matrix(&d3, n - 1);
            let b = boundary_matrix(&d3, n);
            assert!(a.mul(&b).is_zero());
        }
    }
}
