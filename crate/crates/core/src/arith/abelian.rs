//! Finitely generated abelian groups as lattice subquotients.
//!
//! A group is presented inside an ambient `⊕ᵢ ℤ/mᵢ` (modulus `0` meaning a
//! free `ℤ` factor) as `Z / B`, where `Z` is the sublattice of vectors
//! satisfying a congruence constraint (cycles) and `B` is spanned by given
//! columns plus the ambient relations (boundaries).  All homology, twisted
//! cohomology, and homotopy-surrogate comparisons reduce to this shape.

use super::matrix::IntMat;

/// Isomorphism type of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Invariant factors `t₁ | t₂ | …`, each ≥ 2.
    pub torsion: Vec<i128>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: i128) -> Self {
        assert!(n >= 0);
        match n {
            0 => AbGroup::free(1),
            1 => AbGroup::trivial(),
            _ => AbGroup {
                free_rank: 0,
                torsion: vec![n],
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<i128> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }

    /// Moduli list in based coordinates: torsion factors then zeros.
    pub fn moduli(&self) -> Vec<i128> {
        let mut m = self.torsion.clone();
        m.extend(std::iter::repeat_n(0, self.free_rank));
        m
    }
}

impl std::fmt::Display for AbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A subquotient `Z / B` of an ambient `⊕ ℤ/mᵢ`, normalized so that classes
/// have canonical based coordinates and induced maps become matrices.
#[derive(Debug, Clone)]
pub struct Subquotient {
    ambient_moduli: Vec<i128>,
    /// Columns: basis of the cycle lattice `Z ⊆ ℤ^r`.
    cycle_basis: IntMat,
    /// `u * (cycle coords) = based coords`; relations there are `diag(s)`.
    u: IntMat,
    u_inv: IntMat,
    /// Full diagonal moduli in based coordinates (before dropping 1s).
    based_moduli: Vec<i128>,
    /// Indices of nontrivial based coordinates (modulus ≠ 1).
    kept: Vec<usize>,
    group: AbGroup,
}

impl Subquotient {
    /// Build `Z / B` where:
    ///
    /// * `ambient_moduli` — moduli of the ambient group (0 = ℤ);
    /// * `constraint` — optional `(A, target_moduli)`; `Z = {x : A x ≡ 0}`
    ///   (componentwise mod the target moduli, exact equality on `0` rows);
    /// * `boundary` — columns spanning `B` together with the ambient
    ///   relations `diag(m)`.
    ///
    /// Requires `B ⊆ Z`, which is exactly `d ∘ d = 0` for chain data.
    pub fn new(
        ambient_moduli: Vec<i128>,
        constraint: Option<(&IntMat, &[i128])>,
        boundary: &IntMat,
    ) -> Self {
        let r = ambient_moduli.len();
        assert_eq!(boundary.nrows(), r);

        // Cycle lattice.
        let cycle_basis = match constraint {
            None => IntMat::identity(r),
            Some((a, target_moduli)) => {
                assert_eq!(a.ncols(), r);
                assert_eq!(a.nrows(), target_moduli.len());
                // Stack multiplier columns for rows with nonzero modulus.
                let mut aux_cols: Vec<Vec<i128>> = Vec::new();
                for (i, &m) in target_moduli.iter().enumerate() {
                    if m != 0 {
                        let mut col = vec![0i128; a.nrows()];
                        col[i] = m;
                        aux_cols.push(col);
                    }
                }
                let mut stacked = IntMat::zero(a.nrows(), r + aux_cols.len());
                for i in 0..a.nrows() {
                    for j in 0..r {
                        stacked[(i, j)] = a[(i, j)];
                    }
                    for (jj, col) in aux_cols.iter().enumerate() {
                        stacked[(i, r + jj)] = col[i];
                    }
                }
                let kernel = stacked.kernel_basis();
                // Project onto the x-block and re-extract a lattice basis.
                let proj = IntMat::from_rows(
                    (0..r)
                        .map(|i| kernel.iter().map(|k| k[i]).collect())
                        .collect::<Vec<_>>(),
                );
                lattice_basis(&proj)
            }
        };
        let d = cycle_basis.ncols();

        // Boundary generators expressed in cycle coordinates.
        let mut b_cols: Vec<Vec<i128>> = Vec::new();
        for j in 0..boundary.ncols() {
            let col = boundary.col(j);
            let coords = solve_in_basis(&cycle_basis, &col)
                .expect("boundary generator outside the cycle lattice");
            b_cols.push(coords);
        }
        for (i, &m) in ambient_moduli.iter().enumerate() {
            if m != 0 {
                let mut amb = vec![0i128; r];
                amb[i] = m;
                let coords = solve_in_basis(&cycle_basis, &amb)
                    .expect("ambient relation outside the cycle lattice");
                b_cols.push(coords);
            }
        }
        let rel = if b_cols.is_empty() {
            IntMat::zero(d, 0)
        } else {
            IntMat::from_rows(
                (0..d)
                    .map(|i| b_cols.iter().map(|c| c[i]).collect())
                    .collect::<Vec<_>>(),
            )
        };

        let s = rel.smith();
        let diag = s.diagonal();
        let mut based_moduli = vec![0i128; d];
        for (i, &v) in diag.iter().enumerate() {
            based_moduli[i] = v;
        }
        let u = s.u.clone();
        let u_inv = invert_unimodular(&u);

        let kept: Vec<usize> = (0..d).filter(|&i| based_moduli[i] != 1).collect();
        let torsion: Vec<i128> = kept
            .iter()
            .map(|&i| based_moduli[i])
            .filter(|&m| m > 1)
            .collect();
        let free_rank = kept.iter().filter(|&&i| based_moduli[i] == 0).count();
        let group = AbGroup { free_rank, torsion };

        Subquotient {
            ambient_moduli,
            cycle_basis,
            u,
            u_inv,
            based_moduli,
            kept,
            group,
        }
    }

    /// The whole ambient group as a subquotient of itself.
    pub fn full(ambient_moduli: Vec<i128>) -> Self {
        let r = ambient_moduli.len();
        Subquotient::new(ambient_moduli, None, &IntMat::zero(r, 0))
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn ambient_moduli(&self) -> &[i128] {
        &self.ambient_moduli
    }

    /// Moduli of the based coordinates (aligned with `group`).
    pub fn based_moduli(&self) -> Vec<i128> {
        self.kept.iter().map(|&i| self.based_moduli[i]).collect()
    }

    /// Based coordinates of the class of an ambient vector.
    ///
    /// Returns `None` when the vector is not a cycle.
    pub fn class_of(&self, ambient: &[i128]) -> Option<Vec<i128>> {
        let coords = solve_in_basis(&self.cycle_basis, &ambient.to_vec())?;
        let based = self.u.mul_vec(&coords);
        Some(
            self.kept
                .iter()
                .map(|&i| reduce(based[i], self.based_moduli[i]))
                .collect(),
        )
    }

    /// An ambient representative of the class with the given based
    /// coordinates.
    pub fn representative(&self, based: &[i128]) -> Vec<i128> {
        assert_eq!(based.len(), self.kept.len());
        let mut full = vec![0i128; self.based_moduli.len()];
        for (pos, &i) in self.kept.iter().enumerate() {
            full[i] = based[pos];
        }
        let coords = self.u_inv.mul_vec(&full);
        self.cycle_basis.mul_vec(&coords)
    }

    /// Matrix (in based coordinates) of the map induced by an ambient
    /// matrix `f` sending this subquotient's cycles into `target`'s.
    ///
    /// Returns `None` if some generator lands outside the target cycles.
    pub fn induced_map(&self, target: &Subquotient, f: &IntMat) -> Option<IntMat> {
        assert_eq!(f.ncols(), self.ambient_moduli.len());
        assert_eq!(f.nrows(), target.ambient_moduli.len());
        let k = self.kept.len();
        let mut cols: Vec<Vec<i128>> = Vec::with_capacity(k);
        for pos in 0..k {
            let mut e = vec![0i128; k];
            e[pos] = 1;
            let rep = self.representative(&e);
            let image = f.mul_vec(&rep);
            cols.push(target.class_of(&image)?);
        }
        let rows = target.kept.len();
        Some(IntMat::from_rows(
            (0..rows)
                .map(|i| cols.iter().map(|c| c[i]).collect())
                .collect::<Vec<_>>(),
        ))
    }
}

fn reduce(v: i128, m: i128) -> i128 {
    if m == 0 {
        v
    } else {
        v.rem_euclid(m)
    }
}

/// Extract a basis of the lattice spanned by the columns of `gens`.
fn lattice_basis(gens: &IntMat) -> IntMat {
    let s = gens.smith();
    let r = s.rank();
    // Columns of u⁻¹ scaled by the diagonal span the same lattice.
    let u_inv = invert_unimodular(&s.u);
    let mut out = IntMat::zero(gens.nrows(), r);
    for j in 0..r {
        for i in 0..gens.nrows() {
            out[(i, j)] = u_inv[(i, j)] * s.d[(j, j)];
        }
    }
    out
}

/// Solve `basis * x = v` exactly; columns of `basis` are independent.
fn solve_in_basis(basis: &IntMat, v: &Vec<i128>) -> Option<Vec<i128>> {
    basis.solve(v)
}

fn invert_unimodular(u: &IntMat) -> IntMat {
    let n = u.nrows();
    assert_eq!(n, u.ncols());
    let mut out = IntMat::zero(n, n);
    for j in 0..n {
        let mut e = vec![0i128; n];
        e[j] = 1;
        let col = u.solve(&e).expect("unimodular matrix must be invertible");
        for i in 0..n {
            out[(i, j)] = col[i];
        }
    }
    out
}

/// Whether a based-coordinate matrix `t: g -> h` is an isomorphism, where
/// the groups are `ℤ^k/diag(n)` with moduli from [`Subquotient::based_moduli`].
pub fn based_map_is_iso(t: &IntMat, source_moduli: &[i128], target_moduli: &[i128]) -> bool {
    let k = source_moduli.len();
    let k2 = target_moduli.len();
    assert_eq!(t.ncols(), k);
    assert_eq!(t.nrows(), k2);

    // Surjective: columns of t plus target relations span ℤ^{k2}.
    let mut rel_cols: Vec<Vec<i128>> = Vec::new();
    for (i, &m) in target_moduli.iter().enumerate() {
        if m != 0 {
            let mut c = vec![0i128; k2];
            c[i] = m;
            rel_cols.push(c);
        }
    }
    let mut big = IntMat::zero(k2, k + rel_cols.len());
    for i in 0..k2 {
        for j in 0..k {
            big[(i, j)] = t[(i, j)];
        }
        for (jj, c) in rel_cols.iter().enumerate() {
            big[(i, k + jj)] = c[i];
        }
    }
    let s = big.smith();
    if s.rank() < k2 || s.diagonal().iter().take(k2).any(|&d| d.abs() != 1) {
        return false;
    }

    // Injective: kernel of the induced map lies in the source relations.
    for kvec in big.kernel_basis() {
        let x = &kvec[0..k];
        for (i, &m) in source_moduli.iter().enumerate() {
            let ok = if m == 0 { x[i] == 0 } else { x[i] % m == 0 };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_homology_shape() {
        // Z¹ of the circle with 3 edges / boundaries of nothing: H₁(S¹) = ℤ.
        // Chain: C₁ = ℤ³ → C₀ = ℤ³ with the standard incidence matrix.
        let d1 = IntMat::from_rows(vec![
            vec![-1, 0, -1],
            vec![1, -1, 0],
            vec![0, 1, 1],
        ]);
        let h1 = Subquotient::new(
            vec![0, 0, 0],
            Some((&d1, &[0, 0, 0])),
            &IntMat::zero(3, 0),
        );
        assert_eq!(h1.group(), &AbGroup::free(1));
    }

    #[test]
    fn torsion_subquotient() {
        // ℤ² / ⟨(2,0),(0,4)⟩ = ℤ/2 ⊕ ℤ/4.
        let b = IntMat::from_rows(vec![vec![2, 0], vec![0, 4]]);
        let q = Subquotient::new(vec![0, 0], None, &b);
        assert_eq!(
            q.group(),
            &AbGroup {
                free_rank: 0,
                torsion: vec![2, 4]
            }
        );
        // Class arithmetic: (1,1) + (1,3) = (0,0) in ℤ/2 ⊕ ℤ/4? (2,4) ≡ 0. ✓
        let c1 = q.class_of(&[1, 1]).unwrap();
        let rep = q.representative(&c1);
        assert_eq!(q.class_of(&rep).unwrap(), c1);
        assert_eq!(q.class_of(&[2, 4]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn induced_iso_detection() {
        // Multiplication by 3 on ℤ/4 is an iso; by 2 is not.
        let b = IntMat::from_rows(vec![vec![4]]);
        let q = Subquotient::new(vec![0], None, &b);
        let m3 = q.induced_map(&q, &IntMat::from_rows(vec![vec![3]])).unwrap();
        let m2 = q.induced_map(&q, &IntMat::from_rows(vec![vec![2]])).unwrap();
        let moduli = q.based_moduli();
        assert!(based_map_is_iso(&m3, &moduli, &moduli));
        assert!(!based_map_is_iso(&m2, &moduli, &moduli));
    }

    #[test]
    fn mixed_free_and_torsion() {
        // ℤ³ / ⟨(0,2,0)⟩ with cycles = all: ℤ² ⊕ ℤ/2.
        let b = IntMat::from_rows(vec![vec![0], vec![2], vec![0]]);
        let q = Subquotient::new(vec![0, 0, 0], None, &b);
        assert_eq!(
            q.group(),
            &AbGroup {
                free_rank: 2,
                torsion: vec![2]
            }
        );
    }
}
