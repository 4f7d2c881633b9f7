//! Recognition of n-cofibrations.

use crate::simplicial::equivalence::{is_n_equivalence, is_weak_equivalence};
use crate::simplicial::SSetMap;
use crate::verdict::Verdict;

use super::family::NThreshold;
use super::small_object::CellComplexCertificate;

/// Is `i` an n-cofibration (a cofibration and n-equivalence)?
///
/// A supplied certificate gives a certified `holds` by replay; otherwise
/// injectivity is exact and the n-equivalence half runs on the surrogate
/// stack (three-valued).
pub fn verify_n_cofibration(
    i: &SSetMap,
    n: NThreshold,
    certificate: Option<&CellComplexCertificate>,
) -> Verdict {
    if let Some(cert) = certificate {
        if cert.threshold != n {
            return Verdict::unknown(format!(
                "certificate is for J_{} rather than J_{n}",
                cert.threshold
            ));
        }
        return match cert.verify(i) {
            Ok(()) => Verdict::Holds,
            Err(e) => Verdict::fails(format!("certificate rejected: {e}")),
        };
    }
    if !i.is_injective() {
        return Verdict::fails("not injective on simplices");
    }
    match n {
        NThreshold::Finite(k) if k < 0 => Verdict::Holds,
        NThreshold::Finite(k) => is_n_equivalence(i, k as usize),
        NThreshold::Infinity => is_weak_equivalence(i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::colim::coproduct;
    use crate::simplicial::{boundary, horn, TruncatedSSet};

    #[test]
    fn horn_inclusion_with_certificate() {
        let (_, incl) = horn(2, 1, 2).unwrap();
        let budget = crate::budget::Budget::new(50_000_000);
        let r = crate::lifting::factor_small_object(&incl, NThreshold::Infinity, 8, &budget)
            .unwrap();
        // Certificate-backed check on the produced left leg.
        assert!(verify_n_cofibration(&r.left, NThreshold::Infinity, Some(&r.certificate)).holds());
    }

    #[test]
    fn boundary_is_a_1_cofibration() {
        let (_, incl) = boundary(2, 2).unwrap();
        assert!(verify_n_cofibration(&incl, NThreshold::Finite(1), None).holds());
    }

    #[test]
    fn fold_map_is_not_injective() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let two = coproduct(vec![&pt, &pt]).unwrap().object;
        let budget = crate::budget::Budget::default_budget();
        let fold = crate::simplicial::enumerate_maps(&two, &pt, &budget)
            .unwrap()
            .pop()
            .unwrap();
        assert!(verify_n_cofibration(&fold, NThreshold::Finite(0), None).is_fails());
    }
}
