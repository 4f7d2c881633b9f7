//! Reproducible fixture generation.

use prosset::budget::Budget;
use prosset::groups::FinGroup;
use prosset::pro::{LevelMap, ProObject, SSetCat};
use prosset::simplicial::nerve::nerve_of_group;
use prosset::simplicial::sset::{Cell, CellId, SimplexRef};
use prosset::simplicial::{boundary, horn, SSetMap, TruncatedSSet};

use crate::schema::{doc, Document, LevelMapDto, Payload, ProSpaceDto};

/// Deterministic 64-bit generator (splitmix64).
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n.max(1) as u64) as usize
    }
}

/// The simplicial circle with `k` vertices and `k` edges in a cycle.
pub fn cycle_sset(k: usize, dim_bound: usize) -> TruncatedSSet {
    assert!(k >= 1);
    let vertices = (0..k).map(|_| Cell { faces: Vec::new() }).collect();
    let edges = (0..k)
        .map(|i| Cell {
            faces: vec![
                SimplexRef::nondegenerate(CellId {
                    dim: 0,
                    idx: (i + 1) % k,
                }),
                SimplexRef::nondegenerate(CellId { dim: 0, idx: i }),
            ],
        })
        .collect();
    let mut cells = vec![vertices, edges];
    cells.resize(dim_bound + 1, Vec::new());
    TruncatedSSet::new(dim_bound, cells).expect("cycles are simplicial")
}

/// The winding map doubling a cycle onto one of half its length.
pub fn cycle_winding(from_k: usize, to_k: usize, dim_bound: usize) -> SSetMap {
    assert_eq!(from_k % to_k, 0);
    let src = cycle_sset(from_k, dim_bound);
    let tgt = cycle_sset(to_k, dim_bound);
    let mut images = vec![Vec::new(); dim_bound + 1];
    images[0] = (0..from_k)
        .map(|i| SimplexRef::nondegenerate(CellId { dim: 0, idx: i % to_k }))
        .collect();
    images[1] = (0..from_k)
        .map(|i| SimplexRef::nondegenerate(CellId { dim: 1, idx: i % to_k }))
        .collect();
    SSetMap::new(src, tgt, images).expect("winding is simplicial")
}

pub fn profile_names() -> &'static [&'static str] {
    &["spheres", "nerves", "towers", "retracts", "squares"]
}

/// Generate the named fixture family; identical seeds give identical
/// documents.
pub fn corpus_gen(seed: u64, profile: &str) -> Result<Vec<Document>, String> {
    let budget = Budget::default_budget();
    let mut rng = Rng(seed);
    match profile {
        "spheres" => {
            let mut out = Vec::new();
            for m in 0..=3usize {
                let d = m.max(1);
                out.push(doc(Payload::Sset(
                    TruncatedSSet::standard_simplex(m, d).expect("simplex"),
                )));
                let (b, _) = boundary(m, d).expect("boundary");
                out.push(doc(Payload::Sset(b)));
            }
            for m in 1..=3usize {
                for k in 0..=m {
                    let (h, incl) = horn(m, k, m).expect("horn");
                    out.push(doc(Payload::Sset(h)));
                    out.push(doc(Payload::SsetMap(incl)));
                }
            }
            Ok(out)
        }
        "nerves" => {
            let mut out = Vec::new();
            let groups: Vec<(&str, FinGroup)> = vec![
                ("z2", FinGroup::cyclic(2)),
                ("z3", FinGroup::cyclic(3)),
                ("z4", FinGroup::cyclic(4)),
                ("klein", FinGroup::klein_four()),
                ("z5", FinGroup::cyclic(5)),
                ("s3", FinGroup::symmetric_3()),
                ("z6", FinGroup::cyclic(6)),
            ];
            for (_, g) in &groups {
                out.push(doc(Payload::Group(g.clone())));
            }
            for (_, g) in groups.iter().take(3) {
                let n = nerve_of_group(g, 4, 100_000).map_err(|e| e.to_string())?;
                out.push(doc(Payload::Sset(n.sset)));
            }
            Ok(out)
        }
        "towers" => {
            let mut out = Vec::new();
            // Constant towers of points and circles; winding towers.
            let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
            let tower: ProObject<SSetCat> = ProObject::tower(
                vec![pt.clone(), pt.clone(), pt.clone()],
                vec![SSetMap::identity(&pt), SSetMap::identity(&pt)],
            )
            .map_err(|e| e.to_string())?;
            out.push(doc(Payload::ProSpace(ProSpaceDto::from_pro(&tower))));
            let circles: ProObject<SSetCat> = ProObject::tower(
                vec![cycle_sset(1, 1), cycle_sset(2, 1), cycle_sset(4, 1)],
                vec![cycle_winding(2, 1, 1), cycle_winding(4, 2, 1)],
            )
            .map_err(|e| e.to_string())?;
            out.push(doc(Payload::ProSpace(ProSpaceDto::from_pro(&circles))));
            // A levelwise-equivalence tower map: inclusions Δ⁰ -> Δ¹.
            let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
            let incl = prosset::simplicial::enumerate_maps(&pt, &d1, &budget)
                .map_err(|e| e.to_string())?
                .into_iter()
                .next()
                .expect("vertex inclusion");
            let src: ProObject<SSetCat> = ProObject::tower(
                vec![pt.clone(), pt.clone()],
                vec![SSetMap::identity(&pt)],
            )
            .map_err(|e| e.to_string())?;
            let tgt: ProObject<SSetCat> = ProObject::tower(
                vec![d1.clone(), d1.clone()],
                vec![SSetMap::identity(&d1)],
            )
            .map_err(|e| e.to_string())?;
            let f = LevelMap::new(src, tgt, vec![incl.clone(), incl]).map_err(|e| e.to_string())?;
            out.push(doc(Payload::LevelMap(LevelMapDto::from_level(&f))));
            let _ = rng.next();
            Ok(out)
        }
        "retracts" => {
            // Finite-set retract shapes are exercised in the library; the
            // document corpus carries simplicial ones: W = Δ⁰ inside
            // X = Δ⁰ ⊔ Δ^m with the fold back.
            let mut out = Vec::new();
            for m in 1..=2usize {
                let pt = TruncatedSSet::standard_simplex(0, m).unwrap();
                let dm = TruncatedSSet::standard_simplex(m, m).unwrap();
                let both = prosset::simplicial::colim::coproduct(vec![&pt, &dm])
                    .map_err(|e| e.to_string())?;
                out.push(doc(Payload::Sset(both.object.clone())));
                out.push(doc(Payload::SsetMap(both.legs[0].clone())));
            }
            let _ = rng.below(7);
            Ok(out)
        }
        "squares" => {
            let mut out = Vec::new();
            // Lifting squares: horn inclusions against nerve fibrations.
            let nerve = nerve_of_group(&FinGroup::cyclic(2), 2, 10_000)
                .map_err(|e| e.to_string())?
                .sset;
            let pt = TruncatedSSet::standard_simplex(0, 2).unwrap();
            let to_pt = prosset::simplicial::enumerate_maps(&nerve, &pt, &budget)
                .map_err(|e| e.to_string())?
                .pop()
                .expect("collapse");
            out.push(doc(Payload::SsetMap(to_pt)));
            for k in 0..=2usize {
                let (_, incl) = horn(2, k, 2).expect("horn");
                out.push(doc(Payload::SsetMap(incl)));
            }
            Ok(out)
        }
        other => Err(format!(
            "unknown profile {other:?}; expected one of {:?}",
            profile_names()
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_generate_and_validate() {
        for p in profile_names() {
            let docs = corpus_gen(7, p).unwrap();
            assert!(!docs.is_empty(), "profile {p}");
            for d in &docs {
                let text = crate::schema::serialize(d);
                crate::schema::parse(&text).unwrap();
            }
        }
    }

    #[test]
    fn same_seed_same_bytes() {
        for p in profile_names() {
            let a: Vec<String> = corpus_gen(42, p)
                .unwrap()
                .iter()
                .map(crate::schema::serialize)
                .collect();
            let b: Vec<String> = corpus_gen(42, p)
                .unwrap()
                .iter()
                .map(crate::schema::serialize)
                .collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn winding_tower_validates() {
        let w = cycle_winding(4, 2, 1);
        w.validate().unwrap();
        assert_eq!(prosset::simplicial::pi0::pi0(&w.source).count, 1);
    }
}
