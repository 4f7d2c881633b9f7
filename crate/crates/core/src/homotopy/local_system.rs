//! Local systems on pro-spaces.
//!
//! A local system on a pro-space is represented by a local system on one
//! level; pullback is precomposition of the groupoid functor with a
//! representative.  Transport along a π₀/Π₁-comparison realizes a system
//! on the source as a pullback from the target.

use crate::budget::Budget;
use crate::groups::WordEngine;
use crate::pro::{LevelMap, SSetCat};
use crate::simplicial::edge_path::{edge_path_group, induced_pi1, EdgePathGroup};
use crate::simplicial::equivalence::MAX_COSETS;
use crate::simplicial::local_system::{hom_eq, FinAb, FinAbHom, LocalSystem};
use crate::simplicial::pi0::pi0;
use crate::simplicial::{CellId, SimplexRef, TruncatedSSet};
use crate::verdict::Verdict;

/// A pro-local system: one representing level system per index element of
/// the carrier (used for Π-style towers); comparison maps are validated
/// by pullback to a common level.
pub struct ProLocalSystem {
    /// Representing level and the system there.
    pub level: usize,
    pub system: LocalSystem,
}

/// Pullback of a local system represented at target level `s` along a
/// level map: precompose with the component at `s`.
pub fn pullback_local_system(
    f: &LevelMap<SSetCat>,
    s: usize,
    l: &LocalSystem,
) -> LocalSystem {
    l.pullback(f.component(s))
}

/// Exactness of a three-term sequence of local systems on one space:
/// componentwise `im(α) = ker(β)` in finite abelian groups, plus the
/// composite vanishing.
pub fn ls_sequence_exact(
    x: &TruncatedSSet,
    l1: &LocalSystem,
    alpha: &[FinAbHom],
    l2: &LocalSystem,
    beta: &[FinAbHom],
    l3: &LocalSystem,
) -> Result<bool, String> {
    let comps = pi0(x);
    if alpha.len() != comps.count || beta.len() != comps.count {
        return Err("one hom per component required".into());
    }
    for c in 0..comps.count {
        let (g1, g2, g3) = (&l1.groups[c], &l2.groups[c], &l3.groups[c]);
        alpha[c].validate(g1, g2)?;
        beta[c].validate(g2, g3)?;
        let composite = alpha[c].then(&beta[c], g3);
        let zero = FinAbHom {
            matrix: crate::arith::IntMat::zero(g3.rank(), g1.rank()),
        };
        if !hom_eq(&composite, &zero, g3) {
            return Ok(false);
        }
        if image_order(&alpha[c], g1, g2) != kernel_order(&beta[c], g2, g3) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn image_order(h: &FinAbHom, source: &FinAb, target: &FinAb) -> i128 {
    // |im| = |target| / |coker|.
    let mut cols: Vec<Vec<i128>> = Vec::new();
    for j in 0..source.rank() {
        cols.push(h.matrix.col(j));
    }
    for (i, &m) in target.moduli.iter().enumerate() {
        let mut c = vec![0i128; target.rank()];
        c[i] = m;
        cols.push(c);
    }
    let mat = crate::arith::IntMat::from_rows(
        (0..target.rank())
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect::<Vec<_>>(),
    );
    let coker = crate::arith::Subquotient::new(target.moduli.clone(), None, &mat);
    let coker_order = coker.group().order().expect("finite coefficients");
    target.order() / coker_order
}

fn kernel_order(h: &FinAbHom, source: &FinAb, target: &FinAb) -> i128 {
    source.order() / image_order(h, source, target)
}

/// Transport a local system from the source of a comparison-verified map
/// to its target (essential surjectivity of the pullback).
///
/// `f` must have levelwise-bijective π₀; the system lives on the source
/// at level `s`.  Searches `t ≥ s` for a component-wise homomorphism
/// `g : π₁(Y_t) -> π₁(X_s)` closing the comparison square, then defines
/// the target system through `g` and the source monodromy.  Returns the
/// system together with the level `t` where `f_t^* M = φ_{ts}^* L` holds.
pub fn transport_local_system(
    f: &LevelMap<SSetCat>,
    s: usize,
    l: &LocalSystem,
    budget: &Budget,
) -> Result<(usize, LocalSystem), Verdict> {
    let x = &f.source;
    let y = &f.target;
    l.validate(&x.fibers[s])
        .map_err(|e| Verdict::fails(format!("invalid system: {e}")))?;
    let _ = budget;

    'levels: for t in x.index.by_height() {
        if !x.index.leq(s, t) {
            continue;
        }
        let xt = &x.fibers[t];
        let comps_t = pi0(xt);
        let comps_yt = pi0(&y.fibers[t]);
        if comps_t.count != comps_yt.count {
            continue;
        }
        // Per component: presentations and the factorization square.
        let mut y_groups: Vec<Option<FinAb>> = vec![None; comps_yt.count];
        let mut y_actions: Vec<Option<FinAbHom>> = vec![None; y.fibers[t].cell_count(1)];
        for c in 0..comps_t.count {
            let x_base = (0..xt.cell_count(0))
                .find(|&v| comps_t.component_of[v] == c)
                .expect("inhabited component");
            let epg_xt = edge_path_group(xt, x_base).map_err(Verdict::unknown)?;
            let y_base = f.component(t).image_of_cell(CellId { dim: 0, idx: x_base });
            let epg_yt =
                edge_path_group(&y.fibers[t], y_base.target.idx).map_err(Verdict::unknown)?;
            let phi = x.structure_map(t, s);
            let x_low = phi.image_of_cell(CellId { dim: 0, idx: x_base });
            let epg_xs = edge_path_group(&x.fibers[s], x_low.target.idx).map_err(Verdict::unknown)?;

            let alpha = induced_pi1(f.component(t), &epg_xt, &epg_yt);
            let beta = induced_pi1(&phi, &epg_xt, &epg_xs);

            // The diagonal must be a homomorphism; search through the
            // finite realization of π₁(X_s).
            let WordEngine::Finite(es) = epg_xs.presentation.word_engine(MAX_COSETS) else {
                continue 'levels;
            };
            let Some(g_words) = search_factorization(&epg_yt, &epg_xs, &es, &alpha, &beta)
            else {
                continue 'levels;
            };

            // Define the target system on this component: groups copy L
            // at the low basepoint's component; edge actions come from
            // the source monodromy through g.
            let comps_xs = pi0(&x.fibers[s]);
            let group = l
                .component_group(&comps_xs, x_low.target.idx)
                .clone();
            let yc = comps_yt.component_of[y_base.target.idx];
            y_groups[yc] = Some(group.clone());
            for edge in 0..y.fibers[t].cell_count(1) {
                let e = SimplexRef::nondegenerate(CellId { dim: 1, idx: edge });
                let src_v = y.fibers[t].vertex(&e, 0);
                if comps_yt.component_of[src_v] != yc {
                    continue;
                }
                // Loop word of this edge in π₁(Y_t), its image in
                // π₁(X_s), and the monodromy of that image under L.
                let letter = epg_yt.edge_word(&y.fibers[t], &e, 1);
                let word_in_xs: Vec<crate::groups::Letter> = letter
                    .iter()
                    .flat_map(|&(gen, sign)| {
                        let w = &g_words[gen];
                        if sign > 0 {
                            w.clone()
                        } else {
                            w.iter().rev().map(|&(g, e)| (g, -e)).collect()
                        }
                    })
                    .collect();
                let action = monodromy_of_word(&x.fibers[s], &epg_xs, l, &group, &word_in_xs)
                    .ok_or_else(|| {
                        Verdict::unknown("monodromy of a transported word is not invertible")
                    })?;
                y_actions[edge] = Some(action);
            }
        }
        // Every component and edge of Y_t was covered (π₀ is bijective,
        // and edges live inside components).
        if y_groups.iter().any(Option::is_none) || y_actions.iter().any(Option::is_none) {
            continue;
        }
        let m = LocalSystem {
            groups: y_groups.into_iter().map(Option::unwrap).collect(),
            edge_action: y_actions.into_iter().map(Option::unwrap).collect(),
        };
        if m.validate(&y.fibers[t]).is_err() {
            continue;
        }
        // f_t^* M must agree with φ_{ts}^* L on X_t.
        let pulled_m = m.pullback(f.component(t));
        let pulled_l = l.pullback(&x.structure_map(t, s));
        if systems_equal(xt, &pulled_m, &pulled_l) {
            return Ok((t, m));
        }
    }
    Err(Verdict::unknown(
        "no level admits the fundamental-group comparison square",
    ))
}

fn systems_equal(x: &TruncatedSSet, a: &LocalSystem, b: &LocalSystem) -> bool {
    if a.groups != b.groups {
        return false;
    }
    let comps = pi0(x);
    (0..x.cell_count(1)).all(|edge| {
        let e = SimplexRef::nondegenerate(CellId { dim: 1, idx: edge });
        let g = a.component_group(&comps, x.vertex(&e, 0));
        hom_eq(&a.edge_action[edge], &b.edge_action[edge], g)
    })
}

/// Monodromy automorphism assigned to a π₁-word by a local system.
pub fn monodromy_of_word(
    x: &TruncatedSSet,
    epg: &EdgePathGroup,
    l: &LocalSystem,
    group: &FinAb,
    word: &[crate::groups::Letter],
) -> Option<FinAbHom> {
    let mut acc = group.identity_hom();
    for &(gen, sign) in word {
        let loop_edges = epg.generator_loop(x, gen);
        let step = l.monodromy(x, &loop_edges, group)?;
        let step = if sign > 0 { step } else { step.inverse(group)? };
        acc = acc.then(&step, group);
    }
    Some(acc)
}

/// Search for homomorphism words `g : π₁(Y_t) -> π₁(X_s)` (values as words
/// through the enumerated group) with `g ∘ α = β` on generators.
fn search_factorization(
    epg_yt: &EdgePathGroup,
    epg_xs: &EdgePathGroup,
    es: &crate::groups::EnumeratedGroup,
    alpha: &[Vec<crate::groups::Letter>],
    beta: &[Vec<crate::groups::Letter>],
) -> Option<Vec<Vec<crate::groups::Letter>>> {
    let yp = &epg_yt.presentation;
    let xp = &epg_xs.presentation;
    let n_gens = yp.generators.len();
    let order = es.group.order();
    // Candidate images of Y-generators as elements of the enumerated
    // π₁(X_s); beta must match α composed with the candidate.
    let eval_xs = |w: &[crate::groups::Letter]| -> usize {
        xp.eval_in(&es.group, &es.generator_images, w)
    };
    let mut images = vec![0usize; n_gens];
    loop {
        // Relator check.
        let ok_relators = yp.relators.iter().all(|r| {
            let mut acc = 0usize;
            for &(g, e) in r {
                let v = if e > 0 {
                    images[g]
                } else {
                    es.group.inverse(images[g])
                };
                acc = es.group.op(acc, v);
            }
            acc == 0
        });
        if ok_relators {
            // Triangle: g(α(x-gen)) = β(x-gen) for each X_t-generator.
            let ok_triangle = alpha.iter().zip(beta.iter()).all(|(aw, bw)| {
                let mut acc = 0usize;
                for &(g, e) in aw {
                    let v = if e > 0 {
                        images[g]
                    } else {
                        es.group.inverse(images[g])
                    };
                    acc = es.group.op(acc, v);
                }
                acc == eval_xs(bw)
            });
            if ok_triangle {
                // Express images as words through the element table.
                return Some(
                    images
                        .iter()
                        .map(|&el| es.element_words[el].clone())
                        .collect(),
                );
            }
        }
        // Odometer.
        let mut pos = 0;
        loop {
            if pos == n_gens {
                return None;
            }
            images[pos] += 1;
            if images[pos] < order {
                break;
            }
            images[pos] = 0;
            pos += 1;
        }
    }
}
