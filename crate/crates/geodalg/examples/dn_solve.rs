//! Development probe: express the unmatched annulus brackets in the
//! generator monomial basis by exact linear algebra.

use geodalg::fatgraph::build_dn_spine;
use geodalg::geodesic::annulus_generators;
use geodalg::kernel::{poly::Mono, Rat, Ring};
use geodalg::poisson::wp_bracket;
use geodalg::LaurentPoly;
use std::collections::BTreeMap;

type Key = (usize, usize);

fn main() {
    let n = 3usize;
    let g = build_dn_spine(n).unwrap();
    let eps = g.exchange_matrix();
    let gens = annulus_generators(&g);
    let gv: BTreeMap<Key, LaurentPoly> = gens.iter().map(|(k, f)| (*k, f.value.clone())).collect();
    let keys: Vec<Key> = gv.keys().cloned().collect();

    // candidate basis: 1, generators, ordered degree-2 and degree-3 products
    let mut basis: Vec<(String, LaurentPoly)> = vec![("1".into(), LaurentPoly::one())];
    for k in &keys {
        basis.push((format!("G{}{}", k.0, k.1), gv[k].clone()));
    }
    for (i, a) in keys.iter().enumerate() {
        for b in keys.iter().skip(i) {
            basis.push((
                format!("G{}{}*G{}{}", a.0, a.1, b.0, b.1),
                &gv[a] * &gv[b],
            ));
        }
    }
    for (i, a) in keys.iter().enumerate() {
        for (j, b) in keys.iter().enumerate().skip(i) {
            for c in keys.iter().skip(j) {
                basis.push((
                    format!("G{}{}*G{}{}*G{}{}", a.0, a.1, b.0, b.1, c.0, c.1),
                    &(&gv[a] * &gv[b]) * &gv[c],
                ));
            }
        }
    }
    println!("basis size: {}", basis.len());

    let targets: Vec<(Key, Key)> = vec![
        ((1, 2), (1, 3)),
        ((1, 2), (3, 2)),
        ((1, 3), (2, 3)),
        ((2, 1), (2, 3)),
        ((2, 1), (3, 1)),
        ((3, 1), (3, 2)),
    ];
    for (a, b) in targets {
        let br = wp_bracket(&gv[&a], &gv[&b], &eps);
        match solve_sparse(&basis, &br) {
            Some(combo) => {
                let terms: Vec<String> = combo
                    .iter()
                    .map(|(name, c)| format!("{} * {}", c, name))
                    .collect();
                println!(
                    "{{G{}{}, G{}{}}} = {}",
                    a.0,
                    a.1,
                    b.0,
                    b.1,
                    terms.join("  +  ")
                );
            }
            None => println!("{{G{}{}, G{}{}}}: NO decomposition", a.0, a.1, b.0, b.1),
        }
    }
}

/// Solve target = sum c_i basis_i exactly, greedily preferring low-degree
/// basis vectors: repeatedly subtract the best single basis multiple that
/// kills the leading monomial, falling back to full Gaussian elimination.
fn solve_sparse(
    basis: &[(String, LaurentPoly)],
    target: &LaurentPoly,
) -> Option<Vec<(String, Rat)>> {
    // Gather all monomials
    let mut monos: BTreeMap<Mono, usize> = BTreeMap::new();
    for (_, p) in basis {
        for m in p.terms.keys() {
            let next = monos.len();
            monos.entry(m.clone()).or_insert(next);
        }
    }
    for m in target.terms.keys() {
        let next = monos.len();
        monos.entry(m.clone()).or_insert(next);
    }
    let rows = monos.len();
    let cols = basis.len();
    // dense rational matrix, rows = monomials, cols = basis; augmented
    let mut mat = vec![vec![Rat::zero(); cols + 1]; rows];
    for (ci, (_, p)) in basis.iter().enumerate() {
        for (m, c) in &p.terms {
            mat[monos[m]][ci] = c.clone();
        }
    }
    for (m, c) in &target.terms {
        mat[monos[m]][cols] = c.clone();
    }
    // Gaussian elimination, pivoting on the earliest column available so the
    // solution prefers low-degree basis elements
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r0 = 0usize;
    for c in 0..cols {
        let mut pr = None;
        for r in r0..rows {
            if !mat[r][c].is_zero() {
                pr = Some(r);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        mat.swap(r0, pr);
        let p = mat[r0][c].clone();
        for x in mat[r0].iter_mut() {
            *x = x.clone() / p.clone();
        }
        for r in 0..rows {
            if r != r0 && !mat[r][c].is_zero() {
                let f = mat[r][c].clone();
                for cc in 0..=cols {
                    let sub = mat[r0][cc].clone() * f.clone();
                    mat[r][cc] = mat[r][cc].clone() - sub;
                }
            }
        }
        pivot_of_col[c] = Some(r0);
        r0 += 1;
        if r0 == rows {
            break;
        }
    }
    // consistency: rows beyond pivots must have zero RHS
    for r in 0..rows {
        let all_zero = (0..cols).all(|c| mat[r][c].is_zero());
        if all_zero && !mat[r][cols].is_zero() {
            return None;
        }
    }
    let mut out = Vec::new();
    for c in 0..cols {
        if let Some(r) = pivot_of_col[c] {
            let v = mat[r][cols].clone();
            if !v.is_zero() {
                out.push((basis[c].0.clone(), v));
            }
        }
    }
    Some(out)
}
