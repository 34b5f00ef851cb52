//! Development probe: compute the full WP bracket table of the annulus
//! family and match every pair against the closed-form case templates,
//! allowing coincident role indices.

use geodalg::fatgraph::build_dn_spine;
use geodalg::geodesic::annulus_generators;
use geodalg::kernel::rat_int;
use geodalg::poisson::wp_bracket;
use geodalg::LaurentPoly;
use std::collections::BTreeMap;

type Key = (usize, usize);

fn scale(p: &LaurentPoly, k: i64) -> LaurentPoly {
    p.scale(&rat_int(k))
}

struct Ctx {
    gv: BTreeMap<Key, LaurentPoly>,
}

impl Ctx {
    fn g(&self, a: usize, b: usize) -> &LaurentPoly {
        &self.gv[&(a, b)]
    }

    /// classical case a: {G_ik, G_jl} = -2 G_jk G_il + 2 G_ji G_lk
    fn case_a(&self, i: usize, j: usize, k: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let t = &scale(&(self.g(j, k) * self.g(i, l)), -2) + &scale(&(self.g(j, i) * self.g(l, k)), 2);
        ((i, k), (j, l), t)
    }

    /// classical case a1: {G_jl, G_kj} = G_jl G_kj - 2 G_kl
    fn case_a1(&self, j: usize, k: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let t = &(self.g(j, l) * self.g(k, j)) - &scale(self.g(k, l), 2);
        ((j, l), (k, j), t)
    }

    /// classical case b: {G_jl, G_ii} = -2 G_ji G_ll + 2 G_il G_jj
    fn case_b(&self, i: usize, j: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let t = &scale(&(self.g(j, i) * self.g(l, l)), -2) + &scale(&(self.g(i, l) * self.g(j, j)), 2);
        ((j, l), (i, i), t)
    }

    /// classical case b1: {G_jj, G_kj} = G_jj G_kj - 2 G_kk
    fn case_b1(&self, j: usize, k: usize) -> (Key, Key, LaurentPoly) {
        let t = &(self.g(j, j) * self.g(k, j)) - &scale(self.g(k, k), 2);
        ((j, j), (k, j), t)
    }

    /// classical case b2: {G_jk, G_jj} = G_jk G_jj - 2 G_kk
    fn case_b2(&self, j: usize, k: usize) -> (Key, Key, LaurentPoly) {
        let t = &(self.g(j, k) * self.g(j, j)) - &scale(self.g(k, k), 2);
        ((j, k), (j, j), t)
    }

    /// classical case c: {G_ii, G_kk} = G_ki - G_ik
    fn case_c(&self, i: usize, k: usize) -> (Key, Key, LaurentPoly) {
        let t = self.g(k, i) - self.g(i, k);
        ((i, i), (k, k), t)
    }

    /// classical case d: {G_ij, G_kl} = -2(G_kj G_li - G_jk G_il + G_jl G_ik
    ///                   - G_lj G_ki) - 4(G_il G_jj G_kk - G_kj G_ll G_ii)
    fn case_d(&self, i: usize, j: usize, k: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let quad = &(&(self.g(k, j) * self.g(l, i)) - &(self.g(j, k) * self.g(i, l)))
            + &(&(self.g(j, l) * self.g(i, k)) - &(self.g(l, j) * self.g(k, i)));
        let cub = &(&(self.g(i, l) * self.g(j, j)) * self.g(k, k))
            - &(&(self.g(k, j) * self.g(l, l)) * self.g(i, i));
        let t = &scale(&quad, -2) + &scale(&cub, -4);
        ((i, j), (k, l), t)
    }

    /// classical case d1: {G_jl, G_ij} = G_jl G_ij
    ///                    - 2(G_lj G_ji + 2 G_ii G_ll - G_li - G_il G_jj^2)
    fn case_d1(&self, i: usize, j: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let inner = &(&(self.g(l, j) * self.g(j, i)) + &scale(&(self.g(i, i) * self.g(l, l)), 2))
            - &(self.g(l, i) + &(&(self.g(i, l) * self.g(j, j)) * self.g(j, j)));
        let t = &(self.g(j, l) * self.g(i, j)) - &scale(&inner, 2);
        ((j, l), (i, j), t)
    }

    /// classical case d2: {G_jl, G_lj} = 2 G_jj^2 - 2 G_ll^2
    fn case_d2(&self, j: usize, l: usize) -> (Key, Key, LaurentPoly) {
        let t = &scale(&(self.g(j, j) * self.g(j, j)), 2) - &scale(&(self.g(l, l) * self.g(l, l)), 2);
        ((j, l), (l, j), t)
    }
}

fn main() {
    for n in [2usize, 3, 4] {
        println!("==== annulus n={} ====", n);
        let g = build_dn_spine(n).unwrap();
        let eps = g.exchange_matrix();
        let gens = annulus_generators(&g);
        let ctx = Ctx {
            gv: gens.iter().map(|(k, f)| (*k, f.value.clone())).collect(),
        };
        let idx: Vec<usize> = (1..=n).collect();
        let keys: Vec<Key> = ctx.gv.keys().cloned().collect();
        let mut unmatched = 0;
        for (ai, a) in keys.iter().enumerate() {
            for b in keys.iter().skip(ai + 1) {
                let br = wp_bracket(&ctx.gv[a], &ctx.gv[b], &eps);
                let mut matches: Vec<String> = Vec::new();
                if br.is_zero() {
                    matches.push("commute".into());
                }
                let mut try_match =
                    |name: String, la: Key, lb: Key, t: &dyn Fn() -> LaurentPoly| {
                        if la == *a && lb == *b {
                            if br == t() {
                                matches.push(name);
                            }
                        } else if la == *b && lb == *a && br == -&t() {
                            matches.push(format!("{}^T", name));
                        }
                    };
                for &i in &idx {
                    for &j in &idx {
                        for &k in &idx {
                            // forks: {G_aX, G_aY} = G_aX G_aY - 2 G_XY
                            //        {G_Xa, G_Ya} = G_Xa G_Ya - 2 G_XY
                            let (a0, x0, y0) = (i, j, k);
                            try_match(
                                format!("forkF(a{},x{},y{})", a0, x0, y0),
                                (a0, x0),
                                (a0, y0),
                                &|| {
                                    &(ctx.g(a0, x0) * ctx.g(a0, y0))
                                        - &scale(ctx.g(x0, y0), 2)
                                },
                            );
                            try_match(
                                format!("forkS(a{},x{},y{})", a0, x0, y0),
                                (x0, a0),
                                (y0, a0),
                                &|| {
                                    &(ctx.g(x0, a0) * ctx.g(y0, a0))
                                        - &scale(ctx.g(x0, y0), 2)
                                },
                            );
                        }
                        try_match(format!("b1({},{})", i, j), (i, i), (j, i), &|| {
                            ctx.case_b1(i, j).2
                        });
                        try_match(format!("b2({},{})", i, j), (i, j), (i, i), &|| {
                            ctx.case_b2(i, j).2
                        });
                        try_match(format!("c({},{})", i, j), (i, i), (j, j), &|| {
                            ctx.case_c(i, j).2
                        });
                        try_match(format!("d2({},{})", i, j), (i, j), (j, i), &|| {
                            ctx.case_d2(i, j).2
                        });
                        for &k in &idx {
                            try_match(format!("a1(j{},k{},l{})", i, j, k), (i, k), (j, i), &|| {
                                ctx.case_a1(i, j, k).2
                            });
                            try_match(format!("b(i{},j{},l{})", i, j, k), (j, k), (i, i), &|| {
                                ctx.case_b(i, j, k).2
                            });
                            try_match(format!("d1(i{},j{},l{})", i, j, k), (j, k), (i, j), &|| {
                                ctx.case_d1(i, j, k).2
                            });
                            for &l in &idx {
                                try_match(
                                    format!("a(i{},j{},k{},l{})", i, j, k, l),
                                    (i, k),
                                    (j, l),
                                    &|| ctx.case_a(i, j, k, l).2,
                                );
                                try_match(
                                    format!("d(i{},j{},k{},l{})", i, j, k, l),
                                    (i, j),
                                    (k, l),
                                    &|| ctx.case_d(i, j, k, l).2,
                                );
                            }
                        }
                    }
                }
                matches.sort();
                matches.dedup();
                if matches.is_empty() {
                    unmatched += 1;
                }
                println!(
                    "{{G{}{}, G{}{}}}: {}",
                    a.0,
                    a.1,
                    b.0,
                    b.1,
                    if matches.is_empty() {
                        format!("UNMATCHED ({} terms)", br.num_terms())
                    } else {
                        matches.join(" | ")
                    }
                );
            }
        }
        println!("-- unmatched: {}", unmatched);
        if n == 4 {
            break;
        }
    }
}
