//! Development probe: rewriting behavior of the annulus rule sets.

use geodalg::kernel::Ring;
use geodalg::quantum::{NCPoly, QPow, RuleSet};

fn main() {
    for n in [2usize, 3] {
        let rs = RuleSet::annulus(n);
        println!("== annulus n={} ({} gens) ==", n, rs.keys.len());
        if let Some(((hi, lo), w)) = rs.check_weights() {
            println!(
                "weight violation: rule ({},{}) rhs word {:?}",
                rs.name(hi),
                rs.name(lo),
                w
            );
        }
        let k = rs.keys.len() as u16;
        let mut worst = 0usize;
        for a in 0..k {
            for b in 0..k {
                let p = NCPoly::word(vec![a, b], QPow::one());
                match rs.normal_form(&p) {
                    Ok(nf) => {
                        worst = worst.max(nf.terms.len());
                    }
                    Err(e) => {
                        println!("pair [{} {}]: {}", rs.name(a), rs.name(b), e);
                    }
                }
            }
        }
        println!("pairs ok, largest normal form: {} terms", worst);
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let p = NCPoly::word(vec![a, b, c], QPow::one());
                    match rs.normal_form(&p) {
                        Ok(_) => {}
                        Err(e) => {
                            println!(
                                "triple [{} {} {}]: {}",
                                rs.name(a),
                                rs.name(b),
                                rs.name(c),
                                e
                            );
                            return;
                        }
                    }
                }
            }
        }
        println!("triples ok");
        // associativity / confluence spot check
        let mut bad = 0;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let abc = rs
                        .normal_form(&NCPoly::word(vec![a, b, c], QPow::one()))
                        .unwrap();
                    let bc = rs.normal_form(&NCPoly::word(vec![b, c], QPow::one())).unwrap();
                    let alt = rs.normal_form(&NCPoly::gen(a).mul_ref(&bc)).unwrap();
                    if abc != alt {
                        bad += 1;
                        if bad < 4 {
                            println!(
                                "confluence fail [{} {} {}]",
                                rs.name(a),
                                rs.name(b),
                                rs.name(c)
                            );
                        }
                    }
                }
            }
        }
        println!("confluence failures: {}", bad);
    }
}
