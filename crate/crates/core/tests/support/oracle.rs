//! Brute-force cross-check of the solver. The multiplicities are recomputed
//! from the definition as complex sums over all powers of `u`, with no use of
//! traces or Ramanujan sums, and every integer point of a box is tested.

use std::f64::consts::TAU;

use num_integer::Integer;

use help_core::cyclo::Cyclotomic;
use help_core::engine::{check_group, CheckOptions, PaVector, PowerAssignment};
use help_core::rules::RuleSet;
use help_core::tables::{CharacterTable, GroupData};

/// Half-width of the scanned box; the largest character degree of either group.
pub const BOX: i64 = 18;
/// Distance from an integer still accepted as integral.
const TOL: f64 = 1e-6;

type C = (f64, f64);

fn add(a: C, b: C) -> C {
    (a.0 + b.0, a.1 + b.1)
}

fn mul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// `σ_s(x)` for `x ∈ Q(ζ_m)`, with `s` a unit mod `m`, lifted to a unit
/// modulo the order `x` is written over.
fn conjugate(x: &Cyclotomic, s: u64, m: u64) -> C {
    let n = x.order();
    let s = (0..)
        .map(|t| s + t * m)
        .find(|s| s.gcd(&n) == 1)
        .unwrap();
    x.galois(s as i64).unwrap().to_complex_f64()
}

/// `μ_l` as `coeffs · ν + constant`, one complex affine map per `l`.
struct Mu {
    coeffs: Vec<Vec<C>>,
    constant: Vec<C>,
}

fn mu(t: &CharacterTable, row: usize, k: u64, a: &PowerAssignment, classes: &[usize]) -> Mu {
    let n = classes.len();
    // χ(u^j) = Σ_c ν_c(u^j) χ(c): linear in ν for gcd(j,k) = 1, constant otherwise
    let mut chi_coeffs = vec![vec![(0.0, 0.0); n]; k as usize];
    let mut chi_const = vec![(0.0, 0.0); k as usize];
    for j in 0..k {
        let d = j.gcd(&k);
        let m = k / d;
        let s = j / d;
        if m == 1 {
            chi_const[j as usize] = t.degree(row).to_complex_f64();
        } else if m == k {
            for (i, &c) in classes.iter().enumerate() {
                chi_coeffs[j as usize][i] = conjugate(t.value(row, c).unwrap(), s, m);
            }
        } else {
            let v = a.choice(m).unwrap();
            for (&c, &e) in v.classes().iter().zip(v.entries()) {
                let x = conjugate(t.value(row, c).unwrap(), s, m);
                chi_const[j as usize] = add(chi_const[j as usize], (e as f64 * x.0, e as f64 * x.1));
            }
        }
    }
    let mut coeffs = vec![vec![(0.0, 0.0); n]; k as usize];
    let mut constant = vec![(0.0, 0.0); k as usize];
    for l in 0..k {
        for j in 0..k {
            let angle = -TAU * ((j * l) % k) as f64 / k as f64;
            let z = (angle.cos() / k as f64, angle.sin() / k as f64);
            for i in 0..n {
                coeffs[l as usize][i] = add(coeffs[l as usize][i], mul(chi_coeffs[j as usize][i], z));
            }
            constant[l as usize] = add(constant[l as usize], mul(chi_const[j as usize], z));
        }
    }
    Mu { coeffs, constant }
}

fn passes(mus: &[Mu], nu: &[i64]) -> bool {
    mus.iter().all(|m| {
        m.coeffs.iter().zip(&m.constant).all(|(cs, c0)| {
            let mut v = *c0;
            for (c, &x) in cs.iter().zip(nu) {
                v = add(v, (c.0 * x as f64, c.1 * x as f64));
            }
            let r = v.0.round();
            v.1.abs() < TOL && (v.0 - r).abs() < TOL && r >= 0.0
        })
    })
}

pub fn brute_force(g: &GroupData, k: u64, a: &PowerAssignment, classes: &[usize]) -> Vec<PaVector> {
    let mus: Vec<Mu> = g
        .tables()
        .iter()
        .filter(|t| t.is_ordinary() || k % t.characteristic() != 0)
        .flat_map(|t| (0..t.num_rows()).map(move |r| (t, r)))
        .map(|(t, r)| mu(t, r, k, a, classes))
        .collect();
    let n = classes.len();
    let mut out = Vec::new();
    let mut x = vec![-BOX; n - 1];
    loop {
        let last = 1 - x.iter().sum::<i64>();
        if last.abs() <= BOX {
            let mut nu = x.clone();
            nu.push(last);
            if passes(&mus, &nu) {
                out.push(PaVector::new(k, classes.to_vec(), nu));
            }
        }
        let Some(i) = (0..x.len()).rev().find(|&i| x[i] < BOX) else {
            break;
        };
        x[i] += 1;
        for y in &mut x[i + 1..] {
            *y = -BOX;
        }
    }
    out.sort();
    out
}

/// Compares the engine with [`brute_force`] on every HeLP branch of a
/// rule-free check; returns the number of branches compared.
pub fn cross_check(g: &GroupData) -> Result<usize, String> {
    let opts = CheckOptions {
        rules: RuleSet::none(),
        certificates: false,
        ..CheckOptions::default()
    };
    let mut branches = 0;
    for r in check_group(g, &opts).map_err(|e| e.to_string())? {
        for b in &r.branches {
            if r.classes.len() > 4 {
                return Err(format!("{} k={}: box too large", g.name(), r.unit_order));
            }
            let expected = brute_force(g, r.unit_order, &b.assignment, &r.classes);
            if b.solutions != expected {
                return Err(format!(
                    "{} k={} under {}: engine {:?}, brute force {:?}",
                    g.name(),
                    r.unit_order,
                    b.assignment.display(g),
                    b.solutions.iter().map(|v| v.entries().to_vec()).collect::<Vec<_>>(),
                    expected.iter().map(|v| v.entries().to_vec()).collect::<Vec<_>>()
                ));
            }
            branches += 1;
        }
    }
    Ok(branches)
}
