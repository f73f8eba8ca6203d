//! γ-style grouping: a coefficient pattern shared by several forms is named
//! once (`γ_1 = 2ν_3a - ν_9a - ν_9b - ν_9c`) and forms are written in terms
//! of it (`(3γ_1 + 3)/9`).

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use help_core::cyclo::{format_rational, Rational};
use help_core::engine::AffineForm;
use help_core::tables::GroupData;

use crate::report::{FormReport, FormSet, GammaDef};

/// Primitive integer vector proportional to `coeffs`, first nonzero entry
/// positive. `None` for the zero vector or oversized entries.
pub fn direction(coeffs: &[Rational]) -> Option<Vec<i64>> {
    let mut pairs = Vec::with_capacity(coeffs.len());
    for q in coeffs {
        pairs.push((q.numer().to_i64()?, q.denom().to_i64()?));
    }
    let l = pairs.iter().fold(1i64, |a, &(_, d)| a.lcm(&d));
    let mut v = pairs
        .iter()
        .map(|&(n, d)| n.checked_mul(l / d))
        .collect::<Option<Vec<i64>>>()?;
    let g = v.iter().fold(0i64, |a, x| a.gcd(x));
    let first = *v.iter().find(|x| **x != 0)?;
    let g = if first < 0 { -g } else { g };
    for x in &mut v {
        *x /= g;
    }
    Some(v)
}

/// Appends `± |q|·symbol`.
fn push_term(out: &mut String, q: &Rational, symbol: &str) {
    let neg = q.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = q.abs();
    if symbol.is_empty() || mag != Rational::from_integer(1.into()) {
        out.push_str(&format_rational(&mag));
    }
    out.push_str(symbol);
}

/// Named patterns, numbered by first appearance.
#[derive(Debug, Clone, Default)]
pub struct Gammas {
    patterns: Vec<Vec<i64>>,
}

impl Gammas {
    /// Patterns with at least two nonzero entries that occur in two or more
    /// of `forms`.
    pub fn collect<'a>(forms: impl IntoIterator<Item = &'a AffineForm>) -> Self {
        let mut seen: Vec<Vec<i64>> = Vec::new();
        let mut count: HashMap<Vec<i64>, usize> = HashMap::new();
        for f in forms {
            let Some(d) = direction(f.coeffs()) else {
                continue;
            };
            if d.iter().filter(|x| **x != 0).count() < 2 {
                continue;
            }
            let n = count.entry(d.clone()).or_insert(0);
            if *n == 0 {
                seen.push(d);
            }
            *n += 1;
        }
        Gammas {
            patterns: seen.into_iter().filter(|d| count[d] >= 2).collect(),
        }
    }

    fn index(&self, f: &AffineForm) -> Option<(usize, Rational)> {
        let d = direction(f.coeffs())?;
        let i = self.patterns.iter().position(|p| *p == d)?;
        let j = d.iter().position(|x| *x != 0)?;
        let factor = &f.coeffs()[j] / Rational::from_integer(d[j].into());
        Some((i, factor))
    }

    pub fn def(&self, g: &GroupData, classes: &[usize], i: usize) -> GammaDef {
        let mut s = String::new();
        for (&c, &x) in classes.iter().zip(&self.patterns[i]) {
            if x != 0 {
                push_term(&mut s, &Rational::from_integer(x.into()), &format!("ν_{}", g.class(c).name));
            }
        }
        GammaDef {
            name: format!("γ_{}", i + 1),
            coeffs: self.patterns[i].clone(),
            rendered: s,
        }
    }

    /// `(factor·γ_i + constant)/k`, when `f` follows a named pattern.
    pub fn grouped(&self, f: &AffineForm) -> Option<String> {
        let (i, factor) = self.index(f)?;
        let mut s = String::new();
        push_term(&mut s, &factor, &format!("γ_{}", i + 1));
        if !f.constant().is_zero() {
            push_term(&mut s, f.constant(), "");
        }
        Some(format!("({s})/{}", f.scale()))
    }

    pub fn form_report(&self, g: &GroupData, f: &AffineForm) -> FormReport {
        let table = match f.label.characteristic {
            0 => "*".to_string(),
            p => p.to_string(),
        };
        FormReport {
            label: format!("μ_{}(u, χ_{}, {})", f.label.l, f.label.row + 1, table),
            table,
            character: f.label.row + 1,
            l: f.label.l,
            scale: f.scale(),
            coeffs: f.coeffs().iter().map(format_rational).collect(),
            constant: format_rational(f.constant()),
            affine: f.render(g),
            grouped: self.grouped(f),
        }
    }

    /// Reports for `forms` with the definitions of the patterns they use.
    pub fn form_set(&self, g: &GroupData, classes: &[usize], forms: &[AffineForm]) -> FormSet {
        let mut used: Vec<usize> = forms.iter().filter_map(|f| self.index(f)).map(|(i, _)| i).collect();
        used.sort_unstable();
        used.dedup();
        FormSet {
            gammas: used.into_iter().map(|i| self.def(g, classes, i)).collect(),
            forms: forms.iter().map(|f| self.form_report(g, f)).collect(),
        }
    }

    /// Definitions used by `f` alone.
    pub fn defs_for(&self, g: &GroupData, classes: &[usize], f: &AffineForm) -> Vec<GammaDef> {
        self.index(f)
            .map(|(i, _)| vec![self.def(g, classes, i)])
            .unwrap_or_default()
    }
}
