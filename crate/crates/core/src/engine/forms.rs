use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{admissible_classes, applicable_tables, EngineError, PaVector, PowerAssignment};
use crate::cyclo::{divisors, format_rational, Cyclotomic, Rational};
use crate::tables::{CharacterTable, GroupData};

/// Which constraint a form encodes: `μ_l(u, χ_{row+1}, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormLabel {
    pub characteristic: u64,
    /// 0-based row index into the table.
    pub row: usize,
    pub l: u64,
}

/// `k·μ_l` as an affine function of the partial augmentations:
/// `Σ coeffs[c]·ν_c + constant`, with `k` stored as `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub label: FormLabel,
    scale: u64,
    classes: Vec<usize>,
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl AffineForm {
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> Rational {
        self.classes
            .iter()
            .position(|&c| c == class)
            .map_or_else(Rational::zero, |i| self.coeffs[i].clone())
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Same linear part and constant (labels ignored).
    pub fn same_constraint(&self, other: &AffineForm) -> bool {
        self.scale == other.scale
            && self.classes == other.classes
            && self.coeffs == other.coeffs
            && self.constant == other.constant
    }

    /// `(c_1ν_2a + c_2ν_3a + b)/k`.
    pub fn render(&self, g: &GroupData) -> String {
        let mut s = String::new();
        for (&c, q) in self.classes.iter().zip(&self.coeffs) {
            if q.is_zero() {
                continue;
            }
            push_term(&mut s, q, &format!("ν_{}", g.class(c).name));
        }
        if !self.constant.is_zero() || s.is_empty() {
            push_term(&mut s, &self.constant, "");
        }
        format!("({s})/{}", self.scale)
    }
}

/// Appends `± |q|·symbol` in the usual signed-sum layout.
pub(crate) fn push_term(out: &mut String, q: &Rational, symbol: &str) {
    let neg = q.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = q.abs();
    if symbol.is_empty() {
        out.push_str(&format_rational(&mag));
    } else {
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
        }
        out.push_str(symbol);
    }
}

/// Evaluates `μ = (Σ coeffs·v + constant)/scale`; the second component says
/// whether `μ` is a non-negative integer.
pub fn evaluate(f: &AffineForm, v: &PaVector) -> (Rational, bool) {
    let mut acc = f.constant.clone();
    for (&c, q) in f.classes.iter().zip(&f.coeffs) {
        let x = v.entry(c);
        if x != 0 {
            acc += q * Rational::from_integer(BigInt::from(x));
        }
    }
    let mu = acc / Rational::from_integer(BigInt::from(f.scale));
    let ok = mu.is_integer() && !mu.is_negative();
    (mu, ok)
}

/// Per-(table, row) data shared by the `k` forms `μ_0 … μ_{k-1}`.
struct RowData {
    /// `χ(c)` for every admissible class.
    class_values: Vec<Cyclotomic>,
    /// `(d, χ(u^d))` for every divisor `d > 1` of `k`.
    power_values: Vec<(u64, Cyclotomic)>,
}

fn row_data(
    g: &GroupData,
    table: &CharacterTable,
    row: usize,
    k: u64,
    classes: &[usize],
    a: &PowerAssignment,
) -> Result<RowData, EngineError> {
    let class_values = classes
        .iter()
        .map(|&c| g.character_value(table, row, c).cloned())
        .collect::<Result<Vec<_>, _>>()?;
    let mut power_values = Vec::new();
    for d in divisors(k) {
        if d == 1 {
            continue;
        }
        let value = if d == k {
            table.degree(row)
        } else {
            let m = k / d;
            let pa = a.choice(m).ok_or(EngineError::IncompleteAssignment {
                order: k,
                power: d,
                missing: m,
            })?;
            let mut acc = Cyclotomic::zero();
            for (&c, &x) in pa.classes().iter().zip(pa.entries()) {
                if x != 0 {
                    let v = g.character_value(table, row, c)?;
                    acc = &acc + &v.scale(&Rational::from_integer(BigInt::from(x)));
                }
            }
            acc
        };
        power_values.push((d, value));
    }
    Ok(RowData {
        class_values,
        power_values,
    })
}

fn build_form(
    data: &RowData,
    label: FormLabel,
    k: u64,
    classes: &[usize],
    root: u64,
) -> Result<AffineForm, EngineError> {
    let l = label.l as i64;
    let a = root as i64;
    // z^{-l} with z = ζ_k^a
    let twist = Cyclotomic::root(k, -a * l);
    let coeffs = data
        .class_values
        .iter()
        .map(|x| (x * &twist).trace_over(k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut constant = Rational::zero();
    for (d, x) in &data.power_values {
        let m = k / d;
        // z^{-dl} = ζ_m^{-al}
        let t = Cyclotomic::root(m, -a * l);
        constant += (x * &t).trace_over(m)?;
    }
    Ok(AffineForm {
        label,
        scale: k,
        classes: classes.to_vec(),
        coeffs,
        constant,
    })
}

fn check_applicable(table: &CharacterTable, k: u64) -> Result<(), EngineError> {
    if !table.is_ordinary() && k % table.characteristic() == 0 {
        return Err(EngineError::TableNotApplicable {
            characteristic: table.characteristic(),
            order: k,
        });
    }
    Ok(())
}

/// `k·μ_l(u, χ_{row+1}, p)` with `z = ζ_k`.
pub fn mu_form(
    g: &GroupData,
    table: &CharacterTable,
    row: usize,
    k: u64,
    l: u64,
    a: &PowerAssignment,
) -> Result<AffineForm, EngineError> {
    mu_form_with_root(g, table, row, k, l, a, 1)
}

/// As [`mu_form`] but with `z = ζ_k^root`; `root` must be a unit mod `k`.
pub fn mu_form_with_root(
    g: &GroupData,
    table: &CharacterTable,
    row: usize,
    k: u64,
    l: u64,
    a: &PowerAssignment,
    root: u64,
) -> Result<AffineForm, EngineError> {
    check_applicable(table, k)?;
    let classes = admissible_classes(g, k);
    let data = row_data(g, table, row, k, &classes, a)?;
    let label = FormLabel {
        characteristic: table.characteristic(),
        row,
        l: l % k,
    };
    build_form(&data, label, k, &classes, root)
}

/// Every form `μ_l(u, χ, p)` over all applicable tables, all rows and
/// `l = 0 … k-1`, in (table, row, l) order.
pub fn form_family(
    g: &GroupData,
    k: u64,
    a: &PowerAssignment,
    root: u64,
) -> Result<Vec<AffineForm>, EngineError> {
    let classes = admissible_classes(g, k);
    let mut out = Vec::new();
    for table in applicable_tables(g, k) {
        for row in 0..table.num_rows() {
            let data = row_data(g, table, row, k, &classes, a)?;
            for l in 0..k {
                let label = FormLabel {
                    characteristic: table.characteristic(),
                    row,
                    l,
                };
                out.push(build_form(&data, label, k, &classes, root)?);
            }
        }
    }
    Ok(out)
}
