use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use super::format::GroupFile;
use super::{CharacterTable, ClassInfo, PowerMap, TableError};
use crate::cyclo::{is_prime, prime_divisors};

/// One failed structural check, with the coordinates of the offending entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Default)]
pub(super) struct Checker {
    violations: Vec<Violation>,
}

impl Checker {
    pub(super) fn push(&mut self, location: &str, message: impl Into<String>) {
        self.violations.push(Violation {
            location: location.to_string(),
            message: message.into(),
        });
    }

    pub(super) fn finish(self) -> Result<(), TableError> {
        if self.violations.is_empty() {
            Ok(())
        } else {
            Err(TableError::Invalid(self.violations))
        }
    }

    pub(super) fn check_group_header(&mut self, file: &GroupFile, classes: &[ClassInfo]) {
        if file.order == 0 {
            self.push("order", "must be positive");
        }
        if file.exponent == 0 {
            self.push("exponent", "must be positive");
        } else if file.order % file.exponent != 0 {
            self.push(
                "exponent",
                format!("{} does not divide the group order {}", file.exponent, file.order),
            );
        }
        if let Some(psl) = file.psl {
            if !is_prime(psl.p) {
                self.push("psl.p", format!("{} is not prime", psl.p));
            }
            if psl.f == 0 {
                self.push("psl.f", "must be positive");
            }
        }
        match classes.first() {
            None => self.push("classes", "no classes listed"),
            Some(c) if c.name != "1a" || c.element_order != 1 => {
                self.push("classes[0]", "the first class must be '1a' of order 1")
            }
            _ => {}
        }
        let mut seen = HashSet::new();
        for (i, c) in classes.iter().enumerate() {
            let loc = format!("classes[{i}] '{}'", c.name);
            if c.name.is_empty() {
                self.push(&loc, "empty class name");
            }
            if !seen.insert(c.name.as_str()) {
                self.push(&loc, "duplicate class name");
            }
            if c.element_order == 0 {
                self.push(&loc, "element order must be positive");
            } else if file.exponent > 0 && file.exponent % c.element_order != 0 {
                self.push(
                    &loc,
                    format!(
                        "element order {} does not divide the exponent {}",
                        c.element_order, file.exponent
                    ),
                );
            }
            if i > 0 && c.element_order == 1 {
                self.push(&loc, "only the identity class may have element order 1");
            }
        }
    }

    pub(super) fn check_powermaps(
        &mut self,
        exponent: u64,
        classes: &[ClassInfo],
        maps: &[PowerMap],
    ) {
        for map in maps {
            let loc = format!("powermaps.{}", map.prime);
            if !is_prime(map.prime) {
                self.push(&loc, "power maps are keyed by primes");
                continue;
            }
            if map.images.first() != Some(&0) {
                self.push(&loc, "the identity class must map to '1a'");
            }
            for (i, &img) in map.images.iter().enumerate() {
                let n = classes[i].element_order;
                if n == 0 {
                    continue;
                }
                let want = n / n.gcd(&map.prime);
                let got = classes[img].element_order;
                if got != want {
                    self.push(
                        &format!("{loc}[{}]", classes[i].name),
                        format!(
                            "image '{}' has order {got}, expected {want}",
                            classes[img].name
                        ),
                    );
                }
            }
        }
        if exponent > 0 {
            for p in prime_divisors(exponent) {
                if !maps.iter().any(|m| m.prime == p) {
                    self.push("powermaps", format!("missing the {p}-power map"));
                }
            }
        }
    }

    pub(super) fn check_tables(
        &mut self,
        group_order: u64,
        classes: &[ClassInfo],
        tables: &[CharacterTable],
    ) {
        let ordinary = tables.iter().filter(|t| t.characteristic == 0).count();
        if ordinary != 1 {
            self.push(
                "tables",
                format!("expected exactly one characteristic 0 table, found {ordinary}"),
            );
        }
        let mut chars = HashSet::new();
        for (ti, t) in tables.iter().enumerate() {
            let p = t.characteristic;
            let loc = format!("tables[{ti}] (char {p})");
            if !chars.insert(p) && p != 0 {
                self.push(&loc, "duplicate characteristic");
            }
            if p != 0 && (!is_prime(p) || group_order % p != 0) {
                self.push(&loc, format!("{p} is not a prime divisor of the group order"));
                continue;
            }
            let mut cols = HashSet::new();
            for &c in &t.classes {
                if !cols.insert(c) {
                    self.push(&loc, format!("class '{}' listed twice", classes[c].name));
                }
                if p != 0 && classes[c].element_order % p == 0 {
                    self.push(
                        &loc,
                        format!(
                            "p-singular class '{}' (order {}) in a Brauer table",
                            classes[c].name, classes[c].element_order
                        ),
                    );
                }
            }
            for (ci, c) in classes.iter().enumerate() {
                let regular = p == 0 || c.element_order % p != 0;
                if regular && !cols.contains(&ci) {
                    self.push(&loc, format!("class '{}' is not covered", c.name));
                }
            }
            if t.rows.is_empty() {
                self.push(&loc, "no characters");
            }
            for (r, row) in t.rows.iter().enumerate() {
                let rloc = format!("{loc} chi_{}", r + 1);
                if row.len() != t.classes.len() {
                    self.push(
                        &rloc,
                        format!("has {} values for {} classes", row.len(), t.classes.len()),
                    );
                    continue;
                }
                for (col, (&c, v)) in t.classes.iter().zip(row).enumerate() {
                    let class = &classes[c];
                    if class.element_order == 1 {
                        let ok = v
                            .to_rational()
                            .is_some_and(|q| q.is_integer() && q.is_positive());
                        if !ok {
                            self.push(&rloc, format!("degree {v} is not a positive integer"));
                        }
                    } else if class.element_order > 0 && !v.lies_in(class.element_order) {
                        self.push(
                            &format!("{rloc} column {} '{}'", col + 1, class.name),
                            format!(
                                "value {v} does not lie in Q(zeta_{})",
                                class.element_order
                            ),
                        );
                    }
                }
            }
        }
    }
}
