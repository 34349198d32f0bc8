//! Exact check that the general-b coefficient table reduces to the Legendre
//! table at `b = 1`.

use std::fmt;

use crate::coeffs::{diff_tables, jacobi_coeff_table_exact, jacobi_table_closed, legendre_table, CoefficientTable, Rational, TableDiff};

/// Orders with printed reference tables.
const PRINTED_ORDERS: usize = 2;

#[derive(Debug, Clone)]
pub struct TableReport {
    pub pass: bool,
    /// Differences of the generated b=1 table from the reference.
    pub generated_diffs: Vec<TableDiff<Rational>>,
    /// Differences of the closed-form general-b table at b=1.
    pub closed_diffs: Vec<TableDiff<Rational>>,
    pub reference: CoefficientTable<Rational>,
    pub generated: CoefficientTable<Rational>,
    /// The b=2 table, for documentation.
    pub b2: CoefficientTable<Rational>,
}

pub fn verify_tables() -> TableReport {
    verify_against(legendre_table())
}

/// The same check against an arbitrary reference, used as a negative control.
pub fn verify_against(reference: CoefficientTable<Rational>) -> TableReport {
    let one = Rational::from_integer(1);
    let generated = jacobi_coeff_table_exact(one, PRINTED_ORDERS);
    let closed = jacobi_table_closed(&one);
    let generated_diffs = diff_tables(&generated, &reference);
    let closed_diffs = diff_tables(&closed, &reference);
    TableReport {
        pass: generated_diffs.is_empty() && closed_diffs.is_empty(),
        generated_diffs,
        closed_diffs,
        reference,
        generated,
        b2: jacobi_coeff_table_exact(Rational::from_integer(2), PRINTED_ORDERS),
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Legendre table (reference):\n{}", self.reference)?;
        writeln!(f, "general-b table at b=1 (generated):\n{}", self.generated)?;
        writeln!(f, "general-b table at b=2:\n{}", self.b2)?;
        for (what, diffs) in [("generated", &self.generated_diffs), ("closed form", &self.closed_diffs)] {
            for d in diffs {
                writeln!(f, "mismatch ({what}) at m={}, k={}: {} vs reference {}", d.m, d.k, d.left, d.right)?;
            }
        }
        write!(f, "{}", if self.pass { "tables agree: PASS" } else { "tables differ: FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1_passes_and_perturbation_fails() {
        assert!(verify_tables().pass);
        let mut entries: Vec<((usize, usize), Rational)> = legendre_table().entries().map(|(k, v)| (k, *v)).collect();
        entries[2].1 += Rational::new(1, 7);
        let bad = verify_against(CoefficientTable::from_entries(entries));
        assert!(!bad.pass);
        assert_eq!(bad.generated_diffs.len(), 1);
        assert_eq!((bad.generated_diffs[0].m, bad.generated_diffs[0].k), (2, 3));
    }
}
