//! Binomial sums of Fibonacci powers: two independent oracles, the golden
//! ring relations, the weighted sums, the closed forms, and the audit that
//! compares them.

mod audit;
mod closed_form;
mod expansion;
mod oracle;
mod relations;
mod surd;

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

pub use audit::{
    audit, audit_cells, evaluate_cell, AuditCell, AuditEntry, AuditOptions, AuditReport, Verdict,
};
pub use closed_form::{closed_form_rhs, closed_form_value, readings};
pub use expansion::{cross_power_expansion, cross_power_expansion_of, Shift};
pub use oracle::{fib_power_sum_binet, fib_power_sum_oracle, Sign};
pub use relations::{prop1_eval, remark1_relation, Prop1Variant};
pub use surd::{ClosedFormValue, SurdValue};

/// One displayed identity.
///
/// The derived ordering is the canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityFamily {
    /// The twelve power relations, indexed `1..=12`.
    Remark1(u8),
    Prop1(Prop1Variant),
    T2,
    T3,
    T4Even,
    T4Odd,
    T5,
    T6,
    T7,
    Lemma5,
    Lemma7,
}

impl IdentityFamily {
    /// Every family, in canonical order.
    pub fn all() -> Vec<IdentityFamily> {
        let mut v: Vec<_> = (1..=12).map(IdentityFamily::Remark1).collect();
        v.extend(Prop1Variant::ALL.iter().map(|&x| IdentityFamily::Prop1(x)));
        v.extend([
            IdentityFamily::T2,
            IdentityFamily::T3,
            IdentityFamily::T4Even,
            IdentityFamily::T4Odd,
            IdentityFamily::T5,
            IdentityFamily::T6,
            IdentityFamily::T7,
            IdentityFamily::Lemma5,
            IdentityFamily::Lemma7,
        ]);
        v
    }

    /// Expands a tag or group name (`REMARK1`, `PROP1`, `T4`, `all`).
    pub fn parse_group(s: &str) -> Option<Vec<IdentityFamily>> {
        let upper = s.trim().to_ascii_uppercase();
        match upper.as_str() {
            "ALL" => Some(IdentityFamily::all()),
            "REMARK1" | "REMARK1_*" => Some((1..=12).map(IdentityFamily::Remark1).collect()),
            "PROP1" | "PROP1_*" => Some(
                Prop1Variant::ALL
                    .iter()
                    .map(|&x| IdentityFamily::Prop1(x))
                    .collect(),
            ),
            "T4" => Some(alloc::vec![IdentityFamily::T4Even, IdentityFamily::T4Odd]),
            _ => upper.parse().ok().map(|f| alloc::vec![f]),
        }
    }

    /// Exponent and sign of the Fibonacci-power sum the family evaluates.
    pub fn fib_power(self, p: u64) -> Option<(u64, Sign)> {
        use IdentityFamily::*;
        match self {
            T2 => Some((4 * p, Sign::Plus)),
            T3 => Some((4 * p + 2, Sign::Plus)),
            T4Even | T4Odd => Some((4 * p, Sign::Minus)),
            T5 => Some((4 * p + 2, Sign::Minus)),
            T6 => Some((4 * p + 1, Sign::Plus)),
            T7 => Some((4 * p + 3, Sign::Plus)),
            _ => None,
        }
    }

    /// Whether the family has an entry at `(n, p)`.
    pub fn applies(self, n: u64, p: u64) -> bool {
        use IdentityFamily::*;
        match self {
            Remark1(i) => (1..=12).contains(&i) && p >= 1,
            Prop1(_) => true,
            T2 => p >= 1,
            T4Even => p >= 1 && n.is_multiple_of(2),
            T4Odd => p >= 1 && n % 2 == 1,
            T3 | T5 | T6 | T7 => true,
            Lemma5 | Lemma7 => true,
        }
    }

    /// Whether the family ignores `n` (audited once per `p`).
    pub fn ignores_n(self) -> bool {
        matches!(self, IdentityFamily::Remark1(_))
    }

    /// Whether the family ignores `p` (audited once per `n`).
    pub fn ignores_p(self) -> bool {
        matches!(self, IdentityFamily::Lemma5 | IdentityFamily::Lemma7)
    }
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IdentityFamily::*;
        match self {
            Remark1(i) => write!(f, "REMARK1_{i}"),
            Prop1(v) => write!(f, "PROP1_{}", v.label()),
            T2 => f.write_str("T2"),
            T3 => f.write_str("T3"),
            T4Even => f.write_str("T4_EVEN"),
            T4Odd => f.write_str("T4_ODD"),
            T5 => f.write_str("T5"),
            T6 => f.write_str("T6"),
            T7 => f.write_str("T7"),
            Lemma5 => f.write_str("LEMMA5"),
            Lemma7 => f.write_str("LEMMA7"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown identity family")
    }
}

impl FromStr for IdentityFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use IdentityFamily::*;
        let s = s.trim().to_ascii_uppercase();
        if let Some(i) = s.strip_prefix("REMARK1_") {
            return match i.parse::<u8>() {
                Ok(i) if (1..=12).contains(&i) => Ok(Remark1(i)),
                _ => Err(UnknownFamily),
            };
        }
        if let Some(v) = s.strip_prefix("PROP1_") {
            return Prop1Variant::ALL
                .iter()
                .find(|x| x.label() == v)
                .map(|&x| Prop1(x))
                .ok_or(UnknownFamily);
        }
        Ok(match s.as_str() {
            "T2" => T2,
            "T3" => T3,
            "T4_EVEN" => T4Even,
            "T4_ODD" => T4Odd,
            "T5" => T5,
            "T6" => T6,
            "T7" => T7,
            "LEMMA5" => Lemma5,
            "LEMMA7" => Lemma7,
            _ => return Err(UnknownFamily),
        })
    }
}

/// How an ambiguous printed subscript such as `X_{[a]n}` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexReading {
    /// One subscript: `X_{a*n}`.
    Joint,
    /// `X_a` multiplied by `n`.
    Product,
}

/// A way of reading a printed formula. Families with an unambiguous
/// statement have the single reading [`Reading::Printed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reading {
    Printed,
    /// Alternating-sign `4p` power sums.
    Alternating {
        index: IndexReading,
        /// Use the other parity branch's power of `1/sqrt(5)`.
        swapped_prefactor: bool,
    },
    /// Summation limits of the `q`/`s` closed forms.
    Limits {
        /// First (`q`) t-sum runs to `p` rather than `p - 1`.
        q_terms_to_p: bool,
        /// Inner `q` j-sum runs to `n` rather than `n - 1`.
        q_inner_to_n: bool,
        /// Inner `s` j-sum runs to `n` rather than `n - 1`.
        s_inner_to_n: bool,
    },
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Reading::Printed => f.write_str("printed"),
            Reading::Alternating {
                index,
                swapped_prefactor,
            } => {
                let index = match index {
                    IndexReading::Joint => "joint-subscript",
                    IndexReading::Product => "subscript-times-n",
                };
                let prefactor = if swapped_prefactor {
                    "swapped"
                } else {
                    "printed"
                };
                write!(f, "{index};prefactor={prefactor}")
            }
            Reading::Limits {
                q_terms_to_p,
                q_inner_to_n,
                s_inner_to_n,
            } => {
                let t = if q_terms_to_p { "p" } else { "p-1" };
                let jq = if q_inner_to_n { "n" } else { "n-1" };
                let js = if s_inner_to_n { "n" } else { "n-1" };
                write!(f, "q-terms<={t};q-inner<={jq};s-inner<={js}")
            }
        }
    }
}
