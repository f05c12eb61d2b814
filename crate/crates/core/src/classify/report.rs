use crate::error::{Error, Result};
use crate::numfield::Subfield;
use crate::polyrat::RatFunc;

use super::bclass::{classify_b, BVerdict};
use super::periodic::{rational_periodic_points, PeriodicData};
use super::poly::poly_classify_a;
use super::shape::ShapeWitness;
use super::{field_of_definition, field_of_iterates_with_limit, IteratesField};

/// Everything the classifier can say about one map.
#[derive(Clone, Debug)]
pub struct Report {
    pub field_of_definition: Subfield,
    pub iterates: IteratesField,
    /// Least `n <= max_n` with `f^{∘n}` over Q, if any.
    pub first_rational_iterate: Option<usize>,
    /// `Some(true/false)` when decided, `None` when unknown.
    pub in_a: Option<bool>,
    pub a_witness: Option<ShapeWitness>,
    pub b: BVerdict,
    pub periodic: PeriodicData,
}

pub fn report(f: &RatFunc, max_n: usize) -> Result<Report> {
    report_with_limit(f, max_n, None)
}

/// As [`report`], refusing iterates beyond degree `limit`.
pub fn report_with_limit(f: &RatFunc, max_n: usize, limit: Option<usize>) -> Result<Report> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let iterates = field_of_iterates_with_limit(f, max_n, limit)?;
    let first_rational_iterate = iterates.degrees.iter().position(|&d| d == 1).map(|i| i + 1);
    let b = classify_b(f)?;
    let (mut in_a, mut a_witness) = match f.as_poly() {
        Some(p) => {
            let v = poly_classify_a(p)?;
            (Some(v.member), v.witness)
        }
        None => (None, None),
    };
    if first_rational_iterate.is_some() {
        in_a = Some(true);
    }
    if let BVerdict::Member(w) = &b {
        in_a = Some(true);
        a_witness.get_or_insert_with(|| w.clone());
    }
    Ok(Report {
        field_of_definition: field_of_definition(f),
        iterates,
        first_rational_iterate,
        in_a,
        a_witness,
        b,
        periodic: rational_periodic_points(f),
    })
}
