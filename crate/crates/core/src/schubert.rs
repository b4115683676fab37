//! Schubert and Grothendieck polynomials by divided-difference recursion.
//!
//! Both families start from the staircase monomial of the longest element
//! and descend through the weak order: one divided difference (`Schubert`)
//! or one isobaric divided difference (`Grothendieck`) per covering step.

use std::collections::HashMap;
use std::io;

use crate::error::{Error, Result};
use crate::num::Coeff;
use crate::perm::{iterate_sn, Permutation};
use crate::poly::{ExpVec, SparsePoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Schubert,
    Grothendieck,
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`, the polynomial of the longest element.
pub fn staircase<C: Coeff>(n: usize) -> SparsePoly<C> {
    let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    SparsePoly::monomial(ExpVec::new(exps), C::one())
}

fn apply_step<C: Coeff>(p: &SparsePoly<C>, i: usize, flavor: Flavor) -> SparsePoly<C> {
    let out = match flavor {
        Flavor::Schubert => p.divided_difference(i),
        Flavor::Grothendieck => p.isobaric_divided_difference(i),
    };
    out.expect("descent index within range")
}

/// Walks from `w` up to the longest element along first ascents, then plays
/// the recorded steps back down from the staircase.
fn poly_by_chain<C: Coeff>(w: &Permutation, flavor: Flavor) -> SparsePoly<C> {
    let mut steps = Vec::with_capacity(w.n() * (w.n() - 1) / 2);
    let mut u = w.clone();
    while let Some(i) = u.first_ascent() {
        steps.push(i);
        u = u.right_multiply_adjacent(i).expect("ascent within range");
    }
    let mut p = staircase::<C>(w.n());
    for &i in steps.iter().rev() {
        p = apply_step(&p, i, flavor);
    }
    p
}

/// The Schubert polynomial of `w`, homogeneous of degree `length(w)`.
pub fn schubert_poly<C: Coeff>(w: &Permutation) -> SparsePoly<C> {
    poly_by_chain(w, Flavor::Schubert)
}

/// The Grothendieck polynomial of `w`; its lowest-degree part is the
/// Schubert polynomial.
pub fn grothendieck_poly<C: Coeff>(w: &Permutation) -> SparsePoly<C> {
    poly_by_chain(w, Flavor::Grothendieck)
}

/// True when every coefficient of the Schubert polynomial equals 1.
pub fn is_multiplicity_free<C: Coeff>(w: &Permutation) -> bool {
    all_coefficients_one(&schubert_poly::<C>(w))
}

pub(crate) fn all_coefficients_one<C: Coeff>(p: &SparsePoly<C>) -> bool {
    p.terms().all(|(_, c)| c.is_one())
}

/// All `n!` polynomials of one flavor, keyed by permutation.
pub struct PolynomialTable<C> {
    n: usize,
    flavor: Flavor,
    entries: HashMap<Permutation, SparsePoly<C>>,
}

/// Builds the full table by breadth-first descent from the longest element,
/// so each polynomial is derived from a single predecessor.
pub fn build_table<C: Coeff>(n: usize, flavor: Flavor) -> Result<PolynomialTable<C>> {
    if n == 0 {
        return Err(Error::InvalidDegree("degree must be at least 1".into()));
    }
    let w0 = Permutation::longest_element(n)?;
    let top_length = w0.length();
    let mut entries: HashMap<Permutation, SparsePoly<C>> = HashMap::with_capacity(factorial(n));
    entries.insert(w0.clone(), staircase(n));

    let mut level = vec![w0];
    for _ in (1..=top_length).rev() {
        let mut next = Vec::new();
        for w in &level {
            for i in w.descents() {
                let v = w.right_multiply_adjacent(i)?;
                if !entries.contains_key(&v) {
                    let q = apply_step(&entries[w], i, flavor);
                    entries.insert(v.clone(), q);
                    next.push(v);
                }
            }
        }
        level = next;
    }
    debug_assert_eq!(entries.len(), factorial(n));
    Ok(PolynomialTable { n, flavor, entries })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Exponent vectors of the nine Schubert monomials of 143562; golden data
/// shared by tests across modules.
#[cfg(test)]
pub(crate) const SUPPORT_143562: [[u32; 6]; 9] = [
    [2, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [2, 1, 1, 1, 0, 0],
    [1, 2, 1, 1, 0, 0],
    [2, 1, 1, 0, 1, 0],
    [1, 2, 1, 0, 1, 0],
    [2, 1, 0, 1, 1, 0],
    [1, 2, 0, 1, 1, 0],
    [0, 2, 1, 1, 1, 0],
];

impl<C: Coeff> PolynomialTable<C> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, w: &Permutation) -> Option<&SparsePoly<C>> {
        self.entries.get(w)
    }

    /// Streams one JSON object per permutation, in lexicographic order:
    /// `{"w": "<one-line>", "poly": {...}}`.
    pub fn write_jsonl<W: io::Write>(&self, out: &mut W) -> io::Result<()> {
        for w in iterate_sn(self.n) {
            let poly = &self.entries[&w];
            let line = serde_json::json!({ "w": w.to_string(), "poly": poly });
            serde_json::to_writer(&mut *out, &line)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}
