//! The end-to-end pipeline: compute a Grothendieck polynomial from a
//! multiplicity-free Schubert polynomial by Möbius inversion, sweep whole
//! symmetric groups against the divided-difference oracle, and re-enact the
//! supporting algebraic identities in a truncated quotient ring.

use std::time::{Duration, Instant};

use serde_json::json;

use crate::error::{Error, Result};
use crate::num::Coeff;
use crate::perm::{iterate_sn, Permutation};
use crate::poly::{ExpVec, SparsePoly};
use crate::poset::{build_poset, VectorPoset};
use crate::schubert::{
    all_coefficients_one, build_table, grothendieck_poly, schubert_poly, Flavor,
};

/// Sweeps above this degree are refused; S_8 and beyond are out of desk range.
pub const MAX_SWEEP_DEGREE: usize = 7;

/// Row counts of the north closure of the Rothe diagram: the poset ceiling.
/// Width `n`; the final entry is always zero. Trim for display.
pub fn ceiling(w: &Permutation) -> ExpVec {
    w.rothe_diagram().north_closure().weight()
}

/// The poset attached to `w`: minimal elements are the Schubert support,
/// bounded above by [`ceiling`].
pub fn support_poset<C: Coeff>(w: &Permutation) -> Result<VectorPoset> {
    let s = schubert_poly::<C>(w);
    poset_from_schubert(&s, &ceiling(w))
}

fn poset_from_schubert<C: Coeff>(s: &SparsePoly<C>, gamma: &ExpVec) -> Result<VectorPoset> {
    build_poset(&s.support(), gamma)
}

/// Grothendieck polynomial of a multiplicity-free `w`, computed without the
/// isobaric oracle: the coefficient at `beta` is `nu(beta) = -mu(0̂, beta)`.
pub fn grothendieck_via_mobius<C: Coeff>(w: &Permutation) -> Result<SparsePoly<C>> {
    let s = schubert_poly::<C>(w);
    mobius_from_schubert(w, &s)
}

fn mobius_from_schubert<C: Coeff>(
    w: &Permutation,
    s: &SparsePoly<C>,
) -> Result<SparsePoly<C>> {
    if !all_coefficients_one(s) {
        return Err(Error::HypothesisViolated { w: w.to_string() });
    }
    let poset = poset_from_schubert(s, &ceiling(w))?;
    let labels = poset.one_sum_labelling::<C>();
    SparsePoly::from_terms(w.n(), labels.iter().map(|(e, c)| (e.clone(), c.clone())))
}

/// Outcome of sweeping all of S_n.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub total: usize,
    pub multiplicity_free: usize,
    pub matches: usize,
    pub mismatches: Vec<Permutation>,
    pub skipped: Vec<Permutation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn to_json(&self, include_skipped: bool) -> serde_json::Value {
        let mut v = json!({
            "n": self.n,
            "total": self.total,
            "multiplicity_free": self.multiplicity_free,
            "matches": self.matches,
            "mismatches": self.mismatches.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        });
        if include_skipped {
            v["skipped"] = json!(self
                .skipped
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>());
        }
        v
    }
}

#[derive(Default)]
struct SweepPartial {
    multiplicity_free: usize,
    matches: usize,
    mismatches: Vec<Permutation>,
    skipped: Vec<Permutation>,
}

/// Checks `grothendieck_via_mobius == grothendieck_poly` for every
/// multiplicity-free `w` in S_n. Mismatches are collected, never thrown.
pub fn verify_theorem<C: Coeff>(n: usize, jobs: usize) -> Result<VerificationReport> {
    if n == 0 || n > MAX_SWEEP_DEGREE {
        return Err(Error::InvalidDegree(format!(
            "sweep degree must lie in 1..={MAX_SWEEP_DEGREE}, got {n}"
        )));
    }
    let started = Instant::now();
    let schuberts = build_table::<C>(n, Flavor::Schubert)?;
    let grothendiecks = build_table::<C>(n, Flavor::Grothendieck)?;
    let perms: Vec<Permutation> = iterate_sn(n).collect();
    let jobs = jobs.clamp(1, perms.len());
    let chunk = perms.len().div_ceil(jobs);

    let partials: Vec<SweepPartial> = std::thread::scope(|scope| {
        let handles: Vec<_> = perms
            .chunks(chunk)
            .map(|slice| {
                let schuberts = &schuberts;
                let grothendiecks = &grothendiecks;
                scope.spawn(move || {
                    let mut part = SweepPartial::default();
                    for w in slice {
                        let s = schuberts.get(w).expect("table is total");
                        if !all_coefficients_one(s) {
                            part.skipped.push(w.clone());
                            continue;
                        }
                        part.multiplicity_free += 1;
                        let expected = grothendiecks.get(w).expect("table is total");
                        let agrees = match mobius_from_schubert(w, s) {
                            Ok(p) => &p == expected,
                            Err(_) => false,
                        };
                        if agrees {
                            part.matches += 1;
                        } else {
                            part.mismatches.push(w.clone());
                        }
                    }
                    part
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    let mut report = VerificationReport {
        n,
        total: perms.len(),
        multiplicity_free: 0,
        matches: 0,
        mismatches: Vec::new(),
        skipped: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for part in partials {
        report.multiplicity_free += part.multiplicity_free;
        report.matches += part.matches;
        report.mismatches.extend(part.mismatches);
        report.skipped.extend(part.skipped);
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Default truncation degree for [`proof_identity_check`]: the degree of the
/// Grothendieck polynomial, taken from the oracle.
pub fn default_truncation_degree<C: Coeff>(w: &Permutation) -> usize {
    grothendieck_poly::<C>(w)
        .degree()
        .expect("Grothendieck polynomials are nonzero")
}

/// Detail from one run of the proof re-enactment.
#[derive(Clone, Debug)]
pub struct ProofIdentityReport {
    pub w: Permutation,
    pub d: usize,
    /// Effective number of variables (trailing unused variables dropped).
    pub width: usize,
    pub poset_size: usize,
    pub vanishing_ok: bool,
    pub truncated_identity_ok: bool,
    pub restriction_ok: bool,
}

impl ProofIdentityReport {
    pub fn ok(&self) -> bool {
        self.vanishing_ok && self.truncated_identity_ok && self.restriction_ok
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "w": self.w.to_string(),
            "d": self.d,
            "width": self.width,
            "poset_size": self.poset_size,
            "vanishing_ok": self.vanishing_ok,
            "truncated_identity_ok": self.truncated_identity_ok,
            "restriction_ok": self.restriction_ok,
            "ok": self.ok(),
        })
    }
}

/// Re-enacts the supporting chain of identities for a multiplicity-free `w`
/// inside the quotient ring with every variable nilpotent past degree `d`:
///
/// 1. label the enlarged poset with ceiling `(d, ..., d)` and check that the
///    labels vanish outside the box below [`ceiling`]`(w)`;
/// 2. check that the label generating function reproduces the Grothendieck
///    polynomial in the truncated ring (shifted variables `u_i = 1 - z_i`, so
///    the ring relation is the monomial rule `u_i^{d+1} = 0`);
/// 3. check that restricting the enlarged poset to that box gives exactly the
///    elements of the poset of `w`.
pub fn proof_identity_check<C: Coeff>(w: &Permutation, d: usize) -> Result<bool> {
    Ok(proof_identity_report::<C>(w, d)?.ok())
}

pub fn proof_identity_report<C: Coeff>(w: &Permutation, d: usize) -> Result<ProofIdentityReport> {
    let s = schubert_poly::<C>(w);
    if !all_coefficients_one(&s) {
        return Err(Error::HypothesisViolated { w: w.to_string() });
    }
    let g = grothendieck_poly::<C>(w);
    let needed = g.degree().expect("Grothendieck polynomials are nonzero");
    if d < needed {
        return Err(Error::TruncationDegree { d, needed });
    }

    let gamma = ceiling(w);
    let width = s
        .support_width()
        .max(g.support_width())
        .max(gamma.support_width());
    let gamma = gamma.truncated_to(width);

    let minimals = s.truncated_to_width(width).support();
    let box_ceiling = ExpVec::new(vec![d as u32; width]);
    let enlarged = build_poset(&minimals, &box_ceiling)?;
    let labels = enlarged.one_sum_labelling::<C>();

    let vanishing_ok = enlarged
        .elements()
        .iter()
        .filter(|b| !b.leq(&gamma))
        .all(|b| labels.nu(b).is_some_and(|c| c.is_zero()));

    // u-representation: substituting u_i for x_i is a formal renaming, so the
    // truncated comparison is between g itself and the label sum.
    let lhs = g.truncated_to_width(width).truncate(d);
    assert_eq!(
        lhs.base().num_terms(),
        g.num_terms(),
        "truncation at d >= deg must not kill terms"
    );
    let label_sum =
        SparsePoly::from_terms(width, labels.iter().map(|(e, c)| (e.clone(), c.clone())))?;
    let truncated_identity_ok = lhs == label_sum.truncate(d);

    let restricted: Vec<ExpVec> = enlarged
        .elements()
        .iter()
        .filter(|b| b.leq(&gamma))
        .cloned()
        .collect();
    let small = support_poset::<C>(w)?;
    let small_trimmed: Vec<ExpVec> = small
        .elements()
        .iter()
        .map(|e| e.truncated_to(width))
        .collect();
    let restriction_ok = restricted == small_trimmed;

    Ok(ProofIdentityReport {
        w: w.clone(),
        d,
        width,
        poset_size: enlarged.len(),
        vanishing_ok,
        truncated_identity_ok,
        restriction_ok,
    })
}
