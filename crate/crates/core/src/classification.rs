//! The Kottwitz invariant and the coweight-lattice quotients behind it:
//! twist-coinvariants of `P^vee/Q^vee` presented by integer normal forms,
//! plus the exact sublattice identity that classifies twisted classes with
//! finite Coxeter part.

use serde::Serialize;

use crate::affine_weyl::{AffineElement, AffineWeyl};
use crate::finite_weyl::FiniteWeylElement;
use crate::lattice::{self, Mat128};
use crate::{Error, Result};

/// The coinvariant group `(P^vee/Q^vee)_{delta^k}`, i.e. the quotient of the
/// coweight lattice by `Q^vee + (1 - delta^k) P^vee`, presented by a Smith
/// decomposition of the relation lattice plus its Hermite basis.
#[derive(Debug, Clone)]
pub struct Coinvariants {
    pub twist_pow: usize,
    /// Elementary divisors of the relation lattice (all positive).
    pub divisors: Vec<i128>,
    /// Canonical Hermite basis rows of the relation lattice.
    pub relation_basis: Mat128,
    pub order: i128,
    u: Mat128,
    u_inv: Mat128,
}

/// A canonical residue tuple: entry `i` lies in `[0, divisors[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoinvariantElt(pub Vec<i64>);

impl Coinvariants {
    /// Builds the coinvariant presentation for the twist power `k` of the
    /// context's diagram automorphism.
    pub fn new(w: &AffineWeyl, twist_pow: usize) -> Result<Self> {
        let n = w.rank();
        let k = twist_pow % w.fin.delta_order;
        let delta_mat = w.fin.delta_mat(k);
        // columns: the simple coroots (Q^vee) then (1 - delta^k) e_i
        let mut cols: Vec<Vec<i128>> = Vec::with_capacity(2 * n);
        for j in 0..n {
            cols.push((0..n).map(|i| w.rs().cartan.get(i, j) as i128).collect());
        }
        for j in 0..n {
            cols.push(
                (0..n)
                    .map(|i| i128::from(i == j) - delta_mat.get(i, j) as i128)
                    .collect(),
            );
        }
        let m = lattice::transpose(&cols);
        let s = lattice::snf(&m);
        if s.divisors.len() != n || s.divisors.iter().any(|&d| d <= 0) {
            return Err(Error::Internal(
                "relation lattice of the coinvariant quotient is not full rank".into(),
            ));
        }
        let order: i128 = s.divisors.iter().product();
        let relation_basis = lattice::col_hnf(&cols);
        // second, independent determinant route through the Hermite basis
        let hnf_det = lattice::det128(&relation_basis).abs();
        if hnf_det != order {
            return Err(Error::Internal(format!(
                "quotient order disagrees between Smith ({order}) and Hermite ({hnf_det}) routes"
            )));
        }
        let u_inv = lattice::inv_unimodular(&s.u);
        Ok(Coinvariants {
            twist_pow: k,
            divisors: s.divisors,
            relation_basis,
            order,
            u: s.u,
            u_inv,
        })
    }

    /// Canonical residue of a coweight.
    pub fn reduce(&self, chi: &[i64]) -> CoinvariantElt {
        let chi128: Vec<i128> = chi.iter().map(|&x| x as i128).collect();
        let y = lattice::mat_vec(&self.u, &chi128);
        CoinvariantElt(
            y.iter()
                .zip(&self.divisors)
                .map(|(&v, &d)| i64::try_from(v.rem_euclid(d)).expect("residue fits i64"))
                .collect(),
        )
    }

    pub fn zero(&self) -> CoinvariantElt {
        CoinvariantElt(vec![0; self.divisors.len()])
    }

    pub fn add(&self, a: &CoinvariantElt, b: &CoinvariantElt) -> CoinvariantElt {
        CoinvariantElt(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.divisors)
                .map(|((&x, &y), &d)| (x + y).rem_euclid(d as i64))
                .collect(),
        )
    }

    /// The canonical coweight lift of a residue tuple.
    pub fn lift(&self, v: &CoinvariantElt) -> Vec<i64> {
        let r: Vec<i128> = v.0.iter().map(|&x| x as i128).collect();
        lattice::mat_vec(&self.u_inv, &r)
            .iter()
            .map(|&x| i64::try_from(x).expect("lift fits i64"))
            .collect()
    }

    /// All residue tuples, in lexicographic order.
    pub fn elements(&self) -> Vec<CoinvariantElt> {
        let mut out = vec![CoinvariantElt(Vec::new())];
        for &d in &self.divisors {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d as i64).map(move |v| {
                        let mut next = e.0.clone();
                        next.push(v);
                        CoinvariantElt(next)
                    })
                })
                .collect();
        }
        out
    }

    /// Nontrivial elementary divisors, for presentation.
    pub fn cyclic_factors(&self) -> Vec<i128> {
        self.divisors.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// The Kottwitz invariant of an element of the coset `W~ delta^k`: the class
/// of its translation part in the `delta^k`-coinvariants.
pub fn kottwitz(w: &AffineWeyl, coinv: &Coinvariants, x: &AffineElement) -> Result<CoinvariantElt> {
    if x.delta_pow % w.fin.delta_order != coinv.twist_pow {
        return Err(Error::DeltaPowerMismatch);
    }
    Ok(coinv.reduce(&x.chi))
}

/// One integer preimage certificate for a simple coroot.
#[derive(Debug, Clone, Serialize)]
pub struct CorootPreimage {
    pub node: usize,
    /// Coweight vector `z` with `(1 - c delta^k) z` equal to the coroot.
    pub preimage: Vec<i64>,
}

/// Outcome of the sublattice identity check for a twisted Coxeter element:
/// `(1 - delta^k) P^vee + Q^vee = (1 - c delta^k) P^vee`, together with the
/// coroot membership certificates.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeIdentityReport {
    pub twist_pow: usize,
    pub equality: bool,
    /// The one-sided inclusion (right side inside left side).
    pub inclusion: bool,
    pub coroot_preimages: Vec<CorootPreimage>,
    pub certificates_verified: bool,
    pub lhs_basis: Mat128,
    pub rhs_basis: Mat128,
}

impl LatticeIdentityReport {
    pub fn holds(&self) -> bool {
        self.equality && self.inclusion && self.certificates_verified
    }
}

/// Checks the sublattice identity for a Coxeter element of the coset
/// `W_0 delta^k` (with `k` read off the element). Rejects non-Coxeter input.
pub fn lattice_identity_check(
    w: &AffineWeyl,
    c_delta: &FiniteWeylElement,
) -> Result<LatticeIdentityReport> {
    let k = c_delta.delta_pow % w.fin.delta_order;
    let nodes: Vec<usize> = (1..=w.rank()).collect();
    if !w.fin.coxeter_elements(&nodes, k)?.contains(c_delta) {
        return Err(Error::NotCoxeter);
    }
    let n = w.rank();
    let delta_mat = w.fin.delta_mat(k);
    let mut lhs_cols: Vec<Vec<i128>> = Vec::with_capacity(2 * n);
    for j in 0..n {
        lhs_cols.push(
            (0..n)
                .map(|i| i128::from(i == j) - delta_mat.get(i, j) as i128)
                .collect(),
        );
    }
    for j in 0..n {
        lhs_cols.push((0..n).map(|i| w.rs().cartan.get(i, j) as i128).collect());
    }
    let rhs_cols: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| i128::from(i == j) - c_delta.mat.get(i, j) as i128)
                .collect()
        })
        .collect();

    let lhs_basis = lattice::col_hnf(&lhs_cols);
    let rhs_basis = lattice::col_hnf(&rhs_cols);
    let equality = lhs_basis == rhs_basis;
    let inclusion = rhs_cols
        .iter()
        .all(|v| lattice::lattice_contains(&lhs_cols, v));

    // claim (b): each simple coroot has an integer preimage under 1 - c delta^k
    let one_minus = lattice::transpose(&rhs_cols);
    let mut coroot_preimages = Vec::with_capacity(n);
    let mut certificates_verified = true;
    for node in 1..=n {
        let coroot: Vec<i128> = w
            .rs()
            .coroot_coweight(node)
            .iter()
            .map(|&x| x as i128)
            .collect();
        match lattice::solve(&one_minus, &coroot) {
            Some(z) => {
                let check = lattice::mat_vec(&one_minus, &z);
                if check != coroot {
                    certificates_verified = false;
                }
                coroot_preimages.push(CorootPreimage {
                    node,
                    preimage: z
                        .iter()
                        .map(|&x| i64::try_from(x).expect("preimage fits i64"))
                        .collect(),
                });
            }
            None => {
                certificates_verified = false;
            }
        }
    }

    Ok(LatticeIdentityReport {
        twist_pow: k,
        equality,
        inclusion,
        coroot_preimages,
        certificates_verified,
        lhs_basis,
        rhs_basis,
    })
}

/// A representative `t^mu c delta^k` of the class with finite part in the
/// class of `c_delta` and Kottwitz invariant `v`; `mu` is the canonical lift.
pub fn classify_representative(
    w: &AffineWeyl,
    coinv: &Coinvariants,
    c_delta: &FiniteWeylElement,
    v: &CoinvariantElt,
) -> Result<AffineElement> {
    if c_delta.delta_pow % w.fin.delta_order != coinv.twist_pow {
        return Err(Error::DeltaPowerMismatch);
    }
    let mu = coinv.lift(v);
    let rep = AffineElement {
        chi: mu,
        w_mat: w.fin.w_part_matrix(c_delta),
        delta_pow: coinv.twist_pow,
    };
    debug_assert_eq!(kottwitz(w, coinv, &rep)?, v.clone());
    Ok(rep)
}
