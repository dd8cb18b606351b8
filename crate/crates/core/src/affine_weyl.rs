//! The extended affine Weyl group with twist, `P^vee x W0'`: exact element
//! arithmetic, the Iwahori-Matsumoto length formula, the affine simple
//! reflection `s_0 = t^{theta^vee} s_theta`, supports, the length-zero
//! subgroup, the finite-part projection, and powers.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::finite_weyl::{FiniteWeyl, FiniteWeylElement, Twist};
use crate::matrix::IntMat;
use crate::root_system::{build_root_system, RootSystem, TypeLetter};
use crate::{Error, Result};

/// An element `t^chi * w * delta^k`.
///
/// `chi` lives in the coweight lattice (fundamental-coweight basis), `w_mat`
/// is the matrix of the finite Weyl part alone (no twist factor), and
/// `delta_pow` is the twist power. Equality is componentwise, so the
/// representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineElement {
    pub chi: Vec<i64>,
    #[serde(rename = "matrix")]
    pub w_mat: IntMat,
    pub delta_pow: usize,
}

/// A length-zero element together with the minuscule node generating its
/// translation part (`None` for the identity and pure twist powers).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaElement {
    pub elt: AffineElement,
    pub minuscule_index: Option<usize>,
}

/// Report of the finite-order test for an affine element.
#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    /// Order `n` of the finite part in `W0'`.
    pub finite_part_order: usize,
    /// Whether the `n`-th power of the element is the identity.
    pub is_finite_order: bool,
    /// Translation part of the `n`-th power (the obstruction when nonzero).
    pub translation_witness: Vec<i64>,
}

/// Context for the extended affine Weyl group of one root system and twist.
#[derive(Debug, Clone)]
pub struct AffineWeyl {
    pub fin: FiniteWeyl,
    theta_coroot: Vec<i64>,
    s_theta: IntMat,
    cartan_adj: IntMat,
    cartan_det: i64,
}

/// Convenience constructor for the common (type, rank, twist) setup.
pub fn context_for(letter: TypeLetter, rank: usize, twist: Twist) -> Result<AffineWeyl> {
    let rs = Arc::new(build_root_system(letter, rank)?);
    let fin = FiniteWeyl::from_twist(rs, twist)?;
    Ok(AffineWeyl::new(fin))
}

impl AffineWeyl {
    pub fn new(fin: FiniteWeyl) -> Self {
        let theta_coroot = fin.rs.theta_coroot_coweight();
        let s_theta = fin.rs.s_theta_matrix();
        let cartan_adj = fin.rs.cartan.adjugate();
        let cartan_det = i64::try_from(fin.rs.cartan.det()).expect("Cartan determinant fits i64");
        AffineWeyl {
            fin,
            theta_coroot,
            s_theta,
            cartan_adj,
            cartan_det,
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.fin.rs
    }

    pub fn rank(&self) -> usize {
        self.fin.rs.rank
    }

    /// The affine node set: 0 plus the finite nodes, ascending.
    pub fn affine_nodes(&self) -> Vec<usize> {
        (0..=self.rank()).collect()
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement {
            chi: vec![0; self.rank()],
            w_mat: IntMat::identity(self.rank()),
            delta_pow: 0,
        }
    }

    pub fn translation(&self, chi: &[i64]) -> Result<AffineElement> {
        if chi.len() != self.rank() {
            return Err(Error::DimensionMismatch(
                "translation coweight has wrong length".into(),
            ));
        }
        Ok(AffineElement {
            chi: chi.to_vec(),
            w_mat: IntMat::identity(self.rank()),
            delta_pow: 0,
        })
    }

    /// `s_0 = t^{theta^vee} s_theta`.
    pub fn s0(&self) -> AffineElement {
        AffineElement {
            chi: self.theta_coroot.clone(),
            w_mat: self.s_theta.clone(),
            delta_pow: 0,
        }
    }

    /// Simple affine generator for a node of the affine diagram (0 allowed).
    pub fn simple(&self, node: usize) -> AffineElement {
        if node == 0 {
            self.s0()
        } else {
            AffineElement {
                chi: vec![0; self.rank()],
                w_mat: self.fin.simple(node).mat,
                delta_pow: 0,
            }
        }
    }

    pub fn delta_element(&self, k: usize) -> AffineElement {
        AffineElement {
            chi: vec![0; self.rank()],
            w_mat: IntMat::identity(self.rank()),
            delta_pow: k % self.fin.delta_order,
        }
    }

    /// Embeds a finite element as an affine element with zero translation.
    pub fn from_finite(&self, f: &FiniteWeylElement) -> AffineElement {
        AffineElement {
            chi: vec![0; self.rank()],
            w_mat: self.fin.w_part_matrix(f),
            delta_pow: f.delta_pow % self.fin.delta_order,
        }
    }

    /// Matrix of the full finite action `w * delta^k`.
    pub fn full_matrix(&self, x: &AffineElement) -> IntMat {
        x.w_mat.mul(self.fin.delta_mat(x.delta_pow))
    }

    fn check_dims(&self, x: &AffineElement) -> Result<()> {
        if x.chi.len() != self.rank() || x.w_mat.n() != self.rank() {
            return Err(Error::DimensionMismatch(
                "element belongs to a different root system".into(),
            ));
        }
        Ok(())
    }

    /// `(t^chi w)(t^{chi'} w') = t^{chi + w chi'} w w'`, with the twist
    /// factors acting on both the translation and the finite part.
    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> Result<AffineElement> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let fa = self.full_matrix(a);
        let mut chi = fa.mul_vec(&b.chi);
        for (c, &ca) in chi.iter_mut().zip(&a.chi) {
            *c += ca;
        }
        let k = (a.delta_pow + b.delta_pow) % self.fin.delta_order;
        let full = fa.mul(&self.full_matrix(b));
        let w_mat = full.mul(self.fin.delta_mat_inv(k));
        AffineElement {
            chi,
            w_mat,
            delta_pow: k,
        }
    }

    pub fn mul_many(&self, xs: &[&AffineElement]) -> AffineElement {
        let mut acc = self.identity();
        for x in xs {
            acc = self.mul_unchecked(&acc, x);
        }
        acc
    }

    pub fn inv(&self, a: &AffineElement) -> AffineElement {
        let full_inv = self
            .full_matrix(a)
            .inverse_unimodular()
            .expect("Weyl group matrices are unimodular");
        let k = (self.fin.delta_order - a.delta_pow % self.fin.delta_order) % self.fin.delta_order;
        let chi: Vec<i64> = full_inv.mul_vec(&a.chi).iter().map(|&x| -x).collect();
        let w_mat = full_inv.mul(self.fin.delta_mat_inv(k));
        AffineElement {
            chi,
            w_mat,
            delta_pow: k,
        }
    }

    /// Iwahori-Matsumoto length; twist powers contribute zero.
    pub fn length(&self, x: &AffineElement) -> usize {
        let mut total: i64 = 0;
        for alpha in &self.rs().positive_roots {
            let pre = x.w_mat.transpose_mul_vec(alpha);
            let pairing: i64 = x.chi.iter().zip(alpha).map(|(&c, &a)| c * a).sum();
            if RootSystem::is_negative_root_vec(&pre) {
                total += (pairing - 1).abs();
            } else {
                total += pairing.abs();
            }
        }
        usize::try_from(total).expect("length is nonnegative")
    }

    /// `s_i x s_i` for `i` in the affine node set.
    pub fn simple_conjugate(&self, node: usize, x: &AffineElement) -> AffineElement {
        let s = self.simple(node);
        self.mul_unchecked(&self.mul_unchecked(&s, x), &s)
    }

    /// Finite part `eta(t^chi w delta^k) = w delta^k`.
    pub fn eta(&self, x: &AffineElement) -> FiniteWeylElement {
        FiniteWeylElement {
            mat: self.full_matrix(x),
            delta_pow: x.delta_pow,
        }
    }

    /// Is the coweight in the coroot lattice?
    pub fn in_coroot_lattice(&self, chi: &[i64]) -> bool {
        // chi in Q^vee iff cartan^{-1} chi is integral; use the adjugate.
        let scaled = self.cartan_adj.mul_vec(chi);
        scaled.iter().all(|&x| x % self.cartan_det == 0)
    }

    /// Is `x` in the unextended affine Weyl group `W_a = Q^vee x W0`?
    pub fn in_wa(&self, x: &AffineElement) -> bool {
        x.delta_pow % self.fin.delta_order == 0 && self.in_coroot_lattice(&x.chi)
    }

    /// The `W_a` part of `x` relative to `tau`, i.e. `x tau^{-1}`, which must
    /// land in `W_a`.
    pub fn wa_part(&self, x: &AffineElement, tau: &AffineElement) -> Result<AffineElement> {
        let y = self.mul(x, &self.inv(tau))?;
        if !self.in_wa(&y) {
            return Err(Error::NotInCoset);
        }
        Ok(y)
    }

    /// A reduced word over the affine generators for an element of `W_a`,
    /// recovered by greedy left descent.
    pub fn reduced_word_wa(&self, y: &AffineElement) -> Result<Vec<usize>> {
        if !self.in_wa(y) {
            return Err(Error::NotInCoset);
        }
        let mut cur = y.clone();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let mut stepped = false;
            for node in 0..=self.rank() {
                let cand = self.mul_unchecked(&self.simple(node), &cur);
                let cand_len = self.length(&cand);
                if cand_len < len {
                    word.push(node);
                    cur = cand;
                    len = cand_len;
                    stepped = true;
                    break;
                }
            }
            if !stepped {
                return Err(Error::Internal(
                    "no left descent found for a positive-length element".into(),
                ));
            }
        }
        if cur != self.identity() {
            return Err(Error::Internal(
                "length-zero remainder of a W_a element is not the identity".into(),
            ));
        }
        Ok(word)
    }

    /// The permutation of the affine node set induced by conjugation by a
    /// length-zero element: `tau s_i tau^{-1} = s_{pi(i)}`.
    pub fn tau_action(&self, tau: &AffineElement) -> Result<Vec<usize>> {
        let tau_inv = self.inv(tau);
        let simples: Vec<AffineElement> =
            (0..=self.rank()).map(|node| self.simple(node)).collect();
        let mut pi = vec![usize::MAX; self.rank() + 1];
        for (i, pi_i) in pi.iter_mut().enumerate() {
            let conj = self.mul_unchecked(&self.mul_unchecked(tau, &simples[i]), &tau_inv);
            let found = simples.iter().position(|s| *s == conj).ok_or_else(|| {
                Error::Internal(
                    "conjugation by the given element does not permute the affine generators"
                        .into(),
                )
            })?;
            *pi_i = found;
        }
        Ok(pi)
    }

    /// Support of `x` relative to `tau`: the minimal `tau`-stable subset `J`
    /// of the affine nodes with `x` in `W_J x <tau>`.
    pub fn support(&self, x: &AffineElement, tau: &AffineElement) -> Result<Vec<usize>> {
        let y = self.wa_part(x, tau)?;
        let word = self.reduced_word_wa(&y)?;
        let pi = self.tau_action(tau)?;
        let mut support: Vec<bool> = vec![false; self.rank() + 1];
        let mut queue: VecDeque<usize> = word.into_iter().collect();
        while let Some(node) = queue.pop_front() {
            if !support[node] {
                support[node] = true;
                queue.push_back(pi[node]);
            }
        }
        Ok((0..=self.rank()).filter(|&n| support[n]).collect())
    }

    /// The length-zero subgroup of the untwisted extended group: the identity
    /// plus `t^{omega_i^vee} w_0^{S_0 - i} w_0^{S_0}` per minuscule node.
    pub fn omega_group(&self) -> Result<Vec<OmegaElement>> {
        let mut out = vec![OmegaElement {
            elt: self.identity(),
            minuscule_index: None,
        }];
        let all_nodes: Vec<usize> = (1..=self.rank()).collect();
        let w0 = self.fin.longest_element(&all_nodes);
        for &i in &self.rs().minuscule {
            let sub: Vec<usize> = all_nodes.iter().copied().filter(|&n| n != i).collect();
            let w0j = self.fin.longest_element(&sub);
            let v = w0j.mat.mul(&w0.mat);
            let mut chi = vec![0i64; self.rank()];
            chi[i - 1] = 1;
            let elt = AffineElement {
                chi,
                w_mat: v,
                delta_pow: 0,
            };
            if self.length(&elt) != 0 {
                return Err(Error::Internal(format!(
                    "assembled length-zero candidate for node {i} has nonzero length; \
                     root data is inconsistent"
                )));
            }
            out.push(OmegaElement {
                elt,
                minuscule_index: Some(i),
            });
        }
        let index = self.rs().cartan.det();
        if out.len() as i128 != index {
            return Err(Error::Internal(format!(
                "length-zero subgroup has {} elements, lattice index is {index}",
                out.len()
            )));
        }
        Ok(out)
    }

    /// The length-zero elements of the twisted extended group: the group
    /// above times all twist powers.
    pub fn omega_prime_group(&self) -> Result<Vec<OmegaElement>> {
        let base = self.omega_group()?;
        let mut out = Vec::with_capacity(base.len() * self.fin.delta_order);
        for k in 0..self.fin.delta_order {
            let dk = self.delta_element(k);
            for om in &base {
                out.push(OmegaElement {
                    elt: self.mul_unchecked(&om.elt, &dk),
                    minuscule_index: om.minuscule_index,
                });
            }
        }
        Ok(out)
    }

    /// The length-zero element `tau_i delta^k`, or `delta^k` when `i` is None.
    pub fn omega_element(&self, minuscule: Option<usize>, k: usize) -> Result<OmegaElement> {
        match minuscule {
            None => Ok(OmegaElement {
                elt: self.delta_element(k),
                minuscule_index: None,
            }),
            Some(i) => {
                if !self.rs().minuscule.contains(&i) {
                    return Err(Error::InvalidType(format!(
                        "node {i} is not minuscule for {}{}",
                        self.rs().letter,
                        self.rank()
                    )));
                }
                let omega = self.omega_group()?;
                let tau = omega
                    .into_iter()
                    .find(|o| o.minuscule_index == Some(i))
                    .expect("minuscule index present in omega group");
                Ok(OmegaElement {
                    elt: self.mul_unchecked(&tau.elt, &self.delta_element(k)),
                    minuscule_index: Some(i),
                })
            }
        }
    }

    /// Power by binary exponentiation.
    pub fn power(&self, x: &AffineElement, n: u64) -> AffineElement {
        let mut base = x.clone();
        let mut acc = self.identity();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = base.mul_unchecked_square(self);
            e >>= 1;
        }
        acc
    }

    /// Finite-order test: raises `x` to the order of its finite part and
    /// reports whether the result is the identity, with the translation part
    /// of that power as witness.
    pub fn is_finite_order(&self, x: &AffineElement) -> OrderReport {
        let n = self.fin.order(&self.eta(x));
        let p = self.power(x, n as u64);
        OrderReport {
            finite_part_order: n,
            is_finite_order: p == self.identity(),
            translation_witness: p.chi,
        }
    }

    /// Geodesic word for the `W_a` part of `x` by breadth-first search over
    /// the Cayley graph, or `None` when the radius is exhausted first.
    /// Intended as an independent oracle for the length formula; exponential
    /// in the radius.
    pub fn reduced_word_oracle(&self, x: &AffineElement, max_radius: usize) -> Result<Option<Vec<usize>>> {
        if !self.in_coroot_lattice(&x.chi) {
            return Err(Error::NotInCoset);
        }
        let target = AffineElement {
            chi: x.chi.clone(),
            w_mat: x.w_mat.clone(),
            delta_pow: 0,
        };
        let id = self.identity();
        if target == id {
            return Ok(Some(Vec::new()));
        }
        let mut parents: HashMap<AffineElement, (AffineElement, usize)> = HashMap::new();
        let mut frontier = vec![id.clone()];
        for _ in 0..max_radius {
            let mut next = Vec::new();
            for y in frontier {
                for node in 0..=self.rank() {
                    let z = self.mul_unchecked(&y, &self.simple(node));
                    if z == id || parents.contains_key(&z) {
                        continue;
                    }
                    parents.insert(z.clone(), (y.clone(), node));
                    if z == target {
                        let mut word = Vec::new();
                        let mut cur = z;
                        while cur != id {
                            let (prev, letter) = parents[&cur].clone();
                            word.push(letter);
                            cur = prev;
                        }
                        word.reverse();
                        return Ok(Some(word));
                    }
                    next.push(z);
                }
            }
            frontier = next;
        }
        Ok(None)
    }

    /// All elements of `W_a` of length at most `max_len`, with their geodesic
    /// distances. Test oracle; grows polynomially in the radius.
    pub fn ball(&self, max_len: usize) -> Vec<(AffineElement, usize)> {
        let id = self.identity();
        let mut dist: HashMap<AffineElement, usize> = HashMap::from([(id.clone(), 0)]);
        let mut out = vec![(id.clone(), 0)];
        let mut frontier = vec![id];
        for d in 1..=max_len {
            let mut next = Vec::new();
            for y in &frontier {
                for node in 0..=self.rank() {
                    let z = self.mul_unchecked(y, &self.simple(node));
                    if !dist.contains_key(&z) {
                        dist.insert(z.clone(), d);
                        out.push((z.clone(), d));
                        next.push(z);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Canonical text form `t[c1,...,cn] s.. s.. d^k`; the word is the greedy
    /// reduced word of the finite part and is omitted when empty.
    pub fn element_text(&self, x: &AffineElement) -> String {
        let chi = x.chi.iter().map(|c| c.to_string()).join(",");
        let f = FiniteWeylElement {
            mat: x.w_mat.clone(),
            delta_pow: 0,
        };
        let word = self.fin.reduced_word(&f);
        let mut parts = vec![format!("t[{chi}]")];
        for n in &word {
            parts.push(format!("s{n}"));
        }
        parts.push(format!("d^{}", x.delta_pow));
        parts.join(" ")
    }

    /// Parses the text form. Accepted tokens, in order: an optional
    /// `t[...]` translation, any number of `s<i>` letters (affine node 0
    /// allowed), an optional `e`, and an optional trailing `d^<k>`.
    pub fn parse_element(&self, s: &str) -> Result<AffineElement> {
        let mut acc = self.identity();
        let mut tokens = s.split_whitespace().peekable();
        if let Some(tok) = tokens.peek() {
            if let Some(body) = tok.strip_prefix("t[") {
                let body = body
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unterminated translation in {s:?}")))?;
                let chi: Vec<i64> = if body.trim().is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<i64>()
                                .map_err(|e| Error::Parse(format!("bad coordinate {p:?}: {e}")))
                        })
                        .collect::<Result<_>>()?
                };
                acc = self.translation(&chi)?;
                tokens.next();
            }
        }
        for tok in tokens {
            if tok == "e" {
                continue;
            }
            if let Some(body) = tok.strip_prefix("d^") {
                let k: usize = body
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad twist power {body:?}: {e}")))?;
                acc = self.mul_unchecked(&acc, &self.delta_element(k));
            } else if let Some(body) = tok.strip_prefix('s') {
                let node: usize = body
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad generator {tok:?}: {e}")))?;
                if node > self.rank() {
                    return Err(Error::Parse(format!(
                        "generator index {node} out of range 0..={}",
                        self.rank()
                    )));
                }
                acc = self.mul_unchecked(&acc, &self.simple(node));
            } else {
                return Err(Error::Parse(format!("unrecognized token {tok:?}")));
            }
        }
        Ok(acc)
    }
}

impl AffineElement {
    fn mul_unchecked_square(&self, w: &AffineWeyl) -> AffineElement {
        w.mul_unchecked(self, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_weyl::Twist;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ctx(letter: TypeLetter, rank: usize, twist: Twist) -> AffineWeyl {
        context_for(letter, rank, twist).unwrap()
    }

    fn random_element(w: &AffineWeyl, rng: &mut StdRng) -> AffineElement {
        let chi: Vec<i64> = (0..w.rank()).map(|_| rng.random_range(-3..=3)).collect();
        let mut acc = w.translation(&chi).unwrap();
        for _ in 0..rng.random_range(0..8) {
            let node = rng.random_range(1..=w.rank());
            acc = w.mul_unchecked(&acc, &w.simple(node));
        }
        let k = rng.random_range(0..w.fin.delta_order);
        w.mul_unchecked(&acc, &w.delta_element(k))
    }

    #[test]
    fn translations_commute() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let a = w.translation(&[1, 0]).unwrap();
        let b = w.translation(&[0, 2]).unwrap();
        assert_eq!(w.mul(&a, &b).unwrap(), w.mul(&b, &a).unwrap());
        assert_eq!(w.mul(&a, &b).unwrap().chi, vec![1, 2]);
    }

    #[test]
    fn s0_is_an_involution() {
        for (letter, rank) in [
            (TypeLetter::A, 1),
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 2),
            (TypeLetter::G, 2),
        ] {
            let w = ctx(letter, rank, Twist::Identity);
            let s0 = w.s0();
            assert_eq!(w.mul(&s0, &s0).unwrap(), w.identity(), "{letter}{rank}");
            assert_eq!(w.length(&s0), 1, "{letter}{rank}");
        }
    }

    #[test]
    fn s_theta_translation_conjugation() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        // s_theta t^{theta^vee} s_theta = t^{-theta^vee}
        let s_theta = AffineElement {
            chi: vec![0, 0],
            w_mat: w.rs().s_theta_matrix(),
            delta_pow: 0,
        };
        let t = w.translation(&w.rs().theta_coroot_coweight()).unwrap();
        let conj = w.mul_many(&[&s_theta, &t, &s_theta]);
        let expected: Vec<i64> = w.rs().theta_coroot_coweight().iter().map(|x| -x).collect();
        assert_eq!(conj, w.translation(&expected).unwrap());
    }

    #[test]
    fn length_of_t_alpha1_in_a2() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let chi = w.rs().coroot_coweight(1);
        let t = w.translation(&chi).unwrap();
        assert_eq!(w.length(&t), 4);
        // cross-check against the geodesic-word oracle
        let word = w.reduced_word_oracle(&t, 6).unwrap().unwrap();
        assert_eq!(word.len(), 4);
    }

    #[test]
    fn word_oracle_basics() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        assert_eq!(
            w.reduced_word_oracle(&w.identity(), 3).unwrap(),
            Some(vec![])
        );
        assert_eq!(w.reduced_word_oracle(&w.s0(), 3).unwrap(), Some(vec![0]));
        // t^{theta^vee} has length 4 in affine A2
        let t = w.translation(&w.rs().theta_coroot_coweight()).unwrap();
        let word = w.reduced_word_oracle(&t, 5).unwrap().unwrap();
        assert_eq!(word.len(), w.length(&t));
        // radius exhaustion is None, not an error
        assert_eq!(w.reduced_word_oracle(&t, 2).unwrap(), None);
    }

    #[test]
    fn simple_conjugate_is_definitional() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let x = w.parse_element("t[1,0] s2 d^0").unwrap();
        for node in 0..=2 {
            let s = w.simple(node);
            assert_eq!(
                w.simple_conjugate(node, &x),
                w.mul_many(&[&s, &x, &s])
            );
        }
        let s1s2 = w.parse_element("s1 s2").unwrap();
        let s2s1 = w.parse_element("s2 s1").unwrap();
        assert_eq!(w.simple_conjugate(1, &s1s2), s2s1);
        assert_eq!(w.simple_conjugate(1, &w.identity()), w.identity());
    }

    #[test]
    fn eta_is_a_homomorphism() {
        let mut rng = StdRng::seed_from_u64(7);
        for (letter, rank, twist) in [
            (TypeLetter::B, 3, Twist::Identity),
            (TypeLetter::A, 3, Twist::Flip),
            (TypeLetter::D, 4, Twist::Triality),
        ] {
            let w = ctx(letter, rank, twist);
            for _ in 0..200 {
                let a = random_element(&w, &mut rng);
                let b = random_element(&w, &mut rng);
                let lhs = w.eta(&w.mul(&a, &b).unwrap());
                let rhs = w.fin.mul(&w.eta(&a), &w.eta(&b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn eta_discards_translations() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let t = w.translation(&[2, -1]).unwrap();
        assert_eq!(w.eta(&t), w.fin.identity());
        let x = w.parse_element("t[1,0] s2").unwrap();
        assert_eq!(w.eta(&x), w.fin.simple(2));
    }

    #[test]
    fn omega_group_cardinalities() {
        for (letter, rank, expected) in [
            (TypeLetter::A, 1, 2),
            (TypeLetter::A, 4, 5),
            (TypeLetter::B, 3, 2),
            (TypeLetter::C, 3, 2),
            (TypeLetter::D, 4, 4),
            (TypeLetter::D, 5, 4),
            (TypeLetter::E, 6, 3),
            (TypeLetter::E, 7, 2),
            (TypeLetter::E, 8, 1),
            (TypeLetter::F, 4, 1),
            (TypeLetter::G, 2, 1),
        ] {
            let w = ctx(letter, rank, Twist::Identity);
            let omega = w.omega_group().unwrap();
            assert_eq!(omega.len(), expected, "type {letter}{rank}");
            for om in &omega {
                assert_eq!(w.length(&om.elt), 0, "type {letter}{rank}");
            }
        }
    }

    #[test]
    fn omega_elements_permute_affine_nodes() {
        for (letter, rank, twist) in [
            (TypeLetter::A, 3, Twist::Identity),
            (TypeLetter::B, 3, Twist::Identity),
            (TypeLetter::C, 3, Twist::Identity),
            (TypeLetter::D, 4, Twist::Triality),
            (TypeLetter::A, 3, Twist::Flip),
            (TypeLetter::E, 6, Twist::Flip),
            (TypeLetter::E, 7, Twist::Identity),
        ] {
            let w = ctx(letter, rank, twist);
            for om in w.omega_prime_group().unwrap() {
                let pi = w.tau_action(&om.elt).unwrap();
                let mut sorted = pi.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, w.affine_nodes(), "type {letter}{rank} {twist}");
            }
        }
    }

    #[test]
    fn tau1_in_a2_cycles_the_affine_diagram() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let tau = w.omega_element(Some(1), 0).unwrap();
        let pi = w.tau_action(&tau.elt).unwrap();
        assert_eq!(pi, vec![1, 2, 0]);
    }

    #[test]
    fn support_examples() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        let id = w.identity();
        assert!(w.support(&id, &id).unwrap().is_empty());
        let x = w.parse_element("s0 s2").unwrap();
        assert_eq!(w.support(&x, &id).unwrap(), vec![0, 2]);
        // an element outside W_a tau is rejected
        let tau = w.omega_element(Some(1), 0).unwrap();
        assert!(w.support(&x, &tau.elt).is_err());
        // support of tau relative to tau is empty
        assert!(w.support(&tau.elt, &tau.elt).unwrap().is_empty());
    }

    #[test]
    fn power_and_order_dichotomy_a2() {
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        // finite Coxeter part: t^{omega_1} s1 s2 has order 3
        let x = w.parse_element("t[1,0] s1 s2").unwrap();
        let report = w.is_finite_order(&x);
        assert_eq!(report.finite_part_order, 3);
        assert!(report.is_finite_order);
        assert_eq!(w.power(&x, 3), w.identity());
        // affine Coxeter element s0 s1 s2 has infinite order; its finite
        // part s_theta s1 s2 collapses to the reflection s1
        let c = w.parse_element("s0 s1 s2").unwrap();
        let report = w.is_finite_order(&c);
        assert_eq!(report.finite_part_order, 2);
        assert!(!report.is_finite_order);
        assert!(report.translation_witness.iter().any(|&v| v != 0));
        // identity has order 1
        let report = w.is_finite_order(&w.identity());
        assert_eq!(report.finite_part_order, 1);
        assert!(report.is_finite_order);
    }

    #[test]
    fn conjugation_parity_sampled() {
        let mut rng = StdRng::seed_from_u64(11);
        for (letter, rank, twist) in [
            (TypeLetter::C, 2, Twist::Identity),
            (TypeLetter::A, 3, Twist::Flip),
        ] {
            let w = ctx(letter, rank, twist);
            for _ in 0..2_000 {
                let x = random_element(&w, &mut rng);
                let node = rng.random_range(0..=w.rank());
                let y = w.simple_conjugate(node, &x);
                let lx = w.length(&x) as i64;
                let ly = w.length(&y) as i64;
                assert!([-2, 0, 2].contains(&(ly - lx)), "{letter}{rank}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let mut rng = StdRng::seed_from_u64(3);
        for (letter, rank, twist) in [
            (TypeLetter::A, 2, Twist::Identity),
            (TypeLetter::B, 3, Twist::Identity),
            (TypeLetter::A, 3, Twist::Flip),
            (TypeLetter::D, 4, Twist::Triality),
        ] {
            let w = ctx(letter, rank, twist);
            for _ in 0..100 {
                let x = random_element(&w, &mut rng);
                let text = w.element_text(&x);
                let parsed = w.parse_element(&text).unwrap();
                assert_eq!(parsed, x, "text {text:?}");
            }
        }
        let w = ctx(TypeLetter::A, 2, Twist::Identity);
        assert_eq!(w.element_text(&w.identity()), "t[0,0] d^0");
        assert_eq!(w.parse_element("s1").unwrap(), w.simple(1));
        assert_eq!(w.parse_element("t[0,0] e d^0").unwrap(), w.identity());
    }

    #[test]
    fn json_round_trip() {
        let w = ctx(TypeLetter::B, 3, Twist::Identity);
        let x = w.parse_element("t[1,0,-2] s1 s3").unwrap();
        let json = serde_json::to_string(&x).unwrap();
        let back: AffineElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn mixed_root_systems_rejected() {
        let w2 = ctx(TypeLetter::A, 2, Twist::Identity);
        let w3 = ctx(TypeLetter::A, 3, Twist::Identity);
        let a = w3.identity();
        assert!(w2.mul(&a, &a).is_err());
        assert!(w2.translation(&[1, 2, 3]).is_err());
    }
}
