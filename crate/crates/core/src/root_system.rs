//! Root-system data for the irreducible crystallographic types, generated
//! from hard-coded Cartan matrices in Bourbaki labeling.
//!
//! Conventions used throughout the crate:
//! * roots are integer vectors in the simple-root basis,
//! * coweights are integer vectors in the fundamental-coweight basis,
//! * `cartan[i][j] = <coroot(j+1), root(i+1)>` (0-based storage, 1-based nodes),
//!
//! so the pairing of a coweight with a root is the plain dot product of their
//! coefficient vectors, and the j-th simple coroot written in the
//! fundamental-coweight basis is the j-th column of the Cartan matrix.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::matrix::IntMat;
use crate::{Error, Result};

pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLetter::A),
            "B" | "b" => Ok(TypeLetter::B),
            "C" | "c" => Ok(TypeLetter::C),
            "D" | "d" => Ok(TypeLetter::D),
            "E" | "e" => Ok(TypeLetter::E),
            "F" | "f" => Ok(TypeLetter::F),
            "G" | "g" => Ok(TypeLetter::G),
            other => Err(Error::InvalidType(format!("unknown type letter {other:?}"))),
        }
    }
}

/// Immutable root-system data for one irreducible type and rank.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    pub letter: TypeLetter,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_{j+1}^vee, alpha_{i+1}>`.
    pub cartan: IntMat,
    /// Positive roots in the simple-root basis, sorted by (height, coords).
    pub positive_roots: Vec<Vec<i64>>,
    /// Coroots of the positive roots, simple-coroot basis, aligned by index.
    pub positive_coroots: Vec<Vec<i64>>,
    /// The highest root in the simple-root basis.
    pub highest_root: Vec<i64>,
    /// Index of the highest root in `positive_roots`.
    pub highest_root_index: usize,
    /// Nodes `i` with `<omega_i^vee, alpha> in {0,1}` for every positive root.
    pub minuscule: Vec<usize>,
    /// All node permutations preserving the Cartan matrix (identity included),
    /// stored 0-based: `perm[i]` is the image of node `i+1`, minus one.
    pub diagram_autos: Vec<Vec<usize>>,
    #[serde(skip)]
    root_set: HashSet<Vec<i64>>,
}

fn valid_rank(letter: TypeLetter, rank: usize) -> bool {
    if rank == 0 || rank > MAX_RANK {
        return false;
    }
    match letter {
        TypeLetter::A => true,
        TypeLetter::B | TypeLetter::C => rank >= 2,
        TypeLetter::D => rank >= 4,
        TypeLetter::E => (6..=8).contains(&rank),
        TypeLetter::F => rank == 4,
        TypeLetter::G => rank == 2,
    }
}

fn expected_positive_count(letter: TypeLetter, n: usize) -> usize {
    match letter {
        TypeLetter::A => n * (n + 1) / 2,
        TypeLetter::B | TypeLetter::C => n * n,
        TypeLetter::D => n * (n - 1),
        TypeLetter::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLetter::F => 24,
        TypeLetter::G => 6,
    }
}

fn cartan_for(letter: TypeLetter, n: usize) -> IntMat {
    let mut c = IntMat::from_fn(n, |i, j| if i == j { 2 } else { 0 });
    // Simply-laced edge between 1-based nodes i and j.
    let edge = |c: &mut IntMat, i: usize, j: usize| {
        c.set(i - 1, j - 1, -1);
        c.set(j - 1, i - 1, -1);
    };
    match letter {
        TypeLetter::A => {
            for i in 1..n {
                edge(&mut c, i, i + 1);
            }
        }
        TypeLetter::B => {
            for i in 1..n - 1 {
                edge(&mut c, i, i + 1);
            }
            // alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2.
            c.set(n - 2, n - 1, -2);
            c.set(n - 1, n - 2, -1);
        }
        TypeLetter::C => {
            for i in 1..n - 1 {
                edge(&mut c, i, i + 1);
            }
            // alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2.
            c.set(n - 2, n - 1, -1);
            c.set(n - 1, n - 2, -2);
        }
        TypeLetter::D => {
            for i in 1..n - 1 {
                edge(&mut c, i, i + 1);
            }
            edge(&mut c, n - 2, n);
        }
        TypeLetter::E => {
            edge(&mut c, 1, 3);
            edge(&mut c, 3, 4);
            edge(&mut c, 4, 5);
            edge(&mut c, 5, 6);
            if n >= 7 {
                edge(&mut c, 6, 7);
            }
            if n >= 8 {
                edge(&mut c, 7, 8);
            }
            edge(&mut c, 2, 4);
        }
        TypeLetter::F => {
            edge(&mut c, 1, 2);
            edge(&mut c, 3, 4);
            // alpha_3 short: <alpha_3^vee, alpha_2> = -2.
            c.set(1, 2, -2);
            c.set(2, 1, -1);
        }
        TypeLetter::G => {
            // alpha_1 short: <alpha_1^vee, alpha_2> = -3.
            c.set(0, 1, -1);
            c.set(1, 0, -3);
        }
    }
    c
}

/// Builds the full root-system record for one irreducible type and rank.
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    if !valid_rank(letter, rank) {
        return Err(Error::InvalidType(format!(
            "{letter}{rank} is not a supported irreducible type (rank ceiling {MAX_RANK})"
        )));
    }
    let cartan = cartan_for(letter, rank);
    debug_assert!((0..rank).all(|i| cartan.get(i, i) == 2));
    debug_assert!((0..rank)
        .cartesian_product(0..rank)
        .all(|(i, j)| i == j || cartan.get(i, j) <= 0));

    // Close the simple (root, coroot) pairs under simple reflections.
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for i in 0..rank {
        let mut root = vec![0i64; rank];
        root[i] = 1;
        let coroot = root.clone();
        seen.insert(root.clone());
        queue.push((root, coroot));
    }
    let mut all: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    while let Some((root, coroot)) = queue.pop() {
        for i in 0..rank {
            // s_i(root):  subtract <alpha_i^vee, root> * alpha_i
            // s_i(coroot): subtract <coroot, alpha_i> * alpha_i^vee
            let pr: i64 = (0..rank).map(|j| cartan.get(j, i) * root[j]).sum();
            let pc: i64 = (0..rank).map(|j| cartan.get(i, j) * coroot[j]).sum();
            let mut r2 = root.clone();
            r2[i] -= pr;
            let mut c2 = coroot.clone();
            c2[i] -= pc;
            if seen.insert(r2.clone()) {
                queue.push((r2, c2));
            }
        }
        all.push((root, coroot));
    }
    let mut positives: Vec<(Vec<i64>, Vec<i64>)> = all
        .into_iter()
        .filter(|(r, _)| r.iter().all(|&x| x >= 0))
        .collect();
    positives.sort_by_key(|(r, _)| (r.iter().sum::<i64>(), r.clone()));
    let expected = expected_positive_count(letter, rank);
    if positives.len() != expected {
        return Err(Error::Internal(format!(
            "{letter}{rank}: generated {} positive roots, expected {expected}",
            positives.len()
        )));
    }

    // Highest root: maximal height, and it must dominate every positive root.
    let highest_root_index = positives.len() - 1;
    let highest = positives[highest_root_index].0.clone();
    for (r, _) in &positives {
        if (0..rank).any(|i| r[i] > highest[i]) {
            return Err(Error::Internal(format!(
                "{letter}{rank}: highest root does not dominate {r:?}"
            )));
        }
    }

    let minuscule: Vec<usize> = (1..=rank)
        .filter(|&i| positives.iter().all(|(r, _)| r[i - 1] == 0 || r[i - 1] == 1))
        .collect();

    let diagram_autos: Vec<Vec<usize>> = (0..rank)
        .permutations(rank)
        .filter(|perm| {
            (0..rank)
                .cartesian_product(0..rank)
                .all(|(i, j)| cartan.get(perm[i], perm[j]) == cartan.get(i, j))
        })
        .sorted()
        .collect();

    let root_set: HashSet<Vec<i64>> = positives
        .iter()
        .flat_map(|(r, _)| {
            let neg: Vec<i64> = r.iter().map(|&x| -x).collect();
            [r.clone(), neg]
        })
        .collect();

    let (positive_roots, positive_coroots): (Vec<_>, Vec<_>) = positives.into_iter().unzip();
    Ok(RootSystem {
        letter,
        rank,
        cartan,
        positive_roots,
        positive_coroots,
        highest_root: highest,
        highest_root_index,
        minuscule,
        diagram_autos,
        root_set,
    })
}

impl RootSystem {
    /// Pairing of a coweight (fundamental-coweight basis) with a root
    /// (simple-root basis).
    pub fn pairing(&self, chi: &[i64], alpha: &[i64]) -> Result<i64> {
        if chi.len() != self.rank || alpha.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "pairing expects vectors of length {}",
                self.rank
            )));
        }
        Ok(chi.iter().zip(alpha).map(|(&c, &a)| c * a).sum())
    }

    /// The simple coroot of `node` (1-based) in the fundamental-coweight basis.
    pub fn coroot_coweight(&self, node: usize) -> Vec<i64> {
        self.cartan.col(node - 1)
    }

    /// Matrix of the simple reflection `s_node` on the coweight lattice.
    pub fn simple_reflection_matrix(&self, node: usize) -> IntMat {
        let col = self.coroot_coweight(node);
        let j = node - 1;
        IntMat::from_fn(self.rank, |r, c| {
            let mut v = i64::from(r == c);
            if c == j {
                v -= col[r];
            }
            v
        })
    }

    /// Coroot of an arbitrary positive root, in the fundamental-coweight basis.
    pub fn coroot_coweight_of(&self, index: usize) -> Vec<i64> {
        let cr = &self.positive_coroots[index];
        (0..self.rank)
            .map(|r| (0..self.rank).map(|j| self.cartan.get(r, j) * cr[j]).sum())
            .collect()
    }

    /// The coroot of the highest root, in the fundamental-coweight basis.
    pub fn theta_coroot_coweight(&self) -> Vec<i64> {
        self.coroot_coweight_of(self.highest_root_index)
    }

    /// Matrix of the reflection in the highest root on the coweight lattice.
    pub fn s_theta_matrix(&self) -> IntMat {
        let theta = self.highest_root.clone();
        let theta_cw = self.theta_coroot_coweight();
        IntMat::from_fn(self.rank, |r, c| {
            i64::from(r == c) - theta_cw[r] * theta[c]
        })
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_set.contains(v)
    }

    pub fn is_negative_root_vec(v: &[i64]) -> bool {
        v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x != 0)
    }

    /// Finite nodes, 1-based.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn debug_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.letter.to_string(),
            "rank": self.rank,
            "nodes": (1..=self.rank).collect::<Vec<_>>(),
            "cartan": self.cartan.rows(),
            "positive_roots": self.positive_roots,
            "highest_root": self.highest_root,
            "minuscule_indices": self.minuscule,
            "diagram_automorphisms": self.diagram_autos.iter()
                .map(|p| p.iter().map(|&x| x + 1).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Node indices of the minuscule fundamental coweights.
pub fn minuscule_coweights(rs: &RootSystem) -> Vec<usize> {
    rs.minuscule.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(letter: TypeLetter, rank: usize) -> RootSystem {
        build_root_system(letter, rank).unwrap()
    }

    #[test]
    fn a2_roots_and_theta() {
        let r = rs(TypeLetter::A, 2);
        assert_eq!(r.positive_roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(r.highest_root, vec![1, 1]);
    }

    #[test]
    fn a1_single_root() {
        let r = rs(TypeLetter::A, 1);
        assert_eq!(r.positive_roots, vec![vec![1]]);
        assert_eq!(r.highest_root, vec![1]);
    }

    #[test]
    fn d4_has_six_diagram_autos() {
        let r = rs(TypeLetter::D, 4);
        assert_eq!(r.diagram_autos.len(), 6);
        // all of them fix node 2 (0-based index 1) and permute {1,3,4}
        for p in &r.diagram_autos {
            assert_eq!(p[1], 1);
        }
    }

    #[test]
    fn root_counts() {
        for (letter, rank, count) in [
            (TypeLetter::A, 3, 6),
            (TypeLetter::B, 3, 9),
            (TypeLetter::C, 4, 16),
            (TypeLetter::D, 5, 20),
            (TypeLetter::E, 6, 36),
            (TypeLetter::E, 7, 63),
            (TypeLetter::E, 8, 120),
            (TypeLetter::F, 4, 24),
            (TypeLetter::G, 2, 6),
        ] {
            assert_eq!(rs(letter, rank).positive_roots.len(), count);
        }
    }

    #[test]
    fn pairing_duality_and_coroots() {
        let r = rs(TypeLetter::A, 2);
        // <omega_1^vee, alpha_1> = 1
        assert_eq!(r.pairing(&[1, 0], &[1, 0]).unwrap(), 1);
        // alpha_1^vee = 2 omega_1^vee - omega_2^vee, so <alpha_1^vee, alpha_2> = -1
        assert_eq!(r.coroot_coweight(1), vec![2, -1]);
        assert_eq!(r.pairing(&r.coroot_coweight(1), &[0, 1]).unwrap(), -1);
        // theta = alpha_1 + alpha_2, so <alpha_1^vee, theta> = 1
        assert_eq!(r.pairing(&r.coroot_coweight(1), &r.highest_root).unwrap(), 1);
    }

    #[test]
    fn pairing_rejects_dimension_mismatch() {
        let r = rs(TypeLetter::A, 2);
        assert!(r.pairing(&[1], &[0, 1]).is_err());
    }

    #[test]
    fn minuscule_tables() {
        assert_eq!(rs(TypeLetter::B, 4).minuscule, vec![1]);
        assert_eq!(rs(TypeLetter::C, 4).minuscule, vec![4]);
        assert_eq!(rs(TypeLetter::D, 5).minuscule, vec![1, 4, 5]);
        assert_eq!(rs(TypeLetter::E, 6).minuscule, vec![1, 6]);
        assert_eq!(rs(TypeLetter::E, 7).minuscule, vec![7]);
        assert!(rs(TypeLetter::E, 8).minuscule.is_empty());
        assert!(rs(TypeLetter::F, 4).minuscule.is_empty());
        assert!(rs(TypeLetter::G, 2).minuscule.is_empty());
        assert_eq!(rs(TypeLetter::A, 4).minuscule, vec![1, 2, 3, 4]);
    }

    #[test]
    fn minuscule_count_is_lattice_index_minus_one() {
        for (letter, ranks) in [
            (TypeLetter::A, 1..=8),
            (TypeLetter::B, 2..=8),
            (TypeLetter::C, 2..=8),
            (TypeLetter::D, 4..=8),
            (TypeLetter::E, 6..=8),
            (TypeLetter::F, 4..=4),
            (TypeLetter::G, 2..=2),
        ] {
            for rank in ranks {
                let r = rs(letter, rank);
                let index = r.cartan.det();
                assert_eq!(
                    r.minuscule.len() as i128,
                    index - 1,
                    "type {letter}{rank}"
                );
            }
        }
    }

    #[test]
    fn s_theta_negates_theta() {
        for (letter, rank) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::G, 2),
        ] {
            let r = rs(letter, rank);
            let m = r.s_theta_matrix();
            // transport to the root basis: theta maps to -theta
            let mt = m.transpose();
            let image = mt.mul_vec(&r.highest_root);
            let neg: Vec<i64> = r.highest_root.iter().map(|&x| -x).collect();
            assert_eq!(image, neg, "type {letter}{rank}");
            // involution on the coweight lattice
            assert!(m.mul(&m).is_identity());
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(build_root_system(TypeLetter::B, 1).is_err());
        assert!(build_root_system(TypeLetter::D, 3).is_err());
        assert!(build_root_system(TypeLetter::E, 5).is_err());
        assert!(build_root_system(TypeLetter::F, 3).is_err());
        assert!(build_root_system(TypeLetter::A, 9).is_err());
        assert!(build_root_system(TypeLetter::A, 0).is_err());
    }
}
