//! Case-by-case witnesses for the parabolic Coxeter description: one entry
//! per (type, rank, twist, minuscule node), carrying the expected orbit
//! partition of the affine diagram, the maximal proper stable subset `J`,
//! and the word for `c`. Untwisted type A entries are found by exhaustive
//! search instead of transcription, and cached in a checksummed fixture.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::affine_weyl::{context_for, AffineWeyl};
use crate::conjugacy::{orbits_on, parabolic_coxeter_elements};
use crate::finite_weyl::Twist;
use crate::root_system::TypeLetter;
use crate::{Error, Result};

/// One table row: everything needed to reconstruct and check the class
/// representative `tau delta' c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEntry {
    pub letter: TypeLetter,
    pub rank: usize,
    pub twist: Twist,
    /// Minuscule node of the translation part, `None` for pure twists.
    pub minuscule_index: Option<usize>,
    /// Which guard of the family produced this entry.
    pub parity_case: String,
    /// Expected orbit partition of the affine node set under `tau delta'`,
    /// orbits sorted, partition sorted by orbit minimum.
    pub orbits: Vec<Vec<usize>>,
    /// The maximal proper stable subset, sorted.
    pub j: Vec<usize>,
    /// Word for `c` over the finite simple reflections.
    pub c_word: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EntryChecks {
    pub tau_length_zero: bool,
    pub orbits_match: bool,
    pub support_equals_j: bool,
    pub finite_part_coxeter_conjugate: bool,
    pub is_parabolic_coxeter: bool,
}

impl EntryChecks {
    pub fn all(&self) -> bool {
        self.tau_length_zero
            && self.orbits_match
            && self.support_equals_j
            && self.finite_part_coxeter_conjugate
            && self.is_parabolic_coxeter
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub entry: CaseEntry,
    pub checks: EntryChecks,
    pub pass: bool,
}

impl CaseEntry {
    pub fn twist_power(&self) -> usize {
        usize::from(self.twist != Twist::Identity)
    }

    /// Image of the entry under a diagram automorphism that commutes with
    /// the entry's twist (0-based node permutation on the finite nodes; the
    /// affine node is fixed).
    fn map_nodes(&self, perm: &[usize], case: &str) -> CaseEntry {
        let map = |node: usize| if node == 0 { 0 } else { perm[node - 1] + 1 };
        let mut orbits: Vec<Vec<usize>> = self
            .orbits
            .iter()
            .map(|o| o.iter().map(|&n| map(n)).sorted().collect())
            .collect();
        orbits.sort();
        let j: Vec<usize> = self.j.iter().map(|&n| map(n)).sorted().collect();
        CaseEntry {
            letter: self.letter,
            rank: self.rank,
            twist: self.twist,
            minuscule_index: self.minuscule_index.map(map),
            parity_case: case.to_string(),
            orbits,
            j,
            c_word: self.c_word.iter().map(|&n| map(n)).collect(),
        }
    }
}

fn sorted_partition(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in &mut parts {
        p.sort_unstable();
        p.dedup();
    }
    parts.sort();
    parts.dedup();
    parts
}

fn complement(rank: usize, removed: &[usize]) -> Vec<usize> {
    (0..=rank).filter(|n| !removed.contains(n)).collect()
}

fn entry_b(n: usize) -> CaseEntry {
    let mut orbits = vec![vec![0, 1]];
    orbits.extend((2..=n).map(|i| vec![i]));
    CaseEntry {
        letter: TypeLetter::B,
        rank: n,
        twist: Twist::Identity,
        minuscule_index: Some(1),
        parity_case: "all n".into(),
        orbits: sorted_partition(orbits),
        j: complement(n, &[n]),
        c_word: (1..n).collect(),
    }
}

fn entry_c(n: usize) -> CaseEntry {
    let orbits = sorted_partition((0..=n / 2).map(|i| vec![i, n - i]).collect());
    if n % 2 == 1 {
        CaseEntry {
            letter: TypeLetter::C,
            rank: n,
            twist: Twist::Identity,
            minuscule_index: Some(n),
            parity_case: "n odd".into(),
            orbits,
            j: complement(n, &[0, n]),
            c_word: ((n + 1) / 2..n).collect(),
        }
    } else {
        CaseEntry {
            letter: TypeLetter::C,
            rank: n,
            twist: Twist::Identity,
            minuscule_index: Some(n),
            parity_case: "n even".into(),
            orbits,
            j: complement(n, &[n / 2]),
            c_word: (n / 2 + 1..=n).collect(),
        }
    }
}

fn entries_d(n: usize) -> Vec<CaseEntry> {
    let mut orbits1 = vec![vec![0, 1], vec![n - 1, n]];
    orbits1.extend((2..=n - 2).map(|i| vec![i]));
    let tau1 = CaseEntry {
        letter: TypeLetter::D,
        rank: n,
        twist: Twist::Identity,
        minuscule_index: Some(1),
        parity_case: "tau_1".into(),
        orbits: sorted_partition(orbits1),
        j: complement(n, &[n - 1, n]),
        c_word: (1..=n - 2).collect(),
    };
    let tau_n = if n % 2 == 1 {
        let mut orbits = vec![vec![0, n, 1, n - 1]];
        orbits.extend((2..=(n - 1) / 2).map(|i| vec![i, n - i]));
        let mut c_word: Vec<usize> = ((n + 3) / 2..=n - 2).collect();
        c_word.push(n);
        CaseEntry {
            letter: TypeLetter::D,
            rank: n,
            twist: Twist::Identity,
            minuscule_index: Some(n),
            parity_case: "tau_n, n odd".into(),
            orbits: sorted_partition(orbits),
            j: complement(n, &[(n - 1) / 2, (n + 1) / 2]),
            c_word,
        }
    } else {
        let orbits = (0..=n / 2).map(|i| vec![i, n - i]).collect();
        CaseEntry {
            letter: TypeLetter::D,
            rank: n,
            twist: Twist::Identity,
            minuscule_index: Some(n),
            parity_case: "tau_n, n even".into(),
            orbits: sorted_partition(orbits),
            j: complement(n, &[0, n]),
            c_word: (n / 2..=n - 1).collect(),
        }
    };
    // the remaining minuscule node comes from the outer automorphism
    // exchanging the two fork nodes
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(n - 2, n - 1);
    let tau_n1 = tau_n.map_nodes(&swap, "tau_{n-1}, fork image");
    vec![tau1, tau_n1, tau_n]
}

fn entries_2a(n: usize) -> Vec<CaseEntry> {
    // rank n-1, twist flip; one entry per node i
    (1..n)
        .map(|i| {
            let mut orbits = vec![vec![0, i]];
            orbits.extend((1..i).map(|j| vec![j, i - j]));
            orbits.extend((1..n - i).map(|j| vec![i + j, n - j]));
            let orbits = sorted_partition(orbits);
            let (case, j, c_word): (&str, Vec<usize>, Vec<usize>) =
                match (n % 2 == 1, i % 2 == 1) {
                    (true, true) => (
                        "n odd, i odd",
                        complement(n - 1, &[(n + i) / 2]),
                        ((i + 1) / 2..=(n + i) / 2 - 1).collect(),
                    ),
                    (true, false) => (
                        "n odd, i even",
                        complement(n - 1, &[i / 2]),
                        (i / 2 + 1..=(n + i - 1) / 2).collect(),
                    ),
                    (false, true) => (
                        "n even, i odd",
                        complement(n - 1, &[(i - 1) / 2, (i + 1) / 2]),
                        ((i + 3) / 2..=(n + i - 1) / 2).collect(),
                    ),
                    (false, false) => (
                        "n even, i even",
                        complement(n - 1, &[(n + i) / 2]),
                        (i / 2..=(n + i) / 2 - 1).collect(),
                    ),
                };
            CaseEntry {
                letter: TypeLetter::A,
                rank: n - 1,
                twist: Twist::Flip,
                minuscule_index: Some(i),
                parity_case: case.into(),
                orbits,
                j,
                c_word,
            }
        })
        .collect()
}

fn entries_2d(n: usize) -> Vec<CaseEntry> {
    let mut orbits1 = vec![vec![0, 1]];
    orbits1.extend((2..=n).map(|i| vec![i]));
    let tau1 = CaseEntry {
        letter: TypeLetter::D,
        rank: n,
        twist: Twist::Flip,
        minuscule_index: Some(1),
        parity_case: "tau_1".into(),
        orbits: sorted_partition(orbits1),
        j: complement(n, &[n]),
        c_word: (1..=n - 1).collect(),
    };
    let tau_n = if n % 2 == 1 {
        let orbits = (0..=(n - 1) / 2).map(|i| vec![i, n - i]).collect();
        CaseEntry {
            letter: TypeLetter::D,
            rank: n,
            twist: Twist::Flip,
            minuscule_index: Some(n),
            parity_case: "tau_n, n odd".into(),
            orbits: sorted_partition(orbits),
            j: complement(n, &[0, n]),
            c_word: ((n + 1) / 2..=n - 1).collect(),
        }
    } else {
        let mut orbits = vec![vec![0, 1, n - 1, n]];
        orbits.extend((2..=n / 2).map(|i| vec![i, n - i]));
        CaseEntry {
            letter: TypeLetter::D,
            rank: n,
            twist: Twist::Flip,
            minuscule_index: Some(n),
            parity_case: "tau_n, n even".into(),
            orbits: sorted_partition(orbits),
            j: complement(n, &[n / 2]),
            c_word: (n / 2 + 1..=n - 1).collect(),
        }
    };
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(n - 2, n - 1);
    let tau_n1 = tau_n.map_nodes(&swap, "tau_{n-1}, fork image");
    vec![tau1, tau_n1, tau_n]
}

fn entries_3d4() -> Vec<CaseEntry> {
    let tau1 = CaseEntry {
        letter: TypeLetter::D,
        rank: 4,
        twist: Twist::Triality,
        minuscule_index: Some(1),
        parity_case: "tau_1".into(),
        orbits: sorted_partition(vec![vec![0, 1, 4], vec![2], vec![3]]),
        j: complement(4, &[3]),
        c_word: vec![2, 1],
    };
    // translate along the triality orbit of the minuscule nodes
    let tri = vec![2usize, 1, 3, 0]; // 1 -> 3 -> 4 -> 1
    let tau3 = tau1.map_nodes(&tri, "tau_3, triality image");
    let tau4 = tau3.map_nodes(&tri, "tau_4, triality image");
    vec![tau1, tau3, tau4]
}

fn entries_e6() -> Vec<CaseEntry> {
    let tau1 = CaseEntry {
        letter: TypeLetter::E,
        rank: 6,
        twist: Twist::Identity,
        minuscule_index: Some(1),
        parity_case: "tau_1".into(),
        orbits: sorted_partition(vec![vec![0, 1, 6], vec![2, 3, 5], vec![4]]),
        j: complement(6, &[0, 1, 6]),
        c_word: vec![4, 5],
    };
    let flip = vec![5usize, 1, 4, 3, 2, 0]; // 1<->6, 3<->5
    let tau6 = tau1.map_nodes(&flip, "tau_6, flip image");
    vec![tau1, tau6]
}

fn entries_2e6() -> Vec<CaseEntry> {
    let tau1 = CaseEntry {
        letter: TypeLetter::E,
        rank: 6,
        twist: Twist::Flip,
        minuscule_index: Some(1),
        parity_case: "tau_1".into(),
        orbits: sorted_partition(vec![vec![0, 1], vec![2, 3], vec![4], vec![5], vec![6]]),
        j: complement(6, &[6]),
        c_word: vec![5, 4, 3, 1],
    };
    let flip = vec![5usize, 1, 4, 3, 2, 0];
    let tau6 = tau1.map_nodes(&flip, "tau_6, flip image");
    vec![tau1, tau6]
}

fn entry_e7() -> CaseEntry {
    CaseEntry {
        letter: TypeLetter::E,
        rank: 7,
        twist: Twist::Identity,
        minuscule_index: Some(7),
        parity_case: "tau_7".into(),
        orbits: sorted_partition(vec![vec![0, 7], vec![1, 6], vec![3, 5], vec![2], vec![4]]),
        j: complement(7, &[0, 7]),
        c_word: vec![2, 4, 5, 6],
    }
}

/// The table rows for one (type, rank, twist), one per minuscule node,
/// sorted by node. Types without minuscule coweights yield no rows.
pub fn table_entries(letter: TypeLetter, rank: usize, twist: Twist) -> Result<Vec<CaseEntry>> {
    // validate the combination up front
    crate::root_system::build_root_system(letter, rank)?;
    twist.node_perm(letter, rank)?;
    let mut entries = match (letter, twist) {
        (TypeLetter::A, Twist::Identity) => (1..=rank)
            .map(|i| derive_entry(rank, i))
            .collect::<Result<Vec<_>>>()?,
        (TypeLetter::A, Twist::Flip) => entries_2a(rank + 1),
        (TypeLetter::B, Twist::Identity) => vec![entry_b(rank)],
        (TypeLetter::C, Twist::Identity) => vec![entry_c(rank)],
        (TypeLetter::D, Twist::Identity) => entries_d(rank),
        (TypeLetter::D, Twist::Flip) => entries_2d(rank),
        (TypeLetter::D, Twist::Triality) => entries_3d4(),
        (TypeLetter::E, Twist::Identity) if rank == 6 => entries_e6(),
        (TypeLetter::E, Twist::Identity) if rank == 7 => vec![entry_e7()],
        (TypeLetter::E, Twist::Flip) if rank == 6 => entries_2e6(),
        (TypeLetter::E, Twist::Identity) | (TypeLetter::F, _) | (TypeLetter::G, _) => Vec::new(),
        _ => {
            return Err(Error::InvalidType(format!(
                "no table for {letter}{rank} with twist {twist}"
            )))
        }
    };
    entries.sort_by_key(|e| e.minuscule_index);
    Ok(entries)
}

/// Builds `tau delta' c` for a table entry inside its own context.
pub fn entry_representative(
    w: &AffineWeyl,
    e: &CaseEntry,
) -> Result<(crate::AffineElement, crate::OmegaElement)> {
    let tau = w.omega_element(e.minuscule_index, e.twist_power())?;
    let mut rep = tau.elt.clone();
    for &node in &e.c_word {
        rep = w.mul(&rep, &w.simple(node))?;
    }
    Ok((rep, tau))
}

/// Runs the five mechanical checks for one entry. Failures are recorded in
/// the report, not raised.
pub fn verify_entry(e: &CaseEntry) -> Result<EntryReport> {
    let w = context_for(e.letter, e.rank, e.twist)?;
    let report = verify_entry_in(&w, e)?;
    Ok(report)
}

/// Same as [`verify_entry`] but reuses an already-built context.
pub fn verify_entry_in(w: &AffineWeyl, e: &CaseEntry) -> Result<EntryReport> {
    let (rep, tau) = entry_representative(w, e)?;
    let tau_length_zero = w.length(&tau.elt) == 0;
    let pi = w.tau_action(&tau.elt)?;
    let all: Vec<usize> = (0..=w.rank()).collect();
    let computed_orbits = orbits_on(&pi, &all);
    let orbits_match = computed_orbits == e.orbits;
    let support_equals_j = w.support(&rep, &tau.elt)? == e.j;
    let finite_part_coxeter_conjugate = w
        .fin
        .is_conjugate(&w.eta(&rep), &w.fin.canonical_coxeter(e.twist_power()));
    let is_parabolic_coxeter = match parabolic_coxeter_elements(w, &e.j, &tau) {
        Ok(set) => set.contains(&rep),
        Err(_) => false,
    };
    let checks = EntryChecks {
        tau_length_zero,
        orbits_match,
        support_equals_j,
        finite_part_coxeter_conjugate,
        is_parabolic_coxeter,
    };
    Ok(EntryReport {
        entry: e.clone(),
        checks,
        pass: checks.all(),
    })
}

/// Finds the untwisted type-A entry for `tau_i` by exhaustive search over
/// maximal proper stable subsets and parabolic Coxeter words, in a fixed
/// deterministic order.
pub fn derive_entry(rank: usize, i: usize) -> Result<CaseEntry> {
    let w = context_for(TypeLetter::A, rank, Twist::Identity)?;
    let tau = w.omega_element(Some(i), 0)?;
    let pi = w.tau_action(&tau.elt)?;
    let all: Vec<usize> = (0..=rank).collect();
    let orbits = orbits_on(&pi, &all);
    for omitted in &orbits {
        let j: Vec<usize> = all
            .iter()
            .copied()
            .filter(|n| !omitted.contains(n))
            .collect();
        let rep_lists: Vec<Vec<usize>> = orbits
            .iter()
            .filter(|o| *o != omitted)
            .map(|o| o.iter().copied().filter(|&n| n > 0).collect::<Vec<_>>())
            .collect();
        if rep_lists.iter().any(|l| l.is_empty()) {
            continue;
        }
        let candidates: Vec<Vec<usize>> = if rep_lists.is_empty() {
            vec![Vec::new()]
        } else {
            rep_lists
                .iter()
                .map(|l| l.iter().copied())
                .multi_cartesian_product()
                .flat_map(|reps| {
                    let m = reps.len();
                    reps.into_iter().permutations(m)
                })
                .collect()
        };
        for c_word in candidates {
            let entry = CaseEntry {
                letter: TypeLetter::A,
                rank,
                twist: Twist::Identity,
                minuscule_index: Some(i),
                parity_case: format!("derived, i={i}"),
                orbits: orbits.clone(),
                j: j.clone(),
                c_word,
            };
            if verify_entry_in(&w, &entry)?.pass {
                return Ok(entry);
            }
        }
    }
    Err(Error::Internal(format!(
        "search found no valid entry for A{rank}, tau_{i}"
    )))
}

/// Canonical JSON for a set of entries, and its digest.
pub fn entries_json(entries: &[CaseEntry]) -> String {
    serde_json::to_string_pretty(entries).expect("entries serialize")
}

pub fn entries_digest(entries: &[CaseEntry]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(entries_json(entries).as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The committed fixture of derived type-A entries for ranks 1..=7.
pub fn type_a_fixture() -> &'static str {
    include_str!("../fixtures/type_a_entries.json")
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TypeAFixture {
    pub schema_version: u32,
    pub sha256: String,
    pub entries: Vec<CaseEntry>,
}

pub fn generate_type_a_entries(max_rank: usize) -> Result<Vec<CaseEntry>> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for i in 1..=rank {
            out.push(derive_entry(rank, i)?);
        }
    }
    Ok(out)
}

/// Regenerates the derived entries and compares them (and their digest)
/// against the committed fixture.
pub fn check_type_a_fixture() -> Result<bool> {
    let fixture: TypeAFixture = serde_json::from_str(type_a_fixture())
        .map_err(|e| Error::Parse(format!("fixture: {e}")))?;
    let max_rank = fixture
        .entries
        .iter()
        .map(|e| e.rank)
        .max()
        .unwrap_or(0);
    let regenerated = generate_type_a_entries(max_rank)?;
    Ok(regenerated == fixture.entries && entries_digest(&regenerated) == fixture.sha256)
}

/// Aligned text rendering of table rows.
pub fn render_table(entries: &[CaseEntry]) -> String {
    let mut lines = vec![format!(
        "{:<6} {:<8} {:<5} {:<22} {:<30} {:<18} {}",
        "type", "twist", "tau", "case", "orbits", "J", "c"
    )];
    for e in entries {
        let orbits = e
            .orbits
            .iter()
            .map(|o| format!("{{{}}}", o.iter().join(",")))
            .join(" ");
        let j = format!("{{{}}}", e.j.iter().join(","));
        let c = if e.c_word.is_empty() {
            "e".to_string()
        } else {
            e.c_word.iter().map(|n| format!("s{n}")).join(" ")
        };
        let tau = e
            .minuscule_index
            .map(|i| format!("{i}"))
            .unwrap_or_else(|| "id".into());
        lines.push(format!(
            "{:<6} {:<8} {:<5} {:<22} {:<30} {:<18} {}",
            format!("{}{}", e.letter, e.rank),
            e.twist.to_string(),
            tau,
            e.parity_case,
            orbits,
            j,
            c
        ));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_row_shape() {
        let entries = table_entries(TypeLetter::B, 3, Twist::Identity).unwrap();
        assert_eq!(entries.len(), 1);
        let e = &entries[0];
        assert_eq!(e.j, vec![0, 1, 2]);
        assert_eq!(e.c_word, vec![1, 2]);
        assert_eq!(e.orbits, vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn c_rows_resolve_parity() {
        let odd = &table_entries(TypeLetter::C, 3, Twist::Identity).unwrap()[0];
        assert_eq!(odd.j, vec![1, 2]);
        assert_eq!(odd.c_word, vec![2]);
        let even = &table_entries(TypeLetter::C, 4, Twist::Identity).unwrap()[0];
        assert_eq!(even.j, vec![0, 1, 3, 4]);
        assert_eq!(even.c_word, vec![3, 4]);
    }

    #[test]
    fn two_a4_case4_matches_paper_specialization() {
        // n = 4, i = 2: J omits node 3, c = s1 s2
        let entries = table_entries(TypeLetter::A, 3, Twist::Flip).unwrap();
        let e = entries
            .iter()
            .find(|e| e.minuscule_index == Some(2))
            .unwrap();
        assert_eq!(e.j, vec![0, 1, 2]);
        assert_eq!(e.c_word, vec![1, 2]);
        assert_eq!(e.orbits, vec![vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn triality_rows() {
        let entries = table_entries(TypeLetter::D, 4, Twist::Triality).unwrap();
        assert_eq!(entries.len(), 3);
        let tau1 = &entries[0];
        assert_eq!(tau1.minuscule_index, Some(1));
        assert_eq!(tau1.orbits, vec![vec![0, 1, 4], vec![2], vec![3]]);
        assert_eq!(tau1.j, vec![0, 1, 2, 4]);
        assert_eq!(tau1.c_word, vec![2, 1]);
    }

    #[test]
    fn e7_row_passes_all_checks() {
        let e = entry_e7();
        assert_eq!(e.j, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(e.c_word, vec![2, 4, 5, 6]);
        let report = verify_entry(&e).unwrap();
        assert!(report.pass, "checks: {:?}", report.checks);
    }

    #[test]
    fn two_e6_row_passes_all_checks() {
        let entries = table_entries(TypeLetter::E, 6, Twist::Flip).unwrap();
        let e = entries
            .iter()
            .find(|e| e.minuscule_index == Some(1))
            .unwrap();
        assert_eq!(e.j, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(e.c_word, vec![5, 4, 3, 1]);
        let report = verify_entry(e).unwrap();
        assert!(report.pass, "checks: {:?}", report.checks);
    }

    #[test]
    fn derived_a1_entry_is_empty_parabolic() {
        let e = derive_entry(1, 1).unwrap();
        assert!(e.j.is_empty());
        assert!(e.c_word.is_empty());
        assert!(verify_entry(&e).unwrap().pass);
    }

    #[test]
    fn derived_a2_entries() {
        // tau_1 acts as a 3-cycle on the affine diagram of A2, so the only
        // proper stable subset is empty
        for i in [1, 2] {
            let e = derive_entry(2, i).unwrap();
            assert!(e.j.is_empty(), "i = {i}");
            assert!(e.c_word.is_empty());
            assert!(verify_entry(&e).unwrap().pass);
        }
    }

    #[test]
    fn derived_a3_tau2_entry() {
        let e = derive_entry(3, 2).unwrap();
        assert_eq!(e.orbits, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(e.j, vec![1, 3]);
        assert_eq!(e.c_word.len(), 1);
        assert!(verify_entry(&e).unwrap().pass);
    }

    #[test]
    fn out_of_scope_combinations_rejected() {
        assert!(table_entries(TypeLetter::B, 3, Twist::Flip).is_err());
        assert!(table_entries(TypeLetter::D, 5, Twist::Triality).is_err());
        assert!(table_entries(TypeLetter::A, 1, Twist::Flip).is_err());
        // no minuscule nodes: empty, not an error
        assert!(table_entries(TypeLetter::E, 8, Twist::Identity)
            .unwrap()
            .is_empty());
        assert!(table_entries(TypeLetter::G, 2, Twist::Identity)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn d_fork_image_is_consistent() {
        // the tau_{n-1} entry must verify just like the transcribed tau_n one
        for n in [4, 5] {
            let entries = table_entries(TypeLetter::D, n, Twist::Identity).unwrap();
            assert_eq!(entries.len(), 3);
            for e in &entries {
                assert!(verify_entry(e).unwrap().pass, "D{n} tau {:?}", e.minuscule_index);
            }
        }
    }

    #[test]
    fn render_table_is_aligned_text() {
        let entries = table_entries(TypeLetter::B, 3, Twist::Identity).unwrap();
        let text = render_table(&entries);
        assert!(text.contains("B3"));
        assert!(text.contains("s1 s2"));
    }
}
