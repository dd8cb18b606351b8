//! Length-non-increasing descent in the affine group: closures, minimal
//! strata of conjugacy classes with finite Coxeter part, parabolic Coxeter
//! sets, and the end-to-end class verification they support.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine_weyl::{AffineElement, AffineWeyl, OmegaElement};
use crate::{Error, Result};

/// Closure of one element under conjugations `x -> s_i x s_i` that do not
/// increase length.
#[derive(Debug, Clone)]
pub struct DescentClosure {
    pub start: AffineElement,
    pub reachable: HashSet<AffineElement>,
    /// The minimum-length stratum of `reachable`, sorted canonically.
    pub minimal: Vec<AffineElement>,
    pub min_length: usize,
    /// False when the node budget stopped the search; the sets are then
    /// partial and `minimal` is only an upper bound for the true stratum.
    pub complete: bool,
    pub edge_log: Option<Vec<(AffineElement, usize, AffineElement)>>,
}

#[derive(Debug, Clone, Copy)]
pub struct ClosureOptions {
    pub budget: usize,
    pub log_edges: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            budget: 1_000_000,
            log_edges: false,
        }
    }
}

/// Named outcomes of one class verification.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassChecks {
    pub is_finite_coxeter_part: bool,
    pub support_constant_on_minimal: bool,
    pub j_proper: bool,
    pub j_tau_stable: bool,
    pub minimal_equals_parabolic_coxeters: bool,
}

impl ClassChecks {
    pub fn all(&self) -> bool {
        self.is_finite_coxeter_part
            && self.support_constant_on_minimal
            && self.j_proper
            && self.j_tau_stable
            && self.minimal_equals_parabolic_coxeters
    }
}

/// Result record of one class verification.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub tau: OmegaElement,
    pub representative: AffineElement,
    pub j_found: Option<Vec<usize>>,
    pub minimal_set: Vec<AffineElement>,
    pub min_length: usize,
    pub closure_size: usize,
    pub checks: ClassChecks,
}

impl ClassReport {
    pub fn pass(&self) -> bool {
        self.checks.all()
    }

    /// JSON view with stable field order; elements in canonical text form.
    pub fn to_json(&self, w: &AffineWeyl) -> serde_json::Value {
        serde_json::json!({
            "tau": w.element_text(&self.tau.elt),
            "tau_minuscule_index": self.tau.minuscule_index,
            "representative": w.element_text(&self.representative),
            "j_found": self.j_found,
            "min_length": self.min_length,
            "minimal_set": self.minimal_set.iter().map(|m| w.element_text(m)).collect::<Vec<_>>(),
            "closure_size": self.closure_size,
            "checks": self.checks,
            "pass": self.pass(),
        })
    }
}

/// Does the class of `x` have finite Coxeter part, i.e. is the finite part
/// conjugate to a Coxeter element of its twist coset?
pub fn has_finite_coxeter_part(w: &AffineWeyl, x: &AffineElement) -> bool {
    let f = w.eta(x);
    let reference = w.fin.canonical_coxeter(f.delta_pow);
    w.fin.is_conjugate(&f, &reference)
}

/// Breadth-first closure of `start` under non-length-increasing simple
/// conjugations, processed in (length, canonical-encoding) order.
pub fn descent_closure(w: &AffineWeyl, start: &AffineElement, opts: ClosureOptions) -> DescentClosure {
    let start_len = w.length(start);
    let mut lengths: HashMap<AffineElement, usize> = HashMap::from([(start.clone(), start_len)]);
    let mut heap: BinaryHeap<Reverse<(usize, AffineElement)>> =
        BinaryHeap::from([Reverse((start_len, start.clone()))]);
    let mut edge_log = opts.log_edges.then(Vec::new);
    let mut min_length = start_len;
    let mut complete = true;

    while let Some(Reverse((len, x))) = heap.pop() {
        for node in 0..=w.rank() {
            let y = w.simple_conjugate(node, &x);
            if lengths.contains_key(&y) {
                continue;
            }
            let ly = w.length(&y);
            if ly > len {
                continue;
            }
            if lengths.len() >= opts.budget {
                complete = false;
                heap.clear();
                break;
            }
            if let Some(log) = edge_log.as_mut() {
                log.push((x.clone(), node, y.clone()));
            }
            min_length = min_length.min(ly);
            lengths.insert(y.clone(), ly);
            heap.push(Reverse((ly, y)));
        }
        if !complete {
            break;
        }
    }

    let mut minimal: Vec<AffineElement> = lengths
        .iter()
        .filter(|(_, &l)| l == min_length)
        .map(|(e, _)| e.clone())
        .collect();
    minimal.sort();
    DescentClosure {
        start: start.clone(),
        reachable: lengths.into_keys().collect(),
        minimal,
        min_length,
        complete,
        edge_log,
    }
}

/// The Coxeter elements of `W_J x <tau>` lying in the coset `W_J tau`:
/// products of one simple reflection per `tau`-orbit on `J`, in every order,
/// times `tau`, deduplicated. `J` must be proper and `tau`-stable.
pub fn parabolic_coxeter_elements(
    w: &AffineWeyl,
    j: &[usize],
    tau: &OmegaElement,
) -> Result<HashSet<AffineElement>> {
    let pi = w.tau_action(&tau.elt)?;
    let jset: HashSet<usize> = j.iter().copied().collect();
    if jset.len() > w.rank() {
        return Err(Error::NotProper);
    }
    if !jset.iter().all(|&n| jset.contains(&pi[n])) {
        return Err(Error::NotStable);
    }
    let orbits = orbits_on(&pi, j);
    let mut out = HashSet::new();
    if orbits.is_empty() {
        out.insert(tau.elt.clone());
        return Ok(out);
    }
    for reps in orbits.iter().map(|o| o.iter().copied()).multi_cartesian_product() {
        let m = reps.len();
        for order in reps.into_iter().permutations(m) {
            let mut acc = w.identity();
            for node in order {
                acc = w.mul(&acc, &w.simple(node))?;
            }
            out.insert(w.mul(&acc, &tau.elt)?);
        }
    }
    Ok(out)
}

/// Orbits of a node permutation restricted to a subset, each sorted, sorted
/// by minimum.
pub(crate) fn orbits_on(pi: &[usize], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted: Vec<usize> = subset.to_vec();
    sorted.sort_unstable();
    let inside: HashSet<usize> = sorted.iter().copied().collect();
    let mut used: HashSet<usize> = HashSet::new();
    let mut orbits = Vec::new();
    for &start in &sorted {
        if used.contains(&start) {
            continue;
        }
        let mut orbit = vec![start];
        used.insert(start);
        let mut cur = pi[start];
        while cur != start {
            debug_assert!(inside.contains(&cur), "subset not stable under pi");
            orbit.push(cur);
            used.insert(cur);
            cur = pi[cur];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort();
    orbits
}

/// Verifies the parabolic-Coxeter description of the minimal stratum for the
/// class of `representative` inside `W_a tau`.
pub fn verify_main_theorem(
    w: &AffineWeyl,
    representative: &AffineElement,
    tau: &OmegaElement,
    opts: ClosureOptions,
) -> Result<ClassReport> {
    // structural precondition: representative must lie in W_a tau
    w.wa_part(representative, &tau.elt)?;

    let is_finite_coxeter_part = has_finite_coxeter_part(w, representative);
    let closure = descent_closure(w, representative, opts);
    if !closure.complete {
        return Err(Error::BudgetExceeded {
            explored: closure.reachable.len(),
        });
    }

    let mut supports = closure
        .minimal
        .iter()
        .map(|m| w.support(m, &tau.elt))
        .collect::<Result<Vec<_>>>()?;
    supports.sort();
    supports.dedup();
    let support_constant_on_minimal = supports.len() == 1;
    let j_found = supports.first().cloned();

    let (j_proper, j_tau_stable, minimal_equals_parabolic_coxeters) = match &j_found {
        Some(j) if support_constant_on_minimal => {
            let proper = j.len() <= w.rank();
            let pi = w.tau_action(&tau.elt)?;
            let jset: HashSet<usize> = j.iter().copied().collect();
            let stable = jset.iter().all(|&n| jset.contains(&pi[n]));
            let equals = if proper && stable {
                let expected = parabolic_coxeter_elements(w, j, tau)?;
                let minimal: HashSet<AffineElement> = closure.minimal.iter().cloned().collect();
                expected == minimal
            } else {
                false
            };
            (proper, stable, equals)
        }
        _ => (false, false, false),
    };

    Ok(ClassReport {
        tau: tau.clone(),
        representative: representative.clone(),
        j_found: if support_constant_on_minimal { j_found } else { None },
        minimal_set: closure.minimal,
        min_length: closure.min_length,
        closure_size: closure.reachable.len(),
        checks: ClassChecks {
            is_finite_coxeter_part,
            support_constant_on_minimal,
            j_proper,
            j_tau_stable,
            minimal_equals_parabolic_coxeters,
        },
    })
}

/// Conjugation by a length-zero element, `sigma x sigma^{-1}`.
pub fn omega_translate_class(
    w: &AffineWeyl,
    x: &AffineElement,
    sigma: &OmegaElement,
) -> AffineElement {
    let inv = w.inv(&sigma.elt);
    w.mul(&w.mul(&sigma.elt, x).expect("same context"), &inv)
        .expect("same context")
}

/// Seeded random conjugates `g x g^{-1}` with `g` a word of at most
/// `max_len` affine generators.
pub fn random_conjugates(
    w: &AffineWeyl,
    x: &AffineElement,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Vec<AffineElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.random_range(1..=max_len.max(1));
            let mut g = w.identity();
            for _ in 0..len {
                let node = rng.random_range(0..=w.rank());
                g = w.mul(&g, &w.simple(node)).expect("same context");
            }
            let ginv = w.inv(&g);
            w.mul(&w.mul(&g, x).expect("same context"), &ginv)
                .expect("same context")
        })
        .collect()
}
