use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    verify_antichain_example, verify_dehn_sommerville, verify_flag_corollary, verify_gamma_dual,
    verify_hilbert_boundary, verify_hilbert_poset, verify_theorem1, VerificationReport,
};
use crate::error::{Error, Result};
use crate::poset::{enumerate_posets, random_poset, Poset};
use crate::simplicial::{boundary_cross_polytope, boundary_cyclic_polytope, boundary_simplex, is_flag, SimplicialComplex};

/// Which instances a corpus run covers. `None` or `0` switches a family off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Every labelled poset with at most this many elements.
    pub exhaustive_max_p: Option<usize>,
    pub random_count: usize,
    pub random_max_p: usize,
    pub seed: u64,
    /// Hilbert agreement is checked for `t <= 2p + hilbert_t_extra` on the
    /// exhaustive posets and `t <= n + hilbert_t_extra` on polytopes.
    pub hilbert_t_extra: Option<usize>,
    pub antichain_max_p: Option<usize>,
    pub simplex_max_d: Option<usize>,
    pub cross_polytope_max_d: Option<usize>,
    /// `(max_d, max_n)` for cyclic polytopes `C(n, d)` with `2 <= d < n`.
    pub cyclic_max: Option<(usize, usize)>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            exhaustive_max_p: Some(4),
            random_count: 64,
            random_max_p: 8,
            seed: 0,
            hilbert_t_extra: Some(2),
            antichain_max_p: Some(6),
            simplex_max_d: Some(7),
            cross_polytope_max_d: Some(6),
            cyclic_max: Some((6, 10)),
        }
    }
}

impl CorpusSpec {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

enum Job {
    Exhaustive(Poset),
    Random { poset: Poset, seed: u64 },
    Antichain(usize),
    Polytope { name: String, complex: SimplicialComplex },
}

fn jobs(spec: &CorpusSpec) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    if let Some(max_p) = spec.exhaustive_max_p {
        for p in 0..=max_p {
            jobs.extend(enumerate_posets(p)?.into_iter().map(Job::Exhaustive));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.random_count {
        let p = rng.gen_range(1..=spec.random_max_p.max(1));
        let seed = rng.gen::<u64>();
        jobs.push(Job::Random { poset: random_poset(p, seed), seed });
    }
    if let Some(max_p) = spec.antichain_max_p {
        jobs.extend((1..=max_p).map(Job::Antichain));
    }
    if let Some(max_d) = spec.simplex_max_d {
        for d in 1..=max_d {
            jobs.push(Job::Polytope { name: format!("simplex-boundary(d={d})"), complex: boundary_simplex(d)? });
        }
    }
    if let Some(max_d) = spec.cross_polytope_max_d {
        for d in 1..=max_d {
            let complex = boundary_cross_polytope(d)?;
            jobs.push(Job::Polytope { name: format!("cross-polytope(d={d})"), complex });
        }
    }
    if let Some((max_d, max_n)) = spec.cyclic_max {
        for d in 2..=max_d {
            for n in d + 1..=max_n {
                let complex = boundary_cyclic_polytope(n, d)?;
                jobs.push(Job::Polytope { name: format!("cyclic-polytope(n={n},d={d})"), complex });
            }
        }
    }
    Ok(jobs)
}

fn context(instance: &str, err: Error) -> Error {
    Error::Instance { instance: instance.to_string(), source: Box::new(err) }
}

fn run_job(job: &Job, spec: &CorpusSpec) -> Result<Vec<VerificationReport>> {
    match job {
        Job::Exhaustive(poset) => {
            let mut out = vec![verify_theorem1(poset)];
            if !poset.is_empty() {
                let instance = super::describe_poset(poset);
                out.push(verify_gamma_dual(poset).map_err(|e| context(&instance, e))?);
            }
            if let Some(extra) = spec.hilbert_t_extra {
                out.push(verify_hilbert_poset(poset, 2 * poset.len() + extra));
            }
            Ok(out)
        }
        Job::Random { poset, seed } => {
            let described = super::describe_poset(poset);
            Ok(vec![verify_theorem1(poset).with_instance(format!("random(seed={seed}) {described}"))])
        }
        Job::Antichain(p) => Ok(vec![verify_antichain_example(*p)]),
        Job::Polytope { name, complex } => {
            let mut out = vec![verify_dehn_sommerville(complex).with_instance(name.as_str())];
            if is_flag(complex) {
                let report = verify_flag_corollary(complex).map_err(|e| context(name, e))?;
                out.push(report.with_instance(name.as_str()));
            }
            if let Some(extra) = spec.hilbert_t_extra {
                let t_max = complex.ground_size() + extra;
                let report = verify_hilbert_boundary(complex, t_max).map_err(|e| context(name, e))?;
                out.push(report.with_instance(name.as_str()));
            }
            Ok(out)
        }
    }
}

/// Runs every instance in `spec` in parallel and returns the reports in a
/// fixed order that does not depend on scheduling.
pub fn run_corpus(spec: &CorpusSpec) -> Result<Vec<VerificationReport>> {
    let jobs = jobs(spec)?;
    let batches: Vec<Vec<VerificationReport>> =
        jobs.par_iter().map(|job| run_job(job, spec)).collect::<Result<_>>()?;
    Ok(batches.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CorpusSpec {
        CorpusSpec {
            exhaustive_max_p: Some(3),
            random_count: 5,
            random_max_p: 5,
            seed: 11,
            hilbert_t_extra: Some(1),
            antichain_max_p: Some(3),
            simplex_max_d: Some(3),
            cross_polytope_max_d: Some(3),
            cyclic_max: Some((3, 6)),
        }
    }

    #[test]
    fn small_corpus_passes() {
        let reports = run_corpus(&small()).unwrap();
        assert!(reports.iter().all(|r| r.pass));
        let theorem1 = reports.iter().filter(|r| r.identity == "theorem1").count();
        // 1 + 1 + 3 + 19 exhaustive plus 5 random.
        assert_eq!(theorem1, 29);
        let flag = reports.iter().filter(|r| r.identity == "flag-corollary").count();
        // Cross-polytopes d = 1..=3, the 1-simplex boundary, and the 4-, 5-
        // and 6-gons as C(n, 2).
        assert_eq!(flag, 7);
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(run_corpus(&small()).unwrap(), run_corpus(&small()).unwrap());
        let other = run_corpus(&small().with_seed(12)).unwrap();
        assert_ne!(run_corpus(&small()).unwrap(), other);
    }
}
