//! Verifiers: each identity is evaluated through two independent pipelines
//! and reported row by row.
//!
//! Independence is by construction. For the clique/Boolean identity the left
//! side only touches `graphs` and the right side only touches `poset`; for the
//! polytope identities the f-vector is the only shared input. No verifier
//! compares a pipeline against itself.

mod corpus;

pub use corpus::{run_corpus, CorpusSpec};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graphs::{bipartite_g2, build_gp, clique_complex, clique_vector};
use crate::hilbert::{
    dual_boundary_betti_table, hibi_betti_table, hilbert_dual_closed_form, hilbert_from_betti,
    hilbert_hibi_closed_form, peskine_szpiro_multiplicity, HilbertSamples,
};
use crate::monomial::{complex_of_ideal, edge_ideal, height, hibi_ideal, stanley_reisner_ideal, standard_monomial_count};
use crate::poset::{boolean_interval_counts, order_ideals, sperner_number, Poset};
use crate::scalar::{sign, PascalTable};
use crate::simplicial::{alexander_dual, f_vector, h_vector, minimal_nonfaces, FVector, SimplicialComplex};
use crate::Int;

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

impl Row {
    pub fn new(index: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Row { index: index.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Outcome of one identity on one instance. `pass` holds iff every row has
/// `lhs == rhs` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub instance: String,
    pub rows: Vec<Row>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, instance: impl Into<String>, rows: Vec<Row>) -> Self {
        let pass = rows.iter().all(Row::holds);
        VerificationReport { identity: identity.into(), instance: instance.into(), rows, pass }
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    pub fn failing_rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.holds())
    }

    /// Human-readable rendering: one status line, then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} [{}]\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.instance
        );
        for row in &self.rows {
            let rel = if row.holds() { "=" } else { "≠" };
            out.push_str(&format!("  {}: {} {} {}\n", row.index, row.lhs, rel, row.rhs));
        }
        out
    }
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

/// `p=3 covers=1<2,2<3`, 1-based; `covers=none` for an antichain.
pub fn describe_poset(poset: &Poset) -> String {
    let covers: Vec<String> = poset.covers().iter().map(|(a, b)| format!("{}<{}", a + 1, b + 1)).collect();
    let covers = if covers.is_empty() { "none".to_string() } else { covers.join(",") };
    format!("p={} covers={covers}", poset.len())
}

pub fn describe_complex(complex: &SimplicialComplex) -> String {
    format!(
        "n={} facets={} (unverified provenance)",
        complex.ground_size(),
        complex.facets().len()
    )
}

/// `{x1,y2}` labels for sets in the `2p` variables of `G(P)` and `H(P)`.
fn xy_label(p: usize, set: Bits) -> String {
    let names: Vec<String> = set
        .iter()
        .map(|v| if v < p { format!("x{}", v + 1) } else { format!("y{}", v - p + 1) })
        .collect();
    format!("{{{}}}", names.join(","))
}

fn xy_family(p: usize, sets: &[Bits]) -> String {
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|s| s.canonical_key());
    sorted.iter().map(|s| xy_label(p, *s)).collect::<Vec<_>>().join(" ")
}

/// `f_{2p−i−1}(P) = Σ_{m=0}^{k} (−1)^m b_m C(p−m, 2p−i)` for `p <= i <= 2p`.
///
/// The left side counts cliques of `G(P)`; the right side counts Boolean
/// intervals of `J(P)` and bounds the sum by the Sperner number.
pub fn verify_theorem1(poset: &Poset) -> VerificationReport {
    let p = poset.len();
    let cliques = clique_vector::<Int>(&build_gp(poset));

    let census = boolean_interval_counts::<Int>(&order_ideals(poset), poset);
    let k = sperner_number(poset);
    let binom = PascalTable::<Int>::new(p);

    let rows = (p..=2 * p)
        .map(|i| {
            let lhs = cliques.get(2 * p as i64 - i as i64 - 1);
            let rhs = (0..=k).fold(Int::zero(), |acc, m| {
                acc + sign::<Int>(m) * census.get(m) * binom.get(p as i64 - m as i64, (2 * p - i) as i64)
            });
            Row::new(format!("i={i}"), lhs, rhs)
        })
        .collect();
    VerificationReport::new("theorem1", describe_poset(poset), rows)
}

/// The closed forms for the `p`-antichain and the resulting binomial identity.
pub fn verify_antichain_example(p: usize) -> VerificationReport {
    let poset = Poset::antichain(p);
    let census = boolean_interval_counts::<Int>(&order_ideals(&poset), &poset);
    let cliques = clique_vector::<Int>(&build_gp(&poset));
    let binom = PascalTable::<Int>::new(2 * p);
    let pow2 = |e: usize| Int::one() << e;

    let mut rows = Vec::new();
    for i in 0..=p {
        rows.push(Row::new(format!("b[{i}]"), census.get(i), binom.get(p as i64, i as i64) * pow2(p - i)));
    }
    for i in -1..p as i64 {
        let e = (i + 1) as usize;
        rows.push(Row::new(format!("f[{i}]"), cliques.get(i), binom.get(p as i64, i + 1) * pow2(e)));
    }
    for i in p..=2 * p {
        let top = (2 * p - i) as i64;
        let lhs = binom.get(p as i64, top) * pow2(2 * p - i);
        let rhs = (0..=p).fold(Int::zero(), |acc, m| {
            acc + sign::<Int>(m) * binom.get(p as i64, m as i64) * binom.get((p - m) as i64, top) * pow2(p - m)
        });
        rows.push(Row::new(format!("identity[i={i}]"), lhs, rhs));
    }
    VerificationReport::new("antichain-example", format!("antichain(p={p})"), rows)
}

/// `(Γ_P)* = Δ(G(P))`, its ideal form `I((Γ_P)*) = I(G_2(P))`, and `d = p`.
pub fn verify_gamma_dual(poset: &Poset) -> Result<VerificationReport> {
    let p = poset.len();
    let gamma = complex_of_ideal(&hibi_ideal(poset))?;
    let dual = alexander_dual(&gamma)?;
    let gp = build_gp(poset);
    let cliques = clique_complex(&gp);
    let dual_ideal = stanley_reisner_ideal(&dual);
    let comparability = edge_ideal(&bipartite_g2(poset));

    let rows = vec![
        Row::new("facets", xy_family(p, dual.facets()), xy_family(p, cliques.facets())),
        Row::new("ideal", xy_family(p, dual_ideal.generators()), xy_family(p, comparability.generators())),
        Row::new("dim+1", dual.rank(), p),
        Row::new("clique-number", clique_vector::<Int>(&gp).clique_number(), p),
    ];
    Ok(VerificationReport::new("gamma-dual", describe_poset(poset), rows))
}

/// The Dehn–Sommerville relations, the Euler–Poincaré formula and `h_k = h_{d−k}`.
///
/// Holds for boundaries of simplicial polytopes; the report only states the
/// residuals and does not certify that the input is such a boundary.
pub fn verify_dehn_sommerville(complex: &SimplicialComplex) -> VerificationReport {
    let fv = f_vector::<Int>(complex);
    let d = fv.d();
    let binom = PascalTable::<Int>::new(d);
    let mut rows = Vec::new();
    for k in 0..=d {
        let rhs = (k..=d).fold(Int::zero(), |acc, i| {
            acc + sign::<Int>(d - i) * binom.get(i as i64, k as i64) * fv.get(i as i64 - 1)
        });
        rows.push(Row::new(format!("k={k}"), fv.get(k as i64 - 1), rhs));
    }
    let euler = (0..d).fold(Int::zero(), |acc, i| acc + sign::<Int>(i) * fv.get(i as i64));
    rows.push(Row::new("euler", euler, Int::one() - sign::<Int>(d)));
    let h = h_vector(&fv);
    for k in 0..=d {
        rows.push(Row::new(format!("h[{k}]=h[{}]", d - k), h.get(k), h.get(d - k)));
    }
    VerificationReport::new("dehn-sommerville", describe_complex(complex), rows)
}

/// The flag corollary `2[C(f_0,2) − f_1] = Σ_{i=1}^{d+1} (−1)^i f_{d−i} (f_0 − d + i − 1)²`,
/// with the Peskine–Szpiro evaluation of the dual resolution at height 2 and
/// the height itself as cross-checks.
pub fn verify_flag_corollary(complex: &SimplicialComplex) -> Result<VerificationReport> {
    if let Some(bad) = minimal_nonfaces(complex).iter().find(|s| s.len() != 2) {
        return Err(Error::NotFlag(bad.len()));
    }
    let dual = alexander_dual(complex)?;
    let fv = f_vector::<Int>(complex);
    let d = fv.d();
    let f0 = fv.get(0);
    let f1 = fv.get(1);
    let non_edges = f0.clone() * (f0.clone() - Int::one()) / Int::from(2) - f1;

    let square_sum = (1..=d + 1).fold(Int::zero(), |acc, i| {
        let base = f0.clone() - Int::from(d) + Int::from(i) - Int::one();
        acc + sign::<Int>(i) * fv.get(d as i64 - i as i64) * base.clone() * base
    });
    let table = dual_boundary_betti_table(&fv, complex.ground_size());
    let multiplicity = match peskine_szpiro_multiplicity(&table, 2) {
        Ok(e) => e.to_string(),
        Err(err) => err.to_string(),
    };
    let dual_height = match height(&stanley_reisner_ideal(&dual)) {
        Ok(h) => h.to_string(),
        Err(err) => err.to_string(),
    };
    let rows = vec![
        Row::new("corollary", Int::from(2) * non_edges.clone(), square_sum),
        Row::new("peskine-szpiro", multiplicity, non_edges),
        Row::new("height", dual_height, 2),
    ];
    Ok(VerificationReport::new("flag-corollary", describe_complex(complex), rows))
}

/// Ways of evaluating a cumulative Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HilbertMethod {
    /// Standard-monomial count of the ideal.
    Oracle,
    /// The Hibi closed form in the Boolean-interval counts (posets only).
    ClosedForm,
    /// Alternating sum over the explicit Betti table.
    Resolution,
    /// The dual f-vector formula.
    DualFormula,
}

impl HilbertMethod {
    pub const ALL: [HilbertMethod; 4] = [
        HilbertMethod::Oracle,
        HilbertMethod::ClosedForm,
        HilbertMethod::Resolution,
        HilbertMethod::DualFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HilbertMethod::Oracle => "oracle",
            HilbertMethod::ClosedForm => "closed-form",
            HilbertMethod::Resolution => "resolution",
            HilbertMethod::DualFormula => "dual-formula",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

/// The Hilbert function of `S/H(P)` for `0 <= t <= t_max` by one method.
///
/// The dual formula is applied to `Δ = (Γ_P)* = Δ(G(P))`, whose f-vector is
/// the clique vector of `G(P)`, with `n = 2p` and `d = p`.
pub fn poset_hilbert(poset: &Poset, method: HilbertMethod, t_max: usize) -> HilbertSamples<Int> {
    let p = poset.len();
    match method {
        HilbertMethod::Oracle => {
            let ideal = hibi_ideal(poset);
            HilbertSamples::collect(t_max, |t| standard_monomial_count::<Int>(&ideal, t))
        }
        HilbertMethod::ClosedForm => {
            let census = boolean_interval_counts::<Int>(&order_ideals(poset), poset);
            HilbertSamples::collect(t_max, |t| hilbert_hibi_closed_form(p, &census, t))
        }
        HilbertMethod::Resolution => {
            let census = boolean_interval_counts::<Int>(&order_ideals(poset), poset);
            let table = hibi_betti_table(poset, &census);
            HilbertSamples::collect(t_max, |t| hilbert_from_betti(&table, t))
        }
        HilbertMethod::DualFormula => {
            let fv = FVector::new(clique_vector::<Int>(&build_gp(poset)).entries().to_vec());
            HilbertSamples::collect(t_max, |t| hilbert_dual_closed_form(2 * p, p, &fv, t))
        }
    }
}

/// The Hilbert function of `R/I(Δ*)` for a polytope-boundary candidate `Δ`.
///
/// Returns `None` for [`HilbertMethod::ClosedForm`], which only exists for
/// Hibi ideals.
pub fn boundary_hilbert(
    complex: &SimplicialComplex,
    method: HilbertMethod,
    t_max: usize,
) -> Result<Option<HilbertSamples<Int>>> {
    let n = complex.ground_size();
    Ok(match method {
        HilbertMethod::Oracle => {
            let ideal = stanley_reisner_ideal(&alexander_dual(complex)?);
            Some(HilbertSamples::collect(t_max, |t| standard_monomial_count::<Int>(&ideal, t)))
        }
        HilbertMethod::ClosedForm => None,
        HilbertMethod::Resolution => {
            let table = dual_boundary_betti_table(&f_vector::<Int>(complex), n);
            Some(HilbertSamples::collect(t_max, |t| hilbert_from_betti(&table, t)))
        }
        HilbertMethod::DualFormula => {
            let fv = f_vector::<Int>(complex);
            Some(HilbertSamples::collect(t_max, |t| hilbert_dual_closed_form(n, fv.d(), &fv, t)))
        }
    })
}

fn agreement_rows(samples: &[(HilbertMethod, HilbertSamples<Int>)]) -> Vec<Row> {
    let (_, oracle) = &samples[0];
    let mut rows = Vec::new();
    for (method, values) in &samples[1..] {
        for ((t, lhs), (_, rhs)) in oracle.values().iter().zip(values.values()) {
            rows.push(Row::new(format!("oracle=={} t={t}", method.name()), lhs, rhs));
        }
    }
    let monotone = oracle.is_nondecreasing();
    rows.push(Row::new("monotone", monotone, true));
    rows
}

/// Four-way agreement of the Hilbert function of `S/H(P)` for `t <= t_max`.
pub fn verify_hilbert_poset(poset: &Poset, t_max: usize) -> VerificationReport {
    let samples: Vec<_> = HilbertMethod::ALL
        .into_iter()
        .map(|m| (m, poset_hilbert(poset, m, t_max)))
        .collect();
    VerificationReport::new("hilbert-agreement", describe_poset(poset), agreement_rows(&samples))
}

/// Three-way agreement of the Hilbert function of `R/I(Δ*)` for `t <= t_max`.
pub fn verify_hilbert_boundary(complex: &SimplicialComplex, t_max: usize) -> Result<VerificationReport> {
    let mut samples = Vec::new();
    for m in HilbertMethod::ALL {
        if let Some(values) = boundary_hilbert(complex, m, t_max)? {
            samples.push((m, values));
        }
    }
    Ok(VerificationReport::new("hilbert-agreement", describe_complex(complex), agreement_rows(&samples)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary_cross_polytope, boundary_cyclic_polytope, boundary_simplex};

    fn pairs(report: &VerificationReport) -> Vec<(String, String)> {
        report.rows.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect()
    }

    fn s(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn theorem1_examples() {
        let r = verify_theorem1(&Poset::chain(1));
        assert!(r.pass);
        assert_eq!(pairs(&r), vec![s("2", "2"), s("1", "1")]);
        let r = verify_theorem1(&Poset::chain(2));
        assert_eq!(pairs(&r), vec![s("3", "3"), s("4", "4"), s("1", "1")]);
        let r = verify_theorem1(&Poset::antichain(2));
        assert_eq!(pairs(&r), vec![s("4", "4"), s("4", "4"), s("1", "1")]);
        assert_eq!(r.rows[0].index, "i=2");
        assert!(verify_theorem1(&Poset::antichain(0)).pass);
    }

    #[test]
    fn antichain_examples() {
        for p in 1..=5 {
            let r = verify_antichain_example(p);
            assert!(r.pass, "{}", r.to_text());
        }
        let r = verify_antichain_example(3);
        let b: Vec<&str> = r.rows.iter().filter(|x| x.index.starts_with("b[")).map(|x| x.lhs.as_str()).collect();
        assert_eq!(b, vec!["8", "12", "6", "1"]);
    }

    #[test]
    fn gamma_dual_examples() {
        let r = verify_gamma_dual(&Poset::chain(1)).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows[0].lhs, "{x1} {y1}");
        let r = verify_gamma_dual(&Poset::antichain(2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows[0].lhs, "{x1,x2} {x2,y1} {x1,y2} {y1,y2}");
        let r = verify_gamma_dual(&Poset::chain(2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows[2].lhs, "2");
        assert_eq!(verify_gamma_dual(&Poset::antichain(0)), Err(Error::UnitIdeal));
    }

    #[test]
    fn dehn_sommerville_examples() {
        let oct = verify_dehn_sommerville(&boundary_cross_polytope(3).unwrap());
        assert!(oct.pass);
        let euler = oct.rows.iter().find(|r| r.index == "euler").unwrap();
        assert_eq!((euler.lhs.as_str(), euler.rhs.as_str()), ("2", "2"));
        assert!(verify_dehn_sommerville(&boundary_simplex(4).unwrap()).pass);
        assert!(verify_dehn_sommerville(&boundary_cyclic_polytope(7, 4).unwrap()).pass);
        // A solid triangle is a ball, not a sphere.
        let ball = SimplicialComplex::full_simplex(3).unwrap();
        let r = verify_dehn_sommerville(&ball);
        assert!(!r.pass);
        assert!(r.instance.contains("unverified provenance"));
    }

    #[test]
    fn flag_examples() {
        let square = verify_flag_corollary(&boundary_cross_polytope(2).unwrap()).unwrap();
        assert!(square.pass);
        assert_eq!(pairs(&square)[0], s("4", "4"));
        let oct = verify_flag_corollary(&boundary_cross_polytope(3).unwrap()).unwrap();
        assert_eq!(pairs(&oct)[0], s("6", "6"));
        assert!(verify_flag_corollary(&boundary_cross_polytope(4).unwrap()).unwrap().pass);
        assert_eq!(verify_flag_corollary(&boundary_simplex(2).unwrap()), Err(Error::NotFlag(3)));
    }

    #[test]
    fn hilbert_agreement() {
        let r = verify_hilbert_poset(&Poset::chain(1), 5);
        assert!(r.pass);
        let ones = poset_hilbert(&Poset::chain(1), HilbertMethod::Oracle, 4);
        assert!(ones.values().iter().all(|(_, v)| v.is_one()));
        assert!(verify_hilbert_poset(&Poset::antichain(3), 9).pass);
        assert!(verify_hilbert_boundary(&boundary_cross_polytope(3).unwrap(), 8).unwrap().pass);
        assert_eq!(
            boundary_hilbert(&boundary_simplex(3).unwrap(), HilbertMethod::ClosedForm, 3),
            Ok(None)
        );
        assert_eq!(HilbertMethod::parse("dual-formula"), Some(HilbertMethod::DualFormula));
        assert_eq!(HilbertMethod::parse("bogus"), None);
    }

    #[test]
    fn json_shape() {
        let r = verify_theorem1(&Poset::chain(1));
        let json = reports_to_json(&[r]);
        let identity = json.find("\"identity\"").unwrap();
        let instance = json.find("\"instance\"").unwrap();
        let rows = json.find("\"rows\"").unwrap();
        let pass = json.find("\"pass\"").unwrap();
        assert!(identity < instance && instance < rows && rows < pass);
        assert!(json.contains("\"index\": \"i=1\""));
    }
}
