//! Two-sided audits of the construction theorems: build the semigroup,
//! compute every invariant directly, evaluate the closed-form prediction
//! from component profiles, and compare verdict by verdict.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use smg_core::commuting::{
    commuting_graph, extended_commuting_graph, knit_degree, validate_witness,
};
use smg_core::constructions::{embedded_label, ConstructError, ConstructionKind, ConstructionSpec};
use smg_core::enumerate::{enumerate_semigroups, EnumerateError, EnumerationMode};
use smg_core::graph::{
    complete_graph_on, equal_via, graph_join, identity_map, strong_product, GraphError, SimpleGraph,
};
use smg_core::invariants::{
    chromatic_number, clique_number, diameter, girth, InvariantCaps, InvariantError,
};
use smg_core::predict::{
    predict_direct_product, predict_zero_union, ChromaticPrediction, ComponentProfile,
    PredictError, Prediction, StructureClaim,
};
use smg_core::rng::SplitMix64;
use smg_core::semigroup::Semigroup;

/// Order up to which a constructed table is re-validated in full.
pub const DEFAULT_VALIDATOR_CAP: usize = 256;

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub caps: InvariantCaps,
    pub product_cap: usize,
    pub validator_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            caps: InvariantCaps::default(),
            product_cap: smg_core::DEFAULT_PRODUCT_CAP,
            validator_cap: DEFAULT_VALIDATOR_CAP,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

/// One compared quantity: what the closed form said, what direct
/// computation found.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub name: &'static str,
    pub predicted: String,
    pub computed: String,
    pub outcome: Outcome,
}

impl Verdict {
    fn compared<P: fmt::Display, C: fmt::Display>(
        name: &'static str,
        p: P,
        c: C,
        ok: bool,
    ) -> Self {
        Self {
            name,
            predicted: p.to_string(),
            computed: c.to_string(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        }
    }

    fn equal<T: PartialEq + fmt::Display>(name: &'static str, predicted: T, computed: T) -> Self {
        let ok = predicted == computed;
        Self::compared(name, predicted, computed, ok)
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        Self {
            name,
            predicted: String::new(),
            computed: String::new(),
            outcome: Outcome::Skipped(reason.into()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub kind: ConstructionKind,
    pub components: Vec<String>,
    pub order: usize,
    pub verdicts: Vec<Verdict>,
    pub wall_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.outcome == Outcome::Fail)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts
            .iter()
            .filter(|v| matches!(v.outcome, Outcome::Skipped(_)))
    }
}

#[derive(Debug)]
pub enum VerifyError {
    Construct(ConstructError),
    Invariant(InvariantError),
    Graph(GraphError),
    Enumerate(EnumerateError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Construct(e) => write!(f, "{e}"),
            Self::Invariant(e) => write!(f, "{e}"),
            Self::Graph(e) => write!(f, "{e}"),
            Self::Enumerate(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for VerifyError {}

impl From<ConstructError> for VerifyError {
    fn from(e: ConstructError) -> Self {
        Self::Construct(e)
    }
}

impl From<InvariantError> for VerifyError {
    fn from(e: InvariantError) -> Self {
        Self::Invariant(e)
    }
}

impl From<GraphError> for VerifyError {
    fn from(e: GraphError) -> Self {
        Self::Graph(e)
    }
}

impl From<EnumerateError> for VerifyError {
    fn from(e: EnumerateError) -> Self {
        Self::Enumerate(e)
    }
}

fn relabel(g: &SimpleGraph, map: impl Fn(&str) -> String) -> SimpleGraph {
    let labels = g.labels().iter().map(|l| map(l)).collect();
    let mut out = SimpleGraph::new(labels).expect("relabeling preserves distinctness");
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    out
}

fn render_kd(kd: Option<usize>) -> String {
    match kd {
        Some(k) => k.to_string(),
        None => "none".to_string(),
    }
}

/// Builds the construction and audits every theorem-side claim against a
/// direct computation on the built semigroup.
pub fn check_construction(
    spec: &ConstructionSpec,
    component_ids: &[String],
    cfg: &CheckConfig,
) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let built = spec.build(cfg.product_cap)?;
    let profiles: Vec<ComponentProfile> = spec
        .components
        .iter()
        .map(|s| ComponentProfile::compute(s, &cfg.caps))
        .collect::<Result<_, _>>()?;
    let mut verdicts = Vec::new();

    // The construction must produce an associative table.
    if built.order() <= cfg.validator_cap {
        verdicts.push(match built.validate() {
            Ok(()) => Verdict::compared("associativity", "holds", "holds", true),
            Err(e) => Verdict::compared("associativity", "holds", e, false),
        });
    } else {
        verdicts.push(Verdict::skipped(
            "associativity",
            format!(
                "cap: order {} exceeds validator cap {}",
                built.order(),
                cfg.validator_cap
            ),
        ));
    }

    // Center composition: fresh zero plus embedded centers, or the
    // product of the centers, depending on the construction.
    let mut expected_center: Vec<String> = match spec.kind {
        ConstructionKind::ZeroUnion => std::iter::once("0".to_string())
            .chain(spec.components.iter().enumerate().flat_map(|(i, s)| {
                s.center()
                    .into_iter()
                    .map(move |x| embedded_label(i, s.label(x)))
                    .collect::<Vec<_>>()
            }))
            .collect(),
        ConstructionKind::DirectProduct => {
            let mut acc: Vec<Vec<String>> = vec![Vec::new()];
            for s in &spec.components {
                let centers: Vec<&str> = s.center().iter().map(|&x| s.label(x)).collect();
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        centers.iter().map(move |&c| {
                            let mut next = prefix.clone();
                            next.push(c.to_string());
                            next
                        })
                    })
                    .collect();
            }
            acc.into_iter()
                .map(|coords| format!("({})", coords.join(",")))
                .collect()
        }
    };
    expected_center.sort();
    let mut got_center: Vec<String> = built
        .center()
        .iter()
        .map(|&x| built.label(x).to_string())
        .collect();
    got_center.sort();
    verdicts.push(Verdict::equal(
        "center",
        expected_center.join(" "),
        got_center.join(" "),
    ));

    let expected_commutative = spec.components.iter().all(Semigroup::is_commutative);
    verdicts.push(Verdict::equal(
        "commutativity",
        expected_commutative,
        built.is_commutative(),
    ));

    let prediction = match spec.kind {
        ConstructionKind::ZeroUnion => predict_zero_union(&profiles),
        ConstructionKind::DirectProduct => predict_direct_product(&profiles),
    };

    match prediction {
        Err(PredictError::AllCommutative) => {
            check_commutative_construction(spec, &built, cfg, &mut verdicts)?;
        }
        Err(e @ PredictError::CycleComponentNotUnique { .. }) => {
            verdicts.push(Verdict::compared(
                "girth",
                "a unique cycle-bearing component",
                e,
                false,
            ));
        }
        Ok(prediction) => {
            check_noncommutative_construction(spec, &built, &prediction, cfg, &mut verdicts)?;
        }
    }

    Ok(CheckReport {
        kind: spec.kind,
        components: component_ids.to_vec(),
        order: built.order(),
        verdicts,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// With every component commutative the construction is commutative and
/// only the extended graph carries information: it must be complete, and
/// for products it must still match the strong product of the factors.
fn check_commutative_construction(
    spec: &ConstructionSpec,
    built: &Semigroup,
    cfg: &CheckConfig,
    verdicts: &mut Vec<Verdict>,
) -> Result<(), VerifyError> {
    let extended = extended_commuting_graph(built);
    let complete = complete_graph_on(extended.labels().to_vec())?;
    let ok = equal_via(&extended, &complete, &identity_map(&extended))?;
    verdicts.push(Verdict::compared(
        "extended-complete",
        format!("K_{}", built.order()),
        if ok { "equal" } else { "different" },
        ok,
    ));
    if spec.kind == ConstructionKind::DirectProduct {
        verdicts.push(strong_product_verdict(spec, &extended, cfg)?);
    }
    for name in [
        "structure",
        "connectivity",
        "diameter",
        "clique",
        "chromatic",
        "girth",
        "knit-degree",
    ] {
        verdicts.push(Verdict::skipped(name, "commutative construction"));
    }
    Ok(())
}

fn strong_product_verdict(
    spec: &ConstructionSpec,
    extended: &SimpleGraph,
    cfg: &CheckConfig,
) -> Result<Verdict, VerifyError> {
    let factors: Vec<SimpleGraph> = spec
        .components
        .iter()
        .map(extended_commuting_graph)
        .collect();
    let product = strong_product(&factors, cfg.product_cap)?;
    // The product element labels and the tuple labels coincide, so the
    // canonical bijection is the identity.
    let ok = equal_via(extended, &product, &identity_map(extended))?;
    Ok(Verdict::compared(
        "extended-strong-product",
        "isomorphic via tuple labels",
        if ok { "equal" } else { "different" },
        ok,
    ))
}

fn check_noncommutative_construction(
    spec: &ConstructionSpec,
    built: &Semigroup,
    prediction: &Prediction,
    cfg: &CheckConfig,
    verdicts: &mut Vec<Verdict>,
) -> Result<(), VerifyError> {
    let graph = match commuting_graph(built) {
        Ok(g) => g,
        Err(_) => {
            verdicts.push(Verdict::compared(
                "structure",
                "a non-commutative construction",
                "a commutative semigroup",
                false,
            ));
            return Ok(());
        }
    };

    // Structural identity of the graph.
    match spec.kind {
        ConstructionKind::ZeroUnion => {
            let parts: Vec<SimpleGraph> = spec
                .components
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_commutative())
                .map(|(i, s)| {
                    commuting_graph(s)
                        .map(|g| relabel(&g, |l| embedded_label(i, l)))
                        .expect("component is non-commutative")
                })
                .collect();
            let expected = graph_join(&parts)?;
            let ok = equal_via(&graph, &expected, &identity_map(&graph))?;
            let claim = match prediction.structure {
                StructureClaim::EqualsComponent(j) => format!("equals component {}", j + 1),
                StructureClaim::EqualsJoin => "equals the join of the component graphs".to_string(),
                StructureClaim::IsomorphicStrongProduct => unreachable!("zero-union claim"),
            };
            verdicts.push(Verdict::compared(
                "structure",
                claim,
                if ok { "equal" } else { "different" },
                ok,
            ));
        }
        ConstructionKind::DirectProduct => {
            let extended = extended_commuting_graph(built);
            verdicts.push(strong_product_verdict(spec, &extended, cfg)?);
        }
    }

    // Numeric invariants, each against its direct computation.
    let (diam, connected) = diameter(&graph)?;
    verdicts.push(Verdict::equal(
        "connectivity",
        prediction.connected,
        connected,
    ));
    verdicts.push(Verdict::equal("diameter", prediction.diameter, diam));

    match clique_number(&graph, cfg.caps.clique) {
        Ok(omega) => verdicts.push(Verdict::equal("clique", prediction.clique_number, omega)),
        Err(e) => verdicts.push(Verdict::skipped("clique", e.to_string())),
    }

    match chromatic_number(&graph, cfg.caps.chromatic) {
        Ok(chi) => verdicts.push(match prediction.chromatic {
            ChromaticPrediction::Exact(predicted) => Verdict::equal("chromatic", predicted, chi),
            ChromaticPrediction::UpperBound(bound) => {
                let lower = prediction.clique_number;
                Verdict::compared(
                    "chromatic",
                    format!("in [{lower}, {bound}]"),
                    chi,
                    lower <= chi && chi <= bound,
                )
            }
        }),
        Err(e) => verdicts.push(Verdict::skipped("chromatic", e.to_string())),
    }

    verdicts.push(Verdict::equal("girth", prediction.girth, girth(&graph)));

    let kd = knit_degree(built).expect("built semigroup is non-commutative");
    let witness_ok = match &kd.witness {
        Some(w) => validate_witness(built, w, false).is_ok(),
        None => true,
    };
    verdicts.push(Verdict::compared(
        "knit-degree",
        render_kd(prediction.knit_degree),
        format!(
            "{}{}",
            render_kd(kd.length),
            if witness_ok {
                ""
            } else {
                " (witness failed revalidation)"
            }
        ),
        prediction.knit_degree == kd.length && witness_ok,
    ));

    Ok(())
}

/// How the corpus suite samples and checks tuples.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub orders: Vec<usize>,
    /// Cap on the number of (filtered) pairs; `None` runs them all.
    pub pair_cap: Option<usize>,
    pub triple_count: usize,
    pub seed: u64,
    /// Corpus size per order above the exhaustive range.
    pub sampled_count: usize,
    pub kinds: Vec<ConstructionKind>,
    pub check: CheckConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            orders: vec![2, 3],
            pair_cap: None,
            triple_count: 20,
            seed: 0,
            sampled_count: 10,
            kinds: vec![ConstructionKind::ZeroUnion, ConstructionKind::DirectProduct],
            check: CheckConfig::default(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteFailure {
    pub tuple: String,
    pub kind: ConstructionKind,
    pub check: String,
    pub predicted: String,
    pub computed: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteReport {
    pub checked: usize,
    pub passed: usize,
    pub failed: Vec<SuiteFailure>,
    pub skipped: Vec<String>,
}

/// Enumerates the corpus for the requested orders, forms component tuples
/// (every tuple keeps at least one non-commutative member), and runs
/// [`check_construction`] for each requested kind on each tuple. Work is
/// distributed over a thread pool; results are merged in tuple order.
pub fn run_corpus_suite(cfg: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let mut corpus: Vec<(String, Semigroup)> = Vec::new();
    for &order in &cfg.orders {
        let mode = if order <= smg_core::enumerate::MAX_EXHAUSTIVE_ORDER {
            EnumerationMode::Exhaustive
        } else {
            EnumerationMode::Sampled {
                seed: cfg.seed,
                count: cfg.sampled_count,
            }
        };
        for (i, s) in enumerate_semigroups(order, mode)?.into_iter().enumerate() {
            corpus.push((format!("o{order}#{i}"), s));
        }
    }
    let noncommutative: Vec<bool> = corpus.iter().map(|(_, s)| !s.is_commutative()).collect();

    let mut rng = SplitMix64::new(cfg.seed);
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let any_noncommutative = noncommutative.iter().any(|&nc| nc);

    match cfg.pair_cap {
        // Sample distinct qualifying pairs directly; enumerating all
        // pairs of a large corpus first would be wasteful.
        Some(cap) if any_noncommutative => {
            let mut seen = std::collections::BTreeSet::new();
            let mut attempts = 0;
            while seen.len() < cap && attempts < cap * 200 {
                attempts += 1;
                let mut pair = [rng.below(corpus.len()), rng.below(corpus.len())];
                pair.sort_unstable();
                if (noncommutative[pair[0]] || noncommutative[pair[1]]) && seen.insert(pair) {
                    tuples.push(pair.to_vec());
                }
            }
        }
        Some(_) => {}
        None => {
            for i in 0..corpus.len() {
                for j in i..corpus.len() {
                    if noncommutative[i] || noncommutative[j] {
                        tuples.push(vec![i, j]);
                    }
                }
            }
        }
    }

    if any_noncommutative {
        let mut triples = 0;
        let mut attempts = 0;
        while triples < cfg.triple_count && attempts < cfg.triple_count * 100 {
            attempts += 1;
            let mut t = vec![
                rng.below(corpus.len()),
                rng.below(corpus.len()),
                rng.below(corpus.len()),
            ];
            t.sort_unstable();
            if t.iter().any(|&i| noncommutative[i]) {
                tuples.push(t);
                triples += 1;
            }
        }
    }

    let work: Vec<(String, ConstructionKind, &Vec<usize>)> = tuples
        .iter()
        .flat_map(|t| {
            let id = t
                .iter()
                .map(|&i| corpus[i].0.as_str())
                .collect::<Vec<_>>()
                .join("+");
            cfg.kinds.iter().map(move |&kind| (id.clone(), kind, t))
        })
        .collect();

    let results: Vec<(String, ConstructionKind, Result<CheckReport, VerifyError>)> = work
        .par_iter()
        .map(|(id, kind, tuple)| {
            let spec = ConstructionSpec {
                kind: *kind,
                components: tuple.iter().map(|&i| corpus[i].1.clone()).collect(),
            };
            let ids: Vec<String> = tuple.iter().map(|&i| corpus[i].0.clone()).collect();
            (
                id.clone(),
                *kind,
                check_construction(&spec, &ids, &cfg.check),
            )
        })
        .collect();

    let mut report = SuiteReport {
        checked: 0,
        passed: 0,
        failed: Vec::new(),
        skipped: Vec::new(),
    };
    for (id, kind, result) in results {
        match result {
            Ok(check) => {
                report.checked += 1;
                if check.passed() {
                    report.passed += 1;
                }
                for v in check.failures() {
                    report.failed.push(SuiteFailure {
                        tuple: id.clone(),
                        kind,
                        check: v.name.to_string(),
                        predicted: v.predicted.clone(),
                        computed: v.computed.clone(),
                    });
                }
                for v in check.skipped() {
                    if let Outcome::Skipped(reason) = &v.outcome {
                        report
                            .skipped
                            .push(format!("{id} {}: {} ({reason})", kind.name(), v.name));
                    }
                }
            }
            Err(e) => report
                .skipped
                .push(format!("{id} {}: not run ({e})", kind.name())),
        }
    }
    Ok(report)
}
