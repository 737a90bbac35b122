//! Table-driven checks of the structural lemmas, each evaluated over every
//! configuration it quantifies over.
//!
//! Entries come in scopes. `strict` runs only on graphs meeting the full
//! hypothesis. `relaxed` runs the setup-level checks on non-hamiltonian graphs
//! with `n >= 3` that are 1-tough or have `sigma_3 >= n`, and is informational.
//! The hopping check has no toughness hypothesis and runs `standalone`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cycle::OrientedCycle;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    enumerate_cycles_of_length, enumerate_longest_cycles, is_dominating_cycle, mu_cycle, nc2,
    sigma3, CycleCensus,
};
use crate::structure::{
    evaluate_hopping, find_bad_paths, find_small_pairs, hopping_fixpoint, hopping_gate,
    inner_connected, neighborhood_decomposition, pivot_triples, relocate_v, HoppingGate,
    IntervalDecomposition, Setup, SetupDescription, SetupError,
};

use super::bound::{check_hypothesis, in_relaxed_domain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OracleId {
    #[serde(rename = "ORC-L1")]
    L1,
    #[serde(rename = "ORC-L2")]
    L2,
    #[serde(rename = "ORC-L3")]
    L3,
    #[serde(rename = "ORC-L5C")]
    L5c,
    #[serde(rename = "ORC-RMK3")]
    Rmk3,
    #[serde(rename = "ORC-L4")]
    L4,
    #[serde(rename = "ORC-L7")]
    L7,
    #[serde(rename = "ORC-SMALL")]
    Small,
    #[serde(rename = "ORC-ALPHA")]
    Alpha,
    #[serde(rename = "ORC-HOP")]
    Hop,
    #[serde(rename = "ORC-CL1")]
    Cl1,
    #[serde(rename = "ORC-CL2")]
    Cl2,
    #[serde(rename = "ORC-CL3")]
    Cl3,
    #[serde(rename = "ORC-L9")]
    L9,
    #[serde(rename = "ORC-L10")]
    L10,
    #[serde(rename = "ORC-L12")]
    L12,
    #[serde(rename = "ORC-R1")]
    R1,
    #[serde(rename = "ORC-INVA")]
    Inva,
}

use OracleId::*;

impl OracleId {
    /// Table order.
    pub const ALL: [OracleId; 18] = [
        L1, L2, L3, L5c, Rmk3, L4, L7, Small, Alpha, Hop, Cl1, Cl2, Cl3, L9, L10, L12, R1, Inva,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            L1 => "ORC-L1",
            L2 => "ORC-L2",
            L3 => "ORC-L3",
            L5c => "ORC-L5C",
            Rmk3 => "ORC-RMK3",
            L4 => "ORC-L4",
            L7 => "ORC-L7",
            Small => "ORC-SMALL",
            Alpha => "ORC-ALPHA",
            Hop => "ORC-HOP",
            Cl1 => "ORC-CL1",
            Cl2 => "ORC-CL2",
            Cl3 => "ORC-CL3",
            L9 => "ORC-L9",
            L10 => "ORC-L10",
            L12 => "ORC-L12",
            R1 => "ORC-R1",
            Inva => "ORC-INVA",
        }
    }

    /// Accepts `ORC-L1`, `l1` and similar spellings.
    pub fn parse(s: &str) -> Option<OracleId> {
        let key = s.trim().to_ascii_uppercase();
        let key = key.strip_prefix("ORC-").unwrap_or(&key);
        OracleId::ALL
            .into_iter()
            .find(|id| &id.as_str()[4..] == key)
    }

    fn per_setup(self) -> bool {
        !matches!(self, L1 | L2 | L4 | Hop)
    }

    /// Oracles that also run in the relaxed scope.
    pub fn has_relaxed_scope(self) -> bool {
        self.per_setup() && self != L7
    }

    /// In the strict scope these run only on setups meeting (S3).
    fn strict_needs_s3(self) -> bool {
        !matches!(self, L1 | L2 | L3 | L4 | L5c | Rmk3 | Hop)
    }

    pub fn scopes(self) -> &'static [Scope] {
        if self == Hop {
            &[Scope::Standalone]
        } else if self.has_relaxed_scope() {
            &[Scope::Strict, Scope::Relaxed]
        } else {
            &[Scope::Strict]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Strict,
    Relaxed,
    Standalone,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Strict => "strict",
            Scope::Relaxed => "relaxed",
            Scope::Standalone => "standalone",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStatus {
    Holds,
    Fails,
    Vacuous,
    Skipped,
}

impl OracleStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleStatus::Holds => "holds",
            OracleStatus::Fails => "fails",
            OracleStatus::Vacuous => "vacuous",
            OracleStatus::Skipped => "skipped",
        }
    }
}

/// Enough to re-check a failure by hand: the graph, the setup (if any) and the
/// vertices involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleWitness {
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub setup: Option<SetupDescription>,
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEntry {
    pub oracle_id: OracleId,
    pub scope: Scope,
    pub status: OracleStatus,
    pub instances_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<OracleWitness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OracleReport {
    pub entries: Vec<OracleEntry>,
}

impl OracleReport {
    pub fn entry(&self, id: OracleId, scope: Scope) -> Option<&OracleEntry> {
        self.entries
            .iter()
            .find(|e| e.oracle_id == id && e.scope == scope)
    }

    /// A failure in a scope where the lemma's hypotheses hold. Relaxed
    /// failures are informational and do not count.
    pub fn has_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.status == OracleStatus::Fails && e.scope != Scope::Relaxed)
    }
}

/// Per-graph limits. Exhausting either marks the unfinished oracles skipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_setups: Option<usize>,
    pub timeout: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_setups: None,
            timeout: Some(Duration::from_secs(10)),
        }
    }
}

impl OracleBudget {
    pub fn unlimited() -> Self {
        OracleBudget {
            max_setups: None,
            timeout: None,
        }
    }
}

/// Runs every oracle in the table.
pub fn run_lemma_oracles(g: &Graph, budget: &OracleBudget) -> OracleReport {
    run_oracles(g, budget, &OracleId::ALL)
}

/// Runs the listed oracles; entries come out in table order.
pub fn run_oracles(g: &Graph, budget: &OracleBudget, ids: &[OracleId]) -> OracleReport {
    let mut run = Run::new(g, budget);
    let selected = |id: OracleId| ids.contains(&id);
    let strict_on = run.hyp_passes;
    if strict_on && (selected(L1) || selected(L2) || selected(L4)) {
        run.graph_level(&selected);
    }
    if OracleId::ALL
        .iter()
        .any(|&id| selected(id) && id.per_setup())
        && (strict_on || run.relaxed_on)
    {
        run.setup_level(&selected);
    }
    if selected(Hop) {
        run.hopping();
    }
    let mut entries = Vec::new();
    for id in OracleId::ALL.into_iter().filter(|&id| selected(id)) {
        for &scope in id.scopes() {
            entries.push(run.entry(id, scope));
        }
    }
    OracleReport { entries }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    witness: Option<OracleWitness>,
    exhausted: bool,
}

/// Instance count and first violation of one check on one configuration.
#[derive(Default)]
struct Outcome {
    instances: u64,
    violation: Option<(Vec<usize>, String)>,
}

impl Outcome {
    fn check<F>(&mut self, ok: bool, describe: F)
    where
        F: FnOnce() -> (Vec<usize>, String),
    {
        self.instances += 1;
        if !ok && self.violation.is_none() {
            self.violation = Some(describe());
        }
    }
}

struct Run<'a> {
    g: &'a Graph,
    g6: String,
    hyp_passes: bool,
    relaxed_on: bool,
    budget: OracleBudget,
    deadline: Option<Instant>,
    census: Option<CycleCensus>,
    tallies: BTreeMap<(OracleId, Scope), Tally>,
}

impl<'a> Run<'a> {
    fn new(g: &'a Graph, budget: &OracleBudget) -> Self {
        let hyp = check_hypothesis(g);
        Run {
            g,
            g6: g.to_string(),
            hyp_passes: hyp.passes,
            relaxed_on: in_relaxed_domain(&hyp),
            budget: *budget,
            deadline: budget.timeout.map(|t| Instant::now() + t),
            census: None,
            tallies: BTreeMap::new(),
        }
    }

    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn census(&mut self) -> &CycleCensus {
        let g = self.g;
        self.census.get_or_insert_with(|| CycleCensus::new(g))
    }

    fn record(&mut self, id: OracleId, scope: Scope, setup: Option<&Setup>, o: Outcome) {
        let t = self.tallies.entry((id, scope)).or_default();
        t.instances += o.instances;
        if let (None, Some((vertices, detail))) = (&t.witness, o.violation) {
            t.witness = Some(OracleWitness {
                graph: self.g6.clone(),
                setup: setup.map(Setup::describe),
                vertices,
                detail,
            });
        }
    }

    fn exhaust(&mut self, id: OracleId, scope: Scope) {
        self.tallies.entry((id, scope)).or_default().exhausted = true;
    }

    fn entry(&self, id: OracleId, scope: Scope) -> OracleEntry {
        let empty = Tally::default();
        let t = self.tallies.get(&(id, scope)).unwrap_or(&empty);
        let inactive = match scope {
            Scope::Strict if !self.hyp_passes => Some("hypothesis-not-met"),
            Scope::Relaxed if !self.relaxed_on => Some("outside-relaxed-domain"),
            _ => None,
        };
        let (status, reason) = if t.witness.is_some() {
            (OracleStatus::Fails, None)
        } else if let Some(r) = inactive {
            (OracleStatus::Skipped, Some(r))
        } else if t.exhausted {
            (OracleStatus::Skipped, Some("budget-exhausted"))
        } else if t.instances == 0 {
            (OracleStatus::Vacuous, None)
        } else {
            (OracleStatus::Holds, None)
        };
        OracleEntry {
            oracle_id: id,
            scope,
            status,
            instances_checked: t.instances,
            reason: reason.map(str::to_string),
            witness: t.witness.clone(),
        }
    }

    /// The lemmas about longest cycles as a whole, under the full hypothesis.
    fn graph_level(&mut self, selected: &dyn Fn(OracleId) -> bool) {
        let g = self.g;
        let n = g.n();
        let longest = enumerate_longest_cycles(g);
        let hamiltonian = longest.first().is_some_and(|c| c.len() == n);
        if selected(L1) {
            let mut o = Outcome::default();
            for c in &longest {
                let off = g.vertices() - c.vertex_set();
                o.check(is_dominating_cycle(g, c), || {
                    let (a, b) = edge_within(g, off).expect("an off-cycle edge");
                    (
                        vec![a, b],
                        format!("longest cycle {:?} is not dominating", c.vertices()),
                    )
                });
            }
            self.record(L1, Scope::Strict, None, o);
        }
        if hamiltonian {
            return;
        }
        let mus: Vec<usize> = longest.iter().filter_map(|c| mu_cycle(g, c)).collect();
        if selected(L2) {
            let mut o = Outcome::default();
            o.check(mus.iter().any(|&mu| 3 * mu >= n), || {
                (Vec::new(), "every longest cycle has 3 mu(C) < n".into())
            });
            self.record(L2, Scope::Strict, None, o);
        }
        if selected(L4) {
            let mu_g = mus.iter().copied().max().unwrap_or(0);
            let need = sigma3(g).value as i64 - n as i64 + 4;
            let found = longest.iter().any(|c| {
                (g.vertices() - c.vertex_set()).iter().any(|u| {
                    g.degree(u) == mu_g
                        && neighborhood_decomposition(g, c, u).count_of_length(2) as i64 >= need
                })
            });
            let mut o = Outcome::default();
            o.check(found, || {
                (
                    Vec::new(),
                    format!("no longest cycle avoids a vertex of degree {mu_g} with s >= {need}"),
                )
            });
            self.record(L4, Scope::Strict, None, o);
        }
    }

    fn setup_level(&mut self, selected: &dyn Fn(OracleId) -> bool) {
        let g = self.g;
        let ids: Vec<OracleId> = OracleId::ALL
            .into_iter()
            .filter(|&id| selected(id) && id.per_setup())
            .collect();
        let mut scopes = Vec::new();
        if self.hyp_passes {
            scopes.push(Scope::Strict);
        }
        if self.relaxed_on {
            scopes.push(Scope::Relaxed);
        }
        let Ok(triples) = pivot_triples(g) else {
            return;
        };
        if triples.is_empty() && self.hyp_passes && selected(L3) {
            let mut o = Outcome::default();
            o.check(false, || {
                (Vec::new(), "no pivot triple on any longest cycle".into())
            });
            self.record(L3, Scope::Strict, None, o);
        }
        let nc2 = nc2(g).value();
        let wants_gate = selected(Cl2) || selected(Cl3);
        for (k, (c, u, v)) in triples.iter().enumerate() {
            if self.out_of_time() || self.budget.max_setups.is_some_and(|m| k >= m) {
                for &id in &ids {
                    for &scope in &scopes {
                        if id.scopes().contains(&scope) {
                            self.exhaust(id, scope);
                        }
                    }
                }
                return;
            }
            let s = match Setup::new(g, c, *u, *v) {
                Ok(s) => s,
                Err(SetupError::BOffCycle(x)) => {
                    if selected(L3) {
                        for &scope in &scopes {
                            let mut o = Outcome::default();
                            o.check(false, || (vec![x], format!("B leaves the cycle at {x}")));
                            self.record(L3, scope, None, o);
                        }
                    }
                    continue;
                }
                Err(e) => unreachable!("pivot triple rejected: {e}"),
            };
            let hopping = if wants_gate {
                let census = self.census();
                Some(hopping_gate(g, s.cycle(), s.u(), census))
            } else {
                None
            };
            let ctx = Ctx::new(&s, nc2, hopping);
            for &id in &ids {
                for &scope in &scopes {
                    if !id.scopes().contains(&scope) {
                        continue;
                    }
                    let strict = scope == Scope::Strict;
                    if strict && id.strict_needs_s3() && !ctx.s3 {
                        continue;
                    }
                    let o = ctx.run(id, strict);
                    self.record(id, scope, Some(&s), o);
                }
            }
        }
    }

    /// Every `(C, u)` meeting the hopping hypotheses, found from the census:
    /// no cycle one longer, `omega(G - V(C))` minimal among cycles of its
    /// length, `u` isolated in `G - V(C)`.
    fn hopping(&mut self) {
        let g = self.g;
        let census = self.census().clone();
        let mut o = Outcome::default();
        'lengths: for len in census.lengths() {
            if census.has_cycle_of_length(len + 1) {
                continue;
            }
            let min = census.min_components(len).expect("length is present");
            for c in enumerate_cycles_of_length(g, len) {
                if self.out_of_time() {
                    self.exhaust(Hop, Scope::Standalone);
                    break 'lengths;
                }
                if g.components_after_removal(c.vertex_set()) != min {
                    continue;
                }
                for u in (g.vertices() - c.vertex_set()).iter() {
                    if !g.neighbors(u).is_subset(c.vertex_set()) {
                        continue;
                    }
                    debug_assert_eq!(hopping_gate(g, &c, u, &census), HoppingGate::Met);
                    let h = hopping_fixpoint(g, &c, u).expect("u is isolated off the cycle");
                    let verdicts = evaluate_hopping(g, &c, &h);
                    o.check(verdicts.all(), || {
                        let failed: Vec<&str> = [
                            ("a", verdicts.a),
                            ("b", verdicts.b),
                            ("c", verdicts.c),
                            ("d", verdicts.d),
                        ]
                        .into_iter()
                        .filter(|p| !p.1)
                        .map(|p| p.0)
                        .collect();
                        let mut vs = vec![u];
                        vs.extend(c.vertices());
                        (
                            vs,
                            format!(
                                "u = {u}, cycle {:?}: X = {:?}, Y = {:?}, failed ({})",
                                c.vertices(),
                                h.x.to_vec(),
                                h.y.to_vec(),
                                failed.join(", ")
                            ),
                        )
                    });
                }
            }
        }
        self.record(Hop, Scope::Standalone, None, o);
    }
}

fn edge_within(g: &Graph, set: VertexSet) -> Option<(usize, usize)> {
    set.iter()
        .find_map(|x| (g.neighbors(x) & set).first().map(|y| (x, y)))
}

/// One setup with the quantities most checks share.
struct Ctx<'a> {
    s: &'a Setup,
    g: &'a Graph,
    c: &'a OrientedCycle,
    d: IntervalDecomposition,
    s3: bool,
    nc2: Option<usize>,
    hopping: Option<HoppingGate>,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a Setup, nc2: Option<usize>, hopping: Option<HoppingGate>) -> Self {
        let d = s.intervals();
        Ctx {
            s,
            g: s.graph(),
            c: s.cycle(),
            s3: d.good_count() >= 4,
            d,
            nc2,
            hopping,
        }
    }

    fn at(&self, x: usize, k: isize) -> usize {
        self.c.step(x, k).expect("vertex on the cycle")
    }

    /// `b_k` for a 1-based `k`.
    fn b(&self, k: usize) -> usize {
        self.s.b()[k - 1]
    }

    fn pos(&self, x: usize) -> usize {
        self.c.position(x).expect("vertex on the cycle")
    }

    /// Cycle vertices strictly between `a` and `c`, walking forward from `v`.
    fn strictly_between(&self, a: usize, c: usize) -> Vec<usize> {
        let (pa, pc) = (self.pos(a), self.pos(c));
        if pa + 1 >= pc {
            return Vec::new();
        }
        self.c.vertices()[pa + 1..pc].to_vec()
    }

    fn run(&self, id: OracleId, strict: bool) -> Outcome {
        let mut o = Outcome::default();
        match id {
            L3 => self.l3(&mut o),
            L5c => self.l5c(&mut o),
            Rmk3 => self.rmk3(&mut o),
            L7 => self.l7(&mut o),
            Small => self.small(&mut o),
            Alpha => self.alpha(&mut o),
            Cl1 => self.cl1(&mut o),
            Cl2 => self.cl2(&mut o),
            Cl3 => self.cl3(&mut o),
            L9 => self.l9(&mut o),
            L10 => self.l10(&mut o),
            L12 => self.l12(&mut o),
            R1 => self.r1(&mut o),
            Inva => self.inva(&mut o, strict),
            L1 | L2 | L4 | Hop => unreachable!("not a per-setup oracle"),
        }
        o
    }

    /// `B ∩ B^+ = B ∩ B^- = ∅`.
    fn l3(&self, o: &mut Outcome) {
        let s = self.s;
        let meet = s.b_set() & (s.b_plus() | s.b_minus());
        o.check(meet.is_empty(), || {
            (meet.to_vec(), "B meets B^+ or B^-".into())
        });
    }

    /// `B^+ ∪ V(G-C)` and `B^- ∪ V(G-C)` are independent.
    fn l5c(&self, o: &mut Outcome) {
        let s = self.s;
        for (name, shifted) in [("B^+", s.b_plus()), ("B^-", s.b_minus())] {
            let set = shifted | s.off_cycle();
            o.check(self.g.is_independent(set), || {
                let (a, b) = edge_within(self.g, set).expect("an edge inside the set");
                (vec![a, b], format!("edge inside {name} ∪ V(G-C)"))
            });
        }
    }

    /// A 2- or 3-interval is inner-disconnected from every other 2-interval.
    fn rmk3(&self, o: &mut Outcome) {
        let ivs = &self.d.intervals;
        for (i, p) in ivs.iter().enumerate() {
            if p.length != 2 && p.length != 3 {
                continue;
            }
            for (j, q) in ivs.iter().enumerate() {
                if i == j || q.length != 2 {
                    continue;
                }
                o.check(!inner_connected(self.g, p, q), || {
                    (
                        vec![p.start, p.end, q.start, q.end],
                        format!(
                            "{}-interval {}..{} inner-connects to 2-interval {}..{}",
                            p.length, p.start, p.end, q.start, q.end
                        ),
                    )
                });
            }
        }
    }

    /// Pairwise inner-disconnected intervals include two of length > 3.
    fn l7(&self, o: &mut Outcome) {
        let ivs = &self.d.intervals;
        let disconnected = ivs
            .iter()
            .enumerate()
            .all(|(i, p)| ivs[i + 1..].iter().all(|q| !inner_connected(self.g, p, q)));
        if !disconnected {
            return;
        }
        let long = ivs.iter().filter(|i| i.length > 3).count();
        o.check(long >= 2, || {
            (
                Vec::new(),
                format!("intervals are inner-disconnected but only {long} has length > 3"),
            )
        });
    }

    /// No small pairs when `|B| = NC2`.
    fn small(&self, o: &mut Outcome) {
        if self.nc2 != Some(self.s.m()) {
            return;
        }
        let pairs = find_small_pairs(self.s);
        o.check(pairs.is_empty(), || {
            let p = &pairs[0];
            (
                vec![p.x, p.y],
                format!("small pair with |N(x,y)| = {}", p.union_size),
            )
        });
    }

    /// No bad paths.
    fn alpha(&self, o: &mut Outcome) {
        let found = find_bad_paths(self.s);
        o.check(found.is_empty(), || {
            let w = &found[0];
            (
                w.path.clone(),
                format!(
                    "bad path of form {:?} with i = {}, j = {}",
                    w.form, w.i, w.j
                ),
            )
        });
    }

    /// For `x` on `v^{+2} ->C v^{-2}` with `x^- x^+ ∈ E`: `x^{+2} ∈ B` forces
    /// `N(x) ∩ (B^- - {x^-, x, x^+}) = ∅`, and `x^{-2} ∈ B` the same for `B^+`.
    fn cl1(&self, o: &mut Outcome) {
        if self.c.len() < 4 {
            return;
        }
        let (s, v) = (self.s, self.s.v());
        let core = self.c.forward_segment(self.at(v, 2), self.at(v, -2));
        for x in core.iter() {
            let (xm, xp) = (self.at(x, -1), self.at(x, 1));
            if !self.g.has_edge(xm, xp) {
                continue;
            }
            let near: VertexSet = [xm, x, xp].iter().collect();
            for (ahead, shifted, name) in [(2, s.b_minus(), "B^-"), (-2, s.b_plus(), "B^+")] {
                if !s.b_set().contains(self.at(x, ahead)) {
                    continue;
                }
                let hit = self.g.neighbors(x) & (shifted - near);
                o.check(hit.is_empty(), || {
                    let mut vs = vec![x];
                    vs.extend(hit.iter());
                    (vs, format!("{x} is adjacent to {name} outside x^-, x, x^+"))
                });
            }
        }
    }

    /// For an edge `xy` with `x^+ = b_i`, `y^- = b_j`, `j < i`: `x^-` and `y^+`
    /// miss the inner vertices of 2-intervals on `x^{+2} ->C y^{-2}`.
    fn cl2(&self, o: &mut Outcome) {
        if self.hopping != Some(HoppingGate::Met) {
            return;
        }
        let s = self.s;
        let inner2 = self.d.two_interval_inner();
        for &x in self.c.vertices() {
            let Some(i) = s.index_of(self.at(x, 1)) else {
                continue;
            };
            for y in (self.g.neighbors(x) & self.c.vertex_set()).iter() {
                let Some(j) = s.index_of(self.at(y, -1)) else {
                    continue;
                };
                if j >= i {
                    continue;
                }
                let a = inner2 & self.c.forward_segment(self.at(x, 2), self.at(y, -2));
                for end in [self.at(x, -1), self.at(y, 1)] {
                    let hit = self.g.neighbors(end) & a;
                    o.check(hit.is_empty(), || {
                        let mut vs = vec![x, y, end];
                        vs.extend(hit.iter());
                        (
                            vs,
                            format!("{end} is adjacent to a 2-interval inner vertex"),
                        )
                    });
                }
            }
        }
    }

    /// For `x, x^+` on `v^{+2} ->C v^{-2}`, not both of them have a neighbor in
    /// `(B^+ ∩ B^-) - {x, x^+}`.
    fn cl3(&self, o: &mut Outcome) {
        if self.hopping != Some(HoppingGate::Met) || self.c.len() < 4 {
            return;
        }
        let (s, v) = (self.s, self.s.v());
        let core = self.c.forward_segment(self.at(v, 2), self.at(v, -2));
        let both = s.b_plus() & s.b_minus();
        for x in core.iter() {
            let xp = self.at(x, 1);
            if !core.contains(xp) {
                continue;
            }
            let t = both.without(x).without(xp);
            let (ha, hb) = (self.g.neighbors(x) & t, self.g.neighbors(xp) & t);
            o.check(ha.is_empty() || hb.is_empty(), || {
                let vs = vec![x, xp, ha.first().unwrap_or(x), hb.first().unwrap_or(xp)];
                (vs, format!("{x} and {xp} both reach B^+ ∩ B^-"))
            });
        }
    }

    /// `(i, j, a, c)` with `i < j`, `a = b_i^+ ≠ c = b_j^-` and `ac ∈ E`.
    fn chords(&self) -> Vec<(usize, usize, usize, usize)> {
        let m = self.s.m();
        let mut out = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                let (a, c) = (self.at(self.b(i), 1), self.at(self.b(j), -1));
                if a != c && self.g.has_edge(a, c) {
                    out.push((i, j, a, c));
                }
            }
        }
        out
    }

    fn l9(&self, o: &mut Outcome) {
        let (m, v) = (self.s.m(), self.s.v());
        let (vp, vm, vp2, vm2) = (self.at(v, 1), self.at(v, -1), self.at(v, 2), self.at(v, -2));
        for (i, j, a, c) in self.chords() {
            let (bi, bj) = (self.b(i), self.b(j));
            // (1): b_k^- and b_k^+ for i < k < j miss b_i = a^- and b_j = c^+.
            for k in i + 1..j {
                for x in [self.at(self.b(k), -1), self.at(self.b(k), 1)] {
                    let ok = !self.g.has_edge(x, bi) && !self.g.has_edge(x, bj);
                    o.check(ok, || {
                        (vec![x, a, c], format!("{x} is adjacent to b_{i} or b_{j}"))
                    });
                }
            }
            // (2): neighbors of v^{+2} (resp. v^{-2}) strictly inside a ->C c.
            for x in self.strictly_between(a, c) {
                let (xm, xp) = (self.at(x, -1), self.at(x, 1));
                if i >= 2 && self.g.has_edge(x, vp2) {
                    let ok = !self.g.has_edge(xp, vp) && !self.g.has_edge(xm, vp);
                    o.check(ok, || {
                        (vec![x, a, c], format!("{x} ~ v^+2 but x^+ or x^- ~ v^+"))
                    });
                }
                if j < m && self.g.has_edge(x, vm2) {
                    let ok = !self.g.has_edge(xp, vm) && !self.g.has_edge(xm, vm);
                    o.check(ok, || {
                        (vec![x, a, c], format!("{x} ~ v^-2 but x^+ or x^- ~ v^-"))
                    });
                }
            }
        }
    }

    fn l10(&self, o: &mut Outcome) {
        let (s, v) = (self.s, self.s.v());
        let common = s.n_u() & s.n_v();
        let (vp, vm) = (self.at(v, 1), self.at(v, -1));
        for (_, _, a, c) in self.chords() {
            for x in self.strictly_between(a, c) {
                if !common.contains(x) {
                    continue;
                }
                let (xm, xp) = (self.at(x, -1), self.at(x, 1));
                let ok = [xm, xp]
                    .iter()
                    .all(|&y| !self.g.has_edge(y, vp) && !self.g.has_edge(y, vm));
                o.check(ok, || {
                    (
                        vec![x, a, c],
                        format!("a neighbor of {x} on C is adjacent to v^+ or v^-"),
                    )
                });
            }
        }
    }

    /// Chords `b_p^- b_q^+` with `p < q`.
    fn l12(&self, o: &mut Outcome) {
        let (s, m, v) = (self.s, self.s.m(), self.s.v());
        let (only_u, only_v) = (s.n_u() - s.n_v(), s.n_v() - s.n_u());
        let (vp2, vm2) = (self.at(v, 2), self.at(v, -2));
        for p in 1..=m {
            for q in p + 1..=m {
                let (bp, bq) = (self.b(p), self.b(q));
                let (a, c) = (self.at(bp, -1), self.at(bq, 1));
                if a == c || !self.g.has_edge(a, c) {
                    continue;
                }
                let same_side = (only_u.contains(bp) && only_u.contains(bq))
                    || (only_v.contains(bp) && only_v.contains(bq));
                o.check(same_side, || {
                    (
                        vec![bp, bq, a, c],
                        format!("b_{p} and b_{q} are not on the same side"),
                    )
                });
                if 1 < p && q < m {
                    let ok = [bp, bq]
                        .iter()
                        .all(|&b| !self.g.has_edge(b, vp2) && !self.g.has_edge(b, vm2));
                    o.check(ok, || {
                        (
                            vec![bp, bq],
                            format!("b_{p} or b_{q} is adjacent to v^+2 or v^-2"),
                        )
                    });
                }
            }
        }
    }

    /// Inner-connected 3-intervals carry exactly one of `x_1 x_2^+`, `x_1^+ x_2`.
    fn r1(&self, o: &mut Outcome) {
        let threes: Vec<_> = self.d.intervals.iter().filter(|i| i.length == 3).collect();
        for (k, p) in threes.iter().enumerate() {
            for q in &threes[k + 1..] {
                if !inner_connected(self.g, p, q) {
                    continue;
                }
                let (x1, x1p, x2, x2p) = (p.inner[0], p.inner[1], q.inner[0], q.inner[1]);
                let ok = self.g.has_edge(x1, x2p) != self.g.has_edge(x1p, x2);
                o.check(ok, || {
                    (
                        vec![x1, x1p, x2, x2p],
                        "not exactly one of x1 x2^+, x1^+ x2".into(),
                    )
                });
            }
        }
    }

    /// With every interval of length 2 or 3, each other pivot `v_0` yields a
    /// setup with the same `B`, meeting (S3) again in the strict scope.
    fn inva(&self, o: &mut Outcome, strict: bool) {
        if self
            .d
            .intervals
            .iter()
            .any(|i| i.length != 2 && i.length != 3)
        {
            return;
        }
        let s = self.s;
        for &v0 in self.c.vertices() {
            if v0 == s.v() {
                continue;
            }
            let ends = [self.at(v0, 1), self.at(v0, -1)];
            let pivots = ends.iter().all(|&x| s.n_u().contains(x))
                || ends.iter().all(|&x| s.n_v().contains(x));
            if !pivots {
                continue;
            }
            let result = relocate_v(s, v0);
            let ok = match &result {
                Ok(t) => !strict || t.s3_satisfied(),
                Err(_) => false,
            };
            o.check(ok, || {
                let detail = match result {
                    Ok(_) => format!("relocating v to {v0} loses (S3)"),
                    Err(e) => format!("relocating v to {v0}: {e}"),
                };
                (vec![v0], detail)
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn status(r: &OracleReport, id: OracleId, scope: Scope) -> OracleStatus {
        r.entry(id, scope).expect("entry present").status
    }

    #[test]
    fn c6_report() {
        let r = run_lemma_oracles(&cycle(6), &OracleBudget::unlimited());
        let l1 = r.entry(L1, Scope::Strict).unwrap();
        assert_eq!((l1.status, l1.instances_checked), (OracleStatus::Holds, 1));
        for id in [L2, L3, L4, L5c, Small, Alpha, Inva] {
            assert_eq!(
                status(&r, id, Scope::Strict),
                OracleStatus::Vacuous,
                "{id:?}"
            );
        }
        assert!(!r.has_failure());
    }

    #[test]
    fn k23_report() {
        let r = run_lemma_oracles(&complete_bipartite(2, 3), &OracleBudget::unlimited());
        for id in OracleId::ALL.into_iter().filter(|&id| id != Hop) {
            let e = r.entry(id, Scope::Strict).unwrap();
            assert_eq!(e.status, OracleStatus::Skipped);
            assert_eq!(e.reason.as_deref(), Some("hypothesis-not-met"));
        }
        let hop = r.entry(Hop, Scope::Standalone).unwrap();
        assert_eq!(hop.status, OracleStatus::Holds);
        assert!(hop.instances_checked > 0);
        // sigma_3 = 6 >= 5, so the relaxed checks run.
        assert_eq!(status(&r, L3, Scope::Relaxed), OracleStatus::Holds);
        assert_eq!(status(&r, L5c, Scope::Relaxed), OracleStatus::Holds);
    }

    #[test]
    fn ids_parse_and_serialize() {
        for id in OracleId::ALL {
            assert_eq!(OracleId::parse(id.as_str()), Some(id));
            assert_eq!(
                serde_json::to_string(&id).unwrap(),
                format!("\"{}\"", id.as_str())
            );
        }
        assert_eq!(OracleId::parse("l5c"), Some(L5c));
        assert_eq!(OracleId::parse("nope"), None);
    }

    #[test]
    fn setup_budget_marks_skipped() {
        let budget = OracleBudget {
            max_setups: Some(0),
            timeout: None,
        };
        let r = run_oracles(&complete_bipartite(2, 3), &budget, &[L3]);
        let e = r.entry(L3, Scope::Relaxed).unwrap();
        assert_eq!(e.status, OracleStatus::Skipped);
        assert_eq!(e.reason.as_deref(), Some("budget-exhausted"));
    }

    #[test]
    fn outside_relaxed_domain_is_skipped() {
        // Two triangles sharing vertex 0, plus a pendant at 1: not 1-tough and
        // sigma_3 < n.
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5)]).unwrap();
        let r = run_lemma_oracles(&g, &OracleBudget::unlimited());
        assert_eq!(status(&r, L3, Scope::Relaxed), OracleStatus::Skipped);
        assert!(!r.has_failure());
    }
}
