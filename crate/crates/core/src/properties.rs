//! Executable statements of the relationships between the semantics.
//!
//! Each check takes a program and a seed (for the checks that sample
//! interpretations or argument sets) and returns a description of the first
//! violation it finds.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arguments::{is_argument, minimal_arguments, Argument};
use crate::attacks::{attacks_by, prose, rebuts, AttackKind, AttackRelation, Framework};
use crate::dialectic::{is_winning_tree, Prover};
use crate::fixtures;
use crate::semantics::{Acceptability, ArgumentSet, JustificationConfig};
use crate::syntax::{parse_program, Program};
use crate::wfsx::{gamma, gamma_s, lfp_compose, wfm_p, LiteralSet, Operator};

use AttackKind::{
    Attacks as A, Defeats as D, Rebuts as R, StronglyAttacks as SA, StronglyUndercuts as SU,
    Undercuts as U,
};

pub type CheckResult = Result<(), String>;

/// A named property over a single program.
pub struct Property {
    pub name: &'static str,
    pub check: fn(&Program, u64) -> CheckResult,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn cfg(x: AttackKind, y: AttackKind) -> JustificationConfig {
    JustificationConfig::new(x, y)
}

fn render_set(framework: &Framework, set: &ArgumentSet) -> String {
    let items: Vec<String> = set
        .iter()
        .map(|&i| framework.arguments()[i].to_string())
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn render_literals(set: &LiteralSet) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// `J_{x/y}` for all 36 configurations.
pub fn justified_table(framework: &Framework) -> BTreeMap<JustificationConfig, ArgumentSet> {
    JustificationConfig::all()
        .map(|c| (c, framework.justified(c)))
        .collect()
}

/// Equivalence classes of configurations, one per node of the justification
/// hierarchy.
pub const HIERARCHY_NODES: [&[(AttackKind, AttackKind)]; 10] = [
    &[(SU, A), (SU, D)],
    &[(SU, U)],
    &[(SU, SA)],
    &[(SA, U), (SA, D), (SA, A)],
    &[(SU, SU)],
    &[(U, A), (U, D), (U, SA)],
    &[(SA, SU), (SA, SA)],
    &[(U, SU), (U, U)],
    &[(D, SU), (D, U), (D, A), (D, D), (D, SA)],
    &[(A, SU), (A, U), (A, A), (A, D), (A, SA)],
];

/// `(lower, upper)` node indices: `J_lower ⊆ J_upper`, and the inclusion is
/// strict for some program.
pub const HIERARCHY_EDGES: [(usize, usize); 13] = [
    (1, 0),
    (2, 0),
    (3, 1),
    (4, 1),
    (4, 2),
    (5, 2),
    (6, 3),
    (6, 4),
    (7, 4),
    (7, 5),
    (8, 6),
    (8, 7),
    (9, 8),
];

pub fn node_label(node: usize) -> String {
    HIERARCHY_NODES[node]
        .iter()
        .map(|&(x, y)| cfg(x, y).to_string())
        .collect::<Vec<_>>()
        .join(" = ")
}

fn node_set(table: &BTreeMap<JustificationConfig, ArgumentSet>, node: usize) -> &ArgumentSet {
    let (x, y) = HIERARCHY_NODES[node][0];
    &table[&cfg(x, y)]
}

// ---------------------------------------------------------------- attacks --

/// Hasse ordering of the attack relations, symmetry of rebuttal, strong
/// undercut asymmetry, and agreement of the relational and pointwise forms.
pub fn attack_relations(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let rel: BTreeMap<AttackKind, AttackRelation> = AttackKind::ALL
        .iter()
        .map(|&k| (k, f.relation(k)))
        .collect();
    for (lo, hi) in [(SU, U), (U, D), (D, A), (SU, SA), (SA, D), (R, A)] {
        ensure!(rel[&lo].is_subset(&rel[&hi]), "{lo} ⊄ {hi}");
    }
    let su = &rel[&SU];
    ensure!(
        su.pairs().iter().all(|&(a, b)| !su.contains(b, a)),
        "strong undercut is not asymmetric"
    );
    for (i, a) in f.arguments().iter().enumerate() {
        for (j, b) in f.arguments().iter().enumerate() {
            ensure!(rebuts(a, b) == rebuts(b, a), "rebut asymmetric on {a}, {b}");
            let pointwise = [
                (A, prose::attacks(a, b)),
                (D, prose::defeats(a, b)),
                (SA, prose::strongly_attacks(a, b)),
                (SU, prose::strongly_undercuts(a, b)),
            ];
            for (kind, expected) in pointwise {
                ensure!(
                    rel[&kind].contains(i, j) == expected && attacks_by(kind, a, b) == expected,
                    "{kind}({a}, {b}): relation and prose disagree"
                );
            }
        }
    }
    Ok(())
}

// -------------------------------------------------------------- semantics --

/// The Kleene chain from ∅ increases and stabilizes within |Args| steps, and
/// F is monotone on random pairs S ⊆ S'.
pub fn fixpoint_iteration(program: &Program, seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for c in JustificationConfig::all() {
        let op = Acceptability::for_config(&f, c);
        let stages = op.stages();
        ensure!(
            stages
                .windows(2)
                .all(|w| w[0].is_subset(&w[1]) && w[0] != w[1]),
            "{c}: chain not strictly increasing"
        );
        ensure!(
            stages.len() - 1 <= f.len(),
            "{c}: {} stages for {} arguments",
            stages.len() - 1,
            f.len()
        );
        let last = stages.last().unwrap();
        ensure!(&op.apply(last) == last, "{c}: last stage is not a fixpoint");

        let small: ArgumentSet = (0..f.len()).filter(|_| rng.gen_bool(0.3)).collect();
        let large: ArgumentSet = (0..f.len())
            .filter(|i| small.contains(i) || rng.gen_bool(0.5))
            .collect();
        ensure!(
            op.apply(&small).is_subset(&op.apply(&large)),
            "{c}: F not monotone on {} ⊆ {}",
            render_set(&f, &small),
            render_set(&f, &large)
        );
    }
    Ok(())
}

/// Weaker attack and stronger defence (as relations on this program) never
/// shrink the justified set.
pub fn monotonicity(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let rel: BTreeMap<AttackKind, AttackRelation> = AttackKind::ALL
        .iter()
        .map(|&k| (k, f.relation(k)))
        .collect();
    let table = justified_table(&f);
    for (&c, j) in &table {
        for (&c2, j2) in &table {
            let weaker_attack = rel[&c2.attack].is_subset(&rel[&c.attack]);
            let stronger_defence = rel[&c.defence].is_subset(&rel[&c2.defence]);
            if weaker_attack && stronger_defence {
                ensure!(j.is_subset(j2), "J_{c} ⊄ J_{c2}");
            }
        }
    }
    Ok(())
}

/// `J_{x/y} = J_{x/(y − u⁻¹)}` whenever `x ⊇ u`.
pub fn strong_defence(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let u_inverse = f.relation(U).inverse();
    for x in [U, D, A] {
        let attack = f.relation(x);
        for y in AttackKind::ALL {
            let defence = f.relation(y);
            let strong = defence.difference(&u_inverse);
            let j = Acceptability::new(&attack, &defence).least_fixpoint();
            let js = Acceptability::new(&attack, &strong).least_fixpoint();
            ensure!(
                j == js,
                "J_{x}/{y} ≠ J_{x}/s{y}: {} vs {}",
                render_set(&f, &j),
                render_set(&f, &js)
            );
        }
    }
    Ok(())
}

/// The equalities between named configurations: strong vs non-strong defence,
/// defeat as defence, and the two single-configuration equalities.
pub fn named_equalities(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let table = justified_table(&f);
    let mut groups: Vec<Vec<JustificationConfig>> = Vec::new();
    for x in [U, D, A] {
        groups.push(vec![cfg(x, U), cfg(x, SU)]);
        groups.push(vec![cfg(x, A), cfg(x, D), cfg(x, SA)]);
    }
    for x in [SA, D, A] {
        groups.push(vec![cfg(x, U), cfg(x, D), cfg(x, A)]);
    }
    groups.push(vec![cfg(SA, SU), cfg(SA, SA)]);
    groups.push(vec![cfg(SU, A), cfg(SU, D)]);
    for group in groups {
        let first = &table[&group[0]];
        for c in &group[1..] {
            ensure!(
                &table[c] == first,
                "J_{} = {} but J_{c} = {}",
                group[0],
                render_set(&f, first),
                render_set(&f, &table[c])
            );
        }
    }
    Ok(())
}

/// Node equalities and edge inclusions of the justification hierarchy, plus
/// the grounded (a/y) and defeat-based (d/y) corollaries.
pub fn hierarchy(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let table = justified_table(&f);
    for (n, node) in HIERARCHY_NODES.iter().enumerate() {
        let first = node_set(&table, n);
        for &(x, y) in &node[1..] {
            ensure!(
                &table[&cfg(x, y)] == first,
                "node {} split: J_{x}/{y} = {}",
                node_label(n),
                render_set(&f, &table[&cfg(x, y)])
            );
        }
    }
    for (lo, hi) in HIERARCHY_EDGES {
        ensure!(
            node_set(&table, lo).is_subset(node_set(&table, hi)),
            "J_{} ⊄ J_{}",
            node_label(lo),
            node_label(hi)
        );
    }
    let grounded = &table[&cfg(A, U)];
    let defeat = &table[&cfg(D, SU)];
    for x in AttackKind::HIERARCHY {
        for y in AttackKind::HIERARCHY {
            let j = &table[&cfg(x, y)];
            ensure!(grounded.is_subset(j), "J_a/u ⊄ J_{x}/{y}");
            if x != A {
                ensure!(defeat.is_subset(j), "J_d/su ⊄ J_{x}/{y}");
            }
        }
    }
    Ok(())
}

/// For each hierarchy edge, the fixtures on which it is strict.
pub fn edge_witnesses() -> Vec<((usize, usize), Vec<&'static str>)> {
    let tables: Vec<_> = fixtures::NAMED
        .iter()
        .map(|&(name, text)| {
            (
                name,
                justified_table(&Framework::new(&fixtures::program(text))),
            )
        })
        .collect();
    HIERARCHY_EDGES
        .iter()
        .map(|&(lo, hi)| {
            let strict = tables
                .iter()
                .filter(|(_, t)| node_set(t, lo) != node_set(t, hi))
                .map(|(name, _)| *name)
                .collect();
            ((lo, hi), strict)
        })
        .collect()
}

/// Every justified set recorded for the fixture named in the golden table.
pub fn golden(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    for entry in fixtures::GOLDEN {
        if &fixtures::program(entry.text()) != program {
            continue;
        }
        let expected: BTreeSet<&str> = entry.justified.iter().copied().collect();
        for y in entry.defences() {
            let got = f.justified(cfg(entry.attack, y));
            let got_rendered: BTreeSet<String> =
                got.iter().map(|&i| f.arguments()[i].to_string()).collect();
            ensure!(
                got_rendered
                    .iter()
                    .map(String::as_str)
                    .collect::<BTreeSet<_>>()
                    == expected,
                "{}: J_{}/{y} = {}, expected {:?}",
                entry.fixture,
                entry.attack,
                render_set(&f, &got),
                entry.justified
            );
        }
    }
    Ok(())
}

// ------------------------------------------------------------------ wfsx --

/// The paraconsistent well-founded model equals the `u/a` consequences.
pub fn wfsx_equivalence(program: &Program, _seed: u64) -> CheckResult {
    let model = wfm_p(program);
    let consequences = Framework::new(program).consequences(cfg(U, A));
    ensure!(
        model.wfm_p.t == consequences.t,
        "T: wfm {} vs args {}",
        render_literals(&model.wfm_p.t),
        render_literals(&consequences.t)
    );
    ensure!(
        model.wfm_p.f == consequences.f,
        "F: wfm {} vs args {}",
        render_literals(&model.wfm_p.f),
        render_literals(&consequences.f)
    );
    ensure!(
        model.contradictory == !model.wfm_p.t.is_disjoint(&model.wfm_p.f),
        "contradictory flag disagrees with overlap"
    );
    ensure!(
        model
            .stages
            .windows(2)
            .all(|w| w[0].is_subset(&w[1]) && w[0] != w[1]),
        "stages not strictly increasing"
    );
    Ok(())
}

/// `lfp(Γ_sΓ) = lfp(Γ_sΓ_s) ⊆ lfp(ΓΓ) ⊆ lfp(ΓΓ_s)` and the correspondence of
/// each with the conclusions of a justification semantics.
pub fn operator_chain(program: &Program, _seed: u64) -> CheckResult {
    use Operator::{Gamma as G, GammaS as GS};
    let f = Framework::new(program);
    let s_g = lfp_compose(program, GS, G);
    let s_s = lfp_compose(program, GS, GS);
    let g_g = lfp_compose(program, G, G);
    let g_s = lfp_compose(program, G, GS);
    ensure!(
        s_g == s_s,
        "lfp(ΓsΓ) {} ≠ lfp(ΓsΓs) {}",
        render_literals(&s_g),
        render_literals(&s_s)
    );
    ensure!(s_s.is_subset(&g_g), "lfp(ΓsΓs) ⊄ lfp(ΓΓ)");
    ensure!(g_g.is_subset(&g_s), "lfp(ΓΓ) ⊄ lfp(ΓΓs)");
    for (set, c) in [
        (&g_g, cfg(U, U)),
        (&s_g, cfg(A, U)),
        (&s_s, cfg(A, A)),
        (&g_s, cfg(U, A)),
    ] {
        let t = f.conclusions_of(&f.justified(c));
        ensure!(
            *set == t,
            "operator fixpoint {} ≠ conclusions of J_{c} {}",
            render_literals(set),
            render_literals(&t)
        );
    }
    Ok(())
}

fn random_subset(base: &LiteralSet, rng: &mut ChaCha8Rng, p: f64) -> LiteralSet {
    base.iter().filter(|_| rng.gen_bool(p)).cloned().collect()
}

/// Γ and Γ_s are antitone; their two-fold compositions are monotone.
pub fn operator_monotonicity(program: &Program, seed: u64) -> CheckResult {
    use Operator::{Gamma as G, GammaS as GS};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = program.herbrand_base();
    for _ in 0..4 {
        let small = random_subset(&base, &mut rng, 0.3);
        let extra = random_subset(&base, &mut rng, 0.4);
        let large: LiteralSet = &small | &extra;
        for op in [G, GS] {
            ensure!(
                op.apply(program, &large)
                    .is_subset(&op.apply(program, &small)),
                "{op} not antitone on {} ⊆ {}",
                render_literals(&small),
                render_literals(&large)
            );
        }
        for outer in [G, GS] {
            for inner in [G, GS] {
                let lo = outer.apply(program, &inner.apply(program, &small));
                let hi = outer.apply(program, &inner.apply(program, &large));
                ensure!(lo.is_subset(&hi), "{outer}{inner} not monotone");
            }
        }
    }
    Ok(())
}

/// Round trip through text, idempotent semi-normal form, stable Herbrand
/// base, and complement as an involution.
pub fn syntax_invariants(program: &Program, _seed: u64) -> CheckResult {
    let text = program.to_string();
    let reparsed = parse_program(&text).map_err(|e| format!("render did not parse: {e}"))?;
    ensure!(&reparsed == program, "parse(render(P)) ≠ P");
    let sn = program.semi_normal();
    ensure!(sn.semi_normal() == sn, "semi_normal not idempotent");
    ensure!(
        sn.herbrand_base() == program.herbrand_base(),
        "semi_normal changed the Herbrand base"
    );
    let base = program.herbrand_base();
    ensure!(
        base.iter()
            .all(|l| l.complement().complement() == *l && base.contains(&l.complement())),
        "Herbrand base not closed under complement"
    );
    Ok(())
}

/// Γ and Γ_s on a random two-valued interpretation coincide with the
/// argument-based characterizations.
///
/// With `I = T ∪ not (H − T)`, an assumption `not L` lies in `I` iff
/// `L ∉ T`, and a literal `¬L` lies in `I` iff `¬L ∈ T`.
pub fn gamma_arguments(program: &Program, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let args = minimal_arguments(program);
    let base = program.herbrand_base();
    for _ in 0..4 {
        let t = random_subset(&base, &mut rng, 0.5);
        let assumptions_hold = |a: &Argument| a.assumptions().is_disjoint(&t);
        let coherent = |a: &Argument| a.conclusions().iter().all(|l| !t.contains(&l.complement()));
        let g = gamma(program, &t);
        let gs = gamma_s(program, &t);
        for l in &base {
            let mut for_l = args.iter().filter(|a| a.concludes(l));
            let by_args = for_l.clone().any(assumptions_hold);
            let by_args_s = for_l.clone().any(|a| assumptions_hold(a) && coherent(a));
            let all_blocked = for_l.clone().all(|a| !assumptions_hold(a));
            let all_blocked_s = for_l.all(|a| !assumptions_hold(a) || !coherent(a));
            let t_str = render_literals(&t);
            ensure!(
                g.contains(l) == by_args,
                "Γ({t_str}) and arguments disagree on {l}"
            );
            ensure!(
                gs.contains(l) == by_args_s,
                "Γs({t_str}) and arguments disagree on {l}"
            );
            ensure!(
                !g.contains(l) == all_blocked,
                "Γ({t_str}) complement disagrees on {l}"
            );
            ensure!(
                !gs.contains(l) == all_blocked_s,
                "Γs({t_str}) complement disagrees on {l}"
            );
        }
    }
    Ok(())
}

// ------------------------------------------------------------- dialectic --

/// Provability by dialogue tree coincides with membership in `J_{x/y}` for
/// all 36 configurations; every returned tree is a legal winning tree of
/// bounded depth.
pub fn dialectic_soundness(program: &Program, _seed: u64) -> CheckResult {
    let f = Framework::new(program);
    let bound = 2 * f.len() + 1;
    for c in JustificationConfig::all() {
        let justified = f.justified(c);
        let prover = Prover::new(&f, c);
        for i in 0..f.len() {
            let tree = prover.prove(i);
            let arg = &f.arguments()[i];
            ensure!(
                tree.is_some() == justified.contains(&i),
                "{c}: {arg} provable={} justified={}",
                tree.is_some(),
                justified.contains(&i)
            );
            if let Some(tree) = tree {
                ensure!(is_winning_tree(&f, c, &tree), "{c}: illegal tree for {arg}");
                ensure!(
                    tree.depth() <= bound,
                    "{c}: tree for {arg} deeper than {bound}"
                );
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------- arguments --

/// Minimal arguments in canonical form: valid, minimal, one rule per head,
/// and every conclusion backed by a minimal subargument.
pub fn argument_shape(program: &Program, _seed: u64) -> CheckResult {
    for a in minimal_arguments(program) {
        ensure!(is_argument(program, a.rules()), "{a} is not an argument");
        ensure!(
            a.is_minimal_for(a.root()),
            "{a} is not minimal for its root"
        );
        let heads: BTreeSet<_> = a.rules().iter().map(|r| &r.head).collect();
        ensure!(
            heads.len() == a.len(),
            "{a} has two rules with the same head"
        );
        let subs = a.subarguments();
        for l in a.conclusions() {
            ensure!(
                subs.iter().any(|s| s.is_minimal_for(l)),
                "{a} has no minimal subargument for {l}"
            );
        }
    }
    Ok(())
}

/// All minimal arguments by exhaustive search over rule sequences of length
/// at most `|P|`, identified by rule set.
pub fn brute_force_minimal_arguments(program: &Program) -> BTreeSet<BTreeSet<crate::syntax::Rule>> {
    let rules = program.rules();
    let mut found = BTreeSet::new();
    let mut seq = Vec::new();
    fn extend(
        program: &Program,
        rules: &[crate::syntax::Rule],
        seq: &mut Vec<crate::syntax::Rule>,
        found: &mut BTreeSet<BTreeSet<crate::syntax::Rule>>,
    ) {
        if !seq.is_empty() && is_argument(program, seq) {
            let arg = Argument::new(seq.clone()).expect("checked");
            if arg.is_minimal() {
                found.insert(seq.iter().cloned().collect());
            }
        }
        if seq.len() == rules.len() {
            return;
        }
        for r in rules {
            seq.push(r.clone());
            extend(program, rules, seq, found);
            seq.pop();
        }
    }
    extend(program, rules, &mut seq, &mut found);
    found
}

/// The canonical generator agrees with the brute-force search (only run on
/// programs of at most five rules).
pub fn argument_oracle(program: &Program, _seed: u64) -> CheckResult {
    if program.len() > 5 {
        return Ok(());
    }
    let generated: BTreeSet<BTreeSet<crate::syntax::Rule>> = minimal_arguments(program)
        .iter()
        .map(|a| a.rules().iter().cloned().collect())
        .collect();
    let oracle = brute_force_minimal_arguments(program);
    ensure!(
        generated == oracle,
        "generator found {} arguments, brute force {}",
        generated.len(),
        oracle.len()
    );
    Ok(())
}

/// Properties per suite name.
pub fn suite_properties(suite: &str) -> Option<Vec<Property>> {
    let p = |name, check| Property { name, check };
    let hierarchy = || {
        vec![
            p("golden", golden as fn(&Program, u64) -> CheckResult),
            p("attack-relations", attack_relations),
            p("fixpoint-iteration", fixpoint_iteration),
            p("monotonicity", monotonicity),
            p("strong-defence", strong_defence),
            p("named-equalities", named_equalities),
            p("hierarchy", hierarchy),
        ]
    };
    let wfsx = || {
        vec![
            p(
                "wfsx-equivalence",
                wfsx_equivalence as fn(&Program, u64) -> CheckResult,
            ),
            p("operator-chain", operator_chain),
            p("operator-monotonicity", operator_monotonicity),
            p("syntax", syntax_invariants),
        ]
    };
    let dialectic = || {
        vec![p(
            "dialectic",
            dialectic_soundness as fn(&Program, u64) -> CheckResult,
        )]
    };
    let minimality = || {
        vec![
            p(
                "argument-shape",
                argument_shape as fn(&Program, u64) -> CheckResult,
            ),
            p("argument-oracle", argument_oracle),
        ]
    };
    let gamma_args = || {
        vec![p(
            "gamma-arguments",
            gamma_arguments as fn(&Program, u64) -> CheckResult,
        )]
    };
    Some(match suite {
        "hierarchy" => hierarchy(),
        "wfsx" => wfsx(),
        "dialectic" => dialectic(),
        "minimality" => minimality(),
        "gamma-args" => gamma_args(),
        "all" => [hierarchy(), wfsx(), dialectic(), minimality(), gamma_args()]
            .into_iter()
            .flatten()
            .collect(),
        _ => return None,
    })
}
