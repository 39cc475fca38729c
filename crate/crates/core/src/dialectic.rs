//! Dialogue games between a proponent and an opponent, and a prover that
//! searches for winning dialogue trees.
//!
//! The proponent opens with the argument to be proved. The opponent answers
//! each proponent move with an `x`-attack on it; the proponent answers each
//! opponent move with a `y`-attack and may not reuse an argument it already
//! played on the same branch. A player that cannot move loses the branch.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::arguments::Argument;
use crate::attacks::Framework;
use crate::semantics::JustificationConfig;
use crate::syntax::{ObjectiveLiteral, Program};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    #[serde(rename = "P")]
    Proponent,
    #[serde(rename = "O")]
    Opponent,
}

impl Player {
    /// Who makes the move at the 1-based position `index`.
    pub fn at(index: usize) -> Player {
        if index % 2 == 1 {
            Player::Proponent
        } else {
            Player::Opponent
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Proponent => "P",
            Player::Opponent => "O",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub player: Player,
    pub argument: Argument,
    /// 1-based position in the dialogue.
    pub index: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.player, self.argument)
    }
}

/// A tree of moves. In a winning tree every proponent move has all opponent
/// attacks as children and every opponent move exactly one proponent reply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DialogueTree {
    pub root: Move,
    pub children: Vec<DialogueTree>,
}

impl DialogueTree {
    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(DialogueTree::node_count)
            .sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.node_count() - 1
    }

    /// Length of the longest branch, in moves.
    pub fn depth(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(DialogueTree::depth)
            .max()
            .unwrap_or(0)
    }

    /// Every root-to-leaf sequence of moves.
    pub fn branches(&self) -> Vec<Vec<&Move>> {
        if self.children.is_empty() {
            return vec![vec![&self.root]];
        }
        self.children
            .iter()
            .flat_map(DialogueTree::branches)
            .map(|mut branch| {
                branch.insert(0, &self.root);
                branch
            })
            .collect()
    }
}

/// The arguments that may legally extend `history`.
///
/// On an empty history the proponent may open with any argument.
pub fn legal_moves(
    framework: &Framework,
    cfg: JustificationConfig,
    history: &[Move],
) -> Vec<Argument> {
    let indices = legal_move_indices(framework, cfg, history);
    indices
        .into_iter()
        .map(|i| framework.arguments()[i].clone())
        .collect()
}

fn legal_move_indices(
    framework: &Framework,
    cfg: JustificationConfig,
    history: &[Move],
) -> Vec<usize> {
    let Some(last) = history.last() else {
        return (0..framework.len()).collect();
    };
    let Some(target) = framework.index_of(&last.argument) else {
        return Vec::new();
    };
    match Player::at(history.len() + 1) {
        Player::Opponent => framework.relation(cfg.attack).attackers()[target].clone(),
        Player::Proponent => {
            let used: Vec<usize> = history
                .iter()
                .filter(|m| m.player == Player::Proponent)
                .filter_map(|m| framework.index_of(&m.argument))
                .collect();
            framework.relation(cfg.defence).attackers()[target]
                .iter()
                .copied()
                .filter(|c| !used.contains(c))
                .collect()
        }
    }
}

/// Solves dialogue games under one configuration.
///
/// The proponent's winning arguments are found backwards, as an attractor:
/// an argument wins once every one of its `x`-attackers has been answered by
/// a `y`-attack from an argument already known to win. Winning arguments are
/// discovered in layers, and each attacker keeps its earliest answer. A tree
/// built from those answers therefore moves to strictly earlier layers on
/// every branch, so the proponent never repeats an argument and the tree is
/// finite.
///
/// Conversely, an argument outside the attractor has no finite winning tree
/// even if repetition were allowed, so it has none under the stricter rule.
pub struct Prover<'f> {
    framework: &'f Framework,
    opponent_moves: Vec<Vec<usize>>,
    /// Layer in which each argument was found to win.
    layer: Vec<Option<usize>>,
    /// Earliest winning `y`-attack on each argument, if any.
    answer: Vec<Option<usize>>,
}

impl<'f> Prover<'f> {
    pub fn new(framework: &'f Framework, cfg: JustificationConfig) -> Self {
        let n = framework.len();
        let opponent_moves = framework.relation(cfg.attack).attackers();
        let defence = framework.relation(cfg.defence);

        // targets[b]: arguments b x-attacks; replies_to[c]: arguments c y-attacks
        let mut targets = vec![Vec::new(); n];
        for (a, attackers) in opponent_moves.iter().enumerate() {
            for &b in attackers {
                targets[b].push(a);
            }
        }
        let mut replies_to = vec![Vec::new(); n];
        for &(c, b) in defence.pairs() {
            replies_to[c].push(b);
        }

        let mut unanswered: Vec<usize> = opponent_moves.iter().map(Vec::len).collect();
        let mut layer = vec![None; n];
        let mut answer = vec![None; n];
        let mut queue = VecDeque::new();
        for a in 0..n {
            if unanswered[a] == 0 {
                layer[a] = Some(0);
                queue.push_back(a);
            }
        }
        while let Some(c) = queue.pop_front() {
            let next = layer[c].unwrap() + 1;
            for &b in &replies_to[c] {
                if answer[b].is_some() {
                    continue;
                }
                answer[b] = Some(c);
                for &a in &targets[b] {
                    unanswered[a] -= 1;
                    if unanswered[a] == 0 {
                        layer[a] = Some(next);
                        queue.push_back(a);
                    }
                }
            }
        }

        Prover {
            framework,
            opponent_moves,
            layer,
            answer,
        }
    }

    /// Whether the argument at `index` has a winning tree.
    pub fn is_provable(&self, index: usize) -> bool {
        self.layer[index].is_some()
    }

    /// A winning tree for the argument at `index`.
    pub fn prove(&self, index: usize) -> Option<DialogueTree> {
        self.layer[index]?;
        Some(self.build(index, 1))
    }

    fn build(&self, argument: usize, index: usize) -> DialogueTree {
        let arguments = self.framework.arguments();
        let children = self.opponent_moves[argument]
            .iter()
            .map(|&b| {
                let c = self.answer[b].expect("every attack on a winner is answered");
                debug_assert!(self.layer[c] < self.layer[argument]);
                DialogueTree {
                    root: Move {
                        player: Player::Opponent,
                        argument: arguments[b].clone(),
                        index: index + 1,
                    },
                    children: vec![self.build(c, index + 2)],
                }
            })
            .collect();
        DialogueTree {
            root: Move {
                player: Player::Proponent,
                argument: arguments[argument].clone(),
                index,
            },
            children,
        }
    }
}

/// A winning tree rooted at `argument`, if one exists.
pub fn prove(
    framework: &Framework,
    argument: &Argument,
    cfg: JustificationConfig,
) -> Option<DialogueTree> {
    let index = framework.index_of(argument)?;
    Prover::new(framework, cfg).prove(index)
}

/// Whether some minimal argument concluding `literal` has a winning tree.
pub fn provable_conclusion(
    program: &Program,
    literal: &ObjectiveLiteral,
    cfg: JustificationConfig,
) -> bool {
    prove_conclusion(&Framework::new(program), literal, cfg).is_some()
}

/// The first (in argument order) winning tree for an argument concluding
/// `literal`.
pub fn prove_conclusion(
    framework: &Framework,
    literal: &ObjectiveLiteral,
    cfg: JustificationConfig,
) -> Option<DialogueTree> {
    let prover = Prover::new(framework, cfg);
    (0..framework.len())
        .filter(|&i| framework.arguments()[i].concludes(literal))
        .find_map(|i| prover.prove(i))
}

/// Checks that `tree` is a winning `x/y`-dialogue tree: moves alternate
/// starting with the proponent, each move attacks its parent with the right
/// notion, the proponent never repeats an argument on a branch, every
/// proponent move is answered by all opponent attacks, and every opponent
/// move has exactly one proponent reply.
pub fn is_winning_tree(
    framework: &Framework,
    cfg: JustificationConfig,
    tree: &DialogueTree,
) -> bool {
    let x = framework.relation(cfg.attack);
    let y = framework.relation(cfg.defence);
    let x_attackers = x.attackers();

    fn walk(
        framework: &Framework,
        x_attackers: &[Vec<usize>],
        y: &crate::attacks::AttackRelation,
        node: &DialogueTree,
        used: &mut Vec<usize>,
    ) -> bool {
        let Some(me) = framework.index_of(&node.root.argument) else {
            return false;
        };
        if node.root.player != Player::at(node.root.index) {
            return false;
        }
        match node.root.player {
            Player::Proponent => {
                if used.contains(&me) {
                    return false;
                }
                let mut children: Vec<usize> = Vec::new();
                for child in &node.children {
                    match framework.index_of(&child.root.argument) {
                        Some(b) if child.root.index == node.root.index + 1 => children.push(b),
                        _ => return false,
                    }
                }
                children.sort_unstable();
                let mut expected = x_attackers[me].clone();
                expected.sort_unstable();
                if children != expected {
                    return false;
                }
                used.push(me);
                let ok = node
                    .children
                    .iter()
                    .all(|c| walk(framework, x_attackers, y, c, used));
                used.pop();
                ok
            }
            Player::Opponent => {
                let [reply] = node.children.as_slice() else {
                    return false;
                };
                let Some(c) = framework.index_of(&reply.root.argument) else {
                    return false;
                };
                reply.root.index == node.root.index + 1
                    && y.contains(c, me)
                    && walk(framework, x_attackers, y, reply, used)
            }
        }
    }

    tree.root.index == 1 && walk(framework, &x_attackers, &y, tree, &mut Vec::new())
}

/// Graphviz rendering. Nodes are numbered in pre-order.
pub fn export_tree(tree: &DialogueTree) -> String {
    fn visit(
        tree: &DialogueTree,
        next: &mut usize,
        nodes: &mut String,
        edges: &mut String,
    ) -> usize {
        let id = *next;
        *next += 1;
        let label = tree
            .root
            .to_string()
            .replace('\\', "\\\\")
            .replace('"', "\\\"");
        let shape = match tree.root.player {
            Player::Proponent => "box",
            Player::Opponent => "ellipse",
        };
        let _ = writeln!(nodes, "  n{id} [label=\"{label}\", shape={shape}];");
        for child in &tree.children {
            let child_id = visit(child, next, nodes, edges);
            let _ = writeln!(edges, "  n{id} -> n{child_id};");
        }
        id
    }
    let mut nodes = String::new();
    let mut edges = String::new();
    visit(tree, &mut 0, &mut nodes, &mut edges);
    format!("digraph dialogue {{\n  rankdir=TB;\n{nodes}{edges}}}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attacks::AttackKind::*;
    use crate::syntax::parse_program;

    const P1: &str = "p :- not q.\nq :- not p.";
    const P2: &str = "p :- not q.\nq :- not p.\n-p.";

    fn framework(text: &str) -> Framework {
        Framework::new(&parse_program(text).unwrap())
    }

    fn arg(f: &Framework, rendered: &str) -> Argument {
        f.arguments()
            .iter()
            .find(|a| a.to_string() == rendered)
            .cloned()
            .unwrap_or_else(|| panic!("no argument {rendered}"))
    }

    fn mv(player: Player, argument: Argument, index: usize) -> Move {
        Move {
            player,
            argument,
            index,
        }
    }

    fn ua() -> JustificationConfig {
        JustificationConfig::new(Undercuts, Attacks)
    }

    #[test]
    fn legal_moves_in_p2() {
        let p2 = framework(P2);
        let q = arg(&p2, "[q :- not p]");
        let p = arg(&p2, "[p :- not q]");
        let history = vec![mv(Player::Proponent, q.clone(), 1)];
        assert_eq!(legal_moves(&p2, ua(), &history), vec![p.clone()]);
        let history = vec![mv(Player::Proponent, q, 1), mv(Player::Opponent, p, 2)];
        assert_eq!(legal_moves(&p2, ua(), &history), vec![arg(&p2, "[-p]")]);
        let unattacked = vec![mv(Player::Proponent, arg(&p2, "[-p]"), 1)];
        assert!(legal_moves(&p2, ua(), &unattacked).is_empty());
        assert_eq!(legal_moves(&p2, ua(), &[]).len(), 3);
    }

    #[test]
    fn proves_q_in_p2() {
        let p2 = framework(P2);
        let tree = prove(&p2, &arg(&p2, "[q :- not p]"), ua()).unwrap();
        assert_eq!(tree.root.to_string(), "P: [q :- not p]");
        assert_eq!(tree.children.len(), 1);
        assert_eq!(tree.children[0].root.to_string(), "O: [p :- not q]");
        assert_eq!(tree.children[0].children[0].root.to_string(), "P: [-p]");
        assert!(tree.children[0].children[0].children.is_empty());
        assert_eq!(tree.node_count(), 3);
        assert!(is_winning_tree(&p2, ua(), &tree));
    }

    #[test]
    fn p_is_not_provable_in_p2() {
        let p2 = framework(P2);
        assert!(prove(&p2, &arg(&p2, "[p :- not q]"), ua()).is_none());
    }

    #[test]
    fn unattacked_argument_is_a_single_node_tree() {
        let p1 = framework(P1);
        let cfg = JustificationConfig::new(StronglyUndercuts, Undercuts);
        let tree = prove(&p1, &arg(&p1, "[p :- not q]"), cfg).unwrap();
        assert_eq!(tree.node_count(), 1);
        assert!(is_winning_tree(&p1, cfg, &tree));
    }

    #[test]
    fn proponent_may_not_repeat() {
        let p1 = framework(P1);
        let cfg = JustificationConfig::new(Undercuts, Undercuts);
        assert!(prove(&p1, &arg(&p1, "[p :- not q]"), cfg).is_none());
    }

    #[test]
    fn provable_conclusions() {
        let p2 = parse_program(P2).unwrap();
        assert!(provable_conclusion(&p2, &"-p".parse().unwrap(), ua()));
        assert!(!provable_conclusion(&p2, &"p".parse().unwrap(), ua()));
        assert!(!provable_conclusion(&p2, &"zzz".parse().unwrap(), ua()));
    }

    #[test]
    fn rejects_malformed_trees() {
        let p2 = framework(P2);
        let mut tree = prove(&p2, &arg(&p2, "[q :- not p]"), ua()).unwrap();
        tree.children[0].children[0].root.argument = arg(&p2, "[q :- not p]");
        assert!(!is_winning_tree(&p2, ua(), &tree));
        let mut tree = prove(&p2, &arg(&p2, "[q :- not p]"), ua()).unwrap();
        tree.children.clear();
        assert!(!is_winning_tree(&p2, ua(), &tree));
    }

    #[test]
    fn dot_export() {
        let p1 = framework(P1);
        let cfg = JustificationConfig::new(StronglyUndercuts, Undercuts);
        let single = prove(&p1, &arg(&p1, "[p :- not q]"), cfg).unwrap();
        let dot = export_tree(&single);
        assert_eq!(dot.matches("label=").count(), 1);
        assert_eq!(dot.matches("->").count(), 0);

        let p2 = framework(P2);
        let tree = prove(&p2, &arg(&p2, "[q :- not p]"), ua()).unwrap();
        let dot = export_tree(&tree);
        assert_eq!(dot.matches("label=").count(), tree.node_count());
        assert_eq!(dot.matches("->").count(), tree.edge_count());
        assert!(dot.contains("n0 [label=\"P: [q :- not p]\""));
        assert!(dot.contains("n1 [label=\"O: [p :- not q]\""));
        assert!(dot.contains("n2 [label=\"P: [-p]\""));
        assert_eq!(export_tree(&tree), dot);
    }
}
