//! Reference solver: plain depth-first minimax over every play sequence.
//!
//! Shares nothing with the engine beyond the input types: no memo, no move
//! ordering, no cutoffs, and its own win tests over neighbour lists. It is
//! exponential in the number of vertices and meant for graphs of order ≤ 7.

use super::{GameValue, GameVariant, Player};
use crate::graph::MarkedGraph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Owner {
    Free,
    Dominator,
    Staller,
}

struct Board {
    nbrs: Vec<Vec<usize>>,
    marked: Vec<bool>,
    owner: Vec<Owner>,
}

impl Board {
    fn covered(&self, v: usize) -> bool {
        self.owner[v] == Owner::Dominator || self.nbrs[v].iter().any(|&u| self.owner[u] == Owner::Dominator)
    }

    fn dominator_won(&self) -> bool {
        (0..self.owner.len()).all(|v| self.marked[v] || self.covered(v))
    }

    fn staller_won(&self) -> bool {
        (0..self.owner.len()).any(|v| {
            !self.marked[v]
                && self.owner[v] == Owner::Staller
                && self.nbrs[v].iter().all(|&u| self.owner[u] == Owner::Staller)
        })
    }
}

fn minimax(board: &mut Board, turn: Player, counted: Player) -> GameValue {
    let winner = if board.dominator_won() {
        Some(Player::Dominator)
    } else if board.staller_won() || board.owner.iter().all(|&o| o != Owner::Free) {
        Some(Player::Staller)
    } else {
        None
    };
    if let Some(w) = winner {
        return if w == counted {
            GameValue::Finite(0)
        } else {
            GameValue::Infinite
        };
    }
    let mut results = Vec::new();
    for v in 0..board.owner.len() {
        if board.owner[v] != Owner::Free {
            continue;
        }
        board.owner[v] = match turn {
            Player::Dominator => Owner::Dominator,
            Player::Staller => Owner::Staller,
        };
        results.push(minimax(board, turn.other(), counted));
        board.owner[v] = Owner::Free;
    }
    if turn == counted {
        results.into_iter().map(GameValue::succ).min().unwrap()
    } else {
        results.into_iter().max().unwrap()
    }
}

/// Same contract as [`super::solve`], computed by unpruned recursion.
pub fn oracle_solve(g: &MarkedGraph, variant: GameVariant) -> GameValue {
    let n = g.graph.order();
    let mut board = Board {
        nbrs: (0..n).map(|v| g.graph.neighbours(v).to_vec()).collect(),
        marked: (0..n).map(|v| g.predominated.contains(v)).collect(),
        owner: vec![Owner::Free; n],
    };
    minimax(&mut board, variant.first_player, variant.counted_player)
}
