//! The Maker-Breaker domination game.
//!
//! Dominator and Staller alternately claim unclaimed vertices. Dominator wins
//! once his vertices dominate every vertex that is not predominated; Staller
//! wins once she owns the whole closed neighbourhood of such a vertex. Each of
//! the four invariants asks for the least number of moves one player needs to
//! force a win with a fixed player starting, or [`GameValue::Infinite`] if no
//! forced win exists.

mod engine;
mod oracle;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph, VertexSet};

pub use engine::{best_moves, solve, solve_state, Solver};
pub use oracle::oracle_solve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

/// Who moves first and whose moves are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameVariant {
    pub first_player: Player,
    pub counted_player: Player,
}

/// The four game invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Invariant {
    /// Dominator's moves in the D-game.
    #[serde(rename = "gamma_MB")]
    Mb,
    /// Dominator's moves in the S-game.
    #[serde(rename = "gamma_MB'")]
    MbPrime,
    /// Staller's moves in the D-game.
    #[serde(rename = "gamma_SMB")]
    Smb,
    /// Staller's moves in the S-game.
    #[serde(rename = "gamma_SMB'")]
    SmbPrime,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [
        Invariant::Mb,
        Invariant::MbPrime,
        Invariant::Smb,
        Invariant::SmbPrime,
    ];

    pub fn variant(self) -> GameVariant {
        use Player::*;
        let (first_player, counted_player) = match self {
            Invariant::Mb => (Dominator, Dominator),
            Invariant::MbPrime => (Staller, Dominator),
            Invariant::Smb => (Dominator, Staller),
            Invariant::SmbPrime => (Staller, Staller),
        };
        GameVariant {
            first_player,
            counted_player,
        }
    }

    pub fn from_variant(v: GameVariant) -> Invariant {
        *Invariant::ALL
            .iter()
            .find(|i| i.variant() == v)
            .expect("the four variants are exhaustive")
    }

    /// Dominator-counted invariants; their criticality is tested by deleting edges.
    pub fn counts_dominator(self) -> bool {
        self.variant().counted_player == Player::Dominator
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Mb => "gamma_MB",
            Invariant::MbPrime => "gamma_MB'",
            Invariant::Smb => "gamma_SMB",
            Invariant::SmbPrime => "gamma_SMB'",
        }
    }

    /// CLI short name.
    pub fn short(self) -> &'static str {
        match self {
            Invariant::Mb => "mb",
            Invariant::MbPrime => "mbp",
            Invariant::Smb => "smb",
            Invariant::SmbPrime => "smbp",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.short() == s || i.name() == s)
            .ok_or_else(|| format!("unknown invariant {s:?} (expected mb, mbp, smb or smbp)"))
    }
}

/// A number of moves, or `Infinite` when the counted player cannot force a win.
///
/// Every finite value is below `Infinite`, and `Infinite` absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(k) => Some(k),
            GameValue::Infinite => None,
        }
    }

    /// `1 + self`.
    pub fn succ(self) -> GameValue {
        match self {
            GameValue::Finite(k) => GameValue::Finite(k + 1),
            GameValue::Infinite => GameValue::Infinite,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(k) => write!(f, "{k}"),
            GameValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for GameValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GameValue::Finite(k) => s.serialize_u32(*k),
            GameValue::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Claims so far and the player to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub claimed_d: VertexSet,
    pub claimed_s: VertexSet,
    pub turn: Player,
}

impl GameState {
    pub fn initial(first: Player) -> Self {
        GameState {
            claimed_d: VertexSet::EMPTY,
            claimed_s: VertexSet::EMPTY,
            turn: first,
        }
    }

    pub fn new(claimed_d: VertexSet, claimed_s: VertexSet, turn: Player) -> Result<Self> {
        if !claimed_d.intersection(claimed_s).is_empty() {
            return Err(Error::Inconsistent(format!(
                "vertices {:?} claimed by both players",
                claimed_d.intersection(claimed_s)
            )));
        }
        Ok(GameState {
            claimed_d,
            claimed_s,
            turn,
        })
    }

    pub fn played(&self) -> VertexSet {
        self.claimed_d.union(self.claimed_s)
    }

    /// The state after `turn` claims `v`.
    pub fn play(&self, v: usize) -> GameState {
        let mut next = *self;
        match self.turn {
            Player::Dominator => next.claimed_d.insert(v),
            Player::Staller => next.claimed_s.insert(v),
        }
        next.turn = self.turn.other();
        next
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    DominatorWon,
    StallerWon,
    Ongoing,
}

/// Dominator's test comes first: his claims dominating the targets ends the game
/// even if Staller also owns a closed neighbourhood (impossible in real play).
pub fn terminal_status(g: &MarkedGraph, st: &GameState) -> Status {
    let dominated = crate::domination::dominated_by(&g.graph, st.claimed_d);
    let undominated = g.targets().difference(dominated);
    if undominated.is_empty() {
        return Status::DominatorWon;
    }
    let isolated_by_staller = undominated
        .iter()
        .any(|v| crate::graph::closed_neighbourhood(&g.graph, v).is_subset(st.claimed_s));
    if isolated_by_staller || st.played() == g.graph.vertices() {
        Status::StallerWon
    } else {
        Status::Ongoing
    }
}

/// The four invariants of a graph with nothing predominated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MbdNumbers {
    #[serde(rename = "gamma_MB")]
    pub mb: GameValue,
    #[serde(rename = "gamma_MB'")]
    pub mb_prime: GameValue,
    #[serde(rename = "gamma_SMB")]
    pub smb: GameValue,
    #[serde(rename = "gamma_SMB'")]
    pub smb_prime: GameValue,
}

impl MbdNumbers {
    pub fn get(&self, inv: Invariant) -> GameValue {
        match inv {
            Invariant::Mb => self.mb,
            Invariant::MbPrime => self.mb_prime,
            Invariant::Smb => self.smb,
            Invariant::SmbPrime => self.smb_prime,
        }
    }
}

pub fn solve_all(g: &Graph) -> MbdNumbers {
    solve_all_marked(&MarkedGraph::plain(g.clone()))
}

pub fn solve_all_marked(g: &MarkedGraph) -> MbdNumbers {
    MbdNumbers {
        mb: solve(g, Invariant::Mb.variant()),
        mb_prime: solve(g, Invariant::MbPrime.variant()),
        smb: solve(g, Invariant::Smb.variant()),
        smb_prime: solve(g, Invariant::SmbPrime.variant()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// Dominator wins whoever starts.
    D,
    /// Staller wins whoever starts.
    S,
    /// The first player wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::D => "D",
            Outcome::S => "S",
            Outcome::N => "N",
        })
    }
}

impl MbdNumbers {
    /// Derives the outcome, rejecting value combinations no game can produce.
    pub fn outcome(&self) -> Result<Outcome> {
        if self.mb.is_finite() == self.smb.is_finite() {
            return Err(Error::Inconsistent(format!(
                "D-game: gamma_MB = {}, gamma_SMB = {}",
                self.mb, self.smb
            )));
        }
        if self.mb_prime.is_finite() == self.smb_prime.is_finite() {
            return Err(Error::Inconsistent(format!(
                "S-game: gamma_MB' = {}, gamma_SMB' = {}",
                self.mb_prime, self.smb_prime
            )));
        }
        match (self.mb.is_finite(), self.mb_prime.is_finite()) {
            (true, true) => Ok(Outcome::D),
            (false, false) => Ok(Outcome::S),
            (true, false) => Ok(Outcome::N),
            (false, true) => Err(Error::Inconsistent(
                "the second player wins both games".to_string(),
            )),
        }
    }
}

impl PartialOrd for Outcome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        // S < N < D: better for Dominator is greater.
        let rank = |o: &Outcome| match o {
            Outcome::S => 0,
            Outcome::N => 1,
            Outcome::D => 2,
        };
        Some(rank(self).cmp(&rank(other)))
    }
}

pub fn outcome(g: &Graph) -> Result<Outcome> {
    solve_all(g).outcome()
}
