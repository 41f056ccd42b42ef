use rustc_hash::FxHashMap;

use super::{GameState, GameValue, GameVariant, Player};
use crate::graph::{closed_neighbourhood, MarkedGraph};

const INF: u8 = u8::MAX;

fn to_value(v: u8) -> GameValue {
    if v == INF {
        GameValue::Infinite
    } else {
        GameValue::Finite(v as u32)
    }
}

/// Memoised minimax for one variant on one marked graph.
///
/// The value of a state is the least number of further moves by the counted
/// player that forces their win: `0` on a won terminal, infinite on a lost
/// one, `1 + min` over children on the counted player's turn and `max` over
/// children otherwise. The table is keyed by both claim sets and the turn;
/// the dominated set is recomputed from Dominator's claims.
pub struct Solver {
    closed: Vec<u64>,
    targets: u64,
    all: u64,
    variant: GameVariant,
    memo: FxHashMap<(u64, u64, bool), u8>,
}

impl Solver {
    pub fn new(g: &MarkedGraph, variant: GameVariant) -> Self {
        let n = g.graph.order();
        Solver {
            closed: (0..n).map(|v| closed_neighbourhood(&g.graph, v).bits()).collect(),
            targets: g.targets().bits(),
            all: g.graph.vertices().bits(),
            variant,
            memo: FxHashMap::default(),
        }
    }

    pub fn variant(&self) -> GameVariant {
        self.variant
    }

    /// Number of memoised states.
    pub fn states(&self) -> usize {
        self.memo.len()
    }

    fn dominated(&self, d: u64) -> u64 {
        let mut acc = 0;
        let mut rest = d;
        while rest != 0 {
            acc |= self.closed[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        acc
    }

    /// `Some(winner)` when the state is terminal.
    fn winner(&self, s: u64, dominated: u64, played: u64) -> Option<Player> {
        let mut undominated = self.targets & !dominated;
        if undominated == 0 {
            return Some(Player::Dominator);
        }
        if played == self.all {
            return Some(Player::Staller);
        }
        while undominated != 0 {
            let v = undominated.trailing_zeros() as usize;
            if self.closed[v] & !s == 0 {
                return Some(Player::Staller);
            }
            undominated &= undominated - 1;
        }
        None
    }

    /// Unplayed vertices, most promising first for the player to move.
    ///
    /// Dominator prefers vertices that dominate many new targets; Staller
    /// prefers vertices inside the undominated closed neighbourhood she is
    /// closest to owning.
    fn ordered_moves(&self, s: u64, dominated: u64, played: u64, turn: Player, out: &mut Vec<u8>) {
        let mut keyed: [(u32, u8); 64] = [(0, 0); 64];
        let mut k = 0;
        let undominated = self.targets & !dominated;
        let mut free = self.all & !played;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let score = match turn {
                Player::Dominator => 64 - (self.closed[v] & undominated).count_ones(),
                Player::Staller => {
                    let mut best = 64;
                    let mut hits = self.closed[v] & undominated;
                    while hits != 0 {
                        let u = hits.trailing_zeros() as usize;
                        hits &= hits - 1;
                        best = best.min((self.closed[u] & !s).count_ones());
                    }
                    best
                }
            };
            keyed[k] = (score, v as u8);
            k += 1;
        }
        keyed[..k].sort_unstable();
        out.clear();
        out.extend(keyed[..k].iter().map(|&(_, v)| v));
    }

    fn search(&mut self, d: u64, s: u64, turn: Player) -> u8 {
        let dominated = self.dominated(d);
        let played = d | s;
        if let Some(w) = self.winner(s, dominated, played) {
            return if w == self.variant.counted_player { 0 } else { INF };
        }
        let key = (d, s, turn == Player::Dominator);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut moves = Vec::with_capacity(16);
        self.ordered_moves(s, dominated, played, turn, &mut moves);
        let counted = turn == self.variant.counted_player;
        let mut best = if counted { INF } else { 0 };
        for &m in &moves {
            let bit = 1u64 << m;
            let (nd, ns) = match turn {
                Player::Dominator => (d | bit, s),
                Player::Staller => (d, s | bit),
            };
            let child = self.search(nd, ns, turn.other());
            if counted {
                if child != INF && child + 1 < best {
                    best = child + 1;
                    // the counted player needs at least this move
                    if best == 1 {
                        break;
                    }
                }
            } else if child > best {
                best = child;
                if best == INF {
                    break;
                }
            }
        }
        self.memo.insert(key, best);
        best
    }

    pub fn value(&mut self, st: &GameState) -> GameValue {
        to_value(self.search(st.claimed_d.bits(), st.claimed_s.bits(), st.turn))
    }

    pub fn value_from_start(&mut self) -> GameValue {
        self.value(&GameState::initial(self.variant.first_player))
    }
}

/// Exact value of `variant` on `g` from the empty position.
pub fn solve(g: &MarkedGraph, variant: GameVariant) -> GameValue {
    Solver::new(g, variant).value_from_start()
}

/// Exact value of `variant` from an arbitrary position.
pub fn solve_state(g: &MarkedGraph, st: &GameState, variant: GameVariant) -> GameValue {
    Solver::new(g, variant).value(st)
}

/// Every move of the player to move that attains the position's value, in
/// ascending vertex order; empty when the position is already decided.
pub fn best_moves(g: &MarkedGraph, st: &GameState, variant: GameVariant) -> Vec<usize> {
    if super::terminal_status(g, st) != super::Status::Ongoing {
        return Vec::new();
    }
    let mut solver = Solver::new(g, variant);
    let counted = st.turn == variant.counted_player;
    let scored: Vec<(usize, GameValue)> = g
        .graph
        .vertices()
        .difference(st.played())
        .iter()
        .map(|v| {
            let child = solver.value(&st.play(v));
            (v, if counted { child.succ() } else { child })
        })
        .collect();
    let target = if counted {
        scored.iter().map(|&(_, x)| x).min()
    } else {
        scored.iter().map(|&(_, x)| x).max()
    };
    scored
        .into_iter()
        .filter(|&(_, x)| Some(x) == target)
        .map(|(v, _)| v)
        .collect()
}
