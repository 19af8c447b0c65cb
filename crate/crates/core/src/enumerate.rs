//! Enumeration of small semigroups, feeding the verification corpora.
//!
//! Exhaustive mode (order <= 4) fills the Cayley table cell by cell in
//! row-major order, pruning as soon as a fully determined associativity
//! triple fails. Sampled mode builds pseudorandom order-5/6 semigroups
//! out of smaller exhaustively enumerated ones (zero-unions, direct
//! products, identity adjunctions), relabeled to plain letters.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::constructions::{direct_product, zero_union};
use crate::rng::SplitMix64;
use crate::semigroup::Semigroup;

/// Largest order enumerable exhaustively (3492 tables at order 4).
pub const MAX_EXHAUSTIVE_ORDER: usize = 4;

/// Largest order reachable in sampled mode.
pub const MAX_SAMPLED_ORDER: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerationMode {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnumerateError {
    ZeroOrder,
    OrderTooLarge {
        order: usize,
        max: usize,
        mode: &'static str,
    },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroOrder => write!(f, "order must be at least 1"),
            Self::OrderTooLarge { order, max, mode } => {
                write!(f, "{mode} enumeration handles order <= {max}, got {order}")
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| char::from(b'a' + i as u8).to_string())
        .collect()
}

/// Streams every labeled semigroup of the given order, in lexicographic
/// table order, each exactly once.
pub struct ExhaustiveSemigroups {
    n: usize,
    cells: Vec<usize>,
    /// Number of the table prefix cells currently assigned.
    filled: usize,
    /// Set once iteration is finished.
    done: bool,
    /// True right after yielding a complete table, meaning the deepest
    /// cell has to move on before anything new is produced.
    resume: bool,
}

impl ExhaustiveSemigroups {
    pub fn new(order: usize) -> Result<Self, EnumerateError> {
        if order == 0 {
            return Err(EnumerateError::ZeroOrder);
        }
        if order > MAX_EXHAUSTIVE_ORDER {
            return Err(EnumerateError::OrderTooLarge {
                order,
                max: MAX_EXHAUSTIVE_ORDER,
                mode: "exhaustive",
            });
        }
        Ok(Self {
            n: order,
            cells: vec![0; order * order],
            filled: 0,
            done: false,
            resume: false,
        })
    }

    /// Every associativity triple whose four table lookups are all inside
    /// the assigned prefix must hold.
    fn consistent(&self) -> bool {
        let n = self.n;
        let known = |i: usize, j: usize| i * n + j < self.filled;
        for x in 0..n {
            for y in 0..n {
                if !known(x, y) {
                    continue;
                }
                let xy = self.cells[x * n + y];
                for z in 0..n {
                    if !known(y, z) {
                        continue;
                    }
                    let yz = self.cells[y * n + z];
                    if known(xy, z)
                        && known(x, yz)
                        && self.cells[xy * n + z] != self.cells[x * n + yz]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Moves the deepest assigned cell to its next value, unwinding filled
    /// cells that are exhausted. Returns false when the search space is
    /// spent.
    fn bump(&mut self) -> bool {
        while self.filled > 0 {
            let ix = self.filled - 1;
            if self.cells[ix] + 1 < self.n {
                self.cells[ix] += 1;
                return true;
            }
            self.cells[ix] = 0;
            self.filled -= 1;
        }
        false
    }
}

impl Iterator for ExhaustiveSemigroups {
    type Item = Semigroup;

    fn next(&mut self) -> Option<Semigroup> {
        if self.done {
            return None;
        }
        if self.resume {
            self.resume = false;
            if !self.bump() {
                self.done = true;
                return None;
            }
        }
        loop {
            if self.filled == self.cells.len() {
                if self.consistent() {
                    self.resume = true;
                    let table: Vec<u16> = self.cells.iter().map(|&v| v as u16).collect();
                    return Some(Semigroup::from_parts_unchecked(
                        letter_labels(self.n),
                        table,
                    ));
                }
                if !self.bump() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            // Tentatively assign the next cell with 0 and validate.
            self.filled += 1;
            loop {
                if self.consistent() {
                    break;
                }
                if !self.bump() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// Deterministic pseudorandom semigroups of order 5 or 6 (orders <= 4 fall
/// back to sampling the exhaustive list).
pub fn sampled_semigroups(
    order: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<Semigroup>, EnumerateError> {
    if order == 0 {
        return Err(EnumerateError::ZeroOrder);
    }
    if order > MAX_SAMPLED_ORDER {
        return Err(EnumerateError::OrderTooLarge {
            order,
            max: MAX_SAMPLED_ORDER,
            mode: "sampled",
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    if order <= MAX_EXHAUSTIVE_ORDER {
        let all: Vec<Semigroup> = ExhaustiveSemigroups::new(order)?.collect();
        for _ in 0..count {
            out.push(all[rng.below(all.len())].clone());
        }
        return Ok(out);
    }
    for _ in 0..count {
        out.push(sample_one(order, &mut rng));
    }
    Ok(out)
}

fn pick(order: usize, rng: &mut SplitMix64) -> Semigroup {
    // Order <= 4 always; the small exhaustive lists are cheap to rebuild.
    let all: Vec<Semigroup> = ExhaustiveSemigroups::new(order)
        .expect("component order is in exhaustive range")
        .collect();
    all[rng.below(all.len())].clone()
}

fn sample_one(order: usize, rng: &mut SplitMix64) -> Semigroup {
    let s = match (order, rng.below(3)) {
        // 1 + 4 or 1 + 2 + 2 zero-unions, or an identity adjoined to 4.
        (5, 0) => zero_union(&[pick(4, rng)]).expect("nonempty"),
        (5, 1) => zero_union(&[pick(2, rng), pick(2, rng)]).expect("nonempty"),
        (5, _) => adjoin_identity(&pick(4, rng)),
        // 1 + 2 + 3 zero-union, 2 x 3 product, or identity adjoined to 5.
        (_, 0) => zero_union(&[pick(2, rng), pick(3, rng)]).expect("nonempty"),
        (_, 1) => direct_product(&[pick(2, rng), pick(3, rng)], 6).expect("within cap"),
        (_, _) => adjoin_identity(&sample_one(5, rng)),
    };
    debug_assert_eq!(s.order(), order);
    s.relabeled(letter_labels(order))
        .expect("letter labels are valid")
}

/// The monoid S^1: a fresh identity adjoined at index 0.
fn adjoin_identity(s: &Semigroup) -> Semigroup {
    let n = s.order();
    let m = n + 1;
    let mut labels = vec!["1*".to_string()];
    labels.extend(s.labels().iter().cloned());
    let mut table = vec![0u16; m * m];
    for (j, cell) in table.iter_mut().enumerate().take(m) {
        *cell = j as u16; // identity row
    }
    for i in 1..m {
        table[i * m] = i as u16; // identity column
        for j in 1..m {
            table[i * m + j] = (s.table()[(i - 1) * n + (j - 1)] + 1) as u16;
        }
    }
    Semigroup::from_parts_unchecked(labels, table)
}

/// Streams semigroups of the given order in the requested mode.
pub fn enumerate_semigroups(
    order: usize,
    mode: EnumerationMode,
) -> Result<Vec<Semigroup>, EnumerateError> {
    match mode {
        EnumerationMode::Exhaustive => Ok(ExhaustiveSemigroups::new(order)?.collect()),
        EnumerationMode::Sampled { seed, count } => sampled_semigroups(order, seed, count),
    }
}

/// Lexicographically smallest table obtainable by relabeling; two
/// semigroups have equal canonical forms iff they are isomorphic.
pub fn canonical_form(s: &Semigroup) -> Vec<usize> {
    let n = s.order();
    let table = s.table();
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |perm| {
        // inverse[x] = position of x under the relabeling
        let mut inverse = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut relabeled = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                relabeled[inverse[i] * n + inverse[j]] = inverse[table[i * n + j]];
            }
        }
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_all(perm: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Keeps one representative per isomorphism class.
pub fn dedup_canonical(semigroups: Vec<Semigroup>) -> Vec<Semigroup> {
    let mut seen = alloc::collections::BTreeSet::new();
    semigroups
        .into_iter()
        .filter(|s| seen.insert(canonical_form(s)))
        .collect()
}
