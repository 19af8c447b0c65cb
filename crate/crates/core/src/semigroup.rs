//! Finite semigroups represented by element labels and a full Cayley table.
//!
//! Tables are validated on construction: every entry must be an element
//! index (closure) and the operation must be associative. Full
//! transformations compose left to right: `x(fg) = (xf)g`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

/// Largest order accepted by the validating constructor.
pub const MAX_ORDER: usize = 4096;

/// Largest order for which [`generate`] builds a table directly.
pub const MAX_GENERATED_ORDER: usize = 256;

/// Index of an element within its owning [`Semigroup`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite semigroup: distinct element labels plus an `n x n` Cayley table.
///
/// `table[i * n + j]` is the index of the product (element `i`)·(element `j`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Semigroup {
    labels: Vec<String>,
    table: Vec<u16>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemigroupError {
    /// The empty semigroup is rejected.
    Empty,
    OrderCapExceeded {
        order: usize,
        cap: usize,
    },
    DuplicateLabel(String),
    /// Labels must be nonempty, whitespace-free and must not start with '#'.
    BadLabel(String),
    TableShape {
        expected: usize,
        got: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    /// Associativity failed; carries a witness triple of labels with
    /// `(xy)z != x(yz)`.
    NotAssociative {
        x: String,
        y: String,
        z: String,
    },
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "semigroup must have at least one element"),
            Self::OrderCapExceeded { order, cap } => {
                write!(f, "order {order} exceeds cap {cap}")
            }
            Self::DuplicateLabel(l) => write!(f, "duplicate element label {l:?}"),
            Self::BadLabel(l) => write!(
                f,
                "bad element label {l:?} (must be nonempty, without whitespace, not starting with '#')"
            ),
            Self::TableShape { expected, got } => {
                write!(f, "table has {got} entries, expected {expected}")
            }
            Self::EntryOutOfRange { row, col, value } => {
                write!(f, "table entry at row {row}, column {col} is {value}, out of range")
            }
            Self::NotAssociative { x, y, z } => {
                write!(f, "not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
            }
        }
    }
}

impl core::error::Error for SemigroupError {}

impl Semigroup {
    /// Validating constructor from a flat row-major table of element indices.
    pub fn new(labels: Vec<String>, table: Vec<usize>) -> Result<Self, SemigroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if n > MAX_ORDER {
            return Err(SemigroupError::OrderCapExceeded {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if label.is_empty() || label.starts_with('#') || label.chars().any(char::is_whitespace)
            {
                return Err(SemigroupError::BadLabel(label.clone()));
            }
            if !seen.insert(label.as_str()) {
                return Err(SemigroupError::DuplicateLabel(label.clone()));
            }
        }
        if table.len() != n * n {
            return Err(SemigroupError::TableShape {
                expected: n * n,
                got: table.len(),
            });
        }
        for (k, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(SemigroupError::EntryOutOfRange {
                    row: k / n,
                    col: k % n,
                    value: v,
                });
            }
        }
        let table: Vec<u16> = table.into_iter().map(|v| v as u16).collect();
        if let Some((x, y, z)) = associativity_witness(&table, n) {
            return Err(SemigroupError::NotAssociative {
                x: labels[x].clone(),
                y: labels[y].clone(),
                z: labels[z].clone(),
            });
        }
        Ok(Self { labels, table })
    }

    /// Constructor for tables that are associative by construction
    /// (zero-unions, direct products, enumerator output).
    pub(crate) fn from_parts_unchecked(labels: Vec<String>, table: Vec<u16>) -> Self {
        let n = labels.len();
        debug_assert!(n >= 1 && table.len() == n * n);
        debug_assert!(table.iter().all(|&v| (v as usize) < n));
        // Full associativity re-check only at small orders; O(n^3).
        debug_assert!(n > 64 || associativity_witness(&table, n).is_none());
        Self { labels, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.0]
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order()).map(ElementId)
    }

    /// Cayley-table lookup: the product `x * y`.
    pub fn product(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.table[x.0 * self.order() + y.0] as usize)
    }

    pub fn commutes(&self, x: ElementId, y: ElementId) -> bool {
        self.product(x, y) == self.product(y, x)
    }

    /// Elements commuting with every element, in declaration order.
    pub fn center(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.commutes(x, y)))
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.table[i * n + j] == self.table[j * n + i]))
    }

    /// Flat row-major table of element indices.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    /// Re-run the full associativity validation, returning a witness triple
    /// of labels on failure.
    pub fn validate(&self) -> Result<(), SemigroupError> {
        match associativity_witness(&self.table, self.order()) {
            None => Ok(()),
            Some((x, y, z)) => Err(SemigroupError::NotAssociative {
                x: self.labels[x].clone(),
                y: self.labels[y].clone(),
                z: self.labels[z].clone(),
            }),
        }
    }

    /// Same table under new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self, SemigroupError> {
        if labels.len() != self.order() {
            return Err(SemigroupError::TableShape {
                expected: self.order(),
                got: labels.len(),
            });
        }
        Self::new(labels, self.table())
    }
}

/// First triple (x, y, z) with `(xy)z != x(yz)`, scanning in index order.
fn associativity_witness(table: &[u16], n: usize) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            let xy = table[x * n + y] as usize;
            for z in 0..n {
                let yz = table[y * n + z] as usize;
                if table[xy * n + z] != table[x * n + yz] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Built-in families used as test corpora.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// All maps on an n-point set under left-to-right composition; order n^n.
    FullTransformation,
    CyclicGroup,
    LeftZero,
    RightZero,
    /// A zero element plus n-1 others, every product equal to the zero.
    NullWithZero,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Self::FullTransformation => "full_transformation",
            Self::CyclicGroup => "cyclic_group",
            Self::LeftZero => "left_zero",
            Self::RightZero => "right_zero",
            Self::NullWithZero => "null_with_zero",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "full_transformation" => Some(Self::FullTransformation),
            "cyclic_group" => Some(Self::CyclicGroup),
            "left_zero" => Some(Self::LeftZero),
            "right_zero" => Some(Self::RightZero),
            "null_with_zero" => Some(Self::NullWithZero),
            _ => None,
        }
    }
}

/// Builds a named semigroup of the given order parameter.
pub fn generate(family: Family, n: usize) -> Result<Semigroup, SemigroupError> {
    if n == 0 {
        return Err(SemigroupError::Empty);
    }
    match family {
        Family::FullTransformation => {
            // Order is n^n; n = 4 already gives 256 elements.
            if n > 4 {
                return Err(SemigroupError::OrderCapExceeded { order: n, cap: 4 });
            }
            full_transformation(n)
        }
        Family::CyclicGroup => {
            check_generated_order(n)?;
            let labels = (0..n)
                .map(|k| {
                    if k == 0 {
                        "e".to_string()
                    } else {
                        format!("g{k}")
                    }
                })
                .collect();
            let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
            Semigroup::new(labels, table)
        }
        Family::LeftZero => {
            check_generated_order(n)?;
            let table = (0..n * n).map(|k| k / n).collect();
            Semigroup::new(plain_labels(n), table)
        }
        Family::RightZero => {
            check_generated_order(n)?;
            let table = (0..n * n).map(|k| k % n).collect();
            Semigroup::new(plain_labels(n), table)
        }
        Family::NullWithZero => {
            check_generated_order(n)?;
            let mut labels = vec!["z".to_string()];
            labels.extend((1..n).map(|k| format!("x{k}")));
            Semigroup::new(labels, vec![0; n * n])
        }
    }
}

fn check_generated_order(n: usize) -> Result<(), SemigroupError> {
    if n > MAX_GENERATED_ORDER {
        Err(SemigroupError::OrderCapExceeded {
            order: n,
            cap: MAX_GENERATED_ORDER,
        })
    } else {
        Ok(())
    }
}

fn plain_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// All maps {1..n} -> {1..n}, composed left to right, so that the image of
/// `x` under `fg` is `(xf)g`. A map is labeled by its image word: "21" is
/// the transposition on two points, "11" is the constant map to 1.
fn full_transformation(n: usize) -> Result<Semigroup, SemigroupError> {
    let order = n.pow(n as u32);
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(order);
    let mut current = vec![0usize; n];
    loop {
        maps.push(current.clone());
        // Next image word in lexicographic order.
        let mut k = n;
        while k > 0 {
            k -= 1;
            if current[k] + 1 < n {
                current[k] += 1;
                current[k + 1..].fill(0);
                break;
            }
            if k == 0 {
                let labels = maps
                    .iter()
                    .map(|m| m.iter().map(|&v| (v + 1).to_string()).collect::<String>())
                    .collect();
                let index_of = |m: &[usize]| m.iter().fold(0, |acc, &v| acc * n + v);
                let mut table = Vec::with_capacity(order * order);
                for f in &maps {
                    for g in &maps {
                        let composed: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                        table.push(index_of(&composed));
                    }
                }
                return Semigroup::new(labels, table);
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    UnknownLabel {
        line: usize,
        col: usize,
        label: String,
    },
    /// Wrong number of rows, or wrong number of entries in a row.
    Shape {
        line: usize,
        expected: usize,
        got: usize,
    },
    Invalid(SemigroupError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Syntax { line, col, message } => {
                write!(f, "line {line}, column {col}: {message}")
            }
            Self::UnknownLabel { line, col, label } => {
                write!(f, "line {line}, column {col}: unknown label {label:?}")
            }
            Self::Shape {
                line,
                expected,
                got,
            } => {
                write!(f, "line {line}: expected {expected} entries, found {got}")
            }
            Self::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ParseError {}

impl From<SemigroupError> for ParseError {
    fn from(e: SemigroupError) -> Self {
        Self::Invalid(e)
    }
}

/// Tokens of a line with their 1-based character columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..col]));
            }
        } else if start.is_none() {
            start = Some(col);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    // Byte offsets to 1-based char columns.
    out.into_iter()
        .map(|(off, tok)| (line[..off].chars().count() + 1, tok))
        .collect()
}

/// Parses the line-oriented table file format.
///
/// Line 1 is `elements: <label> <label> ...`; the next n lines hold n labels
/// each, where line i, token j is the product (element i)·(element j).
/// Lines whose first non-blank character is `#` are comments.
pub fn parse_semigroup(text: &str) -> Result<Semigroup, ParseError> {
    let content: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect();

    let Some(&(header_line, header)) = content.first() else {
        return Err(ParseError::Syntax {
            line: 1,
            col: 1,
            message: "empty file: expected an 'elements:' line".to_string(),
        });
    };
    let header_tokens = tokenize(header);
    match header_tokens.first() {
        Some(&(_, "elements:")) => {}
        Some(&(col, tok)) => {
            return Err(ParseError::Syntax {
                line: header_line,
                col,
                message: format!("expected 'elements:', found {tok:?}"),
            })
        }
        None => unreachable!("blank lines are filtered"),
    }
    let labels: Vec<String> = header_tokens[1..]
        .iter()
        .map(|&(_, t)| t.to_string())
        .collect();
    if labels.is_empty() {
        return Err(ParseError::Syntax {
            line: header_line,
            col: 1,
            message: "no element labels declared".to_string(),
        });
    }
    let n = labels.len();

    let rows = &content[1..];
    if rows.len() != n {
        let line = rows.last().map_or(header_line, |&(l, _)| l);
        return Err(ParseError::Shape {
            line,
            expected: n,
            got: rows.len(),
        });
    }

    let mut table = Vec::with_capacity(n * n);
    for &(line, row) in rows {
        let tokens = tokenize(row);
        if tokens.len() != n {
            return Err(ParseError::Shape {
                line,
                expected: n,
                got: tokens.len(),
            });
        }
        for (col, tok) in tokens {
            match labels.iter().position(|l| l == tok) {
                Some(ix) => table.push(ix),
                None => {
                    return Err(ParseError::UnknownLabel {
                        line,
                        col,
                        label: tok.to_string(),
                    })
                }
            }
        }
    }
    Ok(Semigroup::new(labels, table)?)
}

/// Canonical text form; `parse_semigroup(serialize_semigroup(s)) == s`.
pub fn serialize_semigroup(s: &Semigroup) -> String {
    let n = s.order();
    let mut out = String::from("elements: ");
    out.push_str(&s.labels().join(" "));
    for i in 0..n {
        out.push('\n');
        let row: Vec<&str> = (0..n)
            .map(|j| s.label(s.product(ElementId(i), ElementId(j))))
            .collect();
        out.push_str(&row.join(" "));
    }
    out
}
