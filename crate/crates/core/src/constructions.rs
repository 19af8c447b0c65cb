//! The zero-union and direct product of finite semigroups.
//!
//! A zero-union adjoins a fresh zero `0` to the disjoint union of the
//! components: products inside a component are inherited, every other
//! product (including anything involving the zero) is `0`. Component
//! elements are relabeled `1.x`, `2.x`, ... so the canonical embeddings
//! stay string-computable.
//!
//! A direct product multiplies coordinate-wise; elements are labeled
//! `(l1,...,ln)` in mixed-radix order with the first coordinate slowest,
//! matching the strong-product vertex order, so the natural bijection
//! between the two is the identity on labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::semigroup::Semigroup;

/// Default cap on the order of a constructed direct product.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructError {
    EmptyComponents,
    ProductCapExceeded { order: u128, cap: usize },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyComponents => write!(f, "a construction needs at least one component"),
            Self::ProductCapExceeded { order, cap } => {
                write!(
                    f,
                    "direct product has order {order}, exceeding the cap {cap}"
                )
            }
        }
    }
}

impl core::error::Error for ConstructError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    ZeroUnion,
    DirectProduct,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::ZeroUnion => "zero_union",
            Self::DirectProduct => "direct_product",
        }
    }
}

/// A construction to perform: which kind, over which components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub components: Vec<Semigroup>,
}

impl ConstructionSpec {
    pub fn build(&self, product_cap: usize) -> Result<Semigroup, ConstructError> {
        match self.kind {
            ConstructionKind::ZeroUnion => zero_union(&self.components),
            ConstructionKind::DirectProduct => direct_product(&self.components, product_cap),
        }
    }
}

/// Label of the embedded copy of a component element: component `i`
/// (1-based) contributes `"{i}.{label}"`; the fresh zero is `"0"`.
pub fn embedded_label(component: usize, label: &str) -> String {
    format!("{}.{}", component + 1, label)
}

/// The zero-union of the components. Order is `1 + sum of component
/// orders`; the zero sits at index 0 and components follow in order.
pub fn zero_union(components: &[Semigroup]) -> Result<Semigroup, ConstructError> {
    if components.is_empty() {
        return Err(ConstructError::EmptyComponents);
    }
    let order = 1 + components.iter().map(Semigroup::order).sum::<usize>();
    let mut labels = Vec::with_capacity(order);
    labels.push("0".to_string());
    for (i, s) in components.iter().enumerate() {
        labels.extend(s.labels().iter().map(|l| embedded_label(i, l)));
    }
    debug_assert!({
        let set: alloc::collections::BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        set.len() == labels.len()
    });

    let mut table = alloc::vec![0u16; order * order];
    let mut offset = 1;
    for s in components {
        let n = s.order();
        for i in 0..n {
            for j in 0..n {
                let p = s.table()[i * n + j];
                table[(offset + i) * order + (offset + j)] = (offset + p) as u16;
            }
        }
        offset += n;
    }
    Ok(Semigroup::from_parts_unchecked(labels, table))
}

/// Mixed-radix coordinates of a product element, first coordinate slowest.
pub fn product_coordinates(mut index: usize, sizes: &[usize]) -> Vec<usize> {
    let mut coords = alloc::vec![0usize; sizes.len()];
    for k in (0..sizes.len()).rev() {
        coords[k] = index % sizes[k];
        index /= sizes[k];
    }
    coords
}

/// Inverse of [`product_coordinates`].
pub fn product_index(coords: &[usize], sizes: &[usize]) -> usize {
    coords
        .iter()
        .zip(sizes)
        .fold(0, |acc, (&c, &n)| acc * n + c)
}

/// The direct product of the components, with coordinate-wise
/// multiplication and labels `(l1,...,ln)`.
pub fn direct_product(components: &[Semigroup], cap: usize) -> Result<Semigroup, ConstructError> {
    if components.is_empty() {
        return Err(ConstructError::EmptyComponents);
    }
    let sizes: Vec<usize> = components.iter().map(Semigroup::order).collect();
    let order = match sizes.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n)) {
        Some(o) if o <= cap => o,
        _ => {
            let exact = sizes
                .iter()
                .fold(1u128, |acc, &n| acc.saturating_mul(n as u128));
            return Err(ConstructError::ProductCapExceeded { order: exact, cap });
        }
    };

    let tables: Vec<Vec<usize>> = components.iter().map(Semigroup::table).collect();
    let mut labels = Vec::with_capacity(order);
    for ix in 0..order {
        let coords = product_coordinates(ix, &sizes);
        let parts: Vec<&str> = coords
            .iter()
            .zip(components)
            .map(|(&c, s)| s.labels()[c].as_str())
            .collect();
        labels.push(format!("({})", parts.join(",")));
    }

    let mut table = Vec::with_capacity(order * order);
    let mut prod = alloc::vec![0usize; sizes.len()];
    for i in 0..order {
        let ci = product_coordinates(i, &sizes);
        for j in 0..order {
            let cj = product_coordinates(j, &sizes);
            for (k, p) in prod.iter_mut().enumerate() {
                *p = tables[k][ci[k] * sizes[k] + cj[k]];
            }
            table.push(product_index(&prod, &sizes) as u16);
        }
    }
    Ok(Semigroup::from_parts_unchecked(labels, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{generate, ElementId, Family};

    fn t2() -> Semigroup {
        generate(Family::FullTransformation, 2).unwrap()
    }

    #[test]
    fn zero_union_of_two_t2_copies() {
        let s = zero_union(&[t2(), t2()]).unwrap();
        assert_eq!(s.order(), 9);
        s.validate().unwrap();
        let el = |l: &str| s.element_by_label(l).unwrap();
        // Cross-component products collapse to the fresh zero.
        assert_eq!(s.label(s.product(el("1.11"), el("2.22"))), "0");
        assert_eq!(s.label(s.product(el("2.21"), el("1.12"))), "0");
        // Within-component products are inherited.
        assert_eq!(s.label(s.product(el("1.11"), el("1.22"))), "1.22");
        // Everything touching the zero is the zero.
        for x in s.elements() {
            assert_eq!(s.label(s.product(ElementId(0), x)), "0");
            assert_eq!(s.label(s.product(x, ElementId(0))), "0");
        }
    }

    #[test]
    fn zero_union_of_one_commutative_component() {
        let s = zero_union(&[generate(Family::CyclicGroup, 2).unwrap()]).unwrap();
        assert_eq!(s.order(), 3);
        s.validate().unwrap();
        assert!(s.is_commutative());
    }

    #[test]
    fn zero_union_zero_is_new_even_with_internal_zero() {
        let n2 = generate(Family::NullWithZero, 2).unwrap();
        let s = zero_union(&[n2]).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.element_by_label("0").is_some());
        assert!(s.element_by_label("1.z").is_some());
        let zero = s.element_by_label("0").unwrap();
        let inner = s.element_by_label("1.z").unwrap();
        assert_ne!(zero, inner);
        // The inner zero still absorbs within its component only.
        let x = s.element_by_label("1.x1").unwrap();
        assert_eq!(s.product(inner, x), inner);
        assert_eq!(s.product(zero, x), zero);
    }

    #[test]
    fn zero_union_center_is_zero_plus_component_centers() {
        let parts = [t2(), generate(Family::CyclicGroup, 2).unwrap()];
        let s = zero_union(&parts).unwrap();
        let mut expected: alloc::vec::Vec<String> = alloc::vec!["0".to_string()];
        for (i, p) in parts.iter().enumerate() {
            expected.extend(p.center().iter().map(|&x| embedded_label(i, p.label(x))));
        }
        let got: alloc::vec::Vec<String> =
            s.center().iter().map(|&x| s.label(x).to_string()).collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expected_sorted);
    }

    #[test]
    fn direct_product_of_two_t2_copies() {
        let s = direct_product(&[t2(), t2()], DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!(s.order(), 16);
        s.validate().unwrap();
        let el = |l: &str| s.element_by_label(l).unwrap();
        // Coordinate-wise: (11,12)*(22,21) = (11*22, 12*21) = (22,21).
        assert_eq!(s.label(s.product(el("(11,12)"), el("(22,21)"))), "(22,21)");
        assert_eq!(s.label(s.product(el("(12,11)"), el("(21,22)"))), "(21,22)");
    }

    #[test]
    fn direct_product_of_left_zeros_is_left_zero() {
        let l2 = generate(Family::LeftZero, 2).unwrap();
        let s = direct_product(&[l2.clone(), l2], DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!(s.order(), 4);
        for x in s.elements() {
            for y in s.elements() {
                assert_eq!(s.product(x, y), x);
            }
        }
    }

    #[test]
    fn direct_product_center_is_product_of_centers() {
        let parts = [generate(Family::CyclicGroup, 3).unwrap(), t2()];
        let s = direct_product(&parts, DEFAULT_PRODUCT_CAP).unwrap();
        let sizes: alloc::vec::Vec<usize> = parts.iter().map(Semigroup::order).collect();
        let centers: alloc::vec::Vec<alloc::vec::Vec<usize>> = parts
            .iter()
            .map(|p| p.center().iter().map(|x| x.index()).collect())
            .collect();
        let expected: alloc::vec::Vec<ElementId> = s
            .elements()
            .filter(|e| {
                product_coordinates(e.index(), &sizes)
                    .iter()
                    .zip(&centers)
                    .all(|(c, z)| z.contains(c))
            })
            .collect();
        assert_eq!(s.center(), expected);
        assert_eq!(s.center().len(), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(zero_union(&[]), Err(ConstructError::EmptyComponents));
        assert_eq!(
            direct_product(&[], 64),
            Err(ConstructError::EmptyComponents)
        );
        let t = t2();
        assert!(matches!(
            direct_product(&[t.clone(), t.clone(), t.clone()], 60),
            Err(ConstructError::ProductCapExceeded { order: 64, cap: 60 })
        ));
    }

    #[test]
    fn coordinate_codec_round_trips() {
        let sizes = [3usize, 4, 2];
        for ix in 0..24 {
            let coords = product_coordinates(ix, &sizes);
            assert_eq!(product_index(&coords, &sizes), ix);
        }
        assert_eq!(product_coordinates(0, &sizes), alloc::vec![0, 0, 0]);
        assert_eq!(product_coordinates(23, &sizes), alloc::vec![2, 3, 1]);
    }
}
