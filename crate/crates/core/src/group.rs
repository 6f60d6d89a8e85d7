//! Finite groups presented by their full operation tables.
//!
//! A [`FiniteGroup`] stores a complete `n x n` operation table over dense
//! element indices `0..n` together with display labels. Labels are
//! presentation-only: every algorithm in this crate works on indices, and
//! labels are consulted only when parsing input or rendering output.
//!
//! Groups built from an untrusted table ([`FiniteGroup::from_table`]) have
//! every group axiom checked eagerly, including the `O(n^3)` associativity
//! sweep; the named families ([`FiniteGroup::cyclic`],
//! [`FiniteGroup::dihedral`]) are built from closed formulas and skip the
//! sweep. A group is immutable after construction, so all later operations
//! are total on valid indices.
//!
//! Subsets of a group are [`ElementSet`] bitsets. Keeping sets as plain `u64`
//! masks caps supported group orders at [`MAX_ORDER`] but makes the set
//! algebra that rough approximations lean on (union, intersection, subset
//! tests) single instructions.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};
use std::sync::Arc;

use thiserror::Error;

/// Largest supported group order.
///
/// Element sets are `u64` bitsets, so every exhaustive operation in the crate
/// is bounded by 64 elements. The intended working range is desk-scale groups
/// (the combinatorial enumerations in the CLI cut off far earlier).
pub const MAX_ORDER: usize = 64;

/// Errors raised while building or interrogating a group.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// A requested order was zero.
    #[error("group order must be at least 1")]
    InvalidOrder,
    /// A requested order exceeds [`MAX_ORDER`].
    #[error("group order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    /// The operation table is not square.
    #[error("operation table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    /// A table entry does not name an element.
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    /// A row of the table repeats an element (the table is not a Latin square).
    #[error("operation table is not a Latin square: row {index} repeats element {value}")]
    RepeatedInRow { index: usize, value: usize },
    /// A column of the table repeats an element.
    #[error("operation table is not a Latin square: column {index} repeats element {value}")]
    RepeatedInColumn { index: usize, value: usize },
    /// No two-sided identity element exists.
    #[error("operation table has no identity element")]
    NoIdentity,
    /// An element has no two-sided inverse.
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    /// Associativity fails at the named witness triple.
    #[error("associativity fails at ({a}, {b}, {c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    /// The label list does not match the order.
    #[error("{got} labels supplied for a group of order {order}")]
    LabelCountMismatch { got: usize, order: usize },
    /// Two elements share a label.
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    /// A label does not name an element of this group.
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    /// An element index is out of range for this group.
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    /// A set that was required to be a normal subgroup is not one.
    #[error("set is not a normal subgroup")]
    NotNormal,
}

/// A subset of a group's elements, stored as a bitset over element indices.
///
/// `ElementSet` is deliberately group-agnostic: it is a plain `Copy` mask, and
/// every operation that needs the group structure takes the [`FiniteGroup`]
/// explicitly. Members always iterate in ascending index order.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    /// The empty set.
    pub const EMPTY: ElementSet = ElementSet(0);

    /// Set containing exactly `index`.
    pub fn singleton(index: usize) -> ElementSet {
        debug_assert!(index < MAX_ORDER);
        ElementSet(1 << index)
    }

    /// Set containing every index below `order`.
    pub fn full(order: usize) -> ElementSet {
        debug_assert!((1..=MAX_ORDER).contains(&order));
        if order == MAX_ORDER {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << order) - 1)
        }
    }

    /// Raw bitmask (bit `i` set iff `i` is a member).
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Rebuild a set from a raw bitmask.
    pub fn from_bits(bits: u64) -> ElementSet {
        ElementSet(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of members.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_ORDER && self.0 & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < MAX_ORDER);
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < MAX_ORDER);
        self.0 &= !(1 << index);
    }

    /// Copy of `self` without `index`.
    pub fn without(self, index: usize) -> ElementSet {
        let mut out = self;
        out.remove(index);
        out
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// True iff the sets share at least one member.
    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within a group of the given order.
    pub fn complement_in(self, order: usize) -> ElementSet {
        ElementSet(!self.0) & ElementSet::full(order)
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let index = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(index)
            }
        })
    }

    /// Members collected into a vector, ascending.
    pub fn members(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Order sets by size, then lexicographically by ascending member list.
    ///
    /// This is the canonical presentation order used whenever lists of sets
    /// are reported (subgroup enumerations, connection-set enumerations).
    pub fn cmp_by_size_then_members(&self, other: &ElementSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> ElementSet {
        let mut set = ElementSet::EMPTY;
        for index in iter {
            set.insert(index);
        }
        set
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: ElementSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: ElementSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    /// Set difference.
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, index) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{index}")?;
        }
        f.write_str("}")
    }
}

struct Inner {
    order: usize,
    /// Row-major flat table: `table[a * order + b]` is `a * b`.
    table: Vec<usize>,
    labels: Vec<String>,
    label_to_index: HashMap<String, usize>,
    identity: usize,
    inverses: Vec<usize>,
}

/// A finite group given by its complete operation table.
///
/// Cloning is cheap (the table is shared), and two clones of one construction
/// as well as two independent constructions of the same table compare equal
/// under [`FiniteGroup::same_structure`].
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order())
    }
}

impl FiniteGroup {
    /// Cyclic group of order `n` under addition modulo `n`.
    ///
    /// Elements are the residues `0..n`, labelled by their decimal value;
    /// the identity is `0`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        check_order(n)?;
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Ok(FiniteGroup::assemble(n, table, labels))
    }

    /// Dihedral group of order `2n`: the symmetries of a regular `n`-gon.
    ///
    /// Writing `P` for the basic rotation and `e` for the basic reflection,
    /// the defining relations are `P^n = 1`, `e^2 = 1` and `eP = P^(n-1)e`.
    /// Elements are ordered `1, P, P2, ..., e, Pe, P2e, ...`: index `i < n`
    /// is the rotation `P^i`, index `n + i` is the reflection `P^i e`.
    pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        check_order(2 * n)?;
        let order = 2 * n;
        // With elements written P^i e^f, the product rule is
        // (i, f) * (j, g) = (i + (-1)^f j mod n, f xor g).
        let idx = |i: usize, f: usize| i + f * n;
        let mut table = vec![0usize; order * order];
        for i in 0..n {
            for f in 0..2 {
                for j in 0..n {
                    for g in 0..2 {
                        let k = if f == 0 { (i + j) % n } else { (i + n - j) % n };
                        table[idx(i, f) * order + idx(j, g)] = idx(k, f ^ g);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for f in 0..2 {
            for i in 0..n {
                labels.push(rotation_label(i, f == 1));
            }
        }
        Ok(FiniteGroup::assemble(order, table, labels))
    }

    /// Build a group from an explicit operation table, validating every group
    /// axiom. `table[a][b]` must be the index of `a * b`. When `labels` is
    /// `None`, elements are labelled by their decimal index.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        check_order(order)?;
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value);
            }
        }
        validate_axioms(order, &flat)?;
        let labels = match labels {
            Some(labels) => {
                if labels.len() != order {
                    return Err(GroupError::LabelCountMismatch {
                        got: labels.len(),
                        order,
                    });
                }
                let mut seen = HashMap::new();
                for (index, label) in labels.iter().enumerate() {
                    if seen.insert(label.clone(), index).is_some() {
                        return Err(GroupError::DuplicateLabel(label.clone()));
                    }
                }
                labels
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup::assemble(order, flat, labels))
    }

    fn assemble(order: usize, table: Vec<usize>, labels: Vec<String>) -> FiniteGroup {
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .expect("constructed table has an identity");
        let inverses = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| {
                        table[a * order + b] == identity && table[b * order + a] == identity
                    })
                    .expect("constructed table has inverses")
            })
            .collect();
        let label_to_index = labels
            .iter()
            .enumerate()
            .map(|(index, label)| (label.clone(), index))
            .collect();
        FiniteGroup {
            inner: Arc::new(Inner {
                order,
                table,
                labels,
                label_to_index,
                identity,
                inverses,
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    /// Product `a * b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.inner.order;
        debug_assert!(a < n && b < n);
        self.inner.table[a * n + b]
    }

    /// Two-sided inverse of `a`.
    pub fn inverse(&self, a: usize) -> usize {
        debug_assert!(a < self.inner.order);
        self.inner.inverses[a]
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// Element index carrying the given label, if any.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.inner.label_to_index.get(label).copied()
    }

    /// Build a set from element labels, failing on the first unknown label.
    pub fn set_from_labels<I, S>(&self, labels: I) -> Result<ElementSet, GroupError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = ElementSet::EMPTY;
        for label in labels {
            let label = label.as_ref();
            match self.element_by_label(label) {
                Some(index) => set.insert(index),
                None => return Err(GroupError::UnknownLabel(label.to_string())),
            }
        }
        Ok(set)
    }

    /// Render a set as `{label, label, ...}` in ascending index order.
    pub fn format_set(&self, set: ElementSet) -> String {
        let mut out = String::from("{");
        for (pos, index) in set.iter().enumerate() {
            if pos > 0 {
                out.push_str(", ");
            }
            out.push_str(self.label(index));
        }
        out.push('}');
        out
    }

    /// The set of all elements.
    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.inner.order)
    }

    /// True iff both groups have the same order and operation table.
    ///
    /// Labels are ignored: structure, not presentation, decides whether two
    /// graphs or sets live over "the same" group.
    pub fn same_structure(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.order == other.inner.order && self.inner.table == other.inner.table)
    }

    /// Pointwise product set `{a * b : a in lhs, b in rhs}`.
    pub fn product_set(&self, lhs: ElementSet, rhs: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for a in lhs.iter() {
            for b in rhs.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Pointwise inverse set `{a^-1 : a in set}`.
    pub fn inverse_set(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|a| self.inverse(a)).collect()
    }

    /// Conjugate set `a * set * a^-1`.
    pub fn conjugate_set(&self, a: usize, set: ElementSet) -> ElementSet {
        let inv = self.inverse(a);
        set.iter()
            .map(|x| self.mul(self.mul(a, x), inv))
            .collect()
    }

    /// Subgroup generated by `seed`: the least subgroup containing it.
    ///
    /// The empty seed generates the trivial subgroup. Closure under products
    /// suffices in a finite group, so the fixpoint loop below also picks up
    /// identity and inverses.
    pub fn generated_subgroup(&self, seed: ElementSet) -> ElementSet {
        let mut current = seed;
        current.insert(self.identity());
        loop {
            let mut next = current;
            for a in current.iter() {
                for b in current.iter() {
                    next.insert(self.mul(a, b));
                }
            }
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// True iff `set` is nonempty and closed under products and inverses.
    pub fn is_subgroup(&self, set: ElementSet) -> bool {
        if set.is_empty() {
            return false;
        }
        for a in set.iter() {
            if !set.contains(self.inverse(a)) {
                return false;
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `set` is a subgroup fixed by conjugation with every element.
    pub fn is_normal(&self, set: ElementSet) -> bool {
        self.is_subgroup(set)
            && (0..self.order()).all(|a| self.conjugate_set(a, set) == set)
    }

    /// Every subgroup, sorted by size and then lexicographically by members.
    ///
    /// Enumeration walks the subgroup lattice breadth-first: each known
    /// subgroup is extended by every outside element and closed, which
    /// reaches all subgroups without touching the full powerset.
    pub fn subgroups(&self) -> Vec<ElementSet> {
        let trivial = ElementSet::singleton(self.identity());
        let mut known = BTreeSet::new();
        known.insert(trivial);
        let mut frontier = vec![trivial];
        while let Some(subgroup) = frontier.pop() {
            for outside in (subgroup.complement_in(self.order())).iter() {
                let mut seed = subgroup;
                seed.insert(outside);
                let extended = self.generated_subgroup(seed);
                if known.insert(extended) {
                    frontier.push(extended);
                }
            }
        }
        let mut out: Vec<ElementSet> = known.into_iter().collect();
        out.sort_by(ElementSet::cmp_by_size_then_members);
        out
    }

    /// Every normal subgroup (always including the trivial subgroup and the
    /// whole group), in the same presentation order as [`Self::subgroups`].
    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        self.subgroups()
            .into_iter()
            .filter(|&subgroup| (0..self.order()).all(|a| self.conjugate_set(a, subgroup) == subgroup))
            .collect()
    }

    /// Left coset `x * N` of a normal subgroup `N`.
    pub fn left_coset(&self, x: usize, n: ElementSet) -> Result<ElementSet, GroupError> {
        if x >= self.order() {
            return Err(GroupError::ElementOutOfRange {
                index: x,
                order: self.order(),
            });
        }
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        Ok(self.coset_unchecked(x, n))
    }

    /// Left coset without the normality check (callers guarantee it).
    pub(crate) fn coset_unchecked(&self, x: usize, n: ElementSet) -> ElementSet {
        n.iter().map(|m| self.mul(x, m)).collect()
    }

    /// Partition of the group into left cosets of `n`, in order of each
    /// coset's least member. `n` must be a subgroup.
    pub fn coset_partition(&self, n: ElementSet) -> Result<Vec<ElementSet>, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        Ok(self.coset_partition_unchecked(n))
    }

    pub(crate) fn coset_partition_unchecked(&self, n: ElementSet) -> Vec<ElementSet> {
        let mut seen = ElementSet::EMPTY;
        let mut blocks = Vec::with_capacity(self.order() / n.len().max(1));
        for x in 0..self.order() {
            if !seen.contains(x) {
                let coset = self.coset_unchecked(x, n);
                seen |= coset;
                blocks.push(coset);
            }
        }
        blocks
    }

    /// Partition of the group into double cosets `H g H` of a subgroup `H`,
    /// in order of each block's least member.
    pub fn double_cosets(&self, h: ElementSet) -> Vec<ElementSet> {
        debug_assert!(self.is_subgroup(h));
        let mut seen = ElementSet::EMPTY;
        let mut blocks = Vec::new();
        for g in 0..self.order() {
            if !seen.contains(g) {
                let right = self.product_set(ElementSet::singleton(g), h);
                let block = self.product_set(h, right);
                seen |= block;
                blocks.push(block);
            }
        }
        blocks
    }
}

fn check_order(order: usize) -> Result<(), GroupError> {
    if order == 0 {
        Err(GroupError::InvalidOrder)
    } else if order > MAX_ORDER {
        Err(GroupError::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

fn rotation_label(i: usize, reflected: bool) -> String {
    match (i, reflected) {
        (0, false) => "1".to_string(),
        (1, false) => "P".to_string(),
        (_, false) => format!("P{i}"),
        (0, true) => "e".to_string(),
        (1, true) => "Pe".to_string(),
        (_, true) => format!("P{i}e"),
    }
}

/// Check every group axiom on a flat table. Used eagerly by
/// [`FiniteGroup::from_table`]; the named families are exercised against this
/// in tests instead of paying the `O(n^3)` sweep on every construction.
fn validate_axioms(order: usize, table: &[usize]) -> Result<(), GroupError> {
    // Latin square: every row and column is a permutation.
    for index in 0..order {
        let mut row_seen = 0u64;
        let mut col_seen = 0u64;
        for j in 0..order {
            let row_value = table[index * order + j];
            if row_seen & (1 << row_value) != 0 {
                return Err(GroupError::RepeatedInRow {
                    index,
                    value: row_value,
                });
            }
            row_seen |= 1 << row_value;
            let col_value = table[j * order + index];
            if col_seen & (1 << col_value) != 0 {
                return Err(GroupError::RepeatedInColumn {
                    index,
                    value: col_value,
                });
            }
            col_seen |= 1 << col_value;
        }
    }
    let identity = (0..order)
        .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
        .ok_or(GroupError::NoIdentity)?;
    for a in 0..order {
        let two_sided = (0..order)
            .any(|b| table[a * order + b] == identity && table[b * order + a] == identity);
        if !two_sided {
            return Err(GroupError::NoInverse(a));
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = table[a * order + b];
            for c in 0..order {
                if table[ab * order + c] != table[a * order + table[b * order + c]] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(indices: &[usize]) -> ElementSet {
        indices.iter().copied().collect()
    }

    /// Exhaustive axiom check for constructor outputs, reusing the same
    /// validator that guards `from_table`.
    fn assert_axioms(group: &FiniteGroup) {
        validate_axioms(group.order(), &group.inner.table).expect("group axioms");
    }

    #[test]
    fn cyclic_families_satisfy_axioms_up_to_max_order() {
        for n in 1..=MAX_ORDER {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.identity(), 0);
            assert_axioms(&g);
        }
    }

    #[test]
    fn dihedral_families_satisfy_axioms_up_to_max_order() {
        for n in 1..=MAX_ORDER / 2 {
            let g = FiniteGroup::dihedral(n).unwrap();
            assert_eq!(g.order(), 2 * n);
            assert_axioms(&g);
        }
    }

    #[test]
    fn order_bounds_are_enforced() {
        assert_eq!(FiniteGroup::cyclic(0).unwrap_err(), GroupError::InvalidOrder);
        assert_eq!(
            FiniteGroup::cyclic(MAX_ORDER + 1).unwrap_err(),
            GroupError::OrderTooLarge(MAX_ORDER + 1)
        );
        assert_eq!(FiniteGroup::dihedral(0).unwrap_err(), GroupError::InvalidOrder);
        assert_eq!(
            FiniteGroup::dihedral(MAX_ORDER / 2 + 1).unwrap_err(),
            GroupError::OrderTooLarge(MAX_ORDER + 2)
        );
    }

    #[test]
    fn cyclic_inverse_matches_brute_force_scan() {
        let g = FiniteGroup::cyclic(8).unwrap();
        // Oracle: scan the row for the unique two-sided inverse.
        let scanned = (0..8)
            .find(|&b| g.mul(3, b) == g.identity() && g.mul(b, 3) == g.identity())
            .unwrap();
        assert_eq!(scanned, 5);
        assert_eq!(g.inverse(3), 5);
        for a in 0..8 {
            assert_eq!(g.inverse(a), (8 - a) % 8);
        }
    }

    /// Faithful permutation model of the dihedral group for n >= 3: the
    /// rotation P maps vertex v to v+1 and the reflection e maps v to -v.
    /// Composing permutations must reproduce the operation table exactly.
    #[test]
    fn dihedral_table_matches_permutation_representation() {
        for n in 3..=8usize {
            let g = FiniteGroup::dihedral(n).unwrap();
            let perm = |index: usize| -> Vec<usize> {
                let (i, f) = (index % n, index / n);
                (0..n)
                    .map(|v| if f == 0 { (i + v) % n } else { (i + n - v) % n })
                    .collect()
            };
            let to_index = |p: &[usize]| -> usize {
                let i = p[0];
                let rotated = p[1] == (i + 1) % n;
                if rotated {
                    i
                } else {
                    n + i
                }
            };
            for a in 0..2 * n {
                for b in 0..2 * n {
                    let (pa, pb) = (perm(a), perm(b));
                    let composed: Vec<usize> = (0..n).map(|v| pa[pb[v]]).collect();
                    assert_eq!(
                        g.mul(a, b),
                        to_index(&composed),
                        "permutation oracle disagrees at n={n}, a={a}, b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn dihedral_relations_hold() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let p = g.element_by_label("P").unwrap();
        let e = g.element_by_label("e").unwrap();
        let p3e = g.element_by_label("P3e").unwrap();
        // eP = P^3 e and (Pe)^2 = 1.
        assert_eq!(g.mul(e, p), p3e);
        let pe = g.element_by_label("Pe").unwrap();
        assert_eq!(g.mul(pe, pe), g.identity());
        // Reflections are involutions; rotation inverses wrap around.
        for i in 0..4 {
            assert_eq!(g.mul(4 + i, 4 + i), 0);
            assert_eq!(g.inverse(i), (4 - i) % 4);
        }
    }

    #[test]
    fn dihedral_labels_follow_the_ascii_convention() {
        let g = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(
            g.labels(),
            &["1", "P", "P2", "P3", "e", "Pe", "P2e", "P3e"]
        );
        let tiny = FiniteGroup::dihedral(1).unwrap();
        assert_eq!(tiny.labels(), &["1", "e"]);
    }

    #[test]
    fn from_table_accepts_the_klein_four_group() {
        let table = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let labels = vec!["1".into(), "a".into(), "b".into(), "ab".into()];
        let g = FiniteGroup::from_table(table, Some(labels)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.identity(), 0);
        for a in 0..4 {
            assert_eq!(g.inverse(a), a);
        }
    }

    #[test]
    fn from_table_rejects_broken_tables_with_witnesses() {
        // Column 0 repeats element 0.
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]], None).unwrap_err();
        assert_eq!(err, GroupError::RepeatedInColumn { index: 0, value: 0 });

        // Row 1 repeats element 1 (columns are fine in a symmetric swap).
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, GroupError::RepeatedInRow { index: 1, value: 1 });

        // Latin square without an identity.
        let err = FiniteGroup::from_table(
            vec![vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1]],
            None,
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);

        // Ragged table.
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1]], None).unwrap_err();
        assert_eq!(
            err,
            GroupError::NotSquare {
                row: 1,
                len: 1,
                order: 2
            }
        );

        // Entry out of range.
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]], None).unwrap_err();
        assert_eq!(
            err,
            GroupError::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            }
        );

        // A Latin square with identity and inverses that is not associative:
        // the smallest examples live at order 5.
        let err = FiniteGroup::from_table(
            vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 4, 0, 1, 3],
                vec![3, 2, 4, 0, 1],
                vec![4, 3, 1, 2, 0],
            ],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn from_table_rejects_bad_labels() {
        let table = vec![vec![0, 1], vec![1, 0]];
        let err = FiniteGroup::from_table(table.clone(), Some(vec!["x".into()])).unwrap_err();
        assert_eq!(err, GroupError::LabelCountMismatch { got: 1, order: 2 });
        let err =
            FiniteGroup::from_table(table, Some(vec!["x".into(), "x".into()])).unwrap_err();
        assert_eq!(err, GroupError::DuplicateLabel("x".into()));
    }

    #[test]
    fn generated_subgroup_matches_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        // Oracle: multiples of 2 modulo 8.
        let multiples: ElementSet = (0..8).map(|k| (2 * k) % 8).collect();
        assert_eq!(z8.generated_subgroup(set(&[2, 6])), multiples);
        assert_eq!(z8.generated_subgroup(set(&[2, 6])), set(&[0, 2, 4, 6]));
        assert_eq!(z8.generated_subgroup(set(&[1])), z8.all());
        assert_eq!(z8.generated_subgroup(ElementSet::EMPTY), set(&[0]));
    }

    #[test]
    fn subgroup_and_normality_checks_match_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(z8.is_subgroup(set(&[0, 4])));
        assert!(!z8.is_subgroup(set(&[1, 2])));
        assert!(!z8.is_subgroup(ElementSet::EMPTY));

        let d4 = FiniteGroup::dihedral(4).unwrap();
        let center = d4.set_from_labels(["1", "P2"]).unwrap();
        assert!(d4.is_normal(center));

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let reflection = d3.set_from_labels(["1", "e"]).unwrap();
        assert!(d3.is_subgroup(reflection));
        // Conjugating e by P lands on P2e, so {1, e} is not normal.
        let p = d3.element_by_label("P").unwrap();
        let conjugated = d3.conjugate_set(p, reflection);
        assert_eq!(d3.format_set(conjugated), "{1, P2e}");
        assert!(!d3.is_normal(reflection));
    }

    #[test]
    fn normal_subgroup_enumeration_matches_divisor_oracle_on_cyclic_groups() {
        // Oracle: subgroups of a cyclic group are exactly the divisor
        // subgroups <d> for d | n, and all of them are normal.
        for n in 1..=12usize {
            let g = FiniteGroup::cyclic(n).unwrap();
            let mut expected: Vec<ElementSet> = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| (0..n / d).map(|k| k * d).collect())
                .collect();
            expected.sort_by(ElementSet::cmp_by_size_then_members);
            assert_eq!(g.normal_subgroups(), expected, "n={n}");
            assert_eq!(g.subgroups(), expected, "n={n}");
        }
    }

    #[test]
    fn normal_subgroups_of_z8_and_d3_match_known_lists() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(
            z8.normal_subgroups(),
            vec![set(&[0]), set(&[0, 4]), set(&[0, 2, 4, 6]), z8.all()]
        );

        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(
            d3.normal_subgroups(),
            vec![set(&[0]), set(&[0, 1, 2]), d3.all()]
        );
        // D3 has more subgroups than normal subgroups: three reflection
        // subgroups of order 2 are not normal.
        assert_eq!(d3.subgroups().len(), 6);
    }

    #[test]
    fn normal_subgroups_are_closed_under_intersection() {
        for g in [
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
        ] {
            let normals = g.normal_subgroups();
            for &a in &normals {
                assert!(g.is_normal(a));
                for &b in &normals {
                    assert!(normals.contains(&(a & b)));
                }
            }
        }
    }

    #[test]
    fn left_cosets_match_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(z8.left_coset(1, set(&[0, 4])).unwrap(), set(&[1, 5]));

        let d4 = FiniteGroup::dihedral(4).unwrap();
        let center = d4.set_from_labels(["1", "P2"]).unwrap();
        let p = d4.element_by_label("P").unwrap();
        let coset = d4.left_coset(p, center).unwrap();
        assert_eq!(d4.format_set(coset), "{P, P3}");

        // Identity coset is the subgroup itself.
        assert_eq!(z8.left_coset(0, set(&[0, 4])).unwrap(), set(&[0, 4]));

        // Non-normal modulus is a precondition error.
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let reflection = d3.set_from_labels(["1", "e"]).unwrap();
        assert_eq!(d3.left_coset(1, reflection).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn coset_partition_blocks_cover_the_group() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let center = d4.set_from_labels(["1", "P2"]).unwrap();
        let blocks = d4.coset_partition(center).unwrap();
        assert_eq!(blocks.len(), 4);
        let mut union = ElementSet::EMPTY;
        for block in &blocks {
            assert_eq!(block.len(), 2);
            assert!(!union.intersects(*block));
            union |= *block;
        }
        assert_eq!(union, d4.all());
    }

    #[test]
    fn double_cosets_partition_the_group() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let h = d4.set_from_labels(["1", "e"]).unwrap();
        let blocks = d4.double_cosets(h);
        let mut union = ElementSet::EMPTY;
        for block in &blocks {
            assert!(!union.intersects(*block));
            union |= *block;
        }
        assert_eq!(union, d4.all());
        // H itself is the double coset of the identity.
        assert!(blocks.contains(&h));
    }

    #[test]
    fn labels_resolve_and_reject_unknowns() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(
            d4.set_from_labels(["P", "P3"]).unwrap(),
            set(&[1, 3])
        );
        assert_eq!(
            d4.set_from_labels(["Q"]).unwrap_err(),
            GroupError::UnknownLabel("Q".into())
        );
        assert_eq!(d4.format_set(ElementSet::EMPTY), "{}");
    }

    #[test]
    fn element_set_ordering_is_size_then_lexicographic() {
        let a = set(&[0, 1, 2, 3]);
        let b = set(&[0, 2, 4, 6]);
        assert_eq!(a.cmp_by_size_then_members(&b), Ordering::Less);
        assert_eq!(
            set(&[0, 3]).cmp_by_size_then_members(&set(&[1, 2])),
            Ordering::Less
        );
        assert_eq!(
            set(&[4]).cmp_by_size_then_members(&set(&[0, 1])),
            Ordering::Less
        );
    }

    #[test]
    fn same_structure_ignores_labels_but_not_tables() {
        let a = FiniteGroup::cyclic(4).unwrap();
        let b = FiniteGroup::from_table(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 0],
                vec![2, 3, 0, 1],
                vec![3, 0, 1, 2],
            ],
            Some(vec!["e".into(), "g".into(), "g2".into(), "g3".into()]),
        )
        .unwrap();
        assert!(a.same_structure(&b));
        let c = FiniteGroup::dihedral(2).unwrap();
        assert!(!a.same_structure(&c));
    }
}
