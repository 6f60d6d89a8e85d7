//! Lower and upper approximations of group subsets modulo a normal subgroup.
//!
//! The cosets of a normal subgroup `N` partition the group and act as the
//! granules of approximation: the lower approximation of `A` collects the
//! cosets lying entirely inside `A` ("definitely in"), the upper
//! approximation collects the cosets meeting `A` ("possibly in").
//!
//! The public operators require `N` normal and `A` nonempty; the theory the
//! laws in [`crate::laws`] exercise is stated under those hypotheses. Set
//! compositions inside this crate occasionally produce legitimately empty
//! operands (an intersection of disjoint sets, say), so a relaxed
//! crate-internal variant maps the empty set to empty approximations.

use thiserror::Error;

use crate::group::{ElementSet, FiniteGroup};

/// Errors raised by the approximation operators.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApproxError {
    /// The modulus is not a normal subgroup of the group.
    #[error("modulus is not a normal subgroup")]
    NotNormal,
    /// The set being approximated is empty.
    #[error("cannot approximate the empty set")]
    EmptySet,
    /// A set contains indices outside the group.
    #[error("set contains element indices outside the group (order {order})")]
    OutOfRange { order: usize },
}

/// The pair of approximations of one set with respect to one modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoughPair {
    /// Union of the cosets of `modulus` contained in the approximated set.
    pub lower: ElementSet,
    /// Union of the cosets of `modulus` meeting the approximated set.
    pub upper: ElementSet,
    /// The normal subgroup whose cosets granulate the group.
    pub modulus: ElementSet,
}

/// Subgroup/normality verdicts for both approximations of a set.
///
/// When the lower approximation is empty, its subgroup and normality flags
/// are reported as `false` (an empty lower approximation is a meaningful
/// outcome, not an error).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoughSubgroupClassification {
    pub upper_is_subgroup: bool,
    pub upper_is_normal: bool,
    pub lower_is_subgroup: bool,
    pub lower_is_normal: bool,
    pub lower_nonempty: bool,
}

fn check_inputs(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<(), ApproxError> {
    let all = group.all();
    if !modulus.is_subset_of(all) || !set.is_subset_of(all) {
        return Err(ApproxError::OutOfRange {
            order: group.order(),
        });
    }
    if !group.is_normal(modulus) {
        return Err(ApproxError::NotNormal);
    }
    if set.is_empty() {
        return Err(ApproxError::EmptySet);
    }
    Ok(())
}

/// Both approximations in one sweep over the coset partition.
///
/// Callers guarantee that `modulus` is a normal subgroup; the empty `set` is
/// allowed here and yields empty approximations.
pub(crate) fn approx_unchecked(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> (ElementSet, ElementSet) {
    let mut lower = ElementSet::EMPTY;
    let mut upper = ElementSet::EMPTY;
    let mut seen = ElementSet::EMPTY;
    for x in 0..group.order() {
        if !seen.contains(x) {
            let coset = group.coset_unchecked(x, modulus);
            seen |= coset;
            if coset.is_subset_of(set) {
                lower |= coset;
            }
            if coset.intersects(set) {
                upper |= coset;
            }
        }
    }
    (lower, upper)
}

/// Elements whose whole coset modulo `modulus` lies inside `set`.
pub fn lower_approx(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<ElementSet, ApproxError> {
    check_inputs(group, modulus, set)?;
    Ok(approx_unchecked(group, modulus, set).0)
}

/// Elements whose coset modulo `modulus` meets `set`.
pub fn upper_approx(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<ElementSet, ApproxError> {
    check_inputs(group, modulus, set)?;
    Ok(approx_unchecked(group, modulus, set).1)
}

/// Both approximations of `set` with respect to `modulus`.
pub fn rough_pair(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<RoughPair, ApproxError> {
    check_inputs(group, modulus, set)?;
    let (lower, upper) = approx_unchecked(group, modulus, set);
    Ok(RoughPair {
        lower,
        upper,
        modulus,
    })
}

/// True iff both approximations coincide — equivalently, `set` is a union of
/// cosets of `modulus`.
pub fn is_definable(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<bool, ApproxError> {
    let pair = rough_pair(group, modulus, set)?;
    Ok(pair.lower == pair.upper)
}

/// Evaluate the subgroup and normality predicates on both approximations.
pub fn classify_rough_subgroup(
    group: &FiniteGroup,
    modulus: ElementSet,
    set: ElementSet,
) -> Result<RoughSubgroupClassification, ApproxError> {
    let pair = rough_pair(group, modulus, set)?;
    let lower_nonempty = !pair.lower.is_empty();
    Ok(RoughSubgroupClassification {
        upper_is_subgroup: group.is_subgroup(pair.upper),
        upper_is_normal: group.is_normal(pair.upper),
        lower_is_subgroup: lower_nonempty && group.is_subgroup(pair.lower),
        lower_is_normal: lower_nonempty && group.is_normal(pair.lower),
        lower_nonempty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(indices: &[usize]) -> ElementSet {
        indices.iter().copied().collect()
    }

    #[test]
    fn approximations_on_z8_match_known_values() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let n = set(&[0, 4]);
        let a = set(&[1, 2, 6, 7]);
        assert_eq!(lower_approx(&z8, n, a).unwrap(), set(&[2, 6]));
        assert_eq!(upper_approx(&z8, n, a).unwrap(), set(&[1, 2, 3, 5, 6, 7]));
        let pair = rough_pair(&z8, n, a).unwrap();
        assert_eq!(pair.lower, set(&[2, 6]));
        assert_eq!(pair.upper, set(&[1, 2, 3, 5, 6, 7]));
        assert_eq!(pair.modulus, n);
    }

    #[test]
    fn coarse_modulus_blows_a_small_set_up_to_the_whole_group() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let pair = rough_pair(&z8, set(&[0, 2, 4, 6]), set(&[1, 2])).unwrap();
        assert_eq!(pair.lower, ElementSet::EMPTY);
        assert_eq!(pair.upper, z8.all());
    }

    #[test]
    fn trivial_modulus_approximates_every_set_by_itself() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let identity_only = ElementSet::singleton(d4.identity());
        for a in [set(&[1, 5]), set(&[0, 2, 4]), d4.all()] {
            let pair = rough_pair(&d4, identity_only, a).unwrap();
            assert_eq!((pair.lower, pair.upper), (a, a));
        }
    }

    #[test]
    fn whole_group_modulus_gives_the_group_as_upper_approximation() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let pair = rough_pair(&z8, z8.all(), set(&[3])).unwrap();
        assert_eq!(pair.lower, ElementSet::EMPTY);
        assert_eq!(pair.upper, z8.all());
    }

    #[test]
    fn dihedral_vertex_configuration_approximates_as_expected() {
        // D4 with modulus {1, P2}: the six-element set missing {1, e} has
        // lower approximation {P, P3, Pe, P3e} and upper approximation G.
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let n = d4.set_from_labels(["1", "P2"]).unwrap();
        let r = d4
            .set_from_labels(["P", "P2", "P3", "Pe", "P2e", "P3e"])
            .unwrap();
        let pair = rough_pair(&d4, n, r).unwrap();
        assert_eq!(pair.lower, d4.set_from_labels(["P", "P3", "Pe", "P3e"]).unwrap());
        assert_eq!(pair.upper, d4.all());
    }

    #[test]
    fn dihedral_connection_set_approximations_match_known_values() {
        // Same modulus, approximating {e}: the lower side is empty and the
        // upper side is the whole coset {e, P2e}.
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let n = d4.set_from_labels(["1", "P2"]).unwrap();
        let s = d4.set_from_labels(["e"]).unwrap();
        let pair = rough_pair(&d4, n, s).unwrap();
        assert_eq!(pair.lower, ElementSet::EMPTY);
        assert_eq!(pair.upper, d4.set_from_labels(["e", "P2e"]).unwrap());
    }

    #[test]
    fn preconditions_are_enforced() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(
            rough_pair(&z8, set(&[0, 4]), ElementSet::EMPTY).unwrap_err(),
            ApproxError::EmptySet
        );
        assert_eq!(
            rough_pair(&z8, set(&[1, 2]), set(&[1])).unwrap_err(),
            ApproxError::NotNormal
        );
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let reflection = d3.set_from_labels(["1", "e"]).unwrap();
        assert_eq!(
            rough_pair(&d3, reflection, set(&[1])).unwrap_err(),
            ApproxError::NotNormal
        );
        assert_eq!(
            rough_pair(&z8, set(&[0, 4]), ElementSet::from_bits(1 << 20)).unwrap_err(),
            ApproxError::OutOfRange { order: 8 }
        );
    }

    #[test]
    fn relaxed_variant_maps_empty_sets_to_empty_approximations() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(
            approx_unchecked(&z8, set(&[0, 4]), ElementSet::EMPTY),
            (ElementSet::EMPTY, ElementSet::EMPTY)
        );
    }

    #[test]
    fn definability_matches_coset_union_structure() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(is_definable(&z8, set(&[0, 4]), set(&[2, 6])).unwrap());
        assert!(!is_definable(&z8, set(&[0, 4]), set(&[1, 2, 6, 7])).unwrap());

        // The trivial modulus makes every nonempty set definable.
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let r = d4
            .set_from_labels(["P", "P2", "P3", "Pe", "P2e", "P3e"])
            .unwrap();
        assert!(is_definable(&d4, ElementSet::singleton(0), r).unwrap());
    }

    #[test]
    fn approximations_are_coset_saturated_and_idempotent() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let n = d4.set_from_labels(["1", "P2"]).unwrap();
        let a = d4.set_from_labels(["P", "P2", "P3", "Pe"]).unwrap();
        let pair = rough_pair(&d4, n, a).unwrap();
        for approx in [pair.lower, pair.upper] {
            for x in approx.iter() {
                assert!(d4.coset_unchecked(x, n).is_subset_of(approx));
            }
        }
        assert_eq!(approx_unchecked(&d4, n, pair.lower).0, pair.lower);
        assert_eq!(approx_unchecked(&d4, n, pair.upper).1, pair.upper);
    }

    #[test]
    fn classification_matches_direct_subgroup_checks() {
        let z8 = FiniteGroup::cyclic(8).unwrap();

        let verdict = classify_rough_subgroup(&z8, set(&[0, 4]), set(&[0, 2, 4, 6])).unwrap();
        assert!(verdict.upper_is_subgroup && verdict.upper_is_normal);
        assert!(verdict.lower_is_subgroup && verdict.lower_is_normal);
        assert!(verdict.lower_nonempty);

        let verdict = classify_rough_subgroup(&z8, set(&[0, 2, 4, 6]), set(&[0, 4])).unwrap();
        assert!(verdict.upper_is_subgroup);
        assert!(!verdict.lower_is_subgroup && !verdict.lower_is_normal);
        assert!(!verdict.lower_nonempty);

        // Trivial modulus on a normal subgroup: every flag true.
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let center = d4.set_from_labels(["1", "P2"]).unwrap();
        let verdict =
            classify_rough_subgroup(&d4, ElementSet::singleton(0), center).unwrap();
        assert!(
            verdict.upper_is_subgroup
                && verdict.upper_is_normal
                && verdict.lower_is_subgroup
                && verdict.lower_is_normal
        );
    }

    /// Closure facts the graph layers lean on: approximations of a set that
    /// is closed on both sides under a connection set are again closed.
    #[test]
    fn approximations_preserve_two_sided_closure() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let n = d4.set_from_labels(["1", "P2"]).unwrap();
        let s = d4.set_from_labels(["e"]).unwrap();
        let r = d4
            .set_from_labels(["P", "P2", "P3", "Pe", "P2e", "P3e"])
            .unwrap();
        assert!(d4.product_set(s, r).is_subset_of(r));
        assert!(d4.product_set(r, s).is_subset_of(r));
        let (lower, upper) = approx_unchecked(&d4, n, r);
        for side in [lower, upper] {
            assert!(d4.product_set(s, side).is_subset_of(side));
            assert!(d4.product_set(side, s).is_subset_of(side));
        }
    }
}
