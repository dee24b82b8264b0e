//! The fixed list of groups the test suites and examples sweep over.

use crate::group::GroupSpec;

/// Catalog groups, all of order ≤ 27.
pub const CATALOG: [GroupSpec; 9] = [
    GroupSpec::Cyclic(2),
    GroupSpec::Cyclic(3),
    GroupSpec::Cyclic(4),
    GroupSpec::Cyclic(6),
    GroupSpec::Klein4,
    GroupSpec::Symmetric(3),
    GroupSpec::Dihedral(4),
    GroupSpec::Symmetric(4),
    GroupSpec::Heisenberg(3),
];

/// Catalog groups of order at most `max_order`.
pub fn catalog_up_to(max_order: usize) -> Vec<GroupSpec> {
    CATALOG.iter().copied().filter(|s| s.order().is_some_and(|n| n <= max_order)).collect()
}
