//! Exact enumeration of deepest nodes in marked ordered trees.
//!
//! A marked ordered tree is a plane tree in which the rightmost edge at a
//! node may carry a mark, but only when the child it leads to is not a leaf.
//! These trees are counted by OEIS A002212 and are in bijection with skew
//! Dyck paths.
//!
//! The crate provides:
//!
//! * [`series`] — truncated power series over arbitrary-precision rationals,
//!   univariate in `z` and bivariate in `(z, t)`;
//! * [`trees`] — the tree type, exhaustive enumeration by size, statistics
//!   and a canonical text encoding;
//! * [`paths`] — decorated and skew Dyck paths with the size-preserving
//!   bijections from trees;
//! * [`genfun`] — every generating function of the enumeration computed by
//!   at least two independent routes, plus an exact identity suite;
//! * [`asymptotics`] — exact ratio tables converging to 5/3 and a
//!   floating-point confirmation of the local expansion at `v = 1`.

pub mod asymptotics;
pub mod genfun;
pub mod paths;
pub mod series;
pub mod trees;
