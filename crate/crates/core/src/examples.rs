//! Small named posets used throughout the tests and the CLI smoke checks.

use crate::poset::Poset;

/// Eleven elements in three Hasse components:
/// `x1<x2<x5`, `x1<x4<x5`, `x3<x5`; `x6<x9<x11`, `x7<x9`; `x8<x10<x11`.
pub fn q11() -> Poset {
    Poset::new(
        11,
        [
            (1, 2),
            (1, 4),
            (2, 5),
            (4, 5),
            (3, 5),
            (6, 9),
            (7, 9),
            (9, 11),
            (8, 10),
            (10, 11),
        ],
    )
    .expect("q11 is acyclic")
}

/// `x1 < x3` with `x2` isolated.
pub fn q3() -> Poset {
    Poset::new(3, [(1, 3)]).expect("q3 is acyclic")
}

/// Covers `x1<x3`, `x2<x4`, `x3<x5`, `x4<x5`, `x5<x6`.
pub fn q6() -> Poset {
    Poset::new(6, [(1, 3), (2, 4), (3, 5), (4, 5), (5, 6)]).expect("q6 is acyclic")
}
