//! The three example systems on the unit square.
//!
//! `R1` is a Sierpiński-like triangle, `R2` a maple leaf, and `R3` a
//! four-map system with shear components. `R1` keeps the square invariant;
//! two maple-leaf maps push corners slightly outside it.

use alloc::vec;

use crate::ifs::{AffineMap2, BlendSystem, Ifs, Rect};

pub fn sierpinski() -> Ifs {
    Ifs::new(
        "R1",
        vec![
            AffineMap2::scale_translate(0.5, 0.0, 0.0),
            AffineMap2::scale_translate(0.5, 0.5, 0.0),
            AffineMap2::scale_translate(0.5, 0.25, 0.5),
        ],
    )
    .expect("contractive")
}

pub fn maple_leaf() -> Ifs {
    Ifs::new(
        "R2",
        vec![
            AffineMap2::new(0.8, 0.0, 0.0, 0.8, 0.1, 0.04),
            AffineMap2::new(0.5, 0.0, 0.0, 0.5, 0.25, 0.4),
            AffineMap2::new(0.355, -0.355, 0.355, 0.355, 0.266, 0.078),
            AffineMap2::new(0.355, 0.355, -0.355, 0.355, 0.378, 0.434),
        ],
    )
    .expect("contractive")
}

pub fn shear_square() -> Ifs {
    Ifs::new(
        "R3",
        vec![
            AffineMap2::new(1.0 / 3.0, 1.0 / 4.0, 1.0 / 12.0, 19.0 / 48.0, 0.0, 0.0),
            AffineMap2::new(1.0 / 3.0, 1.0 / 4.0, -1.0 / 12.0, 13.0 / 48.0, 0.0, 1.0 / 2.0),
            AffineMap2::new(1.0 / 3.0, -1.0 / 4.0, 1.0 / 12.0, 13.0 / 48.0, 1.0 / 2.0, 1.0 / 8.0),
            AffineMap2::new(1.0 / 3.0, -1.0 / 4.0, -1.0 / 12.0, 19.0 / 48.0, 1.0 / 2.0, 3.0 / 8.0),
        ],
    )
    .expect("contractive")
}

/// `{R1, R2}` on `[0,1]²`.
pub fn sierpinski_maple() -> BlendSystem {
    BlendSystem::new(Rect::unit_square(), vec![sierpinski(), maple_leaf()]).expect("nonempty")
}

/// `{R1, R2, R3}` on `[0,1]²`.
pub fn sierpinski_maple_shear() -> BlendSystem {
    BlendSystem::new(Rect::unit_square(), vec![sierpinski(), maple_leaf(), shear_square()]).expect("nonempty")
}
