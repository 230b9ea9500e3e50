//! Named extensions `g < h` used by the CLI, the tests and the benches.

use crate::error::{Error, Result};
use crate::lie::catalog;
use crate::linalg::{Field, Subspace};
use crate::products::Extension;

/// Names accepted by [`extension`].
pub const EXTENSION_NAMES: &[&str] = &[
    "aff2/ke1",
    "sl2/ke3",
    "h5/h3",
    "l5/l3",
    "t4/h3",
    "b4/h3",
    "fivedim",
    "gl2/sl2",
    "glkn2/gl2",
    "glkn2/derived",
    "hol_sl2/sl2",
    "h3/kw",
    "ab2/ke1",
    "sl2/sl2",
];

/// Builds a named extension over `field`.
pub fn extension(name: &str, field: Field) -> Result<Extension> {
    let coord = |dim: usize, idx: &[usize]| Subspace::coordinate(field, dim, idx);
    match name {
        "aff2/ke1" => Extension::new(catalog::aff2(field)?, coord(2, &[0])?),
        "sl2/ke3" => Extension::new(catalog::sl(field, 2)?, coord(3, &[2])?),
        "h5/h3" => Extension::new(catalog::heisenberg(field, 2)?, coord(5, &catalog::nested_indices(2))?),
        "l5/l3" => Extension::new(catalog::l(field, 2)?, coord(5, &catalog::nested_indices(2))?),
        "t4/h3" => Extension::new(catalog::t(field, 1)?, catalog::leading(field, 4, 3)),
        "b4/h3" => Extension::new(catalog::b(field, 1)?, catalog::leading(field, 4, 3)),
        "fivedim" => Extension::new(catalog::fivedim_extended(field)?, catalog::leading(field, 6, 5)),
        "gl2/sl2" => {
            let sl = Subspace::span(field, 4, &catalog::sl_basis_in_gl(field, 2))?;
            Extension::new(catalog::gl(field, 2)?, sl)
        }
        "glkn2/gl2" => Extension::new(catalog::gl_kn(field, 2)?, catalog::leading(field, 6, 4)),
        "glkn2/derived" => {
            let h = catalog::gl_kn(field, 2)?;
            let derived = h.derived_subalgebra();
            Extension::new(h, derived)
        }
        "hol_sl2/sl2" => {
            let h = catalog::holomorph(&catalog::sl(field, 2)?)?;
            let dim = h.dim();
            Extension::new(h, catalog::leading(field, dim, 3))
        }
        "h3/kw" => Extension::new(catalog::heisenberg(field, 1)?, coord(3, &[2])?),
        "ab2/ke1" => Extension::new(catalog::abelian(field, 2)?, coord(2, &[0])?),
        "sl2/sl2" => Extension::new(catalog::sl(field, 2)?, Subspace::full(field, 3)),
        _ => Err(Error::InvalidParameter(format!(
            "unknown extension {name:?}; known: {}",
            EXTENSION_NAMES.join(", ")
        ))),
    }
}

/// Every named extension over `field`.
pub fn all(field: Field) -> Result<Vec<(&'static str, Extension)>> {
    EXTENSION_NAMES
        .iter()
        .map(|&name| Ok((name, extension(name, field)?)))
        .collect()
}
