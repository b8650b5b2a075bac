//! The book chapters, compiled as doc-tests so every snippet in the guide
//! stays runnable against the current API. Render the same sources with
//! `mdbook build book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/numeral-systems.md")]
pub mod numeral_systems {}

#[doc = include_str!("../../../book/src/salem-functions.md")]
pub mod salem_functions {}

#[doc = include_str!("../../../book/src/cylinders.md")]
pub mod cylinders {}

#[doc = include_str!("../../../book/src/covers-and-measure.md")]
pub mod covers_and_measure {}

#[doc = include_str!("../../../book/src/dimension.md")]
pub mod dimension {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
