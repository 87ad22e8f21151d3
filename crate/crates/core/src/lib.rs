//! Weighted prefix normal words.
//!
//! A weight measure maps each letter to a value in an ordered commutative
//! monoid. A word is prefix normal under the measure when, for every length,
//! its prefix is at least as heavy as any factor of that length. This crate
//! computes the factor and prefix weight profiles, prefix normal forms and
//! their equivalence classes, decides whether a measure is gapfree, and
//! ships brute-force oracles and seeded sweeps that check all of it.
//!
//! ```
//! use wpn_core::{prefix_normal_form, MonoidKind, NormalFormResult, WeightMeasure};
//!
//! let m = WeightMeasure::naturals("abc", MonoidKind::NatSum, &[1, 2, 3]).unwrap();
//! let w = m.alphabet().parse_word("bcac").unwrap();
//! let NormalFormResult::Unique(form) = prefix_normal_form(&m, &w) else { unreachable!() };
//! assert_eq!(m.alphabet().render(&form), "cbbb");
//! ```

pub mod error;
pub mod measure;
pub mod monoid;
pub mod normal_form;
pub mod oracle;
pub mod profile;
pub mod word;

pub use error::{Error, Result};
pub use measure::{
    classify, decide_gapfree, gap_at, measures_equivalent_bounded, EquivalenceVerdict, GapVerdict,
    MeasureClassification, ProjectedMeasure, WeightMeasure,
};
pub use monoid::{MonoidKind, MonoidValue};
pub use normal_form::{count_pn, equivalence_class, pn_set, prefix_normal_form, NormalFormResult, DEFAULT_LIMIT};
pub use profile::{is_prefix_normal, pn_characterizations, profile, PnCharacterizations, WeightProfile};
pub use word::{Alphabet, Word};
