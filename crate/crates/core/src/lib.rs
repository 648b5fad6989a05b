pub mod asd;
pub mod error;
pub mod exact;
pub mod frobchar;
pub mod newform;
pub mod qmstruct;
pub mod qseries;
pub mod surface;
pub mod util;

pub use error::{Error, Result};
pub use exact::{CycloElem, CycloTowerElem, Poly, Rational};
pub use qseries::{EtaQuotientSpec, QSeries};
