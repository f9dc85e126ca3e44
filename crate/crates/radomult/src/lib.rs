//! Exact arithmetic for the Rado multiplicity problem in vector spaces over
//! finite fields.
//!
//! The crate enumerates colorings of F_q^n up to t-fixed isomorphism, counts
//! monochromatic solutions of integer linear systems exactly, derives upper
//! bounds from blow-up and product constructions, and generates and verifies
//! flag-algebra sum-of-squares lower-bound certificates — everything in exact
//! rational arithmetic.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `radomult` binary for the batch entry points.

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod field;
pub mod flagcalc;
pub mod linsys;
pub mod sdpgen;
pub mod space;

pub use error::{Error, Result};

use num::BigRational;

/// Parse an exact rational written as `p`, `-p/q`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    use num::BigInt;
    use std::str::FromStr;
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num.trim())
        .map_err(|_| Error::InvalidParameter(format!("bad rational {s:?}")))?;
    let d = BigInt::from_str(den.trim())
        .map_err(|_| Error::InvalidParameter(format!("bad rational {s:?}")))?;
    if d == BigInt::ZERO {
        return Err(Error::InvalidParameter(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Format a rational as `p/q` (or `p` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
