//! Orders of classical groups and outer automorphism groups of the classical
//! simple groups.
//!
//! `n` is always the dimension of the natural module and `q = p^f` the order
//! of the field of definition (for unitary groups the form lives over
//! `GF(q^2)`).
//!
//! In characteristic 2 the special orthogonal groups are taken to be the
//! groups `Ω` (index 2 in the full isometry group for even dimension), and
//! `SO_{2m+1}(q) = GO_{2m+1}(q) ≅ Sp_{2m}(q)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numth::arith;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classical {
    GL,
    SL,
    PGL,
    PSL,
    GU,
    SU,
    PGU,
    PSU,
    Sp,
    PSp,
    GOPlus,
    GOMinus,
    GOOdd,
    SOPlus,
    SOMinus,
    SOOdd,
    OmegaPlus,
    OmegaMinus,
    OmegaOdd,
    POmegaPlus,
    POmegaMinus,
    POmegaOdd,
}

impl Classical {
    pub const ALL: [Classical; 22] = [
        Classical::GL,
        Classical::SL,
        Classical::PGL,
        Classical::PSL,
        Classical::GU,
        Classical::SU,
        Classical::PGU,
        Classical::PSU,
        Classical::Sp,
        Classical::PSp,
        Classical::GOPlus,
        Classical::GOMinus,
        Classical::GOOdd,
        Classical::SOPlus,
        Classical::SOMinus,
        Classical::SOOdd,
        Classical::OmegaPlus,
        Classical::OmegaMinus,
        Classical::OmegaOdd,
        Classical::POmegaPlus,
        Classical::POmegaMinus,
        Classical::POmegaOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Classical::GL => "GL",
            Classical::SL => "SL",
            Classical::PGL => "PGL",
            Classical::PSL => "PSL",
            Classical::GU => "GU",
            Classical::SU => "SU",
            Classical::PGU => "PGU",
            Classical::PSU => "PSU",
            Classical::Sp => "Sp",
            Classical::PSp => "PSp",
            Classical::GOPlus => "GOplus",
            Classical::GOMinus => "GOminus",
            Classical::GOOdd => "GOodd",
            Classical::SOPlus => "SOplus",
            Classical::SOMinus => "SOminus",
            Classical::SOOdd => "SOodd",
            Classical::OmegaPlus => "Omegaplus",
            Classical::OmegaMinus => "Omegaminus",
            Classical::OmegaOdd => "Omegaodd",
            Classical::POmegaPlus => "POmegaplus",
            Classical::POmegaMinus => "POmegaminus",
            Classical::POmegaOdd => "POmegaodd",
        }
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Classical::ALL
            .into_iter()
            .find(|c| c.name().to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown classical family {s}")))
    }
}

fn pw(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// `q^e − 1` or `q^e + 1`.
fn qm(q: u64, e: u64, sign: i32) -> BigUint {
    if sign < 0 {
        pw(q, e) - 1u32
    } else {
        pw(q, e) + 1u32
    }
}

fn check_q(q: u64) -> Result<(u64, u32)> {
    arith::prime_power(q).ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))
}

fn gl(n: u64, q: u64) -> BigUint {
    (1..=n).fold(pw(q, n * (n - 1) / 2), |acc, i| acc * qm(q, i, -1))
}

fn gu(n: u64, q: u64) -> BigUint {
    (1..=n).fold(pw(q, n * (n - 1) / 2), |acc, i| {
        acc * qm(q, i, if i % 2 == 0 { -1 } else { 1 })
    })
}

fn sp(m: u64, q: u64) -> BigUint {
    (1..=m).fold(pw(q, m * m), |acc, i| acc * qm(q, 2 * i, -1))
}

/// Full isometry group of a nondegenerate quadratic form of type `eps`
/// (`+1` or `-1`) in dimension `2m`.
fn go_even(m: u64, q: u64, eps: i32) -> BigUint {
    let base = BigUint::from(2u32) * pw(q, m * (m - 1)) * qm(q, m, -eps);
    (1..m).fold(base, |acc, i| acc * qm(q, 2 * i, -1))
}

fn go_odd(m: u64, q: u64) -> BigUint {
    if q.is_multiple_of(2) {
        sp(m, q)
    } else {
        BigUint::from(2u32) * sp(m, q)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Exact order of the named classical group.
pub fn classical_order(family: Classical, n: u64, q: u64) -> Result<BigUint> {
    use Classical::*;
    check_q(q)?;
    if n == 0 {
        return Err(Error::InvalidParameters("dimension 0".into()));
    }
    let odd_q = q % 2 == 1;
    let even_dim = |what: &str| -> Result<u64> {
        if n.is_multiple_of(2) && n >= 2 {
            Ok(n / 2)
        } else {
            Err(Error::InvalidParameters(format!("{what} needs even dimension, got {n}")))
        }
    };
    let odd_dim = || -> Result<u64> {
        if n % 2 == 1 && n >= 3 {
            Ok(n / 2)
        } else {
            Err(Error::InvalidParameters(format!("odd orthogonal needs odd dimension ≥ 3, got {n}")))
        }
    };
    let out = match family {
        GL => gl(n, q),
        SL => gl(n, q) / (q - 1),
        PGL => gl(n, q) / (q - 1),
        PSL => gl(n, q) / (q - 1) / gcd(n, q - 1),
        GU => gu(n, q),
        SU => gu(n, q) / (q + 1),
        PGU => gu(n, q) / (q + 1),
        PSU => gu(n, q) / (q + 1) / gcd(n, q + 1),
        Sp => sp(even_dim("Sp")?, q),
        PSp => sp(even_dim("PSp")?, q) / gcd(2, q - 1),
        GOPlus => go_even(even_dim("GOplus")?, q, 1),
        GOMinus => go_even(even_dim("GOminus")?, q, -1),
        GOOdd => go_odd(odd_dim()?, q),
        SOPlus => go_even(even_dim("SOplus")?, q, 1) / 2u32,
        SOMinus => go_even(even_dim("SOminus")?, q, -1) / 2u32,
        SOOdd => go_odd(odd_dim()?, q) / gcd(2, q - 1),
        OmegaPlus => go_even(even_dim("Omegaplus")?, q, 1) / (2 * gcd(2, q - 1)),
        OmegaMinus => go_even(even_dim("Omegaminus")?, q, -1) / (2 * gcd(2, q - 1)),
        OmegaOdd => {
            let m = odd_dim()?;
            if odd_q {
                sp(m, q) / 2u32
            } else {
                sp(m, q)
            }
        }
        POmegaPlus | POmegaMinus => {
            let m = even_dim("POmega")?;
            let eps = if family == POmegaPlus { 1 } else { -1 };
            let omega = go_even(m, q, eps) / (2 * gcd(2, q - 1));
            // |Z(Ω)| = (4, q^m − ε) / (2, q − 1)
            let qm_mod4 = (pw(q, m) % 4u32).iter_u64_digits().next().unwrap_or(0);
            let val = (qm_mod4 + 4 - if eps > 0 { 1 } else { 3 }) % 4;
            let four_part = gcd(4, if val == 0 { 4 } else { val });
            omega / (four_part / gcd(2, q - 1))
        }
        POmegaOdd => {
            let m = odd_dim()?;
            if odd_q {
                sp(m, q) / 2u32
            } else {
                sp(m, q)
            }
        }
    };
    Ok(out)
}

/// `|Out(L)|` for a classical simple group `L`, following the standard
/// tables (including the `d` factors). Families are PSL, PSU, PSp,
/// POmegaOdd, POmegaPlus and POmegaMinus in their simple range.
pub fn out_order(family: Classical, n: u64, q: u64) -> Result<u64> {
    use Classical::*;
    let (p, f) = check_q(q)?;
    let f = f as u64;
    let bad = || Error::InvalidParameters(format!("{family}({n},{q}) is not in the simple range"));
    let out = match family {
        PSL => {
            if n < 2 || (n == 2 && q <= 3) {
                return Err(bad());
            }
            if n == 2 {
                gcd(2, q - 1) * f
            } else {
                2 * gcd(n, q - 1) * f
            }
        }
        PSU => {
            if n < 3 || (n == 3 && q == 2) {
                return Err(bad());
            }
            gcd(n, q + 1) * 2 * f
        }
        PSp => {
            if n % 2 == 1 || n < 4 || (n == 4 && q == 2) {
                return Err(bad());
            }
            if n == 4 && p == 2 {
                2 * f
            } else {
                gcd(2, q - 1) * f
            }
        }
        POmegaOdd => {
            if n.is_multiple_of(2) || n < 7 || q.is_multiple_of(2) {
                return Err(bad());
            }
            2 * f
        }
        POmegaMinus => {
            let m = n / 2;
            if n % 2 == 1 || m < 4 {
                return Err(bad());
            }
            if pw(q, m) % 4u32 == BigUint::from(3u32) {
                8 * f
            } else {
                gcd(2, q - 1) * 2 * f
            }
        }
        POmegaPlus => {
            let m = n / 2;
            if n % 2 == 1 || m < 4 {
                return Err(bad());
            }
            if m == 4 {
                let d = 2 + gcd(2, q - 1);
                (1..=d).product::<u64>() * f
            } else if pw(q, m) % 4u32 == BigUint::one() {
                8 * f
            } else {
                2 * gcd(2, q - 1) * f
            }
        }
        _ => return Err(Error::InvalidParameters(format!("{family} is not a simple family"))),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Classical::*;

    fn ord(f: Classical, n: u64, q: u64) -> u64 {
        classical_order(f, n, q).unwrap().try_into().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(ord(PSL, 2, 7), 168);
        assert_eq!(ord(PSL, 2, 9), 360);
        assert_eq!(ord(PSL, 2, 11), 660);
        assert_eq!(ord(PSL, 3, 3), 5616);
        assert_eq!(ord(Sp, 4, 2), 720);
        assert_eq!(ord(Sp, 6, 2), 1451520);
        assert_eq!(ord(GU, 3, 2), 648);
        assert_eq!(ord(GU, 4, 2), 77760);
        assert_eq!(ord(PSU, 3, 5), 126000);
        assert_eq!(ord(PSU, 4, 2), 25920);
        assert_eq!(ord(PSp, 4, 3), 25920);
        assert_eq!(ord(GOMinus, 4, 2), 120);
        assert_eq!(ord(GOPlus, 6, 2), 40320);
        assert_eq!(ord(OmegaPlus, 6, 2), 20160);
        assert_eq!(ord(GOOdd, 5, 3), 103680);
        assert_eq!(ord(POmegaPlus, 8, 2), 174182400);
        assert_eq!(ord(POmegaPlus, 8, 3), 4952179814400);
        assert_eq!(ord(POmegaMinus, 8, 2), 197406720);
        assert_eq!(ord(POmegaOdd, 7, 3), 4585351680);
    }

    #[test]
    fn parameter_errors() {
        assert!(classical_order(Sp, 3, 2).is_err());
        assert!(classical_order(PSL, 2, 6).is_err());
        assert!(classical_order(GOOdd, 4, 3).is_err());
    }

    #[test]
    fn outer_automorphism_orders() {
        assert_eq!(out_order(PSL, 2, 9).unwrap(), 4);
        assert_eq!(out_order(PSp, 4, 8).unwrap(), 6);
        assert_eq!(out_order(POmegaPlus, 8, 3).unwrap(), 24);
        assert_eq!(out_order(POmegaPlus, 8, 2).unwrap(), 6);
        assert_eq!(out_order(PSU, 4, 2).unwrap(), 2);
        assert_eq!(out_order(PSL, 3, 4).unwrap(), 12);
        assert!(out_order(PSp, 4, 2).is_err());
    }
}
