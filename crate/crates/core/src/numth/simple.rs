//! Identifiers for finite nonabelian simple groups, their orders and outer
//! automorphism group orders, the `|T|_r ≥ r|Out(T)|_r` check and smallest
//! subgroup indices of classical groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::arith::{factor_u64, prime_power, r_part};
use crate::error::{Error, Result};
use crate::gf::{classical_order, out_order, Classical};

/// Simple groups of exceptional Lie type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    G2,
    F4,
    E6,
    E7,
    E8,
    /// `²B₂(q)`, `q = 2^{2c+1} ≥ 8`.
    Suzuki,
    /// `²G₂(q)`, `q = 3^{2c+1} ≥ 27`.
    Ree,
    /// `²F₄(q)`, `q = 2^{2c+1} ≥ 8`.
    Ree2F4,
    /// `³D₄(q)`.
    Triality,
    /// `²E₆(q)`.
    TwistedE6,
}

impl Exceptional {
    pub const ALL: [Exceptional; 10] = [
        Exceptional::G2,
        Exceptional::F4,
        Exceptional::E6,
        Exceptional::E7,
        Exceptional::E8,
        Exceptional::Suzuki,
        Exceptional::Ree,
        Exceptional::Ree2F4,
        Exceptional::Triality,
        Exceptional::TwistedE6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::G2 => "G2",
            Exceptional::F4 => "F4",
            Exceptional::E6 => "E6",
            Exceptional::E7 => "E7",
            Exceptional::E8 => "E8",
            Exceptional::Suzuki => "2B2",
            Exceptional::Ree => "2G2",
            Exceptional::Ree2F4 => "2F4",
            Exceptional::Triality => "3D4",
            Exceptional::TwistedE6 => "2E6",
        }
    }

    /// Dimension of the smallest faithful module in defining characteristic.
    pub fn module_dimension(self, q: u64) -> u64 {
        match self {
            Exceptional::G2 if q.is_multiple_of(2) => 6,
            Exceptional::G2 | Exceptional::Ree => 7,
            Exceptional::F4 | Exceptional::Ree2F4 => 26,
            Exceptional::E6 | Exceptional::TwistedE6 => 27,
            Exceptional::E7 => 56,
            Exceptional::E8 => 248,
            Exceptional::Suzuki => 4,
            Exceptional::Triality => 8,
        }
    }
}

/// The sporadic groups carried in the data table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    J1,
    J2,
    HS,
    /// The Tits group `²F₄(2)′`.
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 7] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::J1,
        Sporadic::J2,
        Sporadic::HS,
        Sporadic::Tits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::M22 => "M22",
            Sporadic::J1 => "J1",
            Sporadic::J2 => "J2",
            Sporadic::HS => "HS",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    /// `(|T|, |Out(T)|)`.
    fn data(self) -> (u64, u64) {
        match self {
            Sporadic::M11 => (7920, 1),
            Sporadic::M12 => (95040, 2),
            Sporadic::M22 => (443520, 2),
            Sporadic::J1 => (175560, 1),
            Sporadic::J2 => (604800, 2),
            Sporadic::HS => (44352000, 2),
            Sporadic::Tits => (17971200, 2),
        }
    }
}

/// A finite nonabelian simple group, named by family and parameters.
///
/// Classical families are `PSL`, `PSU`, `PSp`, `POmegaOdd`, `POmegaPlus` and
/// `POmegaMinus` with `n` the dimension of the natural module. Isomorphic
/// groups under different names (such as `PSL(2,4)` and `A5`) are distinct
/// identifiers; [`SimpleGroupId::isomorphic_names`] relates them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleGroupId {
    Classical { family: Classical, n: u64, q: u64 },
    Exceptional { kind: Exceptional, q: u64 },
    Alternating(u64),
    Sporadic(Sporadic),
}

impl SimpleGroupId {
    pub fn classical(family: Classical, n: u64, q: u64) -> Result<Self> {
        let id = SimpleGroupId::Classical { family, n, q };
        id.validate()?;
        Ok(id)
    }

    pub fn psl(n: u64, q: u64) -> Result<Self> {
        Self::classical(Classical::PSL, n, q)
    }

    pub fn exceptional(kind: Exceptional, q: u64) -> Result<Self> {
        let id = SimpleGroupId::Exceptional { kind, q };
        id.validate()?;
        Ok(id)
    }

    pub fn alternating(n: u64) -> Result<Self> {
        let id = SimpleGroupId::Alternating(n);
        id.validate()?;
        Ok(id)
    }

    /// Rejects parameters outside the simple range.
    pub fn validate(&self) -> Result<()> {
        use Classical::*;
        let bad = || Error::InvalidParameters(format!("{self} is not a simple group in the list"));
        match *self {
            SimpleGroupId::Classical { family, n, q } => {
                let (p, f) = prime_power(q).ok_or_else(bad)?;
                let _ = f;
                let ok = match family {
                    PSL => n >= 2 && !(n == 2 && q <= 3),
                    PSU => n >= 3 && !(n == 3 && q == 2),
                    PSp => n >= 4 && n % 2 == 0 && !(n == 4 && q == 2),
                    POmegaOdd => n >= 7 && n % 2 == 1 && p != 2,
                    POmegaPlus | POmegaMinus => n >= 8 && n % 2 == 0,
                    _ => false,
                };
                ok.then_some(()).ok_or_else(bad)
            }
            SimpleGroupId::Exceptional { kind, q } => {
                let (p, f) = prime_power(q).ok_or_else(bad)?;
                let ok = match kind {
                    Exceptional::G2 => q >= 3,
                    Exceptional::Suzuki | Exceptional::Ree2F4 => p == 2 && f % 2 == 1 && f >= 3,
                    Exceptional::Ree => p == 3 && f % 2 == 1 && f >= 3,
                    _ => true,
                };
                ok.then_some(()).ok_or_else(bad)
            }
            SimpleGroupId::Alternating(n) => (n >= 5).then_some(()).ok_or_else(bad),
            SimpleGroupId::Sporadic(_) => Ok(()),
        }
    }

    pub fn order(&self) -> BigUint {
        match *self {
            SimpleGroupId::Classical { family, n, q } => {
                classical_order(family, n, q).expect("validated classical parameters")
            }
            SimpleGroupId::Exceptional { kind, q } => exceptional_order(kind, q),
            SimpleGroupId::Alternating(n) => (3..=n).fold(BigUint::one(), |acc, k| acc * k),
            SimpleGroupId::Sporadic(s) => BigUint::from(s.data().0),
        }
    }

    pub fn out_order(&self) -> u64 {
        match *self {
            SimpleGroupId::Classical { family, n, q } => {
                out_order(family, n, q).expect("validated classical parameters")
            }
            SimpleGroupId::Exceptional { kind, q } => exceptional_out_order(kind, q),
            SimpleGroupId::Alternating(6) => 4,
            SimpleGroupId::Alternating(_) => 2,
            SimpleGroupId::Sporadic(s) => s.data().1,
        }
    }

    /// Characteristic of the field of definition, for groups of Lie type.
    pub fn characteristic(&self) -> Option<u64> {
        match *self {
            SimpleGroupId::Classical { q, .. } | SimpleGroupId::Exceptional { q, .. } => {
                prime_power(q).map(|(p, _)| p)
            }
            _ => None,
        }
    }

    /// All names in the list denoting a group isomorphic to this one,
    /// including itself.
    pub fn isomorphic_names(&self) -> Vec<SimpleGroupId> {
        use Classical::*;
        let cl = |family, n, q| SimpleGroupId::Classical { family, n, q };
        let classes: [&[SimpleGroupId]; 5] = [
            &[cl(PSL, 2, 4), cl(PSL, 2, 5), SimpleGroupId::Alternating(5)],
            &[cl(PSL, 3, 2), cl(PSL, 2, 7)],
            &[cl(PSL, 2, 9), SimpleGroupId::Alternating(6)],
            &[cl(PSL, 4, 2), SimpleGroupId::Alternating(8)],
            &[cl(PSU, 4, 2), cl(PSp, 4, 3)],
        ];
        classes
            .iter()
            .find(|c| c.contains(self))
            .map(|c| c.to_vec())
            .unwrap_or_else(|| vec![*self])
    }

    /// Name of the family, as accepted by the sweep filter.
    pub fn family_name(&self) -> &'static str {
        match self {
            SimpleGroupId::Classical { family, .. } => family.name(),
            SimpleGroupId::Exceptional { kind, .. } => kind.name(),
            SimpleGroupId::Alternating(_) => "A",
            SimpleGroupId::Sporadic(s) => s.name(),
        }
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleGroupId::Classical { family, n, q } => write!(f, "{family}({n},{q})"),
            SimpleGroupId::Exceptional { kind, q } => write!(f, "{}({q})", kind.name()),
            SimpleGroupId::Alternating(n) => write!(f, "A{n}"),
            SimpleGroupId::Sporadic(s) => f.write_str(s.name()),
        }
    }
}

impl FromStr for SimpleGroupId {
    type Err = Error;

    /// Accepts `PSL(2,9)`, `G2(3)`, `A7`, `M11` and the like.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameters(format!("cannot parse simple group name {s:?}"));
        if let Some(sp) = Sporadic::ALL.into_iter().find(|x| x.name().eq_ignore_ascii_case(s)) {
            return Ok(SimpleGroupId::Sporadic(sp));
        }
        if let Some(rest) = s.strip_prefix('A').filter(|r| r.chars().all(|c| c.is_ascii_digit())) {
            return SimpleGroupId::alternating(rest.parse().map_err(|_| bad())?);
        }
        let (head, args) = s.strip_suffix(')').and_then(|t| t.split_once('(')).ok_or_else(bad)?;
        let args: Vec<u64> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if let Some(kind) = Exceptional::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(head)) {
            return match args[..] {
                [q] => SimpleGroupId::exceptional(kind, q),
                _ => Err(bad()),
            };
        }
        let family: Classical = head.parse()?;
        match args[..] {
            [n, q] => SimpleGroupId::classical(family, n, q),
            _ => Err(bad()),
        }
    }
}

fn pw(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

fn prod_minus(q: u64, exps: &[u32]) -> BigUint {
    exps.iter().fold(BigUint::one(), |acc, &e| acc * (pw(q, e) - 1u32))
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

pub fn exceptional_order(kind: Exceptional, q: u64) -> BigUint {
    let plus = |e: u32| pw(q, e) + 1u32;
    match kind {
        Exceptional::G2 => pw(q, 6) * prod_minus(q, &[6, 2]),
        Exceptional::F4 => pw(q, 24) * prod_minus(q, &[12, 8, 6, 2]),
        Exceptional::E6 => pw(q, 36) * prod_minus(q, &[12, 9, 8, 6, 5, 2]) / gcd(3, q - 1),
        Exceptional::E7 => {
            pw(q, 63) * prod_minus(q, &[18, 14, 12, 10, 8, 6, 2]) / gcd(2, q - 1)
        }
        Exceptional::E8 => pw(q, 120) * prod_minus(q, &[30, 24, 20, 18, 14, 12, 8, 2]),
        Exceptional::Suzuki => pw(q, 2) * plus(2) * (q - 1),
        Exceptional::Ree => pw(q, 3) * plus(3) * (q - 1),
        Exceptional::Ree2F4 => pw(q, 12) * plus(6) * (pw(q, 4) - 1u32) * plus(3) * (q - 1),
        Exceptional::Triality => {
            pw(q, 12) * (pw(q, 8) + pw(q, 4) + 1u32) * prod_minus(q, &[6, 2])
        }
        Exceptional::TwistedE6 => {
            pw(q, 36) * prod_minus(q, &[12, 8, 6, 2]) * plus(9) * plus(5) / gcd(3, q + 1)
        }
    }
}

/// `|Out(T)|` for exceptional `T`; `G₂(3^f)` has a graph automorphism, so
/// its value is `2f`.
pub fn exceptional_out_order(kind: Exceptional, q: u64) -> u64 {
    let (p, f) = prime_power(q).expect("prime power");
    let f = f as u64;
    match kind {
        Exceptional::G2 => if p == 3 { 2 * f } else { f },
        Exceptional::F4 => gcd(2, p) * f,
        Exceptional::E6 => 2 * gcd(3, q - 1) * f,
        Exceptional::E7 => gcd(2, q - 1) * f,
        Exceptional::E8 | Exceptional::Suzuki | Exceptional::Ree | Exceptional::Ree2F4 => f,
        Exceptional::Triality => 3 * f,
        Exceptional::TwistedE6 => 2 * gcd(3, q + 1) * f,
    }
}

/// Primes dividing both `|T|` and `|Out(T)|`.
pub fn common_primes(id: &SimpleGroupId) -> Vec<u64> {
    let order = id.order();
    factor_u64(id.out_order())
        .into_iter()
        .map(|(r, _)| r)
        .filter(|&r| (&order % r) == BigUint::ZERO)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonDivisorReport {
    pub id: SimpleGroupId,
    pub r: u64,
    /// `|T|_r`.
    pub lhs: BigUint,
    /// `r·|Out(T)|_r`.
    pub rhs: BigUint,
    pub equality: bool,
    /// Equality as predicted by the classification, for `r ∈ {2, 3}`.
    pub predicted_equality: Option<bool>,
}

impl CommonDivisorReport {
    pub fn inequality_holds(&self) -> bool {
        self.lhs >= self.rhs
    }

    pub fn consistent(&self) -> bool {
        self.inequality_holds() && self.predicted_equality.is_none_or(|p| p == self.equality)
    }
}

impl fmt::Display for CommonDivisorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pred = match self.predicted_equality {
            Some(b) => b.to_string(),
            None => "-".into(),
        };
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.id, self.r, self.lhs, self.rhs, self.equality, pred
        )
    }
}

/// Equality predicate for a single name, ignoring isomorphisms.
fn equality_predicted_for(id: &SimpleGroupId, r: u64) -> bool {
    match *id {
        SimpleGroupId::Alternating(n) => r == 2 && (n == 5 || n == 6),
        SimpleGroupId::Classical { family, n, q } => {
            let (p, f) = prime_power(q).expect("validated");
            let f = f as u64;
            let (p8, p9) = (p % 8, p % 9);
            match (family, n, r) {
                (Classical::PSL, 2, 2) => p8 == 3 || p8 == 5,
                (Classical::PSL, 2, 3) => [2, 4, 5, 7].contains(&p9) && f.is_multiple_of(3),
                (Classical::PSL, 3, 3) => {
                    ([2, 5].contains(&p9) && [2, 3, 4].contains(&(f % 6)))
                        || ([4, 7].contains(&p9) && !f.is_multiple_of(3))
                }
                (Classical::PSU, 3, 3) => {
                    ([2, 5].contains(&p9) && [0, 1, 5].contains(&(f % 6)))
                        || ([4, 7].contains(&p9) && f.is_multiple_of(3))
                }
                _ => false,
            }
        }
        _ => false,
    }
}

/// Checks `|T|_r ≥ r|Out(T)|_r` and, for `r ∈ {2, 3}`, whether equality
/// agrees with the classification. The prediction holds for `T` when it holds
/// for any name of a group isomorphic to `T`.
pub fn common_divisor_check(id: &SimpleGroupId, r: u64) -> Result<CommonDivisorReport> {
    let order = id.order();
    let out = id.out_order();
    if !out.is_multiple_of(r) || &order % r != BigUint::ZERO {
        return Err(Error::Precondition(format!(
            "{r} is not a common divisor of |{id}| and |Out({id})| = {out}"
        )));
    }
    let lhs = r_part(&order, r);
    let rhs = BigUint::from(r * super::arith::r_part_u64(out, r));
    let predicted_equality = (r == 2 || r == 3).then(|| {
        id.isomorphic_names()
            .iter()
            .any(|name| equality_predicted_for(name, r))
    });
    Ok(CommonDivisorReport {
        id: *id,
        r,
        equality: lhs == rhs,
        lhs,
        rhs,
        predicted_equality,
    })
}

fn prime_powers_up_to(q_max: u64) -> Vec<u64> {
    (2..=q_max).filter(|&q| prime_power(q).is_some()).collect()
}

/// Every simple group of Lie type whose natural module has dimension at most
/// `dim_max`, over fields of order at most `q_max`.
pub fn lie_type_ids(dim_max: u64, q_max: u64) -> Vec<SimpleGroupId> {
    use Classical::*;
    let mut ids = Vec::new();
    for q in prime_powers_up_to(q_max) {
        for n in 2..=dim_max {
            for family in [PSL, PSU, PSp, POmegaOdd, POmegaPlus, POmegaMinus] {
                if let Ok(id) = SimpleGroupId::classical(family, n, q) {
                    ids.push(id);
                }
            }
        }
        for kind in Exceptional::ALL {
            if kind.module_dimension(q) <= dim_max {
                if let Ok(id) = SimpleGroupId::exceptional(kind, q) {
                    ids.push(id);
                }
            }
        }
    }
    ids.sort();
    ids
}

/// All exceptional groups of Lie type over fields of order at most `q_max`.
pub fn exceptional_ids(q_max: u64) -> Vec<SimpleGroupId> {
    let mut ids: Vec<_> = prime_powers_up_to(q_max)
        .into_iter()
        .flat_map(|q| Exceptional::ALL.into_iter().filter_map(move |k| SimpleGroupId::exceptional(k, q).ok()))
        .collect();
    ids.sort();
    ids
}

/// The data-table groups: `A5`–`A9` and the listed sporadic groups.
pub fn table_ids() -> Vec<SimpleGroupId> {
    (5..=9)
        .map(SimpleGroupId::Alternating)
        .chain(Sporadic::ALL.into_iter().map(SimpleGroupId::Sporadic))
        .collect()
}

/// Runs [`common_divisor_check`] on every common prime of every id.
pub fn common_divisor_sweep(ids: &[SimpleGroupId]) -> Vec<CommonDivisorReport> {
    ids.par_iter()
        .flat_map_iter(|id| {
            common_primes(id)
                .into_iter()
                .map(move |r| common_divisor_check(id, r).expect("r is a common prime"))
        })
        .collect()
}

/// Smallest index of a proper subgroup of a classical simple group.
pub fn min_index(id: &SimpleGroupId) -> Result<BigUint> {
    use Classical::*;
    let SimpleGroupId::Classical { family, n, q } = *id else {
        return Err(Error::InvalidParameters(format!("{id} is not classical")));
    };
    id.validate()?;
    let b = |x: u64| BigUint::from(x);
    let p = |e: u64| pw(q, e as u32);
    let m = n / 2;
    let v = match family {
        PSL => match (n, q) {
            (2, 5) => b(5),
            (2, 7) => b(7),
            (2, 9) => b(6),
            (2, 11) => b(11),
            (4, 2) => b(8),
            _ => (p(n) - 1u32) / (q - 1),
        },
        PSp => match (m, q) {
            (2, 3) => b(27),
            (_, 2) => pw(2, (m - 1) as u32) * (pw(2, m as u32) - 1u32),
            _ => (p(2 * m) - 1u32) / (q - 1),
        },
        POmegaOdd => {
            if q == 3 {
                pw(3, m as u32) * (pw(3, m as u32) - 1u32) / 2u32
            } else {
                (p(2 * m) - 1u32) / (q - 1)
            }
        }
        POmegaPlus => {
            if q == 2 {
                pw(2, (m - 1) as u32) * (pw(2, m as u32) - 1u32)
            } else {
                (p(m) - 1u32) * (p(m - 1) + 1u32) / (q - 1)
            }
        }
        POmegaMinus => (p(m) + 1u32) * (p(m - 1) - 1u32) / (q - 1),
        PSU => match n {
            3 if q == 5 => b(50),
            3 => p(3) + 1u32,
            4 => (p(1) + 1u32) * (p(3) + 1u32),
            _ if q == 2 && n % 6 == 0 => pw(2, (n - 1) as u32) * (pw(2, n as u32) - 1u32) / 3u32,
            _ => {
                let sgn = |e: u64, x: BigUint| if e.is_multiple_of(2) { x - 1u32 } else { x + 1u32 };
                sgn(n, p(n)) * sgn(n - 1, p(n - 1)) / (q * q - 1)
            }
        },
        _ => return Err(Error::InvalidParameters(format!("{family} has no row"))),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> SimpleGroupId {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["PSL(2,9)", "PSU(4,2)", "G2(3)", "2B2(8)", "A7", "M11", "2F4(2)'"] {
            assert_eq!(id(s).to_string(), s);
        }
        assert!("PSL(2,3)".parse::<SimpleGroupId>().is_err());
        assert!("2B2(2)".parse::<SimpleGroupId>().is_err());
        assert!("G2(2)".parse::<SimpleGroupId>().is_err());
    }

    #[test]
    fn isomorphic_names_have_equal_orders() {
        for s in ["PSL(2,4)", "PSL(3,2)", "PSL(2,9)", "PSL(4,2)", "PSU(4,2)"] {
            let g = id(s);
            for h in g.isomorphic_names() {
                assert_eq!(g.order(), h.order(), "{g} vs {h}");
                assert_eq!(g.out_order(), h.out_order(), "{g} vs {h}");
            }
        }
    }

    #[test]
    fn common_divisor_examples() {
        let rep = common_divisor_check(&id("PSL(2,9)"), 2).unwrap();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (BigUint::from(8u32), BigUint::from(8u32)));
        assert_eq!(rep.predicted_equality, Some(true));
        assert!(rep.consistent());
        let rep = common_divisor_check(&id("PSL(2,8)"), 3).unwrap();
        assert!(rep.equality && rep.consistent());
        let rep = common_divisor_check(&id("PSU(4,2)"), 2).unwrap();
        assert_eq!(rep.lhs, BigUint::from(64u32));
        assert!(!rep.equality && rep.consistent());
        assert!(common_divisor_check(&id("M11"), 2).is_err());
    }

    #[test]
    fn exceptional_orders() {
        assert_eq!(exceptional_order(Exceptional::G2, 3), BigUint::from(4245696u64));
        assert_eq!(exceptional_order(Exceptional::Suzuki, 8), BigUint::from(29120u32));
        assert_eq!(exceptional_order(Exceptional::Triality, 2), BigUint::from(211341312u64));
        assert_eq!(
            exceptional_order(Exceptional::Ree2F4, 2),
            BigUint::from(2 * Sporadic::Tits.data().0)
        );
    }

    #[test]
    fn exceptional_sweep_is_consistent() {
        let reports = common_divisor_sweep(&exceptional_ids(64));
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.consistent()));
        let reports = common_divisor_sweep(&table_ids());
        assert!(reports.iter().all(|r| r.consistent()));
    }

    #[test]
    fn table_rows() {
        assert_eq!(min_index(&id("PSL(2,11)")).unwrap(), BigUint::from(11u32));
        assert_eq!(min_index(&id("PSp(4,3)")).unwrap(), BigUint::from(27u32));
        assert_eq!(min_index(&id("PSL(3,2)")).unwrap(), BigUint::from(7u32));
        assert_eq!(min_index(&id("PSL(2,13)")).unwrap(), BigUint::from(14u32));
        assert_eq!(min_index(&id("PSU(3,3)")).unwrap(), BigUint::from(28u32));
        assert_eq!(min_index(&id("PSp(6,2)")).unwrap(), BigUint::from(28u32));
        assert_eq!(min_index(&id("PSU(6,2)")).unwrap(), BigUint::from(672u32));
        assert_eq!(min_index(&id("PSU(5,2)")).unwrap(), BigUint::from(165u32));
        assert!(min_index(&id("G2(3)")).is_err());
    }
}
