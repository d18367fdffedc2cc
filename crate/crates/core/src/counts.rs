//! Residue and non-residue counts in `S_k`, the odd numbers and `S_2 \ S_4`:
//! brute force, the counting formula, and the class-number closed forms.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{jacobi, ClassifiedPrime, ResidueTable, TABLE_LIMIT};
use crate::charsum::{prefix_sum, ChiSource, Legendre, PartialSumProfile};
use crate::classnum::ClassNumbers;
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::ids::IdentityId;

/// Which subset of `[1, p-1]` is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubsetSelector {
    /// `S_k`, the multiples of `k`.
    Multiples(u64),
    Odds,
    /// `S_2 \ S_4`, the numbers `2 (mod 4)`.
    S2MinusS4,
}

impl SubsetSelector {
    /// The selectors with closed forms, in report order.
    pub const STANDARD: [SubsetSelector; 5] = [
        SubsetSelector::Multiples(2),
        SubsetSelector::Multiples(3),
        SubsetSelector::Multiples(4),
        SubsetSelector::Odds,
        SubsetSelector::S2MinusS4,
    ];

    fn validate(&self, p: u64) -> Result<()> {
        match *self {
            SubsetSelector::Multiples(k) if k == 0 || k >= p => Err(Error::usage(format!(
                "S_{k} needs 1 <= k <= p-1 = {}",
                p - 1
            ))),
            _ => Ok(()),
        }
    }

    /// The subset's members, ascending.
    pub fn members(&self, p: u64) -> Box<dyn Iterator<Item = u64>> {
        match *self {
            SubsetSelector::Multiples(k) => Box::new((k..p).step_by(k.max(1) as usize)),
            SubsetSelector::Odds => Box::new((1..p).step_by(2)),
            SubsetSelector::S2MinusS4 => Box::new((2..p).step_by(4)),
        }
    }

    pub fn size(&self, p: u64) -> u64 {
        match *self {
            SubsetSelector::Multiples(k) => (p - 1) / k,
            SubsetSelector::Odds => (p - 1) / 2,
            SubsetSelector::S2MinusS4 => (p - 1) / 2 - (p - 1) / 4,
        }
    }

    /// `floor((p-1)/k)/2` for `S_k`, `(p-1)/4` for the odds, and
    /// `floor((p-1)/4)/2` for `S_2 \ S_4`.
    pub fn main_term(&self, p: u64) -> Frac {
        let p = p as i64;
        match *self {
            SubsetSelector::Multiples(k) => Frac::new((p - 1) / k as i64, 2),
            SubsetSelector::Odds => Frac::new(p - 1, 4),
            SubsetSelector::S2MinusS4 => Frac::new((p - 1) / 4, 2),
        }
    }
}

impl fmt::Display for SubsetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetSelector::Multiples(k) => write!(f, "S_{k}"),
            SubsetSelector::Odds => f.write_str("odds"),
            SubsetSelector::S2MinusS4 => f.write_str("S_2\\S_4"),
        }
    }
}

impl FromStr for SubsetSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odds" | "O" => Ok(SubsetSelector::Odds),
            "S_2\\S_4" | "S2-S4" => Ok(SubsetSelector::S2MinusS4),
            _ => s
                .strip_prefix("S_")
                .and_then(|k| k.parse().ok())
                .map(SubsetSelector::Multiples)
                .ok_or_else(|| Error::usage(format!("unknown subset {s:?}"))),
        }
    }
}

impl Serialize for SubsetSelector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubsetSelector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One count of residues and non-residues in a subset.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountRecord {
    pub p: u64,
    pub class4: u8,
    pub class8: u8,
    pub class12: u8,
    pub selector: SubsetSelector,
    #[serde(rename = "Q")]
    pub q: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub size: u64,
    pub main_term: Frac,
    /// `Q - main_term`.
    pub gap: Frac,
    pub eps: Option<f64>,
    pub normalized_gap: Option<f64>,
}

impl CountRecord {
    fn new(cp: &ClassifiedPrime, selector: SubsetSelector, q: u64, n: u64) -> Self {
        let main_term = selector.main_term(cp.p());
        CountRecord {
            p: cp.p(),
            class4: cp.r4(),
            class8: cp.r8(),
            class12: cp.r12(),
            selector,
            q,
            n,
            size: q + n,
            main_term,
            gap: Frac::int(q as i64) - main_term,
            eps: None,
            normalized_gap: None,
        }
    }

    /// Attaches `gap / p^(1/2 - eps)`.
    pub fn with_eps(mut self, eps: f64) -> Result<Self> {
        self.normalized_gap = Some(normalized_gap(&self, eps)?);
        self.eps = Some(eps);
        Ok(self)
    }
}

pub fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 0.5 {
        Ok(())
    } else {
        Err(Error::usage(format!("eps = {eps} is outside (0, 1/2)")))
    }
}

/// `gap / p^(1/2 - eps)`, sign preserved.
pub fn normalized_gap(record: &CountRecord, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    Ok(normalize(record.gap, record.p, eps))
}

pub(crate) fn normalize(gap: Frac, p: u64, eps: f64) -> f64 {
    gap.to_f64() / (p as f64).powf(0.5 - eps)
}

/// The residue table of `p`, built by squaring. Needs `p < 2^26`.
pub fn qr_table(p: u64) -> Result<ResidueTable> {
    ResidueTable::new(p).map_err(|e| match e {
        Error::Usage(msg) => Error::usage(format!("{msg} (count_brute streams for large p)")),
        other => other,
    })
}

/// Counts residues and non-residues of a subset one element at a time.
pub fn count_brute(cp: &ClassifiedPrime, sel: SubsetSelector) -> Result<CountRecord> {
    if cp.p() < TABLE_LIMIT {
        count_brute_with(&qr_table(cp.p())?, cp, sel)
    } else {
        count_brute_with(&Legendre::new(cp.p())?, cp, sel)
    }
}

pub fn count_brute_with<S: ChiSource + ?Sized>(
    src: &S,
    cp: &ClassifiedPrime,
    sel: SubsetSelector,
) -> Result<CountRecord> {
    let p = cp.p();
    sel.validate(p)?;
    let (mut q, mut n) = (0u64, 0u64);
    for m in sel.members(p) {
        match src.chi(m) {
            1 => q += 1,
            -1 => n += 1,
            _ => return Err(Error::internal(format!("chi({m}) = 0 inside [1, p-1]"))),
        }
    }
    Ok(CountRecord::new(cp, sel, q, n))
}

fn check_k(p: u64, k: u64) -> Result<()> {
    if k.is_multiple_of(p) {
        return Err(Error::domain(format!("k = {k} is a multiple of p = {p}")));
    }
    if k > p - 1 {
        return Err(Error::usage(format!("k = {k} exceeds p - 1 = {}", p - 1)));
    }
    Ok(())
}

fn formula(p: u64, k: u64, sum: i64) -> Result<(u64, u64)> {
    let size = ((p - 1) / k) as i64;
    let twisted = jacobi(k, p) as i64 * sum;
    if (size + twisted) % 2 != 0 || size.abs() < twisted.abs() {
        return Err(Error::internal(format!(
            "counting formula gave a non-integral or negative count at p = {p}, k = {k}"
        )));
    }
    Ok((((size + twisted) / 2) as u64, ((size - twisted) / 2) as u64))
}

/// `(Q, N)` for `S_k` from `floor((p-1)/k)/2 +- (k/p)/2 * sum_{m <= (p-1)/k} (m/p)`,
/// the sum taken with the Jacobi symbol.
pub fn count_formula(cp: &ClassifiedPrime, k: u64) -> Result<(u64, u64)> {
    let p = cp.p();
    check_k(p, k)?;
    let sum = prefix_sum(&Legendre::new(p)?, (p - 1) / k);
    formula(p, k, sum)
}

/// [`count_formula`] with the character sum read from a prefix profile.
pub fn count_formula_profile(profile: &PartialSumProfile, k: u64) -> Result<(u64, u64)> {
    let p = profile.p();
    check_k(p, k)?;
    formula(p, k, profile.prefix((p - 1) / k))
}

/// A closed-form count and the identities used to derive it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub q: i64,
    pub derivation: Vec<IdentityId>,
}

struct Partial {
    q: Frac,
    derivation: Vec<IdentityId>,
}

fn half(n: i64) -> Frac {
    Frac::new(n, 2)
}

fn closed_multiples<C: ClassNumbers + ?Sized>(
    cp: &ClassifiedPrime,
    k: u64,
    h: &C,
) -> Result<Partial> {
    let p = cp.p();
    let pi = p as i64;
    // S(1, p/k) in terms of class numbers and the identities used
    let (sum, derivation) = match (k, cp.r4(), cp.r8()) {
        (2, 1, _) => (Frac::ZERO, vec![IdentityId::B1]),
        (2, 3, _) => {
            let hp = h.class_number(-pi)? as i64;
            (
                Frac::int((2 - jacobi(2, p) as i64) * hp),
                vec![IdentityId::W1],
            )
        }
        (3, 3, _) => {
            let hp = h.class_number(-pi)? as i64;
            (half((3 - jacobi(3, p) as i64) * hp), vec![IdentityId::W2])
        }
        (3, 1, _) => (half(h.class_number(-3 * pi)? as i64), vec![IdentityId::W3]),
        (4, 1, _) => (half(h.class_number(-4 * pi)? as i64), vec![IdentityId::W4]),
        (4, _, 3) => (Frac::ZERO, vec![IdentityId::B2]),
        (4, _, 7) => {
            // S(1,p/4) = S(1,p/2) once the middle block vanishes
            let hp = h.class_number(-pi)? as i64;
            (
                Frac::int((2 - jacobi(2, p) as i64) * hp),
                vec![IdentityId::B3, IdentityId::W1],
            )
        }
        _ => return Err(Error::usage(format!("no closed form for S_{k}"))),
    };
    let twist = Frac::int(jacobi(k, p) as i64);
    let q = half(((p - 1) / k) as i64) + Frac::new(1, 2) * twist * sum;
    Ok(Partial { q, derivation })
}

/// `Q` from the class number formula alone: no character sums are taken.
pub fn closed_form<C: ClassNumbers + ?Sized>(
    cp: &ClassifiedPrime,
    sel: SubsetSelector,
    h: &C,
) -> Result<ClosedForm> {
    let p = cp.p();
    if p <= 3 {
        return Err(Error::domain("closed forms need p > 3"));
    }
    let partial = match sel {
        SubsetSelector::Multiples(k @ 2..=4) => closed_multiples(cp, k, h)?,
        SubsetSelector::Odds => {
            let s2 = closed_multiples(cp, 2, h)?;
            Partial {
                q: Frac::new(p as i64 - 1, 2) - s2.q,
                derivation: s2.derivation,
            }
        }
        SubsetSelector::S2MinusS4 => {
            let s2 = closed_multiples(cp, 2, h)?;
            let s4 = closed_multiples(cp, 4, h)?;
            let mut derivation = s2.derivation;
            for id in s4.derivation {
                if !derivation.contains(&id) {
                    derivation.push(id);
                }
            }
            Partial {
                q: s2.q - s4.q,
                derivation,
            }
        }
        other => return Err(Error::usage(format!("no closed form for {other}"))),
    };
    let q = partial.q.to_integer().ok_or_else(|| {
        Error::internal(format!("closed form for {sel} at p = {p} is {}", partial.q))
    })?;
    Ok(ClosedForm {
        q,
        derivation: partial.derivation,
    })
}

pub const COUNT_CSV_HEADER: [&str; 11] = [
    "p",
    "class4",
    "class8",
    "class12",
    "selector",
    "Q",
    "N",
    "size",
    "main_term",
    "gap",
    "normalized_gap",
];

/// Writes records as header-first CSV in the given order.
pub fn write_count_csv<'a, W, I>(out: W, records: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a CountRecord>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COUNT_CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.p.to_string(),
            r.class4.to_string(),
            r.class8.to_string(),
            r.class12.to_string(),
            r.selector.to_string(),
            r.q.to_string(),
            r.n.to_string(),
            r.size.to_string(),
            r.main_term.to_string(),
            r.gap.to_string(),
            r.normalized_gap.map(|g| g.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{classify, primes_in_range};
    use crate::classnum::FormsOracle;

    fn brute(p: u64, sel: SubsetSelector) -> CountRecord {
        count_brute(&classify(p).unwrap(), sel).unwrap()
    }

    #[test]
    fn brute_examples() {
        let r = brute(7, SubsetSelector::Multiples(2));
        assert_eq!((r.q, r.n), (2, 1));
        assert_eq!(brute(13, SubsetSelector::Multiples(2)).q, 3);
        assert_eq!(brute(11, SubsetSelector::Multiples(4)).q, 1);
        assert_eq!(brute(13, SubsetSelector::Multiples(3)).q, 3);
        let r = brute(5, SubsetSelector::Multiples(3));
        assert_eq!((r.q, r.n), (0, 1));
        let r = brute(7, SubsetSelector::Odds);
        assert_eq!((r.q, r.n), (1, 2));
        assert!(count_brute(&classify(7).unwrap(), SubsetSelector::Multiples(7)).is_err());
        assert!(count_brute(&classify(7).unwrap(), SubsetSelector::Multiples(0)).is_err());
    }

    #[test]
    fn full_set_is_balanced() {
        for p in primes_in_range(3, 3000).unwrap() {
            let r = brute(p, SubsetSelector::Multiples(1));
            assert_eq!((r.q, r.n), ((p - 1) / 2, (p - 1) / 2));
            assert_eq!(r.size, p - 1);
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_formula(&classify(7).unwrap(), 2).unwrap(), (2, 1));
        assert_eq!(count_formula(&classify(11).unwrap(), 2).unwrap().0, 1);
        for p in [3u64, 5, 101] {
            assert_eq!(
                count_formula(&classify(p).unwrap(), 1).unwrap().0,
                (p - 1) / 2
            );
        }
        assert!(matches!(
            count_formula(&classify(7).unwrap(), 7),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            count_formula(&classify(7).unwrap(), 9),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        let q = |p, sel| {
            closed_form(&classify(p).unwrap(), sel, &FormsOracle)
                .unwrap()
                .q
        };
        assert_eq!(q(13, SubsetSelector::Multiples(4)), 2);
        assert_eq!(q(23, SubsetSelector::Multiples(4)), 4);
        assert_eq!(q(19, SubsetSelector::Multiples(2)), 3);
        assert_eq!(q(11, SubsetSelector::Multiples(3)), 2);
        let cf = closed_form(
            &classify(23).unwrap(),
            SubsetSelector::Multiples(4),
            &FormsOracle,
        )
        .unwrap();
        assert_eq!(cf.derivation, vec![IdentityId::B3, IdentityId::W1]);
        assert!(closed_form(
            &classify(3).unwrap(),
            SubsetSelector::Multiples(2),
            &FormsOracle
        )
        .is_err());
        assert!(closed_form(
            &classify(13).unwrap(),
            SubsetSelector::Multiples(5),
            &FormsOracle
        )
        .is_err());
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for p in primes_in_range(5, 3000).unwrap() {
            let cp = classify(p).unwrap();
            for sel in SubsetSelector::STANDARD {
                let cf = closed_form(&cp, sel, &FormsOracle).unwrap();
                assert_eq!(
                    cf.q,
                    count_brute(&cp, sel).unwrap().q as i64,
                    "{sel} at p = {p}"
                );
            }
        }
    }

    #[test]
    fn normalized_gap_examples() {
        let cp = |p| classify(p).unwrap();
        let r = count_brute(&cp(13), SubsetSelector::Multiples(2)).unwrap();
        assert_eq!(normalized_gap(&r, 0.25).unwrap(), 0.0);
        let r = count_brute(&cp(23), SubsetSelector::Multiples(2)).unwrap();
        assert_eq!(r.gap, Frac::new(3, 2));
        assert!((normalized_gap(&r, 0.25).unwrap() - 0.684_951).abs() < 1e-5);
        let r = count_brute(&cp(11), SubsetSelector::Multiples(2)).unwrap();
        assert_eq!(r.gap, Frac::new(-3, 2));
        assert!((normalized_gap(&r, 0.25).unwrap() + 0.823_651).abs() < 1e-5);
        assert!(normalized_gap(&r, 0.5).is_err());
        assert!(normalized_gap(&r, 0.0).is_err());
    }

    #[test]
    fn selector_names() {
        for sel in SubsetSelector::STANDARD {
            assert_eq!(sel.to_string().parse::<SubsetSelector>().unwrap(), sel);
        }
        assert!("S_x".parse::<SubsetSelector>().is_err());
    }

    #[test]
    fn csv_row() {
        let r = count_brute(&classify(11).unwrap(), SubsetSelector::Multiples(2))
            .unwrap()
            .with_eps(0.25)
            .unwrap();
        let mut buf = Vec::new();
        write_count_csv(&mut buf, [&r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), COUNT_CSV_HEADER.join(","));
        assert!(lines
            .next()
            .unwrap()
            .starts_with("11,3,3,11,S_2,1,4,5,5/2,-3/2,-0.82"));
    }
}
