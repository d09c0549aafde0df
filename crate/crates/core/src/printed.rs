//! Reference data: published series expansions and rational forms that the
//! computed series are checked against. Entries known to be misprinted keep
//! both the published and the corrected form so checks can report which one
//! the computation agrees with.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::genfun::{Family, FamilyId};
use crate::series::TSeries;
use crate::xpoly::XPoly;

const SERIES_DATA: &str = include_str!("../data/printed_series.txt");

/// One displayed coefficient `Q_n(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedEntry {
    pub n: usize,
    pub printed: XPoly,
    /// Present only for misprinted entries.
    pub corrected: Option<XPoly>,
}

impl PrintedEntry {
    /// The form expected to match the computation.
    pub fn expected(&self) -> &XPoly {
        self.corrected.as_ref().unwrap_or(&self.printed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedBlock {
    pub family: FamilyId,
    pub entries: Vec<PrintedEntry>,
}

fn parse_header(line: &str) -> Result<FamilyId> {
    let inner = line
        .strip_prefix('[')
        .and_then(|l| l.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad header `{line}`")))?;
    let mut parts = inner.split_whitespace();
    let fam: Family = parts
        .next()
        .ok_or_else(|| Error::Parse(format!("bad header `{line}`")))?
        .parse()?;
    let k: u32 = parts
        .next()
        .unwrap_or("0")
        .parse()
        .map_err(|_| Error::Parse(format!("bad parameter in `{line}`")))?;
    Ok(FamilyId::new(fam, k))
}

/// Parses the `[family k]` / `n: poly [! corrected]` format.
pub fn parse_series_data(text: &str) -> Result<Vec<PrintedBlock>> {
    let mut blocks: Vec<PrintedBlock> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('[') {
            blocks.push(PrintedBlock { family: parse_header(line)?, entries: Vec::new() });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| Error::Parse("entry before any header".into()))?;
        let (n, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad entry `{line}`")))?;
        let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad index in `{line}`")))?;
        let (printed, corrected) = match rest.split_once('!') {
            Some((p, c)) => (p.parse()?, Some(c.parse()?)),
            None => (rest.parse()?, None),
        };
        block.entries.push(PrintedEntry { n, printed, corrected });
    }
    Ok(blocks)
}

/// Every displayed expansion, parsed once.
pub fn series_corpus() -> &'static [PrintedBlock] {
    static CORPUS: OnceLock<Vec<PrintedBlock>> = OnceLock::new();
    CORPUS.get_or_init(|| parse_series_data(SERIES_DATA).expect("bundled data parses"))
}

/// Which specialization a rational form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slice {
    /// `Q(t, 0)`
    Constant,
    /// coefficient of `x^1` in `Q(t, x)`
    X1,
}

/// A rational function `numer / Π factor^power` in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational {
    pub numer: Vec<i64>,
    pub denom: Vec<(Vec<i64>, u32)>,
}

impl Rational {
    fn new(numer: &[i64], denom: &[(&[i64], u32)]) -> Self {
        Rational {
            numer: numer.to_vec(),
            denom: denom.iter().map(|(f, p)| (f.to_vec(), *p)).collect(),
        }
    }

    pub fn expand(&self, order: usize) -> Result<TSeries> {
        let num = TSeries::from_ints(self.numer.iter().copied(), order);
        let mut den = TSeries::one(order);
        for (f, p) in &self.denom {
            let f = TSeries::from_ints(f.iter().copied(), order);
            for _ in 0..*p {
                den = den.mul(&f);
            }
        }
        num.div(&den)
    }

    /// The expansion as integers; every form here is free of `x`.
    pub fn expand_ints(&self, order: usize) -> Result<Vec<BigInt>> {
        Ok(self.expand(order)?.int_coeffs())
    }

    pub fn render(&self) -> String {
        let num = XPoly::from_coeffs(self.numer.iter().copied()).render("t");
        let den: Vec<String> = self
            .denom
            .iter()
            .map(|(f, p)| {
                let f = XPoly::from_coeffs(f.iter().copied()).render("t");
                if *p == 1 {
                    format!("({f})")
                } else {
                    format!("({f})^{p}")
                }
            })
            .collect();
        format!("({num})/{}", den.join(""))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub family: FamilyId,
    pub slice: Slice,
    pub published: Rational,
    /// Present when the published form is a misprint.
    pub corrected: Option<Rational>,
}

impl RationalForm {
    pub fn expected(&self) -> &Rational {
        self.corrected.as_ref().unwrap_or(&self.published)
    }
}

fn form(family: FamilyId, slice: Slice, published: Rational) -> RationalForm {
    RationalForm { family, slice, published, corrected: None }
}

/// The published rational forms of constant terms and `x`-slices.
pub fn rational_corpus() -> Vec<RationalForm> {
    use Slice::{Constant, X1};
    let r = Rational::new;
    let mut out = vec![
        // (k,0,0,0) at x = 0
        form(FamilyId::k000(2), Constant, r(&[1, -1], &[(&[1, -2], 1)])),
        form(FamilyId::k000(3), Constant, r(&[1, -2], &[(&[1, -3, 1], 1)])),
        form(FamilyId::k000(4), Constant, r(&[1, -3, 1], &[(&[1, -4, 3], 1)])),
        form(FamilyId::k000(5), Constant, r(&[1, -4, 3], &[(&[1, -5, 6, -1], 1)])),
        form(FamilyId::k000(6), Constant, r(&[1, -5, 6, -1], &[(&[1, -6, 10, -4], 1)])),
        RationalForm {
            family: FamilyId::k000(7),
            slice: Constant,
            // published numerator 1-6t+10t^3-4t^3
            published: r(&[1, -6, 0, 6], &[(&[1, -7, 15, -10, 1], 1)]),
            corrected: Some(r(&[1, -6, 10, -4], &[(&[1, -7, 15, -10, 1], 1)])),
        },
        // (0,k,0,0) at x = 0
        form(FamilyId::ok00(1), Constant, r(&[1], &[(&[1, -1], 1)])),
        form(FamilyId::ok00(2), Constant, r(&[1, -1, 1], &[(&[1, -1], 2)])),
        form(FamilyId::ok00(3), Constant, r(&[1, -2, 2, 1, -1], &[(&[1, -1], 3)])),
        form(FamilyId::ok00(4), Constant, r(&[1, -3, 4, -1, 3, -5, 2], &[(&[1, -1], 4)])),
        form(
            FamilyId::ok00(5),
            Constant,
            r(&[1, -4, 7, -5, 4, 6, -21, 18, -5], &[(&[1, -1], 5)]),
        ),
        // (k,0,0,0), coefficient of x
        form(FamilyId::k000(1), X1, r(&[0, 0, 1], &[(&[1, -1], 2)])),
        form(FamilyId::k000(2), X1, r(&[0, 0, 0, 1], &[(&[1, -2], 2)])),
        RationalForm {
            family: FamilyId::k000(3),
            slice: X1,
            published: r(&[0, 0, 0, 0, 1], &[(&[1, -3, -1], 2)]),
            corrected: Some(r(&[0, 0, 0, 0, 1], &[(&[1, -3, 1], 2)])),
        },
        form(FamilyId::k000(4), X1, r(&[0, 0, 0, 0, 0, 1], &[(&[1, -4, 3], 2)])),
        // (k,0,∅,0), coefficient of x
        form(FamilyId::k0e0(1), X1, r(&[0, 0, 1], &[(&[1, -1], 3)])),
        form(FamilyId::k0e0(2), X1, r(&[0, 0, 0, 1], &[(&[1, -1], 1), (&[1, -2], 2)])),
        form(FamilyId::k0e0(3), X1, r(&[0, 0, 0, 0, 1], &[(&[1, -1], 1), (&[1, -3, 1], 2)])),
        form(FamilyId::k0e0(4), X1, r(&[0, 0, 0, 0, 0, 1], &[(&[1, -1], 3), (&[1, -3], 2)])),
        form(
            FamilyId::k0e0(5),
            X1,
            r(&[0, 0, 0, 0, 0, 0, 1], &[(&[1, -1], 1), (&[1, -5, 6, -1], 2)]),
        ),
    ];
    // 1/(1 - t(C_0 + ... + C_{k-1} t^{k-1})) for (0,0,k,0) and (∅,0,k,0)
    let cat = crate::genfun::catalan_numbers(4);
    for k in 1..=4u32 {
        let mut d = vec![1i64];
        d.extend(cat[..k as usize].iter().map(|c| -i64::try_from(c).unwrap()));
        out.push(form(FamilyId::ook0(k), Constant, r(&[1], &[(&d, 1)])));
        out.push(form(FamilyId::e0k0(k), Constant, r(&[1], &[(&d, 1)])));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::recursion_poly;

    #[test]
    fn corpus_parses() {
        let c = series_corpus();
        assert_eq!(c.len(), 23);
        assert!(c.iter().all(|b| b.entries.len() == 10));
        let misprints = c
            .iter()
            .flat_map(|b| &b.entries)
            .filter(|e| e.corrected.is_some())
            .count();
        assert_eq!(misprints, 3);
    }

    #[test]
    fn corpus_matches_recursion() {
        for block in series_corpus() {
            for e in &block.entries {
                assert_eq!(
                    &recursion_poly(block.family, e.n),
                    e.expected(),
                    "{} n={}",
                    block.family,
                    e.n
                );
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_series_data("0: 1").is_err());
        assert!(parse_series_data("[zzz 1]").is_err());
        assert!(parse_series_data("[k000 1]\nq: 1").is_err());
    }

    #[test]
    fn rational_rendering() {
        let f = &rational_corpus()[0];
        assert_eq!(f.published.render(), "(1-t)/(1-2t)");
        assert_eq!(
            f.published.expand_ints(5).unwrap(),
            crate::series::ints(&[1, 1, 2, 4, 8, 16])
        );
    }
}
