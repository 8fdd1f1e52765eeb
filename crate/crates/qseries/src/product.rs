//! Infinite products as truncatable factor families, and their exact
//! expansion.
//!
//! A [`ProductSpec`] is a list of families ∏_j (1 + c_j·q^{e_j})^{±1} with
//! e_j = first + step·j an increasing arithmetic progression. Expanding at
//! order N touches exactly the factors with e_j ≤ N, and each factor is
//! folded in with a sparse binomial multiply or divide, so the whole
//! expansion is exact and costs O(N²/step) per family.
//!
//! The Pochhammer products in use here are, in the standard notation,
//! (a; b)_∞ = ∏_{j≥0} (1 − a·bʲ) where a and b are signed monomials — a
//! negative base b makes the factor signs alternate, which is what the
//! [`CoeffPattern::Alternating`] pattern encodes. [`BivariateProductSpec`]
//! is the same idea with monomials in both t and q.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::bivariate::BivariateSeries;
use crate::series::Series;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("factor exponents must be at least 1, found {0}")]
    ExponentTooSmall(u64),
    #[error("exponent progression step must be at least 1")]
    ZeroStep,
    #[error("t-exponent ({t}) may not exceed q-exponent ({q}) in a bivariate factor")]
    TDegreeTooLarge { t: u64, q: u64 },
}

/// Coefficient of the j-th factor in a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffPattern {
    /// c_j = c for all j.
    Constant(BigInt),
    /// c_j = c·(−1)^j.
    Alternating(BigInt),
}

impl CoeffPattern {
    fn coeff(&self, j: u64) -> BigInt {
        match self {
            CoeffPattern::Constant(c) => c.clone(),
            CoeffPattern::Alternating(c) => {
                if j % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                }
            }
        }
    }
}

/// One family ∏_{j≥0} (1 + c_j·q^{first + step·j})^{±1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFamily {
    pattern: CoeffPattern,
    first: u64,
    step: u64,
    inverted: bool,
}

impl FactorFamily {
    pub fn new(
        pattern: CoeffPattern,
        first: u64,
        step: u64,
        inverted: bool,
    ) -> Result<Self, SpecError> {
        if first < 1 {
            return Err(SpecError::ExponentTooSmall(first));
        }
        if step < 1 {
            return Err(SpecError::ZeroStep);
        }
        Ok(FactorFamily { pattern, first, step, inverted })
    }

    /// The Pochhammer family (±q^a; ±q^b)_∞, optionally inverted: factor j
    /// is (1 − σ_a·σ_b^j·q^{a+bj}), so a negative base alternates signs.
    pub fn pochhammer(
        a_negative: bool,
        a_exp: u64,
        base_negative: bool,
        base_exp: u64,
        inverted: bool,
    ) -> Result<Self, SpecError> {
        let lead = BigInt::from(if a_negative { 1 } else { -1 });
        let pattern = if base_negative {
            CoeffPattern::Alternating(lead)
        } else {
            CoeffPattern::Constant(lead)
        };
        Self::new(pattern, a_exp, base_exp, inverted)
    }
}

/// A finite-at-every-order product of factor families.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSpec {
    families: Vec<FactorFamily>,
}

impl ProductSpec {
    pub fn new(families: Vec<FactorFamily>) -> Self {
        ProductSpec { families }
    }

    pub fn families(&self) -> &[FactorFamily] {
        &self.families
    }

    /// Exact expansion to the given q-order; consumes precisely the
    /// factors whose exponent is ≤ order.
    pub fn expand(&self, order: usize) -> Series<BigInt> {
        let mut out = Series::one(order);
        for family in &self.families {
            let mut j = 0u64;
            loop {
                let exp = family.first + family.step * j;
                if exp > order as u64 {
                    break;
                }
                let c = family.pattern.coeff(j);
                if !c.is_zero() {
                    if family.inverted {
                        out.div_binomial(&c, exp as usize);
                    } else {
                        out.mul_binomial(&c, exp as usize);
                    }
                }
                j += 1;
            }
        }
        out
    }

    /// 1/(q; q)_∞ — the partition generating function.
    pub fn partition_gf() -> Self {
        ProductSpec::new(vec![FactorFamily::pochhammer(false, 1, false, 1, true).unwrap()])
    }

    /// ∏_{n≥1} 1/(1 + (−1)ⁿ·q^{2n−1}).
    pub fn alternating_odd_gf() -> Self {
        // Reindexing by j = n−1 the factor is 1 + (−1)^{j+1} q^{1+2j}.
        let pattern = CoeffPattern::Alternating(BigInt::from(-1));
        ProductSpec::new(vec![FactorFamily::new(pattern, 1, 2, true).unwrap()])
    }

    /// 1/(q, −q^{m−1}; q^m)_∞, the two-residue-class product scanned for
    /// nonnegativity and growth. Needs m ≥ 2 so both exponents are
    /// positive.
    pub fn residue_pair_gf(m: u64) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        ProductSpec::new(vec![
            FactorFamily::pochhammer(false, 1, false, m, true).unwrap(),
            FactorFamily::pochhammer(true, m - 1, false, m, true).unwrap(),
        ])
    }

    /// 1/(q, −q²; −q²)_∞ — parity-gap generating function over all
    /// partitions.
    pub fn all_partitions_parity_gf() -> Self {
        ProductSpec::new(vec![
            FactorFamily::pochhammer(false, 1, true, 2, true).unwrap(),
            FactorFamily::pochhammer(true, 2, true, 2, true).unwrap(),
        ])
    }

    /// (−q, q²; −q²)_∞ — parity-gap generating function over partitions
    /// into distinct parts.
    pub fn distinct_parts_parity_gf() -> Self {
        ProductSpec::new(vec![
            FactorFamily::pochhammer(true, 1, true, 2, false).unwrap(),
            FactorFamily::pochhammer(false, 2, true, 2, false).unwrap(),
        ])
    }

    /// 1/(x; x)_∞² — two-colored partitions.
    pub fn two_colored_gf() -> Self {
        let family = || FactorFamily::pochhammer(false, 1, false, 1, true).unwrap();
        ProductSpec::new(vec![family(), family()])
    }

    /// Parses the compact text form, e.g. `1/((q;q4)(-q3;q4))` for
    /// 1/((q;q⁴)_∞·(−q³;q⁴)_∞).
    ///
    /// Grammar:
    /// ```text
    /// spec  := "1/(" group+ ")" | "1/" group | group+
    /// group := "(" mono ("," mono)* ";" mono ")"
    /// mono  := "-"? VAR exponent?
    /// ```
    /// where VAR is a single letter (the same throughout the spec) and the
    /// exponent defaults to 1. Each group (a₁,…,a_r; b) stands for the
    /// product of the Pochhammer factors (a_i; b)_∞.
    pub fn parse(text: &str) -> Result<Self, SpecParseError> {
        Parser::new(text).parse()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid product spec: {0}")]
pub struct SpecParseError(pub String);

struct Monomial {
    negative: bool,
    exponent: u64,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    variable: Option<u8>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0, variable: None }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, want: u8) -> Result<(), SpecParseError> {
        match self.bump() {
            Some(b) if b == want => Ok(()),
            Some(b) => Err(SpecParseError(format!(
                "expected '{}', found '{}'",
                want as char, b as char
            ))),
            None => Err(SpecParseError(format!(
                "expected '{}', found end of input",
                want as char
            ))),
        }
    }

    fn parse(mut self) -> Result<ProductSpec, SpecParseError> {
        let mut inverted = false;
        if self.peek() == Some(b'1') {
            self.bump();
            self.expect(b'/')?;
            inverted = true;
        }
        self.expect(b'(')?;
        let mut families = Vec::new();
        if self.peek() == Some(b'(') {
            // "…((a;b)(c;d))": a parenthesized list of groups.
            while self.peek() == Some(b'(') {
                self.bump();
                self.parse_group_interior(inverted, &mut families)?;
            }
            self.expect(b')')?;
        } else {
            // "…(a;b)": the single group supplies its own parentheses.
            self.parse_group_interior(inverted, &mut families)?;
        }
        // Further bare groups may follow, e.g. "(q;q)(q;q)".
        while self.peek() == Some(b'(') {
            self.bump();
            self.parse_group_interior(inverted, &mut families)?;
        }
        if let Some(b) = self.peek() {
            return Err(SpecParseError(format!("unexpected trailing '{}'", b as char)));
        }
        if families.is_empty() {
            return Err(SpecParseError("empty product".into()));
        }
        Ok(ProductSpec::new(families))
    }

    /// Parses `mono ("," mono)* ";" mono ")"` and appends one family per
    /// leading monomial.
    fn parse_group_interior(
        &mut self,
        inverted: bool,
        families: &mut Vec<FactorFamily>,
    ) -> Result<(), SpecParseError> {
        let mut leads = vec![self.parse_monomial()?];
        while self.peek() == Some(b',') {
            self.bump();
            leads.push(self.parse_monomial()?);
        }
        self.expect(b';')?;
        let base = self.parse_monomial()?;
        self.expect(b')')?;
        for a in leads {
            let family =
                FactorFamily::pochhammer(a.negative, a.exponent, base.negative, base.exponent, inverted)
                    .map_err(|e| SpecParseError(e.to_string()))?;
            families.push(family);
        }
        Ok(())
    }

    fn parse_monomial(&mut self) -> Result<Monomial, SpecParseError> {
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.bump();
            negative = true;
        }
        let var = match self.bump() {
            Some(b) if b.is_ascii_alphabetic() => b,
            Some(b) => {
                return Err(SpecParseError(format!(
                    "expected a variable letter, found '{}'",
                    b as char
                )))
            }
            None => return Err(SpecParseError("expected a variable letter, found end".into())),
        };
        match self.variable {
            Some(v) if v != var => {
                return Err(SpecParseError(format!(
                    "mixed variables '{}' and '{}'",
                    v as char, var as char
                )))
            }
            _ => self.variable = Some(var),
        }
        let mut digits = String::new();
        while let Some(b) = self.bytes.get(self.pos).copied() {
            if b.is_ascii_digit() {
                digits.push(b as char);
                self.pos += 1;
            } else {
                break;
            }
        }
        let exponent = if digits.is_empty() {
            1
        } else {
            digits
                .parse::<u64>()
                .map_err(|e| SpecParseError(format!("bad exponent {digits:?}: {e}")))?
        };
        if exponent == 0 {
            return Err(SpecParseError("exponent must be at least 1".into()));
        }
        Ok(Monomial { negative, exponent })
    }
}

/// One bivariate family ∏_{j≥0} (1 + c·t^{t_first+t_step·j}·q^{q_first+q_step·j})^{±1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateFactorFamily {
    coeff: BigInt,
    t_first: u64,
    t_step: u64,
    q_first: u64,
    q_step: u64,
    inverted: bool,
}

impl BivariateFactorFamily {
    /// Validates that q-exponents start at 1 and grow, and that every
    /// factor's t-exponent stays within its q-exponent (which keeps the
    /// t-degree of the expansion within the q-order).
    pub fn new(
        coeff: BigInt,
        t_first: u64,
        t_step: u64,
        q_first: u64,
        q_step: u64,
        inverted: bool,
    ) -> Result<Self, SpecError> {
        if q_first < 1 {
            return Err(SpecError::ExponentTooSmall(q_first));
        }
        if q_step < 1 {
            return Err(SpecError::ZeroStep);
        }
        if t_first > q_first {
            return Err(SpecError::TDegreeTooLarge { t: t_first, q: q_first });
        }
        if t_step > q_step {
            return Err(SpecError::TDegreeTooLarge { t: t_step, q: q_step });
        }
        Ok(BivariateFactorFamily { coeff, t_first, t_step, q_first, q_step, inverted })
    }

    /// (±t^{ta}·q^{qa}; t^{tb}·q^{qb})_∞, optionally inverted.
    pub fn pochhammer(
        negative: bool,
        t_a: u64,
        q_a: u64,
        t_b: u64,
        q_b: u64,
        inverted: bool,
    ) -> Result<Self, SpecError> {
        Self::new(BigInt::from(if negative { 1 } else { -1 }), t_a, t_b, q_a, q_b, inverted)
    }
}

/// A product of bivariate factor families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateProductSpec {
    families: Vec<BivariateFactorFamily>,
}

impl BivariateProductSpec {
    pub fn new(families: Vec<BivariateFactorFamily>) -> Self {
        BivariateProductSpec { families }
    }

    pub fn expand(&self, order: usize) -> BivariateSeries {
        let mut out = BivariateSeries::one(order);
        for family in &self.families {
            let mut j = 0u64;
            loop {
                let q_exp = family.q_first + family.q_step * j;
                if q_exp > order as u64 {
                    break;
                }
                let t_exp = (family.t_first + family.t_step * j) as usize;
                if family.inverted {
                    out.div_binomial(&family.coeff, t_exp, q_exp as usize);
                } else {
                    out.mul_binomial(&family.coeff, t_exp, q_exp as usize);
                }
                j += 1;
            }
        }
        out
    }

    /// 1/(tq, q²; q²)_∞ — all partitions counted by odd parts and weight.
    pub fn all_partitions_gf() -> Self {
        BivariateProductSpec::new(vec![
            BivariateFactorFamily::pochhammer(false, 1, 1, 0, 2, true).unwrap(),
            BivariateFactorFamily::pochhammer(false, 0, 2, 0, 2, true).unwrap(),
        ])
    }

    /// (−tq, −q²; q²)_∞ — distinct parts counted by odd parts and weight.
    pub fn distinct_parts_gf() -> Self {
        BivariateProductSpec::new(vec![
            BivariateFactorFamily::pochhammer(true, 1, 1, 0, 2, false).unwrap(),
            BivariateFactorFamily::pochhammer(true, 0, 2, 0, 2, false).unwrap(),
        ])
    }

    /// 1/(tq, tq^{4d−1}; q^{4d})_∞ — parts ≡ ±1 (mod 4d) counted by odd
    /// parts (all of them are odd) and weight.
    pub fn odd_mod_gf(d: u64) -> Self {
        assert!(d >= 1);
        BivariateProductSpec::new(vec![
            BivariateFactorFamily::pochhammer(false, 1, 1, 0, 4 * d, true).unwrap(),
            BivariateFactorFamily::pochhammer(false, 1, 4 * d - 1, 0, 4 * d, true).unwrap(),
        ])
    }

    /// 1/(q, tq²; tq²)_∞ — partitions counted by conjugated-index defect
    /// and weight.
    pub fn defect_gf() -> Self {
        BivariateProductSpec::new(vec![
            BivariateFactorFamily::pochhammer(false, 0, 1, 1, 2, true).unwrap(),
            BivariateFactorFamily::pochhammer(false, 1, 2, 1, 2, true).unwrap(),
        ])
    }

    /// 1/(tq², tq³; tq²)_∞ — the same census restricted to partitions
    /// without ones.
    pub fn no_ones_defect_gf() -> Self {
        BivariateProductSpec::new(vec![
            BivariateFactorFamily::pochhammer(false, 1, 2, 1, 2, true).unwrap(),
            BivariateFactorFamily::pochhammer(false, 1, 3, 1, 2, true).unwrap(),
        ])
    }
}
