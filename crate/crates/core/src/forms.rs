//! Homogeneous polynomials in `X, Y, Z` with rational coefficients.
//!
//! A [`Form`] stores a dense coefficient vector over the monomials of its
//! degree in graded-lex order with `X > Y > Z`. The zero form keeps its
//! degree. Negative degrees are allowed and denote the zero space, which is
//! what a matrix entry of negative required degree lives in.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg;

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    /// Position of this monomial in [`monomial_basis`] of its degree.
    pub fn index(&self) -> usize {
        let k = (self.y + self.z) as usize;
        k * (k + 1) / 2 + self.z as usize
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

/// `dim S^d = (d+1)(d+2)/2`, zero for negative `d`.
pub fn space_dim(d: i32) -> usize {
    if d < 0 {
        0
    } else {
        let d = d as usize;
        (d + 1) * (d + 2) / 2
    }
}

/// Monomials of degree `d` in graded-lex order, `X^d` first and `Z^d` last.
pub fn monomial_basis(d: i32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(space_dim(d));
    if d < 0 {
        return out;
    }
    let d = d as u32;
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    degree: i32,
    coeffs: Vec<Scalar>,
}

impl Form {
    pub fn zero(degree: i32) -> Self {
        Form {
            degree,
            coeffs: vec![Scalar::zero(); space_dim(degree)],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Form {
            degree: 0,
            coeffs: vec![c],
        }
    }

    pub fn one() -> Self {
        Form::constant(Scalar::one())
    }

    pub fn x() -> Self {
        Form::linear(1, 0, 0)
    }

    pub fn y() -> Self {
        Form::linear(0, 1, 0)
    }

    pub fn z() -> Self {
        Form::linear(0, 0, 1)
    }

    /// `a X + b Y + c Z`.
    pub fn linear(a: i64, b: i64, c: i64) -> Self {
        Form {
            degree: 1,
            coeffs: vec![int(a), int(b), int(c)],
        }
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut f = Form::zero(m.degree() as i32);
        f.coeffs[m.index()] = c;
        f
    }

    /// Builds a form from its coefficient vector in basis order.
    pub fn from_coeffs(degree: i32, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != space_dim(degree) {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for degree {degree}",
                coeffs.len()
            )));
        }
        Ok(Form { degree, coeffs })
    }

    /// Sum of terms, all of degree `degree`.
    pub fn from_terms(degree: i32, terms: &[(Monomial, Scalar)]) -> Result<Self> {
        let mut f = Form::zero(degree);
        for (m, c) in terms {
            if m.degree() as i32 != degree {
                return Err(Error::DegreeMismatch(degree, m.degree() as i32));
            }
            f.coeffs[m.index()] += c;
        }
        Ok(f)
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        if m.degree() as i32 == self.degree {
            self.coeffs[m.index()].clone()
        } else {
            Scalar::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Scalar)> {
        monomial_basis(self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, g: &Form) -> Result<Form> {
        self.check_degree(g)?;
        Ok(Form {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, g: &Form) -> Result<Form> {
        self.check_degree(g)?;
        Ok(Form {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Form {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, g: &Form) -> Form {
        let degree = self.degree + g.degree;
        let mut out = Form::zero(degree);
        if self.degree < 0 || g.degree < 0 {
            return out;
        }
        let gt: Vec<_> = g.terms().collect();
        for (m, a) in self.terms() {
            for (n, b) in &gt {
                out.coeffs[m.mul(n).index()] += a * *b;
            }
        }
        out
    }

    /// `h` with `g h = self`, if it exists.
    pub fn divide_exact(&self, g: &Form) -> Option<Form> {
        if g.is_zero() || self.degree < g.degree {
            return None;
        }
        let hd = self.degree - g.degree;
        let m = g.multiplication_matrix(hd);
        let sol = linalg::solve(&Rationals, &m, space_dim(hd), &self.coeffs)?;
        Some(Form {
            degree: hd,
            coeffs: sol,
        })
    }

    /// Matrix of `h -> self * h` from degree `d` to degree `d + deg self`,
    /// in the monomial bases. Rows index the target.
    pub fn multiplication_matrix(&self, d: i32) -> Vec<Vec<Scalar>> {
        let rows = space_dim(d + self.degree);
        let cols = space_dim(d);
        let mut m = vec![vec![Scalar::zero(); cols]; rows];
        if self.degree < 0 {
            return m;
        }
        for (j, mono) in monomial_basis(d).iter().enumerate() {
            for (n, c) in self.terms() {
                m[mono.mul(&n).index()][j] += c;
            }
        }
        m
    }

    pub fn eval(&self, p: &[Scalar; 3]) -> Scalar {
        self.terms().fold(Scalar::zero(), |acc, (m, c)| {
            acc + c * pow(&p[0], m.x) * pow(&p[1], m.y) * pow(&p[2], m.z)
        })
    }

    /// Coefficients drawn uniformly from `[-height, height]`.
    pub fn random<R: Rng + ?Sized>(d: i32, rng: &mut R, height: i64) -> Form {
        assert!(height >= 1, "height must be positive");
        Form {
            degree: d,
            coeffs: (0..space_dim(d))
                .map(|_| int(rng.gen_range(-height..=height)))
                .collect(),
        }
    }

    /// Parses the text grammar, e.g. `3*X^2*Y - 1/2*Z^3`. The degree is read
    /// off the terms; `expected` is needed when the text is the zero form.
    pub fn parse(s: &str, expected: Option<i32>) -> Result<Form> {
        let mut terms = parse_terms(s)?;
        terms.retain(|(_, c)| !c.is_zero());
        let mut degree = expected;
        for (m, _) in &terms {
            let d = m.degree() as i32;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Parse(format!(
                        "term of degree {d} in a form of degree {e}: {s:?}"
                    )))
                }
                _ => {}
            }
        }
        let Some(degree) = degree else {
            return Err(Error::Parse(format!("cannot infer the degree of {s:?}")));
        };
        Form::from_terms(degree, &terms)
    }

    fn check_degree(&self, g: &Form) -> Result<()> {
        if self.degree != g.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree));
        }
        Ok(())
    }
}

fn pow(b: &Scalar, e: u32) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * b)
}

/// Dimension of the span of same-degree forms.
pub fn span_dimension(fs: &[Form]) -> Result<usize> {
    let Some(first) = fs.first() else {
        return Ok(0);
    };
    for f in fs {
        first.check_degree(f)?;
    }
    let rows = fs.iter().map(|f| f.coeffs.clone()).collect();
    Ok(linalg::rank_rational(&rows, space_dim(first.degree)))
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let vars: Vec<String> = [("X", m.x), ("Y", m.y), ("Z", m.z)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn parse_terms(s: &str) -> Result<Vec<(Monomial, Scalar)>> {
    let chars: Vec<char> = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut coeff = Scalar::one();
        let mut sign_seen = false;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                coeff = -coeff;
            }
            sign_seen = true;
            i += 1;
        }
        if !sign_seen && !terms.is_empty() {
            return Err(err("missing operator"));
        }
        let mut mono = Monomial::new(0, 0, 0);
        let mut factors = 0;
        loop {
            if i >= chars.len() {
                break;
            }
            let c = chars[i];
            if c.is_ascii_digit() {
                let (v, next) = read_rational(&chars, i).ok_or_else(|| err("bad number"))?;
                coeff *= v;
                i = next;
            } else if matches!(c, 'X' | 'Y' | 'Z' | 'x' | 'y' | 'z') {
                i += 1;
                let mut e = 1u32;
                if i < chars.len() && chars[i] == '^' {
                    let start = i + 1;
                    let mut end = start;
                    while end < chars.len() && chars[end].is_ascii_digit() {
                        end += 1;
                    }
                    let digits: String = chars[start..end].iter().collect();
                    e = digits.parse().map_err(|_| err("bad exponent"))?;
                    i = end;
                }
                match c.to_ascii_uppercase() {
                    'X' => mono.x += e,
                    'Y' => mono.y += e,
                    _ => mono.z += e,
                }
            } else {
                return Err(err(&format!("unexpected {c:?}")));
            }
            factors += 1;
            if i < chars.len() && chars[i] == '*' {
                i += 1;
                if i >= chars.len() {
                    return Err(err("dangling '*'"));
                }
                continue;
            }
            if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                break;
            }
        }
        if factors == 0 {
            return Err(err("empty term"));
        }
        terms.push((mono, coeff));
    }
    Ok(terms)
}

fn read_rational(chars: &[char], start: usize) -> Option<(Scalar, usize)> {
    let read_int = |from: usize| {
        let mut end = from;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        let s: String = chars[from..end].iter().collect();
        s.parse::<BigInt>().ok().map(|v| (v, end))
    };
    let (n, mut i) = read_int(start)?;
    let mut d = BigInt::one();
    if i < chars.len() && chars[i] == '/' {
        let (dv, next) = read_int(i + 1)?;
        if dv.is_zero() {
            return None;
        }
        d = dv;
        i = next;
    }
    Some((BigRational::new(n, d), i))
}
