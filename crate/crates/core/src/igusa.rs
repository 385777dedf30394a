//! Igusa invariants of genus-2 curves `y² = f(X)` with `f` a quintic.
//!
//! Quintics are stored in the alternating-sign convention
//! `f(X) = v₀X⁵ − v₁X⁴ + v₂X³ − v₃X² + v₄X − v₅`, under which the invariant
//! polynomials below are written.

use crate::valfield::{ExtRat, Poly, RatFunc, ValuedField, ValuedScalar};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum IgusaError {
    #[error("leading coefficient of the quintic is zero")]
    ZeroLeadingCoefficient,
    #[error("the quintic has a repeated root (discriminant zero)")]
    DegenerateCurve,
    #[error("the given value is not a root of the sextic")]
    NotARoot,
    #[error("the given root of the sextic is not simple")]
    RootNotSimple,
}

/// A quintic model `y² = f(X)`, coefficients `v₀..v₅` in alternating-sign form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticModel {
    v: [ValuedScalar; 6],
}

impl QuinticModel {
    /// From `v₀..v₅` as they appear in `v₀X⁵ − v₁X⁴ + v₂X³ − v₃X² + v₄X − v₅`.
    pub fn from_alternating(v: [ValuedScalar; 6]) -> Result<Self, IgusaError> {
        if v[0].is_zero() {
            return Err(IgusaError::ZeroLeadingCoefficient);
        }
        Ok(QuinticModel { v })
    }

    /// From plain monomial coefficients `c₀..c₅` of `Σ cₖXᵏ`.
    pub fn from_monomial(c: [ValuedScalar; 6]) -> Result<Self, IgusaError> {
        let v = std::array::from_fn(|i| {
            let ci = &c[5 - i];
            if i % 2 == 0 {
                ci.clone()
            } else {
                -ci
            }
        });
        Self::from_alternating(v)
    }

    /// `lead · ∏ (X − rₖ)`.
    pub fn from_roots(lead: ValuedScalar, roots: &[ValuedScalar; 5]) -> Result<Self, IgusaError> {
        let mut c = vec![lead];
        for r in roots {
            // multiply by (X - r)
            let mut next = vec![ValuedScalar::zero(); c.len() + 1];
            for (k, ck) in c.iter().enumerate() {
                next[k + 1] = &next[k + 1] + ck;
                next[k] = &next[k] - &(ck * r);
            }
            c = next;
        }
        let c: [ValuedScalar; 6] = c.try_into().expect("degree 5");
        Self::from_monomial(c)
    }

    pub fn alternating(&self) -> &[ValuedScalar; 6] {
        &self.v
    }

    /// Monomial coefficients `c₀..c₅` (index = power of `X`).
    pub fn monomial(&self) -> [ValuedScalar; 6] {
        std::array::from_fn(|k| {
            let vi = &self.v[5 - k];
            if (5 - k) % 2 == 0 {
                vi.clone()
            } else {
                -vi
            }
        })
    }

    pub fn eval(&self, x: &ValuedScalar) -> ValuedScalar {
        self.monomial()
            .iter()
            .rev()
            .fold(ValuedScalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// The model of `f(X + b)`.
    pub fn translate(&self, b: &ValuedScalar) -> QuinticModel {
        let c = self.monomial();
        let mut out: [ValuedScalar; 6] = std::array::from_fn(|_| ValuedScalar::zero());
        // (X + b)^k = Σ_j C(k, j) b^(k-j) X^j
        for (k, ck) in c.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let coeff = ValuedScalar::int(binomial(k, j)) * b.pow((k - j) as u32);
                *slot = &*slot + &(ck * &coeff);
            }
        }
        QuinticModel::from_monomial(out).expect("translation keeps the leading coefficient")
    }

    /// The model of `f(aX)`; `a` must be nonzero.
    pub fn scale_x(&self, a: &ValuedScalar) -> QuinticModel {
        let c = self.monomial();
        let out = std::array::from_fn(|k| &c[k] * &a.pow(k as u32));
        QuinticModel::from_monomial(out).expect("nonzero scaling keeps the leading coefficient")
    }

    /// The model of `λ·f(X)` (a twist of `y` when `λ` is not a square).
    pub fn scale(&self, lambda: &ValuedScalar) -> QuinticModel {
        QuinticModel::from_alternating(std::array::from_fn(|i| &self.v[i] * lambda))
            .expect("nonzero scaling keeps the leading coefficient")
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[cfg(test)]
/// `det` by fraction-free Gaussian elimination (Bareiss); all divisions are exact.
pub(crate) fn determinant(mut m: Vec<Vec<ValuedScalar>>) -> ValuedScalar {
    let n = m.len();
    if n == 0 {
        return ValuedScalar::one();
    }
    let mut sign = false;
    let mut prev = ValuedScalar::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return ValuedScalar::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = &num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
/// Resultant via the Sylvester determinant; coefficient slices are highest degree first.
pub(crate) fn resultant(f: &[ValuedScalar], g: &[ValuedScalar]) -> ValuedScalar {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![ValuedScalar::zero(); size];
        row[shift..shift + m + 1].clone_from_slice(f);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![ValuedScalar::zero(); size];
        row[shift..shift + n + 1].clone_from_slice(g);
        rows.push(row);
    }
    determinant(rows)
}

/// Discriminant `Res(f, f′)/v₀`, equal to `v₀⁸·∏_{i<j}(rᵢ − rⱼ)²`.
pub fn discriminant(q: &QuinticModel) -> ValuedScalar {
    eval_terms(&q.monomial(), &DISC_TERMS).simplify()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaInvariants {
    pub j2: ValuedScalar,
    pub j4: ValuedScalar,
    pub j6: ValuedScalar,
    pub j8: ValuedScalar,
    pub j10: ValuedScalar,
    pub i2: ValuedScalar,
    pub i4: ValuedScalar,
    pub i6: ValuedScalar,
    pub i8: ValuedScalar,
    pub i12: ValuedScalar,
}

impl IgusaInvariants {
    /// `J₄² − J₂J₆ + 4J₈`, which vanishes identically.
    pub fn relation(&self) -> ValuedScalar {
        &(&(&self.j4 * &self.j4) - &(&self.j2 * &self.j6)) + &(&ValuedScalar::int(4) * &self.j8)
    }

    pub fn named(&self) -> [(&'static str, &ValuedScalar); 10] {
        [
            ("J2", &self.j2),
            ("J4", &self.j4),
            ("J6", &self.j6),
            ("J8", &self.j8),
            ("J10", &self.j10),
            ("I2", &self.i2),
            ("I4", &self.i4),
            ("I6", &self.i6),
            ("I8", &self.i8),
            ("I12", &self.i12),
        ]
    }
}

/// `(numerator, denominator, [e₀..e₅])` for `num/den · ∏ vᵢ^eᵢ`.
type Term = (i64, i64, [u32; 6]);

const J4_BRACKET: [Term; 11] = [
    (25, 1, [2, 0, 0, 1, 0, 1]),
    (-15, 1, [2, 0, 0, 0, 2, 0]),
    (-15, 1, [1, 1, 1, 0, 0, 1]),
    (7, 1, [1, 1, 0, 1, 1, 0]),
    (1, 2, [1, 0, 2, 0, 1, 0]),
    (-1, 1, [1, 0, 1, 2, 0, 0]),
    (4, 1, [0, 3, 0, 0, 0, 1]),
    (-1, 1, [0, 2, 1, 0, 1, 0]),
    (-1, 1, [0, 2, 0, 2, 0, 0]),
    (1, 1, [0, 1, 2, 1, 0, 0]),
    (-3, 16, [0, 0, 4, 0, 0, 0]),
];

const J6_BRACKET: [Term; 26] = [
    (125, 2, [3, 0, 1, 0, 0, 2]),
    (-25, 1, [3, 0, 0, 1, 1, 1]),
    (5, 1, [3, 0, 0, 0, 3, 0]),
    (-25, 1, [2, 2, 0, 0, 0, 2]),
    (-10, 1, [2, 1, 1, 0, 1, 1]),
    (10, 1, [2, 1, 0, 2, 0, 1]),
    (-1, 1, [2, 1, 0, 1, 2, 0]),
    (-5, 4, [2, 0, 2, 1, 0, 1]),
    (-11, 4, [2, 0, 2, 0, 2, 0]),
    (7, 2, [2, 0, 1, 2, 1, 0]),
    (-1, 1, [2, 0, 0, 4, 0, 0]),
    (6, 1, [1, 3, 0, 0, 1, 1]),
    (-3, 1, [1, 2, 1, 1, 0, 1]),
    (7, 2, [1, 2, 1, 0, 2, 0]),
    (-2, 1, [1, 2, 0, 2, 1, 0]),
    (3, 4, [1, 1, 3, 0, 0, 1]),
    (-7, 4, [1, 1, 2, 1, 1, 0]),
    (1, 1, [1, 1, 1, 3, 0, 0]),
    (7, 16, [1, 0, 4, 0, 1, 0]),
    (-1, 4, [1, 0, 3, 2, 0, 0]),
    (-1, 1, [0, 4, 0, 0, 2, 0]),
    (1, 1, [0, 3, 1, 1, 1, 0]),
    (-1, 4, [0, 2, 3, 0, 1, 0]),
    (-1, 4, [0, 2, 2, 2, 0, 0]),
    (1, 8, [0, 1, 4, 1, 0, 0]),
    (-1, 64, [0, 0, 6, 0, 0, 0]),
];

/// Discriminant of `c₀ + c₁x + … + c₅x⁵` as a polynomial in the monomial coefficients.
const DISC_TERMS: [Term; 59] = [
    (3125, 1, [4, 0, 0, 0, 0, 4]),
    (-2500, 1, [3, 1, 0, 0, 1, 3]),
    (-3750, 1, [3, 0, 1, 1, 0, 3]),
    (2000, 1, [2, 2, 0, 1, 0, 3]),
    (2250, 1, [2, 1, 2, 0, 0, 3]),
    (-1600, 1, [1, 3, 1, 0, 0, 3]),
    (256, 1, [0, 5, 0, 0, 0, 3]),
    (2000, 1, [3, 0, 1, 0, 2, 2]),
    (-50, 1, [2, 2, 0, 0, 2, 2]),
    (2250, 1, [3, 0, 0, 2, 1, 2]),
    (-2050, 1, [2, 1, 1, 1, 1, 2]),
    (160, 1, [1, 3, 0, 1, 1, 2]),
    (-900, 1, [2, 0, 3, 0, 1, 2]),
    (1020, 1, [1, 2, 2, 0, 1, 2]),
    (-192, 1, [0, 4, 1, 0, 1, 2]),
    (-900, 1, [2, 1, 0, 3, 0, 2]),
    (825, 1, [2, 0, 2, 2, 0, 2]),
    (560, 1, [1, 2, 1, 2, 0, 2]),
    (-128, 1, [0, 4, 0, 2, 0, 2]),
    (-630, 1, [1, 1, 3, 1, 0, 2]),
    (144, 1, [0, 3, 2, 1, 0, 2]),
    (108, 1, [1, 0, 5, 0, 0, 2]),
    (-27, 1, [0, 2, 4, 0, 0, 2]),
    (-1600, 1, [3, 0, 0, 1, 3, 1]),
    (160, 1, [2, 1, 1, 0, 3, 1]),
    (-36, 1, [1, 3, 0, 0, 3, 1]),
    (1020, 1, [2, 1, 0, 2, 2, 1]),
    (560, 1, [2, 0, 2, 1, 2, 1]),
    (-746, 1, [1, 2, 1, 1, 2, 1]),
    (144, 1, [0, 4, 0, 1, 2, 1]),
    (24, 1, [1, 1, 3, 0, 2, 1]),
    (-6, 1, [0, 3, 2, 0, 2, 1]),
    (-630, 1, [2, 0, 1, 3, 1, 1]),
    (24, 1, [1, 2, 0, 3, 1, 1]),
    (356, 1, [1, 1, 2, 2, 1, 1]),
    (-80, 1, [0, 3, 1, 2, 1, 1]),
    (-72, 1, [1, 0, 4, 1, 1, 1]),
    (18, 1, [0, 2, 3, 1, 1, 1]),
    (108, 1, [2, 0, 0, 5, 0, 1]),
    (-72, 1, [1, 1, 1, 4, 0, 1]),
    (16, 1, [0, 3, 0, 4, 0, 1]),
    (16, 1, [1, 0, 3, 3, 0, 1]),
    (-4, 1, [0, 2, 2, 3, 0, 1]),
    (256, 1, [3, 0, 0, 0, 5, 0]),
    (-192, 1, [2, 1, 0, 1, 4, 0]),
    (-128, 1, [2, 0, 2, 0, 4, 0]),
    (144, 1, [1, 2, 1, 0, 4, 0]),
    (-27, 1, [0, 4, 0, 0, 4, 0]),
    (144, 1, [2, 0, 1, 2, 3, 0]),
    (-6, 1, [1, 2, 0, 2, 3, 0]),
    (-80, 1, [1, 1, 2, 1, 3, 0]),
    (18, 1, [0, 3, 1, 1, 3, 0]),
    (16, 1, [1, 0, 4, 0, 3, 0]),
    (-4, 1, [0, 2, 3, 0, 3, 0]),
    (-27, 1, [2, 0, 0, 4, 2, 0]),
    (18, 1, [1, 1, 1, 3, 2, 0]),
    (-4, 1, [0, 3, 0, 3, 2, 0]),
    (-4, 1, [1, 0, 3, 2, 2, 0]),
    (1, 1, [0, 2, 2, 2, 2, 0]),
];

fn eval_terms(v: &[ValuedScalar; 6], terms: &[Term]) -> ValuedScalar {
    let top = terms.iter().flat_map(|t| t.2).max().unwrap_or(0) as usize;
    let pows: Vec<Vec<ValuedScalar>> = v
        .iter()
        .map(|x| {
            let mut p = vec![ValuedScalar::one()];
            for k in 1..=top {
                p.push(&p[k - 1] * x);
            }
            p
        })
        .collect();
    terms.iter().fold(ValuedScalar::zero(), |acc, (n, d, e)| {
        let mono = e
            .iter()
            .zip(&pows)
            .filter(|(&k, _)| k > 0)
            .fold(ValuedScalar::ratio(*n, *d), |m, (&k, p)| m * &p[k as usize]);
        acc + mono
    })
}

/// Igusa invariants `J₂..J₁₀` and the derived `I₂, I₄, I₆, I₈, I₁₂`.
///
/// `J₁₀` is normalized as the discriminant of the binary sextic form with a
/// root at infinity divided by `2¹²`, i.e. `v₀²·Δ(f)/2¹²`. With this factor
/// every `J₂ᵢ` has weight `i` under all of `GL₂`, so the weight-zero
/// w-functions do not depend on the chosen model; for monic quintics it
/// agrees with `Δ(f)/2¹²`.
pub fn igusa_from_quintic(q: &QuinticModel) -> Result<IgusaInvariants, IgusaError> {
    // Work with polynomial coefficients and rescale at the end: J_2k is
    // homogeneous of degree 2k in the coefficients.
    let d = common_denominator(&q.v);
    if d.is_constant() {
        return igusa_integral(q);
    }
    let dd = ValuedScalar::Function(RatFunc::poly(d));
    let scaled = QuinticModel {
        v: q.v.clone().map(|x| (&x * &dd).simplify()),
    };
    let j = igusa_integral(&scaled)?;
    let un = |x: ValuedScalar, k: u32| (x / dd.pow(k)).simplify();
    Ok(IgusaInvariants {
        j2: un(j.j2, 2),
        j4: un(j.j4, 4),
        j6: un(j.j6, 6),
        j8: un(j.j8, 8),
        j10: un(j.j10, 10),
        i2: un(j.i2, 2),
        i4: un(j.i4, 4),
        i6: un(j.i6, 6),
        i8: un(j.i8, 8),
        i12: un(j.i12, 12),
    })
}

fn common_denominator(v: &[ValuedScalar; 6]) -> Poly {
    v.iter().fold(Poly::one(), |acc, x| match x {
        ValuedScalar::Function(f) if !f.denom().is_constant() => {
            let den = f.denom();
            let g = acc.gcd(den);
            (&acc * &den.div_rem(&g).0).monic()
        }
        _ => acc,
    })
}

fn igusa_integral(q: &QuinticModel) -> Result<IgusaInvariants, IgusaError> {
    let v = &q.v;
    if v[0].is_zero() {
        return Err(IgusaError::ZeroLeadingCoefficient);
    }
    let disc = discriminant(q);
    if disc.is_zero() {
        return Err(IgusaError::DegenerateCurve);
    }
    let s = |n: i64, d: i64| ValuedScalar::ratio(n, d);

    let j2 = (s(5, 1) * &v[0] * &v[4] - s(2, 1) * &v[1] * &v[3] + s(3, 4) * v[2].pow(2)).simplify();
    let j4 = (s(-1, 8) * eval_terms(v, &J4_BRACKET)).simplify();
    let j6 = (s(-1, 16) * eval_terms(v, &J6_BRACKET)).simplify();
    let j8 = (s(1, 4) * (&j2 * &j6 - &j4 * &j4)).simplify();
    let j10 = (v[0].pow(2) * disc * s(1, 4096)).simplify();

    let i2 = (s(1, 12) * &j2).simplify();
    let i4 = (j2.pow(2) - s(24, 1) * &j4).simplify();
    let i6 = j6.clone();
    let i8 = j8.clone();
    let i12 =
        (s(-8, 1) * j4.pow(3) + s(9, 1) * &j2 * &j4 * &j6 - s(27, 1) * j6.pow(2) - j2.pow(2) * &j8)
            .simplify();

    Ok(IgusaInvariants {
        j2,
        j4,
        j6,
        j8,
        j10,
        i2,
        i4,
        i6,
        i8,
        i12,
    })
}

/// Valuations of the ten invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropIgusa {
    pub vj2: ExtRat,
    pub vj4: ExtRat,
    pub vj6: ExtRat,
    pub vj8: ExtRat,
    pub vj10: ExtRat,
    pub vi2: ExtRat,
    pub vi4: ExtRat,
    pub vi6: ExtRat,
    pub vi8: ExtRat,
    pub vi12: ExtRat,
}

impl TropIgusa {
    /// All-zero valuations (good reduction in residue characteristic ≠ 2, 3).
    pub fn zero() -> Self {
        let z = ExtRat::zero;
        TropIgusa {
            vj2: z(),
            vj4: z(),
            vj6: z(),
            vj8: z(),
            vj10: z(),
            vi2: z(),
            vi4: z(),
            vi6: z(),
            vi8: z(),
            vi12: z(),
        }
    }

    /// `v(J_{2i})` for `i = 1..=5`.
    pub fn vj(&self, i: usize) -> &ExtRat {
        match i {
            1 => &self.vj2,
            2 => &self.vj4,
            3 => &self.vj6,
            4 => &self.vj8,
            5 => &self.vj10,
            _ => panic!("J index {i} out of range"),
        }
    }

    pub fn named(&self) -> [(&'static str, &ExtRat); 10] {
        [
            ("J2", &self.vj2),
            ("J4", &self.vj4),
            ("J6", &self.vj6),
            ("J8", &self.vj8),
            ("J10", &self.vj10),
            ("I2", &self.vi2),
            ("I4", &self.vi4),
            ("I6", &self.vi6),
            ("I8", &self.vi8),
            ("I12", &self.vi12),
        ]
    }
}

pub fn trop_igusa(j: &IgusaInvariants, field: &ValuedField) -> TropIgusa {
    TropIgusa {
        vj2: field.val(&j.j2),
        vj4: field.val(&j.j4),
        vj6: field.val(&j.j6),
        vj8: field.val(&j.j8),
        vj10: field.val(&j.j10),
        vi2: field.val(&j.i2),
        vi4: field.val(&j.i4),
        vi6: field.val(&j.i6),
        vi8: field.val(&j.i8),
        vi12: field.val(&j.i12),
    }
}

/// Moves a simple root `r` of the sextic `Σ cₖxᵏ` to infinity.
///
/// Substitutes `x = r + 1/X`, `y = Y/X³`, giving `Y² = X⁶·P(r + 1/X)`, a
/// quintic with leading coefficient `P′(r)`.
pub fn sextic_to_quintic(
    coeffs: &[ValuedScalar; 7],
    root: &ValuedScalar,
) -> Result<QuinticModel, IgusaError> {
    let value = coeffs
        .iter()
        .rev()
        .fold(ValuedScalar::zero(), |acc, c| &(&acc * root) + c);
    if !value.is_zero() {
        return Err(IgusaError::NotARoot);
    }
    let deriv = (1..7).rev().fold(ValuedScalar::zero(), |acc, k| {
        &(&acc * root) + &(&coeffs[k] * &ValuedScalar::int(k as i64))
    });
    if deriv.is_zero() {
        return Err(IgusaError::RootNotSimple);
    }
    // X^(6-k)·(rX + 1)^k = Σ_j C(k, j) r^j X^(j + 6 - k)
    let mut out: [ValuedScalar; 6] = std::array::from_fn(|_| ValuedScalar::zero());
    for (k, ck) in coeffs.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        for j in 0..=k {
            let power = j + 6 - k;
            if power == 6 {
                continue;
            }
            let term = ck * &(ValuedScalar::int(binomial(k, j)) * root.pow(j as u32));
            out[power] = &out[power] + &term;
        }
    }
    let out = out.map(ValuedScalar::simplify);
    QuinticModel::from_monomial(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xfive_minus_x() -> QuinticModel {
        let c = [0, -1, 0, 0, 0, 1].map(ValuedScalar::int);
        QuinticModel::from_monomial(c).unwrap()
    }

    #[test]
    fn monomial_round_trip() {
        let q = xfive_minus_x();
        let v = q.alternating();
        assert_eq!(v[0], ValuedScalar::int(1));
        assert_eq!(v[4], ValuedScalar::int(-1));
        assert_eq!(q.monomial()[1], ValuedScalar::int(-1));
    }

    #[test]
    fn invariants_of_x5_minus_x() {
        let j = igusa_from_quintic(&xfive_minus_x()).unwrap();
        assert_eq!(j.j2, ValuedScalar::int(-5));
        assert_eq!(j.j4, ValuedScalar::ratio(15, 8));
        assert_eq!(j.j6, ValuedScalar::ratio(5, 16));
        // the product over the roots {0, ±1, ±i} is -256
        assert_eq!(j.j10, ValuedScalar::ratio(-256, 4096));
        assert!(j.relation().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&xfive_minus_x()), ValuedScalar::int(-256));
        let x5 = QuinticModel::from_monomial([0, 0, 0, 0, 0, 1].map(ValuedScalar::int)).unwrap();
        assert!(discriminant(&x5).is_zero());
        assert_eq!(igusa_from_quintic(&x5), Err(IgusaError::DegenerateCurve));
        let roots = [1, 2, 3, 4, 5].map(ValuedScalar::int);
        let q = QuinticModel::from_roots(ValuedScalar::one(), &roots).unwrap();
        assert_eq!(q.eval(&ValuedScalar::int(4)), ValuedScalar::zero());
        // (1!·2!·3!·4!)²
        assert_eq!(discriminant(&q), ValuedScalar::int(82944));
    }

    #[test]
    fn term_table_matches_sylvester_resultant() {
        let samples = [
            [3, -1, 4, 1, -5, 9],
            [0, 2, 0, -7, 1, 2],
            [1, 1, 1, 1, 1, 1],
            [-2, 0, 5, 0, 0, 3],
        ];
        for c in samples {
            let c = c.map(ValuedScalar::int);
            let f: Vec<ValuedScalar> = c.iter().rev().cloned().collect();
            let df: Vec<ValuedScalar> = (1..6)
                .rev()
                .map(|k| &c[k] * &ValuedScalar::int(k as i64))
                .collect();
            let q = QuinticModel::from_monomial(c.clone()).unwrap();
            assert_eq!(discriminant(&q), resultant(&f, &df) / &c[5]);
        }
    }

    #[test]
    fn zero_leading_coefficient() {
        let c = [1, 0, 0, 0, 1, 0].map(ValuedScalar::int);
        assert_eq!(
            QuinticModel::from_monomial(c),
            Err(IgusaError::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn trop_igusa_at_seven_is_zero() {
        let k = ValuedField::padic(7).unwrap();
        let tv = trop_igusa(&igusa_from_quintic(&xfive_minus_x()).unwrap(), &k);
        assert_eq!(tv, TropIgusa::zero());
    }

    #[test]
    fn vanishing_invariant_has_infinite_valuation() {
        let mut j = igusa_from_quintic(&xfive_minus_x()).unwrap();
        j.j4 = ValuedScalar::zero();
        let tv = trop_igusa(&j, &ValuedField::padic(7).unwrap());
        assert_eq!(tv.vj4, ExtRat::Infinity);
    }

    #[test]
    fn sextic_errors() {
        // (x - 1)(x^5 - x) has a double root at 1
        let c: [ValuedScalar; 7] = [0, 1, -1, 0, 0, -1, 1].map(ValuedScalar::int);
        assert_eq!(
            sextic_to_quintic(&c, &ValuedScalar::int(1)),
            Err(IgusaError::RootNotSimple)
        );
        assert_eq!(
            sextic_to_quintic(&c, &ValuedScalar::int(5)),
            Err(IgusaError::NotARoot)
        );
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m: Vec<Vec<ValuedScalar>> = [[2, -1, 0], [3, 4, 5], [0, 7, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| ValuedScalar::int(x)).collect())
            .collect();
        // 2(4 - 35) + 1(3 - 0) + 0 = -59
        assert_eq!(determinant(m), ValuedScalar::int(-59));
        let zero_pivot: Vec<Vec<ValuedScalar>> = [[0, 1], [1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| ValuedScalar::int(x)).collect())
            .collect();
        assert_eq!(determinant(zero_pivot), ValuedScalar::int(-1));
    }
}
